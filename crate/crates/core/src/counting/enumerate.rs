//! Brute-force enumeration of every path family, and an exact transfer-matrix
//! counter over the same constraints.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::path::{
    free_start_height, free_strip, is_member, l_k_height, Family, FamilySpec, PathWord, Step,
};

/// Local constraints shared by the enumerator and the counter.
#[derive(Debug, Clone, Copy)]
struct Constraints {
    m: usize,
    r: usize,
    start: i64,
    lo: i64,
    hi: i64,
    end: Option<i64>,
    touch: Option<i64>,
    cornerless: bool,
    forbidden_first: Option<Step>,
    last_flat: bool,
}

impl Constraints {
    fn of(spec: &FamilySpec) -> Constraints {
        let n = spec.length() as i64;
        let base = Constraints {
            m: spec.m,
            r: spec.r,
            start: 0,
            lo: 0,
            hi: n,
            end: Some(0),
            touch: None,
            cornerless: false,
            forbidden_first: None,
            last_flat: false,
        };
        let free = |c: Constraints| {
            let (lo, hi) = free_strip(spec.k);
            Constraints {
                start: free_start_height(spec.m),
                lo,
                hi,
                touch: Some(l_k_height(spec.k)),
                ..c
            }
        };
        let prefix = |c: Constraints| Constraints {
            hi: spec.k as i64,
            end: None,
            touch: Some(spec.k as i64),
            ..c
        };
        match spec.family {
            Family::FreeMotzkin => free(base),
            Family::MotzkinPrefix => prefix(base),
            Family::CornerlessFree => Constraints {
                cornerless: true,
                forbidden_first: Some(if spec.m % 2 == 1 {
                    Step::Down
                } else {
                    Step::Up
                }),
                ..free(base)
            },
            Family::CornerlessPrefix => Constraints {
                cornerless: true,
                last_flat: true,
                ..prefix(base)
            },
            Family::CornerlessMotzkin | Family::SymmetricCornerlessMotzkin => Constraints {
                cornerless: true,
                ..base
            },
        }
    }

    /// Whether appending `s` after `prev` at height `h` (with `nf`, `fl`
    /// steps used) can still lead to a word satisfying the constraints.
    fn allows(
        &self,
        prev: Option<Step>,
        h: i64,
        nf: usize,
        fl: usize,
        touched: bool,
        s: Step,
    ) -> Option<(i64, usize, usize, bool)> {
        let h2 = h + s.displacement();
        let (nf2, fl2) = if s.is_flat() {
            (nf, fl + 1)
        } else {
            (nf + 1, fl)
        };
        if nf2 > self.m || fl2 > self.r || h2 < self.lo || h2 > self.hi {
            return None;
        }
        match prev {
            None if self.forbidden_first == Some(s) => return None,
            Some(p) if self.cornerless && !p.is_flat() && !s.is_flat() && p != s => return None,
            _ => {}
        }
        let rest = (self.m - nf2) as i64;
        let touched2 = touched || self.touch == Some(h2);
        if let Some(e) = self.end {
            if (h2 - e).abs() > rest || (h2 - e - rest) % 2 != 0 {
                return None;
            }
        }
        if let (false, Some(line)) = (touched2, self.touch) {
            let detour = (h2 - line).abs() + self.end.map_or(0, |e| (line - e).abs());
            if detour > rest {
                return None;
            }
        }
        Some((h2, nf2, fl2, touched2))
    }

    fn accepts_end(&self, h: i64, last: Option<Step>, touched: bool) -> bool {
        self.end.is_none_or(|e| e == h)
            && touched
            && (!self.last_flat || last.is_none_or(Step::is_flat))
    }

    fn initially_touched(&self) -> bool {
        self.touch.is_none_or(|line| line == self.start)
    }
}

/// Lazy depth-first enumeration in lexicographic order (`d < f < u`).
/// Partial words are pruned on local feasibility and every complete word is
/// re-checked against [`is_member`].
pub struct Enumerate {
    spec: FamilySpec,
    c: Constraints,
    word: Vec<Step>,
    state: Vec<(i64, usize, usize, bool)>,
    next_choice: Vec<usize>,
    done: bool,
}

pub fn enumerate(spec: FamilySpec) -> Enumerate {
    let c = Constraints::of(&spec);
    Enumerate {
        spec,
        c,
        word: Vec::new(),
        state: vec![(c.start, 0, 0, c.initially_touched())],
        next_choice: Vec::new(),
        done: false,
    }
}

impl Iterator for Enumerate {
    type Item = PathWord;

    fn next(&mut self) -> Option<PathWord> {
        let n = self.spec.length();
        while !self.done {
            let d = self.word.len();
            if d == n {
                let candidate = PathWord::new(self.word.clone());
                if n == 0 {
                    self.done = true;
                } else {
                    self.word.pop();
                    self.state.pop();
                }
                if is_member(&candidate, &self.spec) {
                    return Some(candidate);
                }
                continue;
            }
            if self.next_choice.len() <= d {
                self.next_choice.push(0);
            }
            if self.next_choice[d] == Step::ALL.len() {
                self.next_choice.pop();
                if d == 0 {
                    self.done = true;
                } else {
                    self.word.pop();
                    self.state.pop();
                }
                continue;
            }
            let s = Step::ALL[self.next_choice[d]];
            self.next_choice[d] += 1;
            let (h, nf, fl, touched) = self.state[d];
            if let Some(next) = self
                .c
                .allows(self.word.last().copied(), h, nf, fl, touched, s)
            {
                self.word.push(s);
                self.state.push(next);
            }
        }
        None
    }
}

type DpState = (i64, usize, Option<Step>, bool);

fn count_constrained(c: &Constraints) -> BigUint {
    let mut layer: HashMap<DpState, BigUint> = HashMap::new();
    if c.start < c.lo || c.start > c.hi {
        return BigUint::zero();
    }
    layer.insert((c.start, 0, None, c.initially_touched()), BigUint::one());
    for pos in 0..c.m + c.r {
        let mut next: HashMap<DpState, BigUint> = HashMap::new();
        for ((h, nf, last, touched), ways) in &layer {
            for s in Step::ALL {
                if let Some((h2, nf2, _, t2)) = c.allows(*last, *h, *nf, pos - nf, *touched, s) {
                    *next.entry((h2, nf2, Some(s), t2)).or_default() += ways;
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|((h, nf, last, touched), _)| *nf == c.m && c.accepts_end(*h, *last, *touched))
        .map(|(_, ways)| ways)
        .sum()
}

/// Exact size of the family, without enumerating it.
pub fn count(spec: &FamilySpec) -> BigUint {
    if spec.family != Family::SymmetricCornerlessMotzkin {
        return count_constrained(&Constraints::of(spec));
    }
    // A symmetric word is its first half followed by the reverse-complement;
    // odd lengths share a flat centre, even lengths need a flat last step in
    // the half to avoid a corner at the seam.
    if spec.m % 2 == 1 {
        return BigUint::zero();
    }
    let len = spec.length();
    let half = Constraints {
        m: spec.m / 2,
        r: spec.r / 2,
        start: 0,
        lo: 0,
        hi: len as i64,
        end: None,
        touch: None,
        cornerless: true,
        forbidden_first: None,
        last_flat: len.is_multiple_of(2),
    };
    count_constrained(&half)
}

/// `Σ_{i <= k}` of the family sizes, i.e. the count inside the whole strip.
pub fn count_up_to(family: Family, m: usize, r: usize, k: usize) -> BigUint {
    (0..=k)
        .map(|i| count(&FamilySpec::new(family, m, r, i)))
        .sum()
}
