//! The recursive bijection `phi` from free Motzkin words in the `k`-strip
//! touching `L_k` to Motzkin prefixes touching `y = k`, and its inverse `psi`.
//!
//! Neither map takes `k` as an argument. Both recompute it from the word
//! ([`width_index_free`] / [`width_index_prefix`]), and every sub-word handed
//! to a recursive call is read as a fresh word: free sub-words start at the
//! parity of their own non-flat count, prefix sub-words start at 0.
//!
//! Notation for the decompositions, with `s` the special step (first step
//! ending on `L_k`):
//!
//! ```text
//! P = A f^α s f^β B f^γ          B = B1 f^δ b B2 (when a break step b exists)
//!                                A = A1 a A2     (when m and k differ in parity)
//! S = f^γ B* f^α u* A* f^β [d* C̄*]
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{
    free_start_height, l_k_height, width_index_free, width_index_prefix, PathWord, RunDirection,
    Step,
};

/// Which branch of `phi` handles a word at the top level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PhiCase {
    /// `k <= 1`: reverse-complement.
    Case0,
    /// `m ≡ k (mod 2)`, no break step.
    Case1NoBreak,
    /// `m ≡ k (mod 2)`, break step present.
    Case1Break,
    /// `m ≢ k (mod 2)`, no break step.
    Case2NoBreak,
    /// `m ≢ k (mod 2)`, break step present.
    Case2Break,
}

impl PhiCase {
    pub const ALL: [PhiCase; 5] = [
        PhiCase::Case0,
        PhiCase::Case1NoBreak,
        PhiCase::Case1Break,
        PhiCase::Case2NoBreak,
        PhiCase::Case2Break,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PhiCase::Case0 => "case0",
            PhiCase::Case1NoBreak => "case1-i",
            PhiCase::Case1Break => "case1-ii",
            PhiCase::Case2NoBreak => "case2-i",
            PhiCase::Case2Break => "case2-ii",
        }
    }

    pub fn from_label(label: &str) -> Option<PhiCase> {
        PhiCase::ALL.into_iter().find(|c| c.label() == label)
    }
}

/// `B = B1 f^δ b B2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakSplit {
    pub b1: PathWord,
    pub delta: usize,
    /// Index of the break step in the whole word.
    pub index: usize,
    pub step: Step,
    pub b2: PathWord,
}

/// `A = A1 a A2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASplit {
    pub a1: PathWord,
    /// Index of the step `a` in the whole word.
    pub index: usize,
    pub step: Step,
    pub a2: PathWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiDecomposition {
    pub m: usize,
    pub k: usize,
    pub a: PathWord,
    pub alpha: usize,
    pub special_index: usize,
    pub special: Step,
    pub beta: usize,
    pub b: PathWord,
    pub gamma: usize,
    pub break_part: Option<BreakSplit>,
    pub a_split: Option<ASplit>,
}

impl PhiDecomposition {
    pub fn case(&self) -> PhiCase {
        match (self.m % 2 == self.k % 2, self.break_part.is_some()) {
            (true, false) => PhiCase::Case1NoBreak,
            (true, true) => PhiCase::Case1Break,
            (false, false) => PhiCase::Case2NoBreak,
            (false, true) => PhiCase::Case2Break,
        }
    }

    /// `A f^α s f^β B f^γ`, expanding the optional splits when present.
    pub fn reassemble(&self) -> PathWord {
        let mut w = Builder::default();
        match &self.a_split {
            Some(split) => {
                w.word(&split.a1).step(split.step).word(&split.a2);
            }
            None => {
                w.word(&self.a);
            }
        }
        w.flats(self.alpha).step(self.special).flats(self.beta);
        match &self.break_part {
            Some(split) => {
                w.word(&split.b1)
                    .flats(split.delta)
                    .step(split.step)
                    .word(&split.b2);
            }
            None => {
                w.word(&self.b);
            }
        }
        w.flats(self.gamma);
        w.finish()
    }
}

/// `S = f^γ B* f^α u* A* f^β [d* C̄*]`, plus the split of `psi(C*)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiDecomposition {
    pub m: usize,
    pub k: usize,
    pub gamma: usize,
    pub b_star: PathWord,
    pub alpha: usize,
    pub u_star_index: usize,
    pub a_star: PathWord,
    pub beta: usize,
    pub tail: Option<PsiTail>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTail {
    pub d_star_index: usize,
    /// The suffix after `d*`, complemented; a Motzkin prefix from height 0.
    pub c_star: PathWord,
    pub inner: InnerSplit,
}

/// `psi(C*)` cut as `A• [u• B•] f^δ` (odd `m'`: `A•` and `u•` absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerSplit {
    pub a_bullet: PathWord,
    pub u_bullet_index: Option<usize>,
    pub b_bullet: PathWord,
    pub delta: usize,
}

impl PsiDecomposition {
    pub fn reassemble(&self) -> PathWord {
        let mut w = Builder::default();
        w.flats(self.gamma)
            .word(&self.b_star)
            .flats(self.alpha)
            .step(Step::Up)
            .word(&self.a_star)
            .flats(self.beta);
        if let Some(tail) = &self.tail {
            w.step(Step::Down).complement_of(&tail.c_star);
        }
        w.finish()
    }
}

/// Run count together with the direction of the last run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RunClass {
    pub i: usize,
    pub end_direction: Option<RunDirection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    FreeSide,
    PrefixSide,
}

#[derive(Default)]
struct Builder(Vec<Step>);

impl Builder {
    fn flats(&mut self, n: usize) -> &mut Self {
        self.0.extend(std::iter::repeat_n(Step::Flat, n));
        self
    }

    fn step(&mut self, s: Step) -> &mut Self {
        self.0.push(s);
        self
    }

    fn slice(&mut self, s: &[Step]) -> &mut Self {
        self.0.extend_from_slice(s);
        self
    }

    fn word(&mut self, w: &PathWord) -> &mut Self {
        self.slice(w.steps())
    }

    fn complement_slice(&mut self, s: &[Step]) -> &mut Self {
        self.0.extend(s.iter().map(|x| x.complement()));
        self
    }

    fn complement_of(&mut self, w: &PathWord) -> &mut Self {
        self.complement_slice(w.steps())
    }

    fn finish(&mut self) -> PathWord {
        PathWord::new(std::mem::take(&mut self.0))
    }
}

fn trailing_flats(steps: &[Step]) -> usize {
    steps.iter().rev().take_while(|s| s.is_flat()).count()
}

fn leading_flats(steps: &[Step]) -> usize {
    steps.iter().take_while(|s| s.is_flat()).count()
}

/// Walk left from `end` over flat steps, stopping at `floor`.
fn flats_before(steps: &[Step], end: usize, floor: usize) -> usize {
    let mut i = end;
    while i > floor && steps[i - 1].is_flat() {
        i -= 1;
    }
    end - i
}

fn derived_k(p: &PathWord) -> Result<(usize, usize, Vec<i64>)> {
    let k = width_index_free(p)?;
    let m = p.nonflat_count();
    Ok((m, k, p.heights(free_start_height(m))))
}

/// Index of the first step ending on `L_k`.
pub fn special_step_index(p: &PathWord, k: usize) -> Result<usize> {
    if k <= 1 {
        return Err(Error::Precondition(format!(
            "special step needs k > 1, got k = {k}"
        )));
    }
    let line = l_k_height(k);
    let heights = p.heights(free_start_height(p.nonflat_count()));
    (0..p.len())
        .find(|&i| heights[i + 1] == line)
        .ok_or(Error::NoSpecialStep { line })
}

/// Largest vertex index at height `line`.
pub fn turning_point_index(p: &PathWord, start_height: i64, line: i64) -> Result<usize> {
    p.heights(start_height)
        .iter()
        .rposition(|&h| h == line)
        .ok_or(Error::LineNotTouched { line })
}

/// First step after the turning point that leaves the x-axis away from `L_k`.
pub fn break_step_index(p: &PathWord, k: usize) -> Option<usize> {
    if p.is_empty() {
        return None;
    }
    let start = free_start_height(p.nonflat_count());
    let line = l_k_height(k);
    let turning = turning_point_index(p, start, line).ok()?;
    let away = if k % 2 == 1 { Step::Down } else { Step::Up };
    let heights = p.heights(start);
    (turning..p.len()).find(|&j| heights[j] == 0 && p.steps()[j] == away)
}

/// Rightmost x-axis vertex at or before the turning point on `y = k`.
pub fn critical_point_index(s: &PathWord, k: usize) -> usize {
    let heights = s.heights(0);
    let bound = heights
        .iter()
        .rposition(|&h| h == k as i64)
        .unwrap_or(s.len());
    (0..=bound).rev().find(|&i| heights[i] == 0).unwrap_or(0)
}

/// Decompose a free Motzkin word with `k > 1` along its special step.
pub fn phi_decomposition(p: &PathWord) -> Result<PhiDecomposition> {
    let (m, k, heights) = derived_k(p)?;
    let steps = p.steps();
    let n = steps.len();
    let special_index = special_step_index(p, k)?;

    let gamma = trailing_flats(steps);
    let alpha = flats_before(steps, special_index, 0);
    let a_end = special_index - alpha;
    let b_start = special_index + 1 + leading_flats(&steps[special_index + 1..n - gamma]);
    let beta = b_start - special_index - 1;
    let b_end = n - gamma;
    if b_start >= b_end {
        return Err(Error::InternalConsistency(format!(
            "{p}: empty B after the special step"
        )));
    }

    let break_part = match break_step_index(p, k) {
        Some(j) if j >= b_start && j < b_end => {
            let delta = flats_before(steps, j, b_start);
            Some(BreakSplit {
                b1: steps[b_start..j - delta].to_vec().into(),
                delta,
                index: j,
                step: steps[j],
                b2: steps[j + 1..b_end].to_vec().into(),
            })
        }
        Some(j) => {
            return Err(Error::InternalConsistency(format!(
                "{p}: break step {j} outside B"
            )));
        }
        None => None,
    };

    let a_split = if m % 2 != k % 2 {
        let (wanted, from) = if k % 2 == 1 {
            (Step::Up, 0)
        } else {
            (Step::Down, 1)
        };
        let i = (0..a_end)
            .find(|&i| steps[i] == wanted && heights[i] == from)
            .ok_or_else(|| Error::InternalConsistency(format!("{p}: no step a inside A")))?;
        Some(ASplit {
            a1: steps[..i].to_vec().into(),
            index: i,
            step: steps[i],
            a2: steps[i + 1..a_end].to_vec().into(),
        })
    } else {
        None
    };

    Ok(PhiDecomposition {
        m,
        k,
        a: steps[..a_end].to_vec().into(),
        alpha,
        special_index,
        special: steps[special_index],
        beta,
        b: steps[b_start..b_end].to_vec().into(),
        gamma,
        break_part,
        a_split,
    })
}

/// Top-level branch `phi` takes for `p`.
pub fn phi_case(p: &PathWord) -> Result<PhiCase> {
    let k = width_index_free(p)?;
    if k <= 1 {
        return Ok(PhiCase::Case0);
    }
    Ok(phi_decomposition(p)?.case())
}

pub fn phi(p: &PathWord) -> Result<PathWord> {
    phi_inner(p, None)
}

/// `phi` with one case's assembly deliberately corrupted, at every level of
/// the recursion. Exists so the verification suites can prove they notice.
pub fn phi_with_mutation(p: &PathWord, mutated: PhiCase) -> Result<PathWord> {
    phi_inner(p, Some(mutated))
}

fn phi_inner(p: &PathWord, mutated: Option<PhiCase>) -> Result<PathWord> {
    let k = width_index_free(p)?;
    if k <= 1 {
        return Ok(if mutated == Some(PhiCase::Case0) {
            p.clone()
        } else {
            p.reverse_complement()
        });
    }
    let d = phi_decomposition(p)?;
    let case = d.case();
    let odd = (k % 2 == 1) != (mutated == Some(case));
    let mut q = Builder::default();
    let recurse_on: Option<PathWord> = match case {
        PhiCase::Case0 => unreachable!("k > 1"),
        PhiCase::Case1NoBreak => {
            // Q = f^γ B̄ f^α s A f^β
            q.flats(d.gamma)
                .complement_of(&d.b)
                .flats(d.alpha)
                .step(d.special)
                .word(&d.a)
                .flats(d.beta);
            None
        }
        PhiCase::Case1Break => {
            // Q = f^γ B̄1 f^α s A f^β b,  C = phi(B̄2 f^δ) / phi(B2 f^δ)
            let br = d.break_part.as_ref().expect("case 1-ii has a break step");
            q.flats(d.gamma)
                .complement_of(&br.b1)
                .flats(d.alpha)
                .step(d.special)
                .word(&d.a)
                .flats(d.beta)
                .step(br.step);
            let mut sub = Builder::default();
            if k % 2 == 1 {
                sub.complement_of(&br.b2);
            } else {
                sub.word(&br.b2);
            }
            Some(sub.flats(br.delta).finish())
        }
        PhiCase::Case2NoBreak => {
            // Q = f^γ B̄ f^α s A2 f^β ā,  C = phi(A1) / phi(Ā1)
            let sp = d.a_split.as_ref().expect("case 2 splits A");
            q.flats(d.gamma)
                .complement_of(&d.b)
                .flats(d.alpha)
                .step(d.special)
                .word(&sp.a2)
                .flats(d.beta)
                .step(sp.step.complement());
            Some(if k % 2 == 1 {
                sp.a1.clone()
            } else {
                sp.a1.complement()
            })
        }
        PhiCase::Case2Break => {
            // Q = f^γ B̄1 f^α s A2 f^β ā,  C = phi(A1 b̄ B̄2 f^δ) / phi(Ā1 b B2 f^δ)
            let sp = d.a_split.as_ref().expect("case 2 splits A");
            let br = d.break_part.as_ref().expect("case 2-ii has a break step");
            q.flats(d.gamma)
                .complement_of(&br.b1)
                .flats(d.alpha)
                .step(d.special)
                .word(&sp.a2)
                .flats(d.beta)
                .step(sp.step.complement());
            let mut sub = Builder::default();
            if k % 2 == 1 {
                sub.word(&sp.a1)
                    .step(br.step.complement())
                    .complement_of(&br.b2);
            } else {
                sub.complement_of(&sp.a1).step(br.step).word(&br.b2);
            }
            Some(sub.flats(br.delta).finish())
        }
    };

    let q = q.finish();
    let mut out = Builder::default();
    if odd {
        out.word(&q);
    } else {
        out.complement_of(&q);
    }
    if let Some(sub) = recurse_on {
        let m_sub = sub.nonflat_count();
        let want_odd = case == PhiCase::Case1Break;
        if (m_sub % 2 == 1) != want_odd {
            return Err(Error::InternalConsistency(format!(
                "{p}: recursive argument {sub} has m' = {m_sub}, expected {} parity",
                if want_odd { "odd" } else { "even" }
            )));
        }
        let c = phi_inner(&sub, mutated)?;
        out.complement_of(&c);
    }
    Ok(out.finish())
}

/// Decompose a Motzkin prefix with `k > 1` around `u*` and, when it does not
/// end on `y = k`, the last down step `d*` from `y = k`.
pub fn psi_decomposition(s: &PathWord) -> Result<PsiDecomposition> {
    let k = width_index_prefix(s)?;
    if k <= 1 {
        return Err(Error::Precondition(format!(
            "psi decomposition needs k > 1, got k = {k}"
        )));
    }
    let steps = s.steps();
    let n = steps.len();
    let heights = s.heights(0);
    let top = k as i64;

    let critical = critical_point_index(s, k);
    let gamma = leading_flats(steps);
    let mid = (top + 1) / 2;
    let u_star_index = (critical..n)
        .find(|&j| steps[j] == Step::Up && heights[j] == mid)
        .ok_or_else(|| {
            Error::InternalConsistency(format!("{s}: no u* after the critical point"))
        })?;
    let alpha = flats_before(steps, u_star_index, gamma);
    let b_star: PathWord = steps[gamma..u_star_index - alpha].to_vec().into();

    let ends_on_top = heights[n] == top;
    let end = if ends_on_top {
        n
    } else {
        (0..n)
            .rev()
            .find(|&j| steps[j] == Step::Down && heights[j] == top)
            .ok_or_else(|| Error::InternalConsistency(format!("{s}: no d* from y = {k}")))?
    };
    if end <= u_star_index {
        return Err(Error::InternalConsistency(format!("{s}: d* precedes u*")));
    }
    let beta = flats_before(steps, end, u_star_index + 1);
    let a_star: PathWord = steps[u_star_index + 1..end - beta].to_vec().into();

    let tail = if ends_on_top {
        None
    } else {
        let c_star = PathWord::new(steps[end + 1..].iter().map(|x| x.complement()).collect());
        let image = psi(&c_star)?;
        let inner = split_inner(&image);
        Some(PsiTail {
            d_star_index: end,
            c_star,
            inner,
        })
    };

    Ok(PsiDecomposition {
        m: s.nonflat_count(),
        k,
        gamma,
        b_star,
        alpha,
        u_star_index,
        a_star,
        beta,
        tail,
    })
}

/// Cut `psi(C*)` at its first up step from the x-axis, if it rises above it.
fn split_inner(image: &PathWord) -> InnerSplit {
    let steps = image.steps();
    let delta = trailing_flats(steps);
    let m = image.nonflat_count();
    let heights = image.heights(free_start_height(m));
    let rises = m.is_multiple_of(2) && heights.iter().any(|&h| h > 0);
    if m % 2 == 1 {
        // II-i: psi(C*) = B• f^δ
        return InnerSplit {
            a_bullet: PathWord::empty(),
            u_bullet_index: None,
            b_bullet: steps[..steps.len() - delta].to_vec().into(),
            delta,
        };
    }
    if !rises {
        return InnerSplit {
            a_bullet: image.clone(),
            u_bullet_index: None,
            b_bullet: PathWord::empty(),
            delta: 0,
        };
    }
    let j = (0..steps.len())
        .find(|&j| steps[j] == Step::Up && heights[j] == 0)
        .expect("a word that rises above 0 from 0 has an up step from 0");
    InnerSplit {
        a_bullet: steps[..j].to_vec().into(),
        u_bullet_index: Some(j),
        b_bullet: steps[j + 1..steps.len() - delta].to_vec().into(),
        delta,
    }
}

pub fn psi(s: &PathWord) -> Result<PathWord> {
    let k = width_index_prefix(s)?;
    if k <= 1 {
        return Ok(s.reverse_complement());
    }
    let d = psi_decomposition(s)?;
    let same_parity = d.m % 2 == k % 2;

    // Build the odd-k image; the even-k image is its complement.
    let mut w = Builder::default();
    match &d.tail {
        None => {
            if !same_parity {
                return Err(Error::InternalConsistency(format!(
                    "{s}: ends on y = k but m, k differ in parity"
                )));
            }
            // A* f^α u* f^β B̄* f^γ
            w.word(&d.a_star)
                .flats(d.alpha)
                .step(Step::Up)
                .flats(d.beta)
                .complement_of(&d.b_star)
                .flats(d.gamma);
        }
        Some(tail) => {
            let inner = &tail.inner;
            let m_sub = tail.c_star.nonflat_count();
            if (m_sub % 2 == 1) != same_parity {
                return Err(Error::InternalConsistency(format!(
                    "{s}: C* = {} has m' = {m_sub} of unexpected parity",
                    tail.c_star
                )));
            }
            if same_parity {
                // A* f^α u* f^β B̄* f^δ d* B̄• f^γ
                w.word(&d.a_star)
                    .flats(d.alpha)
                    .step(Step::Up)
                    .flats(d.beta)
                    .complement_of(&d.b_star)
                    .flats(inner.delta)
                    .step(Step::Down)
                    .complement_of(&inner.b_bullet)
                    .flats(d.gamma);
            } else {
                // A• d̄* A* f^α u* f^β B̄* [f^δ ū• B̄•] f^γ
                w.word(&inner.a_bullet)
                    .step(Step::Up)
                    .word(&d.a_star)
                    .flats(d.alpha)
                    .step(Step::Up)
                    .flats(d.beta)
                    .complement_of(&d.b_star);
                if inner.u_bullet_index.is_some() {
                    w.flats(inner.delta)
                        .step(Step::Down)
                        .complement_of(&inner.b_bullet);
                }
                w.flats(d.gamma);
            }
        }
    }
    let odd_image = w.finish();
    Ok(if k % 2 == 1 {
        odd_image
    } else {
        odd_image.complement()
    })
}

/// `run(phi(P)) - run(P)`, defined for `m >= 1`, `k >= 1`.
pub fn run_delta(p: &PathWord) -> Result<i64> {
    check_run_domain(p)?;
    let image = phi(p)?;
    Ok(image.run_count() as i64 - p.run_count() as i64)
}

/// The run difference predicted from the direction of the first run and the
/// parity of `m`.
pub fn expected_run_delta(p: &PathWord) -> Result<i64> {
    check_run_domain(p)?;
    let m_odd = p.nonflat_count() % 2 == 1;
    Ok(match p.runs().first() {
        Some(RunDirection::Upward) => -(m_odd as i64),
        Some(RunDirection::Downward) => -(!m_odd as i64),
        None => unreachable!("m >= 1"),
    })
}

fn check_run_domain(p: &PathWord) -> Result<()> {
    let k = width_index_free(p)?;
    if p.nonflat_count() == 0 || k == 0 {
        return Err(Error::Precondition(
            "run difference needs m >= 1 and k >= 1".into(),
        ));
    }
    Ok(())
}

/// Refined run class of a word. On the prefix side `i` is the run count. On
/// the free side `ceil(i/2)` counts the downward (odd `m`) or upward (even
/// `m`) runs, and the parity of `i` agrees with `m` exactly when the last run
/// is downward.
pub fn run_class(p: &PathWord, side: Side) -> RunClass {
    let runs = p.runs();
    let end_direction = runs.last().copied();
    let i = match side {
        Side::PrefixSide => runs.len(),
        Side::FreeSide => {
            let m = p.nonflat_count();
            let counted = if m % 2 == 1 {
                RunDirection::Downward
            } else {
                RunDirection::Upward
            };
            let d = runs.iter().filter(|&&r| r == counted).count();
            match end_direction {
                None => 0,
                Some(_) if d == 0 => 0,
                Some(dir) => {
                    let want_same = dir == RunDirection::Downward;
                    let candidate = 2 * d;
                    if (candidate % 2 == m % 2) == want_same {
                        candidate
                    } else {
                        candidate - 1
                    }
                }
            }
        }
    };
    RunClass { i, end_direction }
}
