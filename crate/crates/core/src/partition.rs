//! Integer partitions, hook statistics, t-cores and the two abacus encodings.
//!
//! Rows and columns are 1-indexed, so `hook_length(λ, 1, 1)` is the hook of
//! the top-left box.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Weakly decreasing positive parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part before a positive one"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i`, zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) >= j
    }

    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if !self.contains_box(i, j) {
            return Err(Error::OutOfDiagram { i, j });
        }
        let leg = self.0.iter().skip(i).take_while(|&&p| p >= j).count();
        Ok(self.part(i) - j + leg + 1)
    }

    /// `h(1,1)`, taken to be 0 for the empty partition.
    pub fn first_hook(&self) -> usize {
        self.hook_length(1, 1).unwrap_or(0)
    }

    pub fn beta_set(&self) -> BetaSet {
        let l = self.0.len();
        BetaSet(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &p)| p + l - 1 - i)
                .collect(),
        )
    }

    /// Number of removable boxes, i.e. distinct part sizes.
    pub fn corner_count(&self) -> usize {
        let mut n = 0;
        let mut prev = None;
        for &p in &self.0 {
            if prev != Some(p) {
                n += 1;
                prev = Some(p);
            }
        }
        n
    }

    /// True when some box has hook length exactly `h`. Scans every box.
    pub fn has_hook_length(&self, h: usize) -> bool {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .any(|(i, &row)| (1..=row).any(|j| row - j + conj.part(j) - (i + 1) + 1 == h))
    }

    /// Beta-set criterion: `h ∈ β, h >= t` implies `h - t ∈ β`.
    pub fn is_t_core(&self, t: usize) -> bool {
        if t == 0 {
            return false;
        }
        let beta: BTreeSet<usize> = self.beta_set().0.into_iter().collect();
        beta.iter()
            .all(|&h| h < t || (h > t && beta.contains(&(h - t))))
    }

    /// Size of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn md_set(&self) -> Result<MdSet> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate);
        }
        let d = (1..=self.durfee())
            .map(|i| self.hook_length(i, i).expect("diagonal box"))
            .collect();
        Ok(MdSet(d))
    }

    /// All partitions of `n`, parts in decreasing order, listed in reverse
    /// lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `n` boxes.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,4,2,2`, `(4,4,2,2)`, spaces, and `` / `0` / `()` for empty.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition part {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// First-column hook lengths, strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BetaSet(Vec<usize>);

impl BetaSet {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotDecreasing);
        }
        Ok(BetaSet(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i = h_i - (ℓ - i)`; zero parts are dropped.
    pub fn to_partition(&self) -> Partition {
        let l = self.0.len();
        let parts = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &h)| h - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Partition(parts)
    }
}

pub fn beta_set_to_partition(beta: &[usize]) -> Result<Partition> {
    Ok(BetaSet::new(beta.to_vec())?.to_partition())
}

/// Main-diagonal hook lengths: distinct odd positives, decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MdSet(Vec<usize>);

impl MdSet {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.iter().any(|h| h % 2 == 0) || elements.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotOddDistinct);
        }
        Ok(MdSet(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, h: usize) -> bool {
        self.0.contains(&h)
    }

    /// Nest the principal hooks: arm of the `i`-th diagonal hook is
    /// `(d_i - 1)/2`, which fixes `λ_i` for `i <= p`; the remaining parts
    /// are the matching legs read column-wise.
    pub fn to_partition(&self) -> Partition {
        let p = self.0.len();
        let mut parts: Vec<usize> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &d)| (d - 1) / 2 + i + 1)
            .collect();
        let mut i = p + 1;
        loop {
            let len = parts[..p].iter().filter(|&&lam| lam >= i).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            i += 1;
        }
        Partition(parts)
    }

    /// The Ford–Mai–Sze conditions: `h > 2t` in MD forces `h - 2t` in MD, and
    /// no two elements sum to `2t`.
    pub fn fms_core_criterion(&self, t: usize) -> bool {
        let a = self
            .0
            .iter()
            .all(|&h| h < 2 * t || self.contains(h - 2 * t));
        let b = self
            .0
            .iter()
            .all(|&h1| self.0.iter().all(|&h2| h1 + h2 != 2 * t));
        a && b
    }
}

pub fn md_set_to_partition(md: &[usize]) -> Result<Partition> {
    Ok(MdSet::new(md.to_vec())?.to_partition())
}

/// Beads of `β(λ)` on the `t`-abacus; position `(i, j)` carries label `ti + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abacus {
    pub t: usize,
    pub beads: BTreeSet<usize>,
}

impl Abacus {
    pub fn encode(lambda: &Partition, t: usize) -> Result<Abacus> {
        if t == 0 {
            return Err(Error::OutOfRange("abacus needs t >= 1".into()));
        }
        Ok(Abacus {
            t,
            beads: lambda.beta_set().0.into_iter().collect(),
        })
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.beads
            .iter()
            .filter(|&&h| h % self.t == j)
            .map(|&h| h / self.t)
            .collect()
    }

    fn gapless(&self) -> bool {
        (0..self.t).all(|j| self.column(j).iter().enumerate().all(|(row, &i)| row == i))
    }

    /// Bead counts `(n_0, …, n_{t-1})`; only defined for t-cores.
    pub fn counts(&self) -> Result<Vec<usize>> {
        if !self.gapless() || self.beads.contains(&0) {
            return Err(Error::NotTCore { t: self.t });
        }
        Ok((0..self.t).map(|j| self.column(j).len()).collect())
    }

    pub fn from_counts(t: usize, counts: &[usize]) -> Result<Abacus> {
        if t == 0 || counts.len() != t {
            return Err(Error::MalformedAbacus(format!(
                "expected {t} columns, got {}",
                counts.len()
            )));
        }
        if counts[0] != 0 {
            return Err(Error::MalformedAbacus("column 0 must be empty".into()));
        }
        let beads = counts
            .iter()
            .enumerate()
            .flat_map(|(j, &n)| (0..n).map(move |i| t * i + j))
            .collect();
        Ok(Abacus { t, beads })
    }

    pub fn decode(&self) -> Result<Partition> {
        if !self.gapless() {
            return Err(Error::MalformedAbacus(
                "a column has a spacer below a bead".into(),
            ));
        }
        if self.beads.contains(&0) {
            return Err(Error::MalformedAbacus("column 0 must be empty".into()));
        }
        let beta: Vec<usize> = self.beads.iter().rev().copied().collect();
        Ok(BetaSet(beta).to_partition())
    }
}

pub fn abacus_encode(lambda: &Partition, t: usize) -> Result<Vec<usize>> {
    if !lambda.is_t_core(t) {
        return Err(Error::NotTCore { t });
    }
    Abacus::encode(lambda, t)?.counts()
}

pub fn abacus_decode(t: usize, counts: &[usize]) -> Result<Partition> {
    Abacus::from_counts(t, counts)?.decode()
}

/// Signed bead counts of the `t`-doubled abacus, one per column
/// `0 <= j < ⌊t/2⌋`. Position `(i, j)` carries `|2(ti + j) + 1|`. A positive
/// count `n` means beads on rows `0..n`, a negative one rows `-1..=-|n|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledAbacus {
    pub t: usize,
    pub counts: Vec<i64>,
}

impl DoubledAbacus {
    /// Row and column of the position labelled `h`, if any.
    pub fn position(t: usize, h: usize) -> Option<(i64, usize)> {
        let half = t / 2;
        if h.is_multiple_of(2) || half == 0 {
            return None;
        }
        let q = (h - 1) / 2;
        if q % t < half {
            return Some(((q / t) as i64, q % t));
        }
        let q = h.div_ceil(2);
        let row = q.div_ceil(t);
        let j = row * t - q;
        (j < half).then_some((-(row as i64), j))
    }

    pub fn label(t: usize, i: i64, j: usize) -> usize {
        (2 * (t as i64 * i + j as i64) + 1).unsigned_abs() as usize
    }

    pub fn encode(lambda: &Partition, t: usize) -> Result<DoubledAbacus> {
        if t < 2 {
            return Err(Error::OutOfRange("doubled abacus needs t >= 2".into()));
        }
        if !lambda.is_self_conjugate() || !lambda.is_t_core(t) {
            return Err(Error::NotSelfConjugateTCore { t });
        }
        let md = lambda.md_set()?;
        let half = t / 2;
        let mut rows: Vec<Vec<i64>> = vec![Vec::new(); half];
        for &h in md.elements() {
            let (i, j) = Self::position(t, h).ok_or_else(|| {
                Error::InternalConsistency(format!(
                    "diagonal hook {h} has no position on the {t}-doubled abacus"
                ))
            })?;
            rows[j].push(i);
        }
        let mut counts = Vec::with_capacity(half);
        for (j, col) in rows.iter_mut().enumerate() {
            col.sort_unstable();
            let n = col.len() as i64;
            let up: Vec<i64> = (0..n).collect();
            let down: Vec<i64> = (-n..0).collect();
            if *col == up {
                counts.push(n);
            } else if *col == down {
                counts.push(-n);
            } else {
                return Err(Error::InternalConsistency(format!(
                    "column {j} of the {t}-doubled abacus has rows {col:?}"
                )));
            }
        }
        Ok(DoubledAbacus { t, counts })
    }

    pub fn md_labels(&self) -> Result<Vec<usize>> {
        if self.t < 2 || self.counts.len() != self.t / 2 {
            return Err(Error::MalformedDoubledAbacus(format!(
                "t = {} needs {} columns, got {}",
                self.t,
                self.t / 2,
                self.counts.len()
            )));
        }
        let mut labels: Vec<usize> = Vec::new();
        for (j, &n) in self.counts.iter().enumerate() {
            let rows: Vec<i64> = if n >= 0 {
                (0..n).collect()
            } else {
                (n..0).collect()
            };
            labels.extend(rows.into_iter().map(|i| Self::label(self.t, i, j)));
        }
        labels.sort_unstable_by(|a, b| b.cmp(a));
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedDoubledAbacus(
                "two beads share a label".into(),
            ));
        }
        Ok(labels)
    }

    pub fn decode(&self) -> Result<Partition> {
        let labels = self.md_labels()?;
        Ok(MdSet::new(labels)
            .map_err(|e| Error::MalformedDoubledAbacus(e.to_string()))?
            .to_partition())
    }
}

pub fn doubled_abacus_encode(lambda: &Partition, t: usize) -> Result<Vec<i64>> {
    Ok(DoubledAbacus::encode(lambda, t)?.counts)
}

pub fn doubled_abacus_decode(t: usize, counts: &[i64]) -> Result<Partition> {
    DoubledAbacus {
        t,
        counts: counts.to_vec(),
    }
    .decode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn text_form() {
        assert_eq!(p("4,4,2,2").to_string(), "4,4,2,2");
        assert_eq!(p("(4, 4, 2, 2)"), p("4,4,2,2"));
        assert!(p("").is_empty());
        assert!(p("0").is_empty());
        assert_eq!(
            "1,2".parse::<Partition>().unwrap_err().name(),
            "InvalidPartition"
        );
        assert_eq!("a".parse::<Partition>().unwrap_err().name(), "Parse");
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("4,4,2,2").conjugate(), p("4,4,2,2"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hooks() {
        assert_eq!(p("2,1").hook_length(1, 1).unwrap(), 3);
        assert_eq!(p("4,4,2,2").hook_length(1, 1).unwrap(), 7);
        assert_eq!(p("1").hook_length(1, 1).unwrap(), 1);
        assert_eq!(
            p("2,1").hook_length(2, 2),
            Err(Error::OutOfDiagram { i: 2, j: 2 })
        );
        assert_eq!(
            p("2,1").hook_length(0, 1),
            Err(Error::OutOfDiagram { i: 0, j: 1 })
        );
        assert_eq!(Partition::empty().first_hook(), 0);
    }

    #[test]
    fn beta_sets() {
        assert_eq!(p("2,1").beta_set().elements(), &[3, 1]);
        assert_eq!(p("4,4,2,2").beta_set().elements(), &[7, 6, 3, 2]);
        assert!(Partition::empty().beta_set().elements().is_empty());
        assert_eq!(beta_set_to_partition(&[3, 1]).unwrap(), p("2,1"));
        assert_eq!(beta_set_to_partition(&[7, 6, 3, 2]).unwrap(), p("4,4,2,2"));
        assert_eq!(beta_set_to_partition(&[]).unwrap(), Partition::empty());
        assert_eq!(beta_set_to_partition(&[3, 2, 0]).unwrap(), p("1,1"));
        assert_eq!(beta_set_to_partition(&[1, 3]), Err(Error::NotDecreasing));
    }

    #[test]
    fn corners() {
        assert_eq!(p("4,4,2,2").corner_count(), 2);
        assert_eq!(p("7,7,4,4,2,2,2").corner_count(), 3);
        assert_eq!(Partition::empty().corner_count(), 0);
    }

    #[test]
    fn cores() {
        assert!(p("4,4,2,2").is_t_core(4));
        assert!(p("2,1").is_t_core(4));
        assert!(!p("1,1,1,1").is_t_core(4));
        assert!(p("1,1,1,1").has_hook_length(4));
        assert!(Partition::empty().is_t_core(1));
        assert!(!p("1").is_t_core(1));
    }

    #[test]
    fn md_sets() {
        assert_eq!(p("4,4,2,2").md_set().unwrap().elements(), &[7, 5]);
        assert_eq!(p("2,1").md_set().unwrap().elements(), &[3]);
        assert_eq!(
            p("7,7,4,4,2,2,2").md_set().unwrap().elements(),
            &[13, 11, 3, 1]
        );
        assert_eq!(p("3,1").md_set(), Err(Error::NotSelfConjugate));
        assert_eq!(md_set_to_partition(&[7, 5]).unwrap(), p("4,4,2,2"));
        assert_eq!(md_set_to_partition(&[3]).unwrap(), p("2,1"));
        assert_eq!(
            md_set_to_partition(&[13, 11, 3, 1]).unwrap(),
            p("7,7,4,4,2,2,2")
        );
        assert_eq!(md_set_to_partition(&[5, 4]), Err(Error::NotOddDistinct));
        assert_eq!(md_set_to_partition(&[3, 3]), Err(Error::NotOddDistinct));
    }

    #[test]
    fn abacus_examples() {
        assert_eq!(abacus_encode(&p("4,4,2,2"), 4).unwrap(), vec![0, 0, 2, 2]);
        assert_eq!(abacus_encode(&p("2,1"), 4).unwrap(), vec![0, 1, 0, 1]);
        assert_eq!(abacus_decode(4, &[0, 2, 2, 2]).unwrap(), p("2,2,2,1,1,1"));
        assert_eq!(
            abacus_encode(&p("1,1,1,1"), 4),
            Err(Error::NotTCore { t: 4 })
        );
        assert_eq!(
            abacus_decode(4, &[1, 0, 0, 0]).unwrap_err().name(),
            "MalformedAbacus"
        );
        assert_eq!(
            abacus_decode(4, &[0, 0]).unwrap_err().name(),
            "MalformedAbacus"
        );
        let gappy = Abacus {
            t: 2,
            beads: [3].into_iter().collect(),
        };
        assert_eq!(gappy.decode().unwrap_err().name(), "MalformedAbacus");
    }

    #[test]
    fn doubled_abacus_examples() {
        assert_eq!(
            doubled_abacus_encode(&p("4,4,2,2"), 4).unwrap(),
            vec![-1, -1]
        );
        assert_eq!(
            doubled_abacus_encode(&p("7,7,4,4,2,2,2"), 5).unwrap(),
            vec![2, 2]
        );
        assert_eq!(doubled_abacus_decode(4, &[1, -1]).unwrap(), p("3,2,1"));
        assert_eq!(doubled_abacus_decode(4, &[0, -1]).unwrap(), p("3,1,1"));
        assert_eq!(doubled_abacus_decode(4, &[0, 1]).unwrap(), p("2,1"));
        assert_eq!(doubled_abacus_decode(4, &[-1, 0]).unwrap(), p("4,1,1,1"));
        assert_eq!(
            doubled_abacus_encode(&p("3,1"), 4),
            Err(Error::NotSelfConjugateTCore { t: 4 })
        );
        assert_eq!(
            doubled_abacus_decode(4, &[1]).unwrap_err().name(),
            "MalformedDoubledAbacus"
        );
        assert_eq!(DoubledAbacus::position(5, 5), None);
        assert_eq!(DoubledAbacus::position(4, 7), Some((-1, 0)));
        assert_eq!(DoubledAbacus::label(4, -1, 1), 5);
    }

    #[test]
    fn exhaustive_small_partitions() {
        for lambda in Partition::all_up_to(30) {
            assert_eq!(lambda.beta_set().to_partition(), lambda);
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            for t in 1..=8 {
                assert_eq!(
                    lambda.is_t_core(t),
                    !lambda.has_hook_length(t),
                    "{lambda} t={t}"
                );
                if lambda.is_t_core(t) {
                    let n = abacus_encode(&lambda, t).unwrap();
                    assert_eq!(n[0], 0);
                    assert_eq!(abacus_decode(t, &n).unwrap(), lambda);
                }
            }
            if lambda.is_self_conjugate() {
                let md = lambda.md_set().unwrap();
                assert_eq!(md.to_partition(), lambda);
                for t in 2..=8 {
                    assert_eq!(
                        md.fms_core_criterion(t),
                        lambda.is_t_core(t),
                        "{lambda} t={t}"
                    );
                    if lambda.is_t_core(t) {
                        let d = doubled_abacus_encode(&lambda, t).unwrap();
                        assert_eq!(doubled_abacus_decode(t, &d).unwrap(), lambda);
                    }
                }
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..12, 0..12).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_preserves_size_and_corners(l in arb_partition()) {
            let c = l.conjugate();
            prop_assert_eq!(c.size(), l.size());
            prop_assert_eq!(c.corner_count(), l.corner_count());
            prop_assert_eq!(c.conjugate(), l.clone());
            prop_assert_eq!(c.first_hook(), l.first_hook());
        }

        #[test]
        fn md_sets_give_self_conjugate_partitions(set in proptest::collection::btree_set(0usize..15, 0..6)) {
            let md: Vec<usize> = set.iter().rev().map(|x| 2 * x + 1).collect();
            let l = md_set_to_partition(&md).unwrap();
            let got = l.md_set().unwrap();
            prop_assert_eq!(got.elements(), &md[..]);
        }

        #[test]
        fn text_round_trip(l in arb_partition()) {
            prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }

        #[test]
        fn beta_criterion_matches_scan(l in arb_partition(), t in 1usize..10) {
            prop_assert_eq!(l.is_t_core(t), !l.has_hook_length(t));
        }
    }
}
