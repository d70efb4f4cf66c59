//! Step words over `{u, d, f}`, their geometry, and the path families they
//! can belong to.
//!
//! Words carry no start height. Whoever evaluates a word supplies one; for
//! free Motzkin words it is always the parity of the non-flat count, see
//! [`free_start_height`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One lattice step. The derived order `Down < Flat < Up` matches the
/// character order `d < f < u` of the text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Flat,
    Up,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::Down, Step::Flat, Step::Up];

    pub fn displacement(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat => 0,
        }
    }

    pub fn complement(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
            Step::Flat => Step::Flat,
        }
    }

    pub fn is_flat(self) -> bool {
        self == Step::Flat
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
            Step::Flat => 'f',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'u' => Some(Step::Up),
            'd' => Some(Step::Down),
            'f' => Some(Step::Flat),
            _ => None,
        }
    }
}

/// Direction of a run of non-flat steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RunDirection {
    Upward,
    Downward,
}

impl RunDirection {
    fn of(step: Step) -> Option<RunDirection> {
        match step {
            Step::Up => Some(RunDirection::Upward),
            Step::Down => Some(RunDirection::Downward),
            Step::Flat => None,
        }
    }
}

/// A finite word over `{u, d, f}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord(Vec<Step>);

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord(steps)
    }

    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    pub fn flats(n: usize) -> Self {
        PathWord(vec![Step::Flat; n])
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nonflat_count(&self) -> usize {
        self.0.iter().filter(|s| !s.is_flat()).count()
    }

    pub fn flat_count(&self) -> usize {
        self.0.iter().filter(|s| s.is_flat()).count()
    }

    pub fn first(&self) -> Option<Step> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Step> {
        self.0.last().copied()
    }

    /// Swap every up and down step.
    pub fn complement(&self) -> PathWord {
        PathWord(self.0.iter().map(|s| s.complement()).collect())
    }

    /// Reverse the word and complement every step.
    pub fn reverse_complement(&self) -> PathWord {
        PathWord(self.0.iter().rev().map(|s| s.complement()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n).all(|i| self.0[i] == self.0[n - 1 - i].complement())
    }

    /// Vertex heights `h_0 = start, h_1, ..., h_n`.
    pub fn heights(&self, start: i64) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut h = start;
        out.push(h);
        for s in &self.0 {
            h += s.displacement();
            out.push(h);
        }
        out
    }

    pub fn end_height(&self, start: i64) -> i64 {
        start + self.0.iter().map(|s| s.displacement()).sum::<i64>()
    }

    /// Directions of the runs, left to right. Flat steps never split a run.
    pub fn runs(&self) -> Vec<RunDirection> {
        let mut runs: Vec<RunDirection> = Vec::new();
        for dir in self.0.iter().filter_map(|&s| RunDirection::of(s)) {
            if runs.last() != Some(&dir) {
                runs.push(dir);
            }
        }
        runs
    }

    pub fn run_count(&self) -> usize {
        self.runs().len()
    }

    /// Peaks plus valleys: interior vertices between an up and a down step.
    pub fn corner_count(&self) -> usize {
        self.0
            .windows(2)
            .filter(|w| {
                matches!(
                    (w[0], w[1]),
                    (Step::Up, Step::Down) | (Step::Down, Step::Up)
                )
            })
            .count()
    }

    pub fn is_cornerless(&self) -> bool {
        self.corner_count() == 0
    }
}

impl From<Vec<Step>> for PathWord {
    fn from(steps: Vec<Step>) -> Self {
        PathWord(steps)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

impl Serialize for PathWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PathWord {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_path(&s).map_err(serde::de::Error::custom)
    }
}

/// Parse the canonical text form. Positions in errors count characters.
pub fn parse_path(text: &str) -> Result<PathWord> {
    text.chars()
        .enumerate()
        .map(|(position, c)| {
            Step::from_char(c).ok_or(Error::InvalidCharacter { position, found: c })
        })
        .collect::<Result<Vec<_>>>()
        .map(PathWord)
}

pub fn complement(p: &PathWord) -> PathWord {
    p.complement()
}

pub fn reverse_complement(p: &PathWord) -> PathWord {
    p.reverse_complement()
}

/// Start height of a free Motzkin word with `m` non-flat steps.
pub fn free_start_height(m: usize) -> i64 {
    (m % 2) as i64
}

/// Height of the boundary line `L_k`: `(k+1)/2` for odd `k`, `-k/2` for even `k`.
pub fn l_k_height(k: usize) -> i64 {
    let k = k as i64;
    if k % 2 == 1 {
        (k + 1) / 2
    } else {
        -(k / 2)
    }
}

/// Lower and upper bound of the strip that contains `F(m, r, k)`.
pub fn free_strip(k: usize) -> (i64, i64) {
    let k = k as i64;
    (-(k / 2), (k + 1) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    pub start_height: i64,
    pub heights: Vec<i64>,
    pub max_height: i64,
    pub min_height: i64,
    pub nonflat: usize,
    pub flat: usize,
    pub run_count: usize,
    pub upward_runs: usize,
    pub downward_runs: usize,
    pub first_run_direction: Option<RunDirection>,
    pub last_run_direction: Option<RunDirection>,
    pub corner_count: usize,
}

pub fn profile(p: &PathWord, start_height: i64) -> PathProfile {
    let heights = p.heights(start_height);
    let runs = p.runs();
    PathProfile {
        start_height,
        max_height: *heights.iter().max().expect("heights is never empty"),
        min_height: *heights.iter().min().expect("heights is never empty"),
        heights,
        nonflat: p.nonflat_count(),
        flat: p.flat_count(),
        run_count: runs.len(),
        upward_runs: runs.iter().filter(|&&d| d == RunDirection::Upward).count(),
        downward_runs: runs
            .iter()
            .filter(|&&d| d == RunDirection::Downward)
            .count(),
        first_run_direction: runs.first().copied(),
        last_run_direction: runs.last().copied(),
        corner_count: p.corner_count(),
    }
}

/// Profile of a word read as a free Motzkin word (start height `m mod 2`).
pub fn free_profile(p: &PathWord) -> PathProfile {
    profile(p, free_start_height(p.nonflat_count()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Free Motzkin paths touching `L_k` inside the `k`-strip.
    FreeMotzkin,
    /// Motzkin prefixes touching `y = k` inside `0 <= y <= k`.
    MotzkinPrefix,
    /// Cornerless members of `FreeMotzkin` with the start-step restriction.
    CornerlessFree,
    /// Cornerless members of `MotzkinPrefix` ending with a flat step.
    CornerlessPrefix,
    /// Cornerless Motzkin paths; `k` is ignored.
    CornerlessMotzkin,
    /// Cornerless Motzkin paths fixed by reverse-complement; `k` is ignored.
    SymmetricCornerlessMotzkin,
}

impl Family {
    pub fn is_bounded(self) -> bool {
        !matches!(
            self,
            Family::CornerlessMotzkin | Family::SymmetricCornerlessMotzkin
        )
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Family::FreeMotzkin => "fbar",
            Family::MotzkinPrefix => "mbar",
            Family::CornerlessFree => "fbar-c",
            Family::CornerlessPrefix => "mbar-c",
            Family::CornerlessMotzkin => "cornerless",
            Family::SymmetricCornerlessMotzkin => "symmetric",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "fbar" | "free" => Family::FreeMotzkin,
            "mbar" | "prefix" => Family::MotzkinPrefix,
            "fbar-c" | "fbarc" | "free-cornerless" => Family::CornerlessFree,
            "mbar-c" | "mbarc" | "prefix-cornerless" => Family::CornerlessPrefix,
            "cornerless" => Family::CornerlessMotzkin,
            "symmetric" => Family::SymmetricCornerlessMotzkin,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

/// A family together with its `(m, r, k)` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub m: usize,
    pub r: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, m: usize, r: usize, k: usize) -> Self {
        FamilySpec { family, m, r, k }
    }

    /// Unbounded cornerless families keyed by total length and flat count.
    pub fn by_length(family: Family, length: usize, flats: usize) -> Option<Self> {
        (flats <= length).then(|| FamilySpec::new(family, length - flats, flats, 0))
    }

    pub fn length(&self) -> usize {
        self.m + self.r
    }
}

pub fn is_member(p: &PathWord, spec: &FamilySpec) -> bool {
    if p.nonflat_count() != spec.m || p.flat_count() != spec.r {
        return false;
    }
    match spec.family {
        Family::FreeMotzkin => in_free_family(p, spec.k),
        Family::MotzkinPrefix => in_prefix_family(p, spec.k),
        Family::CornerlessFree => {
            let forbidden = if spec.m % 2 == 1 {
                Step::Down
            } else {
                Step::Up
            };
            in_free_family(p, spec.k) && p.is_cornerless() && p.first() != Some(forbidden)
        }
        Family::CornerlessPrefix => {
            // The empty word has no last step; it is admitted so that the
            // cornerless restriction stays total at m = r = 0.
            in_prefix_family(p, spec.k) && p.is_cornerless() && p.last().is_none_or(Step::is_flat)
        }
        Family::CornerlessMotzkin => is_motzkin_path(p) && p.is_cornerless(),
        Family::SymmetricCornerlessMotzkin => {
            is_motzkin_path(p) && p.is_cornerless() && p.is_symmetric()
        }
    }
}

fn in_free_family(p: &PathWord, k: usize) -> bool {
    let prof = free_profile(p);
    let (lo, hi) = free_strip(k);
    *prof.heights.last().unwrap() == 0
        && prof.min_height >= lo
        && prof.max_height <= hi
        && prof.heights.contains(&l_k_height(k))
}

fn in_prefix_family(p: &PathWord, k: usize) -> bool {
    let prof = profile(p, 0);
    prof.min_height >= 0 && prof.max_height == k as i64
}

pub fn is_motzkin_prefix(p: &PathWord) -> bool {
    p.heights(0).iter().all(|&h| h >= 0)
}

pub fn is_motzkin_path(p: &PathWord) -> bool {
    is_motzkin_prefix(p) && p.end_height(0) == 0
}

pub fn is_free_motzkin(p: &PathWord) -> bool {
    p.end_height(free_start_height(p.nonflat_count())) == 0
}

/// The unique `k` with `p` in `F̄(m, r, k)`.
pub fn width_index_free(p: &PathWord) -> Result<usize> {
    if !is_free_motzkin(p) {
        return Err(Error::NotFreeMotzkin(format!(
            "\"{p}\" does not end at height 0 from start height {}",
            free_start_height(p.nonflat_count())
        )));
    }
    let prof = free_profile(p);
    let (hi, lo) = (prof.max_height, prof.min_height);
    let k = if hi > -lo { 2 * hi - 1 } else { -2 * lo };
    Ok(k as usize)
}

/// Maximum height of a Motzkin prefix.
pub fn width_index_prefix(s: &PathWord) -> Result<usize> {
    let prof = profile(s, 0);
    if prof.min_height < 0 {
        return Err(Error::NotMotzkinPrefix(format!(
            "{s} dips below the x-axis"
        )));
    }
    Ok(prof.max_height as usize)
}
