//! Bijection chains between t-cores, bead sequences and cornerless paths.
//!
//! Ordinary chain: t-core ↔ `(n_0, …, n_{t-1})` ↔ cornerless Motzkin path of
//! length `2m + t - 1` with `t - 1` flats.
//!
//! Self-conjugate chain: self-conjugate t-core ↔ signed `(n_0, …, n_{⌊t/2⌋-1})`
//! ↔ cornerless free path ↔ cornerless prefix (via `phi`) ↔ symmetric
//! cornerless Motzkin path.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijection::{phi, psi};
use crate::error::{Error, Result};
use crate::partition::{
    abacus_decode, abacus_encode, doubled_abacus_decode, doubled_abacus_encode, Partition,
};
use crate::path::{
    free_start_height, is_member, is_motzkin_path, width_index_free, width_index_prefix, Family,
    FamilySpec, PathWord, Step,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BeadSequence {
    pub t: usize,
    pub values: Vec<i64>,
    pub signed: bool,
}

impl BeadSequence {
    /// `(n_0, …, n_{t-1})` with `n_0 = 0` and every entry non-negative.
    pub fn unsigned(t: usize, values: Vec<i64>) -> Result<Self> {
        if t == 0 || values.len() != t {
            return Err(Error::MalformedSequence(format!(
                "expected {t} entries, got {}",
                values.len()
            )));
        }
        if values[0] != 0 {
            return Err(Error::MalformedSequence(format!(
                "n_0 must be 0, got {}",
                values[0]
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v < 0) {
            return Err(Error::MalformedSequence(format!("negative entry {v}")));
        }
        Ok(BeadSequence {
            t,
            values,
            signed: false,
        })
    }

    /// `(n_0, …, n_{⌊t/2⌋-1})`, any signs.
    pub fn signed(t: usize, values: Vec<i64>) -> Result<Self> {
        if t < 2 || values.len() != t / 2 {
            return Err(Error::MalformedSequence(format!(
                "t = {t} needs {} signed entries, got {}",
                t / 2,
                values.len()
            )));
        }
        Ok(BeadSequence {
            t,
            values,
            signed: true,
        })
    }

    /// `Σ |n_i - n_{i-1}|` with zero sentinels on both ends.
    pub fn variation(&self) -> usize {
        let mut prev = 0i64;
        let mut total = 0;
        for &v in self.values.iter().chain(std::iter::once(&0)) {
            total += (v - prev).unsigned_abs() as usize;
            prev = v;
        }
        total
    }

    /// Corner count of the matching partition.
    pub fn corners(&self) -> usize {
        let s = self.variation();
        match (self.signed, self.values.first()) {
            (false, _) => s / 2,
            (true, Some(&n0)) if n0 > 0 => s - 1,
            (true, _) => s,
        }
    }
}

impl fmt::Display for BeadSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", vals.join(","))
    }
}

/// Parse `[0,0,2,2]`, `0,0,2,2` or `(-1, -1)`.
pub fn parse_sequence_values(text: &str) -> Result<Vec<i64>> {
    let body = text
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')'])
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|x| {
            let x = x.trim().replace('\u{2212}', "-");
            x.parse::<i64>()
                .map_err(|e| Error::Parse(format!("sequence entry {x:?}: {e}")))
        })
        .collect()
}

fn walk_to(out: &mut Vec<Step>, from: i64, to: i64) {
    let step = if to > from { Step::Up } else { Step::Down };
    out.extend(std::iter::repeat_n(
        step,
        (to - from).unsigned_abs() as usize,
    ));
}

/// Flats at the given heights, joined by monotone runs, from `start` to 0.
fn flats_at_heights(start: i64, heights: &[i64]) -> PathWord {
    let mut out = Vec::new();
    let mut h = start;
    for &next in heights {
        walk_to(&mut out, h, next);
        out.push(Step::Flat);
        h = next;
    }
    walk_to(&mut out, h, 0);
    PathWord::new(out)
}

/// Heights of the flat steps, in order.
fn flat_heights(p: &PathWord, start: i64) -> Vec<i64> {
    let heights = p.heights(start);
    p.steps()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_flat())
        .map(|(i, _)| heights[i])
        .collect()
}

pub fn sequence_to_cornerless_path(n: &BeadSequence) -> Result<PathWord> {
    if n.signed {
        return Err(Error::MalformedSequence(
            "expected an unsigned sequence".into(),
        ));
    }
    BeadSequence::unsigned(n.t, n.values.clone())?;
    Ok(flats_at_heights(0, &n.values[1..]))
}

pub fn cornerless_path_to_sequence(p: &PathWord, t: usize) -> Result<BeadSequence> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    if !is_motzkin_path(p) {
        return Err(Error::NotMotzkinPath(p.to_string()));
    }
    if p.flat_count() != t - 1 {
        return Err(Error::WrongFlatCount {
            expected: t - 1,
            found: p.flat_count(),
        });
    }
    if !p.is_cornerless() {
        return Err(Error::NotCornerless);
    }
    let mut values = vec![0];
    values.extend(flat_heights(p, 0));
    BeadSequence::unsigned(t, values)
}

pub fn tcore_to_sequence(lambda: &Partition, t: usize) -> Result<BeadSequence> {
    let counts = abacus_encode(lambda, t)?;
    BeadSequence::unsigned(t, counts.into_iter().map(|c| c as i64).collect())
}

pub fn sequence_to_tcore(n: &BeadSequence) -> Result<Partition> {
    let n = BeadSequence::unsigned(n.t, n.values.clone())?;
    let counts: Vec<usize> = n.values.iter().map(|&v| v as usize).collect();
    abacus_decode(n.t, &counts)
}

pub fn tcore_to_path(lambda: &Partition, t: usize) -> Result<PathWord> {
    sequence_to_cornerless_path(&tcore_to_sequence(lambda, t)?)
}

pub fn path_to_tcore(p: &PathWord, t: usize) -> Result<Partition> {
    sequence_to_tcore(&cornerless_path_to_sequence(p, t)?)
}

pub fn sc_tcore_to_sequence(lambda: &Partition, t: usize) -> Result<BeadSequence> {
    BeadSequence::signed(t, doubled_abacus_encode(lambda, t)?)
}

pub fn sequence_to_sc_tcore(n: &BeadSequence) -> Result<Partition> {
    let n = BeadSequence::signed(n.t, n.values.clone())?;
    doubled_abacus_decode(n.t, &n.values)
}

/// Signed sequence to cornerless free path with `m` non-flat steps.
pub fn sc_sequence_to_free_path(n: &BeadSequence, m: usize) -> Result<PathWord> {
    let n = BeadSequence::signed(n.t, n.values.clone())?;
    let n0 = n.values[0];
    if (m % 2 == 1) != (n0 > 0) {
        return Err(Error::MalformedSequence(format!(
            "n_0 = {n0} must be {} for m = {m}",
            if m % 2 == 1 {
                "positive"
            } else {
                "non-positive"
            }
        )));
    }
    let expected = m + m % 2;
    if n.variation() != expected {
        return Err(Error::SumMismatch {
            expected,
            found: n.variation(),
        });
    }
    let p = flats_at_heights(free_start_height(m), &n.values);
    let forbidden = if m % 2 == 1 { Step::Down } else { Step::Up };
    if p.first() == Some(forbidden) {
        return Err(Error::InternalConsistency(format!(
            "{p} breaks the start-step rule"
        )));
    }
    Ok(p)
}

/// Signed sequence to free path, reading `m` off the sequence itself.
pub fn sc_sequence_to_free_path_auto(n: &BeadSequence) -> Result<PathWord> {
    let n = BeadSequence::signed(n.t, n.values.clone())?;
    sc_sequence_to_free_path(&n, n.corners())
}

fn cornerless_free_spec(p: &PathWord) -> Result<FamilySpec> {
    let k = width_index_free(p).map_err(|_| Error::NotCornerlessFree(p.to_string()))?;
    let spec = FamilySpec::new(Family::CornerlessFree, p.nonflat_count(), p.flat_count(), k);
    if !is_member(p, &spec) {
        return Err(Error::NotCornerlessFree(p.to_string()));
    }
    Ok(spec)
}

fn cornerless_prefix_spec(s: &PathWord) -> Result<FamilySpec> {
    let k = width_index_prefix(s).map_err(|_| Error::NotCornerlessPrefix(s.to_string()))?;
    let spec = FamilySpec::new(
        Family::CornerlessPrefix,
        s.nonflat_count(),
        s.flat_count(),
        k,
    );
    if !is_member(s, &spec) {
        return Err(Error::NotCornerlessPrefix(s.to_string()));
    }
    Ok(spec)
}

pub fn free_path_to_sc_sequence(p: &PathWord, t: usize) -> Result<BeadSequence> {
    cornerless_free_spec(p)?;
    if p.flat_count() != t / 2 {
        return Err(Error::WrongFlatCount {
            expected: t / 2,
            found: p.flat_count(),
        });
    }
    BeadSequence::signed(t, flat_heights(p, free_start_height(p.nonflat_count())))
}

pub fn free_path_to_prefix(p: &PathWord) -> Result<PathWord> {
    cornerless_free_spec(p)?;
    phi(p)
}

pub fn prefix_to_free_path(s: &PathWord) -> Result<PathWord> {
    cornerless_prefix_spec(s)?;
    psi(s)
}

pub fn prefix_to_symmetric(s: &PathWord, t: usize) -> Result<PathWord> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    cornerless_prefix_spec(s)?;
    if s.flat_count() != t / 2 {
        return Err(Error::WrongFlatCount {
            expected: t / 2,
            found: s.flat_count(),
        });
    }
    let steps = s.steps();
    let mirrored: &[Step] = if t % 2 == 1 {
        steps
    } else {
        match steps.split_last() {
            Some((Step::Flat, rest)) => rest,
            _ => {
                return Err(Error::NotCornerlessPrefix(format!(
                    "{s} has no flat centre step"
                )))
            }
        }
    };
    let mut out = steps.to_vec();
    out.extend(mirrored.iter().rev().map(|x| x.complement()));
    Ok(PathWord::new(out))
}

pub fn symmetric_to_prefix(w: &PathWord, t: usize) -> Result<PathWord> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    if w.len() % 2 != (t - 1) % 2 {
        return Err(Error::LengthParityMismatch { length: w.len(), t });
    }
    if !is_motzkin_path(w) {
        return Err(Error::NotMotzkinPath(w.to_string()));
    }
    if w.flat_count() != t - 1 {
        return Err(Error::WrongFlatCount {
            expected: t - 1,
            found: w.flat_count(),
        });
    }
    if !w.is_cornerless() {
        return Err(Error::NotCornerless);
    }
    if !w.is_symmetric() {
        return Err(Error::Precondition(format!("{w} is not symmetric")));
    }
    let prefix = PathWord::new(w.steps()[..w.len().div_ceil(2)].to_vec());
    cornerless_prefix_spec(&prefix)?;
    Ok(prefix)
}

pub fn sc_tcore_to_symmetric_path(lambda: &Partition, t: usize) -> Result<PathWord> {
    let n = sc_tcore_to_sequence(lambda, t)?;
    let free = sc_sequence_to_free_path(&n, lambda.corner_count())?;
    prefix_to_symmetric(&free_path_to_prefix(&free)?, t)
}

pub fn symmetric_path_to_sc_tcore(w: &PathWord, t: usize) -> Result<Partition> {
    let prefix = symmetric_to_prefix(w, t)?;
    let free = prefix_to_free_path(&prefix)?;
    sequence_to_sc_tcore(&free_path_to_sc_sequence(&free, t)?)
}

/// Smallest `k >= 1` with `h(1,1) < kt`.
pub fn k_min(lambda: &Partition, t: usize) -> usize {
    lambda.first_hook() / t + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Partition,
    Sequence,
    /// Cornerless Motzkin path, or the cornerless free path in the
    /// self-conjugate chain.
    Path,
    Prefix,
    Symmetric,
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "partition" => Representation::Partition,
            "sequence" => Representation::Sequence,
            "path" => Representation::Path,
            "prefix" => Representation::Prefix,
            "symmetric" => Representation::Symmetric,
            other => return Err(Error::Parse(format!("unknown representation {other:?}"))),
        })
    }
}

/// Every representation of one object along its chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConversionRecord {
    pub partition: Partition,
    pub sequence: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_path: Option<PathWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefix: Option<PathWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_path: Option<PathWord>,
    pub t: usize,
    pub corners: usize,
    pub k_min: usize,
}

impl ConversionRecord {
    pub fn from_tcore(lambda: &Partition, t: usize) -> Result<Self> {
        let seq = tcore_to_sequence(lambda, t)?;
        let path = sequence_to_cornerless_path(&seq)?;
        Ok(ConversionRecord {
            partition: lambda.clone(),
            sequence: seq.values,
            path: Some(path),
            free_path: None,
            prefix: None,
            symmetric_path: None,
            t,
            corners: lambda.corner_count(),
            k_min: k_min(lambda, t),
        })
    }

    pub fn from_sc_tcore(lambda: &Partition, t: usize) -> Result<Self> {
        let seq = sc_tcore_to_sequence(lambda, t)?;
        let free = sc_sequence_to_free_path(&seq, lambda.corner_count())?;
        let prefix = free_path_to_prefix(&free)?;
        let symmetric = prefix_to_symmetric(&prefix, t)?;
        Ok(ConversionRecord {
            partition: lambda.clone(),
            sequence: seq.values,
            path: None,
            free_path: Some(free),
            prefix: Some(prefix),
            symmetric_path: Some(symmetric),
            t,
            corners: lambda.corner_count(),
            k_min: k_min(lambda, t),
        })
    }
}

/// Convert `value`, given in representation `from`, to its full record.
/// `prefix` and `symmetric` inputs always use the self-conjugate chain.
pub fn convert(
    t: usize,
    from: Representation,
    value: &str,
    self_conjugate: bool,
) -> Result<ConversionRecord> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    let sc = self_conjugate || matches!(from, Representation::Prefix | Representation::Symmetric);
    let lambda = match (from, sc) {
        (Representation::Partition, _) => value.parse::<Partition>()?,
        (Representation::Sequence, false) => {
            sequence_to_tcore(&BeadSequence::unsigned(t, parse_sequence_values(value)?)?)?
        }
        (Representation::Sequence, true) => {
            let seq = BeadSequence::signed(t, parse_sequence_values(value)?)?;
            let free = sc_sequence_to_free_path_auto(&seq)?;
            sequence_to_sc_tcore(&free_path_to_sc_sequence(&free, t)?)?
        }
        (Representation::Path, false) => path_to_tcore(&value.parse()?, t)?,
        (Representation::Path, true) => {
            sequence_to_sc_tcore(&free_path_to_sc_sequence(&value.parse()?, t)?)?
        }
        (Representation::Prefix, _) => {
            let prefix: PathWord = value.parse()?;
            if prefix.flat_count() != t / 2 {
                return Err(Error::WrongFlatCount {
                    expected: t / 2,
                    found: prefix.flat_count(),
                });
            }
            sequence_to_sc_tcore(&free_path_to_sc_sequence(
                &prefix_to_free_path(&prefix)?,
                t,
            )?)?
        }
        (Representation::Symmetric, _) => symmetric_path_to_sc_tcore(&value.parse()?, t)?,
    };
    if sc {
        ConversionRecord::from_sc_tcore(&lambda, t)
    } else {
        ConversionRecord::from_tcore(&lambda, t)
    }
}
