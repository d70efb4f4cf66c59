use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use super::formulas::{cc, cigler_count, narayana, scc, symmetric_dyck_peak_count, BigCount};
use crate::error::{Error, Result};

/// Reference values of `cc(t, m)` for `t = 2..=6`, `m = 1..=8`.
pub const REFERENCE_CC: [[u64; 8]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [3, 5, 7, 9, 11, 13, 15, 17],
    [6, 16, 31, 51, 76, 106, 141, 181],
    [10, 40, 105, 219, 396, 650, 995, 1445],
    [15, 85, 295, 771, 1681, 3235, 5685, 9325],
];

/// Reference values of `scc(t, m)` for the row pairs `t = 2j, 2j+1`,
/// `j = 1..=5`, `m = 1..=8`.
pub const REFERENCE_SCC: [[u64; 8]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 4, 5, 7, 8, 10, 11, 13],
    [3, 9, 15, 27, 37, 55, 69, 93],
    [4, 16, 34, 76, 124, 216, 309, 471],
    [5, 25, 65, 175, 335, 675, 1095, 1875],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Cc,
    Scc,
    Cigler,
    Narayana,
    SymPeaks,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Cc => "cc",
            Formula::Scc => "scc",
            Formula::Cigler => "cigler",
            Formula::Narayana => "narayana",
            Formula::SymPeaks => "sympeaks",
        }
    }

    /// Names of the row and column parameters.
    pub fn labels(self) -> (&'static str, &'static str) {
        match self {
            Formula::Cc | Formula::Scc => ("t", "m"),
            Formula::Cigler => ("n", "k"),
            Formula::Narayana | Formula::SymPeaks => ("m", "i"),
        }
    }

    /// Value at `(row, col)`; out-of-range peak counts read as 0.
    pub fn eval(self, row: usize, col: usize) -> BigCount {
        match self {
            Formula::Cc => cc(row, col),
            Formula::Scc => scc(row, col),
            Formula::Cigler => cigler_count(row, col),
            Formula::Narayana => narayana(row, col).unwrap_or_default(),
            Formula::SymPeaks => symmetric_dyck_peak_count(row, col).unwrap_or_default(),
        }
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cc" => Formula::Cc,
            "scc" => Formula::Scc,
            "cigler" => Formula::Cigler,
            "narayana" => Formula::Narayana,
            "sympeaks" => Formula::SymPeaks,
            other => return Err(Error::Parse(format!("unknown formula {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub formula: String,
    pub row_label: String,
    pub col_label: String,
    /// Row headers; a header may name several parameter values ("4,5").
    pub rows: Vec<String>,
    pub cols: Vec<usize>,
    pub cells: Vec<Vec<BigCount>>,
}

impl CountTable {
    pub fn build(formula: Formula, rows: &[usize], cols: &[usize]) -> Result<CountTable> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::OutOfRange("table ranges must be non-empty".into()));
        }
        let (row_label, col_label) = formula.labels();
        Ok(CountTable {
            formula: formula.name().into(),
            row_label: row_label.into(),
            col_label: col_label.into(),
            rows: rows.iter().map(ToString::to_string).collect(),
            cols: cols.to_vec(),
            cells: rows
                .iter()
                .map(|&r| cols.iter().map(|&c| formula.eval(r, c)).collect())
                .collect(),
        })
    }

    /// `cc(t, m)` for `t = 2..=6`, `m = 1..=8`.
    pub fn cc_reference_layout() -> CountTable {
        CountTable::build(Formula::Cc, &[2, 3, 4, 5, 6], &[1, 2, 3, 4, 5, 6, 7, 8])
            .expect("non-empty")
    }

    /// `scc(t, m)` for `t = 2..=11` with rows `2j` and `2j+1` merged, after
    /// checking the two rows agree.
    pub fn scc_reference_layout() -> Result<CountTable> {
        let cols: Vec<usize> = (1..=8).collect();
        let mut rows = Vec::new();
        let mut cells = Vec::new();
        for j in 1..=5 {
            let even: Vec<BigCount> = cols.iter().map(|&m| scc(2 * j, m)).collect();
            let odd: Vec<BigCount> = cols.iter().map(|&m| scc(2 * j + 1, m)).collect();
            if even != odd {
                return Err(Error::InternalConsistency(format!(
                    "scc rows {} and {} differ",
                    2 * j,
                    2 * j + 1
                )));
            }
            rows.push(format!("{},{}", 2 * j, 2 * j + 1));
            cells.push(even);
        }
        Ok(CountTable {
            formula: "scc".into(),
            row_label: "t".into(),
            col_label: "m".into(),
            rows,
            cols,
            cells,
        })
    }

    pub fn matches(&self, reference: &[[u64; 8]]) -> bool {
        self.cells.len() == reference.len()
            && self.cells.iter().zip(reference).all(|(row, want)| {
                row.len() == want.len()
                    && row.iter().zip(want).all(|(a, &b)| *a == BigUint::from(b))
            })
    }

    pub fn is_rectangular(&self) -> bool {
        self.cells.len() == self.rows.len() && self.cells.iter().all(|r| r.len() == self.cols.len())
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        json!({
            "formula": self.formula,
            "row_label": self.row_label,
            "col_label": self.col_label,
            "rows": self.rows,
            "cols": self.cols,
            "cells": cells,
        })
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
        let mut header = vec![format!("{}\\{}", self.row_label, self.col_label)];
        header.extend(self.cols.iter().map(ToString::to_string));
        w.write_record(&header).map_err(csv_err)?;
        for (label, row) in self.rows.iter().zip(&self.cells) {
            let mut rec = vec![label.clone()];
            rec.extend(row.iter().map(ToString::to_string));
            w.write_record(&rec).map_err(csv_err)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Parse(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn is_all_zero(&self) -> bool {
        self.cells.iter().flatten().all(Zero::is_zero)
    }
}

impl fmt::Display for CountTable {
    /// Right-aligned plain text grid.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let corner = format!("{}\\{}", self.row_label, self.col_label);
        let mut grid: Vec<Vec<String>> = vec![std::iter::once(corner)
            .chain(self.cols.iter().map(ToString::to_string))
            .collect()];
        for (label, row) in self.rows.iter().zip(&self.cells) {
            grid.push(
                std::iter::once(label.clone())
                    .chain(row.iter().map(ToString::to_string))
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        for row in &grid {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
