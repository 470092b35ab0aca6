//! Matrices of forms between sums of line bundles.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::{graded_piece_matrix, GradedRow, HomogeneousPoly, RationalMatrix};

/// A map `sum_j O(col_twists[j]) -> sum_i O(row_twists[i])`.
///
/// Invariant: a nonzero entry `(i, j)` has degree `row_twists[i] - col_twists[j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    nvars: usize,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
    entries: Vec<Vec<HomogeneousPoly>>,
}

/// The zero form placed at an entry of degree `deg`; negative degrees only
/// admit zero.
pub fn zero_entry(nvars: usize, deg: i64) -> HomogeneousPoly {
    HomogeneousPoly::zero(nvars, deg.max(0) as u32)
}

impl GradedMatrix {
    pub fn new(
        nvars: usize,
        row_twists: Vec<i64>,
        col_twists: Vec<i64>,
        entries: Vec<Vec<HomogeneousPoly>>,
    ) -> Result<Self> {
        if entries.len() != row_twists.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows for {} row twists",
                entries.len(),
                row_twists.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_twists.len() {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries", row.len())));
            }
            for (j, e) in row.iter().enumerate() {
                if e.nvars() != nvars {
                    return Err(Error::DimensionMismatch(format!("entry ({i}, {j}) lives in another ring")));
                }
                let want = row_twists[i] - col_twists[j];
                if !e.is_zero() && i64::from(e.degree()) != want {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({i}, {j}) has degree {} but the twists require {want}",
                        e.degree()
                    )));
                }
            }
        }
        Ok(Self { nvars, row_twists, col_twists, entries })
    }

    pub fn zeros(nvars: usize, row_twists: Vec<i64>, col_twists: Vec<i64>) -> Self {
        let entries =
            row_twists.iter().map(|r| col_twists.iter().map(|c| zero_entry(nvars, r - c)).collect()).collect();
        Self { nvars, row_twists, col_twists, entries }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.row_twists.len()
    }

    pub fn cols(&self) -> usize {
        self.col_twists.len()
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn entry(&self, i: usize, j: usize) -> &HomogeneousPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<HomogeneousPoly>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(HomogeneousPoly::is_zero)
    }

    /// Re-checks the twist-degree invariant entry by entry.
    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| e.is_zero() || i64::from(e.degree()) == self.row_twists[i] - self.col_twists[j])
        })
    }

    /// Composition `self * other`; the source of `self` must be the target of
    /// `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars || self.col_twists != other.row_twists {
            return Err(Error::DimensionMismatch("graded matrices do not compose".into()));
        }
        let mut entries = Vec::with_capacity(self.rows());
        for (i, r) in self.row_twists.iter().enumerate() {
            let mut row = Vec::with_capacity(other.cols());
            for (k, c) in other.col_twists.iter().enumerate() {
                let mut acc = zero_entry(self.nvars, r - c);
                for j in 0..self.cols() {
                    let (a, b) = (&self.entries[i][j], &other.entries[j][k]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                // sums of products can cancel; keep the declared degree
                if acc.is_zero() {
                    acc = zero_entry(self.nvars, r - c);
                }
                row.push(acc);
            }
            entries.push(row);
        }
        Self::new(self.nvars, self.row_twists.clone(), other.col_twists.clone(), entries)
    }

    /// The induced linear map on global sections after twisting by `k`.
    pub fn section_map(&self, k: i64) -> Result<RationalMatrix> {
        let rows: Vec<GradedRow> =
            self.entries.iter().map(|row| row.iter().cloned().zip(self.col_twists.iter().copied()).collect()).collect();
        if rows.is_empty() {
            // no target summands: a 0 x dim(source) matrix
            let cols = self.col_twists.iter().map(|c| crate::exactpoly::monomial_count(self.nvars, c + k)).sum();
            return Ok(RationalMatrix::zeros(0, cols));
        }
        graded_piece_matrix(self.nvars, &rows, &self.row_twists, k)
    }

    /// Substitutes `x = M y` in every entry.
    pub fn substitute_linear(&self, m: &RationalMatrix) -> Result<Self> {
        let k = m.cols();
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| {
                        if e.is_zero() {
                            Ok(zero_entry(k, self.row_twists[i] - self.col_twists[j]))
                        } else {
                            e.substitute_linear(m)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, self.row_twists.clone(), self.col_twists.clone(), entries)
    }

    /// Keeps the listed columns.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self {
            nvars: self.nvars,
            row_twists: self.row_twists.clone(),
            col_twists: idx.iter().map(|&j| self.col_twists[j]).collect(),
            entries: self.entries.iter().map(|row| idx.iter().map(|&j| row[j].clone()).collect()).collect(),
        }
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedMatrix {:?} <- {:?}", self.row_twists, self.col_twists)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
