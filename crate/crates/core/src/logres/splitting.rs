//! Splitting type of the logarithmic bundle on a line.
//!
//! Pulling the resolution back along `x = u p + v q` gives
//! `0 -> A_L -> B_L -> Omega_L -> 0` on `P^1`, and
//! `h^0(Omega_L(s)) = h^0(B_L(s)) - h^0(A_L(s)) + h^1(A_L(s)) - rank`, where
//! the rank is that of `H^1(A_L(s)) -> H^1(B_L(s))`, computed as the rank of
//! `N_L` on sections twisted by `-s - 2`. The jumps of this profile give the
//! degrees: `h^0(s) - h^0(s - 1) = #{k : e_k >= -s}`.

use super::presentation::presentation;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactpoly::{Rational, RationalMatrix};

/// A line in `P^n` given by an `(n + 1) x 2` matrix of rank 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    param: RationalMatrix,
}

impl Line {
    pub fn new(param: RationalMatrix) -> Result<Self> {
        if param.cols() != 2 || param.rank() != 2 {
            return Err(Error::DegenerateFrame("a line needs a rank-2 parametrization".into()));
        }
        Ok(Self { param })
    }

    pub fn through(p: &[Rational], q: &[Rational]) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::DimensionMismatch("points of different length".into()));
        }
        Self::new(RationalMatrix::from_columns(&[p.to_vec(), q.to_vec()])?)
    }

    pub fn param(&self) -> &RationalMatrix {
        &self.param
    }
}

/// Degrees `e_1 >= ... >= e_r` of `F|_L = sum O(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    pub degrees: Vec<i64>,
}

impl SplittingType {
    pub fn first_chern(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Balanced types differ by at most one between any two degrees.
    pub fn is_balanced(&self) -> bool {
        match (self.degrees.first(), self.degrees.last()) {
            (Some(a), Some(b)) => a - b <= 1,
            _ => true,
        }
    }
}

fn h0_p1(k: i64) -> i64 {
    (k + 1).max(0)
}

fn h1_p1(k: i64) -> i64 {
    (-k - 1).max(0)
}

/// Splitting type of `Omega(log D)(t)` restricted to `line`.
pub fn splitting_on_line(arr: &Arrangement, line: &Line, t: i64) -> Result<SplittingType> {
    let n = arr.ambient_dim();
    if line.param().rows() != n + 1 {
        return Err(Error::DimensionMismatch("line lives in another projective space".into()));
    }
    let big_n = presentation(arr)?;
    let nl = big_n.substitute_linear(line.param())?;
    let (src, tgt) = (nl.col_twists().to_vec(), nl.row_twists().to_vec());
    let rank = (src.len() - tgt.len()) as i64;
    let c1: i64 = tgt.iter().sum::<i64>() - src.iter().sum::<i64>();

    let profile = |s: i64| -> Result<i64> {
        let hb: i64 = src.iter().map(|c| h0_p1(s - c)).sum();
        let ha: i64 = tgt.iter().map(|d| h0_p1(s - d)).sum();
        let h1a: i64 = tgt.iter().map(|d| h1_p1(s - d)).sum();
        let r = nl.section_map(-s - 2)?.rank() as i64;
        Ok(hb - ha + h1a - r)
    };

    // Omega_L is a quotient of sum O(-c_j): every degree is >= lo, and the
    // degrees sum to c1, so every degree is <= hi.
    let lo = -src.iter().copied().max().unwrap_or(0);
    let hi = c1 - (rank - 1) * lo;
    let mut g = Vec::with_capacity((hi - lo + 2) as usize);
    for s in (-hi - 1)..=(-lo) {
        g.push(profile(s)?);
    }
    if g[0] != 0 {
        return Err(Error::Consistency("profile window too small at the bottom".into()));
    }
    // at_least[m] = #{e >= m} = g(-m) - g(-m - 1)
    let at_least = |m: i64| -> i64 {
        let idx = (-m - (-hi - 1)) as usize;
        g[idx] - g[idx - 1]
    };
    if at_least(lo) != rank {
        return Err(Error::Consistency("profile does not reach the rank".into()));
    }
    let mut degrees = Vec::with_capacity(rank as usize);
    for m in (lo..=hi).rev() {
        let above = if m == hi { 0 } else { at_least(m + 1) };
        let count = at_least(m) - above;
        if count < 0 {
            return Err(Error::Consistency("profile is not concave".into()));
        }
        degrees.extend(std::iter::repeat_n(m + t, count as usize));
    }
    let out = SplittingType { degrees };
    if out.first_chern() != c1 + rank * t {
        return Err(Error::Consistency("splitting degrees do not sum to c_1".into()));
    }
    Ok(out)
}
