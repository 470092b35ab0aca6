//! Cohomology of twists of the logarithmic bundle from its resolution.
//!
//! With `A = sum O(t - d_i)` and `B = sum O(t - c_j)` (the duals of the
//! target and source of `N`, twisted by `t`), `0 -> A -> B -> Omega(t) -> 0`.
//! On `P^n` with `n >= 2` only `H^0` and `H^n` of line bundles survive, so
//! the long exact sequence leaves one map to compute: `H^n(A) -> H^n(B)`,
//! whose rank equals that of `N` on sections twisted by `-t - n - 1`.

use std::collections::BTreeMap;

use super::graded::GradedMatrix;
use super::presentation::presentation;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactpoly::binomial;

/// `h^0(O(k))` on `P^n`.
pub fn h0_line(n: usize, k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        binomial(n as u64 + k as u64, n as u64)
    }
}

/// `h^n(O(k))` on `P^n`.
pub fn hn_line(n: usize, k: i64) -> u64 {
    let m = -k - n as i64 - 1;
    if m < 0 {
        0
    } else {
        h0_line(n, m)
    }
}

/// `chi(O(k)) = C(n + k, n)` as a polynomial in `k`.
pub fn euler_line(n: usize, k: i64) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 1..=n as i128 {
        num *= i128::from(k) + j;
        den *= j;
    }
    num / den
}

/// The resolution `0 -> Omega^dual -> source -> target -> 0` given by `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    n: usize,
    map: GradedMatrix,
}

impl Resolution {
    pub fn new(n: usize, map: GradedMatrix) -> Result<Self> {
        if map.nvars() != n + 1 || map.cols() < map.rows() {
            return Err(Error::DimensionMismatch("resolution map has the wrong shape".into()));
        }
        Ok(Self { n, map })
    }

    pub fn of(arr: &Arrangement) -> Result<Self> {
        Self::new(arr.ambient_dim(), presentation(arr)?)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &GradedMatrix {
        &self.map
    }

    pub fn rank(&self) -> usize {
        self.map.cols() - self.map.rows()
    }

    /// Sum of `h^0` over the twisted duals of a list of twists.
    fn h0_sum(&self, twists: &[i64], t: i64) -> u64 {
        twists.iter().map(|c| h0_line(self.n, t - c)).sum()
    }

    fn hn_sum(&self, twists: &[i64], t: i64) -> u64 {
        twists.iter().map(|c| hn_line(self.n, t - c)).sum()
    }

    /// `h^i(Omega(t))`.
    pub fn h(&self, i: usize, t: i64) -> Result<u64> {
        let n = self.n;
        if n < 2 {
            return Err(Error::Unsupported("cohomology needs n >= 2".into()));
        }
        if i > n {
            return Ok(0);
        }
        let (src, tgt) = (self.map.col_twists(), self.map.row_twists());
        if i == 0 {
            return Ok(self.h0_sum(src, t) - self.h0_sum(tgt, t));
        }
        if i < n - 1 {
            return Ok(0);
        }
        let r = self.top_rank(t)?;
        if i == n - 1 {
            Ok(self.hn_sum(tgt, t) - r)
        } else {
            Ok(self.hn_sum(src, t) - r)
        }
    }

    /// Rank of `H^n(A) -> H^n(B)` via its Serre dual.
    fn top_rank(&self, t: i64) -> Result<u64> {
        let s = -t - self.n as i64 - 1;
        Ok(self.map.section_map(s)?.rank() as u64)
    }

    /// Euler characteristic predicted by the resolution.
    pub fn euler_characteristic(&self, t: i64) -> i128 {
        let e = |tw: &[i64]| tw.iter().map(|c| euler_line(self.n, t - c)).sum::<i128>();
        e(self.map.col_twists()) - e(self.map.row_twists())
    }

    /// All `h^i(Omega(t))` for `t` in `[tmin, tmax]`.
    pub fn table(&self, tmin: i64, tmax: i64) -> Result<CohomologyTable> {
        let mut entries = BTreeMap::new();
        for t in tmin..=tmax {
            let top = self.top_rank(t)?;
            let (src, tgt) = (self.map.col_twists(), self.map.row_twists());
            for i in 0..=self.n {
                let v = if i == 0 {
                    self.h0_sum(src, t) - self.h0_sum(tgt, t)
                } else if i == self.n - 1 {
                    self.hn_sum(tgt, t) - top
                } else if i == self.n {
                    self.hn_sum(src, t) - top
                } else {
                    0
                };
                entries.insert((i, t), v);
            }
        }
        Ok(CohomologyTable { n: self.n, entries })
    }
}

/// `h^i(Omega(log D)(t))`.
pub fn cohomology(arr: &Arrangement, i: usize, t: i64) -> Result<u64> {
    Resolution::of(arr)?.h(i, t)
}

pub fn cohomology_table(arr: &Arrangement, tmin: i64, tmax: i64) -> Result<CohomologyTable> {
    if arr.ambient_dim() < 2 {
        return Err(Error::Unsupported("cohomology needs n >= 2".into()));
    }
    Resolution::of(arr)?.table(tmin, tmax)
}

/// Dimensions `h^i(F(t))` indexed by `(i, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub n: usize,
    pub entries: BTreeMap<(usize, i64), u64>,
}

impl CohomologyTable {
    pub fn get(&self, i: usize, t: i64) -> Option<u64> {
        self.entries.get(&(i, t)).copied()
    }

    pub fn euler_characteristic(&self, t: i64) -> i128 {
        (0..=self.n)
            .map(|i| {
                let v = i128::from(self.get(i, t).unwrap_or(0));
                if i % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    /// The table of `sum O(k_j)` over the same range.
    pub fn of_split(n: usize, twists: &[i64], tmin: i64, tmax: i64) -> Self {
        let mut entries = BTreeMap::new();
        for t in tmin..=tmax {
            for i in 0..=n {
                let v = if i == 0 {
                    twists.iter().map(|k| h0_line(n, k + t)).sum()
                } else if i == n {
                    twists.iter().map(|k| hn_line(n, k + t)).sum()
                } else {
                    0
                };
                entries.insert((i, t), v);
            }
        }
        Self { n, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::HomogeneousPoly;

    fn p(s: &str, nv: usize) -> HomogeneousPoly {
        HomogeneousPoly::parse(s, nv, 0).unwrap()
    }

    #[test]
    fn line_bundles() {
        assert_eq!(h0_line(2, 2), 6);
        assert_eq!(h0_line(2, -1), 0);
        assert_eq!(hn_line(2, -3), 1);
        assert_eq!(hn_line(2, -4), 3);
        assert_eq!(hn_line(2, -2), 0);
        for k in -6..6 {
            let chi = i128::from(h0_line(3, k)) - i128::from(hn_line(3, k));
            assert_eq!(chi, euler_line(3, k));
        }
    }

    #[test]
    fn quadric_pair_has_one_section() {
        let arr = Arrangement::new(2, vec![p("x0^2 + 2*x1^2 - x2^2", 3), p("3*x0^2 + 5*x1^2 - x2^2", 3)]).unwrap();
        assert_eq!(cohomology(&arr, 0, 0).unwrap(), 1);
    }

    #[test]
    fn single_conic_twisted_sections() {
        let arr = Arrangement::new(2, vec![p("x0^2 + x1^2 - x2^2", 3)]).unwrap();
        assert_eq!(cohomology(&arr, 0, 1).unwrap(), 3);
    }

    #[test]
    fn three_planes_split() {
        let arr = Arrangement::new(3, vec![p("x0", 4), p("x1", 4), p("x2", 4)]).unwrap();
        let got = cohomology_table(&arr, -3, 3).unwrap();
        assert_eq!(got, CohomologyTable::of_split(3, &[0, 0, -1], -3, 3));
    }

    #[test]
    fn small_n_is_refused() {
        let arr = Arrangement::new(1, vec![p("x0", 2)]).unwrap();
        assert!(matches!(cohomology(&arr, 0, 0), Err(Error::Unsupported(_))));
    }
}
