//! Matrices of maps between graded pieces of the polynomial ring.
//!
//! A map `sum_j O(a_j) -> sum_i O(b_i)` given by forms `m_ij` of degree
//! `b_i - a_j` induces, on global sections twisted by `k`, a linear map
//! `sum_j S_(a_j + k) -> sum_i S_(b_i + k)`. Rows index target monomials and
//! columns index source monomials, both in the fixed monomial order, blocks
//! laid out in summand order.

use std::collections::HashMap;

use super::matrix::RationalMatrix;
use super::poly::{monomial_basis, HomogeneousPoly, Monomial};
use crate::error::{Error, Result};

/// One target row: for every source summand, the multiplier and the twist
/// of that summand.
pub type GradedRow = Vec<(HomogeneousPoly, i64)>;

/// Builds the section-level matrix of a map described row by row.
///
/// `target_twists[i]` is the twist of target summand `i`; every nonzero
/// multiplier in that row must have degree `target_twists[i] - a_j`. All rows
/// must list the same source twists.
pub fn graded_piece_matrix(
    nvars: usize,
    rows: &[GradedRow],
    target_twists: &[i64],
    degree: i64,
) -> Result<RationalMatrix> {
    if rows.len() != target_twists.len() {
        return Err(Error::DimensionMismatch("one target twist per row required".into()));
    }
    let source_twists: Vec<i64> = match rows.first() {
        Some(r) => r.iter().map(|(_, a)| *a).collect(),
        None => Vec::new(),
    };
    for row in rows {
        if row.len() != source_twists.len() || row.iter().zip(&source_twists).any(|((_, a), b)| a != b) {
            return Err(Error::DimensionMismatch("rows disagree on the source summands".into()));
        }
    }
    for (row, &b) in rows.iter().zip(target_twists) {
        for (m, a) in row {
            if !m.is_zero() && i64::from(m.degree()) != b - a {
                return Err(Error::DegreeMismatch(format!(
                    "multiplier of degree {} between twists {a} and {b}",
                    m.degree()
                )));
            }
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch("multiplier in the wrong ring".into()));
            }
        }
    }
    let basis = |d: i64| if d < 0 { Vec::new() } else { monomial_basis(nvars, d as u32) };
    let src: Vec<Vec<Monomial>> = source_twists.iter().map(|a| basis(a + degree)).collect();
    let tgt: Vec<Vec<Monomial>> = target_twists.iter().map(|b| basis(b + degree)).collect();
    let src_off = offsets(&src);
    let tgt_off = offsets(&tgt);
    let tgt_index: Vec<HashMap<&Monomial, usize>> =
        tgt.iter().map(|b| b.iter().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let mut out = RationalMatrix::zeros(*tgt_off.last().unwrap(), *src_off.last().unwrap());
    for (i, row) in rows.iter().enumerate() {
        for (j, (mult, _)) in row.iter().enumerate() {
            if mult.is_zero() {
                continue;
            }
            for (c, sm) in src[j].iter().enumerate() {
                for (tm, coeff) in mult.terms() {
                    let prod = sm.mul(tm);
                    let r = tgt_index[i][&prod];
                    out[(tgt_off[i] + r, src_off[j] + c)] += coeff;
                }
            }
        }
    }
    Ok(out)
}

fn offsets(blocks: &[Vec<Monomial>]) -> Vec<usize> {
    let mut off = vec![0];
    for b in blocks {
        off.push(off.last().unwrap() + b.len());
    }
    off
}

/// Coordinates of `f * S_k` inside `S_(k + deg f)`: one column per monomial of
/// degree `k`.
pub fn multiple_space(f: &HomogeneousPoly, k: i64) -> RationalMatrix {
    let n = f.nvars();
    let target = i64::from(f.degree()) + k;
    let row: GradedRow = vec![(f.clone(), k)];
    graded_piece_matrix(n, &[row], &[target], 0).expect("degrees agree by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    fn p(s: &str) -> HomogeneousPoly {
        HomogeneousPoly::parse(s, 3, 0).unwrap()
    }

    #[test]
    fn multiplication_by_a_variable() {
        let m = graded_piece_matrix(3, &[vec![(p("x0"), 0)]], &[1], 0).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.cols(), 1);
        assert_eq!(m.column(0), vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn multiplication_by_zero() {
        let m = graded_piece_matrix(3, &[vec![(HomogeneousPoly::zero(3, 1), 0)]], &[1], 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 3));
        assert!(m.is_zero());
    }

    #[test]
    fn gradient_map_on_linear_forms() {
        let row = vec![(p("2*x0"), 1), (p("4*x1"), 1), (p("-2*x2"), 1)];
        let m = graded_piece_matrix(3, &[row], &[2], 0).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 9));
        // brute-force oracle: the images of the nine basis vectors, written by
        // hand as coefficient vectors in (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2)
        let linear = monomial_basis(3, 1);
        let mut images = Vec::new();
        for g in [p("2*x0"), p("4*x1"), p("-2*x2")].iter() {
            for mono in &linear {
                let lin = HomogeneousPoly::from_terms(3, 1, vec![(mono.0.clone(), rat(1))]).unwrap();
                images.push(g.mul(&lin).unwrap().coefficient_vector());
            }
        }
        assert_eq!(RationalMatrix::from_columns(&images).unwrap(), m);
        assert_eq!(m.rank(), 6);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err = graded_piece_matrix(3, &[vec![(p("x0^2"), 0)]], &[1], 0).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch(_)));
    }

    #[test]
    fn negative_pieces_are_empty() {
        let m = graded_piece_matrix(3, &[vec![(p("x0"), 0)]], &[1], -1).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 0));
    }
}
