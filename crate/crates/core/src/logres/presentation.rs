//! The length-one resolution of the logarithmic cotangent bundle and the
//! monad it comes from.

use super::graded::{zero_entry, GradedMatrix};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactpoly::{rat, HomogeneousPoly};

/// The matrix `N` of `0 -> Omega^dual -> O(1)^(n+1) + O^(l-1) -> sum O(d_i) -> 0`.
///
/// Row `i < l` is `(d_0 f_i, ..., d_n f_i, 0, .., f_i, .., 0)` with `f_i` in
/// trivial column `i`; the last row carries only the gradient.
pub fn presentation(arr: &Arrangement) -> Result<GradedMatrix> {
    let n = arr.ambient_dim();
    let l = arr.len();
    let nv = n + 1;
    let rows: Vec<i64> = arr.degrees().iter().map(|&d| i64::from(d)).collect();
    let cols: Vec<i64> = std::iter::repeat_n(1, nv).chain(std::iter::repeat_n(0, l - 1)).collect();
    let mut entries = Vec::with_capacity(l);
    for (i, f) in arr.components().iter().enumerate() {
        let mut row = f.grad();
        for (j, g) in row.iter_mut().enumerate() {
            if g.is_zero() {
                *g = zero_entry(nv, rows[i] - cols[j]);
            }
        }
        for k in 0..l - 1 {
            row.push(if k == i { f.clone() } else { zero_entry(nv, rows[i]) });
        }
        entries.push(row);
    }
    GradedMatrix::new(nv, rows, cols, entries)
}

/// The monad `O -> O(1)^(n+1) + O^l -> sum O(d_i)` of the proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monad {
    /// Column `(x_0, ..., x_n, -d_1, ..., -d_l)`.
    pub m: GradedMatrix,
    /// `[grad f_i | diag(f_i)]`.
    pub nn: GradedMatrix,
}

/// Builds the monad and checks `nn * m = 0` and that the reduction matrix
/// turns `nn` into `[N | 0]`.
pub fn monad(arr: &Arrangement) -> Result<Monad> {
    let n = arr.ambient_dim();
    let l = arr.len();
    let nv = n + 1;
    let degs: Vec<i64> = arr.degrees().iter().map(|&d| i64::from(d)).collect();
    let mid: Vec<i64> = std::iter::repeat_n(1, nv).chain(std::iter::repeat_n(0, l)).collect();

    let mut m_entries: Vec<Vec<HomogeneousPoly>> = (0..nv).map(|j| vec![HomogeneousPoly::var(nv, j)]).collect();
    for &d in &degs {
        m_entries.push(vec![HomogeneousPoly::constant(nv, rat(-d))]);
    }
    let m = GradedMatrix::new(nv, mid.clone(), vec![0], m_entries)?;

    let mut nn_entries = Vec::with_capacity(l);
    for (i, f) in arr.components().iter().enumerate() {
        let mut row: Vec<HomogeneousPoly> =
            f.grad().into_iter().map(|g| if g.is_zero() { zero_entry(nv, degs[i] - 1) } else { g }).collect();
        for k in 0..l {
            row.push(if k == i { f.clone() } else { zero_entry(nv, degs[i]) });
        }
        nn_entries.push(row);
    }
    let nn = GradedMatrix::new(nv, degs, mid.clone(), nn_entries)?;

    if !nn.mul(&m)?.is_zero() {
        return Err(Error::Consistency("monad composition does not vanish".into()));
    }

    // R = [ I_(n+l) over a zero row | m ]; nn * R = [ N | 0 ]
    let size = nv + l;
    let mut r_entries = Vec::with_capacity(size);
    for a in 0..size {
        let mut row = Vec::with_capacity(size);
        for b in 0..size - 1 {
            row.push(if a == b { HomogeneousPoly::constant(nv, rat(1)) } else { zero_entry(nv, mid[a] - mid[b]) });
        }
        row.push(m.entry(a, 0).clone());
        r_entries.push(row);
    }
    let mut r_cols = mid[..size - 1].to_vec();
    r_cols.push(0);
    let r = GradedMatrix::new(nv, mid, r_cols, r_entries)?;
    let reduced = nn.mul(&r)?;
    let keep: Vec<usize> = (0..size - 1).collect();
    let n_mat = presentation(arr)?;
    if reduced.select_cols(&keep) != n_mat || !reduced.select_cols(&[size - 1]).is_zero() {
        return Err(Error::Consistency("reduction does not reproduce the presentation".into()));
    }
    Ok(Monad { m, nn })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomogeneousPoly {
        HomogeneousPoly::parse(s, 3, 0).unwrap()
    }

    fn quadric_pair() -> Arrangement {
        Arrangement::new(2, vec![p("x0^2 + 2*x1^2 - x2^2"), p("3*x0^2 + 5*x1^2 - x2^2")]).unwrap()
    }

    #[test]
    fn quadric_pair_presentation() {
        let n = presentation(&quadric_pair()).unwrap();
        assert_eq!((n.rows(), n.cols()), (2, 4));
        let want = [["2*x0", "4*x1", "-2*x2", "x0^2 + 2*x1^2 - x2^2"], ["6*x0", "10*x1", "-2*x2", "0"]];
        for (i, row) in want.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                assert!(n.entry(i, j).is_zero() && *s == "0" || *n.entry(i, j) == p(s), "entry ({i}, {j})");
            }
        }
        assert_eq!(n.row_twists(), &[2, 2]);
        assert_eq!(n.col_twists(), &[1, 1, 1, 0]);
    }

    #[test]
    fn single_quadric_has_no_trivial_block() {
        let arr = Arrangement::new(2, vec![p("x0^2 + x1^2 - x2^2")]).unwrap();
        let n = presentation(&arr).unwrap();
        assert_eq!((n.rows(), n.cols()), (1, 3));
        assert_eq!(n.col_twists(), &[1, 1, 1]);
    }

    #[test]
    fn hyperplanes_have_linear_and_constant_entries() {
        let arr = Arrangement::new(2, vec![p("x0"), p("x1"), p("x2"), p("x0 + x1 + x2")]).unwrap();
        let n = presentation(&arr).unwrap();
        assert!(n.is_homogeneous());
        assert_eq!(n.row_twists(), &[1, 1, 1, 1]);
        assert_eq!(n.entry(0, 0), &HomogeneousPoly::constant(3, rat(1)));
        assert_eq!(n.entry(0, 3), &p("x0"));
    }

    #[test]
    fn monad_composes_to_zero() {
        let mo = monad(&quadric_pair()).unwrap();
        assert!(mo.nn.mul(&mo.m).unwrap().is_zero());
        assert_eq!(mo.m.entry(3, 0), &HomogeneousPoly::constant(3, rat(-2)));
        let single = Arrangement::new(2, vec![p("x0^3 + x1^2*x2")]).unwrap();
        assert!(monad(&single).is_ok());
    }

    #[test]
    fn positive_sign_would_not_compose() {
        // the column with +d_i gives 2 * d_i * f_i in row i
        let arr = quadric_pair();
        let mo = monad(&arr).unwrap();
        let mut flipped = mo.m.entries().to_vec();
        flipped[3][0] = HomogeneousPoly::constant(3, rat(2));
        flipped[4][0] = HomogeneousPoly::constant(3, rat(2));
        let plus = GradedMatrix::new(3, mo.m.row_twists().to_vec(), vec![0], flipped).unwrap();
        let prod = mo.nn.mul(&plus).unwrap();
        assert_eq!(prod.entry(0, 0), &arr.components()[0].scale(&rat(4)));
    }
}
