//! Rational normal curves through points of `P^N`.
//!
//! Once the first `N + 2` points are moved to `e_0, ..., e_N, [1:...:1]`,
//! every rational normal curve through them is `t -> [1/(t - a_0) : ... :
//! 1/(t - a_N)]`, passing through `e_i` at `t = a_i` and through the unit
//! point at `t = infinity`. A further point `q` (with `q_0 = 1`) pins down
//! `a_i = -1/q_i`, making it the image of `t = 0`.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{Rational, RationalMatrix};

/// A rational normal curve in a standard frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rnc {
    /// Sends the first `N + 2` defining points to the standard frame.
    pub to_frame: RationalMatrix,
    /// Pairwise distinct `(a_0, ..., a_N)`.
    pub params: Vec<Rational>,
}

impl Rnc {
    /// The curve point at `t` (`None` is `t = infinity`) in the input
    /// coordinates.
    pub fn point(&self, t: Option<&Rational>) -> Vec<Rational> {
        let frame: Vec<Rational> = match t {
            None => vec![Rational::one(); self.params.len()],
            Some(t) => match self.params.iter().position(|a| a == t) {
                Some(i) => {
                    (0..self.params.len()).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
                }
                None => self.params.iter().map(|a| Rational::one() / (t - a)).collect(),
            },
        };
        let back = self.to_frame.inverse().expect("frame change is invertible");
        back.mul_vec(&frame).expect("dimensions agree")
    }

    /// Exact membership of a point.
    pub fn contains(&self, p: &[Rational]) -> bool {
        let Ok(q) = self.to_frame.mul_vec(p) else {
            return false;
        };
        if q.iter().all(Zero::is_zero) {
            return false;
        }
        let nonzero: Vec<usize> = (0..q.len()).filter(|&i| !q[i].is_zero()).collect();
        if nonzero.len() == 1 {
            return true;
        }
        if nonzero.len() < q.len() {
            return false;
        }
        if q.iter().all_equal() {
            return true;
        }
        // t - a_i = c / q_i for a common c != 0
        let a = &self.params;
        let denom = Rational::one() / &q[0] - Rational::one() / &q[1];
        if denom.is_zero() {
            return false;
        }
        let c = (&a[1] - &a[0]) / denom;
        if c.is_zero() {
            return false;
        }
        let t = &a[0] + &c / &q[0];
        q.iter().zip(a).all(|(qi, ai)| &t - ai == &c / qi)
    }
}

fn check_points(points: &[Vec<Rational>]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::DimensionMismatch("no points given".into()));
    };
    let len = first.len();
    if len < 2 || points.iter().any(|p| p.len() != len) {
        return Err(Error::DimensionMismatch("points must share a length of at least 2".into()));
    }
    Ok(len - 1)
}

/// Matrix sending `points[0..=N+1]` to `e_0, ..., e_N` and the unit point.
pub fn standard_frame(points: &[Vec<Rational>]) -> Result<RationalMatrix> {
    let n = check_points(points)?;
    if points.len() < n + 2 {
        return Err(Error::DimensionMismatch(format!("a frame of P^{n} needs {} points", n + 2)));
    }
    let p = RationalMatrix::from_columns(&points[..=n])?;
    if p.determinant()?.is_zero() {
        return Err(Error::GeneralPosition("the first N + 1 points are dependent".into()));
    }
    let lambda = p.solve(&points[n + 1])?.expect("invertible system");
    if lambda.iter().any(Zero::is_zero) {
        return Err(Error::GeneralPosition("N + 1 of the first N + 2 points are dependent".into()));
    }
    // T = P diag(lambda) sends e_i to lambda_i p_i and the unit point to p_(N+1)
    let t = p.mul(&RationalMatrix::diagonal(&lambda))?;
    t.inverse()
}

/// The rational normal curve through the first `N + 3` points, if any.
pub fn rnc_fit(points: &[Vec<Rational>]) -> Result<Option<Rnc>> {
    let n = check_points(points)?;
    if points.len() < n + 3 {
        return Err(Error::DimensionMismatch(format!("fitting in P^{n} needs {} points", n + 3)));
    }
    let to_frame = standard_frame(points)?;
    let q = to_frame.mul_vec(&points[n + 2])?;
    if q.iter().any(Zero::is_zero) {
        return Ok(None);
    }
    let params: Vec<Rational> = q.iter().map(|qi| -(&q[0] / qi)).collect();
    if !params.iter().all_unique() {
        return Ok(None);
    }
    Ok(Some(Rnc { to_frame, params }))
}

/// All points lie on one rational normal curve.
pub fn on_common_rnc(points: &[Vec<Rational>]) -> Result<bool> {
    let n = check_points(points)?;
    if points.len() < n + 3 {
        let k = points.len().min(n + 1);
        for idx in (0..points.len()).combinations(k) {
            let cols: Vec<Vec<Rational>> = idx.iter().map(|&i| points[i].clone()).collect();
            if RationalMatrix::from_columns(&cols)?.rank() < k {
                return Err(Error::GeneralPosition("points are dependent".into()));
            }
        }
        return Ok(true);
    }
    match rnc_fit(points)? {
        None => Ok(false),
        Some(curve) => Ok(points[n + 3..].iter().all(|p| curve.contains(p))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, ratio};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn five() -> Vec<Vec<Rational>> {
        pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[6, 3, 2]])
    }

    #[test]
    fn fit_through_standard_points() {
        let c = rnc_fit(&five()).unwrap().unwrap();
        assert_eq!(c.params, vec![rat(-1), rat(-2), rat(-3)]);
        let at0 = c.point(Some(&rat(0)));
        assert!(crate::exactpoly::proportional(&at0, &five()[4]));
    }

    #[test]
    fn membership() {
        let mut p = five();
        p.push(vec![rat(6), rat(4), rat(3)]);
        assert!(on_common_rnc(&p).unwrap());
        let mut p = five();
        p.push(vec![rat(1), rat(2), rat(3)]);
        assert!(!on_common_rnc(&p).unwrap());
    }

    #[test]
    fn fifth_point_with_repeated_coordinate() {
        // q = (1, 1, 2): a_0 = a_1 = -1, so no curve
        let p = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 1, 2]]);
        assert_eq!(rnc_fit(&p).unwrap(), None);
    }

    #[test]
    fn general_position_errors() {
        let p = pts(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 1, 1], &[6, 3, 2]]);
        assert!(matches!(rnc_fit(&p), Err(Error::GeneralPosition(_))));
        assert!(on_common_rnc(&pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, 3]])).unwrap());
    }

    #[test]
    fn frame_and_unit_points_are_members() {
        let c = rnc_fit(&five()).unwrap().unwrap();
        for p in five() {
            assert!(c.contains(&p));
        }
        assert!(c.contains(&c.point(Some(&ratio(7, 2)))));
        assert!(c.contains(&c.point(None)));
    }
}
