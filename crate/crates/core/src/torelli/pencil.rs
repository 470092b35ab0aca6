//! Pencils of quadrics: singular members, the common diagonal frame, dual
//! pencils and the isomorphism conditions for two pairs.

use num_traits::{One, Zero};

use crate::arrangement::{quadric_pair_normal_crossings, QuadricPair};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, Rational, RationalMatrix, UniPoly};

/// Singular members of the pencil and their vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilAnalysis {
    /// Roots of `det(A - lambda B)` with multiplicities, increasing.
    pub eigenvalues: Vec<(Rational, usize)>,
    /// Kernel vectors of `A - lambda B`, first nonzero entry 1, in
    /// eigenvalue order.
    pub singular_points: Vec<Vec<Rational>>,
    pub normal_crossings: bool,
}

/// Result of a computation that needs the pencil roots to be rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilOutcome<T> {
    Rational(T),
    /// Squarefree factors of `det(A - lambda B)` without rational roots.
    NeedsAlgebraicRoots {
        factors: Vec<UniPoly>,
    },
}

/// `det(A - lambda B)` as a polynomial in `lambda`.
pub fn characteristic(pair: &QuadricPair) -> UniPoly {
    let xs: Vec<Rational> = (0..=pair.ambient_dim() as i64 + 1).map(rat).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|l| pair.a().sub(&pair.b().scale(l)).expect("same shape").determinant().expect("square"))
        .collect();
    UniPoly::interpolate(&xs, &ys)
}

fn normalize(mut v: Vec<Rational>) -> Vec<Rational> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in &mut v {
            *x /= &lead;
        }
    }
    v
}

pub fn pencil_singular_points(pair: &QuadricPair) -> PencilOutcome<PencilAnalysis> {
    let chi = characteristic(pair);
    let eigenvalues = chi.rational_roots();
    let found: usize = eigenvalues.iter().map(|(_, m)| m).sum();
    if found < chi.degree().unwrap_or(0) {
        let mut rest = chi.clone();
        for (r, m) in &eigenvalues {
            for _ in 0..*m {
                rest = rest.div_rem(&UniPoly::linear_root(r)).0;
            }
        }
        let factors = rest.squarefree_decomposition().into_iter().map(|(_, f)| f.monic()).collect();
        return PencilOutcome::NeedsAlgebraicRoots { factors };
    }
    let mut singular_points = Vec::new();
    for (l, _) in &eigenvalues {
        let m = pair.a().sub(&pair.b().scale(l)).expect("same shape");
        singular_points.extend(m.kernel().into_iter().map(normalize));
    }
    PencilOutcome::Rational(PencilAnalysis {
        eigenvalues,
        singular_points,
        normal_crossings: quadric_pair_normal_crossings(pair),
    })
}

/// A frame `P` with `s_a P^T A P = diag(a)` and `s_b P^T B P = diag(b)`,
/// where both diagonals end in `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalFrame {
    pub p: RationalMatrix,
    pub scale_a: Rational,
    pub scale_b: Rational,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

pub fn simultaneous_diagonal_frame(pair: &QuadricPair) -> Result<PencilOutcome<DiagonalFrame>> {
    let analysis = match pencil_singular_points(pair) {
        PencilOutcome::Rational(a) => a,
        PencilOutcome::NeedsAlgebraicRoots { factors } => return Ok(PencilOutcome::NeedsAlgebraicRoots { factors }),
    };
    if !analysis.normal_crossings || analysis.singular_points.len() != pair.ambient_dim() + 1 {
        return Err(Error::DegenerateFrame("the pencil lacks n + 1 distinct singular members".into()));
    }
    let p = RationalMatrix::from_columns(&analysis.singular_points)?;
    let pt = p.transpose();
    let da = pt.mul(pair.a())?.mul(&p)?;
    let db = pt.mul(pair.b())?.mul(&p)?;
    if !da.is_diagonal() || !db.is_diagonal() {
        return Err(Error::Consistency("singular points do not diagonalize the pencil".into()));
    }
    let last = pair.ambient_dim();
    let (la, lb) = (da[(last, last)].clone(), db[(last, last)].clone());
    if la.is_zero() || lb.is_zero() {
        return Err(Error::DegenerateFrame("zero diagonal entry".into()));
    }
    let scale_a = -Rational::one() / la;
    let scale_b = -Rational::one() / lb;
    let a = (0..=last).map(|i| &da[(i, i)] * &scale_a).collect();
    let b = (0..=last).map(|i| &db[(i, i)] * &scale_b).collect();
    Ok(PencilOutcome::Rational(DiagonalFrame { p, scale_a, scale_b, a, b }))
}

fn upper_triangle(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.rows();
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| m[(i, j)].clone()).collect()
}

/// `span(A1^-1, B1^-1) = span(A2^-1, B2^-1)`.
pub fn dual_pencil_equal(p1: &QuadricPair, p2: &QuadricPair) -> Result<bool> {
    if p1.ambient_dim() != p2.ambient_dim() {
        return Err(Error::DimensionMismatch("pairs live in different spaces".into()));
    }
    let rows = [p1.a(), p1.b(), p2.a(), p2.b()]
        .iter()
        .map(|m| m.inverse().map(|inv| upper_triangle(&inv)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalMatrix::from_rows(rows)?.rank() == 2)
}

/// Structured outcome of the isomorphism conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    /// All equalities hold but an invertibility condition fails.
    OpenConditionDegenerate,
}

/// Residuals, open conditions and predicted second pair for
/// `Q_1 = diag(a, -1)`, `Q_2 = diag(b, -1)`, `Q'_1 = diag(c, -1)`,
/// `Q'_2 = diag(d, -1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoConditions {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
    /// One residual per `i = 1..=n`; the `i = 2` entry vanishes identically.
    pub first_residuals: Vec<Rational>,
    pub middle_residual: Rational,
    /// One residual per `i = 1..=n`; the `i = 1` entry vanishes identically.
    pub last_residuals: Vec<Rational>,
    /// Must be nonzero for `M'` to be invertible.
    pub open_m1: Rational,
    /// One per `i = 2..=n`; must be nonzero for `M''` to be invertible.
    pub open_m2: Vec<Rational>,
    /// `None` is `t = infinity`.
    pub t1: Option<Rational>,
    pub t2: Option<Rational>,
    /// Diagonal of the predicted `Q'_i` (without the final `-1`); `None`
    /// when an entry has a zero denominator.
    pub predicted_q1: Option<Vec<Rational>>,
    pub predicted_q2: Option<Vec<Rational>>,
    pub verdict: IsoVerdict,
}

fn t_parameter(a0: &Rational, b0: &Rational, c0: &Rational) -> Option<Rational> {
    let den = a0 * (c0 - b0);
    if den.is_zero() {
        None
    } else {
        Some(b0 * (a0 - c0) / den)
    }
}

fn predicted(a: &[Rational], b: &[Rational], t: &Option<Rational>) -> Option<Vec<Rational>> {
    a.iter()
        .zip(b)
        .map(|(ai, bi)| match t {
            None => Some(bi.clone()),
            Some(t) => {
                let den = bi + t * ai;
                if den.is_zero() {
                    None
                } else {
                    Some(ai * bi * (Rational::one() + t) / den)
                }
            }
        })
        .collect()
}

/// Evaluates the conditions on diagonal coefficients (each of length
/// `n >= 2`, the final `-1` omitted).
pub fn iso_conditions_from_diagonals(
    a: &[Rational],
    b: &[Rational],
    c: &[Rational],
    d: &[Rational],
) -> Result<IsoConditions> {
    let n = a.len();
    if n < 2 || b.len() != n || c.len() != n || d.len() != n {
        return Err(Error::Unsupported("isomorphism conditions need n >= 2 and equal lengths".into()));
    }
    let (a0, a1, b0, b1, c0, c1, d0, d1) = (&a[0], &a[1], &b[0], &b[1], &c[0], &c[1], &d[0], &d[1]);

    let first_residuals = (1..=n)
        .map(|i| {
            let (ai, ci, di) = (&a[i - 1], &c[i - 1], &d[i - 1]);
            a1 * ai * (c1 * di - ci * d1) + a1 * ci * di * (d1 - c1) + ai * c1 * d1 * (ci - di)
        })
        .collect();
    let middle_residual = a1 * b1 * (b0 - a0) * (c0 * d1 - c1 * d0) + c1 * d1 * (c0 - d0) * (a0 * b1 - a1 * b0);
    let last_residuals = (1..=n)
        .map(|i| {
            let (ai, bi, ci, di) = (&a[i - 1], &b[i - 1], &c[i - 1], &d[i - 1]);
            a1 * ai * b0 * (c0 - d0) * (ci * d1 - c1 * di)
                + a1 * b0 * bi * (d1 - c1) * (ci * d0 - c0 * di)
                + a0 * a1 * bi * (ci - di) * (c1 * d0 - c0 * d1)
                + c1 * d1 * (ci - di) * (c0 - d0) * (a0 * bi - ai * b0)
        })
        .collect();
    let open_m1 = a1 * (c1 * d0 - c0 * d1) + c1 * d1 * (c0 - d0);
    let open_m2: Vec<Rational> = (2..=n)
        .map(|i| {
            let (ai, bi) = (&a[i - 1], &b[i - 1]);
            c1 * (ai * b0 - a0 * bi) * (d1 * (d0 - c0) - a1 * d0)
                + a1 * c0 * (b0 * c1 * (ai - bi) + bi * d1 * (b0 - a0))
        })
        .collect();
    let t1 = t_parameter(a0, b0, c0);
    let t2 = t_parameter(a0, b0, d0);
    let predicted_q1 = predicted(a, b, &t1);
    let predicted_q2 = predicted(a, b, &t2);

    let mut out = IsoConditions {
        a: a.to_vec(),
        b: b.to_vec(),
        c: c.to_vec(),
        d: d.to_vec(),
        first_residuals,
        middle_residual,
        last_residuals,
        open_m1,
        open_m2,
        t1,
        t2,
        predicted_q1,
        predicted_q2,
        verdict: IsoVerdict::NotIsomorphic,
    };
    let equalities =
        out.first_residuals.iter().chain(&out.last_residuals).all(Zero::is_zero) && out.middle_residual.is_zero();
    let open = !out.open_m1.is_zero() && out.open_m2.iter().all(|x| !x.is_zero());
    out.verdict = match (equalities, open) {
        (false, _) => IsoVerdict::NotIsomorphic,
        (true, true) => IsoVerdict::Isomorphic,
        (true, false) => IsoVerdict::OpenConditionDegenerate,
    };
    Ok(out)
}

/// Expresses both pairs in the diagonal frame of the first and evaluates
/// the conditions.
pub fn quadric_pair_iso_conditions(p1: &QuadricPair, p2: &QuadricPair) -> Result<PencilOutcome<IsoConditions>> {
    if p1.ambient_dim() != p2.ambient_dim() {
        return Err(Error::DimensionMismatch("pairs live in different spaces".into()));
    }
    let frame = match simultaneous_diagonal_frame(p1)? {
        PencilOutcome::Rational(f) => f,
        PencilOutcome::NeedsAlgebraicRoots { factors } => return Ok(PencilOutcome::NeedsAlgebraicRoots { factors }),
    };
    let second = p2.congruent(&frame.p)?;
    if !second.a().is_diagonal() || !second.b().is_diagonal() {
        return Err(Error::Unsupported("the second pair is not diagonal in the frame of the first".into()));
    }
    let n = p1.ambient_dim();
    let normalized = |m: &RationalMatrix| -> Result<Vec<Rational>> {
        let last = &m[(n, n)];
        if last.is_zero() {
            return Err(Error::DegenerateFrame("zero diagonal entry".into()));
        }
        Ok((0..n).map(|i| -(&m[(i, i)] / last)).collect())
    };
    let c = normalized(second.a())?;
    let d = normalized(second.b())?;
    Ok(PencilOutcome::Rational(iso_conditions_from_diagonals(&frame.a[..n], &frame.b[..n], &c, &d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| rat(a)).collect()
    }

    fn base() -> QuadricPair {
        QuadricPair::diagonal(&v(&[1, 2, -1]), &v(&[3, 5, -1])).unwrap()
    }

    #[test]
    fn diagonal_pencil() {
        let PencilOutcome::Rational(a) = pencil_singular_points(&base()) else { panic!() };
        assert_eq!(a.eigenvalues, vec![(ratio(1, 3), 1), (ratio(2, 5), 1), (rat(1), 1)]);
        assert_eq!(a.singular_points, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(a.normal_crossings);
    }

    #[test]
    fn irrational_pencil() {
        // det(A - l B) = (2 - l^2)(1 - 2 l)
        let pair = QuadricPair::new(
            RationalMatrix::from_rows(vec![v(&[2, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap(),
            RationalMatrix::from_rows(vec![v(&[0, 1, 0]), v(&[1, 0, 0]), v(&[0, 0, 2])]).unwrap(),
        )
        .unwrap();
        match pencil_singular_points(&pair) {
            PencilOutcome::NeedsAlgebraicRoots { factors } => {
                assert_eq!(factors, vec![UniPoly::new(vec![rat(-2), rat(0), rat(1)])]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(simultaneous_diagonal_frame(&pair).unwrap(), PencilOutcome::NeedsAlgebraicRoots { .. }));
    }

    #[test]
    fn frame_of_congruent_pair() {
        let p = RationalMatrix::from_rows(vec![v(&[1, 2, 0]), v(&[0, 1, -1]), v(&[3, 0, 1])]).unwrap();
        let pair = base().congruent(&p).unwrap();
        let PencilOutcome::Rational(f) = simultaneous_diagonal_frame(&pair).unwrap() else { panic!() };
        let pt = f.p.transpose();
        assert!(pt.mul(pair.a()).unwrap().mul(&f.p).unwrap().is_diagonal());
        assert!(pt.mul(pair.b()).unwrap().mul(&f.p).unwrap().is_diagonal());
        // column scaling of the frame leaves a_i / b_i unchanged
        let ratios: Vec<Rational> = f.a.iter().zip(&f.b).map(|(x, y)| x / y).collect();
        assert_eq!(ratios, vec![ratio(1, 3), ratio(2, 5), rat(1)]);
        assert_eq!(f.a[2], rat(-1));
    }

    #[test]
    fn dual_pencils() {
        let pos = QuadricPair::diagonal(&[ratio(3, 2), ratio(20, 7), rat(-1)], &v(&[3, 5, -1])).unwrap();
        let neg = QuadricPair::diagonal(&v(&[1, 3, -1]), &v(&[3, 5, -1])).unwrap();
        assert!(dual_pencil_equal(&base(), &pos).unwrap());
        assert!(!dual_pencil_equal(&base(), &neg).unwrap());
        assert!(dual_pencil_equal(&base(), &base()).unwrap());
    }

    #[test]
    fn t_parameter_example() {
        let c = iso_conditions_from_diagonals(&v(&[1, 2]), &v(&[3, 5]), &v(&[2, 7]), &v(&[3, 5])).unwrap();
        assert_eq!(c.t1, Some(rat(3)));
        assert_eq!(c.predicted_q1, Some(vec![rat(2), ratio(40, 11)]));
        assert_eq!(c.t2, None);
        assert_eq!(c.predicted_q2, Some(v(&[3, 5])));
    }

    #[test]
    fn verdicts() {
        let pos = QuadricPair::diagonal(&[ratio(3, 2), ratio(20, 7), rat(-1)], &v(&[3, 5, -1])).unwrap();
        let neg = QuadricPair::diagonal(&v(&[1, 3, -1]), &v(&[3, 5, -1])).unwrap();
        let PencilOutcome::Rational(c) = quadric_pair_iso_conditions(&base(), &pos).unwrap() else { panic!() };
        assert_eq!(c.verdict, IsoVerdict::Isomorphic);
        assert!(c.first_residuals.iter().all(Zero::is_zero));
        let PencilOutcome::Rational(c) = quadric_pair_iso_conditions(&base(), &neg).unwrap() else { panic!() };
        assert_eq!(c.verdict, IsoVerdict::NotIsomorphic);
    }
}
