//! Arrangements of hypersurfaces, normal-crossings tests for the supported
//! cases, and the Veronese lift to hyperplane arrangements.

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactpoly::{binomial, proportional, rat, BinaryForm, HomogeneousPoly, Rational, RationalMatrix, UniPoly};

/// How the smoothness of a component is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    /// Checked exactly (degree 1 or 2).
    Verified,
    /// Not checkable here; the caller vouches for it.
    Asserted,
    /// Degree at least 3 and nobody vouched for it.
    Unverified,
    /// A quadric of rank below `n + 1`.
    Singular,
}

/// An ordered family of distinct hypersurfaces `D_i = {f_i = 0}` in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    components: Vec<HomogeneousPoly>,
    smoothness: Vec<Smoothness>,
}

impl Arrangement {
    /// Validates the forms: `n + 1` variables, positive degree, pairwise
    /// projectively distinct. Smoothness is recorded, not enforced.
    pub fn new(n: usize, components: Vec<HomogeneousPoly>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArrangement("an arrangement needs at least one hypersurface".into()));
        }
        let mut smoothness = Vec::with_capacity(components.len());
        for (i, f) in components.iter().enumerate() {
            if f.nvars() != n + 1 {
                return Err(Error::InvalidArrangement(format!(
                    "component {i} has {} variables, expected {}",
                    f.nvars(),
                    n + 1
                )));
            }
            if f.is_zero() || f.degree() == 0 {
                return Err(Error::InvalidArrangement(format!("component {i} is constant")));
            }
            smoothness.push(match f.degree() {
                1 => Smoothness::Verified,
                2 => {
                    if f.to_symmetric()?.determinant()?.is_zero() {
                        Smoothness::Singular
                    } else {
                        Smoothness::Verified
                    }
                }
                _ => Smoothness::Unverified,
            });
        }
        for (i, j) in (0..components.len()).tuple_combinations() {
            if components[i].projectively_equal(&components[j]) {
                return Err(Error::InvalidArrangement(format!("components {i} and {j} coincide")));
            }
        }
        Ok(Self { n, components, smoothness })
    }

    /// Marks every component of degree at least 3 as smooth on the caller's
    /// word.
    pub fn assert_smooth(mut self) -> Self {
        for s in &mut self.smoothness {
            if *s == Smoothness::Unverified {
                *s = Smoothness::Asserted;
            }
        }
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[HomogeneousPoly] {
        &self.components
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.components.iter().map(HomogeneousPoly::degree).collect()
    }

    pub fn smoothness(&self) -> &[Smoothness] {
        &self.smoothness
    }

    /// Every component is verified or asserted smooth.
    pub fn is_smooth(&self) -> bool {
        self.smoothness.iter().all(|s| matches!(s, Smoothness::Verified | Smoothness::Asserted))
    }

    /// The common degree, or the list of degrees when they differ.
    pub fn common_degree(&self) -> Result<u32> {
        let ds = self.degrees();
        if ds.iter().all_equal() {
            Ok(ds[0])
        } else {
            Err(Error::MixedDegrees(ds))
        }
    }

    /// Applies the coordinate change `x = M y` to every component.
    pub fn transform(&self, m: &RationalMatrix) -> Result<Self> {
        let comps = self.components.iter().map(|f| f.substitute_linear(m)).collect::<Result<Vec<_>>>()?;
        let mut out = Self::new(self.n, comps)?;
        out.smoothness.clone_from(&self.smoothness);
        Ok(out)
    }
}

/// Hyperplanes of `P^N` given by their normal vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneArrangement {
    n: usize,
    normals: Vec<Vec<Rational>>,
}

impl HyperplaneArrangement {
    pub fn new(n: usize, normals: Vec<Vec<Rational>>) -> Result<Self> {
        for (i, v) in normals.iter().enumerate() {
            if v.len() != n + 1 {
                return Err(Error::DimensionMismatch(format!("normal {i} has length {}", v.len())));
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::InvalidArrangement(format!("normal {i} is zero")));
            }
        }
        for (i, j) in (0..normals.len()).tuple_combinations() {
            if proportional(&normals[i], &normals[j]) {
                return Err(Error::InvalidArrangement(format!("hyperplanes {i} and {j} coincide")));
            }
        }
        Ok(Self { n, normals })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn to_arrangement(&self) -> Result<Arrangement> {
        Arrangement::new(self.n, self.normals.iter().map(|v| HomogeneousPoly::linear(v)).collect())
    }
}

/// Two quadrics `x^T A x` and `x^T B x` in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPair {
    n: usize,
    a: RationalMatrix,
    b: RationalMatrix,
}

impl QuadricPair {
    /// Both matrices must be symmetric, nonsingular and not proportional.
    pub fn new(a: RationalMatrix, b: RationalMatrix) -> Result<Self> {
        if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() || a.rows() < 2 {
            return Err(Error::DimensionMismatch("quadric pair needs two square matrices of equal size".into()));
        }
        if !a.is_symmetric() || !b.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        for (name, m) in [("A", &a), ("B", &b)] {
            if m.determinant()?.is_zero() {
                return Err(Error::SingularMatrix(format!("{name} defines a singular quadric")));
            }
        }
        let flat = |m: &RationalMatrix| m.to_rows().concat();
        if proportional(&flat(&a), &flat(&b)) {
            return Err(Error::InvalidArrangement("the two quadrics coincide".into()));
        }
        Ok(Self { n: a.rows() - 1, a, b })
    }

    pub fn diagonal(a: &[Rational], b: &[Rational]) -> Result<Self> {
        Self::new(RationalMatrix::diagonal(a), RationalMatrix::diagonal(b))
    }

    pub fn from_arrangement(arr: &Arrangement) -> Result<Self> {
        if arr.len() != 2 || arr.degrees() != [2, 2] {
            return Err(Error::InvalidArrangement("expected exactly two quadrics".into()));
        }
        Self::new(arr.components()[0].to_symmetric()?, arr.components()[1].to_symmetric()?)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &RationalMatrix {
        &self.a
    }

    pub fn b(&self) -> &RationalMatrix {
        &self.b
    }

    pub fn to_arrangement(&self) -> Result<Arrangement> {
        Arrangement::new(
            self.n,
            vec![HomogeneousPoly::from_symmetric(&self.a)?, HomogeneousPoly::from_symmetric(&self.b)?],
        )
    }

    pub fn swapped(&self) -> Self {
        Self { n: self.n, a: self.b.clone(), b: self.a.clone() }
    }

    /// `(P^T A P, P^T B P)`.
    pub fn congruent(&self, p: &RationalMatrix) -> Result<Self> {
        let pt = p.transpose();
        Self::new(pt.mul(&self.a)?.mul(p)?, pt.mul(&self.b)?.mul(p)?)
    }

    /// The pencil determinant `det(sA + tB)`.
    pub fn pencil_determinant(&self) -> BinaryForm {
        // det(kA + B) = F(k, 1) has degree <= n + 1 in k
        let xs: Vec<Rational> = (0..=self.n as i64 + 1).map(rat).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|k| self.a.scale(k).add(&self.b).expect("same shape").determinant().expect("square"))
            .collect();
        let mut coeffs = UniPoly::interpolate(&xs, &ys).coeffs().to_vec();
        coeffs.resize(self.n + 2, Rational::zero());
        BinaryForm::new(coeffs)
    }
}

/// Every `k <= min(l, N + 1)` normals are linearly independent.
///
/// Checking the subsets of size exactly `min(l, N + 1)` suffices: any smaller
/// subset extends to one of that size, and a dependent subset stays
/// dependent.
pub fn hyperplanes_normal_crossings(h: &HyperplaneArrangement) -> bool {
    let k = h.len().min(h.ambient_dim() + 1);
    (0..h.len()).combinations(k).all(|idx| {
        let rows = idx.iter().map(|&i| h.normals()[i].clone()).collect();
        RationalMatrix::from_rows(rows).expect("equal lengths").rank() == k
    })
}

/// Normal crossings of a quadric pair: the pencil has `n + 1` distinct
/// singular members.
pub fn quadric_pair_normal_crossings(pair: &QuadricPair) -> bool {
    pair.pencil_determinant().distinct_roots().map(|r| r == pair.ambient_dim() + 1).unwrap_or(false)
}

/// Projection attempts before a shared resultant root is taken to be a real
/// triple point.
const TRIPLE_POINT_ATTEMPTS: usize = 12;
const TRIPLE_POINT_SEED: u64 = 0x7269_706c_6521;

/// Normal crossings for smooth conics in `P^2`: every pair crosses
/// transversally and no three conics share a point.
pub fn conic_arrangement_normal_crossings(arr: &Arrangement) -> Result<bool> {
    if arr.ambient_dim() != 2 || arr.degrees().iter().any(|&d| d != 2) {
        return Err(Error::Unsupported("conic normal crossings needs conics in P^2".into()));
    }
    if !arr.is_smooth() {
        return Err(Error::InvalidArrangement("conic normal crossings needs smooth conics".into()));
    }
    let comps = arr.components();
    for (i, j) in (0..comps.len()).tuple_combinations() {
        let pair = QuadricPair::new(comps[i].to_symmetric()?, comps[j].to_symmetric()?)?;
        if !quadric_pair_normal_crossings(&pair) {
            return Ok(false);
        }
    }
    for (i, j, k) in (0..comps.len()).tuple_combinations() {
        if has_common_point(&comps[i], &comps[j], &comps[k])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether three plane conics share a point.
///
/// After a random coordinate change with `f(0,0,1) != 0`, a common point
/// projects to a common root of `Res_x2(f, g)` and `Res_x2(f, h)`. Coprime
/// resultants certify that no common point exists; a shared root in every
/// attempt is taken as a common point.
pub fn has_common_point(f: &HomogeneousPoly, g: &HomogeneousPoly, h: &HomogeneousPoly) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(TRIPLE_POINT_SEED);
    for _ in 0..TRIPLE_POINT_ATTEMPTS {
        let m = random_invertible(&mut rng, 3);
        let (f2, g2, h2) = (f.substitute_linear(&m)?, g.substitute_linear(&m)?, h.substitute_linear(&m)?);
        if f2.coefficient(&crate::exactpoly::Monomial(vec![0, 0, 2])).is_zero() {
            continue;
        }
        let rg = resultant_x2(&f2, &g2);
        let rh = resultant_x2(&f2, &h2);
        if !rg.shares_root_with(&rh) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| rat(rng.gen_range(-9..=9))).collect()).collect();
        let m = RationalMatrix::from_rows(rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// `Res_x2(f, g)` of two ternary quadrics as a binary quartic in `(x0, x1)`,
/// recovered by interpolation along `x1 = 1`. Requires `f(0,0,1) != 0`.
fn resultant_x2(f: &HomogeneousPoly, g: &HomogeneousPoly) -> BinaryForm {
    let section = |p: &HomogeneousPoly, x0: &Rational| -> BinaryForm {
        // coefficients of x2^0, x2^1, x2^2 after x0 = k, x1 = 1
        let mut c = vec![Rational::zero(); 3];
        for (m, coeff) in p.terms() {
            let e = &m.0;
            let mut v = coeff.clone();
            for _ in 0..e[0] {
                v *= x0;
            }
            c[e[2] as usize] += v;
        }
        // BinaryForm coefficient k multiplies s^k t^(2-k); s = x2, t = 1
        BinaryForm::new(c)
    };
    let xs: Vec<Rational> = (0..5).map(rat).collect();
    let ys: Vec<Rational> = xs.iter().map(|x| section(f, x).resultant(&section(g, x))).collect();
    let mut coeffs = UniPoly::interpolate(&xs, &ys).coeffs().to_vec();
    coeffs.resize(5, Rational::zero());
    BinaryForm::new(coeffs)
}

/// Sends each degree-`d` hypersurface to the hyperplane of `P^N` whose normal
/// lists its coefficients in the monomial order, `N = C(n+d, d) - 1`.
pub fn veronese_lift(arr: &Arrangement) -> Result<HyperplaneArrangement> {
    let d = arr.common_degree()?;
    let n = arr.ambient_dim();
    let big_n = binomial((n + d as usize) as u64, d as u64) as usize - 1;
    HyperplaneArrangement::new(big_n, arr.components().iter().map(HomogeneousPoly::coefficient_vector).collect())
}

/// The Veronese image `nu_d(p)`: all degree-`d` monomials evaluated at `p`.
pub fn veronese_point(p: &[Rational], d: u32) -> Vec<Rational> {
    crate::exactpoly::monomial_basis(p.len(), d).iter().map(|m| m.eval(p)).collect()
}

/// `sum a_i b_i`.
pub fn pairing(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// The `i`-th standard basis vector of length `len`.
pub fn unit_vector(len: usize, i: usize) -> Vec<Rational> {
    (0..len).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;

    fn p(s: &str) -> HomogeneousPoly {
        HomogeneousPoly::parse(s, 3, 0).unwrap()
    }

    fn diag(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn hyperplanes(rows: &[&[i64]]) -> HyperplaneArrangement {
        let n = rows[0].len() - 1;
        HyperplaneArrangement::new(n, rows.iter().map(|r| diag(r)).collect()).unwrap()
    }

    #[test]
    fn hyperplane_examples() {
        assert!(hyperplanes_normal_crossings(&hyperplanes(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])));
        assert!(!hyperplanes_normal_crossings(&hyperplanes(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])));
        assert!(hyperplanes_normal_crossings(&hyperplanes(&[&[2, -1, 5]])));
    }

    #[test]
    fn exhaustive_subsets_agree_with_maximal_ones() {
        let h = hyperplanes(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let exhaustive = (1..=h.len().min(4)).all(|k| {
            (0..h.len()).combinations(k).all(|idx| {
                let rows = idx.iter().map(|&i| h.normals()[i].clone()).collect();
                RationalMatrix::from_rows(rows).unwrap().rank() == k
            })
        });
        assert_eq!(exhaustive, hyperplanes_normal_crossings(&h));
        assert!(!exhaustive);
    }

    #[test]
    fn quadric_pair_examples() {
        let good = QuadricPair::diagonal(&diag(&[1, 2, -1]), &diag(&[3, 5, -1])).unwrap();
        assert!(quadric_pair_normal_crossings(&good));
        let bad = QuadricPair::diagonal(&diag(&[1, 1, -1]), &diag(&[2, 2, -1])).unwrap();
        assert!(!quadric_pair_normal_crossings(&bad));
        assert!(QuadricPair::diagonal(&diag(&[1, 2, -1]), &diag(&[1, 2, -1])).is_err());
    }

    #[test]
    fn pencil_determinant_expands_correctly() {
        let good = QuadricPair::diagonal(&diag(&[1, 2, -1]), &diag(&[3, 5, -1])).unwrap();
        // -(s+3t)(2s+5t)(s+t) = -2s^3 - 13s^2 t - 26 s t^2 - 15 t^3
        assert_eq!(good.pencil_determinant().coeffs(), &diag(&[-15, -26, -13, -2])[..]);
    }

    #[test]
    fn conic_examples() {
        let f = p("x0^2 + 2*x1^2 - x2^2");
        let g = p("3*x0^2 + 5*x1^2 - x2^2");
        let two = Arrangement::new(2, vec![f.clone(), g.clone()]).unwrap();
        assert!(conic_arrangement_normal_crossings(&two).unwrap());
        let h = f.add(&g).unwrap();
        let three = Arrangement::new(2, vec![f.clone(), g.clone(), h]).unwrap();
        assert!(!conic_arrangement_normal_crossings(&three).unwrap());
        let one = Arrangement::new(2, vec![f]).unwrap();
        assert!(conic_arrangement_normal_crossings(&one).unwrap());
    }

    #[test]
    fn three_conics_without_common_point() {
        let a = p("x0^2 + 2*x1^2 - x2^2");
        let b = p("3*x0^2 + 5*x1^2 - x2^2");
        let c = p("x0^2 + x1^2 + x0*x2 - 7*x2^2");
        assert!(!has_common_point(&a, &b, &c).unwrap());
    }

    #[test]
    fn veronese_examples() {
        let f = Arrangement::new(2, vec![p("x0^2 + 2*x1^2 - x2^2"), p("x0*x1")]).unwrap();
        let lift = veronese_lift(&f).unwrap();
        assert_eq!(lift.ambient_dim(), 5);
        assert_eq!(lift.normals()[0], diag(&[1, 0, 0, 2, 0, -1]));
        assert_eq!(lift.normals()[1], diag(&[0, 1, 0, 0, 0, 0]));
        let pt = vec![ratio(1, 2), rat(-3), rat(7)];
        for (g, v) in f.components().iter().zip(lift.normals()) {
            assert_eq!(g.eval(&pt), pairing(v, &veronese_point(&pt, 2)));
        }
        let mixed = Arrangement::new(2, vec![p("x0"), p("x1^2 + x2^2 + x0^2")]).unwrap();
        assert!(matches!(veronese_lift(&mixed), Err(Error::MixedDegrees(_))));
    }

    #[test]
    fn arrangement_validation() {
        assert!(Arrangement::new(2, vec![]).is_err());
        assert!(Arrangement::new(2, vec![p("x0"), p("2*x0")]).is_err());
        let cone = Arrangement::new(2, vec![p("x0^2 - x1^2")]).unwrap();
        assert_eq!(cone.smoothness(), &[Smoothness::Singular]);
        assert!(!cone.is_smooth());
        let cubic = Arrangement::new(2, vec![p("x0^3 + x1^3 + x2^3")]).unwrap();
        assert_eq!(cubic.smoothness(), &[Smoothness::Unverified]);
        assert_eq!(cubic.assert_smooth().smoothness(), &[Smoothness::Asserted]);
    }
}
