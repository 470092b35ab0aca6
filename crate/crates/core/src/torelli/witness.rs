//! Direct search for an isomorphism between the resolutions of two quadric
//! pairs.
//!
//! An isomorphism of the bundles is a commuting square `M' N_1 = N_2 M''`
//! with `M'` a constant 2x2 matrix and `M''` of the shape `[E f; 0 theta]`
//! (`E` constant, `f` a column of linear forms). All unknowns enter
//! linearly, so the commuting maps form a vector space; the search looks
//! for an invertible member.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactpoly::{monomial_basis, rat, HomogeneousPoly, Monomial, Rational, RationalMatrix};
use crate::logres::{presentation, zero_entry, GradedMatrix};

/// Random specializations tried before the symbolic test.
pub const SPECIALIZATION_ATTEMPTS: usize = 32;

/// Invertible `M'` and `M''` with `M' N_1 = N_2 M''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub m1: RationalMatrix,
    pub m2: GradedMatrix,
}

struct Layout {
    nv: usize,
}

impl Layout {
    fn m1(&self, r: usize, k: usize) -> usize {
        2 * r + k
    }
    fn e(&self, k: usize, c: usize) -> usize {
        4 + k * self.nv + c
    }
    fn f(&self, k: usize, i: usize) -> usize {
        4 + self.nv * self.nv + k * self.nv + i
    }
    fn theta(&self) -> usize {
        4 + 2 * self.nv * self.nv
    }
    fn len(&self) -> usize {
        self.theta() + 1
    }
}

fn two_quadrics(arr: &Arrangement) -> Result<()> {
    if arr.len() != 2 || arr.degrees() != [2, 2] {
        return Err(Error::InvalidArrangement("expected exactly two quadrics".into()));
    }
    Ok(())
}

/// Matrix whose kernel is the space of commuting squares.
fn commuting_system(n1: &GradedMatrix, n2: &GradedMatrix, lay: &Layout) -> RationalMatrix {
    let nv = lay.nv;
    let s1 = monomial_basis(nv, 1);
    let s2 = monomial_basis(nv, 2);
    let idx =
        |b: &[Monomial]| -> HashMap<Monomial, usize> { b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect() };
    let (i1, i2) = (idx(&s1), idx(&s2));
    // entry (r, c) occupies a block of rows; columns c <= n have degree 1
    let block = |c: usize| if c < nv { s1.len() } else { s2.len() };
    let mut offsets = Vec::new();
    let mut total = 0;
    for _r in 0..2 {
        for c in 0..=nv {
            offsets.push(total);
            total += block(c);
        }
    }
    let off = |r: usize, c: usize| offsets[r * (nv + 1) + c];
    let mut sys = RationalMatrix::zeros(total, lay.len());
    let mut put = |r: usize, c: usize, unknown: usize, poly: &HomogeneousPoly, sign: &Rational| {
        let index = if c < nv { &i1 } else { &i2 };
        for (m, coeff) in poly.terms() {
            sys[(off(r, c) + index[m], unknown)] += coeff * sign;
        }
    };
    let plus = Rational::one();
    let minus = -Rational::one();
    for r in 0..2 {
        for c in 0..=nv {
            for k in 0..2 {
                put(r, c, lay.m1(r, k), n1.entry(k, c), &plus);
            }
        }
        for k in 0..nv {
            for c in 0..nv {
                put(r, c, lay.e(k, c), n2.entry(r, k), &minus);
            }
            for i in 0..nv {
                let g = n2.entry(r, k);
                if !g.is_zero() {
                    let prod = g.mul(&HomogeneousPoly::var(nv, i)).expect("same ring");
                    put(r, nv, lay.f(k, i), &prod, &minus);
                }
            }
        }
        put(r, nv, lay.theta(), n2.entry(r, nv), &minus);
    }
    sys
}

fn assemble(x: &[Rational], lay: &Layout) -> Result<IsoWitness> {
    let nv = lay.nv;
    let m1 = RationalMatrix::from_rows(vec![
        vec![x[lay.m1(0, 0)].clone(), x[lay.m1(0, 1)].clone()],
        vec![x[lay.m1(1, 0)].clone(), x[lay.m1(1, 1)].clone()],
    ])?;
    let twists: Vec<i64> = std::iter::repeat_n(1, nv).chain([0]).collect();
    let mut entries = Vec::with_capacity(nv + 1);
    for k in 0..nv {
        let mut row: Vec<HomogeneousPoly> =
            (0..nv).map(|c| HomogeneousPoly::constant(nv, x[lay.e(k, c)].clone())).collect();
        let coeffs: Vec<Rational> = (0..nv).map(|i| x[lay.f(k, i)].clone()).collect();
        row.push(HomogeneousPoly::linear(&coeffs));
        entries.push(row);
    }
    let mut last: Vec<HomogeneousPoly> = (0..nv).map(|_| zero_entry(nv, -1)).collect();
    last.push(HomogeneousPoly::constant(nv, x[lay.theta()].clone()));
    entries.push(last);
    Ok(IsoWitness { m1, m2: GradedMatrix::new(nv, twists.clone(), twists, entries)? })
}

impl IsoWitness {
    /// The constant block `E` of `M''`.
    pub fn e_block(&self) -> RationalMatrix {
        let nv = self.m2.rows() - 1;
        let rows =
            (0..nv).map(|k| (0..nv).map(|c| self.m2.entry(k, c).coefficient(&Monomial::one(nv))).collect()).collect();
        RationalMatrix::from_rows(rows).expect("square")
    }

    pub fn theta(&self) -> Rational {
        let nv = self.m2.rows() - 1;
        self.m2.entry(nv, nv).coefficient(&Monomial::one(nv))
    }

    /// `det M'` and `det M'' = theta det E`.
    pub fn determinants(&self) -> (Rational, Rational) {
        let d1 = self.m1.determinant().expect("square");
        let d2 = self.theta() * self.e_block().determinant().expect("square");
        (d1, d2)
    }

    /// Checks `M' N_1 = N_2 M''` as polynomial matrices and invertibility.
    pub fn verify(&self, a1: &Arrangement, a2: &Arrangement) -> Result<bool> {
        let n1 = presentation(a1)?;
        let n2 = presentation(a2)?;
        let m1 = GradedMatrix::new(
            n1.nvars(),
            n2.row_twists().to_vec(),
            n1.row_twists().to_vec(),
            self.m1
                .to_rows()
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|c| HomogeneousPoly::constant(n1.nvars(), c))
                        .map(|p| if p.is_zero() { zero_entry(n1.nvars(), 0) } else { p })
                        .collect()
                })
                .collect(),
        )?;
        let left = m1.mul(&n1)?;
        let right = n2.mul(&self.m2)?;
        let same = (0..left.rows()).all(|i| {
            (0..left.cols()).all(|j| {
                let (a, b) = (left.entry(i, j), right.entry(i, j));
                (a.is_zero() && b.is_zero()) || a == b
            })
        });
        let (d1, d2) = self.determinants();
        Ok(same && !d1.is_zero() && !d2.is_zero())
    }
}

fn combine(basis: &[Vec<Rational>], coeffs: &[Rational]) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); basis[0].len()];
    for (v, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += vi * c;
        }
    }
    x
}

fn laplace_det(m: &[Vec<HomogeneousPoly>], nvars: usize) -> HomogeneousPoly {
    let size = m.len();
    if size == 0 {
        return HomogeneousPoly::constant(nvars, Rational::one());
    }
    let mut acc: Option<HomogeneousPoly> = None;
    for j in 0..size {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<HomogeneousPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let mut term = m[0][j].mul(&laplace_det(&minor, nvars)).expect("same ring");
        if j % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term).expect("same degree"),
        });
    }
    acc.unwrap_or_else(|| HomogeneousPoly::zero(nvars, size as u32))
}

/// `det M' * theta * det E` as a form in the solution-space coordinates.
fn symbolic_determinant(basis: &[Vec<Rational>], lay: &Layout) -> HomogeneousPoly {
    let k = basis.len();
    let lin = |u: usize| -> HomogeneousPoly {
        let coeffs: Vec<Rational> = basis.iter().map(|v| v[u].clone()).collect();
        HomogeneousPoly::linear(&coeffs)
    };
    let nv = lay.nv;
    let m1 = vec![vec![lin(lay.m1(0, 0)), lin(lay.m1(0, 1))], vec![lin(lay.m1(1, 0)), lin(lay.m1(1, 1))]];
    let e: Vec<Vec<HomogeneousPoly>> = (0..nv).map(|r| (0..nv).map(|c| lin(lay.e(r, c))).collect()).collect();
    laplace_det(&m1, k).mul(&lin(lay.theta())).and_then(|p| p.mul(&laplace_det(&e, k))).expect("same ring")
}

/// A point `(1, v_2, ..., v_k)` with `v_i` in `0..=deg` where the nonzero
/// form `p` does not vanish.
fn nonvanishing_point(p: &HomogeneousPoly) -> Vec<Rational> {
    let k = p.nvars();
    let deg = p.degree() as i64;
    let mut point = vec![Rational::one()];
    // current form lives in (z, y_i, ..., y_k) with y_1 = z
    let mut cur = p.clone();
    for i in 1..k {
        let vars = cur.nvars();
        let mut chosen = None;
        for v in 0..=deg {
            let mut m = RationalMatrix::zeros(vars, vars - 1);
            m[(0, 0)] = Rational::one();
            m[(1, 0)] = rat(v);
            for j in 2..vars {
                m[(j, j - 1)] = Rational::one();
            }
            let next = cur.substitute_linear(&m).expect("shape");
            if !next.is_zero() {
                chosen = Some((v, next));
                break;
            }
        }
        let (v, next) = chosen.expect("a nonzero form has a non-root on the grid");
        point.push(rat(v));
        cur = next;
        debug_assert_eq!(point.len(), i + 1);
    }
    point
}

/// Searches the commuting squares for an invertible one.
pub fn iso_witness_oracle(a1: &Arrangement, a2: &Arrangement, seed: u64) -> Result<Option<IsoWitness>> {
    two_quadrics(a1)?;
    two_quadrics(a2)?;
    if a1.ambient_dim() != a2.ambient_dim() {
        return Err(Error::DimensionMismatch("pairs live in different spaces".into()));
    }
    let n1 = presentation(a1)?;
    let n2 = presentation(a2)?;
    let lay = Layout { nv: a1.ambient_dim() + 1 };
    let basis = commuting_system(&n1, &n2, &lay).kernel();
    if basis.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPECIALIZATION_ATTEMPTS {
        let coeffs: Vec<Rational> = (0..basis.len()).map(|_| rat(rng.gen_range(-10..=10))).collect();
        let w = assemble(&combine(&basis, &coeffs), &lay)?;
        let (d1, d2) = w.determinants();
        if !d1.is_zero() && !d2.is_zero() {
            return Ok(Some(w));
        }
    }
    let det = symbolic_determinant(&basis, &lay);
    if det.is_zero() {
        return Ok(None);
    }
    let w = assemble(&combine(&basis, &nonvanishing_point(&det)), &lay)?;
    Ok(Some(w))
}
