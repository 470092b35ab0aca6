//! Seeded random instances.

use num_traits::Zero;
use rand::Rng;

use crate::arrangement::{conic_arrangement_normal_crossings, quadric_pair_normal_crossings, Arrangement, QuadricPair};
use crate::exactpoly::{monomial_basis, rat, ratio, HomogeneousPoly, Rational, RationalMatrix};

/// A nonzero rational `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let p = rng.gen_range(-bound..=bound);
        if p != 0 {
            return ratio(p, rng.gen_range(1..=bound));
        }
    }
}

pub fn small_integer<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound))
}

pub fn integer_vector<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| small_integer(rng, bound)).collect()
}

pub fn invertible_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    loop {
        let rows = (0..n).map(|_| integer_vector(rng, n, bound)).collect();
        let m = RationalMatrix::from_rows(rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// A nonsingular symmetric matrix with small integer entries.
pub fn nonsingular_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    loop {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = small_integer(rng, bound);
                m[(i, j)] = x.clone();
                m[(j, i)] = x;
            }
        }
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// A nonzero form with integer coefficients.
pub fn form<R: Rng>(rng: &mut R, nvars: usize, degree: u32, bound: i64) -> HomogeneousPoly {
    loop {
        let terms = monomial_basis(nvars, degree).into_iter().map(|m| (m.0, small_integer(rng, bound)));
        let f = HomogeneousPoly::from_terms(nvars, degree, terms).expect("degrees agree");
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn smooth_conic<R: Rng>(rng: &mut R) -> HomogeneousPoly {
    HomogeneousPoly::from_symmetric(&nonsingular_symmetric(rng, 3, 5)).expect("symmetric")
}

/// A quadric pair in `P^n` with normal crossings.
pub fn nc_quadric_pair<R: Rng>(rng: &mut R, n: usize) -> QuadricPair {
    loop {
        let a = nonsingular_symmetric(rng, n + 1, 4);
        let b = nonsingular_symmetric(rng, n + 1, 4);
        if let Ok(p) = QuadricPair::new(a, b) {
            if quadric_pair_normal_crossings(&p) {
                return p;
            }
        }
    }
}

/// Diagonal `(a_0, ..., a_(n-1), -1)`, `(b_0, ..., b_(n-1), -1)` with normal
/// crossings.
pub fn nc_diagonal_pair<R: Rng>(rng: &mut R, n: usize) -> QuadricPair {
    loop {
        let mut a: Vec<Rational> = (0..n).map(|_| nonzero_rational(rng, 6)).collect();
        let mut b: Vec<Rational> = (0..n).map(|_| nonzero_rational(rng, 6)).collect();
        a.push(rat(-1));
        b.push(rat(-1));
        if let Ok(p) = QuadricPair::diagonal(&a, &b) {
            if quadric_pair_normal_crossings(&p) {
                return p;
            }
        }
    }
}

/// `l` smooth conics in `P^2` with normal crossings.
pub fn nc_conic_arrangement<R: Rng>(rng: &mut R, l: usize) -> Arrangement {
    loop {
        let comps = (0..l).map(|_| smooth_conic(rng)).collect();
        if let Ok(arr) = Arrangement::new(2, comps) {
            if conic_arrangement_normal_crossings(&arr).unwrap_or(false) {
                return arr;
            }
        }
    }
}

/// `l` hyperplanes of `P^n` with normal crossings.
pub fn general_hyperplanes<R: Rng>(rng: &mut R, n: usize, l: usize) -> Arrangement {
    loop {
        let normals: Vec<Vec<Rational>> = (0..l).map(|_| integer_vector(rng, n + 1, 5)).collect();
        if let Ok(h) = crate::arrangement::HyperplaneArrangement::new(n, normals) {
            if crate::arrangement::hyperplanes_normal_crossings(&h) {
                return h.to_arrangement().expect("valid hyperplanes");
            }
        }
    }
}

/// An arrangement of `l` forms with degrees drawn from `1..=max_degree`.
pub fn mixed_arrangement<R: Rng>(rng: &mut R, n: usize, l: usize, max_degree: u32) -> Arrangement {
    loop {
        let comps = (0..l)
            .map(|_| {
                let d = rng.gen_range(1..=max_degree);
                form(rng, n + 1, d, 4)
            })
            .collect();
        if let Ok(arr) = Arrangement::new(n, comps) {
            return arr;
        }
    }
}
