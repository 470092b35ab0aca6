//! Univariate polynomials and binary forms over the rationals.
//!
//! Everything needed to count distinct projective roots and to find rational
//! roots exactly: Euclidean gcd, squarefree parts, Sturm sequences and
//! Stern-Brocot reconstruction of the roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{format_rational, simplest_in_interval, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients indexed by power. No trailing
/// zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect(),
        )
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_part().degree().unwrap_or(0)
    }

    /// Squarefree decomposition `f = c * prod_k s_k^k` (Yun's algorithm);
    /// returns `(k, s_k)` for the nonconstant `s_k`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let fp = self.derivative();
        let mut a = self.gcd(&fp);
        let mut b = self.div_rem(&a).0;
        let mut c = fp.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((k, a.monic()));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        out
    }

    /// Interpolates the polynomial of degree `< xs.len()` through the points.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let mut acc = Self::zero();
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Self::linear_root(xj));
                    denom *= xi - xj;
                }
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }

    fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sturm chain of a (squarefree) polynomial.
    fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(r.neg());
        }
        chain
    }

    fn sign_changes(chain: &[Self], x: &Rational) -> usize {
        let signs: Vec<i8> = chain.iter().map(|p| p.sign_at(x)).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Exact rational roots with multiplicities, in increasing order.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let mut out = Vec::new();
        for (mult, factor) in self.squarefree_decomposition() {
            for r in factor.rational_roots_squarefree() {
                out.push((r, mult));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    fn rational_roots_squarefree(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else { return vec![] };
        if deg == 0 {
            return vec![];
        }
        // Rational roots of the primitive integer multiple have denominators
        // dividing its leading coefficient, so two of them differ by at least
        // 1/lead^2. Isolate each real root to that width and test the
        // simplest rational in the window.
        let lead = integer_leading_coefficient(self);
        let width = Rational::new(BigInt::one(), &lead * &lead * BigInt::from(2));
        let bound = self.cauchy_bound();
        let chain = self.sturm_chain();
        let mut roots = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = Self::sign_changes(&chain, &lo) - Self::sign_changes(&chain, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 {
                if let Some(r) = self.refine_single(&lo, &hi, &width) {
                    roots.push(r);
                }
                continue;
            }
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// One real root in `(lo, hi]`, squarefree polynomial. Returns the root if
    /// it is rational.
    fn refine_single(&self, lo: &Rational, hi: &Rational, width: &Rational) -> Option<Rational> {
        let two = Rational::from_integer(BigInt::from(2));
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        if self.sign_at(&hi) == 0 {
            return Some(hi);
        }
        let s_hi = self.sign_at(&hi);
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / &two;
            let s = self.sign_at(&mid);
            if s == 0 {
                return Some(mid);
            }
            if s == s_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let cand = simplest_in_interval(&lo, &hi);
        self.eval(&cand).is_zero().then_some(cand)
    }

    fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let m = self.coeffs.iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
        m + Rational::one()
    }
}

fn integer_leading_coefficient(p: &UniPoly) -> BigInt {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    (ints.last().unwrap() / g).abs()
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*x", format_rational(c)),
                _ => format!("{}*x^{i}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Binary form `F(s, t) = sum_k c_k s^k t^(d-k)` of declared degree `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    /// `coeffs[k]` multiplies `s^k t^(d-k)`; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs a declared degree");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Dehomogenization `F(s, 1)`.
    pub fn affine(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplicity of the root `[1:0]`, i.e. the power of `t` dividing `F`.
    pub fn multiplicity_at_infinity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Number of distinct roots in the projective line.
    pub fn distinct_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let at_inf = usize::from(self.multiplicity_at_infinity() > 0);
        Ok(self.affine().distinct_root_count() + at_inf)
    }

    /// Homogeneous (Sylvester) resultant of two binary forms.
    pub fn resultant(&self, other: &Self) -> Rational {
        let (m, n) = (self.degree(), other.degree());
        if m + n == 0 {
            return Rational::one();
        }
        let size = m + n;
        let mut syl = RationalMatrix::zeros(size, size);
        // coefficients in decreasing powers of s
        for r in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                syl[(r, r + k)] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                syl[(n + r, r + k)] = c.clone();
            }
        }
        syl.determinant().expect("square")
    }

    /// True when the two forms vanish at a common point of the projective
    /// line.
    pub fn shares_root_with(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return true;
        }
        if self.multiplicity_at_infinity() > 0 && other.multiplicity_at_infinity() > 0 {
            return true;
        }
        self.affine().gcd(&other.affine()).degree().unwrap_or(0) > 0
    }
}

impl std::fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self.degree();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}*s^{k}*t^{}", format_rational(c), d - k))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
