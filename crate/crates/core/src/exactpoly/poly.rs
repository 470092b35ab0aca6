//! Homogeneous polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector of a monomial `x0^e0 * x1^e1 * ...`.
///
/// Ordered graded-lexicographically with `x0 > x1 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Evaluates the monomial at a point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for (x, &e) in point.iter().zip(&self.0) {
            for _ in 0..e {
                acc *= x;
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given degree in `nvars` variables, largest first in
/// graded-lex order (`x0^d, x0^(d-1) x1, ...`).
pub fn monomial_basis(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(nvars, 0, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Number of monomials of degree `degree` in `nvars` variables; zero for
/// negative degrees.
pub fn monomial_count(nvars: usize, degree: i64) -> usize {
    if degree < 0 || nvars == 0 {
        return usize::from(degree == 0 && nvars == 0);
    }
    binomial(nvars as u64 - 1 + degree as u64, nvars as u64 - 1) as usize
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// A homogeneous polynomial in a fixed number of variables.
///
/// The zero polynomial keeps a declared degree so that degree bookkeeping in
/// graded matrices stays decidable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPoly {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        Self { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars, 0);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars, 1);
        p.add_term(Monomial::var(nvars, i), Rational::one());
        p
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, all of the
    /// declared degree.
    pub fn from_terms(
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars, degree);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector {e:?} has length {} but there are {nvars} variables",
                    e.len()
                )));
            }
            let m = Monomial(e);
            if m.degree() != degree {
                return Err(Error::DegreeMismatch(format!(
                    "monomial {:?} has degree {} in a form of degree {degree}",
                    m.0,
                    m.degree()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Quadratic form `x^T A x` of a symmetric matrix.
    pub fn from_symmetric(a: &RationalMatrix) -> Result<Self> {
        if !a.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = a.rows();
        let mut p = Self::zero(n, 2);
        for i in 0..n {
            for j in i..n {
                let c = if i == j { a[(i, i)].clone() } else { &a[(i, j)] * Rational::from_integer(BigInt::from(2)) };
                p.add_term(Monomial::var(n, i).mul(&Monomial::var(n, j)), c);
            }
        }
        Ok(p)
    }

    /// Symmetric Gram matrix of a quadratic form.
    pub fn to_symmetric(&self) -> Result<RationalMatrix> {
        if self.degree != 2 {
            return Err(Error::DegreeMismatch("Gram matrix requires a quadratic form".into()));
        }
        let n = self.nvars;
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let mut a = RationalMatrix::zeros(n, n);
        for (m, c) in &self.terms {
            let idx: Vec<usize> =
                m.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                a[(i, i)] = c.clone();
            } else {
                a[(i, j)] = c * &half;
                a[(j, i)] = c * &half;
            }
        }
        Ok(a)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical order (largest monomial first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient vector in the order of [`monomial_basis`].
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        monomial_basis(self.nvars, self.degree).iter().map(|m| self.coefficient(m)).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars, self.degree);
        }
        Self {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch("multiplying forms in different rings".into()));
        }
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rational::one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms.iter().map(|(m, c)| c * m.eval(point)).sum()
    }

    /// Partial derivative with respect to `x_j`.
    pub fn partial(&self, j: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[j] -= 1;
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// The gradient `(d_0 f, ..., d_n f)`.
    pub fn grad(&self) -> Vec<Self> {
        (0..self.nvars).map(|j| self.partial(j)).collect()
    }

    /// `sum_j x_j d_j f`, which equals `deg(f) * f` for homogeneous `f`.
    pub fn euler_contract(&self) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (j, d) in self.grad().into_iter().enumerate() {
            let t = Self::var(self.nvars, j).mul(&d).expect("same ring");
            if !t.is_zero() {
                out = out.add(&t).expect("degree matches");
            }
        }
        out
    }

    /// Substitutes `x_i = sum_j m[i][j] y_j`, producing a form in `m.cols()`
    /// variables.
    pub fn substitute_linear(&self, m: &RationalMatrix) -> Result<Self> {
        if m.rows() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "substitution matrix has {} rows for {} variables",
                m.rows(),
                self.nvars
            )));
        }
        let k = m.cols();
        let forms: Vec<Self> = (0..self.nvars).map(|i| Self::linear(m.row(i))).collect();
        let mut powers: Vec<Vec<Self>> = forms.iter().map(|_| vec![Self::constant(k, Rational::one())]).collect();
        let mut out = Self::zero(k, self.degree);
        for (mono, c) in &self.terms {
            let mut t = Self::constant(k, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize])?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// True when `self = c * other` for a nonzero scalar `c`.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.nvars != other.nvars || self.degree != other.degree {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let a = self.coefficient_vector();
        let b = other.coefficient_vector();
        super::matrix::proportional(&a, &b)
    }

    /// Parses the text form `c*x0^e0*x1^e1 + ...`. The degree is inferred from
    /// the first term unless the polynomial is zero, in which case
    /// `zero_degree` is used.
    pub fn parse(text: &str, nvars: usize, zero_degree: u32) -> Result<Self> {
        let normalized = text.replace(' ', "");
        let mut terms: Vec<(Vec<u32>, Rational)> = Vec::new();
        let mut chunks = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in normalized.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !matches!(prev, Some('^' | '*' | '+' | '-')) {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        if !cur.is_empty() {
            chunks.push(cur);
        }
        for chunk in chunks {
            let (sign, body) = match chunk.strip_prefix('+') {
                Some(rest) => (1, rest.to_string()),
                None => match chunk.strip_prefix('-') {
                    Some(rest) => (-1, rest.to_string()),
                    None => (1, chunk.clone()),
                },
            };
            let mut coeff = Rational::from_integer(BigInt::from(sign));
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {chunk:?}")));
                }
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, e) = match var.split_once('^') {
                        Some((i, e)) => {
                            (i, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?)
                        }
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    if idx >= nvars {
                        return Err(Error::Parse(format!("variable x{idx} out of range for {nvars} variables")));
                    }
                    exps[idx] += e;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            terms.push((exps, coeff));
        }
        let degree = terms.first().map_or(zero_degree, |(e, _)| e.iter().sum());
        if terms.iter().all(|(_, c)| c.is_zero()) {
            return Ok(Self::zero(nvars, zero_degree));
        }
        Self::from_terms(nvars, degree, terms)
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [deg {} in {} vars]", self.degree, self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    fn p(s: &str, n: usize) -> HomogeneousPoly {
        HomogeneousPoly::parse(s, n, 0).unwrap()
    }

    #[test]
    fn gradient_of_diagonal_quadric() {
        let f = p("x0^2 + 2*x1^2 - x2^2", 3);
        let g = f.grad();
        assert_eq!(g[0], p("2*x0", 3));
        assert_eq!(g[1], p("4*x1", 3));
        assert_eq!(g[2], p("-2*x2", 3));
    }

    #[test]
    fn gradient_of_linear_and_cubic() {
        let g = p("x0", 4).grad();
        assert_eq!(g[0], HomogeneousPoly::constant(4, rat(1)));
        assert!(g[1..].iter().all(|d| d.is_zero() && d.degree() == 0));
        let h = p("x0*x1*x2", 3).grad();
        assert_eq!(h, vec![p("x1*x2", 3), p("x0*x2", 3), p("x0*x1", 3)]);
    }

    #[test]
    fn euler_identity_examples() {
        let f = p("x0^2 + 2*x1^2 - x2^2", 3);
        assert_eq!(f.euler_contract(), f.scale(&rat(2)));
        let c = HomogeneousPoly::constant(3, rat(5));
        assert!(c.euler_contract().is_zero());
        let g = p("x0^3 + x1^2*x2", 3);
        assert_eq!(g.euler_contract(), g.scale(&rat(3)));
    }

    #[test]
    fn basis_order_and_sizes() {
        let b = monomial_basis(3, 2);
        let want: Vec<Vec<u32>> =
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]];
        assert_eq!(b.iter().map(|m| m.0.clone()).collect::<Vec<_>>(), want);
        assert_eq!(monomial_basis(2, 0).len(), 1);
        assert_eq!(monomial_basis(4, 3).len(), 20);
        assert_eq!(monomial_count(4, 3), 20);
        assert_eq!(monomial_count(3, -1), 0);
        // strictly decreasing in the monomial order
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn text_form_round_trip() {
        let f = p("3/2*x0^2*x1 - x1^3 + 7*x0*x1*x2", 3);
        assert_eq!(f.to_string(), "3/2*x0^2*x1^1 + 7*x0^1*x1^1*x2^1 + -1*x1^3");
        assert_eq!(p(&f.to_string(), 3), f);
        assert!(HomogeneousPoly::parse("x0 + x1^2", 2, 0).is_err());
        assert!(HomogeneousPoly::parse("x3", 3, 0).is_err());
    }

    #[test]
    fn symmetric_matrix_round_trip() {
        let f = p("x0^2 + 4*x0*x1 - 3*x1*x2 + x2^2", 3);
        let a = f.to_symmetric().unwrap();
        assert_eq!(HomogeneousPoly::from_symmetric(&a).unwrap(), f);
    }

    #[test]
    fn linear_substitution() {
        // x0 -> y0 + y1, x1 -> y1
        let m = RationalMatrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]]).unwrap();
        let f = p("x0*x1", 2);
        assert_eq!(f.substitute_linear(&m).unwrap(), p("x0*x1 + x1^2", 2));
    }

    #[test]
    fn projective_equality() {
        let f = p("x0^2 - x1^2", 2);
        assert!(f.projectively_equal(&f.scale(&rat(-3))));
        assert!(!f.projectively_equal(&p("x0^2 + x1^2", 2)));
    }
}
