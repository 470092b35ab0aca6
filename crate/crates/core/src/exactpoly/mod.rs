//! Exact arithmetic: rationals, homogeneous polynomials, univariate and
//! binary forms, and dense linear algebra over the rationals.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sections;
pub mod univariate;

pub use matrix::{proportional, RationalMatrix};
pub use poly::{binomial, monomial_basis, monomial_count, HomogeneousPoly, Monomial};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use sections::{graded_piece_matrix, multiple_space, GradedRow};
pub use univariate::{BinaryForm, UniPoly};
