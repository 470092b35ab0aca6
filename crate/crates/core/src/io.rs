//! JSON forms of arrangements, quadric pairs and points.
//!
//! Rationals travel as strings `p/q`; plain JSON integers are accepted on
//! input.

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, QuadricPair};
use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, parse_rational, HomogeneousPoly, Rational, RationalMatrix};

/// A rational as written in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Integer(i64),
}

impl RationalText {
    pub fn value(&self) -> Result<Rational> {
        match self {
            Self::Text(s) => parse_rational(s),
            Self::Integer(i) => Ok(crate::exactpoly::rat(*i)),
        }
    }

    pub fn from_value(q: &Rational) -> Self {
        Self::Text(format_rational(q))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: RationalText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypersurfaceJson {
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementJson {
    pub n: usize,
    pub hypersurfaces: Vec<HypersurfaceJson>,
    /// Vouches for smoothness of components of degree at least 3.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub assert_smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadricPairJson {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<RationalText>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<RationalText>>,
}

/// Either input form of an arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ArrangementInput {
    Forms(ArrangementJson),
    Pair(QuadricPairJson),
}

/// Two arrangements compared against each other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoPairsJson {
    pub first: ArrangementInput,
    pub second: ArrangementInput,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsJson {
    pub points: Vec<Vec<RationalText>>,
}

pub fn rationals(v: &[RationalText]) -> Result<Vec<Rational>> {
    v.iter().map(RationalText::value).collect()
}

pub fn texts(v: &[Rational]) -> Vec<RationalText> {
    v.iter().map(RationalText::from_value).collect()
}

pub fn poly_from_json(h: &HypersurfaceJson, nvars: usize) -> Result<HomogeneousPoly> {
    let terms = h.terms.iter().map(|t| Ok((t.exp.clone(), t.coeff.value()?))).collect::<Result<Vec<_>>>()?;
    HomogeneousPoly::from_terms(nvars, h.degree, terms)
}

pub fn poly_to_json(f: &HomogeneousPoly) -> HypersurfaceJson {
    HypersurfaceJson {
        degree: f.degree(),
        terms: f.terms().map(|(m, c)| TermJson { exp: m.0.clone(), coeff: RationalText::from_value(c) }).collect(),
    }
}

fn matrix_from_json(rows: &[Vec<RationalText>]) -> Result<RationalMatrix> {
    RationalMatrix::from_rows(rows.iter().map(|r| rationals(r)).collect::<Result<Vec<_>>>()?)
}

fn matrix_to_json(m: &RationalMatrix) -> Vec<Vec<RationalText>> {
    m.to_rows().iter().map(|r| texts(r)).collect()
}

impl ArrangementInput {
    pub fn to_arrangement(&self) -> Result<Arrangement> {
        match self {
            Self::Forms(a) => {
                let polys = a.hypersurfaces.iter().map(|h| poly_from_json(h, a.n + 1)).collect::<Result<Vec<_>>>()?;
                let arr = Arrangement::new(a.n, polys)?;
                Ok(if a.assert_smooth { arr.assert_smooth() } else { arr })
            }
            Self::Pair(_) => self.to_pair()?.to_arrangement(),
        }
    }

    pub fn to_pair(&self) -> Result<QuadricPair> {
        match self {
            Self::Pair(p) => {
                let pair = QuadricPair::new(matrix_from_json(&p.a)?, matrix_from_json(&p.b)?)?;
                if pair.ambient_dim() != p.n {
                    return Err(Error::DimensionMismatch(format!(
                        "matrices are {0}x{0} but n = {1}",
                        pair.ambient_dim() + 1,
                        p.n
                    )));
                }
                Ok(pair)
            }
            Self::Forms(_) => QuadricPair::from_arrangement(&self.to_arrangement()?),
        }
    }

    /// Canonical re-serialization in the same form as the input.
    pub fn canonical(&self) -> Result<Self> {
        match self {
            Self::Forms(a) => {
                let arr = self.to_arrangement()?;
                let mut out = arrangement_to_json(&arr);
                out.assert_smooth = a.assert_smooth;
                Ok(Self::Forms(out))
            }
            Self::Pair(_) => Ok(Self::Pair(pair_to_json(&self.to_pair()?))),
        }
    }
}

pub fn arrangement_to_json(arr: &Arrangement) -> ArrangementJson {
    ArrangementJson {
        n: arr.ambient_dim(),
        hypersurfaces: arr.components().iter().map(poly_to_json).collect(),
        assert_smooth: false,
    }
}

pub fn pair_to_json(p: &QuadricPair) -> QuadricPairJson {
    QuadricPairJson { n: p.ambient_dim(), a: matrix_to_json(p.a()), b: matrix_to_json(p.b()) }
}

pub fn parse_arrangement_input(text: &str) -> Result<ArrangementInput> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_two_pairs(text: &str) -> Result<TwoPairsJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_points(text: &str) -> Result<Vec<Vec<Rational>>> {
    let p: PointsJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    p.points.iter().map(|v| rationals(v)).collect()
}
