//! One report per command.

use std::fs;
use std::path::PathBuf;

use serde_json::{json, Map, Value};

use logbundle::arrangement::{
    conic_arrangement_normal_crossings, hyperplanes_normal_crossings, quadric_pair_normal_crossings, veronese_lift,
    Arrangement, HyperplaneArrangement,
};
use logbundle::exactpoly::{HomogeneousPoly, Rational};
use logbundle::io::{self, ArrangementInput, ArrangementJson, PointsJson, TwoPairsJson};
use logbundle::logres::{
    chern, chern_by_division, cohomology_table, monad, presentation, splitting_on_line, stability_certificate, Line,
};
use logbundle::torelli::{
    dual_pencil_equal, iso_witness_oracle, on_common_rnc, pencil_singular_points, quadric_pair_iso_conditions,
    recover_components, rnc_fit, unstable_dim, PencilOutcome,
};

use crate::report;
use crate::CliError;

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Present,
    MonadCheck,
    Chern,
    Cohomology,
    Stability,
    NcCheck,
    Veronese,
    Pencil,
    Zeroes,
    TorelliPair,
    IsoOracle,
    Unstable,
    Recover,
    Rnc,
    Splitting,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Present => "present",
            Self::MonadCheck => "monad-check",
            Self::Chern => "chern",
            Self::Cohomology => "cohomology",
            Self::Stability => "stability",
            Self::NcCheck => "nc-check",
            Self::Veronese => "veronese",
            Self::Pencil => "pencil",
            Self::Zeroes => "zeroes",
            Self::TorelliPair => "torelli-pair",
            Self::IsoOracle => "iso-oracle",
            Self::Unstable => "unstable",
            Self::Recover => "recover",
            Self::Rnc => "rnc",
            Self::Splitting => "splitting",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: PathBuf,
    pub seed: u64,
    pub twist_min: i64,
    pub twist_max: i64,
    pub twist: i64,
    pub candidates: Option<PathBuf>,
    pub line: Option<String>,
}

impl JobSpec {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        Self {
            command,
            input: input.into(),
            seed: DEFAULT_SEED,
            twist_min: -3,
            twist_max: 3,
            twist: 0,
            candidates: None,
            line: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.twist_min > self.twist_max {
            return Err(CliError::Usage(format!("empty twist range [{}, {}]", self.twist_min, self.twist_max)));
        }
        if self.command == Command::Recover && self.candidates.is_none() {
            return Err(CliError::Usage("recover needs --candidates".into()));
        }
        if self.command == Command::Splitting && self.line.is_none() {
            return Err(CliError::Usage("splitting needs --line".into()));
        }
        Ok(())
    }
}

/// Exit status and report of a successful run.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub report: Value,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn parse_line(text: &str) -> Result<(Vec<Rational>, Vec<Rational>), CliError> {
    let points: Vec<Vec<io::RationalText>> =
        serde_json::from_str(text).map_err(|e| CliError::Math(logbundle::Error::Parse(e.to_string())))?;
    if points.len() != 2 {
        return Err(CliError::Usage("--line takes exactly two points".into()));
    }
    Ok((io::rationals(&points[0])?, io::rationals(&points[1])?))
}

fn candidates(spec: &JobSpec, arr: &Arrangement) -> Result<(Vec<HomogeneousPoly>, Option<Value>), CliError> {
    match &spec.candidates {
        None => Ok((arr.components().to_vec(), None)),
        Some(path) => {
            let parsed: ArrangementJson = serde_json::from_str(&read(path)?)
                .map_err(|e| CliError::Math(logbundle::Error::Parse(e.to_string())))?;
            if parsed.n != arr.ambient_dim() {
                return Err(CliError::Usage("candidates live in a different projective space".into()));
            }
            let polys = parsed
                .hypersurfaces
                .iter()
                .map(|h| io::poly_from_json(h, parsed.n + 1))
                .collect::<Result<Vec<_>, _>>()?;
            let echo = ArrangementJson {
                n: parsed.n,
                hypersurfaces: polys.iter().map(io::poly_to_json).collect(),
                assert_smooth: false,
            };
            Ok((polys, Some(to_value(&echo))))
        }
    }
}

/// Normal crossings by whichever criterion applies.
fn normal_crossings(arr: &Arrangement) -> Result<(bool, &'static str), CliError> {
    let degrees = arr.degrees();
    if degrees.iter().all(|&d| d == 1) {
        return Ok((hyperplanes_normal_crossings(&veronese_lift(arr)?), "hyperplanes"));
    }
    if degrees == [2, 2] {
        let pair = logbundle::arrangement::QuadricPair::from_arrangement(arr)?;
        return Ok((quadric_pair_normal_crossings(&pair), "quadric-pencil"));
    }
    if arr.ambient_dim() == 2 && degrees.iter().all(|&d| d == 2) {
        return Ok((conic_arrangement_normal_crossings(arr)?, "conics"));
    }
    Err(CliError::Math(logbundle::Error::Unsupported(
        "normal crossings is decided for hyperplanes, quadric pairs and plane conics".into(),
    )))
}

fn witness_value(a1: &Arrangement, a2: &Arrangement, seed: u64) -> Result<Value, CliError> {
    Ok(match iso_witness_oracle(a1, a2, seed)? {
        Some(w) => {
            let ok = w.verify(a1, a2)?;
            report::witness(&w, ok)
        }
        None => Value::Null,
    })
}

pub fn run(spec: &JobSpec) -> Result<Outcome, CliError> {
    spec.validate()?;
    let text = read(&spec.input)?;
    let mut status = 0;
    let mut out = Map::new();
    out.insert("command".into(), json!(spec.command.name()));
    match spec.command {
        Command::TorelliPair | Command::IsoOracle => {
            let two: TwoPairsJson = io::parse_two_pairs(&text)?;
            let echo = TwoPairsJson { first: two.first.canonical()?, second: two.second.canonical()? };
            out.insert("input".into(), to_value(&echo));
            let p1 = two.first.to_pair()?;
            let p2 = two.second.to_pair()?;
            let (a1, a2) = (p1.to_arrangement()?, p2.to_arrangement()?);
            out.insert("seed".into(), json!(spec.seed));
            if spec.command == Command::TorelliPair {
                out.insert(
                    "normal_crossings".into(),
                    json!([quadric_pair_normal_crossings(&p1), quadric_pair_normal_crossings(&p2)]),
                );
                out.insert("dual_pencil_equal".into(), json!(dual_pencil_equal(&p1, &p2)?));
                let conditions = match quadric_pair_iso_conditions(&p1, &p2) {
                    Ok(PencilOutcome::Rational(c)) => report::iso_conditions(&c),
                    Ok(PencilOutcome::NeedsAlgebraicRoots { factors }) => {
                        status = 2;
                        json!({
                            "outcome": "needs_algebraic_roots",
                            "factors": factors.iter().map(report::univariate).collect::<Vec<_>>(),
                        })
                    }
                    Err(logbundle::Error::Unsupported(why)) => json!({"outcome": "unsupported", "reason": why}),
                    Err(e) => return Err(e.into()),
                };
                out.insert("iso_conditions".into(), conditions);
            }
            out.insert("witness".into(), witness_value(&a1, &a2, spec.seed)?);
        }
        Command::Rnc => {
            let points = io::parse_points(&text)?;
            let echo = PointsJson { points: points.iter().map(|p| io::texts(p)).collect() };
            out.insert("input".into(), to_value(&echo));
            let fit = rnc_fit(&points)?;
            out.insert("on_common_rnc".into(), json!(on_common_rnc(&points)?));
            out.insert(
                "fit".into(),
                match fit {
                    Some(c) => json!({"params": report::vector(&c.params), "to_frame": report::matrix(&c.to_frame)}),
                    None => Value::Null,
                },
            );
        }
        _ => {
            let input: ArrangementInput = io::parse_arrangement_input(&text)?;
            out.insert("input".into(), to_value(&input.canonical()?));
            let arr = input.to_arrangement()?;
            single(spec, &input, &arr, &mut out, &mut status)?;
        }
    }
    Ok(Outcome { status, report: Value::Object(out) })
}

fn single(
    spec: &JobSpec,
    input: &ArrangementInput,
    arr: &Arrangement,
    out: &mut Map<String, Value>,
    status: &mut i32,
) -> Result<(), CliError> {
    match spec.command {
        Command::Present => {
            out.insert("presentation".into(), report::graded(&presentation(arr)?));
        }
        Command::MonadCheck => {
            // `monad` fails unless both the composition and the reduction check
            let m = monad(arr)?;
            out.insert("M".into(), report::graded(&m.m));
            out.insert("N".into(), report::graded(&m.nn));
            out.insert("composition_zero".into(), json!(m.nn.mul(&m.m)?.is_zero()));
            out.insert("reduction_verified".into(), json!(true));
        }
        Command::Chern => {
            let c = chern(arr);
            out.insert("rank".into(), json!(c.rank));
            out.insert("chern".into(), Value::Array(c.classes.iter().map(|&x| report::integer(x)).collect()));
            out.insert("second_path_agrees".into(), json!(chern_by_division(arr) == c));
        }
        Command::Cohomology => {
            let table = cohomology_table(arr, spec.twist_min, spec.twist_max)?;
            out.insert("twist_min".into(), json!(spec.twist_min));
            out.insert("twist_max".into(), json!(spec.twist_max));
            out.insert("table".into(), report::cohomology(&table));
        }
        Command::Stability => {
            let s = stability_certificate(arr)?;
            out.insert("c1_dual".into(), json!(s.c1_dual));
            out.insert("slope".into(), json!(s.slope.to_string()));
            out.insert("criterion".into(), json!(s.criterion));
        }
        Command::NcCheck => {
            let (nc, method) = normal_crossings(arr)?;
            out.insert("normal_crossings".into(), json!(nc));
            out.insert("method".into(), json!(method));
        }
        Command::Veronese => {
            let lift: HyperplaneArrangement = veronese_lift(arr)?;
            out.insert("big_n".into(), json!(lift.ambient_dim()));
            out.insert("normals".into(), Value::Array(lift.normals().iter().map(|v| report::vector(v)).collect()));
        }
        Command::Pencil | Command::Zeroes => {
            let pair = input.to_pair()?;
            if spec.command == Command::Pencil {
                let det = pair.pencil_determinant();
                out.insert("pencil_determinant".into(), report::vector(det.coeffs()));
                out.insert("distinct_roots".into(), json!(det.distinct_roots()?));
                out.insert("normal_crossings".into(), json!(quadric_pair_normal_crossings(&pair)));
            } else {
                match pencil_singular_points(&pair) {
                    PencilOutcome::Rational(a) => {
                        out.insert("outcome".into(), json!("rational"));
                        out.insert(
                            "eigenvalues".into(),
                            Value::Array(
                                a.eigenvalues
                                    .iter()
                                    .map(|(l, m)| json!({"lambda": report::rational(l), "multiplicity": m}))
                                    .collect(),
                            ),
                        );
                        out.insert(
                            "singular_points".into(),
                            Value::Array(a.singular_points.iter().map(|v| report::vector(v)).collect()),
                        );
                        out.insert("normal_crossings".into(), json!(a.normal_crossings));
                    }
                    PencilOutcome::NeedsAlgebraicRoots { factors } => {
                        *status = 2;
                        out.insert("outcome".into(), json!("needs_algebraic_roots"));
                        out.insert("factors".into(), Value::Array(factors.iter().map(report::univariate).collect()));
                    }
                }
            }
        }
        Command::Unstable => {
            let (cands, echo) = candidates(spec, arr)?;
            if let Some(echo) = echo {
                out.insert("candidates".into(), echo);
            }
            let dims = cands.iter().map(|c| unstable_dim(arr, c)).collect::<Result<Vec<_>, _>>()?;
            out.insert("dims".into(), json!(dims));
        }
        Command::Recover => {
            let (cands, echo) = candidates(spec, arr)?;
            out.insert("candidates".into(), echo.unwrap_or(Value::Null));
            let r = recover_components(arr, &cands)?;
            out.insert("hypotheses".into(), report::ledger(&r.hypotheses));
            out.insert("dims".into(), json!(r.dims));
            out.insert("unstable".into(), json!(r.unstable));
            out.insert("claim_applies".into(), json!(r.hypotheses.all_hold()));
        }
        Command::Splitting => {
            let (p, q) = parse_line(spec.line.as_deref().unwrap_or_default())?;
            let split = splitting_on_line(arr, &Line::through(&p, &q)?, spec.twist)?;
            out.insert("line".into(), json!([report::vector(&p), report::vector(&q)]));
            out.insert("twist".into(), json!(spec.twist));
            out.insert("splitting".into(), json!(split.degrees));
            out.insert("first_chern".into(), json!(split.first_chern()));
            out.insert("balanced".into(), json!(split.is_balanced()));
        }
        Command::TorelliPair | Command::IsoOracle | Command::Rnc => unreachable!("dispatched in run"),
    }
    Ok(())
}
