//! Reproduction suites, one per acceptance criterion.
//!
//! Each suite draws its randomness from `ChaCha8Rng::seed_from_u64(seed +
//! criterion)` and never aborts on a library error; the error becomes a
//! failed check instead.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use logbundle::arrangement::{quadric_pair_normal_crossings, unit_vector, Arrangement, QuadricPair};
use logbundle::exactpoly::{proportional, rat, ratio, HomogeneousPoly, Rational, RationalMatrix};
use logbundle::logres::{chern, chern_by_division, cohomology, cohomology_table, monad, splitting_on_line, Line};
use logbundle::sample;
use logbundle::torelli::{
    check_hypotheses, dual_pencil_equal, iso_witness_oracle, on_common_rnc, pencil_singular_points,
    quadric_pair_iso_conditions, recover_components, unstable_dim, IsoVerdict, PencilOutcome,
};
use logbundle::Result;

use crate::oracle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { label: label.into(), pass, detail: detail.into() }
    }
}

pub struct Suite {
    pub name: &'static str,
    pub criterion: usize,
    pub limit: Duration,
    run: fn(&mut ChaCha8Rng) -> Result<Vec<Check>>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub criterion: usize,
    pub limit: Duration,
    pub elapsed: Duration,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn checks_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn within_limit(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn passed(&self) -> bool {
        self.checks_pass() && self.within_limit()
    }

    pub fn summary_line(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        format!(
            "{} [{:>2}] {:<24} {:>3}/{:<3} checks  {:>8.3} s (limit {} s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            ok,
            self.checks.len(),
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "criterion": self.criterion,
            "passed": self.passed(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "limit_ms": self.limit.as_millis() as u64,
            "checks": self.checks.iter().map(|c| json!({"label": c.label, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
        })
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const SUITES: &[Suite] = &[
    Suite { name: "chern-quadric-pairs", criterion: 1, limit: secs(1), run: chern_quadric_pairs },
    Suite { name: "h0-quadric-pairs", criterion: 2, limit: secs(5), run: h0_quadric_pairs },
    Suite { name: "one-quadric", criterion: 3, limit: secs(5), run: one_quadric },
    Suite { name: "split-few-hyperplanes", criterion: 4, limit: secs(10), run: split_few_hyperplanes },
    Suite { name: "nc-criterion", criterion: 5, limit: secs(2), run: nc_criterion },
    Suite { name: "zero-locus", criterion: 6, limit: secs(5), run: zero_locus },
    Suite { name: "monad-identity", criterion: 7, limit: secs(10), run: monad_identity },
    Suite { name: "components-unstable", criterion: 8, limit: secs(30), run: components_unstable },
    Suite { name: "pair-torelli", criterion: 9, limit: secs(120), run: pair_torelli },
    Suite { name: "jumping-lines", criterion: 10, limit: secs(30), run: jumping_lines },
    Suite { name: "recovery", criterion: 11, limit: secs(300), run: recovery },
    Suite { name: "rnc", criterion: 12, limit: secs(5), run: rnc },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

impl Suite {
    pub fn run(&self, seed: u64) -> SuiteReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(self.criterion as u64));
        let start = Instant::now();
        let checks = match (self.run)(&mut rng) {
            Ok(c) => c,
            Err(e) => vec![Check::new("library call", false, e.to_string())],
        };
        SuiteReport { name: self.name, criterion: self.criterion, limit: self.limit, elapsed: start.elapsed(), checks }
    }
}

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn diag_pair(a: &[i64], b: &[i64]) -> Result<QuadricPair> {
    QuadricPair::diagonal(&v(a), &v(b))
}

fn chern_quadric_pairs(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let arr = sample::nc_diagonal_pair(rng, n).to_arrangement()?;
        let c = chern(&arr);
        let top = c.c(n);
        out.push(Check::new(
            format!("n = {n}"),
            top == n as i128 + 1 && chern_by_division(&arr) == c,
            format!("c_n = {top}"),
        ));
    }
    Ok(out)
}

fn h0_quadric_pairs(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 0..10 {
        let n = 2 + k % 2;
        let arr = sample::nc_quadric_pair(rng, n).to_arrangement()?;
        let h0 = cohomology(&arr, 0, 0)?;
        out.push(Check::new(format!("pair {k} in P^{n}"), h0 == 1, format!("h^0 = {h0}")));
    }
    Ok(out)
}

fn one_quadric(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=3 {
        let q = HomogeneousPoly::from_symmetric(&sample::nonsingular_symmetric(rng, n + 1, 4))?;
        let arr = Arrangement::new(n, vec![q])?;
        let table = cohomology_table(&arr, -3, 3)?;
        let expected = oracle::tangent_table(n, -2, -3, 3);
        let mismatches = expected.iter().filter(|(k, v)| table.entries.get(k) != Some(v)).count();
        out.push(Check::new(
            format!("n = {n}"),
            mismatches == 0 && table.entries.len() == expected.len(),
            format!("{mismatches} mismatching entries of {}", expected.len()),
        ));
    }
    Ok(out)
}

fn split_few_hyperplanes(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let bound = n as i64 + 1;
        for l in 1..=n + 2 {
            let arr = sample::general_hyperplanes(rng, n, l);
            let (expected, expected_chern, model) = if l <= n + 1 {
                let mut twists = vec![0; l - 1];
                twists.resize(n, -1);
                (oracle::split_table(n, &twists, -bound, bound), oracle::split_chern(n, &twists), "split")
            } else {
                (oracle::tangent_table(n, -1, -bound, bound), oracle::tangent_chern(n, -1), "T(-1)")
            };
            let table = cohomology_table(&arr, -bound, bound)?;
            let c = chern(&arr);
            let mismatches = expected.iter().filter(|(k, v)| table.entries.get(k) != Some(v)).count();
            out.push(Check::new(
                format!("n = {n}, l = {l} vs {model}"),
                mismatches == 0 && c.classes == expected_chern,
                format!("{mismatches} table mismatches, chern {:?}", c.classes),
            ));
        }
    }
    Ok(out)
}

fn nc_criterion(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let cases = [
        ("positive", diag_pair(&[1, 2, -1], &[3, 5, -1])?, true),
        ("negative", diag_pair(&[1, 1, -1], &[2, 2, -1])?, false),
    ];
    let mut out = Vec::new();
    for (name, pair, expected) in cases {
        out.push(Check::new(format!("{name} example"), quadric_pair_normal_crossings(&pair) == expected, ""));
        let mut agree = 0;
        for _ in 0..20 {
            let p = sample::invertible_matrix(rng, 3, 3);
            if quadric_pair_normal_crossings(&pair.congruent(&p)?) == expected {
                agree += 1;
            }
        }
        out.push(Check::new(format!("{name} example under congruences"), agree == 20, format!("{agree}/20 agree")));
    }
    Ok(out)
}

fn zero_locus(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let bases = [diag_pair(&[1, 2, -1], &[3, 5, -1])?, diag_pair(&[1, 2, 3, -1], &[3, 5, 7, -1])?];
    let mut out = Vec::new();
    for base in &bases {
        let n = base.ambient_dim();
        for k in 0..20 {
            let p = sample::invertible_matrix(rng, n + 1, 3);
            let pair = base.congruent(&p)?;
            let expected: Vec<Vec<Rational>> = {
                let inv = p.inverse()?;
                (0..=n).map(|i| inv.column(i)).collect()
            };
            let verdict = match pencil_singular_points(&pair) {
                PencilOutcome::Rational(a) => {
                    let mut ok = a.singular_points.len() == n + 1;
                    let mut matched = vec![false; n + 1];
                    let lambdas = a.eigenvalues.iter().flat_map(|(l, m)| std::iter::repeat_n(l, *m));
                    for (pt, l) in a.singular_points.iter().zip(lambdas) {
                        let m = pair.a().sub(&pair.b().scale(l))?;
                        ok &= m.mul_vec(pt)?.iter().all(Zero::is_zero);
                        match expected.iter().position(|e| proportional(e, pt)) {
                            Some(j) if !matched[j] => matched[j] = true,
                            _ => ok = false,
                        }
                    }
                    ok && matched.iter().all(|&m| m)
                }
                PencilOutcome::NeedsAlgebraicRoots { .. } => false,
            };
            out.push(Check::new(format!("P^{n} transform {k}"), verdict, ""));
        }
    }
    Ok(out)
}

fn monad_identity(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 0..100 {
        let n = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=4);
        let arr = sample::mixed_arrangement(rng, n, l, 3);
        let pass = match monad(&arr) {
            Ok(m) => m.nn.mul(&m.m)?.is_zero(),
            Err(_) => false,
        };
        out.push(Check::new(format!("arrangement {k}"), pass, format!("P^{n}, degrees {:?}", arr.degrees())));
    }
    Ok(out)
}

fn components_unstable(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 0..25 {
        let l = 2 + k % 4;
        let arr = sample::nc_conic_arrangement(rng, l);
        let dims = arr.components().iter().map(|c| unstable_dim(&arr, c)).collect::<Result<Vec<_>>>()?;
        out.push(Check::new(
            format!("arrangement {k} (l = {l})"),
            dims.iter().all(|&d| d >= 1),
            format!("dims {dims:?}"),
        ));
    }
    Ok(out)
}

/// A diagonal pair whose inverses lie in the span of the inverses of `p`.
fn pair_in_dual_pencil(rng: &mut ChaCha8Rng, p: &QuadricPair) -> QuadricPair {
    let n = p.ambient_dim();
    let diag = |m: &RationalMatrix| (0..n).map(|i| Rational::one() / &m[(i, i)]).collect::<Vec<_>>();
    let (ia, ib) = (diag(p.a()), diag(p.b()));
    let member = |alpha: &Rational| -> Option<Vec<Rational>> {
        let mut out = Vec::with_capacity(n + 1);
        for (x, y) in ia.iter().zip(&ib) {
            let inv = alpha * x + (Rational::one() - alpha) * y;
            if inv.is_zero() {
                return None;
            }
            out.push(Rational::one() / inv);
        }
        out.push(rat(-1));
        Some(out)
    };
    loop {
        let alpha = sample::nonzero_rational(rng, 5);
        let beta = sample::nonzero_rational(rng, 5);
        if alpha == beta || alpha.is_one() || beta.is_one() {
            continue;
        }
        if let (Some(c), Some(d)) = (member(&alpha), member(&beta)) {
            if let Ok(q) = QuadricPair::diagonal(&c, &d) {
                if quadric_pair_normal_crossings(&q) {
                    return q;
                }
            }
        }
    }
}

fn pair_torelli(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 0..200 {
        let n = if k < 100 { 2 } else { 3 };
        let p1 = sample::nc_diagonal_pair(rng, n);
        let p2 = if k % 2 == 0 { pair_in_dual_pencil(rng, &p1) } else { sample::nc_diagonal_pair(rng, n) };
        let dual = dual_pencil_equal(&p1, &p2)?;
        let (a1, a2) = (p1.to_arrangement()?, p2.to_arrangement()?);
        let witness = iso_witness_oracle(&a1, &a2, rng.gen())?;
        let verified = match &witness {
            Some(w) => w.verify(&a1, &a2)?,
            None => true,
        };
        let verdict = match quadric_pair_iso_conditions(&p1, &p2)? {
            PencilOutcome::Rational(c) => Some(c.verdict),
            PencilOutcome::NeedsAlgebraicRoots { .. } => None,
        };
        let found = witness.is_some();
        let logged = verdict == Some(IsoVerdict::OpenConditionDegenerate);
        let pass = verified && (found == dual || logged);
        let detail = format!(
            "dual pencils equal: {dual}, witness: {found}, verdict: {}{}",
            verdict.map_or("needs algebraic roots", crate::report::verdict),
            if found != dual && logged { " (logged open-condition failure)" } else { "" }
        );
        out.push(Check::new(format!("P^{n} pair {k}"), pass, detail));
    }
    Ok(out)
}

fn jumping_lines(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let arr = diag_pair(&[1, 2, -1], &[3, 5, -1])?.to_arrangement()?;
    let twist = -1;
    let rank = arr.ambient_dim() as i64;
    // c_1(Omega(log D)(t)) = -(n+1) + sum d_i + rank t
    let c1 = -3 + 4 + rank * twist;
    let mut lines = Vec::new();
    for (i, j) in [(1, 2), (0, 2), (0, 1)] {
        lines.push((
            format!("coordinate line x{}", 3 - i - j),
            Line::through(&unit_vector(3, i), &unit_vector(3, j))?,
            true,
        ));
    }
    while lines.len() < 53 {
        let p = sample::integer_vector(rng, 3, 6);
        let q = sample::integer_vector(rng, 3, 6);
        let in_coordinate_plane = (0..3).any(|i| p[i].is_zero() && q[i].is_zero());
        if in_coordinate_plane {
            continue;
        }
        if let Ok(line) = Line::through(&p, &q) {
            lines.push((format!("random line {}", lines.len() - 3), line, false));
        }
    }
    let mut out = Vec::new();
    for (label, line, jumping) in lines {
        let s = splitting_on_line(&arr, &line, twist)?;
        let pass = s.is_balanced() != jumping && s.first_chern() == c1;
        out.push(Check::new(label, pass, format!("splitting {:?}", s.degrees)));
    }
    Ok(out)
}

fn recovery(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let (arr, ledger) = loop {
        let arr = sample::nc_conic_arrangement(rng, 9);
        let ledger = check_hypotheses(&arr)?;
        if ledger.all_hold() {
            break (arr, ledger);
        }
    };
    let mut pool: Vec<(HomogeneousPoly, bool)> =
        arr.components().iter().map(|c| (c.scale(&sample::nonzero_rational(rng, 4)), true)).collect();
    while pool.len() < 29 {
        let d = sample::smooth_conic(rng);
        if !pool.iter().any(|(c, _)| c.projectively_equal(&d)) {
            pool.push((d, false));
        }
    }
    pool.shuffle(rng);
    let candidates: Vec<HomogeneousPoly> = pool.iter().map(|(c, _)| c.clone()).collect();
    let members: Vec<usize> = pool.iter().enumerate().filter(|(_, (_, m))| *m).map(|(i, _)| i).collect();
    let r = recover_components(&arr, &candidates)?;
    Ok(vec![
        Check::new(
            "hypotheses verified",
            ledger.all_hold() && r.hypotheses.all_hold(),
            format!("{:?}", r.hypotheses.warnings),
        ),
        Check::new(
            "recovered exactly the members",
            r.unstable == members,
            format!("unstable {:?}, members {members:?}", r.unstable),
        ),
    ])
}

fn rnc(rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for big_n in 2..=3 {
        let params: Vec<Rational> = (1..=big_n as i64 + 1).map(|k| rat(-k)).collect();
        for trial in 0..5 {
            let g = sample::invertible_matrix(rng, big_n + 1, 4);
            let mut ts: Vec<Rational> = Vec::new();
            while ts.len() < big_n + 4 {
                let t = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=4));
                if !params.contains(&t) && !ts.contains(&t) {
                    ts.push(t);
                }
            }
            let mut points = ts
                .iter()
                .map(|t| g.mul_vec(&params.iter().map(|a| Rational::one() / (t - a)).collect::<Vec<_>>()))
                .collect::<Result<Vec<_>>>()?;
            let on = on_common_rnc(&points)?;
            out.push(Check::new(format!("N = {big_n}, sample {trial}"), on, "constructed points"));
            let i = rng.gen_range(0..points.len());
            let j = rng.gen_range(0..=big_n);
            points[i][j] += sample::nonzero_rational(rng, 7);
            let verdict = on_common_rnc(&points);
            out.push(Check::new(
                format!("N = {big_n}, sample {trial} perturbed"),
                verdict == Ok(false),
                format!("point {i} coordinate {j}: {verdict:?}"),
            ));
        }
    }
    Ok(out)
}
