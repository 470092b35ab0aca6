//! Chern classes and the slope-stability criterion.

use num_rational::Ratio;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};

/// Total Chern class `1 + c_1 h + ... + c_n h^n` of a rank-`n` bundle on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector {
    pub rank: usize,
    /// `(c_1, ..., c_n)`.
    pub classes: Vec<i128>,
}

impl ChernVector {
    pub fn c(&self, k: usize) -> i128 {
        if k == 0 {
            1
        } else {
            self.classes[k - 1]
        }
    }
}

/// Truncated product of power series (coefficients up to `h^len-1`).
fn series_mul(a: &[i128], b: &[i128], len: usize) -> Vec<i128> {
    let mut out = vec![0; len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 - h)^(n+1) / prod (1 - d_i h)` mod `h^(n+1)`, multiplying in the
/// geometric series `1 / (1 - d h) = sum d^k h^k`.
pub fn chern(arr: &Arrangement) -> ChernVector {
    let n = arr.ambient_dim();
    let len = n + 1;
    let mut acc = vec![0i128; len];
    acc[0] = 1;
    for _ in 0..=n {
        acc = series_mul(&acc, &[1, -1], len);
    }
    for d in arr.degrees() {
        let d = i128::from(d);
        let geom: Vec<i128> = (0..len as u32).map(|k| d.pow(k)).collect();
        acc = series_mul(&acc, &geom, len);
    }
    ChernVector { rank: n, classes: acc[1..].to_vec() }
}

/// Same class from `c(Omega_P) / c(sum O(-d_i))`: expand numerator and
/// denominator as polynomials, then divide as power series.
pub fn chern_by_division(arr: &Arrangement) -> ChernVector {
    let n = arr.ambient_dim();
    let len = n + 1;
    let mut num = vec![0i128; len];
    for (k, c) in num.iter_mut().enumerate() {
        // coefficient of h^k in (1 - h)^(n+1)
        let mut b: i128 = 1;
        for i in 0..k {
            b = b * (n as i128 + 1 - i as i128) / (i as i128 + 1);
        }
        *c = if k % 2 == 0 { b } else { -b };
    }
    let mut den = vec![0i128; len];
    den[0] = 1;
    for d in arr.degrees() {
        den = series_mul(&den, &[1, -i128::from(d)], len);
    }
    // num = den * q, den[0] = 1
    let mut q = vec![0i128; len];
    for k in 0..len {
        let s: i128 = (1..=k).map(|j| den[j] * q[k - j]).sum();
        q[k] = num[k] - s;
    }
    ChernVector { rank: n, classes: q[1..].to_vec() }
}

/// Outcome of the sufficient stability condition for equal degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    /// `c_1` of the dual bundle, `(n + 1) - l d`.
    pub c1_dual: i64,
    /// `c_1 / n`.
    pub slope: Ratio<i64>,
    /// `l > (n + 1) / d`.
    pub criterion: bool,
}

pub fn stability_certificate(arr: &Arrangement) -> Result<StabilityReport> {
    let d = i64::from(arr.common_degree()?);
    let n = arr.ambient_dim() as i64;
    let l = arr.len() as i64;
    if n == 0 {
        return Err(Error::Unsupported("slope needs n >= 1".into()));
    }
    let c1_dual = (n + 1) - l * d;
    Ok(StabilityReport { c1_dual, slope: Ratio::new(c1_dual, n), criterion: l * d > n + 1 })
}
