//! Closed-form cohomology and Chern classes of split bundles and twisted
//! tangent bundles on `P^n`, computed without any graded linear algebra.
//!
//! Line bundles follow Bott's formula; twisted tangent bundles follow the
//! Euler sequence `0 -> O(k) -> O(k+1)^(n+1) -> T(k) -> 0`.

use std::collections::BTreeMap;

fn choose(top: i64, k: i64) -> u64 {
    if k < 0 || top < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (top - i) as u128 / (i + 1) as u128) as u64
}

/// `h^i(O(a))` on `P^n`.
pub fn line(n: usize, i: usize, a: i64) -> u64 {
    let n64 = n as i64;
    if i == 0 {
        choose(a + n64, n64)
    } else if i == n {
        choose(-a - 1, n64)
    } else {
        0
    }
}

/// `h^i(T_{P^n}(k))` for `n >= 2`.
pub fn twisted_tangent(n: usize, i: usize, k: i64) -> u64 {
    let n1 = n as u64 + 1;
    // H^n(O(k)) -> H^n(O(k+1))^(n+1) is dual to multiplication
    // S_(m-1)^(n+1) -> S_m with m = -k-n-1; it is onto for m >= 1 and zero
    // on a one-dimensional source for m = 0.
    let kernel = u64::from(k == -(n as i64) - 1);
    match i {
        0 => n1 * line(n, 0, k + 1) - line(n, 0, k),
        i if i == n => n1 * line(n, n, k + 1) + kernel - line(n, n, k),
        i if i == n - 1 => kernel,
        _ => 0,
    }
}

pub type Table = BTreeMap<(usize, i64), u64>;

pub fn split_table(n: usize, twists: &[i64], tmin: i64, tmax: i64) -> Table {
    let mut out = Table::new();
    for t in tmin..=tmax {
        for i in 0..=n {
            out.insert((i, t), twists.iter().map(|&a| line(n, i, a + t)).sum());
        }
    }
    out
}

/// Table of `T_{P^n}(k + t)`.
pub fn tangent_table(n: usize, k: i64, tmin: i64, tmax: i64) -> Table {
    let mut out = Table::new();
    for t in tmin..=tmax {
        for i in 0..=n {
            out.insert((i, t), twisted_tangent(n, i, k + t));
        }
    }
    out
}

fn truncated_mul(a: &[i128], b: &[i128], n: usize) -> Vec<i128> {
    let mut out = vec![0; n + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= n {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `c_1, ..., c_n` of `O(a_1) + ... + O(a_r)`.
pub fn split_chern(n: usize, twists: &[i64]) -> Vec<i128> {
    let total = twists.iter().fold(vec![1i128], |acc, &a| truncated_mul(&acc, &[1, a as i128], n));
    let mut out = total;
    out.resize(n + 1, 0);
    out[1..].to_vec()
}

/// `c_1, ..., c_n` of `T_{P^n}(k)`, i.e. `(1 + (k+1)h)^(n+1) / (1 + kh)`.
pub fn tangent_chern(n: usize, k: i64) -> Vec<i128> {
    let num = (0..=n).fold(vec![1i128], |acc, _| truncated_mul(&acc, &[1, k as i128 + 1], n));
    let inverse: Vec<i128> = (0..=n as u32).map(|j| (-(k as i128)).pow(j)).collect();
    let mut out = truncated_mul(&num, &inverse, n);
    out.resize(n + 1, 0);
    out[1..].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangent_bundle_of_the_plane() {
        // h^0(T_{P^2}) = dim PGL(3) = 8
        assert_eq!(twisted_tangent(2, 0, 0), 8);
        assert_eq!(twisted_tangent(2, 2, 0), 0);
        // T(-3) = Omega^1 dual twisted; h^1(T(-3)) = h^1(Omega^1) = 1
        assert_eq!(twisted_tangent(2, 1, -3), 1);
        assert_eq!(twisted_tangent(2, 2, -3), 0);
        // Serre duality: h^2(T(k)) = h^0(Omega^1(-k-3))
        assert_eq!(twisted_tangent(2, 2, -4), 0);
        assert_eq!(twisted_tangent(2, 2, -5), 3);
    }

    #[test]
    fn chern_classes() {
        // c(T_{P^2}) = 1 + 3h + 3h^2
        assert_eq!(tangent_chern(2, 0), vec![3, 3]);
        // c(T(-1)) = 1 / (1 - h)
        assert_eq!(tangent_chern(4, -1), vec![1, 1, 1, 1]);
        assert_eq!(split_chern(3, &[0, -1, -1]), vec![-2, 1, 0]);
    }

    #[test]
    fn euler_characteristic_of_the_tangent_bundle() {
        // chi(T_{P^n}(k)) = (n+1) chi(O(k+1)) - chi(O(k)); at k = 0 both
        // sides equal (n+1)^2 - 1.
        for n in 2..5 {
            let chi: i64 = (0..=n).map(|i| (-1i64).pow(i as u32) * twisted_tangent(n, i, 0) as i64).sum();
            assert_eq!(chi, ((n + 1) * (n + 1) - 1) as i64);
        }
    }
}
