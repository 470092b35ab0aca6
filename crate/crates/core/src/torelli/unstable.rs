//! Unstable hypersurfaces and recovery of the components.

use crate::arrangement::{
    conic_arrangement_normal_crossings, hyperplanes_normal_crossings, quadric_pair_normal_crossings, veronese_lift,
    Arrangement, QuadricPair,
};
use crate::error::{Error, Result};
use crate::exactpoly::{monomial_count, multiple_space, HomogeneousPoly, RationalMatrix};
use crate::logres::presentation;

use super::rnc::on_common_rnc;

fn block_diagonal(blocks: &[RationalMatrix]) -> RationalMatrix {
    let rows = blocks.iter().map(RationalMatrix::rows).sum();
    let cols = blocks.iter().map(RationalMatrix::cols).sum();
    let mut out = RationalMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    out
}

/// `dim H^0(D', Omega^dual|_D')`, refusing arrangements where every
/// hypersurface would trivially qualify (`sum d_i <= n + 1`).
pub fn unstable_dim(arr: &Arrangement, candidate: &HomogeneousPoly) -> Result<usize> {
    let total: u32 = arr.degrees().iter().sum();
    if total as usize <= arr.ambient_dim() + 1 {
        return Err(Error::NotMeaningful(format!(
            "sum of degrees {total} does not exceed n + 1 = {}",
            arr.ambient_dim() + 1
        )));
    }
    unstable_dim_unchecked(arr, candidate)
}

/// The same kernel dimension without the meaningfulness check.
///
/// `H^0(O_D'(k)) = S_k / f' S_(k - d')` for `n >= 2`, so the global sections
/// of the restricted resolution are the kernel of the map induced by `N` on
/// these quotients.
pub fn unstable_dim_unchecked(arr: &Arrangement, candidate: &HomogeneousPoly) -> Result<usize> {
    let n = arr.ambient_dim();
    if candidate.nvars() != n + 1 {
        return Err(Error::DimensionMismatch("candidate lives in another ring".into()));
    }
    if candidate.is_zero() || candidate.degree() == 0 {
        return Err(Error::NotMeaningful("candidate must have positive degree".into()));
    }
    if n < 2 {
        return Err(Error::Unsupported("restriction to hypersurfaces needs n >= 2".into()));
    }
    let dp = i64::from(candidate.degree());
    let big_n = presentation(arr)?;
    let phi = big_n.section_map(0)?;
    let w0 = block_diagonal(&big_n.row_twists().iter().map(|&d| multiple_space(candidate, d - dp)).collect::<Vec<_>>());
    let dim_v = phi.cols();
    let dim_v0: usize = big_n.col_twists().iter().map(|&c| monomial_count(n + 1, c - dp)).sum();
    let rank_w0: usize = big_n.row_twists().iter().map(|&d| monomial_count(n + 1, d - dp)).sum();
    debug_assert_eq!(w0.cols(), rank_w0);
    let joint = phi.hstack(&w0)?.rank();
    Ok(dim_v - (joint - rank_w0) - dim_v0)
}

/// Which hypotheses of component recovery hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisLedger {
    /// Dimension `N` of the Veronese target.
    pub big_n: usize,
    /// `l >= N + 4`.
    pub enough_components: bool,
    /// Normal crossings of the arrangement itself, when decidable.
    pub normal_crossings: Option<bool>,
    /// Normal crossings of the lifted hyperplanes in `P^N`.
    pub lifted_normal_crossings: bool,
    /// The lifted normals do not lie on a rational normal curve; `None` when
    /// the test does not apply.
    pub off_rnc: Option<bool>,
    pub warnings: Vec<String>,
}

impl HypothesisLedger {
    pub fn all_hold(&self) -> bool {
        self.enough_components
            && self.normal_crossings == Some(true)
            && self.lifted_normal_crossings
            && self.off_rnc == Some(true)
    }
}

pub fn check_hypotheses(arr: &Arrangement) -> Result<HypothesisLedger> {
    let d = arr.common_degree()?;
    let lift = veronese_lift(arr)?;
    let big_n = lift.ambient_dim();
    let l = arr.len();
    let mut warnings = Vec::new();
    let enough_components = l >= big_n + 4;
    if !enough_components {
        warnings.push(format!("only {l} components, recovery needs at least {}", big_n + 4));
    }
    let normal_crossings = if d == 1 {
        Some(hyperplanes_normal_crossings(&lift))
    } else if d == 2 && arr.ambient_dim() == 2 {
        Some(conic_arrangement_normal_crossings(arr)?)
    } else if d == 2 && l == 2 {
        Some(quadric_pair_normal_crossings(&QuadricPair::from_arrangement(arr)?))
    } else {
        None
    };
    match normal_crossings {
        Some(false) => warnings.push("the arrangement does not have normal crossings".into()),
        None => warnings.push("normal crossings not decided for this arrangement".into()),
        Some(true) => {}
    }
    let lifted_normal_crossings = hyperplanes_normal_crossings(&lift);
    if !lifted_normal_crossings {
        warnings.push("the lifted hyperplanes do not have normal crossings".into());
    }
    let off_rnc = if l < big_n + 3 {
        None
    } else {
        match on_common_rnc(lift.normals()) {
            Ok(on) => Some(!on),
            Err(Error::GeneralPosition(_)) => None,
            Err(e) => return Err(e),
        }
    };
    match off_rnc {
        Some(false) => warnings.push("the lifted hyperplanes osculate a rational normal curve".into()),
        None => warnings.push("rational normal curve test does not apply".into()),
        Some(true) => {}
    }
    Ok(HypothesisLedger { big_n, enough_components, normal_crossings, lifted_normal_crossings, off_rnc, warnings })
}

/// Unstable candidates with their section counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    pub hypotheses: HypothesisLedger,
    pub dims: Vec<usize>,
    /// Indices of candidates with `unstable_dim > 0`.
    pub unstable: Vec<usize>,
}

pub fn recover_components(arr: &Arrangement, candidates: &[HomogeneousPoly]) -> Result<Recovery> {
    let hypotheses = check_hypotheses(arr)?;
    let dims = candidates.iter().map(|c| unstable_dim(arr, c)).collect::<Result<Vec<_>>>()?;
    let unstable = dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, _)| i).collect();
    Ok(Recovery { hypotheses, dims, unstable })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomogeneousPoly {
        HomogeneousPoly::parse(s, 3, 0).unwrap()
    }

    fn conic_pair() -> Arrangement {
        Arrangement::new(2, vec![p("x0^2 + 2*x1^2 - x2^2"), p("3*x0^2 + 5*x1^2 - x2^2")]).unwrap()
    }

    #[test]
    fn components_are_unstable() {
        let arr = conic_pair();
        for f in arr.components() {
            assert!(unstable_dim(&arr, f).unwrap() >= 1);
        }
    }

    #[test]
    fn single_conic_is_not_meaningful() {
        let arr = Arrangement::new(2, vec![p("x0^2 + x1^2 - x2^2")]).unwrap();
        assert!(matches!(unstable_dim(&arr, &p("x0^2 + x1^2 - x2^2")), Err(Error::NotMeaningful(_))));
    }

    #[test]
    fn single_conic_matches_euler_route() {
        // Omega^dual = Omega_P(2): sections on D' are the kernel of
        // (b_j) -> sum x_j b_j from (S_1 / f' S_-1)^3 to S_2 / f' S_0
        let arr = Arrangement::new(2, vec![p("x0^2 + x1^2 - x2^2")]).unwrap();
        for cand in [p("x0^2 + x1^2 - x2^2"), p("2*x0^2 + x0*x1 + 3*x1^2 - x2^2 + x1*x2")] {
            let xs: Vec<HomogeneousPoly> = (0..3).map(|j| HomogeneousPoly::var(3, j)).collect();
            let rows = vec![xs.into_iter().map(|x| (x, 1)).collect::<Vec<_>>()];
            let euler = crate::exactpoly::graded_piece_matrix(3, &rows, &[2], 0).unwrap();
            let w0 = multiple_space(&cand, 0);
            let oracle = euler.cols() - (euler.hstack(&w0).unwrap().rank() - w0.rank());
            assert_eq!(oracle, 4);
            assert_eq!(unstable_dim_unchecked(&arr, &cand).unwrap(), oracle);
        }
    }

    #[test]
    fn few_components_give_warnings() {
        let arr = conic_pair();
        let rec = recover_components(&arr, arr.components()).unwrap();
        assert_eq!(rec.unstable, vec![0, 1]);
        assert!(!rec.hypotheses.all_hold());
        assert!(!rec.hypotheses.warnings.is_empty());
    }
}
