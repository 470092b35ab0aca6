use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use logbundle::exactpoly::{rat, BinaryForm, HomogeneousPoly, Rational, RationalMatrix};
use logbundle::sample;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(proptest::collection::vec(-4i64..=4, cols), rows).prop_map(|r| {
        RationalMatrix::from_rows(r.into_iter().map(|row| row.into_iter().map(rat).collect()).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_identity(seed in any::<u64>(), nvars in 1usize..4, degree in 1u32..4) {
        let f = sample::form(&mut rng(seed), nvars, degree, 5);
        prop_assert_eq!(f.euler_contract(), f.scale(&rat(i64::from(degree))));
    }

    #[test]
    fn gradient_is_linear(seed in any::<u64>(), nvars in 1usize..4, degree in 1u32..4, s in -5i64..5) {
        let mut r = rng(seed);
        let f = sample::form(&mut r, nvars, degree, 5);
        let g = sample::form(&mut r, nvars, degree, 5);
        let h = f.add(&g.scale(&rat(s))).unwrap();
        for ((hf, ff), gg) in h.grad().iter().zip(f.grad()).zip(g.grad()) {
            prop_assert_eq!(hf, &ff.add(&gg.scale(&rat(s))).unwrap());
        }
    }

    #[test]
    fn product_is_evaluated_pointwise(seed in any::<u64>(), nvars in 1usize..4) {
        let mut r = rng(seed);
        let f = sample::form(&mut r, nvars, 2, 5);
        let g = sample::form(&mut r, nvars, 1, 5);
        let p = sample::integer_vector(&mut r, nvars, 6);
        prop_assert_eq!(f.mul(&g).unwrap().eval(&p), f.eval(&p) * g.eval(&p));
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), nvars in 1usize..4, degree in 0u32..4) {
        let f = sample::form(&mut rng(seed), nvars, degree, 7).scale(&Rational::new(3.into(), 7.into()));
        let back = HomogeneousPoly::parse(&f.to_string(), nvars, degree).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn distinct_roots_are_subadditive(a in proptest::collection::vec(-3i64..=3, 2..4), b in proptest::collection::vec(-3i64..=3, 2..4)) {
        let f = BinaryForm::new(a.into_iter().map(rat).collect());
        let g = BinaryForm::new(b.into_iter().map(rat).collect());
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = f.mul(&g);
        let (rf, rg, rfg) = (f.distinct_roots().unwrap(), g.distinct_roots().unwrap(), fg.distinct_roots().unwrap());
        prop_assert!(rfg <= rf + rg);
        prop_assert!(rfg >= rf.max(rg));
        prop_assert_eq!(rfg == rf + rg, !f.shares_root_with(&g));
    }

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix(3, 5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let kernel = m.kernel();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn inverse_and_solve(seed in any::<u64>(), n in 1usize..5) {
        let mut r = rng(seed);
        let m = sample::invertible_matrix(&mut r, n, 4);
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(n));
        let b = sample::integer_vector(&mut r, n, 5);
        let x = m.solve(&b).unwrap().unwrap();
        prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn linear_substitution_composes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sample::form(&mut r, 3, 3, 4);
        let a = sample::invertible_matrix(&mut r, 3, 3);
        let b = sample::invertible_matrix(&mut r, 3, 3);
        let two_steps = f.substitute_linear(&a).unwrap().substitute_linear(&b).unwrap();
        prop_assert_eq!(two_steps, f.substitute_linear(&a.mul(&b).unwrap()).unwrap());
    }
}
