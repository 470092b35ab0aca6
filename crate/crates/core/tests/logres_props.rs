use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use logbundle::arrangement::Arrangement;
use logbundle::exactpoly::{rat, RationalMatrix};
use logbundle::logres::{
    chern, chern_by_division, cohomology_table, euler_line, monad, splitting_on_line, Line, Resolution,
};
use logbundle::sample;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Alternating sum over `0 -> A -> B -> F -> 0` with `A = sum O(t - d_i)` and
/// `B = sum O(t - c_j)`, written out by hand.
fn resolution_euler(arr: &Arrangement, t: i64) -> i128 {
    let n = arr.ambient_dim();
    let l = arr.len();
    let b: i128 = (n as i128 + 1) * euler_line(n, t - 1) + (l as i128 - 1) * euler_line(n, t);
    let a: i128 = arr.degrees().iter().map(|&d| euler_line(n, t - i64::from(d))).sum();
    b - a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monad_composes_to_zero(seed in any::<u64>(), n in 1usize..4, l in 1usize..4) {
        let arr = sample::mixed_arrangement(&mut rng(seed), n, l, 3);
        let m = monad(&arr).unwrap();
        prop_assert!(m.nn.mul(&m.m).unwrap().is_zero());
        prop_assert!(m.nn.is_homogeneous() && m.m.is_homogeneous());
    }

    #[test]
    fn chern_paths_agree(degrees in proptest::collection::vec(1u32..5, 1..5), n in 1usize..6) {
        let mut r = rng(u64::from(degrees.iter().sum::<u32>()) + n as u64);
        let comps = degrees.iter().map(|&d| sample::form(&mut r, n + 1, d, 3)).collect();
        let Ok(arr) = Arrangement::new(n, comps) else { return Ok(()); };
        prop_assert_eq!(chern(&arr), chern_by_division(&arr));
    }

    #[test]
    fn euler_characteristic_matches_resolution(seed in any::<u64>(), n in 2usize..4, l in 1usize..4) {
        let arr = sample::mixed_arrangement(&mut rng(seed), n, l, 2);
        let table = cohomology_table(&arr, -5, 5).unwrap();
        let res = Resolution::of(&arr).unwrap();
        for t in -5..=5 {
            prop_assert_eq!(table.euler_characteristic(t), resolution_euler(&arr, t));
            prop_assert_eq!(res.euler_characteristic(t), resolution_euler(&arr, t));
        }
    }

    #[test]
    fn cohomology_is_coordinate_invariant(seed in any::<u64>(), l in 1usize..4) {
        let mut r = rng(seed);
        let arr = sample::mixed_arrangement(&mut r, 2, l, 2);
        let m = sample::invertible_matrix(&mut r, 3, 2);
        let moved = arr.transform(&m).unwrap();
        prop_assert_eq!(cohomology_table(&arr, -3, 2).unwrap(), cohomology_table(&moved, -3, 2).unwrap());
    }

    #[test]
    fn splitting_sums_to_restricted_chern(seed in any::<u64>(), t in -2i64..2) {
        let mut r = rng(seed);
        let l = r.gen_range(1..4);
        let arr = sample::nc_conic_arrangement(&mut r, l);
        let rank = arr.ambient_dim() as i64;
        let c1 = chern(&arr).c(1) as i64;
        let line = loop {
            let p = sample::integer_vector(&mut r, 3, 5);
            let q = sample::integer_vector(&mut r, 3, 5);
            if let Ok(line) = Line::through(&p, &q) {
                break line;
            }
        };
        let s = splitting_on_line(&arr, &line, t).unwrap();
        prop_assert_eq!(s.degrees.len() as i64, rank);
        prop_assert_eq!(s.first_chern(), c1 + rank * t);
        let g = sample::invertible_matrix(&mut r, 2, 4);
        let reparam = Line::new(line.param().mul(&g).unwrap()).unwrap();
        prop_assert_eq!(splitting_on_line(&arr, &reparam, t).unwrap(), s);
    }

    #[test]
    fn general_hyperplanes_split(seed in any::<u64>(), n in 2usize..4) {
        let mut r = rng(seed);
        let l = r.gen_range(1..=n + 1);
        let arr = sample::general_hyperplanes(&mut r, n, l);
        let table = cohomology_table(&arr, -(n as i64) - 1, n as i64 + 1).unwrap();
        let mut twists = vec![0; l - 1];
        twists.resize(n, -1);
        let split = logbundle::logres::CohomologyTable::of_split(n, &twists, -(n as i64) - 1, n as i64 + 1);
        prop_assert_eq!(table, split);
    }
}

#[test]
fn coordinate_line_reparametrized_by_hand() {
    let pair = logbundle::arrangement::QuadricPair::diagonal(&[rat(1), rat(2), rat(-1)], &[rat(3), rat(5), rat(-1)])
        .unwrap()
        .to_arrangement()
        .unwrap();
    let param =
        RationalMatrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(2), rat(1)], vec![rat(-1), rat(3)]]).unwrap();
    let s = splitting_on_line(&pair, &Line::new(param).unwrap(), -1).unwrap();
    assert_eq!(s.degrees, vec![1, -2]);
}
