use laumon::characters::{free_field_counts, spin_decomposition, total_dimension, BlockData};
use laumon::localization::{
    enumerate_fixed_points, fixed_point_index, morse_index_oracle, poincare_polynomial, OccupationVector,
    RankVector,
};
use laumon::partitions::{colored_counts, count_n1_geq, count_n1_gt, count_n2_geq};
use laumon::Partition;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..12, 0..12).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows).unwrap()
    })
}

fn block_data() -> impl Strategy<Value = BlockData> {
    prop::collection::btree_set(1u32..=8, 1..=4).prop_flat_map(|s| {
        let s: Vec<u32> = s.into_iter().collect();
        let len = s.len();
        prop::collection::vec(1u32..=4, len).prop_map(move |m| BlockData::new(m, s.clone()).unwrap())
    })
}

proptest! {
    #[test]
    fn box_counts_agree(mu in partition(), ell in 2usize..7) {
        let bound = ell as i64 - 1;
        for c in -bound..=bound {
            let n2 = count_n2_geq(&mu, c, ell).unwrap();
            prop_assert_eq!(count_n1_geq(&mu, c, ell).unwrap(), n2);
            let cols = if c == 0 { mu.num_columns() } else { 0 };
            prop_assert_eq!(count_n1_gt(&mu, c, ell).unwrap() + cols, n2);
        }
    }

    #[test]
    fn coloring_is_periodic(mu in partition(), ell in 2usize..7, a in -10i64..10) {
        let counts = colored_counts(&mu, a, ell).unwrap();
        prop_assert_eq!(counts.iter().sum::<u32>(), mu.size());
        prop_assert_eq!(&colored_counts(&mu, a + ell as i64, ell).unwrap(), &counts);
        let mut shifted = colored_counts(&mu, a + 1, ell).unwrap();
        shifted.rotate_left(1);
        prop_assert_eq!(shifted, counts);
    }

    #[test]
    fn conjugate_heights(mu in partition()) {
        let heights = mu.column_heights();
        prop_assert_eq!(heights.len() as u32, mu.num_columns());
        prop_assert_eq!(heights.iter().sum::<u32>(), mu.size());
        let json = serde_json::to_string(&mu).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), mu);
    }

    #[test]
    fn spin_dimension_is_n_squared(b in block_data()) {
        let n = b.n() as u64;
        prop_assert_eq!(total_dimension(&spin_decomposition(&b)), n * n);
        prop_assert!(free_field_counts(&b).pairs.iter().all(|p| p.difference_holds()));
        let json = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<BlockData>(&json).unwrap(), b);
    }

    #[test]
    fn morse_formula_matches_weights(
        ranks in prop::collection::vec(0u32..3, 2..4),
        occ in prop::collection::vec(0u32..3, 3),
    ) {
        prop_assume!(ranks.iter().any(|&r| r > 0));
        let r = RankVector::new(ranks).unwrap();
        let n = OccupationVector::new(occ[..r.ell()].to_vec());
        prop_assume!(n.total() <= 4);
        for fp in enumerate_fixed_points(&r, &n).unwrap() {
            prop_assert_eq!(fixed_point_index(&fp, &r).unwrap(), morse_index_oracle(&fp, &r).unwrap());
        }
        let p = poincare_polynomial(&r, &n).unwrap();
        prop_assert!(p.only_even_nonnegative_powers());
    }
}
