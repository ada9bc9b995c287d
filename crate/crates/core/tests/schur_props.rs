use bottcalc::schur::{
    binomial, gl_dimension, h0_omega_degree2, littlewood_richardson, partition_dimension, pieri_wedge,
    plucker_relation_space, tensor_decompose, wedge2_of_wedge_r, SchurDecomposition,
};
use bottcalc::{Partition, Weight};
use proptest::prelude::*;

fn partition(max_size: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(move |k| {
        let all = Partition::all_of(k, max_len);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn dominant_weight(n: usize) -> impl Strategy<Value = Weight> {
    (partition(6, n), -3i64..=3).prop_map(move |(p, c)| p.to_weight(n).add_constant(&c.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_is_symmetric(lam in partition(6, 6), mu in partition(6, 6)) {
        for nu in Partition::all_of(lam.size() + mu.size(), 12) {
            prop_assert_eq!(littlewood_richardson(&lam, &mu, &nu), littlewood_richardson(&mu, &lam, &nu));
        }
    }

    #[test]
    fn tensor_dimension_is_additive(n in 1usize..=7, lam in partition(6, 7), mu in partition(6, 7)) {
        prop_assume!(lam.length() <= n);
        let d = tensor_decompose(&lam.to_weight(n), &mu, n).unwrap();
        prop_assert_eq!(d.total_dimension(), partition_dimension(&lam, n) * partition_dimension(&mu, n));
    }

    #[test]
    fn negative_weights_shift_cleanly(lam in dominant_weight(4), mu in partition(4, 4)) {
        let d = tensor_decompose(&lam, &mu, 4).unwrap();
        prop_assert_eq!(d.total_dimension(), gl_dimension(&lam, 4).unwrap() * partition_dimension(&mu, 4));
    }

    #[test]
    fn character_round_trip(n in 1usize..=5, lam in partition(4, 5), mu in partition(3, 5)) {
        prop_assume!(lam.length() <= n);
        let d = tensor_decompose(&lam.to_weight(n), &mu, n).unwrap();
        let back = SchurDecomposition::from_dominant_character(&d.dominant_character().unwrap(), n).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn pieri_matches_lr(lam in partition(5, 6), r in 0usize..=6) {
        let n = 6;
        let column = Partition::new(vec![1; r]).unwrap();
        prop_assert_eq!(pieri_wedge(&lam.to_weight(n), r, n).unwrap(), tensor_decompose(&lam.to_weight(n), &column, n).unwrap());
    }
}

#[test]
fn wedge2_dimension_counts() {
    for n in 2..=7u64 {
        for r in 1..n {
            let d = wedge2_of_wedge_r(r as usize, n as usize).unwrap();
            assert_eq!(d.total_dimension(), binomial(binomial(n, r).try_into().unwrap(), 2), "r={r} n={n}");
        }
    }
}

#[test]
fn plucker_dimension_counts() {
    // Sym²(∧^r) splits as the degree-two coordinate ring S_{(2^r)} plus the relations.
    for n in 2..=7u64 {
        for r in 1..n {
            let f = plucker_relation_space(r as usize, n as usize).unwrap();
            let ring = partition_dimension(&Partition::rectangle(2, r as usize), n as usize);
            let sym2 = binomial(u64::try_from(binomial(n, r)).unwrap() + 1, 2);
            assert_eq!(f.total_dimension() + ring, sym2, "r={r} n={n}");
        }
    }
}

#[test]
fn h0_is_wedge2_without_first_term() {
    for n in 2..=8usize {
        for r in 1..n {
            let mut g = wedge2_of_wedge_r(r, n).unwrap();
            let h = h0_omega_degree2(r, n).unwrap();
            let mut first = vec![2usize; r - 1];
            first.extend([1, 1]);
            let first = Partition::new(first).unwrap();
            assert_eq!(g.multiplicity(&first.to_weight(n)), 1);
            let mut rebuilt = SchurDecomposition::new(n);
            for t in g.terms() {
                if t.weight != first.to_weight(n) {
                    rebuilt.add(&t.weight, t.multiplicity).unwrap();
                }
            }
            g = rebuilt;
            assert_eq!(g, h, "r={r} n={n}");
            assert_eq!(h.is_empty(), r.min(n - r) < 3);
        }
    }
}
