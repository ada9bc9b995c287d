use bottcalc::bott_grassmannian::{
    bott_evaluate, structure_sheaf, theta_bundle, window_is_stable, window_radius, BundleSpec, CohomologyAnswer, Family,
};
use bottcalc::schur::gl_dimension;
use bottcalc::weights::staircase;
use bottcalc::Weight;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn serre_duality_for_structure_sheaf() {
    for n in 2..=7usize {
        for r in 1..n {
            let top = r * (n - r);
            let radius = window_radius(n);
            for m in -radius..=radius {
                let a = bott_evaluate(&structure_sheaf(n, r, m).unwrap(), n, r).unwrap();
                let b = bott_evaluate(&structure_sheaf(n, r, -(n as i64) - m).unwrap(), n, r).unwrap();
                match (a, b) {
                    (CohomologyAnswer::Vanishes, CohomologyAnswer::Vanishes) => {}
                    (
                        CohomologyAnswer::NonZero { degree: la, weight: wa, dimension: da },
                        CohomologyAnswer::NonZero { degree: lb, weight: wb, dimension: db },
                    ) => {
                        assert_eq!(la + lb, top, "G({r},{n}) m={m}");
                        assert_eq!(wa.negate_reverse().sl_normalized(), wb.sl_normalized());
                        assert_eq!(da, db);
                    }
                    (a, b) => panic!("G({r},{n}) m={m}: {a} vs {b}"),
                }
            }
        }
    }
}

#[test]
fn euler_characteristic_is_hilbert_function() {
    for n in 2..=7usize {
        for r in 1..n {
            for m in 0..=5i64 {
                let a = bott_evaluate(&structure_sheaf(n, r, m).unwrap(), n, r).unwrap();
                let hilbert = gl_dimension(&Weight::from_i64s(&vec![m; r]), n).unwrap();
                assert_eq!(a.euler_characteristic(), BigInt::from(hilbert), "G({r},{n}) m={m}");
            }
        }
    }
}

#[test]
fn window_is_stable_everywhere() {
    for n in 2..=8usize {
        for r in 1..n {
            for f in [Family::Structure, Family::Theta] {
                assert!(window_is_stable(f, n, r).unwrap(), "{f} on G({r},{n})");
            }
        }
    }
}

#[test]
fn outside_window_degree_is_extremal() {
    for n in 2..=7usize {
        for r in 1..n {
            let radius = window_radius(n);
            for f in [Family::Structure, Family::Theta] {
                for m in [radius, radius + 5, -radius, -radius - 5] {
                    let a = bott_evaluate(&f.bundle(n, r, m).unwrap(), n, r).unwrap();
                    let expected = if m > 0 { 0 } else { r * (n - r) };
                    assert_eq!(a.degree(), Some(expected), "{f} G({r},{n}) m={m}");
                }
            }
        }
    }
}

fn dominant(len: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-4i64..=4, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight::from_i64s(&v)
    })
}

fn bundle() -> impl Strategy<Value = (usize, usize, BundleSpec)> {
    (2usize..=7)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, r)| (Just(n), Just(r), dominant(n - r), dominant(r), -20i64..=20))
        .prop_map(|(n, r, a, b, m)| (n, r, BundleSpec::new(a, b, m).unwrap()))
}

proptest! {
    #[test]
    fn answer_is_consistent((n, r, spec) in bundle()) {
        match bott_evaluate(&spec, n, r).unwrap() {
            CohomologyAnswer::Vanishes => {
                prop_assert!(spec.gamma().add(&staircase(n).unwrap()).unwrap().has_repeats())
            }
            CohomologyAnswer::NonZero { degree, weight, dimension } => {
                prop_assert!(degree <= r * (n - r));
                prop_assert!(weight.is_dominant());
                prop_assert_eq!(dimension, gl_dimension(&weight, n).unwrap());
            }
        }
    }
}

#[test]
fn theta_at_zero_is_tangent() {
    let t = theta_bundle(6, 3, 0).unwrap();
    assert_eq!(t.gamma(), Weight::from_i64s(&[1, 0, 0, 0, 0, -1]));
}
