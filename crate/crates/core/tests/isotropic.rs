use bottcalc::bott_isotropic::expr::{EllipsisStep, LinearM};
use bottcalc::bott_isotropic::tables::{find_rows, verify_all_tables, verify_table};
use bottcalc::bott_isotropic::*;
use bottcalc::root_systems::{IndexResult, Pairing};

const P: Pairing = Pairing::SimpleRootCoefficients;

fn x(family: IsoFamily, r: usize, n: usize) -> IsoGrassmannian {
    IsoGrassmannian::new(family, r, n).unwrap()
}

fn lin(slope: i64, constant: i64) -> LinearM {
    LinearM { slope, constant }
}

#[test]
fn lg24_d2_indices() {
    let c = Classifier::new(x(IsoFamily::LG, 2, 2), P);
    assert_eq!(c.classify(IsoBundleKind::D2RStar, -2).unwrap(), IndexResult::Index(1));
    assert_eq!(c.classify(IsoBundleKind::D2RStar, -5).unwrap(), IndexResult::Index(c.d() - 2));
}

#[test]
fn gamma_of_lg24_d2() {
    let g = gamma_weight(&x(IsoFamily::LG, 2, 2), IsoBundleKind::D2RStar, -7).unwrap();
    assert_eq!(g, bottcalc::root_systems::IsoWeight::from_i64s(&[3, -6]));
}

#[test]
fn sp_generic_d2_row() {
    // 1<r<n-1 first holds at r=2, n=4.
    let checks = verify_table(&x(IsoFamily::LG, 2, 4), IsoBundleKind::D2RStar, P, EllipsisStep::Unit).unwrap();
    let c = checks.iter().find(|c| c.row.case == "1<r<n-1").unwrap();
    assert!(c.passed);
    let expected: Vec<_> = (1..=7).map(|k| lin(1, k)).collect();
    assert_eq!(c.computed_one.iter().copied().collect::<Vec<_>>(), expected);
    assert_eq!(c.computed_max_two, Some(lin(2, 11)));
}

#[test]
fn so_odd_small_wedge2_row() {
    let checks = verify_table(&x(IsoFamily::OGOdd, 2, 2), IsoBundleKind::Wedge2RStar, P, EllipsisStep::Unit).unwrap();
    let c = checks.iter().find(|c| c.row.case == "r=2,n=2").unwrap();
    assert!(c.passed);
    assert_eq!(c.computed_one.iter().copied().collect::<Vec<_>>(), vec![lin(1, 2), lin(1, 4)]);
    assert_eq!(c.computed_max_two, Some(lin(2, 6)));
}

#[test]
fn so_even_r1_quot_row() {
    for n in 4..=7 {
        let checks = verify_table(&x(IsoFamily::OGEven, 1, n), IsoBundleKind::RStarTensorQuot, P, EllipsisStep::Unit).unwrap();
        assert!(checks.iter().all(|c| c.passed), "n={n}");
        assert!(checks[0].computed_max_two.is_none());
    }
}

#[test]
fn table_without_row_is_error() {
    assert!(verify_table(&x(IsoFamily::LG, 2, 2), IsoBundleKind::Wedge2RStar, P, EllipsisStep::Unit).is_err());
}

#[test]
fn table_survey_isolates_one_row() {
    let checks = verify_all_tables(8, P, EllipsisStep::Unit).unwrap();
    let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].x, x(IsoFamily::OGEven, 2, 4));
    assert_eq!(bad[0].row.bundle, IsoBundleKind::RStarTensorQuot);
    // The listed range read with step one inserts m+4, which no root produces.
    assert!(!bad[0].computed_one.contains(&lin(1, 4)));
    assert_eq!(find_rows(IsoFamily::OGEven, "r=2,n>=4").len(), 2);
}

#[test]
fn og1_wedge2_has_h1() {
    for n in 4..=7 {
        let map = cohomology_indices(&x(IsoFamily::OGEven, 1, n), IsoBundleKind::Wedge2RStar, P).unwrap();
        assert!(map.nonvanishing().contains_key(&1), "n={n}");
    }
    let map = cohomology_indices(&x(IsoFamily::OGOdd, 1, 4), IsoBundleKind::Wedge2RStar, P).unwrap();
    assert!(map.nonvanishing().contains_key(&1));
}

#[test]
fn lg_corank_one_quot_penultimate_vanishes() {
    for n in 3..=7 {
        let y = x(IsoFamily::LG, n - 1, n);
        let map = cohomology_indices(&y, IsoBundleKind::RStarTensorQuot, P).unwrap();
        assert!(map.stable);
        assert!(!map.nonvanishing().contains_key(&(y.d() - 2)), "n={n}");
    }
}

#[test]
fn structure_sheaf_vanishes_in_middle() {
    for y in IsoGrassmannian::all_supported(6) {
        let map = cohomology_indices(&y, IsoBundleKind::StructureSheaf, P).unwrap();
        assert!(map.nonvanishing().keys().all(|&i| i == 0 || i == y.d() - 1), "{y}");
    }
}

#[test]
fn lg36_theta_mid_range() {
    let y = x(IsoFamily::LG, 3, 3);
    let t = verify_theta_theorems(&y, P).unwrap();
    assert!(t.sub_bundle.is_none());
    let d = t.d;
    assert!(t.cells.iter().any(|c| (2..=d - 3).contains(&c.i) && c.status == PinchStatus::NonZero));
    assert!(t.passed());
}

#[test]
fn og_maximal_odd_theta_penultimate_zero() {
    for n in 2..=7 {
        let t = verify_theta_theorems(&x(IsoFamily::OGOdd, n, n), P).unwrap();
        assert!(t.certified_zero(t.d - 2), "n={n}");
    }
}

#[test]
fn lg2_theta_h1_nonzero() {
    for n in 4..=7 {
        let t = verify_theta_theorems(&x(IsoFamily::LG, 2, n), P).unwrap();
        assert!(t.cells.iter().any(|c| c.i == 1 && c.m == -2 && c.status == PinchStatus::NonZero), "n={n}");
    }
}

#[test]
fn pinch_rules() {
    assert_eq!(pinch(2, None, None), PinchStatus::Zero);
    assert_eq!(pinch(2, Some(2), None), PinchStatus::NonZero);
    assert_eq!(pinch(2, Some(2), Some(1)), PinchStatus::Undetermined);
    assert_eq!(pinch(2, None, Some(2)), PinchStatus::NonZero);
    assert_eq!(pinch(2, Some(3), Some(2)), PinchStatus::Undetermined);
}

#[test]
fn full_lemma_sweep() {
    for y in IsoGrassmannian::all_supported(8) {
        assert!(verify_lemmata(&y, P).unwrap().passed(), "{y}");
        assert!(verify_theta_theorems(&y, P).unwrap().passed(), "{y}");
        assert!(synthesize_ti(&y, P).unwrap().passed(), "{y}");
    }
}

#[test]
fn windows_are_stable() {
    for y in IsoGrassmannian::all_supported(8) {
        let c = Classifier::new(y, P);
        for b in bundles_for(&y) {
            assert!(c.window_is_stable(b).unwrap(), "{y} {b}");
        }
    }
}

#[test]
fn parse_and_display() {
    let y: IsoGrassmannian = "OG(2,7)".parse().unwrap();
    assert_eq!(y, x(IsoFamily::OGOdd, 2, 3));
    assert_eq!(y.to_string(), "OG(2,7)");
    assert!("LG(2,5)".parse::<IsoGrassmannian>().is_err());
    assert!(IsoGrassmannian::new(IsoFamily::OGEven, 3, 4).is_err());
}
