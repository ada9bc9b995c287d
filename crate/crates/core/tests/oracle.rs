use bottcalc::cotangent_oracle::*;
use bottcalc::linalg::{rank_exact, RankMethod, SparseRow, TripletMatrix};
use bottcalc::poly::Vars;
use bottcalc::schur::{gl_dimension, plucker_relation_space, SchurDecomposition};
use bottcalc::{Partition, Weight};
use std::collections::{BTreeMap, HashMap};

fn oracle(r: usize, n: usize) -> Oracle {
    Oracle::new(r, n, OracleConfig::default()).unwrap()
}

fn dim(w: &[i64], n: usize) -> u64 {
    gl_dimension(&Weight::from_i64s(w), n).unwrap().try_into().unwrap()
}

#[test]
fn minors_of_2x4_are_independent() {
    let ms = minors(2, 4).unwrap();
    let mut index = HashMap::new();
    let rows: Vec<SparseRow> = ms
        .iter()
        .map(|u| {
            u.poly
                .terms()
                .map(|(m, c)| {
                    let next = index.len();
                    (*index.entry(m.clone()).or_insert(next), c)
                })
                .collect()
        })
        .collect();
    assert_eq!(rank_exact(&rows), 6);
    let one = minors(1, 5).unwrap();
    assert!(one.iter().all(|u| u.poly.len() == 1));
}

#[test]
fn classic_relation_up_to_sign() {
    let ms = minors(2, 4).unwrap();
    let rel = plucker_relations(2, 4).unwrap();
    let text = rel[0].render(&ms);
    assert!(text == "p12*p34-p13*p24+p14*p23" || text == "-p12*p34+p13*p24-p14*p23", "{text}");
}

#[test]
fn relation_counts_match_schur() {
    for (r, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let expected: u64 = plucker_relation_space(r, n).unwrap().total_dimension().try_into().unwrap();
        assert_eq!(plucker_relations(r, n).unwrap().len() as u64, expected, "({r},{n})");
    }
    // For (2,5) the relations span ∧⁴E*.
    assert_eq!(plucker_relations(2, 5).unwrap().len() as u64, dim(&[1, 1, 1, 1, 0], 5));
    assert_eq!(plucker_relations(3, 6).unwrap().len(), 35);
}

#[test]
fn rho_of_witness_field() {
    // X = w*_r ⊗ w_1 acts as Σ_i x_{i,1} ∂/∂x_{i,r}.
    let vars = Vars::new(4, 2);
    let rho = sl_action_rho(2, 4).unwrap();
    let (_, field) = rho.iter().find(|(x, _)| *x == SlElement::E(0, 1)).unwrap();
    let mut expected: Vec<_> = (0..4).map(|i| (1, vars.index(i, 0), vars.index(i, 1))).collect();
    expected.sort();
    let mut got = field.clone();
    got.sort();
    assert_eq!(got, expected);
    for u in minors(2, 4).unwrap() {
        assert!(u.poly.apply_field(field).unwrap().is_zero());
    }
}

#[test]
fn d3_of_a_generator_is_rho() {
    // d³(dx_t)(X) = ρ_t(X), the ∂/∂x_t-coefficient of ρ(X).
    for (r, n) in [(2, 4), (3, 5)] {
        let o = oracle(r, n);
        let mut from_rho: Vec<(SlElement, i64, usize, usize)> = Vec::new();
        for (x, field) in sl_action_rho(r, n).unwrap() {
            for (c, s, t) in field {
                from_rho.push((x, c, s, t));
            }
        }
        let mut from_d3: Vec<_> = (0..o.vars().count())
            .flat_map(|t| o.d3_of_variable(t).into_iter().map(move |(x, c, s)| (x, c, s, t)))
            .collect();
        let key = |e: &(SlElement, i64, usize, usize)| (e.3, e.2, e.1, e.0.to_string());
        from_rho.sort_by_key(key);
        from_d3.sort_by_key(key);
        assert_eq!(from_rho, from_d3, "({r},{n})");
    }
}

#[test]
fn invariant_dimensions_2_4() {
    let o = oracle(2, 4);
    let s2 = o.build_complex_slice(2).unwrap();
    // (Ω_S)^G at S-degree 3: S_(2,1)E* ⊗ E*.
    assert_eq!(s2.invariant_dims[2], dim(&[2, 1, 0, 0], 4) * 4);
    assert_eq!(s2.invariant_dims[2], 80);
    // (S⊗sl*)^G at S-degree 2: S_(2,0).
    let s1 = o.build_complex_slice(1).unwrap();
    assert_eq!(s1.invariant_dims[3], dim(&[2, 0, 0, 0], 4));
    // Image of d² at the lowest degree is ∧²E*.
    assert_eq!(s1.rank_d[1], 6);
    for s in [&s1, &s2] {
        assert!(check_slice(s).unwrap().passed());
    }
}

#[test]
fn slices_match_predictions() {
    for (r, n, dmax) in [(1, 3, 3), (1, 5, 2), (2, 4, 4), (2, 5, 4), (3, 6, 2)] {
        let o = oracle(r, n);
        for d in 1..=dmax {
            let s = o.build_complex_slice(d).unwrap();
            let c = check_slice(&s).unwrap();
            assert!(c.passed(), "({r},{n}) D={d}: {c:?}");
            assert!(s.composites_vanish);
        }
    }
}

#[test]
fn cohomology_tables() {
    for (r, n) in [(2, 4), (2, 5)] {
        let t = local_cohomology_dims(&oracle(r, n), 4).unwrap();
        assert!(t.truncated.is_none());
        assert!(t.rows.iter().all(|row| row.h1 == 0 && row.h2 == 0), "({r},{n})");
    }
    let t = local_cohomology_dims(&oracle(3, 6), 2).unwrap();
    let h1: Vec<u64> = t.rows.iter().map(|row| row.h1).collect();
    assert_eq!(h1, vec![0, 1]);
    assert!(t.rows.iter().all(|row| row.h2 == 0));
    assert_eq!(t.rows[1].h1_decomposition, "S_(1^6)");
}

#[test]
fn h1_is_top_exterior_power() {
    let s = oracle(3, 6).build_complex_slice(2).unwrap();
    let mut expected = BTreeMap::new();
    expected.insert(Partition::rectangle(1, 6), 1);
    assert_eq!(s.character(|b| b.h1), expected);
    let mut top = SchurDecomposition::new(6);
    top.add_partition(&Partition::rectangle(1, 6), 1).unwrap();
    assert_eq!(s.h1_decomposition().unwrap().terms(), top.terms());
}

#[test]
fn truncation_marker() {
    let cfg = OracleConfig { max_block: 50, ..OracleConfig::default() };
    let t = local_cohomology_dims(&Oracle::new(2, 4, cfg).unwrap(), 4).unwrap();
    assert!(t.truncated.is_some());
    assert!(t.rows.len() < 4);
    let cfg = OracleConfig { max_degree: 1, ..OracleConfig::default() };
    assert!(Oracle::new(2, 4, cfg).unwrap().build_complex_slice(2).is_err());
}

#[test]
fn modular_rank_agrees() {
    let cfg = OracleConfig { rank_method: RankMethod::Modular, ..OracleConfig::default() };
    let a = Oracle::new(2, 5, cfg).unwrap().build_complex_slice(3).unwrap();
    let b = oracle(2, 5).build_complex_slice(3).unwrap();
    assert_eq!((a.h1, a.h2, a.rank_d), (b.h1, b.h2, b.rank_d));
    // Agreement of two primes is strong evidence, not a certificate.
    assert!(!a.certified && b.certified);
}

#[test]
fn witnesses() {
    for (r, n, m) in [(2, 4, 1), (2, 5, 2), (3, 6, 1), (3, 3, 1)] {
        let w = differential_witnesses(&oracle(r, n), m).unwrap();
        assert!(w.passed, "({r},{n},{m}): {w:?}");
    }
    let w = differential_witnesses(&oracle(2, 4), 1).unwrap();
    assert_eq!(w.d3_delta_e1r, "x11^2");
    let w = differential_witnesses(&oracle(3, 6), 1).unwrap();
    assert_eq!(w.delta_weight, vec![2, 1, 0, 0, 0, 0]);
    assert!(differential_witnesses(&oracle(1, 3), 1).is_err());
}

#[test]
fn hilbert_function_of_coordinate_ring() {
    for (r, n) in [(2, 4), (2, 5), (3, 6)] {
        for m in 1..=3 {
            let h = hilbert_function(r, n, m).unwrap();
            assert_eq!(h.computed, h.predicted, "({r},{n}) m={m}");
        }
    }
    assert_eq!(hilbert_function(2, 4, 2).unwrap().computed, 20);
}

#[test]
fn invariant_basis_is_killed_by_raising() {
    let o = oracle(2, 4);
    let b = o.invariant_basis(OracleModule::Plucker, 1, &[1, 1, 0, 0]).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b[0].len(), 1);
    assert!(b[0][0].0.ends_with("p12"));
    let inv = invariants_slice(&o, OracleModule::Differentials, 2).unwrap();
    assert!(inv.matches);
    assert_eq!(inv.dimension, 80);
}

#[test]
fn dumps_are_parseable() {
    let dir = std::env::temp_dir().join(format!("oracle-dump-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = OracleConfig { dump_dir: Some(dir.clone()), ..OracleConfig::default() };
    Oracle::new(2, 4, cfg).unwrap().build_complex_slice(2).unwrap();
    let mut count = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let m = TripletMatrix::parse(&text).unwrap();
        assert_eq!(m.columns().len(), m.cols);
        count += 1;
    }
    assert!(count > 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn module_names_parse() {
    for m in OracleModule::ALL {
        assert_eq!(m.to_string().parse::<OracleModule>().unwrap(), m);
    }
    assert!("bogus".parse::<OracleModule>().is_err());
}
