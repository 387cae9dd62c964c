mod common;
mod oracles;

use common::*;
use gln_chamber::gl3::{
    build_maximal_levi, build_principal_series, build_supercuspidal, verify_theorem4, CaseKind,
    LittleComplex, LittleComplexReport, REPORT_SCHEMA,
};
use gln_chamber::weyl::TorusCharacterData;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn principal(d: &TorusCharacterData) -> (LittleComplexReport, LittleComplex) {
    let r = build_principal_series(d).unwrap();
    let base = d.arrangement();
    let lc = LittleComplex::new(base.clone()).unwrap();
    assert_eq!(base.to_string(), r.base_arrangement);
    (r, lc)
}

#[test]
fn supercuspidal_case() {
    let r = build_supercuspidal().unwrap();
    assert_eq!(r.schema, REPORT_SCHEMA);
    assert_eq!(r.case, CaseKind::Supercuspidal);
    assert_eq!(r.ambient_ranks, vec![3, 0, 0]);
    assert_eq!(r.homology.betti(), vec![1, 0, 0]);
    assert_eq!(r.h_even.to_string(), "Z");
    assert_eq!(r.h_odd.to_string(), "Z");
    assert!(r.all_passed());
}

#[test]
fn maximal_levi_case() {
    let r = build_maximal_levi().unwrap();
    assert_eq!(r.type_facet, "J_1");
    assert_eq!(r.ambient_ranks, vec![3, 3, 0]);
    assert_eq!(r.homology.betti(), vec![1, 1, 0]);
    assert_eq!(r.total_rank, 2);
    assert!(r.all_passed());
}

#[test]
fn principal_equal_case() {
    let r = build_principal_series(&TorusCharacterData::all_equal(3).unwrap()).unwrap();
    assert_eq!(r.ambient_ranks, vec![9, 6, 1]);
    assert_eq!(r.homology.betti(), vec![3, 1, 0]);
    for e in &r.intertwining {
        let expected = match e.facet.as_str() {
            "I" => 1,
            f if f.starts_with("J_") => 2,
            _ => 6,
        };
        assert_eq!(e.words.len(), expected, "{}", e.facet);
    }
    assert!(r.all_passed());
}

#[test]
fn principal_partial_case() {
    let (r, lc) = principal(&TorusCharacterData::pattern_12vs3(2).unwrap());
    assert_eq!(r.ambient_ranks, vec![6, 9, 3]);
    assert_eq!(r.homology.betti(), vec![2, 2, 0]);
    assert_eq!(r.boundaries[1], vec![vec![2], vec![1], vec![1]]);
    let lhs = top_boundary(&r, &lc, "τ₁");
    assert_eq!(lhs, named_sum(&r, 1, &[("ξ", 1), ("η", 1), ("ζ", 2)]));
    let lists: BTreeMap<&str, Vec<&str>> = r
        .intertwining
        .iter()
        .map(|e| (e.facet.as_str(), e.words.iter().map(String::as_str).collect()))
        .collect();
    assert_eq!(lists["I"], vec!["1"]);
    assert_eq!(lists["J_0"], vec!["1"]);
    assert_eq!(lists["J_2"], vec!["1"]);
    assert_eq!(lists["J_1"], vec!["1", "s1"]);
    assert_eq!(lists["L_0"], vec!["1", "s1"]);
    assert_eq!(lists["L_2"], vec!["1", "s1"]);
    assert_eq!(lists["L_1"], vec!["1", "s0s2s0"]);
    assert!(r.all_passed());
}

#[test]
fn principal_generic_case() {
    let (r, lc) = principal(&TorusCharacterData::generic(2, 2, 2).unwrap());
    assert_eq!(r.ambient_ranks, vec![3, 9, 6]);
    assert_eq!(r.homology.betti(), vec![1, 2, 1]);
    assert_eq!(r.boundaries[1], vec![vec![1, 1], vec![1, 1], vec![1, 1]]);
    let lhs = top_boundary(&r, &lc, "α");
    assert_eq!(lhs, named_sum(&r, 1, &[("ρ", 1), ("φ", 1), ("ψ", 1)]));
    assert_eq!(top_boundary(&r, &lc, "s₁α"), lhs);
    assert!(r.intertwining.iter().all(|e| e.words == vec!["1"]));
    assert_eq!(r.listed_ranks, vec![1, 3, 1]);
    assert_eq!(r.class_count, 4);
    assert!(r.all_passed());
}

#[test]
fn theorem_summary() {
    let s = verify_theorem4().unwrap();
    let totals: Vec<usize> = s.rows.iter().map(|r| r.total_rank).collect();
    assert_eq!(totals, vec![1, 2, 4, 4, 4]);
    assert!(s.rows.iter().all(|r| r.passed && r.total_rank as u64 == r.rank_formula));
    assert!(s.reports.iter().all(|r| r.homology.is_torsion_free()));
}

#[test]
fn reports_round_trip_through_json() {
    for r in verify_theorem4().unwrap().reports {
        let json = serde_json::to_string_pretty(&r).unwrap();
        let back: LittleComplexReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn pipelines_are_rotation_invariant() {
    for base in gl3_bases() {
        let lc = LittleComplex::new(base).unwrap();
        assert!(lc.rotation_commutes_with_induction().unwrap());
        for gens in &lc.generators {
            for g in gens {
                assert_eq!(&lc.rotate_chain(g).unwrap(), g);
            }
        }
        for (k, b) in lc.ambient.boundaries().iter().enumerate().skip(1) {
            let prev = lc.ambient.boundary(k);
            assert!(prev.mul(b).unwrap().is_zero());
        }
    }
}

#[test]
fn non_gl3_input_is_rejected() {
    assert!(build_principal_series(&TorusCharacterData::all_equal(4).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn homology_is_independent_of_conductors(ell in 2u32..12, a in 2u32..8, b in 2u32..8) {
        let r = build_principal_series(&TorusCharacterData::pattern_12vs3(ell).unwrap()).unwrap();
        prop_assert_eq!(r.homology.betti(), vec![2, 2, 0]);
        prop_assert!(r.all_passed());
        // c12 = c13 = max(a, b), c23 = min(a, b) satisfies the ultrametric rule.
        let (hi, lo) = (a.max(b), a.min(b));
        let g = build_principal_series(&TorusCharacterData::generic(hi, hi, lo).unwrap()).unwrap();
        prop_assert_eq!(g.homology.betti(), vec![1, 2, 1]);
        prop_assert!(g.all_passed());
    }
}
