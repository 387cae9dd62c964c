mod oracles;

use gln_chamber::lattices::{
    add_chains_first, add_chains_second, direct_sum, ComponentSpace, LatticeSequence,
};
use proptest::prelude::*;

fn chains(dims: &[u32], e: u32) -> Vec<LatticeSequence> {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| {
            LatticeSequence::standard_chain(ComponentSpace::new(d, e, format!("V{i}"), "E").unwrap())
        })
        .collect()
}

fn component_data(s: &LatticeSequence) -> Vec<(u32, u32)> {
    s.components().iter().map(|c| (c.dim(), c.ramification())).collect()
}

/// The profile of `s` recomputed from explicit lattice coordinates.
fn oracle_profile(s: &LatticeSequence) -> Vec<i64> {
    oracles::quotient_dims(&component_data(s), |i| s.index(i), s.period())
}

#[test]
fn two_summand_examples() {
    let c = chains(&[2, 1], 1);
    let first = add_chains_first(&c).unwrap();
    let second = add_chains_second(&c).unwrap();
    assert_eq!(first.dimension_profile().unwrap().d, vec![1, 2]);
    assert_eq!(second.dimension_profile().unwrap().d, vec![2, 1]);
    assert_eq!(first.index(0), vec![0, 0]);
    assert_eq!(first.index(1), vec![0, 1]);
    assert_eq!(second.index(1), vec![1, 0]);
}

#[test]
fn ramified_chain_has_equal_steps() {
    let c = chains(&[4], 2);
    assert_eq!(c[0].dimension_profile().unwrap().d, vec![2, 2]);
    assert_eq!(oracle_profile(&c[0]), vec![2, 2]);
}

#[test]
fn ramification_must_divide_dimension() {
    assert!(ComponentSpace::new(3, 2, "V", "E").is_err());
    assert!(ComponentSpace::new(0, 1, "V", "E").is_err());
}

#[test]
fn scaling_is_undone_by_to_chain() {
    let c = chains(&[2, 3], 1);
    let s = add_chains_second(&c).unwrap();
    let scaled = s.scale(3).unwrap();
    assert_eq!(scaled.period(), 3 * s.period());
    assert!(!scaled.is_strict());
    assert_eq!(scaled.to_chain(), s);
    assert!(scaled.dimension_profile().is_err());
    assert_eq!(scaled.dimension_profile_nonstrict().total(), 5);
}

#[test]
fn direct_sum_of_standard_chains() {
    let c = chains(&[1, 2], 1);
    let s = direct_sum(&c).unwrap();
    assert_eq!(s.period(), 1);
    assert_eq!(oracle_profile(&s), vec![3]);
}

proptest! {
    #[test]
    fn profiles_agree_with_explicit_lattices(
        e in 1u32..4,
        raw in prop::collection::vec(1u32..3, 1..6),
    ) {
        let dims: Vec<u32> = raw.iter().map(|d| d * e).collect();
        let c = chains(&dims, e);
        for s in [add_chains_first(&c).unwrap(), add_chains_second(&c).unwrap()] {
            let ours: Vec<i64> = s.dimension_profile().unwrap().d.iter().map(|&x| x as i64).collect();
            prop_assert_eq!(ours, oracle_profile(&s));
        }
    }

    #[test]
    fn second_profile_is_positionwise_reversal_of_first(
        e in 1u32..4,
        raw in prop::collection::vec(1u32..3, 1..6),
    ) {
        let dims: Vec<u32> = raw.iter().map(|d| d * e).collect();
        let c = chains(&dims, e);
        let m = dims.len();
        let first = add_chains_first(&c).unwrap().dimension_profile().unwrap().d;
        let second = add_chains_second(&c).unwrap().dimension_profile().unwrap().d;
        for (a, b) in first.chunks(m).zip(second.chunks(m)) {
            let rev: Vec<u32> = a.iter().rev().copied().collect();
            prop_assert_eq!(rev, b.to_vec());
        }
    }

    #[test]
    fn translation_preserves_profile(
        raw in prop::collection::vec(1u32..4, 1..4),
        t in -5i64..5,
    ) {
        let c = chains(&raw, 1);
        let s = add_chains_first(&c).unwrap();
        let moved = s.translate(t);
        prop_assert_eq!(moved.period(), s.period());
        prop_assert_eq!(moved.index(0), s.index(t));
        let rotated_profile = {
            let d = s.dimension_profile().unwrap().d;
            let k = t.rem_euclid(d.len() as i64) as usize;
            [&d[k..], &d[..k]].concat()
        };
        prop_assert_eq!(moved.dimension_profile().unwrap().d, rotated_profile);
    }
}
