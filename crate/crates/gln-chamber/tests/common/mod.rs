//! Shared test inputs: exhaustive spec and label enumerations, random
//! integer complexes, and label-vector views of `GL(3)` chains.
#![allow(dead_code)]

use super::oracles;
use gln_chamber::gl3::{LittleComplex, LittleComplexReport};
use gln_chamber::homology::{chamber_boundary, gl3_top_boundary, Chain, ChainComplex, IntMatrix};
use gln_chamber::lattices::LatticeSequence;
use gln_chamber::orders::{EndoGroup, ParahoricSpec};
use gln_chamber::weyl::{Arrangement, Constituent, ParahoricLabel, TorusCharacterData};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

/// All specs with `N ≤ max_n`, at most two groups, ramification ≤ 2.
pub fn all_specs(max_n: u32) -> Vec<ParahoricSpec> {
    fn compositions(n: u32, e: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut first = e;
        while first <= n {
            for mut rest in compositions(n - first, e) {
                rest.insert(0, first);
                out.push(rest);
            }
            first += e;
        }
        out
    }
    let mut groups = Vec::new();
    for n in 1..=max_n {
        for e in 1..=2 {
            for dims in compositions(n, e) {
                if !dims.is_empty() {
                    groups.push((e, dims));
                }
            }
        }
    }
    let mut out = Vec::new();
    for (e, dims) in &groups {
        let g = EndoGroup { label: "A".into(), ramification: *e, dims: dims.clone() };
        out.push(ParahoricSpec::new(vec![g.clone()]).unwrap());
        for (e2, dims2) in &groups {
            if dims.iter().sum::<u32>() + dims2.iter().sum::<u32>() <= max_n {
                let h = EndoGroup { label: "B".into(), ramification: *e2, dims: dims2.clone() };
                out.push(ParahoricSpec::new(vec![g.clone(), h]).unwrap());
            }
        }
    }
    out
}

/// The profile of the chain underlying `s`, from explicit coordinates.
pub fn oracle_chain_profile(s: &LatticeSequence) -> Vec<i64> {
    let comps: Vec<(u32, u32)> = s.components().iter().map(|c| (c.dim(), c.ramification())).collect();
    oracles::quotient_dims(&comps, |i| s.index(i), s.period())
        .into_iter()
        .filter(|&d| d != 0)
        .collect()
}

/// Valuation matrix of the standard order of a profile, from the lattices
/// `L_k` spanned by `𝔭 e_1, …, 𝔭 e_{s_k}, e_{s_k + 1}, …`.
pub fn oracle_standard_order(profile: &[i64]) -> Vec<Vec<i64>> {
    let n: i64 = profile.iter().sum();
    let mut lattices = Vec::new();
    let mut s = 0;
    for d in profile {
        lattices.push((0..n).map(|i| i64::from(i < s)).collect::<Vec<i64>>());
        s += d;
    }
    oracles::order_valuations(&lattices)
}

/// The specs for which the inclusion does not hold: an unramified group of
/// two blocks next to a ramified single block. There `Λ` has profile
/// `(2,2)` and `Λ_max` has profile `(3,1)`; no order of type `(3,1)`
/// contains one of type `(2,2)`.
pub fn known_exception(spec: &ParahoricSpec) -> bool {
    let shape: Vec<(u32, Vec<u32>)> = spec.groups().iter().map(|g| (g.ramification, g.dims.clone())).collect();
    shape == vec![(1, vec![1, 1]), (2, vec![2])] || shape == vec![(2, vec![2]), (1, vec![1, 1])]
}

/// Labellings of `n` positions up to renaming, as first-appearance words.
pub fn label_patterns(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32]];
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &out {
            let max = *p.iter().max().unwrap();
            for l in 0..=max + 1 {
                let mut q = p.clone();
                q.push(l);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub fn torus(labels: &[u32]) -> TorusCharacterData {
    let n = labels.len();
    let c = (0..n)
        .map(|i| (0..n).map(|j| if labels[i] == labels[j] { 1 } else { 2 }).collect())
        .collect();
    TorusCharacterData::new(labels.to_vec(), c).unwrap()
}

pub fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, density: f64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| if rng.gen_bool(density) { rng.gen_range(-9..=9) } else { 0 }).collect())
        .collect()
}

/// A random unimodular matrix and its inverse, as products of elementary
/// operations.
pub fn random_unimodular(rng: &mut StdRng, n: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut inv = m.clone();
    if n < 2 {
        return (m, inv);
    }
    for _ in 0..2 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let q = rng.gen_range(-2..=2);
        // m ← E m with E = I + q e_ab; inv ← inv E⁻¹.
        for j in 0..n {
            m[a][j] += q * m[b][j];
        }
        for i in 0..n {
            inv[i][b] -= q * inv[i][a];
        }
    }
    (m, inv)
}

pub fn mul_i64(a: &[Vec<i64>], b: &[Vec<i64>], inner: usize, cols: usize) -> Vec<Vec<i64>> {
    a.iter().map(|r| (0..cols).map(|j| (0..inner).map(|k| r[k] * b[k][j]).sum()).collect()).collect()
}

/// A random three-term complex `C_2 → C_1 → C_0` with `∂∂ = 0`.
pub fn random_complex(seed: u64) -> ChainComplex {
    let mut rng = StdRng::seed_from_u64(seed);
    let (c2, p, q, c0) = (rng.gen_range(0..5), rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0..5));
    let c1 = p + q;
    // ∂2 = M [X; 0], ∂1 = [0 Y] M⁻¹.
    let x = random_matrix(&mut rng, p, c2, 0.7);
    let y = random_matrix(&mut rng, c0, q, 0.7);
    let mut stacked = x.clone();
    stacked.extend((0..q).map(|_| vec![0; c2]));
    let mut side: Vec<Vec<i64>> = y.into_iter().map(|r| [vec![0; p], r].concat()).collect();
    if c0 == 0 {
        side.clear();
    }
    let (m, inv) = random_unimodular(&mut rng, c1);
    let d2 = mul_i64(&m, &stacked, c1, c2);
    let d1 = mul_i64(&side, &inv, c1, c1);
    ChainComplex::new(
        vec![c0, c1, c2],
        vec![IntMatrix::from_rows(&d1, c1).unwrap(), IntMatrix::from_rows(&d2, c2).unwrap()],
    )
    .unwrap()
}

pub fn labelled(chain: &Chain<Constituent>) -> BTreeMap<String, i64> {
    chain.iter().map(|(c, &m)| (c.to_string(), m)).collect()
}

pub fn named_sum(report: &LittleComplexReport, degree: usize, terms: &[(&str, i64)]) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    for (name, k) in terms {
        let g = report.generator(degree, name).unwrap_or_else(|| panic!("no generator {name}"));
        for (label, m) in &g.chain {
            *out.entry(label.clone()).or_insert(0) += k * m;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// `∂` of the named degree-2 orbit sum, as a label vector, computed from the
/// ambient complex both by the general incidence rule and by the explicit
/// `GL(3)` top-boundary formula.
pub fn top_boundary(report: &LittleComplexReport, lc: &LittleComplex, name: &str) -> BTreeMap<String, i64> {
    let wanted: BTreeMap<String, i64> = report.generator(2, name).unwrap().chain.iter().cloned().collect();
    let g = lc.generators[2].iter().find(|g| labelled(g) == wanted).expect("generator in ambient complex");
    let general = labelled(&chamber_boundary(g, &lc.table).unwrap());
    let mut explicit = BTreeMap::new();
    for part in gl3_top_boundary(g, &lc.table).unwrap() {
        for (c, m) in part {
            *explicit.entry(c.to_string()).or_insert(0) += m;
        }
    }
    explicit.retain(|_, v: &mut i64| *v != 0);
    assert_eq!(general, explicit);
    general
}

/// All proper subsets of `{0, …, n−1}`.
pub fn facets(n: usize) -> Vec<ParahoricLabel> {
    (0..(1usize << n) - 1)
        .map(|mask| ParahoricLabel::new(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap())
        .collect()
}

/// `#{w ∈ W_S : w preserves the labels}` by brute force.
pub fn oracle_label_stabilizer(labels: &[u32], s: &ParahoricLabel) -> usize {
    let n = labels.len();
    oracles::closure(n, s.set())
        .iter()
        .filter(|w| {
            (1..=n as i64).all(|i| {
                labels[(oracles::ap_eval(w, i) - 1).rem_euclid(n as i64) as usize] == labels[(i - 1) as usize]
            })
        })
        .count()
}

/// The base arrangements of the five `GL(3)` pipelines: supercuspidal,
/// maximal Levi, and the three principal-series patterns.
pub fn gl3_bases() -> Vec<Arrangement> {
    vec![
        Arrangement::new(vec![0, 0, 0], [0]).unwrap(),
        Arrangement::new(vec![0, 0, 1], [0, 2]).unwrap(),
        TorusCharacterData::all_equal(3).unwrap().arrangement(),
        TorusCharacterData::pattern_12vs3(2).unwrap().arrangement(),
        TorusCharacterData::generic(2, 2, 2).unwrap().arrangement(),
    ]
}
