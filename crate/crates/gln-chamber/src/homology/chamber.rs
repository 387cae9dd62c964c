//! The chamber complex of a Bernstein component on the standard alcove,
//! assembled from per-facet constituent bases and an induction table.
//!
//! Chains are finite formal sums `Σ n_c · c` of constituent labels; a label
//! knows the facet it lives on (trait [`Located`]). The boundary of a label
//! at `J_S` is `Σ_v ε(S, v) · Ind_{J_S}^{J_{S ∪ {v}}}(c)` over the `v ∉ S`
//! with `S ∪ {v}` proper.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use super::complex::ChainComplex;
use super::snf::IntMatrix;
use crate::error::{Error, Result};
use crate::weyl::{Constituent, ParahoricLabel};

/// A finite formal `ℤ`-combination of labels; zero coefficients are never
/// stored.
pub type Chain<L> = BTreeMap<L, i64>;

/// Adds `coeff · label` to `chain`.
pub fn add_term<L: Ord>(chain: &mut Chain<L>, label: L, coeff: i64) {
    if coeff == 0 {
        return;
    }
    let entry = chain.entry(label);
    match entry {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if *e.get() == 0 {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
    }
}

/// `chain += coeff · other`.
pub fn add_chain<L: Ord + Clone>(chain: &mut Chain<L>, other: &Chain<L>, coeff: i64) {
    for (l, c) in other {
        add_term(chain, l.clone(), coeff * c);
    }
}

/// A label attached to a facet of the standard alcove.
pub trait Located {
    /// The facet carrying the label.
    fn facet(&self) -> &ParahoricLabel;
}

impl Located for Constituent {
    fn facet(&self) -> &ParahoricLabel {
        &self.facet
    }
}

/// `Ind_{J_S}^{J_U}` on labels, for every label and every facet `U ⊋ S`
/// one generator larger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionTable<L: Ord> {
    entries: BTreeMap<(L, ParahoricLabel), Chain<L>>,
}

impl<L: Ord> Default for InductionTable<L> {
    fn default() -> Self {
        InductionTable {
            entries: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone + Display> InductionTable<L> {
    /// An empty table.
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `Ind^{target}(label) = image`.
    pub fn insert(&mut self, label: L, target: ParahoricLabel, image: Chain<L>) {
        self.entries.insert((label, target), image);
    }

    /// `Ind^{target}(label)`.
    pub fn get(&self, label: &L, target: &ParahoricLabel) -> Result<&Chain<L>> {
        self.entries
            .get(&(label.clone(), target.clone()))
            .ok_or_else(|| Error::MissingTableEntry {
                label: label.to_string(),
                target: target.to_string(),
            })
    }

    /// `Ind^{target}` applied linearly to a chain.
    pub fn induce(&self, chain: &Chain<L>, target: &ParahoricLabel) -> Result<Chain<L>> {
        let mut out = Chain::new();
        for (l, c) in chain {
            add_chain(&mut out, self.get(l, target)?, *c);
        }
        Ok(out)
    }

    /// All entries, keyed by `(label, target facet)`.
    pub fn entries(&self) -> &BTreeMap<(L, ParahoricLabel), Chain<L>> {
        &self.entries
    }
}

/// The incidence number `ε(S, v)` of the face `S ∪ {v}` of the facet `S`.
///
/// For `N = 3` the signs are those of the explicit formulas for
/// [`gl3_boundary`] and [`gl3_top_boundary`]: every face of the chamber
/// has sign `+1`, and an edge `J_a` meets the vertex obtained by adding
/// `v` with sign `+1` exactly when `v ≡ a − 1 (mod 3)`. For other `N` the
/// ordered-label convention `(−1)^{#{s ∈ S : s < v}}` is used.
pub fn incidence(s: &ParahoricLabel, v: usize) -> Result<i64> {
    if s.contains(v) || v >= s.n() {
        return Err(Error::InvalidInput(format!("{v} does not extend {s}")));
    }
    if s.with(v).is_none() {
        return Err(Error::InfiniteParabolic((0..s.n()).collect()));
    }
    if s.n() == 3 {
        return Ok(match s.set() {
            [] => 1,
            [a] if v == (a + 2) % 3 => 1,
            _ => -1,
        });
    }
    let below = s.set().iter().filter(|&&x| x < v).count();
    Ok(if below % 2 == 0 { 1 } else { -1 })
}

/// The boundary of a homogeneous chain.
pub fn chamber_boundary<L>(chain: &Chain<L>, table: &InductionTable<L>) -> Result<Chain<L>>
where
    L: Located + Ord + Clone + Display,
{
    let mut out = Chain::new();
    for (label, &coeff) in chain {
        let s = label.facet();
        for v in 0..s.n() {
            if s.contains(v) {
                continue;
            }
            if let Some(u) = s.with(v) {
                add_chain(&mut out, table.get(label, &u)?, coeff * incidence(s, v)?);
            }
        }
    }
    Ok(out)
}

fn check_support<L: Located + Display>(chain: &Chain<L>, facet: &ParahoricLabel) -> Result<()> {
    for l in chain.keys() {
        if l.facet() != facet {
            return Err(Error::InvalidInput(format!(
                "{l} lives on {}, expected {facet}",
                l.facet()
            )));
        }
    }
    Ok(())
}

fn gl3_facets() -> Result<([ParahoricLabel; 3], [ParahoricLabel; 3])> {
    let j = [
        ParahoricLabel::new(3, [0])?,
        ParahoricLabel::new(3, [1])?,
        ParahoricLabel::new(3, [2])?,
    ];
    let l = [
        ParahoricLabel::vertex(3, 0)?,
        ParahoricLabel::vertex(3, 1)?,
        ParahoricLabel::vertex(3, 2)?,
    ];
    Ok((j, l))
}

/// `∂` on `GL(3)` 1-chains `(v₀, v₁, v₂)`, `v_k` supported on `J_k`:
///
/// ```text
/// ∂v = ( Ind_{J_2}^{L_0} v₂ − Ind_{J_1}^{L_0} v₁,
///        Ind_{J_0}^{L_1} v₀ − Ind_{J_2}^{L_1} v₂,
///       −Ind_{J_0}^{L_2} v₀ + Ind_{J_1}^{L_2} v₁ ).
/// ```
pub fn gl3_boundary<L>(v: &[Chain<L>; 3], table: &InductionTable<L>) -> Result<[Chain<L>; 3]>
where
    L: Located + Ord + Clone + Display,
{
    let (j, l) = gl3_facets()?;
    for k in 0..3 {
        check_support(&v[k], &j[k])?;
    }
    let combine = |terms: [(usize, usize, i64); 2]| -> Result<Chain<L>> {
        let mut out = Chain::new();
        for (k, target, sign) in terms {
            add_chain(&mut out, &table.induce(&v[k], &l[target])?, sign);
        }
        Ok(out)
    };
    Ok([
        combine([(2, 0, 1), (1, 0, -1)])?,
        combine([(0, 1, 1), (2, 1, -1)])?,
        combine([(0, 2, -1), (1, 2, 1)])?,
    ])
}

/// `∂` on `GL(3)` 2-chains: `∂v = (Ind_I^{J_0} v, Ind_I^{J_1} v, Ind_I^{J_2} v)`.
pub fn gl3_top_boundary<L>(v: &Chain<L>, table: &InductionTable<L>) -> Result<[Chain<L>; 3]>
where
    L: Located + Ord + Clone + Display,
{
    let (j, _) = gl3_facets()?;
    check_support(v, &ParahoricLabel::iwahori(3)?)?;
    Ok([
        table.induce(v, &j[0])?,
        table.induce(v, &j[1])?,
        table.induce(v, &j[2])?,
    ])
}

/// Whether a `GL(3)` 1-chain is vertex compatible: the two inductions to
/// each vertex agree, i.e. `∂v = 0`.
pub fn is_vertex_compatible<L>(v: &[Chain<L>; 3], table: &InductionTable<L>) -> Result<bool>
where
    L: Located + Ord + Clone + Display,
{
    Ok(gl3_boundary(v, table)?.iter().all(BTreeMap::is_empty))
}

/// Coordinates of a chain in a basis.
pub fn chain_to_vector<L: Ord + Display>(chain: &Chain<L>, basis: &[L]) -> Result<Vec<i64>> {
    let mut out = vec![0; basis.len()];
    for (l, &c) in chain {
        let i = basis
            .iter()
            .position(|b| b == l)
            .ok_or_else(|| Error::InvalidComplex(format!("{l} is not a basis label")))?;
        out[i] = c;
    }
    Ok(out)
}

/// The complex with the given per-degree bases and boundary from the
/// induction table.
pub fn assemble<L>(bases: &[Vec<L>], table: &InductionTable<L>) -> Result<ChainComplex>
where
    L: Located + Ord + Clone + Display,
{
    let ranks = bases.iter().map(Vec::len).collect();
    let mut boundaries = Vec::new();
    for i in 1..bases.len() {
        let mut m = IntMatrix::zeros(bases[i - 1].len(), bases[i].len());
        for (j, label) in bases[i].iter().enumerate() {
            let b = chamber_boundary(&Chain::from([(label.clone(), 1)]), table)?;
            for (r, c) in chain_to_vector(&b, &bases[i - 1])?.into_iter().enumerate() {
                m.set(r, j, c.into());
            }
        }
        boundaries.push(m);
    }
    ChainComplex::new(ranks, boundaries)
}

/// The subcomplex of chains fixed by a rotation `ℛ` permuting each basis:
/// its basis is the `ℛ`-orbit sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantComplex<L: Ord> {
    /// Orbit sums per degree, ordered by their least member.
    pub generators: Vec<Vec<Chain<L>>>,
    /// The complex in the orbit-sum bases.
    pub complex: ChainComplex,
}

/// Builds the `ℛ`-invariant subcomplex. `rotate` must permute each basis
/// and commute with the boundary; both are checked.
pub fn invariant_subcomplex<L, F>(
    bases: &[Vec<L>],
    table: &InductionTable<L>,
    rotate: F,
) -> Result<InvariantComplex<L>>
where
    L: Located + Ord + Clone + Display,
    F: Fn(&L) -> Result<L>,
{
    let mut generators = Vec::new();
    for basis in bases {
        let set: BTreeSet<&L> = basis.iter().collect();
        let mut seen: BTreeSet<L> = BTreeSet::new();
        let mut orbits = Vec::new();
        let mut sorted: Vec<&L> = basis.iter().collect();
        sorted.sort();
        for l in sorted {
            if seen.contains(l) {
                continue;
            }
            let mut orbit = Chain::new();
            let mut cur = l.clone();
            while !seen.contains(&cur) {
                if !set.contains(&cur) {
                    return Err(Error::InvalidComplex(format!(
                        "rotation leaves the basis at {cur}"
                    )));
                }
                seen.insert(cur.clone());
                orbit.insert(cur.clone(), 1);
                cur = rotate(&cur)?;
            }
            if cur != *l {
                return Err(Error::InvalidComplex(format!(
                    "rotation is not a permutation near {l}"
                )));
            }
            orbits.push(orbit);
        }
        generators.push(orbits);
    }
    let ranks = generators.iter().map(Vec::len).collect();
    let mut boundaries = Vec::new();
    for i in 1..generators.len() {
        let mut m = IntMatrix::zeros(generators[i - 1].len(), generators[i].len());
        for (j, g) in generators[i].iter().enumerate() {
            let b = chamber_boundary(g, table)?;
            let mut rebuilt = Chain::new();
            for (r, h) in generators[i - 1].iter().enumerate() {
                let first = h.keys().next().expect("orbits are nonempty");
                let c = b.get(first).copied().unwrap_or(0);
                m.set(r, j, c.into());
                add_chain(&mut rebuilt, h, c);
            }
            if rebuilt != b {
                return Err(Error::InvalidComplex(format!(
                    "boundary of an orbit sum in degree {i} is not rotation invariant"
                )));
            }
        }
        boundaries.push(m);
    }
    Ok(InvariantComplex {
        complex: ChainComplex::new(ranks, boundaries)?,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl3_incidences_match_explicit_formula() {
        let j2 = ParahoricLabel::new(3, [2]).unwrap();
        let j1 = ParahoricLabel::new(3, [1]).unwrap();
        let j0 = ParahoricLabel::new(3, [0]).unwrap();
        assert_eq!(incidence(&j2, 1).unwrap(), 1);
        assert_eq!(incidence(&j1, 2).unwrap(), -1);
        assert_eq!(incidence(&j0, 2).unwrap(), 1);
        assert_eq!(incidence(&j2, 0).unwrap(), -1);
        assert_eq!(incidence(&j0, 1).unwrap(), -1);
        assert_eq!(incidence(&j1, 0).unwrap(), 1);
        assert!(incidence(&j1, 1).is_err());
    }

    #[test]
    fn add_term_drops_zeros() {
        let mut c: Chain<u32> = Chain::new();
        add_term(&mut c, 1, 2);
        add_term(&mut c, 1, -2);
        assert!(c.is_empty());
    }
}
