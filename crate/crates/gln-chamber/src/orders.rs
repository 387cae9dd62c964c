//! Hereditary orders as valuation patterns, and the parahoric order `𝔄^𝔰`.
//!
//! # Conventions
//!
//! Every lattice of a sequence built by [`crate::lattices`] is *monomial* in
//! a fixed `F`-basis of `V`: for each component `V^l` of ramification `e`,
//! its `N_l` basis vectors `v_h` are given slots `σ_h = ⌊h / (N_l/e)⌋`, and
//! the lattice `𝔭_E^t L₀^l` is `⊕_h 𝔭_F^{⌈(t − σ_h)/e⌉} ℴ_F v_h`. A component
//! of ramification 1 and the same dimension uses the same vectors with all
//! slots 0, so orders from different sequences on the same spaces can be
//! compared entrywise.
//!
//! Matrices act on **row vectors** (the same convention as the window
//! notation of [`crate::weyl`]). The order of a sequence is then the set of
//! matrices `X` with `val(X_{a,c}) ≥ max_i (n_c(i) − n_a(i))`, where `n_h(i)`
//! is the exponent of `v_h` in `Λ(i)`. Each basis vector *drops* (its
//! exponent increases) at exactly one step of each period; grouping vectors
//! by drop step and listing the steps in increasing order gives the block
//! pattern of `𝔄(d₀, d₁, …, d_{e−1})`: entry `ℴ_F` when `block(a) ≤ block(c)`,
//! `𝔭_F` otherwise.
//!
//! ```
//! use gln_chamber::orders::{block_order, contains};
//!
//! let iwahori = block_order(&[1, 1, 1]).unwrap();
//! let maximal = block_order(&[3]).unwrap();
//! assert!(contains(&maximal, &iwahori).unwrap());
//! assert!(!contains(&iwahori, &maximal).unwrap());
//! assert_eq!(block_order(&[2, 1]).unwrap().valuation_matrix(),
//!            vec![vec![0, 0, 0], vec![0, 0, 0], vec![1, 1, 0]]);
//! ```

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattices::{add_chains_second, direct_sum, ComponentSpace, LatticeSequence};

/// A hereditary order, recorded by the block index of each basis vector.
///
/// Its valuation matrix has entry 0 (`ℴ_F`) at `(a, c)` when
/// `block(a) ≤ block(c)` and 1 (`𝔭_F`) otherwise. An order returned by
/// [`block_order`] uses the standard basis, in which blocks are contiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockOrder {
    block_sizes: Vec<u32>,
    block_of: Vec<usize>,
}

impl BlockOrder {
    /// Builds an order from an arbitrary ranking of basis vectors: vectors
    /// with equal keys share a block, and blocks are ordered by key.
    pub fn from_block_keys<K: Ord + Clone>(keys: &[K]) -> Result<Self> {
        if keys.is_empty() {
            return Err(Error::InvalidInput("an order needs at least one basis vector".into()));
        }
        let distinct: Vec<K> = keys.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let block_of: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("key is present"))
            .collect();
        let mut block_sizes = vec![0u32; distinct.len()];
        for &b in &block_of {
            block_sizes[b] += 1;
        }
        Ok(BlockOrder {
            block_sizes,
            block_of,
        })
    }

    /// The dimension `N`.
    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    /// The block sizes `(d₀, …, d_{e−1})`.
    pub fn block_sizes(&self) -> &[u32] {
        &self.block_sizes
    }

    /// The block index of every basis vector.
    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    /// The `N × N` matrix of valuation lower bounds (0 or 1).
    pub fn valuation_matrix(&self) -> Vec<Vec<u8>> {
        self.block_of
            .iter()
            .map(|&a| {
                self.block_of
                    .iter()
                    .map(|&c| u8::from(a > c))
                    .collect()
            })
            .collect()
    }

    /// The same order written in the standard basis, `𝔄(block_sizes)`.
    pub fn canonical(&self) -> BlockOrder {
        block_order(&self.block_sizes).expect("block sizes are positive")
    }

    /// The period `e(𝔄)`, i.e. the number of blocks.
    pub fn period(&self) -> usize {
        self.block_sizes.len()
    }
}

impl fmt::Display for BlockOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A(")?;
        for (i, d) in self.block_sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// The standard hereditary order `𝔄(N₁, …, N_r)`: the `(i,j)` block has
/// size `N_i × N_j`, with entries in `ℴ_F` for `i ≤ j` and `𝔭_F` otherwise.
pub fn block_order(sizes: &[u32]) -> Result<BlockOrder> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidInput(format!("invalid block sizes {sizes:?}")));
    }
    let block_of = sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &d)| std::iter::repeat_n(b, d as usize))
        .collect();
    Ok(BlockOrder {
        block_sizes: sizes.to_vec(),
        block_of,
    })
}

/// `true` iff `b ⊆ a`, i.e. every valuation bound of `b` is at least the
/// corresponding bound of `a`. Both orders must be written in the same basis.
pub fn contains(a: &BlockOrder, b: &BlockOrder) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    let (va, vb) = (a.valuation_matrix(), b.valuation_matrix());
    Ok(va
        .iter()
        .zip(&vb)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| y >= x)))
}

/// The exponent of the `h`-th basis vector of component `comp` in `Λ(i)`.
fn exponent(s: &LatticeSequence, comp: usize, h: u32, i: i64) -> i64 {
    let c = &s.components()[comp];
    let e = c.ramification() as i64;
    let slot = (h / c.quotient_dim()) as i64;
    num_integer::Integer::div_ceil(&(s.index(i)[comp] - slot), &e)
}

/// The order `𝔞₀(Λ)` written in the monomial basis described in the module
/// documentation (components in order, `h = 0..N_l` within each).
/// Non-strict sequences give the order of their underlying chain.
pub fn monomial_order(s: &LatticeSequence) -> BlockOrder {
    let p = s.period() as i64;
    let mut drops = Vec::new();
    for (comp, c) in s.components().iter().enumerate() {
        for h in 0..c.dim() {
            let step = (0..p)
                .find(|&i| exponent(s, comp, h, i + 1) > exponent(s, comp, h, i))
                .expect("every basis vector drops once per period");
            drops.push(step);
        }
    }
    BlockOrder::from_block_keys(&drops).expect("sequence has positive dimension")
}

/// The order of a strict lattice chain with profile `(d₀, …, d_{e−1})`,
/// i.e. `𝔄(d₀, …, d_{e−1})` in the standard basis.
pub fn order_from_chain(s: &LatticeSequence) -> Result<BlockOrder> {
    let profile = s.dimension_profile()?;
    block_order(&profile.d)
}

/// Intersects the order of a second-addition chain `ℒ^m + ⋯ + ℒ¹` with
/// the block-diagonal Levi subgroup `M(m₁, …, m_r)`.
///
/// Returns, for each group of `m_g` consecutive components, the diagonal
/// block of the order (in the monomial basis of those components). Each
/// equals the order of the partial chain built from that group alone.
pub fn levi_intersection(s: &LatticeSequence, partition: &[usize]) -> Result<Vec<BlockOrder>> {
    let comps = s.components();
    let rebuilt = add_chains_second(
        &comps
            .iter()
            .cloned()
            .map(LatticeSequence::standard_chain)
            .collect::<Vec<_>>(),
    )?;
    if &rebuilt != s {
        return Err(Error::InvalidInput(
            "levi_intersection expects a second-addition chain of standard chains".into(),
        ));
    }
    if partition.iter().sum::<usize>() != comps.len() || partition.contains(&0) {
        return Err(Error::InvalidInput(format!(
            "partition {partition:?} does not split {} components",
            comps.len()
        )));
    }
    let order = monomial_order(s);
    let mut offsets = Vec::with_capacity(comps.len() + 1);
    offsets.push(0usize);
    for c in comps {
        offsets.push(offsets.last().unwrap() + c.dim() as usize);
    }
    let mut out = Vec::with_capacity(partition.len());
    let mut first = 0;
    for &size in partition {
        let range = offsets[first]..offsets[first + size];
        out.push(BlockOrder::from_block_keys(&order.block_of()[range])?);
        first += size;
    }
    Ok(out)
}

/// One endo-class group of a Bernstein class: the blocks `N_{i,1}, …` whose
/// supercuspidal factors share the endo-class `label`, with ramification
/// index `e(E_i|F)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EndoGroup {
    /// Opaque endo-class label (the level-zero class is an ordinary label).
    pub label: String,
    /// The ramification index `e(E_i|F)`.
    pub ramification: u32,
    /// The block sizes `N_{i,j}` in this group, in the order they are added.
    pub dims: Vec<u32>,
}

/// The invariants that determine `J^𝔰`: the endo-class groups with their
/// block sizes and ramification indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParahoricSpec {
    groups: Vec<EndoGroup>,
}

impl ParahoricSpec {
    /// Validates the groups: labels distinct, block sizes positive and
    /// divisible by the group's ramification index.
    pub fn new(groups: Vec<EndoGroup>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidInput("at least one endo-class group is required".into()));
        }
        let labels: BTreeSet<&str> = groups.iter().map(|g| g.label.as_str()).collect();
        if labels.len() != groups.len() {
            return Err(Error::InvalidInput("endo-class labels must be distinct".into()));
        }
        for g in &groups {
            if g.dims.is_empty() {
                return Err(Error::InvalidInput(format!("group {} has no blocks", g.label)));
            }
            for &d in &g.dims {
                ComponentSpace::new(d, g.ramification, "check", g.label.clone())?;
            }
        }
        Ok(ParahoricSpec { groups })
    }

    /// Parses `"A:1,1,1"` or `"A@2:2,2|B:1"`: groups separated by `|`, each
    /// `label[@ramification]:dims`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut groups = Vec::new();
        for part in text.split('|') {
            let (head, dims) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("missing ':' in group {part:?}")))?;
            let (label, ramification) = match head.split_once('@') {
                Some((l, e)) => (
                    l.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad ramification in {part:?}")))?,
                ),
                None => (head.trim(), 1),
            };
            if label.is_empty() {
                return Err(Error::InvalidInput(format!("empty label in group {part:?}")));
            }
            let dims = dims
                .split(',')
                .map(|d| {
                    d.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad block size in {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            groups.push(EndoGroup {
                label: label.to_string(),
                ramification,
                dims,
            });
        }
        ParahoricSpec::new(groups)
    }

    /// The endo-class groups.
    pub fn groups(&self) -> &[EndoGroup] {
        &self.groups
    }

    /// The total dimension `N`.
    pub fn n(&self) -> u32 {
        self.groups.iter().flat_map(|g| g.dims.iter()).sum()
    }

    /// Whether the class is supercuspidal (a single block).
    pub fn is_supercuspidal(&self) -> bool {
        self.groups.len() == 1 && self.groups[0].dims.len() == 1
    }

    fn group_sequence(&self, g: &EndoGroup, maximal: bool) -> Result<LatticeSequence> {
        let chains = g
            .dims
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                let (e, field) = if maximal {
                    (1, "F".to_string())
                } else {
                    (g.ramification, g.label.clone())
                };
                ComponentSpace::new(d, e, format!("{}.{}", g.label, j + 1), field)
                    .map(LatticeSequence::standard_chain)
            })
            .collect::<Result<Vec<_>>>()?;
        let sum = add_chains_second(&chains)?;
        if maximal {
            sum.scale(g.ramification)
        } else {
            Ok(sum)
        }
    }

    /// `Λ = Λ¹ ⊕ ⋯ ⊕ Λ^q`, each `Λ^i` the second-addition chain of the
    /// group's `ℴ_{E_i}`-chains, viewed over `ℴ_F`.
    pub fn lambda(&self) -> Result<LatticeSequence> {
        let parts = self
            .groups
            .iter()
            .map(|g| self.group_sequence(g, false))
            .collect::<Result<Vec<_>>>()?;
        direct_sum(&parts)
    }

    /// `Λ_max = e(E₁|F)Λ¹_max ⊕ ⋯ ⊕ e(E_q|F)Λ^q_max`, each `Λ^i_max` the
    /// second-addition chain of the period-1 `ℴ_F`-chains `𝔭_F^j L₀`.
    pub fn lambda_max(&self) -> Result<LatticeSequence> {
        let parts = self
            .groups
            .iter()
            .map(|g| self.group_sequence(g, true))
            .collect::<Result<Vec<_>>>()?;
        direct_sum(&parts)
    }
}

/// The parahoric order `𝔄^𝔰 = 𝔄_{Λ_max}` in the standard basis.
pub fn parahoric_for(spec: &ParahoricSpec) -> Result<BlockOrder> {
    order_from_chain(&spec.lambda_max()?.to_chain())
}

/// Whether `𝔄_Λ ⊆ 𝔄_{Λ_max}`, with both orders identified with the
/// standard block pattern of their lattice chains.
///
/// Each order is the hereditary order of the strict chain underlying its
/// sequence, realised in the basis that makes it standard. Containment is
/// therefore decided on block patterns, i.e. up to the simultaneous choice
/// of basis, not in the fixed monomial basis of the component spaces.
///
/// ```
/// use gln_chamber::orders::{order_inclusion_check, ParahoricSpec};
///
/// // A(1,1,1,1) ⊆ A(2,2).
/// assert!(order_inclusion_check(&ParahoricSpec::parse("A@2:2,2").unwrap()).unwrap());
/// // Mixing an unramified pair with a ramified block gives A(2,2) against
/// // A(3,1): no inclusion.
/// assert!(!order_inclusion_check(&ParahoricSpec::parse("A:1,1|B@2:2").unwrap()).unwrap());
/// ```
pub fn order_inclusion_check(spec: &ParahoricSpec) -> Result<bool> {
    let a = order_from_chain(&spec.lambda()?.to_chain())?;
    contains(&parahoric_for(spec)?, &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        let s = ParahoricSpec::parse("A@2:2,2|B:1").unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.groups()[0].ramification, 2);
        assert!(ParahoricSpec::parse("A@2:3").is_err());
        assert!(ParahoricSpec::parse("A:1|A:2").is_err());
        assert!(ParahoricSpec::parse("A1,2").is_err());
    }

    #[test]
    fn containment_is_reflexive_and_checks_sizes() {
        let a = block_order(&[2, 1]).unwrap();
        assert!(contains(&a, &a).unwrap());
        assert!(contains(&a, &block_order(&[1, 1]).unwrap()).is_err());
    }

    #[test]
    fn monomial_keys_rank_blocks() {
        let o = BlockOrder::from_block_keys(&[5, 1, 5]).unwrap();
        assert_eq!(o.block_sizes(), &[1, 2]);
        assert_eq!(o.canonical(), block_order(&[1, 2]).unwrap());
    }
}
