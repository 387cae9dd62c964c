//! Bernstein-component shapes of `GL(N)` and the rank formula.
//!
//! A point of the Bernstein spectrum is recorded purely combinatorially: a
//! list of *distinct* supercuspidal blocks, each with a block size `m` (the
//! `GL(m)` factor) and an exponent `e` (how many times that inertial class is
//! repeated in the Levi subgroup). The supercuspidal representations
//! themselves are never materialised.
//!
//! The rank of the K-theory (equivalently of the even or odd chamber
//! homology) of the component with blocks `(m_i, e_i)`, `i = 1..r`, is
//!
//! ```text
//! rank = 2^(r-1) * β(e_1) * ... * β(e_r),   β(e) = Σ_{π ⊢ e} 2^(κ(π) - 1),
//! ```
//!
//! where `κ(π)` is the number of distinct part values of the partition `π`.
//!
//! ```
//! use gln_chamber::spectrum::{beta, enumerate_levi_classes, rank_of_component};
//!
//! assert_eq!(beta(3).unwrap(), 4);
//! let ranks: Vec<u64> = enumerate_levi_classes(3)
//!     .unwrap()
//!     .iter()
//!     .map(rank_of_component)
//!     .collect();
//! assert_eq!(ranks, vec![1, 2, 4, 4, 4]);
//! ```

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition, stored with its parts in nonincreasing order.
///
/// The empty partition (of 0) is representable, but every operation with a
/// positive-integer precondition rejects it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts that are already nonincreasing and
    /// positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be nonincreasing",
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from positive parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the partition of 0.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parts grouped as `(value, multiplicity)`, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first,
/// `(1,…,1)` last. `partitions(0)` is the single empty partition.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The number of distinct part values of `p`.
pub fn kappa(p: &Partition) -> u32 {
    p.multiplicities().len() as u32
}

/// `β(e) = Σ_{π ⊢ e} 2^(κ(π) − 1)`. Rejects `e = 0`, for which no convention
/// is fixed.
pub fn beta(e: u32) -> Result<u64> {
    if e == 0 {
        return Err(Error::OutOfRange {
            name: "e",
            reason: "beta is defined for e >= 1".into(),
        });
    }
    Ok(partitions(e)
        .iter()
        .map(|p| 1u64 << (kappa(p) - 1))
        .sum())
}

/// One distinct supercuspidal block of a Levi datum: `GL(size)` repeated
/// `exponent` times (up to unramified twist).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    /// The block size `m`.
    pub size: u32,
    /// The exponent `e`.
    pub exponent: u32,
}

/// A Bernstein component shape: the list of distinct blocks, in canonical
/// order (descending size, then descending exponent).
///
/// Two entries with the same `(size, exponent)` denote *different* inertial
/// classes and are never merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BernsteinClass {
    n: u32,
    blocks: Vec<Block>,
}

impl BernsteinClass {
    /// Validates and canonicalises a list of `(size, exponent)` blocks.
    pub fn new(blocks: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut blocks: Vec<Block> = blocks
            .into_iter()
            .map(|(size, exponent)| Block { size, exponent })
            .collect();
        if blocks.is_empty() {
            return Err(Error::InvalidInput("a Bernstein class needs at least one block".into()));
        }
        if blocks.iter().any(|b| b.size == 0 || b.exponent == 0) {
            return Err(Error::InvalidInput(
                "block sizes and exponents must be positive".into(),
            ));
        }
        blocks.sort_by(|a, b| b.cmp(a));
        let n = blocks.iter().map(|b| b.size * b.exponent).sum();
        Ok(BernsteinClass { n, blocks })
    }

    /// The rank `N` of the ambient `GL(N)`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The distinct blocks in canonical order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number `r` of distinct blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The Levi partition of `N`: each block size repeated by its exponent.
    pub fn levi_partition(&self) -> Partition {
        let parts = self
            .blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.size, b.exponent as usize))
            .collect();
        Partition::from_unsorted(parts).expect("block sizes are positive")
    }
}

impl fmt::Display for BernsteinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", b.size, b.exponent)?;
        }
        write!(f, "]")
    }
}

/// `2^(r−1) · Π β(e_i)` over the distinct blocks of `c`.
pub fn rank_of_component(c: &BernsteinClass) -> u64 {
    let r = c.num_blocks() as u32;
    c.blocks
        .iter()
        .map(|b| beta(b.exponent).expect("exponents are positive"))
        .product::<u64>()
        << (r - 1)
}

/// All component shapes of `GL(n)`, grouped by Levi partition.
///
/// Levi partitions appear in reverse lexicographic order. Within a Levi
/// partition, each part value `m` of multiplicity `k` is split into
/// exponents by a partition of `k`; the choice for the largest `m` varies
/// slowest and each choice runs through the partitions of `k` in reverse
/// lexicographic order.
pub fn enumerate_levi_groups(n: u32) -> Result<Vec<(Partition, Vec<BernsteinClass>)>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            reason: "n must be positive".into(),
        });
    }
    let mut out = Vec::new();
    for levi in partitions(n) {
        let mut shapes: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
        for (m, k) in levi.multiplicities() {
            let mut next = Vec::new();
            for prefix in &shapes {
                for split in partitions(k) {
                    let mut s = prefix.clone();
                    s.extend(split.parts().iter().map(|&e| (m, e)));
                    next.push(s);
                }
            }
            shapes = next;
        }
        let classes = shapes
            .into_iter()
            .map(BernsteinClass::new)
            .collect::<Result<Vec<_>>>()?;
        out.push((levi, classes));
    }
    Ok(out)
}

/// All component shapes of `GL(n)` in the canonical order of
/// [`enumerate_levi_groups`], flattened.
pub fn enumerate_levi_classes(n: u32) -> Result<Vec<BernsteinClass>> {
    Ok(enumerate_levi_groups(n)?
        .into_iter()
        .flat_map(|(_, cs)| cs)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let ps: Vec<Vec<u32>> = partitions(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            ps,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
    }

    #[test]
    fn class_is_canonicalised() {
        let c = BernsteinClass::new([(1, 1), (2, 1)]).unwrap();
        assert_eq!(c.blocks()[0], Block { size: 2, exponent: 1 });
        assert_eq!(c.n(), 3);
        assert_eq!(c.levi_partition().parts(), &[2, 1]);
    }

    #[test]
    fn n2_shapes() {
        let cs = enumerate_levi_classes(2).unwrap();
        let shown: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["[(2,1)]", "[(1,2)]", "[(1,1),(1,1)]"]);
    }
}
