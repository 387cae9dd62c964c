//! Finite free chain complexes over `ℤ`, their homology, and the
//! two-column totalization.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::snf::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// A bounded complex `C_top → … → C_1 → C_0` of finite free abelian groups.
///
/// `boundaries[i − 1]` is `∂_i : C_i → C_{i−1}`, a matrix with
/// `rank C_{i−1}` rows and `rank C_i` columns acting on column vectors of
/// coordinates.
///
/// ```
/// use gln_chamber::homology::{ChainComplex, IntMatrix};
///
/// // The circle as one vertex and one edge: ∂ = 0.
/// let c = ChainComplex::new(vec![1, 1], vec![IntMatrix::zeros(1, 1)]).unwrap();
/// let h = c.homology();
/// assert_eq!(h.betti(), vec![1, 1]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Validates shapes and `∂_{i−1} ∘ ∂_i = 0`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidComplex("no chain groups".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::InvalidComplex(format!(
                "{} chain groups need {} boundary maps, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let i = k + 1;
            if b.rows() != ranks[i - 1] || b.cols() != ranks[i] {
                return Err(Error::InvalidComplex(format!(
                    "∂_{i} has shape {}×{}, expected {}×{}",
                    b.rows(),
                    b.cols(),
                    ranks[i - 1],
                    ranks[i]
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k])?.is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "∂_{} ∘ ∂_{} ≠ 0",
                    k,
                    k + 1
                )));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    /// Ranks of the chain groups, degree 0 first.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The top degree.
    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `∂_i`, for `1 ≤ i ≤ top`.
    pub fn boundary(&self, i: usize) -> &IntMatrix {
        &self.boundaries[i - 1]
    }

    /// All boundary maps, `∂_1` first.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// Homology in every degree, via Smith normal forms.
    pub fn homology(&self) -> HomologyResult {
        let forms: Vec<_> = self.boundaries.iter().map(smith_normal_form).collect();
        let rank = |i: usize| -> usize {
            if i == 0 || i > forms.len() {
                0
            } else {
                forms[i - 1].rank()
            }
        };
        let groups = (0..self.ranks.len())
            .map(|i| {
                let torsion = if i < forms.len() {
                    forms[i]
                        .invariant_factors
                        .iter()
                        .filter(|d| !d.is_one())
                        .cloned()
                        .collect()
                } else {
                    Vec::new()
                };
                HomologyGroup {
                    betti: self.ranks[i] - rank(i) - rank(i + 1),
                    torsion,
                }
            })
            .collect();
        HomologyResult { groups }
    }
}

/// A finitely generated abelian group `ℤ^betti ⊕ ⨁ ℤ/t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyGroup {
    /// The free rank.
    pub betti: usize,
    /// Invariant factors greater than one, each dividing the next.
    #[serde(with = "super::snf::bigint_vec")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    /// Whether the group has no torsion.
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The direct sum of groups, with torsion renormalised to invariant
    /// factors.
    pub fn direct_sum<'a>(groups: impl IntoIterator<Item = &'a HomologyGroup>) -> HomologyGroup {
        let mut betti = 0;
        let mut factors = Vec::new();
        for g in groups {
            betti += g.betti;
            factors.extend(g.torsion.iter().cloned());
        }
        let k = factors.len();
        let torsion = smith_normal_form(&IntMatrix::diagonal(k, k, &factors))
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        HomologyGroup { betti, torsion }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.betti)
            });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology groups `h_0, h_1, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    /// `groups[i]` is `h_i`.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    /// The free ranks, degree 0 first.
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Whether every group is free.
    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_free)
    }

    /// `⨁ h_i`.
    pub fn total(&self) -> HomologyGroup {
        HomologyGroup::direct_sum(&self.groups)
    }

    /// `⨁ h_{2k}`.
    pub fn even(&self) -> HomologyGroup {
        HomologyGroup::direct_sum(self.groups.iter().step_by(2))
    }

    /// `⨁ h_{2k+1}`.
    pub fn odd(&self) -> HomologyGroup {
        HomologyGroup::direct_sum(self.groups.iter().skip(1).step_by(2))
    }
}

/// Homology of [`ChainComplex`]; a free function for symmetry with
/// [`totalize`].
pub fn homology_of(c: &ChainComplex) -> HomologyResult {
    c.homology()
}

/// The homology of the totalization of a two-column double complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totalization {
    /// `H_n(Tot)` for `n = 0, …, top + 1`.
    pub tot: HomologyResult,
    /// `⨁_n H_{2n}(Tot)`.
    pub even: HomologyGroup,
    /// `⨁_n H_{2n+1}(Tot)`.
    pub odd: HomologyGroup,
}

/// Totalizes the double complex with two copies `C_{•,0}`, `C_{•,1}` of `c`
/// and zero horizontal map, so `Tot_n = C_n ⊕ C_{n−1}`; see
/// [`totalize_with_vertical`].
pub fn totalize(c: &ChainComplex) -> Result<Totalization> {
    let zero: Vec<IntMatrix> = c.ranks.iter().map(|&r| IntMatrix::zeros(r, r)).collect();
    totalize_with_vertical(c, &zero)
}

/// Totalizes the double complex with columns `C_{•,0}`, `C_{•,1}` (both
/// equal to `c`) and a chain map `V : C_{•,1} → C_{•,0}`, `V_n` square of
/// size `rank C_n`. The differential is
/// `D(x, y) = (∂x + (−1)^{n−1} V y, ∂y)` on `Tot_n = C_n ⊕ C_{n−1}`.
///
/// ```
/// use gln_chamber::homology::{totalize, ChainComplex, IntMatrix};
///
/// let c = ChainComplex::new(vec![2], vec![]).unwrap();
/// let t = totalize(&c).unwrap();
/// assert_eq!(t.even.betti, 2);
/// assert_eq!(t.odd.betti, 2);
/// ```
pub fn totalize_with_vertical(c: &ChainComplex, vertical: &[IntMatrix]) -> Result<Totalization> {
    let top = c.top_degree();
    if vertical.len() != c.ranks.len() {
        return Err(Error::InvalidComplex(format!(
            "expected {} vertical maps, got {}",
            c.ranks.len(),
            vertical.len()
        )));
    }
    for (n, v) in vertical.iter().enumerate() {
        if v.rows() != c.ranks[n] || v.cols() != c.ranks[n] {
            return Err(Error::InvalidComplex(format!("V_{n} has the wrong shape")));
        }
        if n >= 1 && c.boundary(n).mul(v)? != vertical[n - 1].mul(c.boundary(n))? {
            return Err(Error::InvalidComplex(format!(
                "V does not commute with ∂_{n}"
            )));
        }
    }
    let rank_c = |i: i64| -> usize {
        if i < 0 || i as usize > top {
            0
        } else {
            c.ranks[i as usize]
        }
    };
    let tot_rank = |n: i64| rank_c(n) + rank_c(n - 1);
    let ranks: Vec<usize> = (0..=top as i64 + 1).map(tot_rank).collect();
    let mut boundaries = Vec::new();
    for n in 1..=top as i64 + 1 {
        let mut d = IntMatrix::zeros(tot_rank(n - 1), tot_rank(n));
        let (cn, cn1, cn2) = (rank_c(n), rank_c(n - 1), rank_c(n - 2));
        // x ∈ C_n (columns 0..cn) ↦ ∂x ∈ C_{n−1} (rows 0..cn1).
        if n as usize <= top && cn > 0 {
            let b = c.boundary(n as usize);
            for i in 0..cn1 {
                for j in 0..cn {
                    d.set(i, j, b.get(i, j).clone());
                }
            }
        }
        // y ∈ C_{n−1} (columns cn..) ↦ ±V y ∈ C_{n−1} and ∂y ∈ C_{n−2}.
        let sign = if (n - 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let v = &vertical[(n - 1) as usize];
        for i in 0..cn1 {
            for j in 0..cn1 {
                let x = v.get(i, j);
                if !x.is_zero() {
                    d.set(i, cn + j, x * &sign);
                }
            }
        }
        if n >= 2 {
            let b = c.boundary((n - 1) as usize);
            for i in 0..cn2 {
                for j in 0..cn1 {
                    d.set(cn1 + i, cn + j, b.get(i, j).clone());
                }
            }
        }
        boundaries.push(d);
    }
    let tot = ChainComplex::new(ranks, boundaries)?.homology();
    Ok(Totalization {
        even: tot.even(),
        odd: tot.odd(),
        tot,
    })
}

/// The rank over `ℚ` of the subgroup of `ℤ^k` spanned by the given vectors.
pub fn rational_rank(vectors: &[Vec<i64>], k: usize) -> Result<usize> {
    let m = IntMatrix::from_rows(vectors, k)?;
    Ok(smith_normal_form(&m).rank())
}
