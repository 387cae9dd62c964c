//! Lattice sequences in a graded direct sum of component spaces.
//!
//! The ambient space is `V = V¹ ⊕ ⋯ ⊕ V^m`, where each `V^l` is an
//! `F`-vector space of dimension `N_l` carrying the structure of an
//! `E_l`-vector space with ramification index `e_l = e(E_l|F)`. Residue
//! degrees are taken to be 1, so `[E_l:F] = e_l` and `e_l | N_l`.
//!
//! Every lattice that occurs is a direct sum of standard lattices
//! `𝔭_{E_l}^t L₀^l`, so a lattice is recorded by its *index vector*
//! `(t_1, …, t_m)`. A lattice sequence `Λ` over `ℴ_F` with period `e` is
//! stored by its index vectors on the residues `0..e`, extended to all of
//! `ℤ` by `Λ(i + e) = 𝔭_F Λ(i)`, which adds `e_l` to the `l`-th index.
//! A larger index means a smaller lattice, so monotonicity reads
//! `i ≥ j ⇒ index(i) ≥ index(j)` componentwise.
//!
//! ```
//! use gln_chamber::lattices::{add_chains_first, add_chains_second, ComponentSpace, LatticeSequence};
//!
//! let chains = [
//!     LatticeSequence::standard_chain(ComponentSpace::new(2, 1, "V1", "F").unwrap()),
//!     LatticeSequence::standard_chain(ComponentSpace::new(1, 1, "V2", "F").unwrap()),
//! ];
//! let first = add_chains_first(&chains).unwrap();
//! let second = add_chains_second(&chains).unwrap();
//! assert_eq!(first.dimension_profile().unwrap().d, vec![1, 2]);
//! assert_eq!(second.dimension_profile().unwrap().d, vec![2, 1]);
//! ```

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// One summand `V^l` of the graded space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentSpace {
    dim: u32,
    ramification: u32,
    label: String,
    field: String,
}

impl ComponentSpace {
    /// A component of `F`-dimension `dim` which is a vector space over the
    /// field labelled `field`, of ramification index `ramification` over
    /// `F`. The ramification index must divide the dimension.
    pub fn new(
        dim: u32,
        ramification: u32,
        label: impl Into<String>,
        field: impl Into<String>,
    ) -> Result<Self> {
        if dim == 0 || ramification == 0 {
            return Err(Error::OutOfRange {
                name: "dim/ramification",
                reason: "both must be positive".into(),
            });
        }
        if !dim.is_multiple_of(ramification) {
            return Err(Error::InvalidInput(format!(
                "ramification {ramification} does not divide dimension {dim}"
            )));
        }
        Ok(ComponentSpace {
            dim,
            ramification,
            label: label.into(),
            field: field.into(),
        })
    }

    /// The `F`-dimension `N_l`.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// The ramification index `e(E_l|F)`.
    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    /// The opaque label of the space.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// The opaque label of the field `E_l`.
    pub fn field(&self) -> &str {
        &self.field
    }

    /// `N_l / e_l`: the `k_F`-dimension of `𝔭_E^t L / 𝔭_E^(t+1) L`.
    pub fn quotient_dim(&self) -> u32 {
        self.dim / self.ramification
    }
}

/// The residue-field dimensions `d_i = dim_{k_F} Λ(i)/Λ(i+1)` over one
/// period.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionProfile {
    /// The dimensions `d_0, …, d_{e−1}`.
    pub d: Vec<u32>,
}

impl DimensionProfile {
    /// `Σ d_i`, the total `F`-dimension.
    pub fn total(&self) -> u32 {
        self.d.iter().sum()
    }
}

/// A periodic, monotone family of lattices in `⊕ V^l`, in the index-vector
/// encoding described in the module documentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeSequence {
    components: Vec<ComponentSpace>,
    residues: Vec<Vec<i64>>,
}

impl LatticeSequence {
    /// Builds a sequence from its index vectors on one period. The period is
    /// `residues.len()`; monotonicity (including across the period boundary)
    /// is checked.
    pub fn new(components: Vec<ComponentSpace>, residues: Vec<Vec<i64>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a lattice sequence needs a component".into()));
        }
        if residues.is_empty() {
            return Err(Error::OutOfRange {
                name: "period",
                reason: "the period must be at least 1".into(),
            });
        }
        for r in &residues {
            if r.len() != components.len() {
                return Err(Error::DimensionMismatch {
                    expected: components.len(),
                    found: r.len(),
                });
            }
        }
        let labels: BTreeSet<&str> = components.iter().map(|c| c.label()).collect();
        if labels.len() != components.len() {
            return Err(Error::InvalidInput("component labels must be distinct".into()));
        }
        let s = LatticeSequence {
            components,
            residues,
        };
        let p = s.period() as i64;
        for i in 0..p {
            let (a, b) = (s.index(i), s.index(i + 1));
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Err(Error::InvalidInput(format!(
                    "lattice sequence is not monotone between {i} and {}",
                    i + 1
                )));
            }
        }
        Ok(s)
    }

    /// The standard `ℴ_E`-chain `t ↦ 𝔭_E^t L₀` in one component, viewed as
    /// an `ℴ_F`-sequence of period `e(E|F)`.
    pub fn standard_chain(component: ComponentSpace) -> Self {
        let e = component.ramification() as i64;
        LatticeSequence {
            components: vec![component],
            residues: (0..e).map(|i| vec![i]).collect(),
        }
    }

    /// The component spaces.
    pub fn components(&self) -> &[ComponentSpace] {
        &self.components
    }

    /// The `ℴ_F`-period `e(Λ)`.
    pub fn period(&self) -> u32 {
        self.residues.len() as u32
    }

    /// The total `F`-dimension `N = Σ N_l`.
    pub fn total_dim(&self) -> u32 {
        self.components.iter().map(|c| c.dim()).sum()
    }

    /// The per-component index shift over one period (`𝔭_F = 𝔭_E^{e_l}`).
    pub fn shift(&self) -> Vec<i64> {
        self.components
            .iter()
            .map(|c| c.ramification() as i64)
            .collect()
    }

    /// The index vector of `Λ(i)` for any integer `i`.
    pub fn index(&self, i: i64) -> Vec<i64> {
        let p = self.period() as i64;
        let (q, r) = i.div_mod_floor(&p);
        self.residues[r as usize]
            .iter()
            .zip(&self.components)
            .map(|(t, c)| t + q * c.ramification() as i64)
            .collect()
    }

    /// Whether `Λ(i) ≠ Λ(i+1)` for every `i`.
    pub fn is_strict(&self) -> bool {
        self.first_zero_step().is_none()
    }

    fn first_zero_step(&self) -> Option<usize> {
        (0..self.period() as i64)
            .position(|i| self.index(i) == self.index(i + 1))
    }

    /// The dimension profile of a strict sequence.
    pub fn dimension_profile(&self) -> Result<DimensionProfile> {
        if let Some(step) = self.first_zero_step() {
            return Err(Error::NotStrict { step });
        }
        Ok(self.dimension_profile_nonstrict())
    }

    /// The dimension profile, reporting `d_i = 0` where `Λ(i) = Λ(i+1)`.
    pub fn dimension_profile_nonstrict(&self) -> DimensionProfile {
        let d = (0..self.period() as i64)
            .map(|i| {
                let (a, b) = (self.index(i), self.index(i + 1));
                a.iter()
                    .zip(&b)
                    .zip(&self.components)
                    .map(|((x, y), c)| (y - x) as u32 * c.quotient_dim())
                    .sum()
            })
            .collect();
        DimensionProfile { d }
    }

    /// The underlying lattice chain `{Λ(i) : i ∈ ℤ}` as a strict sequence,
    /// starting at `Λ(0)`.
    pub fn to_chain(&self) -> LatticeSequence {
        let mut residues: Vec<Vec<i64>> = Vec::new();
        // Keep the last member of every run of equal lattices, so that the
        // wrap-around from one period to the next is handled too.
        for i in 0..self.period() as i64 {
            let v = self.index(i);
            if v != self.index(i + 1) {
                residues.push(v);
            }
        }
        LatticeSequence {
            components: self.components.clone(),
            residues,
        }
    }

    /// `Λ(x) = Λ(⌈x⌉)` for a rational argument.
    pub fn eval_real(&self, x: Ratio<i64>) -> Vec<i64> {
        self.index(x.ceil().to_integer())
    }

    /// `(mΛ)(i) = Λ(⌈i/m⌉)`, a sequence of period `m·e(Λ)`.
    pub fn scale(&self, m: u32) -> Result<LatticeSequence> {
        if m == 0 {
            return Err(Error::OutOfRange {
                name: "m",
                reason: "the scaling factor must be positive".into(),
            });
        }
        let m = m as i64;
        let residues = (0..m * self.period() as i64)
            .map(|i| self.eval_real(Ratio::new(i, m)))
            .collect();
        Ok(LatticeSequence {
            components: self.components.clone(),
            residues,
        })
    }

    /// `(Λ + t)(i) = Λ(i + t)`.
    pub fn translate(&self, t: i64) -> LatticeSequence {
        let residues = (0..self.period() as i64).map(|i| self.index(i + t)).collect();
        LatticeSequence {
            components: self.components.clone(),
            residues,
        }
    }
}

/// The direct sum `Λ(e x) = Λ¹(e₁ x) ⊕ ⋯ ⊕ Λ^q(e_q x)` with
/// `e = lcm(e₁, …, e_q)`, so `Λ(j)` has `i`-th part `Λ^i(⌈e_i j / e⌉)`.
pub fn direct_sum(seqs: &[LatticeSequence]) -> Result<LatticeSequence> {
    if seqs.is_empty() {
        return Err(Error::InvalidInput("direct sum of no sequences".into()));
    }
    let e = seqs
        .iter()
        .fold(1i64, |acc, s| acc.lcm(&(s.period() as i64)));
    let components: Vec<ComponentSpace> =
        seqs.iter().flat_map(|s| s.components.iter().cloned()).collect();
    let residues = (0..e)
        .map(|j| {
            seqs.iter()
                .flat_map(|s| s.eval_real(Ratio::new(s.period() as i64 * j, e)))
                .collect()
        })
        .collect();
    LatticeSequence::new(components, residues)
}

/// Checks that `chains` are period-1 `ℴ_E`-chains over a common field and
/// returns, per chain, its component and its base index `t₀` (so that the
/// chain is `j ↦ 𝔭_E^(t₀ + j) L₀`).
fn period_one_chains(chains: &[LatticeSequence]) -> Result<Vec<(ComponentSpace, i64)>> {
    let first = chains
        .first()
        .ok_or_else(|| Error::InvalidInput("no chains to add".into()))?;
    let field = first.components.first().map(|c| c.field().to_string());
    let mut out = Vec::with_capacity(chains.len());
    for c in chains {
        if c.components.len() != 1 {
            return Err(Error::InvalidInput(
                "each summand must be a chain in a single component".into(),
            ));
        }
        let comp = &c.components[0];
        if Some(comp.field().to_string()) != field
            || comp.ramification() != first.components[0].ramification()
        {
            return Err(Error::InvalidInput(
                "all chains must be over the same field E".into(),
            ));
        }
        let t0 = c.index(0)[0];
        let standard = (0..c.period() as i64).all(|i| c.index(i)[0] == t0 + i)
            && c.period() == comp.ramification();
        if !standard {
            return Err(Error::InvalidInput(
                "summands must be strict period-1 o_E-chains".into(),
            ));
        }
        out.push((comp.clone(), t0));
    }
    Ok(out)
}

fn add_chains(
    chains: &[LatticeSequence],
    rule: impl Fn(usize, usize, i64, i64) -> i64,
) -> Result<LatticeSequence> {
    let parts = period_one_chains(chains)?;
    let m = parts.len();
    let e = parts[0].0.ramification() as i64;
    let residues = (0..m as i64 * e)
        .map(|i| {
            let (j, k) = i.div_mod_floor(&(m as i64));
            parts
                .iter()
                .enumerate()
                .map(|(l, (_, t0))| t0 + rule(l + 1, m, j, k))
                .collect()
        })
        .collect();
    LatticeSequence::new(parts.into_iter().map(|(c, _)| c).collect(), residues)
}

/// The first addition procedure `ℒ¹ + ⋯ + ℒ^m`: the lattice of `ℴ_E`-index
/// `mj + k` (`0 ≤ k < m`) is `L_j¹ ⊕ ⋯ ⊕ L_j^{m−k} ⊕ L_{j+1}^{m−k+1} ⊕ ⋯ ⊕ L_{j+1}^m`.
/// Over `ℴ_F` the period is `m·e(E|F)` and `d_{mj+k} = N_{m−k}/[E:F]`.
pub fn add_chains_first(chains: &[LatticeSequence]) -> Result<LatticeSequence> {
    add_chains(chains, |l, m, j, k| if l + (k as usize) <= m { j } else { j + 1 })
}

/// The second addition procedure `ℒ^m + ⋯ + ℒ¹`: the lattice of `ℴ_E`-index
/// `mj + k` is `L_{j+1}¹ ⊕ ⋯ ⊕ L_{j+1}^k ⊕ L_j^{k+1} ⊕ ⋯ ⊕ L_j^m`.
/// Over `ℴ_F` the period is `m·e(E|F)` and `d_{mj+k} = N_{k+1}/[E:F]`.
pub fn add_chains_second(chains: &[LatticeSequence]) -> Result<LatticeSequence> {
    add_chains(chains, |l, _m, j, k| if l <= k as usize { j + 1 } else { j })
}
