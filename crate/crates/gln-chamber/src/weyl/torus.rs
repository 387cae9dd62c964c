//! Depth-independent data of characters of the diagonal torus.
//!
//! A character `χ = σ₁ ⊗ … ⊗ σ_N` of the diagonal torus is recorded only
//! through what the combinatorics needs: which `σ_i` agree on the units
//! `o_F^×` (the *unit classes*, encoded by per-position labels) and the
//! conductor exponents `c(σ_i σ_j⁻¹)`. Conductors follow the convention that
//! ratios trivial on the units have exponent 1, while ratios nontrivial on
//! the units have exponent at least 2.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::affine::AffinePermutation;
use super::arrangement::{Arrangement, Constituent, TypeEngine};
use super::parabolic::{double_cosets, ParahoricLabel};
use crate::error::{Error, Result};

/// Unit-class labels plus a symmetric matrix of conductor exponents.
///
/// ```
/// use gln_chamber::weyl::TorusCharacterData;
///
/// let d = TorusCharacterData::pattern_12vs3(3).unwrap();
/// assert_eq!(d.unit_classes(), vec![vec![1, 2], vec![3]]);
/// let g = d.roche_group();
/// assert_eq!(g.exponent(1, 3), Some(1)); // ⌊3/2⌋ above the diagonal
/// assert_eq!(g.exponent(3, 1), Some(2)); // ⌊(3+1)/2⌋ below it
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCharacterData {
    labels: Vec<u32>,
    conductor: Vec<Vec<u32>>,
}

impl TorusCharacterData {
    /// Validates the data:
    /// * `conductor` is a symmetric `N × N` matrix with ones on the
    ///   diagonal;
    /// * `c_ij = 1` exactly when positions `i` and `j` share a label;
    /// * `c_ik ≤ max(c_ij, c_jk)` for all distinct `i, j, k`.
    pub fn new(labels: Vec<u32>, conductor: Vec<Vec<u32>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("torus of rank zero".into()));
        }
        if conductor.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: conductor.len(),
            });
        }
        for row in &conductor {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for i in 0..n {
            if conductor[i][i] != 1 {
                return Err(Error::InvalidInput(format!(
                    "diagonal conductor c_{0}{0} must be 1",
                    i + 1
                )));
            }
            for j in 0..n {
                let c = conductor[i][j];
                if c != conductor[j][i] {
                    return Err(Error::InvalidInput("conductor matrix is not symmetric".into()));
                }
                if i != j {
                    let same = labels[i] == labels[j];
                    if same && c != 1 {
                        return Err(Error::InvalidInput(format!(
                            "positions {} and {} share a unit class but c = {c}",
                            i + 1,
                            j + 1
                        )));
                    }
                    if !same && c < 2 {
                        return Err(Error::InvalidInput(format!(
                            "positions {} and {} differ on the units, so their conductor must be at least 2",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i != j && j != k && i != k
                        && conductor[i][k] > conductor[i][j].max(conductor[j][k])
                    {
                        return Err(Error::InvalidInput(format!(
                            "conductors violate the ultrametric rule at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(TorusCharacterData { labels, conductor })
    }

    /// `N` characters agreeing on the units.
    pub fn all_equal(n: usize) -> Result<Self> {
        TorusCharacterData::new(vec![0; n], vec![vec![1; n]; n])
    }

    /// `GL(3)` data with `σ₁ ≡ σ₂ ≢ σ₃` on the units, `c(σ₁σ₃⁻¹) = ℓ`.
    pub fn pattern_12vs3(ell: u32) -> Result<Self> {
        TorusCharacterData::new(
            vec![0, 0, 1],
            vec![vec![1, 1, ell], vec![1, 1, ell], vec![ell, ell, 1]],
        )
    }

    /// `GL(3)` data with three distinct unit classes and the given
    /// pairwise conductors.
    pub fn generic(c12: u32, c13: u32, c23: u32) -> Result<Self> {
        TorusCharacterData::new(
            vec![0, 1, 2],
            vec![vec![1, c12, c13], vec![c12, 1, c23], vec![c13, c23, 1]],
        )
    }

    /// The rank `N`.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Per-position unit-class labels.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// `c(σ_i σ_j⁻¹)` for 1-based `i, j`.
    pub fn conductor(&self, i: usize, j: usize) -> u32 {
        self.conductor[i - 1][j - 1]
    }

    /// The full conductor matrix.
    pub fn conductor_matrix(&self) -> &[Vec<u32>] {
        &self.conductor
    }

    /// The unit classes as sets of 1-based positions, ordered by their
    /// first position.
    pub fn unit_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<(u32, Vec<usize>)> = Vec::new();
        for (i, &l) in self.labels.iter().enumerate() {
            match out.iter_mut().find(|(m, _)| *m == l) {
                Some((_, v)) => v.push(i + 1),
                None => out.push((l, vec![i + 1])),
            }
        }
        out.into_iter().map(|(_, v)| v).collect()
    }

    /// The compact open subgroup on which `χ` extends to a character:
    /// units on the diagonal and `𝔭^{⌊c_ij/2⌋}` (above the diagonal) or
    /// `𝔭^{⌊(c_ij+1)/2⌋}` (below it) in position `(i, j)`.
    pub fn roche_group(&self) -> RocheGroup {
        let n = self.n();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = self.conductor[i][j];
                        match i.cmp(&j) {
                            std::cmp::Ordering::Equal => None,
                            std::cmp::Ordering::Less => Some(c / 2),
                            std::cmp::Ordering::Greater => Some(c.div_ceil(2)),
                        }
                    })
                    .collect()
            })
            .collect();
        RocheGroup { entries }
    }

    /// The arrangement of singleton blocks carrying the unit-class labels.
    pub fn arrangement(&self) -> Arrangement {
        Arrangement::singletons(self.labels.clone()).expect("labels are nonempty")
    }

    /// Whether `w`'s finite part preserves the unit classes, i.e. whether
    /// `w` lies in the extended stabiliser of the component.
    pub fn stabilizes(&self, w: &AffinePermutation) -> bool {
        w.n() == self.n()
            && w
                .finite_part()
                .iter()
                .enumerate()
                .all(|(i, &p)| self.labels[p] == self.labels[i])
    }
}

/// The congruence exponents of the group carrying the extension of a torus
/// character: `None` on the diagonal (units), `Some(k)` for `𝔭^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RocheGroup {
    entries: Vec<Vec<Option<u32>>>,
}

impl RocheGroup {
    /// The exponent in 1-based position `(i, j)`.
    pub fn exponent(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i - 1][j - 1]
    }

    /// All entries.
    pub fn entries(&self) -> &[Vec<Option<u32>>] {
        &self.entries
    }
}

impl fmt::Display for RocheGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.entries.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|e| match e {
                    None => "o^x".to_string(),
                    Some(0) => "o".to_string(),
                    Some(k) => format!("p^{k}"),
                })
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The permutations (as windows in `1..=N`) of the finite Weyl group that
/// preserve the unit classes, in lexicographic window order.
pub fn finite_stabilizer(d: &TorusCharacterData) -> Vec<AffinePermutation> {
    let n = d.n();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        if p.iter().enumerate().all(|(i, &q)| d.labels[q] == d.labels[i]) {
            out.push(
                AffinePermutation::new(p.iter().map(|&q| q as i64 + 1).collect())
                    .expect("a permutation"),
            );
        }
    });
    out.sort();
    out
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Whether `w ∈ W̃` lies in the extended stabiliser of the component of
/// `d` (its finite part preserves the unit classes).
pub fn extended_stabilizer_membership(d: &TorusCharacterData, w: &AffinePermutation) -> bool {
    d.stabilizes(w)
}

/// The Iwahori double cosets in `J_S` that intertwine the type of `d`:
/// elements of `W_S` preserving the unit classes, with their reduced words
/// in shortlex order.
///
/// ```
/// use gln_chamber::weyl::{compact_intertwining, ParahoricLabel, TorusCharacterData};
///
/// let d = TorusCharacterData::pattern_12vs3(2).unwrap();
/// let l1 = ParahoricLabel::vertex(3, 1).unwrap();
/// let words: Vec<Vec<usize>> = compact_intertwining(&d, &l1)
///     .unwrap()
///     .into_iter()
///     .map(|(_, w)| w)
///     .collect();
/// assert_eq!(words, vec![vec![], vec![0, 2, 0]]);
/// ```
pub fn compact_intertwining(
    d: &TorusCharacterData,
    s: &ParahoricLabel,
) -> Result<Vec<(AffinePermutation, Vec<usize>)>> {
    if s.n() != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: s.n(),
        });
    }
    let iwahori = ParahoricLabel::iwahori(d.n())?;
    Ok(double_cosets(&iwahori, s)?
        .into_iter()
        .filter(|(w, _)| d.stabilizes(w))
        .collect())
}

/// `Ind_I^{J_S}` of the type of `d`, decomposed into irreducibles with
/// multiplicities.
pub fn decompose_induced(
    d: &TorusCharacterData,
    s: &ParahoricLabel,
) -> Result<Vec<(Constituent, u64)>> {
    let w = d.arrangement();
    TypeEngine::from_arrangement(&w).decompose(s, &w)
}

/// Whether two torus data define different inertial classes, i.e. have
/// different multisets of unit-class labels.
pub fn disjointness(d: &TorusCharacterData, e: &TorusCharacterData) -> bool {
    let mut a = d.labels.clone();
    let mut b = e.labels.clone();
    a.sort_unstable();
    b.sort_unstable();
    a != b
}

/// `dim Hom_{J_S}(Ind_I^{J_S} λ_e, Ind_I^{J_S} λ_d)`; zero for disjoint
/// data.
pub fn hom_dimension(
    d: &TorusCharacterData,
    e: &TorusCharacterData,
    s: &ParahoricLabel,
) -> Result<usize> {
    if d.n() != e.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: e.n(),
        });
    }
    if disjointness(d, e) {
        return Ok(0);
    }
    let w = d.arrangement();
    TypeEngine::from_arrangement(&w).hom_dimension(s, &w, &e.arrangement())
}
