//! Standard types on facets of the standard apartment and the combinatorics
//! of inducing them between parahoric subgroups.
//!
//! A *standard arrangement* `ω` records a type in the simplest situation the
//! chamber-complex machinery needs: the `N` basis positions are cut into
//! cyclic intervals (the blocks of a Levi factor `M_ω` sitting in the
//! parahoric `J_{S_ω}`, where `S_ω` consists of the simple reflections
//! internal to blocks), and each block carries an abstract label naming the
//! inertial class of the depth-zero cuspidal datum living on it. Positions
//! inside one block share the block's label.
//!
//! For `x ∈ W_T` with `S_ω ⊆ T` the arrangement `x·ω` has labels
//! `(x·ω)(q) = ω(p_x(q))`, where `p_x` is the finite part of `x`, and blocks
//! `x⁻¹(B)`, each block being read as an interval of integer positions (the
//! last block running past `N`). The action is a left action. It is only
//! applied when the result is again standard (every image block an integer
//! interval).
//!
//! Irreducible constituents of `Ind_{J_{S_ω}}^{J_T} λ_ω` are indexed by the
//! irreducible representations of the relative group `R_T(ω)` of block
//! permutations realised by the stabiliser of `ω` in `W_T`; this group is
//! required to be a Young subgroup (a product of symmetric groups on its
//! orbits), as it is for every component of `GL(N)`, so its irreducibles are
//! tuples of partitions.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use super::affine::AffinePermutation;
use super::characters::{character, cycle_type, dimension};
use super::parabolic::{parabolic_elements, ParahoricLabel};
use crate::error::{Error, Result};
use crate::spectrum::{partitions, Partition};

/// A standard arrangement: block starts and per-position labels.
///
/// ```
/// use gln_chamber::weyl::{AffinePermutation, Arrangement};
///
/// let w = Arrangement::new(vec![0, 0, 1], vec![0, 2]).unwrap();
/// assert_eq!(w.facet().to_string(), "J_1");
/// assert_eq!(w.to_string(), "@0:aa|b");
/// let s2 = AffinePermutation::generator(3, 2).unwrap();
/// // s2 separates the two positions of the first block.
/// assert!(w.act(&s2).is_none());
/// let c = AffinePermutation::new(vec![3, 1, 2]).unwrap();
/// assert_eq!(w.act(&c).unwrap().to_string(), "@0:b|aa");
/// assert_eq!(w.rotate().to_string(), "@0:b|aa");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrangement {
    starts: Vec<usize>,
    labels: Vec<u32>,
}

impl Arrangement {
    /// Validates: nonempty `labels`, `starts` a nonempty set of positions,
    /// labels constant on each block.
    pub fn new(labels: Vec<u32>, starts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("arrangement of zero positions".into()));
        }
        let starts: Vec<usize> = starts
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if starts.is_empty() {
            return Err(Error::InvalidInput("arrangement needs at least one block".into()));
        }
        if starts.iter().any(|&s| s >= n) {
            return Err(Error::InvalidInput(format!(
                "block start outside 0..{n}: {starts:?}"
            )));
        }
        let a = Arrangement { starts, labels };
        for block in a.blocks() {
            if block.iter().any(|&q| a.labels[q] != a.labels[block[0]]) {
                return Err(Error::InvalidInput(format!(
                    "labels {:?} are not constant on block {block:?}",
                    a.labels
                )));
            }
        }
        Ok(a)
    }

    /// The arrangement of `N` singleton blocks with the given labels.
    pub fn singletons(labels: Vec<u32>) -> Result<Self> {
        let n = labels.len();
        Arrangement::new(labels, 0..n)
    }

    /// The number of positions `N`.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Per-position labels.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Sorted block starts.
    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.starts.len()
    }

    /// Positions of block `b`, in cyclic order from its start. The last
    /// block wraps around past position `N − 1`.
    pub fn block(&self, b: usize) -> Vec<usize> {
        let n = self.n();
        let start = self.starts[b];
        let next = if b + 1 < self.starts.len() {
            self.starts[b + 1]
        } else {
            self.starts[0] + n
        };
        (start..next).map(|q| q % n).collect()
    }

    /// All blocks, in order of their starts.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.num_blocks()).map(|b| self.block(b)).collect()
    }

    /// The label carried by block `b`.
    pub fn block_label(&self, b: usize) -> u32 {
        self.labels[self.starts[b]]
    }

    /// Index of the block with the given start.
    pub fn block_with_start(&self, start: usize) -> Option<usize> {
        self.starts.binary_search(&start).ok()
    }

    /// The multiset of `(label, block size)` pairs, sorted.
    pub fn block_multiset(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = self
            .blocks()
            .iter()
            .map(|b| (self.labels[b[0]], b.len()))
            .collect();
        out.sort_unstable();
        out
    }

    /// `S_ω`: the simple reflections internal to blocks, i.e. the cuts
    /// `i ∈ {0, …, N−1}` that are not block starts.
    pub fn facet(&self) -> ParahoricLabel {
        let n = self.n();
        ParahoricLabel::new(n, (0..n).filter(|i| !self.starts.contains(i)))
            .expect("a nonempty start set leaves a proper facet")
    }

    /// `x·ω`, or `None` if some image block is not an interval.
    pub fn act(&self, x: &AffinePermutation) -> Option<Arrangement> {
        Some(self.act_with_blocks(x)?.0)
    }

    /// `x·ω` together with, for each block of `ω` (by index), the start of
    /// its image block in `x·ω`.
    pub fn act_with_blocks(&self, x: &AffinePermutation) -> Option<(Arrangement, Vec<usize>)> {
        let n = self.n();
        assert_eq!(x.n(), n, "rank mismatch");
        let p = x.finite_part();
        let xinv = x.inverse();
        let labels: Vec<u32> = (0..n).map(|q| self.labels[p[q]]).collect();
        let mut images = Vec::with_capacity(self.num_blocks());
        for b in 0..self.num_blocks() {
            // The block as an interval of integer positions (1-based), the
            // last one running past N; its image must again be an interval.
            let start = self.starts[b] as i64 + 1;
            let len = self.block(b).len() as i64;
            let image: Vec<i64> = (start..start + len).map(|i| xinv.eval(i)).collect();
            let lo = *image.iter().min().expect("blocks are nonempty");
            let hi = *image.iter().max().expect("blocks are nonempty");
            if hi - lo + 1 != len {
                return None;
            }
            images.push((lo - 1).rem_euclid(n as i64) as usize);
        }
        let arrangement = Arrangement {
            starts: images.iter().copied().collect::<BTreeSet<_>>().into_iter().collect(),
            labels,
        };
        Some((arrangement, images))
    }

    /// `ℛω = Π⁻¹·ω`: labels move one position up, cyclically.
    pub fn rotate(&self) -> Arrangement {
        let n = self.n();
        let labels = (0..n).map(|q| self.labels[(q + n - 1) % n]).collect();
        let mut starts: Vec<usize> = self.starts.iter().map(|&s| (s + 1) % n).collect();
        starts.sort_unstable();
        Arrangement { starts, labels }
    }
}

fn label_letter(l: u32) -> String {
    if l < 26 {
        char::from(b'a' + l as u8).to_string()
    } else {
        format!("<{l}>")
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:", self.starts[0])?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                write!(f, "|")?;
            }
            for &q in block {
                write!(f, "{}", label_letter(self.labels[q]))?;
            }
        }
        Ok(())
    }
}

/// One factor of an irreducible representation of a Young subgroup: the
/// orbit (as block starts) and the partition labelling the irreducible of
/// its symmetric group. Orbits of size one are omitted from irreps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitIrrep {
    /// Starts of the blocks forming the orbit, sorted.
    pub blocks: Vec<usize>,
    /// The partition of the orbit size.
    pub partition: Partition,
}

/// An irreducible constituent of an induced type on a parahoric `J_T`:
/// the facet, the canonical arrangement of its class, and the irreducible
/// of the relative group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Constituent {
    /// The facet `T`.
    pub facet: ParahoricLabel,
    /// The canonical arrangement of the class at `T`.
    pub arrangement: Arrangement,
    /// The irreducible of `R_T(ω)`, one factor per orbit of size ≥ 2.
    pub irrep: Vec<OrbitIrrep>,
}

impl Constituent {
    /// The degree of the constituent's facet.
    pub fn degree(&self) -> usize {
        self.facet.degree()
    }

    /// Dimension of the irreducible of the relative group.
    pub fn irrep_dimension(&self) -> u64 {
        self.irrep.iter().map(|o| dimension(&o.partition)).product()
    }
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⟨{}⟩", self.facet, self.arrangement)?;
        for o in &self.irrep {
            write!(f, "{{")?;
            for (k, b) in o.blocks.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{b}")?;
            }
            write!(f, "}}{}", o.partition)?;
        }
        Ok(())
    }
}

/// The standard arrangements of one component together with the induction
/// combinatorics on facets of the standard alcove.
///
/// ```
/// use gln_chamber::weyl::{Arrangement, ParahoricLabel, TypeEngine};
///
/// // Three equal characters of the torus of GL(3).
/// let engine = TypeEngine::from_arrangement(&Arrangement::singletons(vec![0, 0, 0]).unwrap());
/// let l0 = ParahoricLabel::vertex(3, 0).unwrap();
/// let cs = engine.constituents_at(&l0).unwrap();
/// let dims: Vec<u64> = cs.iter().map(|c| c.irrep_dimension()).collect();
/// assert_eq!(dims, vec![1, 2, 1]);
/// ```
#[derive(Debug, Clone)]
pub struct TypeEngine {
    n: usize,
    arrangements: Vec<Arrangement>,
}

impl TypeEngine {
    /// Builds the engine for the component containing `base`: all standard
    /// arrangements with the same multiset of `(label, block size)`.
    pub fn from_arrangement(base: &Arrangement) -> Self {
        let n = base.n();
        let target = base.block_multiset();
        let mut arrangements = Vec::new();
        for mask in 1u32..(1 << n) {
            let starts: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let shape = Arrangement {
                starts: starts.clone(),
                labels: vec![0; n],
            };
            let sizes: Vec<usize> = shape.blocks().iter().map(Vec::len).collect();
            let mut sorted_sizes = sizes.clone();
            sorted_sizes.sort_unstable();
            let mut target_sizes: Vec<usize> = target.iter().map(|t| t.1).collect();
            target_sizes.sort_unstable();
            if sorted_sizes != target_sizes {
                continue;
            }
            let mut assignment = Vec::new();
            let mut used = vec![false; target.len()];
            assign_labels(&shape, &sizes, &target, &mut used, &mut assignment, &mut arrangements);
        }
        arrangements.sort();
        arrangements.dedup();
        TypeEngine { n, arrangements }
    }

    /// The rank `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All standard arrangements of the component, sorted.
    pub fn arrangements(&self) -> &[Arrangement] {
        &self.arrangements
    }

    fn check_standard(&self, t: &ParahoricLabel, w: &Arrangement) -> Result<()> {
        if t.n() != self.n || w.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: if t.n() != self.n { t.n() } else { w.n() },
            });
        }
        if !w.facet().is_subset(t) {
            return Err(Error::InvalidInput(format!(
                "arrangement {w} lives on {}, which is not contained in {t}",
                w.facet()
            )));
        }
        if !self.arrangements.contains(w) {
            return Err(Error::InvalidInput(format!(
                "arrangement {w} is not in this component"
            )));
        }
        Ok(())
    }

    /// The canonical representative of the `W_T`-class of `ω` (the least
    /// standard arrangement of the class) and the first `x ∈ W_T`, in
    /// shortlex order, with `x·ω` equal to it.
    pub fn canonical(
        &self,
        t: &ParahoricLabel,
        w: &Arrangement,
    ) -> Result<(Arrangement, AffinePermutation)> {
        self.check_standard(t, w)?;
        let mut best: Option<(Arrangement, AffinePermutation)> = None;
        for x in parabolic_elements(t) {
            if let Some(y) = w.act(&x) {
                if best.as_ref().is_none_or(|(b, _)| y < *b) {
                    best = Some((y, x));
                }
            }
        }
        Ok(best.expect("the identity maps ω to itself"))
    }

    /// Canonical representatives of all classes at `T`, sorted.
    pub fn classes_at(&self, t: &ParahoricLabel) -> Result<Vec<Arrangement>> {
        let mut out = BTreeSet::new();
        for w in &self.arrangements {
            if w.facet().is_subset(t) {
                out.insert(self.canonical(t, w)?.0);
            }
        }
        Ok(out.into_iter().collect())
    }

    /// The relative group `R_T(ω)`: block permutations `perm[b] = b'`
    /// induced by the elements of `W_T` fixing `ω`.
    pub fn relative_group(&self, t: &ParahoricLabel, w: &Arrangement) -> Result<Vec<Vec<usize>>> {
        self.check_standard(t, w)?;
        let mut out = BTreeSet::new();
        for x in parabolic_elements(t) {
            if let Some((y, images)) = w.act_with_blocks(&x) {
                if y == *w {
                    let perm: Vec<usize> = images
                        .iter()
                        .map(|&s| w.block_with_start(s).expect("image block of ω"))
                        .collect();
                    out.insert(perm);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Orbits (as sorted block indices) of `R_T(ω)`, after checking that it
    /// is the full product of the symmetric groups on them.
    pub fn young_orbits(&self, t: &ParahoricLabel, w: &Arrangement) -> Result<Vec<Vec<usize>>> {
        let group = self.relative_group(t, w)?;
        let r = w.num_blocks();
        let mut orbit_of = vec![usize::MAX; r];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for b in 0..r {
            if orbit_of[b] != usize::MAX {
                continue;
            }
            let orbit: BTreeSet<usize> = group.iter().map(|g| g[b]).collect();
            for &c in &orbit {
                orbit_of[c] = orbits.len();
            }
            orbits.push(orbit.into_iter().collect());
        }
        let young: usize = orbits
            .iter()
            .map(|o| (1..=o.len()).product::<usize>())
            .product();
        if young != group.len() {
            return Err(Error::NotYoungSubgroup(format!(
                "R_{t}({w}) has order {} but its orbits {orbits:?} give {young}",
                group.len()
            )));
        }
        Ok(orbits)
    }

    /// The irreducibles of `R_T(ω)`: one partition per orbit of size ≥ 2,
    /// in lexicographic order of the partition tuples as listed by
    /// [`partitions`] (largest first).
    pub fn irreps(&self, t: &ParahoricLabel, w: &Arrangement) -> Result<Vec<Vec<OrbitIrrep>>> {
        let orbits: Vec<Vec<usize>> = self
            .young_orbits(t, w)?
            .into_iter()
            .filter(|o| o.len() >= 2)
            .collect();
        let mut out: Vec<Vec<OrbitIrrep>> = vec![Vec::new()];
        for orbit in &orbits {
            let starts: Vec<usize> = orbit.iter().map(|&b| w.starts[b]).collect();
            let mut next = Vec::new();
            for prefix in &out {
                for p in partitions(orbit.len() as u32) {
                    let mut v = prefix.clone();
                    v.push(OrbitIrrep {
                        blocks: starts.clone(),
                        partition: p,
                    });
                    next.push(v);
                }
            }
            out = next;
        }
        for irrep in &mut out {
            irrep.sort();
        }
        Ok(out)
    }

    /// The irreducible constituents at `T`: for each class (in sorted
    /// order), the irreducibles of its relative group.
    pub fn constituents_at(&self, t: &ParahoricLabel) -> Result<Vec<Constituent>> {
        let mut out = Vec::new();
        for w in self.classes_at(t)? {
            for irrep in self.irreps(t, &w)? {
                out.push(Constituent {
                    facet: t.clone(),
                    arrangement: w.clone(),
                    irrep,
                });
            }
        }
        Ok(out)
    }

    /// Transports an irrep of `R_T(ω)` to the canonical representative of
    /// the class of `ω` at `T`.
    fn transport(
        &self,
        t: &ParahoricLabel,
        w: &Arrangement,
        irrep: Vec<OrbitIrrep>,
    ) -> Result<Constituent> {
        let (canon, x) = self.canonical(t, w)?;
        let (_, images) = w.act_with_blocks(&x).expect("canonical image is standard");
        let mut irrep: Vec<OrbitIrrep> = irrep
            .into_iter()
            .map(|o| {
                let mut blocks: Vec<usize> = o
                    .blocks
                    .iter()
                    .map(|&s| images[w.block_with_start(s).expect("orbit block")])
                    .collect();
                blocks.sort_unstable();
                OrbitIrrep {
                    blocks,
                    partition: o.partition,
                }
            })
            .collect();
        irrep.sort();
        Ok(Constituent {
            facet: t.clone(),
            arrangement: canon,
            irrep,
        })
    }

    /// The character value of an irrep (given on blocks of `w`) at a block
    /// permutation preserving its orbits.
    fn character_at(w: &Arrangement, irrep: &[OrbitIrrep], g: &[usize]) -> i64 {
        irrep
            .iter()
            .map(|o| {
                let idx: Vec<usize> = o
                    .blocks
                    .iter()
                    .map(|&s| w.block_with_start(s).expect("orbit block"))
                    .collect();
                let local: Vec<usize> = idx
                    .iter()
                    .map(|&b| idx.iter().position(|&c| c == g[b]).expect("g preserves the orbit"))
                    .collect();
                character(&o.partition, &cycle_type(&local))
            })
            .product()
    }

    /// `Ind_{J_{S_ω}}^{J_T} λ_ω` as a list of constituents with
    /// multiplicities (each irrep of `R_T(ω)` occurs with multiplicity its
    /// dimension).
    pub fn decompose(&self, t: &ParahoricLabel, w: &Arrangement) -> Result<Vec<(Constituent, u64)>> {
        let mut out = Vec::new();
        for irrep in self.irreps(t, w)? {
            let c = self.transport(t, w, irrep)?;
            let d = c.irrep_dimension();
            out.push((c, d));
        }
        out.sort();
        Ok(out)
    }

    /// `Ind_{J_S}^{J_U}` of a constituent at `S ⊆ U`, as constituents at
    /// `U` with multiplicities, computed by Frobenius reciprocity between
    /// the relative groups `R_S(ω) ⊆ R_U(ω)`.
    pub fn induce(&self, c: &Constituent, u: &ParahoricLabel) -> Result<Vec<(Constituent, i64)>> {
        if !c.facet.is_subset(u) {
            return Err(Error::InvalidInput(format!(
                "cannot induce from {} to {u}: not a larger facet",
                c.facet
            )));
        }
        let w = &c.arrangement;
        let rs = self.relative_group(&c.facet, w)?;
        let mut out = Vec::new();
        for psi in self.irreps(u, w)? {
            let total: i64 = rs
                .iter()
                .map(|g| Self::character_at(w, &c.irrep, g) * Self::character_at(w, &psi, g))
                .sum();
            let order = rs.len() as i64;
            debug_assert_eq!(total % order, 0, "inner product must be integral");
            let mult = total / order;
            if mult != 0 {
                out.push((self.transport(u, w, psi)?, mult));
            }
        }
        out.sort();
        Ok(out)
    }

    /// `ℛ` on constituents: the facet rotates to `ℛ(T)` and the arrangement
    /// to `ℛω`, then the result is re-canonicalised.
    pub fn rotate(&self, c: &Constituent) -> Result<Constituent> {
        let n = self.n;
        let w = c.arrangement.rotate();
        let irrep = c
            .irrep
            .iter()
            .map(|o| {
                let mut blocks: Vec<usize> = o.blocks.iter().map(|&s| (s + 1) % n).collect();
                blocks.sort_unstable();
                OrbitIrrep {
                    blocks,
                    partition: o.partition.clone(),
                }
            })
            .collect();
        self.transport(&c.facet.rotate(), &w, irrep)
    }

    /// `dim Hom_{J_T}(Ind λ_{ω'}, Ind λ_ω)`: the number of `x ∈ W_T` with
    /// `x·ω' = ω`, divided by `|W_{S_ω}|` (one per intertwining double
    /// coset).
    pub fn hom_dimension(&self, t: &ParahoricLabel, w: &Arrangement, w2: &Arrangement) -> Result<usize> {
        self.check_standard(t, w)?;
        self.check_standard(t, w2)?;
        let count = parabolic_elements(t)
            .iter()
            .filter(|x| w2.act(x).as_ref() == Some(w))
            .count();
        Ok(count / parabolic_elements(&w.facet()).len())
    }
}

fn assign_labels(
    shape: &Arrangement,
    sizes: &[usize],
    target: &[(u32, usize)],
    used: &mut Vec<bool>,
    assignment: &mut Vec<u32>,
    out: &mut Vec<Arrangement>,
) {
    let b = assignment.len();
    if b == sizes.len() {
        let mut labels = vec![0; shape.n()];
        for (blk, &l) in shape.blocks().iter().zip(assignment.iter()) {
            for &q in blk {
                labels[q] = l;
            }
        }
        out.push(Arrangement {
            starts: shape.starts.clone(),
            labels,
        });
        return;
    }
    let mut tried = BTreeSet::new();
    for k in 0..target.len() {
        if used[k] || target[k].1 != sizes[b] || !tried.insert(target[k]) {
            continue;
        }
        used[k] = true;
        assignment.push(target[k].0);
        assign_labels(shape, sizes, target, used, assignment, out);
        assignment.pop();
        used[k] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, s: &[usize]) -> ParahoricLabel {
        ParahoricLabel::new(n, s.iter().copied()).unwrap()
    }

    #[test]
    fn levi_component_has_three_arrangements() {
        let base = Arrangement::new(vec![0, 0, 1], [0, 2]).unwrap();
        let e = TypeEngine::from_arrangement(&base);
        assert_eq!(e.arrangements().len(), 3);
    }

    #[test]
    fn generic_torus_induces_to_regular_representation() {
        let e = TypeEngine::from_arrangement(&Arrangement::singletons(vec![0, 1, 2]).unwrap());
        let i = l(3, &[]);
        let c = &e.constituents_at(&i).unwrap()[0];
        let out = e.induce(c, &l(3, &[1, 2])).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].1, 1);
    }

    #[test]
    fn rotation_has_order_n_on_constituents() {
        let e = TypeEngine::from_arrangement(&Arrangement::singletons(vec![0, 0, 1]).unwrap());
        for d in 0..3 {
            for t in ParahoricLabel::all_of_degree(3, d) {
                for c in e.constituents_at(&t).unwrap() {
                    let r3 = e.rotate(&e.rotate(&e.rotate(&c).unwrap()).unwrap()).unwrap();
                    assert_eq!(r3, c);
                }
            }
        }
    }
}
