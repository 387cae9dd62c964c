//! Facets of the standard apartment and their finite parabolic subgroups.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use super::affine::AffinePermutation;
use crate::error::{Error, Result};

/// A facet of the standard alcove, recorded by the proper subset
/// `S ⊊ {0, …, N−1}` of affine simple reflections fixing it. The parahoric
/// fixing the facet is `J_S`; `S = ∅` is the Iwahori subgroup and the
/// facets of maximal `|S| = N − 1` are the vertices.
///
/// The facet has dimension `N − 1 − |S|`, which is also its degree in the
/// chamber complex.
///
/// ```
/// use gln_chamber::weyl::ParahoricLabel;
///
/// let j1 = ParahoricLabel::new(3, [1]).unwrap();
/// assert_eq!(j1.to_string(), "J_1");
/// assert_eq!(j1.degree(), 1);
/// assert_eq!(j1.rotate().to_string(), "J_2");
/// assert_eq!(ParahoricLabel::vertex(3, 0).unwrap().to_string(), "L_0");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParahoricLabel {
    n: usize,
    set: Vec<usize>,
}

impl ParahoricLabel {
    /// Validates `S ⊊ {0, …, n−1}`; `n ≥ 2`.
    pub fn new(n: usize, set: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                name: "n",
                reason: "facets are defined for n >= 2".into(),
            });
        }
        let set: BTreeSet<usize> = set.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= n) {
            return Err(Error::OutOfRange {
                name: "S",
                reason: format!("generator index {bad} is not below {n}"),
            });
        }
        if set.len() == n {
            return Err(Error::InfiniteParabolic(set.into_iter().collect()));
        }
        Ok(ParahoricLabel {
            n,
            set: set.into_iter().collect(),
        })
    }

    /// The Iwahori facet `S = ∅`.
    pub fn iwahori(n: usize) -> Result<Self> {
        ParahoricLabel::new(n, [])
    }

    /// The vertex `L_i`, i.e. `S = {0, …, n−1} \ {i}`.
    pub fn vertex(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::OutOfRange {
                name: "i",
                reason: format!("vertex index must be below {n}"),
            });
        }
        ParahoricLabel::new(n, (0..n).filter(|&j| j != i))
    }

    /// All facets of the standard alcove of degree `d`, ordered by their
    /// sorted generator sets.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<ParahoricLabel> {
        if d >= n {
            return Vec::new();
        }
        let size = n - 1 - d;
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == size {
                out.push(ParahoricLabel {
                    n,
                    set: (0..n).filter(|&i| mask & (1 << i) != 0).collect(),
                });
            }
        }
        out.sort();
        out
    }

    /// The rank `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The sorted generator set `S`.
    pub fn set(&self) -> &[usize] {
        &self.set
    }

    /// Whether `i ∈ S`.
    pub fn contains(&self, i: usize) -> bool {
        self.set.binary_search(&i).is_ok()
    }

    /// Whether `S ⊆ T`.
    pub fn is_subset(&self, other: &ParahoricLabel) -> bool {
        self.n == other.n && self.set.iter().all(|&i| other.contains(i))
    }

    /// `S ∪ {i}`, if it is still proper.
    pub fn with(&self, i: usize) -> Option<ParahoricLabel> {
        ParahoricLabel::new(self.n, self.set.iter().copied().chain([i])).ok()
    }

    /// The chamber-complex degree `N − 1 − |S|`.
    pub fn degree(&self) -> usize {
        self.n - 1 - self.set.len()
    }

    /// `ℛ(S) = S + 1 mod N`, the facet label of `Π⁻¹ J_S Π`.
    pub fn rotate(&self) -> ParahoricLabel {
        let mut set: Vec<usize> = self.set.iter().map(|&i| (i + 1) % self.n).collect();
        set.sort_unstable();
        ParahoricLabel { n: self.n, set }
    }
}

impl fmt::Display for ParahoricLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.set.is_empty() {
            return write!(f, "I");
        }
        if self.set.len() == self.n - 1 {
            let missing = (0..self.n).find(|&i| !self.contains(i)).expect("proper");
            return write!(f, "L_{missing}");
        }
        if self.set.len() == 1 {
            return write!(f, "J_{}", self.set[0]);
        }
        write!(f, "J{{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Elements of the finite parabolic subgroup `W_S`, each with its
/// shortlex-least reduced word, listed in shortlex order of those words
/// (so by increasing length).
pub fn parabolic_with_words(label: &ParahoricLabel) -> Vec<(AffinePermutation, Vec<usize>)> {
    let n = label.n();
    let gens: Vec<(usize, AffinePermutation)> = label
        .set()
        .iter()
        .map(|&i| (i, AffinePermutation::generator(n, i).expect("valid generator")))
        .collect();
    let id = AffinePermutation::identity(n);
    let mut seen: HashSet<AffinePermutation> = HashSet::from([id.clone()]);
    let mut out = vec![(id.clone(), Vec::new())];
    let mut queue = VecDeque::from([(id, Vec::<usize>::new())]);
    // Breadth-first search over words extended on the right, generators in
    // increasing order: the first word reaching an element is its
    // shortlex-least reduced word.
    while let Some((w, word)) = queue.pop_front() {
        for (i, s) in &gens {
            let v = &w * s;
            if seen.insert(v.clone()) {
                let mut wd = word.clone();
                wd.push(*i);
                out.push((v.clone(), wd.clone()));
                queue.push_back((v, wd));
            }
        }
    }
    out
}

/// The elements of `W_S` in the order of [`parabolic_with_words`].
pub fn parabolic_elements(label: &ParahoricLabel) -> Vec<AffinePermutation> {
    parabolic_with_words(label)
        .into_iter()
        .map(|(w, _)| w)
        .collect()
}

/// The shortlex-least reduced word of an element of `W_S`, or `None` if
/// `w ∉ W_S`.
pub fn reduced_word(label: &ParahoricLabel, w: &AffinePermutation) -> Option<Vec<usize>> {
    parabolic_with_words(label)
        .into_iter()
        .find(|(v, _)| v == w)
        .map(|(_, word)| word)
}

/// Minimal-length representatives of the double cosets
/// `W_left \ W_T / W_right`, where `left, right ⊆ T`. Each representative is
/// the shortlex-least element of its double coset and is returned with its
/// reduced word; representatives are listed in shortlex order.
pub fn double_cosets_between(
    left: &ParahoricLabel,
    t: &ParahoricLabel,
    right: &ParahoricLabel,
) -> Result<Vec<(AffinePermutation, Vec<usize>)>> {
    if !left.is_subset(t) || !right.is_subset(t) {
        return Err(Error::InvalidInput(format!(
            "double cosets need {left} and {right} contained in {t}"
        )));
    }
    let wl = parabolic_elements(left);
    let wr = parabolic_elements(right);
    let mut covered: HashMap<AffinePermutation, usize> = HashMap::new();
    let mut reps = Vec::new();
    for (x, word) in parabolic_with_words(t) {
        if covered.contains_key(&x) {
            continue;
        }
        let idx = reps.len();
        for a in &wl {
            let ax = a * &x;
            for b in &wr {
                covered.insert(&ax * b, idx);
            }
        }
        reps.push((x, word));
    }
    Ok(reps)
}

/// Minimal-length representatives of `W_S \ W_T / W_S` for `S ⊆ T`.
///
/// ```
/// use gln_chamber::weyl::{double_cosets, ParahoricLabel};
///
/// let i = ParahoricLabel::iwahori(3).unwrap();
/// let l0 = ParahoricLabel::vertex(3, 0).unwrap();
/// let words: Vec<Vec<usize>> = double_cosets(&i, &l0)
///     .unwrap()
///     .into_iter()
///     .map(|(_, w)| w)
///     .collect();
/// assert_eq!(words, vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]]);
/// ```
pub fn double_cosets(
    s: &ParahoricLabel,
    t: &ParahoricLabel,
) -> Result<Vec<(AffinePermutation, Vec<usize>)>> {
    double_cosets_between(s, t, s)
}

/// Renders a reduced word as `s0s2s0`, or `1` for the empty word.
pub fn word_to_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|i| format!("s{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_groups_have_order_six() {
        for i in 0..3 {
            let l = ParahoricLabel::vertex(3, i).unwrap();
            assert_eq!(parabolic_elements(&l).len(), 6);
        }
    }

    #[test]
    fn full_set_is_rejected() {
        assert!(matches!(
            ParahoricLabel::new(3, [0, 1, 2]),
            Err(Error::InfiniteParabolic(_))
        ));
    }

    #[test]
    fn words_match_lengths() {
        let l1 = ParahoricLabel::vertex(3, 1).unwrap();
        for (w, word) in parabolic_with_words(&l1) {
            assert_eq!(w.length() as usize, word.len());
        }
    }

    #[test]
    fn degree_listing() {
        let shown: Vec<String> = ParahoricLabel::all_of_degree(3, 1)
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(shown, vec!["J_0", "J_1", "J_2"]);
        let vertices: Vec<String> = ParahoricLabel::all_of_degree(3, 0)
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(vertices, vec!["L_2", "L_1", "L_0"]);
    }
}
