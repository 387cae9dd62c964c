//! Irreducible characters of symmetric groups.

use std::collections::BTreeSet;

use crate::spectrum::Partition;

/// The cycle type of a permutation of `0..k` (given as `perm[i] = image`),
/// parts in nonincreasing order.
pub fn cycle_type(perm: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule, where `μ` is a cycle type of
/// the same size as `λ` (in any order).
///
/// ```
/// use gln_chamber::spectrum::Partition;
/// use gln_chamber::weyl::characters::character;
///
/// let std = Partition::new(vec![2, 1]).unwrap();
/// assert_eq!(character(&std, &[1, 1, 1]), 2);
/// assert_eq!(character(&std, &[2, 1]), 0);
/// assert_eq!(character(&std, &[3]), -1);
/// ```
pub fn character(lambda: &Partition, mu: &[u32]) -> i64 {
    assert_eq!(
        lambda.size(),
        mu.iter().sum::<u32>(),
        "cycle type and partition have different sizes"
    );
    let k = lambda.len() as i64;
    // Beta-numbers: removing a rim hook of length r moves one bead down r
    // places onto an empty position.
    let beads: BTreeSet<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + k - 1 - i as i64)
        .collect();
    mn(&beads, mu)
}

fn mn(beads: &BTreeSet<i64>, mu: &[u32]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let r = r as i64;
    let mut total = 0;
    for &b in beads {
        let target = b - r;
        if target < 0 || beads.contains(&target) {
            continue;
        }
        let between = beads.range(target + 1..b).count();
        let mut next = beads.clone();
        next.remove(&b);
        next.insert(target);
        let sign = if between.is_multiple_of(2) { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}

/// `dim χ^λ = n! / Π hook lengths`.
pub fn dimension(lambda: &Partition) -> u64 {
    let parts = lambda.parts();
    let n = lambda.size() as u64;
    let num: u64 = (1..=n).product();
    let mut hooks: u64 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&p| p as usize > j).count();
            hooks *= (arm + leg + 1) as u64;
        }
    }
    num / hooks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::partitions;

    #[test]
    fn dimension_matches_identity_value() {
        for n in 1..=6 {
            for p in partitions(n) {
                let ones = vec![1; n as usize];
                assert_eq!(character(&p, &ones), dimension(&p) as i64);
            }
        }
    }

    #[test]
    fn sign_character() {
        let sign = Partition::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(character(&sign, &[2, 1, 1]), -1);
        assert_eq!(character(&sign, &[4]), -1);
        assert_eq!(character(&sign, &[2, 2]), 1);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&[1, 2, 0, 3]), vec![3, 1]);
        assert_eq!(cycle_type(&[]), Vec::<u32>::new());
    }
}
