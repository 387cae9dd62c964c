//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the crate's algorithms: each oracle recomputes
//! its answer from first principles (brute-force enumeration, explicit
//! lattice coordinates, fraction-free elimination, affine permutations as
//! plain functions on the integers).

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

// ---------------------------------------------------------------------------
// Partitions and the rank formula
// ---------------------------------------------------------------------------

/// All partitions of `n` as non-increasing part lists, by recursion on the
/// largest part.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `Σ_{π ⊢ e} 2^(#distinct parts − 1)`.
pub fn beta(e: u32) -> u64 {
    partitions(e)
        .iter()
        .map(|p| {
            let distinct: BTreeSet<u32> = p.iter().copied().collect();
            1u64 << (distinct.len() - 1)
        })
        .sum()
}

/// Ranks of all component shapes of `GL(n)`, sorted: for each multiset of
/// block sizes, and for each size `m` occurring `k` times, every way of
/// grouping the `k` blocks into classes (a partition of `k`).
pub fn shape_ranks(n: u32) -> Vec<u64> {
    let mut out = Vec::new();
    for levi in partitions(n) {
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        for p in levi {
            *mult.entry(p).or_default() += 1;
        }
        // Cartesian product of exponent partitions, one per block size.
        let mut choices: Vec<Vec<u32>> = vec![Vec::new()];
        for &k in mult.values() {
            let mut next = Vec::new();
            for c in &choices {
                for p in partitions(k) {
                    let mut v = c.clone();
                    v.extend(p);
                    next.push(v);
                }
            }
            choices = next;
        }
        for exps in choices {
            let r = exps.len() as u32;
            out.push((1u64 << (r - 1)) * exps.iter().map(|&e| beta(e)).product::<u64>());
        }
    }
    out.sort_unstable();
    out
}

// ---------------------------------------------------------------------------
// Lattices in explicit coordinates
// ---------------------------------------------------------------------------

/// The `F`-exponents of `⊕_l 𝔭_{E_l}^{t_l} L₀^l` in the basis
/// `ϖ_{E_l}^a v_{l,b}` (`0 ≤ a < e_l`, `0 ≤ b < N_l / e_l`): the coefficient
/// of `ϖ_E^a v` must lie in `𝔭_F^{⌈(t − a)/e⌉}`.
pub fn exponents(components: &[(u32, u32)], index: &[i64]) -> Vec<i64> {
    let mut out = Vec::new();
    for (&(dim, e), &t) in components.iter().zip(index) {
        let e = e as i64;
        for a in 0..e {
            for _ in 0..(dim as i64 / e) {
                out.push((t - a).div_euclid(e) + i64::from((t - a).rem_euclid(e) != 0));
            }
        }
    }
    out
}

/// Dimensions `dim_F Λ(i)/Λ(i+1)` for `i = 0..period`, from explicit
/// exponent vectors.
pub fn quotient_dims(components: &[(u32, u32)], index: impl Fn(i64) -> Vec<i64>, period: u32) -> Vec<i64> {
    (0..period as i64)
        .map(|i| {
            let a = exponents(components, &index(i));
            let b = exponents(components, &index(i + 1));
            b.iter().zip(&a).map(|(x, y)| x - y).sum()
        })
        .collect()
}

/// The valuation matrix of `{x : x Λ(i) ⊆ Λ(i) for all i}`: entry `(r, c)`
/// is the least valuation allowed, `max_i (x_i(r) − x_i(c))`.
pub fn order_valuations(lattices: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = lattices[0].len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| lattices.iter().map(|x| x[r] - x[c]).max().unwrap())
                .collect()
        })
        .collect()
}

/// Whether order `a ⊆` order `b`, given valuation matrices in one basis.
pub fn order_contained(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    a.iter().zip(b).all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x >= y))
}

// ---------------------------------------------------------------------------
// Exact integer linear algebra
// ---------------------------------------------------------------------------

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |s, k| s + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) elimination. Returns the rank, and for square
/// input the determinant.
pub fn bareiss(m: &[Vec<BigInt>], cols: usize) -> (usize, BigInt) {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if rows == 0 && cols == 0 {
        BigInt::one()
    } else if rows == cols && r == rows {
        sign * &a[rows - 1][cols - 1]
    } else {
        BigInt::zero()
    };
    (r, det)
}

pub fn rank(m: &[Vec<BigInt>], cols: usize) -> usize {
    bareiss(m, cols).0
}

pub fn abs_det(m: &[Vec<BigInt>]) -> BigInt {
    bareiss(m, m.len()).1.abs()
}

// ---------------------------------------------------------------------------
// Affine permutations as functions
// ---------------------------------------------------------------------------

/// `w(i)` from the window `[w(1), …, w(n)]`.
pub fn ap_eval(w: &[i64], i: i64) -> i64 {
    let n = w.len() as i64;
    let r = (i - 1).rem_euclid(n);
    w[r as usize] + (i - 1 - r)
}

/// The product in the row-vector convention, `(g·h)(i) = h(g(i))`.
pub fn ap_mul(g: &[i64], h: &[i64]) -> Vec<i64> {
    (1..=g.len() as i64).map(|i| ap_eval(h, ap_eval(g, i))).collect()
}

/// The simple reflection `s_k` exchanging `k` and `k + 1` in every residue
/// class.
pub fn ap_generator(n: usize, k: usize) -> Vec<i64> {
    (1..=n as i64)
        .map(|i| {
            let r = i.rem_euclid(n as i64) as usize;
            if r == k {
                i + 1
            } else if r == (k + 1) % n {
                i - 1
            } else {
                i
            }
        })
        .collect()
}

/// Length as the number of inversions `(i, j)`, `1 ≤ i ≤ n`, `i < j`,
/// `w(i) > w(j)`, found by scanning a window wide enough to contain all.
pub fn ap_length(w: &[i64]) -> u64 {
    let n = w.len() as i64;
    let spread = w.iter().map(|&x| x.abs()).max().unwrap() + 2 * n;
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=i + 2 * spread {
            if ap_eval(w, i) > ap_eval(w, j) {
                count += 1;
            }
        }
    }
    count
}

/// The group generated by `s_k`, `k ∈ gens`, by breadth-first closure.
pub fn closure(n: usize, gens: &[usize]) -> Vec<Vec<i64>> {
    let id: Vec<i64> = (1..=n as i64).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for &k in gens {
            let x = ap_mul(&w, &ap_generator(n, k));
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
        assert!(seen.len() <= 10_000, "generated group is not finite");
    }
    seen.into_iter().collect()
}

/// Minimal-length representatives of `W_left \ W_T / W_right`, sorted by
/// length then window.
pub fn double_coset_reps(n: usize, left: &[usize], t: &[usize], right: &[usize]) -> Vec<Vec<i64>> {
    let wl = closure(n, left);
    let wr = closure(n, right);
    let mut remaining: BTreeSet<Vec<i64>> = closure(n, t).into_iter().collect();
    let mut reps = Vec::new();
    while let Some(x) = remaining.iter().next().cloned() {
        let mut coset = Vec::new();
        for a in &wl {
            for b in &wr {
                let y = ap_mul(&ap_mul(a, &x), b);
                if remaining.remove(&y) {
                    coset.push(y);
                }
            }
        }
        coset.sort_by_key(|w| (ap_length(w), w.clone()));
        reps.push(coset.swap_remove(0));
    }
    reps.sort_by_key(|w| (ap_length(w), w.clone()));
    reps
}
