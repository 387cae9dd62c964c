//! Affine permutations in window notation.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// An element of the extended affine Weyl group `W̃` of type `Ã_{N−1}`,
/// stored as its window `[w(1), …, w(N)]` and extended to `ℤ` by
/// `w(i + N) = w(i) + N`.
///
/// Windows record the action of monomial matrices on *row* vectors: the
/// matrix `g` with `e_i g = ϖ^k e_j` has `w(i) = j + kN`. Consequently a
/// product `g * h` of matrices acts as "first `g`, then `h`", i.e.
/// `(g * h)(i) = h(g(i))`. With this convention the shift
/// `Π = [2, 3, …, N+1]` satisfies `s₀ = Π s₁ Π⁻¹` and
/// `ℛ(s_i) = Π⁻¹ s_i Π = s_{i+1}`.
///
/// ```
/// use gln_chamber::weyl::AffinePermutation;
///
/// let pi = AffinePermutation::shift(3);
/// let s1 = AffinePermutation::generator(3, 1).unwrap();
/// let s0 = &(&pi * &s1) * &pi.inverse();
/// assert_eq!(s0.window(), &[0, 2, 4]);
/// assert_eq!(s1.rotate(), AffinePermutation::generator(3, 2).unwrap());
/// assert_eq!(pi.defect(), 1);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    /// Validates a window: it must be nonempty with pairwise distinct
    /// residues modulo its length.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::InvalidInput("empty window".into()));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = (v - 1).mod_floor(&n) as usize;
            if seen[r] {
                return Err(Error::InvalidInput(format!(
                    "window {window:?} repeats a residue modulo {n}"
                )));
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { window })
    }

    /// The identity of `W̃` for `GL(n)`.
    pub fn identity(n: usize) -> Self {
        AffinePermutation {
            window: (1..=n as i64).collect(),
        }
    }

    /// The simple reflection `s_i`, `0 ≤ i < n`, for `n ≥ 2`. For `i ≥ 1` it
    /// swaps `i` and `i+1`; `s₀` swaps `0` and `1` (equivalently `n` and
    /// `n+1`).
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i >= n {
            return Err(Error::OutOfRange {
                name: "i",
                reason: format!("generator index must be in 0..{n} with n >= 2"),
            });
        }
        let mut window: Vec<i64> = (1..=n as i64).collect();
        if i == 0 {
            window[0] = 0;
            window[n - 1] = n as i64 + 1;
        } else {
            window.swap(i - 1, i);
        }
        Ok(AffinePermutation { window })
    }

    /// The element `Π` with window `[2, 3, …, n+1]` (defect 1); `Π^n` is
    /// the central translation by `ϖ`.
    pub fn shift(n: usize) -> Self {
        AffinePermutation {
            window: (2..=n as i64 + 1).collect(),
        }
    }

    /// The pure translation `diag(ϖ^{λ_1}, …, ϖ^{λ_n})`.
    pub fn translation(lambda: &[i64]) -> Self {
        let n = lambda.len() as i64;
        AffinePermutation {
            window: lambda
                .iter()
                .enumerate()
                .map(|(i, l)| i as i64 + 1 + n * l)
                .collect(),
        }
    }

    /// The rank `N`.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// The window `[w(1), …, w(N)]`.
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(i)` for any integer `i`.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let (q, r) = (i - 1).div_mod_floor(&n);
        self.window[r as usize] + q * n
    }

    /// The inverse element.
    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut window = vec![0; self.n()];
        for (p, &v) in self.window.iter().enumerate() {
            let (q, r) = (v - 1).div_mod_floor(&n);
            window[r as usize] = p as i64 + 1 - q * n;
        }
        AffinePermutation { window }
    }

    /// `(Σ w(i) − Σ i) / N`; a homomorphism `W̃ → ℤ` whose kernel is the
    /// affine Weyl group `W`.
    pub fn defect(&self) -> i64 {
        let n = self.n() as i64;
        let total: i64 = self.window.iter().sum();
        (total - n * (n + 1) / 2) / n
    }

    /// The underlying finite permutation, 0-based: position `i` (window
    /// index `i+1`) goes to `finite_part()[i]`.
    pub fn finite_part(&self) -> Vec<usize> {
        let n = self.n() as i64;
        self.window
            .iter()
            .map(|&v| (v - 1).mod_floor(&n) as usize)
            .collect()
    }

    /// The translation exponents: `w(i) = p(i) + 1 + N·t_i` (0-based `p`).
    pub fn translation_part(&self) -> Vec<i64> {
        let n = self.n() as i64;
        self.window
            .iter()
            .map(|&v| Integer::div_floor(&(v - 1), &n))
            .collect()
    }

    /// Coxeter length in `W` of the `W`-component: the number of affine
    /// inversions `Σ_{i<j} |⌊(w(j) − w(i)) / N⌋|`.
    pub fn length(&self) -> u64 {
        let n = self.n() as i64;
        let mut len = 0u64;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                len += Integer::div_floor(&(self.window[j] - self.window[i]), &n).unsigned_abs();
            }
        }
        len
    }

    /// `ℛ(w) = Π⁻¹ w Π`.
    pub fn rotate(&self) -> Self {
        let pi = AffinePermutation::shift(self.n());
        &(&pi.inverse() * self) * &pi
    }

    /// `ℛ⁻¹(w) = Π w Π⁻¹`.
    pub fn rotate_inverse(&self) -> Self {
        let pi = AffinePermutation::shift(self.n());
        &(&pi * self) * &pi.inverse()
    }

    /// `w^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(AffinePermutation::identity(self.n()), |acc, _| &acc * self)
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }
}

impl Mul for &AffinePermutation {
    type Output = AffinePermutation;

    /// The matrix product: `(g * h)(i) = h(g(i))`.
    fn mul(self, rhs: &AffinePermutation) -> AffinePermutation {
        assert_eq!(self.n(), rhs.n(), "affine permutations of different rank");
        AffinePermutation {
            window: self.window.iter().map(|&v| rhs.eval(v)).collect(),
        }
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
