//! Dense integer matrices and their Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// A dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. `cols` fixes the
    /// width, so that matrices with zero rows keep their shape.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(v);
            }
        }
        Ok(m)
    }

    /// A diagonal `rows × cols` matrix with the given leading diagonal.
    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.data[i * cols + i] = d.clone();
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Sets entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    /// The rows as machine integers, if every entry fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row_dst += q · row_src`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col_dst += q · col_src`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// The Smith normal form `U · A · V = D` with `U`, `V` unimodular and `D`
/// diagonal with nonnegative entries `d_1 | d_2 | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Left transform (`rows × rows`).
    pub u: IntMatrix,
    /// Right transform (`cols × cols`).
    pub v: IntMatrix,
    /// The diagonal form.
    pub d: IntMatrix,
    /// The nonzero diagonal entries, in order.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    /// The rank of the matrix.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// The quotient `x / p` rounded to the nearest integer, so that the
/// remainder has magnitude at most `|p| / 2`.
fn balanced_quotient(x: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(p);
    if (&r + &r).abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

/// Computes the Smith normal form by alternating row and column
/// elimination around a minimal-magnitude pivot.
///
/// ```
/// use gln_chamber::homology::{smith_normal_form, IntMatrix};
///
/// let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3).unwrap();
/// let s = smith_normal_form(&a);
/// let d: Vec<String> = s.invariant_factors.iter().map(|x| x.to_string()).collect();
/// assert_eq!(d, vec!["2", "6", "12"]);
/// assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
/// ```
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // Pivot: an entry of least magnitude in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d.get(i, j);
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            // Reduce the pivot row and column with balanced remainders, then
            // move the smallest surviving entry (if any) into the pivot.
            let p = d.get(t, t).clone();
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let q = -balanced_quotient(d.get(i, t), &p);
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                }
            }
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let q = -balanced_quotient(d.get(t, j), &p);
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                }
            }
            let row_min = (t + 1..m)
                .filter(|&i| !d.get(i, t).is_zero())
                .min_by_key(|&i| d.get(i, t).abs());
            let col_min = (t + 1..n)
                .filter(|&j| !d.get(t, j).is_zero())
                .min_by_key(|&j| d.get(t, j).abs());
            match (row_min, col_min) {
                (Some(i), Some(j)) if d.get(t, j).abs() < d.get(i, t).abs() => {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                }
                (Some(i), _) => {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                }
                (None, Some(j)) => {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                }
                (None, None) => {
                    // Row and column are clear; enforce divisibility of the rest.
                    let bad = (t + 1..m)
                        .find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
                    match bad {
                        Some(i) => {
                            d.add_row(t, i, &BigInt::one());
                            u.add_row(t, i, &BigInt::one());
                        }
                        None => break,
                    }
                }
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors = (0..m.min(n))
        .map(|i| d.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect();
    SmithForm {
        u,
        v,
        d,
        invariant_factors,
    }
}

/// Serialises `Vec<BigInt>` as decimal strings.
pub(crate) mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_empty_matrices() {
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(smith_normal_form(&z).rank(), 0);
        let e = IntMatrix::zeros(0, 4);
        let s = smith_normal_form(&e);
        assert_eq!(s.v, IntMatrix::identity(4));
    }

    #[test]
    fn divisibility_fixup() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]], 2).unwrap();
        let s = smith_normal_form(&a);
        let d: Vec<i64> = s.invariant_factors.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 6]);
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
    }
}
