//! Exact integer matrix arithmetic.
//!
//! Every matrix in the crate (intersection forms, Cartan matrices, monodromy
//! operators) is an [`IntMatrix`] of arbitrary-precision integers. The two
//! routes to a determinant are kept separate: [`IntMatrix::determinant`] uses
//! fraction-free Bareiss elimination, while the Smith normal form works only
//! with unimodular row and column operations.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;

/// Dense row-major matrix over ℤ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows of machine integers. All rows must have the
    /// same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    /// Kronecker (tensor) product `self ⊗ other`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = IntMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "cannot subtract {}x{} from {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "{what} requires a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|c| c.to_vec())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting on zero pivots. The empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<BigInt> {
        self.require_square("determinant")?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            bareiss_step(&mut a, k, &prev);
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Leading principal minors Δ₁, Δ₂, … computed by Bareiss elimination
    /// without pivoting. Stops after the first zero minor, so a short result
    /// means some minor vanished.
    pub fn leading_principal_minors(&self) -> Result<Vec<BigInt>> {
        self.require_square("leading principal minors")?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut prev = BigInt::one();
        let mut minors = Vec::with_capacity(n);
        for k in 0..n {
            // After k elimination steps the (k, k) entry is the (k+1)-th minor.
            let pivot = a[k][k].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() {
                break;
            }
            bareiss_step(&mut a, k, &prev);
            prev = pivot;
        }
        Ok(minors)
    }

    fn require_symmetric(&self) -> Result<()> {
        self.require_square("definiteness test")?;
        if !self.is_symmetric() {
            return Err(Error::invalid("matrix", "not symmetric"));
        }
        Ok(())
    }

    /// Sylvester's criterion: the k-th leading principal minor has sign (−1)^k.
    pub fn is_negative_definite(&self) -> Result<bool> {
        self.require_symmetric()?;
        let minors = self.leading_principal_minors()?;
        Ok(minors.len() == self.rows
            && minors.iter().enumerate().all(|(i, d)| {
                if i % 2 == 0 {
                    d.is_negative()
                } else {
                    d.is_positive()
                }
            }))
    }

    pub fn is_positive_definite(&self) -> Result<bool> {
        self.require_symmetric()?;
        let minors = self.leading_principal_minors()?;
        Ok(minors.len() == self.rows && minors.iter().all(Signed::is_positive))
    }

    /// Characteristic polynomial det(t·I − A), coefficients from the constant
    /// term upwards. Faddeev–LeVerrier; every division is exact over ℤ.
    pub fn characteristic_polynomial(&self) -> Result<Vec<BigInt>> {
        self.require_square("characteristic polynomial")?;
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut aux = IntMatrix::zeros(n, n);
        for k in 1..=n {
            // aux_k = A·aux_{k-1} + c_{n-k+1}·I
            let mut next = self.checked_mul(&aux)?;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let product = self.checked_mul(&next)?;
            let trace: BigInt = (0..n).map(|i| product[(i, i)].clone()).sum();
            coeffs[n - k] = -(trace / BigInt::from(k));
            aux = next;
        }
        Ok(coeffs)
    }

    /// Smith normal form `u · self · v = d` by unimodular row and column
    /// operations.
    ///
    /// Pivoting is deterministic: at each step the nonzero entry of least
    /// absolute value in the remaining submatrix is chosen, ties going to the
    /// smallest (row, column). Diagonal entries come out nonnegative.
    pub fn smith_normal_form(&self) -> SmithDecomposition {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.to_rows();
        let mut u = IntMatrix::identity(rows).to_rows();
        let mut v = IntMatrix::identity(cols).to_rows();
        smith_reduce(&mut a, Some((&mut u, &mut v)));
        let d = from_rows_unchecked(rows, cols, a);
        let invariant_factors = d.diagonal();
        SmithDecomposition {
            u: from_rows_unchecked(rows, rows, u),
            d,
            v: from_rows_unchecked(cols, cols, v),
            invariant_factors,
        }
    }

    /// Diagonal of the Smith normal form without building the transforms.
    /// Same elimination as [`IntMatrix::smith_normal_form`].
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut a = self.to_rows();
        smith_reduce(&mut a, None);
        (0..self.rows.min(self.cols))
            .map(|i| a[i][i].clone())
            .collect()
    }

    /// Cokernel of the square map ℤⁿ → ℤⁿ: its torsion subgroup and free rank.
    pub fn cokernel(&self) -> Result<Cokernel> {
        self.require_square("cokernel")?;
        Ok(Cokernel::from_smith_diagonal(&self.invariant_factors()))
    }
}

/// One fraction-free elimination step below pivot (k, k):
/// a[i][j] <- (a[i][j]·a[k][k] − a[i][k]·a[k][j]) / prev. Zero entries are
/// skipped, which keeps banded matrices cheap.
fn bareiss_step(a: &mut [Vec<BigInt>], k: usize, prev: &BigInt) {
    let (head, tail) = a.split_at_mut(k + 1);
    let pivot_row = &head[k];
    let pivot = &pivot_row[k];
    let unchanged = pivot == prev;
    for row in tail {
        let lead = std::mem::take(&mut row[k]);
        if lead.is_zero() && unchanged {
            continue;
        }
        for j in k + 1..row.len() {
            let (x, p) = (&row[j], &pivot_row[j]);
            if lead.is_zero() || p.is_zero() {
                if !x.is_zero() && !unchanged {
                    row[j] = x * pivot / prev;
                }
            } else {
                row[j] = (x * pivot - &lead * p) / prev;
            }
        }
    }
}

type Transforms<'a> = (&'a mut Vec<Vec<BigInt>>, &'a mut Vec<Vec<BigInt>>);

/// Reduces `a` in place to Smith normal form, applying the same row
/// operations to `u` and column operations to `v` when given.
fn smith_reduce(a: &mut [Vec<BigInt>], mut transforms: Option<Transforms<'_>>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);

    'diagonal: for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_abs_pivot(a, k) else {
                break 'diagonal;
            };
            a.swap(k, pi);
            swap_cols(a, k, pj);
            if let Some((u, v)) = transforms.as_mut() {
                u.swap(k, pi);
                swap_cols(v, k, pj);
            }

            let mut leftover = false;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = &a[i][k] / &a[k][k];
                add_row_multiple(a, i, k, &q);
                if let Some((u, _)) = transforms.as_mut() {
                    add_row_multiple(u, i, k, &q);
                }
                leftover |= !a[i][k].is_zero();
            }
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = &a[k][j] / &a[k][k];
                add_col_multiple(a, j, k, &q);
                if let Some((_, v)) = transforms.as_mut() {
                    add_col_multiple(v, j, k, &q);
                }
                leftover |= !a[k][j].is_zero();
            }
            if leftover {
                continue;
            }

            let pivot = &a[k][k];
            let stray = if pivot.magnitude().is_one() {
                None
            } else {
                (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !a[i][j].is_multiple_of(pivot)))
            };
            match stray {
                Some(i) => {
                    let one = BigInt::from(-1);
                    add_row_multiple(a, k, i, &one);
                    if let Some((u, _)) = transforms.as_mut() {
                        add_row_multiple(u, k, i, &one);
                    }
                }
                None => break,
            }
        }
        if a[k][k].is_negative() {
            for x in a[k].iter_mut() {
                *x = -&*x;
            }
            if let Some((u, _)) = transforms.as_mut() {
                for x in u[k].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
}

fn min_abs_pivot(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, x) in row.iter().enumerate().skip(k) {
            if x.is_zero() {
                continue;
            }
            // Strict comparison keeps the lexicographically first among ties,
            // so the first unit is final.
            if best.is_none_or(|(bi, bj)| x.magnitude() < a[bi][bj].magnitude()) {
                best = Some((i, j));
                if x.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a {
            row.swap(i, j);
        }
    }
}

/// row[target] -= q · row[source]
fn add_row_multiple(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (src, dst) = if source < target {
        let (head, tail) = a.split_at_mut(target);
        (&head[source], &mut tail[0])
    } else {
        let (head, tail) = a.split_at_mut(source);
        (&tail[0], &mut head[target])
    };
    for (x, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *x -= q * s;
        }
    }
}

/// col[target] -= q · col[source]
fn add_col_multiple(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    for row in a {
        if !row[source].is_zero() {
            let s = q * &row[source];
            row[target] -= s;
        }
    }
}

fn from_rows_unchecked(rows: usize, cols: usize, data: Vec<Vec<BigInt>>) -> IntMatrix {
    let entries: Vec<BigInt> = data.into_iter().flatten().collect();
    debug_assert_eq!(entries.len(), rows * cols);
    IntMatrix {
        rows,
        cols,
        entries,
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on incompatible shapes; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_sub(rhs).expect("matrix shapes must agree")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Result of [`IntMatrix::smith_normal_form`]: `u · m · v == d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `d`, including unit and zero entries.
    pub invariant_factors: Vec<BigInt>,
}

/// Cokernel of a square integer matrix, split into torsion and free parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cokernel {
    pub torsion: FiniteAbelianGroup,
    pub free_rank: usize,
}

impl Cokernel {
    /// Reads the cokernel off a Smith diagonal: zeros contribute free rank,
    /// entries above one contribute torsion.
    pub fn from_smith_diagonal(diagonal: &[BigInt]) -> Self {
        let free_rank = diagonal.iter().filter(|d| d.is_zero()).count();
        let factors = diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.abs())
            .collect();
        Cokernel {
            torsion: FiniteAbelianGroup::from_diagonal(factors),
            free_rank,
        }
    }
}
