//! Exact rational vectors and matrices.
//!
//! Everything here is arbitrary precision; there is no floating point path.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("row {row} has length {found}, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
}

/// A vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![BigRational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigRational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector(
            entries
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    pub fn from_bigints(entries: &[BigInt]) -> Self {
        RatVector(entries.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    ///
    /// Panics on a zero denominator.
    pub fn from_fractions(entries: &[(i64, i64)]) -> Self {
        RatVector(
            entries
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVector) -> BigRational {
        assert_eq!(self.dim(), other.dim(), "dot product of mismatched vectors");
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Pairing with an integer vector.
    pub fn dot_ints(&self, other: &[BigInt]) -> BigRational {
        assert_eq!(self.dim(), other.len(), "dot product of mismatched vectors");
        self.0.iter().zip(other).fold(BigRational::zero(), |acc, (a, b)| {
            if b.is_zero() {
                acc
            } else {
                acc + a * BigRational::from_integer(b.clone())
            }
        })
    }

    pub fn scale(&self, c: &BigRational) -> RatVector {
        RatVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`, in place.
    pub fn add_scaled(&mut self, c: &BigRational, other: &RatVector) {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    /// The unique positive multiple with coprime integer entries, or `None` for
    /// the zero vector.
    pub fn primitive_ints(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let lcm = self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        Some(primitive_bigints(ints))
    }
}

impl Index<usize> for RatVector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl Add for &RatVector {
    type Output = RatVector;

    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;

    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;

    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Divides out the gcd of the entries. Sign is preserved.
pub fn primitive_bigints(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

pub fn dot_bigints(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// A rectangular matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    cols: usize,
    rows: Vec<RatVector>,
}

impl RatMatrix {
    pub fn from_rows(cols: usize, rows: Vec<RatVector>) -> Result<Self, LinalgError> {
        for (i, r) in rows.iter().enumerate() {
            if r.dim() != cols {
                return Err(LinalgError::Ragged {
                    row: i,
                    expected: cols,
                    found: r.dim(),
                });
            }
        }
        Ok(RatMatrix { cols, rows })
    }

    pub fn from_int_rows(cols: usize, rows: &[Vec<BigInt>]) -> Result<Self, LinalgError> {
        Self::from_rows(cols, rows.iter().map(|r| RatVector::from_bigints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix {
            cols: n,
            rows: (0..n).map(|i| RatVector::unit(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn transpose(&self) -> RatMatrix {
        let rows = (0..self.cols)
            .map(|j| RatVector(self.rows.iter().map(|r| r.0[j].clone()).collect()))
            .collect();
        RatMatrix {
            cols: self.rows.len(),
            rows,
        }
    }

    pub fn mul_vec(&self, x: &RatVector) -> RatVector {
        RatVector(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    pub fn rank(&self) -> usize {
        rref(self.rows.iter().map(|r| r.0.clone()).collect(), self.cols).1.len()
    }

    /// A basis of `{x : Mx = 0}`, one vector per free column of the reduced
    /// row echelon form.
    pub fn kernel_basis(&self) -> Vec<RatVector> {
        let (reduced, pivots) = rref(self.rows.iter().map(|r| r.0.clone()).collect(), self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(RatVector(v));
        }
        basis
    }

    /// Some solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &RatVector) -> Option<RatVector> {
        assert_eq!(b.dim(), self.nrows(), "right-hand side length mismatch");
        let aug: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .zip(b.entries())
            .map(|(r, bi)| {
                let mut row = r.0.clone();
                row.push(bi.clone());
                row
            })
            .collect();
        let (reduced, pivots) = rref(aug, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &p) in reduced.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(RatVector(x))
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
fn rref(mut m: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Exact rank of an integer matrix by fraction-free elimination.
pub fn int_rank(rows: &[&[BigInt]], cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = &row[j] * &pivot[c] - &f * &pivot[j];
            }
            let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if g > BigInt::one() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
