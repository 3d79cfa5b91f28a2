//! Exact rational arithmetic and row reduction.
//!
//! Every coefficient in the engine is a [`Rat`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Matrices are
//! dense; everything the engine row-reduces is small (a few hundred rows by
//! at most a couple hundred columns), and exactness matters far more than
//! sparsity here.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid rational literal {0:?}")]
    BadLiteral(String),
}

/// An exact rational number. Always in lowest terms, denominator positive,
/// zero stored as `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`, reducing to lowest terms. Errors when `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self, LinalgError> {
        if den == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, LinalgError> {
        if rhs.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }
}

impl fmt::Display for Rat {
    /// `p/q`, or just `p` for integers. This is also the wire format used in
    /// every JSON document the engine emits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LinalgError::BadLiteral(s.to_string());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(LinalgError::DivisionByZero);
                }
                Ok(Rat(BigRational::new(p, q)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

/// Dense matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Result of [`RatMatrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: RatMatrix,
    /// Strictly increasing column indices of the pivots.
    pub pivots: Vec<usize>,
    pub rank: usize,
    /// Every denominator value that appeared in an entry while pivoting.
    pub denominators: BTreeSet<BigUint>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        Ok(RatMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rat::from_int(n)).collect())
                .collect(),
        )
        .expect("ragged integer literal matrix")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    /// Reduced row echelon form by Gauss-Jordan elimination. Pivot selection
    /// is leftmost nonzero column, first nonzero row; over exact arithmetic
    /// nothing else is needed. The returned set collects every denominator
    /// seen in the working matrix after each pivot step, which feeds the
    /// characteristic audit.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut denominators = BTreeSet::new();
        let mut pivot_row = 0;

        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);

            let inv = m[(pivot_row, col)].recip().expect("nonzero pivot");
            for k in col..m.cols {
                let v = &m[(pivot_row, k)] * &inv;
                m[(pivot_row, k)] = v;
            }
            for i in 0..m.rows {
                if i == pivot_row || m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for k in col..m.cols {
                    let v = &m[(i, k)] - &(&m[(pivot_row, k)] * &factor);
                    m[(i, k)] = v;
                }
            }
            for v in &m.data {
                if !v.is_integer() {
                    denominators.insert(v.denom().magnitude().clone());
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }

        Rref {
            rank: pivots.len(),
            reduced: m,
            pivots,
            denominators,
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

/// Expresses `v` as an exact linear combination of the rows of `basis`, or
/// reports that it is not in their span. When coefficients are returned, the
/// combination reproduces `v` exactly.
pub fn in_row_space(v: &[Rat], basis: &RatMatrix) -> Result<Option<Vec<Rat>>, LinalgError> {
    if v.len() != basis.cols() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.cols(),
            got: v.len(),
        });
    }
    // Solve basis^T * c = v: augment the transpose with v, reduce, and read
    // one solution off the pivots (free coefficients set to zero).
    let n = basis.rows();
    let mut aug = RatMatrix::zero(basis.cols(), n + 1);
    for i in 0..n {
        for j in 0..basis.cols() {
            aug[(j, i)] = basis[(i, j)].clone();
        }
    }
    for (j, val) in v.iter().enumerate() {
        aug[(j, n)] = val.clone();
    }
    let r = aug.rref();
    let mut coeffs = vec![Rat::zero(); n];
    for (row, &col) in r.pivots.iter().enumerate() {
        if col == n {
            return Ok(None); // inconsistent: pivot in the augmented column
        }
        coeffs[col] = r.reduced[(row, n)].clone();
    }
    Ok(Some(coeffs))
}

/// Prime factors of `n` by trial division. The audit only ever factors the
/// modest denominators that show up during elimination.
pub fn prime_factors(n: &BigUint) -> BTreeSet<BigUint> {
    let mut out = BTreeSet::new();
    let mut n = n.clone();
    let one = BigUint::one();
    if n <= one {
        return out;
    }
    let two = BigUint::from(2u32);
    while (&n % &two).is_zero() {
        n /= &two;
        out.insert(two.clone());
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.insert(d.clone());
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += &two;
    }
    if n > one {
        out.insert(n);
    }
    out
}
