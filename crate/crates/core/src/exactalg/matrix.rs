//! Dense exact matrices, Gauss-Jordan reduction and fraction-free determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{ExactScalar, Q};
use super::AlgError;

/// Minimal ring interface used by the elimination routines.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse when the element is a unit.
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Scalar for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

pub type ExactVector<T = ExactScalar> = Vec<T>;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<ExactScalar>;
pub type RationalMatrix = Matrix<Q>;

/// Output of a Gauss-Jordan reduction.
pub struct Echelon<T: Scalar> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgError::Ragged);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows x cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self, AlgError> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(AlgError::Ragged);
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgError> {
        if self.cols != o.rows {
            return Err(AlgError::Shape {
                left: (self.rows, self.cols),
                right: (o.rows, o.cols),
            });
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).plus(&a.times(b));
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[T]) -> Result<Vec<T>, AlgError> {
        if v.len() != self.cols {
            return Err(AlgError::Shape {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                acc
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form. Pivots must be units of the scalar ring.
    pub fn rref(&self) -> Result<Echelon<T>, AlgError> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut found = None;
            let mut saw_nonunit = false;
            for r in row..m.rows {
                let x = m.get(r, col);
                if x.is_zero() {
                    continue;
                }
                match x.inverse() {
                    Some(inv) => {
                        found = Some((r, inv));
                        break;
                    }
                    None => saw_nonunit = true,
                }
            }
            let Some((pr, inv)) = found else {
                if saw_nonunit {
                    return Err(AlgError::NonUnitPivot { column: col });
                }
                continue;
            };
            m.swap_rows(row, pr);
            for c in col..m.cols {
                let v = m.get(row, c).times(&inv);
                m.set(row, c, v);
            }
            let pivot_row: Vec<(usize, T)> = (col..m.cols)
                .filter(|&c| !m.get(row, c).is_zero())
                .map(|c| (c, m.get(row, c).clone()))
                .collect();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for (c, p) in &pivot_row {
                    let v = m.get(r, *c).minus(&f.times(p));
                    m.set(r, *c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(Echelon { reduced: m, pivots })
    }

    pub fn rank(&self) -> Result<usize, AlgError> {
        Ok(self.rref()?.pivots.len())
    }

    /// A basis of `{v : self·v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Result<Vec<Vec<T>>, AlgError> {
        let Echelon { reduced, pivots } = self.rref()?;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = reduced.get(r, free);
                if !x.is_zero() {
                    v[p] = x.negated();
                }
            }
            basis.push(v);
        }
        Ok(basis)
    }
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Row-wise denominator clearing: the integer matrix and the product of the
/// positive row multipliers.
fn clear_denominators(m: &RationalMatrix) -> Result<(Vec<Vec<BigInt>>, BigInt), AlgError> {
    if m.rows() != m.cols() {
        return Err(AlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut scale = BigInt::one();
    let ints = (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    Ok((ints, scale))
}

/// Exact determinant of a rational matrix.
pub fn det_q(m: &RationalMatrix) -> Result<Q, AlgError> {
    let (ints, scale) = clear_denominators(m)?;
    Ok(Q::new(bareiss_det(&ints), scale))
}

/// Sign of the determinant of a rational matrix.
pub fn det_sign_q(m: &RationalMatrix) -> Result<i8, AlgError> {
    let (ints, _) = clear_denominators(m)?;
    let d = bareiss_det(&ints);
    Ok(if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    })
}

/// Sign of the determinant of a matrix whose entries are all rational.
pub fn det_sign_rational(m: &ExactMatrix) -> Result<i8, AlgError> {
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let row = m
            .row(r)
            .iter()
            .map(|x| x.as_rational().ok_or(AlgError::NonRational))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if m.rows() != m.cols() {
        return Err(AlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    det_sign_q(&Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::zeros(0, 0)))
}

/// Nullspace of an exact matrix.
pub fn nullspace(m: &ExactMatrix) -> Result<Vec<ExactVector>, AlgError> {
    m.nullspace()
}

impl<T: Scalar> Matrix<T> {
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl RationalMatrix {
    pub fn to_exact(&self) -> ExactMatrix {
        self.map(|x| ExactScalar::from_q(x.clone()))
    }
}
