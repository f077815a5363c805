//! Subspaces of ℚ^d kept in reduced row echelon form.

use num_traits::Zero;

use super::matrix::{Matrix, RationalMatrix};
use super::scalar::Q;
use super::AlgError;

/// A subspace of ℚ^ambient. The basis is the nonzero part of an RREF, so
/// equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceSummary {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub a_contains_b: bool,
    pub b_contains_a: bool,
    pub dim_a: usize,
    pub dim_b: usize,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let vecs = (0..ambient)
            .map(|i| {
                let mut v = vec![Q::zero(); ambient];
                v[i] = Q::from_integer(1.into());
                v
            })
            .collect();
        Subspace::span(ambient, vecs).expect("standard basis has the right length")
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vecs: Vec<Vec<Q>>) -> Result<Self, AlgError> {
        if let Some(v) = vecs.iter().find(|v| v.len() != ambient) {
            return Err(AlgError::AmbientMismatch {
                left: ambient,
                right: v.len(),
            });
        }
        if vecs.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = RationalMatrix::from_rows(vecs)?;
        let ech = m.rref()?;
        let r = ech.pivots.len();
        let basis = (0..r).map(|i| ech.reduced.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient,
            basis,
            pivots: ech.pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    fn check(&self, o: &Subspace) -> Result<(), AlgError> {
        if self.ambient != o.ambient {
            return Err(AlgError::AmbientMismatch {
                left: self.ambient,
                right: o.ambient,
            });
        }
        Ok(())
    }

    /// The part of `v` left after eliminating the pivot coordinates.
    pub fn residual(&self, v: &[Q]) -> Vec<Q> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    /// Coordinates of `v` in the RREF basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        v.len() == self.ambient && self.residual(v).iter().all(Zero::is_zero)
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        self.ambient == o.ambient && o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, AlgError> {
        self.check(o)?;
        let mut vecs = self.basis.clone();
        vecs.extend(o.basis.iter().cloned());
        Subspace::span(self.ambient, vecs)
    }

    /// `{w : v·w = 0 for all v}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone()).expect("rows share the ambient length");
        let ns = m.nullspace().expect("rational pivots are units");
        Subspace::span(self.ambient, ns).expect("nullspace vectors have ambient length")
    }

    pub fn intersection(&self, o: &Subspace) -> Result<Subspace, AlgError> {
        self.check(o)?;
        let a = self.annihilator();
        let b = o.annihilator();
        let mut rows = a.basis.clone();
        rows.extend(b.basis.iter().cloned());
        if rows.is_empty() {
            return Ok(Subspace::full(self.ambient));
        }
        let m = Matrix::from_rows(rows)?;
        Subspace::span(self.ambient, m.nullspace()?)
    }

    pub fn summary(&self, o: &Subspace) -> Result<SubspaceSummary, AlgError> {
        Ok(SubspaceSummary {
            sum: self.sum(o)?,
            intersection: self.intersection(o)?,
            a_contains_b: self.contains_space(o),
            b_contains_a: o.contains_space(self),
            dim_a: self.dim(),
            dim_b: o.dim(),
        })
    }
}
