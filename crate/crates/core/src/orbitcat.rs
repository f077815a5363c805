//! Spherical nilpotent orbits of sl_n(ℝ): partitions `(2^k, 1^{n−2k})`,
//! their representatives, and the sign that separates the two orbits of
//! type `(2^p)` when `n = 2p`.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exactalg::{det_sign_q, Matrix, RationalMatrix, Q};
use crate::liecore::{GroupElement, LieElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("order k={k} out of range for n={n}")]
    OrderRange { n: usize, k: usize },
    #[error("epsilon must be +1 or -1, got {0}")]
    Epsilon(i8),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("expected Jordan type {expected}, found {found}")]
    WrongType {
        expected: Partition,
        found: Partition,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    /// Sorts the parts in decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `(2^k, 1^{n−2k})`.
pub fn spherical_partition(k: usize, n: usize) -> Result<Partition, OrbitError> {
    if k < 1 || 2 * k > n {
        return Err(OrbitError::OrderRange { n, k });
    }
    let mut parts = vec![2; k];
    parts.extend(std::iter::repeat_n(1, n - 2 * k));
    Ok(Partition(parts))
}

/// A pair `(k, ε)` of the index set `I_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub n: usize,
    pub k: usize,
    pub eps: i8,
}

impl OrbitDescriptor {
    /// Validates `2 ≤ k ≤ n/2`; the sign is forced to `+1` when `2k < n`.
    pub fn new(n: usize, k: usize, eps: i8) -> Result<Self, OrbitError> {
        if eps != 1 && eps != -1 {
            return Err(OrbitError::Epsilon(eps));
        }
        if k < 2 || 2 * k > n {
            return Err(OrbitError::OrderRange { n, k });
        }
        let eps = if 2 * k < n { 1 } else { eps };
        Ok(OrbitDescriptor { n, k, eps })
    }

    /// `k = [n/2]`.
    pub fn is_maximal(&self) -> bool {
        self.k == self.n / 2
    }

    pub fn partition(&self) -> Partition {
        spherical_partition(self.k, self.n).expect("validated on construction")
    }

    pub fn eps_q(&self) -> Q {
        Q::from_integer(i64::from(self.eps).into())
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.eps > 0 { "+" } else { "-" };
        write!(f, "n={} k={} eps={}1", self.n, self.k, sign)
    }
}

/// Every `(k, ε) ∈ I_n`, one entry per real orbit.
pub fn catalog(n: usize) -> Vec<OrbitDescriptor> {
    let mut out = Vec::new();
    for k in 2..=n / 2 {
        out.push(OrbitDescriptor { n, k, eps: 1 });
        if 2 * k == n {
            out.push(OrbitDescriptor { n, k, eps: -1 });
        }
    }
    out
}

pub fn orbit_dimension(d: &OrbitDescriptor) -> usize {
    2 * d.k * (d.n - d.k)
}

/// `Σ_{i<k} E_{2i+1,2i+2} + ε E_{2k−1,2k}` (indices from 0 in the sum).
pub fn representative_y(d: &OrbitDescriptor) -> LieElement {
    let mut x = LieElement::zero(d.n);
    for s in 0..d.k - 1 {
        x.set(2 * s + 1, 2 * s + 2, Q::one());
    }
    x.set(2 * d.k - 1, 2 * d.k, d.eps_q());
    x
}

/// `Σ_{i<k} E_{n−i+1,i} + ε E_{n−k+1,k}`.
pub fn representative_x(d: &OrbitDescriptor) -> LieElement {
    let n = d.n;
    let mut x = LieElement::zero(n);
    for i in 1..d.k {
        x.set(n - i + 1, i, Q::one());
    }
    x.set(n - d.k + 1, d.k, d.eps_q());
    x
}

/// Jordan type from the ranks of successive powers.
pub fn jordan_type(x: &LieElement) -> Result<Partition, OrbitError> {
    if !x.is_nilpotent() {
        return Err(OrbitError::NotNilpotent);
    }
    let n = x.n();
    let mut ranks = vec![n];
    let mut power = LieElement::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        power = power.matmul(x).expect("same rank");
        ranks.push(power.rank());
    }
    // at_least[j] = number of blocks of size ≥ j+1.
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (j, &cnt) in at_least.iter().enumerate() {
        let next = at_least.get(j + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(j + 1, cnt - next));
    }
    Ok(Partition::new(parts))
}

/// Sign of the map `ℝⁿ/ker x → ker x` induced by `x`, for `x` of type `(2^p)`.
///
/// With `K` a basis of `ker x` and `C` standard vectors completing it, the
/// first vector of `C` is negated if needed so that `[C | K]` is positively
/// oriented; the result is the sign of `det M` where `x·C = K·M`.
pub fn epsilon_invariant(x: &LieElement) -> Result<i8, OrbitError> {
    let n = x.n();
    let found = jordan_type(x)?;
    if !n.is_multiple_of(2) || found.parts().iter().any(|&p| p != 2) {
        let expected = Partition(vec![2; n / 2]);
        return Err(OrbitError::WrongType { expected, found });
    }
    let p = n / 2;
    let kernel = x
        .to_matrix()
        .nullspace()
        .expect("rational pivots are units");
    debug_assert_eq!(kernel.len(), p);
    let mut complement: Vec<Vec<Q>> = Vec::new();
    let mut current = kernel.clone();
    for idx in 0..n {
        if complement.len() == p {
            break;
        }
        let mut e = vec![Q::zero(); n];
        e[idx] = Q::one();
        let mut trial = current.clone();
        trial.push(e.clone());
        let rank = Matrix::from_rows(trial.clone())
            .expect("rectangular")
            .rank()
            .expect("rational");
        if rank == trial.len() {
            current = trial;
            complement.push(e);
        }
    }
    let mut cols = complement.clone();
    cols.extend(kernel.iter().cloned());
    let frame = Matrix::from_columns(n, &cols).expect("length n");
    if det_sign_q(&frame).expect("square") < 0 {
        let pos = complement[0]
            .iter()
            .position(|v| !v.is_zero())
            .expect("unit vector");
        complement[0][pos] = -Q::one();
    }
    let xm = x.to_matrix();
    let images: Vec<Vec<Q>> = complement
        .iter()
        .map(|c| xm.apply(c).expect("length n"))
        .collect();
    let mut aug_cols = kernel.clone();
    aug_cols.extend(images);
    let ech = Matrix::from_columns(n, &aug_cols)
        .expect("length n")
        .rref()
        .expect("rational");
    let mut m: RationalMatrix = Matrix::zeros(p, p);
    for r in 0..p {
        for c in 0..p {
            m.set(r, c, ech.reduced.get(r, p + c).clone());
        }
    }
    Ok(det_sign_q(&m).expect("square"))
}

/// Same Jordan type, and the same sign when the type is `(2^p)` with `n = 2p`.
pub fn same_real_orbit(x: &LieElement, y: &LieElement) -> Result<bool, OrbitError> {
    let tx = jordan_type(x)?;
    let ty = jordan_type(y)?;
    if tx != ty {
        return Ok(false);
    }
    let n = x.n();
    if n.is_multiple_of(2) && tx.parts().iter().all(|&p| p == 2) && tx.parts().len() == n / 2 {
        return Ok(epsilon_invariant(x)? == epsilon_invariant(y)?);
    }
    Ok(true)
}

/// A random integer matrix of determinant 1 built from elementary row operations.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R, steps: usize) -> GroupElement {
    let mut m = LieElement::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..=n);
        while j == i {
            j = rng.gen_range(1..=n);
        }
        let c: i64 = [-2, -1, 1, 2][rng.gen_range(0..4)];
        let mut e = LieElement::identity(n);
        e.set(i, j, Q::from_integer(c.into()));
        m = e.matmul(&m).expect("same rank");
    }
    GroupElement::new(m).expect("elementary products have determinant one")
}
