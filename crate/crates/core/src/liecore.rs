//! The split real form sl_n(ℝ) as traceless matrices, with its Chevalley basis.
//!
//! Indices in the public API are 1-based, matching the root notation
//! `ε_i − ε_j`. Elements are stored as row-major vectors in ℚ^{n²}, so every
//! subalgebra is a [`Subspace`] of that space.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{q, AlgError, Matrix, RationalMatrix, Subspace, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("rank mismatch: sl_{left} vs sl_{right}")]
    RankMismatch { left: usize, right: usize },
    #[error("index out of range: {0}")]
    Range(String),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("element is not unipotent")]
    NotUnipotent,
    #[error("matrix is not invertible")]
    Singular,
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// The root `ε_i − ε_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self, LieError> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(LieError::Range(format!("root ({i},{j}) in sl_{n}")));
        }
        Ok(Root { i, j })
    }

    /// The simple root `α_k = ε_k − ε_{k+1}`.
    pub fn simple(k: usize) -> Self {
        Root { i: k, j: k + 1 }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    pub fn negate(&self) -> Self {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// Pairing `⟨self, h^∨⟩` with the coroot of another root.
    pub fn cartan_integer(&self, coroot: &Root) -> i64 {
        let at = |idx: usize| -> i64 { i64::from(idx == self.i) - i64::from(idx == self.j) };
        at(coroot.i) - at(coroot.j)
    }

    pub fn root_vector(&self, n: usize) -> LieElement {
        LieElement::e(n, self.i, self.j)
    }

    pub fn coroot(&self, n: usize) -> LieElement {
        let mut h = LieElement::e(n, self.i, self.i);
        h.set(self.j, self.j, -Q::one());
        h
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// `β_{i,j} = α_i + … + α_j = ε_i − ε_{j+1}`.
pub fn composite_root(n: usize, i: usize, j: usize) -> Result<Root, LieError> {
    if i == 0 || i > j || j + 1 > n {
        return Err(LieError::Range(format!(
            "composite root ({i},{j}) in sl_{n}"
        )));
    }
    Ok(Root { i, j: j + 1 })
}

/// `β_i = β_{i,n−i}`.
pub fn beta(n: usize, i: usize) -> Result<Root, LieError> {
    composite_root(n, i, n - i)
}

/// A matrix in gl_n(ℚ), stored row-major. Elements of sl_n have zero trace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    n: usize,
    entries: Vec<Q>,
}

impl LieElement {
    pub fn zero(n: usize) -> Self {
        LieElement {
            n,
            entries: vec![Q::zero(); n * n],
        }
    }

    /// The elementary matrix `E_{ij}`.
    pub fn e(n: usize, i: usize, j: usize) -> Self {
        let mut x = LieElement::zero(n);
        x.set(i, j, Q::one());
        x
    }

    /// `H_{α_k} = E_{kk} − E_{k+1,k+1}`.
    pub fn h(n: usize, k: usize) -> Self {
        Root::simple(k).coroot(n)
    }

    pub fn from_vec(n: usize, entries: Vec<Q>) -> Result<Self, LieError> {
        if entries.len() != n * n {
            return Err(LieError::Range(format!(
                "vector of length {} for sl_{n}",
                entries.len()
            )));
        }
        Ok(LieElement { n, entries })
    }

    pub fn from_matrix(m: &RationalMatrix) -> Result<Self, LieError> {
        if m.rows() != m.cols() {
            return Err(AlgError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            }
            .into());
        }
        let n = m.rows();
        let entries = (0..n).flat_map(|r| m.row(r).to_vec()).collect();
        Ok(LieElement { n, entries })
    }

    /// Builds `Σ c·E_{ij}` from 1-based triples.
    pub fn from_entries(n: usize, items: &[(usize, usize, i64)]) -> Self {
        let mut x = LieElement::zero(n);
        for &(i, j, c) in items {
            let v = x.get(i, j) + q(c);
            x.set(i, j, v);
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_vec(&self) -> &[Q] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<Q> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let rows = self.entries.chunks(self.n).map(<[Q]>::to_vec).collect();
        Matrix::from_rows(rows).expect("square by construction")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Q {
        (1..=self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    fn same_rank(&self, o: &Self) -> Result<(), LieError> {
        if self.n != o.n {
            return Err(LieError::RankMismatch {
                left: self.n,
                right: o.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, LieError> {
        self.same_rank(o)?;
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LieElement { n: self.n, entries })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, LieError> {
        self.same_rank(o)?;
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(LieElement { n: self.n, entries })
    }

    pub fn scale(&self, c: &Q) -> Self {
        LieElement {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Matrix product.
    pub fn matmul(&self, o: &Self) -> Result<Self, LieError> {
        self.same_rank(o)?;
        let n = self.n;
        let mut out = vec![Q::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = &self.entries[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &o.entries[k * n + c];
                    if !b.is_zero() {
                        out[r * n + c] += a * b;
                    }
                }
            }
        }
        Ok(LieElement { n, entries: out })
    }

    pub fn transpose(&self) -> Self {
        let mut t = LieElement::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LieElement::identity(self.n);
        for _ in 0..k {
            acc = acc.matmul(self).expect("same rank");
        }
        acc
    }

    pub fn identity(n: usize) -> Self {
        let mut x = LieElement::zero(n);
        for i in 1..=n {
            x.set(i, i, Q::one());
        }
        x
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n as u32).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank().expect("rational pivots are units")
    }

    /// Entries as `(i, j, value)` for the nonzero positions, row-major.
    pub fn support(&self) -> Vec<(usize, usize, Q)> {
        let n = self.n;
        (0..n * n)
            .filter(|&t| !self.entries[t].is_zero())
            .map(|t| (t / n + 1, t % n + 1, self.entries[t].clone()))
            .collect()
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", basis_name_string(self))
    }
}

pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement, LieError> {
    x.matmul(y)?.sub(&y.matmul(x)?)
}

/// `tr(xy)`. The Killing form of sl_n is `2n` times this.
pub fn trace_form(x: &LieElement, y: &LieElement) -> Result<Q, LieError> {
    x.same_rank(y)?;
    let n = x.n;
    let mut acc = Q::zero();
    for i in 0..n {
        for j in 0..n {
            let a = &x.entries[i * n + j];
            let b = &y.entries[j * n + i];
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
    }
    Ok(acc)
}

/// Ratio between the Killing form and [`trace_form`] on sl_n.
pub fn killing_scale(n: usize) -> i64 {
    2 * n as i64
}

/// One element of the Chevalley basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `X_{ε_i − ε_j}`.
    Root(usize, usize),
    /// `H_{α_k}`.
    Cartan(usize),
}

impl Generator {
    pub fn element(&self, n: usize) -> LieElement {
        match *self {
            Generator::Root(i, j) => LieElement::e(n, i, j),
            Generator::Cartan(k) => LieElement::h(n, k),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Generator::Root(i, j) => format!("X[{i},{j}]"),
            Generator::Cartan(k) => format!("H[{k}]"),
        }
    }

    /// `X_{α_k}`.
    pub fn pos(k: usize) -> Self {
        Generator::Root(k, k + 1)
    }

    /// `X_{−α_k}`.
    pub fn neg(k: usize) -> Self {
        Generator::Root(k + 1, k)
    }
}

/// All Chevalley basis elements of sl_n in a fixed order.
pub fn chevalley_basis(n: usize) -> Vec<Generator> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Generator::Root(i, j));
            }
        }
    }
    out.extend((1..n).map(Generator::Cartan));
    out
}

/// Coordinates of a traceless element in the Chevalley basis.
pub fn decompose(x: &LieElement) -> Vec<(Generator, Q)> {
    let n = x.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && !x.get(i, j).is_zero() {
                out.push((Generator::Root(i, j), x.get(i, j).clone()));
            }
        }
    }
    let mut partial = Q::zero();
    for k in 1..n {
        partial += x.get(k, k);
        if !partial.is_zero() {
            out.push((Generator::Cartan(k), partial.clone()));
        }
    }
    out
}

/// Rendering such as `X[4,1] + X[3,2] - 2*H[1]`.
pub fn basis_name_string(x: &LieElement) -> String {
    let terms = decompose(x);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (g, c)) in terms.iter().enumerate() {
        let neg = c < &Q::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            s.push_str(&format!("{mag}*"));
        }
        s.push_str(&g.name());
    }
    if !x.is_traceless() {
        s.push_str(&format!(" + ({})*I/{}", x.trace(), x.n));
    }
    s
}

/// Matrix of `ad x` on gl_n in the row-major coordinates.
pub fn ad_matrix(x: &LieElement) -> RationalMatrix {
    let n = x.n;
    let cols: Vec<Vec<Q>> = (0..n * n)
        .map(|t| {
            let e = LieElement::e(n, t / n + 1, t % n + 1);
            bracket(x, &e).expect("same rank").into_vec()
        })
        .collect();
    Matrix::from_columns(n * n, &cols).expect("columns have length n²")
}

/// Vectors `v` in `domain` with `f(v) = 0`, for a linear map `f`.
pub fn kernel_of_map(domain: &Subspace, f: impl Fn(&[Q]) -> Vec<Q>) -> Subspace {
    let basis = domain.basis();
    if basis.is_empty() {
        return domain.clone();
    }
    let images: Vec<Vec<Q>> = basis.iter().map(|b| f(b)).collect();
    let rows = images[0].len();
    if rows == 0 {
        return domain.clone();
    }
    let m = Matrix::from_columns(rows, &images).expect("images share a length");
    let coeffs = m.nullspace().expect("rational pivots are units");
    let vecs = coeffs
        .into_iter()
        .map(|c| {
            let mut v = vec![Q::zero(); domain.ambient()];
            for (ct, b) in c.iter().zip(basis) {
                if ct.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x += ct * y;
                }
            }
            v
        })
        .collect();
    Subspace::span(domain.ambient(), vecs).expect("ambient preserved")
}

/// A subspace of sl_n, optionally known to be closed under the bracket.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subalgebra {
    n: usize,
    space: Subspace,
}

impl Subalgebra {
    /// Wraps a subspace of ℚ^{n²}; does not check closure.
    pub fn from_space(n: usize, space: Subspace) -> Self {
        Subalgebra { n, space }
    }

    pub fn span(n: usize, elems: &[LieElement]) -> Self {
        let vecs = elems.iter().map(|e| e.as_vec().to_vec()).collect();
        Subalgebra {
            n,
            space: Subspace::span(n * n, vecs).expect("elements of one sl_n"),
        }
    }

    pub fn span_generators(n: usize, gens: &[Generator]) -> Self {
        let elems: Vec<LieElement> = gens.iter().map(|g| g.element(n)).collect();
        Subalgebra::span(n, &elems)
    }

    /// The smallest subalgebra containing `elems`.
    pub fn generated(n: usize, elems: &[LieElement]) -> Self {
        let mut sub = Subalgebra::span(n, elems);
        let mut frontier: Vec<LieElement> = sub.elements();
        let mut all = frontier.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &all.clone() {
                    let c = bracket(a, b).expect("same rank");
                    let r = sub.space.residual(c.as_vec());
                    if r.iter().any(|x| !x.is_zero()) {
                        sub = Subalgebra {
                            n,
                            space: sub
                                .space
                                .sum(&Subspace::span(n * n, vec![r.clone()]).expect("ambient"))
                                .expect("ambient"),
                        };
                        let e = LieElement::from_vec(n, r).expect("length");
                        next.push(e.clone());
                        all.push(e);
                    }
                }
            }
            frontier = next;
        }
        sub
    }

    pub fn zero(n: usize) -> Self {
        Subalgebra {
            n,
            space: Subspace::zero(n * n),
        }
    }

    /// All of sl_n.
    pub fn full(n: usize) -> Self {
        Subalgebra::span_generators(n, &chevalley_basis(n))
    }

    /// Diagonal traceless matrices.
    pub fn cartan(n: usize) -> Self {
        Subalgebra::span_generators(n, &(1..n).map(Generator::Cartan).collect::<Vec<_>>())
    }

    /// Strictly upper triangular matrices.
    pub fn nilradical(n: usize) -> Self {
        let gens: Vec<Generator> = roots_where(n, |i, j| i < j);
        Subalgebra::span_generators(n, &gens)
    }

    pub fn nilradical_opposite(n: usize) -> Self {
        let gens: Vec<Generator> = roots_where(n, |i, j| i > j);
        Subalgebra::span_generators(n, &gens)
    }

    /// Upper triangular traceless matrices.
    pub fn borel(n: usize) -> Self {
        Subalgebra::cartan(n).plus(&Subalgebra::nilradical(n))
    }

    /// `sl_len(α_start, …, α_{start+len−2})`: the traceless block on indices
    /// `start..start+len−1`.
    pub fn sl_block(n: usize, start: usize, len: usize) -> Self {
        if len < 2 {
            return Subalgebra::zero(n);
        }
        let end = start + len - 1;
        let mut gens: Vec<Generator> = roots_where(n, |i, j| {
            (start..=end).contains(&i) && (start..=end).contains(&j)
        });
        gens.extend((start..end).map(Generator::Cartan));
        Subalgebra::span_generators(n, &gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn elements(&self) -> Vec<LieElement> {
        self.space
            .basis()
            .iter()
            .map(|v| LieElement::from_vec(self.n, v.clone()).expect("length n²"))
            .collect()
    }

    pub fn contains(&self, x: &LieElement) -> bool {
        x.n == self.n && self.space.contains(x.as_vec())
    }

    pub fn contains_sub(&self, o: &Subalgebra) -> bool {
        self.space.contains_space(&o.space)
    }

    pub fn plus(&self, o: &Subalgebra) -> Subalgebra {
        Subalgebra {
            n: self.n,
            space: self.space.sum(&o.space).expect("same sl_n"),
        }
    }

    pub fn meet(&self, o: &Subalgebra) -> Subalgebra {
        Subalgebra {
            n: self.n,
            space: self.space.intersection(&o.space).expect("same sl_n"),
        }
    }

    /// Bracket of every pair of basis vectors lies in the span.
    pub fn is_closed(&self) -> bool {
        let els = self.elements();
        for (a_idx, a) in els.iter().enumerate() {
            for b in &els[a_idx + 1..] {
                if !self.contains(&bracket(a, b).expect("same rank")) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        let els = self.elements();
        els.iter().enumerate().all(|(a_idx, a)| {
            els[a_idx + 1..]
                .iter()
                .all(|b| bracket(a, b).expect("same rank").is_zero())
        })
    }

    /// `[self, other] ⊆ self`.
    pub fn is_ideal_in(&self, other: &Subalgebra) -> bool {
        let mine = self.elements();
        other.elements().iter().all(|y| {
            mine.iter()
                .all(|x| self.contains(&bracket(y, x).expect("same rank")))
        })
    }

    /// `{z ∈ self : [z, x] ∈ target for all x in source}`.
    pub fn normalizing(&self, source: &Subalgebra, target: &Subalgebra) -> Subalgebra {
        let n = self.n;
        let srcs = source.elements();
        let ann = target.space.annihilator();
        let space = kernel_of_map(&self.space, |v| {
            let z = LieElement::from_vec(n, v.to_vec()).expect("length");
            let mut out = Vec::new();
            for x in &srcs {
                let c = bracket(&z, x).expect("same rank");
                for a in ann.basis() {
                    out.push(dot(a, c.as_vec()));
                }
            }
            out
        });
        Subalgebra { n, space }
    }

    pub fn transpose(&self) -> Subalgebra {
        let elems: Vec<LieElement> = self.elements().iter().map(LieElement::transpose).collect();
        Subalgebra::span(self.n, &elems)
    }

    /// Basis names when the subalgebra is spanned by Chevalley basis vectors
    /// (as many as possible), followed by any leftover RREF vectors.
    pub fn basis_names(&self) -> Vec<String> {
        let mut names = Vec::new();
        let mut picked = Subspace::zero(self.n * self.n);
        for g in chevalley_basis(self.n) {
            let e = g.element(self.n);
            if self.contains(&e) && !picked.contains(e.as_vec()) {
                picked = picked
                    .sum(&Subspace::span(self.n * self.n, vec![e.into_vec()]).expect("ambient"))
                    .expect("ambient");
                names.push(g.name());
            }
        }
        for v in self.space.basis() {
            if !picked.contains(v) {
                picked = picked
                    .sum(&Subspace::span(self.n * self.n, vec![v.clone()]).expect("ambient"))
                    .expect("ambient");
                names.push(basis_name_string(
                    &LieElement::from_vec(self.n, v.clone()).expect("length"),
                ));
            }
        }
        names
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Root generators `X_{ε_i−ε_j}` whose indices satisfy `keep`.
pub fn roots_where(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && keep(i, j) {
                out.push(Generator::Root(i, j));
            }
        }
    }
    out
}

/// `{z ∈ sl_n : [z, x] = 0}`.
pub fn centralizer(x: &LieElement) -> Subalgebra {
    let n = x.n;
    let full = Subalgebra::full(n);
    let space = kernel_of_map(full.space(), |v| {
        let z = LieElement::from_vec(n, v.to_vec()).expect("length");
        bracket(&z, x).expect("same rank").into_vec()
    });
    Subalgebra::from_space(n, space)
}

/// An element of SL_n(ℚ).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    matrix: LieElement,
}

impl GroupElement {
    pub fn new(m: LieElement) -> Result<Self, LieError> {
        if !crate::exactalg::det_q(&m.to_matrix())?.is_one() {
            return Err(LieError::Singular);
        }
        Ok(GroupElement { matrix: m })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            matrix: LieElement::identity(n),
        }
    }

    pub fn matrix(&self) -> &LieElement {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n
    }

    pub fn mul(&self, o: &GroupElement) -> Result<GroupElement, LieError> {
        Ok(GroupElement {
            matrix: self.matrix.matmul(&o.matrix)?,
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.n();
        let mut rows = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row: Vec<Q> = (1..=n).map(|j| self.matrix.get(i, j).clone()).collect();
            row.extend((1..=n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            rows.push(row);
        }
        let ech = Matrix::from_rows(rows)
            .expect("rectangular")
            .rref()
            .expect("rational pivots are units");
        let mut inv = LieElement::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                inv.set(i, j, ech.reduced.get(i - 1, n + j - 1).clone());
            }
        }
        GroupElement { matrix: inv }
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, x: &LieElement) -> Result<LieElement, LieError> {
        self.matrix.matmul(x)?.matmul(&self.inverse().matrix)
    }

    pub fn determinant_is_one(&self) -> bool {
        crate::exactalg::det_q(&self.matrix.to_matrix()).is_ok_and(|d| d.is_one())
    }
}

/// Image in SL_n of `w_α² = exp(π W_α)`: `−1` at positions `(i,i)` and `(j,j)`.
pub fn w_squared(n: usize, alpha: Root) -> GroupElement {
    let mut m = LieElement::identity(n);
    m.set(alpha.i, alpha.i, -Q::one());
    m.set(alpha.j, alpha.j, -Q::one());
    GroupElement { matrix: m }
}

/// `exp x = Σ x^k / k!` for nilpotent `x`.
pub fn unipotent_exp(x: &LieElement) -> Result<GroupElement, LieError> {
    if !x.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let n = x.n;
    let mut acc = LieElement::identity(n);
    let mut term = LieElement::identity(n);
    for k in 1..n as i64 {
        term = term.matmul(x)?.scale(&Q::new(1.into(), k.into()));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term)?;
    }
    Ok(GroupElement { matrix: acc })
}

/// `log g = Σ (−1)^{k+1} (g − 1)^k / k` for unipotent `g`.
pub fn unipotent_log(g: &GroupElement) -> Result<LieElement, LieError> {
    let n = g.n();
    let nil = g.matrix.sub(&LieElement::identity(n))?;
    if !nil.is_nilpotent() {
        return Err(LieError::NotUnipotent);
    }
    let mut acc = LieElement::zero(n);
    let mut power = LieElement::identity(n);
    for k in 1..n as i64 {
        power = power.matmul(&nil)?;
        if power.is_zero() {
            break;
        }
        let c = Q::new(if k % 2 == 1 { 1 } else { -1 }.into(), k.into());
        acc = acc.add(&power.scale(&c))?;
    }
    Ok(acc)
}

/// The Chevalley generators `X_{±α}`, `H_α` for simple `α`.
pub fn chevalley_generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for k in 1..n {
        out.push(Generator::pos(k));
        out.push(Generator::Cartan(k));
        out.push(Generator::neg(k));
    }
    out
}

/// Distinct index pairs occurring in a set of root generators.
pub fn root_pairs(gens: &[Generator]) -> BTreeSet<(usize, usize)> {
    gens.iter()
        .filter_map(|g| match *g {
            Generator::Root(i, j) => Some((i, j)),
            Generator::Cartan(_) => None,
        })
        .collect()
}
