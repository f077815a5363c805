//! Stabilizers of nilpotent elements and of restricted linear forms,
//! reductive/unipotent splittings, and the sign data used for admissibility.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactalg::{det_q, det_sign_q, ExactScalar, Gauss, Matrix, Subspace, Q};
use crate::liecore::{
    beta, bracket, centralizer, dot, kernel_of_map, trace_form, w_squared, LieElement, Subalgebra,
};
use crate::orbitcat::{orbit_dimension, representative_x, OrbitDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabError {
    #[error("{0}")]
    Assertion(String),
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), StabError> {
    if cond {
        Ok(())
    } else {
        Err(StabError::Assertion(msg()))
    }
}

/// `Z ↦ tr(D·Z)`, optionally restricted to a subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm {
    defining: LieElement,
    domain: Option<Subalgebra>,
}

impl LinearForm {
    pub fn new(defining: LieElement) -> Self {
        LinearForm {
            defining,
            domain: None,
        }
    }

    pub fn zero(n: usize) -> Self {
        LinearForm::new(LieElement::zero(n))
    }

    pub fn restrict(&self, domain: &Subalgebra) -> Self {
        let domain = match &self.domain {
            Some(d) => d.meet(domain),
            None => domain.clone(),
        };
        LinearForm {
            defining: self.defining.clone(),
            domain: Some(domain),
        }
    }

    pub fn n(&self) -> usize {
        self.defining.n()
    }

    pub fn defining(&self) -> &LieElement {
        &self.defining
    }

    pub fn domain(&self) -> Option<&Subalgebra> {
        self.domain.as_ref()
    }

    /// Value on `z`; the caller is responsible for `z` lying in the domain.
    pub fn eval(&self, z: &LieElement) -> Q {
        trace_form(&self.defining, z).expect("same rank")
    }

    fn eval_vec(&self, v: &[Q]) -> Q {
        // tr(DZ) = Σ D_ij Z_ji
        let n = self.n();
        let mut acc = Q::zero();
        for i in 0..n {
            for j in 0..n {
                let d = &self.defining.as_vec()[i * n + j];
                let z = &v[j * n + i];
                if !d.is_zero() && !z.is_zero() {
                    acc += d * z;
                }
            }
        }
        acc
    }

    /// True when the form vanishes on every basis vector of `sub`.
    pub fn vanishes_on(&self, sub: &Subalgebra) -> bool {
        sub.space()
            .basis()
            .iter()
            .all(|v| self.eval_vec(v).is_zero())
    }
}

/// `{Z ∈ ambient : q([Z, Y]) = 0 for all Y ∈ test}`.
pub fn form_orthogonal(q: &LinearForm, ambient: &Subalgebra, test: &Subalgebra) -> Subalgebra {
    let n = ambient.n();
    let tests = test.elements();
    let space = kernel_of_map(ambient.space(), |v| {
        let z = LieElement::from_vec(n, v.to_vec()).expect("length");
        tests
            .iter()
            .map(|y| q.eval(&bracket(&z, y).expect("same rank")))
            .collect()
    });
    Subalgebra::from_space(n, space)
}

/// `{Z ∈ ambient : q([Z, Y]) = 0 for all Y ∈ ambient}`.
pub fn form_stabilizer(q: &LinearForm, ambient: &Subalgebra) -> Subalgebra {
    form_orthogonal(q, ambient, ambient)
}

/// The associative subalgebra of gl_n generated by `sub` and the identity.
pub fn associative_envelope(sub: &Subalgebra) -> Subspace {
    let n = sub.n();
    let mut elems = vec![LieElement::identity(n)];
    elems.extend(sub.elements());
    let mut space =
        Subspace::span(n * n, elems.iter().map(|e| e.as_vec().to_vec()).collect()).expect("n²");
    let gens = sub.elements();
    let mut frontier = elems;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &gens {
                let p = a.matmul(g).expect("same rank");
                let r = space.residual(p.as_vec());
                if r.iter().any(|x| !x.is_zero()) {
                    space = space
                        .sum(&Subspace::span(n * n, vec![r.clone()]).expect("n²"))
                        .expect("n²");
                    next.push(LieElement::from_vec(n, r).expect("length"));
                }
            }
        }
        frontier = next;
    }
    space
}

/// Largest ideal of `sub` acting nilpotently on ℚⁿ: `sub ∩ rad(A)` where the
/// Jacobson radical of the envelope `A` is `{x ∈ A : tr(xy) = 0 ∀y ∈ A}`.
pub fn unipotent_radical(sub: &Subalgebra) -> Subalgebra {
    let n = sub.n();
    if sub.dim() == 0 {
        return sub.clone();
    }
    let env = associative_envelope(sub);
    let env_basis: Vec<LieElement> = env
        .basis()
        .iter()
        .map(|v| LieElement::from_vec(n, v.clone()).expect("length"))
        .collect();
    let transposed: Vec<Vec<Q>> = env_basis.iter().map(|e| e.transpose().into_vec()).collect();
    // tr(xy) = ⟨x, yᵀ⟩ in row-major coordinates.
    let radical = kernel_of_map(sub.space(), |v| {
        transposed.iter().map(|t| dot(v, t)).collect()
    });
    Subalgebra::from_space(n, radical)
}

/// Candidate reductive factor `s ∩ sᵀ`, accepted when it complements the
/// unipotent radical and carries a nondegenerate trace form.
pub fn reductive_factor(sub: &Subalgebra) -> Result<Subalgebra, StabError> {
    let radical = unipotent_radical(sub);
    let red = sub.meet(&sub.transpose());
    check(red.dim() + radical.dim() == sub.dim(), || {
        format!(
            "s ∩ sᵀ (dim {}) does not complement the unipotent radical (dim {}) in a subalgebra of dim {}",
            red.dim(),
            radical.dim(),
            sub.dim()
        )
    })?;
    check(red.meet(&radical).dim() == 0, || {
        "reductive candidate meets the unipotent radical".into()
    })?;
    check(trace_form_nondegenerate(&red), || {
        "trace form degenerate on reductive candidate".into()
    })?;
    Ok(red)
}

pub fn trace_form_nondegenerate(sub: &Subalgebra) -> bool {
    let els = sub.elements();
    if els.is_empty() {
        return true;
    }
    let rows: Vec<Vec<Q>> = els
        .iter()
        .map(|a| {
            els.iter()
                .map(|b| trace_form(a, b).expect("rank"))
                .collect()
        })
        .collect();
    !det_q(&Matrix::from_rows(rows).expect("square"))
        .expect("square")
        .is_zero()
}

/// The centralizer of `X_{k,ε}` split into the explicit pieces.
#[derive(Clone, Debug)]
pub struct StabilizerDecomposition {
    pub descriptor: OrbitDescriptor,
    pub full: Subalgebra,
    pub reductive: Subalgebra,
    pub unipotent: Subalgebra,
    pub levi_block: Subalgebra,
    pub diagonal_block: Subalgebra,
    pub u_piece: Subalgebra,
    pub v_piece: Subalgebra,
    pub borel_stabilizer: Subalgebra,
}

/// `l_j`: the traceless block on indices `j+1..n−j` when `j ≤ n/2 − 1`, else 0.
pub fn levi_block(n: usize, j: usize) -> Subalgebra {
    if 2 * j + 2 <= n {
        Subalgebra::sl_block(n, j + 1, n - 2 * j)
    } else {
        Subalgebra::zero(n)
    }
}

/// `v_{j,ε}`: the copy of sl_j spanned by `X_{α_s} + c X_{−α_{n−s}}`, their
/// transposes, and their brackets (with `c = ε` at `s = j−1`), plus the
/// line through `H_{α_j} − H_{α_{n−j}}`.
pub fn diagonal_block(n: usize, j: usize, eps: i8) -> Subalgebra {
    let mut gens = Vec::new();
    for s in 1..j {
        let c = if s == j - 1 { i64::from(eps) } else { 1 };
        let g = LieElement::from_entries(n, &[(s, s + 1, 1), (n - s + 1, n - s, c)]);
        gens.push(g.transpose());
        gens.push(g);
    }
    let sl = Subalgebra::generated(n, &gens);
    let h = LieElement::h(n, j)
        .sub(&LieElement::h(n, n - j))
        .expect("same rank");
    sl.plus(&Subalgebra::span(n, &[h]))
}

/// `u(X_{k,ε}) = ⟨X_{−β_{i,j}} : 1 ≤ i ≤ k ≤ j ≤ n−1⟩`.
pub fn u_piece(n: usize, k: usize) -> Subalgebra {
    let mut els = Vec::new();
    for i in 1..=k {
        for j in k..n {
            els.push(LieElement::e(n, j + 1, i));
        }
    }
    Subalgebra::span(n, &els)
}

/// `v(X_{k,ε}) = ⟨X_{−β_{i,j}} : k+1 ≤ i ≤ n−k ≤ j ≤ n−1⟩`, zero when `2k = n`.
pub fn v_piece(n: usize, k: usize) -> Subalgebra {
    let mut els = Vec::new();
    if 2 * k < n {
        for i in k + 1..=n - k {
            for j in n - k..n {
                els.push(LieElement::e(n, j + 1, i));
            }
        }
    }
    Subalgebra::span(n, &els)
}

/// The linear form `f_{k,ε} = tr(X_{k,ε} ·)`.
pub fn orbit_form(d: &OrbitDescriptor) -> LinearForm {
    LinearForm::new(representative_x(d))
}

/// `f_{k,ε}` restricted to the Borel subalgebra.
pub fn borel_form(d: &OrbitDescriptor) -> LinearForm {
    orbit_form(d).restrict(&Subalgebra::borel(d.n))
}

pub fn borel_stabilizer_dimension_formula(d: &OrbitDescriptor) -> usize {
    let m = (d.n - 2 * d.k) as i64;
    ((m - 1) * (m + 2) / 2 + d.k as i64) as usize
}

pub fn verify_stabilizer_decomposition(
    d: &OrbitDescriptor,
) -> Result<StabilizerDecomposition, StabError> {
    let n = d.n;
    let x = representative_x(d);
    let full = centralizer(&x);
    let l = levi_block(n, d.k);
    let vd = diagonal_block(n, d.k, d.eps);
    let u = u_piece(n, d.k);
    let v = v_piece(n, d.k);
    for (name, piece) in [("l_k", &l), ("v_k,eps", &vd), ("u(X)", &u), ("v(X)", &v)] {
        check(full.contains_sub(piece), || {
            format!("{name} is not contained in g(X) for {d}")
        })?;
        check(piece.is_closed(), || {
            format!("{name} is not bracket-closed for {d}")
        })?;
    }
    let reductive = l.plus(&vd);
    let unipotent = u.plus(&v);
    check(reductive.dim() == l.dim() + vd.dim(), || {
        format!("l_k + v_k,eps is not direct for {d}")
    })?;
    check(unipotent.dim() == u.dim() + v.dim(), || {
        format!("u(X) + v(X) is not direct for {d}")
    })?;
    check(reductive.meet(&unipotent).dim() == 0, || {
        format!("reductive and unipotent pieces intersect for {d}")
    })?;
    check(reductive.plus(&unipotent) == full, || {
        format!(
            "pieces span dim {} but g(X) has dim {} for {d}",
            reductive.plus(&unipotent).dim(),
            full.dim()
        )
    })?;
    check(reductive.is_closed(), || {
        format!("r(X) is not bracket-closed for {d}")
    })?;
    check(unipotent.is_ideal_in(&full), || {
        format!("u(X) + v(X) is not an ideal of g(X) for {d}")
    })?;
    check(
        unipotent.elements().iter().all(LieElement::is_nilpotent),
        || format!("unipotent piece has a non-nilpotent basis vector for {d}"),
    )?;
    check(unipotent_radical(&full) == unipotent, || {
        format!("printed unipotent radical differs from the computed one for {d}")
    })?;
    check(trace_form_nondegenerate(&reductive), || {
        format!("trace form degenerate on r(X) for {d}")
    })?;
    let b = Subalgebra::borel(n);
    let borel_stabilizer = form_stabilizer(&borel_form(d), &b);
    check(borel_stabilizer == b.meet(&reductive), || {
        format!("b(X) differs from b ∩ r(X) for {d}")
    })?;
    check(borel_stabilizer == b.meet(&full), || {
        format!("stabilizer of the restricted form differs from b ∩ g(X) for {d}")
    })?;
    Ok(StabilizerDecomposition {
        descriptor: *d,
        full,
        reductive,
        unipotent,
        levi_block: l,
        diagonal_block: vd,
        u_piece: u,
        v_piece: v,
        borel_stabilizer,
    })
}

/// `dim b − dim b(X) = dim O`.
pub fn b_orbit_open(d: &OrbitDescriptor) -> bool {
    let b = Subalgebra::borel(d.n);
    let stab = form_stabilizer(&borel_form(d), &b);
    b.dim() - stab.dim() == orbit_dimension(d)
}

/// `L = ⟨X_{ε_i−ε_j} : i ≤ k < j⟩`.
pub fn lagrangian(n: usize, k: usize) -> Subalgebra {
    let mut els = Vec::new();
    for i in 1..=k {
        for j in k + 1..=n {
            els.push(LieElement::e(n, i, j));
        }
    }
    Subalgebra::span(n, &els)
}

/// Checks `L ∩ g(X) = 0`, isotropy for `f([·,·])`, and `dim L = k(n−k)`.
pub fn lagrangian_check(d: &OrbitDescriptor) -> Result<Subalgebra, StabError> {
    let n = d.n;
    let lag = lagrangian(n, d.k);
    let x = representative_x(d);
    check(lag.meet(&centralizer(&x)).dim() == 0, || {
        format!("L meets g(X) for {d}")
    })?;
    let f = orbit_form(d);
    let els = lag.elements();
    for a in &els {
        for b in &els {
            check(f.eval(&bracket(a, b).expect("rank")).is_zero(), || {
                format!("L is not isotropic for {d}")
            })?;
        }
    }
    check(2 * lag.dim() == orbit_dimension(d), || {
        format!(
            "dim L = {} is not half the orbit dimension for {d}",
            lag.dim()
        )
    })?;
    Ok(lag)
}

/// Sign of the determinant of `Ad(w²_{β_1})` acting on `L`.
pub fn orientation_sign(d: &OrbitDescriptor) -> Result<i8, StabError> {
    let n = d.n;
    let lag = lagrangian(n, d.k);
    let w = w_squared(n, beta(n, 1).expect("n ≥ 2"));
    let basis = lag.elements();
    let mut cols = Vec::new();
    for e in &basis {
        let img = w.conjugate(e).expect("rank");
        let coords = lag
            .space()
            .coordinates(img.as_vec())
            .ok_or_else(|| StabError::Assertion(format!("w² does not preserve L for {d}")))?;
        cols.push(coords);
    }
    let m = Matrix::from_columns(basis.len(), &cols).expect("square");
    Ok(det_sign_q(&m).expect("square"))
}

/// Characters of the finite group generated by `w²`, given by their value there.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterSet {
    /// Order of the cyclic group: 2 for n even, 4 for n odd.
    pub group_order: u8,
    pub values: Vec<ExactScalar>,
    pub filtered: bool,
}

/// Admissible characters at `w²`: `{±1}` for n even, and for n odd the
/// characters of ℤ/4 with `ρ(w⁴)·ρ(e) = −1`, taking `ρ(e) = 1`.
pub fn admissibility_set(n: usize, _k: usize) -> CharacterSet {
    let i = ExactScalar::i();
    if n.is_multiple_of(2) {
        CharacterSet {
            group_order: 2,
            values: vec![ExactScalar::one(), -ExactScalar::one()],
            filtered: false,
        }
    } else {
        let rho_e = ExactScalar::one();
        let minus_one = -ExactScalar::one();
        let mut values = Vec::new();
        let mut power = ExactScalar::one();
        for _ in 0..4 {
            if &(&power * &power) * &rho_e == minus_one {
                values.push(power.clone());
            }
            power = &power * &i;
        }
        CharacterSet {
            group_order: 4,
            values,
            filtered: true,
        }
    }
}

impl CharacterSet {
    pub fn contains(&self, v: &ExactScalar) -> bool {
        self.values.contains(v)
    }

    pub fn gauss_values(&self) -> Vec<Gauss> {
        self.values
            .iter()
            .map(|v| v.as_gauss().expect("roots of unity are Gaussian"))
            .collect()
    }
}

/// `dim g − dim g(X)`.
pub fn centralizer_codimension(x: &LieElement) -> usize {
    let n = x.n();
    n * n - 1 - centralizer(x).dim()
}
