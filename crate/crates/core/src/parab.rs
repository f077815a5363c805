//! Maximal parabolic subalgebras, restricted forms, the predicates of Duflo's
//! construction, and the finite parameter bookkeeping built on them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactalg::ExactScalar;
use crate::liecore::{centralizer, chevalley_generators, Generator, LieElement, Subalgebra};
use crate::orbitcat::{orbit_dimension, representative_x, OrbitDescriptor};
use crate::stab::{
    admissibility_set, diagonal_block, form_orthogonal, form_stabilizer, levi_block,
    reductive_factor, trace_form_nondegenerate, unipotent_radical, LinearForm,
};

/// `p_i = m_i ⊕ a_i ⊕ n_i` for the simple root `α_i`.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub i: usize,
    pub p: Subalgebra,
    pub m: Subalgebra,
    pub a: Subalgebra,
    pub n: Subalgebra,
}

pub fn build_parabolic(i: usize, n: usize) -> ParabolicData {
    let mut gens: Vec<Generator> = Vec::new();
    let mut nil = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a == b || (a > i && i >= b) {
                continue;
            }
            gens.push(Generator::Root(a, b));
            if a <= i && i < b {
                nil.push(Generator::Root(a, b));
            }
        }
    }
    gens.extend((1..n).map(Generator::Cartan));
    let m = Subalgebra::sl_block(n, 1, i).plus(&Subalgebra::sl_block(n, i + 1, n - i));
    ParabolicData {
        i,
        p: Subalgebra::span_generators(n, &gens),
        m,
        a: Subalgebra::span_generators(n, &[Generator::Cartan(i)]),
        n: Subalgebra::span_generators(n, &nil),
    }
}

impl ParabolicData {
    /// `m_i ⊕ a_i ⊕ n_i = p_i` as a direct sum, and `n_i` abelian.
    /// `m_i ⊕ a_i`.
    pub fn levi(&self) -> Subalgebra {
        self.m.plus(&self.a)
    }

    pub fn is_consistent(&self) -> bool {
        let sum = self.m.plus(&self.a).plus(&self.n);
        sum == self.p
            && sum.dim() == self.m.dim() + self.a.dim() + self.n.dim()
            && self.n.is_abelian()
            && self.n.is_ideal_in(&self.p)
    }
}

/// `f_i`, `h_i`, `g_i` and `λ_i` for one parabolic.
#[derive(Clone, Debug)]
pub struct RestrictedForms {
    pub f: LinearForm,
    pub h: LinearForm,
    pub g: LinearForm,
    pub lambda: LinearForm,
}

/// `X_{k,ε}` with every entry outside the positions dual to `n_i` removed.
fn nilradical_part(x: &LieElement, i: usize) -> LieElement {
    let n = x.n();
    let mut out = LieElement::zero(n);
    for (r, c, v) in x.support() {
        if c <= i && i < r {
            out.set(r, c, v);
        }
    }
    out
}

pub fn restricted_forms(d: &OrbitDescriptor, i: usize) -> RestrictedForms {
    let par = build_parabolic(i, d.n);
    let x = representative_x(d);
    let f = LinearForm::new(x.clone()).restrict(&par.p);
    let h = LinearForm::new(x.clone()).restrict(&par.n);
    let g = LinearForm::new(nilradical_part(&x, i)).restrict(&par.p);
    let lambda = LinearForm::new(x).restrict(&recursion_algebra(d.n, d.k, i));
    RestrictedForms { f, h, g, lambda }
}

/// `{Z ∈ ambient : q([Z, Y]) = 0 ∀Y ∈ sub} ⊆ sub`.
pub fn coisotropic(sub: &Subalgebra, q: &LinearForm, ambient: &Subalgebra) -> bool {
    sub.contains_sub(&form_orthogonal(q, ambient, sub))
}

/// Coisotropic and `sub = ambient(q) + unipotent radical of sub`.
pub fn strongly_unipotent(sub: &Subalgebra, q: &LinearForm, ambient: &Subalgebra) -> bool {
    if !coisotropic(sub, q, ambient) {
        return false;
    }
    let stab = form_stabilizer(q, ambient);
    stab.plus(&unipotent_radical(sub)) == *sub
}

/// A reductive factor of `ambient(q)` lies in `ker q` and `witness` is
/// strongly unipotent for `q`.
pub fn unipotent_type(q: &LinearForm, ambient: &Subalgebra, witness: &Subalgebra) -> bool {
    unipotent_type_report(q, ambient, witness).is_ok()
}

pub fn unipotent_type_report(
    q: &LinearForm,
    ambient: &Subalgebra,
    witness: &Subalgebra,
) -> Result<(), String> {
    if !ambient.contains_sub(witness) {
        return Err("witness is not inside the ambient algebra".into());
    }
    let stab = form_stabilizer(q, ambient);
    let red = reductive_factor(&stab).map_err(|e| e.to_string())?;
    if !q.vanishes_on(&red) {
        return Err("form does not vanish on the reductive factor".into());
    }
    if !strongly_unipotent(witness, q, ambient) {
        return Err("witness is not strongly unipotent".into());
    }
    Ok(())
}

/// `g_{i,k}`: `l_i` for `i < k`, `l_k ∩ (m_i ⊕ a_i)` for `k ≤ i ≤ n−k`,
/// `l_{n−i}` beyond.
pub fn recursion_algebra(n: usize, k: usize, i: usize) -> Subalgebra {
    if i < k {
        levi_block(n, i)
    } else if i <= n - k {
        levi_block(n, k).meet(&build_parabolic(i, n).levi())
    } else {
        levi_block(n, n - i)
    }
}

/// `v'_{i,k,ε}`: `v_{i,1}` for `i < k`, `v_{k,ε} ∩ (m_i ⊕ a_i)` in the middle
/// range, `v_{n−i,1}` beyond. `v_{1,ε}` is the line through `H_{α_1} − H_{α_{n−1}}`.
pub fn v_prime(d: &OrbitDescriptor, i: usize) -> Subalgebra {
    let n = d.n;
    if i < d.k {
        diagonal_block(n, i, 1)
    } else if i <= n - d.k {
        diagonal_block(n, d.k, d.eps).meet(&build_parabolic(i, n).levi())
    } else {
        diagonal_block(n, n - i, 1)
    }
}

/// All data attached to `(d, i)` in the construction.
#[derive(Clone, Debug)]
pub struct ParabolicRestriction {
    pub descriptor: OrbitDescriptor,
    pub parabolic: ParabolicData,
    pub forms: RestrictedForms,
    /// `b_{i,k,ε} = p_i(h_{i,k,ε})`.
    pub b: Subalgebra,
    pub g_ik: Subalgebra,
    pub v_prime: Subalgebra,
    pub r_prime: Subalgebra,
    /// Unipotent radical of `p_i ∩ g(X)`.
    pub stab_radical: Subalgebra,
}

pub fn parabolic_restriction(d: &OrbitDescriptor, i: usize) -> ParabolicRestriction {
    let n = d.n;
    let parabolic = build_parabolic(i, n);
    let forms = restricted_forms(d, i);
    let b = form_orthogonal(&forms.f, &parabolic.p, &parabolic.n);
    let g_ik = recursion_algebra(n, d.k, i);
    let vp = v_prime(d, i);
    let r_prime = g_ik.plus(&vp);
    let stab = parabolic.p.meet(&centralizer(&representative_x(d)));
    let stab_radical = unipotent_radical(&stab);
    ParabolicRestriction {
        descriptor: *d,
        parabolic,
        forms,
        b,
        g_ik,
        v_prime: vp,
        r_prime,
        stab_radical,
    }
}

/// Branch of the Duflo parameter table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DufloBranch {
    /// `O_{g_{i,k,ε}, λ_{i,k,ε}}` with `λ ≠ 0`.
    FormWithLambda,
    /// `O_{f_{i,k,ε}, 0}`.
    UnipotentType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DufloRow {
    pub i: usize,
    pub branch: DufloBranch,
    pub expected: DufloBranch,
    pub g_dim: usize,
    pub g_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DufloParameters {
    pub descriptor: OrbitDescriptor,
    pub rows: Vec<DufloRow>,
}

impl DufloParameters {
    pub fn unipotent_type_flag(&self, i: usize) -> bool {
        self.rows[i - 1].branch == DufloBranch::UnipotentType
    }

    /// Computed branch agrees with `k ≤ i ≤ n−k` and the table is symmetric under `i ↔ n−i`.
    pub fn is_consistent(&self) -> bool {
        let n = self.descriptor.n;
        self.rows.iter().all(|r| r.branch == r.expected)
            && self
                .rows
                .iter()
                .all(|r| r.branch == self.rows[n - r.i - 1].branch)
    }
}

pub fn expected_branch(d: &OrbitDescriptor, i: usize) -> DufloBranch {
    if d.k <= i && i <= d.n - d.k {
        DufloBranch::UnipotentType
    } else {
        DufloBranch::FormWithLambda
    }
}

pub fn reductive_rank(sub: &Subalgebra) -> usize {
    sub.meet(&Subalgebra::cartan(sub.n())).dim()
}

pub fn duflo_classification(d: &OrbitDescriptor) -> DufloParameters {
    let rows = (1..d.n)
        .map(|i| {
            let g = recursion_algebra(d.n, d.k, i);
            let lambda = LinearForm::new(representative_x(d)).restrict(&g);
            let branch = if lambda.vanishes_on(&g) {
                DufloBranch::UnipotentType
            } else {
                DufloBranch::FormWithLambda
            };
            DufloRow {
                i,
                branch,
                expected: expected_branch(d, i),
                g_dim: g.dim(),
                g_rank: reductive_rank(&g),
            }
        })
        .collect();
    DufloParameters {
        descriptor: *d,
        rows,
    }
}

/// Text rendering of the Duflo parameter table, one row per parabolic.
/// Rows off the unipotent range are split into the lower and upper branch.
pub fn render_duflo_table(p: &DufloParameters) -> String {
    let d = &p.descriptor;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Duflo parameters of P_i.X for n={} k={} eps={}",
        d.n,
        d.k,
        if d.eps > 0 { "+1" } else { "-1" }
    );
    let _ = writeln!(out, "i\tbranch\tparameters\tunipotent\tdim g_ik\trank g_ik");
    for r in &p.rows {
        let (branch, label, uni) = match r.branch {
            DufloBranch::FormWithLambda if 2 * r.i < d.n => {
                ("lower", format!("(g_{},lambda_{})", r.i, r.i), "no")
            }
            DufloBranch::FormWithLambda => ("upper", format!("(g_{},lambda_{})", r.i, r.i), "no"),
            DufloBranch::UnipotentType => ("middle", format!("(f_{},0)", r.i), "yes"),
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.i, branch, label, uni, r.g_dim, r.g_rank
        );
    }
    out
}

/// The branch columns of [`render_duflo_table`] alone.
pub fn render_branch_table(p: &DufloParameters) -> String {
    render_duflo_table(p)
        .lines()
        .map(|l| l.split('\t').take(4).collect::<Vec<_>>().join("\t"))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLink {
    pub i: usize,
    pub dim: usize,
    pub rank: usize,
}

/// `g_{k,k} ⊆ … ⊆ g_{1,k}` with their ranks.
pub fn recursion_chain(d: &OrbitDescriptor) -> Result<Vec<ChainLink>, String> {
    let algs: Vec<Subalgebra> = (1..=d.k).map(|i| recursion_algebra(d.n, d.k, i)).collect();
    for i in 1..d.k {
        if !algs[i - 1].contains_sub(&algs[i]) {
            return Err(format!(
                "g_{},k is not contained in g_{},k for {d}",
                i + 1,
                i
            ));
        }
    }
    for (idx, g) in algs.iter().enumerate() {
        if !g.is_closed() {
            return Err(format!("g_{},k is not a subalgebra for {d}", idx + 1));
        }
    }
    Ok(algs
        .iter()
        .enumerate()
        .map(|(idx, g)| ChainLink {
            i: idx + 1,
            dim: g.dim(),
            rank: reductive_rank(g),
        })
        .collect())
}

/// `c_{i,j,k} = g_{j,k} ⊕ n_{i,j,k}` inside `p_{i,j,k} = g_{i,k} ∩ p_j`, tested
/// against `λ` restricted to `p_{i,j,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedParabolicCase {
    pub i: usize,
    pub j: usize,
    pub p_dim: usize,
    pub stabilizer_dim: usize,
    pub c_dim: usize,
    /// `g_{j,k} ⊆ p_{i,j,k}` and `g_{j,k} ∩ n_{i,j,k} = 0`.
    pub well_placed: bool,
    pub closed: bool,
    pub coisotropic: bool,
    pub strongly_unipotent: bool,
    /// Dimension of `p_{i,j,k}(λ|n_{i,j,k})`, which always contains `c`.
    pub nil_stabilizer_dim: usize,
    pub nil_stabilizer_strongly_unipotent: bool,
}

impl NestedParabolicCase {
    pub fn passed(&self) -> bool {
        self.well_placed && self.closed && self.strongly_unipotent
    }
}

pub fn nested_parabolic_case(d: &OrbitDescriptor, i: usize, j: usize) -> NestedParabolicCase {
    let n = d.n;
    let pijk = recursion_algebra(n, d.k, i).meet(&build_parabolic(j, n).p);
    let nijk = unipotent_radical(&pijk);
    let gjk = recursion_algebra(n, d.k, j);
    let well_placed = pijk.contains_sub(&gjk) && gjk.meet(&nijk).dim() == 0;
    let c = gjk.plus(&nijk);
    let lambda = LinearForm::new(representative_x(d)).restrict(&pijk);
    let nil_stab = form_orthogonal(&lambda, &pijk, &nijk);
    NestedParabolicCase {
        i,
        j,
        p_dim: pijk.dim(),
        stabilizer_dim: form_stabilizer(&lambda, &pijk).dim(),
        c_dim: c.dim(),
        well_placed,
        closed: c.is_closed(),
        coisotropic: coisotropic(&c, &lambda, &pijk),
        strongly_unipotent: strongly_unipotent(&c, &lambda, &pijk),
        nil_stabilizer_dim: nil_stab.dim(),
        nil_stabilizer_strongly_unipotent: strongly_unipotent(&nil_stab, &lambda, &pijk),
    }
}

/// Every `(i, j)` with `i < k` and `i+1 ≤ j ≤ n−i−1`.
pub fn nested_parabolic_grid(d: &OrbitDescriptor) -> Vec<NestedParabolicCase> {
    let grid: Vec<(usize, usize)> = (1..d.k)
        .flat_map(|i| (i + 1..d.n - i).map(move |j| (i, j)))
        .collect();
    grid.par_iter()
        .map(|&(i, j)| nested_parabolic_case(d, i, j))
        .collect()
}

/// Per-parabolic verdicts for `b_{i,k,ε}` and the forms on `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicCase {
    pub i: usize,
    pub coisotropic: bool,
    pub strongly_unipotent: bool,
    pub unipotent_type: bool,
    pub decomposition: bool,
    pub r_prime_in_stabilizer: bool,
    pub lambda_zero_on_v_prime: bool,
    pub orbit_dimension: bool,
    pub f_unipotent_type: Option<bool>,
    /// Whether the unipotent radical of `b_i` equals `^u p_i(X) + n_i`.
    /// Informational: this fails when `g_{i,k}` meets `^u p_i(X)`.
    pub radical_is_printed_sum: bool,
    pub detail: Vec<String>,
}

impl ParabolicCase {
    pub fn passed(&self) -> bool {
        self.coisotropic
            && self.strongly_unipotent
            && self.unipotent_type
            && self.decomposition
            && self.r_prime_in_stabilizer
            && self.lambda_zero_on_v_prime
            && self.orbit_dimension
            && self.f_unipotent_type.unwrap_or(true)
    }
}

pub fn parabolic_case(d: &OrbitDescriptor, i: usize) -> ParabolicCase {
    let r = parabolic_restriction(d, i);
    let p = &r.parabolic.p;
    let g = &r.forms.g;
    let mut detail = Vec::new();
    let co = coisotropic(&r.b, g, p);
    let su = strongly_unipotent(&r.b, g, p);
    let ut = match unipotent_type_report(g, p, &r.b) {
        Ok(()) => true,
        Err(e) => {
            detail.push(format!("g_{i}: {e}"));
            false
        }
    };
    let printed_radical = r.stab_radical.plus(&r.parabolic.n);
    let b_radical = unipotent_radical(&r.b);
    let decomposition = r.r_prime.plus(&printed_radical) == r.b
        && r.r_prime.plus(&b_radical) == r.b
        && r.r_prime.meet(&b_radical).dim() == 0
        && r.r_prime.is_closed()
        && trace_form_nondegenerate(&r.r_prime);
    if !decomposition {
        detail.push(format!(
            "b_{i} (dim {}) vs r' (dim {}) + radical (dim {})",
            r.b.dim(),
            r.r_prime.dim(),
            b_radical.dim()
        ));
    }
    let radical_is_printed_sum = b_radical == printed_radical;
    let stab = form_stabilizer(g, p);
    let r_in = stab.contains_sub(&r.r_prime);
    let lam = r.forms.f.vanishes_on(&r.v_prime);
    let x = representative_x(d);
    let pstab = p.meet(&centralizer(&x));
    let od = p.dim() - pstab.dim() == orbit_dimension(d);
    let f_ut =
        (d.k <= i && i <= d.n - d.k).then(|| match unipotent_type_report(&r.forms.f, p, &r.b) {
            Ok(()) => true,
            Err(e) => {
                detail.push(format!("f_{i}: {e}"));
                false
            }
        });
    ParabolicCase {
        i,
        coisotropic: co,
        strongly_unipotent: su,
        unipotent_type: ut,
        decomposition,
        r_prime_in_stabilizer: r_in,
        lambda_zero_on_v_prime: lam,
        orbit_dimension: od,
        f_unipotent_type: f_ut,
        radical_is_printed_sum,
        detail,
    }
}

/// [`parabolic_case`] for every `1 ≤ i ≤ n−1`, in order of `i`.
pub fn parabolic_grid(d: &OrbitDescriptor) -> Vec<ParabolicCase> {
    (1..d.n)
        .into_par_iter()
        .map(|i| parabolic_case(d, i))
        .collect()
}

/// For each simple root index `s`, the smallest `i ≠ s` with `X_{−α_s} ∈ p_i`.
pub fn generator_coverage(n: usize) -> Result<BTreeMap<usize, usize>, String> {
    let mut out = BTreeMap::new();
    for s in 1..n {
        let x = Generator::neg(s).element(n);
        let i = (1..n)
            .find(|&i| build_parabolic(i, n).p.contains(&x))
            .ok_or_else(|| format!("X_-alpha_{s} lies in no maximal parabolic of sl_{n}"))?;
        out.insert(s, i);
    }
    let gens: Vec<LieElement> = chevalley_generators(n)
        .iter()
        .map(|g| g.element(n))
        .collect();
    let generated = Subalgebra::generated(n, &gens);
    if generated.dim() != n * n - 1 {
        return Err(format!(
            "Chevalley generators span only dim {} in sl_{n}",
            generated.dim()
        ));
    }
    Ok(out)
}

/// An abstract parameter attached to one parabolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParameterToken {
    /// A character, recorded by its value at `w²`.
    Character(ExactScalar),
    /// `χ ⊗ τ_{sign·m/2}`: a discrete series of the double cover of SL₂
    /// twisted by a character with the given value at `w²`.
    DiscreteSeries {
        chi: ExactScalar,
        sign: i8,
        m: u32,
    },
    /// `χ ⊗ ρ_z` for the minimal representation of the double cover of SL₃.
    Sl3Minimal {
        chi: ExactScalar,
        z: ExactScalar,
    },
    Opaque(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterFamily {
    /// `tokens[i−1]` is the parameter for `p_i`.
    pub tokens: Vec<ParameterToken>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParameterError {
    #[error("family has {found} entries, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("tau_{i} and tau_{j} must agree")]
    Mismatch { i: usize, j: usize },
    #[error("tau_{i} is not an admissible character")]
    NotAdmissible { i: usize },
    #[error("tau_{i} violates the maximal-orbit selection rule: {reason}")]
    Selection { i: usize, reason: String },
}

/// `χ_{p,ε'}(w²) = (−1)^{(1−ε')/2}`.
pub fn chi_even(eps_prime: i8) -> ExactScalar {
    ExactScalar::int(if eps_prime > 0 { 1 } else { -1 })
}

/// Membership in `𝒟_{ε,ε'}`: `m ≡ 1 − ε' (mod 4)`, the sign is `ε`, and the
/// twisting character is `χ_{p,ε'}`.
pub fn in_discrete_set(token: &ParameterToken, eps: i8, eps_prime: i8) -> bool {
    match token {
        ParameterToken::DiscreteSeries { chi, sign, m } => {
            let residue = (1 - i64::from(eps_prime)).rem_euclid(4) as u32;
            *m > 0 && *sign == eps && m % 4 == residue && *chi == chi_even(eps_prime)
                // value at w² of the discrete series agrees with the character
                && ExactScalar::int(if (m / 2) % 2 == 0 { 1 } else { -1 }) == *chi
        }
        _ => false,
    }
}

pub fn parameter_family_check(
    fam: &ParameterFamily,
    d: &OrbitDescriptor,
) -> Result<(), ParameterError> {
    let n = d.n;
    let k = d.k;
    let t = &fam.tokens;
    if t.len() != n - 1 {
        return Err(ParameterError::Length {
            expected: n - 1,
            found: t.len(),
        });
    }
    for i in 1..k {
        if t[n - i - 1] != t[i - 1] {
            return Err(ParameterError::Mismatch { i, j: n - i });
        }
    }
    for i in k..=n - k {
        if t[i - 1] != t[k - 1] {
            return Err(ParameterError::Mismatch { i: k, j: i });
        }
    }
    let adm = admissibility_set(n, k);
    match &t[k - 1] {
        ParameterToken::Character(v) if adm.contains(v) => {}
        _ => return Err(ParameterError::NotAdmissible { i: k }),
    }
    if d.is_maximal() {
        let p = k;
        let middle = match &t[p - 1] {
            ParameterToken::Character(v) => v.clone(),
            _ => unreachable!("checked above"),
        };
        if n == 2 * p {
            let eps_prime = if middle == ExactScalar::one() { 1 } else { -1 };
            if !in_discrete_set(&t[p - 2], d.eps, eps_prime) {
                return Err(ParameterError::Selection {
                    i: p - 1,
                    reason: format!("not in D_(eps={},eps'={})", d.eps, eps_prime),
                });
            }
        } else {
            let minus_i = -ExactScalar::i();
            if middle != minus_i {
                return Err(ParameterError::Selection {
                    i: p,
                    reason: "tau_p,p must be chi_p,-1".into(),
                });
            }
            let want = ParameterToken::Sl3Minimal {
                chi: minus_i.clone(),
                z: minus_i,
            };
            if t[p - 2] != want {
                return Err(ParameterError::Selection {
                    i: p - 1,
                    reason: "tau_p-1,p must be chi_p,-1 (x) rho_-i".into(),
                });
            }
        }
    }
    Ok(())
}
