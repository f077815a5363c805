//! Realization spaces, the transcribed operators on them, and the checks
//! that tie the two parabolic realizations together.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactalg::{ExactScalar, Q};
use crate::liecore::{bracket, centralizer, decompose, Generator, LieElement, Subalgebra};
use crate::orbitcat::{orbit_dimension, representative_x, OrbitDescriptor};
use crate::parab::build_parabolic;

use super::fourier::{build_fourier, fourier_conjugate, root_vector_of};
use super::op::{euler_sum, Atom, Var, WeylOp};
use super::WeylError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RealizationCase {
    /// `2 ≤ k < [n/2]`, parabolics `p_k` and `p_{k+1}`.
    Generic,
    /// `n = 2p`, `k = p`, parabolics `p_{p−1}` and `p_p`.
    EvenMaximal,
    /// `n = 2p+1`, `k = p`, parabolics `p_{p−1}` and `p_p`.
    OddMaximal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationSpec {
    pub descriptor: OrbitDescriptor,
    pub case: RealizationCase,
    /// Coordinates on the space the operators act on.
    pub target: Vec<Var>,
    /// Coordinates on the other parabolic's space, before Fourier conjugation.
    pub source: Vec<Var>,
    /// `dim R_Q`.
    pub reductive_dim: usize,
    /// Scalar coordinates beyond the group and the unipotent space (`t`, `a`).
    pub extra_coordinates: usize,
}

impl RealizationSpec {
    pub fn new(d: &OrbitDescriptor) -> Result<Self, WeylError> {
        let n = d.n;
        let k = d.k;
        let (case, target, source, reductive_dim, extra) = if 2 * k + 1 < n {
            let target = (k + 1..=n - k)
                .flat_map(|a| (n - k..n).map(move |b| Var::y(a, b)))
                .collect();
            let mut source: Vec<Var> = (1..=k).map(|i| Var::x(i, k)).collect();
            source.extend((k + 2..=n - k).flat_map(|a| (n - k..n).map(move |b| Var::x(a, b))));
            (RealizationCase::Generic, target, source, k * k, 0)
        } else if n == 2 * k {
            let p = k;
            let mut target: Vec<Var> = (1..p).map(|i| Var::y(i, p - 1)).collect();
            target.extend((p + 1..2 * p).map(|j| Var::y(p + 1, j)));
            let mut source: Vec<Var> = (p + 1..2 * p).map(|j| Var::x(p, j)).collect();
            source.extend((p + 1..2 * p).map(|j| Var::x(p + 1, j)));
            (
                RealizationCase::EvenMaximal,
                target,
                source,
                (p - 1) * (p - 1),
                1,
            )
        } else {
            let p = k;
            let mut target: Vec<Var> = (1..p).map(|i| Var::y(i, p - 1)).collect();
            for a in [p + 1, p + 2] {
                target.extend((p + 2..=2 * p).map(|j| Var::y(a, j)));
            }
            let source = [p, p + 1, p + 2]
                .into_iter()
                .flat_map(|a| (p + 2..=2 * p).map(move |j| Var::x(a, j)))
                .collect();
            (
                RealizationCase::OddMaximal,
                target,
                source,
                (p - 1) * (p - 1),
                2,
            )
        };
        Ok(RealizationSpec {
            descriptor: *d,
            case,
            target,
            source,
            reductive_dim,
            extra_coordinates: extra,
        })
    }

    pub fn variety_dim(&self) -> usize {
        self.reductive_dim + self.extra_coordinates + self.target.len()
    }

    /// Generators whose target-side operator is transcribed.
    pub fn phi_generators(&self) -> Vec<Generator> {
        let n = self.descriptor.n;
        let k = self.descriptor.k;
        match self.case {
            RealizationCase::Generic => {
                let mut g = vec![Generator::pos(k)];
                g.extend((1..k).map(|i| Generator::neg(n - i)));
                g.push(Generator::Cartan(k + 1));
                g.extend((k + 2..n).map(Generator::Cartan));
                g.push(Generator::neg(n - k));
                g.extend((n - k..n).map(|j| Generator::Root(k + 1, j + 1)));
                g
            }
            RealizationCase::EvenMaximal => vec![Generator::Cartan(k), Generator::pos(k)],
            RealizationCase::OddMaximal => Vec::new(),
        }
    }

    /// Generators whose source-side operator is transcribed.
    pub fn psi_generators(&self) -> Vec<Generator> {
        let n = self.descriptor.n;
        let k = self.descriptor.k;
        match self.case {
            RealizationCase::Generic => {
                let mut g = vec![Generator::pos(k)];
                g.extend((1..k).map(|i| Generator::neg(n - i)));
                g
            }
            RealizationCase::EvenMaximal => vec![Generator::Cartan(k)],
            RealizationCase::OddMaximal => Vec::new(),
        }
    }
}

fn half(n: i64) -> ExactScalar {
    ExactScalar::frac(n, 2)
}

fn y(i: usize, j: usize) -> WeylOp {
    WeylOp::coord(Var::y(i, j))
}

fn dy(i: usize, j: usize) -> WeylOp {
    WeylOp::deriv(Var::y(i, j))
}

fn x(i: usize, j: usize) -> WeylOp {
    WeylOp::coord(Var::x(i, j))
}

fn dx(i: usize, j: usize) -> WeylOp {
    WeylOp::deriv(Var::x(i, j))
}

fn sum<I: IntoIterator<Item = WeylOp>>(items: I) -> WeylOp {
    items.into_iter().fold(WeylOp::zero(), |acc, t| &acc + &t)
}

/// The operator the target-side parabolic attaches to `z`, as printed.
pub fn phi_generator(z: Generator, spec: &RealizationSpec) -> Result<WeylOp, WeylError> {
    if !spec.phi_generators().contains(&z) {
        return Err(WeylError::NoPrintedFormula(z.name()));
    }
    let n = spec.descriptor.n;
    let k = spec.descriptor.k;
    let eps = i64::from(spec.descriptor.eps);
    let op = match spec.case {
        RealizationCase::Generic => match z {
            Generator::Root(a, b) if a == k && b == k + 1 => {
                sum((1..=k).map(|i| &WeylOp::atom(Atom::B(i, k)) * &y(k + 1, n - i)))
                    .scale(&ExactScalar::two_i_pi())
            }
            Generator::Root(a, b) if b + 1 == a && b == n - k => {
                let quad = sum((k + 1..=n - k).flat_map(|i| {
                    (n - k..n).map(move |j| &(&y(i, n - k) * &y(n - k, j)) * &dy(i, j))
                }));
                &quad + &y(n - k, n - k).scale(&half((n - k) as i64))
            }
            Generator::Root(a, b) if b + 1 == a => {
                let i = n - b;
                let d = WeylOp::atom(Atom::D(Generator::pos(i)));
                &d + &sum((k + 1..=n - k).map(|s| &y(s, n - i) * &dy(s, n - i - 1)))
            }
            Generator::Root(a, b) => {
                debug_assert_eq!(a, k + 1);
                let j = b - 1;
                (&WeylOp::atom(Atom::A(k + 1, j)) * &dy(k + 1, j)).scale(&ExactScalar::int(-1))
            }
            Generator::Cartan(j) if j == k + 1 => {
                let neg = euler_sum((1..=k).map(|i| (-1, Var::y(k + 1, n - i))));
                let pos = euler_sum((1..=k).map(|i| (1, Var::y(k + 2, n - i))));
                &neg + &pos
            }
            Generator::Cartan(j) => {
                let mut terms: Vec<(i64, Var)> = (k + 1..j).map(|i| (-1, Var::y(i, j))).collect();
                terms.push((-2, Var::y(j, j)));
                terms.extend((j + 1..n).map(|i| (-1, Var::y(j + 1, i))));
                &euler_sum(terms) - &WeylOp::scalar(half(n as i64 - 1))
            }
        },
        RealizationCase::EvenMaximal => {
            let p = k;
            match z {
                Generator::Cartan(_) => {
                    let mut terms: Vec<(i64, Var)> =
                        (1..p).map(|i| (1, Var::y(i, p - 1))).collect();
                    terms.extend((p + 1..2 * p).map(|j| (1, Var::y(p + 1, j))));
                    terms.push((1, Var::t()));
                    &WeylOp::scalar(ExactScalar::frac(2 * p as i64 - 1, 2)) + &euler_sum(terms)
                }
                _ => {
                    let t2 = WeylOp::coord(Var::t()).pow(2).scale(&ExactScalar::int(eps));
                    let cross = sum((1..p).map(|i| &y(i, p - 1) * &y(p + 1, 2 * p - i)));
                    (&t2 - &cross).scale(&(ExactScalar::i() * ExactScalar::pi()))
                }
            }
        }
        RealizationCase::OddMaximal => unreachable!("no transcribed operators"),
    };
    Ok(op)
}

/// The operator the source-side parabolic attaches to `z`, as printed.
pub fn psi_generator(z: Generator, spec: &RealizationSpec) -> Result<WeylOp, WeylError> {
    if !spec.psi_generators().contains(&z) {
        return Err(WeylError::NoPrintedFormula(z.name()));
    }
    let n = spec.descriptor.n;
    let k = spec.descriptor.k;
    let op = match (spec.case, z) {
        (RealizationCase::Generic, Generator::Root(a, b)) if a == k && b == k + 1 => {
            sum((1..=k).map(|i| &WeylOp::atom(Atom::B(i, k)) * &dx(i, k)))
        }
        (RealizationCase::Generic, Generator::Root(_, b)) => {
            let i = n - b;
            let d = WeylOp::atom(Atom::D(Generator::pos(i)));
            let shift = &x(i + 1, k) * &dx(i, k);
            let rest = sum((k + 2..=n - k).map(|s| &x(s, n - i) * &dx(s, n - i - 1)));
            &(&d - &shift) + &rest
        }
        (RealizationCase::EvenMaximal, _) => {
            let p = k;
            let mut terms: Vec<(i64, Var)> = (p + 1..2 * p).map(|j| (-1, Var::x(p, j))).collect();
            terms.extend((p + 1..2 * p).map(|j| (1, Var::x(p + 1, j))));
            terms.push((1, Var::t()));
            &euler_sum(terms) + &WeylOp::scalar(half(1))
        }
        _ => return Err(WeylError::NoPrintedFormula(z.name())),
    };
    Ok(op)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub generator: String,
    pub conjugated: String,
    pub printed: String,
    pub equal: bool,
    pub difference: String,
}

/// Fourier image of the source-side operator against the target-side one.
pub fn verify_matching(z: Generator, spec: &RealizationSpec) -> Result<MatchReport, WeylError> {
    let fm = build_fourier(&spec.descriptor)?;
    let lhs = fourier_conjugate(&psi_generator(z, spec)?, &fm)?;
    let rhs = phi_generator(z, spec)?;
    let diff = &lhs - &rhs;
    Ok(MatchReport {
        generator: z.name(),
        conjugated: lhs.to_string(),
        printed: rhs.to_string(),
        equal: diff.is_zero(),
        difference: diff.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketCase {
    pub left: String,
    pub right: String,
    /// `[left, right]` in the Chevalley basis.
    pub bracket: Vec<(String, Q)>,
    pub holds: bool,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    pub descriptor: OrbitDescriptor,
    pub cases: Vec<BracketCase>,
    /// Pairs left out because an operator has atoms or the bracket leaves the list.
    pub skipped: usize,
}

impl BracketReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&BracketCase> {
        self.cases.iter().filter(|c| !c.holds).collect()
    }
}

fn chevalley_coordinates(z: &LieElement) -> BTreeMap<Generator, Q> {
    decompose(z).into_iter().collect()
}

/// `[φ(Z₁), φ(Z₂)] = φ([Z₁, Z₂])` over pairs of atom-free transcribed operators
/// whose bracket stays in the span of the transcribed generators.
pub fn verify_bracket_relations(spec: &RealizationSpec) -> Result<BracketReport, WeylError> {
    verify_bracket_relations_with(spec, |z| phi_generator(z, spec))
}

/// Same check for an arbitrary assignment of operators to the transcribed generators.
pub fn verify_bracket_relations_with<F>(
    spec: &RealizationSpec,
    phi: F,
) -> Result<BracketReport, WeylError>
where
    F: Fn(Generator) -> Result<WeylOp, WeylError>,
{
    let n = spec.descriptor.n;
    let gens = spec.phi_generators();
    let ops: BTreeMap<Generator, WeylOp> = gens
        .iter()
        .map(|&g| phi(g).map(|o| (g, o)))
        .collect::<Result<_, _>>()?;
    let mut cases = Vec::new();
    let mut skipped = 0;
    for (a, &za) in gens.iter().enumerate() {
        for &zb in &gens[a + 1..] {
            let (oa, ob) = (&ops[&za], &ops[&zb]);
            if oa.has_atoms() || ob.has_atoms() {
                skipped += 1;
                continue;
            }
            let br = bracket(&za.element(n), &zb.element(n)).expect("same rank");
            let coords = chevalley_coordinates(&br);
            if coords.keys().any(|g| !ops.contains_key(g)) {
                skipped += 1;
                continue;
            }
            let expected = coords
                .iter()
                .fold(WeylOp::zero(), |acc, (g, c)| &acc + &ops[g].scale_q(c));
            let diff = &oa.commutator(ob) - &expected;
            cases.push(BracketCase {
                left: za.name(),
                right: zb.name(),
                bracket: coords.iter().map(|(g, c)| (g.name(), c.clone())).collect(),
                holds: diff.is_zero(),
                difference: diff.to_string(),
            });
        }
    }
    Ok(BracketReport {
        descriptor: spec.descriptor,
        cases,
        skipped,
    })
}

/// `−Σ β(H_{α_j}) y_β ∂_β` over the target coordinates: the torus action that
/// the coordinate weights force, up to an additive constant.
pub fn weight_operator(spec: &RealizationSpec, j: usize) -> WeylOp {
    let n = spec.descriptor.n;
    let h = LieElement::h(n, j);
    euler_sum(spec.target.iter().map(|v| {
        let e = root_vector_of(n, v);
        let w = bracket(&h, &e).expect("same rank");
        let coeff = w.get(v.i, v.j + 1);
        let c = coeff.to_integer();
        (-i64::try_from(c).expect("small"), *v)
    }))
}

/// `[φ(H_{α_p}), φ(X_{α_p})] = 2φ(X_{α_p})` in the even maximal case.
pub fn maximal_sl2_relation(spec: &RealizationSpec) -> Result<bool, WeylError> {
    if spec.case != RealizationCase::EvenMaximal {
        return Err(WeylError::NoPrintedFormula(
            "H/X pair outside the even maximal case".into(),
        ));
    }
    let p = spec.descriptor.k;
    let h = phi_generator(Generator::Cartan(p), spec)?;
    let xo = phi_generator(Generator::pos(p), spec)?;
    Ok(h.commutator(&xo) == xo.scale(&ExactScalar::int(2)))
}

/// `[t∂_t + shift, −iεπt²] = 2·(−iεπt²)`; the flows give `shift = ½`.
pub fn sl2_series_check(eps: i8, shift: &Q) -> bool {
    let t = Var::t();
    let h = &WeylOp::euler(t) + &WeylOp::scalar(ExactScalar::from_q(shift.clone()));
    let c = -(ExactScalar::i() * ExactScalar::pi() * ExactScalar::int(i64::from(eps)));
    let xo = WeylOp::coord(t).pow(2).scale(&c);
    h.commutator(&xo) == xo.scale(&ExactScalar::int(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkAudit {
    pub descriptor: OrbitDescriptor,
    pub case: RealizationCase,
    pub orbit_dim: usize,
    /// `dim p_k − dim p_k(X)`.
    pub parabolic_orbit_dim: usize,
    /// `dim s` from a basis of the complement subalgebra.
    pub complement_dim: usize,
    pub complement_is_subalgebra: bool,
    pub variety_dim: usize,
    pub passed: bool,
}

fn complement_subalgebra(spec: &RealizationSpec) -> Subalgebra {
    let n = spec.descriptor.n;
    let k = spec.descriptor.k;
    let rank = match spec.case {
        RealizationCase::Generic => k,
        _ => k - 1,
    };
    let mut elems: Vec<LieElement> = Subalgebra::sl_block(n, 1, rank).elements();
    elems.push(LieElement::h(n, rank));
    elems.extend(spec.target.iter().map(|v| root_vector_of(n, v)));
    match spec.case {
        RealizationCase::Generic => {}
        RealizationCase::EvenMaximal => elems.push(LieElement::h(n, k)),
        RealizationCase::OddMaximal => {
            elems.push(LieElement::h(n, k + 1));
            elems.push(Generator::pos(k + 1).element(n));
        }
    }
    Subalgebra::span(n, &elems)
}

pub fn gk_dimension_audit(d: &OrbitDescriptor) -> Result<GkAudit, WeylError> {
    let spec = RealizationSpec::new(d)?;
    let n = d.n;
    let orbit = orbit_dimension(d);
    let pk = build_parabolic(d.k, n).p;
    let stab = pk.meet(&centralizer(&representative_x(d)));
    let parabolic_orbit_dim = pk.dim() - stab.dim();
    let s = complement_subalgebra(&spec);
    let variety_dim = spec.variety_dim();
    let passed = parabolic_orbit_dim == orbit
        && s.dim() == d.k * (n - d.k)
        && s.is_closed()
        && 2 * variety_dim == orbit;
    Ok(GkAudit {
        descriptor: *d,
        case: spec.case,
        orbit_dim: orbit,
        parabolic_orbit_dim,
        complement_dim: s.dim(),
        complement_is_subalgebra: s.is_closed(),
        variety_dim,
        passed,
    })
}
