//! Partial Fourier conjugation between the two unipotent coordinate spaces.

use serde::{Deserialize, Serialize};

use crate::exactalg::ExactScalar;
use crate::liecore::{bracket, LieElement};
use crate::orbitcat::{representative_x, OrbitDescriptor};
use crate::stab::LinearForm;

use super::op::{Var, VarKind, WeylOp};
use super::realization::{RealizationCase, RealizationSpec};
use super::WeylError;

/// `X_{β_{a,b}} = E_{a,b+1}`, the root vector behind a coordinate.
pub fn root_vector_of(n: usize, v: &Var) -> LieElement {
    LieElement::e(n, v.i, v.j + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierPair {
    pub source: Var,
    pub target: Var,
    pub value: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierMap {
    pub descriptor: OrbitDescriptor,
    pub source: Vec<Var>,
    pub target: Vec<Var>,
    /// Full pairing `f([X_s, Y_t])`, rows indexed by `source`.
    pub pairing: Vec<Vec<ExactScalar>>,
    pub pairs: Vec<FourierPair>,
    /// Source coordinates carried to the identically indexed target coordinate.
    pub shared: Vec<(Var, Var)>,
}

/// The dual pairs the construction prescribes, with their values.
fn expected_pairs(spec: &RealizationSpec) -> Vec<(Var, Var, i64)> {
    let n = spec.descriptor.n;
    let k = spec.descriptor.k;
    match spec.case {
        RealizationCase::Generic => (1..=k)
            .map(|i| (Var::x(i, k), Var::y(k + 1, n - i), 1))
            .collect(),
        RealizationCase::EvenMaximal => {
            let p = k;
            (p + 1..=2 * p - 1)
                .map(|j| (Var::x(p, j), Var::y(2 * p - j, p - 1), -1))
                .collect()
        }
        RealizationCase::OddMaximal => {
            let p = k;
            (p + 2..=2 * p)
                .map(|j| (Var::x(p, j), Var::y(2 * p + 1 - j, p - 1), -1))
                .collect()
        }
    }
}

pub fn build_fourier(d: &OrbitDescriptor) -> Result<FourierMap, WeylError> {
    let spec = RealizationSpec::new(d)?;
    let n = d.n;
    let form = LinearForm::new(representative_x(d));
    let pairing: Vec<Vec<ExactScalar>> = spec
        .source
        .iter()
        .map(|s| {
            spec.target
                .iter()
                .map(|t| {
                    let z =
                        bracket(&root_vector_of(n, s), &root_vector_of(n, t)).expect("same rank");
                    ExactScalar::from_q(form.eval(&z))
                })
                .collect()
        })
        .collect();
    let mut pairs = Vec::new();
    let mut shared = Vec::new();
    for (r, s) in spec.source.iter().enumerate() {
        let hits: Vec<usize> = (0..spec.target.len())
            .filter(|&c| !pairing[r][c].is_zero())
            .collect();
        match hits.as_slice() {
            [] => {
                let twin = Var::y(s.i, s.j);
                if !spec.target.contains(&twin) {
                    return Err(WeylError::Pairing(format!(
                        "{s} is unpaired and has no twin"
                    )));
                }
                shared.push((*s, twin));
            }
            [c] => pairs.push(FourierPair {
                source: *s,
                target: spec.target[*c],
                value: pairing[r][*c].clone(),
            }),
            _ => {
                return Err(WeylError::Pairing(format!(
                    "{s} pairs with several targets"
                )))
            }
        }
    }
    let mut used: Vec<Var> = pairs.iter().map(|p| p.target).collect();
    used.extend(shared.iter().map(|(_, t)| *t));
    used.sort();
    let before = used.len();
    used.dedup();
    if used.len() != before || used.len() != spec.target.len() {
        return Err(WeylError::Pairing("pairing is not a bijection".into()));
    }
    let mut expected: Vec<(Var, Var, ExactScalar)> = expected_pairs(&spec)
        .into_iter()
        .map(|(s, t, v)| (s, t, ExactScalar::int(v)))
        .collect();
    let mut found: Vec<(Var, Var, ExactScalar)> = pairs
        .iter()
        .map(|p| (p.source, p.target, p.value.clone()))
        .collect();
    expected.sort_by_key(|a| (a.0, a.1));
    found.sort_by_key(|a| (a.0, a.1));
    if expected != found {
        return Err(WeylError::Pairing(format!(
            "computed pairs {:?} differ from the prescribed ones",
            found
                .iter()
                .map(|(s, t, v)| format!("{s}~{t}:{v}"))
                .collect::<Vec<_>>()
        )));
    }
    Ok(FourierMap {
        descriptor: *d,
        source: spec.source,
        target: spec.target,
        pairing,
        pairs,
        shared,
    })
}

impl FourierMap {
    fn pair_of(&self, v: &Var) -> Option<&FourierPair> {
        self.pairs.iter().find(|p| p.source == *v)
    }

    fn twin_of(&self, v: &Var) -> Option<Var> {
        self.shared.iter().find(|(s, _)| s == v).map(|(_, t)| *t)
    }

    /// Image of a source coordinate: `−(2iπc)⁻¹ ∂y` on a pair of value `c`.
    pub fn image_coord(&self, v: &Var) -> Result<WeylOp, WeylError> {
        if v.kind == VarKind::T {
            return Ok(WeylOp::coord(*v));
        }
        if let Some(p) = self.pair_of(v) {
            let c = (ExactScalar::two_i_pi() * &p.value)
                .inv()
                .expect("monomial pairing values");
            return Ok(WeylOp::deriv(p.target).scale(&-c));
        }
        self.twin_of(v)
            .map(WeylOp::coord)
            .ok_or(WeylError::ForeignVariable(*v))
    }

    /// Image of a source derivation: `2iπc·y` on a pair of value `c`.
    pub fn image_deriv(&self, v: &Var) -> Result<WeylOp, WeylError> {
        if v.kind == VarKind::T {
            return Ok(WeylOp::deriv(*v));
        }
        if let Some(p) = self.pair_of(v) {
            let c = ExactScalar::two_i_pi() * &p.value;
            return Ok(WeylOp::coord(p.target).scale(&c));
        }
        self.twin_of(v)
            .map(WeylOp::deriv)
            .ok_or(WeylError::ForeignVariable(*v))
    }
}

/// The algebra morphism determined by the images of coordinates and derivations.
pub fn fourier_conjugate(op: &WeylOp, fm: &FourierMap) -> Result<WeylOp, WeylError> {
    for v in op.vars() {
        if v.kind == VarKind::Y {
            return Err(WeylError::ForeignVariable(v));
        }
        fm.image_coord(&v)?;
    }
    Ok(op.substitute(
        |v| fm.image_coord(v).expect("checked"),
        |v| fm.image_deriv(v).expect("checked"),
    ))
}

/// One closed-form rule compared against the homomorphic image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCheck {
    pub rule: String,
    pub source: String,
    pub image: String,
    pub holds: bool,
}

/// The closed forms for `∂x`, `x`, `x∂x` and `x'∂x` on every dual pair,
/// each compared with the image computed from the coordinate rules alone.
pub fn fourier_rules(fm: &FourierMap) -> Vec<RuleCheck> {
    let two_i_pi = ExactScalar::two_i_pi();
    let mut out = Vec::new();
    let check = |rule: &str, src: WeylOp, printed: WeylOp| {
        let image = fourier_conjugate(&src, fm).expect("source operator");
        RuleCheck {
            rule: rule.to_string(),
            source: src.to_string(),
            image: image.to_string(),
            holds: image == printed,
        }
    };
    for p in &fm.pairs {
        let x = WeylOp::coord(p.source);
        let dx = WeylOp::deriv(p.source);
        let y = WeylOp::coord(p.target);
        let dy = WeylOp::deriv(p.target);
        let c = p.value.clone();
        out.push(check("deriv", dx.clone(), y.scale(&(&two_i_pi * &c))));
        // 2iπc·F(x) = −∂y
        let scaled = fourier_conjugate(&x, fm)
            .expect("source")
            .scale(&(&two_i_pi * &c));
        out.push(RuleCheck {
            rule: "coord".into(),
            source: x.to_string(),
            image: scaled.to_string(),
            holds: scaled == -&dy,
        });
        out.push(check("euler", &x * &dx, &(-&WeylOp::one()) - &(&y * &dy)));
    }
    for a in &fm.pairs {
        for b in &fm.pairs {
            if a.source == b.source {
                continue;
            }
            // F(x_b ∂x_a) = −(c_a / c_b)·y_a ∂y_b
            let ratio = &a.value * &b.value.inv().expect("unit");
            let printed = (&WeylOp::coord(a.target) * &WeylOp::deriv(b.target)).scale(&-ratio);
            out.push(check(
                "transfer",
                &WeylOp::coord(b.source) * &WeylOp::deriv(a.source),
                printed,
            ));
        }
    }
    out
}
