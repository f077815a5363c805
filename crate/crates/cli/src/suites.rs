use rayon::prelude::*;

use sphorb::exactalg::{q_frac, ExactScalar};
use sphorb::orbitcat::OrbitDescriptor;
use sphorb::parab::{duflo_classification, parabolic_grid, recursion_chain};
use sphorb::stab::{admissibility_set, lagrangian_check, orientation_sign};
use sphorb::weyl::{
    build_fourier, fourier_conjugate, fourier_rules, gk_dimension_audit, maximal_sl2_relation,
    series_report, sl2_series_check, verify_bracket_relations, verify_matching, Atom,
    RealizationCase, RealizationSpec, WeylOp,
};

use crate::report::CaseResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    #[value(name = "prop3.2")]
    Prop32,
    #[value(name = "prop4.2")]
    Prop42,
    #[value(name = "cor4.3")]
    Cor43,
    #[value(name = "lemma6.6")]
    Lemma66,
    #[value(name = "lemma6.7")]
    Lemma67,
    #[value(name = "thm6.8")]
    Thm68,
    #[value(name = "series7.2")]
    Series72,
    /// Bracket relations of the transcribed generic operators.
    #[value(name = "brackets")]
    Brackets,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop32 => "prop3.2",
            Suite::Prop42 => "prop4.2",
            Suite::Cor43 => "cor4.3",
            Suite::Lemma66 => "lemma6.6",
            Suite::Lemma67 => "lemma6.7",
            Suite::Thm68 => "thm6.8",
            Suite::Series72 => "series7.2",
            Suite::Brackets => "brackets",
        }
    }
}

pub struct SuiteInput<'a> {
    pub orbits: &'a [OrbitDescriptor],
    pub seed: u64,
    pub rmax: usize,
}

pub struct SuiteOutput {
    pub cases: Vec<CaseResult>,
    pub skipped: Vec<String>,
}

fn order(d: &OrbitDescriptor, rest: &[i64]) -> Vec<i64> {
    let mut v = vec![d.n as i64, d.k as i64, -i64::from(d.eps)];
    v.extend_from_slice(rest);
    v
}

pub fn run(suite: Suite, input: &SuiteInput<'_>) -> SuiteOutput {
    let per_orbit = |f: fn(&OrbitDescriptor, &SuiteInput<'_>) -> Vec<CaseResult>| SuiteOutput {
        cases: input.orbits.par_iter().flat_map(|d| f(d, input)).collect(),
        skipped: Vec::new(),
    };
    match suite {
        Suite::Prop32 => per_orbit(prop32),
        Suite::Prop42 => per_orbit(prop42),
        Suite::Cor43 => per_orbit(cor43),
        Suite::Thm68 => per_orbit(thm68),
        Suite::Lemma66 => by_case(input, RealizationCase::Generic, lemma66),
        Suite::Lemma67 => {
            let mut out = by_case(input, RealizationCase::EvenMaximal, lemma67);
            for eps in [1i8, -1] {
                let ok = sl2_series_check(eps, &q_frac(1, 2));
                out.cases.push(CaseResult::new(
                    vec![0, 0, -i64::from(eps)],
                    format!("sl2 discrete series eps={eps:+}"),
                    ok,
                    vec![format!("relation at lambda=1/2 holds: {ok}")],
                ));
            }
            out
        }
        Suite::Brackets => by_case(input, RealizationCase::Generic, brackets),
        Suite::Series72 => series(input.rmax),
    }
}

fn by_case(
    input: &SuiteInput<'_>,
    case: RealizationCase,
    f: fn(&RealizationSpec, &SuiteInput<'_>) -> Vec<CaseResult>,
) -> SuiteOutput {
    let specs: Vec<(OrbitDescriptor, Option<RealizationSpec>)> = input
        .orbits
        .iter()
        .map(|d| (*d, RealizationSpec::new(d).ok().filter(|s| s.case == case)))
        .collect();
    let skipped = specs
        .iter()
        .filter(|(_, s)| s.is_none())
        .map(|(d, _)| format!("{d} (other realization case)"))
        .collect();
    let cases = specs
        .par_iter()
        .filter_map(|(_, s)| s.as_ref())
        .flat_map(|s| f(s, input))
        .collect();
    SuiteOutput { cases, skipped }
}

fn prop32(d: &OrbitDescriptor, _: &SuiteInput<'_>) -> Vec<CaseResult> {
    let want = if d.n.is_multiple_of(2) { 1 } else { -1 };
    let sign = orientation_sign(d);
    let sign_ok = sign.as_ref().is_ok_and(|s| *s == want);
    let set = admissibility_set(d.n, d.k);
    let unit = if d.n.is_multiple_of(2) {
        ExactScalar::one()
    } else {
        ExactScalar::i()
    };
    let chars_ok = set.values.len() == 2 && set.contains(&unit) && set.contains(&-unit);
    let lag = lagrangian_check(d);
    let values: Vec<String> = set.values.iter().map(ToString::to_string).collect();
    let detail = vec![
        match &sign {
            Ok(s) => format!("orientation sign {s:+}, expected {want:+}"),
            Err(e) => format!("orientation sign error: {e}"),
        },
        format!("admissible characters at w^2: {{{}}}", values.join(", ")),
        match &lag {
            Ok(l) => format!("Lagrangian complement of dim {} checked", l.dim()),
            Err(e) => format!("Lagrangian check failed: {e}"),
        },
    ];
    vec![CaseResult::new(
        order(d, &[]),
        d.to_string(),
        sign_ok && chars_ok && lag.is_ok(),
        detail,
    )]
}

fn prop42(d: &OrbitDescriptor, _: &SuiteInput<'_>) -> Vec<CaseResult> {
    parabolic_grid(d)
        .into_iter()
        .map(|c| {
            let mut detail = vec![format!(
                "coisotropic {} strongly unipotent {} unipotent type {} decomposition {}",
                c.coisotropic, c.strongly_unipotent, c.unipotent_type, c.decomposition
            )];
            detail.extend(c.detail.iter().cloned());
            CaseResult::new(
                order(d, &[c.i as i64]),
                format!("{d} i={}", c.i),
                c.passed(),
                detail,
            )
        })
        .collect()
}

fn cor43(d: &OrbitDescriptor, _: &SuiteInput<'_>) -> Vec<CaseResult> {
    let p = duflo_classification(d);
    let mut detail: Vec<String> = p
        .rows
        .iter()
        .filter(|r| r.branch != r.expected)
        .map(|r| {
            format!(
                "i={} computed {:?}, expected {:?}",
                r.i, r.branch, r.expected
            )
        })
        .collect();
    let chain = recursion_chain(d);
    match &chain {
        Ok(links) => {
            let ranks: Vec<String> = links.iter().map(|l| l.rank.to_string()).collect();
            detail.push(format!("chain ranks {}", ranks.join(",")));
        }
        Err(e) => detail.push(format!("chain: {e}")),
    }
    vec![CaseResult::new(
        order(d, &[]),
        d.to_string(),
        p.is_consistent() && chain.is_ok(),
        detail,
    )]
}

fn thm68(d: &OrbitDescriptor, _: &SuiteInput<'_>) -> Vec<CaseResult> {
    let (ok, detail) = match gk_dimension_audit(d) {
        Ok(a) => (
            a.passed,
            vec![format!(
                "{:?}: orbit dim {}, parabolic orbit dim {}, complement dim {} (subalgebra {}), variety dim {}",
                a.case,
                a.orbit_dim,
                a.parabolic_orbit_dim,
                a.complement_dim,
                a.complement_is_subalgebra,
                a.variety_dim
            )],
        ),
        Err(e) => (false, vec![e.to_string()]),
    };
    vec![CaseResult::new(order(d, &[]), d.to_string(), ok, detail)]
}

/// Random words in the source coordinates, derivatives and one atom.
fn seeded_pairs(fm: &sphorb::weyl::FourierMap, seed: u64, count: usize) -> Vec<(WeylOp, WeylOp)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut letters: Vec<WeylOp> = fm.source.iter().map(|v| WeylOp::coord(*v)).collect();
    letters.extend(fm.source.iter().map(|v| WeylOp::deriv(*v)));
    letters.push(WeylOp::atom(Atom::B(1, fm.descriptor.k)));
    let word = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut out = WeylOp::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut w = WeylOp::one();
            for _ in 0..rng.gen_range(0..=3) {
                w = &w * &letters[rng.gen_range(0..letters.len())];
            }
            out = &out + &w.scale_q(&q_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
        }
        out
    };
    (0..count)
        .map(|_| (word(&mut rng), word(&mut rng)))
        .collect()
}

fn lemma66(s: &RealizationSpec, input: &SuiteInput<'_>) -> Vec<CaseResult> {
    let d = &s.descriptor;
    let mut out = Vec::new();
    match build_fourier(d) {
        Ok(fm) => {
            let rules = fourier_rules(&fm);
            let broken: Vec<String> = rules
                .iter()
                .filter(|r| !r.holds)
                .map(|r| format!("{}: {} -> {}", r.rule, r.source, r.image))
                .collect();
            out.push(CaseResult::new(
                order(d, &[0]),
                format!("{d} Fourier rules ({} instances)", rules.len()),
                broken.is_empty(),
                broken,
            ));
            let pairs = seeded_pairs(&fm, input.seed ^ (d.n as u64) << 8 ^ d.k as u64, 20);
            let broken: Vec<String> = pairs
                .iter()
                .enumerate()
                .filter(|(_, (a, b))| {
                    let f = |o: &WeylOp| fourier_conjugate(o, &fm).ok();
                    match (f(&(a * b)), f(a), f(b)) {
                        (Some(ab), Some(fa), Some(fb)) => ab != &fa * &fb,
                        _ => true,
                    }
                })
                .map(|(idx, (a, b))| format!("pair {idx}: a = {a}; b = {b}"))
                .collect();
            out.push(CaseResult::new(
                order(d, &[1]),
                format!("{d} Fourier map multiplicative on 20 seeded pairs"),
                broken.is_empty(),
                broken,
            ));
        }
        Err(e) => out.push(CaseResult::new(
            order(d, &[0]),
            format!("{d} Fourier map"),
            false,
            vec![e.to_string()],
        )),
    }
    out.extend(matching(s));
    out
}

fn matching(s: &RealizationSpec) -> Vec<CaseResult> {
    let d = &s.descriptor;
    s.psi_generators()
        .into_iter()
        .enumerate()
        .map(|(idx, z)| match verify_matching(z, s) {
            Ok(r) => CaseResult::new(
                order(d, &[2, idx as i64]),
                format!("{d} {} transcribed operators agree", r.generator),
                r.equal,
                vec![
                    format!("Fourier image: {}", r.conjugated),
                    format!("printed: {}", r.printed),
                    format!("difference: {}", r.difference),
                ],
            ),
            Err(e) => CaseResult::new(
                order(d, &[2, idx as i64]),
                format!("{d} {}", z.name()),
                false,
                vec![e.to_string()],
            ),
        })
        .collect()
}

fn lemma67(s: &RealizationSpec, _: &SuiteInput<'_>) -> Vec<CaseResult> {
    let d = &s.descriptor;
    let mut out = matching(s);
    let (ok, detail) = match maximal_sl2_relation(s) {
        Ok(b) => (
            b,
            vec![format!(
                "sl2 relation among the middle generators holds: {b}"
            )],
        ),
        Err(e) => (false, vec![e.to_string()]),
    };
    out.push(CaseResult::new(
        order(d, &[3]),
        format!("{d} sl2 relation"),
        ok,
        detail,
    ));
    out
}

fn brackets(s: &RealizationSpec, _: &SuiteInput<'_>) -> Vec<CaseResult> {
    let d = &s.descriptor;
    match verify_bracket_relations(s) {
        Ok(r) => r
            .cases
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let expected: Vec<String> =
                    c.bracket.iter().map(|(g, q)| format!("{q}*{g}")).collect();
                CaseResult::new(
                    order(d, &[idx as i64]),
                    format!("{d} [{}, {}]", c.left, c.right),
                    c.holds,
                    vec![
                        format!(
                            "bracket in g: {}",
                            if expected.is_empty() {
                                "0".into()
                            } else {
                                expected.join(" + ")
                            }
                        ),
                        format!("difference: {}", c.difference),
                    ],
                )
            })
            .collect(),
        Err(e) => vec![CaseResult::new(
            order(d, &[]),
            d.to_string(),
            false,
            vec![e.to_string()],
        )],
    }
}

fn series(rmax: usize) -> SuiteOutput {
    let r = series_report(rmax);
    let coeffs = &r.coefficients;
    let values: Vec<String> = (0..=rmax)
        .map(|m| format!("r={m}: b={} c={}", coeffs.b[m], coeffs.c[m]))
        .collect();
    let cases = vec![
        CaseResult::new(
            vec![0],
            "leading coefficients b_0 = c_0 = 1, b_1 = -c_1 = 1/2",
            r.leading,
            values.clone(),
        ),
        CaseResult::new(
            vec![1],
            "odd coefficients vanish from r = 3",
            r.odd_vanish,
            values.clone(),
        ),
        CaseResult::new(vec![2], "b_r = c_r from r = 2", r.agree_from_two, values),
    ];
    SuiteOutput {
        cases,
        skipped: Vec::new(),
    }
}
