//! Acceptance suite: one line per criterion, exact checks throughout.
//!
//! Criteria 5 and 8 are known to fail. For those, the runner also checks that
//! the failure has the analysed shape, so a new kind of failure still exits non-zero.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sphorb::exactalg::{q_frac, ExactScalar};
use sphorb::liecore::{Generator, Subalgebra};
use sphorb::orbitcat::{
    catalog, epsilon_invariant, orbit_dimension, random_unimodular, representative_x,
    OrbitDescriptor,
};
use sphorb::parab::{
    duflo_classification, nested_parabolic_grid, parabolic_grid, render_branch_table,
};
use sphorb::stab::{
    admissibility_set, b_orbit_open, borel_form, borel_stabilizer_dimension_formula,
    centralizer_codimension, form_stabilizer, orientation_sign, verify_stabilizer_decomposition,
};
use sphorb::weyl::{
    build_fourier, fourier_conjugate, fourier_rules, gk_dimension_audit, maximal_sl2_relation,
    series_report, sl2_series_check, verify_bracket_relations, verify_matching, Atom,
    RealizationCase, RealizationSpec, WeylOp,
};

const GOLDEN_BRANCHES: &str = include_str!("golden/duflo_branches.txt");

struct Outcome {
    passed: bool,
    /// For a known failure: whether it has the analysed shape.
    expected_shape: bool,
    note: String,
}

impl Outcome {
    fn check(passed: bool, note: impl Into<String>) -> Self {
        Outcome {
            passed,
            expected_shape: passed,
            note: note.into(),
        }
    }
}

fn grid(lo: usize, hi: usize) -> Vec<OrbitDescriptor> {
    (lo..=hi).flat_map(catalog).collect()
}

fn orbit_dimensions() -> Outcome {
    let cases = grid(4, 12);
    let bad: Vec<_> = cases
        .par_iter()
        .filter(|d| {
            let want = 2 * d.k * (d.n - d.k);
            centralizer_codimension(&representative_x(d)) != want || orbit_dimension(d) != want
        })
        .map(|d| d.to_string())
        .collect();
    Outcome::check(
        bad.is_empty(),
        format!("{} orbits, n 4..=12, failures {bad:?}", cases.len()),
    )
}

fn borel_stabilizers() -> Outcome {
    let cases = grid(4, 12);
    let bad: Vec<_> = cases
        .par_iter()
        .filter(|d| {
            let b = Subalgebra::borel(d.n);
            form_stabilizer(&borel_form(d), &b).dim() != borel_stabilizer_dimension_formula(d)
                || !b_orbit_open(d)
        })
        .map(|d| d.to_string())
        .collect();
    Outcome::check(
        bad.is_empty(),
        format!("{} orbits, failures {bad:?}", cases.len()),
    )
}

fn stabilizer_decompositions() -> Outcome {
    let cases = grid(4, 10);
    let bad: Vec<_> = cases
        .par_iter()
        .filter_map(|d| {
            verify_stabilizer_decomposition(d)
                .err()
                .map(|e| e.to_string())
        })
        .collect();
    Outcome::check(
        bad.is_empty(),
        format!("{} orbits, n 4..=10, failures {bad:?}", cases.len()),
    )
}

fn signs_and_characters() -> Outcome {
    let cases = grid(4, 10);
    let signs_ok = cases.iter().all(|d| {
        let want = if d.n % 2 == 0 { 1 } else { -1 };
        orientation_sign(d).ok() == Some(want)
    });
    let chars_ok = cases.iter().all(|d| {
        let set = admissibility_set(d.n, d.k);
        let unit = if d.n % 2 == 0 {
            ExactScalar::one()
        } else {
            ExactScalar::i()
        };
        set.values.len() == 2 && set.contains(&unit) && set.contains(&-unit)
    });
    Outcome::check(
        signs_ok && chars_ok,
        format!("orientation signs {signs_ok}, admissible characters {chars_ok}"),
    )
}

fn parabolic_sweep() -> Outcome {
    let cases = grid(4, 8);
    let prop_fail: Vec<String> = cases
        .par_iter()
        .flat_map(|d| {
            parabolic_grid(d)
                .into_iter()
                .filter(|c| !c.passed())
                .map(|c| format!("{d} i={}", c.i))
                .collect::<Vec<_>>()
        })
        .collect();
    let nested: Vec<_> = cases.par_iter().flat_map(nested_parabolic_grid).collect();
    let nested_pass = nested.iter().filter(|c| c.passed()).count();
    // analysed shape: c is well placed and closed everywhere, and strongly
    // unipotent exactly when the nested parabolic is the Borel of sl_2
    let shape = nested
        .iter()
        .all(|c| c.well_placed && c.closed && c.strongly_unipotent == (c.p_dim == 2));
    let passed = prop_fail.is_empty() && nested_pass == nested.len();
    Outcome {
        passed,
        expected_shape: prop_fail.is_empty() && shape,
        note: format!(
            "parabolic cases failing {prop_fail:?}; nested predicate true in {nested_pass}/{} cases",
            nested.len()
        ),
    }
}

fn branch_table() -> Outcome {
    let rendered: String = grid(4, 12)
        .par_iter()
        .map(|d| {
            let p = duflo_classification(d);
            (p.is_consistent(), render_branch_table(&p))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(String::new(), |mut acc, (ok, t)| {
            if !ok {
                acc.push_str("# inconsistent\n");
            }
            acc.push_str(&t);
            acc
        });
    Outcome::check(
        rendered == GOLDEN_BRANCHES,
        format!("{} lines against the golden file", rendered.lines().count()),
    )
}

fn random_source_op(rng: &mut ChaCha8Rng, letters: &[WeylOp]) -> WeylOp {
    let mut out = WeylOp::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut w = WeylOp::one();
        for _ in 0..rng.gen_range(0..=3) {
            w = &w * &letters[rng.gen_range(0..letters.len())];
        }
        out = &out + &w.scale_q(&q_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
    }
    out
}

fn fourier_laws() -> Outcome {
    let cases = grid(4, 10);
    let rules: Vec<_> = cases
        .par_iter()
        .map(|d| match build_fourier(d) {
            Ok(fm) => {
                let r = fourier_rules(&fm);
                (r.len(), r.iter().all(|c| c.holds))
            }
            Err(_) => (0, false),
        })
        .collect();
    let rules_ok = rules.iter().all(|r| r.1);
    let checked: usize = rules.iter().map(|r| r.0).sum();
    let fm = build_fourier(&OrbitDescriptor::new(8, 3, 1).expect("valid")).expect("pairing");
    let mut letters: Vec<WeylOp> = fm.source.iter().map(|v| WeylOp::coord(*v)).collect();
    letters.extend(fm.source.iter().map(|v| WeylOp::deriv(*v)));
    letters.push(WeylOp::atom(Atom::B(1, 3)));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let hom_ok = (0..200).all(|_| {
        let a = random_source_op(&mut rng, &letters);
        let b = random_source_op(&mut rng, &letters);
        let f = |o: &WeylOp| fourier_conjugate(o, &fm).expect("source operator");
        f(&(&a * &b)) == &f(&a) * &f(&b)
    });
    Outcome::check(
        rules_ok && hom_ok,
        format!("{checked} rule instances hold {rules_ok}; homomorphism on 200 pairs {hom_ok}"),
    )
}

fn generic_realization() -> Outcome {
    let specs: Vec<RealizationSpec> = grid(4, 10)
        .iter()
        .map(|d| RealizationSpec::new(d).expect("spec"))
        .filter(|s| s.case == RealizationCase::Generic)
        .collect();
    let matching: Vec<bool> = specs
        .par_iter()
        .flat_map(|s| {
            s.psi_generators()
                .into_iter()
                .map(|z| verify_matching(z, s).map(|r| r.equal).unwrap_or(false))
                .collect::<Vec<_>>()
        })
        .collect();
    let matching_ok = matching.iter().all(|&b| b);
    let reports: Vec<_> = specs
        .par_iter()
        .map(|s| verify_bracket_relations(s).expect("report"))
        .collect();
    let total: usize = reports.iter().map(|r| r.cases.len()).sum();
    let failures: Vec<_> = reports.iter().flat_map(|r| r.failures()).collect();
    // analysed shape: only the printed torus operators for H_j, j ≥ k+2, fail
    let shape = reports.iter().all(|r| {
        let k = r.descriptor.k;
        r.failures().iter().all(|c| {
            c.left
                .strip_prefix("H[")
                .and_then(|s| s.trim_end_matches(']').parse::<usize>().ok())
                .is_some_and(|j| j >= k + 2)
        })
    });
    Outcome {
        passed: matching_ok && failures.is_empty(),
        expected_shape: matching_ok && shape,
        note: format!(
            "matching {}/{} hold; bracket relations {}/{} hold",
            matching.iter().filter(|&&b| b).count(),
            matching.len(),
            total - failures.len(),
            total
        ),
    }
}

fn even_maximal() -> Outcome {
    let specs: Vec<RealizationSpec> = grid(4, 10)
        .iter()
        .map(|d| RealizationSpec::new(d).expect("spec"))
        .filter(|s| s.case == RealizationCase::EvenMaximal)
        .collect();
    let ok = specs.iter().all(|s| {
        verify_matching(Generator::Cartan(s.descriptor.k), s).is_ok_and(|r| r.equal)
            && maximal_sl2_relation(s).unwrap_or(false)
    });
    Outcome::check(ok, format!("{} even maximal orbits", specs.len()))
}

fn gk_arithmetic() -> Outcome {
    let cases = grid(4, 12);
    let bad: Vec<_> = cases
        .par_iter()
        .filter(|d| !gk_dimension_audit(d).is_ok_and(|a| a.passed))
        .map(|d| d.to_string())
        .collect();
    Outcome::check(
        bad.is_empty(),
        format!("{} orbits, failures {bad:?}", cases.len()),
    )
}

fn discrete_series() -> Outcome {
    let half = q_frac(1, 2);
    let ok = sl2_series_check(1, &half) && sl2_series_check(-1, &half);
    Outcome::check(ok, "both signs")
}

fn series() -> Outcome {
    let r = series_report(12);
    Outcome::check(
        r.passed(),
        format!(
            "leading {}, odd vanish {}, agree from 2 {}",
            r.leading, r.odd_vanish, r.agree_from_two
        ),
    )
}

fn epsilon() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe95);
    let mut ok = true;
    for p in [2usize, 3, 4, 5] {
        let mut values = Vec::new();
        for eps in [1i8, -1] {
            let d = OrbitDescriptor::new(2 * p, p, eps).expect("valid");
            let x = representative_x(&d);
            let base = epsilon_invariant(&x).expect("type (2^p)");
            for _ in 0..100 {
                let g = random_unimodular(2 * p, &mut rng, 12);
                let y = g.conjugate(&x).expect("rank");
                ok &= epsilon_invariant(&y).ok() == Some(base);
            }
            values.push(base);
        }
        ok &= values[0] != values[1];
    }
    Outcome::check(ok, "n in {4,6,8,10}, 100 conjugations per orbit")
}

/// Number, name, check, and whether a failure is known.
type Criterion = (u32, &'static str, fn() -> Outcome, bool);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "orbit dimensions", orbit_dimensions, false),
        (
            2,
            "Borel stabilizer formula and open B-orbit",
            borel_stabilizers,
            false,
        ),
        (
            3,
            "stabilizer decompositions",
            stabilizer_decompositions,
            false,
        ),
        (
            4,
            "orientation signs and admissible characters",
            signs_and_characters,
            false,
        ),
        (
            5,
            "parabolic sweep and nested parabolics",
            parabolic_sweep,
            true,
        ),
        (6, "Duflo branch table", branch_table, false),
        (7, "Fourier laws", fourier_laws, false),
        (
            8,
            "generic realization: matching and brackets",
            generic_realization,
            true,
        ),
        (9, "even maximal realization", even_maximal, false),
        (10, "GK dimension arithmetic", gk_arithmetic, false),
        (11, "discrete-series relation", discrete_series, false),
        (12, "series coefficients", series, false),
        (13, "epsilon invariant", epsilon, false),
    ];
    let mut unexpected = 0;
    for (id, name, run, known_failure) in criteria {
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        let tag = if !o.passed && known_failure && o.expected_shape {
            " (known, see decisions ledger)"
        } else {
            ""
        };
        println!("criterion {id:>2} {status}{tag}: {name} | {}", o.note);
        if !o.passed && !(known_failure && o.expected_shape) {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
