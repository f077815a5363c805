use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sphorb::exactalg::{q_frac, ExactScalar, Gauss, RationalMatrix, Q};
use sphorb::liecore::{bracket, trace_form, unipotent_exp, unipotent_log, LieElement};
use sphorb::orbitcat::{
    epsilon_invariant, random_unimodular, representative_x, representative_y, OrbitDescriptor,
};
use sphorb::weyl::{build_fourier, fourier_conjugate, Atom, FourierMap, Var, WeylOp};

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| q_frac(a, b))
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (
        -2i32..=2,
        prop::collection::vec((small_q(), small_q()), 0..4),
    )
        .prop_map(|(low, cs)| {
            ExactScalar::from_parts(low, cs.into_iter().map(|(a, b)| Gauss::new(a, b)).collect())
        })
}

fn lie_element(n: usize) -> impl Strategy<Value = LieElement> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |mut v| {
        let tr: i64 = (0..n).map(|i| v[i * n + i]).sum();
        v[n * n - 1] -= tr;
        LieElement::from_vec(n, v.into_iter().map(|x| q_frac(x, 1)).collect()).unwrap()
    })
}

fn strictly_upper(n: usize) -> impl Strategy<Value = LieElement> {
    prop::collection::vec(small_q(), n * n).prop_map(move |v| {
        let mut x = LieElement::zero(n);
        for i in 1..=n {
            for j in i + 1..=n {
                x.set(i, j, v[(i - 1) * n + j - 1].clone());
            }
        }
        x
    })
}

/// A product of up to three letters with a rational coefficient.
fn word(letters: Vec<WeylOp>) -> impl Strategy<Value = WeylOp> {
    let m = letters.len();
    (small_q(), prop::collection::vec(0..m, 0..=3)).prop_map(move |(c, idx)| {
        idx.iter()
            .fold(WeylOp::one(), |acc, &i| &acc * &letters[i])
            .scale_q(&c)
    })
}

fn op(letters: Vec<WeylOp>) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec(word(letters), 1..=3)
        .prop_map(|ws| ws.iter().fold(WeylOp::zero(), |acc, w| &acc + w))
}

fn palette() -> Vec<WeylOp> {
    let vars = [Var::y(1, 1), Var::y(1, 2), Var::t()];
    let mut out: Vec<WeylOp> = vars.iter().map(|v| WeylOp::coord(*v)).collect();
    out.extend(vars.iter().map(|v| WeylOp::deriv(*v)));
    out.push(WeylOp::atom(Atom::B(1, 1)));
    out
}

fn source_palette(fm: &FourierMap) -> Vec<WeylOp> {
    let mut out: Vec<WeylOp> = fm.source.iter().map(|v| WeylOp::coord(*v)).collect();
    out.extend(fm.source.iter().map(|v| WeylOp::deriv(*v)));
    out.push(WeylOp::atom(Atom::B(1, fm.descriptor.k)));
    out
}

proptest! {
    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn scalar_normal_form(a in scalar()) {
        prop_assert_eq!(a.clone().normalized(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        let back: ExactScalar = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn nullspace_is_kernel(rows in 1usize..5, cols in 1usize..6, seed in prop::collection::vec(-2i64..=2, 30)) {
        let m = RationalMatrix::from_rows(
            (0..rows).map(|r| (0..cols).map(|c| q_frac(seed[r * cols + c], 1)).collect()).collect(),
        ).unwrap();
        let ns = m.nullspace().unwrap();
        prop_assert_eq!(m.rank().unwrap() + ns.len(), cols);
        for v in &ns {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == Q::from_integer(0.into())));
        }
    }

    #[test]
    fn jacobi(x in lie_element(4), y in lie_element(4), z in lie_element(4)) {
        let a = bracket(&x, &bracket(&y, &z).unwrap()).unwrap();
        let b = bracket(&y, &bracket(&z, &x).unwrap()).unwrap();
        let c = bracket(&z, &bracket(&x, &y).unwrap()).unwrap();
        prop_assert!(a.add(&b).unwrap().add(&c).unwrap().is_zero());
    }

    #[test]
    fn trace_form_invariance(x in lie_element(3), y in lie_element(3), z in lie_element(3)) {
        let l = trace_form(&bracket(&z, &x).unwrap(), &y).unwrap();
        let r = trace_form(&x, &bracket(&z, &y).unwrap()).unwrap();
        prop_assert_eq!(l + r, Q::from_integer(0.into()));
    }

    #[test]
    fn log_exp_round_trip(x in strictly_upper(4)) {
        let g = unipotent_exp(&x).unwrap();
        prop_assert_eq!(unipotent_log(&g).unwrap(), x);
    }

    #[test]
    fn weyl_associativity(a in op(palette()), b in op(palette()), c in op(palette())) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fourier_is_multiplicative(
        (a, b) in {
            let fm = build_fourier(&OrbitDescriptor::new(7, 2, 1).unwrap()).unwrap();
            let p = source_palette(&fm);
            (op(p.clone()), op(p))
        }
    ) {
        let fm = build_fourier(&OrbitDescriptor::new(7, 2, 1).unwrap()).unwrap();
        let fa = fourier_conjugate(&a, &fm).unwrap();
        let fb = fourier_conjugate(&b, &fm).unwrap();
        prop_assert_eq!(fourier_conjugate(&(&a * &b), &fm).unwrap(), &fa * &fb);
        prop_assert_eq!(fourier_conjugate(&(&a + &b), &fm).unwrap(), &fa + &fb);
    }

    #[test]
    fn fourier_is_multiplicative_maximal(
        (a, b) in {
            let fm = build_fourier(&OrbitDescriptor::new(8, 4, -1).unwrap()).unwrap();
            let p = source_palette(&fm);
            (op(p.clone()), op(p))
        }
    ) {
        let fm = build_fourier(&OrbitDescriptor::new(8, 4, -1).unwrap()).unwrap();
        let fa = fourier_conjugate(&a, &fm).unwrap();
        let fb = fourier_conjugate(&b, &fm).unwrap();
        prop_assert_eq!(fourier_conjugate(&(&a * &b), &fm).unwrap(), &fa * &fb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn epsilon_is_conjugation_invariant(seed in any::<u64>(), p in 2usize..=5, eps in prop::sample::select(vec![1i8, -1])) {
        let d = OrbitDescriptor::new(2 * p, p, eps).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_unimodular(2 * p, &mut rng, 12);
        for x in [representative_x(&d), representative_y(&d)] {
            let before = epsilon_invariant(&x).unwrap();
            let after = epsilon_invariant(&g.conjugate(&x).unwrap()).unwrap();
            prop_assert_eq!(before, after);
        }
    }
}
