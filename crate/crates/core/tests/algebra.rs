use num_traits::{One, Zero};
use sphorb::exactalg::{
    det_sign_rational, nullspace, q, q_frac, ExactMatrix, ExactScalar, Gauss, RationalMatrix,
    Subspace, Q,
};
use sphorb::liecore::{
    ad_matrix, beta, bracket, centralizer, composite_root, trace_form, unipotent_exp,
    unipotent_log, w_squared, Generator, LieElement, Root, Subalgebra,
};
use sphorb::orbitcat::{representative_x, OrbitDescriptor};

fn diag(entries: &[i64]) -> ExactMatrix {
    let n = entries.len();
    let mut m = ExactMatrix::zeros(n, n);
    for (i, &e) in entries.iter().enumerate() {
        m.set(i, i, ExactScalar::int(e));
    }
    m
}

#[test]
fn nullspace_examples() {
    assert_eq!(nullspace(&ExactMatrix::zeros(3, 3)).unwrap().len(), 3);
    assert!(nullspace(&ExactMatrix::identity(4)).unwrap().is_empty());
    let d = OrbitDescriptor::new(4, 2, 1).unwrap();
    let x = representative_x(&d);
    // ad on gl_4 also kills the identity
    let ad: RationalMatrix = ad_matrix(&x);
    assert_eq!(ad.nullspace().unwrap().len(), 8);
    let mut rows = ad.to_rows();
    rows.reverse();
    rows.rotate_left(5);
    assert_eq!(RationalMatrix::from_rows(rows).unwrap().rank().unwrap(), 8);
    assert_eq!(centralizer(&x).dim(), 7);
}

#[test]
fn subspace_examples() {
    let e = |i: usize| {
        let mut v = vec![Q::zero(); 3];
        v[i] = Q::one();
        v
    };
    let a = Subspace::span(3, vec![e(0)]).unwrap();
    let b = Subspace::span(3, vec![e(1)]).unwrap();
    assert_eq!(a.sum(&b).unwrap().dim(), 2);
    assert_eq!(a.intersection(&b).unwrap().dim(), 0);
    assert_eq!(a.intersection(&a).unwrap(), a);
}

#[test]
fn determinant_signs() {
    assert_eq!(det_sign_rational(&ExactMatrix::identity(3)).unwrap(), 1);
    assert_eq!(det_sign_rational(&diag(&[-1, 1, 1, -1])).unwrap(), 1);
    assert_eq!(det_sign_rational(&diag(&[-1, 1, 1])).unwrap(), -1);
    let mut m = ExactMatrix::identity(2);
    m.set(0, 0, ExactScalar::pi());
    assert!(det_sign_rational(&m).is_err());
}

#[test]
fn scalar_round_trip() {
    let vals = [
        ExactScalar::two_i_pi(),
        ExactScalar::frac(-7, 2),
        ExactScalar::two_i_pi().inv().unwrap(),
        &ExactScalar::pi() + &ExactScalar::frac(1, 3),
        ExactScalar::from_gauss(Gauss::new(q_frac(2, 3), q(-5))),
    ];
    for v in vals {
        let s = serde_json::to_string(&v).unwrap();
        let back: ExactScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
    assert!((&ExactScalar::pi() + &ExactScalar::one()).inv().is_none());
}

#[test]
fn bracket_examples() {
    let n = 4;
    let h1 = LieElement::h(n, 1);
    assert_eq!(
        bracket(&LieElement::e(n, 1, 2), &LieElement::e(n, 2, 1)).unwrap(),
        h1
    );
    let x1 = Generator::pos(1).element(n);
    assert_eq!(bracket(&h1, &x1).unwrap(), x1.scale(&q(2)));
    // [H_j, X_{-α_m}] = −⟨α_m, α_j^∨⟩ X_{-α_m}
    let n = 7;
    for j in 1..n {
        for m in 1..n {
            let xm = Generator::neg(m).element(n);
            let c = Root::simple(m).cartan_integer(&Root::simple(j));
            let lhs = bracket(&LieElement::h(n, j), &xm).unwrap();
            assert_eq!(lhs, xm.scale(&q(-c)));
        }
    }
    assert!(bracket(&LieElement::e(3, 1, 2), &LieElement::e(4, 1, 2)).is_err());
}

#[test]
fn trace_form_examples() {
    let n = 3;
    assert_eq!(
        trace_form(&LieElement::e(n, 1, 2), &LieElement::e(n, 2, 1)).unwrap(),
        q(1)
    );
    assert_eq!(
        trace_form(&LieElement::h(n, 1), &LieElement::h(n, 1)).unwrap(),
        q(2)
    );
}

#[test]
fn composite_roots() {
    let r = composite_root(4, 1, 1).unwrap();
    assert_eq!((r.i, r.j), (1, 2));
    let b = beta(4, 1).unwrap();
    assert_eq!((b.i, b.j), (1, 4));
    let r = composite_root(6, 2, 4).unwrap();
    assert_eq!((r.i, r.j), (2, 5));
    assert!(composite_root(4, 3, 2).is_err());
}

#[test]
fn w_squared_examples() {
    let w = w_squared(4, beta(4, 1).unwrap());
    assert_eq!(
        w.matrix(),
        &LieElement::from_entries(4, &[(1, 1, -1), (2, 2, 1), (3, 3, 1), (4, 4, -1)])
    );
    assert_eq!(w.mul(&w).unwrap().matrix(), &LieElement::identity(4));
    let w = w_squared(4, Root::simple(2));
    assert_eq!(
        w.matrix(),
        &LieElement::from_entries(4, &[(1, 1, 1), (2, 2, -1), (3, 3, -1), (4, 4, 1)])
    );
}

#[test]
fn exponentials() {
    let t = q_frac(3, 7);
    let x = LieElement::e(3, 1, 2).scale(&t);
    let g = unipotent_exp(&x).unwrap();
    assert_eq!(g.matrix(), &LieElement::identity(3).add(&x).unwrap());
    let x21 = representative_x(&OrbitDescriptor::new(4, 2, 1).unwrap());
    let g = unipotent_exp(&x21).unwrap();
    assert_eq!(g.matrix(), &LieElement::identity(4).add(&x21).unwrap());
    assert_eq!(unipotent_log(&g).unwrap(), x21);
    assert!(unipotent_exp(&LieElement::h(3, 1)).is_err());
}

#[test]
fn standard_subalgebras() {
    for n in 3..=7 {
        let full = n * n - 1;
        let cases = [
            (Subalgebra::nilradical(n), n * (n - 1) / 2),
            (Subalgebra::nilradical_opposite(n), n * (n - 1) / 2),
            (Subalgebra::borel(n), n * (n - 1) / 2 + n - 1),
            (Subalgebra::cartan(n), n - 1),
            (Subalgebra::full(n), full),
        ];
        for (s, dim) in cases {
            assert_eq!(s.dim(), dim);
            assert!(s.is_closed());
        }
        for start in 1..n {
            for len in 2..=n - start + 1 {
                let s = Subalgebra::sl_block(n, start, len);
                assert_eq!(s.dim(), len * len - 1);
                assert!(s.is_closed());
            }
        }
    }
}
