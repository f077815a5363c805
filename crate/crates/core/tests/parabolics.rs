use sphorb::orbitcat::{catalog, OrbitDescriptor};
use sphorb::parab::{
    build_parabolic, duflo_classification, generator_coverage, nested_parabolic_case,
    nested_parabolic_grid, parabolic_case, recursion_chain,
};

#[test]
fn sweep_small() {
    for n in 4..=8 {
        for d in catalog(n) {
            for i in 1..n {
                let c = parabolic_case(&d, i);
                assert!(c.passed(), "{d} i={i}: {c:?}");
            }
            assert!(duflo_classification(&d).is_consistent());
        }
    }
}

#[test]
fn chain_ranks() {
    let d = OrbitDescriptor::new(10, 4, 1).unwrap();
    let ranks: Vec<usize> = recursion_chain(&d)
        .unwrap()
        .iter()
        .map(|l| l.rank)
        .collect();
    assert_eq!(ranks, vec![7, 5, 3, 1]);
}

#[test]
fn parabolic_pieces() {
    assert_eq!(build_parabolic(1, 4).n.dim(), 3);
    assert_eq!(build_parabolic(2, 5).m.dim(), 11);
    assert!(build_parabolic(2, 5).is_consistent());
    let cov = generator_coverage(4).unwrap();
    assert_eq!(cov[&1], 2);
}

#[test]
fn nested_parabolics() {
    for n in 4..=8 {
        for d in catalog(n) {
            for c in nested_parabolic_grid(&d) {
                assert!(c.well_placed && c.closed, "{d}: {c:?}");
                assert!(c.nil_stabilizer_dim >= c.c_dim);
                // The direct sum is coisotropic only when p_{i,j,k} is a Borel of sl_2.
                assert_eq!(c.strongly_unipotent, c.p_dim == 2, "{d}: {c:?}");
            }
        }
    }
    let d = OrbitDescriptor::new(5, 2, 1).unwrap();
    let c = nested_parabolic_case(&d, 1, 2);
    assert_eq!(
        (c.p_dim, c.stabilizer_dim, c.c_dim, c.coisotropic),
        (6, 2, 2, false)
    );
    assert_eq!(
        (c.nil_stabilizer_dim, c.nil_stabilizer_strongly_unipotent),
        (4, true)
    );
}

#[test]
fn radical_of_b_versus_stabilizer_radical() {
    // g_{1,2} = sl_2(α_2) contains X_{−α_2}, which also lies in the radical of p_1(X).
    let d = OrbitDescriptor::new(4, 2, 1).unwrap();
    assert!(!parabolic_case(&d, 1).radical_is_printed_sum);
    assert!(parabolic_case(&d, 2).radical_is_printed_sum);
}
