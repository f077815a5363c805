use sphorb::exactalg::ExactScalar;
use sphorb::liecore::{centralizer, LieElement};
use sphorb::orbitcat::{
    catalog, epsilon_invariant, jordan_type, orbit_dimension, representative_x, representative_y,
    same_real_orbit, spherical_partition, OrbitDescriptor, Partition,
};
use sphorb::stab::{
    admissibility_set, b_orbit_open, borel_stabilizer_dimension_formula, lagrangian_check,
    orientation_sign, verify_stabilizer_decomposition,
};

fn d(n: usize, k: usize, eps: i8) -> OrbitDescriptor {
    OrbitDescriptor::new(n, k, eps).unwrap()
}

#[test]
fn partitions_and_catalog() {
    assert_eq!(
        spherical_partition(2, 6).unwrap(),
        Partition(vec![2, 2, 1, 1])
    );
    assert_eq!(spherical_partition(1, 4).unwrap(), Partition(vec![2, 1, 1]));
    assert_eq!(spherical_partition(3, 6).unwrap(), Partition(vec![2, 2, 2]));
    assert!(spherical_partition(4, 6).is_err());
    assert_eq!(catalog(4).len(), 2);
    assert_eq!(catalog(5).len(), 1);
    assert_eq!(catalog(6).len(), 3);
    assert_eq!(orbit_dimension(&d(6, 2, 1)), 16);
    assert_eq!(orbit_dimension(&d(9, 4, 1)), 40);
}

#[test]
fn representatives() {
    let x = representative_x(&d(4, 2, 1));
    assert_eq!(x, LieElement::from_entries(4, &[(4, 1, 1), (3, 2, 1)]));
    let y = representative_y(&d(4, 2, 1));
    assert_eq!(y, LieElement::from_entries(4, &[(1, 2, 1), (3, 4, 1)]));
    assert!(y.matmul(&y).unwrap().is_zero());
    assert_eq!(y.rank(), 2);
    assert_eq!(
        jordan_type(&representative_x(&d(5, 2, 1))).unwrap(),
        Partition(vec![2, 2, 1])
    );
    assert_eq!(
        jordan_type(&representative_x(&d(7, 3, 1))).unwrap(),
        Partition(vec![2, 2, 2, 1])
    );
    assert_eq!(
        jordan_type(&LieElement::zero(5)).unwrap(),
        Partition(vec![1; 5])
    );
}

#[test]
fn epsilon_signs() {
    assert_eq!(
        epsilon_invariant(&representative_x(&d(4, 2, 1))).unwrap(),
        -1
    );
    assert_eq!(
        epsilon_invariant(&representative_x(&d(4, 2, -1))).unwrap(),
        1
    );
    assert_eq!(
        epsilon_invariant(&representative_y(&d(4, 2, 1))).unwrap(),
        -1
    );
    assert!(same_real_orbit(
        &representative_y(&d(4, 2, 1)),
        &representative_x(&d(4, 2, 1))
    )
    .unwrap());
    assert!(!same_real_orbit(
        &representative_x(&d(4, 2, 1)),
        &representative_x(&d(4, 2, -1))
    )
    .unwrap());
    assert!(same_real_orbit(
        &representative_x(&d(6, 2, 1)),
        &representative_y(&d(6, 2, 1))
    )
    .unwrap());
}

#[test]
fn centralizer_dimensions() {
    assert_eq!(centralizer(&LieElement::zero(4)).dim(), 15);
    assert_eq!(centralizer(&representative_x(&d(4, 2, 1))).dim(), 7);
    assert_eq!(centralizer(&representative_x(&d(6, 2, 1))).dim(), 19);
}

#[test]
fn decompositions_small() {
    for n in 4..=8 {
        for o in catalog(n) {
            let dec = verify_stabilizer_decomposition(&o).unwrap_or_else(|e| panic!("{o}: {e}"));
            assert_eq!(
                dec.borel_stabilizer.dim(),
                borel_stabilizer_dimension_formula(&o)
            );
            assert!(b_orbit_open(&o));
            lagrangian_check(&o).unwrap();
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(orientation_sign(&o).unwrap(), expected);
        }
    }
    assert_eq!(
        verify_stabilizer_decomposition(&d(6, 2, 1))
            .unwrap()
            .u_piece
            .dim(),
        8
    );
}

#[test]
fn admissibility() {
    let even = admissibility_set(6, 2);
    assert_eq!(even.values, vec![ExactScalar::one(), -ExactScalar::one()]);
    let odd = admissibility_set(7, 3);
    assert_eq!(odd.values, vec![ExactScalar::i(), -ExactScalar::i()]);
}
