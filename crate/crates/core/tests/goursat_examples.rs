use sunada_core::goursat::{
    build_subgroup, conjugate_by_witness, cyclic_dihedral_pair, dihedral_six_reflection, spin4_almost_conjugate,
    witnesses_product, QuatPair, Spin4Subgroup,
};
use sunada_core::quatgroups::{ade_group_by_name, UnitQuaternion};

#[test]
fn cyclic_dihedral_pair_has_order_twelve() {
    let (q1, q2) = cyclic_dihedral_pair().unwrap();
    let (c1, c2) = (build_subgroup(&q1), build_subgroup(&q2));
    assert_eq!((c1.order(), c2.order()), (12, 12));
    assert_ne!(c1, c2);
}

// Both isomorphisms Z4 -> 2D6/Z3 give groups with equal (Re a, Re b) data, and
// (j, 1) conjugates one onto the other.
#[test]
fn cyclic_dihedral_pair_is_conjugate() {
    let (q1, q2) = cyclic_dihedral_pair().unwrap();
    let (c1, c2) = (build_subgroup(&q1), build_subgroup(&q2));
    assert!(spin4_almost_conjugate(&c1, &c2));
    let j1 = QuatPair::new(UnitQuaternion::j(), UnitQuaternion::one());
    assert_eq!(c1.conjugate_by(&j1), c2);
    let o = ade_group_by_name("2O").unwrap();
    assert!(conjugate_by_witness(&c1, &c2, &witnesses_product(&o, &o)).is_some());
}

// Pairing i with -Z3 and -1 with u Z3 is not closed: (i, -w)^2 = (-1, w^2).
#[test]
fn literal_coset_listing_is_not_a_group() {
    let z3 = ade_group_by_name("Z3").unwrap();
    let u = dihedral_six_reflection();
    let (one, i, m1, mi) = (
        UnitQuaternion::one(),
        UnitQuaternion::i(),
        UnitQuaternion::minus_one(),
        UnitQuaternion::i().neg(),
    );
    let mut set = Vec::new();
    for w in z3.elements() {
        set.push(QuatPair::new(one.clone(), w.clone()));
        set.push(QuatPair::new(i.clone(), w.neg()));
        set.push(QuatPair::new(m1.clone(), u.mul(w)));
        set.push(QuatPair::new(mi.clone(), u.mul(&w.neg())));
    }
    assert_eq!(set.len(), 12);
    assert!(Spin4Subgroup::from_elements(set).is_err());
}
