//! Subgroups of 2T x 2T generated by random elements, closed with the Cayley
//! table of 2T, survive `quintuple_of` followed by `build_subgroup`.

mod common;

use std::collections::BTreeSet;

use sunada_core::goursat::{build_subgroup, quintuple_of, QuatPair, Spin4Subgroup};
use sunada_core::quatgroups::ade_group_by_name;

#[test]
fn random_subgroups_round_trip() {
    let t = ade_group_by_name("2T").unwrap();
    let table = t.table();
    let seen = common::random_product_subgroups(24, &|a, b| table.mul(a, b), table.identity(), 400, 96, 0x5eed);
    assert!(seen.len() >= 30, "only {} distinct subgroups", seen.len());
    let orders: BTreeSet<usize> = seen.iter().map(Vec::len).collect();
    assert!(orders.len() >= 5, "{orders:?}");
    for idx in &seen {
        let pairs: Vec<QuatPair> = idx
            .iter()
            .map(|&(a, b)| QuatPair::new(t.elements()[a].clone(), t.elements()[b].clone()))
            .collect();
        let c = Spin4Subgroup::from_elements(pairs).unwrap();
        let q = quintuple_of(&c).unwrap();
        assert_eq!(c.order(), q.a().order() * q.b0().order());
        assert_eq!(c.order(), q.a0().order() * q.b().order());
        assert_eq!(build_subgroup(&q), c);
    }
}
