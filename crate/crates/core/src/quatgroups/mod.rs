//! Exact unit quaternions and the finite subgroups of SU(2).
//!
//! Elements live in Q(sqrt2, sqrt5), which holds every generator of the
//! binary tetrahedral, octahedral and icosahedral groups. Two elements of
//! SU(2) are conjugate iff their real parts agree, so almost conjugacy of
//! finite subgroups reduces to comparing multisets of real parts.

mod ade;
mod automorphism;
mod group;
mod quaternion;

pub use ade::{
    ade_group, ade_group_by_name, generators, named_class_table, s_generator, t_icosahedral,
    t_octahedral, AdeLabel, NamedClass, Polyhedral, REALIZABLE_CYCLIC, REALIZABLE_DIHEDRAL,
};
pub use automorphism::{
    bd4_action_of, bo_action_on_bd4, class_action, outer_action, Bd4ActionRow, ClassActionRow,
    OuterAutomorphism,
};
pub use group::{
    generate, su2_almost_conjugate, CayleyTable, ConjugacyClass, FiniteQuatGroup,
    DEFAULT_GROUP_CAP,
};
pub use quaternion::UnitQuaternion;
