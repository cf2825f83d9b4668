//! Exact computations around almost conjugate finite subgroups.
//!
//! The crate is organised by subject:
//!
//! - [`exactnum`]: rationals, the field Q(sqrt2, sqrt5) and symbolic `q*pi^a*sqrt(d)` values.
//! - [`symgroup`]: partitions, cycle types and Murnaghan-Nakayama characters of Sym(m).
//! - [`sunada`]: lifting conditions for representations of Sym(m) into Spin(n)/Pin(n).
//! - [`quatgroups`]: exact unit quaternions and the binary polyhedral (ADE) groups.
//! - [`goursat`]: subgroups of SU(2) x SU(2) through Goursat quintuples.
//! - [`signcodes`]: diagonal sign subgroups of SO(6) viewed as binary codes.
//! - [`rootvol`]: Weyl-integration volumes of compact Lie groups.
//! - [`golden`]: embedded reference values and the reproduction report.

pub mod error;
pub mod exactnum;
pub mod golden;
pub mod goursat;
pub mod quatgroups;
pub mod rootvol;
pub mod signcodes;
pub mod sunada;
pub mod symgroup;

pub use error::{Error, Result};
