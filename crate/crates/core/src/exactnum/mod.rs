//! Exact scalars.
//!
//! Everything downstream is computed without floating point. Three kinds of
//! values are needed:
//!
//! - [`Rational`]: arbitrary precision fractions in lowest terms.
//! - [`AlgScalar`]: elements `a + b*sqrt(2) + c*sqrt(5) + d*sqrt(10)` of the
//!   quartic field Q(sqrt2, sqrt5). It contains `1/sqrt(2)` and the golden
//!   ratio, which is all the binary polyhedral groups need.
//! - [`SymReal`] and [`SymVolume`]: `q*sqrt(d)` and `q*sqrt(d)*pi^a` with `d`
//!   squarefree, the shape of every Lie group volume computed here.

mod alg;
mod expr;
mod rational;
mod symreal;

pub use alg::AlgScalar;
pub use expr::parse_quaternion_components;
pub use rational::{int, parse_rational, rat, render_rational, Rational};
pub use symreal::{squarefree_decompose, SymReal, SymVolume};
