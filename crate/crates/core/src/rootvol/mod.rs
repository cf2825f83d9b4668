//! Volumes of compact Lie groups and their homogeneous quotients through the
//! Weyl integration formula
//!
//! `vol(G, B) = 2^r |W| pi^((r + dim G)/2) / (sqrt|det b^-1(e_mu, e_nu)| * E(delta_g))`
//!
//! where `E(P) = sum_k (1/4)^k (L^k P)(0) / k!` with `L = sum c_{mu nu} d_mu d_nu`,
//! `c = b^-1` on the chosen coordinates, and `delta_g` is the product of the
//! squared positive roots written as real linear forms.

mod data;
mod poly;

pub use data::{rescale_to_curvature, GroupDatum, Space, TableRow};
pub use poly::RationalPoly;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational, SymReal, SymVolume};

/// The operator `-Delta = sum_{mu nu} c_{mu nu} d_mu d_nu`, so that
/// `-Delta alpha^2 = 2 b^-1(alpha, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplaceOp {
    c: Vec<Vec<Rational>>,
}

impl LaplaceOp {
    /// `c` must be square and symmetric.
    pub fn new(c: Vec<Vec<Rational>>) -> Result<Self> {
        let n = c.len();
        if c.iter().any(|row| row.len() != n) {
            return Err(Error::arg("coefficient matrix is not square"));
        }
        for i in 0..n {
            for j in 0..n {
                if c[i][j] != c[j][i] {
                    return Err(Error::arg("coefficient matrix is not symmetric"));
                }
            }
        }
        Ok(LaplaceOp { c })
    }

    pub fn of(g: &GroupDatum) -> Self {
        LaplaceOp { c: g.gram_binv.clone() }
    }

    pub fn coefficients(&self) -> &[Vec<Rational>] {
        &self.c
    }

    /// `-Delta P`.
    pub fn minus_delta(&self, p: &RationalPoly) -> RationalPoly {
        let n = self.c.len();
        let mut out = RationalPoly::zero(p.nvars());
        for mu in 0..n {
            let dp = p.derivative(mu);
            for nu in 0..n {
                if self.c[mu][nu].is_zero() {
                    continue;
                }
                out = out.add(&dp.derivative(nu).scale(&self.c[mu][nu]));
            }
        }
        out
    }

    /// `b^-1(alpha, alpha)` for `alpha = sum a_mu e_mu`.
    pub fn form(&self, a: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (mu, x) in a.iter().enumerate() {
            for (nu, y) in a.iter().enumerate() {
                s += &self.c[mu][nu] * x * y;
            }
        }
        s
    }
}

/// Product of the squared positive roots.
pub fn delta_poly(g: &GroupDatum) -> RationalPoly {
    g.positive_roots.iter().fold(RationalPoly::one(g.rank), |acc, a| {
        acc.mul(&RationalPoly::linear(a).pow(2))
    })
}

/// `e^{-Delta/4}|_0 P = sum_{k <= deg/2} (1/4)^k ((-Delta)^k P)(0) / k!`.
pub fn gaussian_eval(p: &RationalPoly, l: &LaplaceOp) -> Rational {
    let mut total = p.constant_term();
    let mut cur = p.clone();
    let mut weight = Rational::one();
    for k in 1..=p.degree() / 2 {
        cur = l.minus_delta(&cur);
        if cur.is_zero() {
            break;
        }
        weight = weight / (int(4) * int(k as i64));
        total += &weight * cur.constant_term();
    }
    total
}

fn sqrt_det(g: &GroupDatum) -> Result<SymReal> {
    if !g.lattice_gram_det.is_rational() {
        return Err(Error::Unsupported(format!(
            "{}: lattice determinant {} is irrational",
            g.name, g.lattice_gram_det
        )));
    }
    SymReal::sqrt_of(g.lattice_gram_det.coeff())
}

fn gaussian_delta(g: &GroupDatum) -> Result<Rational> {
    let e = gaussian_eval(&delta_poly(g), &LaplaceOp::of(g));
    if e.is_zero() {
        return Err(Error::domain(format!("{}: Gaussian evaluation of delta vanishes", g.name)));
    }
    Ok(e)
}

/// Volume of `G` for the metric encoded in `g`.
pub fn vol_group(g: &GroupDatum) -> Result<SymVolume> {
    let r = g.rank as u32;
    if (r + g.dim) % 2 == 1 {
        return Err(Error::Unsupported(format!("{}: half-integer power of pi", g.name)));
    }
    let e = gaussian_delta(g)?;
    let num = int(1 << r) * int(g.weyl_order as i64) / e;
    let coeff = SymReal::rational(num).div(&sqrt_det(g)?)?;
    Ok(SymVolume::new(coeff, (r + g.dim) / 2))
}

/// Volume of the flag manifold `G/T`: `|W| pi^((dim - r)/2) / E(delta_g)`.
pub fn vol_flag_quotient(g: &GroupDatum) -> Result<SymVolume> {
    let r = g.rank as u32;
    let e = gaussian_delta(g)?;
    Ok(SymVolume::new(
        SymReal::rational(int(g.weyl_order as i64) / e),
        (g.dim - r) / 2,
    ))
}

/// `(2 pi)^r |det b^-1(e_mu, e_nu)|^{-1/2}`.
pub fn vol_torus(g: &GroupDatum) -> Result<SymVolume> {
    let r = g.rank as u32;
    let coeff = SymReal::rational(int(1 << r)).div(&sqrt_det(g)?)?;
    Ok(SymVolume::new(coeff, r))
}

/// `vol(G) / vol(K)` for `K` with the restricted metric.
pub fn vol_homogeneous(g: &GroupDatum, k: &GroupDatum) -> Result<SymVolume> {
    vol_group(g)?.div(&vol_group(k)?)
}

/// `(a0, a1) = (vol, vol * kappa / 6)` for constant scalar curvature `kappa`.
pub fn heat_invariants(vol: &SymVolume, kappa: &Rational) -> (SymVolume, SymVolume) {
    (vol.clone(), vol.scale(&(kappa / int(6))))
}
