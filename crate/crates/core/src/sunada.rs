//! Lifting representations of Sym(m) from O(n) to Spin(n)/Pin(n).
//!
//! For a real representation `rho` of dimension `n` with character `chi`:
//!
//! - `rho` lands in SO(n) iff `chi(x) = n mod 4` for a transposition `x`.
//! - An involution `g` with `chi(g) = n mod 4` lifts to an element of order 2
//!   in Spin(n) iff `chi(g) = n mod 8`, and to order 4 otherwise.
//! - `M(z) = (1/l) sum_{k<l} (-1)^k chi(z^k)`, `l = ord(z)`, is the multiplicity
//!   of the eigenvalue -1 of `rho(z)`.
//!
//! A partition is admissible when both lifts have order 2, `M(z) > 0` for every
//! odd permutation `z`, and the representation is faithful. Characters are
//! class functions, so `M` is checked on one representative per odd cycle type.
//!
//! The sum defining `M` runs over `k < ord(z)`. Since `l` is even for odd `z`,
//! this is exactly the -1 eigenvalue multiplicity of `rho(z)`.

use num::{BigInt, Integer, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symgroup::{
    dimension, enumerate_partitions, is_faithful, CharacterEngine, CycleType, Partition,
};

/// Default cap on `m` for [`search`].
pub const DEFAULT_MAX_M: u32 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Involution {
    Transposition,
    DoubleTransposition,
}

/// Isomorphism type of the preimage of Sym(m) in Pin(n), read off from the
/// orders of the lifts of a transposition `x` and of `xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExtensionType {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "plus")]
    Plus,
    #[serde(rename = "minus")]
    Minus,
    #[serde(rename = "L")]
    L,
}

impl ExtensionType {
    pub fn from_lift_orders(x: u8, xy: u8) -> Self {
        match (x, xy) {
            (2, 2) => ExtensionType::Trivial,
            (2, _) => ExtensionType::Plus,
            (_, 4) => ExtensionType::Minus,
            _ => ExtensionType::L,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExtensionType::Trivial => "trivial",
            ExtensionType::Plus => "plus",
            ExtensionType::Minus => "minus",
            ExtensionType::L => "L",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub lands_in_so: bool,
    pub lift_order_transposition: Option<u8>,
    pub lift_order_double_transposition: Option<u8>,
    pub extension_type: Option<ExtensionType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub partition: Partition,
    pub m: u32,
    pub n: u64,
    /// Multiplicity of the scaled representation `rho (x) Id_k`; 1 for irreps.
    pub scale: u64,
    pub chi_transposition: i64,
    pub chi_double_transposition: i64,
    pub cond_mod8_x: bool,
    pub cond_mod8_xy: bool,
    pub cond_m_positive: bool,
    /// Smallest `M(z)` over odd classes.
    pub min_multiplicity: u64,
    pub faithful: bool,
    pub admissible: bool,
    pub m6_caveat: bool,
}

/// The representation `rho_lambda (x) Id_scale`, with character `scale * chi_lambda`.
struct ScaledRep<'a> {
    lambda: &'a Partition,
    scale: u64,
    engine: &'a CharacterEngine,
}

impl ScaledRep<'_> {
    fn n(&self) -> BigInt {
        dimension(self.lambda) * self.scale
    }

    fn chi(&self, mu: &CycleType) -> Result<BigInt> {
        Ok(self.engine.character(self.lambda, mu)? * self.scale)
    }

    fn involution(&self, which: Involution) -> Result<CycleType> {
        let m = self.lambda.m();
        match which {
            Involution::Transposition => CycleType::transposition(m),
            Involution::DoubleTransposition => CycleType::double_transposition(m),
        }
    }

    fn lands_in_so(&self) -> Result<bool> {
        let x = self.involution(Involution::Transposition)?;
        Ok(congruent(&self.chi(&x)?, &self.n(), 4))
    }

    fn lift_order(&self, which: Involution) -> Result<u8> {
        if !self.lands_in_so()? {
            return Err(Error::domain(format!(
                "{} does not take values in SO(n)",
                self.lambda
            )));
        }
        let g = self.involution(which)?;
        let chi = self.chi(&g)?;
        let n = self.n();
        if !congruent(&chi, &n, 4) {
            return Err(Error::domain(format!(
                "chi({g}) = {chi} is not congruent to n = {n} mod 4"
            )));
        }
        Ok(if congruent(&chi, &n, 8) { 2 } else { 4 })
    }

    fn multiplicity(&self, z: &CycleType) -> Result<BigInt> {
        if z.m() != self.lambda.m() {
            return Err(Error::arg(format!("{z} is not a class of Sym({})", self.lambda.m())));
        }
        if !z.is_odd() {
            return Err(Error::arg(format!("{z} is an even permutation")));
        }
        let l = z.order();
        let mut sum = BigInt::zero();
        for k in 0..l {
            let v = self.chi(&z.power(k))?;
            if k % 2 == 0 {
                sum += v;
            } else {
                sum -= v;
            }
        }
        let (q, r) = sum.div_rem(&BigInt::from(l));
        debug_assert!(r.is_zero(), "eigenvalue multiplicity must be integral");
        Ok(q)
    }

    fn report(&self) -> Result<AdmissibilityReport> {
        let m = self.lambda.m();
        if m < 4 {
            return Err(Error::arg(format!("admissibility needs m >= 4, got {m}")));
        }
        let n = self.n();
        let x = CycleType::transposition(m)?;
        let xy = CycleType::double_transposition(m)?;
        let chi_x = self.chi(&x)?;
        let chi_xy = self.chi(&xy)?;
        let mut min_mult: Option<BigInt> = None;
        for p in enumerate_partitions(m)? {
            let z = CycleType::new(p);
            if z.is_odd() {
                let v = self.multiplicity(&z)?;
                if min_mult.as_ref().is_none_or(|cur| &v < cur) {
                    min_mult = Some(v);
                }
            }
        }
        let min_mult = min_mult.expect("Sym(m) has odd classes for m >= 2");
        let cond_mod8_x = congruent(&chi_x, &n, 8);
        let cond_mod8_xy = congruent(&chi_xy, &n, 8);
        let cond_m_positive = min_mult.is_positive();
        let faithful = is_faithful(self.lambda)?;
        Ok(AdmissibilityReport {
            partition: self.lambda.clone(),
            m,
            n: to_u64(&n, "dimension")?,
            scale: self.scale,
            chi_transposition: to_i64(&chi_x)?,
            chi_double_transposition: to_i64(&chi_xy)?,
            cond_mod8_x,
            cond_mod8_xy,
            cond_m_positive,
            min_multiplicity: to_u64(&min_mult, "multiplicity")?,
            faithful,
            admissible: cond_mod8_x && cond_mod8_xy && cond_m_positive && faithful,
            m6_caveat: m == 6,
        })
    }
}

fn congruent(a: &BigInt, b: &BigInt, modulus: i64) -> bool {
    (a - b).mod_floor(&BigInt::from(modulus)).is_zero()
}

fn to_u64(v: &BigInt, what: &str) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Unsupported(format!("{what} {v} does not fit in 64 bits")))
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("character value {v} does not fit in 64 bits")))
}


fn irrep(lambda: &Partition) -> ScaledRep<'_> {
    ScaledRep {
        lambda,
        scale: 1,
        engine: CharacterEngine::global(),
    }
}

/// `chi(transposition) = n mod 4`.
pub fn lands_in_so(lambda: &Partition) -> Result<bool> {
    irrep(lambda).lands_in_so()
}

/// Order (2 or 4) of a lift of the given involution to Spin(n).
pub fn lift_order(lambda: &Partition, which: Involution) -> Result<u8> {
    irrep(lambda).lift_order(which)
}

pub fn extension_type(lambda: &Partition) -> Result<ExtensionType> {
    let rep = irrep(lambda);
    let x = rep.lift_order(Involution::Transposition)?;
    let xy = rep.lift_order(Involution::DoubleTransposition)?;
    Ok(ExtensionType::from_lift_orders(x, xy))
}

/// Every lift datum that is defined for `lambda`.
pub fn lift_report(lambda: &Partition) -> Result<LiftReport> {
    let rep = irrep(lambda);
    let lands = rep.lands_in_so()?;
    if !lands {
        return Ok(LiftReport {
            lands_in_so: false,
            lift_order_transposition: None,
            lift_order_double_transposition: None,
            extension_type: None,
        });
    }
    let x = rep.lift_order(Involution::Transposition).ok();
    let xy = if lambda.m() >= 4 {
        rep.lift_order(Involution::DoubleTransposition).ok()
    } else {
        None
    };
    Ok(LiftReport {
        lands_in_so: true,
        lift_order_transposition: x,
        lift_order_double_transposition: xy,
        extension_type: x.zip(xy).map(|(a, b)| ExtensionType::from_lift_orders(a, b)),
    })
}

/// Multiplicity of the eigenvalue -1 of `rho_lambda(z)` for odd `z`.
pub fn multiplicity_m(lambda: &Partition, z: &CycleType) -> Result<BigInt> {
    irrep(lambda).multiplicity(z)
}

pub fn admissibility(lambda: &Partition) -> Result<AdmissibilityReport> {
    irrep(lambda).report()
}

/// Conditions for `rho_lambda (x) Id_k`, character `k * chi`, dimension `k * n`.
pub fn tensor_scale_check(lambda: &Partition, k: u64) -> Result<AdmissibilityReport> {
    if k % 2 == 0 {
        return Err(Error::arg(format!("scale {k} must be odd")));
    }
    ScaledRep {
        lambda,
        scale: k,
        engine: CharacterEngine::global(),
    }
    .report()
}

/// Admissible partitions of `m`, sorted by `(n, reverse-lex partition)`, with
/// the default cap on `m`.
pub fn search(m: u32) -> Result<Vec<AdmissibilityReport>> {
    search_capped(m, DEFAULT_MAX_M)
}

/// Parallel over partitions; the result does not depend on the thread count.
pub fn search_capped(m: u32, max_m: u32) -> Result<Vec<AdmissibilityReport>> {
    if m > max_m {
        return Err(Error::SizeLimit {
            what: "search m",
            requested: m as usize,
            cap: max_m as usize,
        });
    }
    if m < 4 {
        return Err(Error::arg(format!("search needs m >= 4, got {m}")));
    }
    let parts = enumerate_partitions(m)?;
    let reports: Vec<AdmissibilityReport> = parts
        .par_iter()
        .map(admissibility)
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<(usize, AdmissibilityReport)> = reports
        .into_iter()
        .enumerate()
        .filter(|(_, r)| r.admissible)
        .collect();
    rows.sort_by_key(|(idx, r)| (r.n, *idx));
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}
