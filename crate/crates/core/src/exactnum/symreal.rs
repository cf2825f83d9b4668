use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::rational::{int, parse_rational, render_rational, Rational};
use crate::error::{Error, Result};

/// Writes `n = outer^2 * inner` with `inner` squarefree. `n` must be positive.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n > 0, "squarefree_decompose(0)");
    let (mut outer, mut inner, mut rest) = (1u64, 1u64, n);
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        outer *= p.pow(e / 2);
        if e % 2 == 1 {
            inner *= p;
        }
        p += 1;
    }
    (outer, inner * rest)
}

/// The real number `q * sqrt(d)` with `d` squarefree; `d == 1` iff the value is rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymReal {
    q: Rational,
    d: u64,
}

impl SymReal {
    /// Builds `q * sqrt(d)` and reduces the radicand. Panics if `d == 0`.
    pub fn new(q: Rational, d: u64) -> Self {
        let (outer, inner) = squarefree_decompose(d);
        let q = q * int(outer as i64);
        if q.is_zero() {
            SymReal { q, d: 1 }
        } else {
            SymReal { q, d: inner }
        }
    }

    pub fn rational(q: Rational) -> Self {
        SymReal { q, d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(int(n))
    }

    /// The non-negative square root of `r`.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::domain(format!("sqrt of negative {}", render_rational(r))));
        }
        if r.is_zero() {
            return Ok(Self::from_int(0));
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let prod = r.numer() * r.denom();
        let d = prod
            .to_u64()
            .ok_or_else(|| Error::Unsupported(format!("radicand {prod} too large")))?;
        Ok(Self::new(Rational::new(BigInt::one(), r.denom().clone()), d))
    }

    pub fn coeff(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    /// The square of the value, always rational.
    pub fn square(&self) -> Rational {
        &self.q * &self.q * int(self.d as i64)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        // 1/(q sqrt d) = sqrt(d) / (q d)
        Ok(SymReal {
            q: Rational::one() / (&self.q * int(self.d as i64)),
            d: self.d,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::from_int(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let q = &self.q * r;
        if q.is_zero() {
            SymReal { q, d: 1 }
        } else {
            SymReal { q, d: self.d }
        }
    }

    /// The real `k`-th root for odd `k`, when it is again of the form `q' sqrt(d)`.
    pub fn odd_root(&self, k: u32) -> Option<Self> {
        if k % 2 == 0 {
            return None;
        }
        // (q' sqrt d)^k = q'^k d^((k-1)/2) sqrt d
        let base = &self.q / int(self.d as i64).pow((k - 1) as i32 / 2);
        let qr = rational_root(&base, k)?;
        Some(SymReal { q: qr, d: self.d })
    }

    pub fn approx(&self) -> f64 {
        self.q.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }
}

fn rational_root(r: &Rational, k: u32) -> Option<Rational> {
    let root_int = |n: &BigInt| -> Option<BigInt> {
        let mag = n.abs().nth_root(k);
        (mag.pow(k) == n.abs()).then(|| if n.is_negative() { -mag } else { mag })
    };
    Some(Rational::new(root_int(r.numer())?, root_int(r.denom())?))
}

impl Mul<&SymReal> for &SymReal {
    type Output = SymReal;
    fn mul(self, o: &SymReal) -> SymReal {
        let g = self.d.gcd(&o.d);
        // sqrt(d1 d2) = g sqrt((d1/g)(d2/g)); the latter is squarefree.
        let q = &self.q * &o.q * int(g as i64);
        if q.is_zero() {
            return SymReal { q, d: 1 };
        }
        SymReal {
            q,
            d: (self.d / g) * (o.d / g),
        }
    }
}

impl Mul for SymReal {
    type Output = SymReal;
    fn mul(self, o: SymReal) -> SymReal {
        &self * &o
    }
}

impl Neg for &SymReal {
    type Output = SymReal;
    fn neg(self) -> SymReal {
        SymReal {
            q: -&self.q,
            d: self.d,
        }
    }
}

fn render_product(q: &Rational, middle: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mag = q.abs();
    if !mag.is_one() || middle.is_empty() {
        parts.push(render_rational(&mag));
    }
    parts.extend(middle.iter().cloned());
    let body = parts.join("*");
    if q.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// Canonical form `num/den*sqrt(d)`, omitting factors equal to 1.
impl fmt::Display for SymReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mid: Vec<String> = if self.d > 1 {
            vec![format!("sqrt({})", self.d)]
        } else {
            vec![]
        };
        f.write_str(&render_product(&self.q, &mid))
    }
}

/// Factors of a `*`-separated product: a signed rational, `pi`, `pi^a`, `sqrt(n)`.
fn parse_factors(s: &str) -> Result<(Rational, u64, u32)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("empty value"));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let mut q = int(1);
    let mut d = 1u64;
    let mut a = 0u32;
    for factor in body.split('*') {
        let factor = factor.trim();
        if factor == "pi" {
            a += 1;
        } else if let Some(e) = factor.strip_prefix("pi^") {
            a += e
                .parse::<u32>()
                .map_err(|_| Error::parse(format!("bad exponent in {s:?}")))?;
        } else if let Some(inner) = factor.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            let n: u64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad radicand in {s:?}")))?;
            if n == 0 {
                q = int(0);
            } else {
                d = d
                    .checked_mul(n)
                    .ok_or_else(|| Error::parse(format!("radicand overflow in {s:?}")))?;
            }
        } else {
            q *= parse_rational(factor)?;
        }
    }
    if neg {
        q = -q;
    }
    Ok((q, d, a))
}

impl FromStr for SymReal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (q, d, a) = parse_factors(s)?;
        if a != 0 {
            return Err(Error::parse(format!("{s:?} contains pi")));
        }
        Ok(SymReal::new(q, d))
    }
}

/// The value `r * pi^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymVolume {
    r: SymReal,
    a: u32,
}

impl SymVolume {
    pub fn new(r: SymReal, a: u32) -> Self {
        if r.is_zero() {
            SymVolume { r, a: 0 }
        } else {
            SymVolume { r, a }
        }
    }

    pub fn rational(q: Rational) -> Self {
        Self::new(SymReal::rational(q), 0)
    }

    pub fn one() -> Self {
        Self::rational(int(1))
    }

    pub fn coeff(&self) -> &SymReal {
        &self.r
    }

    pub fn pi_power(&self) -> u32 {
        self.a
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.r.scale(q), self.a)
    }

    pub fn mul_real(&self, x: &SymReal) -> Self {
        Self::new(&self.r * x, self.a)
    }

    /// Quotient; fails if the result would need a negative power of pi.
    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.a > self.a {
            return Err(Error::Unsupported(format!(
                "quotient {self} / {o} has a negative power of pi"
            )));
        }
        Ok(Self::new(self.r.div(&o.r)?, self.a - o.a))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::new(self.r.pow(k), self.a * k)
    }

    /// The real `k`-th root for odd `k`, when it is again a `SymVolume`.
    pub fn odd_root(&self, k: u32) -> Option<Self> {
        if k % 2 == 0 || self.a % k != 0 {
            return None;
        }
        Some(Self::new(self.r.odd_root(k)?, self.a / k))
    }

    /// Volume after scaling the metric by `s > 0` on a manifold of dimension `dim`:
    /// lengths scale by `sqrt(s)`, so the volume scales by `s^(dim/2)`.
    pub fn rescale_metric(&self, s: &Rational, dim: u32) -> Result<Self> {
        if !s.is_positive() {
            return Err(Error::domain("metric scale must be positive"));
        }
        let mut factor = SymReal::rational(s.pow((dim / 2) as i32));
        if dim % 2 == 1 {
            factor = &factor * &SymReal::sqrt_of(s)?;
        }
        Ok(self.mul_real(&factor))
    }

    /// Alternative rendering with the radical in the denominator when it came
    /// from one, e.g. `32*pi^4/(81*sqrt(3))` or `pi^3/2`.
    pub fn paper_form(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let q = self.r.coeff();
        let d = self.r.radicand();
        let pi = pi_factor(self.a);
        let pi_mid: Vec<String> = pi.into_iter().collect();
        let den_has_d = d > 1 && (q.denom() % BigInt::from(d)).is_zero();
        let (num_coeff, den_int, den_sqrt) = if den_has_d {
            let moved = q * int(d as i64);
            (
                Rational::from_integer(moved.numer().clone()),
                moved.denom().clone(),
                Some(d),
            )
        } else {
            (Rational::from_integer(q.numer().clone()), q.denom().clone(), None)
        };
        let mut mid = Vec::new();
        if d > 1 && den_sqrt.is_none() {
            mid.push(format!("sqrt({d})"));
        }
        mid.extend(pi_mid);
        let numerator = render_product(&num_coeff, &mid);
        match (den_int.is_one(), den_sqrt) {
            (true, None) => numerator,
            (false, None) => format!("{numerator}/{den_int}"),
            (true, Some(d)) => format!("{numerator}/sqrt({d})"),
            (false, Some(d)) => format!("{numerator}/({den_int}*sqrt({d}))"),
        }
    }

    pub fn approx(&self) -> f64 {
        self.r.approx() * std::f64::consts::PI.powi(self.a as i32)
    }
}

fn pi_factor(a: u32) -> Option<String> {
    match a {
        0 => None,
        1 => Some("pi".into()),
        _ => Some(format!("pi^{a}")),
    }
}

impl Mul<&SymVolume> for &SymVolume {
    type Output = SymVolume;
    fn mul(self, o: &SymVolume) -> SymVolume {
        SymVolume::new(&self.r * &o.r, self.a + o.a)
    }
}

impl Mul for SymVolume {
    type Output = SymVolume;
    fn mul(self, o: SymVolume) -> SymVolume {
        &self * &o
    }
}

/// Canonical form `num/den*pi^a*sqrt(d)`, omitting factors equal to 1.
impl fmt::Display for SymVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut mid: Vec<String> = pi_factor(self.a).into_iter().collect();
        if self.r.radicand() > 1 {
            mid.push(format!("sqrt({})", self.r.radicand()));
        }
        f.write_str(&render_product(self.r.coeff(), &mid))
    }
}

/// Serialized as `{rational, radicand, pi_power, canonical, paper}`.
impl serde::Serialize for SymVolume {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SymVolume", 5)?;
        st.serialize_field("rational", &render_rational(&self.r.q))?;
        st.serialize_field("radicand", &self.r.d)?;
        st.serialize_field("pi_power", &self.a)?;
        st.serialize_field("canonical", &self.to_string())?;
        st.serialize_field("paper", &self.paper_form())?;
        st.end()
    }
}

impl FromStr for SymVolume {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (q, d, a) = parse_factors(s)?;
        Ok(SymVolume::new(SymReal::new(q, d), a))
    }
}
