use std::fmt;
use std::str::FromStr;

use num::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{parse_quaternion_components, AlgScalar};

/// An exact unit quaternion `w + x i + y j + z k` with coordinates in Q(sqrt2, sqrt5).
///
/// `Ord` is lexicographic on `(w, x, y, z)` with the structural order of
/// [`AlgScalar`]; it only serves to pick canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitQuaternion {
    c: [AlgScalar; 4],
}

fn hamilton(a: &[AlgScalar; 4], b: &[AlgScalar; 4]) -> [AlgScalar; 4] {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

fn norm_sq(c: &[AlgScalar; 4]) -> AlgScalar {
    c.iter().fold(AlgScalar::zero(), |acc, x| acc + x * x)
}

impl UnitQuaternion {
    /// Fails unless `w^2 + x^2 + y^2 + z^2 = 1` exactly.
    pub fn new(w: AlgScalar, x: AlgScalar, y: AlgScalar, z: AlgScalar) -> Result<Self> {
        Self::from_components([w, x, y, z])
    }

    pub fn from_components(c: [AlgScalar; 4]) -> Result<Self> {
        let n = norm_sq(&c);
        if !n.is_one() {
            return Err(Error::arg(format!(
                "{} has norm^2 {n}, not 1",
                UnitQuaternion { c: c.clone() }
            )));
        }
        Ok(UnitQuaternion { c })
    }

    pub fn one() -> Self {
        Self::axis(0, 1)
    }

    pub fn minus_one() -> Self {
        Self::axis(0, -1)
    }

    pub fn i() -> Self {
        Self::axis(1, 1)
    }

    pub fn j() -> Self {
        Self::axis(2, 1)
    }

    pub fn k() -> Self {
        Self::axis(3, 1)
    }

    fn axis(idx: usize, sign: i64) -> Self {
        let mut c = [0; 4].map(|_| AlgScalar::zero());
        c[idx] = AlgScalar::from_int(sign);
        UnitQuaternion { c }
    }

    pub fn components(&self) -> &[AlgScalar; 4] {
        &self.c
    }

    /// The real part `w`; it determines the conjugacy class in SU(2).
    pub fn real_part(&self) -> &AlgScalar {
        &self.c[0]
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn mul(&self, o: &Self) -> Self {
        UnitQuaternion {
            c: hamilton(&self.c, &o.c),
        }
    }

    /// The conjugate quaternion, which is the inverse of a unit quaternion.
    pub fn inverse(&self) -> Self {
        let [w, x, y, z] = &self.c;
        UnitQuaternion {
            c: [w.clone(), -x, -y, -z],
        }
    }

    pub fn neg(&self) -> Self {
        UnitQuaternion {
            c: [0, 1, 2, 3].map(|i| -&self.c[i]),
        }
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplicative order, if it is at most `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for n in 1..=limit {
            if acc.is_one() {
                return Some(n);
            }
            acc = acc.mul(self);
        }
        None
    }
}

fn is_single_term(x: &AlgScalar) -> bool {
    x.coeffs().iter().filter(|q| !num::Zero::is_zero(*q)).count() == 1
}

/// Renders `"w + x*i + y*j + z*k"`, dropping zero components and unit
/// coefficients and parenthesising compound ones.
impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (idx, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let unit = ["", "i", "j", "k"][idx];
            let negative = is_single_term(x) && x.signum() < 0;
            let mag = if negative { -x } else { x.clone() };
            let body = if idx == 0 {
                mag.to_string()
            } else if mag.is_one() {
                unit.to_string()
            } else if is_single_term(&mag) {
                format!("{mag}*{unit}")
            } else {
                format!("({mag})*{unit}")
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push_str(&format!("-{body}")),
                (true, false) => out.push_str(&body),
                (false, true) => out.push_str(&format!(" - {body}")),
                (false, false) => out.push_str(&format!(" + {body}")),
            }
        }
        f.write_str(&out)
    }
}

impl FromStr for UnitQuaternion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_components(parse_quaternion_components(s)?)
    }
}

impl Serialize for UnitQuaternion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
