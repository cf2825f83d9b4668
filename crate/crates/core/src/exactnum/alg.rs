use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use super::rational::{int, rat, render_rational, Rational};
use crate::error::{Error, Result};

/// Element `a + b*sqrt(2) + c*sqrt(5) + d*sqrt(10)` of Q(sqrt2, sqrt5).
///
/// `Ord` is the lexicographic order on the coefficient tuple `(a, b, c, d)`.
/// It is a structural total order used for canonical representatives; use
/// [`AlgScalar::cmp_value`] for the order of real numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgScalar {
    c: [Rational; 4],
}

const RADICANDS: [u32; 4] = [1, 2, 5, 10];

impl AlgScalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        AlgScalar { c: [a, b, c, d] }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        Self::new(int(0), int(1), int(0), int(0))
    }

    pub fn sqrt5() -> Self {
        Self::new(int(0), int(0), int(1), int(0))
    }

    /// `1/sqrt(2) = sqrt(2)/2`.
    pub fn inv_sqrt2() -> Self {
        Self::new(int(0), rat(1, 2), int(0), int(0))
    }

    /// The golden ratio `(1 + sqrt(5))/2`.
    pub fn phi() -> Self {
        Self::new(rat(1, 2), int(0), rat(1, 2), int(0))
    }

    /// `1/phi = phi - 1`.
    pub fn inv_phi() -> Self {
        Self::new(rat(-1, 2), int(0), rat(1, 2), int(0))
    }

    /// Coefficients on the basis `1, sqrt2, sqrt5, sqrt10`.
    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    pub fn scale(&self, q: &Rational) -> Self {
        AlgScalar {
            c: [0, 1, 2, 3].map(|i| &self.c[i] * q),
        }
    }

    /// Image under the automorphism `sqrt2 -> -sqrt2`.
    pub fn conj2(&self) -> Self {
        let [a, b, c, d] = self.c.clone();
        Self::new(a, -b, c, -d)
    }

    /// Image under the automorphism `sqrt5 -> -sqrt5`.
    pub fn conj5(&self) -> Self {
        let [a, b, c, d] = self.c.clone();
        Self::new(a, b, -c, -d)
    }

    /// Field norm down to Q: the product of the four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let p = self * &self.conj2() * &self.conj5() * &self.conj2().conj5();
        debug_assert!(p.is_rational());
        p.c[0].clone()
    }

    /// Multiplicative inverse, from solving `M_x y = 1` where `M_x` is the
    /// matrix of multiplication by `x` on the basis.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        let cols: Vec<AlgScalar> = (0..4).map(|j| self * &Self::basis(j)).collect();
        let mut m: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|col| col.c[i].clone()).collect();
                row.push(if i == 0 { int(1) } else { int(0) });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..5 {
                        let delta = &f * &m[col][k];
                        m[r][k] = &m[r][k] - delta;
                    }
                }
            }
        }
        Ok(Self::new(
            m[0][4].clone(),
            m[1][4].clone(),
            m[2][4].clone(),
            m[3][4].clone(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    fn basis(j: usize) -> Self {
        let mut c = [int(0), int(0), int(0), int(0)];
        c[j] = int(1);
        AlgScalar { c }
    }

    /// Sign of the real number this element denotes: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let [a, b, c, d] = &self.c;
        // x = u + v*sqrt5 with u = a + b*sqrt2, v = c + d*sqrt2.
        let u = (a.clone(), b.clone());
        let v = (c.clone(), d.clone());
        let su = sign_q2(&u);
        let sv = sign_q2(&v);
        if sv == 0 || su == sv {
            return if su == 0 { sv } else { su };
        }
        if su == 0 {
            return sv;
        }
        // Opposite signs: compare u^2 with 5 v^2.
        let (u2, v2) = (sq_q2(&u), sq_q2(&v));
        let diff = (&u2.0 - &v2.0 * int(5), &u2.1 - &v2.1 * int(5));
        su * sign_q2(&diff)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Order of the real numbers denoted by `self` and `other`.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }

    /// A float approximation, for display and diagnostics only.
    pub fn approx(&self) -> f64 {
        use num::ToPrimitive;
        self.c
            .iter()
            .zip(RADICANDS)
            .map(|(q, r)| q.to_f64().unwrap_or(f64::NAN) * f64::from(r).sqrt())
            .sum()
    }
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `p + q*sqrt2`.
fn sign_q2((p, q): &(Rational, Rational)) -> i32 {
    let (sp, sq) = (sign_of(p), sign_of(q));
    if sq == 0 || sp == sq {
        return if sp == 0 { sq } else { sp };
    }
    if sp == 0 {
        return sq;
    }
    sp * sign_of(&(p * p - q * q * int(2)))
}

fn sq_q2((p, q): &(Rational, Rational)) -> (Rational, Rational) {
    (p * p + q * q * int(2), p * q * int(2))
}

impl Zero for AlgScalar {
    fn zero() -> Self {
        AlgScalar::zero()
    }
    fn is_zero(&self) -> bool {
        AlgScalar::is_zero(self)
    }
}

impl One for AlgScalar {
    fn one() -> Self {
        AlgScalar::one()
    }
}

impl From<Rational> for AlgScalar {
    fn from(q: Rational) -> Self {
        AlgScalar::from_rational(q)
    }
}

impl From<i64> for AlgScalar {
    fn from(n: i64) -> Self {
        AlgScalar::from_int(n)
    }
}

impl Add<&AlgScalar> for &AlgScalar {
    type Output = AlgScalar;
    fn add(self, o: &AlgScalar) -> AlgScalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        AlgScalar {
            c: [0, 1, 2, 3].map(|i| &self.c[i] + &o.c[i]),
        }
    }
}

impl Sub<&AlgScalar> for &AlgScalar {
    type Output = AlgScalar;
    fn sub(self, o: &AlgScalar) -> AlgScalar {
        AlgScalar {
            c: [0, 1, 2, 3].map(|i| &self.c[i] - &o.c[i]),
        }
    }
}

/// `e_i e_j = BASIS_PRODUCT[i][j].0 * e_{BASIS_PRODUCT[i][j].1}` for the basis `1, sqrt2, sqrt5, sqrt10`.
const BASIS_PRODUCT: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (2, 0), (1, 3), (2, 2)],
    [(1, 2), (1, 3), (5, 0), (5, 1)],
    [(1, 3), (2, 2), (5, 1), (10, 0)],
];

impl Mul<&AlgScalar> for &AlgScalar {
    type Output = AlgScalar;
    fn mul(self, o: &AlgScalar) -> AlgScalar {
        let mut out = AlgScalar::zero();
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (f, k) = BASIS_PRODUCT[i][j];
                let term = x * y;
                if f == 1 {
                    out.c[k] += term;
                } else {
                    out.c[k] += term * int(f);
                }
            }
        }
        out
    }
}

impl Neg for &AlgScalar {
    type Output = AlgScalar;
    fn neg(self) -> AlgScalar {
        AlgScalar {
            c: [0, 1, 2, 3].map(|i| -&self.c[i]),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<AlgScalar> for AlgScalar {
            type Output = AlgScalar;
            fn $m(self, o: AlgScalar) -> AlgScalar { (&self).$m(&o) }
        }
        impl $tr<&AlgScalar> for AlgScalar {
            type Output = AlgScalar;
            fn $m(self, o: &AlgScalar) -> AlgScalar { (&self).$m(o) }
        }
        impl $tr<AlgScalar> for &AlgScalar {
            type Output = AlgScalar;
            fn $m(self, o: AlgScalar) -> AlgScalar { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for AlgScalar {
    type Output = AlgScalar;
    fn neg(self) -> AlgScalar {
        -&self
    }
}

/// Renders as e.g. `"1/2 + 1/2*sqrt(5)"` or `"-sqrt(2)"`; zero terms are omitted.
impl fmt::Display for AlgScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (q, r) in self.c.iter().zip(RADICANDS) {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            let body = match (r, mag.is_one()) {
                (1, _) => render_rational(&mag),
                (_, true) => format!("sqrt({r})"),
                (_, false) => format!("{}*sqrt({r})", render_rational(&mag)),
            };
            match (first, q.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Serialized as its canonical text form.
impl serde::Serialize for AlgScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for AlgScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let [w, x, y, z] = super::expr::parse_quaternion_components(s)?;
        if !(x.is_zero() && y.is_zero() && z.is_zero()) {
            return Err(Error::parse(format!("{s:?} is not a scalar")));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        int(n)
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    fn scalar() -> impl Strategy<Value = AlgScalar> {
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(a, b, c, d)| AlgScalar::new(a, b, c, d))
    }

    #[test]
    fn product_examples() {
        let h = AlgScalar::inv_sqrt2();
        assert_eq!(&h * &h, AlgScalar::from_rational(rat(1, 2)));
        let p = AlgScalar::phi();
        assert_eq!(&p * &p, &p + &AlgScalar::one());
        let x = AlgScalar::new(q(1), q(1), q(0), q(0));
        let y = AlgScalar::new(q(1), q(0), q(1), q(0));
        assert_eq!(&x * &y, AlgScalar::new(q(1), q(1), q(1), q(1)));
    }

    #[test]
    fn basis_products() {
        let s2 = AlgScalar::sqrt2();
        let s5 = AlgScalar::sqrt5();
        let s10 = AlgScalar::new(q(0), q(0), q(0), q(1));
        assert_eq!(&s2 * &s5, s10);
        assert_eq!(&s2 * &s10, s5.scale(&q(2)));
        assert_eq!(&s5 * &s10, s2.scale(&q(5)));
        assert_eq!(&s10 * &s10, AlgScalar::from_int(10));
    }

    #[test]
    fn inverse_of_phi_is_phi_minus_one() {
        assert_eq!(AlgScalar::phi().inv().unwrap(), AlgScalar::inv_phi());
        assert!(AlgScalar::zero().inv().is_err());
    }

    /// Inverse by the Galois route `x^-1 = conj2(x) conj5(x) conj25(x) / N(x)`.
    fn galois_inverse(x: &AlgScalar) -> AlgScalar {
        let others = x.conj2() * x.conj5() * x.conj2().conj5();
        others.scale(&(int(1) / x.norm()))
    }

    #[test]
    fn inverse_on_500_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut tested = 0;
        while tested < 500 {
            let c = [0; 4].map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=12)));
            let x = AlgScalar { c };
            if x.is_zero() {
                continue;
            }
            let inv = x.inv().unwrap();
            assert_eq!(&inv * &x, AlgScalar::one());
            assert_eq!(inv, galois_inverse(&x));
            tested += 1;
        }
    }

    #[test]
    fn signs() {
        // 3 - 2*sqrt2 > 0, 1 - sqrt2 < 0, sqrt10 - 3 > 0, 2*sqrt2 + sqrt5 - 2*sqrt10 < 0,
        // 3*sqrt2 + sqrt5 - 2*sqrt10 > 0.
        assert_eq!(AlgScalar::new(q(3), q(-2), q(0), q(0)).signum(), 1);
        assert_eq!(AlgScalar::new(q(1), q(-1), q(0), q(0)).signum(), -1);
        assert_eq!(AlgScalar::new(q(-3), q(0), q(0), q(1)).signum(), 1);
        assert_eq!(AlgScalar::new(q(0), q(2), q(1), q(-2)).signum(), -1);
        assert_eq!(AlgScalar::new(q(0), q(3), q(1), q(-2)).signum(), 1);
        assert_eq!(AlgScalar::zero().signum(), 0);
        assert_eq!(AlgScalar::inv_phi().cmp_value(&AlgScalar::phi()), Ordering::Less);
    }

    #[test]
    fn render_forms() {
        assert_eq!(AlgScalar::phi().to_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!((-AlgScalar::sqrt2()).to_string(), "-sqrt(2)");
        assert_eq!(AlgScalar::zero().to_string(), "0");
        assert_eq!(
            AlgScalar::new(q(0), rat(-1, 2), q(0), q(3)).to_string(),
            "-1/2*sqrt(2) + 3*sqrt(10)"
        );
    }

    proptest! {
        #[test]
        fn ring_axioms(x in scalar(), y in scalar(), z in scalar()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
        }

        #[test]
        fn sign_matches_float(x in scalar()) {
            let f = x.approx();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn render_parse_round_trip(x in scalar()) {
            prop_assert_eq!(x.to_string().parse::<AlgScalar>().unwrap(), x);
        }
    }
}
