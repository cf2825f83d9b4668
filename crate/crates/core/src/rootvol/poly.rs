use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::exactnum::{int, render_rational, Rational};

/// Sparse polynomial in `nvars` variables over Q; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RationalPoly {
    pub fn zero(nvars: usize) -> Self {
        RationalPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, q: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], q);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// `sum_i coeffs[i] * e_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// The single monomial `q * prod e_i^exps[i]`.
    pub fn monomial(exps: &[u32], q: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps.to_vec(), q);
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, q)| (e.as_slice(), q))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, q) in &o.terms {
            out.add_term(e.clone(), q.clone());
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * q);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Partial derivative in variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * int(e[var] as i64));
        }
        out
    }
}

/// Renders e.g. `"4*e1^6 + 12*e1^5*e2 - 3*e1^4*e2^2"`, highest degree first.
impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("e{}", i + 1) } else { format!("e{}^{k}", i + 1) })
                .collect();
            let mag = c.abs();
            let body = match (vars.is_empty(), mag.is_one()) {
                (true, _) => render_rational(&mag),
                (false, true) => vars.join("*"),
                (false, false) => format!("{}*{}", render_rational(&mag), vars.join("*")),
            };
            match (n == 0, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
