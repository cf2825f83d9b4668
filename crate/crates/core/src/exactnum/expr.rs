//! Recursive-descent parser for exact quaternion expressions.
//!
//! Accepted syntax: integers, `sqrt(n)` for integers `n` whose squarefree part
//! lies in {1, 2, 5, 10}, `phi`, the units `i`, `j`, `k`, parentheses, unary
//! minus, `+ - * /`, and implicit multiplication by juxtaposition such as
//! `(1+i)(1+j)/2`.

use std::str::FromStr;

use num::{BigInt, Signed, ToPrimitive, Zero};

use super::alg::AlgScalar;
use super::rational::Rational;
use super::symreal::squarefree_decompose;
use crate::error::{Error, Result};

type Quat = [AlgScalar; 4];

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(BigInt::from_str(&text).expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

fn scalar(x: AlgScalar) -> Quat {
    [x, AlgScalar::zero(), AlgScalar::zero(), AlgScalar::zero()]
}

fn unit(axis: usize) -> Quat {
    let mut q = scalar(AlgScalar::zero());
    q[axis] = AlgScalar::one();
    q
}

fn qadd(a: &Quat, b: &Quat) -> Quat {
    [0, 1, 2, 3].map(|i| &a[i] + &b[i])
}

fn qneg(a: &Quat) -> Quat {
    [0, 1, 2, 3].map(|i| -&a[i])
}

fn qmul(a: &Quat, b: &Quat) -> Quat {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

fn qinv(a: &Quat) -> Result<Quat> {
    let n = a.iter().fold(AlgScalar::zero(), |acc, x| acc + x * x);
    let ninv = n.inv().map_err(|_| Error::parse("division by zero"))?;
    Ok([
        &a[0] * &ninv,
        -(&a[1] * &ninv),
        -(&a[2] * &ninv),
        -(&a[3] * &ninv),
    ])
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<Quat> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('+')) => {
                    self.pos += 1;
                    acc = qadd(&acc, &self.term()?);
                }
                Some(Tok::Sym('-')) => {
                    self.pos += 1;
                    acc = qadd(&acc, &qneg(&self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Quat> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                    acc = qmul(&acc, &self.unary()?);
                }
                Some(Tok::Sym('/')) => {
                    self.pos += 1;
                    acc = qmul(&acc, &qinv(&self.unary()?)?);
                }
                Some(Tok::Sym('(')) | Some(Tok::Ident(_)) | Some(Tok::Num(_)) => {
                    acc = qmul(&acc, &self.atom()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Quat> {
        match self.peek() {
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(qneg(&self.unary()?))
            }
            Some(Tok::Sym('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Quat> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(scalar(AlgScalar::from_rational(Rational::from_integer(n)))),
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) => match name.as_str() {
                "i" => Ok(unit(1)),
                "j" => Ok(unit(2)),
                "k" => Ok(unit(3)),
                "phi" => Ok(scalar(AlgScalar::phi())),
                "sqrt" => {
                    self.expect('(')?;
                    let n = match self.peek().cloned() {
                        Some(Tok::Num(n)) => n,
                        _ => return Err(self.err("sqrt expects an integer literal")),
                    };
                    self.pos += 1;
                    self.expect(')')?;
                    Ok(scalar(sqrt_literal(&n).ok_or_else(|| {
                        Error::parse(format!("sqrt({n}) is not in Q(sqrt2, sqrt5)"))
                    })?))
                }
                _ => Err(self.err(&format!("unknown identifier {name:?}"))),
            },
            Tok::Sym(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}

fn sqrt_literal(n: &BigInt) -> Option<AlgScalar> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(AlgScalar::zero());
    }
    let (outer, inner) = squarefree_decompose(n.to_u64()?);
    let q = Rational::from_integer(BigInt::from(outer));
    let zero = Rational::zero();
    Some(match inner {
        1 => AlgScalar::new(q, zero.clone(), zero.clone(), zero),
        2 => AlgScalar::new(zero.clone(), q, zero.clone(), zero),
        5 => AlgScalar::new(zero.clone(), zero.clone(), q, zero),
        10 => AlgScalar::new(zero.clone(), zero.clone(), zero, q),
        _ => return None,
    })
}

/// Parses an expression and returns its components `(w, x, y, z)` on `1, i, j, k`.
pub fn parse_quaternion_components(s: &str) -> Result<[AlgScalar; 4]> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::parse("empty expression"));
    }
    let mut p = Parser { toks, pos: 0, src: s };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn parses_products_and_quotients() {
        let v = parse_quaternion_components("(1+i)(1+j)/2").unwrap();
        let half = AlgScalar::from_rational(rat(1, 2));
        assert_eq!(v, [half.clone(), half.clone(), half.clone(), half]);
        let t = parse_quaternion_components("(1+i)/sqrt(2)").unwrap();
        assert_eq!(t[0], AlgScalar::inv_sqrt2());
        assert_eq!(t[1], AlgScalar::inv_sqrt2());
    }

    #[test]
    fn parses_rendered_scalars() {
        let x = parse_quaternion_components("-1/2*sqrt(2) + 3*sqrt(10) - 7/3").unwrap();
        assert_eq!(x[0].to_string(), "-7/3 - 1/2*sqrt(2) + 3*sqrt(10)");
        let s = parse_quaternion_components("sqrt(20)").unwrap();
        assert_eq!(s[0], AlgScalar::sqrt5().scale(&rat(2, 1)));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "sqrt(3)", "1 +", "x", "(1", "1/0", "2 $ 3"] {
            assert!(parse_quaternion_components(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn hamilton_rules() {
        let ij = parse_quaternion_components("i*j").unwrap();
        assert_eq!(ij, unit(3));
        let ji = parse_quaternion_components("j i").unwrap();
        assert_eq!(ji, qneg(&unit(3)));
        let kk = parse_quaternion_components("k*k").unwrap();
        assert_eq!(kk, scalar(AlgScalar::from_int(-1)));
    }
}
