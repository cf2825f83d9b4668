use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, One};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default upper bound on `m` for [`enumerate_partitions`].
pub const MAX_PARTITION_M: u32 = 64;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::arg(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::arg(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(m)`.
    pub fn row(m: u32) -> Self {
        Self::from_unsorted(vec![m])
    }

    /// `(1^m)`.
    pub fn column(m: u32) -> Self {
        Partition {
            parts: vec![1; m as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn m(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.m() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.parts[j] - i as u32 - 1);
            }
        }
        out
    }

    /// Multiplicity `a_i` of each part size `i`, indexed from 1 (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut a = vec![0u32; self.parts.first().copied().unwrap_or(0) as usize + 1];
        for &p in &self.parts {
            a[p as usize] += 1;
        }
        a
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Accepts `"3,2,1"` or `"(3,2,1)"`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts).map_err(|e| Error::parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All partitions of `m` in reverse-lexicographic order, with the default cap.
pub fn enumerate_partitions(m: u32) -> Result<Vec<Partition>> {
    enumerate_partitions_capped(m, MAX_PARTITION_M)
}

pub fn enumerate_partitions_capped(m: u32, cap: u32) -> Result<Vec<Partition>> {
    if m > cap {
        return Err(Error::SizeLimit {
            what: "partition size m",
            requested: m as usize,
            cap: cap as usize,
        });
    }
    if m == 0 {
        return Err(Error::arg("m must be positive"));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(m, m, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

pub fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// Cycle type of a permutation in Sym(m).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(p: Partition) -> Self {
        CycleType(p)
    }

    pub fn identity(m: u32) -> Self {
        CycleType(Partition::column(m))
    }

    /// `(2, 1^(m-2))`; requires `m >= 2`.
    pub fn transposition(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::arg("a transposition needs m >= 2"));
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat(1).take(m as usize - 2));
        Ok(CycleType(Partition { parts }))
    }

    /// `(2, 2, 1^(m-4))`; requires `m >= 4`.
    pub fn double_transposition(m: u32) -> Result<Self> {
        if m < 4 {
            return Err(Error::arg("a double transposition needs m >= 4"));
        }
        let mut parts = vec![2, 2];
        parts.extend(std::iter::repeat(1).take(m as usize - 4));
        Ok(CycleType(Partition { parts }))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn m(&self) -> u32 {
        self.0.m()
    }

    pub fn is_identity(&self) -> bool {
        self.0.parts.iter().all(|&p| p == 1)
    }

    /// `sum (mu_i - 1) mod 2`: 1 for odd permutations.
    pub fn parity(&self) -> u32 {
        self.0.parts.iter().map(|&p| p - 1).sum::<u32>() % 2
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == 1
    }

    /// Order of any permutation of this type: the lcm of the parts.
    pub fn order(&self) -> u64 {
        self.0.parts.iter().fold(1u64, |acc, &p| acc.lcm(&u64::from(p)))
    }

    /// Centralizer order `z_mu = prod i^(a_i) a_i!`.
    pub fn centralizer_order(&self) -> BigInt {
        self.0
            .multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigInt::one(), |acc, (i, &a)| {
                acc * BigInt::from(i).pow(a) * factorial(a)
            })
    }

    /// Number of permutations of this type, `m!/z_mu`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.m()) / self.centralizer_order()
    }

    pub fn power(&self, k: u64) -> Self {
        power_cycle_type(self, k)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CycleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(CycleType(s.parse()?))
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Cycle type of `z^k`: a `c`-cycle splits into `gcd(c, k)` cycles of length `c / gcd(c, k)`.
pub fn power_cycle_type(mu: &CycleType, k: u64) -> CycleType {
    let mut parts = Vec::with_capacity(mu.m() as usize);
    for &c in mu.partition().parts() {
        let g = u64::from(c).gcd(&k) as u32;
        parts.extend(std::iter::repeat(c / g).take(g as usize));
    }
    CycleType(Partition::from_unsorted(parts))
}
