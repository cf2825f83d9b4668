//! Diagonal sign subgroups of O(6) as binary linear codes.
//!
//! A diagonal matrix with entries `±1` is a [`SignVector`] whose set bits mark
//! the `-1` entries. Two diagonal involutions are conjugate in SO(6) iff they
//! have the same weight, so almost conjugacy of sign groups is equality of
//! weight enumerators. Conjugacy in O(6) of two such groups containing `-Id`
//! reduces to a coordinate permutation carrying one code onto the other: a
//! conjugator must permute the common eigenspace decomposition, and sign
//! changes act trivially on diagonal matrices.
//!
//! Neither lift to Spin(6)/Pin(6) is computed here; non-conjugacy there
//! follows from non-conjugacy of the images in SO(6)/O(6).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const LENGTH: usize = 6;

/// A diagonal `±1` matrix of size 6; bit `i` set means entry `i` is `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(u8);

impl SignVector {
    pub fn from_bits(bits: u8) -> Result<Self> {
        if bits >> LENGTH != 0 {
            return Err(Error::arg(format!("{bits:#b} has more than {LENGTH} coordinates")));
        }
        Ok(SignVector(bits))
    }

    pub fn from_signs(signs: [i8; LENGTH]) -> Result<Self> {
        let mut bits = 0u8;
        for (i, s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => bits |= 1 << i,
                _ => return Err(Error::arg(format!("entry {s} is not ±1"))),
            }
        }
        Ok(SignVector(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn signs(self) -> [i8; LENGTH] {
        std::array::from_fn(|i| if self.0 >> i & 1 == 1 { -1 } else { 1 })
    }

    /// Number of `-1` entries.
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn determinant(self) -> i8 {
        if self.weight() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Componentwise product.
    pub fn mul(self, o: Self) -> Self {
        SignVector(self.0 ^ o.0)
    }

    /// Entry `i` moves to position `perm[i]`.
    pub fn permute(self, perm: &[usize; LENGTH]) -> Self {
        let mut bits = 0u8;
        for (i, &p) in perm.iter().enumerate() {
            bits |= (self.0 >> i & 1) << p;
        }
        SignVector(bits)
    }

    /// Indices of the `-1` entries, 1-based.
    pub fn support(self) -> Vec<usize> {
        (0..LENGTH).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.signs().iter().join(","))
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries: Vec<i8> = body
            .split(',')
            .map(|t| t.trim().parse::<i8>().map_err(|e| Error::parse(format!("{t:?}: {e}"))))
            .collect::<Result<_>>()?;
        let signs: [i8; LENGTH] = entries
            .try_into()
            .map_err(|_| Error::parse(format!("{s:?} does not have {LENGTH} entries")))?;
        Self::from_signs(signs)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A group of diagonal sign matrices: a binary linear code of length 6.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignCodeGroup {
    codewords: BTreeSet<SignVector>,
}

impl SignCodeGroup {
    /// Fails unless the set contains the identity and is closed under products.
    pub fn new(codewords: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let codewords: BTreeSet<SignVector> = codewords.into_iter().collect();
        if !codewords.contains(&SignVector(0)) {
            return Err(Error::arg("sign group does not contain the identity"));
        }
        for &x in &codewords {
            for &y in &codewords {
                if !codewords.contains(&x.mul(y)) {
                    return Err(Error::arg(format!("{x} * {y} is missing")));
                }
            }
        }
        Ok(SignCodeGroup { codewords })
    }

    /// The group generated by `gens`.
    pub fn generated_by(gens: &[SignVector]) -> Self {
        let mut words = BTreeSet::from([SignVector(0)]);
        for &g in gens {
            let more: Vec<SignVector> = words.iter().map(|w| w.mul(g)).collect();
            words.extend(more);
        }
        SignCodeGroup { codewords: words }
    }

    /// All even-weight vectors, of dimension 5 as a code.
    pub fn even_weight_code() -> Self {
        SignCodeGroup {
            codewords: (0u8..64).filter(|b| b.count_ones() % 2 == 0).map(SignVector).collect(),
        }
    }

    pub fn codewords(&self) -> impl Iterator<Item = SignVector> + '_ {
        self.codewords.iter().copied()
    }

    pub fn order(&self) -> usize {
        self.codewords.len()
    }

    /// Dimension over Z2.
    pub fn dimension(&self) -> u32 {
        self.codewords.len().trailing_zeros()
    }

    pub fn in_so6(&self) -> bool {
        self.codewords.iter().all(|w| w.weight() % 2 == 0)
    }

    /// Weight to number of codewords of that weight.
    pub fn weight_enumerator(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for w in &self.codewords {
            *out.entry(w.weight()).or_insert(0) += 1;
        }
        out
    }

    pub fn permute(&self, perm: &[usize; LENGTH]) -> Self {
        SignCodeGroup {
            codewords: self.codewords.iter().map(|w| w.permute(perm)).collect(),
        }
    }
}

/// The two order-8 subgroups of SO(6): the first has weight-2 supports
/// `{1,2}, {1,3}, {2,3}`, the second `{1,2}, {3,4}, {5,6}`.
pub fn paper_groups() -> (SignCodeGroup, SignCodeGroup) {
    let parse = |rows: [&str; 8]| {
        SignCodeGroup::new(rows.iter().map(|r| r.parse::<SignVector>().expect("built-in vector")))
            .expect("built-in sign group")
    };
    let g1 = parse([
        "(1,1,1,1,1,1)",
        "(-1,-1,-1,-1,-1,-1)",
        "(-1,-1,1,1,1,1)",
        "(-1,1,-1,1,1,1)",
        "(1,-1,-1,1,1,1)",
        "(-1,1,1,-1,-1,-1)",
        "(1,-1,1,-1,-1,-1)",
        "(1,1,-1,-1,-1,-1)",
    ]);
    let g2 = parse([
        "(1,1,1,1,1,1)",
        "(-1,-1,-1,-1,-1,-1)",
        "(-1,-1,1,1,1,1)",
        "(1,1,-1,-1,1,1)",
        "(1,1,1,1,-1,-1)",
        "(-1,-1,-1,-1,1,1)",
        "(-1,-1,1,1,-1,-1)",
        "(1,1,-1,-1,-1,-1)",
    ]);
    (g1, g2)
}

/// True iff the weight enumerators agree.
pub fn so6_almost_conjugate(g1: &SignCodeGroup, g2: &SignCodeGroup) -> Result<bool> {
    for g in [g1, g2] {
        if let Some(w) = g.codewords().find(|w| w.weight() % 2 == 1) {
            return Err(Error::domain(format!("{w} has determinant -1")));
        }
    }
    Ok(g1.weight_enumerator() == g2.weight_enumerator())
}

/// Outcome of the exhaustive scan over Sym(6) in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceSearch {
    /// 0-based images of coordinates `0..6`.
    pub witness: Option<[usize; LENGTH]>,
    pub permutations_tried: usize,
}

pub fn permutation_search(g1: &SignCodeGroup, g2: &SignCodeGroup) -> EquivalenceSearch {
    let mut tried = 0;
    for p in (0..LENGTH).permutations(LENGTH) {
        tried += 1;
        let perm: [usize; LENGTH] = p.try_into().expect("length 6");
        if g1.order() == g2.order() && g1.permute(&perm) == *g2 {
            return EquivalenceSearch {
                witness: Some(perm),
                permutations_tried: tried,
            };
        }
    }
    EquivalenceSearch {
        witness: None,
        permutations_tried: tried,
    }
}

/// A permutation carrying `g1` onto `g2` setwise.
pub fn permutation_equivalent(g1: &SignCodeGroup, g2: &SignCodeGroup) -> Option<[usize; LENGTH]> {
    permutation_search(g1, g2).witness
}
