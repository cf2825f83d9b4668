//! Subgroups of Spin(4) = SU(2) x SU(2) via Goursat quintuples.
//!
//! A subgroup `C` of `G1 x G2` corresponds to `(A, A0, B, B0, theta)`:
//! `A = pi1(C)`, `B = pi2(C)`, `A0 = pi1(ker pi2|C)`, `B0 = pi2(ker pi1|C)` and
//! `theta: A/A0 -> B/B0` is the isomorphism whose graph is `C`. Conversely
//! `C = {(a, b) in A x B : theta(a A0) = b B0}`, of order `|A| |B0|`.
//!
//! Cosets are named by their smallest element. `theta` is stored as a map
//! between these canonical representatives.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::AlgScalar;
use crate::quatgroups::{ade_group_by_name, generate, FiniteQuatGroup, UnitQuaternion, DEFAULT_GROUP_CAP};

/// An element `(a, b)` of SU(2) x SU(2). Its conjugacy class is determined
/// by `(Re a, Re b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuatPair {
    pub a: UnitQuaternion,
    pub b: UnitQuaternion,
}

impl QuatPair {
    pub fn new(a: UnitQuaternion, b: UnitQuaternion) -> Self {
        QuatPair { a, b }
    }

    pub fn identity() -> Self {
        Self::new(UnitQuaternion::one(), UnitQuaternion::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.a.mul(&o.a), self.b.mul(&o.b))
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.a.inverse(), self.b.inverse())
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        Self::new(self.a.conjugate_by(&g.a), self.b.conjugate_by(&g.b))
    }

    pub fn real_parts(&self) -> (AlgScalar, AlgScalar) {
        (self.a.real_part().clone(), self.b.real_part().clone())
    }
}

/// A finite subgroup of Spin(4); elements are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spin4Subgroup {
    elements: Vec<QuatPair>,
}

impl Spin4Subgroup {
    fn from_sorted(mut elements: Vec<QuatPair>) -> Self {
        elements.sort();
        elements.dedup();
        Spin4Subgroup { elements }
    }

    /// Validates closure under products and inverses.
    pub fn from_elements(elements: Vec<QuatPair>) -> Result<Self> {
        let c = Self::from_sorted(elements);
        if !c.contains(&QuatPair::identity()) {
            return Err(Error::arg("subset does not contain the identity"));
        }
        for x in &c.elements {
            if !c.contains(&x.inverse()) {
                return Err(Error::arg(format!("subset is not closed under inverses at {x:?}")));
            }
            for y in &c.elements {
                if !c.contains(&x.mul(y)) {
                    return Err(Error::arg("subset is not closed under multiplication"));
                }
            }
        }
        Ok(c)
    }

    pub fn elements(&self) -> &[QuatPair] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &QuatPair) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn conjugate_by(&self, g: &QuatPair) -> Self {
        let gi = g.inverse();
        Self::from_sorted(
            self.elements
                .iter()
                .map(|x| g.mul(x).mul(&gi))
                .collect(),
        )
    }

    /// Multiset of `(Re a, Re b)`.
    pub fn real_part_multiset(&self) -> BTreeMap<(AlgScalar, AlgScalar), usize> {
        let mut out = BTreeMap::new();
        for x in &self.elements {
            *out.entry(x.real_parts()).or_insert(0) += 1;
        }
        out
    }
}

/// Canonical representative of each element's coset `x N`, for `x` in `g`.
fn coset_map(g: &FiniteQuatGroup, n: &FiniteQuatGroup) -> HashMap<UnitQuaternion, UnitQuaternion> {
    let mut out: HashMap<UnitQuaternion, UnitQuaternion> = HashMap::with_capacity(g.order());
    for x in g.elements() {
        if out.contains_key(x) {
            continue;
        }
        let coset: Vec<UnitQuaternion> = n.elements().iter().map(|m| x.mul(m)).collect();
        let rep = coset.iter().min().expect("nonempty").clone();
        for y in coset {
            out.insert(y, rep.clone());
        }
    }
    out
}

/// `(A, A0, B, B0, theta)` with `A0` normal in `A`, `B0` normal in `B`, and
/// `theta: A/A0 -> B/B0` an isomorphism.
#[derive(Clone, Debug)]
pub struct GoursatQuintuple {
    a: FiniteQuatGroup,
    a0: FiniteQuatGroup,
    b: FiniteQuatGroup,
    b0: FiniteQuatGroup,
    theta: BTreeMap<UnitQuaternion, UnitQuaternion>,
    a_cosets: HashMap<UnitQuaternion, UnitQuaternion>,
    b_cosets: HashMap<UnitQuaternion, UnitQuaternion>,
}

impl PartialEq for GoursatQuintuple {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.a0 == o.a0 && self.b == o.b && self.b0 == o.b0 && self.theta == o.theta
    }
}

impl Eq for GoursatQuintuple {}

impl GoursatQuintuple {
    /// `theta` lists `(x, y)` meaning `theta(x A0) = y B0`; every coset of `A0`
    /// must appear, with consistent values.
    pub fn new(
        a: FiniteQuatGroup,
        a0: FiniteQuatGroup,
        b: FiniteQuatGroup,
        b0: FiniteQuatGroup,
        theta: &[(UnitQuaternion, UnitQuaternion)],
    ) -> Result<Self> {
        let (a_cosets, b_cosets) = Self::check_groups(&a, &a0, &b, &b0)?;
        let mut map = BTreeMap::new();
        for (x, y) in theta {
            let xr = a_cosets
                .get(x)
                .ok_or_else(|| Error::arg(format!("theta: {x} is not in A")))?;
            let yr = b_cosets
                .get(y)
                .ok_or_else(|| Error::arg(format!("theta: {y} is not in B")))?;
            if let Some(prev) = map.insert(xr.clone(), yr.clone()) {
                if &prev != yr {
                    return Err(Error::arg(format!("theta assigns two cosets to {x}")));
                }
            }
        }
        let q = GoursatQuintuple {
            a,
            a0,
            b,
            b0,
            theta: map,
            a_cosets,
            b_cosets,
        };
        q.check_theta()?;
        Ok(q)
    }

    /// Extends `theta` from the images of elements generating `A/A0`.
    pub fn from_generator_images(
        a: FiniteQuatGroup,
        a0: FiniteQuatGroup,
        b: FiniteQuatGroup,
        b0: FiniteQuatGroup,
        images: &[(UnitQuaternion, UnitQuaternion)],
    ) -> Result<Self> {
        let (a_cosets, b_cosets) = Self::check_groups(&a, &a0, &b, &b0)?;
        let rep_a = |x: &UnitQuaternion| {
            a_cosets
                .get(x)
                .cloned()
                .ok_or_else(|| Error::arg(format!("theta: {x} is not in A")))
        };
        let rep_b = |y: &UnitQuaternion| {
            b_cosets
                .get(y)
                .cloned()
                .ok_or_else(|| Error::arg(format!("theta: {y} is not in B")))
        };
        let gens: Vec<(UnitQuaternion, UnitQuaternion)> = images
            .iter()
            .map(|(x, y)| Ok((rep_a(x)?, rep_b(y)?)))
            .collect::<Result<_>>()?;
        let mut map = BTreeMap::new();
        let one = UnitQuaternion::one();
        map.insert(rep_a(&one)?, rep_b(&one)?);
        let mut queue = VecDeque::from([(rep_a(&one)?, rep_b(&one)?)]);
        while let Some((x, y)) = queue.pop_front() {
            for (g, h) in &gens {
                let xg = rep_a(&x.mul(g))?;
                if !map.contains_key(&xg) {
                    let yh = rep_b(&y.mul(h))?;
                    map.insert(xg.clone(), yh.clone());
                    queue.push_back((xg, yh));
                }
            }
        }
        let q = GoursatQuintuple {
            a,
            a0,
            b,
            b0,
            theta: map,
            a_cosets,
            b_cosets,
        };
        q.check_theta()?;
        for (x, y) in &gens {
            if &q.theta[x] != y {
                return Err(Error::arg("generator images are inconsistent"));
            }
        }
        Ok(q)
    }

    #[allow(clippy::type_complexity)]
    fn check_groups(
        a: &FiniteQuatGroup,
        a0: &FiniteQuatGroup,
        b: &FiniteQuatGroup,
        b0: &FiniteQuatGroup,
    ) -> Result<(
        HashMap<UnitQuaternion, UnitQuaternion>,
        HashMap<UnitQuaternion, UnitQuaternion>,
    )> {
        if !a0.is_normal_in(a) {
            return Err(Error::arg("A0 is not a normal subgroup of A"));
        }
        if !b0.is_normal_in(b) {
            return Err(Error::arg("B0 is not a normal subgroup of B"));
        }
        if a.order() * b0.order() != b.order() * a0.order() {
            return Err(Error::arg(format!(
                "|A/A0| = {} differs from |B/B0| = {}",
                a.order() / a0.order(),
                b.order() / b0.order()
            )));
        }
        Ok((coset_map(a, a0), coset_map(b, b0)))
    }

    fn check_theta(&self) -> Result<()> {
        let index = self.a.order() / self.a0.order();
        if self.theta.len() != index {
            return Err(Error::arg(format!(
                "theta is defined on {} of {index} cosets",
                self.theta.len()
            )));
        }
        let mut values: Vec<&UnitQuaternion> = self.theta.values().collect();
        values.sort();
        values.dedup();
        if values.len() != index {
            return Err(Error::arg("theta is not injective"));
        }
        for (x, tx) in &self.theta {
            for (y, ty) in &self.theta {
                let lhs = &self.theta[&self.a_cosets[&x.mul(y)]];
                let rhs = &self.b_cosets[&tx.mul(ty)];
                if lhs != rhs {
                    return Err(Error::arg("theta is not multiplicative"));
                }
            }
        }
        Ok(())
    }

    pub fn a(&self) -> &FiniteQuatGroup {
        &self.a
    }

    pub fn a0(&self) -> &FiniteQuatGroup {
        &self.a0
    }

    pub fn b(&self) -> &FiniteQuatGroup {
        &self.b
    }

    pub fn b0(&self) -> &FiniteQuatGroup {
        &self.b0
    }

    /// `theta` on canonical coset representatives.
    pub fn theta(&self) -> &BTreeMap<UnitQuaternion, UnitQuaternion> {
        &self.theta
    }

    /// Canonical representative of `theta(x A0)`.
    pub fn apply_theta(&self, x: &UnitQuaternion) -> Result<&UnitQuaternion> {
        let r = self
            .a_cosets
            .get(x)
            .ok_or_else(|| Error::arg(format!("{x} is not in A")))?;
        Ok(&self.theta[r])
    }
}

/// The fiber product `{(a, b) in A x B : theta(a A0) = b B0}`.
pub fn build_subgroup(q: &GoursatQuintuple) -> Spin4Subgroup {
    let mut by_coset: HashMap<&UnitQuaternion, Vec<&UnitQuaternion>> = HashMap::new();
    for b in q.b.elements() {
        by_coset.entry(&q.b_cosets[b]).or_default().push(b);
    }
    let mut out = Vec::with_capacity(q.a.order() * q.b0.order());
    for a in q.a.elements() {
        let target = &q.theta[&q.a_cosets[a]];
        for b in &by_coset[target] {
            out.push(QuatPair::new(a.clone(), (*b).clone()));
        }
    }
    Spin4Subgroup::from_sorted(out)
}

/// The quintuple whose fiber product is `c`.
pub fn quintuple_of(c: &Spin4Subgroup) -> Result<GoursatQuintuple> {
    let one = UnitQuaternion::one();
    let group = |v: Vec<UnitQuaternion>| FiniteQuatGroup::from_elements(v);
    let a = group(c.elements.iter().map(|x| x.a.clone()).collect())?;
    let b = group(c.elements.iter().map(|x| x.b.clone()).collect())?;
    let a0 = group(c.elements.iter().filter(|x| x.b == one).map(|x| x.a.clone()).collect())?;
    let b0 = group(c.elements.iter().filter(|x| x.a == one).map(|x| x.b.clone()).collect())?;
    let pairs: Vec<(UnitQuaternion, UnitQuaternion)> =
        c.elements.iter().map(|x| (x.a.clone(), x.b.clone())).collect();
    GoursatQuintuple::new(a, a0, b, b0, &pairs)
}

/// Almost conjugacy in Spin(4): equal multisets of `(Re a, Re b)`.
pub fn spin4_almost_conjugate(c1: &Spin4Subgroup, c2: &Spin4Subgroup) -> bool {
    c1.real_part_multiset() == c2.real_part_multiset()
}

/// The first `g` in `witnesses` with `g C1 g^-1 = C2`.
pub fn conjugate_by_witness(
    c1: &Spin4Subgroup,
    c2: &Spin4Subgroup,
    witnesses: &[QuatPair],
) -> Option<QuatPair> {
    if c1.order() != c2.order() {
        return None;
    }
    witnesses
        .par_iter()
        .find_first(|g| c1.conjugate_by(g) == *c2)
        .cloned()
}

/// `{1} x H` and `H x H` witness lists.
pub fn witnesses_right(h: &FiniteQuatGroup) -> Vec<QuatPair> {
    h.elements()
        .iter()
        .map(|w| QuatPair::new(UnitQuaternion::one(), w.clone()))
        .collect()
}

pub fn witnesses_product(h1: &FiniteQuatGroup, h2: &FiniteQuatGroup) -> Vec<QuatPair> {
    h1.elements()
        .iter()
        .flat_map(|a| h2.elements().iter().map(move |b| QuatPair::new(a.clone(), b.clone())))
        .collect()
}

fn q(s: &str) -> UnitQuaternion {
    s.parse().expect("built-in quaternion literal")
}

/// `(Z3, 1, 2T, 2D4, theta_i)` with `omega = (-1+i+j+k)/2` sent to
/// `(1-i-j-k)/2 2D4` and to `(1+i+j+k)/2 2D4` respectively.
pub fn cyclic_tetrahedral_pair() -> Result<(GoursatQuintuple, GoursatQuintuple)> {
    let omega = q("(-1+i+j+k)/2");
    let make = |image: &str| {
        GoursatQuintuple::from_generator_images(
            ade_group_by_name("Z3")?,
            ade_group_by_name("Z1")?,
            ade_group_by_name("2T")?,
            ade_group_by_name("2D4")?,
            &[(omega.clone(), q(image))],
        )
    };
    Ok((make("(1-i-j-k)/2")?, make("(1+i+j+k)/2")?))
}

/// `u = (i - j)/sqrt(2)`: together with `(1+i+j+k)/2` it generates 2D6.
pub fn dihedral_six_reflection() -> UnitQuaternion {
    q("(i-j)/sqrt(2)")
}

/// `(Z4, 1, 2D6, Z3, theta_i)` with `i` sent to `u Z3` and `u^-1 Z3`, the two
/// isomorphisms `Z4 -> 2D6/Z3`.
pub fn cyclic_dihedral_pair() -> Result<(GoursatQuintuple, GoursatQuintuple)> {
    let u = dihedral_six_reflection();
    let make = |image: UnitQuaternion| {
        GoursatQuintuple::from_generator_images(
            ade_group_by_name("Z4")?,
            ade_group_by_name("Z1")?,
            ade_group_by_name("2D6")?,
            ade_group_by_name("Z3")?,
            &[(UnitQuaternion::i(), image)],
        )
    };
    Ok((make(u.clone())?, make(u.inverse())?))
}

/// How a group is given in a quintuple description: an ADE label or generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Label(String),
    Generators(Vec<String>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteQuatGroup> {
        match self {
            GroupSpec::Label(l) => ade_group_by_name(l),
            GroupSpec::Generators(gens) => {
                let gens: Vec<UnitQuaternion> =
                    gens.iter().map(|g| g.parse()).collect::<Result<_>>()?;
                generate(&gens, DEFAULT_GROUP_CAP)
            }
        }
    }
}

/// Serializable description of a quintuple; `theta` lists `[x, y]` pairs
/// meaning `theta(x A0) = y B0` for elements `x` generating `A/A0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuintupleSpec {
    pub a: GroupSpec,
    pub a0: GroupSpec,
    pub b: GroupSpec,
    pub b0: GroupSpec,
    pub theta: Vec<(String, String)>,
}

impl QuintupleSpec {
    pub fn build(&self) -> Result<GoursatQuintuple> {
        let pairs: Vec<(UnitQuaternion, UnitQuaternion)> = self
            .theta
            .iter()
            .map(|(x, y)| Ok((x.parse()?, y.parse()?)))
            .collect::<Result<_>>()?;
        GoursatQuintuple::from_generator_images(
            self.a.build()?,
            self.a0.build()?,
            self.b.build()?,
            self.b0.build()?,
            &pairs,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatgroups::ade_group_by_name as g;

    #[test]
    fn direct_product_and_diagonal() {
        let t = g("2T").unwrap();
        let z4 = g("Z4").unwrap();
        let prod = GoursatQuintuple::new(t.clone(), t.clone(), z4.clone(), z4.clone(), &[(
            UnitQuaternion::one(),
            UnitQuaternion::one(),
        )])
        .unwrap();
        let c = build_subgroup(&prod);
        assert_eq!(c.order(), 24 * 4);
        assert_eq!(quintuple_of(&c).unwrap(), prod);

        let one = g("Z1").unwrap();
        let diag_pairs: Vec<_> = t.elements().iter().map(|x| (x.clone(), x.clone())).collect();
        let diag = GoursatQuintuple::new(t.clone(), one.clone(), t.clone(), one, &diag_pairs).unwrap();
        let d = build_subgroup(&diag);
        assert_eq!(d.order(), 24);
        assert!(d.elements().iter().all(|p| p.a == p.b));
        assert_eq!(quintuple_of(&d).unwrap(), diag);
    }

    #[test]
    fn invalid_quintuples_rejected() {
        let t = g("2T").unwrap();
        let z3 = g("Z3").unwrap();
        let one = g("Z1").unwrap();
        // Z3 is not normal in 2T
        assert!(GoursatQuintuple::new(t.clone(), z3.clone(), t.clone(), z3.clone(), &[]).is_err());
        // index mismatch
        assert!(GoursatQuintuple::new(z3.clone(), one.clone(), t.clone(), t.clone(), &[]).is_err());
        // not a homomorphism: Z4 -> Z4 sending i to -1
        let z4 = g("Z4").unwrap();
        let bad = GoursatQuintuple::from_generator_images(
            z4.clone(),
            one.clone(),
            z4.clone(),
            one.clone(),
            &[(UnitQuaternion::i(), UnitQuaternion::minus_one())],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn cyclic_tetrahedral_example() {
        let (q1, q2) = cyclic_tetrahedral_pair().unwrap();
        let (c1, c2) = (build_subgroup(&q1), build_subgroup(&q2));
        assert_eq!((c1.order(), c2.order()), (24, 24));
        assert_ne!(c1, c2);
        assert!(spin4_almost_conjugate(&c1, &c2));
        let back = quintuple_of(&c1).unwrap();
        assert_eq!((back.a().order(), back.a0().order(), back.b().order(), back.b0().order()), (3, 1, 24, 8));
        assert_eq!(back, q1);
        let w = conjugate_by_witness(&c1, &c2, &witnesses_right(&g("2O").unwrap())).unwrap();
        assert_eq!(w.a, UnitQuaternion::one());
        assert_eq!(c1.conjugate_by(&w), c2);
    }

    #[test]
    fn witness_reflexive() {
        let (q1, _) = cyclic_tetrahedral_pair().unwrap();
        let c = build_subgroup(&q1);
        let w = conjugate_by_witness(&c, &c, &[QuatPair::identity()]).unwrap();
        assert_eq!(w, QuatPair::identity());
        assert!(spin4_almost_conjugate(&c, &c));
    }

    #[test]
    fn spec_round_trip() {
        let spec = QuintupleSpec {
            a: GroupSpec::Label("Z3".into()),
            a0: GroupSpec::Label("Z1".into()),
            b: GroupSpec::Generators(vec!["(1+i)(1+j)/2".into(), "(1+j)(1+i)/2".into()]),
            b0: GroupSpec::Label("2D4".into()),
            theta: vec![("(-1+i+j+k)/2".into(), "(1-i-j-k)/2".into())],
        };
        assert_eq!(spec.build().unwrap(), cyclic_tetrahedral_pair().unwrap().0);
    }
}
