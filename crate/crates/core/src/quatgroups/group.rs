use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use super::quaternion::UnitQuaternion;
use crate::error::{Error, Result};
use crate::exactnum::AlgScalar;

/// Default cap on the order of generated groups.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// Multiplication and inversion by element index.
#[derive(Debug)]
pub struct CayleyTable {
    n: usize,
    prod: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl CayleyTable {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.prod[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }
}

/// A finite subgroup of SU(2). Elements are kept sorted, so equality of groups
/// is equality of element lists.
#[derive(Debug)]
pub struct FiniteQuatGroup {
    elements: Vec<UnitQuaternion>,
    label: Option<String>,
    table: OnceLock<CayleyTable>,
}

impl Clone for FiniteQuatGroup {
    fn clone(&self) -> Self {
        FiniteQuatGroup {
            elements: self.elements.clone(),
            label: self.label.clone(),
            table: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteQuatGroup {
    fn eq(&self, o: &Self) -> bool {
        self.elements == o.elements
    }
}

impl Eq for FiniteQuatGroup {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// The smallest member under the structural order.
    pub representative: UnitQuaternion,
    pub size: usize,
    pub real_part: AlgScalar,
    #[serde(skip)]
    pub members: Vec<UnitQuaternion>,
}

/// Multiplicative closure of `generators`.
pub fn generate(generators: &[UnitQuaternion], cap: usize) -> Result<FiniteQuatGroup> {
    let mut seen: HashSet<UnitQuaternion> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(UnitQuaternion::one());
    queue.push_back(UnitQuaternion::one());
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::SizeLimit {
                        what: "generated group order",
                        requested: seen.len(),
                        cap,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(FiniteQuatGroup::from_sorted(seen.into_iter().collect(), None))
}

impl FiniteQuatGroup {
    fn from_sorted(mut elements: Vec<UnitQuaternion>, label: Option<String>) -> Self {
        elements.sort();
        elements.dedup();
        FiniteQuatGroup {
            elements,
            label,
            table: OnceLock::new(),
        }
    }

    /// Validates closure under products and inverses.
    pub fn from_elements(elements: Vec<UnitQuaternion>) -> Result<Self> {
        let g = Self::from_sorted(elements, None);
        if !g.contains(&UnitQuaternion::one()) {
            return Err(Error::arg("subset does not contain 1"));
        }
        for a in &g.elements {
            if !g.contains(&a.inverse()) {
                return Err(Error::arg(format!("subset is not closed: missing inverse of {a}")));
            }
            for b in &g.elements {
                if !g.contains(&a.mul(b)) {
                    return Err(Error::arg(format!("subset is not closed: {a} * {b}")));
                }
            }
        }
        Ok(g)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in ascending structural order.
    pub fn elements(&self) -> &[UnitQuaternion] {
        &self.elements
    }

    pub fn index_of(&self, x: &UnitQuaternion) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &UnitQuaternion) -> bool {
        self.index_of(x).is_some()
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    pub fn is_normal_in(&self, parent: &Self) -> bool {
        self.is_subgroup_of(parent)
            && parent
                .elements
                .iter()
                .all(|g| self.elements.iter().all(|x| self.contains(&x.conjugate_by(g))))
    }

    /// The Cayley table, built on first use.
    pub fn table(&self) -> &CayleyTable {
        self.table.get_or_init(|| {
            let n = self.elements.len();
            let idx = |x: &UnitQuaternion| self.index_of(x).expect("group is closed") as u32;
            let mut prod = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    prod.push(idx(&a.mul(b)));
                }
            }
            let inv = self.elements.iter().map(|a| idx(&a.inverse())).collect();
            CayleyTable {
                n,
                prod,
                inv,
                identity: idx(&UnitQuaternion::one()),
            }
        })
    }

    /// Conjugacy classes, sorted by decreasing real part and then representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let t = self.table();
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = Vec::new();
            for g in 0..n {
                let y = t.mul(t.mul(g, x), t.inv(g));
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            orbit.sort_unstable();
            let members: Vec<UnitQuaternion> =
                orbit.iter().map(|&i| self.elements[i].clone()).collect();
            classes.push(ConjugacyClass {
                representative: members[0].clone(),
                size: members.len(),
                real_part: members[0].real_part().clone(),
                members,
            });
        }
        classes.sort_by(|a, b| {
            b.real_part
                .cmp_value(&a.real_part)
                .then_with(|| a.representative.cmp(&b.representative))
        });
        classes
    }

    /// The class containing `x`.
    pub fn class_of(&self, x: &UnitQuaternion) -> Option<ConjugacyClass> {
        self.conjugacy_classes()
            .into_iter()
            .find(|c| c.members.binary_search(x).is_ok())
    }

    /// Multiset of real parts, which are the SU(2)-conjugacy classes of the elements.
    pub fn real_part_multiset(&self) -> BTreeMap<AlgScalar, usize> {
        let mut out = BTreeMap::new();
        for x in &self.elements {
            *out.entry(x.real_part().clone()).or_insert(0) += 1;
        }
        out
    }

    /// `g G g^-1`.
    pub fn conjugate_by(&self, g: &UnitQuaternion) -> Self {
        Self::from_sorted(
            self.elements.iter().map(|x| x.conjugate_by(g)).collect(),
            self.label.clone(),
        )
    }
}

/// Almost conjugacy in SU(2): equal multisets of real parts.
pub fn su2_almost_conjugate(g1: &FiniteQuatGroup, g2: &FiniteQuatGroup) -> bool {
    g1.real_part_multiset() == g2.real_part_multiset()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> UnitQuaternion {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_four() {
        let g = generate(&[UnitQuaternion::i()], 100).unwrap();
        assert_eq!(g.order(), 4);
        for x in ["1", "-1", "i", "-i"] {
            assert!(g.contains(&q(x)));
        }
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.size == 1));
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [q("(1+i+j+k)/2"), q("(1+i)/sqrt(2)")];
        assert!(matches!(generate(&gens, 47), Err(Error::SizeLimit { .. })));
        assert_eq!(generate(&gens, 48).unwrap().order(), 48);
    }

    #[test]
    fn from_elements_checks_closure() {
        assert!(FiniteQuatGroup::from_elements(vec![q("1"), q("i")]).is_err());
        assert!(FiniteQuatGroup::from_elements(vec![q("1"), q("-1")]).is_ok());
        assert!(FiniteQuatGroup::from_elements(vec![q("-1")]).is_err());
    }

    #[test]
    fn cayley_table_consistent() {
        let g = generate(&[q("(1+i+j+k)/2"), q("(1+i+j-k)/2")], 100).unwrap();
        let t = g.table();
        assert_eq!(g.elements()[t.identity()], UnitQuaternion::one());
        for a in 0..g.order() {
            assert_eq!(t.mul(a, t.inv(a)), t.identity());
            for b in 0..g.order() {
                assert_eq!(g.elements()[t.mul(a, b)], g.elements()[a].mul(&g.elements()[b]));
            }
        }
    }
}
