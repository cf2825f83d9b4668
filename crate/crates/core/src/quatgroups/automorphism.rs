use std::collections::VecDeque;

use serde::Serialize;

use super::ade::{ade_group, named_class_table, AdeLabel, Polyhedral};
use super::group::FiniteQuatGroup;
use super::quaternion::UnitQuaternion;
use crate::error::{Error, Result};
use crate::exactnum::AlgScalar;

/// The named outer automorphism of 2O (`s -> s`, `t -> -t`) or of 2I
/// (`s -> s`, `t -> (-phi^-1 - phi i + k)/2`), tabulated on all elements.
#[derive(Debug)]
pub struct OuterAutomorphism {
    kind: Polyhedral,
    group: FiniteQuatGroup,
    image: Vec<usize>,
}

fn generator_images(kind: Polyhedral) -> (UnitQuaternion, UnitQuaternion) {
    let (s, t) = kind.generators();
    match kind {
        Polyhedral::Octahedral => (s, t.neg()),
        Polyhedral::Icosahedral => {
            let half = AlgScalar::from_rational(crate::exactnum::rat(1, 2));
            let t2 = UnitQuaternion::new(
                -(&AlgScalar::inv_phi() * &half),
                -(&AlgScalar::phi() * &half),
                AlgScalar::zero(),
                half,
            )
            .expect("unit");
            (s, t2)
        }
    }
}

impl OuterAutomorphism {
    /// Extends the generator images along shortest words and checks that the
    /// result is a bijective homomorphism.
    pub fn new(kind: Polyhedral) -> Result<Self> {
        let group = ade_group(kind.label())?;
        let (s, t) = kind.generators();
        let (s_img, t_img) = generator_images(kind);
        let gens = [(s, s_img), (t, t_img)];
        let n = group.order();
        let idx = |x: &UnitQuaternion| {
            group
                .index_of(x)
                .ok_or_else(|| Error::domain(format!("{x} is not in {}", kind.label())))
        };
        let mut image: Vec<Option<usize>> = vec![None; n];
        let one = group.table().identity();
        image[one] = Some(one);
        let mut queue = VecDeque::from([one]);
        let gen_idx: Vec<(usize, usize)> = gens
            .iter()
            .map(|(g, h)| Ok((idx(g)?, idx(h)?)))
            .collect::<Result<_>>()?;
        let t = group.table();
        while let Some(x) = queue.pop_front() {
            for &(g, h) in &gen_idx {
                let y = t.mul(x, g);
                if image[y].is_none() {
                    image[y] = Some(t.mul(image[x].expect("visited"), h));
                    queue.push_back(y);
                }
            }
        }
        let image: Vec<usize> = image
            .into_iter()
            .map(|v| v.ok_or_else(|| Error::domain("generators do not generate the group")))
            .collect::<Result<_>>()?;
        let auto = OuterAutomorphism { kind, group, image };
        if !auto.is_automorphism() {
            return Err(Error::domain(format!(
                "generator images do not define an automorphism of {}",
                kind.label()
            )));
        }
        Ok(auto)
    }

    /// Multiplicative on all pairs and bijective.
    pub fn is_automorphism(&self) -> bool {
        let t = self.group.table();
        let n = self.group.order();
        let mut hit = vec![false; n];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.iter().all(|&h| h)
            && (0..n).all(|a| (0..n).all(|b| self.image[t.mul(a, b)] == t.mul(self.image[a], self.image[b])))
    }

    pub fn group(&self) -> &FiniteQuatGroup {
        &self.group
    }

    pub fn apply(&self, x: &UnitQuaternion) -> Result<UnitQuaternion> {
        let i = self
            .group
            .index_of(x)
            .ok_or_else(|| Error::arg(format!("{x} is not in {}", self.kind.label())))?;
        Ok(self.group.elements()[self.image[i]].clone())
    }

    /// Whether the map is conjugation by some element of the group.
    pub fn is_inner(&self) -> bool {
        let els = self.group.elements();
        els.iter().any(|g| {
            els.iter()
                .enumerate()
                .all(|(i, x)| x.conjugate_by(g) == els[self.image[i]])
        })
    }

    /// For each named class `C(x)`, the named class of `phi(x)` and `Real(phi(x))`.
    pub fn class_action(&self) -> Result<Vec<ClassActionRow>> {
        let table = named_class_table(self.kind)?;
        let classes = self.group.conjugacy_classes();
        let class_idx = |x: &UnitQuaternion| {
            classes
                .iter()
                .position(|c| c.members.binary_search(x).is_ok())
                .expect("element lies in some class")
        };
        let name_of = |x: &UnitQuaternion| {
            let ci = class_idx(x);
            table
                .iter()
                .find(|nc| class_idx(&nc.representative) == ci)
                .map(|nc| nc.name)
                .expect("every class is named")
        };
        table
            .iter()
            .map(|nc| {
                let img = self.apply(&nc.representative)?;
                Ok(ClassActionRow {
                    class: nc.name,
                    image_class: name_of(&img),
                    real_part_of_image: img.real_part().clone(),
                })
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassActionRow {
    pub class: &'static str,
    pub image_class: &'static str,
    pub real_part_of_image: AlgScalar,
}

pub fn outer_action(kind: Polyhedral, x: &UnitQuaternion) -> Result<UnitQuaternion> {
    OuterAutomorphism::new(kind)?.apply(x)
}

pub fn class_action(kind: Polyhedral) -> Result<Vec<ClassActionRow>> {
    OuterAutomorphism::new(kind)?.class_action()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bd4ActionRow {
    /// The smaller of `q` and `-q`.
    pub coset: UnitQuaternion,
    /// `(q i q^-1, q j q^-1, q k q^-1)`.
    pub images: [UnitQuaternion; 3],
}

/// Conjugation action of `q` on the generators `i, j, k` of 2D4.
pub fn bd4_action_of(q: &UnitQuaternion) -> [UnitQuaternion; 3] {
    [UnitQuaternion::i(), UnitQuaternion::j(), UnitQuaternion::k()].map(|x| x.conjugate_by(q))
}

/// The action of each of the 24 cosets of 2O / {+-1} on 2D4.
pub fn bo_action_on_bd4() -> Result<Vec<Bd4ActionRow>> {
    let g = ade_group(AdeLabel::BinaryOctahedral)?;
    let mut rows: Vec<Bd4ActionRow> = g
        .elements()
        .iter()
        .filter(|x| **x <= x.neg())
        .map(|x| Bd4ActionRow {
            coset: x.clone(),
            images: bd4_action_of(x),
        })
        .collect();
    rows.sort_by(|a, b| a.coset.cmp(&b.coset));
    Ok(rows)
}
