use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::group::{generate, FiniteQuatGroup, DEFAULT_GROUP_CAP};
use super::quaternion::UnitQuaternion;
use crate::error::{Error, Result};
use crate::exactnum::AlgScalar;

/// Labels of the finite subgroups of SU(2).
///
/// `BinaryDihedral(m)` is `2D_m`, of order `2m`; `m` is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeLabel {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

/// Orders `n` for which `Z_n` is realised here: exactly those with
/// `cos(2 pi / n)` and a matching axis inside Q(sqrt2, sqrt5).
pub const REALIZABLE_CYCLIC: [u32; 8] = [1, 2, 3, 4, 5, 6, 8, 10];

/// Subscripts `m` for which `2D_m` is realised.
pub const REALIZABLE_DIHEDRAL: [u32; 5] = [2, 4, 6, 8, 10];

impl AdeLabel {
    pub fn order(&self) -> usize {
        match *self {
            AdeLabel::Cyclic(n) => n as usize,
            AdeLabel::BinaryDihedral(m) => 2 * m as usize,
            AdeLabel::BinaryTetrahedral => 24,
            AdeLabel::BinaryOctahedral => 48,
            AdeLabel::BinaryIcosahedral => 120,
        }
    }

    /// All labels that [`ade_group`] can build.
    pub fn realizable() -> Vec<AdeLabel> {
        let mut out: Vec<AdeLabel> = REALIZABLE_CYCLIC.iter().map(|&n| AdeLabel::Cyclic(n)).collect();
        out.extend(REALIZABLE_DIHEDRAL.iter().map(|&m| AdeLabel::BinaryDihedral(m)));
        out.extend([
            AdeLabel::BinaryTetrahedral,
            AdeLabel::BinaryOctahedral,
            AdeLabel::BinaryIcosahedral,
        ]);
        out
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeLabel::Cyclic(n) => write!(f, "Z{n}"),
            AdeLabel::BinaryDihedral(m) => write!(f, "2D{m}"),
            AdeLabel::BinaryTetrahedral => f.write_str("2T"),
            AdeLabel::BinaryOctahedral => f.write_str("2O"),
            AdeLabel::BinaryIcosahedral => f.write_str("2I"),
        }
    }
}

/// Accepts `Z8`, `Z_8`, `2D6`, `2D_6`, `2T`, `2O`, `2I`.
impl FromStr for AdeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('_', "");
        let num = |rest: &str| {
            rest.parse::<u32>()
                .map_err(|_| Error::arg(format!("unknown ADE label {s:?}")))
        };
        match t.as_str() {
            "2T" => Ok(AdeLabel::BinaryTetrahedral),
            "2O" => Ok(AdeLabel::BinaryOctahedral),
            "2I" => Ok(AdeLabel::BinaryIcosahedral),
            _ => {
                if let Some(rest) = t.strip_prefix("2D") {
                    let m = num(rest)?;
                    if m == 0 || m % 2 == 1 {
                        return Err(Error::arg(format!("2D_m needs even m > 0, got {s:?}")));
                    }
                    Ok(AdeLabel::BinaryDihedral(m))
                } else if let Some(rest) = t.strip_prefix('Z') {
                    let n = num(rest)?;
                    if n == 0 {
                        return Err(Error::arg("Z_0 is not a group"));
                    }
                    Ok(AdeLabel::Cyclic(n))
                } else {
                    Err(Error::arg(format!("unknown ADE label {s:?}")))
                }
            }
        }
    }
}

impl Serialize for AdeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn q(s: &str) -> UnitQuaternion {
    s.parse().expect("built-in quaternion literal")
}

/// `(1 + i + j + k)/2`, order 6; the generator `s` of 2O and 2I.
pub fn s_generator() -> UnitQuaternion {
    q("(1+i+j+k)/2")
}

/// `(1 + i)/sqrt(2) = e^(i pi/4)`, the generator `t` of 2O.
pub fn t_octahedral() -> UnitQuaternion {
    q("(1+i)/sqrt(2)")
}

/// `(phi + phi^-1 i + j)/2`, order 10; the generator `t` of 2I.
pub fn t_icosahedral() -> UnitQuaternion {
    let half = AlgScalar::from_rational(crate::exactnum::rat(1, 2));
    UnitQuaternion::new(
        &AlgScalar::phi() * &half,
        &AlgScalar::inv_phi() * &half,
        half,
        AlgScalar::zero(),
    )
    .expect("unit")
}

/// Generators of the standard copy.
pub fn generators(label: AdeLabel) -> Result<Vec<UnitQuaternion>> {
    let unsupported = || {
        Error::Unsupported(format!(
            "{label} is not realisable with coordinates in Q(sqrt2, sqrt5)"
        ))
    };
    Ok(match label {
        AdeLabel::Cyclic(n) => match n {
            1 => vec![],
            2 => vec![UnitQuaternion::minus_one()],
            3 => vec![q("(-1+i+j+k)/2")],
            4 => vec![UnitQuaternion::i()],
            5 => vec![t_icosahedral().pow(2)],
            6 => vec![s_generator()],
            8 => vec![t_octahedral()],
            10 => vec![t_icosahedral()],
            _ => return Err(unsupported()),
        },
        AdeLabel::BinaryDihedral(m) => match m {
            2 => vec![UnitQuaternion::minus_one(), UnitQuaternion::j()],
            4 => vec![UnitQuaternion::i(), UnitQuaternion::j()],
            6 => vec![s_generator(), q("(i-j)/sqrt(2)")],
            8 => vec![t_octahedral(), UnitQuaternion::j()],
            10 => vec![t_icosahedral(), UnitQuaternion::k()],
            _ => return Err(unsupported()),
        },
        AdeLabel::BinaryTetrahedral => vec![q("(1+i)(1+j)/2"), q("(1+j)(1+i)/2")],
        AdeLabel::BinaryOctahedral => vec![s_generator(), t_octahedral()],
        AdeLabel::BinaryIcosahedral => vec![s_generator(), t_icosahedral()],
    })
}

/// The standard copy of the labelled group.
pub fn ade_group(label: AdeLabel) -> Result<FiniteQuatGroup> {
    let g = generate(&generators(label)?, DEFAULT_GROUP_CAP)?;
    debug_assert_eq!(g.order(), label.order(), "{label}");
    if g.order() != label.order() {
        return Err(Error::domain(format!(
            "generators of {label} produced order {}",
            g.order()
        )));
    }
    Ok(g.with_label(label.to_string()))
}

pub fn ade_group_by_name(name: &str) -> Result<FiniteQuatGroup> {
    ade_group(name.parse()?)
}

/// The two groups carrying a named outer automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polyhedral {
    Octahedral,
    Icosahedral,
}

impl Polyhedral {
    pub fn label(self) -> AdeLabel {
        match self {
            Polyhedral::Octahedral => AdeLabel::BinaryOctahedral,
            Polyhedral::Icosahedral => AdeLabel::BinaryIcosahedral,
        }
    }

    pub fn from_label(label: AdeLabel) -> Result<Self> {
        match label {
            AdeLabel::BinaryOctahedral => Ok(Polyhedral::Octahedral),
            AdeLabel::BinaryIcosahedral => Ok(Polyhedral::Icosahedral),
            other => Err(Error::arg(format!("no named outer automorphism for {other}"))),
        }
    }

    /// `(s, t)`.
    pub fn generators(self) -> (UnitQuaternion, UnitQuaternion) {
        match self {
            Polyhedral::Octahedral => (s_generator(), t_octahedral()),
            Polyhedral::Icosahedral => (s_generator(), t_icosahedral()),
        }
    }

    /// Class representatives as words in `s` and `t`, in table order.
    pub fn named_representatives(self) -> Vec<(&'static str, UnitQuaternion)> {
        let (s, t) = self.generators();
        let one = UnitQuaternion::one();
        let minus = UnitQuaternion::minus_one();
        match self {
            Polyhedral::Octahedral => vec![
                ("1", one),
                ("-1", minus),
                ("s", s.clone()),
                ("t", t.clone()),
                ("s^2", s.pow(2)),
                ("t^2", t.pow(2)),
                ("t^3", t.pow(3)),
                ("st", s.mul(&t)),
            ],
            Polyhedral::Icosahedral => vec![
                ("1", one),
                ("-1", minus),
                ("t", t.clone()),
                ("t^2", t.pow(2)),
                ("t^3", t.pow(3)),
                ("t^4", t.pow(4)),
                ("s", s.clone()),
                ("s^4", s.pow(4)),
                ("st", s.mul(&t)),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedClass {
    pub name: &'static str,
    pub representative: UnitQuaternion,
    pub size: usize,
    pub real_part: AlgScalar,
}

/// Classes of 2O or 2I labelled by the words of [`Polyhedral::named_representatives`].
/// Fails if two names fall in one class or a class is unnamed.
pub fn named_class_table(kind: Polyhedral) -> Result<Vec<NamedClass>> {
    let g = ade_group(kind.label())?;
    let classes = g.conjugacy_classes();
    let mut used = vec![false; classes.len()];
    let mut out = Vec::new();
    for (name, x) in kind.named_representatives() {
        let idx = classes
            .iter()
            .position(|c| c.members.binary_search(&x).is_ok())
            .ok_or_else(|| Error::domain(format!("{name} is not in {}", kind.label())))?;
        if std::mem::replace(&mut used[idx], true) {
            return Err(Error::domain(format!("{name} repeats a class")));
        }
        out.push(NamedClass {
            name,
            representative: x.clone(),
            size: classes[idx].size,
            real_part: x.real_part().clone(),
        });
    }
    if used.iter().any(|u| !u) {
        return Err(Error::domain("some class has no name"));
    }
    Ok(out)
}
