use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::Serialize;

use super::{vol_flag_quotient, vol_group, vol_homogeneous};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rational, SymReal, SymVolume};

/// Root data and metric of a compact connected Lie group.
///
/// Coordinates `e_1..e_r` on the Cartan subalgebra are fixed per datum;
/// roots are real linear forms in them (the factor `i` dropped) and
/// `gram_binv[mu][nu] = b^-1(e_mu, e_nu)`. `lattice_gram_det` is
/// `|det b^-1|` over a basis of the dual weight lattice, so that
/// `vol(T) = (2 pi)^r / sqrt(lattice_gram_det)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDatum {
    pub name: String,
    pub rank: usize,
    pub dim: u32,
    pub weyl_order: u64,
    pub positive_roots: Vec<Vec<Rational>>,
    pub gram_binv: Vec<Vec<Rational>>,
    pub lattice_gram_det: SymReal,
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn diag(n: usize, q: Rational) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q.clone() } else { Rational::zero() }).collect())
        .collect()
}

/// `b^-1(e_mu, e_nu) = 2 (delta_{mu nu} - 1/3)` on `su(3)` with `B = -(1/2) tr`.
fn su3_gram() -> Vec<Vec<Rational>> {
    vec![vec![rat(4, 3), rat(-2, 3)], vec![rat(-2, 3), rat(4, 3)]]
}

impl GroupDatum {
    /// SU(2) with `B = -(1/3) tr`, coordinate dual to `H = diag(i, -i)`.
    pub fn su2() -> Self {
        GroupDatum {
            name: "SU(2)".into(),
            rank: 1,
            dim: 3,
            weyl_order: 2,
            positive_roots: vec![ints(&[2])],
            gram_binv: vec![vec![rat(3, 2)]],
            lattice_gram_det: SymReal::rational(rat(3, 2)),
        }
    }

    /// SU(3) with `B = -(1/2) tr`, coordinates `e_j(diag(i X)) = X_j` for `j = 1, 2`.
    pub fn su3() -> Self {
        GroupDatum {
            name: "SU(3)".into(),
            rank: 2,
            dim: 8,
            weyl_order: 6,
            positive_roots: vec![ints(&[1, -1]), ints(&[1, 2]), ints(&[2, 1])],
            gram_binv: su3_gram(),
            lattice_gram_det: SymReal::rational(rat(4, 3)),
        }
    }

    /// The maximal torus of [`GroupDatum::su3`] with the restricted metric.
    pub fn su3_torus() -> Self {
        Self::torus("T(SU(3))", su3_gram(), SymReal::rational(rat(4, 3)))
    }

    /// Sp(2) with `B = -(1/2) Re tr`, coordinates `theta_1, theta_2`.
    pub fn sp2() -> Self {
        GroupDatum {
            name: "Sp(2)".into(),
            rank: 2,
            dim: 10,
            weyl_order: 8,
            positive_roots: vec![ints(&[2, 0]), ints(&[0, 2]), ints(&[1, 1]), ints(&[1, -1])],
            gram_binv: diag(2, int(2)),
            lattice_gram_det: SymReal::from_int(4),
        }
    }

    /// U(1) x Sp(1) inside Sp(2) with the restricted metric; it shares the torus of Sp(2).
    pub fn u1_sp1() -> Self {
        GroupDatum {
            name: "U(1)xSp(1)".into(),
            rank: 2,
            dim: 4,
            weyl_order: 2,
            positive_roots: vec![ints(&[0, 2])],
            gram_binv: diag(2, int(2)),
            lattice_gram_det: SymReal::from_int(4),
        }
    }

    /// Diagonal SU(2) in SU(2)^3 with the restriction of `-(1/3) tr`, so `B(Delta H, Delta H) = 2`.
    pub fn diagonal_su2() -> Self {
        GroupDatum {
            name: "Delta(SU(2))".into(),
            rank: 1,
            dim: 3,
            weyl_order: 2,
            positive_roots: vec![ints(&[2])],
            gram_binv: vec![vec![rat(1, 2)]],
            lattice_gram_det: SymReal::rational(rat(1, 2)),
        }
    }

    /// SU(2)^3 with `B = -(1/3) tr` on each factor.
    pub fn su2_cubed() -> Self {
        GroupDatum {
            name: "SU(2)^3".into(),
            rank: 3,
            dim: 9,
            weyl_order: 8,
            positive_roots: vec![ints(&[2, 0, 0]), ints(&[0, 2, 0]), ints(&[0, 0, 2])],
            gram_binv: diag(3, rat(3, 2)),
            lattice_gram_det: SymReal::rational(rat(27, 8)),
        }
    }

    pub fn torus(name: &str, gram_binv: Vec<Vec<Rational>>, lattice_gram_det: SymReal) -> Self {
        GroupDatum {
            name: name.into(),
            rank: gram_binv.len(),
            dim: gram_binv.len() as u32,
            weyl_order: 1,
            positive_roots: vec![],
            gram_binv,
            lattice_gram_det,
        }
    }

    pub fn shipped() -> Vec<GroupDatum> {
        vec![
            Self::su2(),
            Self::su3(),
            Self::su3_torus(),
            Self::sp2(),
            Self::u1_sp1(),
            Self::diagonal_su2(),
            Self::su2_cubed(),
        ]
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Vec<Rational>> {
        let neg = self.positive_roots.iter().map(|a| a.iter().map(|x| -x).collect());
        self.positive_roots.iter().cloned().chain(neg).collect()
    }

    /// Checks the structural invariants: root count, matrix shapes, symmetry.
    pub fn validate(&self) -> Result<()> {
        if self.roots().len() as u32 + self.rank as u32 != self.dim {
            return Err(Error::arg(format!("{}: root count does not match dim - rank", self.name)));
        }
        if self.positive_roots.iter().any(|a| a.len() != self.rank) {
            return Err(Error::arg(format!("{}: root of wrong length", self.name)));
        }
        super::LaplaceOp::new(self.gram_binv.clone())?;
        if self.gram_binv.len() != self.rank || self.weyl_order == 0 {
            return Err(Error::arg(format!("{}: malformed metric or Weyl group", self.name)));
        }
        Ok(())
    }
}

/// Spaces whose volume the CLI reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Space {
    S6,
    CP3,
    S3xS3,
    F12,
    SU3,
    Sp2,
    SU2cubed,
}

/// One column of the volume table for nearly Kaehler 6-manifolds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub space: Space,
    /// Volume at the normal metric `B`, when computable.
    pub computed: Option<SymVolume>,
    /// The listed coefficient of `(30/kappa)^3`.
    pub table_coefficient: SymVolume,
    pub note: &'static str,
}

impl Space {
    pub const ALL: [Space; 7] = [
        Space::S6,
        Space::CP3,
        Space::S3xS3,
        Space::F12,
        Space::SU3,
        Space::Sp2,
        Space::SU2cubed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Space::S6 => "S6",
            Space::CP3 => "CP3",
            Space::S3xS3 => "S3xS3",
            Space::F12 => "F12",
            Space::SU3 => "SU3",
            Space::Sp2 => "Sp2",
            Space::SU2cubed => "SU2cubed",
        }
    }

    pub fn dimension(self) -> u32 {
        match self {
            Space::S6 | Space::CP3 | Space::S3xS3 | Space::F12 => 6,
            Space::SU3 => 8,
            Space::Sp2 => 10,
            Space::SU2cubed => 9,
        }
    }

    /// Volume for the metric `B` fixed by the shipped group data.
    pub fn volume(self) -> Result<SymVolume> {
        match self {
            Space::S6 => Err(Error::Unsupported(
                "S6 = G2/SU(3): no G2 metric normalization is shipped".into(),
            )),
            Space::CP3 => vol_homogeneous(&GroupDatum::sp2(), &GroupDatum::u1_sp1()),
            Space::S3xS3 => vol_homogeneous(&GroupDatum::su2_cubed(), &GroupDatum::diagonal_su2()),
            Space::F12 => vol_flag_quotient(&GroupDatum::su3()),
            Space::SU3 => vol_group(&GroupDatum::su3()),
            Space::Sp2 => vol_group(&GroupDatum::sp2()),
            Space::SU2cubed => vol_group(&GroupDatum::su2_cubed()),
        }
    }

    /// Rows for S6, CP3, S3xS3 and F12 in that order.
    pub fn table_rows() -> Vec<TableRow> {
        let coeff = |s: &str| s.parse::<SymVolume>().expect("built-in volume");
        vec![
            TableRow {
                space: Space::S6,
                computed: None,
                table_coefficient: coeff("16/15*pi^3"),
                note: "not computed: no G2 data",
            },
            TableRow {
                space: Space::CP3,
                computed: Space::CP3.volume().ok(),
                table_coefficient: coeff("1/6*pi^3"),
                note: "computed vol(U(1)xSp(1)) = pi^3, so the quotient is half the listed coefficient",
            },
            TableRow {
                space: Space::S3xS3,
                computed: Space::S3xS3.volume().ok(),
                table_coefficient: coeff("8/243*pi^4*sqrt(3)"),
                note: "computed value is 4 times the listed coefficient; scalar curvature of B unverified",
            },
            TableRow {
                space: Space::F12,
                computed: Space::F12.volume().ok(),
                table_coefficient: coeff("1/2*pi^3"),
                note: "agrees",
            },
        ]
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::parse(format!(
                    "unknown space {s:?}; expected one of {}",
                    Space::ALL.map(|sp| sp.name()).join(", ")
                ))
            })
    }
}

/// Volume at scalar curvature `kappa` of a 6-manifold whose base metric has
/// scalar curvature 30: the metric scales by `30/kappa`, the volume by its cube.
pub fn rescale_to_curvature(base: &SymVolume, kappa: &Rational) -> Result<SymVolume> {
    if kappa <= &Rational::zero() {
        return Err(Error::domain("scalar curvature must be positive"));
    }
    base.rescale_metric(&(int(30) / kappa), 6)
}
