//! Embedded reference values and the reproduction report.
//!
//! Every fixture pairs a value transcribed verbatim from the reference tables
//! and proofs with the value this crate computes. A mismatch is reported, never
//! patched: the report is the record of where the two disagree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::exactnum::{int, AlgScalar, SymVolume};
use crate::goursat::{
    build_subgroup, conjugate_by_witness, cyclic_dihedral_pair, cyclic_tetrahedral_pair, spin4_almost_conjugate,
    witnesses_right,
};
use crate::quatgroups::{
    ade_group_by_name, bd4_action_of, bo_action_on_bd4, class_action, named_class_table, Polyhedral, UnitQuaternion,
};
use crate::rootvol::{delta_poly, gaussian_eval, vol_flag_quotient, vol_group, GroupDatum, LaplaceOp, RationalPoly, Space};
use crate::signcodes::{paper_groups, so6_almost_conjugate};
use crate::sunada::{admissibility, extension_type, lift_order, search_capped, tensor_scale_check, Involution};
use crate::symgroup::{mn_character, CycleType, Partition};

/// One comparison between a reference value and a computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub section: &'static str,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GoldenReport {
    pub checks: Vec<GoldenCheck>,
}

impl GoldenReport {
    fn push(&mut self, section: &'static str, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.checks.push(GoldenCheck {
            section,
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &GoldenCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Reference `(m, partition, n)` rows of admissible representations.
pub const PARTITION_ROWS: &[(u32, &str, u64)] = &[
    (6, "3,2,1", 16),
    (8, "4,1,1,1,1", 35),
    (8, "5,2,1", 64),
    (10, "2,2,1,1,1,1,1,1", 35),
    (10, "3,2,1,1,1,1,1", 160),
    (10, "7,2,1", 160),
    (10, "5,4,1", 288),
    (10, "3,2,2,2,1", 288),
    (10, "6,3,1", 315),
    (10, "6,2,1,1", 350),
    (10, "5,2,1,1,1", 448),
    (10, "3,3,2,1,1", 450),
    (10, "5,3,1,1", 567),
    (11, "3,1,1,1,1,1,1,1,1", 45),
    (11, "4,1,1,1,1,1,1,1", 120),
    (11, "8,1,1,1", 120),
    (11, "7,4", 165),
    (11, "7,1,1,1,1", 210),
    (11, "3,3,3,2", 462),
    (11, "4,4,1,1,1", 825),
    (11, "4,2,2,1,1,1", 1232),
    (11, "6,3,1,1", 1232),
    (11, "4,4,2,1", 1320),
    (11, "4,3,2,2", 1320),
    (12, "4,1,1,1,1,1,1,1,1", 165),
    (12, "3,2,1,1,1,1,1,1,1", 320),
    (12, "9,2,1", 320),
    (12, "8,1,1,1,1", 330),
    (12, "3,3,3,3", 462),
    (12, "6,1,1,1,1,1,1", 462),
    (12, "3,3,1,1,1,1,1,1", 616),
    (12, "8,2,2", 616),
    (12, "6,5,1", 1155),
    (12, "5,5,2", 1320),
    (12, "3,3,2,2,2", 1320),
    (12, "3,2,2,2,1,1,1", 1408),
];

pub const SEARCH_MS: [u32; 5] = [6, 8, 10, 11, 12];

/// Reference rows for one `m`, as `(partition, n)`.
pub fn partition_rows(m: u32) -> Vec<(Partition, u64)> {
    PARTITION_ROWS
        .iter()
        .filter(|(mm, _, _)| *mm == m)
        .map(|(_, p, n)| (p.parse().expect("built-in partition"), *n))
        .collect()
}

fn render_rows(rows: &BTreeSet<(Partition, u64)>) -> String {
    rows.iter().map(|(p, n)| format!("{p}:{n}")).collect::<Vec<_>>().join(" ")
}

/// `(coset representative, images of i, j, k)` for the action of 2O/{+-1} on 2D4.
pub const BD4_ROWS: &[(&str, [&str; 3])] = &[
    ("1", ["i", "j", "k"]),
    ("i", ["i", "-j", "-k"]),
    ("j", ["-i", "j", "-k"]),
    ("k", ["-i", "-j", "k"]),
    ("(1+i+j+k)/2", ["j", "k", "i"]),
    ("(1-i-j-k)/2", ["k", "i", "j"]),
    ("(1+i-j-k)/2", ["-j", "k", "-i"]),
    ("(1+i+j-k)/2", ["-k", "i", "-j"]),
    ("(1-i+j-k)/2", ["-j", "-k", "i"]),
    ("(1-i-j+k)/2", ["j", "-k", "-i"]),
    ("(1-i+j+k)/2", ["-k", "-i", "j"]),
    ("(1+i-j+k)/2", ["k", "-i", "-j"]),
    ("(1+i)/sqrt(2)", ["i", "k", "-j"]),
    ("(1-i)/sqrt(2)", ["i", "-k", "j"]),
    ("(j+k)/sqrt(2)", ["-i", "k", "j"]),
    ("(j-k)/sqrt(2)", ["-i", "-k", "-j"]),
    ("(i+k)/sqrt(2)", ["k", "-j", "i"]),
    ("(1-k)/sqrt(2)", ["-j", "i", "k"]),
    ("(i-k)/sqrt(2)", ["-k", "-j", "-i"]),
    ("(i+j)/sqrt(2)", ["j", "i", "-k"]),
    ("(1+j)/sqrt(2)", ["-k", "j", "i"]),
    ("(1-j)/sqrt(2)", ["k", "j", "-i"]),
    ("(1+k)/sqrt(2)", ["j", "-i", "k"]),
    ("(i-j)/sqrt(2)", ["-j", "-i", "-k"]),
];

/// `(class, size, real part)` in 2O and 2I.
pub const CLASSES_2O: &[(&str, usize, &str)] = &[
    ("1", 1, "1"),
    ("-1", 1, "-1"),
    ("s", 8, "1/2"),
    ("t", 6, "1/sqrt(2)"),
    ("s^2", 8, "-1/2"),
    ("t^2", 6, "0"),
    ("t^3", 6, "-1/sqrt(2)"),
    ("st", 12, "0"),
];

pub const CLASSES_2I: &[(&str, usize, &str)] = &[
    ("1", 1, "1"),
    ("-1", 1, "-1"),
    ("t", 12, "(1+sqrt(5))/4"),
    ("t^2", 12, "-(1-sqrt(5))/4"),
    ("t^3", 12, "(1-sqrt(5))/4"),
    ("t^4", 12, "-(1+sqrt(5))/4"),
    ("s", 20, "1/2"),
    ("s^4", 20, "-1/2"),
    ("st", 30, "0"),
];

/// `(class, image class, real part of the image)` under the outer involutions.
pub const ACTION_PHI: &[(&str, &str, &str)] = &[
    ("1", "1", "1"),
    ("-1", "-1", "-1"),
    ("s", "s", "1/2"),
    ("t", "t^3", "-1/sqrt(2)"),
    ("s^2", "s^2", "-1/2"),
    ("t^2", "t^2", "0"),
    ("t^3", "t", "1/sqrt(2)"),
    ("st", "st", "0"),
];

pub const ACTION_PSI: &[(&str, &str, &str)] = &[
    ("1", "1", "1"),
    ("-1", "-1", "-1"),
    ("t", "t^3", "(1-sqrt(5))/4"),
    ("t^2", "t^4", "-(1+sqrt(5))/4"),
    ("t^3", "t", "(1+sqrt(5))/4"),
    ("t^4", "t^2", "-(1-sqrt(5))/4"),
    ("s", "s", "1/2"),
    ("s^4", "s^4", "-1/2"),
    ("st", "st", "0"),
];

fn scalar(s: &str) -> AlgScalar {
    s.parse().expect("built-in scalar")
}

fn quat(s: &str) -> UnitQuaternion {
    s.parse().expect("built-in quaternion")
}

fn volume(num: &str, den: &str) -> SymVolume {
    let n: SymVolume = num.parse().expect("built-in volume");
    let d: SymVolume = den.parse().expect("built-in volume");
    n.div(&d).expect("built-in volume")
}

fn partitions_section(r: &mut GoldenReport, max_m: u32) -> Result<()> {
    const S: &str = "partitions";
    for m in SEARCH_MS {
        let expected: BTreeSet<(Partition, u64)> = partition_rows(m).into_iter().collect();
        let actual: BTreeSet<(Partition, u64)> = search_capped(m, max_m)?
            .into_iter()
            .map(|row| (row.partition, row.n))
            .collect();
        r.push(S, format!("search m={m}"), render_rows(&expected), render_rows(&actual));
    }
    for (m, p, n) in PARTITION_ROWS {
        let lambda: Partition = p.parse()?;
        let rep = admissibility(&lambda)?;
        r.push(
            S,
            format!("row {lambda} m={m}"),
            format!("admissible n={n}"),
            format!("{} n={}", if rep.admissible { "admissible" } else { "rejected" }, rep.n),
        );
    }
    let id6: CycleType = "1,1,1,1,1,1".parse()?;
    r.push(S, "chi_(3,2,1)(1)", 16, mn_character(&"3,2,1".parse()?, &id6)?);
    let hook: Partition = "4,1,1,1,1".parse()?;
    r.push(S, "lift order (4,1,1,1,1) transposition", 2, lift_order(&hook, Involution::Transposition)?);
    r.push(S, "extension type (4,1,1,1,1)", "trivial", extension_type(&hook)?.as_str());
    let t = tensor_scale_check(&hook, 3)?;
    r.push(S, "(4,1,1,1,1) tensor 3", "admissible n=105", format!("{} n={}", if t.admissible { "admissible" } else { "rejected" }, t.n));
    Ok(())
}

fn ade_section(r: &mut GoldenReport) -> Result<()> {
    const S: &str = "ade";
    for (name, order) in [("2T", 24), ("2O", 48), ("2I", 120)] {
        r.push(S, format!("|{name}|"), order, ade_group_by_name(name)?.order());
    }
    let bd4: BTreeSet<UnitQuaternion> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(quat).into_iter().collect();
    let got: BTreeSet<UnitQuaternion> = ade_group_by_name("2D4")?.elements().iter().cloned().collect();
    r.push(S, "2D4 elements", bd4.len(), if got == bd4 { got.len() } else { 0 });

    for (kind, table) in [(Polyhedral::Octahedral, CLASSES_2O), (Polyhedral::Icosahedral, CLASSES_2I)] {
        let computed = named_class_table(kind)?;
        let label = kind.label();
        for (name, size, re) in table {
            let got = computed.iter().find(|c| c.name == *name);
            r.push(
                S,
                format!("{label} class {name}"),
                format!("size={size} re={}", scalar(re)),
                got.map_or("missing".into(), |c| format!("size={} re={}", c.size, c.real_part)),
            );
        }
        let total: usize = table.iter().map(|(_, s, _)| s).sum();
        r.push(S, format!("{label} class count"), format!("{} classes, {total} elements", table.len()), {
            let all = ade_group_by_name(&label.to_string())?.conjugacy_classes();
            format!("{} classes, {} elements", all.len(), all.iter().map(|c| c.size).sum::<usize>())
        });
    }

    for (kind, table) in [(Polyhedral::Octahedral, ACTION_PHI), (Polyhedral::Icosahedral, ACTION_PSI)] {
        let computed = class_action(kind)?;
        for (c, img, re) in table {
            let got = computed.iter().find(|row| row.class == *c);
            r.push(
                S,
                format!("{} outer action on C({c})", kind.label()),
                format!("C({img}) re={}", scalar(re)),
                got.map_or("missing".into(), |row| format!("C({}) re={}", row.image_class, row.real_part_of_image)),
            );
        }
    }

    let rows = bo_action_on_bd4()?;
    let mut reference_cosets = BTreeSet::new();
    for (rep, imgs) in BD4_ROWS {
        let q = quat(rep);
        reference_cosets.insert(std::cmp::min(q.clone(), q.neg()));
        let expected = imgs.map(quat);
        let actual = bd4_action_of(&q);
        let show = |v: &[UnitQuaternion; 3]| format!("({}, {}, {})", v[0], v[1], v[2]);
        r.push(S, format!("2D4 action of [{rep}]"), show(&expected), show(&actual));
    }
    let computed_cosets: BTreeSet<UnitQuaternion> = rows.iter().map(|row| row.coset.clone()).collect();
    r.push(
        S,
        "2O/Z2 cosets in the 2D4 action",
        format!("{0} cosets, {0} shared", BD4_ROWS.len()),
        format!("{} cosets, {} shared", computed_cosets.len(), computed_cosets.intersection(&reference_cosets).count()),
    );
    Ok(())
}

fn spin4_section(r: &mut GoldenReport) -> Result<()> {
    const S: &str = "spin4";
    let (q1, q2) = cyclic_tetrahedral_pair()?;
    let (c1, c2) = (build_subgroup(&q1), build_subgroup(&q2));
    r.push(S, "(Z3,1,2T,2D4) subgroup order", 24, c1.order());
    r.push(S, "(Z3,1,2T,2D4) pair almost conjugate", true, spin4_almost_conjugate(&c1, &c2));
    let w = conjugate_by_witness(&c1, &c2, &witnesses_right(&ade_group_by_name("2O")?));
    r.push(S, "(Z3,1,2T,2D4) witness in 1x2O", true, w.is_some());
    let (d1, d2) = cyclic_dihedral_pair()?;
    let (e1, e2) = (build_subgroup(&d1), build_subgroup(&d2));
    r.push(S, "(Z4,1,2D6,Z3) pair almost conjugate", false, spin4_almost_conjugate(&e1, &e2));
    Ok(())
}

fn codes_section(r: &mut GoldenReport) -> Result<()> {
    const S: &str = "codes";
    let (g1, g2) = paper_groups();
    let show = |g: &crate::signcodes::SignCodeGroup| {
        g.weight_enumerator().iter().map(|(w, c)| format!("{w}:{c}")).collect::<Vec<_>>().join(",")
    };
    r.push(S, "first group weight enumerator", "0:1,2:3,4:3,6:1", show(&g1));
    r.push(S, "second group weight enumerator", "0:1,2:3,4:3,6:1", show(&g2));
    r.push(S, "almost conjugate in SO(6)", true, so6_almost_conjugate(&g1, &g2)?);
    Ok(())
}

fn volumes_section(r: &mut GoldenReport) -> Result<()> {
    const S: &str = "volumes";
    let su3 = GroupDatum::su3();
    let sp2 = GroupDatum::sp2();
    let diag = GroupDatum::diagonal_su2();
    r.push(
        S,
        "delta su(3)",
        "4*e1^6 + 12*e1^5*e2 - 3*e1^4*e2^2 - 26*e1^3*e2^3 - 3*e1^2*e2^4 + 12*e1*e2^5 + 4*e2^6",
        delta_poly(&su3),
    );
    let t1 = RationalPoly::monomial(&[1, 0], int(1));
    let t2 = RationalPoly::monomial(&[0, 1], int(1));
    let sp2_ref = t1
        .pow(2)
        .mul(&t2.pow(2))
        .mul(&t1.pow(2).add(&t2.pow(2).scale(&int(-1))).pow(2))
        .scale(&int(16));
    r.push(S, "delta sp(2)", sp2_ref, delta_poly(&sp2));
    r.push(S, "delta diagonal su(2)", "4*e1^2", delta_poly(&diag));
    r.push(S, "gaussian su(3)", 12, gaussian_eval(&delta_poly(&su3), &LaplaceOp::of(&su3)));
    r.push(S, "gaussian sp(2)", 192, gaussian_eval(&delta_poly(&sp2), &LaplaceOp::of(&sp2)));

    let third = crate::exactnum::rat(1, 3);
    let kd = |a: usize, b: usize| if a == b { int(1) } else { int(0) };
    for mu in 0..2 {
        for nu in 0..2 {
            r.push(S, format!("su(3) b^-1(e{}, e{})", mu + 1, nu + 1), int(2) * (kd(mu, nu) - &third), &su3.gram_binv[mu][nu]);
            r.push(S, format!("sp(2) b^-1(theta{}, theta{})", mu + 1, nu + 1), int(2) * kd(mu, nu), &sp2.gram_binv[mu][nu]);
        }
    }
    r.push(S, "diagonal su(2) b^-1(x, x)", crate::exactnum::rat(1, 2), &diag.gram_binv[0][0]);

    let pin = |r: &mut GoldenReport, name: &str, expected: SymVolume, actual: SymVolume| {
        r.push(S, name, expected.paper_form(), actual.paper_form());
    };
    pin(r, "vol F(1,2)", volume("pi^3", "2"), vol_flag_quotient(&su3)?);
    pin(r, "vol Sp(2)", volume("pi^6", "12"), vol_group(&sp2)?);
    pin(r, "vol U(1)xSp(1)", volume("pi^3", "2"), vol_group(&GroupDatum::u1_sp1())?);
    pin(r, "vol CP3", volume("pi^3", "6"), Space::CP3.volume()?);
    pin(r, "vol Delta(SU(2))", volume("32*sqrt(2)*pi^2", "1"), vol_group(&diag)?);
    let cube = vol_group(&GroupDatum::su2_cubed())?;
    let root = cube.odd_root(3).unwrap_or_else(|| cube.clone());
    pin(r, "vol SU(2)^3 cube root", volume("8*sqrt(2)*pi^2", "3*sqrt(3)"), root);
    pin(r, "vol S3xS3", volume("32*pi^4", "81*sqrt(3)"), Space::S3xS3.volume()?);
    Ok(())
}

/// Runs every fixture; `max_m` caps the partition searches.
pub fn run(max_m: u32) -> Result<GoldenReport> {
    let mut r = GoldenReport::default();
    partitions_section(&mut r, max_m)?;
    ade_section(&mut r)?;
    spin4_section(&mut r)?;
    codes_section(&mut r)?;
    volumes_section(&mut r)?;
    Ok(r)
}
