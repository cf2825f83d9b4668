//! Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any fails.
//!
//! Run with `cargo test -p sunada-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::{BigInt, Signed, Zero};
use sunada_core::exactnum::{int, rat, SymVolume};
use sunada_core::golden::{self, partition_rows, SEARCH_MS};
use sunada_core::goursat::{
    build_subgroup, conjugate_by_witness, cyclic_dihedral_pair, cyclic_tetrahedral_pair, quintuple_of,
    spin4_almost_conjugate, witnesses_right, QuatPair, Spin4Subgroup,
};
use sunada_core::quatgroups::ade_group_by_name;
use sunada_core::rootvol::{delta_poly, gaussian_eval, vol_flag_quotient, vol_group, GroupDatum, LaplaceOp, RationalPoly, Space};
use sunada_core::signcodes::{paper_groups, permutation_search, so6_almost_conjugate};
use sunada_core::sunada::{extension_type, multiplicity_m, search, tensor_scale_check, ExtensionType};
use sunada_core::symgroup::{dimension, enumerate_partitions, factorial, mn_character, CycleType, Partition};

struct Outcome {
    pass: bool,
    detail: String,
}

/// Accumulates sub-checks; the criterion passes iff all do.
#[derive(Default)]
struct Checks {
    failed: Vec<String>,
    passed: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(what.into());
        }
    }

    fn outcome(self, elapsed: Duration, budget: Duration) -> Outcome {
        let mut failed = self.failed;
        if elapsed > budget {
            failed.push(format!("took {elapsed:?}, budget {budget:?}"));
        }
        let detail = if failed.is_empty() {
            format!("{} checks in {elapsed:.2?}", self.passed)
        } else {
            format!("{} passed, failed: {}", self.passed, failed.join("; "))
        };
        Outcome {
            pass: failed.is_empty(),
            detail,
        }
    }
}

fn c1_partition_table() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let expected_counts = [(6, 1), (8, 2), (10, 10), (11, 11), (12, 13)];
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    pool.install(|| {
        for m in SEARCH_MS {
            let expected: BTreeSet<(Partition, u64)> = partition_rows(m).into_iter().collect();
            let got: BTreeSet<(Partition, u64)> =
                search(m).unwrap().into_iter().map(|r| (r.partition, r.n)).collect();
            let want = expected_counts.iter().find(|(mm, _)| *mm == m).unwrap().1;
            c.check(got.len() == want, format!("m={m}: {} rows, expected {want}", got.len()));
            let extra: Vec<String> = got.difference(&expected).map(|(p, n)| format!("{p}:{n}")).collect();
            let missing: Vec<String> = expected.difference(&got).map(|(p, n)| format!("{p}:{n}")).collect();
            c.check(
                extra.is_empty() && missing.is_empty(),
                format!("m={m}: extra [{}] missing [{}]", extra.join(" "), missing.join(" ")),
            );
        }
        let m12: BTreeSet<(Partition, u64)> = search(12).unwrap().into_iter().map(|r| (r.partition, r.n)).collect();
        c.check(m12.contains(&("6,5,1".parse().unwrap(), 1155)), "m=12 lacks (6,5,1):1155");
        c.check(m12.contains(&("3,2,2,2,1,1,1".parse().unwrap(), 1408)), "m=12 lacks (3,2,2,2,1,1,1):1408");
    });
    c.outcome(start.elapsed(), Duration::from_secs(30))
}

fn c2_character_engine() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    for m in 1..=8u32 {
        let parts = enumerate_partitions(m).unwrap();
        let classes: Vec<CycleType> = parts.iter().cloned().map(CycleType::new).collect();
        let sum: BigInt = parts.iter().map(|p| dimension(p).pow(2)).sum();
        c.check(sum == factorial(m), format!("m={m}: sum of dim^2 = {sum}"));
        let rows: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|p| classes.iter().map(|z| mn_character(p, z).unwrap()).collect())
            .collect();
        for (a, ra) in rows.iter().enumerate() {
            for (b, rb) in rows.iter().enumerate() {
                let ip: BigInt = classes.iter().zip(ra.iter().zip(rb)).map(|(z, (x, y))| z.class_size() * x * y).sum();
                let want = if a == b { factorial(m) } else { BigInt::zero() };
                c.check(ip == want, format!("m={m}: <{}, {}> = {ip}", parts[a], parts[b]));
            }
        }
    }
    for m in 1..=5 {
        for ((lambda, mu), v) in common::oracle_table(m) {
            let got = mn_character(
                &Partition::new(lambda.clone()).unwrap(),
                &CycleType::new(Partition::new(mu.clone()).unwrap()),
            )
            .unwrap();
            c.check(got == BigInt::from(v), format!("chi_{lambda:?}({mu:?}) = {got}, oracle {v}"));
        }
    }
    c.outcome(start.elapsed(), Duration::from_secs(60))
}

fn c3_gaussian() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let su3 = GroupDatum::su3();
    let sp2 = GroupDatum::sp2();
    let e_su3 = gaussian_eval(&delta_poly(&su3), &LaplaceOp::of(&su3));
    let e_sp2 = gaussian_eval(&delta_poly(&sp2), &LaplaceOp::of(&sp2));
    c.check(e_su3 == int(12), format!("su(3): {e_su3}"));
    c.check(e_sp2 == int(192), format!("sp(2): {e_sp2}"));
    for beta in [rat(1, 2), rat(3, 2), int(2)] {
        let l = LaplaceOp::new(vec![vec![beta.clone()]]).unwrap();
        let x = RationalPoly::linear(&[int(1)]);
        for k in 0..=6u32 {
            let got = gaussian_eval(&x.pow(2 * k), &l);
            let fact = |n: u32| (1..=n as i64).fold(int(1), |a, b| a * int(b));
            let want = fact(2 * k) * beta.pow(k as i32) / (int(4i64.pow(k)) * fact(k));
            c.check(got == want, format!("rank 1, beta={beta}, k={k}: {got} vs {want}"));
        }
    }
    c.outcome(start.elapsed(), Duration::from_secs(5))
}

fn c4_volumes() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let v = |num: &str, den: &str| -> SymVolume {
        num.parse::<SymVolume>().unwrap().div(&den.parse().unwrap()).unwrap()
    };
    let cube = vol_group(&GroupDatum::su2_cubed()).unwrap();
    let pins: Vec<(&str, SymVolume, Option<SymVolume>)> = vec![
        ("F(1,2)", v("pi^3", "2"), vol_flag_quotient(&GroupDatum::su3()).ok()),
        ("Sp(2)", v("pi^6", "12"), vol_group(&GroupDatum::sp2()).ok()),
        ("U(1)xSp(1)", v("pi^3", "2"), vol_group(&GroupDatum::u1_sp1()).ok()),
        ("CP3", v("pi^3", "6"), Space::CP3.volume().ok()),
        ("Delta(SU(2))", v("32*sqrt(2)*pi^2", "1"), vol_group(&GroupDatum::diagonal_su2()).ok()),
        ("SU(2)^3 cube root", v("8*sqrt(2)*pi^2", "3*sqrt(3)"), cube.odd_root(3)),
        ("S3xS3", v("32*pi^4", "81*sqrt(3)"), Space::S3xS3.volume().ok()),
    ];
    for (name, want, got) in pins {
        let shown = got.as_ref().map_or("none".to_string(), |g| g.paper_form());
        c.check(got.as_ref() == Some(&want), format!("{name} = {shown}, expected {}", want.paper_form()));
    }
    for s in [rat(1, 2), int(2), rat(30, 7)] {
        let base = v("32*pi^4", "81*sqrt(3)");
        let scaled = base.rescale_metric(&s, 6).unwrap();
        c.check(scaled == base.scale(&s.pow(3)), format!("rescale by {s}"));
    }
    c.outcome(start.elapsed(), Duration::from_secs(5))
}

fn c5_ade_tables() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let report = golden::run(12).unwrap();
    for chk in report.checks.iter().filter(|k| k.section == "ade") {
        c.check(chk.pass, format!("{}: {} vs {}", chk.name, chk.actual, chk.expected));
    }
    let bd4_rows = report.checks.iter().filter(|k| k.name.starts_with("2D4 action of")).count();
    c.check(bd4_rows == 24, format!("{bd4_rows} rows of the 2D4 action"));
    c.outcome(start.elapsed(), Duration::from_secs(30))
}

fn c6_spin4() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let (q1, q2) = cyclic_tetrahedral_pair().unwrap();
    let (g1, g2) = (build_subgroup(&q1), build_subgroup(&q2));
    c.check(spin4_almost_conjugate(&g1, &g2), "(Z3,1,2T,2D4) pair not almost conjugate");
    let w = conjugate_by_witness(&g1, &g2, &witnesses_right(&ade_group_by_name("2O").unwrap()));
    c.check(w.is_some(), "no witness in 1 x 2O for the (Z3,1,2T,2D4) pair");
    let (d1, d2) = cyclic_dihedral_pair().unwrap();
    let (h1, h2) = (build_subgroup(&d1), build_subgroup(&d2));
    c.check(
        !spin4_almost_conjugate(&h1, &h2),
        "(Z4,1,2D6,Z3) pair with k=k'=1 is almost conjugate (the two isomorphisms Z4 -> 2D6/Z3 give conjugate groups)",
    );
    let t = ade_group_by_name("2T").unwrap();
    let table = t.table();
    let family = common::random_product_subgroups(24, &|a, b| table.mul(a, b), table.identity(), 400, 96, 0x5eed);
    c.check(family.len() >= 30, format!("only {} subgroups enumerated", family.len()));
    for idx in &family {
        let pairs: Vec<QuatPair> = idx
            .iter()
            .map(|&(a, b)| QuatPair::new(t.elements()[a].clone(), t.elements()[b].clone()))
            .collect();
        let g = Spin4Subgroup::from_elements(pairs).unwrap();
        let ok = quintuple_of(&g).map(|q| build_subgroup(&q) == g).unwrap_or(false);
        c.check(ok, format!("round trip fails on a subgroup of order {}", g.order()));
    }
    c.outcome(start.elapsed(), Duration::from_secs(60))
}

fn c7_sign_codes() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let (g1, g2) = paper_groups();
    let want = std::collections::BTreeMap::from([(0, 1), (2, 3), (4, 3), (6, 1)]);
    c.check(g1.weight_enumerator() == want, "first weight enumerator");
    c.check(g2.weight_enumerator() == want, "second weight enumerator");
    c.check(so6_almost_conjugate(&g1, &g2).unwrap(), "not almost conjugate");
    let s = permutation_search(&g1, &g2);
    c.check(s.witness.is_none(), format!("witness {:?}", s.witness));
    c.check(s.permutations_tried == 720, format!("{} permutations tried", s.permutations_tried));
    c.outcome(start.elapsed(), Duration::from_secs(1))
}

fn c8_consistency() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    for m in 4..=12u32 {
        let rows = search(m).unwrap();
        let odd: Vec<CycleType> = enumerate_partitions(m)
            .unwrap()
            .into_iter()
            .map(CycleType::new)
            .filter(|z| z.is_odd())
            .collect();
        for r in &rows {
            let et = extension_type(&r.partition);
            c.check(matches!(et, Ok(ExtensionType::Trivial)), format!("{} extension {et:?}", r.partition));
            for z in &odd {
                let mz = multiplicity_m(&r.partition, z).unwrap();
                let ok = mz.is_positive() && mz <= BigInt::from(r.n);
                c.check(ok, format!("M({z}) = {mz} for {} (n={})", r.partition, r.n));
            }
        }
        if m == 8 {
            for r in &rows {
                for k in [3, 5] {
                    let t = tensor_scale_check(&r.partition, k).unwrap();
                    c.check(t.admissible && t.n == r.n * k, format!("{} x {k}", r.partition));
                }
            }
        }
    }
    c.outcome(start.elapsed(), Duration::from_secs(60))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("partition table reproduction", c1_partition_table),
        ("character engine soundness", c2_character_engine),
        ("Gaussian operator pins", c3_gaussian),
        ("volume pins", c4_volumes),
        ("ADE tables", c5_ade_tables),
        ("Spin(4) examples", c6_spin4),
        ("SO(6) sign codes", c7_sign_codes),
        ("consistency properties", c8_consistency),
    ];
    let mut failures = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        if !o.pass {
            failures += 1;
        }
        println!("criterion {} ({name}): {}: {}", n + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
