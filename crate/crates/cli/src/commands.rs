use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use sunada_core::exactnum::{parse_rational, render_rational, SymVolume};
use sunada_core::golden;
use sunada_core::goursat::{
    build_subgroup, conjugate_by_witness, cyclic_dihedral_pair, cyclic_tetrahedral_pair, spin4_almost_conjugate,
    witnesses_product, witnesses_right, GoursatQuintuple, QuatPair, QuintupleSpec,
};
use sunada_core::quatgroups::{
    ade_group_by_name, bo_action_on_bd4, class_action, named_class_table, AdeLabel, Polyhedral,
};
use sunada_core::rootvol::{heat_invariants, rescale_to_curvature, Space};
use sunada_core::signcodes::{paper_groups, permutation_search, so6_almost_conjugate, SignCodeGroup};
use sunada_core::sunada::search_capped;
use sunada_core::symgroup::{mn_character, CycleType, Partition};

use crate::output::Report;
use crate::{read_input, AdeCmd, CodesCmd, Command, Failure, Global, GoursatCmd};

pub fn run(cmd: &Command, g: &Global) -> std::result::Result<Report, Failure> {
    Ok(match cmd {
        Command::Search { m } => search(*m, g.max_m)?,
        Command::Char { lambda, mu } => character(lambda, mu)?,
        Command::Ade { cmd } => ade(cmd)?,
        Command::Goursat { cmd } => goursat(cmd)?,
        Command::Codes { cmd: CodesCmd::Verify } => codes()?,
        Command::Volume { space, table, kappa } => volume(space.as_deref(), *table, kappa.as_deref())?,
        Command::PaperTables => return paper_tables(g.max_m),
    })
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn search(m: u32, max_m: u32) -> Result<Report> {
    let rows = search_capped(m, max_m)?;
    let table = rows
        .iter()
        .map(|r| {
            vec![
                r.partition.to_string(),
                r.n.to_string(),
                r.chi_transposition.to_string(),
                r.chi_double_transposition.to_string(),
                r.min_multiplicity.to_string(),
                yes_no(r.m6_caveat),
            ]
        })
        .collect();
    Report::new(&["partition", "n", "chi(x)", "chi(xy)", "min M", "m=6 caveat"], table, &rows)
}

fn character(lambda: &str, mu: &str) -> Result<Report> {
    let lambda: Partition = lambda.parse()?;
    let mu: CycleType = mu.parse()?;
    let v = mn_character(&lambda, &mu)?;
    let json = json!({ "lambda": lambda, "mu": mu, "value": v.to_string() });
    Report::new(&["lambda", "mu", "chi"], vec![vec![lambda.to_string(), mu.to_string(), v.to_string()]], &json)
}

fn polyhedral(name: &str) -> Result<Polyhedral> {
    let label: AdeLabel = name.parse()?;
    Ok(Polyhedral::from_label(label)?)
}

fn ade(cmd: &AdeCmd) -> Result<Report> {
    match cmd {
        AdeCmd::Classes { group } => {
            let label: AdeLabel = group.parse()?;
            if let Ok(kind) = Polyhedral::from_label(label) {
                let t = named_class_table(kind)?;
                let rows = t
                    .iter()
                    .map(|c| vec![c.name.to_string(), c.representative.to_string(), c.size.to_string(), c.real_part.to_string()])
                    .collect();
                return Report::new(&["class", "representative", "size", "real part"], rows, &t);
            }
            let classes = ade_group_by_name(group)?.conjugacy_classes();
            let rows = classes
                .iter()
                .map(|c| vec![c.representative.to_string(), c.size.to_string(), c.real_part.to_string()])
                .collect();
            Report::new(&["representative", "size", "real part"], rows, &classes)
        }
        AdeCmd::Action { group } => {
            let rows = class_action(polyhedral(group)?)?;
            let table = rows
                .iter()
                .map(|r| vec![format!("C({})", r.class), format!("C({})", r.image_class), r.real_part_of_image.to_string()])
                .collect();
            Report::new(&["class", "image", "real part of image"], table, &rows)
        }
        AdeCmd::Bd4Action => {
            let rows = bo_action_on_bd4()?;
            let table = rows
                .iter()
                .map(|r| {
                    let mut v = vec![format!("[{}]", r.coset)];
                    v.extend(r.images.iter().map(|q| q.to_string()));
                    v
                })
                .collect();
            Report::new(&["coset", "i ->", "j ->", "k ->"], table, &rows)
        }
    }
}

const EXAMPLES: [&str; 4] = ["tetrahedral-1", "tetrahedral-2", "dihedral-1", "dihedral-2"];

fn load_quintuple(src: &str) -> Result<GoursatQuintuple> {
    match src {
        "tetrahedral-1" => Ok(cyclic_tetrahedral_pair()?.0),
        "tetrahedral-2" => Ok(cyclic_tetrahedral_pair()?.1),
        "dihedral-1" => Ok(cyclic_dihedral_pair()?.0),
        "dihedral-2" => Ok(cyclic_dihedral_pair()?.1),
        path => {
            let text = read_input(path).with_context(|| format!("not a built-in example ({})", EXAMPLES.join(", ")))?;
            let spec: QuintupleSpec = serde_json::from_str(&text).context("parsing quintuple JSON")?;
            Ok(spec.build()?)
        }
    }
}

#[derive(Serialize)]
struct QuintupleSummary {
    order_a: usize,
    order_a0: usize,
    order_b: usize,
    order_b0: usize,
    theta: Vec<(String, String)>,
}

fn summary(q: &GoursatQuintuple) -> QuintupleSummary {
    QuintupleSummary {
        order_a: q.a().order(),
        order_a0: q.a0().order(),
        order_b: q.b().order(),
        order_b0: q.b0().order(),
        theta: q.theta().iter().map(|(x, y)| (x.to_string(), y.to_string())).collect(),
    }
}

fn goursat(cmd: &GoursatCmd) -> Result<Report> {
    match cmd {
        GoursatCmd::Build { quintuple } => {
            let q = load_quintuple(quintuple)?;
            let c = build_subgroup(&q);
            let rows = c.elements().iter().map(|p| vec![p.a.to_string(), p.b.to_string()]).collect();
            let json = json!({ "quintuple": summary(&q), "order": c.order(), "elements": c.elements() });
            let s = summary(&q);
            Ok(Report::new(&["a", "b"], rows, &json)?.note(format!(
                "order {} = |A| |B0| = {} * {}; |A0| = {}, |B| = {}",
                c.order(),
                s.order_a,
                s.order_b0,
                s.order_a0,
                s.order_b
            )))
        }
        GoursatCmd::Compare { first, second, witnesses } => {
            let (q1, q2) = (load_quintuple(first)?, load_quintuple(second)?);
            let (c1, c2) = (build_subgroup(&q1), build_subgroup(&q2));
            let o = ade_group_by_name("2O")?;
            let pool: Vec<QuatPair> = match witnesses.as_str() {
                "1x2O" => witnesses_right(&o),
                "2Ox2O" => witnesses_product(&o, &o),
                "none" => vec![],
                other => bail!("unknown witness set {other:?}; expected 1x2O, 2Ox2O or none"),
            };
            let almost = spin4_almost_conjugate(&c1, &c2);
            let w = conjugate_by_witness(&c1, &c2, &pool);
            let witness_text = w.as_ref().map_or("none".to_string(), |p| format!("({}, {})", p.a, p.b));
            let json = json!({
                "order_first": c1.order(),
                "order_second": c2.order(),
                "equal": c1 == c2,
                "almost_conjugate": almost,
                "witness_set": witnesses,
                "witnesses_tried": pool.len(),
                "witness": w,
            });
            let rows = vec![
                vec!["orders".into(), format!("{} / {}", c1.order(), c2.order())],
                vec!["equal".into(), yes_no(c1 == c2)],
                vec!["almost conjugate".into(), yes_no(almost)],
                vec![format!("witness in {witnesses}"), witness_text],
            ];
            Report::new(&["property", "value"], rows, &json)
        }
    }
}

fn codes() -> Result<Report> {
    let (g1, g2) = paper_groups();
    let show = |g: &SignCodeGroup| g.codewords().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
    let en = |g: &SignCodeGroup| {
        g.weight_enumerator().iter().map(|(w, c)| format!("{w}:{c}")).collect::<Vec<_>>().join(",")
    };
    let almost = so6_almost_conjugate(&g1, &g2)?;
    let s = permutation_search(&g1, &g2);
    let witness = s.witness.map_or("none".to_string(), |p| format!("{:?}", p.map(|x| x + 1)));
    let rows = vec![
        vec!["group 1".into(), show(&g1)],
        vec!["group 2".into(), show(&g2)],
        vec!["weights 1".into(), en(&g1)],
        vec!["weights 2".into(), en(&g2)],
        vec!["almost conjugate in SO(6)".into(), yes_no(almost)],
        vec!["permutations tried".into(), s.permutations_tried.to_string()],
        vec!["coordinate permutation".into(), witness],
    ];
    let json = json!({
        "group_1": g1,
        "group_2": g2,
        "weight_enumerator_1": g1.weight_enumerator(),
        "weight_enumerator_2": g2.weight_enumerator(),
        "almost_conjugate": almost,
        "search": s,
    });
    Report::new(&["item", "value"], rows, &json)
}

fn volume(space: Option<&str>, table: bool, kappa: Option<&str>) -> Result<Report> {
    let kappa = kappa.map(parse_rational).transpose()?;
    if table {
        let rows = Space::table_rows();
        let mut out = Vec::new();
        let mut json_rows = Vec::new();
        for r in &rows {
            let at_kappa = match (&r.computed, &kappa) {
                (Some(v), Some(k)) => Some(rescale_to_curvature(v, k)?),
                _ => None,
            };
            let show = |v: &Option<SymVolume>| v.as_ref().map_or("-".to_string(), |v| v.paper_form());
            out.push(vec![
                r.space.to_string(),
                show(&r.computed),
                r.table_coefficient.paper_form(),
                show(&at_kappa),
                r.note.to_string(),
            ]);
            json_rows.push(json!({ "row": r, "at_kappa": at_kappa }));
        }
        let json = json!({ "kappa": kappa.as_ref().map(render_rational), "rows": json_rows });
        return Ok(Report::new(&["space", "computed at B", "listed coefficient", "at kappa", "note"], out, &json)?
            .note("listed values carry the factor (30/kappa)^3; 'at kappa' assumes B has scalar curvature 30"));
    }
    let space: Space = space.ok_or_else(|| anyhow!("--space or --table is required"))?.parse()?;
    let base = space.volume()?;
    let mut rows = vec![vec!["volume".into(), base.to_string(), base.paper_form()]];
    let mut json = json!({ "space": space, "volume": base });
    if let Some(k) = kappa {
        if space.dimension() != 6 {
            bail!("--kappa applies to the 6-dimensional spaces only");
        }
        let v = rescale_to_curvature(&base, &k)?;
        let (a0, a1) = heat_invariants(&v, &k);
        rows.push(vec!["volume at kappa".into(), v.to_string(), v.paper_form()]);
        rows.push(vec!["a0".into(), a0.to_string(), a0.paper_form()]);
        rows.push(vec!["a1".into(), a1.to_string(), a1.paper_form()]);
        json["kappa"] = json!(render_rational(&k));
        json["volume_at_kappa"] = serde_json::to_value(&v)?;
        json["a0"] = serde_json::to_value(&a0)?;
        json["a1"] = serde_json::to_value(&a1)?;
    }
    Report::new(&["quantity", "canonical", "display"], rows, &json)
}

fn paper_tables(max_m: u32) -> std::result::Result<Report, Failure> {
    let report = golden::run(max_m).map_err(anyhow::Error::from)?;
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                if c.pass { "ok" } else { "MISMATCH" }.to_string(),
                c.section.to_string(),
                c.name.clone(),
                c.expected.clone(),
                c.actual.clone(),
            ]
        })
        .collect();
    let failed = report.failures().count();
    let out = Report::new(&["status", "section", "check", "expected", "computed"], rows, &report)?
        .note(format!("{} checks, {failed} mismatches", report.checks.len()));
    if failed > 0 {
        Err(Failure::Mismatch(out))
    } else {
        Ok(out)
    }
}
