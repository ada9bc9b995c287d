use bottcalc::acceptance::{Criterion, Suite};
use bottcalc::bott_grassmannian::{bott_evaluate, scan_vanishing, BundleSpec, CohomologyAnswer, Family};
use bottcalc::bott_isotropic::expr::EllipsisStep;
use bottcalc::bott_isotropic::tables::{check_row, find_rows, TableRow, ROWS};
use bottcalc::bott_isotropic::{
    cohomology_indices, gamma_weight, synthesize_ti, verify_lemmata, verify_theta_theorems, Classifier, IsoBundleKind,
    IsoFamily, IsoGrassmannian, MRange, Status as IsoStatus, Verdict,
};
use bottcalc::cotangent_oracle::{
    check_slice, differential_witnesses, local_cohomology_range, Oracle, OracleConfig, SliceCheck, WitnessReport,
};
use bottcalc::linalg::RankMethod;
use bottcalc::root_systems::{IndexResult, Pairing};
use bottcalc::weights::parse_weight;
use bottcalc::{Error, ParseError};
use num_bigint::BigInt;
use serde::Serialize;

use crate::output::{Report, Status};
use crate::{BottArgs, IsoArgs, OracleArgs, ScanArgs, TableArgs, VerifyArgs};

fn usage(module: &'static str, msg: impl Into<String>) -> Error {
    Error::Precondition { module, msg: msg.into() }
}

fn parse_flag<T: std::str::FromStr<Err = ParseError>>(flag: &str, value: &str) -> Result<T, Error> {
    value.parse().map_err(|e: ParseError| usage("cli", format!("--{flag} `{value}`: {}", e.message)))
}

fn answer_cells(a: &CohomologyAnswer) -> [String; 3] {
    match a {
        CohomologyAnswer::Vanishes => ["".into(), "".into(), "0".into()],
        CohomologyAnswer::NonZero { degree, weight, dimension } => {
            [degree.to_string(), weight.render(), dimension.to_string()]
        }
    }
}

#[derive(Serialize)]
struct BottPoint {
    n: usize,
    r: usize,
    alpha: String,
    beta: String,
    twist: String,
    answer: CohomologyAnswer,
}

pub fn bott(a: &BottArgs) -> Result<Report, Error> {
    let n_r = a.n.checked_sub(a.r).ok_or_else(|| usage("bott_grassmannian", "need r < n"))?;
    let (alpha, beta) = match (&a.bundle, &a.alpha, &a.beta) {
        (Some(b), _, _) => {
            let family = match b.to_ascii_lowercase().as_str() {
                "o" | "structure" => Family::Structure,
                "theta" | "tangent" => Family::Theta,
                other => return Err(usage("cli", format!("--bundle `{other}`: expected O or theta"))),
            };
            let spec = family.bundle(a.n, a.r, 0)?;
            (spec.alpha, spec.beta)
        }
        (None, al, be) => {
            let zero = |len: usize| vec!["0"; len].join(",");
            let alpha = parse_weight(al.as_deref().unwrap_or(&zero(n_r)))?;
            let beta = parse_weight(be.as_deref().unwrap_or(&zero(a.r)))?;
            (alpha, beta)
        }
    };
    let hi = a.to.clone().unwrap_or_else(|| a.twist.clone());
    if hi < a.twist {
        return Err(usage("cli", "--to must not be below --twist"));
    }
    if &hi - &a.twist > BigInt::from(100_000) {
        return Err(usage("cli", "twist sweep longer than 100000 points"));
    }
    let mut points = Vec::new();
    let mut m = a.twist.clone();
    while m <= hi {
        let spec = BundleSpec::new(alpha.clone(), beta.clone(), m.clone())?;
        let answer = bott_evaluate(&spec, a.n, a.r)?;
        points.push(BottPoint {
            n: a.n,
            r: a.r,
            alpha: alpha.render(),
            beta: beta.render(),
            twist: m.to_string(),
            answer,
        });
        m += 1;
    }
    let mut rep = Report::new("bott", &points);
    rep.csv_header = vec!["n", "r", "alpha", "beta", "twist", "degree", "weight", "dim"];
    let single = points.len() == 1;
    for p in &points {
        if single {
            rep.line(p.answer.to_string());
        } else {
            rep.line(format!("m={}: {}", p.twist, p.answer));
        }
        let [l, w, d] = answer_cells(&p.answer);
        rep.csv_rows.push(vec![
            p.n.to_string(),
            p.r.to_string(),
            p.alpha.clone(),
            p.beta.clone(),
            p.twist.clone(),
            l,
            w,
            d,
        ]);
    }
    Ok(rep)
}

pub fn scan(a: &ScanArgs) -> Result<Report, Error> {
    let top = a.r.checked_mul(a.n.saturating_sub(a.r)).unwrap_or(0);
    let i_hi = a.i_hi.unwrap_or(top.saturating_sub(1));
    log::info!("scanning G({},{}) degrees {}..={i_hi}", a.r, a.n, a.i_lo);
    let report = scan_vanishing(a.n, a.r, a.i_lo, i_hi)?;
    let mut rep = Report::new("scan", &report);
    let s = &report.summary;
    rep.line(format!("G({},{}): degrees {}..={i_hi}, window [{}, {}]", a.r, a.n, a.i_lo, s.window.0, s.window.1));
    rep.line(format!("window stable: {}", s.window_stable));
    match s.certified_range {
        Some((lo, hi)) => rep.line(format!("H^i(O(m)) = H^i(Theta(m)) = 0 for all m and {lo} <= i <= {hi}")),
        None => rep.line("no vanishing range certified"),
    }
    for e in &s.exceptions {
        let tag = if e.documented { "known" } else { "UNEXPECTED" };
        rep.line(format!("  {tag}: {}({}): {}", e.bundle, e.m, e.result));
    }
    if !s.exceptions.is_empty() {
        rep.line(format!("assumption: {}", s.assumption));
    }
    rep.csv_header = vec!["bundle", "m", "degree", "weight", "dim"];
    for row in &report.rows {
        let [l, w, d] = answer_cells(&row.result);
        rep.csv_rows.push(vec![row.bundle.to_string(), row.m.to_string(), l, w, d]);
        if a.rows {
            rep.line(format!("{}({}): {}", row.bundle, row.m, row.result));
        }
    }
    if !report.passed() {
        rep.status = Status::Failed;
    }
    Ok(rep)
}

fn iso_space(a: &IsoArgs) -> Result<IsoGrassmannian, Error> {
    if let Some(s) = &a.space {
        return parse_flag::<IsoGrassmannian>("space", s);
    }
    let family: IsoFamily = parse_flag("family", a.family.as_deref().unwrap_or_default())?;
    IsoGrassmannian::new(family, a.r.unwrap_or(0), a.n.unwrap_or(0))
}

fn range_label(r: &MRange) -> String {
    let lo = r.m_lo.map_or("-inf".to_string(), |v| v.to_string());
    let hi = r.m_hi.map_or("+inf".to_string(), |v| v.to_string());
    let status = match r.status {
        IsoStatus::Vanishes => "vanishes".to_string(),
        IsoStatus::Index(i) => format!("index {i}"),
    };
    if r.m_lo == r.m_hi {
        format!("m = {lo}: {status}")
    } else {
        format!("{lo} <= m <= {hi}: {status}")
    }
}

#[derive(Serialize)]
struct IsoPoint {
    #[serde(rename = "X")]
    x: IsoGrassmannian,
    bundle: IsoBundleKind,
    m: i64,
    gamma: String,
    index: Option<usize>,
}

#[derive(Serialize)]
struct IsoCheck {
    #[serde(rename = "X")]
    x: IsoGrassmannian,
    d: usize,
    passed: bool,
    checks: Vec<bottcalc::bott_isotropic::LemmaCheck>,
    ti_prefix: usize,
    ti_degrees: Vec<usize>,
}

pub fn iso(a: &IsoArgs) -> Result<Report, Error> {
    let x = iso_space(a)?;
    let pairing: Pairing = parse_flag("pairing", &a.pairing)?;
    if a.check {
        let lem = verify_lemmata(&x, pairing)?;
        let theta = verify_theta_theorems(&x, pairing)?;
        let ti = synthesize_ti(&x, pairing)?;
        let passed = lem.passed() && theta.passed() && ti.passed();
        let checks: Vec<_> = lem.checks.into_iter().chain(theta.checks).chain(ti.checks).collect();
        let data = IsoCheck { x, d: ti.d, passed, checks, ti_prefix: ti.prefix, ti_degrees: ti.per_degree };
        let mut rep = Report::new("iso-check", &data);
        rep.line(format!("{x}: d = {}", data.d));
        rep.csv_header = vec!["X", "claim", "bundle", "degrees", "expected_vanishing", "computed_vanishing", "verdict"];
        let show = |b: Option<bool>| b.map_or("-".to_string(), |v| v.to_string());
        for c in &data.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Undetermined => "undetermined",
            };
            rep.line(format!(
                "  {verdict:<12} {} {} on {}: expected vanishing {}, computed {}",
                c.lemma,
                c.bundle,
                c.group,
                show(c.expected_vanishing),
                show(c.computed_vanishing)
            ));
            rep.csv_rows.push(vec![
                x.to_string(),
                c.lemma.to_string(),
                c.bundle.clone(),
                c.group.to_string(),
                show(c.expected_vanishing),
                show(c.computed_vanishing),
                verdict.into(),
            ]);
        }
        rep.line(format!("T^i = 0 for 1 <= i <= {} (consecutive from 1); all degrees: {:?}", data.ti_prefix, data.ti_degrees));
        rep.line(if passed { "all claims hold" } else { "some claims FAIL" });
        if !passed {
            rep.status = Status::Failed;
        }
        return Ok(rep);
    }
    let bundle: IsoBundleKind =
        parse_flag("bundle", a.bundle.as_deref().ok_or_else(|| usage("cli", "--bundle is required without --check"))?)?;
    if let Some(m) = a.m {
        let c = Classifier::new(x, pairing);
        let index = match c.classify(bundle, m)? {
            IndexResult::Index(i) => Some(i),
            IndexResult::Singular => None,
        };
        let gamma = gamma_weight(&x, bundle, m)?.to_string();
        let p = IsoPoint { x, bundle, m, gamma, index };
        let mut rep = Report::new("iso", &p);
        rep.line(format!("{x} {bundle}(m={m}): gamma = {}", p.gamma));
        rep.line(match index {
            Some(i) => format!("index {i}"),
            None => "singular: all cohomology vanishes".to_string(),
        });
        rep.csv_header = vec!["X", "bundle", "m", "gamma", "index"];
        rep.csv_rows.push(vec![
            x.to_string(),
            bundle.to_string(),
            m.to_string(),
            p.gamma.clone(),
            index.map_or(String::new(), |i| i.to_string()),
        ]);
        return Ok(rep);
    }
    let map = cohomology_indices(&x, bundle, pairing)?;
    let mut rep = Report::new("iso-map", &map);
    rep.line(format!("{x} {bundle}, window [{}, {}], stable: {}", map.window.0, map.window.1, map.stable));
    rep.csv_header = vec!["X", "bundle", "m_lo", "m_hi", "index"];
    for r in &map.ranges {
        rep.line(format!("  {}", range_label(r)));
        let opt = |v: Option<i64>| v.map_or(String::new(), |v| v.to_string());
        let idx = match r.status {
            IsoStatus::Vanishes => String::new(),
            IsoStatus::Index(i) => i.to_string(),
        };
        rep.csv_rows.push(vec![x.to_string(), bundle.to_string(), opt(r.m_lo), opt(r.m_hi), idx]);
    }
    if !map.stable {
        rep.status = Status::Failed;
    }
    Ok(rep)
}

fn row_text(r: &TableRow) -> String {
    format!(
        "{} | {} | {} | {} | {} | {}",
        r.family.algebra_name(),
        r.bundle,
        r.case,
        r.coefficient_one,
        r.max_coefficient_two.unwrap_or("-"),
        r.other.unwrap_or("-")
    )
}

pub fn table(a: &TableArgs) -> Result<Report, Error> {
    let rule = match a.ellipsis.to_ascii_lowercase().as_str() {
        "unit" => EllipsisStep::Unit,
        "inferred" => EllipsisStep::Inferred,
        other => return Err(usage("cli", format!("--ellipsis `{other}`: expected unit or inferred"))),
    };
    let family: Option<IsoFamily> = a.g.as_deref().map(|g| parse_flag("g", g)).transpose()?;
    let rows: Vec<&TableRow> = match (family, &a.r_case) {
        (Some(f), Some(case)) => find_rows(f, case),
        (Some(f), None) => ROWS.iter().filter(|r| r.family == f).collect(),
        (None, Some(_)) => return Err(usage("cli", "--r-case needs --g")),
        (None, None) => ROWS.iter().collect(),
    };
    if rows.is_empty() {
        return Err(usage("bott_isotropic", "no tabulated row matches"));
    }
    let mut checks = Vec::new();
    if !a.no_check {
        for x in IsoGrassmannian::all_supported(a.n_max) {
            for row in rows.iter().filter(|r| r.applies(&x)) {
                checks.push(check_row(row, &x, Pairing::SimpleRootCoefficients, rule)?);
            }
        }
    }
    #[derive(Serialize)]
    struct TableReport<'a> {
        rows: Vec<&'a TableRow>,
        checks: &'a [bottcalc::bott_isotropic::tables::TableCheck],
    }
    let mut rep = Report::new("table", &TableReport { rows: rows.clone(), checks: &checks });
    rep.line("algebra | bundle | case | coefficient-one values | max coefficient-two | other");
    for r in &rows {
        rep.line(row_text(r));
    }
    rep.csv_header = vec!["X", "bundle", "case", "computed_one", "computed_max_two", "passed"];
    if !a.no_check {
        let failed = checks.iter().filter(|c| !c.passed).count();
        rep.line(format!("checked {} instances with n <= {}: {failed} failed", checks.len(), a.n_max));
        for c in &checks {
            let got: Vec<String> = c.computed_one.iter().map(|v| v.to_string()).collect();
            let two = c.computed_max_two.map_or(String::new(), |v| v.to_string());
            if !c.passed {
                rep.line(format!("  FAIL {} {} [{}]: computed {{{}}}", c.x, c.row.bundle, c.row.case, got.join(", ")));
            }
            rep.csv_rows.push(vec![
                c.x.to_string(),
                c.row.bundle.to_string(),
                c.row.case.to_string(),
                got.join(";"),
                two,
                c.passed.to_string(),
            ]);
        }
        if failed > 0 {
            rep.status = Status::Failed;
        }
    }
    Ok(rep)
}

#[derive(Serialize)]
struct OracleReport {
    r: usize,
    n: usize,
    rank_method: &'static str,
    rows: Vec<serde_json::Value>,
    truncated: Option<String>,
    checks: Vec<SliceCheck>,
    witness: Option<WitnessReport>,
}

pub fn oracle(a: &OracleArgs) -> Result<Report, Error> {
    let rank_method = match a.rank.to_ascii_lowercase().as_str() {
        "exact" => RankMethod::Exact,
        "modular" => RankMethod::Modular,
        other => return Err(usage("cli", format!("--rank `{other}`: expected exact or modular"))),
    };
    if let Some(dir) = &a.dump {
        std::fs::create_dir_all(dir).map_err(|e| usage("cli", format!("--dump {}: {e}", dir.display())))?;
    }
    let config = OracleConfig { rank_method, max_block: a.max_block, max_degree: a.max_degree, dump_dir: a.dump.clone() };
    let oracle = Oracle::new(a.r, a.n, config)?;
    let (lo, hi) = match a.deg {
        Some(d) => (d, d),
        None => (1, a.max_deg),
    };
    let table = local_cohomology_range(&oracle, lo, hi)?;
    let mut checks = Vec::new();
    if a.check {
        for row in &table.rows {
            checks.push(check_slice(&oracle.build_complex_slice(row.degree)?)?);
        }
    }
    let witness = a.witness.map(|m| differential_witnesses(&oracle, m)).transpose()?;
    let rows = table
        .rows
        .iter()
        .map(|row| {
            let mut v = serde_json::to_value(row).expect("row serializes");
            if !a.timings {
                v.as_object_mut().expect("object").remove("elapsed_ms");
            }
            v
        })
        .collect();
    let data = OracleReport {
        r: a.r,
        n: a.n,
        rank_method: if rank_method == RankMethod::Exact { "exact" } else { "modular" },
        rows,
        truncated: table.truncated.clone(),
        checks: checks.clone(),
        witness: witness.clone(),
    };
    let mut rep = Report::new("oracle", &data);
    rep.csv_header = vec![
        "r", "n", "degree", "dim_h1", "dim_h2", "h1", "size_f", "size_u", "size_omega", "size_sl", "certified", "elapsed_ms",
    ];
    for row in &table.rows {
        let d = row.degree;
        rep.line(format!("dim H0_m(Omega)_{d} = {}", row.h1));
        rep.line(format!("dim H1_m(Omega)_{d} = {}", row.h2));
        if row.h1 > 0 {
            rep.line(format!("  H0_m(Omega)_{d} = {}", row.h1_decomposition));
        }
        if row.h2 > 0 {
            rep.line(format!("  H1_m(Omega)_{d} = {}", row.h2_decomposition));
        }
        rep.line(format!(
            "  invariant dims {:?}, ambient {:?}, {} ms{}",
            row.invariant_dims,
            row.sizes,
            row.elapsed_ms,
            if row.certified { "" } else { ", ranks not certified" }
        ));
        let mut cells = vec![a.r.to_string(), a.n.to_string(), d.to_string(), row.h1.to_string(), row.h2.to_string()];
        cells.push(row.h1_decomposition.clone());
        cells.extend(row.sizes.iter().map(|s| s.to_string()));
        cells.push(row.certified.to_string());
        cells.push(row.elapsed_ms.to_string());
        rep.csv_rows.push(cells);
    }
    let mut failed = false;
    for c in &checks {
        let ok = c.passed();
        failed |= !ok;
        rep.line(format!("degree {}: predictions {}", c.degree, if ok { "match" } else { "DO NOT match" }));
    }
    if let Some(w) = &witness {
        failed |= !w.passed;
        rep.line(format!(
            "witnesses at m={}: {} (d3(delta)(E1{}) = {})",
            w.m,
            if w.passed { "ok" } else { "FAILED" },
            w.r,
            w.d3_delta_e1r
        ));
    }
    if let Some(t) = &table.truncated {
        rep.line(format!("TRUNCATED: {t}"));
        rep.status = Status::Truncated;
    } else if failed {
        rep.status = Status::Failed;
    }
    Ok(rep)
}

pub fn verify(a: &VerifyArgs) -> Result<Report, Error> {
    let which: Vec<Criterion> = if a.only.is_empty() {
        Criterion::ALL.to_vec()
    } else {
        a.only.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let suite = Suite::new();
    let mut results = Vec::new();
    for c in which {
        log::info!("criterion {c} ...");
        let res = suite.run(c);
        log::info!("criterion {c}: {} in {} ms", if res.passed { "pass" } else { "FAIL" }, res.elapsed_ms);
        results.push(res);
    }
    #[derive(Serialize)]
    struct Verdict<'a> {
        criterion: u8,
        name: &'a str,
        title: &'a str,
        passed: bool,
        checks: usize,
        detail: &'a str,
    }
    let verdicts: Vec<Verdict> = results
        .iter()
        .map(|r| Verdict {
            criterion: r.criterion,
            name: r.slug,
            title: r.title,
            passed: r.passed,
            checks: r.checks,
            detail: &r.detail,
        })
        .collect();
    let mut rep = Report::new("verify", &verdicts);
    rep.csv_header = vec!["criterion", "name", "passed", "checks", "elapsed_ms", "detail"];
    for r in &results {
        rep.line(format!(
            "[{}] {} {:<18} {:>8} ms  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.criterion,
            r.slug,
            r.elapsed_ms,
            r.title
        ));
        rep.line(format!("      {}", r.detail));
        rep.csv_rows.push(vec![
            r.criterion.to_string(),
            r.slug.to_string(),
            r.passed.to_string(),
            r.checks.to_string(),
            r.elapsed_ms.to_string(),
            r.detail.clone(),
        ]);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    rep.line(format!("{} of {} criteria passed", results.len() - failed, results.len()));
    if failed > 0 {
        rep.status = Status::Failed;
    }
    Ok(rep)
}
