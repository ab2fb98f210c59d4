use std::process::ExitCode;

use rayon::prelude::*;
use serde::Serialize;

use dwork_ns::counting::{self, admissible, CountReport, Model};
use dwork_ns::delpezzo::{build_lines, check_galois_action, galois_permutation, surface_model, LineCheck, verify_line};
use dwork_ns::exactalg::{fmt_rational, parse_rational, rat, Rational, SignVector};
use dwork_ns::ffield::FieldSpec;
use dwork_ns::galoisrep::{
    character_labels, crosscheck_trace, joint_eigenspaces, load_matrices, signvector_to_squareclass, theorem_constraints,
};
use dwork_ns::reptheory::reference::REFERENCE_COLUMNS;
use dwork_ns::reptheory::{
    character_table_h, chi_pr_function, decompose, match_reference, restrict_and_decompose, HClasses, Subgroup,
};

use crate::error::Failure;

type Outcome = Result<ExitCode, Failure>;

fn parse_lambda(s: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(s)?)
}

fn is_singular(l: &Rational) -> bool {
    let l2 = l * l;
    &l2 * &l2 == rat(1)
}

/// `a..b` and `a..=b` are inclusive; otherwise a comma separated list.
pub fn parse_primes(s: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::Invalid(format!("cannot parse prime list {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).filter(|&n| dwork_ns::ffield::is_prime(n)).collect());
    }
    s.split(',').map(|x| x.trim().parse::<u64>().map_err(|_| bad())).collect()
}

fn parse_surface(s: &str) -> Result<(usize, usize, u8), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Failure::Invalid(format!("surface must be i,j,r, got {s:?}"));
    match parts.as_slice() {
        [i, j, r] => Ok((i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

fn print_json<T: Serialize>(v: &T) -> Result<(), Failure> {
    outln!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

#[derive(Serialize)]
struct CountOutput {
    model: Model,
    lambda: String,
    p: u64,
    k: u32,
    q: u64,
    count: u64,
    predicted_tns: Option<i64>,
    passed: Option<bool>,
}

pub fn count(model: &str, lambda: &str, p: u64, k: u32, json: bool) -> Outcome {
    let model = Model::parse(model).ok_or_else(|| Failure::Invalid(format!("unknown model {model:?}")))?;
    let l = parse_lambda(lambda)?;
    let spec = FieldSpec::new(p, k)?;
    let report: CountReport = match model {
        Model::DworkX => counting::count_x(&l, &spec)?,
        Model::MirrorM => counting::count_m(&l, &spec)?,
        Model::ResolutionY => counting::count_y(&l, &spec)?,
    };
    let predicted_tns = counting::t_ns_predicted(&l, &spec).ok();
    let passed = counting::verify_trace_identity(&l, &spec).ok().map(|t| t.passed);
    let out = CountOutput {
        model,
        lambda: report.lambda.clone(),
        p,
        k,
        q: report.q,
        count: report.count,
        predicted_tns,
        passed,
    };
    if json {
        print_json(&out)?;
    } else {
        outln!("#{}(F_{}) = {} at lambda = {}", model.to_string().to_uppercase(), out.q, out.count, out.lambda);
        if let Some(t) = predicted_tns {
            outln!("predicted t_ns = {t}");
        }
        if let Some(ok) = passed {
            outln!("trace identity: {}", if ok { "pass" } else { "FAIL" });
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyRow {
    p: u64,
    status: &'static str,
    reason: Option<String>,
    x_count: Option<u64>,
    y_count: Option<u64>,
    predicted_tns: Option<i64>,
    frobenius_trace: Option<i64>,
    trace_identity: Option<bool>,
    mod_q: Option<bool>,
    mod_3q: Option<bool>,
    weil_bound: Option<bool>,
}

#[derive(Serialize)]
struct VerifySummary {
    lambda: String,
    k: u32,
    passed: usize,
    failed: usize,
    skipped: usize,
    rows: Vec<VerifyRow>,
}

fn verify_prime(l: &Rational, p: u64, k: u32) -> Result<VerifyRow, Failure> {
    if let Err(reason) = admissible(l, p, true) {
        return Ok(VerifyRow {
            p,
            status: "skipped",
            reason: Some(reason.to_string()),
            x_count: None,
            y_count: None,
            predicted_tns: None,
            frobenius_trace: None,
            trace_identity: None,
            mod_q: None,
            mod_3q: None,
            weil_bound: None,
        });
    }
    let spec = FieldSpec::new(p, k)?;
    let t = counting::verify_trace_identity(l, &spec)?;
    let wan = counting::verify_wan(l, p, k)?;
    let mod3 = if p > 3 { Some(counting::verify_mod3q(l, p, k)?.passed) } else { None };
    let cross = crosscheck_trace(l, p, k)?;
    let ok = t.passed && wan.passed && mod3.unwrap_or(true) && cross.passed && t.within_weil_bound();
    Ok(VerifyRow {
        p,
        status: if ok { "pass" } else { "fail" },
        reason: (!ok).then(|| "candidate Picard rank 20 exception".to_string()),
        x_count: Some(t.x_count),
        y_count: Some(t.y_count),
        predicted_tns: Some(t.predicted_tns),
        frobenius_trace: Some(cross.matrix_trace),
        trace_identity: Some(t.passed),
        mod_q: Some(wan.passed),
        mod_3q: mod3,
        weil_bound: Some(t.within_weil_bound()),
    })
}

pub fn verify(lambda: &str, primes: &str, k: u32, json: bool) -> Outcome {
    let l = parse_lambda(lambda)?;
    if is_singular(&l) {
        return Err(Failure::Invalid(format!("LambdaSingular: lambda = {} has lambda^4 = 1", fmt_rational(&l))));
    }
    if l == rat(0) {
        return Err(Failure::Invalid("LambdaZero: the mirror requires lambda != 0".into()));
    }
    let primes = parse_primes(primes)?;
    let rows: Vec<VerifyRow> = primes.par_iter().map(|&p| verify_prime(&l, p, k)).collect::<Result<_, _>>()?;
    let count = |s: &str| rows.iter().filter(|r| r.status == s).count();
    let summary = VerifySummary {
        lambda: fmt_rational(&l),
        k,
        passed: count("pass"),
        failed: count("fail"),
        skipped: count("skipped"),
        rows,
    };
    if json {
        print_json(&summary)?;
    } else {
        let b = |v: Option<bool>| match v {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        outln!("lambda = {}, k = {}", summary.lambda, k);
        outln!("{:>5} {:>12} {:>12} {:>5} {:>5} {:>8} {:>6} {:>7}", "p", "#X", "#Y", "t_ns", "tr", "identity", "mod q", "mod 3q");
        for r in &summary.rows {
            match r.status {
                "skipped" => outln!("{:>5} skipped: {}", r.p, r.reason.as_deref().unwrap_or("")),
                _ => outln!(
                    "{:>5} {:>12} {:>12} {:>5} {:>5} {:>8} {:>6} {:>7}{}",
                    r.p,
                    r.x_count.unwrap_or(0),
                    r.y_count.unwrap_or(0),
                    r.predicted_tns.unwrap_or(0),
                    r.frobenius_trace.unwrap_or(0),
                    b(r.trace_identity),
                    b(r.mod_q),
                    b(r.mod_3q),
                    r.reason.as_ref().map(|x| format!("  {x}")).unwrap_or_default(),
                ),
            }
        }
        outln!("passed {}, failed {}, skipped {}", summary.passed, summary.failed, summary.skipped);
    }
    Ok(if summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct ClassColumn {
    column: usize,
    published_label: &'static str,
    representative: String,
    size: usize,
    chi_pr: i64,
    order: usize,
}

#[derive(Serialize)]
struct TablesOutput {
    classes: Vec<ClassColumn>,
    matching_candidates: usize,
    characters: Vec<(String, Vec<i64>)>,
    chi_pr: Vec<i64>,
    decomposition: Vec<(String, i64)>,
}

pub fn tables(json: bool) -> Outcome {
    let classes = HClasses::new();
    let table = character_table_h(&classes);
    let m = match_reference(&classes, &table)?;
    let fps = classes.fingerprints();
    let reps = classes.representatives();
    let cols = &m.columns;
    let in_order = |values: Vec<i64>| -> Vec<i64> { cols.iter().map(|&c| values[c]).collect() };
    let chi = chi_pr_function(&classes).as_ints().ok_or_else(|| Failure::Internal("chi_pr not integral".into()))?;
    let out = TablesOutput {
        classes: cols
            .iter()
            .enumerate()
            .map(|(j, &c)| ClassColumn {
                column: j,
                published_label: REFERENCE_COLUMNS[j],
                representative: reps[c].to_string(),
                size: fps[c].size,
                chi_pr: fps[c].chi_pr,
                order: fps[c].order,
            })
            .collect(),
        matching_candidates: m.candidates,
        characters: table
            .labels
            .iter()
            .zip(&table.rows)
            .map(|(l, r)| Ok((l.clone(), in_order(r.as_ints().ok_or_else(|| Failure::Internal(format!("{l} not integral")))?))))
            .collect::<Result<_, Failure>>()?,
        chi_pr: in_order(chi),
        decomposition: decompose(&chi_pr_function(&classes), &table)?
            .into_iter()
            .map(|x| (x.label, x.multiplicity))
            .collect(),
    };
    if json {
        print_json(&out)?;
        return Ok(ExitCode::SUCCESS);
    }
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    outln!("{:>3}  {:<12} {:<14} {:>4} {:>6} {:>5}", "col", "printed", "representative", "size", "chi_pr", "order");
    for c in &out.classes {
        outln!(
            "{:>3}  {:<12} {:<14} {:>4} {:>6} {:>5}",
            c.column, c.published_label, c.representative, c.size, c.chi_pr, c.order
        );
    }
    outln!("matched uniquely among {} candidate column assignments", out.matching_candidates);
    outln!();
    outln!("sizes: {}", out.classes.iter().map(|c| c.size.to_string()).collect::<Vec<_>>().join(" "));
    outln!("chi_pr: {}", join(&out.chi_pr));
    outln!();
    for (label, row) in &out.characters {
        outln!("{label}: {}", join(row));
    }
    outln!();
    let parts: Vec<String> = out.decomposition.iter().filter(|x| x.1 != 0).map(|(l, m)| format!("{l}:{m}")).collect();
    outln!("chi_pr = {}", parts.join(" "));
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct Restriction {
    character: String,
    subgroup: Subgroup,
    constituents: Vec<(String, i64)>,
}

#[derive(Serialize)]
struct DecompositionOutput {
    multiplicities: Vec<dwork_ns::reptheory::Multiplicity>,
    dimension_check: i64,
    restrictions: Vec<Restriction>,
}

pub fn decompose_chipr(json: bool) -> Outcome {
    let classes = HClasses::new();
    let table = character_table_h(&classes);
    let multiplicities = decompose(&chi_pr_function(&classes), &table)?;
    let dimension_check = multiplicities.iter().map(|m| m.multiplicity * m.degree).sum();
    let mut restrictions = Vec::new();
    for m in multiplicities.iter().filter(|m| m.multiplicity != 0) {
        let row = table.row(&m.label).ok_or_else(|| Failure::Internal(format!("missing {}", m.label)))?;
        for kind in Subgroup::ALL {
            let constituents = restrict_and_decompose(row, &classes, kind)?
                .into_iter()
                .filter(|x| x.multiplicity != 0)
                .map(|x| (x.label, x.multiplicity))
                .collect();
            restrictions.push(Restriction { character: m.label.clone(), subgroup: kind, constituents });
        }
    }
    let out = DecompositionOutput { multiplicities, dimension_check, restrictions };
    if json {
        print_json(&out)?;
        return Ok(ExitCode::SUCCESS);
    }
    for m in &out.multiplicities {
        outln!("{}: {} (degree {})", m.label, m.multiplicity, m.degree);
    }
    outln!("sum of multiplicity * degree = {}", out.dimension_check);
    for r in &out.restrictions {
        let parts: Vec<String> = r.constituents.iter().map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m}*{l}") }).collect();
        outln!("{} | {} = {}", r.character, r.subgroup, parts.join(" + "));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct EigenRow {
    sign_vector: String,
    multiplicity: usize,
    square_class: String,
}

#[derive(Serialize)]
struct EigenOutput {
    dim: usize,
    lambda: String,
    eigenspaces: Vec<EigenRow>,
    characters: Vec<dwork_ns::galoisrep::CharacterLabel>,
    constraints: dwork_ns::galoisrep::ConstraintReport,
}

pub fn eigen(dim: usize, lambda: &str, matrices: bool, json: bool) -> Outcome {
    let l = parse_lambda(lambda)?;
    let mats = load_matrices(dim)?;
    let report = joint_eigenspaces(&mats)?;
    let eigenspaces = report
        .multiplicities
        .iter()
        .filter(|(_, &m)| m > 0)
        .map(|(&s, &m)| {
            Ok(EigenRow { sign_vector: s.to_string(), multiplicity: m, square_class: signvector_to_squareclass(&l, s)?.to_string() })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let out = EigenOutput {
        dim,
        lambda: fmt_rational(&l),
        eigenspaces,
        characters: character_labels(&l, &report)?,
        constraints: theorem_constraints(&report),
    };
    if json {
        print_json(&out)?;
        return Ok(ExitCode::SUCCESS);
    }
    outln!("dim {}, lambda = {}", out.dim, out.lambda);
    outln!("{:<22} {:>12}  {}", "sign vector", "multiplicity", "square class");
    for r in &out.eigenspaces {
        outln!("{:<22} {:>12}  {}", r.sign_vector, r.multiplicity, r.square_class);
    }
    let mut ms: Vec<usize> = out.eigenspaces.iter().map(|r| r.multiplicity).collect();
    ms.sort_unstable();
    outln!("multiplicities: {}", ms.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    for c in &out.characters {
        outln!("character ({}/.): multiplicity {}", c.square_class, c.multiplicity);
    }
    let c = &out.constraints;
    outln!(
        "exponents divisible by 3: {}, some exponent >= 6: {}, at most 5 classes: {}",
        c.all_divisible_by_3, c.some_at_least_6, c.at_most_5
    );
    if matrices {
        for m in &mats {
            outln!("\nM(sigma_{}):", m.label.name());
            out!("{}", m.matrix);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct LinesOutput {
    surface: dwork_ns::delpezzo::surface::SurfaceSummary,
    lines: Vec<dwork_ns::delpezzo::lines::LineDump>,
}

pub fn lines(lambda: &str, surface: &str, json: bool) -> Outcome {
    let l = parse_lambda(lambda)?;
    let (i, j, r) = parse_surface(surface)?;
    let s = surface_model(i, j, r, &l)?;
    let lines = build_lines(&s)?;
    if let Some(bad) = lines.iter().find(|x| verify_line(&s, x) != LineCheck::Exact) {
        return Err(Failure::Internal(format!("line {} fails the membership identity", bad.tag)));
    }
    if json {
        print_json(&LinesOutput { surface: s.summary(), lines: lines.iter().map(|x| x.dump()).collect() })?;
        return Ok(ExitCode::SUCCESS);
    }
    outln!("{s}");
    for (k, line) in lines.iter().enumerate() {
        outln!("{k:>2} {line}");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GaloisLinesOutput {
    surface: String,
    sign_vector: String,
    permutation: Vec<usize>,
    cycles: String,
    involution: bool,
    group_checks: Option<dwork_ns::delpezzo::GaloisLinesReport>,
}

pub fn galois_lines(lambda: &str, surface: &str, flip: &str, json: bool) -> Outcome {
    let l = parse_lambda(lambda)?;
    let (i, j, r) = parse_surface(surface)?;
    let sign = SignVector::parse(flip)?;
    let s = surface_model(i, j, r, &l)?;
    let lines = build_lines(&s)?;
    let perm = galois_permutation(&lines, sign)?;
    let out = GaloisLinesOutput {
        surface: s.label(),
        sign_vector: sign.to_string(),
        cycles: perm.to_string(),
        involution: perm.is_involution(),
        permutation: perm.image.clone(),
        group_checks: check_galois_action(&lines).ok(),
    };
    if json {
        print_json(&out)?;
        return Ok(ExitCode::SUCCESS);
    }
    outln!("{} at lambda = {}, sigma = {}", out.surface, fmt_rational(&l), out.sign_vector);
    outln!("{}", out.cycles);
    outln!("involution: {}", out.involution);
    if let Some(g) = &out.group_checks {
        outln!("all 16: involutions {}, commute {}, homomorphism {}", g.involutions, g.commute, g.homomorphism);
    }
    Ok(ExitCode::SUCCESS)
}

pub fn curve_counts(lambda: &str, p: Option<u64>, primes: Option<&str>, k: u32, json: bool) -> Outcome {
    let l = parse_lambda(lambda)?;
    let list = match (p, primes) {
        (Some(p), _) => vec![p],
        (None, Some(s)) => parse_primes(s)?,
        (None, None) => parse_primes("3..100")?,
    };
    let single = list.len() == 1;
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for p in list {
        if !single {
            if let Err(reason) = admissible(&l, p, true) {
                skipped.push((p, reason.to_string()));
                continue;
            }
        }
        reports.push(counting::curve_counts(&l, &FieldSpec::new(p, k)?)?);
    }
    let all_ok = reports.iter().all(|r| r.n_x == r.n_y && r.bijection_ok);
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            reports: &'a [counting::CurveReport],
            skipped: &'a [(u64, String)],
        }
        print_json(&Out { reports: &reports, skipped: &skipped })?;
    } else {
        for r in &reports {
            outln!(
                "p = {:>3}, k = {}: n_x = {}, n_y = {}, bijection {}, roots {:?} -> {:?}",
                r.p,
                r.k,
                r.n_x,
                r.n_y,
                if r.bijection_ok { "ok" } else { "FAIL" },
                r.roots_x,
                r.roots_y
            );
        }
        for (p, why) in &skipped {
            outln!("p = {p:>3}: skipped, {why}");
        }
    }
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
