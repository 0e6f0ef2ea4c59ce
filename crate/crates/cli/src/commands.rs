//! Subcommand bodies. Each returns `Ok(true)` when every checked identity
//! held, `Ok(false)` when one failed, and `Err` on input errors.

use anyhow::{Context, Result};
use serde_json::{json, Value};

use fkt::corpus::{self, Format};
use fkt::diagram::Diagram;
use fkt::halfpoly::HalfLaurent;
use fkt::oracle::{alexander_determinant, skein_recursion_nabla, DEFAULT_DEPTH_LIMIT};
use fkt::seifert::seifert_circles;
use fkt::states::{clock_graph, verify_parity, StarredDiagram};
use fkt::statesum::{nabla, theta, verify_skein, verify_star_independence, verify_theta};

use crate::{Checks, Command, CorpusAction, Form, Input, InputFormat, Model};

pub fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Compute { input, model, form } => compute(&input, model, form),
        Command::States {
            input,
            stars,
            verify_parity,
            graph,
        } => states(&input, stars, verify_parity, graph),
        Command::Seifert { input } => seifert(&input),
        Command::Verify { input, checks } => {
            let d = load(&input)?;
            let report = verify(&d, checks.resolve())?;
            emit(input.json, &report, || text_report(&report));
            Ok(report["passed"].as_bool().unwrap_or(false))
        }
        Command::Xval { input } => xval(&input),
        Command::Corpus { action } => corpus_cmd(action),
    }
}

fn load(input: &Input) -> Result<Diagram> {
    let format = input.format.map(|f| match f {
        InputFormat::Json => Format::Json,
        InputFormat::Pd => Format::Pd,
    });
    Ok(corpus::load_file(&input.file, format)?)
}

fn emit(as_json: bool, value: &Value, text: impl FnOnce() -> String) {
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("JSON values serialize")
        );
    } else {
        println!("{}", text());
    }
}

fn render(p: &HalfLaurent, form: Form) -> Result<String> {
    match form {
        Form::T => Ok(p.to_t_string()),
        Form::Z => Ok(p
            .to_conway()
            .context("not a polynomial in z")?
            .to_z_string()),
    }
}

fn compute(input: &Input, model: Model, form: Form) -> Result<bool> {
    let d = load(input)?;
    let mut values = Vec::new();
    if model != Model::Theta {
        values.push(("nabla", render(&nabla(&d), form)?));
    }
    if model != Model::Nabla {
        values.push(("theta", render(&theta(&d), form)?));
    }
    let mut obj = json!({ "name": d.name(), "form": if form == Form::T { "t" } else { "z" } });
    for (k, v) in &values {
        obj[*k] = json!(v);
    }
    emit(input.json, &obj, || match values.as_slice() {
        [(_, v)] => v.clone(),
        _ => values
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join("\n"),
    });
    Ok(true)
}

fn states(
    input: &Input,
    stars: Option<(usize, usize)>,
    with_parity: bool,
    with_graph: bool,
) -> Result<bool> {
    let d = load(input)?;
    let sd = StarredDiagram::new(&d, stars)?;
    let graph = clock_graph(&sd);
    let rows: Vec<Value> = graph
        .states
        .iter()
        .map(|s| {
            json!({
                "markers": s.markers(),
                "black": s.black_holes(),
                "white": s.white_holes(),
            })
        })
        .collect();
    let mut out = json!({
        "name": d.name(),
        "stars": sd.stars(),
        "count": rows.len(),
        "states": rows,
    });
    let mut ok = true;
    if with_parity {
        let report = verify_parity(&sd);
        ok &= report.passed;
        out["parity"] = serde_json::to_value(&report)?;
    }
    if with_graph {
        out["graph"] = json!({
            "adjacency": graph.adjacency,
            "connected": graph.is_connected(),
            "symmetric": graph.is_symmetric(),
            "preserves_hole_total": graph.preserves_hole_total(),
        });
    }
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ok)
}

fn seifert(input: &Input) -> Result<bool> {
    let d = load(input)?;
    let s = seifert_circles(&d);
    let out = json!({
        "name": d.name(),
        "c": s.c,
        "s": s.s,
        "e": s.e,
        "g": s.genus,
        "parity": s.parity,
        "mu": s.mu,
        "circles": s.circles,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(true)
}

/// Run the selected checks; `passed` is the conjunction.
fn verify(d: &Diagram, checks: Checks) -> Result<Value> {
    let mut results = serde_json::Map::new();
    let mut passed = true;
    let mut record = |name: &str, ok: bool, detail: Value| {
        passed &= ok;
        results.insert(name.into(), json!({ "passed": ok, "detail": detail }));
    };
    if checks.theta {
        let r = verify_theta(d);
        record(
            "theta",
            r.passed,
            json!({ "failures": r.failures(), "report": r }),
        );
    }
    if checks.skein {
        let mut rows = Vec::new();
        for c in d.crossings() {
            rows.push(verify_skein(d, c.id())?);
        }
        let ok = rows.iter().all(|r| r.passed);
        record("skein", ok, serde_json::to_value(&rows)?);
    }
    if d.is_connected() {
        if checks.stars {
            let r = verify_star_independence(d)?;
            record("stars", r.passed, serde_json::to_value(&r)?);
        }
        if checks.parity {
            let r = verify_parity(&StarredDiagram::new(d, None)?);
            record(
                "parity",
                r.passed,
                json!({
                    "mod2_holds": r.parity_holds,
                    "exact_total_holds": r.total_holds,
                    "expected_total": r.expected_total,
                    "first_total_violation": r.first_total_violation,
                    "first_parity_violation": r.first_parity_violation,
                }),
            );
        }
    }
    Ok(json!({ "name": d.name(), "passed": passed, "checks": results }))
}

fn text_report(report: &Value) -> String {
    let mut lines = Vec::new();
    if let Some(checks) = report["checks"].as_object() {
        for (name, r) in checks {
            let ok = r["passed"].as_bool().unwrap_or(false);
            lines.push(format!("{:<10} {}", name, if ok { "ok" } else { "FAILED" }));
        }
    }
    lines.join("\n")
}

fn xval_value(d: &Diagram) -> Result<Value> {
    let n = nabla(d);
    let th = theta(d);
    let det = alexander_determinant(d);
    let skein = skein_recursion_nabla(d, DEFAULT_DEPTH_LIMIT)?;
    let theta_ok = th == n;
    let det_ok = det.equal_up_to_unit(&n);
    let skein_ok = skein == n;
    Ok(json!({
        "name": d.name(),
        "nabla": n.to_t_string(),
        "nabla_z": n.to_conway().map(|c| c.to_z_string()).ok(),
        "theta": th.to_t_string(),
        "determinant": det.to_t_string(),
        "skein": skein.to_t_string(),
        "theta_equals_nabla": theta_ok,
        "determinant_equal_up_to_unit": det_ok,
        "skein_equals_nabla": skein_ok,
        "passed": theta_ok && det_ok && skein_ok,
    }))
}

fn xval(input: &Input) -> Result<bool> {
    let d = load(input)?;
    let v = xval_value(&d)?;
    emit(input.json, &v, || {
        let verdict = |k: &str| {
            if v[k].as_bool().unwrap_or(false) {
                "yes"
            } else {
                "NO"
            }
        };
        format!(
            "nabla       {}\ntheta       {}\ndeterminant {}\nskein       {}\ntheta == nabla: {}\ndeterminant ~ nabla (up to +-t^k): {}\nskein == nabla: {}",
            v["nabla"].as_str().unwrap_or(""),
            v["theta"].as_str().unwrap_or(""),
            v["determinant"].as_str().unwrap_or(""),
            v["skein"].as_str().unwrap_or(""),
            verdict("theta_equals_nabla"),
            verdict("determinant_equal_up_to_unit"),
            verdict("skein_equals_nabla"),
        )
    });
    Ok(v["passed"].as_bool().unwrap_or(false))
}

fn corpus_cmd(action: CorpusAction) -> Result<bool> {
    match action {
        CorpusAction::List { json: as_json } => {
            let all = corpus::load()?;
            let rows: Vec<Value> = all
                .iter()
                .map(|d| {
                    json!({
                        "name": d.name(),
                        "link": d.link(),
                        "crossings": d.crossing_count(),
                        "components": d.component_count(),
                    })
                })
                .collect();
            emit(as_json, &json!(rows), || {
                all.iter()
                    .map(|d| {
                        format!(
                            "{:<16} {:>2} crossings  {:<14} {}",
                            d.name().unwrap_or("?"),
                            d.crossing_count(),
                            d.link().unwrap_or("-"),
                            d.component_count()
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(true)
        }
        CorpusAction::Export { dir, json: as_json } => {
            let dir = dir.unwrap_or_else(corpus::default_dir);
            let written = corpus::export(&dir)?;
            let names: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
            emit(as_json, &json!(names), || names.join("\n"));
            Ok(true)
        }
        CorpusAction::VerifyAll { json: as_json } => {
            let all = corpus::load()?;
            let mut rows = Vec::new();
            for d in &all {
                let mut report = verify(d, Checks::everything())?;
                let x = xval_value(d)?;
                let ok = report["passed"].as_bool().unwrap_or(false)
                    && x["passed"].as_bool().unwrap_or(false);
                report["checks"]["oracles"] = json!({ "passed": x["passed"], "detail": x });
                report["passed"] = json!(ok);
                rows.push(report);
            }
            let passed = rows.iter().all(|r| r["passed"].as_bool().unwrap_or(false));
            let out = json!({ "passed": passed, "diagrams": rows });
            emit(as_json, &out, || {
                rows.iter()
                    .map(|r| {
                        let failed: Vec<&str> = r["checks"]
                            .as_object()
                            .map(|m| {
                                m.iter()
                                    .filter(|(_, v)| !v["passed"].as_bool().unwrap_or(false))
                                    .map(|(k, _)| k.as_str())
                                    .collect()
                            })
                            .unwrap_or_default();
                        let name = r["name"].as_str().unwrap_or("?");
                        if failed.is_empty() {
                            format!("{name:<16} ok")
                        } else {
                            format!("{name:<16} FAILED {}", failed.join(", "))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(passed)
        }
    }
}
