//! Subcommand execution and output rendering.

use std::fmt::Write as _;
use std::time::Instant;

use bethe_lab_core::bethe::BetheAlgebra;
use bethe_lab_core::cm::{self, build_qz, phi0_expansion, QZData};
use bethe_lab_core::verifier::{ConfigEcho, VerificationReport};
use bethe_lab_core::{HamiltonianSet, Rational, Ring};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::checks::Check;
use crate::config::{Format, Mode, Momenta, RunConfig};
use crate::json::{self, ToJson};
use crate::CliError;

/// Rendered output and exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
    pub json: Value,
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (value, passed) = match cfg.mode {
        Mode::Hamiltonian => (hamiltonian(cfg)?, true),
        Mode::Bethe => (bethe(cfg)?, true),
        Mode::Cm => cm_command(cfg)?,
        Mode::Verify => verify(cfg, &selected_checks(cfg)?, "verify")?,
        Mode::Example => example(cfg)?,
    };
    let text = match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(&value),
    };
    Ok(Outcome {
        text,
        code: if passed { 0 } else { 1 },
        json: value,
    })
}

fn echo(cfg: &RunConfig) -> ConfigEcho {
    ConfigEcho::of(&cfg.gaudin)
        .with_orders(cfg.orders.0, cfg.orders.1)
        .with_seed(cfg.seed)
}

fn hamiltonian(cfg: &RunConfig) -> Result<Value, CliError> {
    let set = HamiltonianSet::build(&cfg.gaudin)?;
    Ok(json!({
        "command": "hamiltonian",
        "config": json::config_echo(&echo(cfg)),
        "H": json::operators(&set.h),
    }))
}

fn bethe(cfg: &RunConfig) -> Result<Value, CliError> {
    let b = BetheAlgebra::new(&cfg.gaudin)?;
    let (max_i, max_j) = cfg.orders;
    let mut bs = Vec::new();
    for i in 1..=cfg.gaudin.gl_n() {
        for j in 0..=max_j {
            bs.push(json!({ "i": i, "j": j, "value": b.b_coeff(i, j).to_json() }));
        }
    }
    let dagger: Vec<Value> = b
        .psi_dagger(max_i)?
        .iter()
        .enumerate()
        .map(|(i, m)| json!({ "i": i + 1, "value": m.to_json() }))
        .collect();
    Ok(json!({
        "command": "bethe",
        "config": json::config_echo(&echo(cfg)),
        "B": bs,
        "Psi": json::series(&b.psi_series(max_i, max_j)?),
        "Psi_dagger": dagger,
    }))
}

fn pair_json<R: Ring + ToJson>(qz: &QZData<R>, orders: (usize, usize)) -> Result<Value, CliError> {
    Ok(json!({
        "Q": qz.q().to_json(),
        "Z": qz.z_matrix().to_json(),
        "phi0": json::series(&phi0_expansion(qz.pair(), orders.0, orders.1)?),
    }))
}

fn cm_command(cfg: &RunConfig) -> Result<(Value, bool), CliError> {
    let z = cfg.gaudin.z();
    let mut config = echo(cfg);
    let (mut out, checks, passed) = match &cfg.momenta {
        Momenta::Hamiltonians => {
            config = config.with("momenta", "hamiltonians");
            let set = HamiltonianSet::build(&cfg.gaudin)?;
            let qz = build_qz(z, set.h)?;
            (pair_json(&qz, cfg.orders)?, json!({ "commuting": true }), true)
        }
        Momenta::Scalar(h) => {
            config = config.with("momenta", "scalar");
            let qz = build_qz(z, h.clone())?;
            let rank_one = cm::rank_one_check(qz.q(), qz.z_matrix())?;
            // μ_a with h_a = −μ_a − Σ_{b≠a} 1/(z_a − z_b)
            let mu: Vec<Rational> = (0..z.len()).map(|a| -&h[a] - cm::inverse_gap_sum(z, a)).collect();
            let (u, x) = &cfg.sample_point;
            let w = cm::wronskian_bivariate(z, &mu, u, x)?;
            let rhs = cm::delta(z) * qz.cleared_det(u, x);
            let w0 = cm::wronskian_zero(z, &mu, x)?;
            let rhs0 = cm::delta(z) * qz.phi(x);
            let ok = rank_one && w == rhs && w0 == rhs0;
            let mut out = pair_json(&qz, cfg.orders)?;
            out["h"] = json::rationals(h);
            let checks = json!({
                "rank_one": rank_one,
                "wronskian": {
                    "mu": json::rationals(&mu),
                    "u": u.to_json(),
                    "x": x.to_json(),
                    "W": w.to_json(),
                    "delta_times_det": rhs.to_json(),
                    "W0": w0.to_json(),
                    "delta_times_phi": rhs0.to_json(),
                    "equal": w == rhs && w0 == rhs0,
                },
            });
            (out, checks, ok)
        }
    };
    out["command"] = json!("cm");
    out["config"] = json::config_echo(&config);
    out["checks"] = checks;
    out["passed"] = json!(passed);
    Ok((out, passed))
}

fn selected_checks(cfg: &RunConfig) -> Result<Vec<Check>, CliError> {
    match &cfg.checks {
        None => Ok(Check::defaults(cfg)),
        Some(list) => {
            for c in list {
                c.applicability(cfg).map_err(CliError::Invalid)?;
            }
            Ok(list.clone())
        }
    }
}

fn timed(check: Check, cfg: &RunConfig) -> (Result<VerificationReport, bethe_lab_core::Error>, f64) {
    let start = Instant::now();
    let r = check.run(cfg);
    (r, start.elapsed().as_secs_f64() * 1e3)
}

/// Runs the checks concurrently; output keeps the given order.
pub fn run_checks(cfg: &RunConfig, checks: &[Check]) -> Result<Vec<(VerificationReport, f64)>, CliError> {
    let results: Vec<_> = checks.par_iter().map(|&c| (c, timed(c, cfg))).collect();
    results
        .into_iter()
        .map(|(c, (r, ms))| match r {
            Ok(rep) => Ok((rep, ms)),
            Err(e) => Err(CliError::from(e)).map_err(|err| match err {
                CliError::Failed(m) => CliError::Failed(format!("{}: {m}", c.name())),
                CliError::Invalid(m) => CliError::Invalid(format!("{}: {m}", c.name())),
            }),
        })
        .collect()
}

fn verify(cfg: &RunConfig, checks: &[Check], command: &str) -> Result<(Value, bool), CliError> {
    let reports = run_checks(cfg, checks)?;
    let passed = reports.iter().all(|(r, _)| r.passed);
    let text_timings = cfg.format == Format::Text;
    let list: Vec<Value> = reports
        .iter()
        .map(|(r, ms)| json::report(r, (cfg.timings || text_timings).then_some(*ms)))
        .collect();
    Ok((
        json!({
            "command": command,
            "config": json::config_echo(&echo(cfg)),
            "passed": passed,
            "reports": list,
        }),
        passed,
    ))
}

fn example(cfg: &RunConfig) -> Result<(Value, bool), CliError> {
    let mut cfg = cfg.clone();
    cfg.word = cm::TraceWord::parse("X^2")?;
    cfg.degree = Some(2);
    let checks = [
        Check::Example,
        Check::Polynomiality,
        Check::MainTheorem,
        Check::LemmaPsi12,
        Check::Eii,
        Check::PhiProduct,
    ];
    verify(&cfg, &checks, "example")
}

/// Plain-text rendering: reports as status lines, everything else as an
/// indented outline.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    if let Some(reports) = v.get("reports").and_then(Value::as_array) {
        for r in reports {
            let status = if r["status"] == "pass" { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} ({} comparisons", r["check"].as_str().unwrap_or(""), r["comparisons"]);
            if let Some(ms) = r.get("elapsed_ms").and_then(Value::as_f64) {
                let _ = write!(out, ", {ms:.1} ms");
            }
            out.push_str(")\n");
            if let Some(res) = r.get("first_residual").filter(|x| !x.is_null()) {
                let _ = write!(out, "  first residual: {}", res["location"].as_str().unwrap_or(""));
                if let Some(e) = res["entry"].as_array() {
                    let _ = write!(out, " at ({}, {})", e[0], e[1]);
                }
                if let Some(x) = res["value"].as_str() {
                    let _ = write!(out, ", difference {x}");
                }
                out.push('\n');
            }
            for d in r["details"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "  {}", d.as_str().unwrap_or(""));
            }
        }
        let total = reports.len();
        let failed = reports.iter().filter(|r| r["status"] != "pass").count();
        if failed == 0 {
            let _ = writeln!(out, "all {total} checks passed");
        } else {
            let _ = writeln!(out, "{failed} of {total} checks failed");
        }
        return out;
    }
    outline(v, 0, &mut out);
    out
}

fn outline(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if !inline(x) {
                    let _ = writeln!(out, "{pad}{k}:");
                    outline(x, depth + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if !inline(x) {
                    let _ = writeln!(out, "{pad}-");
                    outline(x, depth + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}- {}", scalar(x));
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", scalar(v));
        }
    }
}

/// Scalars and arrays nested only of scalars fit on one line.
fn inline(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(inline),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
