use opcalc::exactmath::{int, parse_polynomial, BigInt, BigRational, Polynomial};
use opcalc::opseries::{bourlet_check, BOURLET_MAX_X_DEGREE, BOURLET_Z_ORDER};
use opcalc::summation::{brute_force_sum, faulhaber, solve_difference};
use opcalc::zetaengine::{
    extract_zeta, pfd_numeric_check, spectral_residual, zeta_numeric_check, zeta_table, ZetaValue,
};
use opcalc::Error;
use serde_json::{json, Map, Value};

use crate::envelope::{Check, OutputEnvelope, Report};

/// Largest `max_k` accepted by `zeta`.
pub const MAX_ZETA_K: u32 = 16;
/// Default cap on polynomial degrees accepted from the command line.
pub const DEFAULT_MAX_POWER: usize = 32;
/// Slack added to floating-point tail bounds to absorb summation rounding.
pub const FLOAT_SLACK: f64 = 1e-12;

/// Failure that prevents an envelope from being produced.
#[derive(Debug, Clone, PartialEq)]
pub enum CommandError {
    /// Bad arguments or unparsable input; exit code 2.
    Usage(String),
    /// An internal consistency assertion fired; exit code 3.
    Internal(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CommandError::Usage(m) | CommandError::Internal(m) => m,
        }
    }
}

fn internal(e: Error) -> CommandError {
    CommandError::Internal(e.to_string())
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn coefficient_strings(p: &Polynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn zeta_json(v: &ZetaValue) -> Value {
    json!({
        "k": v.k,
        "numerator": v.rational.numer().to_string(),
        "denominator": v.rational.denom().to_string(),
    })
}

pub fn faulhaber_cmd(power: usize, max_power: usize) -> Result<Report, CommandError> {
    if power > max_power {
        return Err(CommandError::Usage(format!(
            "power {power} exceeds --max-power {max_power}"
        )));
    }
    let f = faulhaber(power);
    let checks = (1..=10u64)
        .map(|n| {
            let value = f.eval(&int(n as i64));
            let expected = brute_force_sum(power, n);
            Check::new(
                format!("f({n}) = sum_{{k=1..{n}}} (k-1)^{power}"),
                value == expected,
                format!("f({n}) = {value}, brute force = {expected}"),
            )
        })
        .collect();
    let envelope = OutputEnvelope {
        command: "faulhaber".into(),
        inputs: inputs(&[("power", json!(power))]),
        result: json!({
            "polynomial": f.to_string(),
            "coefficients": coefficient_strings(&f),
        }),
        checks,
    };
    Ok(Report {
        envelope,
        lines: vec![format!("f(x) = {f}")],
    })
}

pub fn solve_cmd(g_text: &str, max_power: usize) -> Result<Report, CommandError> {
    let g = parse_polynomial(g_text).map_err(|e| CommandError::Usage(e.to_string()))?;
    if g.degree().is_some_and(|d| d > max_power) {
        return Err(CommandError::Usage(format!(
            "degree of g exceeds --max-power {max_power}"
        )));
    }
    let sol = solve_difference(&g);
    let f = &sol.particular;
    let diff = f.forward_difference();
    let at_zero = f.eval(&int(0));
    let checks = vec![
        Check::new(
            "f(x+1) - f(x) = g(x)",
            diff == g,
            format!("f(x+1) - f(x) = {diff}"),
        ),
        Check::new("f(0) = 0", at_zero == int(0), format!("f(0) = {at_zero}")),
    ];
    let envelope = OutputEnvelope {
        command: "solve".into(),
        inputs: inputs(&[("g", json!(g_text))]),
        result: json!({
            "g": g.to_string(),
            "particular": f.to_string(),
            "coefficients": coefficient_strings(f),
            "normalization": sol.normalization_note,
        }),
        checks,
    };
    Ok(Report {
        envelope,
        lines: vec![format!("g(x) = {g}"), format!("f(x) = {f}")],
    })
}

pub fn zeta_cmd(max_k: u32, verify_terms: u64) -> Result<Report, CommandError> {
    if max_k < 2 || max_k % 2 == 1 {
        return Err(CommandError::Usage(format!(
            "--max-k must be an even integer >= 2, got {max_k}"
        )));
    }
    if max_k > MAX_ZETA_K {
        return Err(CommandError::Usage(format!(
            "--max-k is capped at {MAX_ZETA_K}"
        )));
    }
    if verify_terms == 0 {
        return Err(CommandError::Usage(
            "--verify-terms must be positive".into(),
        ));
    }
    let values = extract_zeta(max_k).map_err(internal)?;
    let table = zeta_table(&values);

    let mut checks = Vec::new();
    for m in (2..=max_k as usize).step_by(2) {
        let constant = spectral_residual(m, &table).map_err(internal)?;
        checks.push(Check::new(
            format!("residual g = x^{m}"),
            true,
            format!("faulhaber({m}) - spectral solution = {constant} (constant), exact"),
        ));
    }
    let mut numeric = Vec::new();
    for v in &values {
        let c = zeta_numeric_check(v, verify_terms).map_err(internal)?;
        let tolerance = c.tail_bound + FLOAT_SLACK;
        checks.push(Check::new(
            format!("numeric zeta({})", v.k),
            c.rel_error <= tolerance,
            format!(
                "rel_error {:e} <= tolerance {:e} ({} terms)",
                c.rel_error, tolerance, verify_terms
            ),
        ));
        numeric.push(json!({
            "k": v.k,
            "symbolic": c.symbolic,
            "partial_sum": c.partial_sum,
            "rel_error": c.rel_error,
            "tolerance": tolerance,
        }));
    }
    let lines = values.iter().map(ToString::to_string).collect();
    let envelope = OutputEnvelope {
        command: "zeta".into(),
        inputs: inputs(&[
            ("max_k", json!(max_k)),
            ("verify_terms", json!(verify_terms)),
        ]),
        result: json!({
            "values": values.iter().map(zeta_json).collect::<Vec<_>>(),
            "numeric": numeric,
        }),
        checks,
    };
    Ok(Report { envelope, lines })
}

pub fn pfd_check_cmd(z0: f64, terms: u64) -> Result<Report, CommandError> {
    let c = pfd_numeric_check(z0, terms).map_err(|e| CommandError::Usage(e.to_string()))?;
    let tolerance = c.tail_bound + FLOAT_SLACK;
    let checks = vec![Check::new(
        "abs_error <= tail bound",
        c.abs_error <= tolerance,
        format!(
            "abs_error {:e} <= |z0|/(2 pi^2 N) + slack = {:e}",
            c.abs_error, tolerance
        ),
    )];
    let envelope = OutputEnvelope {
        command: "pfd-check".into(),
        inputs: inputs(&[("z0", json!(z0)), ("terms", json!(terms))]),
        result: json!({
            "lhs": c.lhs,
            "rhs": c.rhs,
            "abs_error": c.abs_error,
            "tail_bound": c.tail_bound,
        }),
        checks,
    };
    let lines = vec![
        format!("lhs = 1/(e^z0 - 1)            = {:.15}", c.lhs),
        format!("rhs = expansion with {terms} terms = {:.15}", c.rhs),
        format!("abs_error = {:e}", c.abs_error),
        format!("tail_bound = |z0|/(2 pi^2 N) = {:e}", c.tail_bound),
    ];
    Ok(Report { envelope, lines })
}

pub fn bourlet_check_cmd(seed: u64, cases: usize) -> Result<Report, CommandError> {
    if cases == 0 {
        return Err(CommandError::Usage("--cases must be positive".into()));
    }
    let report = bourlet_check(seed, cases).map_err(internal)?;
    let checks = vec![Check::new(
        "bourlet product equals sequential application",
        report.failures.is_empty(),
        format!("{}/{} cases exact", report.passed, report.cases),
    )];
    let envelope = OutputEnvelope {
        command: "bourlet-check".into(),
        inputs: inputs(&[("seed", json!(seed)), ("cases", json!(cases))]),
        result: json!({
            "z_order": BOURLET_Z_ORDER,
            "max_x_degree": BOURLET_MAX_X_DEGREE,
            "passed": report.passed,
            "failed": report.failures.len(),
            "failures": report.failures,
        }),
        checks,
    };
    let lines = vec![format!(
        "seed {seed}: {}/{} operator pairs compose exactly (z-order {}, x-degree <= {})",
        report.passed, report.cases, BOURLET_Z_ORDER, BOURLET_MAX_X_DEGREE
    )];
    Ok(Report { envelope, lines })
}

/// Parses a `ZetaValue` back from its machine-readable form.
pub fn zeta_from_json(v: &Value) -> Option<ZetaValue> {
    let k = u32::try_from(v.get("k")?.as_u64()?).ok()?;
    let numer: BigInt = v.get("numerator")?.as_str()?.parse().ok()?;
    let denom: BigInt = v.get("denominator")?.as_str()?.parse().ok()?;
    if denom == BigInt::from(0) {
        return None;
    }
    Some(ZetaValue {
        k,
        rational: BigRational::new(numer, denom),
    })
}
