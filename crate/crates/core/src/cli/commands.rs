use std::io::Write;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use super::table::{document, json_complex, normalize_floats, Cell, Table, SCHEMA_VERSION};
use super::{
    CliError, FieldArgs, FieldForm, Format, GaugeArg, OutputArgs, ParitySelect, PotentialsArgs,
    RadialArgs, SpectrumArgs, SuiteArg, TrGridArgs, VerifyArgs, EXIT_FAIL, EXIT_PASS,
};
use crate::geometry::SpacetimePoint;
use crate::modes::{
    dkp_field, electric_potentials_landau, electric_potentials_lorentz, gradient_solution,
    mo_field, spectrum as spectrum_of, ModeIndex, Parity, RadialSolution,
};
use crate::verify::{applicable_suites, linspace, run_suite, GridSpec, Suite, Tolerances, VerifyOptions};

type CmdResult = Result<i32, CliError>;

/// Upper bound on rows produced by one sampling command.
const MAX_ROWS: u64 = 1_000_000;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_rows(counts: &[u64]) -> Result<(), CliError> {
    let total = counts.iter().try_fold(1u64, |acc, &c| acc.checked_mul(c));
    match total {
        Some(0) => Err(usage("point counts must be at least 1")),
        Some(n) if n <= MAX_ROWS => Ok(()),
        _ => Err(usage(format!("request exceeds {MAX_ROWS} rows"))),
    }
}

fn emit(output: &OutputArgs, command: &str, config: Value, table: &Table, out: &mut dyn Write) -> CmdResult {
    let text = match output.format {
        Format::Csv => table
            .to_csv()
            .map_err(|e| CliError::Io(std::io::Error::other(e)))?,
        Format::Json => {
            let doc = document(command, config, table.to_json_records());
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default())
        }
    };
    write_text(output.out.as_deref(), &text, out)?;
    Ok(EXIT_PASS)
}

fn write_text(path: Option<&std::path::Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn mode_of(j: i64, m: i64, n: i64, parity: Parity) -> Result<ModeIndex, CliError> {
    Ok(ModeIndex::new(j, m, n, parity)?)
}

fn mode_json(mode: &ModeIndex) -> Value {
    json!({
        "j": mode.j,
        "m": mode.m,
        "n": mode.n,
        "parity": mode.parity.name(),
        "omega": mode.omega(),
    })
}

pub(super) fn spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> CmdResult {
    if !(a.unit_scale > 0.0 && a.unit_scale.is_finite()) {
        return Err(usage(format!("unit scale {} must be positive", a.unit_scale)));
    }
    check_rows(&[a.j.len(), a.n.len()])?;
    let mut table = Table::new(&["j", "n", "omega", "omega_scaled"]);
    for j in a.j.iter() {
        for n in a.n.iter() {
            let w = spectrum_of(j, n)?;
            table.push(vec![
                Cell::Int(j),
                Cell::Int(n),
                Cell::Int(w),
                Cell::Real(w as f64 * a.unit_scale),
            ]);
        }
    }
    let config = json!({
        "j": [a.j.start, a.j.end],
        "n": [a.n.start, a.n.end],
        "unit_scale": a.unit_scale,
    });
    emit(&a.output, "spectrum", config, &table, out)
}

pub(super) fn radial(a: &RadialArgs, out: &mut dyn Write) -> CmdResult {
    check_rows(&[a.n_r as u64])?;
    let mode = mode_of(a.j, 0, a.n, Parity::Magnetic)?;
    let rad = RadialSolution::new(&mode)?;
    let mut table = Table::new(&["r", "R", "dR"]);
    for r in linspace(a.r_range.0, a.n_r) {
        table.push(vec![
            Cell::Real(r),
            Cell::Complex(rad.evaluate(r)?),
            Cell::Complex(rad.derivative(r)?),
        ]);
    }
    let config = json!({
        "j": mode.j,
        "n": mode.n,
        "omega": mode.omega(),
        "r_range": a.r_range.0,
        "n_r": a.n_r,
    });
    emit(&a.output, "radial", config, &table, out)
}

fn tr_nodes(g: &TrGridArgs) -> Result<Vec<(f64, f64)>, CliError> {
    check_rows(&[g.n_t as u64, g.n_r as u64])?;
    let rs = linspace(g.r_range.0, g.n_r);
    Ok(linspace(g.t_range.0, g.n_t)
        .into_iter()
        .flat_map(|t| rs.iter().map(move |&r| (t, r)))
        .collect())
}

fn grid_json(g: &TrGridArgs) -> Value {
    json!({
        "t_range": g.t_range.0,
        "r_range": g.r_range.0,
        "n_t": g.n_t,
        "n_r": g.n_r,
    })
}

pub(super) fn field(a: &FieldArgs, out: &mut dyn Write) -> CmdResult {
    let mode = mode_of(a.mode.j, a.mode.m, a.mode.n, a.mode.parity.into())?;
    check_rows(&[a.grid.n_t as u64, a.grid.n_r as u64, a.n_theta as u64, a.n_phi as u64])?;
    let nodes = tr_nodes(&a.grid)?;
    let thetas = linspace(a.theta_range.0, a.n_theta);
    let phis: Vec<f64> = (0..a.n_phi)
        .map(|k| 2.0 * std::f64::consts::PI * k as f64 / a.n_phi as f64)
        .collect();
    let names: Vec<String> = match a.form {
        FieldForm::Mo => (0..4).map(|k| format!("psi{k}")).collect(),
        FieldForm::Dkp => (1..=10).map(|k| format!("f{k}")).collect(),
    };
    let mut columns: Vec<String> = ["t", "r", "theta", "phi"].map(String::from).to_vec();
    columns.extend(names);
    let mut table = Table::with_columns(columns);
    for &(t, r) in &nodes {
        for &th in &thetas {
            for &ph in &phis {
                let p = SpacetimePoint::new(t, r, th, ph)?;
                let comps: Vec<Complex64> = match a.form {
                    FieldForm::Mo => mo_field(&mode, &p)?.psi.to_vec(),
                    FieldForm::Dkp => dkp_field(&mode, &p)?.components.to_vec(),
                };
                let mut row = vec![Cell::Real(t), Cell::Real(r), Cell::Real(th), Cell::Real(ph)];
                row.extend(comps.into_iter().map(Cell::Complex));
                table.push(row);
            }
        }
    }
    let mut config = grid_json(&a.grid);
    if let Value::Object(m) = &mut config {
        m.insert("mode".into(), mode_json(&mode));
        m.insert(
            "form".into(),
            Value::from(match a.form {
                FieldForm::Mo => "mo",
                FieldForm::Dkp => "dkp",
            }),
        );
        m.insert("theta_range".into(), json!(a.theta_range.0));
        m.insert("n_theta".into(), json!(a.n_theta));
        m.insert("n_phi".into(), json!(a.n_phi));
    }
    emit(&a.output, "field", config, &table, out)
}

pub(super) fn potentials(a: &PotentialsArgs, out: &mut dyn Write) -> CmdResult {
    let mode = mode_of(a.mode.j, a.mode.m, a.mode.n, a.mode.parity.into())?;
    let (gauge, name) = match a.gauge {
        GaugeArg::Landau => (electric_potentials_landau(&mode)?, "landau"),
        GaugeArg::Lorentz => (electric_potentials_lorentz(&mode, a.amplitude.0)?, "lorentz"),
        GaugeArg::Gradient => (
            gradient_solution(&mode, a.omega_g.unwrap_or(mode.omega() + 2))?,
            "gradient",
        ),
    };
    let mut table = Table::new(&["t", "r", "g1", "g2", "g3"]);
    for (t, r) in tr_nodes(&a.grid)? {
        SpacetimePoint::on_equator(t, r)?;
        let g = gauge.at_t(t, r)?;
        let mut row = vec![Cell::Real(t), Cell::Real(r)];
        row.extend(g.map(Cell::Complex));
        table.push(row);
    }
    let mut config = grid_json(&a.grid);
    if let Value::Object(m) = &mut config {
        m.insert("mode".into(), mode_json(&mode));
        m.insert("gauge".into(), Value::from(name));
        m.insert("amplitude".into(), json_complex(a.amplitude.0));
        if let GaugeArg::Gradient = a.gauge {
            m.insert("omega_g".into(), json!(a.omega_g.unwrap_or(mode.omega() + 2)));
        }
    }
    emit(&a.output, "potentials", config, &table, out)
}

pub(super) fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let parities: Vec<Parity> = match a.parity {
        ParitySelect::Magnetic => vec![Parity::Magnetic],
        ParitySelect::Electric => vec![Parity::Electric],
        ParitySelect::Both => vec![Parity::Magnetic, Parity::Electric],
    };
    if a.suite == SuiteArg::Gauge && a.parity == ParitySelect::Magnetic {
        return Err(usage(
            "the gauge suite needs electric parity: magnetic-type modes carry no scalar potential",
        ));
    }
    if let Some(tol) = a.tol {
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(usage(format!("tolerance {tol} must be non-negative")));
        }
    }
    check_rows(&[a.j.len(), a.n.len(), parities.len() as u64])?;
    let grid = GridSpec {
        n_t: a.n_t,
        n_r: a.n_r,
        fd_step: a.fd_step,
        fd_accuracy: a.fd_accuracy,
        ..GridSpec::default()
    };
    let maxwell_grid = GridSpec {
        fd_step: a.maxwell_step,
        ..GridSpec::maxwell()
    };
    grid.validate()?;
    maxwell_grid.validate()?;
    let opts = VerifyOptions {
        grid,
        maxwell_grid,
        maxwell_points: a.maxwell_points,
        seed: a.seed,
        tolerances: a.tol.map_or_else(Tolerances::default, Tolerances::uniform),
        lorentz_amplitude: a.amplitude.0,
        ..VerifyOptions::default()
    };

    let mut modes = Vec::new();
    for j in a.j.iter() {
        for n in a.n.iter() {
            for &parity in &parities {
                modes.push(mode_of(j, a.m, n, parity)?);
            }
        }
    }
    let mut results = Vec::new();
    let mut all_pass = true;
    for mode in &modes {
        let suites: Vec<Suite> = match a.suite {
            SuiteArg::All => applicable_suites(mode),
            SuiteArg::Gauge if mode.parity == Parity::Magnetic => continue,
            SuiteArg::Mo => vec![Suite::Mo],
            SuiteArg::Dkp => vec![Suite::Dkp],
            SuiteArg::Maxwell => vec![Suite::Maxwell],
            SuiteArg::Gauge => vec![Suite::Gauge],
        };
        for suite in suites {
            let res = run_suite(suite, mode, &opts)?;
            let worst = res
                .reports
                .iter()
                .map(|r| r.max_abs / r.tolerance.max(f64::MIN_POSITIVE))
                .fold(0.0, f64::max);
            let _ = writeln!(
                err,
                "{:<8} {}  {}  (worst residual/tolerance {:.3e})",
                suite.name(),
                mode,
                if res.pass { "pass" } else { "FAIL" },
                worst
            );
            all_pass &= res.pass;
            results.push(serde_json::to_value(&res).unwrap_or(Value::Null));
        }
    }

    let mut doc = Map::new();
    doc.insert("schema".into(), Value::from(format!("dsmaxwell.verify/{SCHEMA_VERSION}")));
    doc.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    doc.insert("command".into(), Value::from("verify"));
    doc.insert("pass".into(), Value::from(all_pass));
    doc.insert("grid".into(), serde_json::to_value(&opts.grid).unwrap_or(Value::Null));
    doc.insert(
        "maxwell".into(),
        json!({
            "grid": opts.maxwell_grid,
            "points": opts.maxwell_points,
            "seed": opts.seed,
        }),
    );
    doc.insert("tolerances".into(), serde_json::to_value(opts.tolerances).unwrap_or(Value::Null));
    doc.insert("results".into(), Value::Array(results));
    let doc = normalize_floats(Value::Object(doc));
    let text = format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default());
    write_text(a.out.as_deref(), &text, out)?;
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}
