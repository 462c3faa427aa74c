//! Command-line grammar and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use mhs_core::curvature::{
    closed_form_check, gbc_evaluation, riemann_from_spectrum, special_structure_predicates, Tensor4,
};
use mhs_core::forms::{ClosedForms, Coefficient};
use mhs_core::jet::JetConfig;
use mhs_core::proof::{run_theorem_proof, ProofConfig, Report};
use mhs_core::scalar::{set_working_precision, MAX_PRECISION_BITS};
use mhs_core::{ExactScalar, Spectrum};
use serde_json::{json, Value};

use crate::lemmas;
use crate::report::{config_json, exit_code, report_json, report_text, to_json_string};

pub const PRECISION_ENV: &str = "MHS_PRECISION_BITS";

/// Exit status for malformed input or configuration.
pub const USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mhs-verify", version, about = "Exact verification of the curvature algebra for minimal hypersurfaces in S^5")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full proof chain.
    All(TheoremArgs),
    /// Run a single lemma.
    Lemma {
        #[command(subcommand)]
        which: Lemma,
    },
    /// Invariants of a principal-curvature spectrum.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Curvature tensors of a principal-curvature spectrum.
    Curvature {
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Print only the identity residuals.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Args)]
struct TheoremArgs {
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Override a closed-form coefficient, e.g. `gbc.f4=-2`.
    #[arg(long, value_parser = parse_injection, allow_hyphen_values = true)]
    inject: Vec<(Coefficient, ExactScalar)>,
    #[arg(long)]
    no_cheng_yang: bool,
    #[arg(long)]
    no_munzner: bool,
    #[arg(long)]
    drop_middle_equation: bool,
}

#[derive(Debug, Subcommand)]
enum Lemma {
    /// Cartan's formula in the three K = 0 cases.
    Cartan {
        #[arg(long)]
        no_munzner: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The multiplicity-two contradiction.
    Jet {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: ExactScalar,
        #[arg(long)]
        drop_middle_equation: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The cubic bound on zero-sum triples.
    Extremal {
        #[arg(long, default_value = "6", allow_hyphen_values = true)]
        s2: ExactScalar,
        #[arg(long, default_value_t = 1_000_000)]
        resolution: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Closed-form curvature identities and the Gauss-Bonnet-Chern integrand.
    Gbc {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Same as `all`.
    Theorem(TheoremArgs),
}

fn parse_injection(s: &str) -> Result<(Coefficient, ExactScalar), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let c = name.trim().parse::<Coefficient>().map_err(|e| e.to_string())?;
    let v = value.trim().parse::<ExactScalar>().map_err(|e| e.to_string())?;
    Ok((c, v))
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_values(s: &str) -> Result<Spectrum, UsageError> {
    let values = s
        .split(',')
        .map(|v| v.trim().parse::<ExactScalar>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Spectrum::new(values)?)
}

fn write_json(path: &Path, value: &Value) -> Result<(), UsageError> {
    std::fs::write(path, to_json_string(value)).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

impl TheoremArgs {
    fn config(&self) -> ProofConfig {
        let mut forms = ClosedForms::default();
        for (c, v) in &self.inject {
            forms.set(*c, v.clone());
        }
        ProofConfig {
            seed: self.seed,
            trials: self.trials,
            cheng_yang: !self.no_cheng_yang,
            munzner: !self.no_munzner,
            forms,
            jet: JetConfig { include_middle: !self.drop_middle_equation },
            ..ProofConfig::default()
        }
    }
}

fn emit(out: &mut dyn Write, report: &Report, config: Value, json: Option<&Path>) -> Result<i32, UsageError> {
    out.write_all(report_text(report).as_bytes())?;
    if let Some(path) = json {
        write_json(path, &report_json(report, config))?;
    }
    Ok(exit_code(report.summary))
}

fn theorem(out: &mut dyn Write, args: &TheoremArgs) -> Result<i32, UsageError> {
    let config = args.config();
    let report = run_theorem_proof(&config);
    emit(out, &report, config_json(&config), args.json.as_deref())
}

fn spectrum_json(s: &Spectrum) -> Result<Value, UsageError> {
    let inv = s.invariants()?;
    let newton = s.newton_residuals()?;
    Ok(json!({
        "values": s.values().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "mean_curvature": inv.mean_curvature.to_string(),
        "norm_squared": inv.norm_squared.to_string(),
        "scalar_curvature": inv.scalar_curvature.to_string(),
        "f3": inv.f3.to_string(),
        "f4": inv.f4.to_string(),
        "gauss_kronecker": inv.gauss_kronecker.to_string(),
        "flatness_gap": inv.flatness_gap().to_string(),
        "newton_residuals": newton.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "minimal": s.is_minimal(),
    }))
}

fn spectrum_cmd(out: &mut dyn Write, values: &str, json: Option<&Path>) -> Result<i32, UsageError> {
    let s = parse_values(values)?;
    s.require_four()?;
    let v = spectrum_json(&s)?;
    for (key, value) in v.as_object().expect("object") {
        match value {
            Value::String(x) => writeln!(out, "{key} = {x}")?,
            other => writeln!(out, "{key} = {other}")?,
        }
    }
    if let Some(path) = json {
        write_json(path, &v)?;
    }
    Ok(0)
}

fn write_tensor(out: &mut dyn Write, name: &str, t: &Tensor4) -> std::io::Result<()> {
    for i in 0..4 {
        for j in i + 1..4 {
            for k in 0..4 {
                for l in k + 1..4 {
                    let v = t.get(i, j, k, l);
                    if !v.is_zero() {
                        writeln!(out, "{name}[{},{},{},{}] = {v}", i + 1, j + 1, k + 1, l + 1)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn curvature_cmd(out: &mut dyn Write, values: &str, check: bool) -> Result<i32, UsageError> {
    let s = parse_values(values)?;
    let point = riemann_from_spectrum(&s)?;
    if !check {
        writeln!(out, "scalar_curvature = {}", point.scalar)?;
        writeln!(out, "ricci_norm_squared = {}", point.ricci_squared)?;
        writeln!(out, "weyl_norm_squared = {}", point.weyl_squared)?;
        writeln!(out, "traceless_ricci_squared = {}", point.traceless_ricci_squared)?;
        writeln!(out, "gbc_density = {}", point.gbc_density())?;
        for i in 0..4 {
            for j in 0..4 {
                let v = point.ricci.get(i, j);
                if !v.is_zero() {
                    writeln!(out, "Ric[{},{}] = {v}", i + 1, j + 1)?;
                }
            }
        }
        write_tensor(out, "R", &point.riemann)?;
        write_tensor(out, "W", &point.weyl)?;
        return Ok(0);
    }
    let residuals = closed_form_check(&s)?;
    let gbc = gbc_evaluation(&s, &ClosedForms::default())?;
    let symmetry_failures = point.symmetry_residuals().filter(|r| !r.is_zero()).count();
    let weyl_trace_failures = point.weyl_traces().filter(|r| !r.is_zero()).count();
    let predicates = special_structure_predicates(&s)?;
    writeln!(out, "scalar_residual = {}", residuals.scalar)?;
    writeln!(out, "ricci_residual = {}", residuals.ricci)?;
    writeln!(out, "weyl_residual = {}", residuals.weyl)?;
    writeln!(out, "gbc_residual = {}", gbc.residual())?;
    writeln!(out, "symmetry_failures = {symmetry_failures}")?;
    writeln!(out, "weyl_trace_failures = {weyl_trace_failures}")?;
    writeln!(out, "locally_conformally_flat = {}", predicates.locally_conformally_flat)?;
    writeln!(out, "einstein = {}", predicates.einstein)?;
    writeln!(out, "willmore = {}", predicates.willmore)?;
    let ok = residuals.all_zero() && gbc.residual().is_zero() && symmetry_failures == 0 && weyl_trace_failures == 0;
    Ok(if ok { 0 } else { 1 })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, UsageError> {
    match &cli.command {
        Command::All(args) | Command::Lemma { which: Lemma::Theorem(args) } => theorem(out, args),
        Command::Lemma { which } => match which {
            Lemma::Cartan { no_munzner, json } => {
                let report = lemmas::cartan_report(!no_munzner);
                emit(out, &report, json!({ "munzner": !no_munzner }), json.as_deref())
            }
            Lemma::Jet { lambda, drop_middle_equation, json } => {
                let config = JetConfig { include_middle: !drop_middle_equation };
                let report = lemmas::jet_report(lambda, config);
                let cfg = json!({ "lambda": lambda.to_string(), "include_middle_equation": config.include_middle });
                emit(out, &report, cfg, json.as_deref())
            }
            Lemma::Extremal { s2, resolution, json } => {
                let report = lemmas::extremal_report(s2, *resolution);
                emit(out, &report, json!({ "s2": s2.to_string(), "resolution": resolution }), json.as_deref())
            }
            Lemma::Gbc { seed, trials, json } => {
                let config = ProofConfig { seed: *seed, trials: *trials, ..ProofConfig::default() };
                let report = lemmas::gbc_report(&config);
                emit(out, &report, config_json(&config), json.as_deref())
            }
            Lemma::Theorem(_) => unreachable!("handled above"),
        },
        Command::Spectrum { values, json } => spectrum_cmd(out, values, json.as_deref()),
        Command::Curvature { values, check } => curvature_cmd(out, values, *check),
    }
}

fn apply_precision(var: Option<OsString>) -> Result<(), UsageError> {
    let Some(raw) = var else { return Ok(()) };
    let text = raw.to_str().ok_or_else(|| UsageError(format!("{PRECISION_ENV} is not valid UTF-8")))?;
    let bits: u32 = text.trim().parse().map_err(|_| UsageError(format!("{PRECISION_ENV}: `{text}` is not an integer")))?;
    if !(2..=MAX_PRECISION_BITS).contains(&bits) {
        return Err(UsageError(format!("{PRECISION_ENV} must lie in 2..={MAX_PRECISION_BITS}")));
    }
    set_working_precision(bits);
    Ok(())
}

/// Parses `args` and runs the command, writing normal output to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, precision: Option<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return if code == 0 { 0 } else { USAGE };
        }
    };
    if let Err(UsageError(msg)) = apply_precision(precision) {
        let _ = writeln!(err, "error: {msg}");
        return USAGE;
    }
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
    }
}
