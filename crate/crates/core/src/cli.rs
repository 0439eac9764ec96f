//! Command-line front end.
//!
//! State specs: `ghz4:gamma=0.6` (or `gamma2=0.36`), `phi2:J=2,Js=2`,
//! `gag:gamma=0.25`, `gabgd:a=..,b=..,c=..,d=..`, `file:<path>`.
//!
//! Sweep specs: `<family>:<param>=<lo>..<hi>[,<name>=<value>]...`, e.g.
//! `phi2:J=0..8,Js=2`.
//!
//! Exit codes: 0 ok, 1 numerical failure, 2 argument or state-spec error, 3 state
//! file schema error, 4 I/O error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bellopt::{classify_bell, optimize_bell, DEFAULT_RESTARTS, DEFAULT_TOL};
use crate::entanglement::{concurrence_panel, PAIRS};
use crate::error::{Error, Result};
use crate::families::{slocc_report, FamilyParams, SLOCC_TOL};
use crate::invariants::all_invariants;
use crate::qcore::{read_state_file, PureState4};
use crate::sweep::{fmt_num, run_sweep, write_csv, Family, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "fourqubit", version, about = "Entanglement measures for pure 4-qubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for the Bell optimizer.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Bell optimizer restarts.
    #[arg(long, global = true, default_value_t = DEFAULT_RESTARTS)]
    pub restarts: usize,
    /// Bell sweep tolerance (bell, sweep) or invariant magnitude threshold (classify).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add an S_norm column, S divided by max |S| over the sweep.
    #[arg(long, global = true)]
    pub normalize_s: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print H, L, M, N, Dxt, S, T and Delta.
    Invariants { state: String },
    /// Print the six pairwise concurrences and Q.
    Concurrence { state: String },
    /// Maximize <F4>^2 + <F4'>^2.
    Bell { state: String },
    /// Hyperdeterminant and H tests plus family criteria.
    Classify { state: String },
    /// Evaluate a family on a parameter grid and write CSV.
    Sweep {
        spec: String,
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// Double the restarts near both ends of the range.
        #[arg(long)]
        edge_boost: bool,
    },
}

/// Parsed state argument.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Family(FamilyParams),
    File(PathBuf),
}

fn parse_num(key: &str, text: &str) -> Result<f64> {
    text.trim()
        .parse::<f64>()
        .map_err(|_| Error::Spec(format!("'{text}' is not a number (for '{key}')")))
}

fn parse_assignments(text: &str) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Spec(format!("expected name=value, got '{part}'")))?;
        let k = k.trim().to_string();
        let v = parse_num(&k, v)?;
        if out.insert(k.clone(), v).is_some() {
            return Err(Error::Spec(format!("'{k}' given twice")));
        }
    }
    Ok(out)
}

pub fn parse_state_spec(text: &str) -> Result<StateSpec> {
    let (head, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::Spec(format!("expected <family>:<params> or file:<path>, got '{text}'")))?;
    if head == "file" {
        if rest.is_empty() {
            return Err(Error::Spec("empty file path".into()));
        }
        return Ok(StateSpec::File(PathBuf::from(rest)));
    }
    let family = Family::parse(head)?;
    Ok(StateSpec::Family(family.params_from(&parse_assignments(rest)?)?))
}

pub fn parse_sweep_spec(text: &str) -> Result<SweepSpec> {
    let (head, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::Spec(format!("expected <family>:<param>=<lo>..<hi>, got '{text}'")))?;
    let family = Family::parse(head)?;
    let mut swept = None;
    let mut fixed = BTreeMap::new();
    for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Spec(format!("expected name=value, got '{part}'")))?;
        let k = k.trim();
        if let Some((lo, hi)) = v.split_once("..") {
            if swept.is_some() {
                return Err(Error::Spec("only one parameter can be swept".into()));
            }
            swept = Some((k.to_string(), parse_num(k, lo)?, parse_num(k, hi)?));
        } else {
            fixed.insert(k.to_string(), parse_num(k, v)?);
        }
    }
    let (param, lo, hi) = swept.ok_or_else(|| Error::Spec("no swept range <lo>..<hi> given".into()))?;
    let mut spec = SweepSpec::new(family, &param, lo, hi, 2);
    spec.fixed = fixed;
    Ok(spec)
}

fn load_state(spec: &StateSpec, err: &mut dyn Write) -> Result<PureState4> {
    match spec {
        StateSpec::File(path) => read_state_file(path),
        StateSpec::Family(params) => {
            let g = params.generate()?;
            if let Some(w) = g.warning {
                let _ = writeln!(err, "warning: {w}");
            }
            Ok(g.state)
        }
    }
}

fn fmt_vec(v: [f64; 3]) -> String {
    format!("{} {} {}", fmt_num(v[0]), fmt_num(v[1]), fmt_num(v[2]))
}

fn invariants_text(state: &PureState4) -> String {
    let mut s = String::new();
    for (name, v, _) in all_invariants(state).entries() {
        s += &format!("{name:<6}{} {}\n", fmt_num(v.re), fmt_num(v.im));
    }
    s
}

fn concurrence_text(state: &PureState4) -> Result<String> {
    let p = concurrence_panel(state)?;
    let mut s = String::new();
    for (&(i, j), c) in PAIRS.iter().zip(p.pairs) {
        s += &format!("C{i}{j}    {}\n", fmt_num(c));
    }
    s += &format!("sumC2  {}\n", fmt_num(p.sum_sq));
    s += &format!("Q      {}\n", fmt_num(p.q_global));
    s += &format!("Q-sumC2 {}\n", fmt_num(p.residual_entanglement()));
    Ok(s)
}

fn bell_text(state: &PureState4, cli: &Cli) -> Result<String> {
    let r = optimize_bell(state, cli.restarts, cli.seed, cli.tol.unwrap_or(DEFAULT_TOL))?;
    let flags = classify_bell(r.value);
    let mut s = format!("value        {}\n", fmt_num(r.value));
    s += &format!("exceeds_8    {}\n", flags.exceeds_8);
    s += &format!("exceeds_16   {}\n", flags.exceeds_16);
    s += &format!("seed         {}\n", r.seed);
    s += &format!("restarts     {}\n", r.restarts_used);
    s += &format!("best_restart {}\n", r.best_restart);
    s += &format!("iterations   {}\n", r.iterations);
    for (k, pair) in r.settings.dirs().iter().enumerate() {
        s += &format!("a{}           {}\n", k + 1, fmt_vec(pair[0]));
        s += &format!("a{}'          {}\n", k + 1, fmt_vec(pair[1]));
    }
    Ok(s)
}

fn classify_text(state: &PureState4, spec: &StateSpec, cli: &Cli) -> Result<String> {
    let tol = cli.tol.unwrap_or(SLOCC_TOL);
    if !(tol > 0.0) {
        return Err(Error::Spec(format!("tolerance must be positive, got {tol}")));
    }
    let mut report = slocc_report(state, tol);
    if let StateSpec::Family(params) = spec {
        report.family_criteria.extend(params.li_criterion()?);
    }
    let mut s = format!("delta_nonzero {}\n", report.delta_nonzero);
    s += &format!("abs_delta     {}\n", fmt_num(report.delta_abs));
    s += &format!("h_nonzero     {}\n", report.h_nonzero);
    s += &format!("abs_h         {}\n", fmt_num(report.h_abs));
    s += &format!("tol           {}\n", fmt_num(report.tol));
    for (name, ok) in &report.family_criteria {
        s += &format!("{name:<13} {ok}\n");
    }
    s += "note: h_nonzero is a necessary condition for the GHZ class, not a classifier\n";
    Ok(s)
}

fn emit(out_path: Option<&Path>, text: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match out_path {
        Some(path) => {
            let io = |source| Error::Io {
                path: path.to_path_buf(),
                source,
            };
            let mut f = BufWriter::new(File::create(path).map_err(io)?);
            f.write_all(text).map_err(io)?;
            f.flush().map_err(io)
        }
        None => stdout.write_all(text).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let text = match &cli.command {
        Command::Sweep {
            spec,
            points,
            edge_boost,
        } => {
            let mut sweep = parse_sweep_spec(spec)?;
            sweep.points = *points;
            sweep.restarts = cli.restarts;
            sweep.seed = cli.seed;
            sweep.tol = cli.tol.unwrap_or(DEFAULT_TOL);
            sweep.normalize_s = cli.normalize_s;
            sweep.edge_boost = *edge_boost;
            sweep.validate()?;
            // fail on an unwritable path before the expensive part
            if let Some(path) = &cli.out {
                File::create(path).map_err(|source| Error::Io {
                    path: path.clone(),
                    source,
                })?;
            }
            let rows = run_sweep(&sweep)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            buf
        }
        Command::Invariants { state }
        | Command::Concurrence { state }
        | Command::Bell { state }
        | Command::Classify { state } => {
            let spec = parse_state_spec(state)?;
            let psi = load_state(&spec, stderr)?;
            match &cli.command {
                Command::Invariants { .. } => invariants_text(&psi),
                Command::Concurrence { .. } => concurrence_text(&psi)?,
                Command::Bell { .. } => bell_text(&psi, cli)?,
                _ => classify_text(&psi, &spec, cli)?,
            }
            .into_bytes()
        }
    };
    emit(cli.out.as_deref(), &text, stdout)
}

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Spec(_) | Error::Sweep(_) | Error::ParamOutOfRange { .. } => 2,
        Error::Schema(_) => 3,
        Error::Io { .. } | Error::Csv(_) => 4,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
