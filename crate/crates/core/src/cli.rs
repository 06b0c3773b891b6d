//! Command-line front end. `main` only forwards to [`main_with`], so tests can drive the CLI
//! in-process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use crate::bench::{run_table, BenchReport};
use crate::decimal::{parse_rational, to_f64};
use crate::entropy::{
    recursion_to, run_observed, EntropyState, HaltVariant, RunConfig, RunOutput, Unit, DEFAULT_N_MAX,
};
use crate::error::{Error, Result};
use crate::maps::{
    make_bimodal_cubic, make_gaussian, make_pl4, make_pl5, make_tent, make_trimodal_quartic,
    map_file::map_from_file, MapKind, MapModel, DEFAULT_ANCHOR_MARGIN, DEFAULT_GRID_PER_LAP,
};
use crate::oracle::{exact_profiles, grid_profiles, turning_point_interpolant, LapProfile, DEFAULT_BREAKPOINT_CAP};
use crate::sweep::{run_sweep, thread_pool, SweepAxis};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mmentropy", version, about = "Topological entropy of multimodal interval maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Estimate the entropy of one map and print a JSON record.
    Entropy(EntropyCmd),
    /// Run a one- or two-parameter sweep and write CSV rows.
    Sweep(SweepCmd),
    /// Reproduce a benchmark table (1 to 5).
    Bench(BenchCmd),
    /// Compare recursion lap numbers with brute-force counts.
    OracleCheck(OracleCmd),
    /// Check that a map is an l-modal self-map of its interval.
    Validate(ValidateCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gaussian,
    Cubic2,
    Quartic3,
    Pl4,
    Pl5,
    Tent,
    File,
}

impl Family {
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Gaussian => &["alpha", "beta"],
            Family::Cubic2 => &["v1", "v2"],
            Family::Quartic3 => &["v2", "v3"],
            _ => &[],
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct MapArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v3: Option<String>,
    /// JSON map definition; implies `--family file`.
    #[arg(long)]
    pub map_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, default_value_t = 1e-4)]
    pub eps: f64,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub nmax: usize,
    #[arg(long, default_value = "nats")]
    pub unit: Unit,
    #[arg(long, default_value = "h1")]
    pub halt: HaltVariant,
    /// Anchor the map to the boundary before running.
    #[arg(long)]
    pub anchor: bool,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        RunConfig::new(self.eps, self.unit).n_max(self.nmax).halt(self.halt).anchored(self.anchor)
    }
}

#[derive(Args, Debug)]
pub struct EntropyCmd {
    #[command(flatten)]
    pub map: MapArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Print `nu i omega point` lines to stderr.
    #[arg(long)]
    pub trace: bool,
    /// Write the per-step history CSV here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepCmd {
    #[command(flatten)]
    pub map: MapArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// `name=start:stop:step`; give once or twice.
    #[arg(long = "sweep", required = true, allow_hyphen_values = true)]
    pub axes: Vec<SweepAxis>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchCmd {
    #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
    pub table: u8,
    /// Skip rows with a smaller eps.
    #[arg(long, default_value_t = 1e-7)]
    pub min_eps: f64,
    /// Write the JSON report here instead of after the table.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleMethod {
    /// Exact for piecewise-linear maps, grid otherwise.
    Auto,
    Exact,
    Grid,
    /// Exact oracle on the interpolant through the endpoints and turning points.
    Interpolant,
}

#[derive(Args, Debug)]
pub struct OracleCmd {
    #[command(flatten)]
    pub map: MapArgs,
    /// Largest iterate compared.
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: OracleMethod,
    #[arg(long, default_value_t = 1 << 20)]
    pub grid: usize,
}

#[derive(Args, Debug)]
pub struct ValidateCmd {
    #[command(flatten)]
    pub map: MapArgs,
    /// Sample points per lap.
    #[arg(long, default_value_t = DEFAULT_GRID_PER_LAP)]
    pub grid: usize,
}

fn param_text<'a>(args: &'a MapArgs, name: &str) -> Option<&'a String> {
    match name {
        "alpha" => args.alpha.as_ref(),
        "beta" => args.beta.as_ref(),
        "v1" => args.v1.as_ref(),
        "v2" => args.v2.as_ref(),
        "v3" => args.v3.as_ref(),
        _ => None,
    }
}

fn family_of(args: &MapArgs) -> Result<Family> {
    match (args.family, &args.map_file) {
        (Some(Family::File) | None, Some(_)) => Ok(Family::File),
        (Some(Family::File), None) => Err(Error::Parameter("--family file needs --map-file".into())),
        (Some(f), None) => Ok(f),
        (Some(_), Some(_)) => Err(Error::Parameter("give either --family or --map-file".into())),
        (None, None) => Err(Error::Parameter("missing --family or --map-file".into())),
    }
}

/// Builds a family member from named parameter values.
pub fn build_family(family: Family, params: &BTreeMap<&str, f64>) -> Result<MapModel> {
    let get = |name: &str| {
        params
            .get(name)
            .copied()
            .ok_or_else(|| Error::Parameter(format!("missing --{name} for this family")))
    };
    match family {
        Family::Gaussian => make_gaussian(get("alpha")?, get("beta")?),
        Family::Cubic2 => make_bimodal_cubic(get("v1")?, get("v2")?),
        Family::Quartic3 => make_trimodal_quartic(get("v2")?, get("v3")?),
        Family::Pl4 => Ok(make_pl4()),
        Family::Pl5 => Ok(make_pl5()),
        Family::Tent => Ok(make_tent()),
        Family::File => Err(Error::Parameter("file maps are not parameterized".into())),
    }
}

fn fixed_params(args: &MapArgs, family: Family) -> Result<BTreeMap<&'static str, f64>> {
    let mut params = BTreeMap::new();
    for &name in family.params() {
        if let Some(text) = param_text(args, name) {
            params.insert(name, to_f64(&parse_rational(text)?));
        }
    }
    Ok(params)
}

pub fn build_map(args: &MapArgs) -> Result<MapModel> {
    let family = family_of(args)?;
    if family == Family::File {
        return map_from_file(args.map_file.as_deref().expect("checked by family_of"));
    }
    build_family(family, &fixed_params(args, family)?)
}

#[derive(Serialize)]
struct EntropyRecord<'a> {
    map: &'a str,
    eps: f64,
    unit: Unit,
    h: f64,
    loops: usize,
    converged: bool,
    halt_variant: HaltVariant,
    elapsed_ms: f64,
}

fn write_history(path: &std::path::Path, run: &RunOutput) -> Result<()> {
    let io = |e: csv::Error| Error::Parameter(format!("writing {}: {e}", path.display()));
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(io)?;
    w.write_record(["nu", "s_nu", "S_nu", "lap", "h_nu"]).map_err(io)?;
    let laps = run.state.lap_sequence()?;
    for (k, h) in run.estimate.history.iter().enumerate() {
        let nu = k + 1;
        w.write_record([
            nu.to_string(),
            run.state.s(nu).to_string(),
            run.state.big_s(nu).to_string(),
            laps[nu].to_string(),
            format!("{h:.12}"),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parameter(format!("writing {}: {e}", path.display())))
}

fn cmd_entropy(cmd: &EntropyCmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let map = build_map(&cmd.map)?;
    let config = cmd.run.config();
    let start = Instant::now();
    let mut trace = Vec::new();
    let run = run_observed(&map, &config, |nu, symbols, points| {
        if cmd.trace {
            for (i, (s, p)) in symbols.iter().zip(points).enumerate() {
                trace.push(format!("{nu} {} {s} {p:e}", i + 1));
            }
        }
    })?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    for line in trace {
        writeln!(err, "{line}").ok();
    }
    if let Some(path) = &cmd.out {
        write_history(path, &run)?;
    }
    let est = &run.estimate;
    let record = EntropyRecord {
        map: map.label(),
        eps: config.eps,
        unit: est.unit,
        h: est.value,
        loops: est.loops,
        converged: est.converged,
        halt_variant: est.halt,
        elapsed_ms,
    };
    writeln!(out, "{}", serde_json::to_string(&record).expect("plain record")).ok();
    if est.converged {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "Algorithm failed: no convergence within {} loops", config.n_max).ok();
        Ok(EXIT_FAILED)
    }
}

fn cmd_sweep(cmd: &SweepCmd, out: &mut dyn Write) -> Result<i32> {
    let family = family_of(&cmd.map)?;
    if family == Family::File {
        return Err(Error::Parameter("sweeps need a parameterized --family".into()));
    }
    let names = family.params();
    for axis in &cmd.axes {
        if !names.contains(&axis.name.as_str()) {
            return Err(Error::Parameter(format!(
                "{:?} is not a parameter of this family (expected one of {names:?})",
                axis.name
            )));
        }
    }
    let fixed = fixed_params(&cmd.map, family)?;
    let axis_names: Vec<&'static str> = cmd
        .axes
        .iter()
        .map(|a| *names.iter().find(|n| **n == a.name).expect("checked above"))
        .collect();
    let build = |values: &[f64]| {
        let mut params = fixed.clone();
        for (name, &v) in axis_names.iter().zip(values) {
            params.insert(name, v);
        }
        build_family(family, &params)
    };
    let config = cmd.run.config();
    match &cmd.out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| Error::Parameter(format!("creating {}: {e}", path.display())))?;
            run_sweep(&cmd.axes, build, &config, std::io::BufWriter::new(file))?;
        }
        None => {
            run_sweep(&cmd.axes, build, &config, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bench(cmd: &BenchCmd, out: &mut dyn Write) -> Result<i32> {
    let report: BenchReport = run_table(cmd.table, cmd.min_eps)?;
    write!(out, "{}", report.render()).ok();
    let json = serde_json::to_string_pretty(&report).expect("plain report");
    match &cmd.json {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| Error::Parameter(format!("writing {}: {e}", path.display())))?,
        None => {
            writeln!(out, "{json}").ok();
        }
    }
    Ok(EXIT_OK)
}

fn big_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// Per-`n` comparison of recursion data with an oracle profile.
pub fn compare(state: &EntropyState, laps: &[BigUint], profile: &LapProfile) -> (bool, Value) {
    let n = profile.n;
    let l = state.modality();
    let rec_crossings: Vec<BigUint> = (1..=l).map(|i| state.s_line(i, n).clone()).collect();
    let agree = laps[n] == BigUint::from(profile.laps)
        && rec_crossings.iter().zip(&profile.crossings).all(|(a, &b)| *a == BigUint::from(b));
    let mut record = serde_json::to_value(profile).expect("plain profile");
    let obj = record.as_object_mut().expect("struct serializes to an object");
    obj.insert("recursion_laps".into(), big_json(&laps[n]));
    obj.insert("recursion_crossings".into(), Value::Array(rec_crossings.iter().map(big_json).collect()));
    obj.insert("agree".into(), json!(agree));
    (agree, record)
}

fn cmd_oracle(cmd: &OracleCmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let map = build_map(&cmd.map)?;
    let map = if map.is_anchored() { map } else { map.anchor(DEFAULT_ANCHOR_MARGIN)? };
    let state = recursion_to(&map, cmd.n, None)?;
    let laps = state.lap_sequence()?;
    let method = match cmd.method {
        OracleMethod::Auto if map.kind() == MapKind::PiecewiseLinear => OracleMethod::Exact,
        OracleMethod::Auto => OracleMethod::Grid,
        m => m,
    };
    let profiles = match method {
        OracleMethod::Exact => exact_profiles(&map, cmd.n, DEFAULT_BREAKPOINT_CAP)?,
        OracleMethod::Interpolant => {
            exact_profiles(&turning_point_interpolant(&map)?, cmd.n, DEFAULT_BREAKPOINT_CAP)?
        }
        _ => thread_pool()?.install(|| grid_profiles(&map, cmd.n, cmd.grid)),
    };
    let mut all = true;
    for profile in profiles.iter().skip(1) {
        let (agree, record) = compare(&state, &laps, profile);
        all &= agree;
        if profile.grid.is_some() && profile.degenerate > 0 {
            writeln!(err, "warning: n = {}: {} flat grid steps; refine --grid", profile.n, profile.degenerate).ok();
        }
        writeln!(out, "{record}").ok();
    }
    writeln!(out, "{}", json!({"map": map.label(), "n": cmd.n, "agree": all})).ok();
    Ok(if all { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_validate(cmd: &ValidateCmd, out: &mut dyn Write) -> Result<i32> {
    let map = build_map(&cmd.map)?;
    let report = map.validate(cmd.grid);
    let shape = report.detected_shape.map(|s| s.to_string()).unwrap_or_else(|| "unknown".into());
    match &report.violation {
        None => {
            writeln!(out, "{}: valid, l = {}, {shape} shape", map.label(), report.modality).ok();
            Ok(EXIT_OK)
        }
        Some(v) => {
            writeln!(out, "{}: invalid: {v}", map.label()).ok();
            Ok(EXIT_USAGE)
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Entropy(c) => cmd_entropy(c, out, err),
        Command::Sweep(c) => cmd_sweep(c, out),
        Command::Bench(c) => cmd_bench(c, out),
        Command::OracleCheck(c) => cmd_oracle(c, out, err),
        Command::Validate(c) => cmd_validate(c, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            EXIT_USAGE
        }
    }
}
