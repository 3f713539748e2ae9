//! Front end for `hirzebruch-core`: argument parsing, JSON/CSV rendering,
//! run files, atomic output and golden files.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hirzebruch_core::lattice::PointConfig;
use hirzebruch_core::linsys::scan::{prepare_surface, scan_cell, ScanCell, ScanGrid, ScanReport};
use hirzebruch_core::linsys::{linsys_report, LinSysSpec};
use hirzebruch_core::negcurves::{
    candidate_filter, enumerate_neg_classes, family_of, EnumBounds, NegCurveClass,
};
use hirzebruch_core::positivity::{ample_report, is_ample_closed_form, nef_report, ConeGenerators};
use hirzebruch_core::seshadri::{
    seshadri_enumerative, seshadri_fe, seshadri_r_e, seshadri_small_r, SeshadriResult, XPosition,
};
use hirzebruch_core::{DivClass, Error as CoreError, SurfaceModel};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub mod golden;

/// Exit statuses. Every failure kind has its own code.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MALFORMED_JSON: i32 = 1;
    pub const UNSUPPORTED_RANGE: i32 = 2;
    pub const BOUNDS: i32 = 3;
    pub const USAGE: i32 = 4;
    pub const IO: i32 = 5;
    pub const GOLDEN_EXISTS: i32 = 6;
    pub const INVARIANT: i32 = 7;
    pub const OVERFLOW: i32 = 8;
    pub const DEGENERATE_SAMPLE: i32 = 9;
    pub const STRUCTURE: i32 = 10;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed JSON in {source_name} at line {line}, column {column}: {message}")]
    Json { source_name: String, line: usize, column: usize, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
    #[error("golden file {0} exists; pass --force to overwrite")]
    GoldenExists(PathBuf),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Json { .. } => exit::MALFORMED_JSON,
            CliError::Usage(_) => exit::USAGE,
            CliError::Io { .. } => exit::IO,
            CliError::GoldenExists(_) => exit::GOLDEN_EXISTS,
            CliError::Core(e) => match e {
                CoreError::UnsupportedRange(_) => exit::UNSUPPORTED_RANGE,
                CoreError::Bounds(_) => exit::BOUNDS,
                CoreError::InvalidArgument(_) => exit::USAGE,
                CoreError::Invariant(_) => exit::INVARIANT,
                CoreError::Overflow => exit::OVERFLOW,
                CoreError::DegenerateSample(_) => exit::DEGENERATE_SAMPLE,
                CoreError::Structure(_) => exit::STRUCTURE,
            },
        }
    }

    fn json(source_name: &str, e: serde_json::Error) -> Self {
        CliError::Json {
            source_name: source_name.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), err }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "hirzebruch", version, about = "Intersection theory, positivity and Seshadri constants on blown-up Hirzebruch surfaces")]
pub struct Cli {
    /// Worker threads for parallel work (scan).
    #[arg(long, env = "HIRZ_THREADS", global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub e: u32,
    #[arg(long, default_value_t = 0)]
    pub r: usize,
    /// Point configuration as JSON (or @file): "very_general" or
    /// {"configured":{"on_ce":[bool per point],"fiber":[fiber id per point]}}.
    #[arg(long)]
    pub config: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ampleness by the closed form (when it applies) and by Nakai–Moishezon.
    Ample {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Class "a,b,m1,..,mr".
        #[arg(long = "L", allow_hyphen_values = true)]
        class: String,
        /// "auto" or "a_max,b_max,m_max".
        #[arg(long, default_value = "auto")]
        bounds: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Nefness against the cone generators.
    Nef {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long = "D", allow_hyphen_values = true)]
        class: String,
        #[arg(long, default_value = "auto")]
        bounds: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Seshadri constant of L at x.
    Seshadri {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long = "L", allow_hyphen_values = true)]
        class: String,
        /// generic | on-ce | on-fiber:i | on-ce-and-fiber:i |
        /// on-fiber-and-exc:i | on-exc:i (points numbered from 1).
        #[arg(long = "x-position", default_value = "generic")]
        x_position: String,
        #[arg(long, default_value = "auto")]
        bounds: String,
        /// auto | fe | small-r | r-e | enumerative
        #[arg(long, default_value = "auto")]
        method: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List (-1)- and (-2)-classes.
    Enumerate {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        with_x: bool,
        /// all | candidates | curves
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, default_value = "auto")]
        bounds: String,
        /// Also write the orbit/family summary as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Dimensions, speciality and the (-1)-reduction of L(a, b; m).
    Linsys {
        #[arg(long)]
        e: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Multiplicities "m1,..,mr".
        #[arg(long, default_value = "")]
        m: String,
        #[arg(long, default_value = "1,2,3")]
        seeds: String,
        #[arg(long, default_value = "auto")]
        bounds: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Scan a grid of linear systems.
    Scan {
        /// Grid file (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Directory receiving scan.csv and scan.json.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate the golden files.
    Golden {
        #[arg(long, default_value = golden::DEFAULT_DIR)]
        dir: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Execute a run file.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandKind {
    Ample,
    Nef,
    Seshadri,
    Enumerate,
    Linsys,
    Scan,
    Golden,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default)]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

/// A class given either as "a,b,m1,.." text or as a JSON object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassArg {
    Text(String),
    Json(DivClass),
}

impl ClassArg {
    fn resolve(&self) -> CliResult<DivClass> {
        match self {
            ClassArg::Text(s) => Ok(s.parse()?),
            ClassArg::Json(d) => Ok(d.clone()),
        }
    }
}

/// Contents of a run file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(default)]
    pub surface: Option<SurfaceModel>,
    #[serde(default)]
    pub class: Option<ClassArg>,
    #[serde(default)]
    pub spec: Option<LinSysSpec>,
    #[serde(default)]
    pub bounds: Option<EnumBounds>,
    #[serde(default)]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub x_position: Option<XPosition>,
    #[serde(default)]
    pub method: Option<String>,
    #[serde(default)]
    pub filter: Option<String>,
    #[serde(default)]
    pub grid: Option<ScanGrid>,
    #[serde(default)]
    pub force: bool,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Fe,
    SmallR,
    RE,
    Enumerative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    Candidates,
    Curves,
}

/// A validated command.
#[derive(Clone, Debug)]
pub enum Request {
    Ample { surface: SurfaceModel, class: DivClass, bounds: EnumBounds },
    Nef { surface: SurfaceModel, class: DivClass, bounds: EnumBounds },
    Seshadri { surface: SurfaceModel, class: DivClass, x: XPosition, bounds: EnumBounds, method: Method },
    Enumerate { surface: SurfaceModel, filter: Filter, bounds: EnumBounds },
    Linsys { spec: LinSysSpec, seeds: Vec<u64>, bounds: EnumBounds },
    Scan { grid: ScanGrid },
}

/// Rendered result of a request.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub json: Value,
    pub table: String,
    pub csv: Option<String>,
}

impl Rendered {
    pub fn json_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
        s.push('\n');
        s
    }

    pub fn format(&self, f: Format) -> CliResult<String> {
        match f {
            Format::Json => Ok(self.json_text()),
            Format::Table => Ok(self.table.clone()),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| CliError::Usage("this command has no CSV output".into())),
        }
    }
}

pub fn parse_bounds(s: &str) -> CliResult<EnumBounds> {
    if s.trim() == "auto" {
        return Ok(EnumBounds::auto());
    }
    let v = parse_ints(s)?;
    match v[..] {
        [a, b, m] if a >= 0 && b >= 0 && m >= 0 => Ok(EnumBounds::manual(a as u64, b as u64, m as u64)),
        _ => Err(CliError::Usage(format!("bounds must be \"auto\" or \"a_max,b_max,m_max\", got {s:?}"))),
    }
}

fn parse_ints(s: &str) -> CliResult<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("not an integer list: {s:?}"))))
        .collect()
}

fn parse_seeds(s: &str) -> CliResult<Vec<u64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad seed list {s:?}"))))
        .collect()
}

/// Positions as typed on the command line; point numbers start at 1.
pub fn parse_x_position(s: &str) -> CliResult<XPosition> {
    let bad = || CliError::Usage(format!("unknown x position {s:?}"));
    let (name, idx) = match s.split_once(':') {
        Some((n, i)) => {
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(CliError::Usage("points are numbered from 1".into()));
            }
            (n.trim(), Some(i - 1))
        }
        None => (s.trim(), None),
    };
    Ok(match (name, idx) {
        ("generic", None) => XPosition::Generic,
        ("on-ce", None) => XPosition::OnCe,
        ("on-fiber", Some(i)) => XPosition::OnFiber(i),
        ("on-ce-and-fiber", Some(i)) => XPosition::OnCeAndFiber(i),
        ("on-fiber-and-exc", Some(i)) => XPosition::OnFiberAndExc(i),
        ("on-exc", Some(i)) => XPosition::OnExc(i),
        _ => return Err(bad()),
    })
}

fn parse_method(s: &str) -> CliResult<Method> {
    Ok(match s {
        "auto" => Method::Auto,
        "fe" => Method::Fe,
        "small-r" => Method::SmallR,
        "r-e" => Method::RE,
        "enumerative" => Method::Enumerative,
        _ => return Err(CliError::Usage(format!("unknown method {s:?}"))),
    })
}

fn parse_filter(s: &str) -> CliResult<Filter> {
    Ok(match s {
        "all" => Filter::All,
        "candidates" => Filter::Candidates,
        "curves" => Filter::Curves,
        _ => return Err(CliError::Usage(format!("unknown filter {s:?}"))),
    })
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Inline JSON, or `@path` to read it from a file.
fn json_arg<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> CliResult<T> {
    let (text, name) = match arg.strip_prefix('@') {
        Some(p) => (read_text(Path::new(p))?, p.to_string()),
        None => (arg.to_string(), what.to_string()),
    };
    serde_json::from_str(&text).map_err(|e| CliError::json(&name, e))
}

fn surface_from(args: &SurfaceArgs, with_x: bool) -> CliResult<SurfaceModel> {
    let mut s = SurfaceModel::new(args.e, args.r);
    if let Some(c) = &args.config {
        let cfg: PointConfig = json_arg(c, "--config")?;
        s = s.with_config(cfg)?;
    }
    Ok(if with_x { s.with_extra_point() } else { s })
}

/// Parse a class and check its length against the surface.
fn class_on(text: &str, s: &SurfaceModel) -> CliResult<DivClass> {
    let d: DivClass = text.parse()?;
    s.check(&d)?;
    Ok(d)
}

pub fn request_from_command(cmd: &Command) -> CliResult<(Request, Format, Option<PathBuf>)> {
    let fmt = |o: &OutArgs| if o.json { Format::Json } else { Format::Table };
    Ok(match cmd {
        Command::Ample { surface, class, bounds, out } => {
            let s = surface_from(surface, false)?;
            let class = class_on(class, &s)?;
            (Request::Ample { surface: s, class, bounds: parse_bounds(bounds)? }, fmt(out), out.output.clone())
        }
        Command::Nef { surface, class, bounds, out } => {
            let s = surface_from(surface, false)?;
            let class = class_on(class, &s)?;
            (Request::Nef { surface: s, class, bounds: parse_bounds(bounds)? }, fmt(out), out.output.clone())
        }
        Command::Seshadri { surface, class, x_position, bounds, method, out } => {
            let s = surface_from(surface, false)?;
            let class = class_on(class, &s)?;
            (
                Request::Seshadri {
                    surface: s,
                    class,
                    x: parse_x_position(x_position)?,
                    bounds: parse_bounds(bounds)?,
                    method: parse_method(method)?,
                },
                fmt(out),
                out.output.clone(),
            )
        }
        Command::Enumerate { surface, with_x, filter, bounds, out, .. } => (
            Request::Enumerate {
                surface: surface_from(surface, *with_x)?,
                filter: parse_filter(filter)?,
                bounds: parse_bounds(bounds)?,
            },
            fmt(out),
            out.output.clone(),
        ),
        Command::Linsys { e, a, b, m, seeds, bounds, out } => {
            let seeds = parse_seeds(seeds)?;
            let spec = LinSysSpec::new(*e, *a, *b, parse_ints(m)?)?;
            (Request::Linsys { spec, seeds, bounds: parse_bounds(bounds)? }, fmt(out), out.output.clone())
        }
        Command::Scan { config, json, .. } => {
            let grid: ScanGrid = serde_json::from_str(&read_text(config)?)
                .map_err(|e| CliError::json(&config.display().to_string(), e))?;
            (Request::Scan { grid }, if *json { Format::Json } else { Format::Table }, None)
        }
        Command::Golden { .. } | Command::Run { .. } => {
            return Err(CliError::Usage("not a single request".into()))
        }
    })
}

pub fn request_from_config(cfg: &RunConfig) -> CliResult<Request> {
    let need = |what: &str| CliError::Usage(format!("run file for {:?} lacks {what}", cfg.command));
    let bounds = cfg.bounds.unwrap_or(EnumBounds::auto());
    let surface_class = || -> CliResult<(SurfaceModel, DivClass)> {
        let s = cfg.surface.clone().ok_or_else(|| need("surface"))?;
        let d = cfg.class.as_ref().ok_or_else(|| need("class"))?.resolve()?;
        s.check(&d)?;
        Ok((s, d))
    };
    Ok(match cfg.command {
        CommandKind::Ample => {
            let (surface, class) = surface_class()?;
            Request::Ample { surface, class, bounds }
        }
        CommandKind::Nef => {
            let (surface, class) = surface_class()?;
            Request::Nef { surface, class, bounds }
        }
        CommandKind::Seshadri => {
            let (surface, class) = surface_class()?;
            Request::Seshadri {
                surface,
                class,
                x: cfg.x_position.unwrap_or(XPosition::Generic),
                bounds,
                method: parse_method(cfg.method.as_deref().unwrap_or("auto"))?,
            }
        }
        CommandKind::Enumerate => Request::Enumerate {
            surface: cfg.surface.clone().ok_or_else(|| need("surface"))?,
            filter: parse_filter(cfg.filter.as_deref().unwrap_or("all"))?,
            bounds,
        },
        CommandKind::Linsys => {
            if cfg.seeds.is_empty() {
                return Err(need("seeds"));
            }
            let spec = cfg.spec.clone().ok_or_else(|| need("spec"))?;
            let spec = LinSysSpec::new(spec.e, spec.a, spec.b, spec.mults)?;
            Request::Linsys { spec, seeds: cfg.seeds.clone(), bounds }
        }
        CommandKind::Scan => {
            let mut grid = cfg.grid.clone().ok_or_else(|| need("grid"))?;
            if !cfg.seeds.is_empty() {
                grid.seeds = cfg.seeds.clone();
            }
            if grid.seeds.is_empty() {
                return Err(need("seeds"));
            }
            Request::Scan { grid }
        }
        CommandKind::Golden => return Err(CliError::Usage("golden is handled by run".into())),
    })
}

fn verdict_json(holds_key: &str, holds: bool, rep: &hirzebruch_core::positivity::PositivityReport) -> Value {
    json!({
        holds_key: holds,
        "self_intersection": rep.self_intersection,
        "min_pairing": rep.min_pairing,
        "witness": rep.witness.to_string(),
    })
}

/// Picks a closed form when one applies, else the enumerative engine.
pub fn seshadri_dispatch(
    s: &SurfaceModel,
    l: &DivClass,
    x: XPosition,
    bounds: &EnumBounds,
    method: Method,
) -> CliResult<SeshadriResult> {
    let e = s.e() as usize;
    let method = match method {
        Method::Auto if s.r() == 0 && matches!(x, XPosition::Generic | XPosition::OnCe) => Method::Fe,
        Method::Auto if x != XPosition::Generic => Method::SmallR,
        Method::Auto if e > 0 && s.r() < e && s.points_in_general_position() => Method::SmallR,
        Method::Auto if e > 0 && (s.r() == e || s.r() == e + 1) && s.is_very_general() => Method::RE,
        Method::Auto => Method::Enumerative,
        m => m,
    };
    Ok(match method {
        Method::Fe => {
            if s.r() != 0 {
                return Err(CoreError::UnsupportedRange("method fe needs r = 0".into()).into());
            }
            seshadri_fe(l.a, l.b, s.e(), x == XPosition::OnCe)?
        }
        Method::SmallR => seshadri_small_r(l, s, x)?,
        Method::RE => seshadri_r_e(l, s)?,
        _ => seshadri_enumerative(l, s, bounds)?,
    })
}

pub fn seshadri_json(r: &SeshadriResult) -> Value {
    json!({
        "value": r.value.to_string(),
        "approx": r.value.approx_decimal(6),
        "witness": r.witness.to_string(),
        "witness_class": r.witness.algebraic().to_string(),
        "mult_x": r.witness_mult,
        "method": r.method,
        "certified": r.certified,
        "bounds": r.bounds,
    })
}

#[derive(Serialize)]
struct EnumRow<'a> {
    #[serde(flatten)]
    class: &'a NegCurveClass,
    family: Option<u8>,
}

fn orbit_summary(rows: &[(NegCurveClass, Option<u8>)]) -> CliResult<String> {
    // (kind, a, b, sorted mults, mx) -> (count, family, irreducible shape, effective)
    type Key = (String, i64, i64, Vec<i64>, Option<i64>);
    let mut groups: BTreeMap<Key, (usize, Option<u8>, bool, bool)> = BTreeMap::new();
    for (c, fam) in rows {
        let mut m = c.cls.m.clone();
        m.sort_unstable_by(|x, y| y.cmp(x));
        let kind = serde_json::to_value(c.kind).expect("kind").as_str().unwrap_or("").to_string();
        let g = groups
            .entry((kind, c.cls.a, c.cls.b, m, c.cls.mx))
            .or_insert((0, *fam, c.passes_irreducibility, c.passes_very_general));
        g.0 += 1;
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(e.to_string());
    w.write_record(["kind", "a", "b", "m_sorted", "mx", "count", "family", "irreducible_shape", "effective"])
        .map_err(io)?;
    for ((kind, a, b, m, mx), (count, fam, irr, eff)) in groups {
        let m: Vec<String> = m.iter().map(i64::to_string).collect();
        w.write_record([
            kind,
            a.to_string(),
            b.to_string(),
            m.join(" "),
            mx.map_or(String::new(), |x| x.to_string()),
            count.to_string(),
            fam.map_or(String::new(), |f| f.to_string()),
            irr.to_string(),
            eff.to_string(),
        ])
        .map_err(io)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?).expect("utf8"))
}

pub fn scan_csv(cells: &[ScanCell]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(e.to_string());
    w.write_record([
        "e", "a", "b", "mults", "virtual_dim", "expected_dim", "actual_dim", "actual_dims", "seed_stable",
        "special", "minus_one_special", "ce_fixed", "steps", "ce_steps", "max_t", "repeated_class",
        "reduced", "reduced_empty", "lemma_shadow", "reduced_proxy",
    ])
    .map_err(io)?;
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    for c in cells {
        w.write_record([
            c.spec.e.to_string(),
            c.spec.a.to_string(),
            c.spec.b.to_string(),
            join(&c.spec.mults),
            c.virtual_dim.to_string(),
            c.expected_dim.to_string(),
            c.actual_dim.to_string(),
            join(&c.actual_dims),
            c.seed_stable.to_string(),
            c.special.to_string(),
            c.minus_one_special.to_string(),
            c.ce_fixed.map_or("empty".to_string(), |b| b.to_string()),
            c.steps.to_string(),
            c.ce_steps.to_string(),
            c.max_t.to_string(),
            c.repeated_class.to_string(),
            c.reduced.to_string(),
            c.reduced_empty.to_string(),
            c.lemma_shadow.to_string(),
            c.reduced_proxy.to_string(),
        ])
        .map_err(io)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?).expect("utf8"))
}

/// Scan with cells mapped in parallel; output order follows the grid.
pub fn parallel_scan(grid: &ScanGrid) -> CliResult<ScanReport> {
    if grid.seeds.is_empty() {
        return Err(CliError::Usage("scan needs at least one seed".into()));
    }
    let surfaces = grid
        .surfaces()
        .into_par_iter()
        .map(|(e, r)| prepare_surface(grid, e, r))
        .collect::<Result<Vec<_>, _>>()?;
    let results = grid
        .cells()
        .into_par_iter()
        .map(|spec| {
            let data = surfaces.iter().find(|d| d.e == spec.e && d.r == spec.r()).expect("prepared");
            let res = scan_cell(&spec, &grid.seeds, &data.negs);
            (spec, res)
        })
        .collect();
    Ok(ScanReport::assemble(results, &surfaces))
}

fn scan_summary(rep: &ScanReport) -> Value {
    json!({
        "cells": rep.cells.len(),
        "special": rep.cells.iter().filter(|c| c.special).count(),
        "minus_one_special": rep.cells.iter().filter(|c| c.minus_one_special).count(),
        "special_vs_minus_one_nonempty": rep.special_vs_minus_one,
        "non_special_hypothesis": rep.non_special_hypothesis,
        "shadow_violations": rep.shadow_violations,
        "v_violations": rep.v_violations,
        "below_expected": rep.below_expected,
        "unstable": rep.unstable,
        "failures": rep.failures,
        "curve_types": rep.curve_types,
    })
}

pub fn execute(req: &Request) -> CliResult<Rendered> {
    match req {
        Request::Ample { surface, class, bounds } => {
            let g = ConeGenerators::build(surface, bounds)?;
            let rep = ample_report(class, surface, &g)?;
            let closed = match is_ample_closed_form(class, surface) {
                Ok(b) => Some(b),
                Err(CoreError::UnsupportedRange(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let mut j = verdict_json("ample", rep.holds, &rep);
            j["closed_form"] = json!(closed);
            j["bounds"] = json!(g.bounds);
            let table = format!(
                "ample: {}\nclosed form: {}\nL^2 = {}\nleast pairing {} with {}\n",
                rep.holds,
                closed.map_or("n/a".to_string(), |b| b.to_string()),
                rep.self_intersection,
                rep.min_pairing,
                rep.witness.algebraic()
            );
            Ok(Rendered { json: j, table, csv: None })
        }
        Request::Nef { surface, class, bounds } => {
            let g = ConeGenerators::build(surface, bounds)?;
            let rep = nef_report(class, surface, &g)?;
            let mut j = verdict_json("nef", rep.holds, &rep);
            j["bounds"] = json!(g.bounds);
            let table = format!(
                "nef: {}\nleast pairing {} with {}\n",
                rep.holds,
                rep.min_pairing,
                rep.witness.algebraic()
            );
            Ok(Rendered { json: j, table, csv: None })
        }
        Request::Seshadri { surface, class, x, bounds, method } => {
            let r = seshadri_dispatch(surface, class, *x, bounds, *method)?;
            let table = format!(
                "epsilon = {} (≈ {})\nwitness: {} with multiplicity {} at x\nmethod: {:?}, certified: {}\n",
                r.value,
                r.value.approx_decimal(4),
                r.witness.algebraic(),
                r.witness_mult,
                r.method,
                r.certified
            );
            Ok(Rendered { json: seshadri_json(&r), table, csv: None })
        }
        Request::Enumerate { surface, filter, bounds } => {
            let all = enumerate_neg_classes(surface, bounds)?;
            let f36 = surface.e() == 3 && surface.r() == 6 && surface.has_x();
            let rows: Vec<(NegCurveClass, Option<u8>)> = all
                .into_iter()
                .filter(|c| match filter {
                    Filter::All => true,
                    Filter::Candidates => candidate_filter(&c.cls, surface),
                    Filter::Curves => c.is_candidate_curve(),
                })
                .map(|c| {
                    let fam = (f36 && candidate_filter(&c.cls, surface)).then(|| family_of(&c.cls)).flatten();
                    (c, fam)
                })
                .collect();
            let json = serde_json::to_value(
                rows.iter().map(|(c, f)| EnumRow { class: c, family: *f }).collect::<Vec<_>>(),
            )
            .expect("serializable");
            let mut table = String::new();
            for (c, f) in &rows {
                table.push_str(&format!(
                    "{:?}\t{}\t{}{}\n",
                    c.kind,
                    c.cls,
                    c.cls.algebraic(),
                    f.map_or(String::new(), |f| format!("\tfamily {f}"))
                ));
            }
            table.push_str(&format!("{} classes\n", rows.len()));
            Ok(Rendered { json, table, csv: Some(orbit_summary(&rows)?) })
        }
        Request::Linsys { spec, seeds, bounds } => {
            let s = spec.surface();
            let negs = enumerate_neg_classes(&s, bounds)?;
            let rep = linsys_report(spec, seeds, &negs)?;
            let table = format!(
                "virtual {} expected {} actual {}\nspecial {} (-1)-special {}\nreduced to {} in {} steps{}\n",
                rep.virtual_dim,
                rep.expected_dim,
                rep.actual_dim,
                rep.special,
                rep.minus_one_special,
                rep.reduced.algebraic(),
                rep.reduction_log.len(),
                if rep.reduced_empty { " (empty)" } else { "" }
            );
            Ok(Rendered { json: serde_json::to_value(&rep).expect("serializable"), table, csv: None })
        }
        Request::Scan { grid } => {
            let rep = parallel_scan(grid)?;
            let summary = scan_summary(&rep);
            let table = format!(
                "{} cells, {} special, {} (-1)-special\nnon-empty systems: {:?}\nshadow violations {}, unstable {}, failures {}\n",
                rep.cells.len(),
                summary["special"],
                summary["minus_one_special"],
                rep.special_vs_minus_one,
                rep.shadow_violations,
                rep.unstable,
                rep.failures.len()
            );
            Ok(Rendered {
                json: serde_json::to_value(&rep).expect("serializable"),
                table,
                csv: Some(scan_csv(&rep.cells)?),
            })
        }
    }
}

/// Write via a temporary file in the same directory, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> CliResult<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp-{}", std::process::id()));
    let res = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if let Err(e) = res {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::io(path, e));
    }
    Ok(())
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}

fn run_scan_to_dir(rendered: &Rendered, dir: &Path) -> CliResult<()> {
    write_atomic(&dir.join("scan.json"), rendered.json_text().as_bytes())?;
    write_atomic(&dir.join("scan.csv"), rendered.csv.as_deref().unwrap_or("").as_bytes())
}

pub fn run_config(cfg: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    if cfg.command == CommandKind::Golden {
        let dir = cfg.output.path.clone().unwrap_or_else(|| PathBuf::from(golden::DEFAULT_DIR));
        let written = golden::regenerate(&dir, cfg.force)?;
        return emit(&format!("wrote {written} golden files to {}\n", dir.display()), None, stdout);
    }
    let req = request_from_config(cfg)?;
    let rendered = execute(&req)?;
    emit(&rendered.format(cfg.output.format)?, cfg.output.path.as_deref(), stdout)
}

/// Parse the command line and run it; returns the exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return exit::USAGE;
            }
            let _ = write!(stdout, "{e}");
            return exit::OK;
        }
    };
    if let Some(n) = cli.threads {
        // a pool may already exist when called repeatedly in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli.command, stdout) {
        Ok(()) => exit::OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, stdout: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Golden { dir, force } => {
            let n = golden::regenerate(dir, *force)?;
            emit(&format!("wrote {n} golden files to {}\n", dir.display()), None, stdout)
        }
        Command::Run { config } => {
            let cfg: RunConfig = serde_json::from_str(&read_text(config)?)
                .map_err(|e| CliError::json(&config.display().to_string(), e))?;
            run_config(&cfg, stdout)
        }
        Command::Scan { out, .. } => {
            let (req, fmt, _) = request_from_command(cmd)?;
            let rendered = execute(&req)?;
            if let Some(dir) = out {
                run_scan_to_dir(&rendered, dir)?;
            }
            let text = match fmt {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&summary_of(&rendered)).expect("json");
                    s.push('\n');
                    s
                }
                _ => rendered.table.clone(),
            };
            emit(&text, None, stdout)
        }
        Command::Enumerate { csv, .. } => {
            let (req, fmt, path) = request_from_command(cmd)?;
            let rendered = execute(&req)?;
            if let Some(p) = csv {
                write_atomic(p, rendered.csv.as_deref().unwrap_or("").as_bytes())?;
            }
            emit(&rendered.format(fmt)?, path.as_deref(), stdout)
        }
        _ => {
            let (req, fmt, path) = request_from_command(cmd)?;
            let rendered = execute(&req)?;
            emit(&rendered.format(fmt)?, path.as_deref(), stdout)
        }
    }
}

fn summary_of(rendered: &Rendered) -> Value {
    let mut v = rendered.json.clone();
    if let Some(o) = v.as_object_mut() {
        o.remove("cells");
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        assert_eq!(parse_x_position("generic").unwrap(), XPosition::Generic);
        assert_eq!(parse_x_position("on-ce").unwrap(), XPosition::OnCe);
        assert_eq!(parse_x_position("on-fiber:1").unwrap(), XPosition::OnFiber(0));
        assert_eq!(parse_x_position("on-exc:3").unwrap(), XPosition::OnExc(2));
        assert_eq!(parse_x_position("on-fiber-and-exc:2").unwrap(), XPosition::OnFiberAndExc(1));
        assert!(parse_x_position("on-fiber:0").is_err());
        assert!(parse_x_position("on-fiber").is_err());
        assert!(parse_x_position("generic:1").is_err());
    }

    #[test]
    fn bounds_text() {
        assert!(parse_bounds("auto").unwrap().is_auto());
        let b = parse_bounds("2, 7,3").unwrap();
        assert_eq!((b.a_max, b.b_max, b.m_max), (2, 7, 3));
        assert!(parse_bounds("1,2").is_err());
        assert!(parse_bounds("1,-2,3").is_err());
    }

    #[test]
    fn error_codes() {
        let codes = [
            CliError::from(CoreError::UnsupportedRange(String::new())).exit_code(),
            CliError::from(CoreError::Bounds(String::new())).exit_code(),
            CliError::from(CoreError::Invariant(String::new())).exit_code(),
            CliError::from(CoreError::Overflow).exit_code(),
            CliError::from(CoreError::DegenerateSample(3)).exit_code(),
            CliError::from(CoreError::Structure(String::new())).exit_code(),
        ];
        assert_eq!(codes, [2, 3, 7, 8, 9, 10]);
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x/y.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read(&p).unwrap(), b"two");
        assert_eq!(fs::read_dir(p.parent().unwrap()).unwrap().count(), 1);
    }
}
