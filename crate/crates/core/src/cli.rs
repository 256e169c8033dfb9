//! Command-line front end.
//!
//! Exit codes: 0 success, 1 bad input or failed report, 2 index outside the
//! proven range without `--force`, 3 internal assertion failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::graph::{
    build_graph, check_graph, supported, to_dot, to_json, BuildOptions, CheckReport, DecoGraph,
    SupportStatus,
};
use crate::oracle::{minuscule_checks, three_way, OracleReport};
use crate::rootsystem::{CartanData, CartanType, Family};
use crate::stringcone::{
    dual_kostant_count, render, string_cone, weight_census, weights_up_to, ConeFormat,
};
use crate::wordtools::DEFAULT_WORD_LIMIT;
use crate::wordtools::{enumerate_w0_words, parse_letters, validate_word, ReducedWord};

/// Relative `--output` paths, and default artifact names, resolve here.
pub const OUTPUT_DIR_ENV: &str = "DECOGRAPH_OUTPUT_DIR";

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_UNSUPPORTED: u8 = 2;
pub const EXIT_ASSERTION: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "decograph",
    version,
    about = "Decoration graphs and string cones"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the decoration graph of one summand (or all, without --i).
    Graph(RunArgs),
    /// Emit the string cone inequalities for a word.
    Cone(RunArgs),
    /// Run the invariant suite and report pass/fail as JSON.
    Check(RunArgs),
    /// Three-way oracle comparison (type A) and cone census sweep.
    Oracle(RunArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Cartan type, e.g. C3.
    #[arg(long = "type")]
    pub ty: String,
    /// Reduced word of the longest element, e.g. 2,3,2,1,2,3,2,3,1.
    #[arg(long)]
    pub word: Option<String>,
    /// Summand index; all indices when absent.
    #[arg(long)]
    pub i: Option<usize>,
    /// dot | json | text | latex.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Build outside the proven range and report violations.
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub minuscule_fast_path: bool,
    /// Census compares all weights with coordinate sum up to this bound.
    #[arg(long, default_value_t = 2)]
    pub census_bound: u64,
    #[arg(long, default_value_t = DEFAULT_WORD_LIMIT)]
    pub word_limit: usize,
    /// Use every reduced word of the longest element instead of --word.
    #[arg(long)]
    pub all_words: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GraphFormat {
    Dot,
    Json,
    Text,
}

/// Validated configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cd: CartanData,
    pub words: Vec<ReducedWord>,
    pub i: Option<usize>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
    pub options: BuildOptions,
    pub census_bound: u64,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(field: &str, err: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_FAILURE,
            message: format!("{field}: {err}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::UnsupportedIndex { .. } => EXIT_UNSUPPORTED,
            e if e.is_assertion() => EXIT_ASSERTION,
            _ => EXIT_FAILURE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> CliResult<Self> {
        let ty: CartanType = args.ty.parse().map_err(|e| CliError::input("--type", e))?;
        let cd = CartanData::new(ty);
        let words = match (&args.word, args.all_words) {
            (Some(_), true) => {
                return Err(CliError::input(
                    "--word",
                    "cannot be combined with --all-words",
                ))
            }
            (Some(s), false) => {
                let letters = parse_letters(s).map_err(|e| CliError::input("--word", e))?;
                vec![validate_word(&cd, &letters).map_err(|e| CliError::input("--word", e))?]
            }
            (None, true) => enumerate_w0_words(&cd, args.word_limit)
                .map_err(|e| CliError::input("--word-limit", e))?,
            (None, false) => {
                return Err(CliError::input(
                    "--word",
                    "required unless --all-words is given",
                ))
            }
        };
        if let Some(i) = args.i {
            cd.check_index(i).map_err(|e| CliError::input("--i", e))?;
        }
        Ok(Self {
            cd,
            words,
            i: args.i,
            format: args.format.clone(),
            output: args.output.clone(),
            options: BuildOptions {
                force: args.force,
                minuscule_fast_path: args.minuscule_fast_path,
            },
            census_bound: args.census_bound,
        })
    }

    fn indices(&self) -> Vec<usize> {
        match self.i {
            Some(i) => vec![i],
            None => (1..=self.cd.rank()).collect(),
        }
    }

    fn default_name(&self, command: &str, ext: &str) -> String {
        let mut name = format!("{command}_{}", self.cd.cartan_type());
        if let [w] = self.words.as_slice() {
            let letters: Vec<String> = w.letters().iter().map(|l| l.to_string()).collect();
            name.push('_');
            name.push_str(&letters.join("-"));
        } else {
            name.push_str("_all");
        }
        if let Some(i) = self.i {
            let _ = write!(name, "_i{i}");
        }
        format!("{name}.{ext}")
    }

    /// `None` means stdout.
    fn destination(&self, command: &str, ext: &str) -> Option<PathBuf> {
        let dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
        match (&self.output, dir) {
            (Some(p), Some(dir)) if p.is_relative() => Some(dir.join(p)),
            (Some(p), _) => Some(p.clone()),
            (None, Some(dir)) => Some(dir.join(self.default_name(command, ext))),
            (None, None) => None,
        }
    }
}

/// Writes via a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    let file_name = path
        .file_name()
        .ok_or_else(|| std::io::Error::other("output path has no file name"))?;
    let mut tmp_name = OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".{}.tmp", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

fn emit(cfg: &RunConfig, command: &str, ext: &str, contents: &str) -> CliResult<()> {
    match cfg.destination(command, ext) {
        Some(path) => write_atomic(&path, contents).map_err(|e| CliError {
            code: EXIT_FAILURE,
            message: format!("--output: cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError {
                    code: EXIT_FAILURE,
                    message: format!("cannot write to stdout: {e}"),
                })
        }
    }
}

fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn graph_text(g: &DecoGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} ({}) i={} support={}",
        g.cartan_type, g.word, g.i, g.support
    );
    for (d, b) in &g.vertices {
        let b: Vec<String> = b.0.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "vertex {d} b=({})", b.join(","));
    }
    for (src, j, dst) in g.labeled_edges() {
        let _ = writeln!(out, "edge {src} -{j}-> {dst}");
    }
    for v in &g.violations {
        let _ = writeln!(out, "violation {v}");
    }
    out
}

fn single_word(cfg: &RunConfig) -> CliResult<&ReducedWord> {
    match cfg.words.as_slice() {
        [w] => Ok(w),
        _ => Err(CliError::input(
            "--all-words",
            "only check and oracle accept it",
        )),
    }
}

pub fn cmd_graph(cfg: &RunConfig) -> CliResult<()> {
    let format = match cfg.format.as_deref().unwrap_or("dot") {
        "dot" => GraphFormat::Dot,
        "json" => GraphFormat::Json,
        "text" => GraphFormat::Text,
        other => {
            return Err(CliError::input(
                "--format",
                format!("{other:?} is not one of dot, json, text"),
            ))
        }
    };
    let w = single_word(cfg)?;
    let graphs = cfg
        .indices()
        .into_iter()
        .map(|i| build_graph(&cfg.cd, w, i, cfg.options))
        .collect::<Result<Vec<_>, _>>()?;
    let (ext, contents) = match format {
        GraphFormat::Dot => (
            "dot",
            graphs.iter().map(to_dot).collect::<Vec<_>>().join("\n"),
        ),
        GraphFormat::Json => {
            let json: Vec<_> = graphs.iter().map(to_json).collect();
            let s = match json.as_slice() {
                [one] => to_json_string(one),
                many => to_json_string(&many),
            };
            ("json", s)
        }
        GraphFormat::Text => (
            "txt",
            graphs.iter().map(graph_text).collect::<Vec<_>>().join("\n"),
        ),
    };
    emit(cfg, "graph", ext, &contents)?;
    if graphs.iter().any(|g| !g.violations.is_empty()) {
        return Err(CliError {
            code: EXIT_ASSERTION,
            message: "forced build recorded violations".to_string(),
        });
    }
    Ok(())
}

pub fn cmd_cone(cfg: &RunConfig) -> CliResult<()> {
    let format: ConeFormat = cfg
        .format
        .as_deref()
        .unwrap_or("text")
        .parse()
        .map_err(|e| CliError::input("--format", e))?;
    if cfg.i.is_some() {
        return Err(CliError::input("--i", "the cone always uses every index"));
    }
    let w = single_word(cfg)?;
    let cone = string_cone(&cfg.cd, w, cfg.options)?;
    let ext = match format {
        ConeFormat::Text => "txt",
        ConeFormat::Json => "json",
        ConeFormat::Latex => "tex",
    };
    emit(cfg, "cone", ext, &render(&cone, format))
}

#[derive(Debug, Serialize)]
pub struct CheckEntry {
    pub word: Vec<usize>,
    pub i: usize,
    pub support: SupportStatus,
    pub passed: bool,
    #[serde(flatten)]
    pub report: CheckReport,
}

#[derive(Debug, Serialize)]
pub struct Skipped {
    pub i: usize,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct CheckSummary {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub status: crate::oracle::Status,
    pub results: Vec<CheckEntry>,
    pub skipped: Vec<Skipped>,
}

pub fn run_checks(cfg: &RunConfig) -> CliResult<CheckSummary> {
    let ty = cfg.cd.cartan_type();
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut indices = Vec::new();
    for i in cfg.indices() {
        if supported(ty, i) == SupportStatus::Unproven && !cfg.options.force {
            if cfg.i.is_some() {
                return Err(Error::UnsupportedIndex { ty, i }.into());
            }
            skipped.push(Skipped {
                i,
                reason: "outside the proven range".to_string(),
            });
        } else {
            indices.push(i);
        }
    }
    for w in &cfg.words {
        for &i in &indices {
            let g = build_graph(&cfg.cd, w, i, cfg.options)?;
            let mut report = check_graph(&cfg.cd, &g);
            if cfg.cd.is_minuscule(i) {
                report.checks.extend(minuscule_checks(&cfg.cd, &g)?.checks);
            }
            report.record("no_violations", g.violations.clone());
            results.push(CheckEntry {
                word: w.letters().to_vec(),
                i,
                support: g.support,
                passed: report.all_passed(),
                report,
            });
        }
    }
    let ok = results.iter().all(|r| r.passed);
    Ok(CheckSummary {
        cartan_type: ty,
        status: status(ok),
        results,
        skipped,
    })
}

fn status(ok: bool) -> crate::oracle::Status {
    if ok {
        crate::oracle::Status::Pass
    } else {
        crate::oracle::Status::Fail
    }
}

fn json_only(cfg: &RunConfig) -> CliResult<()> {
    match cfg.format.as_deref() {
        None | Some("json") => Ok(()),
        Some(other) => Err(CliError::input(
            "--format",
            format!("{other:?}: reports are JSON only"),
        )),
    }
}

pub fn cmd_check(cfg: &RunConfig) -> CliResult<()> {
    json_only(cfg)?;
    let summary = run_checks(cfg)?;
    emit(cfg, "check", "json", &to_json_string(&summary))?;
    if summary.status == crate::oracle::Status::Fail {
        return Err(CliError {
            code: EXIT_FAILURE,
            message: "invariant checks failed".to_string(),
        });
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct CensusEntry {
    pub word: Vec<usize>,
    pub weights_checked: usize,
    /// `(mvec, census, kostant)` for each disagreement.
    pub mismatches: Vec<(Vec<u64>, u64, u64)>,
}

#[derive(Debug, Serialize)]
pub struct OracleSummary {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub status: crate::oracle::Status,
    pub words: usize,
    pub census_bound: u64,
    /// Empty outside type A.
    pub three_way: Vec<OracleReport>,
    pub census: Vec<CensusEntry>,
}

pub fn run_oracle(cfg: &RunConfig) -> CliResult<OracleSummary> {
    let ty = cfg.cd.cartan_type();
    let mut reports = Vec::new();
    if ty.family() == Family::A {
        for w in &cfg.words {
            for i in cfg.indices() {
                reports.push(three_way(&cfg.cd, w, i)?);
            }
        }
    }
    let weights = weights_up_to(cfg.cd.rank(), cfg.census_bound);
    let expected: Vec<u64> = weights
        .iter()
        .map(|m| dual_kostant_count(&cfg.cd, m))
        .collect();
    let mut census = Vec::new();
    for w in &cfg.words {
        let cone = string_cone(&cfg.cd, w, cfg.options)?;
        let mismatches = weights
            .iter()
            .zip(&expected)
            .filter_map(|(m, &k)| {
                let c = weight_census(&cone, m);
                (c != k).then(|| (m.clone(), c, k))
            })
            .collect();
        census.push(CensusEntry {
            word: w.letters().to_vec(),
            weights_checked: weights.len(),
            mismatches,
        });
    }
    let ok =
        reports.iter().all(OracleReport::passed) && census.iter().all(|c| c.mismatches.is_empty());
    Ok(OracleSummary {
        cartan_type: ty,
        status: status(ok),
        words: cfg.words.len(),
        census_bound: cfg.census_bound,
        three_way: reports,
        census,
    })
}

pub fn cmd_oracle(cfg: &RunConfig) -> CliResult<()> {
    json_only(cfg)?;
    let summary = run_oracle(cfg)?;
    emit(cfg, "oracle", "json", &to_json_string(&summary))?;
    if summary.status == crate::oracle::Status::Fail {
        return Err(CliError {
            code: EXIT_FAILURE,
            message: "oracle disagreement".to_string(),
        });
    }
    Ok(())
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_FAILURE
            } else {
                EXIT_OK
            };
        }
    };
    let (args, f): (&RunArgs, fn(&RunConfig) -> CliResult<()>) = match &cli.command {
        Command::Graph(a) => (a, cmd_graph),
        Command::Cone(a) => (a, cmd_cone),
        Command::Check(a) => (a, cmd_check),
        Command::Oracle(a) => (a, cmd_oracle),
    };
    match RunConfig::from_args(args).and_then(|cfg| f(&cfg)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

pub fn main_exit() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}
