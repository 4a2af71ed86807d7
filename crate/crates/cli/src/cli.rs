use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hfk_core::codec::{parse_pd, DEFAULT_MAX_GRID};
use hfk_core::invariants::HFKReport;
use hfk_core::kauffman::DEFAULT_MAX_CROSSINGS;
use hfk_core::pipeline::{KnotInput, PipelineConfig, Presentation, PresentationKind};

use crate::cache::{cache_key, Cache};
use crate::corpus::{bundled_corpus, load_corpus, Corpus};
use crate::error::CliError;
use crate::report::RunReport;
use crate::run::{compute, default_threads, run_corpus, RunOptions};

#[derive(Debug, Parser)]
#[command(
    name = "hfk",
    version,
    about = "Knot Floer homology and Kauffman-state invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Largest grid size the grid route will accept.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GRID)]
    pub max_grid: usize,
    /// Largest crossing count for state enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Memoize reports in this file.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a single knot.
    Compute(ComputeArgs),
    /// Analyze every knot in a corpus file (bundled corpus if omitted).
    Corpus { path: Option<PathBuf> },
    /// Per-knot wall time and generator counts.
    Bench { path: Option<PathBuf> },
    /// Like `corpus`, but every entry must carry expected values.
    Verify { path: Option<PathBuf> },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").args(["braid", "grid", "unknot", "pd"]).required(true).multiple(true)))]
pub struct ComputeArgs {
    #[arg(long, conflicts_with_all = ["grid", "unknot"])]
    pub braid: Option<String>,
    #[arg(long, conflicts_with = "unknot")]
    pub grid: Option<String>,
    /// Planar diagram; used alone or alongside a braid or grid.
    #[arg(long)]
    pub pd: Option<String>,
    #[arg(long)]
    pub unknot: bool,
    #[arg(long, default_value = "knot")]
    pub id: String,
}

impl ComputeArgs {
    fn input(&self) -> hfk_core::Result<KnotInput> {
        let primary = match (&self.braid, &self.grid, self.unknot) {
            (Some(t), _, _) => Some(Presentation::parse(PresentationKind::Braid, t)?),
            (_, Some(t), _) => Some(Presentation::parse(PresentationKind::Grid, t)?),
            (_, _, true) => Some(Presentation::Unknot),
            _ => None,
        };
        let pd = self.pd.as_deref().map(parse_pd).transpose()?;
        Ok(match (primary, pd) {
            (Some(p), Some(d)) => KnotInput::new(&self.id, p).with_planar(d),
            (Some(p), None) => KnotInput::new(&self.id, p),
            (None, Some(d)) => KnotInput::new(&self.id, Presentation::Pd(d)),
            (None, None) => unreachable!("clap requires an input"),
        })
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let record = e.record();
            let _ = writeln!(
                stderr,
                "{}",
                serde_json::to_string(&serde_json::json!({ "error": record }))
                    .expect("record serializes")
            );
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let c = &cli.common;
    let opts = |enforce_expected| RunOptions {
        pipeline: PipelineConfig {
            max_grid: c.max_grid,
            max_crossings: c.max_crossings,
        },
        threads: c.threads.unwrap_or_else(default_threads),
        enforce_expected,
    };
    let mut cache = c.cache.as_deref().map(Cache::open).transpose()?;

    let (text, code) = match &cli.command {
        Command::Compute(args) => {
            let o = opts(false);
            let input = args.input()?;
            let key = cache_key(&input, &o.pipeline);
            let report = match cache.as_ref().and_then(|c| c.get(&key, &input.id)) {
                Some(r) => r,
                None => {
                    let r = compute(&input, &o.pipeline, o.threads)?;
                    if let Some(c) = cache.as_mut() {
                        c.insert(key, &r);
                    }
                    r
                }
            };
            let text = match c.format {
                Format::Text => render_report(&report),
                Format::Structured => {
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
            };
            let code = if report.all_passed() { 0 } else { 3 };
            (text, code)
        }
        Command::Corpus { path } | Command::Bench { path } | Command::Verify { path } => {
            let corpus = read_corpus(path.as_deref())?;
            if corpus.entries.is_empty() {
                let _ = writeln!(stderr, "warning: corpus has no entries");
            }
            let verify = matches!(cli.command, Command::Verify { .. });
            let report = run_corpus(&corpus, &opts(verify), cache.as_mut());
            let text = match (c.format, &cli.command) {
                (Format::Structured, _) => report.to_json() + "\n",
                (Format::Text, Command::Bench { .. }) => render_bench(&report),
                (Format::Text, _) => render_run(&report),
            };
            (text, report.exit_code())
        }
    };

    if let Some(c) = cache.as_mut() {
        c.save()?;
    }
    match &c.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?,
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    Ok(code)
}

fn read_corpus(path: Option<&Path>) -> Result<Corpus, CliError> {
    match path {
        Some(p) => load_corpus(p),
        None => Ok(bundled_corpus()),
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn render_report(r: &HFKReport) -> String {
    let mut s = String::new();
    s += &format!("knot          {}\n", r.knot_id);
    if let (Some(n), Some(g), Some(a)) = (r.grid_size, r.generator_count, r.arrow_count) {
        s += &format!("grid          n={n}, {g} generators, {a} arrows\n");
    }
    if let Some(h) = &r.hat_ranks {
        let cells: Vec<String> = h
            .iter()
            .map(|((m, a), k)| format!("({m},{a}):{k}"))
            .collect();
        s += &format!("hat ranks     {}\n", cells.join(" "));
    }
    s += &format!("delta         {}\n", r.delta);
    s += &format!("genus         {}\n", opt(r.genus));
    s += &format!(
        "unknot        {}\n",
        match r.is_unknot {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        }
    );
    s += &format!("0-surgery     norm {}\n", opt(r.zero_surgery_norm));
    if let Some(t) = r.top_group_rank {
        let note = if r.top_group_identified {
            "identified with HF+ of the zero-surgery"
        } else {
            "identification not asserted"
        };
        s += &format!("top group     rank {t} ({note})\n");
    }
    if let (Some(n), Some(b)) = (r.state_count, r.kauffman_bound) {
        s += &format!("states        {n}, max s {b}\n");
    }
    let ok = r.diagnostics.iter().filter(|c| c.passed).count();
    s += &format!("checks        {ok}/{} passed\n", r.diagnostics.len());
    for c in &r.diagnostics {
        let mark = if c.passed { "ok" } else { "FAIL" };
        s += &format!("  [{mark}] {} {}\n", c.name, c.detail);
    }
    s
}

pub fn render_run(r: &RunReport) -> String {
    let mut s = String::new();
    for (e, t) in r.entries.iter().zip(&r.timings.entries) {
        let ms = t.wall_us as f64 / 1000.0;
        match (&e.report, &e.error) {
            (_, Some(err)) => {
                s += &format!("ERROR {:<14} [{}] {}\n", e.id, err.tag, err.message);
            }
            (Some(rep), None) => {
                let status = if e.passed { "PASS " } else { "FAIL " };
                s += &format!(
                    "{status}{:<14} genus={:<2} delta={}  ({ms:.1} ms)\n",
                    e.id,
                    opt(rep.genus),
                    rep.delta
                );
                for c in rep.diagnostics.iter().chain(&e.expected_checks) {
                    if !c.passed {
                        s += &format!("      {} failed: {}\n", c.name, c.detail);
                    }
                }
            }
            (None, None) => {}
        }
    }
    let m = &r.summary;
    s += &format!(
        "{} entries: {} passed, {} failed, {} errors; checks {}/{}\n",
        m.entries,
        m.passed,
        m.failed,
        m.errors,
        m.checks_passed,
        m.checks_passed + m.checks_failed
    );
    s
}

pub fn render_bench(r: &RunReport) -> String {
    let mut s = format!(
        "{:<16} {:>4} {:>12} {:>12}\n",
        "id", "n", "generators", "wall_ms"
    );
    for t in &r.timings.entries {
        s += &format!(
            "{:<16} {:>4} {:>12} {:>12.1}\n",
            t.id,
            opt(t.grid_size),
            opt(t.generator_count),
            t.wall_us as f64 / 1000.0
        );
    }
    s += &format!("total_ms {:.1}\n", r.timings.total_us as f64 / 1000.0);
    s
}
