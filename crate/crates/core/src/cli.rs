//! Command-line front end.
//!
//! Every command writes its artifacts into `--out-dir` together with a
//! `manifest.json` describing the run; the manifest is written even when the
//! command fails. Exit status: 0 on success, 2 on bad input, 3 when a
//! budget or radius limit was hit.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cayley::{load_or_build, thinness_delta, thinness_delta_all_geodesics, ThinnessOptions, DEFAULT_ELEMENT_BUDGET};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::profile::{
    classify_growth, compare_generating_sets, delta_profile, emit_plot_data, embedding_check, DeltaOptions,
    DeltaProfile, DEFAULT_CYCLE_BUDGET,
};
use crate::triangulate::{
    chord_length_table, fan_triangulation, min_max_k, score_with_table, Cycle, ScoredTriangulation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Ball sizes |B(k)| for k <= radius, as CSV `k,count`.
    Ball {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
    },
    /// Optimal and three-fan triangulations of one identity word.
    Triangulate {
        #[arg(long)]
        group: String,
        /// Comma-separated symbols, `'` marks an inverse.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Δ(n) table for n = 1..=max-n.
    Delta {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_n: usize,
        /// Cycle classes to score before giving up.
        #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        out: OutputFormat,
    },
    /// Growth trend of a saved profile (heuristic).
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Checks Δ_A(n) <= K·Δ_B(Kn) + K.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Finite-radius thin-triangles estimate.
    Thinness {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: u32,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Maximise over all geodesic sides (radius <= 3).
        #[arg(long)]
        all_geodesics: bool,
    },
    /// Compares a free-product factor's metric with the product's.
    EmbedCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        factor: usize,
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Parser, Serialize)]
#[command(name = "cayley-delta", version, about = "Triangulations of cycles in Cayley graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Largest ball to build, in elements.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_BUDGET)]
    pub element_budget: usize,
    /// Wall-clock limit for `delta`, in seconds.
    #[arg(long, global = true)]
    pub time_budget: Option<u64>,
    /// Directory for cached balls.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

impl RunConfig {
    fn group(&self) -> Option<&str> {
        match &self.command {
            Command::Ball { group, .. }
            | Command::Triangulate { group, .. }
            | Command::Delta { group, .. }
            | Command::Thinness { group, .. }
            | Command::EmbedCheck { group, .. } => Some(group),
            _ => None,
        }
    }

    fn check(&self) -> Result<()> {
        if self.workers == 0 || self.element_budget == 0 || self.time_budget == Some(0) {
            return Err(Error::input("workers and budgets must be positive"));
        }
        if let Command::Delta { budget: 0, .. } = self.command {
            return Err(Error::input("cycle budget must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
pub struct RunOutcome {
    pub exit_code: i32,
    /// What the command prints on standard output.
    pub stdout: String,
    pub error: Option<String>,
    pub artifacts: Vec<PathBuf>,
}

pub fn exit_code_for(e: &Error) -> i32 {
    if e.is_resource() {
        EXIT_RESOURCE
    } else {
        EXIT_INPUT
    }
}

struct Artifacts<'a> {
    dir: &'a Path,
    written: Vec<PathBuf>,
}

impl Artifacts<'_> {
    fn write(&mut self, name: &str, contents: &str) -> Result<()> {
        std::fs::create_dir_all(self.dir)?;
        let path = self.dir.join(name);
        std::fs::write(&path, contents)?;
        self.written.push(path);
        Ok(())
    }

    fn json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<String> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write(name, &text)?;
        Ok(text)
    }
}

fn parse_spec(text: &str) -> Result<GroupSpec> {
    text.parse()
}

/// Triangulation JSON: `{n, chords, k, chord_lengths}` for the optimum plus
/// the same for the three-fan construction.
fn triangulation_json(scored: &ScoredTriangulation) -> serde_json::Value {
    json!({
        "n": scored.triangulation.n(),
        "chords": scored.triangulation.pairs(),
        "k": scored.k,
        "chord_lengths": scored.chord_lengths.iter().map(|&(_, l)| l).collect::<Vec<_>>(),
    })
}

fn execute(cfg: &RunConfig, out: &mut Artifacts<'_>, incomplete: &mut bool) -> Result<String> {
    cfg.check()?;
    match &cfg.command {
        Command::Ball { group, radius } => {
            let g = parse_spec(group)?.build()?;
            let ball = load_or_build(g, group, *radius, cfg.element_budget, cfg.cache.as_deref())?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "count"])?;
            for (k, count) in ball.ball_sizes().iter().enumerate() {
                w.write_record([k.to_string(), count.to_string()])?;
            }
            let text = String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("utf-8");
            out.write("ball.csv", &text)?;
            Ok(text)
        }
        Command::Triangulate { group, word } => {
            let spec = parse_spec(group)?;
            let g = spec.build()?;
            let w = g.alphabet().parse_word(word)?;
            let radius = (w.len() / 2) as u32;
            let ball = load_or_build(g, group, radius, cfg.element_budget, cfg.cache.as_deref())?;
            let cycle = Cycle::new(&ball, w)?;
            let table = chord_length_table(&cycle, &ball)?;
            let best = score_with_table(&min_max_k(&table).1, &table);
            let fan = score_with_table(&fan_triangulation(cycle.n())?, &table);
            let mut doc = triangulation_json(&best);
            doc["group"] = json!(spec.to_string());
            doc["word"] = json!(word);
            doc["fan"] = triangulation_json(&fan);
            doc["fan_bound"] = json!(cycle.n().div_ceil(3));
            out.json("triangulation.json", &doc)
        }
        Command::Delta { group, max_n, budget, out: format } => {
            let spec = parse_spec(group)?;
            let opts = DeltaOptions {
                workers: cfg.workers,
                cycle_budget: *budget,
                element_budget: cfg.element_budget,
                time_budget: cfg.time_budget.map(Duration::from_secs),
                prune: true,
                cache_dir: cfg.cache.clone(),
                seed: cfg.seed,
            };
            let profile = delta_profile(&spec, *max_n, &opts)?;
            *incomplete = profile.incomplete;
            let json = out.json("delta.json", &profile)?;
            let csv = profile.to_csv()?;
            out.write("delta.csv", &csv)?;
            Ok(match format {
                OutputFormat::Csv => csv,
                OutputFormat::Json => json,
            })
        }
        Command::Classify { input } => {
            let profile = DeltaProfile::load(input)?;
            out.write("plot.dat", &emit_plot_data(&profile)?)?;
            let class = classify_growth(&profile)?;
            out.json("classification.json", &class)
        }
        Command::Compare { a, b, k } => {
            let report = compare_generating_sets(&DeltaProfile::load(a)?, &DeltaProfile::load(b)?, *k)?;
            out.json("comparison.json", &report)
        }
        Command::Thinness { group, radius, samples, all_geodesics } => {
            let g = parse_spec(group)?.build()?;
            let opts = ThinnessOptions { samples: *samples, seed: cfg.seed, budget: cfg.element_budget };
            let report = if *all_geodesics {
                thinness_delta_all_geodesics(g.clone(), *radius, &opts)?
            } else {
                thinness_delta(g.clone(), *radius, &opts)?
            };
            let al = g.alphabet();
            let witness = report.witness.as_ref().map(|w| {
                json!({
                    "sides": w.sides.iter().map(|s| al.format_word(s)).collect::<Vec<_>>(),
                    "side": w.side,
                    "point": al.format_word(&w.point),
                    "nearest": al.format_word(&w.nearest),
                    "distance": w.distance,
                })
            });
            let doc = json!({
                "group": group,
                "radius": report.radius,
                "delta_estimate": report.delta_estimate,
                "triangles": report.triangles,
                "exhaustive": report.exhaustive,
                "all_geodesics": report.all_geodesics,
                "seed": cfg.seed,
                "witness": witness,
            });
            out.json("thinness.json", &doc)
        }
        Command::EmbedCheck { group, factor, radius } => {
            let product = Arc::new(parse_spec(group)?.build_product()?);
            let report = embedding_check(product, *factor, *radius)?;
            out.json("embedding.json", &report)
        }
    }
}

/// Runs one command and writes its artifacts and manifest. Never panics on
/// bad input; failures are reported through the exit code and `error`.
pub fn run(cfg: &RunConfig) -> RunOutcome {
    let started = Instant::now();
    let mut out = Artifacts { dir: &cfg.out_dir, written: Vec::new() };
    let mut incomplete = false;
    let result = execute(cfg, &mut out, &mut incomplete);
    let (exit_code, stdout, error) = match result {
        Ok(text) if incomplete => (EXIT_RESOURCE, text, Some("budget exhausted; table is incomplete".to_string())),
        Ok(text) => (EXIT_OK, text, None),
        Err(e) => (exit_code_for(&e), String::new(), Some(e.to_string())),
    };
    let manifest = json!({
        "command": cfg.command,
        "group": cfg.group(),
        "seed": cfg.seed,
        "workers": cfg.workers,
        "budgets": {
            "elements": cfg.element_budget,
            "cycles": match cfg.command { Command::Delta { budget, .. } => Some(budget), _ => None },
            "time_seconds": cfg.time_budget,
        },
        "cache": cfg.cache,
        "versions": { "cayley-delta": env!("CARGO_PKG_VERSION") },
        "wall_time_seconds": started.elapsed().as_secs_f64(),
        "exit_code": exit_code,
        "error": error,
        "artifacts": out.written.iter().filter_map(|p| p.file_name()).map(|n| n.to_string_lossy()).collect::<Vec<_>>(),
    });
    let mut artifacts = out.written.clone();
    let manifest_path = cfg.out_dir.join("manifest.json");
    let wrote = std::fs::create_dir_all(&cfg.out_dir)
        .and_then(|_| std::fs::write(&manifest_path, serde_json::to_string_pretty(&manifest).unwrap_or_default() + "\n"));
    match wrote {
        Ok(()) => artifacts.push(manifest_path),
        Err(e) if error.is_none() => {
            return RunOutcome { exit_code: EXIT_INPUT, stdout, error: Some(format!("writing manifest: {e}")), artifacts };
        }
        Err(_) => {}
    }
    RunOutcome { exit_code, stdout, error, artifacts }
}

/// Parses `args` (including the program name) and runs.
pub fn run_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                RunOutcome { exit_code: code, stdout: text, ..Default::default() }
            } else {
                RunOutcome { exit_code: code, error: Some(text), ..Default::default() }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_in(dir: &Path, args: &[&str]) -> RunOutcome {
        let mut full = vec!["cayley-delta".to_string(), "--out-dir".into(), dir.display().to_string()];
        full.extend(args.iter().map(|s| s.to_string()));
        run_args(full)
    }

    #[test]
    fn ball_csv() {
        let dir = tempfile::tempdir().unwrap();
        let o = run_in(dir.path(), &["ball", "--group", "free:2", "--radius", "2"]);
        assert_eq!(o.exit_code, 0, "{:?}", o.error);
        assert_eq!(o.stdout, "k,count\n0,1\n1,5\n2,17\n");
        assert!(dir.path().join("manifest.json").exists());
    }

    #[test]
    fn triangulate_commutator() {
        let dir = tempfile::tempdir().unwrap();
        let o = run_in(dir.path(), &["triangulate", "--group", "abelian:2", "--word", "a,b,a',b'"]);
        assert_eq!(o.exit_code, 0, "{:?}", o.error);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["k"], 2);
        assert_eq!(v["n"], 4);
        assert_eq!(v["fan"]["chords"], json!([[2, 4]]));
    }

    #[test]
    fn delta_row_four() {
        let dir = tempfile::tempdir().unwrap();
        let o = run_in(dir.path(), &["delta", "--group", "abelian:2", "--max-n", "4"]);
        assert_eq!(o.exit_code, 0, "{:?}", o.error);
        assert!(o.stdout.contains("\n4,2,\"a,b,a',b'\",9\n"), "{}", o.stdout);
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(run_in(dir.path(), &["frobnicate"]).exit_code, EXIT_INPUT);
        assert_eq!(run_in(dir.path(), &["ball", "--group", "free:0", "--radius", "2"]).exit_code, EXIT_INPUT);
        let o = run_in(dir.path(), &["--element-budget", "10", "ball", "--group", "free:2", "--radius", "3"]);
        assert_eq!(o.exit_code, EXIT_RESOURCE);
        let m: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
        assert_eq!(m["exit_code"], 3);
        assert!(m["error"].is_string());
        let o = run_in(dir.path(), &["delta", "--group", "abelian:2", "--max-n", "8", "--budget", "5"]);
        assert_eq!(o.exit_code, EXIT_RESOURCE);
        assert!(dir.path().join("delta.json").exists());
    }
}
