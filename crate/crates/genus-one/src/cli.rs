//! Batch orchestration: run configuration, fixture/suite resolution,
//! deterministic CSV/JSON emission, and the four subcommands.
//!
//! Outputs are keyed by a hash of the canonical configuration; rerunning
//! with the same configuration (any worker count) reproduces the CSV
//! bodies byte for byte. Timing lives only in the JSON reports.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::characteristics::{
    levin_tsuji_curve, max_modulus_curve, mu_curve, nevanlinna_curve, rhs_borel,
};
use crate::curves::LogGrid;
use crate::error::{Error, Result};
use crate::fixtures::{self, hilbert_input, measure_fixture};
use crate::transforms::{make_hilbert_pair, PairOptions};
use crate::verify::{run_suite, SuiteOptions, VerificationReport, IDENTITY_CHECKS, SUITE_NAMES};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit codes of the batch runner.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Flat run configuration; every field has a default and can be set
/// from a key-value config file or command-line flags.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub suites: Vec<String>,
    pub fixtures: Vec<String>,
    pub per_decade: usize,
    pub span: (f64, f64),
    pub tol: f64,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub workers: usize,
    pub pair_points: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: vec![],
            fixtures: vec![],
            per_decade: 16,
            span: (1e-2, 1e2),
            tol: 1e-6,
            out_dir: PathBuf::from("out"),
            seed: 7,
            workers: 1,
            pair_points: 2048,
        }
    }
}

impl RunConfig {
    /// Parses the flat `key = value` format (`#` starts a comment;
    /// lists are comma-separated; the span is `lo..hi`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::Config(format!("invalid {what}: `{value}`"));
        match key {
            "suites" | "suite" => {
                self.suites = split_list(value);
            }
            "fixtures" | "fixture" => {
                self.fixtures = split_list(value);
            }
            "per_decade" | "grid_per_decade" => {
                self.per_decade = value.parse().map_err(|_| bad("per_decade"))?;
            }
            "span" => {
                let (lo, hi) = value.split_once("..").ok_or_else(|| bad("span"))?;
                let lo: f64 = lo.trim().parse().map_err(|_| bad("span"))?;
                let hi: f64 = hi.trim().parse().map_err(|_| bad("span"))?;
                if !(lo > 0.0 && hi > lo) {
                    return Err(bad("span"));
                }
                self.span = (lo, hi);
            }
            "tol" => {
                self.tol = value.parse().map_err(|_| bad("tol"))?;
                if !(self.tol > 0.0) {
                    return Err(bad("tol"));
                }
            }
            "out" | "out_dir" => {
                self.out_dir = PathBuf::from(value);
            }
            "seed" => {
                self.seed = value.parse().map_err(|_| bad("seed"))?;
            }
            "workers" => {
                self.workers = value.parse().map_err(|_| bad("workers"))?;
                if self.workers == 0 {
                    return Err(bad("workers"));
                }
            }
            "pair_points" => {
                self.pair_points = value.parse().map_err(|_| bad("pair_points"))?;
            }
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Canonical text form: the hash of this string keys every output.
    pub fn canonical(&self) -> String {
        format!(
            "suites={}\nfixtures={}\nper_decade={}\nspan={:e}..{:e}\ntol={:e}\nseed={}\npair_points={}\n",
            self.suites.join(","),
            self.fixtures.join(","),
            self.per_decade,
            self.span.0,
            self.span.1,
            self.tol,
            self.seed,
            self.pair_points,
        )
    }

    pub fn hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical().as_bytes());
        let digest = hasher.finalize();
        let mut out = String::new();
        for b in digest.iter().take(8) {
            write!(out, "{b:02x}").unwrap();
        }
        out
    }

    fn suite_options(&self) -> SuiteOptions {
        SuiteOptions {
            per_decade: self.per_decade,
            span: self.span,
            seed: self.seed,
            pair_points: self.pair_points,
            residual_tol: self.tol,
            fixtures: None,
            ..Default::default()
        }
    }

    fn grid(&self) -> Result<LogGrid> {
        LogGrid::new(self.span.0, self.span.1, self.per_decade)
    }
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn sanitize(id: &str) -> String {
    id.replace(['/', '+', '['], "-").replace(']', "")
}

/// CSV writer with a deterministic comment header.
struct CsvFile {
    body: String,
}

impl CsvFile {
    fn new(cfg: &RunConfig, extra: &[(&str, String)], columns: &[&str]) -> Self {
        let mut body = String::new();
        writeln!(body, "# version: {VERSION}").unwrap();
        writeln!(body, "# source_hash: {}", cfg.hash()).unwrap();
        writeln!(body, "# tol: {:e}", cfg.tol).unwrap();
        for (k, v) in extra {
            writeln!(body, "# {k}: {v}").unwrap();
        }
        writeln!(body, "{}", columns.join(",")).unwrap();
        CsvFile { body }
    }

    fn row(&mut self, values: &[f64]) {
        let mut first = true;
        for v in values {
            if !first {
                self.body.push(',');
            }
            write!(self.body, "{v}").unwrap();
            first = false;
        }
        self.body.push('\n');
    }


    fn write_to(&self, path: &Path) -> Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        fs::write(path, self.body.as_bytes())?;
        Ok(())
    }
}

fn resolve_fixtures(cfg: &RunConfig) -> Result<Vec<String>> {
    if cfg.fixtures.is_empty() {
        return Err(Error::Usage(format!(
            "no fixtures selected; valid names include: {}",
            fixtures::all_fixture_ids().join(", ")
        )));
    }
    if cfg.fixtures.len() == 1 && cfg.fixtures[0] == "all" {
        return Ok(fixtures::all_fixture_ids());
    }
    let known = fixtures::all_fixture_ids();
    for f in &cfg.fixtures {
        if !known.contains(f) {
            return Err(Error::Usage(format!(
                "unknown fixture `{f}`; valid names: {}",
                known.join(", ")
            )));
        }
    }
    Ok(cfg.fixtures.clone())
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool construction");
    pool.install(f)
}

/// `eval`: sampled field grids and standard curves for the selected
/// measure-backed fixtures.
pub fn cmd_eval(cfg: &RunConfig) -> Result<()> {
    let names = resolve_fixtures(cfg)?;
    let grid = cfg.grid()?;
    in_pool(cfg.workers, || -> Result<()> {
        for id in &names {
            if !(id.starts_with("atoms/")
                || id.starts_with("up/")
                || id.starts_with("realline/")
                || id.starts_with("pv/"))
            {
                continue;
            }
            let fx = measure_fixture(id)?;
            // field grid CSV: r, theta, u
            let mut field_csv = CsvFile::new(
                cfg,
                &[("fixture", id.clone()), ("field", fx.field.label())],
                &["r", "theta", "u"],
            );
            let n_theta = 24;
            for &r in &grid.radii {
                for j in 0..n_theta {
                    let theta =
                        std::f64::consts::TAU * (j as f64 + 0.381_966) / n_theta as f64;
                    let u = fx
                        .field
                        .eval(crate::measures::Complex::from_polar(r, theta));
                    field_csv.row(&[r, theta, u]);
                }
            }
            field_csv.write_to(&cfg.out_dir.join(format!("{}.field.csv", sanitize(id))))?;

            // curve CSV: r, mu, n, M, T
            let mu = mu_curve(&fx.measure, &grid)?;
            let n = levin_tsuji_curve(&fx.measure, &grid)?;
            let m = max_modulus_curve(fx.field.as_ref(), &grid)?;
            let t = nevanlinna_curve(fx.field.as_ref(), &grid)?;
            let mut curve_csv = CsvFile::new(
                cfg,
                &[("fixture", id.clone())],
                &["r", "mu", "n", "M", "T"],
            );
            for &r in &grid.radii {
                curve_csv.row(&[r, mu.value_at(r), n.value_at(r), m.value_at(r), t.value_at(r)]);
            }
            curve_csv.write_to(&cfg.out_dir.join(format!("{}.curves.csv", sanitize(id))))?;
        }
        Ok(())
    })
}

/// `hilbert`: Hilbert pairs for the selected smooth inputs.
pub fn cmd_hilbert(cfg: &RunConfig) -> Result<()> {
    let names = resolve_fixtures(cfg)?;
    in_pool(cfg.workers, || -> Result<()> {
        for id in &names {
            if !id.starts_with("pairs/") {
                continue;
            }
            let h = hilbert_input(id)?;
            let pair = make_hilbert_pair(
                h.as_ref(),
                PairOptions {
                    points: cfg.pair_points,
                    ..Default::default()
                },
            );
            let mut csv = CsvFile::new(
                cfg,
                &[
                    ("fixture", id.clone()),
                    ("convention", pair.convention.to_string()),
                ],
                &["t", "h", "g", "err_estimate"],
            );
            for i in 0..pair.grid.len() {
                csv.row(&[pair.grid[i], pair.h[i], pair.g[i], pair.err[i]]);
            }
            csv.write_to(&cfg.out_dir.join(format!("{}.pair.csv", sanitize(id))))?;
        }
        Ok(())
    })
}

/// Suites the `verify` subcommand accepts (named suites, the identity
/// checks, and the grouped kernel identities).
pub fn known_suites() -> Vec<String> {
    let mut v: Vec<String> = SUITE_NAMES.iter().map(|s| s.to_string()).collect();
    v.extend(IDENTITY_CHECKS.iter().map(|s| s.to_string()));
    v.push("kernel_identities".to_string());
    v
}

/// `verify`: runs the selected suites, writes one JSON report per
/// suite plus a CSV summary, and returns the exit code.
pub fn cmd_verify(cfg: &RunConfig) -> Result<i32> {
    if cfg.suites.is_empty() {
        return Err(Error::Usage(format!(
            "no suites selected; valid names: {}",
            known_suites().join(", ")
        )));
    }
    let suites: Vec<String> = if cfg.suites.len() == 1 && cfg.suites[0] == "all" {
        known_suites()
    } else {
        for s in &cfg.suites {
            if !known_suites().contains(s) {
                return Err(Error::Usage(format!(
                    "unknown suite `{s}`; valid names: {}",
                    known_suites().join(", ")
                )));
            }
        }
        cfg.suites.clone()
    };
    let mut opts = cfg.suite_options();
    if !cfg.fixtures.is_empty() {
        opts.fixtures = Some(resolve_fixtures(cfg)?);
    }
    let mut any_failure = false;
    let mut summary = CsvFile::new(
        cfg,
        &[("suites", suites.join(" "))],
        &["suite", "fixture", "check", "constant", "stability", "residual", "pass"],
    );
    for suite in &suites {
        let reports = in_pool(cfg.workers, || run_suite(suite, &opts))?;
        write_suite_reports(cfg, suite, &reports)?;
        for r in &reports {
            if r.blocking_failure() {
                any_failure = true;
            }
            let (constant, stability, residual) = match r.kind {
                crate::verify::ReportKind::Inequality {
                    constant,
                    stability,
                } => (constant, stability, f64::NAN),
                crate::verify::ReportKind::Identity { max_rel_residual } => {
                    (f64::NAN, f64::NAN, max_rel_residual)
                }
                crate::verify::ReportKind::Assertion { worst_violation } => {
                    (f64::NAN, f64::NAN, worst_violation)
                }
            };
            let pass_str = if r.hypotheses_unmet {
                "hypotheses_unmet"
            } else if r.pass {
                "pass"
            } else {
                "FAIL"
            };
            writeln!(
                summary.body,
                "{suite},{},{},{constant},{stability},{residual},{pass_str}",
                r.fixture, r.check
            )
            .unwrap();
        }
    }
    summary.write_to(&cfg.out_dir.join("summary.csv"))?;
    Ok(if any_failure { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn write_suite_reports(cfg: &RunConfig, suite: &str, reports: &[VerificationReport]) -> Result<()> {
    let json = serde_json::json!({
        "schema_version": 1,
        "version": VERSION,
        "source_hash": cfg.hash(),
        "suite": suite,
        "reports": reports,
    });
    let path = cfg.out_dir.join(format!("{}.report.json", sanitize(suite)));
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, serde_json::to_string_pretty(&json)?)?;
    Ok(())
}

/// `report`: human-readable rollup plus two-column plot CSVs
/// (`r` vs `M(r,u)` and `r` vs the Borel RHS per measure fixture).
pub fn cmd_report(cfg: &RunConfig) -> Result<()> {
    let names = if cfg.fixtures.is_empty() {
        vec!["atoms/cloud-00".to_string(), "atoms/cloud-01".to_string()]
    } else {
        resolve_fixtures(cfg)?
    };
    let grid = cfg.grid()?;
    let mut text = String::new();
    writeln!(text, "genus-one report (version {VERSION}, config {})", cfg.hash()).unwrap();
    in_pool(cfg.workers, || -> Result<()> {
        for id in &names {
            if !(id.starts_with("atoms/") || id.starts_with("realline/") || id.starts_with("up/")) {
                continue;
            }
            let fx = measure_fixture(id)?;
            let m = max_modulus_curve(fx.field.as_ref(), &grid)?;
            let mu = mu_curve(&fx.measure, &grid)?;
            let mut lhs_csv = CsvFile::new(cfg, &[("fixture", id.clone())], &["r", "M"]);
            let mut rhs_csv = CsvFile::new(cfg, &[("fixture", id.clone())], &["r", "rhs_borel"]);
            for &r in &grid.radii {
                lhs_csv.row(&[r, m.value_at(r)]);
                rhs_csv.row(&[r, rhs_borel(&mu, r)?]);
            }
            let dir = cfg.out_dir.join("plots");
            lhs_csv.write_to(&dir.join(format!("{}-M.csv", sanitize(id))))?;
            rhs_csv.write_to(&dir.join(format!("{}-rhs-borel.csv", sanitize(id))))?;
            writeln!(
                text,
                "{id}: M(r_max) = {:.6e}, mu(r_max) = {:.6e}",
                m.values.last().unwrap(),
                mu.values.last().unwrap()
            )
            .unwrap();
        }
        Ok(())
    })?;
    fs::create_dir_all(&cfg.out_dir)?;
    fs::write(cfg.out_dir.join("report.txt"), text)?;
    Ok(())
}

/// Maps an error to the documented process exit code.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Usage(_) | Error::Config(_) | Error::UnknownFixture(_) | Error::UnknownSuite(_) => {
            EXIT_USAGE
        }
        Error::Io(_) => EXIT_IO,
        _ => EXIT_CHECK_FAILED,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing_and_hash() {
        let text = "\
# a comment
suites = kernel_identities, borel
fixtures = atoms/cloud-00
per_decade = 8
span = 1e-1..1e1
tol = 1e-7
seed = 13
workers = 2
";
        let cfg = RunConfig::parse(text).unwrap();
        assert_eq!(cfg.suites, vec!["kernel_identities", "borel"]);
        assert_eq!(cfg.per_decade, 8);
        assert_eq!(cfg.span, (0.1, 10.0));
        assert_eq!(cfg.workers, 2);
        let h1 = cfg.hash();
        let mut cfg2 = cfg.clone();
        cfg2.workers = 7; // workers do not enter the hash
        assert_eq!(h1, cfg2.hash());
        cfg2.seed = 14;
        assert_ne!(h1, cfg2.hash());

        assert!(RunConfig::parse("nonsense").is_err());
        assert!(RunConfig::parse("span = 5..1").is_err());
        assert!(RunConfig::parse("workers = 0").is_err());
    }

    #[test]
    fn empty_fixture_selector_is_usage_error() {
        let cfg = RunConfig::default();
        match cmd_eval(&cfg) {
            Err(Error::Usage(_)) => {}
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        let mut cfg = RunConfig::default();
        cfg.fixtures = vec!["no/such".into()];
        assert!(matches!(cmd_eval(&cfg), Err(Error::Usage(_))));

        let mut cfg = RunConfig::default();
        cfg.suites = vec!["no_such_suite".into()];
        assert!(matches!(cmd_verify(&cfg), Err(Error::Usage(_))));
    }
}
