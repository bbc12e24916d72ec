//! Command-line front end: argument parsing, dispatch and report rendering.

mod render;

use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cpairs_core::catalog::{resolve, resolve_parabolic, table4_instance, Embedding};
use cpairs_core::claims::{
    claim_mode, claim_report, reproduce_table1, reproduce_theorem_a, run_claims, ClaimReport, HarnessConfig, Mode,
    Status, Table1Report,
};
use cpairs_core::engine::{
    complexity_homspace, complexity_pair, diagonal_complexity, is_decomposition, is_horospherical, ComplexityResult,
};
use cpairs_core::sampler::SamplerConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[value(name = "md", alias = "markdown")]
    Markdown,
}

/// Every knob that influences a report; embedded verbatim in each one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub coefficient_bound: u32,
    pub max_rank: usize,
    pub max_param: usize,
    pub enable_spin: bool,
    pub output_format: Format,
    pub expect_paper: bool,
}

impl RunConfig {
    pub fn harness(&self) -> HarnessConfig {
        HarnessConfig {
            sampler: SamplerConfig {
                seed: self.seed,
                coefficient_bound: self.coefficient_bound,
                samples: self.samples,
            },
            max_rank: self.max_rank,
            max_param: self.max_param,
            enable_spin: self.enable_spin,
            ..HarnessConfig::default()
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cpairs", version, about = "Complexity of subgroup pairs in classical groups")]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Args)]
struct Flags {
    /// Sampler seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Group elements drawn per generic computation.
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,
    /// Bound on numerators and denominators of sampled coefficients.
    #[arg(long = "coeff-bound", global = true, default_value_t = 1000)]
    coeff_bound: u32,
    /// Largest group rank scanned by `reproduce theorem-a`.
    #[arg(long = "max-rank", global = true, default_value_t = 8)]
    max_rank: usize,
    /// Largest family parameter n instantiated for parametrised rows.
    #[arg(long = "max-param", global = true, default_value_t = 4)]
    max_param: usize,
    /// Build the rows that need a spin embedding.
    #[arg(long = "enable-spin", global = true)]
    enable_spin: bool,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Exit with status 2 if an asserted expectation fails.
    #[arg(long = "expect-paper", global = true)]
    expect_paper: bool,
    /// Directory in which to also save the report, named by command and seed.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Complexity of a pair, a homogeneous space or a diagonal action.
    Complexity {
        #[command(subcommand)]
        which: ComplexityCmd,
    },
    /// Whether G = G1 G2.
    Decompose { id1: String, id2: String },
    /// Whether G/H is spherical.
    Spherical { id: String },
    /// Whether the subgroup contains a maximal unipotent subgroup.
    Horospherical { id: String },
    /// Check every buildable row of a catalog table.
    Verify {
        #[arg(value_enum)]
        table: VerifyTable,
    },
    /// Rerun one of the main computations.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
    },
    /// Evaluate the claim instance sets.
    Claims {
        #[command(subcommand)]
        which: ClaimsCmd,
    },
}

#[derive(Debug, Subcommand)]
enum ComplexityCmd {
    /// `G1 x G2` acting on `G` by left and right multiplication.
    Pair { id1: String, id2: String },
    /// `G` acting on `G/H`.
    Homspace { id: String },
    /// `G` acting diagonally on `G/P x G/H`; `P` is given as `P.<alg>.omit<nodes>`.
    Diag { parabolic: String, id: String },
}

#[derive(Debug, Subcommand)]
enum ClaimsCmd {
    Run {
        /// Comma-separated claim ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyTable {
    Table3,
    Table4,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    TheoremA,
    #[value(name = "table-1")]
    Table1,
}

/// One computed value in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub ids: Vec<String>,
    pub quantity: String,
    pub value: Option<usize>,
    pub max_orbit_dim: Option<usize>,
    pub ambient_dim: Option<usize>,
    pub witnesses: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ResultEntry {
    fn from_result(ids: &[&str], quantity: &str, r: &ComplexityResult) -> Self {
        ResultEntry {
            ids: ids.iter().map(|s| s.to_string()).collect(),
            quantity: quantity.to_string(),
            value: Some(r.value),
            max_orbit_dim: Some(r.max_orbit_dim),
            ambient_dim: Some(r.ambient_dim),
            witnesses: r.witnesses.clone(),
            holds: None,
            note: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub results: Vec<ResultEntry>,
    pub claims: Vec<ClaimReport>,
    #[serde(skip)]
    table1: Option<Table1Report>,
    /// Failed expectations, for `--expect-paper`.
    #[serde(skip)]
    mismatches: Vec<String>,
}

/// What a run produced: the rendered report and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage_error(msg: impl std::fmt::Display) -> Outcome {
    let usage = <Cli as clap::CommandFactory>::command().render_usage();
    Outcome {
        code: 1,
        stdout: String::new(),
        stderr: format!("error: {msg}\n\n{usage}\n"),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let mut stderr = e.to_string();
                    if !stderr.contains("Usage") {
                        let usage = <Cli as clap::CommandFactory>::command().render_usage();
                        stderr.push_str(&format!("\n{usage}\n"));
                    }
                    Outcome {
                        code: 1,
                        stdout: String::new(),
                        stderr,
                    }
                }
            }
        }
    };
    let config = RunConfig {
        seed: cli.flags.seed,
        samples: cli.flags.samples,
        coefficient_bound: cli.flags.coeff_bound,
        max_rank: cli.flags.max_rank,
        max_param: cli.flags.max_param,
        enable_spin: cli.flags.enable_spin,
        output_format: cli.flags.format,
        expect_paper: cli.flags.expect_paper,
    };
    let report = match execute(&cli.cmd, &config) {
        Ok(r) => r,
        Err(e) if is_usage(&e) => return usage_error(format!("{e:#}")),
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e:#}\n"),
            }
        }
    };
    let text = match config.output_format {
        Format::Json => render::json(&report),
        Format::Markdown => render::markdown(&report),
    };
    let mut stderr = String::new();
    if let Some(dir) = &cli.flags.out {
        if let Err(e) = save(dir, &report, &text) {
            return Outcome {
                code: 1,
                stdout: text,
                stderr: format!("error: {e:#}\n"),
            };
        }
    }
    let mut code = 0;
    if config.expect_paper && !report.mismatches.is_empty() {
        code = 2;
        for m in &report.mismatches {
            stderr.push_str(&format!("expectation failed: {m}\n"));
        }
    }
    Outcome { code, stdout: text, stderr }
}

fn is_usage(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        matches!(
            c.downcast_ref::<cpairs_core::catalog::CatalogError>(),
            Some(cpairs_core::catalog::CatalogError::UnknownId(_))
        ) || matches!(
            c.downcast_ref::<cpairs_core::claims::ClaimError>(),
            Some(cpairs_core::claims::ClaimError::UnknownClaim(_))
        )
    })
}

/// File name for a report: command words and ids, then the seed.
pub fn report_file_name(report: &Report) -> String {
    let slug: String = report
        .command
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '.' || c == '-' { c } else { '_' })
        .collect();
    let ext = match report.config.output_format {
        Format::Json => "json",
        Format::Markdown => "md",
    };
    format!("{slug}.seed{}.{ext}", report.config.seed)
}

fn save(dir: &std::path::Path, report: &Report, text: &str) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(report_file_name(report));
    std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
}

fn get(id: &str, cfg: &RunConfig) -> anyhow::Result<Embedding> {
    resolve(id, cfg.enable_spin).with_context(|| format!("catalog id {id:?}"))
}

/// Catalog value of `c_G(G/H)`, where the tables fix one.
fn expected_homspace(id: &str) -> Option<usize> {
    if let Some(i) = table4_instance(id) {
        return Some(i.expected() as usize);
    }
    if id.starts_with("T1.") || id.starts_with("HORO.") || id.starts_with("P.") {
        return Some(0);
    }
    None
}

/// `T1.x.H`/`T1.x.K` or `T3.x.H`/`T3.x.K` of the same row instance.
fn same_decomposition(id1: &str, id2: &str) -> bool {
    let stem = |s: &str| {
        s.strip_suffix(".H")
            .or_else(|| s.strip_suffix(".K"))
            .map(str::to_string)
    };
    (id1.starts_with("T1.") || id1.starts_with("T3.")) && stem(id1).is_some() && stem(id1) == stem(id2) && id1 != id2
}

fn new_report(command: String, config: &RunConfig) -> Report {
    Report {
        command,
        config: config.clone(),
        results: Vec::new(),
        claims: Vec::new(),
        table1: None,
        mismatches: Vec::new(),
    }
}

fn claim_results(claims: &[ClaimReport]) -> Vec<ResultEntry> {
    let mut out = Vec::new();
    for c in claims {
        for rec in &c.records {
            let ids: Vec<&str> = rec.ids.iter().map(String::as_str).collect();
            for q in &rec.quantities {
                if let Some(r) = &q.result {
                    out.push(ResultEntry::from_result(&ids, &format!("{}:{}", c.id, q.name), r));
                }
            }
        }
    }
    out
}

fn claim_mismatches(claims: &[ClaimReport]) -> Vec<String> {
    claims
        .iter()
        .filter(|c| c.mode == Mode::Asserted)
        .flat_map(|c| {
            c.records
                .iter()
                .filter(|r| r.status == Status::Fail)
                .map(move |r| format!("{} {}: expected {}", c.id, r.instance, r.expected.as_deref().unwrap_or("?")))
        })
        .collect()
}

fn with_claims(mut report: Report, claims: Vec<ClaimReport>) -> Report {
    report.results = claim_results(&claims);
    report.mismatches = claim_mismatches(&claims);
    report.claims = claims;
    report
}

fn execute(cmd: &Cmd, cfg: &RunConfig) -> anyhow::Result<Report> {
    let h = cfg.harness();
    let s = &h.sampler;
    Ok(match cmd {
        Cmd::Complexity { which } => match which {
            ComplexityCmd::Pair { id1, id2 } => {
                let (a, b) = (get(id1, cfg)?, get(id2, cfg)?);
                let r = complexity_pair(&a, &b, s)?;
                let mut rep = new_report(format!("complexity pair {id1} {id2}"), cfg);
                rep.results.push(ResultEntry::from_result(&[id1, id2], "pair", &r));
                rep
            }
            ComplexityCmd::Homspace { id } => {
                let r = complexity_homspace(&get(id, cfg)?, s)?;
                let mut rep = new_report(format!("complexity homspace {id}"), cfg);
                if let Some(e) = expected_homspace(id).filter(|&e| e != r.value) {
                    rep.mismatches.push(format!("{id}: c_G(G/H) = {}, catalog value {e}", r.value));
                }
                rep.results.push(ResultEntry::from_result(&[id], "homspace", &r));
                rep
            }
            ComplexityCmd::Diag { parabolic, id } => {
                let p = resolve_parabolic(parabolic).with_context(|| format!("parabolic {parabolic:?}"))?;
                let r = diagonal_complexity(&p, &get(id, cfg)?, s)?;
                let mut rep = new_report(format!("complexity diag {parabolic} {id}"), cfg);
                rep.results.push(ResultEntry::from_result(&[parabolic, id], "diagonal", &r));
                rep
            }
        },
        Cmd::Decompose { id1, id2 } => {
            let d = is_decomposition(&get(id1, cfg)?, &get(id2, cfg)?, s)?;
            let mut rep = new_report(format!("decompose {id1} {id2}"), cfg);
            if same_decomposition(id1, id2) && !d.holds {
                rep.mismatches.push(format!("({id1}, {id2}) is listed as a decomposition"));
            }
            let mut e = ResultEntry::from_result(&[id1, id2], "decomposition", &d.result);
            e.holds = Some(d.holds);
            e.note = Some(d.certificate.label().to_string());
            rep.results.push(e);
            rep
        }
        Cmd::Spherical { id } => {
            let r = complexity_homspace(&get(id, cfg)?, s)?;
            let mut rep = new_report(format!("spherical {id}"), cfg);
            if let Some(e) = expected_homspace(id).filter(|&e| (e == 0) != (r.value == 0)) {
                rep.mismatches.push(format!("{id}: c_G(G/H) = {}, catalog value {e}", r.value));
            }
            let mut e = ResultEntry::from_result(&[id], "homspace", &r);
            e.holds = Some(r.value == 0);
            rep.results.push(e);
            rep
        }
        Cmd::Horospherical { id } => {
            let hr = is_horospherical(&get(id, cfg)?, s)?;
            let mut rep = new_report(format!("horospherical {id}"), cfg);
            if id.starts_with("HORO.") && !hr.horospherical {
                rep.mismatches.push(format!("{id} is horospherical by construction"));
            }
            rep.results.push(ResultEntry {
                ids: vec![id.clone()],
                quantity: "horospherical".to_string(),
                value: None,
                max_orbit_dim: None,
                ambient_dim: None,
                witnesses: Vec::new(),
                holds: Some(hr.horospherical),
                note: Some(hr.note),
            });
            rep
        }
        Cmd::Verify { table } => {
            let (name, claim) = match table {
                VerifyTable::Table3 => ("table3", "C13"),
                VerifyTable::Table4 => ("table4", "C14"),
            };
            let claims = run_claims(&[claim.to_string()], &h)?;
            with_claims(new_report(format!("verify {name}"), cfg), claims)
        }
        Cmd::Reproduce { target } => match target {
            Target::TheoremA => {
                let t = reproduce_theorem_a(&h)?;
                let claims = vec![claim_report("C11", t.records(), &h)?];
                with_claims(new_report("reproduce theorem-a".to_string(), cfg), claims)
            }
            Target::Table1 => {
                let t = reproduce_table1(&h)?;
                let claims = vec![claim_report("C12", t.records(), &h)?];
                let mut rep = with_claims(new_report("reproduce table-1".to_string(), cfg), claims);
                rep.table1 = Some(t);
                rep
            }
        },
        Cmd::Claims {
            which: ClaimsCmd::Run { only },
        } => {
            let only: Vec<String> = only.iter().map(|s| s.trim().to_uppercase()).collect();
            if let Some(bad) = only.iter().find(|s| claim_mode(s).is_none()) {
                return Err(cpairs_core::claims::ClaimError::UnknownClaim(bad.clone()).into());
            }
            let claims = run_claims(&only, &h)?;
            let command = if only.is_empty() {
                "claims run".to_string()
            } else {
                format!("claims run --only {}", only.join(","))
            };
            with_claims(new_report(command, cfg), claims)
        }
    })
}
