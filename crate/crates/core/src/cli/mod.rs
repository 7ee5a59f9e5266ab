//! Command-line front end. Parsing yields a [`RunConfig`]; [`run`] executes
//! it and returns the rendered output together with the exit status.

pub mod acceptance;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{
    b_character, b_character_factors, betagamma_factors, betagamma_refined, free_field_counts,
    rank_vector_from, spin_decomposition, total_dimension, verify_wz, w_refined_verma,
    w_refined_verma_factors, x_i, x_i_factors, x_ij, x_ij_factors, affine_verma_denominator,
    BlockData,
};
use crate::closed_form::{
    theorem_z, theorem_z_factors, theorem_z_u, theorem_z_u_factors, verify_reindexing,
    verify_partition_identity, verify_theorem, verify_u_form, IdentityReport,
};
use crate::error::Error;
use crate::localization::{
    brute_force_z, enumerate_fixed_points, fixed_point_index, fixed_point_report, invariant_part,
    morse_index_oracle, occupation_vectors, tangent_character, OccupationVector, RankVector,
    RepRingElement,
};
use crate::partitions::verify_box_counts;
use crate::series::{InverseProduct, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const THREADS_ENV: &str = "LAUMON_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    #[value(name = "zr-brute")]
    ZrBrute,
    #[value(name = "zr-closed")]
    ZrClosed,
    #[value(name = "zr-u")]
    ZrU,
    #[value(name = "verify-thm")]
    VerifyThm,
    #[value(name = "verify-prop34")]
    VerifyUForm,
    #[value(name = "verify-wz")]
    VerifyWz,
    #[value(name = "verify-appendixA")]
    VerifyBoxCounts,
    #[value(name = "verify-appendixB")]
    VerifyReindexing,
    #[value(name = "verify-lemma32")]
    VerifyPartitionSum,
    #[value(name = "fixed-points")]
    FixedPoints,
    #[value(name = "morse")]
    Morse,
    #[value(name = "tangent")]
    Tangent,
    #[value(name = "characters")]
    Characters,
    #[value(name = "spin")]
    Spin,
    #[value(name = "verma-denominator")]
    VermaDenominator,
    #[value(name = "acceptance")]
    Acceptance,
}

impl Command {
    fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }

    fn needs_ranks(self) -> bool {
        use Command::*;
        matches!(
            self,
            ZrBrute
                | ZrClosed
                | ZrU
                | VerifyThm
                | VerifyUForm
                | VerifyReindexing
                | FixedPoints
                | Morse
                | Tangent
        )
    }

    fn needs_blocks(self) -> bool {
        matches!(self, Command::VerifyWz | Command::Characters | Command::Spin)
    }

    fn needs_occupation(self) -> bool {
        matches!(self, Command::FixedPoints | Command::Tangent)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "laumon", version, about = "Affine Laumon space generating functions and W-algebra characters")]
struct Args {
    command: Command,
    /// Rank vector, e.g. 2,1
    #[arg(long, value_delimiter = ',')]
    ranks: Option<Vec<u32>>,
    /// Block multiplicities, e.g. 1,1
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<u32>>,
    /// Block sizes, strictly increasing, e.g. 1,2
    #[arg(long, value_delimiter = ',')]
    s: Option<Vec<u32>>,
    /// Occupation vector of a single component, e.g. 1,1
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<u32>>,
    /// Truncation order (total q-degree, or z-degree for the Verma denominator)
    #[arg(long, default_value_t = 4)]
    max_order: u32,
    /// Secondary weight cap for the Verma denominator
    #[arg(long, default_value_t = 4)]
    v_cap: u32,
    /// Coloring offset for the partition identity (default: all)
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    /// Modulus for the partition and box-count identities (default: a standard range)
    #[arg(long)]
    ell: Option<usize>,
    /// Rank N of gl_N for the Verma denominator
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub ranks: Option<RankVector>,
    pub blocks: Option<BlockData>,
    pub occupation: Option<OccupationVector>,
    pub max_order: u32,
    pub v_cap: u32,
    pub a: Option<i64>,
    pub ell: Option<usize>,
    pub dim: Option<usize>,
    pub output: OutputFormat,
    pub threads: usize,
    pub out_path: Option<PathBuf>,
}

/// A parse failure, or a request for help or version text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            exit_code: EXIT_USAGE,
            message: format!("error: {}\n", message.into()),
        }
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses `argv` (including the program name), reading the thread override
/// from the environment.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    parse_args_with_env(argv, std::env::var(THREADS_ENV).ok())
}

pub fn parse_args_with_env<I, T>(argv: I, env_threads: Option<String>) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| CliError {
        exit_code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
        message: e.render().to_string(),
    })?;
    let cmd = args.command;
    let name = cmd.name();

    let ranks = args
        .ranks
        .map(RankVector::new)
        .transpose()
        .map_err(|e| CliError::usage(format!("--ranks: {e}")))?;
    let blocks = match (args.m, args.s) {
        (Some(m), Some(s)) => {
            Some(BlockData::new(m, s).map_err(|e| CliError::usage(format!("--m/--s: {e}")))?)
        }
        (None, None) => None,
        _ => return Err(CliError::usage("--m and --s must be given together")),
    };
    if cmd.needs_ranks() && (ranks.is_none() || blocks.is_some()) {
        return Err(CliError::usage(format!("{name} requires --ranks (and no --m/--s)")));
    }
    if cmd.needs_blocks() && (blocks.is_none() || ranks.is_some()) {
        return Err(CliError::usage(format!("{name} requires --m and --s (and no --ranks)")));
    }
    if !cmd.needs_ranks() && !cmd.needs_blocks() && (ranks.is_some() || blocks.is_some()) {
        return Err(CliError::usage(format!("{name} takes neither --ranks nor --m/--s")));
    }
    let occupation = args.n.map(OccupationVector::new);
    if cmd.needs_occupation() && occupation.is_none() {
        return Err(CliError::usage(format!("{name} requires --n")));
    }
    if occupation.is_some() && !matches!(cmd, Command::FixedPoints | Command::Tangent | Command::Morse) {
        return Err(CliError::usage(format!("{name} does not take --n")));
    }
    if cmd == Command::VermaDenominator && args.dim.is_none() {
        return Err(CliError::usage("verma-denominator requires --dim"));
    }
    if args.dim == Some(0) {
        return Err(CliError::usage("--dim must be positive"));
    }
    if matches!(args.ell, Some(e) if e < 2) {
        return Err(CliError::usage("--ell must be at least 2"));
    }

    let threads = match env_threads {
        Some(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|t| *t > 0)
            .ok_or_else(|| CliError::usage(format!("{THREADS_ENV}={v} is not a positive integer")))?,
        None => args.threads.unwrap_or_else(default_threads),
    };
    if threads == 0 {
        return Err(CliError::usage("--threads must be positive"));
    }

    Ok(RunConfig {
        command: cmd,
        ranks,
        blocks,
        occupation,
        max_order: args.max_order,
        v_cap: args.v_cap,
        a: args.a,
        ell: args.ell,
        dim: args.dim,
        output: args.format,
        threads,
        out_path: args.out,
    })
}

/// Rendered output and exit status of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

fn exit_code_for(e: &Error) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_USAGE
    }
}

/// Runs on a dedicated pool of `config.threads` workers.
pub fn run(config: &RunConfig) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build();
    let result = match pool {
        Ok(pool) => pool.install(|| execute(config)),
        Err(e) => {
            return Outcome {
                status: EXIT_INTERNAL,
                output: format!("error: thread pool: {e}\n"),
            }
        }
    };
    match result {
        Ok(o) => o,
        Err(e) => Outcome {
            status: exit_code_for(&e),
            output: format!("error: {e}\n"),
        },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn series_value(s: &Series, notes: &[String]) -> Value {
    let mut v = s.to_json();
    if !notes.is_empty() {
        v["notes"] = json!(notes);
    }
    v
}

fn zero_rank_notes(r: &RankVector) -> Vec<String> {
    if r.all_positive() {
        Vec::new()
    } else {
        vec!["ranks contain a zero entry, outside the standing positivity assumption".into()]
    }
}

fn report_text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        if r.equal {
            let _ = writeln!(out, "equal   {} (order {})", r.identity, r.truncation);
        } else {
            let _ = write!(out, "DIFFER  {} (order {})", r.identity, r.truncation);
            if let Some(d) = &r.first_diff {
                let _ = write!(out, " at {} lhs={} rhs={}", Value::Object(d.exp.clone()), d.lhs, d.rhs);
            }
            out.push('\n');
        }
        for n in &r.notes {
            let _ = writeln!(out, "        note: {n}");
        }
    }
    out
}

fn reports_outcome(cfg: &RunConfig, reports: Vec<IdentityReport>) -> Outcome {
    let equal = reports.iter().all(|r| r.equal);
    let output = match cfg.output {
        OutputFormat::Json => pretty(&json!({
            "command": cfg.command.name(),
            "equal": equal,
            "reports": reports,
        })),
        OutputFormat::Text => report_text(&reports),
    };
    Outcome {
        status: if equal { EXIT_OK } else { EXIT_DISCREPANCY },
        output,
    }
}

fn ok(output: String) -> Outcome {
    Outcome {
        status: EXIT_OK,
        output,
    }
}

fn series_outcome(cfg: &RunConfig, s: &Series, factors: Option<&InverseProduct>, notes: &[String]) -> Outcome {
    match cfg.output {
        OutputFormat::Json => ok(pretty(&series_value(s, notes))),
        OutputFormat::Text => {
            let mut out = String::new();
            for n in notes {
                let _ = writeln!(out, "# note: {n}");
            }
            if let Some(f) = factors {
                for line in f.describe() {
                    let _ = writeln!(out, "# {line}");
                }
            }
            let _ = writeln!(out, "{s}");
            ok(out)
        }
    }
}

#[derive(Serialize)]
struct CharacterEntry {
    name: String,
    factors: Vec<String>,
    series: Value,
}

fn execute(cfg: &RunConfig) -> crate::Result<Outcome> {
    let n_max = cfg.max_order;
    let ranks = || cfg.ranks.clone().expect("checked at parse time");
    let blocks = || cfg.blocks.clone().expect("checked at parse time");
    match cfg.command {
        Command::ZrBrute => {
            let r = ranks();
            let s = brute_force_z(&r, n_max)?;
            Ok(series_outcome(cfg, &s, None, &zero_rank_notes(&r)))
        }
        Command::ZrClosed => {
            let r = ranks();
            let f = theorem_z_factors(&r)?;
            Ok(series_outcome(cfg, &theorem_z(&r, n_max)?, Some(&f), &zero_rank_notes(&r)))
        }
        Command::ZrU => {
            let r = ranks();
            let f = theorem_z_u_factors(&r)?;
            Ok(series_outcome(cfg, &theorem_z_u(&r, n_max)?, Some(&f), &zero_rank_notes(&r)))
        }
        Command::VerifyThm => Ok(reports_outcome(cfg, vec![verify_theorem(&ranks(), n_max)?])),
        Command::VerifyUForm => Ok(reports_outcome(cfg, vec![verify_u_form(&ranks(), n_max)?])),
        Command::VerifyWz => Ok(reports_outcome(cfg, verify_wz(&blocks(), n_max)?)),
        Command::VerifyReindexing => Ok(reports_outcome(cfg, verify_reindexing(&ranks(), n_max)?)),
        Command::VerifyPartitionSum => {
            let ells: Vec<usize> = cfg.ell.map_or(vec![2, 3, 4], |e| vec![e]);
            let mut reports = Vec::new();
            for ell in ells {
                let offsets: Vec<i64> = cfg.a.map_or((0..ell as i64).collect(), |a| vec![a]);
                for a in offsets {
                    reports.push(verify_partition_identity(a, ell, n_max)?);
                }
            }
            Ok(reports_outcome(cfg, reports))
        }
        Command::VerifyBoxCounts => {
            let ells: Vec<usize> = cfg.ell.map_or(vec![2, 3, 4, 5], |e| vec![e]);
            let rep = verify_box_counts(n_max, &ells)?;
            let output = match cfg.output {
                OutputFormat::Json => pretty(&serde_json::to_value(&rep)?),
                OutputFormat::Text => match &rep.first_failure {
                    None => format!(
                        "equal   box-count identities, {} cases up to size {}\n",
                        rep.checked, rep.max_size
                    ),
                    Some(f) => format!("DIFFER  box-count identities at {f:?}\n"),
                },
            };
            Ok(Outcome {
                status: if rep.equal { EXIT_OK } else { EXIT_DISCREPANCY },
                output,
            })
        }
        Command::FixedPoints => {
            let r = ranks();
            let rep = fixed_point_report(&r, cfg.occupation.as_ref().expect("checked"))?;
            Ok(ok(match cfg.output {
                OutputFormat::Json => pretty(&serde_json::to_value(&rep)?),
                OutputFormat::Text => rep
                    .fixed_points
                    .iter()
                    .map(|f| format!("{}  morse={}\n", serde_json::to_string(&f.mus).unwrap_or_default(), f.morse))
                    .collect(),
            }))
        }
        Command::Morse => morse(cfg, &ranks()),
        Command::Tangent => tangent(cfg, &ranks()),
        Command::Characters => characters(cfg, &blocks()),
        Command::Spin => {
            let b = blocks();
            let entries = spin_decomposition(&b);
            let total = total_dimension(&entries);
            let fields = free_field_counts(&b);
            Ok(ok(match cfg.output {
                OutputFormat::Json => pretty(&json!({
                    "blocks": b,
                    "n": b.n(),
                    "entries": entries,
                    "total_dim": total,
                    "free_fields": fields,
                })),
                OutputFormat::Text => {
                    let mut out = String::new();
                    for e in &entries {
                        let _ = writeln!(out, "blocks ({},{})  d={}  mult={}", e.i, e.j, e.d, e.mult);
                    }
                    let _ = writeln!(out, "total_dim {total} (N = {})", b.n());
                    out
                }
            }))
        }
        Command::VermaDenominator => {
            let n = cfg.dim.expect("checked");
            let s = affine_verma_denominator(n, n_max, cfg.v_cap)?;
            Ok(series_outcome(cfg, &s, None, &[]))
        }
        Command::Acceptance => {
            let results = acceptance::run_all()?;
            let passed = results.iter().all(|c| c.passed);
            let output = match cfg.output {
                OutputFormat::Json => pretty(&json!({ "passed": passed, "criteria": results })),
                OutputFormat::Text => {
                    let mut out = String::new();
                    for c in &results {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        let _ = writeln!(out, "{:>2}  {status}  {:<45} {}", c.id, c.title, c.detail);
                    }
                    out
                }
            };
            Ok(Outcome {
                status: if passed { EXIT_OK } else { EXIT_DISCREPANCY },
                output,
            })
        }
    }
}

fn morse(cfg: &RunConfig, r: &RankVector) -> crate::Result<Outcome> {
    let components = match &cfg.occupation {
        Some(n) => vec![n.clone()],
        None => occupation_vectors(r.ell(), cfg.max_order),
    };
    let mut rows = Vec::new();
    let mut agree = true;
    for n in components {
        for fp in enumerate_fixed_points(r, &n)? {
            let formula = fixed_point_index(&fp, r)?;
            let oracle = morse_index_oracle(&fp, r)?;
            agree &= formula == oracle;
            rows.push(json!({ "n": n, "mus": fp.mus, "formula": formula, "weights": oracle }));
        }
    }
    let output = match cfg.output {
        OutputFormat::Json => pretty(&json!({ "r": r, "equal": agree, "fixed_points": rows })),
        OutputFormat::Text => rows
            .iter()
            .map(|v| format!("n={} mus={} formula={} weights={}\n", v["n"], v["mus"], v["formula"], v["weights"]))
            .collect(),
    };
    Ok(Outcome {
        status: if agree { EXIT_OK } else { EXIT_DISCREPANCY },
        output,
    })
}

fn tangent(cfg: &RunConfig, r: &RankVector) -> crate::Result<Outcome> {
    let n = cfg.occupation.as_ref().expect("checked");
    let count = |t: &[RepRingElement]| t.iter().map(RepRingElement::monomial_count).sum::<i64>();
    let mut rows = Vec::new();
    let mut text = String::new();
    for fp in enumerate_fixed_points(r, n)? {
        let t = tangent_character(&fp, r)?;
        let inv = invariant_part(&t);
        let nonzero: Vec<&RepRingElement> = t.iter().filter(|e| !e.is_empty()).collect();
        let _ = writeln!(
            text,
            "mus={} raw={} invariant={}",
            serde_json::to_string(&fp.mus)?,
            count(&t),
            count(&inv)
        );
        for e in &nonzero {
            let _ = writeln!(text, "  {e}");
        }
        rows.push(json!({
            "mus": fp.mus,
            "raw_count": count(&t),
            "invariant_count": count(&inv),
            "elements": nonzero,
        }));
    }
    Ok(ok(match cfg.output {
        OutputFormat::Json => pretty(&json!({ "r": r, "n": n, "fixed_points": rows })),
        OutputFormat::Text => text,
    }))
}

fn characters(cfg: &RunConfig, b: &BlockData) -> crate::Result<Outcome> {
    let n_max = cfg.max_order;
    let mut entries = Vec::new();
    let mut push = |name: String, f: InverseProduct, s: Series| {
        entries.push(CharacterEntry {
            name,
            factors: f.describe(),
            series: s.to_json(),
        });
    };
    for i in 1..=b.len() {
        push(format!("X_{i}"), x_i_factors(b, i)?, x_i(b, i, n_max)?);
    }
    for i in 1..=b.len() {
        for j in i + 1..=b.len() {
            push(format!("X_{i}{j}"), x_ij_factors(b, i, j)?, x_ij(b, i, j, n_max)?);
        }
    }
    push("W".into(), w_refined_verma_factors(b)?, w_refined_verma(b, n_max)?);
    for i in 1..=b.len() {
        for j in i + 1..=b.len() {
            push(format!("B_{i}{j}"), b_character_factors(b, i, j)?, b_character(b, i, j, n_max)?);
            push(
                format!("betagamma_{i}{j}"),
                betagamma_factors(b, i, j)?,
                betagamma_refined(b, i, j, n_max)?,
            );
        }
    }
    let r = rank_vector_from(b)?;
    Ok(ok(match cfg.output {
        OutputFormat::Json => pretty(&json!({ "blocks": b, "ranks": r, "characters": entries })),
        OutputFormat::Text => {
            let mut out = String::new();
            for e in &entries {
                let _ = writeln!(out, "{}:", e.name);
                for f in &e.factors {
                    let _ = writeln!(out, "  {f}");
                }
                let s = Series::from_json(&e.series)?;
                let _ = writeln!(out, "  = {s}");
            }
            out
        }
    }))
}
