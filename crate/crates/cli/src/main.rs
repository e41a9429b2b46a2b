mod cache;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use supero_core::bgg::DEFAULT_WINDOW;
use supero_core::flags::{project_block, tensor_flag, typical_projective};
use supero_core::linkage::{atypicality, is_typical};
use supero_core::suites::{property_suites, SuiteReport};
use supero_core::tables::{lookup, Table};
use supero_core::{
    block_id, certified_weights, composition_series, is_linked, validate_tables, AlgebraShape,
    Deduction, Engine, Error, Outcome, RepKind, ValidationReport, VermaFlag, Weight,
};

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "supero",
    version,
    about = "Verma flags of projective covers for gl(3|1) and gl(2|2)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct WeightArg {
    /// Algebra as MxN; inferred from the weight when omitted.
    #[arg(long)]
    algebra: Option<String>,
    /// Weight as "q1,...,qm|r1,...,rn".
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand)]
enum Command {
    /// Degree of atypicality and matched pairs.
    Atyp(WeightArg),
    /// Whether two weights lie in the same block.
    Linked {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
    },
    /// Block identifier.
    Block(WeightArg),
    /// Verma flag of the projective cover.
    Projective {
        #[command(flatten)]
        w: WeightArg,
        /// Include the engine derivation.
        #[arg(long)]
        explain: bool,
        /// Memo file; defaults to $SUPERO_CACHE.
        #[arg(long, env = "SUPERO_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Composition series of the Verma module.
    Composition(WeightArg),
    /// Weights certified to occur in the flag, with their conditions.
    Certify(WeightArg),
    /// Flag of M_λ ⊗ W.
    Tensor {
        #[command(flatten)]
        w: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        /// Keep only one block.
        #[arg(long)]
        project: bool,
        /// Weight whose block `--project` keeps; defaults to `--weight`.
        #[arg(long, allow_hyphen_values = true, requires = "project")]
        onto: Option<String>,
    },
    /// Check the transcribed tables and run the property suites.
    Verify {
        #[arg(long, value_parser = ["paper"])]
        suite: String,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Ambiguous(String),
    Verification(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) | Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::Ambiguous(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidShape { .. }
            | Error::ShapeMismatch { .. }
            | Error::Typical(_)
            | Error::Atypical(_)
            | Error::NotInFlag { .. } => Failure::Input(e.to_string()),
            Error::Unavailable(_) | Error::DepthExceeded(_) => Failure::Ambiguous(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn parse_weight(algebra: Option<&str>, s: &str) -> Result<Weight, Failure> {
    let lam: Weight = s.parse()?;
    if let Some(a) = algebra {
        let shape: AlgebraShape = a.parse()?;
        if shape != lam.shape() {
            return Err(Failure::Input(format!(
                "weight {lam} does not belong to gl({}|{})",
                shape.m(),
                shape.n()
            )));
        }
    }
    Ok(lam)
}

impl WeightArg {
    fn get(&self) -> Result<Weight, Failure> {
        parse_weight(self.algebra.as_deref(), &self.weight)
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable output"),
        Format::Text => text(),
    };
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

#[derive(Serialize)]
struct AtypOutput {
    weight: Weight,
    degree: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct LinkedOutput {
    w1: Weight,
    w2: Weight,
    linked: bool,
}

#[derive(Serialize)]
struct ProjectiveOutput {
    weight: Weight,
    /// `typical`, `table` or `engine`.
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    branch: Option<String>,
    flag: VermaFlag,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Deduction>,
}

#[derive(Serialize)]
struct TensorOutput {
    weight: Weight,
    rep: RepKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    onto: Option<Weight>,
    flag: VermaFlag,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    ledger: &'a ValidationReport,
    suites: &'a [SuiteReport],
}

fn table_for(lam: &Weight) -> Option<Table> {
    match lam.shape() {
        s if s == AlgebraShape::GL31 => Some(Table::Gl31),
        s if s == AlgebraShape::GL22 => Some(Table::Gl22),
        _ => None,
    }
}

fn deduce(engine: &Engine, lam: &Weight) -> Result<Deduction, Failure> {
    match engine.deduce(lam)? {
        Outcome::Closed(d) => Ok(d),
        Outcome::Ambiguous(a) => Err(Failure::Ambiguous(format!(
            "AMBIGUOUS: P_{{{}}} lies between {} and {}",
            a.lam,
            a.lower,
            a.upper
                .map_or("an unknown bound".to_string(), |u| u.to_string())
        ))),
    }
}

fn projective(
    format: Format,
    lam: &Weight,
    explain: bool,
    cache_path: Option<&PathBuf>,
) -> CmdResult {
    let engine = Engine::new();
    let hit = table_for(lam)
        .and_then(|t| lookup(t, lam).ok())
        .filter(|h| h.strict_flag().is_ok());
    let source = if is_typical(lam) {
        "typical"
    } else if hit.is_some() {
        "table"
    } else {
        "engine"
    };
    let mut cache = cache_path.map(|p| Cache::open(p));
    let trace = if explain && !is_typical(lam) {
        Some(deduce(&engine, lam)?)
    } else {
        None
    };
    let cached = cache.as_ref().and_then(|c| c.get(lam)).cloned();
    let flag = match cached {
        Some(f) => f,
        None => {
            let f = match (&hit, &trace) {
                _ if is_typical(lam) => typical_projective(lam)?,
                (Some(h), _) => h.flag.clone(),
                (None, Some(d)) => d.flag.clone(),
                (None, None) => deduce(&engine, lam)?.flag,
            };
            if let Some(c) = cache.as_mut() {
                c.insert(lam, &f);
                if let Err(e) = c.save() {
                    eprintln!("warning: cannot write cache: {e}");
                }
            }
            f
        }
    };
    let out = ProjectiveOutput {
        weight: lam.clone(),
        source,
        branch: hit.map(|h| h.branch.id.to_string()),
        flag,
        trace,
    };
    emit(format, &out, || {
        let mut s = format!("P_{{{}}} = {}", out.weight, out.flag);
        if let Some(b) = &out.branch {
            s.push_str(&format!("\n  from table branch {b}"));
        }
        if let Some(d) = &out.trace {
            s.push_str(&format!("\n  derivation ({}):", d.tactic));
            for step in &d.trace {
                s.push_str(&format!(
                    "\n    Pr(P_{{{}}} ⊗ {}) = {}{}",
                    step.mu,
                    step.rep,
                    step.projection,
                    step.tactic.map_or(String::new(), |t| format!("  [{t}]"))
                ));
                if !step.notes.is_empty() {
                    s.push_str(&format!("\n      {}", step.notes));
                }
            }
        }
        s
    });
    Ok(())
}

fn verify(format: Format) -> CmdResult {
    let report = validate_tables();
    let suites = property_suites();
    let passed = report.passed() && suites.iter().all(SuiteReport::passed);
    let out = VerifyOutput {
        passed,
        ledger: &report,
        suites: &suites,
    };
    emit(format, &out, || {
        let mut lines = vec![format!(
            "tables: {} branches, {} weights, {} ledger entries ({} unexplained)",
            report.branches_checked,
            report.weights_checked,
            report.entries.len(),
            report.unexplained().count()
        )];
        for e in &report.entries {
            lines.push(format!(
                "  [{}] {} {:?} x{} at {}: {}",
                if e.explained {
                    "ledgered"
                } else {
                    "UNEXPLAINED"
                },
                e.case,
                e.kind,
                e.occurrences,
                e.weight,
                e.detail
            ));
        }
        for b in &report.unhit_branches {
            lines.push(format!("  [UNEXPLAINED] {b} never checked"));
        }
        for s in &suites {
            lines.push(format!(
                "suite {}: {} checked, {}",
                s.name,
                s.checked,
                if s.passed() { "ok" } else { "FAILED" }
            ));
            lines.extend(s.failures.iter().map(|f| format!("  {f}")));
        }
        lines.push(
            if passed {
                "verify: ok"
            } else {
                "verify: FAILED"
            }
            .to_string(),
        );
        lines.join("\n")
    });
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification(
            "unexplained discrepancies".to_string(),
        ))
    }
}

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Atyp(w) => {
            let lam = w.get()?;
            let data = atypicality(&lam);
            let out = AtypOutput {
                weight: lam,
                degree: data.degree,
                pairs: data.pairs,
            };
            emit(format, &out, || {
                let pairs: Vec<String> = out
                    .pairs
                    .iter()
                    .map(|(i, j)| format!("δ{}-ε{}", i + 1, j + 1))
                    .collect();
                format!("degree {}\npairs {}", out.degree, pairs.join(" "))
            });
        }
        Command::Linked { algebra, w1, w2 } => {
            let a = parse_weight(algebra.as_deref(), &w1)?;
            let b = parse_weight(algebra.as_deref(), &w2)?;
            let linked = is_linked(&a, &b)?;
            emit(
                format,
                &LinkedOutput {
                    w1: a,
                    w2: b,
                    linked,
                },
                || linked.to_string(),
            );
        }
        Command::Block(w) => {
            let id = block_id(&w.get()?);
            // JSON either way; the block id has no other rendering
            emit(Format::Json, &id, String::new);
        }
        Command::Projective { w, explain, cache } => {
            projective(format, &w.get()?, explain, cache.as_ref())?;
        }
        Command::Composition(w) => {
            let mu = w.get()?;
            if mu.shape() != AlgebraShape::GL22 || atypicality(&mu).degree != 2 {
                return Err(Failure::Input(format!(
                    "composition series need a degree 2 weight of gl(2|2), got {mu}"
                )));
            }
            let s = composition_series(&mu, DEFAULT_WINDOW)?;
            emit(format, &s, || s.to_string());
        }
        Command::Certify(w) => {
            let lam = w.get()?;
            if is_typical(&lam) {
                return Err(Error::Typical(lam).into());
            }
            let set = certified_weights(&lam);
            emit(format, &set, || {
                set.tags
                    .iter()
                    .map(|(w, t)| format!("M_{{{w}}} {t}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Tensor {
            w,
            rep,
            project,
            onto,
        } => {
            let lam = w.get()?;
            let kind: RepKind = rep.parse()?;
            let target = match &onto {
                Some(s) => parse_weight(Some(&lam.shape().to_string()), s)?,
                None => lam.clone(),
            };
            let mut flag = tensor_flag(&VermaFlag::singleton(&lam), kind);
            if project {
                flag = project_block(&flag, &block_id(&target));
            }
            let out = TensorOutput {
                weight: lam,
                rep: kind,
                onto: project.then_some(target),
                flag,
            };
            emit(format, &out, || out.flag.to_string());
        }
        Command::Verify { suite } => {
            debug_assert_eq!(suite, "paper");
            verify(format)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Ambiguous(m) => eprintln!("{m}"),
                Failure::Verification(m) => eprintln!("verification failed: {m}"),
                Failure::Internal(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
