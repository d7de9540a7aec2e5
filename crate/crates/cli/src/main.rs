use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use centaut::analysis::{analyze, analyze_all, audit, verify, AnalysisOptions, AnalysisReport};
use centaut::corpus::{load_file, Corpus, CorpusEntry, CorpusError};
use centaut::exec::Exec;
use centaut::group::FiniteGroupView;
use centaut::oracle::{OracleConfig, DEFAULT_HOM_BUDGET, DEFAULT_SUBGROUP_BUDGET};
use centaut::pc::{check_consistency_with, DEFAULT_SAMPLE_TRIPLES};
use clap::{Args, Parser, Subcommand};

/// Exit statuses.
mod code {
    pub const INTERNAL: u8 = 1;
    pub const NOT_FOUND: u8 = 3;
    pub const PARSE: u8 = 4;
    pub const CONSISTENCY: u8 = 5;
    pub const VIOLATION: u8 = 6;
    pub const MISMATCH: u8 = 7;
}

#[derive(Parser)]
#[command(
    name = "centaut",
    version,
    about = "Central automorphism audits for finite p-groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants, formulas and verdicts for groups
    Analyze {
        /// Presentation files or built-in corpus names
        #[arg(required = true)]
        targets: Vec<String>,
        /// Also run the brute-force oracle
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check theorem and lemma predictions over a set of groups
    Audit {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Compare formula values with brute-force counts
    Verify {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Check presentations for consistency
    Consistency {
        /// Presentation files or built-in corpus names
        #[arg(required = true)]
        targets: Vec<String>,
        /// Number of sampled associativity triples
        #[arg(long, default_value_t = DEFAULT_SAMPLE_TRIPLES)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// List the built-in corpus
    List,
}

#[derive(Args)]
struct Inputs {
    /// Directories of presentation files (default: the built-in corpus)
    dirs: Vec<PathBuf>,
    /// Use the built-in corpus only, ignoring directories
    #[arg(long, conflicts_with = "with_corpus")]
    corpus_only: bool,
    /// Use the built-in corpus in addition to the directories
    #[arg(long)]
    with_corpus: bool,
}

#[derive(Args)]
struct Common {
    /// One JSON object per line
    #[arg(long)]
    json: bool,
    /// Largest Hom set the oracle enumerates
    #[arg(long, value_name = "N", default_value_t = DEFAULT_HOM_BUDGET)]
    budget_homs: u128,
    /// Largest number of subgroups the direct-factor search visits
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SUBGROUP_BUDGET)]
    budget_subgroups: usize,
    /// Disable parallel execution
    #[arg(long)]
    sequential: bool,
}

impl Common {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }

    fn options(&self, oracle: bool) -> AnalysisOptions {
        AnalysisOptions {
            oracle,
            config: OracleConfig {
                hom_budget: self.budget_homs,
                subgroup_budget: self.budget_subgroups,
                exec: self.exec(),
            },
        }
    }
}

fn error_code(e: &CorpusError) -> u8 {
    match e {
        CorpusError::Io { .. } | CorpusError::Unknown(_) => code::NOT_FOUND,
        CorpusError::Parse { .. } => code::PARSE,
        CorpusError::Inconsistent { .. } => code::CONSISTENCY,
        CorpusError::Duplicate(_) => code::PARSE,
    }
}

/// A target is a file when such a path exists, else a corpus name.
fn resolve(target: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let path = Path::new(target);
    if path.exists() {
        return load_file(path);
    }
    if target.ends_with(".pcg") || target.contains('/') {
        return Err(CorpusError::Io {
            path: path.to_path_buf(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
        });
    }
    Ok(vec![Corpus::builtin().get(target)?.clone()])
}

fn gated(entries: Vec<CorpusEntry>) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut c = Corpus::default();
    for e in entries {
        c.insert(e)?;
    }
    Ok(c.entries().cloned().collect())
}

fn view(entry: &CorpusEntry, exec: Exec) -> Result<Arc<FiniteGroupView>, String> {
    FiniteGroupView::from_presentation_with(Arc::clone(&entry.presentation), exec)
        .map_err(|e| e.to_string())
}

fn print_report(r: &AnalysisReport, json: bool) {
    if json {
        println!("{}", r.to_json_line());
    } else {
        print!("{}", r.to_table());
        println!();
    }
}

fn run_analyze(targets: &[String], oracle: bool, common: &Common) -> u8 {
    let options = common.options(oracle);
    let mut status = 0;
    for target in targets {
        let entries = match resolve(target).and_then(gated) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("error: {e}");
                status = status.max(error_code(&e));
                continue;
            }
        };
        for entry in &entries {
            match view(entry, options.config.exec)
                .and_then(|g| analyze(&g, &options).map_err(|e| e.to_string()))
            {
                Ok(r) => print_report(&r, common.json),
                Err(e) => {
                    eprintln!("error: {}: {e}", entry.name());
                    status = status.max(code::INTERNAL);
                }
            }
        }
    }
    status
}

/// Groups for `audit` and `verify`, plus per-file errors.
fn collect_inputs(inputs: &Inputs) -> Result<(Corpus, Vec<CorpusError>), CorpusError> {
    if inputs.corpus_only || inputs.dirs.is_empty() {
        return Ok((Corpus::builtin().clone(), Vec::new()));
    }
    let mut corpus = if inputs.with_corpus {
        Corpus::builtin().clone()
    } else {
        Corpus::default()
    };
    let mut errors = Vec::new();
    for dir in &inputs.dirs {
        let (c, errs) = Corpus::from_dir(dir)?;
        corpus = corpus.merged(&c)?;
        errors.extend(errs);
    }
    Ok((corpus, errors))
}

/// Reports, `(name, reason)` errors and the exit status so far.
type Analyzed = (Vec<AnalysisReport>, Vec<(String, String)>, u8);

fn analyze_inputs(inputs: &Inputs, common: &Common) -> Result<Analyzed, u8> {
    let (corpus, load_errors) = collect_inputs(inputs).map_err(|e| {
        eprintln!("error: {e}");
        error_code(&e)
    })?;
    let options = common.options(true);
    let mut status = load_errors.iter().map(error_code).max().unwrap_or(0);
    let mut errors: Vec<(String, String)> = load_errors
        .iter()
        .map(|e| match e {
            CorpusError::Inconsistent { name, .. } => (name.clone(), e.to_string()),
            _ => ("-".to_string(), e.to_string()),
        })
        .collect();
    let entries: Vec<&CorpusEntry> = corpus.entries().collect();
    let mut groups = Vec::new();
    for e in &entries {
        match view(e, options.config.exec) {
            Ok(g) => groups.push(g),
            Err(msg) => {
                errors.push((e.name().to_string(), msg));
                status = status.max(code::INTERNAL);
            }
        }
    }
    let mut reports = Vec::new();
    for (g, r) in groups.iter().zip(analyze_all(&groups, &options)) {
        match r {
            Ok(r) => reports.push(r),
            Err(err) => {
                errors.push((g.name().to_string(), err.to_string()));
                status = status.max(code::INTERNAL);
            }
        }
    }
    Ok((reports, errors, status))
}

fn run_audit(inputs: &Inputs, common: &Common) -> u8 {
    let (reports, errors, status) = match analyze_inputs(inputs, common) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let summary = audit(&reports, errors);
    if common.json {
        print!("{}", summary.to_json_lines());
    } else {
        print!("{summary}");
    }
    if !summary.violations.is_empty() {
        code::VIOLATION
    } else {
        status
    }
}

fn run_verify(inputs: &Inputs, common: &Common) -> u8 {
    let (reports, errors, status) = match analyze_inputs(inputs, common) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let summary = verify(&reports);
    if common.json {
        print!("{}", summary.to_json_lines());
    } else {
        print!("{summary}");
    }
    for (name, reason) in &errors {
        eprintln!("error: {name}: {reason}");
    }
    if summary.mismatches() > 0 {
        code::MISMATCH
    } else {
        status
    }
}

fn run_consistency(targets: &[String], samples: usize, common: &Common) -> u8 {
    let mut status = 0;
    for target in targets {
        let entries = match resolve(target) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("error: {e}");
                status = status.max(error_code(&e));
                continue;
            }
        };
        for entry in entries {
            let report = check_consistency_with(&entry.presentation, samples, common.exec());
            if common.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!(
                    "{}: {} (order {}, closure {}, {} triples, {} associativity failures, {} relation failures)",
                    report.name,
                    if report.passed() { "pass" } else { "FAIL" },
                    report.order,
                    report.closure_size.map_or("-".to_string(), |c| c.to_string()),
                    report.triples_checked,
                    report.associativity_failures,
                    report.relation_failures
                );
            }
            if !report.passed() {
                status = status.max(code::CONSISTENCY);
            }
        }
    }
    status
}

fn run_list() -> u8 {
    for e in Corpus::builtin().entries() {
        let p = &e.presentation;
        let note = e.provenance.lines().next().unwrap_or("");
        println!(
            "{:<26} {:>3}^{:<2} {}",
            e.name(),
            p.prime(),
            p.ngens(),
            note
        );
    }
    0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match &cli.command {
        Command::Analyze {
            targets,
            oracle,
            common,
        } => run_analyze(targets, *oracle, common),
        Command::Audit { inputs, common } => run_audit(inputs, common),
        Command::Verify { inputs, common } => run_verify(inputs, common),
        Command::Consistency {
            targets,
            samples,
            common,
        } => run_consistency(targets, *samples, common),
        Command::List => run_list(),
    };
    ExitCode::from(status)
}
