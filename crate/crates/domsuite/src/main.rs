//! Command-line front end: exact invariants for one graph, product
//! construction, structural recognizers, corpus-wide check suites, and the
//! counterexample hunt.
//!
//! Exit codes: 0 success / all checks pass, 1 check failure or a failed
//! `--assert`, 2 usage or format error, 3 instance too large for exact search.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use domsuite::engine::{EngineError, ExactEngine, DEFAULT_EXACT_CAP};
use domsuite::graph::{Graph, GraphError};
use domsuite::harness::{run_suites, HarnessConfig, HarnessError, SuiteReport};
use domsuite::io::{
    emit_graph6, load_shipped_corpus, parse_edge_list, parse_graph6, write_json_lines, Corpus,
    IoError, SHIPPED_MAX_ORDER,
};
use domsuite::products::{product, ProductError, ProductKind};
use domsuite::recognize::{
    cartesian_with_complete_well_dominated, classify_structure, direct_product_well_dominated,
    recognize_corona, strong_with_complete_well_dominated, RecognitionVerdict, RecognizeError,
    Verdict,
};

#[derive(Debug, Error)]
enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    File(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Recognize(#[from] RecognizeError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn exit_code_for(e: &AppError) -> u8 {
    match e {
        AppError::Engine(EngineError::TooLarge { .. })
        | AppError::Product(ProductError::TooLarge { .. })
        | AppError::Graph(GraphError::IsomorphismCap { .. })
        | AppError::Recognize(RecognizeError::Engine(EngineError::TooLarge { .. }))
        | AppError::Harness(HarnessError::Engine(EngineError::TooLarge { .. }))
        | AppError::Harness(HarnessError::Product(ProductError::TooLarge { .. }))
        | AppError::Harness(HarnessError::Recognize(RecognizeError::Engine(
            EngineError::TooLarge { .. },
        ))) => 3,
        _ => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One graph6 line.
    Graph6,
    /// One line: order then space-separated endpoint pairs.
    Edges,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Cartesian,
    Direct,
    Strong,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> ProductKind {
        match k {
            Kind::Cartesian => ProductKind::Cartesian,
            Kind::Direct => ProductKind::Direct,
            Kind::Strong => ProductKind::Strong,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// G × H for connected nontrivial factors.
    Direct,
    /// K_m □ H (pass --m).
    CartesianComplete,
    /// K_n ⊠ H (pass --n).
    StrongComplete,
    /// Is the graph F ⊙ K1 for some connected F?
    Corona,
    /// Name the shape: complete, cycle, path, star, or other.
    Classify,
}

#[derive(Parser)]
#[command(
    name = "domsuite",
    version,
    about = "Exact domination invariants, graph products, recognizers, and check suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination chain of one graph with witnesses.
    Invariants {
        /// Graph: a file path or an inline graph6 string.
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Exact-search order cap (overrides DOMSUITE_MAX_N).
        #[arg(long)]
        max_n: Option<usize>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build the Cartesian, direct, or strong product of two graphs.
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Left factor: a file path or an inline graph6 string.
        #[arg(long)]
        left: String,
        /// Right factor: a file path or an inline graph6 string.
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Print the product as a graph6 line (default prints a summary).
        #[arg(long)]
        emit: bool,
    },
    /// Decide well-domination structurally, or classify a shape.
    Recognize {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Graph for corona/classify: a file path or an inline graph6 string.
        #[arg(long = "in")]
        input: Option<String>,
        /// Left factor for the direct family.
        #[arg(long)]
        left: Option<String>,
        /// Right factor (the H of K_m □ H / K_n ⊠ H, or of the direct family).
        #[arg(long)]
        right: Option<String>,
        /// Complete-factor order for cartesian-complete.
        #[arg(long)]
        m: Option<usize>,
        /// Complete-factor order for strong-complete.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Exit 1 unless the verdict is well-dominated (or the corona is
        /// recognized).
        #[arg(long)]
        assert: bool,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Run check suites over a corpus and report pass/fail per record.
    Verify {
        /// Comma-separated suite ids, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Corpus file or directory (default: the bundled corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Max order taken from the bundled corpus.
        #[arg(long, default_value_t = 7)]
        order: usize,
        /// Write the JSON-lines report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = automatic, 1 = sequential).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Sweep factor pairs for well-dominated Cartesian products.
    Hunt {
        /// Corpus file or directory (default: the bundled corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Largest factor order to include.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Write the JSON-lines report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append-only log of finished pairs; listed pairs are skipped.
        #[arg(long)]
        resume_log: Option<PathBuf>,
        /// Worker threads (0 = automatic, 1 = sequential).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// `--max-n` flag, else the DOMSUITE_MAX_N environment variable, else the
/// built-in default.
fn effective_cap(flag: Option<usize>) -> Result<usize, AppError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("DOMSUITE_MAX_N") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| AppError::Usage(format!("DOMSUITE_MAX_N is not a number: {raw:?}"))),
        Err(_) => Ok(DEFAULT_EXACT_CAP),
    }
}

/// A graph argument is a file path when it contains a path separator or names
/// an existing file; otherwise it is parsed inline.
fn load_graph(spec: &str, format: Format) -> Result<Graph, AppError> {
    let looks_like_path =
        spec.contains(std::path::MAIN_SEPARATOR) || Path::new(spec).exists();
    let text = if looks_like_path {
        std::fs::read_to_string(spec)?
    } else {
        spec.to_string()
    };
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| AppError::Usage(format!("no graph found in {spec}")))?;
    Ok(match format {
        Format::Graph6 => parse_graph6(line)?,
        Format::Edges => parse_edge_list(line)?,
    })
}

fn require(spec: &Option<String>, what: &str) -> Result<String, AppError> {
    spec.clone()
        .ok_or_else(|| AppError::Usage(format!("{what} is required for this family")))
}

fn print_verdict(v: &RecognitionVerdict) {
    let word = match v.verdict {
        Verdict::WellDominated => "well-dominated",
        Verdict::NotWellDominated => "not-well-dominated",
        Verdict::OutOfTheoremScope => "out-of-theorem-scope",
    };
    if v.rule.is_empty() {
        println!("verdict: {word}");
    } else {
        println!("verdict: {word} (rule: {})", v.rule);
    }
    if let Some(note) = &v.witness {
        println!("note: {note}");
    }
}

fn assert_exit(v: Verdict, assert: bool) -> u8 {
    if assert && v != Verdict::WellDominated {
        1
    } else {
        0
    }
}

fn load_corpus(
    corpus: &Option<PathBuf>,
    shipped_order: usize,
) -> Result<(Corpus, String), AppError> {
    match corpus {
        Some(path) => Ok((Corpus::load(path)?, path.display().to_string())),
        None => {
            if !(1..=SHIPPED_MAX_ORDER).contains(&shipped_order) {
                return Err(AppError::Usage(format!(
                    "the bundled corpus covers orders 1..={SHIPPED_MAX_ORDER}"
                )));
            }
            Ok((
                load_shipped_corpus(shipped_order)?,
                format!("shipped<={shipped_order}"),
            ))
        }
    }
}

fn emit_report(report: &SuiteReport, out: &Option<PathBuf>) -> Result<u8, AppError> {
    if let Some(path) = out {
        let mut w = BufWriter::new(File::create(path)?);
        write_json_lines(&mut w, &report.header, &report.records)?;
    }
    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in &report.records {
        let slot = tally.entry(r.check.as_str()).or_insert((0, 0));
        if r.pass {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    }
    for (check, (pass, fail)) in &tally {
        println!("{check}: {pass} pass, {fail} fail");
    }
    let failing = report.failing();
    if failing == 0 {
        println!("overall: PASS ({} records)", report.records.len());
        Ok(0)
    } else {
        for r in report.records.iter().filter(|r| !r.pass).take(20) {
            println!(
                "FAIL {} {} — {}",
                r.check,
                r.instance,
                r.witness.as_deref().unwrap_or("")
            );
        }
        println!(
            "overall: FAIL ({failing} of {} records)",
            report.records.len()
        );
        Ok(1)
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn run(cli: Cli) -> Result<u8, AppError> {
    match cli.command {
        Command::Invariants {
            input,
            format,
            max_n,
            json,
        } => {
            let g = load_graph(&input, format)?;
            let engine = ExactEngine::with_cap(effective_cap(max_n)?);
            let r = engine.domination_chain(&g)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("graph: {} (order {}, size {})", emit_graph6(&g), g.order(), g.size());
                println!(
                    "chain: ({}, {}, {}, {})",
                    r.gamma, r.independent_domination, r.independence, r.upper_domination
                );
                println!("gamma: {}  witness {}", r.gamma, r.gamma_witness);
                println!(
                    "independent domination: {}  witness {}",
                    r.independent_domination, r.independent_domination_witness
                );
                println!(
                    "independence: {}  witness {}",
                    r.independence, r.independence_witness
                );
                println!(
                    "upper domination: {}  witness {}",
                    r.upper_domination, r.upper_domination_witness
                );
                println!(
                    "well-dominated: {}",
                    if r.well_dominated { "yes" } else { "no" }
                );
                println!(
                    "well-covered: {}",
                    if r.well_covered { "yes" } else { "no" }
                );
            }
            Ok(0)
        }
        Command::Product {
            kind,
            left,
            right,
            format,
            emit,
        } => {
            let g = load_graph(&left, format)?;
            let h = load_graph(&right, format)?;
            let p = product(kind.into(), &g, &h)?;
            if emit {
                println!("{}", emit_graph6(&p));
            } else {
                match p.name() {
                    Some(name) => println!("{name}: order {}, size {}", p.order(), p.size()),
                    None => println!("order {}, size {}", p.order(), p.size()),
                }
            }
            Ok(0)
        }
        Command::Recognize {
            family,
            input,
            left,
            right,
            m,
            n,
            max_n,
            assert,
            format,
        } => {
            let cap = effective_cap(max_n)?;
            match family {
                FamilyArg::Direct => {
                    let g = load_graph(&require(&left, "--left")?, format)?;
                    let h = load_graph(&require(&right, "--right")?, format)?;
                    let v = direct_product_well_dominated(&g, &h);
                    print_verdict(&v);
                    Ok(assert_exit(v.verdict, assert))
                }
                FamilyArg::CartesianComplete => {
                    let m =
                        m.ok_or_else(|| AppError::Usage("--m is required".to_string()))?;
                    let h = load_graph(&require(&right, "--right")?, format)?;
                    let v = cartesian_with_complete_well_dominated(m, &h)?;
                    print_verdict(&v);
                    Ok(assert_exit(v.verdict, assert))
                }
                FamilyArg::StrongComplete => {
                    let n =
                        n.ok_or_else(|| AppError::Usage("--n is required".to_string()))?;
                    let h = load_graph(&require(&right, "--right")?, format)?;
                    let engine = ExactEngine::with_cap(cap);
                    let v = strong_with_complete_well_dominated(n, &h, &engine)?;
                    print_verdict(&v);
                    Ok(assert_exit(v.verdict, assert))
                }
                FamilyArg::Corona => {
                    let g = load_graph(&require(&input, "--in")?, format)?;
                    match recognize_corona(&g) {
                        Some(f) => {
                            println!(
                                "corona: yes, base {} on original vertices {:?}",
                                emit_graph6(&f.graph),
                                f.original
                            );
                            Ok(0)
                        }
                        None => {
                            println!("corona: no");
                            Ok(u8::from(assert))
                        }
                    }
                }
                FamilyArg::Classify => {
                    let g = load_graph(&require(&input, "--in")?, format)?;
                    println!("{}", classify_structure(&g).as_str());
                    Ok(0)
                }
            }
        }
        Command::Verify {
            suite,
            corpus,
            order,
            out,
            jobs,
            max_n,
        } => {
            let config = HarnessConfig {
                exact_cap: effective_cap(max_n)?,
                jobs: jobs.unwrap_or(0),
                ..HarnessConfig::default()
            };
            let (corpus, label) = load_corpus(&corpus, order)?;
            let report = run_suites(&suite, &corpus, &label, &config, now(), None)?;
            emit_report(&report, &out)
        }
        Command::Hunt {
            corpus,
            max_order,
            out,
            resume_log,
            jobs,
            max_n,
        } => {
            let config = HarnessConfig {
                exact_cap: effective_cap(max_n)?,
                jobs: jobs.unwrap_or(0),
                ..HarnessConfig::default()
            };
            let shipped_order = max_order.min(SHIPPED_MAX_ORDER);
            let (corpus, label) = load_corpus(&corpus, shipped_order)?;
            let filtered = Corpus {
                entries: corpus
                    .entries
                    .into_iter()
                    .filter(|e| e.graph.order() <= max_order)
                    .collect(),
            };
            let report = run_suites(
                "hunt",
                &filtered,
                &label,
                &config,
                now(),
                resume_log.as_deref(),
            )?;
            emit_report(&report, &out)
        }
    }
}
