//! Command-line interface: condition, check, oracle comparison, demos, and
//! document conversion, over the JSON document format.

mod demos;
mod expr;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use beliefkit::belief::{check_belief_axioms, BeliefFunction, CheckMode, MAX_DIRECT_CHECK};
use beliefkit::conditioning::{condition, fh_condition, ConditioningRule};
use beliefkit::credal::{conditional_envelope, extreme_points, CredalError};
use beliefkit::doc::{Body, DocError, Document};
use beliefkit::frame::{FrameExt, Subset};
use beliefkit::rational::{format_rat, Rat};

const EXIT_HELP: &str = "Exit codes:
  0  success
  1  a check failed, an oracle row mismatched, or a demo claim failed
  2  unusable input (file, JSON document, or event expression)
  3  conditioning undefined for the requested event
  4  frame exceeds an enumeration cap";

#[derive(Parser)]
#[command(
    name = "beliefkit",
    version,
    about = "Exact-arithmetic belief functions: two conditioning rules, a brute-force credal oracle, scripted demos",
    after_help = EXIT_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    /// Envelope rule: infimum of Bayes updates over consistent probabilities.
    Fh,
    /// Dempster's rule.
    Ds,
}

impl From<RuleArg> for ConditioningRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Fh => ConditioningRule::Fh,
            RuleArg::Ds => ConditioningRule::Ds,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Mass,
    Belief,
}

#[derive(Subcommand)]
enum Command {
    /// Condition the document's belief function on an event; prints a
    /// report document
    Condition {
        /// Conditioning rule
        #[arg(long, value_enum)]
        rule: RuleArg,
        /// Event expression over element labels, e.g. "ab,cb" or "~x & y"
        #[arg(long)]
        event: String,
        /// Input document (JSON); use - for stdin
        file: String,
    },
    /// Check the belief axioms and print the mass table
    Check {
        /// Input document (JSON); use - for stdin
        file: String,
    },
    /// Compare closed-form conditionals against vertex enumeration,
    /// row by row
    Oracle {
        /// Conditioning event expression
        #[arg(long)]
        event: String,
        /// Restrict the comparison to a single subset
        #[arg(long)]
        set: Option<String>,
        /// Additionally check this many random mixtures of the vertices
        #[arg(long, default_value_t = 0)]
        samples: u32,
        /// Seed for mixture sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Input document (JSON); use - for stdin
        file: String,
    },
    /// Run a scripted walkthrough and verify its claims
    Demo {
        #[arg(value_enum)]
        name: demos::DemoName,
    },
    /// Convert a document to a mass or belief document
    Convert {
        #[arg(value_enum)]
        target: ConvertTarget,
        /// Input document (JSON); use - for stdin
        file: String,
    },
}

enum Failure {
    Failed(String),
    Parse(String),
    Undefined(String),
    TooLarge(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Failed(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Undefined(_) => 3,
            Failure::TooLarge(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Failed(m)
            | Failure::Parse(m)
            | Failure::Undefined(m)
            | Failure::TooLarge(m) => m,
        }
    }
}

fn map_doc_err(e: DocError) -> Failure {
    match &e {
        DocError::Credal(CredalError::FrameTooLarge { .. }) => Failure::TooLarge(e.to_string()),
        _ => Failure::Parse(e.to_string()),
    }
}

fn read_input(file: &str) -> Result<String, Failure> {
    if file == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Parse(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(file).map_err(|e| Failure::Parse(format!("cannot read {file}: {e}")))
    }
}

fn load_document(file: &str) -> Result<Document, Failure> {
    Document::from_json(&read_input(file)?).map_err(map_doc_err)
}

fn load_belief(file: &str) -> Result<BeliefFunction, Failure> {
    load_document(file)?.to_belief().map_err(map_doc_err)
}

fn parse_event(bel: &BeliefFunction, text: &str) -> Result<Subset, Failure> {
    expr::parse_event(bel.frame(), text).map_err(|e| Failure::Parse(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Condition { rule, event, file } => {
            let bel = load_belief(&file)?;
            let b = parse_event(&bel, &event)?;
            let report = condition(&bel, &b, rule.into())
                .map_err(|e| Failure::Undefined(e.to_string()))?;
            print!("{}", Document::from_conditional(&report).to_json());
            Ok(())
        }
        Command::Check { file } => check_command(&file),
        Command::Oracle {
            event,
            set,
            samples,
            seed,
            file,
        } => oracle_command(&event, set.as_deref(), samples, seed, &file),
        Command::Demo { name } => {
            let report = demos::run(name);
            print!("{}", report.text);
            if report.ok {
                Ok(())
            } else {
                Err(Failure::Failed("demo reported mismatches".into()))
            }
        }
        Command::Convert { target, file } => {
            let bel = load_belief(&file)?;
            let doc = match target {
                ConvertTarget::Mass => Document::from_mass(bel.mass()),
                ConvertTarget::Belief => Document::from_belief(&bel),
            };
            print!("{}", doc.to_json());
            Ok(())
        }
    }
}

fn verdict_text(v: Option<&beliefkit::belief::AxiomViolation>) -> String {
    match v {
        None => "ok".to_owned(),
        Some(violation) => format!("FAIL - {violation}"),
    }
}

fn check_command(file: &str) -> Result<(), Failure> {
    let doc = load_document(file)?;
    // A belief document is checked as a raw table; everything else must
    // already lower to a valid belief function.
    let (frame, table) = match &doc.body {
        Body::Belief { .. } => {
            let f = doc.to_set_function().map_err(map_doc_err)?;
            (f.frame().clone(), f)
        }
        Body::Mass { .. } => {
            let mass = match doc.to_mass() {
                Ok(m) => m,
                Err(DocError::Axiom(v)) => {
                    println!("mass axioms: FAIL - {v}");
                    println!("verdict: not a mass function");
                    return Err(Failure::Failed(v.to_string()));
                }
                Err(other) => return Err(map_doc_err(other)),
            };
            println!("mass axioms: ok");
            let bel = mass.belief();
            (bel.frame().clone(), bel.set_function().clone())
        }
        _ => {
            let bel = match doc.to_belief() {
                Ok(b) => b,
                Err(DocError::NotBelief(v)) => {
                    println!("lower envelope check: FAIL - {v}");
                    println!("verdict: not a belief function");
                    return Err(Failure::Failed(v.to_string()));
                }
                Err(other) => return Err(map_doc_err(other)),
            };
            (bel.frame().clone(), bel.set_function().clone())
        }
    };

    println!(
        "frame: {{{}}} ({} elements)",
        frame.labels().join(", "),
        frame.len()
    );
    let report = check_belief_axioms(&table, CheckMode::Mobius).expect("no cap in this mode");
    println!("axioms (inverse-transform mode):");
    println!("  B0: {}", verdict_text(report.b0.as_ref()));
    println!("  B1: {}", verdict_text(report.b1.as_ref()));
    println!("  B2: {}", verdict_text(report.b2.as_ref()));
    println!("  B3: {}", verdict_text(report.b3.as_ref()));
    if frame.len() <= MAX_DIRECT_CHECK {
        let direct = check_belief_axioms(&table, CheckMode::Direct).expect("small frame");
        println!(
            "axioms (direct collection mode): {}",
            if direct.ok() == report.ok() {
                "agrees"
            } else {
                "DISAGREES"
            }
        );
    }
    println!("mass table (inverse transform):");
    let inverse = table.mobius();
    let mut subsets: Vec<Subset> = frame.subsets().collect();
    subsets.sort();
    for s in subsets {
        let v = inverse.get(&s);
        if !v.is_zero() {
            println!("  m({s}) = {}", format_rat(v));
        }
    }
    if report.ok() {
        println!("verdict: belief function");
        Ok(())
    } else {
        println!("verdict: not a belief function");
        let violation = report.first_violation().expect("some axiom failed");
        Err(Failure::Failed(violation.to_string()))
    }
}

fn oracle_command(
    event: &str,
    set: Option<&str>,
    samples: u32,
    seed: u64,
    file: &str,
) -> Result<(), Failure> {
    let bel = load_belief(file)?;
    let frame = bel.frame().clone();
    let b = parse_event(&bel, event)?;
    let credal = extreme_points(&bel).map_err(|e| match e {
        CredalError::FrameTooLarge { .. } => Failure::TooLarge(e.to_string()),
        other => Failure::Parse(other.to_string()),
    })?;
    let closed = fh_condition(&bel, &b).map_err(|e| Failure::Undefined(e.to_string()))?;

    let rows: Vec<Subset> = match set {
        Some(text) => vec![parse_event(&bel, text)?],
        None => {
            let mut all: Vec<Subset> = frame.subsets().collect();
            all.sort();
            all
        }
    };

    println!(
        "oracle comparison: event {}, {} consistent extreme points",
        b,
        credal.vertex_count()
    );
    println!("set | Bel closed | Bel vertices | Pl closed | Pl vertices | verdict");
    let mut mismatches = 0usize;
    for a in &rows {
        let (lo, hi) =
            conditional_envelope(&credal, a, &b).map_err(|e| Failure::Undefined(e.to_string()))?;
        let bel_closed = closed.belief(a);
        let pl_closed = closed.plausibility(a);
        let exact = bel_closed == &lo && pl_closed == hi;
        if !exact {
            mismatches += 1;
        }
        println!(
            "{} | {} | {} | {} | {} | {}",
            a,
            format_rat(bel_closed),
            format_rat(&lo),
            format_rat(&pl_closed),
            format_rat(&hi),
            if exact { "EXACT-MATCH" } else { "MISMATCH" }
        );
    }

    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut inside = 0u32;
        for _ in 0..samples {
            let weights: Vec<u64> = (0..credal.vertex_count())
                .map(|_| rng.gen_range(0..=100))
                .collect();
            let total: u64 = weights.iter().sum::<u64>().max(1);
            let mut p = vec![Rat::zero(); frame.len()];
            for (v, w) in credal.vertices().iter().zip(&weights) {
                for (i, x) in v.iter().enumerate() {
                    p[i] += x.clone() * Rat::new((*w).into(), total.into());
                }
            }
            let pb: Rat = b.elements().map(|i| p[i].clone()).sum();
            let within = rows.iter().all(|a| {
                let pab: Rat = a.intersection(&b).elements().map(|i| p[i].clone()).sum();
                let ratio = pab / pb.clone();
                let (lo, hi) = conditional_envelope(&credal, a, &b).expect("checked above");
                lo <= ratio && ratio <= hi
            });
            if within {
                inside += 1;
            }
        }
        println!(
            "interior samples: {inside} of {samples} random mixtures within the vertex envelopes"
        );
        if inside != samples {
            mismatches += 1;
        }
    }

    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Failed(format!(
            "{mismatches} row(s) differ between closed form and vertex enumeration"
        )))
    }
}
