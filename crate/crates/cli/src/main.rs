use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tetra_core::calculus::{derive, derive_equation, index_flip_f4, render, Equation, OperatorAssignment};
use tetra_core::combinatorial::{
    parse_state, reflection_chains, render_chains, verify_equation, CandidateSpec, Combinatorial, DomainSpec, Family,
    VerificationReport, DEFAULT_MAX_APPLICATIONS,
};
use tetra_core::coxeter::{rex_graph, RexOptions, DEFAULT_MAX_VERTICES};
use tetra_core::decomposition::{
    load_proof_script, verify_theorem, LabeledFactors, ProofScript, ReflectionLibrary, SemanticCheck,
};
use tetra_core::fixtures::{self, EquationFixture};
use tetra_core::{CoxeterType, Error, Nat, Word};

const MAX_VERTICES_ENV: &str = "TETRA_MAX_VERTICES";

#[derive(Parser)]
#[command(
    name = "tetra",
    version,
    about = "Reduced words, tetrahedron-type equations and their set-level solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the reduced expressions of the longest element.
    Rex(RexArgs),
    /// Derive the equation of a type from its built-in move trace.
    Derive(DeriveArgs),
    /// Check an equation under the set-level maps.
    Verify(VerifyArgs),
    /// Print both chains of a 3D reflection equation on one input.
    Chains(ChainsArgs),
    /// Check the decomposition of the F4 equation.
    Decompose(DecomposeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args)]
struct RexArgs {
    #[arg(value_name = "TYPE")]
    ty: String,
    /// Start from this word instead of the longest word.
    #[arg(long)]
    seed: Option<String>,
    /// Print counts only.
    #[arg(long)]
    count_only: bool,
    /// Write the edge list, one `u<TAB>v<TAB>kind@pos` line per edge.
    #[arg(long, value_name = "PATH")]
    export: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct DeriveArgs {
    #[arg(value_name = "TYPE")]
    ty: String,
    /// F4 only: exchange the two ends of the diagram.
    #[arg(long)]
    flip: bool,
    /// H3 only: emit the form with inversions dropped and subscripts sorted.
    #[arg(long)]
    symmetric: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of tetra, c3, b3, f4, h3, h3-sym.
    target: String,
    /// Every state with entries in 0..=N.
    #[arg(long, value_name = "N", conflicts_with_all = ["samples", "max"])]
    exhaustive: Option<Nat>,
    /// Number of seeded random states.
    #[arg(long, value_name = "N")]
    samples: Option<usize>,
    /// Largest entry of a sampled state.
    #[arg(long, value_name = "M")]
    max: Option<Nat>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Carrier file describing a candidate Y, required for h3 and h3-sym.
    #[arg(long, value_name = "PATH")]
    candidate: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_APPLICATIONS)]
    max_applications: u64,
}

#[derive(Args)]
struct ChainsArgs {
    /// B or C.
    family: String,
    /// Nine entries, e.g. 211202341 or 2,1,1,2,0,2,3,4,1.
    state: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Proof script to check instead of the shipped one.
    #[arg(long, value_name = "PATH")]
    fixture: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    semantic_states: usize,
    #[arg(long, default_value_t = 4)]
    semantic_max: Nat,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) | Error::DomainTooLarge(_) => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn parse_type(s: &str) -> std::result::Result<CoxeterType, Failure> {
    Ok(s.parse::<CoxeterType>()?)
}

fn emit(text: &str) -> Outcome {
    let mut out = io::stdout().lock();
    let written = out.write_all(text.as_bytes()).and_then(|()| {
        if text.ends_with('\n') {
            Ok(())
        } else {
            out.write_all(b"\n")
        }
    });
    match written {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn max_vertices() -> std::result::Result<usize, Failure> {
    match std::env::var(MAX_VERTICES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_VERTICES_ENV}={v} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

fn cmd_rex(args: RexArgs) -> Outcome {
    let ty = parse_type(&args.ty)?;
    let seed = match &args.seed {
        Some(s) => s.parse::<Word>()?,
        None => ty.longest_word(),
    };
    let graph = rex_graph(
        ty,
        &seed,
        RexOptions {
            max_vertices: max_vertices()?,
        },
    )?;
    if let Some(path) = &args.export {
        let mut w = BufWriter::new(File::create(path)?);
        graph.export_edges(&mut w)?;
        w.flush()?;
    }
    let summary = graph.summary();
    match args.format {
        Format::Json if args.count_only => emit(&serde_json::to_string_pretty(&summary)?),
        Format::Json => {
            let mut value = serde_json::to_value(&summary)?;
            let words: Vec<String> = graph.vertices().map(|w| w.to_string()).collect();
            value["vertices"] = words.into();
            emit(&serde_json::to_string_pretty(&value)?)
        }
        _ => {
            let mut text = format!(
                "type={} seed={} vertices={} edges={}\n",
                ty, seed, summary.vertex_count, summary.edge_count
            );
            if !args.count_only {
                for w in graph.vertices() {
                    text.push_str(&format!("{w}\n"));
                }
            }
            emit(&text)
        }
    }
}

fn render_equation(eq: &Equation, format: Format) -> std::result::Result<String, Failure> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(eq)?,
        Format::Latex => render::latex_equation(eq),
        Format::Text => render::text_equation(eq),
    })
}

fn mismatch(derived: &Equation, expected: &Equation, what: &str) -> Failure {
    Failure::Check(format!(
        "derived equation does not match {what}\nderived:\n{}\nexpected:\n{}",
        render::text_equation(derived),
        render::text_equation(expected)
    ))
}

fn cmd_derive(args: DeriveArgs) -> Outcome {
    let ty = parse_type(&args.ty)?;
    if args.flip && ty != CoxeterType::F4 {
        return Err(Failure::Usage("--flip applies to F4 only".into()));
    }
    if args.symmetric && ty != CoxeterType::H3 {
        return Err(Failure::Usage("--symmetric applies to H3 only".into()));
    }
    let trace = fixtures::builtin_trace(ty)?;
    let derivation = derive(&trace)?;
    let mut eq = derivation.equation.simplified();
    if let Some(fixture) = EquationFixture::for_type(ty) {
        let expected = fixture.load()?;
        if !eq.equivalent(&expected)? {
            return Err(mismatch(&eq, &expected, fixture.id()));
        }
        eprintln!("matches fixture {} up to commutation", fixture.id());
    }
    if args.symmetric {
        eq = eq.symmetric();
        let expected = EquationFixture::H3Symmetric.load()?;
        if !eq.equivalent(&expected)? {
            return Err(mismatch(&eq, &expected, "h3-sym"));
        }
        eprintln!("matches fixture h3-sym up to commutation");
    }
    if args.flip {
        eq = index_flip_f4(&eq)?.simplified();
        let flipped_trace = trace.relabel(CoxeterType::F4, |l| 5 - l)?;
        let direct = derive_equation(&OperatorAssignment::f4_flipped(), &flipped_trace)?
            .equation
            .simplified();
        if !eq.equivalent(&direct)? {
            return Err(mismatch(&eq, &direct, "the flipped trace"));
        }
        eprintln!("matches the derivation from the flipped trace");
    }
    emit(&render_equation(&eq, args.format)?)
}

fn report_outcome(report: &VerificationReport) -> Outcome {
    emit(&serde_json::to_string_pretty(report)?)?;
    eprintln!(
        "{}: {} states, {} failures, {:.2?}",
        report.equation,
        report.states_tested,
        report.failures.len(),
        report.elapsed
    );
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} fails on {} states",
            report.equation,
            report.failures.len()
        )))
    }
}

fn cmd_verify(args: VerifyArgs) -> Outcome {
    let fixture = EquationFixture::from_id(&args.target)
        .ok_or_else(|| Failure::Usage(format!("unknown target {:?}", args.target)))?;
    let domain = match args.exhaustive {
        Some(bound) => DomainSpec::Exhaustive { bound },
        None => DomainSpec::Sampled {
            count: args.samples.unwrap_or(1000),
            max: args.max.unwrap_or(4),
            seed: args.seed,
        },
    };
    let eq = fixture.load()?;
    let report = match fixture {
        EquationFixture::H3 | EquationFixture::H3Symmetric => {
            let path = args
                .candidate
                .as_ref()
                .ok_or_else(|| Failure::Usage(format!("{} needs --candidate", fixture.id())))?;
            let spec: CandidateSpec = serde_json::from_str(&fs::read_to_string(path)?)?;
            let sem = spec.register()?;
            verify_equation(fixture.id(), &eq, &domain, &sem, args.max_applications)?
        }
        _ => verify_equation(fixture.id(), &eq, &domain, &Combinatorial, args.max_applications)?,
    };
    report_outcome(&report)
}

fn cmd_chains(args: ChainsArgs) -> Outcome {
    let family: Family = args.family.parse()?;
    let input = parse_state(&args.state)?;
    let (left, right) = reflection_chains(family, &input)?;
    match args.format {
        Format::Json => {
            let value = serde_json::json!({ "family": family.to_string(), "left": left, "right": right });
            emit(&serde_json::to_string_pretty(&value)?)
        }
        _ => emit(&render_chains(family, &left, &right)),
    }
}

fn cmd_decompose(args: DecomposeArgs) -> Outcome {
    let script = match &args.fixture {
        Some(path) => ProofScript::from_json(&fs::read_to_string(path)?)?,
        None => load_proof_script()?,
    };
    let factors = LabeledFactors::f4()?;
    let library = ReflectionLibrary::build()?;
    let semantic = SemanticCheck {
        states: args.semantic_states,
        max_entry: args.semantic_max,
        seed: args.seed,
    };
    let report = verify_theorem(&script, &factors, &library, &semantic)?;
    emit(&serde_json::to_string_pretty(&report)?)?;
    for alt in &report.alternative_windows {
        eprintln!("stage {}: other matching windows at {:?}", alt.stage, alt.starts);
    }
    match &report.failure {
        None if report.c3_count == 12 && report.b3_count == 12 => Ok(()),
        None => Err(Failure::Check(format!(
            "counts {} C3 + {} B3",
            report.c3_count, report.b3_count
        ))),
        Some(f) => Err(Failure::Check(format!("stage {}: {}", f.stage, f.reason))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = match cli.command {
        Command::Rex(a) => cmd_rex(a),
        Command::Derive(a) => cmd_derive(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Chains(a) => cmd_chains(a),
        Command::Decompose(a) => cmd_decompose(a),
    };
    eprintln!("elapsed {:.2?}", started.elapsed());
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(3)
        }
    }
}
