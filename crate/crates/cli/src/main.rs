use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypercode::hypergraph::Hypergraph;
use hypercode::kl::{distance_with_witness, symmetric_code_distance};
use hypercode::protected::ProtectedCodeSpec;
use hypercode::search::{search_records, CodeTuple, SearchRecord};
use hypercode::{Error, DENSE_CAP};

mod output;
mod reproduce;

#[derive(Parser)]
#[command(
    name = "hypercode",
    version,
    about = "Exact search and verification for symmetric hypergraph codes"
)]
struct Cli {
    /// Worker threads (overrides HYPERCODE_WORKERS; default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all distance-2 codes per qubit count.
    Search(SearchArgs),
    /// Compute the distance of a code, with a witness on failure.
    Verify {
        #[command(subcommand)]
        input: VerifyInput,
    },
    /// Classify a single tuple without searching.
    TupleInfo(TupleArgs),
    /// Build, list and check a protected-qubit code from a spec file.
    Protected {
        file: PathBuf,
        /// Also print one descriptor line per codeword.
        #[arg(long)]
        codewords: bool,
    },
    /// Re-run the headline results and print one line per claim.
    Reproduce(reproduce::ReproduceArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// Largest code qubit count to search (at most 30).
    #[arg(long)]
    n_max: usize,
    /// Smallest code qubit count to search.
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    /// Drop codes whose hypergraph is an ordinary graph.
    #[arg(long)]
    exclude_graph_codes: bool,
    /// Annotate (and settle) candidates for distance 3.
    #[arg(long)]
    dist3_filter: bool,
    /// Re-check every emitted code against the dense Knill-Laflamme
    /// oracle (capped at 24 qubits).
    #[arg(long)]
    dense_oracle_crosscheck: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to a file (atomically) instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyInput {
    /// A symmetric code named by its tuple.
    Tuple(VerifyTupleArgs),
    /// An arbitrary code: hypergraph file plus a Z-gate vertex set.
    Hypergraph {
        file: PathBuf,
        /// Z-gate vertices of the second codeword, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        z_set: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
    },
    /// A protected-qubit code spec file.
    Protected { file: PathBuf },
}

#[derive(Args)]
struct TupleArgs {
    /// Code qubit count.
    #[arg(long)]
    n: usize,
    /// Negative weights of the difference state, e.g. `1,2,4`.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    m: Vec<usize>,
    /// Number of Z gates on the second codeword.
    #[arg(long)]
    l: usize,
    /// Also compute the dense distance (up to 24 qubits).
    #[arg(long)]
    dense: bool,
}

#[derive(Args)]
struct VerifyTupleArgs {
    #[command(flatten)]
    tuple: TupleArgs,
    #[arg(long, default_value_t = 3)]
    d_max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .or_else(|| std::env::var("HYPERCODE_WORKERS").ok()?.parse().ok());
    let run = || match cli.command {
        Command::Search(args) => cmd_search(args),
        Command::Verify { input } => cmd_verify(input),
        Command::TupleInfo(args) => cmd_tuple_info(args),
        Command::Protected { file, codewords } => cmd_protected(&file, codewords),
        Command::Reproduce(args) => reproduce::run(args),
    };
    let outcome = match workers {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            pool.install(run)
        }
        None => run(),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit)
        }
    }
}

pub struct Failure {
    pub exit: u8,
    pub message: String,
}

impl Failure {
    pub fn new(message: impl Into<String>) -> Self {
        Failure {
            exit: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let exit = if error.is_capacity() { 3 } else { 1 };
        Failure {
            exit,
            message: error.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        Failure::new(error.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn cmd_search(args: SearchArgs) -> CmdResult {
    if args.n_min < 3 || args.n_min > args.n_max {
        return Err(Failure::new(format!(
            "search range {}..={} is empty or starts below 3",
            args.n_min, args.n_max
        )));
    }
    if args.n_max > 30 {
        return Err(Error::TooManyVertices {
            requested: args.n_max,
        }
        .into());
    }
    if args.dense_oracle_crosscheck && args.n_max > DENSE_CAP {
        return Err(Error::DenseCapExceeded {
            requested: args.n_max,
        }
        .into());
    }
    let mut records: Vec<SearchRecord> = Vec::new();
    for n_code in args.n_min..=args.n_max {
        records.extend(search_records(
            n_code,
            args.exclude_graph_codes,
            args.dist3_filter,
        )?);
    }
    if args.dense_oracle_crosscheck {
        for n_code in args.n_min..=args.n_max {
            if let Some(bad) = hypercode::search::crosscheck::enumeration_is_sound(n_code)? {
                return Err(Failure::new(format!(
                    "dense oracle refutes emitted code {} (distance {})",
                    bad.tuple, bad.dense_distance
                )));
            }
        }
    }
    let report = output::SearchReport {
        command: "search",
        n_min: args.n_min,
        n_max: args.n_max,
        exclude_graph_codes: args.exclude_graph_codes,
        dist3_filter: args.dist3_filter,
        records,
    };
    let rendered = match args.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Table => report.to_table(),
    };
    match args.output {
        Some(path) => output::write_atomically(&path, &rendered)?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_tuple(args: &TupleArgs) -> Result<CodeTuple, Failure> {
    let weights: BTreeSet<usize> = args.m.iter().copied().collect();
    Ok(CodeTuple::new(args.n, weights, args.l)?)
}

fn cmd_verify(input: VerifyInput) -> CmdResult {
    match input {
        VerifyInput::Tuple(args) => {
            let tuple = parse_tuple(&args.tuple)?;
            let (found, witness) = if args.tuple.dense {
                distance_with_witness(&tuple.dense_code()?, args.d_max)?
            } else {
                symmetric_code_distance(
                    tuple.n_code_qubits(),
                    &tuple.code_weight_signs(),
                    tuple.z_count(),
                    args.d_max,
                )?
            };
            println!("code: {tuple}");
            println!(
                "method: {}",
                if args.tuple.dense {
                    "dense"
                } else {
                    "symmetric counting"
                }
            );
            println!("distance: {found} (bound {})", args.d_max);
            if let Some(witness) = witness {
                println!("witness: {witness}");
            }
            Ok(ExitCode::SUCCESS)
        }
        VerifyInput::Hypergraph { file, z_set, d_max } => {
            let text = std::fs::read_to_string(&file)?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Failure::new("empty hypergraph file"))?;
            let graph = Hypergraph::parse(line)?;
            if z_set.is_empty() {
                return Err(Failure::new(
                    "--z-set is required: a code needs a second codeword",
                ));
            }
            let base = graph.state()?;
            let mut second = base.clone();
            for &vertex in &z_set {
                second.apply_pauli_z(vertex)?;
            }
            let code = hypercode::kl::CodeBasis::new(vec![base, second])?;
            let (found, witness) = distance_with_witness(&code, d_max)?;
            println!("code: {graph} with Z on {z_set:?}");
            println!("distance: {found} (bound {d_max})");
            if let Some(witness) = witness {
                println!("witness: {witness}");
            }
            Ok(ExitCode::SUCCESS)
        }
        VerifyInput::Protected { file } => {
            let text = std::fs::read_to_string(&file)?;
            let spec = ProtectedCodeSpec::parse(&text)?;
            print_protected_report(&spec)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_protected_report(spec: &ProtectedCodeSpec) -> Result<(), Failure> {
    let report = spec.verify()?;
    println!(
        "guaranteed error set (outer pairs, product weight < {}): {}",
        spec.n_outer(),
        match report.guaranteed.witness() {
            None => "PASS".to_string(),
            Some(witness) => format!("FAIL at {witness}"),
        }
    );
    match report.full_outer {
        None => println!("all outer-qubit errors correctable: n.a. (primed codewords in use)"),
        Some(verdict) => match verdict.witness() {
            None => println!("all outer-qubit errors correctable: yes"),
            Some(witness) => {
                println!("all outer-qubit errors correctable: no ({witness})")
            }
        },
    }
    Ok(())
}

fn cmd_tuple_info(args: TupleArgs) -> CmdResult {
    let tuple = parse_tuple(&args)?;
    let n = tuple.difference_qubits();
    println!("tuple: {tuple}");
    let classes: Vec<usize> = tuple
        .code_hypergraph()
        .cardinalities()
        .iter()
        .copied()
        .collect();
    println!("code hypergraph: all edges of cardinality {classes:?}");
    println!("graph code: {}", yes_no(tuple.is_graph_code()));
    let half: u128 = 1 << (n - 1);
    let total: u128 = tuple
        .weights()
        .iter()
        .map(|&m| hypercode::binom::binomial(n, m))
        .sum();
    println!("negative coefficients: {total} (balanced needs {half})");
    println!(
        "distance 2 (binomial route): {}",
        yes_no(tuple.distance2_binomial())
    );
    if tuple.n_code_qubits() <= DENSE_CAP {
        println!(
            "distance 2 (balanced route): {}",
            yes_no(tuple.distance2_balanced()?)
        );
    }
    if tuple.z_count() > 1 && tuple.z_count() < tuple.n_code_qubits() {
        println!(
            "necessary condition for distance 3: {}",
            yes_no(tuple.distance3_necessary()?)
        );
    }
    if args.dense {
        let (found, witness) = distance_with_witness(&tuple.dense_code()?, 3)?;
        println!("dense distance: {found} (bound 3)");
        if let Some(witness) = witness {
            println!("witness: {witness}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_protected(file: &PathBuf, codewords: bool) -> CmdResult {
    let text = std::fs::read_to_string(file)?;
    let spec = ProtectedCodeSpec::parse(&text)?;
    println!(
        "protected vertices: {}, outer vertices: {:?}",
        spec.n_protected(),
        spec.outer_qubits()
    );
    println!("code hypergraph: {}", spec.build()?);
    let words = spec.codewords()?;
    println!("codewords: {}", words.dimension());
    if codewords {
        for line in spec.codeword_descriptors()? {
            println!("  {line}");
        }
    }
    print_protected_report(&spec)?;
    Ok(ExitCode::SUCCESS)
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}
