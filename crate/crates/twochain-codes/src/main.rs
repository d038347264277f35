use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twochain_codes::{
    build_defining_set, construct_report, generator_matrix, run_selftest, sweep_rows, write_csv,
    Error, IdealSpec, OptimalityClass, TwoChainPoset, VerifyMode,
};

#[derive(Parser)]
#[command(
    name = "twochain-codes",
    version,
    about = "Binary linear codes from down-sets of a two-chain poset"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one code and report parameters, weight distribution, and
    /// Griesmer classification.
    Construct(ConstructArgs),
    /// Enumerate every legal instance up to --n-max as CSV on stdout.
    Sweep(SweepArgs),
    /// Write the generator matrix as text: one {0,1} line per row.
    Matrix(MatrixArgs),
    /// Run the internal consistency suites.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct IdealArgs {
    /// Ground set size (2..=62).
    #[arg(long)]
    n: u32,
    /// First chain length (1..=n-1).
    #[arg(long)]
    m: u32,
    /// Chain-one prefix size of the ideal (1..=m).
    #[arg(long)]
    i: Option<u32>,
    /// Chain-two end of the ideal (m+1..=n).
    #[arg(long)]
    j: Option<u32>,
}

impl IdealArgs {
    fn spec(&self) -> IdealSpec {
        match (self.i, self.j) {
            (None, None) => IdealSpec::Empty,
            (Some(i), None) => IdealSpec::ChainOne(i),
            (None, Some(j)) => IdealSpec::ChainTwo(j),
            (Some(i), Some(j)) => IdealSpec::Both(i, j),
        }
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Verification level: auto, none, charsum, or direct.
    #[arg(long, default_value = "auto")]
    verify: VerifyMode,
    /// Reserved: compare against an external best-known-codes table.
    /// Currently performs no lookup; classification is bound-based only.
    #[arg(long)]
    lookup_best: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest ground set size to enumerate.
    #[arg(long = "n-max")]
    n_max: u32,
    /// Keep only these classes (comma separated), e.g. griesmer or
    /// distance-optimal.
    #[arg(long, value_delimiter = ',', value_parser = parse_class)]
    classes: Vec<OptimalityClass>,
}

fn parse_class(name: &str) -> Result<OptimalityClass, String> {
    OptimalityClass::parse(name).ok_or_else(|| {
        format!(
            "unknown class '{name}' (expected griesmer, distance-optimal, almost-optimal, \
             or unresolved)"
        )
    })
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// Output file path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SelftestArgs {
    /// Largest ground set size the suites sweep.
    #[arg(long = "n-max", default_value_t = 10)]
    n_max: u32,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// 0: success; 1: verification or runtime failure; 2: usage error.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidChainSplit { .. }
        | Error::GroundSetTooLarge { .. }
        | Error::ElementOutOfRange { .. }
        | Error::InvalidIdeal { .. }
        | Error::LengthMismatch { .. }
        | Error::MaskTooWide { .. }
        | Error::InvalidSign { .. }
        | Error::MatrixEntry { .. }
        | Error::OverCap { .. }
        | Error::GriesmerDomain { .. } => 2,
        Error::ZeroCode
        | Error::GriesmerViolated { .. }
        | Error::VerificationMismatch(_)
        | Error::Io { .. } => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Construct(args) => {
            if args.lookup_best {
                eprintln!(
                    "note: --lookup-best is reserved; no external table was queried"
                );
            }
            let report = construct_report(
                args.ideal.n,
                args.ideal.m,
                args.ideal.spec(),
                args.verify,
            )?;
            match args.emit {
                Emit::Text => print!("{}", report.to_text()),
                Emit::Json => print!("{}", report.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep(args) => {
            let classes = if args.classes.is_empty() {
                None
            } else {
                Some(args.classes.as_slice())
            };
            let rows = sweep_rows(args.n_max, classes)?;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            write_csv(&rows, &mut out).map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?;
            out.flush().map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix(args) => {
            let p = TwoChainPoset::new(args.ideal.m, args.ideal.n)?;
            let d = build_defining_set(&p, args.ideal.spec())?;
            let g = generator_matrix(&d);
            g.write_to_path(&args.out)?;
            eprintln!(
                "wrote {} x {} generator matrix to {}",
                g.num_rows(),
                g.num_cols(),
                args.out.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest(args) => {
            let results = run_selftest(args.n_max)?;
            let mut failed = 0;
            for r in &results {
                match &r.failure {
                    None => println!("ok   {} ... {} checks", r.name, r.checked),
                    Some(detail) => {
                        failed += 1;
                        println!("FAIL {}: {detail}", r.name);
                    }
                }
            }
            println!(
                "selftest: {} suites, {} ok, {} failed",
                results.len(),
                results.len() - failed,
                failed
            );
            if failed == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

