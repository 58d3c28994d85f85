//! `cubeclass`: command line front end for cubeclass-core.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{Document, JobConfig};
use cubeclass_core::cubic_forms::GroupKind;
use cubeclass_core::Error;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "cubeclass", version, about = "Binary cubic forms and 3-torsion in relative class groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(clap::Args, Debug, Clone)]
struct Base {
    /// Base field: 0 for ℚ, otherwise a squarefree d ≠ 1 for ℚ(√d).
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// Steinitz ideal as a generator list, e.g. "(2,1+w)"; defaults to R.
    #[arg(long)]
    ideal: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Sl,
    Gl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Discriminant, signature, class group and units of the base ring.
    BaseInfo {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Orbit representatives of forms with a given discriminant.
    Enumerate {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        disc: String,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Group::Gl)]
        group: Group,
        /// Coordinate height for the search over imaginary quadratic bases.
        #[arg(long, default_value_t = 1)]
        height: i64,
    },
    /// Size of the 3-torsion of the relative class group.
    Count3 {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        disc: String,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Density of projective forms at each prime above a rational prime.
    Density {
        #[command(flatten)]
        base: Base,
        #[arg(long)]
        prime: u64,
        /// Largest residue field to count over.
        #[arg(long, default_value_t = cubeclass_core::counting_local::DEFAULT_RESIDUE_CAP)]
        cap: u64,
    },
    /// Sends a form to its quadruple and back.
    Roundtrip {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        d: i64,
        /// "a,b,c,d" with optional "@(generators)" for the Steinitz ideal.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// The balanced quadruple of a form.
    Form2quad {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// The form of a balanced quadruple.
    Quad2form {
        #[command(flatten)]
        base: Base,
        /// "t;u;alpha;beta;delta;s", algebra elements written "[x;y]" for x + yξ.
        #[arg(long, allow_hyphen_values = true)]
        quad: String,
    },
}

const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_UNSUPPORTED: u8 = 5;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        Error::Domain(_) => EXIT_DOMAIN,
        Error::Internal(_) => EXIT_INTERNAL,
        Error::Unsupported(_) | Error::SearchExhausted(_) => EXIT_UNSUPPORTED,
    }
}

fn dispatch(cmd: Command) -> Result<Document, (u8, Error)> {
    // bad job configuration is a usage error, whatever the library calls it
    let config = |d: i64, ideal: Option<&str>| JobConfig::new(d, ideal).map_err(|e| (EXIT_USAGE, e));
    let math = |e: Error| (exit_code(&e), e);
    match cmd {
        Command::BaseInfo { d } => commands::base_info(&config(d, None)?).map_err(math),
        Command::Enumerate { base, disc, workers, group, height } => {
            let job = config(base.d, base.ideal.as_deref())?;
            let group = match group {
                Group::Sl => GroupKind::Sl,
                Group::Gl => GroupKind::Gl,
            };
            commands::enumerate(&job, &disc, workers, group, height).map_err(math)
        }
        Command::Count3 { base, disc, workers } => {
            commands::count3(&config(base.d, base.ideal.as_deref())?, &disc, workers).map_err(math)
        }
        Command::Density { base, prime, cap } => {
            commands::density(&config(base.d, base.ideal.as_deref())?, prime, cap).map_err(math)
        }
        Command::Roundtrip { d, form } => commands::roundtrip(&config(d, None)?, &form).map_err(math),
        Command::Form2quad { d, form } => commands::form2quad(&config(d, None)?, &form).map_err(math),
        Command::Quad2form { base, quad } => {
            commands::quad2form(&config(base.d, base.ideal.as_deref())?, &quad).map_err(math)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(doc) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes")),
                Format::Table => print!("{}", doc.table()),
            }
            ExitCode::SUCCESS
        }
        Err((code, e)) => {
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
