use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod render;

/// Euler numbers of resolved double octics.
#[derive(Parser)]
#[command(name = "octic", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Descriptor or plane-list file
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Named fixture, see `octic examples` and `octic table`
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Args, Clone, Copy)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Include the blow-up trace
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Clone, Default)]
pub struct EnumerateArgs {
    /// Degree multiset such as 1,1,2,4; repeatable. Defaults to every partition of 8
    #[arg(long, value_delimiter = ';')]
    pub degrees: Vec<String>,
    #[arg(long)]
    pub max_p4_0: Option<i64>,
    #[arg(long)]
    pub max_p4_1: Option<i64>,
    #[arg(long)]
    pub max_p5_0: Option<i64>,
    #[arg(long)]
    pub max_p5_1: Option<i64>,
    #[arg(long)]
    pub max_p5_2: Option<i64>,
    #[arg(long)]
    pub max_l3: Option<i64>,
    /// Print every descriptor, not just the value summary
    #[arg(long)]
    pub list: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Euler number of a descriptor or plane list
    Euler {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Incidence structure of a plane list
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Step-by-step blow-up ledger
    Resolve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a descriptor against the arrangement constraints
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The catalogue of arrangements with their Euler numbers
    Table {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List plane constructions, or write one as a plane list
    Examples {
        name: Option<String>,
        /// Write to FILE instead of standard output
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Every valid descriptor within bounds
    Enumerate {
        #[command(flatten)]
        args: EnumerateArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Euler { input, output } => commands::euler(&input, output),
        Command::Analyze { input, output } => commands::analyze(&input, output),
        Command::Resolve { input, output } => commands::resolve(&input, output),
        Command::Validate { input, output } => commands::validate(&input, output),
        Command::Table { output } => commands::table(output),
        Command::Examples { name, output, format } => {
            commands::examples(name.as_deref(), output.as_deref(), format)
        }
        Command::Enumerate { args, output } => commands::enumerate(&args, output),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            print!("{}", failure.stdout);
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
