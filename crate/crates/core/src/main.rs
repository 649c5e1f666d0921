use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxrank::commands::{
    cmd_bounds, cmd_check_decomposition, cmd_fold, cmd_non_example, cmd_word, CommandResult, FoldOptions,
    NonExampleOptions, WordAction, LARGE_BUDGET,
};
use coxrank::coxeter::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "coxrank", version, about = "Word problem, folds and decompositions for Coxeter groups")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of words a word-problem query may visit.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    Reduce,
    IsIdentity,
    Equal,
    ScanRelator,
    Kappa,
}

#[derive(Subcommand)]
enum Command {
    /// Word-problem queries.
    Word {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(value_enum)]
        action: Action,
        word: String,
        /// Second word, for `equal`.
        other: Option<String>,
    },
    /// Fold a labeled graph.
    Fold {
        #[arg(long)]
        graph: PathBuf,
        /// Where to write the folded graph.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        /// List every fold.
        #[arg(long)]
        trace: bool,
    },
    /// Rank bounds for a Coxeter matrix.
    Bounds {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Validate a decomposition and print its complexity.
    CheckDecomposition {
        #[arg(long)]
        decomposition: PathBuf,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// The rank-five family generated by four elements.
    NonExample {
        /// Odd integer, at least 3.
        #[arg(long, default_value_t = 7, conflicts_with = "large")]
        q: u32,
        /// Certify every witness with the word problem.
        #[arg(long)]
        verify: bool,
        /// Use q = 101.
        #[arg(long)]
        large: bool,
        /// Directory for the matrix, X and witness files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> CommandResult {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    match &cli.command {
        Command::Word { matrix, action, word, other } => {
            let action = match action {
                Action::Reduce => WordAction::Reduce,
                Action::IsIdentity => WordAction::IsIdentity,
                Action::Equal => match other {
                    Some(o) => WordAction::Equal(o.clone()),
                    None => return Err(coxrank::commands::Failure::input("equal needs a second word")),
                },
                Action::ScanRelator => WordAction::ScanRelator,
                Action::Kappa => WordAction::Kappa,
            };
            cmd_word(matrix, word, &action, budget)
        }
        Command::Fold { graph, out, emit_dot, trace } => {
            cmd_fold(graph, &FoldOptions { out: out.clone(), emit_dot: emit_dot.clone(), trace: *trace })
        }
        Command::Bounds { matrix } => cmd_bounds(matrix),
        Command::CheckDecomposition { decomposition, emit_dot } => {
            cmd_check_decomposition(decomposition, emit_dot.as_deref())
        }
        Command::NonExample { q, verify, large, out } => cmd_non_example(&NonExampleOptions {
            q: *q,
            verify: *verify,
            large: *large,
            out: out.clone(),
            budget: cli.budget.unwrap_or(if *large { LARGE_BUDGET } else { DEFAULT_BUDGET }),
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, stdout, stderr) = match run(&cli) {
        Ok(r) if cli.json => (r.outcome.code(), serde_json::to_string_pretty(&r.json).unwrap_or_default() + "\n", None),
        Ok(r) => (r.outcome.code(), r.text, None),
        Err(f) if cli.json => {
            (f.outcome.code(), serde_json::to_string_pretty(&f.to_json()).unwrap_or_default() + "\n", None)
        }
        Err(f) => (f.outcome.code(), String::new(), Some(f.message)),
    };
    print!("{stdout}");
    if let Some(msg) = stderr {
        eprintln!("coxrank: {msg}");
    }
    ExitCode::from(code as u8)
}
