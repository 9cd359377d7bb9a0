use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homlie_cli::{parse_document, render_machine, render_text, run_command, AlgebraDocument, Command, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "homlie",
    version,
    about = "Exact checks for hom-Lie algebras, metrics, para-Kähler structures and phase spaces"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hom-Jacobi and morphism checks, plus Ω and metric checks when present.
    Check { file: PathBuf },
    /// Levi-Civita product of the metric.
    LeviCivita { file: PathBuf },
    /// Nijenhuis torsion of K.
    Nijenhuis { file: PathBuf },
    /// Para-Hermitian and para-Kähler certificates with the full theorem battery.
    ParaKahler { file: PathBuf },
    /// Phase space constructions.
    PhaseSpace {
        #[command(subcommand)]
        action: PhaseSpaceCmd,
    },
}

#[derive(Subcommand)]
enum PhaseSpaceCmd {
    /// Extend two involutive hom-left-symmetric products to V ⊕ V*.
    Build { v: PathBuf, vstar: PathBuf },
    /// Recover a phase space from a para-Kähler hom-Lie algebra.
    Extract { file: PathBuf },
}

fn load(path: &PathBuf) -> Result<AlgebraDocument, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (command, paths) = match &cli.command {
        Cmd::Check { file } => (Command::Check, vec![file]),
        Cmd::LeviCivita { file } => (Command::LeviCivita, vec![file]),
        Cmd::Nijenhuis { file } => (Command::Nijenhuis, vec![file]),
        Cmd::ParaKahler { file } => (Command::ParaKahler, vec![file]),
        Cmd::PhaseSpace {
            action: PhaseSpaceCmd::Build { v, vstar },
        } => (Command::PhaseSpaceBuild, vec![v, vstar]),
        Cmd::PhaseSpace {
            action: PhaseSpaceCmd::Extract { file },
        } => (Command::PhaseSpaceExtract, vec![file]),
    };
    let documents = match paths.into_iter().map(load).collect::<Result<Vec<_>, _>>() {
        Ok(docs) => docs,
        Err(message) => {
            eprintln!("homlie: {message}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match run_command(&command, &documents) {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Text => render_text(&report),
                Format::Machine => render_machine(&report),
            };
            print!("{rendered}");
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("homlie: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
