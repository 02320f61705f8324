use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arrlab_cli::{
    cmd_catalog_list, cmd_catalog_show, cmd_classify, cmd_incidence, cmd_iso, cmd_moduli,
    cmd_verify_paper, thread_cap, CmdOutput, Format, EXIT_INPUT,
};

/// Exact computations on complex projective line arrangements: catalog,
/// intersection lattices, lattice isomorphism, the nine-line
/// classification, moduli spaces, and a verification suite for the
/// underlying paper.
#[derive(Parser)]
#[command(name = "arrlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Built-in arrangements from the paper.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Intersection lattice, multiplicity profile, and Hirzebruch verdict
    /// of an arrangement file.
    Incidence { file: PathBuf },
    /// Lattice isomorphism witness between two lattice or arrangement
    /// files ("none" and exit 3 if not isomorphic).
    Iso { a: PathBuf, b: PathBuf },
    /// Classify a nine-line lattice per the classification theorem.
    Classify { file: PathBuf },
    /// Solve the moduli space of a lattice exactly.
    Moduli { file: PathBuf },
    /// Replay every published computation as a checklist.
    VerifyPaper {
        /// Skip the long-running census checks.
        #[arg(long, value_name = "WHAT")]
        skip: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List all catalog entries.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Show one entry with its lines and lattice.
    Show {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = thread_cap() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_INPUT as u8);
    }
    let out: CmdOutput = match cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List { format } => cmd_catalog_list(format.into()),
            CatalogAction::Show { name, format } => cmd_catalog_show(&name, format.into()),
        },
        Command::Incidence { file } => cmd_incidence(&file),
        Command::Iso { a, b } => cmd_iso(&a, &b),
        Command::Classify { file } => cmd_classify(&file),
        Command::Moduli { file } => cmd_moduli(&file),
        Command::VerifyPaper { skip } => match skip.as_deref() {
            None => cmd_verify_paper(false),
            Some("slow") => cmd_verify_paper(true),
            Some(other) => CmdOutput {
                text: format!("error: unknown --skip value {other:?} (expected \"slow\")"),
                code: EXIT_INPUT,
            },
        },
    };
    if out.code == 0 || out.code == 3 {
        println!("{}", out.text);
    } else {
        eprintln!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
