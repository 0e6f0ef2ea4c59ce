mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "fkt",
    version,
    about = "Alexander-Conway polynomials from state sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Diagram file (native JSON or PD code).
    file: PathBuf,
    /// Input format; inferred from the extension when omitted (`.pd` is PD).
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum InputFormat {
    Json,
    Pd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Model {
    Nabla,
    Theta,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Form {
    T,
    Z,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the state sums.
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "nabla")]
        model: Model,
        #[arg(long, value_enum, default_value = "t")]
        form: Form,
    },
    /// List states with hole counts.
    States {
        #[command(flatten)]
        input: Input,
        /// Starred regions as `R1,R2`; defaults to the least adjacent pair.
        #[arg(long, value_parser = parse_stars)]
        stars: Option<(usize, usize)>,
        /// Check the hole-count identities on every state.
        #[arg(long)]
        verify_parity: bool,
        /// Include the clock-move adjacency list.
        #[arg(long)]
        graph: bool,
    },
    /// Seifert circle data.
    Seifert {
        #[command(flatten)]
        input: Input,
    },
    /// Check identities; exits 1 if any fails.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        checks: Checks,
    },
    /// Compare the state sums with the determinant and skein oracles.
    Xval {
        #[command(flatten)]
        input: Input,
    },
    /// Bundled diagram corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Args, Clone, Copy)]
struct Checks {
    /// Every check below (the default).
    #[arg(long)]
    all: bool,
    #[arg(long)]
    skein: bool,
    /// theta == nabla and the mirror identities.
    #[arg(long = "theorem2")]
    theta: bool,
    #[arg(long)]
    stars: bool,
    #[arg(long)]
    parity: bool,
}

impl Checks {
    fn everything() -> Self {
        Self {
            all: true,
            skein: true,
            theta: true,
            stars: true,
            parity: true,
        }
    }

    fn resolve(self) -> Self {
        if self.all || !(self.skein || self.theta || self.stars || self.parity) {
            Self::everything()
        } else {
            self
        }
    }
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Run every identity on every corpus diagram.
    VerifyAll {
        #[arg(long)]
        json: bool,
    },
    /// Names, crossing counts and link tags.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Write the bundled diagrams as JSON files.
    Export {
        /// Target directory; defaults to the corpus directory.
        dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_stars(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected R1,R2")?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("fkt: {e:#}");
            ExitCode::from(2)
        }
    }
}
