use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use scstar::search::Method;
use scstar::{RegularAlphaDefn, Settings};
use scstar_cli::commands::{self, CommandError, Options, RunReport, WitnessCheck, EXIT_INVALID};
use scstar_cli::document::read_file;

#[derive(Parser)]
#[command(name = "scstar", version, about = "Generalized closed sets and almost SC*-normality on finite spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest space size for sweeps.
    #[arg(long, global = true)]
    max_points: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Preorder)]
    method: MethodArg,

    /// Use the literal sandwich bound SC*-cl(I) and only SC*-open neighborhoods.
    #[arg(long, global = true)]
    strict_paper: bool,

    #[arg(long, global = true, value_enum, default_value_t = RalphaArg::Analogy)]
    ralpha_defn: RalphaArg,

    /// Number of counterexample reports kept per claim.
    #[arg(long, global = true, default_value_t = 10)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Preorder,
}

#[derive(Clone, Copy, ValueEnum)]
enum RalphaArg {
    Analogy,
    AlphaIntAlphaCl,
}

#[derive(Subcommand)]
enum Command {
    /// Every class label and closure of one subset.
    Classify {
        space: String,
        /// Comma list of point labels or indices; empty for ∅.
        subset: String,
    },
    /// The members of each class, or of one class.
    Families {
        space: String,
        #[arg(long)]
        label: Option<String>,
    },
    /// Normality, almost normality, almost SC*-normality, with witnesses.
    Normality {
        space: String,
        /// A pair to re-verify a witness for.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<String>>,
        /// A candidate witness for --pair.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        witness: Option<Vec<String>>,
        /// Class of the candidate witness sets (default SC*-open).
        #[arg(long)]
        kind: Option<String>,
    },
    /// The six characterisations of almost SC*-normality.
    Theorem24 { space: String },
    /// Map properties and the two preservation statements.
    Mapcheck { map: String },
    /// Sweep a claim (or `all`) over every space with up to --max-points points.
    Sweep { claim: String },
    /// List labeled topologies on a number of points.
    Enumerate {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        up_to_homeomorphism: bool,
    },
}

fn pair(v: Option<Vec<String>>) -> Option<(String, String)> {
    v.map(|mut v| {
        let b = v.pop().unwrap_or_default();
        let a = v.pop().unwrap_or_default();
        (a, b)
    })
}

fn run(cli: Cli) -> Result<RunReport, CommandError> {
    let mut settings = if cli.strict_paper { Settings::literal() } else { Settings::default() };
    settings = settings.with_regular_alpha(match cli.ralpha_defn {
        RalphaArg::Analogy => RegularAlphaDefn::Analogy,
        RalphaArg::AlphaIntAlphaCl => RegularAlphaDefn::AlphaIntAlphaCl,
    });
    let options = Options {
        settings,
        max_points: cli.max_points,
        method: match cli.method {
            MethodArg::Brute => Method::Brute,
            MethodArg::Preorder => Method::Preorder,
        },
        cap: cli.cap,
    };
    match cli.command {
        Command::Classify { space, subset } => commands::cmd_classify(&read_file(&space)?, &subset, &options),
        Command::Families { space, label } => commands::cmd_families(&read_file(&space)?, label.as_deref(), &options),
        Command::Normality { space, pair: p, witness, kind } => {
            let check = WitnessCheck {
                pair: pair(p),
                witness: pair(witness),
                kind,
            };
            commands::cmd_normality(&read_file(&space)?, &check, &options)
        }
        Command::Theorem24 { space } => commands::cmd_theorem24(&read_file(&space)?, &options),
        Command::Mapcheck { map } => commands::cmd_mapcheck(&read_file(&map)?, &options),
        Command::Sweep { claim } => commands::cmd_sweep(&claim, &options),
        Command::Enumerate {
            points,
            count_only,
            up_to_homeomorphism,
        } => commands::cmd_enumerate(points, count_only, up_to_homeomorphism, &options),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", report.json_text()),
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
