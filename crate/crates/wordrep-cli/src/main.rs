//! Command-line surface: language inspection, decode/encode, geometric model
//! reconstruction, the deletion operator, speed censuses, letter graphs, and
//! the verification suite.
//!
//! Exit codes: 0 success (or all properties pass), 1 property failure,
//! 2 usage error, 3 capacity/budget error.

use std::fs;
use std::io::BufReader;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wordrep::census::{brute_force_speed, speed, CensusOptions, Recognizer};
use wordrep::geometry::Family;
use wordrep::graphs::decode_graph;
use wordrep::languages::{from_spec, FiniteLanguage};
use wordrep::letters::{decode_letter_graph, enumerate_letter_graphs, LetterSpec};
use wordrep::verify::verify_suite;
use wordrep::words::{deletion_op, BinaryWord, VertexWord};
use wordrep::Error;

#[derive(Parser)]
#[command(
    name = "wordrep",
    about = "Finite binary languages as graph classes: decode, encode, census, verify",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a language's word set, sorted
    Language {
        #[command(subcommand)]
        action: LanguageAction,
    },
    /// Decode a vertex word into a labeled graph
    Decode {
        /// Language name, e.g. interval, trap, l-interval:2, cmp:3
        #[arg(long)]
        language: String,
        /// Vertex word: lowercase letters (abcca) or comma-separated ints
        #[arg(long)]
        word: String,
    },
    /// Encode a geometric model file into a vertex word
    Encode {
        /// Family name, e.g. l-interval:2, trap, pi, arc-cont, cmp:3
        #[arg(long)]
        family: String,
        /// Geometry text file
        #[arg(long, value_name = "FILE")]
        r#in: String,
    },
    /// Reconstruct the geometric model behind a word
    Model {
        #[arg(long)]
        language: String,
        #[arg(long)]
        word: String,
    },
    /// Apply the deletion operator δ_{k,m} to a binary word
    Delta {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Measure the labeled speed of a language at n vertices
    Speed(SpeedArgs),
    /// k-letter graph commands
    Letters {
        #[command(subcommand)]
        action: LettersAction,
    },
    /// Run the full cross-module property suite
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Count labeled graphs accepted by an independent recognizer
    BruteForce {
        #[arg(long)]
        n: usize,
        /// Recognizer id (currently: interval)
        #[arg(long)]
        recognizer: String,
    },
}

#[derive(Subcommand)]
enum LanguageAction {
    /// Print the sorted word set of a named language or a language file
    Show {
        /// Language name, or file:PATH to load a language file
        name: String,
        /// Apply the symmetric closure when loading from a file
        #[arg(long)]
        close: bool,
    },
}

#[derive(Args)]
struct SpeedArgs {
    #[arg(long)]
    language: String,
    #[arg(long)]
    n: usize,
    /// Also count isomorphism classes (n ≤ 6)
    #[arg(long)]
    unlabeled: bool,
    /// Maximum number of words to decode
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads (counts never depend on this)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum LettersAction {
    /// Count distinct labeled k-letter graphs on n vertices
    Speed {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Decode a letter-spec file into a graph
    Decode {
        #[arg(long, value_name = "FILE")]
        spec: String,
    },
}

fn load_language(spec: &str, close: bool) -> Result<FiniteLanguage, Error> {
    if let Some(path) = spec.strip_prefix("file:") {
        let file = fs::File::open(path)?;
        return FiniteLanguage::read_from(path, &mut BufReader::new(file), close);
    }
    from_spec(spec)
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Language {
            action: LanguageAction::Show { name, close },
        } => {
            let lang = load_language(&name, close)?;
            for w in lang.words() {
                println!("{w}");
            }
        }
        Command::Decode { language, word } => {
            let lang = from_spec(&language)?;
            let w = VertexWord::parse(&word)?;
            print!("{}", decode_graph(&lang, &w).to_text());
        }
        Command::Encode { family, r#in } => {
            let family = Family::parse(&family)?;
            let text = fs::read_to_string(&r#in)?;
            let model = family.model_from_text(&text)?;
            println!("{}", model.encode()?);
        }
        Command::Model { language, word } => {
            let family = Family::parse(&language)?;
            let w = VertexWord::parse(&word)?;
            print!("{}", family.decode_model(&w)?.to_text());
        }
        Command::Delta { word, k, m, d } => {
            let w = BinaryWord::parse(&word)?;
            println!("{}", deletion_op(&w, k, m, d)?);
        }
        Command::Speed(args) => {
            let lang = from_spec(&args.language)?;
            let threads = args
                .threads
                .or_else(|| {
                    std::env::var("WORDREP_THREADS")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(1);
            let opts = CensusOptions {
                budget: args.budget.unwrap_or(wordrep::census::DEFAULT_BUDGET),
                unlabeled: args.unlabeled,
                threads,
            };
            let report = speed(&lang, args.n, &opts)?;
            println!("{report}");
            println!("{}", report.machine_line());
        }
        Command::Letters { action } => match action {
            LettersAction::Speed { k, n } => {
                let graphs = enumerate_letter_graphs(k, n)?;
                println!("{}", graphs.len());
            }
            LettersAction::Decode { spec } => {
                let text = fs::read_to_string(&spec)?;
                let spec = LetterSpec::parse(&text)?;
                print!("{}", decode_letter_graph(&spec).to_text());
            }
        },
        Command::Verify { seed, trials } => {
            let report = verify_suite(seed, trials);
            println!("{report}");
            return Ok(report.all_pass());
        }
        Command::BruteForce { n, recognizer } => {
            let rec: Recognizer = recognizer.parse()?;
            println!("{}", brute_force_speed(n, rec)?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Capacity(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
