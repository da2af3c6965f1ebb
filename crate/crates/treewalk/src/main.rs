//! Command-line front end: reads tree files, dispatches to the core
//! library, and prints machine-readable JSON or CSV.
//!
//! Exit codes: 0 on success, 1 on computation errors (bad files,
//! invalid parameters, cap overruns), 2 on usage errors.

mod emit;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use treewalk_core::families::{self, FamilyKind, FamilySpec};
use treewalk_core::rational::{exact_string, expect_u64, integer, ratio, to_f64};
use treewalk_core::{hitting, surgery, verify};
use treewalk_core::{Error, SpineDecomposition, VerificationReport};

use emit::{CsvShape, Rendered};

#[derive(Parser)]
#[command(
    name = "treewalk",
    version,
    about = "Exact random-walk hitting and meeting times on trees"
)]
struct Cli {
    /// Output format for data results; tree output is always tree text
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Distance-overlap formula
    Formula,
    /// Exact linear solve
    Solve,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitKind {
    /// The generated tree in tree text format
    Tree,
    /// Its extremal joining and meeting values
    Value,
}

#[derive(Subcommand)]
enum Command {
    /// Exact hitting times into a target vertex
    Hit {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
        /// Target vertex
        #[arg(long)]
        target: usize,
        /// Start vertex; without it the whole profile is printed
        #[arg(long)]
        source: Option<usize>,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// Worst-case meeting time of the tree
    Meet {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
        /// Also report the best-case target
        #[arg(long)]
        best: bool,
    },
    /// Generate a named family member or evaluate it
    Family {
        /// star, path, broom, double_broom, near_double_broom,
        /// balanced_double_broom, balanced_near_double_broom, double_star
        #[arg(long)]
        kind: FamilyKind,
        /// Order
        #[arg(long)]
        n: usize,
        /// Diameter
        #[arg(long)]
        d: Option<usize>,
        /// Left bristle count (endpoint included)
        #[arg(long)]
        l: Option<usize>,
        /// Right bristle count (endpoint included)
        #[arg(long)]
        r: Option<usize>,
        /// Spine index of the singleton leaf
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "value")]
        emit: EmitKind,
    },
    /// Rewrite a tree by one surgery and print the result
    #[command(subcommand)]
    Surgery(SurgeryOp),
    /// Scan all isomorphism classes and check an extremal claim
    #[command(subcommand)]
    Verify(VerifyClaim),
    /// List or count isomorphism classes
    Enumerate {
        /// Order
        #[arg(long)]
        n: usize,
        /// Restrict to one diameter
        #[arg(long)]
        d: Option<usize>,
        /// Print the count without the codes
        #[arg(long)]
        count_only: bool,
    },
    /// Monte Carlo estimate of one hitting time
    Simulate {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        walks: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Check the identity suite on one tree
    Lemmas {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
    },
}

#[derive(Subcommand)]
enum SurgeryOp {
    /// Re-hang a far leaf onto the end of a maximal path
    Sigma {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
        /// The leaf to move
        #[arg(long)]
        leaf: usize,
        /// Maximal path as comma-separated vertices; defaults to the
        /// canonical diameter geodesic
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<usize>>,
    },
    /// Shift caterpillar leaves between spine positions
    Tau {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
        /// A shift "from,to" in spine positions; may appear twice
        #[arg(long = "move", value_parser = parse_move, required = true)]
        moves: Vec<(usize, usize)>,
    },
    /// Re-attach a leaf next to a target vertex
    Move {
        /// Tree file
        #[arg(long)]
        tree: PathBuf,
        /// The leaf to move
        #[arg(long)]
        leaf: usize,
        /// The vertex it becomes adjacent to
        #[arg(long)]
        to: usize,
    },
}

#[derive(Subcommand)]
enum VerifyClaim {
    /// The broom maximizes the meeting time in its diameter class
    Max {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The parity-matched balanced family minimizes in its class
    Min {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The star and the path are the fixed-order extremes
    Order {
        #[arg(long)]
        n: usize,
    },
    /// The broom rooted at its handle tip maximizes the rooted joining time
    Rooted {
        #[arg(long)]
        n: usize,
        /// Root eccentricity
        #[arg(long)]
        r: usize,
    },
}

pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn computation(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::computation(e.to_string())
    }
}

enum Output {
    Tree(String),
    Data(Rendered),
}

fn parse_move(s: &str) -> Result<(usize, usize), String> {
    let (from, to) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"from,to\" spine positions, got '{s}'"))?;
    let position = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad spine position '{x}'"))
    };
    Ok((position(from)?, position(to)?))
}

fn enum_cap() -> Result<usize, CliError> {
    match std::env::var("TREEWALK_ENUM_CAP") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CliError::usage(format!("TREEWALK_ENUM_CAP must be an integer, got '{raw}'"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(verify::DEFAULT_ENUM_CAP),
        Err(e) => Err(CliError::usage(format!("TREEWALK_ENUM_CAP: {e}"))),
    }
}

fn report_value(report: &VerificationReport) -> Result<Value, CliError> {
    serde_json::to_value(report).map_err(|e| CliError::computation(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    Ok(match dispatch(&cli.command)? {
        Output::Tree(text) => text,
        Output::Data(rendered) => match cli.format {
            Format::Json => emit::json_line(&rendered.json),
            Format::Csv => emit::csv_text(&rendered)?,
        },
    })
}

fn dispatch(command: &Command) -> Result<Output, CliError> {
    let out = match command {
        Command::Hit { tree, target, source, method } => {
            let t = io::read_tree(tree)?;
            match *source {
                Some(u) => {
                    let time = match method {
                        Method::Formula => integer(hitting::hit_formula(&t, u, *target)?),
                        Method::Solve => {
                            if u >= t.n() {
                                return Err(Error::LabelOutOfRange { label: u, n: t.n() }.into());
                            }
                            hitting::hit_oracle(&t, *target)?.times[u].clone()
                        }
                    };
                    Output::Data(Rendered::key_value(json!({
                        "source": u,
                        "target": target,
                        "hitting": exact_string(&time),
                    })))
                }
                None => {
                    let times: Vec<String> = match method {
                        Method::Formula => (0..t.n())
                            .map(|u| hitting::hit_formula(&t, u, *target).map(|h| h.to_string()))
                            .collect::<Result<_, _>>()?,
                        Method::Solve => hitting::hit_oracle(&t, *target)?
                            .times
                            .iter()
                            .map(exact_string)
                            .collect(),
                    };
                    Output::Data(Rendered {
                        json: json!({ "target": target, "times": times }),
                        csv: CsvShape::Profile,
                    })
                }
            }
        }
        Command::Meet { tree, best } => {
            let t = io::read_tree(tree)?;
            let (jmax, argmax) = hitting::jmax(&t)?;
            let tmeet = hitting::t_meet(&t)?;
            let mut obj = Map::new();
            obj.insert("jmax".into(), Value::String(jmax.to_string()));
            obj.insert("tmeet".into(), exact_string(&tmeet).into());
            obj.insert("tmeet_decimal".into(), json!(to_f64(&tmeet)));
            obj.insert("argmax".into(), json!(argmax));
            if *best {
                let (tbest, argmin) = hitting::t_bestmeet(&t)?;
                let jmin = expect_u64(&(&tbest * ratio(2 * (t.n() as i64 - 1), 1)));
                obj.insert("jmin".into(), Value::String(jmin.to_string()));
                obj.insert("tbestmeet".into(), exact_string(&tbest).into());
                obj.insert("tbestmeet_decimal".into(), json!(to_f64(&tbest)));
                obj.insert("argmin".into(), json!(argmin));
            }
            Output::Data(Rendered::key_value(Value::Object(obj)))
        }
        Command::Family { kind, n, d, l, r, k, emit } => {
            let spec = FamilySpec { kind: *kind, n: *n, d: *d, l: *l, r: *r, k: *k };
            let (t, _) = families::generate(&spec)?;
            match emit {
                EmitKind::Tree => Output::Tree(io::render_tree(&t)),
                EmitKind::Value => {
                    let (jmax, _) = hitting::jmax(&t)?;
                    let tmeet = hitting::t_meet(&t)?;
                    Output::Data(Rendered::key_value(json!({
                        "jmax": jmax.to_string(),
                        "tmeet": exact_string(&tmeet),
                    })))
                }
            }
        }
        Command::Surgery(op) => match op {
            SurgeryOp::Sigma { tree, leaf, path } => {
                let t = io::read_tree(tree)?;
                let path = match path {
                    Some(p) => p.clone(),
                    None => t.diameter_and_geodesic()?.1,
                };
                Output::Tree(io::render_tree(&surgery::sigma(&t, &path, *leaf)?))
            }
            SurgeryOp::Tau { tree, moves } => {
                if moves.len() > 2 {
                    return Err(CliError::usage("tau takes at most two --move shifts"));
                }
                let t = io::read_tree(tree)?;
                let spine = SpineDecomposition::decompose(&t)?;
                let shifted = surgery::tau(&t, &spine, moves[0], moves.get(1).copied())?;
                Output::Tree(io::render_tree(&shifted))
            }
            SurgeryOp::Move { tree, leaf, to } => {
                let t = io::read_tree(tree)?;
                Output::Tree(io::render_tree(&surgery::move_leaf(&t, *leaf, *to)?))
            }
        },
        Command::Verify(claim) => {
            let cap = enum_cap()?;
            let value = match claim {
                VerifyClaim::Max { n, d } => report_value(&verify::verify_max(*n, *d, cap)?)?,
                VerifyClaim::Min { n, d } => report_value(&verify::verify_min(*n, *d, cap)?)?,
                VerifyClaim::Order { n } => {
                    let (min, max) = verify::verify_fixed_order(*n, cap)?;
                    json!({ "min": report_value(&min)?, "max": report_value(&max)? })
                }
                VerifyClaim::Rooted { n, r } => {
                    report_value(&verify::verify_rooted_broom(*n, *r, cap)?)?
                }
            };
            Output::Data(Rendered::key_value(value))
        }
        Command::Enumerate { n, d, count_only } => {
            let cap = enum_cap()?;
            let trees = match d {
                Some(d) => verify::enumerate_trees_diameter(*n, *d, cap)?,
                None => verify::enumerate_trees(*n, cap)?,
            };
            let mut obj = Map::new();
            obj.insert("n".into(), json!(n));
            if let Some(d) = d {
                obj.insert("d".into(), json!(d));
            }
            obj.insert("count".into(), json!(trees.len()));
            if *count_only {
                Output::Data(Rendered::key_value(Value::Object(obj)))
            } else {
                let codes: Vec<String> = trees.iter().map(|t| t.canonical_code()).collect();
                obj.insert("codes".into(), json!(codes));
                Output::Data(Rendered { json: Value::Object(obj), csv: CsvShape::Codes })
            }
        }
        Command::Simulate { tree, source, target, walks, seed } => {
            let t = io::read_tree(tree)?;
            let est = hitting::mc_hitting(&t, *source, *target, *walks, *seed)?;
            Output::Data(Rendered::key_value(json!({
                "source": source,
                "target": target,
                "walks": walks,
                "seed": seed,
                "mean": est.mean,
                "stderr": est.stderr,
            })))
        }
        Command::Lemmas { tree } => {
            let t = io::read_tree(tree)?;
            let checks = verify::lemma_suite(&t)?;
            let checks =
                serde_json::to_value(&checks).map_err(|e| CliError::computation(e.to_string()))?;
            Output::Data(Rendered {
                json: json!({ "n": t.n(), "checks": checks }),
                csv: CsvShape::Checks,
            })
        }
    };
    Ok(out)
}
