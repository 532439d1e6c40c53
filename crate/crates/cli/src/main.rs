use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wclean::laws::law_info;
use wclean::localized::DEFAULT_SEARCH_BOUND;
use wclean::ring::{set_max_ideal_enum_order, set_max_order};
use wclean_cli::commands::{self, Check, Output};
use wclean_cli::eval::{Env, EvalError};

/// Clean and weakly clean ideals of finite rings and localized integers.
#[derive(Parser)]
#[command(name = "wclean", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// File of named bimodule, pairing and ring definitions.
    #[arg(long, global = true, value_name = "FILE")]
    spec_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sign classes and decompositions of one element.
    Analyze {
        spec: String,
        /// Element index or name; `a/b` over localized rings; `x;y` over mixed products.
        #[arg(long)]
        element: String,
    },
    /// Check an ideal given by generators.
    Ideal {
        spec: String,
        /// Comma-separated generators, `all` or `radical`; `;` between product factors.
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long, value_enum)]
        check: Check,
        /// Search bound for localized rings.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u64,
    },
    /// The Jacobson radical and its checks.
    Radical { spec: String },
    /// List the idempotents.
    Idempotents { spec: String },
    /// List the units.
    Units { spec: String },
    /// Run the law suite.
    Laws {
        /// The built-in catalog (the default when no --spec is given).
        #[arg(long, conflicts_with = "spec")]
        catalog: bool,
        /// Rings to run the generic laws on; repeatable.
        #[arg(long)]
        spec: Vec<String>,
        /// Keep only these law ids; repeatable.
        #[arg(long = "law")]
        laws: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u64,
    },
    /// The two localized worked examples with witnesses.
    Examples,
    /// Parse a specification and print its canonical form.
    Parse { spec: String },
}

fn cap_from_env(var: &str, set: fn(usize)) -> Result<(), String> {
    match std::env::var(var) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                set(n);
                Ok(())
            }
            _ => Err(format!("{var} must be a positive integer, got `{v}`")),
        },
        Err(_) => Ok(()),
    }
}

fn run(cli: Cli) -> Result<Output, EvalError> {
    let env = match &cli.spec_file {
        Some(path) => Env::load(path)?,
        None => Env::default(),
    };
    let value = |spec: &str| env.parse(spec).and_then(|s| env.eval(&s));
    let json = cli.json;
    match cli.command {
        Command::Analyze { spec, element } => commands::analyze(&value(&spec)?, &element, json),
        Command::Ideal {
            spec,
            gens,
            check,
            bound,
        } => commands::ideal(&value(&spec)?, &gens, check, bound, json),
        Command::Radical { spec } => commands::radical(&value(&spec)?, json),
        Command::Idempotents { spec } => commands::list(&value(&spec)?, "idempotents", json),
        Command::Units { spec } => commands::list(&value(&spec)?, "units", json),
        Command::Laws {
            catalog: _,
            spec,
            laws,
            bound,
        } => {
            if let Some(bad) = laws.iter().find(|l| law_info(l).is_none()) {
                return Err(EvalError::Invalid(format!("unknown law `{bad}`")));
            }
            if spec.is_empty() {
                Ok(commands::laws_catalog(&laws, json))
            } else {
                let values = spec
                    .iter()
                    .map(|s| value(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(commands::laws_for(&values, &laws, bound, json))
            }
        }
        Command::Examples => Ok(commands::examples(json)),
        Command::Parse { spec } => {
            let parsed = env.parse(&spec)?;
            let body = if json {
                format!(
                    "{}\n",
                    serde_json::json!({ "canonical": parsed.to_string() })
                )
            } else {
                format!("{parsed}\n")
            };
            Ok(Output {
                body,
                finding: false,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    for (var, set) in [
        ("WCLEAN_MAX_ORDER", set_max_order as fn(usize)),
        ("WCLEAN_MAX_IDEAL_ORDER", set_max_ideal_enum_order),
    ] {
        if let Err(msg) = cap_from_env(var, set) {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let mut body = out.body;
            if !body.ends_with('\n') {
                body.push('\n');
            }
            if stdout.write_all(body.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(out.finding))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
