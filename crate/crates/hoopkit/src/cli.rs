//! Command-line front end. [`run`] writes its report to the given sink and
//! returns the exit status: 0 for success, acceptance or a find; 1 for a
//! rejection, a countermodel, a violation or a search that came up empty.
//! Usage and I/O errors surface as `Err` and map to status 2.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use hoopkit_core::algebra::{battery, Dyadic, DEFAULT_BATTERY_EXPONENT};
use hoopkit_core::corpus::export::{export_prover9, export_tptp};
use hoopkit_core::corpus::{bank, Problem};
use hoopkit_core::search::{canonical_form, refute, CanonicalKey, SearchConfig};
use hoopkit_core::semantics::{
    dyadic_counterexample, evaluate, valid_in, Assignment, DyadicModel, FiniteModel, Validity,
    DEFAULT_ASSIGNMENT_CAP,
};
use hoopkit_core::{check_derivation, classify, validate_pocrim, ClassFilter, FiniteAlgebra, Logic, Sequent};

use crate::files;
use crate::report::{flags_table, oracle_table, problem_table, yes_no, Table};
use crate::sweeps::{self, CorpusConfig};

#[derive(Debug, Parser)]
#[command(name = "hoopkit", version, about = "Pocrims, hoops and their logics")]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a formula or a sequent and print its AST and minimal-bracket form.
    Parse { text: String },
    /// Check a derivation record under a logic.
    ProveCheck {
        #[arg(long)]
        logic: Logic,
        file: PathBuf,
    },
    /// Check that an algebra file satisfies the pocrim laws.
    CheckModel { file: PathBuf },
    /// Print the model-class membership of an algebra file.
    Classify { file: PathBuf },
    /// Evaluate a formula under an assignment.
    Eval {
        /// An algebra file, or `dyadic`.
        #[arg(long)]
        model: String,
        /// Comma-separated `VAR=value` pairs.
        #[arg(long, default_value = "")]
        assign: String,
        formula: String,
    },
    /// Decide validity of a sequent `A, B |- C` in a model.
    Valid {
        /// An algebra file, or `dyadic` to search the sample battery.
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = DEFAULT_ASSIGNMENT_CAP)]
        cap: u64,
        sequent: String,
    },
    /// List the bounded pocrims up to a size.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        /// Comma-separated properties such as `hoop` or `bounded,non-idempotent`.
        #[arg(long, default_value = "pocrim")]
        class: ClassFilter,
        /// Keep every labelled algebra instead of one per isomorphism class.
        #[arg(long)]
        no_pruning: bool,
        /// Cell-assignment budget.
        #[arg(long)]
        budget: Option<u64>,
        /// Print canonical keys only.
        #[arg(long)]
        keys: bool,
        /// Also write the algebras to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a finite model of a problem's assumptions that falsifies its goals.
    Refute {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// The problem bank.
    Corpus {
        #[command(subcommand)]
        action: CorpusCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    List,
    /// Run every problem and oracle.
    Run {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        /// Size bound of the soundness sweeps; 0 skips them.
        #[arg(long, default_value_t = 4)]
        sweep_size: usize,
        #[arg(long, default_value_t = DEFAULT_BATTERY_EXPONENT)]
        dyadic_exponent: u32,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write problem files.
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
        /// Only these problems (repeatable).
        #[arg(long)]
        id: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Prover9,
    Tptp,
}

enum Model {
    Finite(FiniteAlgebra),
    Dyadic,
}

fn load_model(spec: &str) -> anyhow::Result<Model> {
    if spec.eq_ignore_ascii_case("dyadic") {
        return Ok(Model::Dyadic);
    }
    let alg = files::read_algebra(spec.as_ref())?;
    validate_pocrim(&alg).with_context(|| format!("{spec} is not a pocrim"))?;
    Ok(Model::Finite(alg))
}

/// `k/d` with `d` a power of two, or `0`, or `1`.
pub fn parse_dyadic(s: &str) -> anyhow::Result<Dyadic> {
    let bad = || anyhow!("`{s}` is not a dyadic rational in [0, 1]");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: u64 = num.parse().map_err(|_| bad())?;
    let den: u64 = den.parse().map_err(|_| bad())?;
    if !den.is_power_of_two() {
        return Err(bad());
    }
    Dyadic::new(num, den.trailing_zeros()).ok_or_else(bad)
}

fn parse_assignment<V>(
    text: &str,
    value: impl Fn(&str) -> anyhow::Result<V>,
) -> anyhow::Result<Assignment<V>> {
    let mut out = Assignment::new();
    for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (var, v) = pair
            .split_once('=')
            .ok_or_else(|| anyhow!("expected VAR=value, found `{pair}`"))?;
        out.insert(var.trim().to_string(), value(v.trim())?);
    }
    Ok(out)
}

fn show_assignment<V: std::fmt::Display>(a: &Assignment<V>) -> String {
    a.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn key_hex(key: &CanonicalKey) -> String {
    key.0.iter().map(|b| format!("{b:02x}")).collect()
}

fn selected(ids: &[String]) -> anyhow::Result<Vec<Problem>> {
    let all = bank();
    if ids.is_empty() {
        return Ok(all);
    }
    ids.iter()
        .map(|id| {
            all.iter()
                .find(|p| &p.id == id)
                .cloned()
                .ok_or_else(|| anyhow!("no problem with id `{id}`"))
        })
        .collect()
}

pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<u8> {
    match cli.command {
        Command::Parse { text } => {
            if text.contains("|-") {
                let s = Sequent::parse(&text)?;
                writeln!(out, "sequent")?;
                writeln!(out, "ast: {s:?}")?;
                writeln!(out, "printed: {s}")?;
            } else {
                let f = hoopkit_core::parse(&text)?;
                writeln!(out, "formula")?;
                writeln!(out, "ast: {f:?}")?;
                writeln!(out, "printed: {f}")?;
            }
            Ok(0)
        }
        Command::ProveCheck { logic, file } => {
            let d = files::read_derivation(&file)?;
            match check_derivation(&d, logic) {
                Ok(()) => {
                    writeln!(out, "accepted: {} in {logic} ({} nodes)", d.conclusion, d.size())?;
                    Ok(0)
                }
                Err(e) => {
                    writeln!(out, "rejected: {e}")?;
                    Ok(1)
                }
            }
        }
        Command::CheckModel { file } => {
            let alg = files::read_algebra(&file)?;
            match validate_pocrim(&alg) {
                Ok(()) => {
                    writeln!(out, "pocrim of size {}", alg.size())?;
                    Ok(0)
                }
                Err(e) => {
                    writeln!(out, "not a pocrim: {e}")?;
                    Ok(1)
                }
            }
        }
        Command::Classify { file } => {
            let alg = files::read_algebra(&file)?;
            if let Err(e) = validate_pocrim(&alg) {
                writeln!(out, "not a pocrim: {e}")?;
                return Ok(1);
            }
            write!(out, "{}", flags_table(&classify(&alg)))?;
            Ok(0)
        }
        Command::Eval {
            model,
            assign,
            formula,
        } => {
            let f = hoopkit_core::parse(&formula)?;
            let value = match load_model(&model)? {
                Model::Finite(alg) => {
                    let a = parse_assignment(&assign, |v| {
                        let k: usize = v.parse().map_err(|_| anyhow!("`{v}` is not an element"))?;
                        if k >= alg.size() {
                            bail!("element {k} is outside 0..{}", alg.size());
                        }
                        Ok(k)
                    })?;
                    evaluate(&f, &FiniteModel::new(&alg), &a)?.to_string()
                }
                Model::Dyadic => {
                    let a = parse_assignment(&assign, parse_dyadic)?;
                    evaluate(&f, &DyadicModel, &a)?.to_string()
                }
            };
            writeln!(out, "{value}")?;
            Ok(0)
        }
        Command::Valid {
            model,
            cap,
            sequent,
        } => {
            let s = Sequent::parse(&sequent)?;
            match load_model(&model)? {
                Model::Finite(alg) => match valid_in(&s, &alg, cap)? {
                    Validity::Valid { assignments } => {
                        writeln!(out, "valid ({assignments} assignments)")?;
                        Ok(0)
                    }
                    Validity::Countermodel(a) => {
                        writeln!(out, "countermodel: {}", show_assignment(&a))?;
                        Ok(1)
                    }
                },
                Model::Dyadic => {
                    let values = battery(DEFAULT_BATTERY_EXPONENT);
                    match dyadic_counterexample(&s, &values)? {
                        None => {
                            writeln!(
                                out,
                                "no countermodel among dyadics of exponent <= {DEFAULT_BATTERY_EXPONENT}"
                            )?;
                            Ok(0)
                        }
                        Some(a) => {
                            writeln!(out, "countermodel: {}", show_assignment(&a))?;
                            Ok(1)
                        }
                    }
                }
            }
        }
        Command::Enumerate {
            max_size,
            class,
            no_pruning,
            budget,
            keys,
            out: file,
        } => {
            let mut config = SearchConfig::up_to(max_size);
            config.iso_pruning = !no_pruning;
            if let Some(b) = budget {
                config.node_budget = b;
            }
            let e = sweeps::enumerate(&config, &class);
            for (i, alg) in e.algebras.iter().enumerate() {
                let key = key_hex(&canonical_form(alg));
                if keys {
                    writeln!(out, "{key}")?;
                } else {
                    writeln!(out, "# {i} key {key}")?;
                    write!(out, "{alg}")?;
                }
            }
            let mut counts = Table::new(&["size", "algebras"]);
            for n in 1..=max_size {
                counts.push(&[n, e.algebras.iter().filter(|a| a.size() == n).count()]);
            }
            if !keys {
                write!(out, "{counts}")?;
                writeln!(out, "class {class}, {} nodes, complete {}", e.nodes, yes_no(e.complete))?;
            }
            if let Some(path) = file {
                files::write_algebras(&path, &e.algebras)?;
            }
            Ok(if e.complete { 0 } else { 1 })
        }
        Command::Refute {
            file,
            max_size,
            budget,
        } => {
            let problem = files::read_problem(&file)?;
            let mut config = SearchConfig::up_to(max_size);
            if let Some(b) = budget {
                config.node_budget = b;
            }
            let r = refute(&problem, &config)?;
            match r.refutation {
                Some(found) => {
                    writeln!(
                        out,
                        "countermodel of size {} after {} models",
                        found.algebra.size(),
                        r.models_checked
                    )?;
                    write!(out, "{}", found.algebra)?;
                    if !found.constants.is_empty() {
                        writeln!(out, "constants: {}", show_assignment(&found.constants))?;
                    }
                    Ok(0)
                }
                None => {
                    let scope = if r.complete { "" } else { " (budget exhausted)" };
                    writeln!(
                        out,
                        "no countermodel up to size {max_size} in {} models{scope}",
                        r.models_checked
                    )?;
                    Ok(1)
                }
            }
        }
        Command::Corpus { action } => run_corpus(action, out),
    }
}

fn run_corpus(action: CorpusCommand, out: &mut dyn Write) -> anyhow::Result<u8> {
    match action {
        CorpusCommand::List => {
            let mut t = Table::new(&["problem", "expected", "class", "title"]);
            for p in bank() {
                t.push(&[
                    p.id.clone(),
                    p.expected.name().to_string(),
                    p.statement.class.to_string(),
                    p.title.clone(),
                ]);
            }
            write!(out, "{t}")?;
            Ok(0)
        }
        CorpusCommand::Run {
            max_size,
            sweep_size,
            dyadic_exponent,
            json,
        } => {
            let config = CorpusConfig {
                max_size,
                sweep_size,
                dyadic_exponent,
            };
            let run = sweeps::run_corpus(&config)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&run)?)?;
            } else {
                write!(out, "{}", problem_table(&run.problems))?;
                writeln!(out)?;
                write!(out, "{}", oracle_table(&run.oracles))?;
                writeln!(out)?;
                writeln!(
                    out,
                    "{} pocrims, {} hoops up to size {max_size}; {} violations",
                    run.pocrims,
                    run.hoops,
                    run.violations()
                )?;
            }
            Ok(if run.is_clean() { 0 } else { 1 })
        }
        CorpusCommand::Export { format, out: dir, id } => {
            files::create_dir(&dir)?;
            for p in selected(&id)? {
                let (text, ext) = match format {
                    ExportFormat::Prover9 => (export_prover9(&p), "in"),
                    ExportFormat::Tptp => (export_tptp(&p), "p"),
                };
                let path = dir.join(format!("{}.{ext}", p.id));
                files::write_text(&path, &text)?;
                writeln!(out, "{}", path.display())?;
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_literals() {
        assert_eq!(parse_dyadic("3/8").unwrap(), Dyadic::new(3, 3).unwrap());
        assert_eq!(parse_dyadic("1").unwrap(), Dyadic::ONE);
        assert_eq!(parse_dyadic("0").unwrap(), Dyadic::ZERO);
        assert!(parse_dyadic("1/3").is_err());
        assert!(parse_dyadic("5/4").is_err());
        assert!(parse_dyadic("x").is_err());
    }

    #[test]
    fn assignments() {
        let a = parse_assignment("P=2, Q=0", |v| Ok(v.parse::<usize>()?)).unwrap();
        assert_eq!(a.get("P"), Some(&2));
        assert_eq!(show_assignment(&a), "P=2,Q=0");
        assert!(parse_assignment("P", |v| Ok(v.to_string())).is_err());
    }
}
