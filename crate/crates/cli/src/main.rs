mod args;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wpvol_core::exactpoly::to_latex;
use wpvol_core::intersect::{psi_kappa, IntersectionIndex};
use wpvol_core::store::resolve_cache_dir;
use wpvol_core::{Engine, Error, Method, Provenance, StoreEntry, VolumeStore};

use args::{CacheAction, Cli, Command, ExportFormat, MethodArg, Relation};

const EXIT_RELATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MATH: u8 = 3;
const EXIT_IO: u8 = 4;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unstable { .. } | Error::UnsupportedMethod { .. } | Error::Precondition(_) | Error::ParseRational(_) => {
            EXIT_USAGE
        }
        Error::Io(_) | Error::Json(_) | Error::Store(_) | Error::SchemaVersion { .. } => EXIT_IO,
        _ => EXIT_MATH,
    }
}

fn open_store(cli: &Cli) -> wpvol_core::Result<VolumeStore> {
    if cli.no_cache {
        Ok(VolumeStore::in_memory())
    } else {
        VolumeStore::open(resolve_cache_dir(cli.cache_dir.as_deref()))
    }
}

fn emit(text: &str, target: Option<&std::path::Path>) -> wpvol_core::Result<()> {
    match target {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::String => "string",
        Relation::Dilaton => "dilaton",
        Relation::Second => "second",
        Relation::Factor => "factor",
        Relation::String2 => "string2",
        Relation::Dilaton2 => "dilaton2",
        Relation::All => "all",
    }
}

fn run(cli: Cli) -> wpvol_core::Result<u8> {
    let store = open_store(&cli)?;
    match cli.command {
        Command::Compute { genus, boundaries, method, latex } => {
            let method = match method {
                Some(MethodArg::Lift) => Method::Lift,
                Some(MethodArg::Mirzakhani) => Method::Mirzakhani,
                Some(MethodArg::Both) => Method::Both,
                None => Method::default_for(genus),
            };
            let engine = Engine::new(store);
            let v = engine.compute(genus, boundaries, method)?;
            let mut out = format!("{}\n", v.poly());
            if latex {
                out.push_str(&to_latex(v.poly()));
                out.push('\n');
            }
            emit(&out, None)?;
            Ok(0)
        }
        Command::Verify { relation, max_genus, max_boundaries } => {
            let mut report = verify::Report::new(relation_name(relation), max_genus, max_boundaries);
            let cache = store.verify_all()?;
            for c in cache.checks.iter().filter(|c| !c.passed) {
                report.push(verify::Case {
                    relation: "cache",
                    g: c.g,
                    n: c.n,
                    passed: false,
                    checked: None,
                    detail: Some(format!("{}: {}", c.relation, c.detail.clone().unwrap_or_default())),
                });
            }
            if report.failed == 0 {
                let engine = Engine::new(store);
                verify::run(&engine, relation, max_genus, max_boundaries, &mut report)?;
            }
            emit(&format!("{}\n", serde_json::to_string_pretty(&report)?), None)?;
            eprintln!("{} passed, {} failed", report.passed, report.failed);
            if let Some(first) = report.first_failure() {
                eprintln!(
                    "first failure: {} at ({},{}): {}",
                    first.relation,
                    first.g,
                    first.n,
                    first.detail.as_deref().unwrap_or("")
                );
                return Ok(EXIT_RELATION);
            }
            Ok(0)
        }
        Command::Intersect { genus, n, alpha, kappa } => {
            if alpha.len() != n {
                return Err(Error::Precondition(format!("--alpha has {} entries for --n {n}", alpha.len())));
            }
            let engine = Engine::new(store);
            let value = psi_kappa(&engine, &IntersectionIndex::new(genus, alpha, kappa))?;
            emit(&format!("{value}\n"), None)?;
            Ok(0)
        }
        Command::Export { format, genus, boundaries, output } => {
            let engine = Engine::new(store);
            let v = engine.compute(genus, boundaries, Method::default_for(genus))?;
            let text = match format {
                ExportFormat::Latex => format!("{}\n", to_latex(v.poly())),
                ExportFormat::Json => {
                    let store = engine.store();
                    let entry = Provenance::ALL
                        .iter()
                        .find_map(|&p| store.get_with((genus, boundaries), p).transpose())
                        .transpose()?
                        .unwrap_or_else(|| StoreEntry::new(v, Provenance::Mirzakhani));
                    entry.to_json()?
                }
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Cache { action } => {
            let mut store = store;
            match action {
                CacheAction::Verify => {
                    let report = store.verify_all()?;
                    for c in report.checks.iter().filter(|c| !c.passed) {
                        eprintln!("FAIL {} ({},{}): {}", c.relation, c.g, c.n, c.detail.as_deref().unwrap_or(""));
                    }
                    if report.ok() {
                        emit(&format!("{} entries, OK\n", report.entries), None)?;
                        Ok(0)
                    } else {
                        emit(&format!("{} entries, {} failures\n", report.entries, report.failures()), None)?;
                        Ok(EXIT_RELATION)
                    }
                }
                CacheAction::Clear => {
                    let removed = store.clear()?;
                    emit(&format!("removed {removed} entries\n"), None)?;
                    Ok(0)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
