//! `semimap`: validate, classify, enumerate and compare polygonal maps.
//!
//! Exit codes: 0 success, 1 a negative answer (`validate` found a violation,
//! `iso` found no isomorphism), 2 `obstruct` could not decide or a usage
//! error, 3 an input or I/O fault, 4 `enumerate` ran out of node budget.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semimap::enumerator::{DEFAULT_BUDGET, DEFAULT_LABEL_CAP};
use semimap::{
    automorphism_count, canonical_form, catalog_entries, char_poly,
    critical_vertex_obstruction_with, cycle_notation, enumerate_maps_with, isomorphism, lookup,
    parse_type, CatalogEntry, Map, MapTextError, MapType, Obstruction, ObstructionOptions,
    SearchOptions, SearchStatus,
};

#[derive(Parser)]
#[command(name = "semimap", version, about = "Polygonal maps on closed surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Mode::Human, global = true)]
    format: Mode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Human,
    /// Tab-separated fields, no labels.
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Check a map file against the map axioms.
    Validate { path: PathBuf },
    /// Print type, surface, Euler characteristic and curvature of a map.
    Classify { path: PathBuf },
    /// List every map of a two-sequence type up to a vertex bound.
    Enumerate {
        #[arg(long = "type")]
        map_type: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_vertices: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Directory for one `<certificate hash>.map` file per map.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Try to rule out a type everywhere by a bounded local search.
    Obstruct {
        #[arg(long = "type")]
        map_type: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        radius: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Decide whether two maps are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Print a vertex bijection in cycle notation.
        #[arg(long)]
        witness: bool,
    },
    /// Characteristic polynomial of the edge graph.
    Charpoly { path: PathBuf },
    /// Browse the built-in census.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per entry.
    List,
    /// Header comments and face list of one entry.
    Show { name: String },
    /// Write every entry to `<DIR>/<name>.map`.
    Export { dir: PathBuf },
}

/// A fault in user input or the file system.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let mode = cli.format;
    match &cli.command {
        Command::Validate { path } => validate(path),
        Command::Classify { path } => classify(path, mode),
        Command::Enumerate {
            map_type,
            max_vertices,
            budget,
            workers,
            out,
        } => enumerate(
            map_type,
            *max_vertices as usize,
            *budget,
            *workers,
            out.as_deref(),
            mode,
        ),
        Command::Obstruct {
            map_type,
            radius,
            budget,
        } => obstruct(map_type, *radius as usize, *budget),
        Command::Iso {
            first,
            second,
            witness,
        } => iso(first, second, *witness),
        Command::Charpoly { path } => Ok((format!("{}\n", char_poly(&read_map(path)?)), 0)),
        Command::Catalog { action } => catalog(action, mode),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_map(path: &Path) -> Result<Map, Failure> {
    Map::from_text(&read_text(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_type(text: &str) -> Result<MapType, Failure> {
    parse_type(text).map_err(|e| Failure(format!("type `{text}`: {e}")))
}

fn validate(path: &Path) -> Outcome {
    match Map::from_text(&read_text(path)?) {
        Ok(_) => Ok(("valid\n".into(), 0)),
        Err(MapTextError::Invalid(e)) => Ok((format!("invalid: {e}\n"), 1)),
        Err(e) => Ok((format!("invalid: {e}\n"), 1)),
    }
}

fn classify(path: &Path, mode: Mode) -> Outcome {
    let map = read_map(path)?;
    let first = map.curvature(0);
    let curvature = if (1..map.n_vertices()).all(|v| map.curvature(v) == first) {
        first.to_string()
    } else {
        "mixed".to_string()
    };
    let (ty, surface, chi, n) = (
        map.map_type(),
        map.surface(),
        map.euler_characteristic(),
        map.n_vertices(),
    );
    let line = match mode {
        Mode::Human => format!("{ty} {surface} chi={chi} vertices={n} curvature={curvature}\n"),
        Mode::Tsv => format!("{ty}\t{surface}\t{chi}\t{n}\t{curvature}\n"),
    };
    Ok((line, 0))
}

fn catalog_name(map: &Map) -> Option<&'static str> {
    let cert = canonical_form(map);
    catalog_entries()
        .iter()
        .filter(|e| {
            e.map.n_vertices() == map.n_vertices() && e.map.faces().len() == map.faces().len()
        })
        .find(|e| canonical_form(&e.map) == cert)
        .map(|e| e.name)
}

fn enumerate(
    ty: &str,
    n_max: usize,
    budget: u64,
    workers: usize,
    out: Option<&Path>,
    mode: Mode,
) -> Outcome {
    let ty = read_type(ty)?;
    let report = enumerate_maps_with(&ty, n_max, &SearchOptions { budget, workers })?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
    }
    let mut text = String::new();
    match mode {
        Mode::Human => writeln!(text, "found {} maps", report.maps.len())?,
        Mode::Tsv => writeln!(text, "found\t{}", report.maps.len())?,
    }
    for (map, cert) in report.maps.iter().zip(&report.certificates) {
        let hash = cert.hash_hex();
        let name = catalog_name(map).unwrap_or("-");
        let (surface, n, f, aut) = (
            map.surface(),
            map.n_vertices(),
            map.faces().len(),
            automorphism_count(map),
        );
        match mode {
            Mode::Human => writeln!(
                text,
                "{} {surface} vertices={n} faces={f} automorphisms={aut} catalog={name}",
                &hash[..16]
            )?,
            Mode::Tsv => writeln!(text, "{hash}\t{surface}\t{n}\t{f}\t{aut}\t{name}")?,
        }
        if let Some(dir) = out {
            write_map(&dir.join(format!("{hash}.map")), map, &[])?;
        }
    }
    if report.status == SearchStatus::BudgetExceeded {
        eprintln!(
            "warning: node budget exhausted after {} faces; the list may be incomplete",
            report.nodes
        );
        return Ok((text, 4));
    }
    Ok((text, 0))
}

/// Writes a map file and reads it back to confirm it round-trips.
fn write_map(path: &Path, map: &Map, header: &[String]) -> Result<(), Failure> {
    let mut body = String::new();
    for line in header {
        writeln!(body, "# {line}")?;
    }
    body.push_str(&map.to_text());
    fs::write(path, &body).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let back = read_map(path)?;
    if back != *map {
        return Err(Failure(format!(
            "{}: written map does not read back identically",
            path.display()
        )));
    }
    Ok(())
}

fn obstruct(ty: &str, radius: usize, budget: u64) -> Outcome {
    let ty = read_type(ty)?;
    let opts = ObstructionOptions {
        budget,
        label_cap: DEFAULT_LABEL_CAP,
    };
    Ok(
        match critical_vertex_obstruction_with(&ty, radius, &opts)? {
            Obstruction::Obstructed => ("obstructed\n".into(), 0),
            Obstruction::Unknown => ("unknown\n".into(), 2),
        },
    )
}

fn iso(first: &Path, second: &Path, witness: bool) -> Outcome {
    let (a, b) = (read_map(first)?, read_map(second)?);
    Ok(match isomorphism(&a, &b) {
        Some(phi) if witness => (format!("isomorphic\n{}\n", cycle_notation(&phi)), 0),
        Some(_) => ("isomorphic\n".into(), 0),
        None => ("non-isomorphic\n".into(), 1),
    })
}

fn header(e: &CatalogEntry) -> Vec<String> {
    vec![
        format!("name: {}", e.name),
        format!("type: {}", e.map_type),
        format!("surface: {}", e.surface),
        format!("source: {}", e.source),
    ]
}

fn catalog(action: &CatalogAction, mode: Mode) -> Outcome {
    let mut text = String::new();
    match action {
        CatalogAction::List => {
            for e in catalog_entries() {
                let n = e.map.n_vertices();
                match mode {
                    Mode::Human => writeln!(
                        text,
                        "{:<7} {:<22} {:<12} vertices={n}",
                        e.name, e.map_type, e.surface
                    )?,
                    Mode::Tsv => writeln!(text, "{}\t{}\t{}\t{n}", e.name, e.map_type, e.surface)?,
                }
            }
        }
        CatalogAction::Show { name } => {
            let e = lookup(name)?;
            for line in header(e) {
                writeln!(text, "# {line}")?;
            }
            text.push_str(&e.map.to_text());
        }
        CatalogAction::Export { dir } => {
            fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
            for e in catalog_entries() {
                write_map(&dir.join(format!("{}.map", e.name)), &e.map, &header(e))?;
            }
            writeln!(
                text,
                "wrote {} maps to {}",
                catalog_entries().len(),
                dir.display()
            )?;
        }
    }
    Ok((text, 0))
}
