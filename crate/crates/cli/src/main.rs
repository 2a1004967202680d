use std::fmt;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use demazure_core::demazure::{
    atom_via_operators, atom_via_ssaf, atom_via_theta, enumerate_pb, key_poly_via_atoms,
    key_poly_via_operators, key_poly_via_pb, right_key,
};
use demazure_core::ssaf::{enumerate_ssaf, e_poly, validate_filling, TripleReport};
use demazure_core::tableaux::crystal_graph;
use demazure_core::verify;
use demazure_core::{Partition, Permutation, Polynomial};

mod parse;
mod render;

/// Exit status 2: the input could not be used.
/// Exit status 1: the computation ran but a check failed.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<demazure_core::Error> for CliError {
    fn from(e: demazure_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
        }
    }
}

#[derive(Parser)]
#[command(name = "demazure", version, about = "Demazure atoms, key polynomials and skyline fillings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Demazure atom of a composition, or of a permutation and a partition
    Atom {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value_t = AtomMethod::Ssaf)]
        method: AtomMethod,
        /// Compute with every method and fail if they disagree
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// E_γ(x; 0, 0) by enumerating skyline fillings
    Epoly {
        #[arg(long)]
        composition: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Key polynomial of a composition, or of a permutation and a partition
    KeyPoly {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value_t = KeyMethod::Operators)]
        method: KeyMethod,
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Right key of a semistandard tableau
    RightKey {
        /// Rows bottom-up separated by '/', e.g. 1,2,2,3/2,3,3,6/4,5
        #[arg(long)]
        rows: Option<String>,
        /// File with the tableau as JSON or as text, top row first; '-' for stdin
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Skyline augmented fillings over the basement 1..n
    Ssaf {
        #[command(subcommand)]
        action: SsafAction,
    },
    /// Fillings of partition shape over a permuted basement
    Pb {
        #[command(subcommand)]
        action: PbAction,
    },
    /// Crystal graph on the tableaux of a shape
    Crystal {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Write to this file instead of stdout
        #[arg(long)]
        output: Option<String>,
    },
    /// Run every cross-check up to the given bounds
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_size: u32,
        /// Replace theta_i by the identity on monomials with m_i <= m_{i+1}
        #[arg(long, hide = true)]
        inject_theta_mutant: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SsafAction {
    /// Every filling of a composition shape
    Enumerate {
        #[arg(long)]
        composition: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a filling given as {"shape": [...], "columns": [[...], ...]}
    Validate {
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum PbAction {
    /// Every filling of shape λ over the basement w
    Enumerate {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a filling given as {"shape", "basement", "columns"}
    Validate {
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct IndexArgs {
    /// Weak composition γ, e.g. 1,0,2
    #[arg(long, conflicts_with_all = ["perm", "shape"])]
    composition: Option<String>,
    /// Permutation in one-line notation, e.g. 3,1,2
    #[arg(long, requires = "shape")]
    perm: Option<String>,
    /// Partition λ, e.g. 2,1
    #[arg(long, requires = "perm")]
    shape: Option<String>,
    /// Number of variables
    #[arg(long)]
    vars: Option<usize>,
}

impl IndexArgs {
    /// The pair `(w, λ)`; a composition is turned into its minimal
    /// permutation and sorted parts.
    fn resolve(&self) -> Result<(Permutation, Partition), CliError> {
        match (&self.composition, &self.perm, &self.shape) {
            (Some(c), None, None) => {
                let gamma = parse::composition(c, self.vars)?;
                Ok((Permutation::of_composition(&gamma), gamma.sort_desc()))
            }
            (None, Some(p), Some(s)) => {
                let w = parse::permutation(p, self.vars)?;
                if parse::parts_needed(s)? > w.n() {
                    return Err(CliError::usage(format!("shape {s} has more parts than {} variables", w.n())));
                }
                Ok((w.clone(), parse::partition(s, w.n())?))
            }
            _ => Err(CliError::usage("give either --composition or both --perm and --shape")),
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq, Debug)]
enum AtomMethod {
    Ssaf,
    Operators,
    Theta,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq, Debug)]
enum KeyMethod {
    Operators,
    Atoms,
    Pb,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum GraphFormat {
    Dot,
    Json,
}

fn print_poly(p: &Polynomial, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
    }
}

fn atom(w: &Permutation, lam: &Partition, method: AtomMethod) -> Result<Polynomial, CliError> {
    Ok(match method {
        AtomMethod::Ssaf => atom_via_ssaf(w, lam)?,
        AtomMethod::Operators => atom_via_operators(w, lam)?,
        AtomMethod::Theta => atom_via_theta(w, lam)?,
    })
}

fn key_poly(w: &Permutation, lam: &Partition, method: KeyMethod) -> Result<Polynomial, CliError> {
    Ok(match method {
        KeyMethod::Operators => key_poly_via_operators(w, lam)?,
        KeyMethod::Atoms => key_poly_via_atoms(&w.act(lam)?),
        KeyMethod::Pb => key_poly_via_pb(lam, w)?,
    })
}

/// Runs `compute` with `chosen`, and with every method when cross-checking.
fn with_cross_check<M: Copy + fmt::Debug>(
    chosen: M,
    all: &[M],
    cross_check: bool,
    compute: impl Fn(M) -> Result<Polynomial, CliError>,
) -> Result<Polynomial, CliError> {
    let p = compute(chosen)?;
    if cross_check {
        for &m in all {
            let q = compute(m)?;
            if q != p {
                return Err(CliError::Failed(format!("methods disagree: {chosen:?} gives {p}, {m:?} gives {q}")));
            }
        }
    }
    Ok(p)
}

fn report_json(report: &TripleReport) -> serde_json::Value {
    json!({
        "valid": report.is_valid(),
        "column_violations": report.column_violations,
        "failed_triples": report.failed_triples().collect::<Vec<_>>(),
    })
}

fn print_report(report: &TripleReport, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => println!("{}", report_json(report)),
        Format::Text if report.is_valid() => println!("valid"),
        Format::Text => {
            println!("invalid");
            for c in &report.column_violations {
                println!("column {} increases upward at row {}", c.col, c.row);
            }
            for t in report.failed_triples() {
                let cells: Vec<String> = t.cells.iter().map(|c| format!("({},{})", c.row, c.col)).collect();
                println!("type {:?} triple {} with entries {:?} is not an inversion triple", t.kind, cells.join(" "), t.entries);
            }
        }
    }
    if report.is_valid() {
        Ok(())
    } else {
        Err(CliError::Failed("filling is not valid".into()))
    }
}

/// Shape and columns from a filling's JSON, checked for consistency.
fn filling_json(value: &serde_json::Value) -> Result<(Vec<u32>, Vec<Vec<u32>>), CliError> {
    let shape: Vec<u32> = serde_json::from_value(value["shape"].clone())
        .map_err(|e| CliError::usage(format!("\"shape\": {e}")))?;
    let columns: Vec<Vec<u32>> = serde_json::from_value(value["columns"].clone())
        .map_err(|e| CliError::usage(format!("\"columns\": {e}")))?;
    let heights: Vec<u32> = columns.iter().map(|c| c.len() as u32).collect();
    if heights != shape {
        return Err(CliError::usage(format!("shape {shape:?} does not match column heights {heights:?}")));
    }
    if columns.iter().flatten().any(|&x| x == 0) {
        return Err(CliError::usage("entries must be positive"));
    }
    Ok((shape, columns))
}

fn print_fillings<T: fmt::Display + serde::Serialize>(items: &[T], format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(items).expect("fillings serialize")),
        Format::Text => {
            let blocks: Vec<String> = items.iter().map(ToString::to_string).collect();
            println!("{}", blocks.join("\n\n"));
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Atom { index, method, cross_check, format } => {
            let (w, lam) = index.resolve()?;
            let all = [AtomMethod::Ssaf, AtomMethod::Operators, AtomMethod::Theta];
            let p = with_cross_check(method, &all, cross_check, |m| atom(&w, &lam, m))?;
            print_poly(&p, format);
        }
        Command::Epoly { composition, vars, format } => {
            print_poly(&e_poly(&parse::composition(&composition, vars)?), format);
        }
        Command::KeyPoly { index, method, cross_check, format } => {
            let (w, lam) = index.resolve()?;
            let all = [KeyMethod::Operators, KeyMethod::Atoms, KeyMethod::Pb];
            let p = with_cross_check(method, &all, cross_check, |m| key_poly(&w, &lam, m))?;
            print_poly(&p, format);
        }
        Command::RightKey { rows, input, format } => {
            let t = parse::tableau(rows.as_deref(), input.as_deref())?;
            let k = right_key(&t);
            match format {
                Format::Text => println!("{}\ncontent: {}", k.tableau(), k.content()),
                Format::Json => println!("{}", json!({"rows": k.tableau().rows(), "content": k.content().parts()})),
            }
        }
        Command::Ssaf { action: SsafAction::Enumerate { composition, vars, format } } => {
            print_fillings(&enumerate_ssaf(&parse::composition(&composition, vars)?), format);
        }
        Command::Ssaf { action: SsafAction::Validate { json, input, format } } => {
            let (_, columns) = filling_json(&parse::json(json.as_deref(), input.as_deref())?)?;
            let basement: Vec<u32> = (1..=columns.len() as u32).collect();
            print_report(&validate_filling(&basement, &columns), format)?;
        }
        Command::Pb { action: PbAction::Enumerate { shape, perm, format } } => {
            let w = parse::permutation(&perm, None)?;
            let lam = parse::partition(&shape, w.n())?;
            print_fillings(&enumerate_pb(&lam, &w)?, format);
        }
        Command::Pb { action: PbAction::Validate { json, input, format } } => {
            let value = parse::json(json.as_deref(), input.as_deref())?;
            let (shape, columns) = filling_json(&value)?;
            let basement: Vec<usize> = serde_json::from_value(value["basement"].clone())
                .map_err(|e| CliError::usage(format!("\"basement\": {e}")))?;
            let w = Permutation::new(basement)?;
            if w.n() != columns.len() {
                return Err(CliError::usage("basement and columns have different lengths"));
            }
            if shape.windows(2).any(|p| p[0] < p[1]) {
                return Err(CliError::Failed(format!("shape {shape:?} is not a partition")));
            }
            let entries: Vec<u32> = w.one_line().iter().map(|&x| x as u32).collect();
            print_report(&validate_filling(&entries, &columns), format)?;
        }
        Command::Crystal { shape, vars, format, output } => {
            let n = parse::resolve_n(vars, parse::parts_needed(&shape)?)?;
            let lam = parse::partition(&shape, n)?;
            let graph = crystal_graph(&lam, n as u32);
            let text = match format {
                GraphFormat::Dot => render::dot(&graph),
                GraphFormat::Json => render::graph_json(&graph, n),
            };
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| CliError::usage(format!("writing {path}: {e}")))?,
                None => print!("{text}"),
            }
        }
        Command::Verify { max_n, max_size, inject_theta_mutant, format } => {
            let mut reports = verify::run_all(max_n, max_size);
            if inject_theta_mutant {
                reports[0] = verify::sweep_atoms_with_theta(
                    "atoms with mutant theta",
                    max_n,
                    max_size,
                    verify::theta_identity_mutant,
                );
            }
            match format {
                Format::Text => reports.iter().for_each(|r| println!("{r}")),
                Format::Json => println!("{}", serde_json::to_string(&reports).expect("reports serialize")),
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(CliError::Failed(format!("{failed} of {} checks failed", reports.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("demazure: {e}");
            match e {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Failed(_) => ExitCode::from(1),
            }
        }
    }
}
