//! Command-line surface for the family catalog.
//!
//! Exit codes: 0 on success, 2 on usage or domain errors (bad entry
//! number, malformed rationals, mismatched vector lengths), 3 on I/O
//! failures.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fano95_cli::record::{build_database, to_canonical_json, FamilyRecord};
use fano95_core::search::{classify_all, fibration_targets, find_chains, has_elliptic_fibration};
use fano95_core::{
    enumerate_families, triple_product, DivisorClass, FanoFamily, Rational, TowerContext,
    DEFAULT_DEGREE_BOUND,
};

#[derive(Parser)]
#[command(
    name = "fano95",
    version,
    about = "Catalog of the 95 families of quasismooth terminal Fano weighted hypersurface threefolds",
    long_about = "Enumerates the 95 families of quasismooth terminal Fano hypersurfaces in \
                  P(1,a1,a2,a3,a4), their singularity baskets, the blow-up chains that drive \
                  -K^3 to zero (the elliptic-fibration criterion), and exact triple \
                  intersection products on the resulting towers.  Everything is computed in \
                  exact rational arithmetic.  Set FANO95_DMAX to change the enumeration degree \
                  bound (default 100)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full catalog
    List {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Weights, -K^3, basket, chains, and fibration data of one family
    Show { n: u32 },
    /// Singular points of a general member of family N
    Basket { n: u32 },
    /// Zero-chains and recorded fibration bases of family N
    Fibrations { n: u32 },
    /// Partition the 95 entries by chain and fibration existence
    Classify,
    /// Evaluate a triple product of divisor classes on a blow-up tower
    Triple {
        /// Triple self-intersection of the base class, e.g. 7/60
        #[arg(long)]
        d0cube: String,
        /// Comma-separated E^3 of each exceptional class, e.g. 25/6,4
        #[arg(long, default_value = "")]
        ecubes: String,
        /// Coefficients of the first class: c0,c1,...,ck
        #[arg(long)]
        a: String,
        /// Coefficients of the second class
        #[arg(long)]
        b: String,
        /// Coefficients of the third class
        #[arg(long)]
        c: String,
    },
    /// Write the family database as JSON
    Export { path: std::path::PathBuf },
}

struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        CmdError {
            code: 2,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        CmdError {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe closes (`fano95 list | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn degree_bound() -> Result<u32, CmdError> {
    match std::env::var("FANO95_DMAX") {
        Ok(text) => text
            .trim()
            .parse::<u32>()
            .map_err(|_| CmdError::usage(format!("FANO95_DMAX must be a positive integer, got `{text}`"))),
        Err(_) => Ok(DEFAULT_DEGREE_BOUND),
    }
}

fn families() -> Result<Vec<FanoFamily>, CmdError> {
    Ok(enumerate_families(degree_bound()?))
}

fn family(n: u32) -> Result<FanoFamily, CmdError> {
    let families = families()?;
    families
        .iter()
        .find(|f| f.n() == n)
        .cloned()
        .ok_or_else(|| CmdError::usage(format!("entry number {n} is out of range (1..={})", families.len())))
}

fn run(command: Command) -> Result<(), CmdError> {
    match command {
        Command::List { format } => list(format),
        Command::Show { n } => show(n),
        Command::Basket { n } => basket(n),
        Command::Fibrations { n } => fibrations(n),
        Command::Classify => classify(),
        Command::Triple {
            d0cube,
            ecubes,
            a,
            b,
            c,
        } => triple(&d0cube, &ecubes, &a, &b, &c),
        Command::Export { path } => export(&path),
    }
}

fn basket_text(f: &FanoFamily) -> String {
    if f.basket().is_empty() {
        return "none".to_string();
    }
    let mut text = String::new();
    for (i, (s, count)) in f.basket().iter().enumerate() {
        if i > 0 {
            text.push_str("; ");
        }
        let _ = write!(text, "{s}x{count}");
    }
    text
}

fn list(format: Format) -> Result<(), CmdError> {
    let families = families()?;
    match format {
        Format::Json => {
            let records: Vec<FamilyRecord> =
                families.iter().map(FamilyRecord::from_family).collect();
            print!("{}", to_canonical_json(&records));
        }
        Format::Csv => {
            println!("n,weights,degree,kcube,basket,has_fibration");
            for f in &families {
                let weights = f
                    .weights()
                    .coordinate_weights()
                    .map(|w| w.to_string())
                    .join(" ");
                println!(
                    "{},{},{},{},\"{}\",{}",
                    f.n(),
                    weights,
                    f.weights().degree(),
                    f.kcube(),
                    basket_text(f),
                    has_elliptic_fibration(f)
                );
            }
        }
        Format::Table => {
            println!(
                "{:>3}  {:<16} {:>3}  {:>8}  {:<44} fibration",
                "n", "ambient", "d", "-K^3", "basket"
            );
            for f in &families {
                println!(
                    "{:>3}  {:<16} {:>3}  {:>8}  {:<44} {}",
                    f.n(),
                    f.weights().to_string(),
                    f.weights().degree(),
                    f.kcube().to_string(),
                    basket_text(f),
                    if has_elliptic_fibration(f) { "yes" } else { "no" }
                );
            }
        }
    }
    Ok(())
}

fn show(n: u32) -> Result<(), CmdError> {
    let f = family(n)?;
    println!(
        "entry {}: general hypersurface of degree {} in {}",
        f.n(),
        f.weights().degree(),
        f.weights()
    );
    println!("-K^3 = {}", f.kcube());
    println!("basket: {}", basket_text(&f));
    print_chains(&f);
    print_targets(&f);
    println!(
        "elliptic fibration: {}",
        if has_elliptic_fibration(&f) { "yes" } else { "no" }
    );
    Ok(())
}

fn basket(n: u32) -> Result<(), CmdError> {
    let f = family(n)?;
    if f.basket().is_empty() {
        println!("entry {n}: general member is smooth");
        return Ok(());
    }
    for (s, count) in f.basket().iter() {
        println!("{s} x{count}");
    }
    Ok(())
}

fn print_chains(f: &FanoFamily) {
    let chains = find_chains(f);
    if chains.is_empty() {
        println!("no chains");
        return;
    }
    println!("zero-chains ({}):", chains.len());
    for chain in &chains {
        println!("  {chain}");
    }
}

fn print_targets(f: &FanoFamily) {
    let targets = fibration_targets(f);
    if targets.is_empty() {
        println!("targets: none");
        return;
    }
    let text: Vec<String> = targets
        .iter()
        .map(|t| format!("P({},{},{})", t[0], t[1], t[2]))
        .collect();
    println!("targets: {}", text.join(", "));
}

fn fibrations(n: u32) -> Result<(), CmdError> {
    let f = family(n)?;
    print_chains(&f);
    print_targets(&f);
    Ok(())
}

fn classify() -> Result<(), CmdError> {
    let families = families()?;
    let classification = classify_all(&families);
    let join = |entries: &[u32]| {
        entries
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("families: {}", families.len());
    println!(
        "without zero-chain: {}",
        join(&classification.no_chain)
    );
    println!(
        "without elliptic fibration: {}",
        join(&classification.no_fibration)
    );
    Ok(())
}

fn parse_rational(text: &str) -> Result<Rational, CmdError> {
    text.parse::<Rational>()
        .map_err(|_| CmdError::usage(format!("`{text}` is not a rational (expected num or num/den)")))
}

fn parse_vector(text: &str) -> Result<Vec<Rational>, CmdError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(|part| parse_rational(part.trim())).collect()
}

fn triple(d0cube: &str, ecubes: &str, a: &str, b: &str, c: &str) -> Result<(), CmdError> {
    let ctx = TowerContext::new(parse_rational(d0cube)?, parse_vector(ecubes)?);
    let mut classes = Vec::new();
    for (name, text) in [("a", a), ("b", b), ("c", c)] {
        let coeffs = parse_vector(text)?;
        let class = DivisorClass::from_coefficients(&coeffs)
            .ok_or_else(|| CmdError::usage(format!("--{name} needs at least the D0 coefficient")))?;
        if class.c.len() + 1 != ctx.rank() {
            return Err(CmdError::usage(format!(
                "--{name} has {} coefficients but the tower has rank {} (1 + {} exceptionals)",
                class.c.len() + 1,
                ctx.rank(),
                ctx.rank() - 1,
            )));
        }
        classes.push(class);
    }
    let value = triple_product(&classes[0], &classes[1], &classes[2], &ctx)
        .expect("lengths checked above");
    println!("{value}");
    Ok(())
}

fn export(path: &std::path::Path) -> Result<(), CmdError> {
    let records = build_database(degree_bound()?);
    let text = to_canonical_json(&records);
    std::fs::write(path, text)
        .map_err(|e| CmdError::io(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {} records to {}", records.len(), path.display());
    Ok(())
}
