use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "naples",
    version,
    about = "Simulate, map, enumerate and count classical, k-Naples and obstructed parking functions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads for enumeration and verification.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParkRule {
    Classical,
    Naples,
    Obstructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapOp {
    Phi,
    PhiBar,
    Iota,
    Xi,
    XiInv,
    XiBar,
    #[value(name = "psi")]
    PsiSmall,
    #[value(name = "Psi")]
    PsiBig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pf,
    Naples,
    Contained,
    Opf,
    Lpf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Classical,
    Contained,
    Lpf,
    NaplesRecursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    Bijection,
    Ties,
    Injection,
    Recursion,
    LpfCount,
    Bound,
}

/// Default cap on `N^m` candidate sequences for exhaustive work.
pub const DEFAULT_MAX_CANDIDATES: u128 = 100_000_000;

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Park one preference sequence and report every car.
    Park {
        #[arg(long, value_enum)]
        family: ParkRule,
        /// Free vertices.
        #[arg(long)]
        n: usize,
        /// Backup limit (naples) or obstruction length (obstructed).
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// First obstructed vertex; defaults to 1.
        #[arg(long)]
        obstruction_start: Option<usize>,
        #[arg(long, value_parser = parse_prefs)]
        prefs: Prefs,
    },
    /// Apply a reflection, shift, bijection or involution.
    Map {
        #[arg(long, value_enum)]
        op: MapOp,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// First obstructed vertex for phi-bar; defaults to 1.
        #[arg(long)]
        obstruction_start: Option<usize>,
        #[arg(long, value_parser = parse_prefs)]
        prefs: Prefs,
    },
    /// Split a k-Naples parking function into its k-decomposition.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_parser = parse_prefs)]
        prefs: Prefs,
    },
    /// Count ascents, descents and ties of a sequence.
    Stats {
        #[arg(long, value_parser = parse_prefs)]
        prefs: Prefs,
    },
    /// List the members of a family in lexicographic order.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Number of cars; defaults to n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        obstruction_start: Option<usize>,
        /// Stop after this many members.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
    },
    /// Evaluate a closed-form count or the counting recursion.
    Count {
        #[arg(long, value_enum)]
        formula: Formula,
        /// Number of cars for the classical formula; defaults to n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
    },
    /// Check a counting identity exhaustively and print a report.
    Verify {
        #[arg(long, value_enum)]
        claim: ClaimArg,
        /// Number of cars; defaults to n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefs(pub Vec<usize>);

/// Comma-separated positive integers. Whitespace and one pair of enclosing
/// brackets or parentheses are ignored, so JSON and plain output can be fed
/// back in.
pub fn parse_prefs(raw: &str) -> Result<Prefs, String> {
    let mut body = raw.trim();
    for (open, close) in [('[', ']'), ('(', ')')] {
        if let Some(inner) = body.strip_prefix(open).and_then(|b| b.strip_suffix(close)) {
            body = inner.trim();
            break;
        }
    }
    if body.is_empty() {
        return Ok(Prefs(Vec::new()));
    }
    body.split(',')
        .map(|item| {
            let item = item.trim();
            match item.parse::<usize>() {
                Ok(0) => Err("preferences are 1-based; got 0".to_string()),
                Ok(p) => Ok(p),
                Err(_) => Err(format!("`{item}` is not a positive integer")),
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Prefs)
}
