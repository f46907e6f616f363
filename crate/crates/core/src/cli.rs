//! Command line interface.
//!
//! Exit codes: 0 success, 1 semantic negative (invalid design, no expansion
//! set, no design within the block limit, unsatisfiable construction), 2
//! usage or parse errors, 3 search budget exhausted.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{change_bound, BoundQuery};
use crate::construct::{
    adjoin_point, base_family, base_family_61, catalog, csccd_consecutive, develop, double_points,
};
use crate::cost::{full_swap_cost, sequential_cost, CostParams};
use crate::design::Design;
use crate::document::{render_table, DesignDocument};
use crate::error::Error;
use crate::expansion::{expand_with_circle_method, find_expansion_set};
use crate::factorization::{circle_method, verify_factorization};
use crate::search::{exhaustive_min_blocks, SearchLimits, BUDGET_ENV};
use crate::verify::{classify, coverage, verify_m_change};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dccd", version, about = "Double change covering designs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the lower bound on the number of blocks.
    Bounds {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 2)]
        t: u64,
        #[arg(long)]
        circular: bool,
    },
    /// Classify a design document ("-" reads standard input).
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        strength: usize,
    },
    /// Build a design and write it to standard output.
    Construct(ConstructArgs),
    /// Find an expansion set of a design.
    ExpansionSet { file: PathBuf },
    /// Cost a design as a sequence of tests.
    Cost {
        file: PathBuf,
        #[arg(long)]
        test_cost: u64,
        #[arg(long)]
        change_cost: u64,
        /// Replace every component before each test instead of swapping.
        #[arg(long)]
        full_swap: bool,
        #[arg(long)]
        no_initial_load: bool,
    },
    /// Search for a design with the fewest blocks.
    SearchMin {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b_max: usize,
        #[arg(long)]
        circular: bool,
        /// Allow instances above the default size limits.
        #[arg(long)]
        allow_large: bool,
        /// Node budget; defaults to the DCCD_SEARCH_BUDGET environment variable.
        #[arg(long, env = BUDGET_ENV)]
        budget: Option<u64>,
    },
    /// Print a 1-factorization of K_n.
    Factorize {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    /// Blocks as columns with introduced points starred.
    Table,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub what: Construction,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// Develop a base block family.
    DiffFamily {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
    },
    /// Develop the six-block family over Z_61.
    #[command(name = "diff-61")]
    Diff61,
    /// Consecutive-block circular single change design on 2k'-1 points.
    Csccd {
        #[arg(long)]
        kprime: usize,
    },
    /// Doubled consecutive-block design, tight CDCCD(4k'-2, 2k', 2k'-1).
    Double {
        #[arg(long)]
        kprime: usize,
    },
    /// Doubled consecutive-block design with one point adjoined.
    Adjoin {
        #[arg(long)]
        kprime: usize,
    },
    /// Expand a design through its expansion set.
    Expand { file: PathBuf },
    /// A named design from the catalog.
    Catalog { name: String },
}

type Outcome = Result<i32, Error>;

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Bounds { v, k, t, circular } => bounds(v, k, t, circular, out),
        Command::Verify { file, m, strength } => verify(&file, m, strength, out),
        Command::Construct(args) => construct(args, out),
        Command::ExpansionSet { file } => expansion_set(&file, out),
        Command::Cost { file, test_cost, change_cost, full_swap, no_initial_load } => {
            let p = CostParams { test_cost, change_cost, count_initial_load: !no_initial_load };
            cost(&file, p, full_swap, out)
        }
        Command::SearchMin { v, k, b_max, circular, allow_large, budget } => {
            let mut limits = SearchLimits { allow_large, ..SearchLimits::default() };
            if let Some(b) = budget {
                limits.node_budget = b;
            }
            search_min(v, k, b_max, circular, limits, out)
        }
        Command::Factorize { n } => factorize(n, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) | Error::Parameter(_) | Error::UnknownCatalogName { .. } => EXIT_USAGE,
                Error::SearchRefused(_) => EXIT_USAGE,
                Error::SearchBudgetExceeded { .. } => EXIT_BUDGET,
                Error::Structural(_) => EXIT_NEGATIVE,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(e.to_string())
}

fn read_document(path: &Path) -> Result<DesignDocument, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    DesignDocument::parse(&text)
}

fn bounds(v: u64, k: u64, t: u64, circular: bool, out: &mut dyn Write) -> Outcome {
    let q = BoundQuery::new(v, k, t)?;
    let g = change_bound(q, 2, circular)?;
    writeln!(out, "{}", g.value).map_err(io)?;
    Ok(EXIT_OK)
}

fn verify(path: &Path, m: usize, strength: usize, out: &mut dyn Write) -> Outcome {
    let doc = read_document(path)?;
    let d = &doc.design;
    let change = verify_m_change(d, m)?;
    let ledger = coverage(d, strength)?;
    let c = classify(d);
    let kind = if d.is_circular() { "circular" } else { "linear" };
    let mut w = |s: String| writeln!(out, "{s}").map_err(io);
    w(format!("design: {kind}, v={}, k={}, b={}", d.v(), d.k(), d.b()))?;
    match &change.first_failure {
        None => w(format!("{m}-change: ok"))?,
        Some(f) => w(format!(
            "{m}-change: FAILED at gap {} (blocks share {} points, expected {})",
            f.gap, f.intersection, f.expected
        ))?,
    }
    w(format!(
        "coverage (t={strength}): {} of {} covered, max multiplicity {}",
        ledger.len() - ledger.uncovered_count(),
        ledger.len(),
        ledger.max_multiplicity()
    ))?;
    if let Some(g) = c.bound {
        w(format!("bound: {}{}", g.value, if g.exact { " (exact)" } else { "" }))?;
    }
    w(format!("economical: {}", c.economical))?;
    w(format!("tight: {}", c.tight))?;
    Ok(if change.is_ok() && ledger.covers_all() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn emit(doc: DesignDocument, format: Format, out: &mut dyn Write) -> Outcome {
    // emit-or-fail: the design must verify before it is written
    let c = classify(&doc.design);
    if c.change.is_none() || !c.is_m_change[c.change.unwrap_or(1) - 1] || !c.covers_all {
        return Err(Error::structural("constructed design failed verification"));
    }
    let text = match format {
        Format::Json => doc.to_json(),
        Format::Table => render_table(&doc.design),
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn construct(args: ConstructArgs, out: &mut dyn Write) -> Outcome {
    let doc = match args.what {
        Construction::DiffFamily { k, c } => {
            let d = develop(&base_family(k, c)?)?;
            named(d, "cdccd", format!("develop(base_family(k={k}, c={c}))"))
        }
        Construction::Diff61 => named(develop(&base_family_61())?, "cdccd", "develop(base_family_61())"),
        Construction::Csccd { kprime } => {
            named(csccd_consecutive(kprime)?, "csccd", format!("csccd_consecutive({kprime})"))
        }
        Construction::Double { kprime } => {
            let d = double_points(&csccd_consecutive(kprime)?)?;
            named(d, "cdccd", format!("double_points(csccd_consecutive({kprime}))"))
        }
        Construction::Adjoin { kprime } => {
            let d = adjoin_point(&double_points(&csccd_consecutive(kprime)?)?)?;
            named(d, "cdccd", format!("adjoin_point(double_points(csccd_consecutive({kprime})))"))
        }
        Construction::Expand { file } => {
            let input = read_document(&file)?;
            let d = expand_with_circle_method(&input.design)?;
            let prefix = if d.is_circular() { "cdccd" } else { "dccd" };
            let source = input.name.unwrap_or_else(|| file.display().to_string());
            named(d, prefix, format!("expand({source})"))
        }
        Construction::Catalog { name } => {
            let e = catalog(&name)?;
            DesignDocument::named(e.design, e.name, e.provenance)
        }
    };
    emit(doc, args.format, out)
}

fn named(d: Design, prefix: &str, provenance: impl Into<String>) -> DesignDocument {
    let name = format!("{prefix}-{}-{}-{}", d.v(), d.k(), d.b());
    DesignDocument::named(d, name, provenance)
}

fn expansion_set(path: &Path, out: &mut dyn Write) -> Outcome {
    let doc = read_document(path)?;
    match find_expansion_set(&doc.design)? {
        None => {
            writeln!(out, "no expansion set").map_err(io)?;
            Ok(EXIT_NEGATIVE)
        }
        Some(e) => {
            writeln!(out, "expansion set of size {}", e.len()).map_err(io)?;
            for (loc, part) in e.parts() {
                let pts: Vec<String> = part.iter().map(ToString::to_string).collect();
                writeln!(out, "U_{loc} = {{{}}}", pts.join(", ")).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn cost(path: &Path, p: CostParams, full_swap: bool, out: &mut dyn Write) -> Outcome {
    let d = read_document(path)?.design;
    let r = if full_swap {
        full_swap_cost(d.b() as u64, d.k() as u64, p)?
    } else {
        sequential_cost(&d, p)
    };
    writeln!(out, "tests: {}", r.tests).map_err(io)?;
    writeln!(out, "changes: {}", r.changes).map_err(io)?;
    writeln!(out, "total: {}", r.total).map_err(io)?;
    Ok(EXIT_OK)
}

fn search_min(
    v: usize,
    k: usize,
    b_max: usize,
    circular: bool,
    limits: SearchLimits,
    out: &mut dyn Write,
) -> Outcome {
    match exhaustive_min_blocks(v, k, circular, b_max, limits)? {
        Some(d) => {
            let prefix = if circular { "cdccd" } else { "dccd" };
            emit(named(d, prefix, format!("search-min(v={v}, k={k})")), Format::Json, out)
        }
        None => {
            writeln!(out, "no design with at most {b_max} blocks").map_err(io)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn factorize(n: usize, out: &mut dyn Write) -> Outcome {
    let f = circle_method(n)?;
    if let Err(v) = verify_factorization(&f) {
        return Err(Error::structural(v.to_string()));
    }
    for (j, factor) in f.factors().iter().enumerate() {
        let edges: Vec<String> = factor.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        writeln!(out, "F{j}: {}", edges.join(" ")).map_err(io)?;
    }
    Ok(EXIT_OK)
}
