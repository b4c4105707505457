//! The `gcdpairs` command line.
//!
//! Exit codes: 0 success, 1 negative `check` verdict, 2 usage or I/O error,
//! 3 a count or verification mismatch.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::graph::{self, ExactBounds, GcdGraph, HamiltonianCycle, MAX_EXACT_ENV};
use crate::numtheory::{gcd, prime_power_decompose};
use crate::oracle;
use crate::pairs::{self, CountResult, PairSetLabel, SCHEMA_VERSION};
use crate::verify::{self, VerifyOptions};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

const BOUNDS_HELP: &str = concat!(
    "Exact searches are limited by n: maximum clique n <= 64, chromatic number n <= 16, ",
    "exhaustive cycle search n <= 15. Set GCDPAIRS_MAX_EXACT to one integer for all three, ",
    "or to a list such as \"clique=80,chromatic=14,cycle=12\". Beyond a limit the value is ",
    "reported as null with a note instead of being approximated.\n\n",
    "Brute-force oracle limits used by verify: clique n <= 26, chromatic n <= 12, ",
    "cycles n <= 15, domination n <= 20."
);

#[derive(Debug, Parser)]
#[command(
    name = "gcdpairs",
    version,
    about = "gcd-pairs of Z_n and the graphs G_n",
    after_help = BOUNDS_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the gcd-pairs of Z_n, one `{a,b}` per line.
    List {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// all, units, zero-divisors, or a comma-separated list of residues.
        #[arg(long, default_value = "all")]
        subset: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether {a mod n, b mod n} is a gcd-pair (exit 0 yes, 1 no).
    Check {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Count gcd-pairs by enumeration and by closed forms.
    Count {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Build G_n; optionally analyze it and export DOT.
    #[command(after_help = BOUNDS_HELP)]
    Graph {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=1 << 16))]
        n: u64,
        /// Compute connectivity, domination, cycles, clique and chromatic numbers, planarity.
        #[arg(long)]
        analyze: bool,
        /// Write the graph in DOT format to PATH ("-" for standard output).
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check every claim against brute force and print a report.
    #[command(after_help = BOUNDS_HELP)]
    Verify {
        /// Cap the largest n any claim is checked at.
        #[arg(long)]
        max_n: Option<u64>,
        /// Only claims whose id starts with this (repeatable).
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
        /// List claim ids and exit.
        #[arg(long)]
        list_claims: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enumerate,
    Formula,
    Both,
}

/// Invariants reported by `graph --analyze`. `None` means the exact search
/// was skipped because n is above its limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub connected: bool,
    pub gamma: usize,
    pub triangle: Option<Vec<usize>>,
    pub traceable: bool,
    pub hamiltonian: bool,
    pub clique_number: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub planar: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub schema_version: u32,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
}

/// Enumerated and closed-form counts for one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub schema_version: u32,
    pub n: u64,
    /// |ν_n| and |ν_{n,Z(Z_n)}| by enumeration.
    pub enumerated: Option<[u64; 2]>,
    /// Closed forms for |ν_n|; empty when none applies.
    pub formula_pairs: Option<Vec<CountResult>>,
    /// Closed forms for |ν_{n,Z(Z_n)}|.
    pub formula_zero_divisor_pairs: Option<Vec<CountResult>>,
    pub mismatches: Vec<String>,
}

/// Parses `args` (including the program name) and runs the command,
/// writing to `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let bounds = match ExactBounds::from_env() {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: invalid {MAX_EXACT_ENV}: {e}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, &bounds, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = std::result::Result<i32, CliError>;

/// Runs an already parsed command with the given search limits.
fn execute(command: Command, bounds: &ExactBounds, out: &mut dyn Write) -> CliResult {
    match command {
        Command::List { n, subset, json } => cmd_list(n, &subset, json, out),
        Command::Check { n, a, b } => cmd_check(n, a, b, out),
        Command::Count { n, method, json } => cmd_count(n, method, json, out),
        Command::Graph {
            n,
            analyze,
            dot,
            json,
        } => cmd_graph(n as usize, analyze, dot, json, bounds, out),
        Command::Verify {
            max_n,
            claims,
            list_claims,
            json,
        } => cmd_verify(max_n, claims, list_claims, json, bounds, out),
    }
}

fn parse_subset(n: u64, text: &str) -> std::result::Result<Option<Vec<u64>>, CliError> {
    let members = match text {
        "all" => return Ok(None),
        // Z_1 = {0} has neither units nor zero divisors in the sense used here
        "units" | "zero-divisors" if n == 1 => Vec::new(),
        "units" => pairs::classify_elements(n)?.units,
        "zero-divisors" => pairs::classify_elements(n)?.zero_divisors,
        list => {
            let mut v = Vec::new();
            for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let x: u64 = token
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid subset element {token:?}")))?;
                if x >= n {
                    return Err(Error::ResidueOutOfRange { n, value: x }.into());
                }
                v.push(x);
            }
            v.sort_unstable();
            v.dedup();
            v
        }
    };
    Ok(Some(members))
}

fn cmd_list(n: u64, subset: &str, json: bool, out: &mut dyn Write) -> CliResult {
    let members = parse_subset(n, subset)?;
    let mask: Option<Vec<bool>> = members.as_ref().map(|m| {
        let mut mask = vec![false; n as usize];
        for &x in m {
            mask[x as usize] = true;
        }
        mask
    });
    let keep = |a: u64, b: u64| mask.as_ref().is_none_or(|m| m[a as usize] && m[b as usize]);
    let mut w = io::BufWriter::new(out);
    let mut count = 0u64;
    let mut failure: Option<io::Error> = None;

    if json {
        // streamed in the exact layout serde produces for a PairSet
        let label = match &members {
            None => PairSetLabel::Full,
            Some(m) => PairSetLabel::Restricted(m.clone()),
        };
        write!(
            w,
            "{{\"schema_version\":{SCHEMA_VERSION},\"n\":{n},\"label\":{},\"pairs\":[",
            serde_json::to_string(&label)?
        )?;
        pairs::for_each_pair(n, |a, b| {
            if failure.is_none() && keep(a, b) {
                let sep = if count == 0 { "" } else { "," };
                if let Err(e) = write!(w, "{sep}[{a},{b}]") {
                    failure = Some(e);
                }
                count += 1;
            }
        });
        if let Some(e) = failure {
            return Err(e.into());
        }
        writeln!(w, "]}}")?;
    } else {
        pairs::for_each_pair(n, |a, b| {
            if failure.is_none() && keep(a, b) {
                if let Err(e) = writeln!(w, "{{{a},{b}}}") {
                    failure = Some(e);
                }
                count += 1;
            }
        });
        if let Some(e) = failure {
            return Err(e.into());
        }
        writeln!(w, "The number of gcd-pairs is {count}")?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

fn cmd_check(n: u64, x: i64, y: i64, out: &mut dyn Write) -> CliResult {
    let a = pairs::canonical_residue(n, x)?;
    let b = pairs::canonical_residue(n, y)?;
    let (a, b) = (a.min(b), a.max(b));
    let g = gcd(a, b);
    if pairs::is_gcd_pair(n, x, y)? {
        writeln!(
            out,
            "yes: {{{a},{b}}} is a gcd-pair in Z_{n} (gcd {g} divides {n})"
        )?;
        Ok(EXIT_OK)
    } else {
        writeln!(
            out,
            "no: {{{a},{b}}} is not a gcd-pair in Z_{n} (gcd {g} does not divide {n})"
        )?;
        Ok(EXIT_NO)
    }
}

fn count_report(n: u64, method: Method) -> crate::Result<CountReport> {
    let enumerated = match method {
        Method::Formula => None,
        _ => {
            let zd = if n >= 2 {
                pairs::count_zero_divisor_pairs(n)?
            } else {
                0
            };
            Some([pairs::count_pairs(n), zd])
        }
    };
    let (formula_pairs, formula_zd) = match method {
        Method::Enumerate => (None, None),
        _ => {
            let mut full = Vec::new();
            if n >= 2 {
                if let Some(pp) = prime_power_decompose(n) {
                    full.push(pairs::count_prime_power_formula(pp));
                } else {
                    full.push(pairs::composite_lower_bound(n)?);
                }
            }
            let zd = if n >= 2 {
                pairs::zero_divisor_formulas(n)?
            } else {
                Vec::new()
            };
            (Some(full), Some(zd))
        }
    };
    let mut mismatches = Vec::new();
    if let (Some([full, zd]), Some(ff), Some(fz)) = (enumerated, &formula_pairs, &formula_zd) {
        for (label, actual, results) in [("nu_n", full, ff), ("nu_n,Z", zd, fz)] {
            for r in results.iter().filter(|r| !r.admits(actual)) {
                mismatches.push(format!(
                    "{label}: {} {} ({}) but enumeration gives {actual}",
                    r.kind, r.value, r.provenance
                ));
            }
        }
    }
    Ok(CountReport {
        schema_version: SCHEMA_VERSION,
        n,
        enumerated,
        formula_pairs,
        formula_zero_divisor_pairs: formula_zd,
        mismatches,
    })
}

fn write_formula_lines(
    out: &mut dyn Write,
    label: &str,
    results: &[CountResult],
) -> io::Result<()> {
    if !results.iter().any(|r| r.kind == pairs::CountKind::Exact) {
        writeln!(out, "formula    {label:<8} exact unavailable")?;
    }
    for r in results {
        writeln!(
            out,
            "formula    {label:<8} {} {} ({})",
            r.kind, r.value, r.provenance
        )?;
    }
    Ok(())
}

fn cmd_count(n: u64, method: Method, json: bool, out: &mut dyn Write) -> CliResult {
    let report = count_report(n, method)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "n = {n}")?;
        if let Some([full, zd]) = report.enumerated {
            writeln!(out, "enumerate  {:<8} {full}", "nu_n")?;
            writeln!(out, "enumerate  {:<8} {zd}", "nu_n,Z")?;
        }
        if let Some(ff) = &report.formula_pairs {
            write_formula_lines(out, "nu_n", ff)?;
        }
        if let Some(fz) = &report.formula_zero_divisor_pairs {
            write_formula_lines(out, "nu_n,Z", fz)?;
        }
        for m in &report.mismatches {
            writeln!(out, "mismatch: {m}")?;
        }
    }
    Ok(if report.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

/// Every invariant of G_n, with exact searches skipped beyond `bounds`.
pub fn analyze(g: &GcdGraph, bounds: &ExactBounds) -> crate::Result<Invariants> {
    let n = g.n();
    let mut notes = Vec::new();
    let gamma = if n >= 2 {
        graph::domination_number(g)?.0
    } else {
        1
    };
    let traceable = n == 1 || graph::hamiltonian_path(g).is_ok();
    let hamiltonian =
        n >= 2 && matches!(graph::hamiltonian_cycle(g)?, HamiltonianCycle::Found { .. });
    let clique_number = match graph::max_clique(g, bounds) {
        Ok(w) => Some(w.order()),
        Err(e @ Error::BoundExceeded { .. }) => {
            notes.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let chromatic_number = match graph::chromatic_number(g, bounds) {
        Ok(w) => Some(w.color_count),
        Err(e @ Error::BoundExceeded { .. }) => {
            notes.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    Ok(Invariants {
        connected: graph::is_connected(g),
        gamma,
        triangle: graph::has_triangle(g).map(|w| w.vertices),
        traceable,
        hamiltonian,
        clique_number,
        chromatic_number,
        planar: graph::is_planar(g),
        notes,
    })
}

fn graph_report(g: &GcdGraph, invariants: Option<Invariants>) -> GraphReport {
    GraphReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        edges: g.simple_edges().map(|(a, b)| [a, b]).collect(),
        loops: g.loops().to_vec(),
        invariants,
    }
}

fn opt_text(v: Option<usize>) -> String {
    v.map_or_else(|| "null".to_string(), |x| x.to_string())
}

fn cmd_graph(
    n: usize,
    analyze_flag: bool,
    dot: Option<PathBuf>,
    json: bool,
    bounds: &ExactBounds,
    out: &mut dyn Write,
) -> CliResult {
    let g = graph::build(n)?;
    if let Some(path) = &dot {
        let text = graph::export_dot(&g);
        if path.as_os_str() == "-" {
            out.write_all(text.as_bytes())?;
        } else {
            std::fs::write(path, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let invariants = if analyze_flag {
        Some(analyze(&g, bounds)?)
    } else {
        None
    };
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&graph_report(&g, invariants))?
        )?;
        return Ok(EXIT_OK);
    }
    let to_stdout = dot.as_ref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout || invariants.is_some() {
        writeln!(
            out,
            "G_{n}: {n} vertices, {} edges, {} loops",
            g.edge_count(),
            g.loops().len()
        )?;
    }
    if let Some(inv) = invariants {
        let triangle = inv.triangle.as_ref().map_or_else(
            || "none".to_string(),
            |t| {
                format!(
                    "({})",
                    t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                )
            },
        );
        writeln!(out, "connected: {}", inv.connected)?;
        writeln!(out, "gamma: {}", inv.gamma)?;
        writeln!(out, "triangle: {triangle}")?;
        writeln!(out, "traceable: {}", inv.traceable)?;
        writeln!(out, "hamiltonian: {}", inv.hamiltonian)?;
        writeln!(out, "clique_number: {}", opt_text(inv.clique_number))?;
        writeln!(out, "chromatic_number: {}", opt_text(inv.chromatic_number))?;
        writeln!(out, "planar: {}", inv.planar)?;
        for note in &inv.notes {
            writeln!(out, "note: {note}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    max_n: Option<u64>,
    claims: Vec<String>,
    list_claims: bool,
    json: bool,
    bounds: &ExactBounds,
    out: &mut dyn Write,
) -> CliResult {
    if list_claims {
        for id in verify::claim_ids() {
            writeln!(out, "{id}")?;
        }
        return Ok(EXIT_OK);
    }
    let opts = VerifyOptions {
        max_n,
        claims,
        bounds: *bounds,
    };
    let report = verify::run(&opts)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        out.write_all(report.to_text().as_bytes())?;
    }
    Ok(if report.has_failures() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

/// Limits of the brute-force oracle, as reported in the help text.
pub fn oracle_limits() -> [(&'static str, usize); 4] {
    [
        ("clique", oracle::CLIQUE_LIMIT),
        ("chromatic", oracle::CHROMATIC_LIMIT),
        ("cycle", oracle::HAMILTONIAN_LIMIT),
        ("domination", oracle::DOMINATION_LIMIT),
    ]
}
