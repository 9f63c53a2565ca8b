//! Command-line front end for the weylham library: ingest root systems,
//! build reflection graphs, search and verify Hamiltonian cycles, compute
//! adjacency spectra, count base classes, and run the alternating-group
//! mode.
//!
//! Exit codes: 0 success/accept, 1 reject or nothing found, 2 usage error,
//! 3 internal invariant violation. Results go to stdout, diagnostics to
//! stderr.
//!
//! Input arguments that name a root system or word accept, in order of
//! precedence: a literal file path, a path under `$WEYLHAM_DATA_DIR`, or an
//! embedded dataset id such as `ch-rank3-nr1`, `paper-cycle-nr2`, or
//! `paper-alt5-word` (an optional `data/` prefix is ignored).

use std::fs;
use std::path::Path;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weylham_core::{
    alt_generators, build_family, build_graph, build_perm_graph, data, find, generate_super_fgrs,
    graph_spectrum, is_bipartite_ramanujan, lift_search_labeled, backtrack_search_labeled,
    parse_cycle_json, parse_cycle_text, parse_roots, quotient_classes, verify_cycle,
    verify_perm_cycle, CayleyGraph, CycleWord, Error, ExportFormat, QuotientMode, RootFormat,
    RootSystem, SearchConfig, SearchMethod, SuperDatum, VerifyReport,
};

/// Positive-root cap used when expanding a super datum from `--super`.
const SUPER_ROOT_CAP: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "weylham",
    version,
    about = "Finite generalized root systems: reflection graphs, Hamiltonian cycles, spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms on a root system and print a report.
    Validate {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Build the reflection graph and export it as DOT or JSON.
    Graph {
        #[command(flatten)]
        system: SystemArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
    },
    /// Search for a Hamiltonian cycle; prints the cycle word as JSON.
    Find {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Verify a cycle word against a root system; prints a JSON report.
    Verify {
        #[command(flatten)]
        system: SystemArgs,
        /// Cycle word source (text letters or `{"start":…,"word":[…]}`).
        #[arg(long, value_name = "SRC")]
        cycle: String,
    },
    /// Print the adjacency spectrum and the bipartite-Ramanujan predicate.
    Spectrum {
        #[command(flatten)]
        system: SystemArgs,
        /// Print only the k largest eigenvalues.
        #[arg(long, value_name = "K")]
        top: Option<usize>,
    },
    /// Count groupoid-equivalence classes of bases.
    Quotient {
        #[command(flatten)]
        system: SystemArgs,
        /// Which equivalence to use.
        #[arg(long, value_enum, default_value_t = ModeArg::Smallest)]
        mode: ModeArg,
    },
    /// Alternating-group mode: Cayley graph of Alt(n) on the x-generators.
    Alt {
        /// Degree n of Alt(n); n >= 3.
        #[arg(long)]
        n: usize,
        /// Verify this word (generator-name tokens) instead of searching.
        #[arg(long, value_name = "SRC")]
        word: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// List the family specifiers accepted by --family.
    Families,
}

/// Where the root system comes from: exactly one source must be given.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SystemArgs {
    /// Root list source (ch-notation text or JSON).
    #[arg(long, value_name = "SRC")]
    roots: Option<String>,
    /// Family specifier, e.g. `a:3`, `g2`, or `phi:3:1,2`.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Super datum source: JSON with a rational matrix and odd index set.
    #[arg(long = "super", value_name = "SRC")]
    super_datum: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Search strategy.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Wall-clock budget in seconds.
    #[arg(long, value_name = "S", default_value_t = 60.0)]
    time_budget: f64,
    /// Seed for the randomized parallel search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on parallel search workers; 0 means one per first branch.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Single-threaded canonical neighbor order (byte-stable output).
    #[arg(long)]
    deterministic: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            method: self.method.into(),
            time_budget: self.time_budget,
            deterministic: self.deterministic,
            seed: self.seed,
            threads: self.threads,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Smallest,
    Largest,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Backtrack,
    Lift,
    Product,
}

impl From<MethodArg> for SearchMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => SearchMethod::Auto,
            MethodArg::Backtrack => SearchMethod::Backtrack,
            MethodArg::Lift => SearchMethod::Lift,
            MethodArg::Product => SearchMethod::Product,
        }
    }
}

enum CliError {
    Usage(String),
    Reject(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Reject(_) => 1,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Reject(m) | CliError::Internal(m) => m,
        }
    }
}

fn core_err(e: Error) -> CliError {
    match e {
        Error::Internal(m) => CliError::Internal(m),
        Error::NoCycleFound => CliError::Reject("no Hamiltonian cycle found".into()),
        Error::BudgetExceeded => {
            CliError::Reject("time budget exhausted before the search finished".into())
        }
        other => CliError::Reject(other.to_string()),
    }
}

/// Resolve a source argument: literal path, then `$WEYLHAM_DATA_DIR/<arg>`,
/// then the embedded dataset table.
fn read_source(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {}", arg, e)));
    }
    if let Ok(dir) = std::env::var("WEYLHAM_DATA_DIR") {
        if !dir.is_empty() {
            let joined = Path::new(&dir).join(arg);
            if joined.is_file() {
                return fs::read_to_string(&joined).map_err(|e| {
                    CliError::Usage(format!("cannot read {}: {}", joined.display(), e))
                });
            }
        }
    }
    if let Some(text) = data::embedded(arg) {
        return Ok(text.to_string());
    }
    Err(CliError::Usage(format!(
        "'{}' is neither a readable file, an entry under WEYLHAM_DATA_DIR, nor an embedded dataset id",
        arg
    )))
}

impl SystemArgs {
    fn build(&self) -> Result<RootSystem, CliError> {
        if let Some(src) = &self.roots {
            let text = read_source(src)?;
            let format = if text.trim_start().starts_with('{') {
                RootFormat::Json
            } else {
                RootFormat::ChNotation
            };
            return parse_roots(&text, format).map_err(core_err);
        }
        if let Some(spec) = &self.family {
            return build_family(spec).map_err(core_err);
        }
        let src = self.super_datum.as_ref().expect("clap enforces the group");
        let text = read_source(src)?;
        let datum = SuperDatum::from_json_str(&text).map_err(core_err)?;
        generate_super_fgrs(&datum, SUPER_ROOT_CAP).map_err(core_err)
    }

    fn build_with_graph(&self) -> Result<(RootSystem, CayleyGraph), CliError> {
        let sys = self.build()?;
        let g = build_graph(&sys).map_err(core_err)?;
        Ok((sys, g))
    }
}

fn report_json(report: &VerifyReport) -> String {
    serde_json::json!({
        "accepted": report.accepted,
        "length_matches": report.length_matches,
        "all_distinct": report.all_distinct,
        "returns_to_start": report.returns_to_start,
        "first_failure": report.first_failure,
    })
    .to_string()
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Validate { system } => {
            let sys = system.build()?;
            let report = sys.validate();
            println!("{}", report);
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Graph { system, format } => {
            let (_, g) = system.build_with_graph()?;
            let format = match format {
                FormatArg::Dot => ExportFormat::Dot,
                FormatArg::Json => ExportFormat::Json,
            };
            let text = weylham_core::export_graph(&g, format);
            print!("{}", text);
            if !text.ends_with('\n') {
                println!();
            }
            Ok(0)
        }
        Command::Find { system, search } => {
            let (sys, g) = system.build_with_graph()?;
            let cw = find(&sys, &g, &search.config()).map_err(core_err)?;
            println!("{}", cw.to_json_string());
            Ok(0)
        }
        Command::Verify { system, cycle } => {
            let (_, g) = system.build_with_graph()?;
            let text = read_source(&cycle)?;
            let cw = parse_cycle(&text)?;
            let report = verify_cycle(&g, &cw);
            println!("{}", report_json(&report));
            Ok(if report.accepted { 0 } else { 1 })
        }
        Command::Spectrum { system, top } => {
            let (_, g) = system.build_with_graph()?;
            let s = graph_spectrum(&g).map_err(core_err)?;
            let ramanujan = match is_bipartite_ramanujan(&s) {
                Ok(flag) => serde_json::json!(flag),
                Err(Error::DegenerateOrder) => serde_json::Value::Null,
                Err(e) => return Err(core_err(e)),
            };
            let k = top.unwrap_or(s.order()).min(s.order());
            let lambda: Vec<f64> = s.values[..k].to_vec();
            println!(
                "{}",
                serde_json::json!({
                    "n": s.order(),
                    "d": s.degree,
                    "lambda": lambda,
                    "ramanujan": ramanujan,
                })
            );
            Ok(0)
        }
        Command::Quotient { system, mode } => {
            let (sys, g) = system.build_with_graph()?;
            let mode_name = match mode {
                ModeArg::Smallest => "smallest",
                ModeArg::Largest => "largest",
            };
            let mode = match mode {
                ModeArg::Smallest => QuotientMode::Smallest,
                ModeArg::Largest => QuotientMode::Largest,
            };
            let classes = quotient_classes(&sys, &g, mode).map_err(core_err)?;
            let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
            println!(
                "{}",
                serde_json::json!({
                    "mode": mode_name,
                    "classes": classes.len(),
                    "sizes": sizes,
                })
            );
            Ok(0)
        }
        Command::Alt { n, word, search } => run_alt(n, word, &search),
        Command::Families => {
            print!("{}", FAMILY_LISTING);
            Ok(0)
        }
    }
}

fn parse_cycle(text: &str) -> Result<CycleWord, CliError> {
    let parsed = if text.trim_start().starts_with('{') {
        parse_cycle_json(text)
    } else {
        parse_cycle_text(text)
    };
    parsed.map_err(core_err)
}

fn run_alt(n: usize, word: Option<String>, search: &SearchArgs) -> Result<i32, CliError> {
    let gens = alt_generators(n).map_err(core_err)?;
    let pg = build_perm_graph(&gens).map_err(core_err)?;
    eprintln!(
        "Alt({}): order {}, {} generators, {} undirected edges",
        n,
        pg.order(),
        pg.generators().len(),
        pg.undirected_edges().len()
    );
    if let Some(src) = word {
        let text = read_source(&src)?;
        let report = verify_perm_cycle(&pg, &text).map_err(core_err)?;
        println!("{}", report_json(&report));
        return Ok(if report.accepted { 0 } else { 1 });
    }
    let lg = pg.to_labeled();
    let cfg = search.config();
    let mut found: Option<CycleWord> = None;
    if matches!(cfg.method, SearchMethod::Auto | SearchMethod::Lift) {
        for label in 1..=pg.generator_names().len() {
            if let Some(cw) = lift_search_labeled(&lg, label, &cfg).map_err(core_err)? {
                found = Some(cw);
                break;
            }
        }
    }
    if found.is_none() && !matches!(cfg.method, SearchMethod::Product) {
        found = backtrack_search_labeled(&lg, &cfg).map_err(core_err)?;
    }
    let cw = found.ok_or(Error::NoCycleFound).map_err(core_err)?;
    let report = weylham_core::verify_cycle_labeled(&lg, &cw);
    if !report.accepted {
        return Err(CliError::Internal(format!(
            "search returned a word that fails verification: {}",
            report
        )));
    }
    let names: Vec<&str> = cw
        .word
        .iter()
        .map(|&letter| pg.generator_names()[letter - 1].as_str())
        .collect();
    println!("{}", names.join(" "));
    Ok(0)
}

const FAMILY_LISTING: &str = "\
a:<n>             type A_n (n >= 1)
b:<n>             type B_n (n >= 2)
c:<n>             type C_n (n >= 2)
d:<n>             type D_n (n >= 3)
f4                type F_4
g2                type G_2
phi:<r>:<Z>       epsilon family Phi_{r,Z}; Z is a comma-separated index set, may be empty
psi:<r>:<Z>       epsilon family Psi_{r,Z}
psiprime:<r>:<Z>  epsilon family Psi'_{r,Z}

Super data (a rational symmetric matrix plus an odd index set) are supplied
as JSON via --super, e.g. {\"matrix\":[[\"0\",\"1\"],[\"1\",\"0\"]],\"odd\":[1,2]}.
";

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            process::exit(e.code());
        }
    }
}
