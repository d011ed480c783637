//! Command-line front end. Exit codes: 0 success, 1 verification failure or
//! counterexample, 2 usage error, 3 input parse error.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::{self, Shard};
use crate::error::{Error, Result};
use crate::families::{verify_spec, FamilySpec};
use crate::graph::Graph;
use crate::position::{self, Certificate, PositionKind, Witness};
use crate::report::{self, OutputFormat};
use crate::search::{self, Fault, Mode, Profile, SearchRecord, SearchSpace};

/// Environment variable naming the default results directory.
pub const RESULTS_ENV: &str = "GRAPHPOS_RESULTS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "graphpos", version, about = "Monophonic and general position numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute mp and gp with optimal sets for graph6 input ("-" reads lines from stdin).
    Pos {
        graph: String,
        #[arg(long, value_enum, default_value_t = KindArg::Both)]
        kind: KindArg,
    },
    /// Check whether a vertex set is in position; prints a witness or a violating path.
    Check {
        graph: String,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        #[arg(long, value_enum, default_value_t = SingleKind::Mp)]
        kind: SingleKind,
    },
    /// Build a family member and print its graph6 code. Tripling families take a graph6 seed.
    Family {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Also check the family's claimed order, size, mp, gp and diameter.
        #[arg(long)]
        claims: bool,
    },
    /// List non-isomorphic graphs of order n as graph6.
    Enum {
        n: usize,
        /// Only part i of k (0-based), e.g. 2/8.
        #[arg(long)]
        shard: Option<String>,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
    /// Run a search and append its records to the results directory.
    Search {
        #[command(subcommand)]
        query: Query,
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// Run the theorem suites, or re-verify stored records.
    Verify {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        /// Re-verify a records file or directory instead.
        #[arg(long)]
        records: Option<PathBuf>,
        /// Run only the named suites.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Inject a deliberate defect to check that suites fail.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Render stored records.
    Report {
        dir: PathBuf,
        #[arg(long, default_value = "md")]
        format: String,
    },
}

#[derive(Subcommand, Debug)]
enum Query {
    /// Smallest order with mp a and gp b; without a and b, the whole table up to --cap.
    Mu {
        a: Option<usize>,
        b: Option<usize>,
        /// Largest order scanned.
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Largest size of an order-n graph with mp a.
    Mex { n: usize, a: usize },
    /// Largest size of an order-n graph with gp a.
    Gex { n: usize, a: usize },
    /// Smallest size of an order-n graph with mp a and gp b.
    Exminus { n: usize, a: usize, b: usize },
    /// Diameters of order-n graphs with mp a.
    Diam { n: usize, a: usize },
    /// Circulants of order n with mp 2 and diameter 2.
    Circulant { n: usize },
    /// Whether an order-n graph with mp 2 and diameter 2 exists.
    D2mp2 { n: usize },
    /// Re-derive R(3,4) = 9 from orders 8 and 9.
    Ramsey,
}

#[derive(Args, Debug)]
struct SearchOpts {
    /// Scan graphs from a graph6 file instead of native enumeration.
    #[arg(long, global = true)]
    stream: Option<PathBuf>,
    /// Results directory (default: $GRAPHPOS_RESULTS or ./results).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print records without saving them.
    #[arg(long, global = true)]
    no_save: bool,
    /// Scan disconnected graphs too; records go to a separate file.
    #[arg(long, global = true)]
    include_disconnected: bool,
    /// Worker threads (default: logical cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Enumeration shards scanned in parallel.
    #[arg(long, global = true, default_value_t = 1)]
    shards: usize,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Mp,
    Gp,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SingleKind {
    Mp,
    Gp,
}

impl From<SingleKind> for PositionKind {
    fn from(k: SingleKind) -> Self {
        match k {
            SingleKind::Mp => PositionKind::Monophonic,
            SingleKind::Gp => PositionKind::Geodesic,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaultArg {
    PagodaEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Exhaustive when the order can be scanned, constructive otherwise.
    Auto,
    Exhaustive,
    #[value(alias = "bounds")]
    Constructive,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => EXIT_VERIFY,
        Error::Graph6(_) | Error::Parse { .. } | Error::Record(_) | Error::Io(_) => EXIT_PARSE,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    run_with(args, &mut stdin.lock(), &mut std::io::stdout(), &mut std::io::stderr())
}

/// Runs the CLI with explicit streams.
pub fn run_with<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Pos { graph, kind } => pos(&graph, kind, input, out),
        Command::Check { graph, set, kind } => check(&graph, &set, kind.into(), out),
        Command::Family {
            name,
            params,
            claims,
        } => family(&name, &params, claims, out),
        Command::Enum { n, shard, all } => enum_graphs(n, shard.as_deref(), all, out),
        Command::Search { query, opts } => search_cmd(query, &opts, out),
        Command::Verify {
            profile,
            records,
            suite,
            inject_fault,
        } => verify(profile, records.as_deref(), &suite, inject_fault, out),
        Command::Report { dir, format } => {
            let format: OutputFormat = format.parse()?;
            let records = search::load_dir(&dir)?;
            write!(out, "{}", report::render(&records, format)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn braces(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn pos_line(g: &Graph, kind: KindArg) -> Result<String> {
    let one = |k: PositionKind| -> Result<Witness> { position::position_number(g, k) };
    Ok(match kind {
        KindArg::Both => {
            let (m, k) = position::position_numbers(g)?;
            format!("mp={} gp={} mp-set={} gp-set={}", m.value, k.value, braces(&m.set), braces(&k.set))
        }
        KindArg::Mp => {
            let w = one(PositionKind::Monophonic)?;
            format!("mp={} mp-set={}", w.value, braces(&w.set))
        }
        KindArg::Gp => {
            let w = one(PositionKind::Geodesic)?;
            format!("gp={} gp-set={}", w.value, braces(&w.set))
        }
    })
}

fn pos(graph: &str, kind: KindArg, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    if graph != "-" {
        let g = Graph::from_graph6(graph)?;
        writeln!(out, "{}", pos_line(&g, kind)?)?;
        return Ok(EXIT_OK);
    }
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let code = line.trim();
        if code.is_empty() || code.starts_with(">>") {
            continue;
        }
        let g = Graph::from_graph6(code).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        writeln!(out, "{code} {}", pos_line(&g, kind)?)?;
    }
    Ok(EXIT_OK)
}

fn check(graph: &str, set: &[usize], kind: PositionKind, out: &mut dyn Write) -> Result<i32> {
    let g = Graph::from_graph6(graph)?;
    let cert = match position::in_position(&g, set, kind)? {
        None => {
            let mut members = set.to_vec();
            members.sort_unstable();
            members.dedup();
            Certificate::Witness(Witness {
                value: members.len(),
                set: members,
            })
        }
        Some(v) => Certificate::Violation(v),
    };
    if !cert.verify(&g, kind) {
        return Err(Error::Verification(format!("certificate {cert:?} does not re-verify")));
    }
    let name = kind.short_name();
    match &cert {
        Certificate::Witness(w) => {
            writeln!(out, "ok: {} is in {name} position ({} vertices)", braces(&w.set), w.value)?;
            Ok(EXIT_OK)
        }
        Certificate::Violation(v) => {
            let path: Vec<String> = v.path.iter().map(usize::to_string).collect();
            writeln!(out, "violation: {name} path {} carries {}", path.join("-"), braces(&v.hits))?;
            Ok(EXIT_VERIFY)
        }
    }
}

fn family(name: &str, params: &[String], claims: bool, out: &mut dyn Write) -> Result<i32> {
    let args: Vec<&str> = params.iter().map(String::as_str).collect();
    let spec = FamilySpec::parse(name, &args)?;
    if !claims {
        writeln!(out, "{}", spec.build()?.to_graph6())?;
        return Ok(EXIT_OK);
    }
    let (g, report) = verify_spec(&spec)?;
    writeln!(out, "{}", g.to_graph6())?;
    writeln!(out, "{report}")?;
    Ok(if report.all_ok() { EXIT_OK } else { EXIT_VERIFY })
}

fn enum_graphs(n: usize, shard: Option<&str>, all: bool, out: &mut dyn Write) -> Result<i32> {
    let shard = match shard {
        Some(s) => Shard::parse(s)?,
        None => Shard::ALL,
    };
    for g in enumerate::enumerate(n, !all, shard)? {
        writeln!(out, "{}", g?.to_graph6())?;
    }
    Ok(EXIT_OK)
}

fn results_dir(opts: &SearchOpts) -> PathBuf {
    opts.out
        .clone()
        .or_else(|| std::env::var_os(RESULTS_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("results"))
}

fn mode_for(opts: &SearchOpts, space: &SearchSpace, n: usize) -> Mode {
    match opts.mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Constructive => Mode::Constructive,
        ModeArg::Auto if space.covers(n) => Mode::Exhaustive,
        ModeArg::Auto => Mode::Constructive,
    }
}

fn search_cmd(query: Query, opts: &SearchOpts, out: &mut dyn Write) -> Result<i32> {
    let mut space = match &opts.stream {
        Some(p) => SearchSpace::stream(p),
        None => SearchSpace::native(),
    };
    space = space.with_shards(opts.shards).with_disconnected(opts.include_disconnected);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let records = pool.install(|| run_query(&query, opts, &space))?;
    for r in &records {
        writeln!(out, "{} {} = {} ({} solutions)", r.query, r.params_text(), r.value, r.witness_count)?;
    }
    if !opts.no_save {
        let kind = records.first().map_or("empty", |r| r.query.as_str());
        let suffix = if opts.include_disconnected { "-all" } else { "" };
        let path = results_dir(opts).join(format!("{kind}{suffix}.jsonl"));
        search::append_records(&path, &records)?;
        writeln!(out, "appended {} record(s) to {}", records.len(), path.display())?;
    }
    Ok(EXIT_OK)
}

fn run_query(query: &Query, opts: &SearchOpts, space: &SearchSpace) -> Result<Vec<SearchRecord>> {
    Ok(match *query {
        Query::Mu { a: Some(a), b: Some(b), cap } => vec![search::mu(a, b, cap, space)?],
        Query::Mu { a: None, b: None, cap } => search::mu_table(cap, space)?,
        Query::Mu { .. } => return Err(Error::InvalidParameters("mu needs both a and b, or neither".into())),
        Query::Mex { n, a } => vec![search::mex(n, a, mode_for(opts, space, n), space)?],
        Query::Gex { n, a } => vec![search::gex(n, a, mode_for(opts, space, n), space)?],
        Query::Exminus { n, a, b } => vec![search::ex_minus(n, a, b, mode_for(opts, space, n), space)?],
        Query::Diam { n, a } => vec![search::achievable_diameters(n, a, mode_for(opts, space, n), space)?],
        Query::Circulant { n } => vec![search::circulant_diameter2_mp2(n)?],
        Query::D2mp2 { n } => vec![search::diameter2_mp2_exists(n, mode_for(opts, space, n), space)?],
        Query::Ramsey => vec![search::ramsey_r34(space)?],
    })
}

fn verify(
    profile: ProfileArg,
    records: Option<&Path>,
    suites: &[String],
    fault: Option<FaultArg>,
    out: &mut dyn Write,
) -> Result<i32> {
    if let Some(path) = records {
        let loaded = search::load_verified(path)?;
        writeln!(out, "{} record(s) re-verified", loaded.len())?;
        return Ok(EXIT_OK);
    }
    let profile = match profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let faults: Vec<Fault> = fault.map(|FaultArg::PagodaEdge| Fault::PagodaEdge).into_iter().collect();
    let names: Vec<&str> = suites.iter().map(String::as_str).collect();
    for n in &names {
        if !search::suite_names().contains(n) {
            return Err(Error::InvalidParameters(format!("unknown suite {n:?}")));
        }
    }
    let only = (!names.is_empty()).then_some(names.as_slice());
    let report = search::verify_theorems_with(profile, &faults, only);
    writeln!(out, "{report}")?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY })
}
