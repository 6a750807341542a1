//! The `roman-census` command line. [`run`] takes the argument list and the
//! two output streams and returns the process exit code, so the whole front
//! end can be driven from tests.
//!
//! Exit codes: 0 success, 1 internal failure (a stuck enumerator), 2 unreadable
//! input or bad arguments, 3 class mismatch, 4 oracle size cap exceeded,
//! 5 verification mismatch.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::enumerate::{enumerate, Class};
use crate::error::Error;
use crate::generate::{self, Family};
use crate::graph::{parse_edge_list, Graph};
use crate::interval::{graph_from_intervals, parse_intervals, IntervalRepresentation};
use crate::mc::{self, WeightBounds};
use crate::oracle;
use crate::paths;
use crate::rdf::RomanFunction;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CLASS: i32 = 3;
pub const EXIT_ORACLE_CAP: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "roman-census", version, about = "Enumerate, count and verify minimal Roman dominating functions")]
struct Cli {
    /// Worker threads for corpora and sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every minimal rdf of one graph.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "auto")]
        class: Class,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Compare a class enumerator with the exhaustive oracle.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "auto")]
        class: Class,
        /// Check this many random graphs (seeds seed, seed+1, ...).
        #[arg(long, default_value_t = 1)]
        samples: u64,
    },
    /// Branching numbers of a rule list.
    Analyze {
        /// Built-in rule list: interval, forest or chordal.
        #[arg(long, conflicts_with = "vectors")]
        ruleset: Option<String>,
        /// Rule list in the vector DSL.
        #[arg(long)]
        vectors: Option<PathBuf>,
        #[arg(long)]
        w1: Option<f64>,
        #[arg(long)]
        w2: Option<f64>,
        /// Search the weights minimizing the worst branching number.
        #[arg(long)]
        optimize: bool,
        #[arg(long, default_value_t = mc::DEFAULT_FAMILY_CAP)]
        family_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a family over a size range and report counts and timings as CSV.
    Bench {
        #[arg(long)]
        gen: String,
        /// First size parameter (`n`, or `k` for the k-indexed families).
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "auto")]
        class: Class,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clique size for the chordal generator.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Exact counts from the path recurrences.
    Count {
        #[arg(value_enum)]
        family: CountFamily,
        /// Path lengths; several lengths count the disjoint union.
        #[arg(required = true)]
        n: Vec<usize>,
    },
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Edge list file (`n m` header, one `u v` pair per line).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Interval model file (`n` header, one `l r` pair per line).
    #[arg(long)]
    intervals: Option<PathBuf>,
    /// Generator: path, cycle, star, p2_forest, split_lb, cobipartite_lb,
    /// tree, forest, interval, chordal, split, cobipartite, gnp.
    #[arg(long, conflicts_with_all = ["input", "intervals"])]
    gen: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    Path,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Fail {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for Fail {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (exit {})", self.message, self.code)
    }
}

impl std::error::Error for Fail {}

impl Fail {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Fail { code, message: message.into() }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Io(_) => EXIT_INPUT,
            Error::WrongClass { .. } => EXIT_CLASS,
            Error::OracleCap { .. } => EXIT_ORACLE_CAP,
            _ => EXIT_INTERNAL,
        };
        Fail::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe (`| head`) ends the output, it is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Fail::new(EXIT_OK, "");
        }
        Fail::new(EXIT_INTERNAL, e.to_string())
    }
}

type CliResult = std::result::Result<i32, Fail>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match cli.jobs.map(|j| rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build()) {
        Some(Ok(pool)) => Some(pool),
        Some(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INTERNAL;
        }
        None => None,
    };
    let result = dispatch(cli.command, pool.as_ref(), out, err);
    match result {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

/// Runs `op` on the `--jobs` pool, or on the global one.
fn on_pool<R: Send>(pool: Option<&rayon::ThreadPool>, op: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(op),
        None => op(),
    }
}

fn dispatch(command: Command, pool: Option<&rayon::ThreadPool>, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Enumerate { source, class, format } => cmd_enumerate(&source, class, format, out, err),
        Command::Verify { source, class, samples } => cmd_verify(&source, class, samples, pool, out, err),
        Command::Analyze { ruleset, vectors, w1, w2, optimize, family_cap, json } => {
            cmd_analyze(ruleset.as_deref(), vectors.as_deref(), (w1, w2), optimize, family_cap, json, out)
        }
        Command::Bench { gen, from, to, class, seed, k } => cmd_bench(&gen, from, to, class, seed, k, pool, out),
        Command::Count { family: CountFamily::Path, n } => {
            if n.contains(&0) {
                return Err(Fail::new(EXIT_INPUT, "path lengths must be positive"));
            }
            writeln!(out, "{}", paths::count_path_forest(&n))?;
            Ok(EXIT_OK)
        }
    }
}

/// A graph to work on, with its interval model when one is known.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub intervals: Option<IntervalRepresentation>,
}

fn read(path: &Path) -> std::result::Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn load(source: &Source, seed: u64) -> std::result::Result<Instance, Fail> {
    let parse_fail =
        |path: &Path, e: crate::error::ParseError| Fail::new(EXIT_INPUT, format!("{}: {e}", path.display()));
    if let Some(name) = &source.gen {
        let size = source.n.or(source.k).ok_or_else(|| Fail::new(EXIT_INPUT, "--gen needs --n or --k"))?;
        return generate_instance(name, size, source.k, source.p, seed);
    }
    let intervals = match &source.intervals {
        Some(path) => Some(parse_intervals(&read(path)?).map_err(|e| parse_fail(path, e))?),
        None => None,
    };
    let graph = match (&source.input, &intervals) {
        (Some(path), _) => parse_edge_list(&read(path)?).map_err(|e| parse_fail(path, e))?,
        (None, Some(rep)) => graph_from_intervals(rep),
        (None, None) => return Err(Fail::new(EXIT_INPUT, "give --input, --intervals or --gen")),
    };
    if let Some(rep) = &intervals {
        if graph_from_intervals(rep) != graph {
            return Err(Fail::new(EXIT_CLASS, "the interval model does not produce the input graph"));
        }
    }
    Ok(Instance { graph, intervals })
}

/// Builds a named family member or a seeded random graph. For the chordal
/// generator `k` is the clique size (default 2).
pub fn generate_instance(
    name: &str,
    size: usize,
    k: Option<usize>,
    p: f64,
    seed: u64,
) -> std::result::Result<Instance, Fail> {
    let fixed = |f: Family| {
        let g = generate::generate(f);
        Instance { graph: g.graph, intervals: g.intervals }
    };
    let plain = |graph: Graph| Instance { graph, intervals: None };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if size == 0 {
        return Err(Fail::new(EXIT_INPUT, "the size parameter must be positive"));
    }
    Ok(match name {
        "path" => fixed(Family::Path(size)),
        "cycle" if size >= 3 => fixed(Family::Cycle(size)),
        "cycle" => return Err(Fail::new(EXIT_INPUT, "a cycle needs at least three vertices")),
        "star" => fixed(Family::Star(size)),
        "p2_forest" => fixed(Family::P2Forest(size)),
        "split_lb" => fixed(Family::SplitLowerBound(size)),
        "cobipartite_lb" => fixed(Family::CobipartiteLowerBound(size)),
        "tree" => plain(generate::random_tree(size, &mut rng)),
        "forest" => plain(generate::random_forest(size, &mut rng)),
        "interval" => {
            let (graph, rep) = generate::random_interval(size, &mut rng);
            Instance { graph, intervals: Some(rep) }
        }
        "chordal" => plain(generate::random_chordal(size, k.unwrap_or(2).max(1), &mut rng)),
        "split" => plain(generate::random_split(size, &mut rng)),
        "cobipartite" => plain(generate::random_cobipartite(size, &mut rng)),
        "gnp" => plain(generate::random_gnp(size, p, &mut rng)),
        _ => return Err(Fail::new(EXIT_INPUT, format!("unknown generator {name:?}"))),
    })
}

fn cmd_enumerate(source: &Source, class: Class, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let inst = load(source, source.seed)?;
    let it = enumerate(&inst.graph, class, inst.intervals.as_ref())?;
    let used = it.class();
    let mut count = 0u64;
    for f in it {
        let f = f?;
        count += 1;
        match format {
            Format::Lines => writeln!(out, "{f}")?,
            Format::Json => writeln!(out, "{}", serde_json::json!({ "f": f.to_string() }))?,
            Format::Count => {}
        }
    }
    if format == Format::Count {
        writeln!(out, "{count}")?;
    }
    writeln!(err, "# count={count} class={used}")?;
    Ok(EXIT_OK)
}

/// Differences between an enumerator's output and the oracle's.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mismatch {
    /// Minimal rdf the enumerator missed.
    pub missing: Vec<RomanFunction>,
    /// Output that is not a minimal rdf.
    pub extra: Vec<RomanFunction>,
    /// Output emitted more than once.
    pub repeated: Vec<RomanFunction>,
}

impl Mismatch {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.repeated.is_empty()
    }
}

/// Compares `found` with the oracle's set for `g`.
pub fn diff_against_oracle(g: &Graph, found: &[RomanFunction]) -> crate::Result<Mismatch> {
    let expected: BTreeSet<String> = oracle::enumerate_all(g)?.map(|f| f.to_string()).collect();
    let mut seen = BTreeSet::new();
    let mut m = Mismatch::default();
    for f in found {
        if !seen.insert(f.to_string()) {
            m.repeated.push(f.clone());
        }
    }
    m.missing = expected.difference(&seen).map(|s| s.parse().expect("oracle output parses")).collect();
    m.extra = seen.difference(&expected).map(|s| s.parse().expect("enumerator output parses")).collect();
    Ok(m)
}

/// Runs the class enumerator on `inst` and compares with the oracle.
pub fn verify_instance(inst: &Instance, class: Class) -> crate::Result<Mismatch> {
    if inst.graph.n() > oracle::oracle_cap() {
        return Err(Error::OracleCap { n: inst.graph.n(), cap: oracle::oracle_cap() });
    }
    let found = enumerate(&inst.graph, class, inst.intervals.as_ref())?.collect::<crate::Result<Vec<_>>>()?;
    diff_against_oracle(&inst.graph, &found)
}

/// Writes the graph and the differences of a failed comparison.
pub fn write_counterexample(out: &mut dyn Write, inst: &Instance, m: &Mismatch) -> std::io::Result<()> {
    writeln!(out, "# counterexample graph")?;
    out.write_all(inst.graph.to_edge_list().as_bytes())?;
    if let Some(rep) = &inst.intervals {
        writeln!(out, "# interval model")?;
        out.write_all(rep.to_text().as_bytes())?;
    }
    for (label, fs) in [("missing", &m.missing), ("extra", &m.extra), ("repeated", &m.repeated)] {
        for f in fs {
            writeln!(out, "{label} {f}")?;
        }
    }
    Ok(())
}

type Checked = std::result::Result<(Instance, Mismatch), Fail>;

fn cmd_verify(
    source: &Source,
    class: Class,
    samples: u64,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    if samples > 1 && source.gen.is_none() {
        return Err(Fail::new(EXIT_INPUT, "--samples needs a generator"));
    }
    let seeds: Vec<u64> = (0..samples.max(1)).map(|i| source.seed.wrapping_add(i)).collect();
    let results: Vec<(u64, Checked)> = on_pool(pool, || {
        seeds
            .par_iter()
            .map(|&seed| {
                let r = load(source, seed).and_then(|inst| {
                    let m = verify_instance(&inst, class)?;
                    Ok((inst, m))
                });
                (seed, r)
            })
            .collect()
    });
    let mut failures = Vec::new();
    for (seed, r) in results {
        match r {
            Ok((inst, m)) if !m.is_empty() => failures.push((seed, inst, m)),
            Ok(_) => {}
            Err(f) => return Err(f),
        }
    }
    // smallest graph first, then the earliest seed
    failures.sort_by_key(|(seed, inst, _)| (inst.graph.n(), inst.graph.edge_count(), *seed));
    match failures.first() {
        None => {
            writeln!(err, "# verified {} graph(s) against the oracle", seeds.len())?;
            Ok(EXIT_OK)
        }
        Some((seed, inst, m)) => {
            writeln!(
                err,
                "# {} of {} graph(s) disagree with the oracle; smallest at seed {seed}",
                failures.len(),
                seeds.len()
            )?;
            write_counterexample(out, inst, m)?;
            Ok(EXIT_MISMATCH)
        }
    }
}

fn cmd_analyze(
    ruleset: Option<&str>,
    vectors: Option<&Path>,
    (w1, w2): (Option<f64>, Option<f64>),
    optimize: bool,
    family_cap: usize,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let (rules, weights, bounds) = match (ruleset, vectors) {
        (Some(name), _) => {
            let b = mc::builtin_ruleset(name).ok_or_else(|| {
                Fail::new(EXIT_INPUT, format!("unknown ruleset {name:?} (known: {})", mc::BUILTIN_NAMES.join(", ")))
            })?;
            (b.rules, b.weights, b.bounds)
        }
        (None, Some(path)) => {
            let rules =
                mc::parse_rules(&read(path)?).map_err(|e| Fail::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            (rules, crate::branch::WeightSet::new(1.0, 0.5), WeightBounds::default())
        }
        (None, None) => return Err(Fail::new(EXIT_INPUT, "give --ruleset or --vectors")),
    };
    let mut w = crate::branch::WeightSet::new(w1.unwrap_or(weights.w1), w2.unwrap_or(weights.w2));
    if optimize {
        (w, _) = mc::optimize_weights(&rules, bounds, mc::Schedule::default(), family_cap);
    }
    let analysis = mc::analyze_ruleset(&rules, w, family_cap);
    if json {
        serde_json::to_writer_pretty(&mut *out, &analysis).map_err(|e| Fail::new(EXIT_INTERNAL, e.to_string()))?;
        writeln!(out)?;
    } else {
        if optimize {
            writeln!(out, "optimized weights: w1 = {:.6}, w2 = {:.6}", w.w1, w.w2)?;
        }
        out.write_all(analysis.to_text().as_bytes())?;
    }
    Ok(EXIT_OK)
}

/// One row of the bench table.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub count: u64,
    pub wall_time: Duration,
    pub max_delay: Duration,
}

impl BenchRow {
    pub fn growth(&self) -> f64 {
        (self.count as f64).powf(1.0 / self.n as f64)
    }
}

pub const BENCH_HEADER: &str = "family,n,count,wall_time,max_inter_solution_delay,count^(1/n)";

/// Enumerates one instance, timing the gaps between consecutive outputs.
pub fn bench_instance(family: &str, inst: &Instance, class: Class) -> crate::Result<BenchRow> {
    let start = Instant::now();
    let mut last = start;
    let mut max_delay = Duration::ZERO;
    let mut count = 0u64;
    for f in enumerate(&inst.graph, class, inst.intervals.as_ref())? {
        f?;
        let now = Instant::now();
        max_delay = max_delay.max(now - last);
        last = now;
        count += 1;
    }
    let end = Instant::now();
    max_delay = max_delay.max(end - last);
    Ok(BenchRow { family: family.to_string(), n: inst.graph.n(), count, wall_time: end - start, max_delay })
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    gen: &str,
    from: usize,
    to: usize,
    class: Class,
    seed: u64,
    k: usize,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
) -> CliResult {
    if from == 0 || from > to {
        return Err(Fail::new(EXIT_INPUT, "need 1 <= --from <= --to"));
    }
    let rows: Vec<std::result::Result<BenchRow, Fail>> = on_pool(pool, || {
        (from..=to)
            .into_par_iter()
            .map(|size| {
                let inst = generate_instance(gen, size, Some(k), 0.3, seed.wrapping_add(size as u64))?;
                Ok(bench_instance(gen, &inst, class)?)
            })
            .collect()
    });
    writeln!(out, "{BENCH_HEADER}")?;
    for row in rows {
        let r = row?;
        writeln!(
            out,
            "{},{},{},{:.6},{:.6},{:.6}",
            r.family,
            r.n,
            r.count,
            r.wall_time.as_secs_f64(),
            r.max_delay.as_secs_f64(),
            r.growth()
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["roman-census"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn enumerate_formats() {
        let (code, out, err) =
            call(&["enumerate", "--gen", "path", "--n", "4", "--class", "forest", "--format", "count"]);
        assert_eq!((code, out.trim()), (0, "7"));
        assert_eq!(err.trim(), "# count=7 class=forest");
        let (code, out, _) = call(&["enumerate", "--gen", "p2_forest", "--k", "1", "--class", "auto"]);
        assert_eq!(code, 0);
        let lines: BTreeSet<&str> = out.lines().collect();
        assert_eq!(lines, BTreeSet::from(["11", "20", "02"]));
        let (_, out, _) = call(&["enumerate", "--gen", "star", "--n", "2", "--format", "json"]);
        assert!(out.lines().all(|l| l.starts_with("{\"f\":\"")), "{out}");
    }

    #[test]
    fn exit_codes() {
        let dir = std::env::temp_dir().join(format!("roman-census-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let c4 = dir.join("c4.edges");
        std::fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
        let c4s = c4.to_str().unwrap();
        assert_eq!(call(&["enumerate", "--input", c4s, "--class", "forest"]).0, EXIT_CLASS);
        assert_eq!(call(&["enumerate", "--input", "/nonexistent/x.edges"]).0, EXIT_INPUT);
        assert_eq!(call(&["enumerate", "--gen", "path", "--n", "30", "--class", "oracle"]).0, EXIT_ORACLE_CAP);
        assert_eq!(call(&["enumerate", "--gen", "path", "--n", "3", "--class", "interval"]).0, 0);
        assert_eq!(call(&["enumerate", "--input", c4s, "--class", "interval"]).0, EXIT_CLASS);
        let bad = dir.join("bad.dsl");
        std::fs::write(&bad, "ok: (1, w2)\nbroken: (1, ?)\n").unwrap();
        assert_eq!(call(&["analyze", "--vectors", bad.to_str().unwrap()]).0, EXIT_INPUT);
        assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn verify_and_corrupted_output() {
        assert_eq!(call(&["verify", "--gen", "tree", "--n", "10", "--class", "forest", "--samples", "5"]).0, 0);
        assert_eq!(call(&["verify", "--gen", "chordal", "--n", "10", "--samples", "3"]).0, 0);
        let inst = generate_instance("path", 4, None, 0.0, 0).unwrap();
        let mut found: Vec<RomanFunction> =
            enumerate(&inst.graph, Class::Forest, None).unwrap().map(|f| f.unwrap()).collect();
        found.pop();
        found.push(RomanFunction::constant(4, 2));
        let m = diff_against_oracle(&inst.graph, &found).unwrap();
        assert_eq!((m.missing.len(), m.extra.len()), (1, 1));
        let mut dump = Vec::new();
        write_counterexample(&mut dump, &inst, &m).unwrap();
        let dump = String::from_utf8(dump).unwrap();
        assert!(dump.contains("extra 2222") && dump.contains("missing "), "{dump}");
    }

    #[test]
    fn analyze_and_count() {
        let (code, out, _) = call(&["analyze", "--ruleset", "interval", "--w2", "0.57"]);
        assert_eq!(code, 0);
        let worst: f64 = out.lines().last().unwrap().rsplit('=').next().unwrap().trim().parse().unwrap();
        assert!(worst <= 1.7321, "{out}");
        let (code, out, _) = call(&["count", "path", "40"]);
        assert_eq!((code, out.trim().to_string()), (0, paths::count_path(40).to_string()));
        assert_eq!(call(&["count", "path", "3", "4"]).1.trim(), "28");
    }

    #[test]
    fn bench_csv() {
        let (code, out, _) = call(&["bench", "--gen", "split_lb", "--from", "2", "--to", "5"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some(BENCH_HEADER));
        let counts: Vec<u64> = lines.map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
        assert_eq!(counts, vec![7, 15, 31, 63]);
    }
}
