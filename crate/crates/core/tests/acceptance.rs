//! Acceptance report: one PASS/FAIL line per criterion. Runs without the test
//! harness so the report always shows; exits non-zero on an unexpected failure.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use roman_census::branch::WeightSet;
use roman_census::enumerate::chordal::CHORDAL_FALLBACK_V1_LEAF;
use roman_census::enumerate::forest::{FOREST_FALLBACK, FOREST_FALLBACK_OPEN_EDGE};
use roman_census::enumerate::{enumerate, Class};
use roman_census::generate::{self, generate, Family};
use roman_census::mc::{self, builtin_ruleset, BUILTIN_NAMES, DEFAULT_FAMILY_CAP};
use roman_census::{oracle, paths, Error, Graph, IntervalRepresentation};

/// Rule rows whose reference number does not follow from their vector.
const KNOWN_REFERENCE_ERRATA: &[&str] = &["forest/BRP4not2"];

struct Line {
    id: usize,
    pass: bool,
    text: String,
}

fn report(lines: &mut Vec<Line>, id: usize, pass: bool, text: String) {
    println!("criterion {id:>2}: {}  {text}", if pass { "PASS" } else { "FAIL" });
    lines.push(Line { id, pass, text });
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn rng(tag: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(tag.wrapping_mul(1_000_003).wrapping_add(i))
}

#[derive(Clone)]
struct Case {
    class: Class,
    graph: Graph,
    intervals: Option<IntervalRepresentation>,
}

#[derive(Default)]
struct Outcome {
    graphs: usize,
    mismatches: Vec<String>,
    stuck: usize,
    firings: BTreeMap<&'static str, u64>,
    bound_violations: Vec<String>,
}

impl Outcome {
    fn merge(mut self, other: Outcome) -> Outcome {
        self.graphs += other.graphs;
        self.mismatches.extend(other.mismatches);
        self.stuck += other.stuck;
        for (k, v) in other.firings {
            *self.firings.entry(k).or_default() += v;
        }
        self.bound_violations.extend(other.bound_violations);
        self
    }
}

fn bound(class: Class, n: usize) -> Option<f64> {
    match class {
        Class::Forest | Class::Interval => Some(3f64.sqrt().powi(n as i32).ceil()),
        Class::Chordal => Some(1.8940f64.powi(n as i32).ceil()),
        _ => None,
    }
}

fn run_case(c: &Case) -> Outcome {
    let mut out = Outcome { graphs: 1, ..Outcome::default() };
    let expected: BTreeSet<String> = oracle::enumerate_all(&c.graph).unwrap().map(|f| f.to_string()).collect();
    let mut it = enumerate(&c.graph, c.class, c.intervals.as_ref()).expect("corpus graph is in its class");
    let mut found = Vec::new();
    let mut stuck = false;
    for f in it.by_ref() {
        match f {
            Ok(f) => found.push(f.to_string()),
            Err(Error::Stuck { .. }) => {
                stuck = true;
                break;
            }
            Err(e) => panic!("{e}"),
        }
    }
    if let Some(s) = it.stats() {
        out.firings = s.rule_firings.clone();
    }
    out.stuck = stuck as usize;
    let set: BTreeSet<String> = found.iter().cloned().collect();
    if set.len() != found.len() || set != expected {
        out.mismatches.push(format!("{} {:?}", c.class, c.graph));
    }
    if let Some(b) = bound(c.class, c.graph.n()) {
        if found.len() as f64 > b {
            out.bound_violations.push(format!("{} n={} count={}", c.class, c.graph.n(), found.len()));
        }
    }
    out
}

fn corpus() -> Vec<(&'static str, Vec<Case>)> {
    let plain = |class, graph| Case { class, graph, intervals: None };
    let mut forest = Vec::new();
    for n in 5..=14 {
        for i in 0..200 {
            forest.push(plain(Class::Forest, generate::random_tree(n, &mut rng(n as u64, i))));
        }
        for i in 0..50 {
            forest.push(plain(Class::Forest, generate::random_forest(n, &mut rng(100 + n as u64, i))));
        }
    }
    let mut interval = Vec::new();
    for n in 6..=14 {
        for i in 0..100 {
            let (graph, rep) = generate::random_interval(n, &mut rng(200 + n as u64, i));
            interval.push(Case { class: Class::Interval, graph, intervals: Some(rep) });
        }
    }
    let mut chordal = Vec::new();
    for n in 6..=13 {
        for i in 0..100 {
            let mut r = rng(300 + n as u64, i);
            let k = r.gen_range(1..=4);
            chordal.push(plain(Class::Chordal, generate::random_chordal(n, k, &mut r)));
        }
    }
    let (mut split, mut cobipartite) = (Vec::new(), Vec::new());
    for n in 6..=14 {
        for i in 0..100 {
            split.push(plain(Class::Split, generate::random_split(n, &mut rng(400 + n as u64, i))));
            cobipartite.push(plain(Class::Cobipartite, generate::random_cobipartite(n, &mut rng(500 + n as u64, i))));
        }
    }
    vec![
        ("forest", forest),
        ("interval", interval),
        ("chordal", chordal),
        ("split", split),
        ("cobipartite", cobipartite),
    ]
}

/// Every labeled graph on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
    })
}

fn oracle_matches_definition(g: &Graph) -> bool {
    let a: BTreeSet<String> = oracle::enumerate_all(g).unwrap().map(|f| f.to_string()).collect();
    let b: Vec<String> = oracle::definitional_minimal(g).iter().map(|f| f.to_string()).collect();
    a.len() == b.len() && b.iter().all(|f| a.contains(f))
}

fn main() {
    let mut lines = Vec::new();

    // 1
    let start = Instant::now();
    let counts: Vec<BigUint> = (1..=7).map(paths::count_path).collect();
    let t = start.elapsed();
    let want: Vec<BigUint> = [1u32, 3, 4, 7, 12, 20, 34].iter().map(|&x| BigUint::from(x)).collect();
    report(
        &mut lines,
        1,
        counts == want && t < Duration::from_millis(1),
        format!("path counts n=1..7 = {counts:?} in {}", secs(t)),
    );

    // 2
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (1..=6).flat_map(all_graphs).collect();
    let exhaustive = graphs.len();
    for i in 0..500 {
        let mut r = rng(600, i);
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.1..0.9);
        graphs.push(generate::random_gnp(n, p, &mut r));
    }
    let bad = graphs.par_iter().filter(|g| !oracle_matches_definition(g)).count();
    let t = start.elapsed();
    report(
        &mut lines,
        2,
        bad == 0 && t < Duration::from_secs(120),
        format!("oracle = 3^n filter on {exhaustive} labeled graphs (n <= 6) + 500 random (n <= 7): {bad} disagreements, {}", secs(t)),
    );

    // 3, 9, 10 share the corpus
    let mut total = Outcome::default();
    let mut per_class = Vec::new();
    for (name, cases) in corpus() {
        let start = Instant::now();
        let o = cases.par_iter().map(run_case).reduce(Outcome::default, Outcome::merge);
        let t = start.elapsed();
        per_class.push((name, o.graphs, o.mismatches.len(), t));
        total = total.merge(o);
    }
    let ok3 = per_class.iter().all(|&(_, _, bad, t)| bad == 0 && t < Duration::from_secs(600));
    let detail: Vec<String> =
        per_class.iter().map(|(name, g, bad, t)| format!("{name} {bad}/{g} in {}", secs(*t))).collect();
    report(&mut lines, 3, ok3, format!("enumerator vs oracle mismatches: {}", detail.join(", ")));
    for m in total.mismatches.iter().take(5) {
        println!("    mismatch: {m}");
    }

    // 4
    let count = |f: Family| {
        let g = generate(f);
        enumerate(&g.graph, Class::Auto, None).unwrap().collect::<Result<Vec<_>, _>>().unwrap().len() as u64
    };
    let split_ok = (2..=12).all(|k| count(Family::SplitLowerBound(k)) == 2 * (1u64 << k) - 1);
    let p2_ok = (1..=12).all(|k| count(Family::P2Forest(k)) == 3u64.pow(k as u32));
    report(
        &mut lines,
        4,
        split_ok && p2_ok,
        format!("split_lb k=2..12 gives 2*2^k-1: {split_ok}; p2_forest k=1..12 gives 3^k: {p2_ok}"),
    );

    // 5
    let start = Instant::now();
    let mut off = Vec::new();
    let mut worst = BTreeMap::new();
    for name in BUILTIN_NAMES {
        let b = builtin_ruleset(name).unwrap();
        let a = mc::analyze_ruleset(&b.rules, b.weights, DEFAULT_FAMILY_CAP);
        for r in &a.rules {
            if let (Some(x), Some(reference)) = (r.number, r.reference) {
                if (x - reference).abs() >= 1e-3 {
                    off.push((format!("{name}/{}", r.name), x, reference));
                }
            }
        }
        worst.insert(name, a.worst_number);
    }
    let t = start.elapsed();
    let sqrt3 = 3f64.sqrt();
    let worst_ok = worst["interval"] <= sqrt3 + 1e-6
        && worst["forest"] <= sqrt3 + 1e-6
        && (worst["chordal"] - 1.8940).abs() < 1e-3;
    let listed: Vec<String> = off.iter().map(|(n, x, r)| format!("{n} {x:.4} vs {r}")).collect();
    report(
        &mut lines,
        5,
        off.is_empty() && worst_ok && t < Duration::from_secs(1),
        format!(
            "rule rows off by >= 1e-3: [{}]; worst interval {:.4}, forest {:.4}, chordal {:.4}; {}",
            listed.join("; "),
            worst["interval"],
            worst["forest"],
            worst["chordal"],
            secs(t)
        ),
    );

    // 6
    let r = mc::verify_sqrt3_family(50);
    report(&mut lines, 6, r.passed(), format!("sqrt(3) family n=1..50, violations {:?}", r.violations));

    // 7
    let b = builtin_ruleset("chordal").unwrap();
    let (w, best) = mc::optimize_weights(&b.rules, b.bounds, mc::Schedule::default(), DEFAULT_FAMILY_CAP);
    let at_builtin = mc::analyze_ruleset(&b.rules, WeightSet::new(0.710134, 0.434799), DEFAULT_FAMILY_CAP).worst_number;
    report(
        &mut lines,
        7,
        best <= 1.8940 + 1e-3 && (best - at_builtin).abs() <= 1e-3,
        format!("chordal optimum {best:.6} at ({:.4}, {:.4}); {at_builtin:.6} at the built-in weights", w.w1, w.w2),
    );

    // 8
    let ratio = paths::growth_estimate(40);
    report(&mut lines, 8, (1.675..=1.695).contains(&ratio), format!("count_path(40)/count_path(39) = {ratio:.6}"));

    // 9
    let generic = total.firings.get(FOREST_FALLBACK).copied().unwrap_or(0);
    let documented: Vec<String> = [FOREST_FALLBACK_OPEN_EDGE, CHORDAL_FALLBACK_V1_LEAF]
        .iter()
        .map(|name| format!("{name} x{}", total.firings.get(name).copied().unwrap_or(0)))
        .collect();
    report(
        &mut lines,
        9,
        total.stuck == 0 && generic == 0,
        format!(
            "stuck states {}, undocumented forest fallbacks {generic}; documented gap fallbacks: {}",
            total.stuck,
            documented.join(", ")
        ),
    );

    // 10
    report(
        &mut lines,
        10,
        total.bound_violations.is_empty(),
        format!("count above ceil(bound^n) on {} of {} corpus graphs", total.bound_violations.len(), total.graphs),
    );

    // Criterion 5 may only fail on the known reference errata.
    let unexpected: Vec<&Line> = lines
        .iter()
        .filter(|l| !l.pass)
        .filter(|l| l.id != 5 || !worst_ok || off.iter().any(|(n, _, _)| !KNOWN_REFERENCE_ERRATA.contains(&n.as_str())))
        .collect();
    let failing: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    println!("failing criteria: {failing:?} (known reference errata: {KNOWN_REFERENCE_ERRATA:?})");
    if !unexpected.is_empty() {
        for l in unexpected {
            eprintln!("unexpected failure of criterion {}: {}", l.id, l.text);
        }
        std::process::exit(1);
    }
}
