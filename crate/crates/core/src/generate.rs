//! Deterministic graph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::interval::{graph_from_intervals, Interval, IntervalRepresentation};

/// Named deterministic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_n` on `n` vertices.
    Path(usize),
    /// `C_n` on `n >= 3` vertices.
    Cycle(usize),
    /// `K_{1,n}`: center `0` and leaves `1..=n`.
    Star(usize),
    /// `k` disjoint edges.
    P2Forest(usize),
    /// Clique `c_0..c_{k-1}` with a pendant `v_i` on each `c_i` (split graph, order `2k`).
    SplitLowerBound(usize),
    /// Two `k`-cliques joined by a perfect matching (cobipartite, order `2k`).
    CobipartiteLowerBound(usize),
}

/// A generated graph, with an interval model when the family has a natural one.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub intervals: Option<IntervalRepresentation>,
}

impl Generated {
    fn plain(graph: Graph) -> Self {
        Generated { graph, intervals: None }
    }

    fn with_intervals(rep: IntervalRepresentation) -> Self {
        Generated { graph: graph_from_intervals(&rep), intervals: Some(rep) }
    }
}

pub fn generate(family: Family) -> Generated {
    match family {
        Family::Path(n) => {
            assert!(n >= 1);
            Generated::with_intervals(IntervalRepresentation::from_pairs((0..n).map(|i| (i as f64, i as f64 + 1.0))))
        }
        Family::Cycle(n) => {
            assert!(n >= 3, "a cycle needs at least three vertices");
            Generated::plain(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))))
        }
        Family::Star(n) => {
            assert!(n >= 1);
            let mut pairs = vec![(0.0, 2.0 * n as f64)];
            pairs.extend((0..n).map(|i| (2.0 * i as f64 + 0.25, 2.0 * i as f64 + 0.75)));
            Generated::with_intervals(IntervalRepresentation::from_pairs(pairs))
        }
        Family::P2Forest(k) => {
            assert!(k >= 1);
            let pairs = (0..k).flat_map(|i| {
                let b = 4.0 * i as f64;
                [(b, b + 2.0), (b + 1.0, b + 3.0)]
            });
            Generated::with_intervals(IntervalRepresentation::from_pairs(pairs))
        }
        Family::SplitLowerBound(k) => {
            assert!(k >= 1);
            let mut edges = clique_edges(0, k);
            edges.extend((0..k).map(|i| (i, k + i)));
            Generated::plain(Graph::from_edges(2 * k, edges))
        }
        Family::CobipartiteLowerBound(k) => {
            assert!(k >= 1);
            let mut edges = clique_edges(0, k);
            edges.extend(clique_edges(k, k));
            edges.extend((0..k).map(|i| (i, k + i)));
            Generated::plain(Graph::from_edges(2 * k, edges))
        }
    }
}

fn clique_edges(offset: usize, k: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((offset + i, offset + j));
        }
    }
    edges
}

fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<Vertex> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => return Graph::empty(0),
        1 => return Graph::empty(1),
        2 => return Graph::from_edges(2, [(0, 1)]),
        _ => {}
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Disjoint union of random trees with random sizes, randomly relabeled.
pub fn random_forest<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(0);
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        g = g.disjoint_union(&random_tree(size, rng));
        left -= size;
    }
    g.permuted(&random_permutation(n, rng))
}

/// Random interval model with `2n` pairwise distinct integer endpoints.
///
/// Raw endpoints are drawn with a random length scale and then replaced by
/// their ranks; at equal raw values left endpoints rank first, so touching
/// intervals stay adjacent and the intersection graph is unchanged.
pub fn random_interval<R: Rng>(n: usize, rng: &mut R) -> (Graph, IntervalRepresentation) {
    let span = (4 * n).max(4) as i64;
    let scale = [1, 2, 4, n.max(1) as i64, 2 * n.max(1) as i64][rng.gen_range(0..5)];
    let raw: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            (l, l + rng.gen_range(0..=scale))
        })
        .collect();
    // (value, is_right, vertex)
    let mut ends: Vec<(i64, bool, usize)> = Vec::with_capacity(2 * n);
    for (v, &(l, r)) in raw.iter().enumerate() {
        ends.push((l, false, v));
        ends.push((r, true, v));
    }
    ends.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut iv = vec![(0.0, 0.0); n];
    for (rank, &(_, is_right, v)) in ends.iter().enumerate() {
        if is_right {
            iv[v].1 = rank as f64;
        } else {
            iv[v].0 = rank as f64;
        }
    }
    let rep = IntervalRepresentation::new(iv.into_iter().map(|(l, r)| Interval::new(l, r)).collect());
    (graph_from_intervals(&rep), rep)
}

/// Random chordal graph grown like a partial `k`-tree.
///
/// Each new vertex picks a recorded clique and joins a random nonempty subset
/// of it (usually all of it), so its neighborhood is always a clique. Labels
/// are shuffled at the end.
pub fn random_chordal<R: Rng>(n: usize, k: usize, rng: &mut R) -> Graph {
    assert!(k >= 1);
    if n == 0 {
        return Graph::empty(0);
    }
    let seed = (k + 1).min(n);
    let mut edges = clique_edges(0, seed);
    let mut cliques: Vec<Vec<Vertex>> = vec![(0..seed).collect()];
    for v in seed..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        let mut chosen: Vec<Vertex> =
            if rng.gen_bool(0.6) { base.clone() } else { base.iter().copied().filter(|_| rng.gen_bool(0.5)).collect() };
        if chosen.is_empty() {
            chosen.push(base[rng.gen_range(0..base.len())]);
        }
        if chosen.len() > k {
            chosen.shuffle(rng);
            chosen.truncate(k);
        }
        edges.extend(chosen.iter().map(|&u| (u, v)));
        chosen.push(v);
        cliques.push(chosen);
    }
    Graph::from_edges(n, edges).permuted(&random_permutation(n, rng))
}

/// Random split graph: a clique of random size, the rest independent,
/// cross edges with a random density.
pub fn random_split<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let c = rng.gen_range(1..=n);
    let p = rng.gen_range(0.1..0.9);
    let mut edges = clique_edges(0, c);
    for i in c..n {
        for j in 0..c {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).permuted(&random_permutation(n, rng))
}

/// Random cobipartite graph: two cliques with random cross edges.
pub fn random_cobipartite<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let a = rng.gen_range(1..=n);
    let p = rng.gen_range(0.05..0.7);
    let mut edges = clique_edges(0, a);
    edges.extend(clique_edges(a, n - a));
    for i in 0..a {
        for j in a..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).permuted(&random_permutation(n, rng))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::{is_chordal, is_cobipartite, is_forest, is_split};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_families() {
        let p4 = generate(Family::Path(4));
        assert_eq!(p4.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.intervals.unwrap().interval(2), Interval::new(2.0, 3.0));
        let s = generate(Family::SplitLowerBound(2)).graph;
        assert_eq!((s.n(), s.edge_count()), (4, 3));
        let f = generate(Family::P2Forest(3)).graph;
        assert_eq!((f.n(), f.edge_count()), (6, 3));
        assert!(f.edges().all(|(u, v)| v == u + 1 && u % 2 == 0));
        let star = generate(Family::Star(4)).graph;
        assert_eq!(star.degree(0), 4);
        assert_eq!(star.edge_count(), 4);
        let cb = generate(Family::CobipartiteLowerBound(3)).graph;
        assert_eq!(cb.edge_count(), 3 + 3 + 3);
    }

    #[test]
    fn path_intervals_roundtrip() {
        for n in 1..10 {
            let g = generate(Family::Path(n));
            assert_eq!(graph_from_intervals(g.intervals.as_ref().unwrap()), g.graph);
        }
    }

    #[test]
    fn random_generators_land_in_their_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..14 {
            assert!(is_forest(&random_tree(n, &mut rng)));
            let t = random_tree(n, &mut rng);
            assert_eq!(t.components().len(), 1);
            assert!(is_forest(&random_forest(n, &mut rng)));
            assert!(is_chordal(&random_chordal(n, 1 + n % 3, &mut rng)).is_some());
            assert!(is_split(&random_split(n, &mut rng)).is_some());
            assert!(is_cobipartite(&random_cobipartite(n, &mut rng)).is_some());
            let (g, rep) = random_interval(n, &mut rng);
            assert!(is_chordal(&g).is_some());
            let mut ends: Vec<f64> = rep.intervals().iter().flat_map(|i| [i.left, i.right]).collect();
            ends.sort_by(f64::total_cmp);
            ends.dedup();
            assert_eq!(ends.len(), 2 * n);
        }
    }

    #[test]
    fn rank_compression_keeps_touching_intervals() {
        // Any seed works; the check is that the compressed model describes the
        // same graph as the raw one, which graph_from_intervals guarantees on
        // the compressed model, so compare against a brute recomputation.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (g, rep) = random_interval(9, &mut rng);
            assert_eq!(graph_from_intervals(&rep), g);
        }
    }
}
