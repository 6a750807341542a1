//! Interval representations and their (closed) intersection graphs.

use std::cmp::Ordering;

use crate::error::ParseError;
use crate::graph::{content_lines, Graph, Vertex};

/// A closed interval `[left, right]` on the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Self {
        assert!(left <= right, "interval [{left}, {right}] is reversed");
        Interval { left, right }
    }

    /// Closed intervals meet when they share at least one point.
    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// One interval per vertex, in vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalRepresentation { intervals }
    }

    pub fn from_pairs<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Self {
        Self::new(pairs.into_iter().map(|(l, r)| Interval::new(l, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    #[inline]
    pub fn interval(&self, v: Vertex) -> Interval {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Orders vertices "more to the left": smaller right endpoint, then smaller
    /// left endpoint, then smaller id.
    #[inline]
    pub fn leftmost_cmp(&self, u: Vertex, v: Vertex) -> Ordering {
        let (a, b) = (self.intervals[u], self.intervals[v]);
        a.right.total_cmp(&b.right).then(a.left.total_cmp(&b.left)).then(u.cmp(&v))
    }

    /// The leftmost vertex of `candidates`, if any.
    pub fn leftmost<I: IntoIterator<Item = Vertex>>(&self, candidates: I) -> Option<Vertex> {
        candidates.into_iter().min_by(|&a, &b| self.leftmost_cmp(a, b))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Self {
        let mut out = self.intervals.clone();
        for (v, &p) in perm.iter().enumerate() {
            out[p] = self.intervals[v];
        }
        IntervalRepresentation::new(out)
    }

    /// Text form accepted by [`parse_intervals`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.len());
        for iv in &self.intervals {
            s.push_str(&format!("{} {}\n", iv.left, iv.right));
        }
        s
    }
}

/// Parses a header line `n` followed by `n` lines `l r` of decimal numbers.
pub fn parse_intervals(text: &str) -> Result<IntervalRepresentation, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header"))?;
    let n: usize = header.parse().map_err(|_| ParseError::new(hline, format!("invalid interval count {header:?}")))?;
    let mut out = Vec::with_capacity(n);
    for (line, content) in lines {
        let nums: Vec<&str> = content.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(ParseError::new(line, "expected two endpoints"));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| ParseError::new(line, format!("invalid endpoint {s:?}")))
        };
        let (l, r) = (parse(nums[0])?, parse(nums[1])?);
        if l > r {
            return Err(ParseError::new(line, format!("left endpoint {l} exceeds right endpoint {r}")));
        }
        out.push(Interval { left: l, right: r });
    }
    if out.len() != n {
        return Err(ParseError::new(hline, format!("header announces {n} intervals, found {}", out.len())));
    }
    Ok(IntervalRepresentation::new(out))
}

/// The intersection graph: `uv` is an edge iff the closed intervals meet.
pub fn graph_from_intervals(rep: &IntervalRepresentation) -> Graph {
    let n = rep.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rep.interval(u).intersects(&rep.interval(v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Brute-force interval recognition for tiny graphs (`n <= 8`).
///
/// Searches over orderings of the maximal cliques for a consecutive
/// arrangement and returns a representation with integer endpoints.
pub fn recognize_interval_small(g: &Graph) -> Option<IntervalRepresentation> {
    assert!(g.n() <= 8, "brute-force interval recognition is limited to 8 vertices");
    let n = g.n();
    if n == 0 {
        return Some(IntervalRepresentation::new(Vec::new()));
    }
    let cliques = maximal_cliques(g);
    let k = cliques.len();
    let mut order: Vec<usize> = (0..k).collect();
    // Each vertex must occupy a contiguous run of cliques.
    let works = |order: &[usize]| -> Option<IntervalRepresentation> {
        let mut iv = Vec::with_capacity(n);
        for v in 0..n {
            let pos: Vec<usize> =
                order.iter().enumerate().filter(|(_, &c)| cliques[c] & (1 << v) != 0).map(|(i, _)| i).collect();
            let (lo, hi) = (pos[0], *pos.last().unwrap());
            if hi - lo + 1 != pos.len() {
                return None;
            }
            iv.push(Interval::new(lo as f64, hi as f64));
        }
        Some(IntervalRepresentation::new(iv))
    };
    permute_search(&mut order, 0, &works)
}

fn permute_search<F>(order: &mut Vec<usize>, i: usize, f: &F) -> Option<IntervalRepresentation>
where
    F: Fn(&[usize]) -> Option<IntervalRepresentation>,
{
    if i == order.len() {
        return f(order);
    }
    for j in i..order.len() {
        order.swap(i, j);
        if let Some(r) = permute_search(order, i + 1, f) {
            return Some(r);
        }
        order.swap(i, j);
    }
    None
}

fn maximal_cliques(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let is_clique = (0..n).filter(|&v| mask & (1 << v) != 0).all(|v| (mask & !(1 << v)) & !nbr[v] == 0);
        if !is_clique {
            continue;
        }
        let maximal = (0..n).all(|v| mask & (1 << v) != 0 || mask & !nbr[v] != 0);
        if maximal {
            out.push(mask);
        }
    }
    out
}
