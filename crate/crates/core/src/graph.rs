//! Simple undirected graphs with dense vertex ids and the edge-list text format.

use std::fmt;

use crate::error::ParseError;

/// Vertex identifier, dense in `0..n`.
pub type Vertex = usize;

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted and symmetric; there are no self-loops and
/// no parallel edges. The graph is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse.
    ///
    /// Panics on a self-loop or an endpoint outside `0..n`; use
    /// [`Graph::try_from_edges`] for untrusted input.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::try_from_edges(n, edges).expect("invalid edge")
    }

    pub fn try_from_edges<I>(n: usize, edges: I) -> Result<Self, EdgeError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(EdgeError::OutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(EdgeError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph { adj, edge_count: edge_count / 2 })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Open neighborhood, sorted ascending.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Closed neighborhood membership test.
    #[inline]
    pub fn in_closed_neighborhood(&self, v: Vertex, x: Vertex) -> bool {
        v == x || self.has_edge(v, x)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n() + other.n(), edges.collect::<Vec<_>>())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>())
    }

    /// Whether `set` induces a clique.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether `set` is independent.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Canonical text form: `n m` header, then one `u v` line per edge with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeError {
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// Iterates over meaningful lines: `(1-based line number, trimmed content)`,
/// skipping blanks and `#` comments. CRLF is tolerated.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| ParseError::new(line, format!("invalid {what} {tok:?}")))
}

/// Parses the edge-list format: a header `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(toks.next(), hline, "vertex count")?;
    let m = parse_usize(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(ParseError::new(hline, "trailing tokens in header"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let mut toks = content.split_whitespace();
        let u = parse_usize(toks.next(), line, "endpoint")?;
        let v = parse_usize(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(ParseError::new(line, "trailing tokens"));
        }
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::new(line, format!("id {x} out of range (n = {n})")));
            }
        }
        if u == v {
            return Err(ParseError::new(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::new(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2_and_p3() {
        let k2 = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edge_count(), 1);
        let p3 = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.neighbors(1), &[0, 2]);
        assert!(!p3.has_edge(0, 2));
    }

    #[test]
    fn rejects_out_of_range_with_line_number() {
        let err = parse_edge_list("3 2\n0 1\n0 3").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("id 3 out of range"), "{err}");
    }

    #[test]
    fn rejects_self_loop_and_garbage() {
        assert_eq!(parse_edge_list("3 1\n1 1").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n# c\n1 x").unwrap_err().line, 3);
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn duplicates_collapse_and_crlf_and_comments() {
        let g = parse_edge_list("# header follows\r\n3 3\r\n1 0\r\n0 1\r\n2 1\r\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.to_edge_list(), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn complement_and_components() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let c = p3.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(c.components(), vec![vec![0, 2], vec![1]]);
    }
}
