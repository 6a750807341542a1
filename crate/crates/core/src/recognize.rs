//! Graph-class recognizers used to route inputs to a specialized enumerator.

use crate::graph::{Graph, Vertex};

/// A forest has exactly `n - c` edges, where `c` is the number of components.
pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// Clique / independent-set partition of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// Two-clique partition of a cobipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobipartitePartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// Recognizes split graphs from the degree sequence.
///
/// Vertices are taken greedily by non-increasing degree; the longest prefix
/// whose `i`-th degree is at least `i - 1` is the candidate clique, and the
/// degree-sum identity decides membership.
pub fn is_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let m = order.iter().enumerate().take_while(|&(i, &v)| g.degree(v) >= i).count();
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = order[..m].to_vec();
    let mut independent = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    debug_assert!(g.is_clique(&clique) && g.is_independent(&independent));
    if n > 0 && !(g.is_clique(&clique) && g.is_independent(&independent)) {
        return None;
    }
    Some(SplitPartition { clique, independent })
}

/// Recognizes cobipartite graphs by 2-coloring the complement.
pub fn is_cobipartite(g: &Graph) -> Option<CobipartitePartition> {
    let co = g.complement();
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for s in g.vertices() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let cu = color[u].unwrap();
            for &w in co.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    _ => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for v in g.vertices() {
        if color[v] == Some(false) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some(CobipartitePartition { left, right })
}

/// Maximum Cardinality Search visiting order (ties by smaller id).
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited[v]).max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))).unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Whether `order` is a perfect elimination ordering: each vertex is
/// simplicial in the subgraph induced by itself and the vertices after it.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if !later.iter().all(|&w| w == parent || g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// Chordality via MCS: the reversed visiting order is returned when it is a
/// perfect elimination ordering.
pub fn is_chordal(g: &Graph) -> Option<Vec<Vertex>> {
    let mut order = mcs_order(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

/// Vertices of `alive` whose alive neighbors form a clique, ascending.
pub fn simplicial_vertices(g: &Graph, alive: &[bool]) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| alive[v])
        .filter(|&v| {
            let nb: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
            g.is_clique(&nb)
        })
        .collect()
}
