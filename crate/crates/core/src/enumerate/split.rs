//! Split and cobipartite graphs.
//!
//! In a minimal rdf of a split graph `(C, I)` the 2s lie entirely in `C` or
//! entirely in `I`. When at least two of them share a clique side, their
//! private neighbors lie on the other side, so one rule list handles "the 2s
//! live on side S and find private neighbors on side T":
//!
//! * an open S-vertex with at least two undominated T-neighbors branches on 2 / not 2;
//! * otherwise the smallest open S-vertex `v` has one such neighbor `w`; if `v`
//!   gets 2 then `w` is its private neighbor, so the other open S-neighbors of
//!   `w` cannot get 2.
//!
//! For split graphs the roots are "no 2 in C" (side I) and, for each `c` in C,
//! "`c` is the smallest 2 in C" (side C). For cobipartite graphs the roots are
//! the empty set, every cross pair `{x, y}`, and the smallest-2 roots on both
//! sides.

use crate::branch::{Action, BranchState, Branching, Ruleset, Search, WeightSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognize::{CobipartitePartition, SplitPartition};

/// The two-sided rule list; `side[v]` is 0 or 1.
#[derive(Debug, Clone)]
pub struct SideRuleset {
    side: Vec<u8>,
    /// Side hosting the 2s when no vertex has 2 yet.
    default_side: u8,
}

impl SideRuleset {
    fn host_side(&self, state: &BranchState) -> u8 {
        state.graph().vertices().find(|&v| state.is_two(v)).map_or(self.default_side, |v| self.side[v])
    }
}

impl Ruleset for SideRuleset {
    fn name(&self) -> &'static str {
        "split"
    }

    fn weights(&self) -> WeightSet {
        WeightSet::new(1.0, 1.0)
    }

    fn branch(&self, state: &BranchState) -> Option<Branching> {
        let g = state.graph();
        let s = self.host_side(state);
        let open: Vec<Vertex> = g.vertices().filter(|&v| state.is_open(v) && self.side[v] == s).collect();
        let targets = |v: Vertex| -> Vec<Vertex> {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| self.side[u] != s && state.is_live(u) && !state.is_dominated(u))
                .collect()
        };
        if let Some(&v) = open.iter().find(|&&v| targets(v).len() >= 2) {
            return Some(
                Branching::new("split-many-targets")
                    .child_unchecked(vec![Action::Two(v)])
                    .child_unchecked(vec![Action::NotTwo(v)]),
            );
        }
        let &v = open.first()?;
        let t = targets(v);
        if t.len() != 1 {
            return None;
        }
        let w = t[0];
        let rivals: Vec<Vertex> =
            g.neighbors(w).iter().copied().filter(|&x| x != v && self.side[x] == s && state.is_open(x)).collect();
        let rule = if rivals.is_empty() { "split-private-pendant" } else { "split-shared-target" };
        let mut first = vec![Action::Two(v)];
        first.extend(rivals.into_iter().map(Action::NotTwo));
        Some(Branching::new(rule).child_unchecked(first).child_unchecked(vec![Action::NotTwo(v)]))
    }
}

fn side_mask(n: usize, one: &[Vertex]) -> Vec<u8> {
    let mut side = vec![0u8; n];
    for &v in one {
        side[v] = 1;
    }
    side
}

/// "`c0` is the smallest 2 on its side": `c0` gets 2, smaller same-side ids and
/// the whole other side cannot.
fn smallest_two_root<'g>(g: &'g Graph, side: &[u8], c0: Vertex) -> BranchState<'g> {
    let mut st = BranchState::new(g);
    st.assign_two(c0);
    for v in g.vertices() {
        if side[v] != side[c0] || v < c0 {
            st.assign_not_two(v);
        }
    }
    st
}

fn check_partition(g: &Graph, a: &[Vertex], b: &[Vertex], class: &'static str) -> Result<()> {
    let mut seen = vec![0u8; g.n()];
    for &v in a.iter().chain(b) {
        if v >= g.n() {
            return Err(Error::WrongClass { class, reason: format!("vertex {v} out of range") });
        }
        seen[v] += 1;
    }
    if seen.iter().any(|&c| c != 1) {
        return Err(Error::WrongClass { class, reason: "the two sides must partition the vertices".into() });
    }
    Ok(())
}

/// All minimal rdf of a split graph with the given clique / independent set.
pub fn enumerate_split<'g>(g: &'g Graph, p: &SplitPartition) -> Result<Search<'g, SideRuleset>> {
    check_partition(g, &p.clique, &p.independent, "split")?;
    if !g.is_clique(&p.clique) || !g.is_independent(&p.independent) {
        return Err(Error::WrongClass {
            class: "split",
            reason: "partition is not a clique plus an independent set".into(),
        });
    }
    // side 1 = C, side 0 = I
    let side = side_mask(g.n(), &p.clique);
    let mut roots = Vec::with_capacity(p.clique.len() + 1);
    let mut no_two_in_c = BranchState::new(g);
    for &c in &p.clique {
        no_two_in_c.assign_not_two(c);
    }
    roots.push(no_two_in_c);
    let mut clique = p.clique.clone();
    clique.sort_unstable();
    roots.extend(clique.iter().map(|&c| smallest_two_root(g, &side, c)));
    Ok(Search::new(g, SideRuleset { side, default_side: 0 }, roots))
}

/// All minimal rdf of a cobipartite graph with cliques `left` and `right`.
pub fn enumerate_cobipartite<'g>(g: &'g Graph, p: &CobipartitePartition) -> Result<Search<'g, SideRuleset>> {
    check_partition(g, &p.left, &p.right, "cobipartite")?;
    if !g.is_clique(&p.left) || !g.is_clique(&p.right) {
        return Err(Error::WrongClass { class: "cobipartite", reason: "both sides must be cliques".into() });
    }
    let side = side_mask(g.n(), &p.right);
    let mut roots = Vec::new();
    let mut none = BranchState::new(g);
    for v in g.vertices() {
        none.assign_not_two(v);
    }
    roots.push(none);
    let (mut left, mut right) = (p.left.clone(), p.right.clone());
    left.sort_unstable();
    right.sort_unstable();
    for &x in &left {
        for &y in &right {
            let mut st = BranchState::new(g);
            st.assign_two(x);
            st.assign_two(y);
            for v in g.vertices().filter(|&v| v != x && v != y) {
                st.assign_not_two(v);
            }
            roots.push(st);
        }
    }
    for &c in left.iter().chain(&right) {
        roots.push(smallest_two_root(g, &side, c));
    }
    Ok(Search::new(g, SideRuleset { side, default_side: 0 }, roots))
}
