//! Forests. `Â` is the set of open vertices (`A ∪ V̄1`); `L` is the set of
//! leaves of the live forest. Rules are tried in order, each on the smallest
//! qualifying vertex, and all neighborhoods below are live neighborhoods.

use crate::branch::{Action, BranchState, Branching, Label, Ruleset, Search, WeightSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognize::is_forest;

pub const FOREST_OMEGA: f64 = 0.57;

/// Safety-net binary branch for stuck states outside the known gap.
pub const FOREST_FALLBACK: &str = "fallback";
/// Safety-net branch on a live component that is a single edge with both
/// ends in `Â`. No rule of the list matches such a component.
pub const FOREST_FALLBACK_OPEN_EDGE: &str = "fallback-open-edge";

#[derive(Debug, Clone)]
pub struct ForestRuleset {
    omega: f64,
}

impl Default for ForestRuleset {
    fn default() -> Self {
        ForestRuleset { omega: FOREST_OMEGA }
    }
}

/// Live adjacency of the current forest.
struct View<'a, 'g> {
    st: &'a BranchState<'g>,
    nb: Vec<Vec<Vertex>>,
}

impl<'a, 'g> View<'a, 'g> {
    fn new(st: &'a BranchState<'g>) -> Self {
        let g = st.graph();
        let nb =
            g.vertices().map(|v| if st.is_live(v) { st.live_neighbors(v).collect() } else { Vec::new() }).collect();
        View { st, nb }
    }

    fn hat_a(&self, v: Vertex) -> bool {
        self.st.is_open(v)
    }

    fn not_v2(&self, v: Vertex) -> bool {
        self.st.label(v) == Label::NotV2
    }

    fn leaf(&self, v: Vertex) -> bool {
        self.nb[v].len() == 1
    }

    fn n(&self, v: Vertex) -> &[Vertex] {
        &self.nb[v]
    }

    fn deg(&self, v: Vertex) -> usize {
        self.nb[v].len()
    }

    /// The live neighbors of `v` that are leaves.
    fn leaf_nbrs(&self, v: Vertex) -> Vec<Vertex> {
        self.nb[v].iter().copied().filter(|&x| self.leaf(x)).collect()
    }

    /// For `u` with live neighborhood `{v, w}`, the other neighbor `w`.
    fn other(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        match self.nb[u][..] {
            [a, b] if a == v => Some(b),
            [a, b] if b == v => Some(a),
            _ => None,
        }
    }

    /// `x` is the single leaf neighbor of `w`, where `N(w) = {prev, x}` and
    /// both `w` and `x` are in `Â`.
    fn tail_leaf(&self, w: Vertex, prev: Vertex) -> Option<Vertex> {
        let x = self.other(w, prev)?;
        (self.hat_a(w) && self.hat_a(x) && self.leaf(x)).then_some(x)
    }
}

use Action::{NotTwo as N, Two as T};

impl ForestRuleset {
    fn rules(&self, s: &View) -> Option<Branching> {
        let w = self.omega;
        let live: Vec<Vertex> = s.st.live_vertices().collect();

        // BRLeafnot2
        for &v in &live {
            if s.not_v2(v) && s.leaf(v) && s.hat_a(s.n(v)[0]) {
                let u = s.n(v)[0];
                return Some(Branching::new("BRLeafnot2").child(vec![T(u)], 1.0 + w).child(vec![N(u)], 1.0));
            }
        }
        // BRLeafParentnot2
        for &v in &live {
            if !s.not_v2(v) {
                continue;
            }
            if let Some(&u) = s.n(v).iter().find(|&&u| s.hat_a(u) && s.leaf(u)) {
                return Some(Branching::new("BRLeafParentnot2").child(vec![T(u)], 1.0 + w).child(vec![N(u)], 1.0));
            }
        }
        // BRParentLeafs
        for &v in &live {
            if !s.hat_a(v) {
                continue;
            }
            let leaves: Vec<Vertex> = s.leaf_nbrs(v).into_iter().filter(|&x| s.hat_a(x)).collect();
            if let [u, x, ..] = leaves[..] {
                return Some(
                    Branching::new("BRParentLeafs")
                        .child(vec![T(u), N(v), N(x)], 3.0)
                        .child(vec![T(x), N(u), N(v)], 3.0)
                        .child(vec![T(v), N(u), N(x)], 3.0)
                        .child(vec![N(u), N(v), N(x)], 3.0 - w),
                );
            }
        }
        // From here on every live vertex has at most one leaf neighbor in Â.

        // u ∈ N(v) ∩ Â with N(u) = {v, w}, w ∈ Â a leaf
        let p2_tail = |v: Vertex, u: Vertex| -> Option<Vertex> {
            if !s.hat_a(u) {
                return None;
            }
            let x = s.other(u, v)?;
            (s.hat_a(x) && s.leaf(x)).then_some(x)
        };
        // u ∈ N(v) ∩ Â with N(u) = {v, w}, N(w) = {u, x}, x ∈ Â a leaf
        let p3_tail = |v: Vertex, u: Vertex| -> Option<(Vertex, Vertex)> {
            if !s.hat_a(u) {
                return None;
            }
            let wv = s.other(u, v)?;
            let x = s.tail_leaf(wv, u)?;
            Some((wv, x))
        };
        // u, w, x with N(u) = {v, w}, N(w) = {u, x}, N(x) = {w, y}, y ∈ Â a leaf
        let p4_tail = |v: Vertex, u: Vertex| -> Option<(Vertex, Vertex, Vertex)> {
            if !s.hat_a(u) {
                return None;
            }
            let wv = s.other(u, v)?;
            if !s.hat_a(wv) {
                return None;
            }
            let x = s.other(wv, u)?;
            let y = s.tail_leaf(x, wv)?;
            Some((wv, x, y))
        };

        // BRP2vnot2
        for &v in &live {
            if !s.not_v2(v) {
                continue;
            }
            for &u in s.n(v) {
                if let Some(x) = p2_tail(v, u) {
                    return Some(
                        Branching::new("BRP2vnot2")
                            .child(vec![T(u), N(x)], 2.0 + w)
                            .child(vec![T(x), N(u)], 2.0)
                            .child(vec![N(u), N(x)], 2.0),
                    );
                }
            }
        }
        // BRP2ParentLeaf
        for &v in &live {
            if !s.hat_a(v) {
                continue;
            }
            let Some(&x) = s.n(v).iter().find(|&&x| s.hat_a(x) && s.leaf(x)) else {
                continue;
            };
            for &u in s.n(v) {
                if let Some(wl) = p2_tail(v, u) {
                    return Some(
                        Branching::new("BRP2ParentLeaf")
                            .child(vec![T(v), N(wl), N(x)], 3.0 - w)
                            .child(vec![T(x), N(v), N(u)], 3.0 - w)
                            .child(vec![N(v), N(x)], 2.0 - w),
                    );
                }
            }
        }
        // BR2P2: two neighbors of v each carrying exactly one leaf in Â
        for &v in &live {
            if !s.hat_a(v) {
                continue;
            }
            let carriers: Vec<(Vertex, Vertex)> = s
                .n(v)
                .iter()
                .copied()
                .filter(|&u| s.hat_a(u))
                .filter_map(|u| {
                    let ls: Vec<Vertex> = s.leaf_nbrs(u).into_iter().filter(|&x| x != v && s.hat_a(x)).collect();
                    (ls.len() == 1).then(|| (u, ls[0]))
                })
                .collect();
            if let [(u1, w1), (u2, w2), ..] = carriers[..] {
                return Some(
                    Branching::new("BR2P2")
                        .child(vec![T(v), T(u1), T(u2), N(w1), N(w2)], 5.0)
                        .child(vec![T(v), T(u1), N(u2), N(w1), N(w2)], 5.0)
                        .child(vec![T(v), T(u2), N(u1), N(w1), N(w2)], 5.0)
                        .child(vec![T(v), N(u1), N(u2), N(w1), N(w2)], 5.0)
                        .child(vec![T(u1), N(v), N(w1)], 3.0)
                        .child(vec![T(u2), T(w1), N(v), N(u1), N(w2)], 5.0)
                        .child(vec![T(w2), T(w1), N(v), N(u1), N(u2)], 5.0 - w)
                        .child(vec![T(w1), N(v), N(u1), N(u2), N(w2)], 5.0 - w)
                        .child(vec![T(u2), N(v), N(u1), N(w1), N(w2)], 5.0)
                        .child(vec![T(w2), N(v), N(u1), N(u2), N(w1)], 5.0 - w)
                        .child(vec![N(v), N(u1), N(u2), N(w1), N(w2)], 5.0 - w),
                );
            }
        }
        // BRP3vnot2
        for &v in &live {
            if !s.not_v2(v) {
                continue;
            }
            for &u in s.n(v) {
                if let Some((wv, x)) = p3_tail(v, u) {
                    return Some(
                        Branching::new("BRP3vnot2")
                            .child(vec![T(u), N(x)], 2.0)
                            .child(vec![T(wv), N(u), N(x)], 3.0)
                            .child(vec![N(u), N(wv)], 2.0 - w),
                    );
                }
            }
        }
        // BRP3ParentLeaf
        for &v in &live {
            if !s.hat_a(v) {
                continue;
            }
            let Some(&y) = s.n(v).iter().find(|&&y| s.leaf(y)) else {
                continue;
            };
            for &u in s.n(v) {
                if let Some((wv, x)) = p3_tail(v, u) {
                    return Some(
                        Branching::new("BRP3ParentLeaf")
                            .child(vec![T(v), N(y)], 2.0)
                            .child(vec![T(u), N(v), N(x)], 4.0 - w)
                            .child(vec![T(wv), N(v), N(u), N(x)], 4.0 - w)
                            .child(vec![T(x), N(v), N(u), N(wv)], 4.0 - w)
                            .child(vec![N(v), N(u), N(wv), N(x)], 4.0 - w),
                    );
                }
            }
        }
        // BRP3P2
        for &v in &live {
            if !s.hat_a(v) {
                continue;
            }
            for &u in s.n(v) {
                let Some((wv, x)) = p3_tail(v, u) else {
                    continue;
                };
                for &y in s.n(v) {
                    if y == u {
                        continue;
                    }
                    if let Some(z) = p2_tail(v, y) {
                        return Some(
                            Branching::new("BRP3P2")
                                .child(vec![T(v), T(u), N(wv), N(x), N(z)], 5.0 - w)
                                .child(vec![T(v), T(y), N(u), N(z)], 4.0)
                                .child(vec![T(v), N(u), N(y), N(z)], 4.0)
                                .child(vec![T(u), T(wv), N(v), N(x), N(y)], 5.0 - w)
                                .child(vec![T(u), N(v), N(wv), N(x)], 4.0)
                                .child(vec![T(wv), N(v), N(u), N(x)], 4.0 - w)
                                .child(vec![T(x), N(v), N(u), N(wv)], 4.0 - w)
                                .child(vec![N(v), N(u), N(wv), N(x)], 4.0 - w),
                        );
                    }
                }
            }
        }
        // BR2P3
        for &v in &live {
            if !s.hat_a(v) {
                continue;
            }
            let arms: Vec<(Vertex, Vertex, Vertex)> =
                s.n(v).iter().filter_map(|&u| p3_tail(v, u).map(|(wv, x)| (u, wv, x))).collect();
            if let [(u1, w1, x1), (u2, w2, x2), ..] = arms[..] {
                return Some(
                    Branching::new("BR2P3")
                        .child(vec![T(u1), T(u2), N(w1), N(w2), N(x1), N(x2)], 6.0)
                        .child(vec![T(u1), T(w1), N(v), N(u2), N(x1)], 5.0 - w)
                        .child(vec![T(u1), N(u2), N(w1), N(x1)], 4.0 - w)
                        .child(vec![T(w1), N(u1), N(x1)], 3.0)
                        .child(vec![T(x1), N(u1), N(w1)], 3.0 - w)
                        .child(vec![N(u1), N(w1), N(x1)], 3.0 - w),
                );
            }
        }
        // BRP4not2 and BRP3Tree share the shape v - u - w - x - y.
        for not_v2 in [true, false] {
            for &v in &live {
                if s.not_v2(v) != not_v2 || !(not_v2 || s.hat_a(v)) {
                    continue;
                }
                for &u in s.n(v) {
                    let Some((wv, x, y)) = p4_tail(v, u) else {
                        continue;
                    };
                    let b = if not_v2 {
                        Branching::new("BRP4not2")
                            .child(vec![T(u), T(wv), N(x), N(y)], 4.0 + w)
                            .child(vec![T(u), N(wv)], 2.0 + w)
                            .child(vec![T(wv), T(x), N(u), N(y)], 4.0)
                            .child(vec![T(wv), N(u), N(x), N(y)], 4.0)
                            .child(vec![T(x), N(u), N(wv), N(y)], 4.0)
                            .child(vec![N(u), N(wv), N(x)], 3.0 - w)
                    } else {
                        Branching::new("BRP3Tree")
                            .child(vec![T(y), N(x), N(wv)], 3.0 - w)
                            .child(vec![N(y), N(x)], 2.0 - w)
                            .child(vec![T(x), N(y), N(wv)], 3.0)
                            .child(vec![T(x), T(wv), N(y), N(u), N(v)], 5.0 - w)
                    };
                    return Some(b);
                }
            }
        }
        None
    }
}

impl Ruleset for ForestRuleset {
    fn name(&self) -> &'static str {
        "forest"
    }

    fn weights(&self) -> WeightSet {
        WeightSet::new(1.0, self.omega)
    }

    fn branch(&self, state: &BranchState) -> Option<Branching> {
        let view = View::new(state);
        if let Some(b) = self.rules(&view) {
            return Some(b);
        }
        // Safety net: open vertex of largest live degree, smallest id on ties.
        let v = state
            .graph()
            .vertices()
            .filter(|&v| state.is_open(v))
            .max_by(|&a, &b| view.deg(a).cmp(&view.deg(b)).then(b.cmp(&a)))?;
        log::debug!("forest: no rule applies to {}, branching on {v}", state.serialize());
        let open_edge = view.deg(v) == 1 && {
            let u = view.n(v)[0];
            view.deg(u) == 1 && view.hat_a(u)
        };
        Some(
            Branching::new(if open_edge { FOREST_FALLBACK_OPEN_EDGE } else { FOREST_FALLBACK })
                .as_fallback()
                .child_unchecked(vec![T(v)])
                .child_unchecked(vec![N(v)]),
        )
    }
}

/// All minimal rdf of the forest `g`.
pub fn enumerate_forest(g: &Graph) -> Result<Search<'_, ForestRuleset>> {
    if !is_forest(g) {
        return Err(Error::WrongClass { class: "forest", reason: "the graph contains a cycle".into() });
    }
    Ok(Search::from_graph(g, ForestRuleset::default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn examples() {
        assert_eq!(enumerate_forest(&generate(Family::Path(5)).graph).unwrap().count(), 12);
        assert_eq!(enumerate_forest(&generate(Family::Star(4)).graph).unwrap().count(), 6);
        assert_eq!(enumerate_forest(&generate(Family::P2Forest(4)).graph).unwrap().count(), 81);
        let c4 = generate(Family::Cycle(4)).graph;
        assert!(matches!(enumerate_forest(&c4), Err(Error::WrongClass { .. })));
    }

    #[test]
    fn open_edge_is_the_only_stuck_shape_on_small_trees() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5)]);
        let mut s = enumerate_forest(&g).unwrap();
        s.by_ref().for_each(drop);
        assert!(s.stats().rule_firings.contains_key(FOREST_FALLBACK_OPEN_EDGE));
        assert!(!s.stats().rule_firings.contains_key(FOREST_FALLBACK));
    }

    #[test]
    fn spider_matches_oracle() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let mut got: Vec<String> = enumerate_forest(&g).unwrap().map(|f| f.unwrap().to_string()).collect();
        let mut exp: Vec<String> = crate::oracle::enumerate_all(&g).unwrap().map(|f| f.to_string()).collect();
        got.sort();
        exp.sort();
        assert_eq!(got, exp);
    }
}
