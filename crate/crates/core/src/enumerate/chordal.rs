//! Chordal graphs. The rules are tried in order; each one fires on the
//! smallest qualifying vertex. Degrees and neighborhoods count live vertices
//! only, and "simplicial" refers to the live induced subgraph, which stays
//! chordal.
//!
//! When a vertex `v` with a clique neighborhood gets 2, none of its neighbors
//! can get 2 as well, since that neighbor would dominate all of `N[v]` and
//! leave `v` without a private neighbor. Rules branching on a simplicial
//! vertex use this in their first child.

use crate::branch::{Action, BranchState, Branching, Label, Ruleset, Search, WeightSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognize::is_chordal;

pub const CHORDAL_OMEGA1: f64 = 0.710134;
pub const CHORDAL_OMEGA2: f64 = 0.434799;

/// Safety-net branch for a `V̄1` leaf whose neighbor is in `V̄2` and has a
/// further `V̄1` neighbor, a state no rule of the list matches. Branches on
/// the leaf: 2 / not 2.
pub const CHORDAL_FALLBACK_V1_LEAF: &str = "fallback-V1-leaf-at-V2";

#[derive(Debug, Clone)]
pub struct ChordalRuleset {
    w1: f64,
    w2: f64,
}

impl Default for ChordalRuleset {
    fn default() -> Self {
        ChordalRuleset { w1: CHORDAL_OMEGA1, w2: CHORDAL_OMEGA2 }
    }
}

impl ChordalRuleset {
    pub fn with_weights(w1: f64, w2: f64) -> Self {
        ChordalRuleset { w1, w2 }
    }
}

struct View<'a, 'g> {
    st: &'a BranchState<'g>,
    nb: Vec<Vec<Vertex>>,
}

impl View<'_, '_> {
    fn label(&self, v: Vertex) -> Label {
        self.st.label(v)
    }

    fn n(&self, v: Vertex) -> &[Vertex] {
        &self.nb[v]
    }

    fn deg(&self, v: Vertex) -> usize {
        self.nb[v].len()
    }

    fn count(&self, v: Vertex, labels: &[Label]) -> usize {
        self.nb[v].iter().filter(|&&u| labels.contains(&self.label(u))).count()
    }

    fn all_in(&self, vs: impl IntoIterator<Item = Vertex>, labels: &[Label]) -> bool {
        vs.into_iter().all(|u| labels.contains(&self.label(u)))
    }

    fn simplicial(&self, v: Vertex) -> bool {
        let g = self.st.graph();
        let nb = &self.nb[v];
        nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    }

    /// Live closed neighborhood of `a` is contained in that of `b`.
    fn closed_within(&self, a: Vertex, b: Vertex) -> bool {
        let g = self.st.graph();
        self.nb[a].iter().all(|&x| x == b || g.has_edge(x, b))
    }
}

use Action::{NotTwo as N, Two as T};
use Label::{NotV1 as V1bar, NotV2 as V2bar, A};

fn binary(rule: &'static str, v: Vertex, two: f64, not_two: f64) -> Branching {
    Branching::new(rule).child(vec![T(v)], two).child(vec![N(v)], not_two)
}

/// `v` gets 2 and its (clique) neighborhood cannot.
fn simplicial_two(v: Vertex, nb: &[Vertex]) -> Vec<Action> {
    std::iter::once(T(v)).chain(nb.iter().map(|&u| N(u))).collect()
}

impl ChordalRuleset {
    fn rules(&self, s: &View, live: &[Vertex]) -> Option<Branching> {
        let (w1, w2) = (self.w1, self.w2);
        let m = (1.0 - w1).min(w2);

        for &v in live {
            if s.label(v) == A && s.count(v, &[A, V2bar]) >= 3 {
                return Some(binary("3-in-A", v, 1.0 + 3.0 * m, 1.0 - w2));
            }
        }
        for &v in live {
            if s.label(v) != A {
                continue;
            }
            for &wv in s.n(v).iter().filter(|&&x| s.label(x) == V2bar) {
                let special = s.n(v).iter().any(|&u| {
                    s.label(u) == V1bar && s.all_in(s.n(u).iter().copied().filter(|&x| x != v && x != wv), &[V1bar])
                });
                if special {
                    return Some(binary("A-with-one-notV2-and-one-special-notV1", v, 1.0 + w1 + w2, 1.0 - w2));
                }
            }
        }
        for &v in live {
            if s.label(v) == V1bar && s.count(v, &[V2bar]) >= 2 {
                return Some(binary("2-not-in-V1-bar", v, w1 + 2.0 * w2, w1));
            }
        }
        for &v in live {
            if s.label(v) == V1bar && s.count(v, &[A, V2bar]) >= 3 {
                return Some(binary("2-not-in-V1-bar-a", v, w1 + m + 2.0 * (1.0 - w1), w1));
            }
        }
        for &v in live {
            if s.label(v) == V1bar && s.deg(v) >= 2 && s.simplicial(v) {
                return Some(
                    Branching::new("simp-not-in-V1")
                        .child(simplicial_two(v, s.n(v)), 2.0 * w1 + w2)
                        .child(vec![N(v)], w1),
                );
            }
        }
        for &v in live {
            if s.label(v) == V2bar && s.count(v, &[V1bar]) == 1 && s.count(v, &[A]) == 0 {
                let wv = s.n(v).iter().copied().find(|&x| s.label(x) == V1bar).unwrap();
                return Some(binary("pendant-adjacent", wv, w1 + w2, w1 + w2));
            }
        }
        for &v in live {
            if s.label(v) != A || s.deg(v) != 1 || s.label(s.n(v)[0]) != V2bar {
                continue;
            }
            let wv = s.n(v)[0];
            let others: Vec<Vertex> = s.n(wv).iter().copied().filter(|&x| x != v).collect();
            if s.all_in(others.iter().copied(), &[V2bar]) {
                return Some(binary("pendant-in-A-1", v, 1.0 + w2, 1.0 + w2));
            }
            let mut first = vec![T(v)];
            first.extend(others.iter().map(|&x| N(x)));
            return Some(
                Branching::new("pendant-in-A-1-a").child(first, 1.0 + w2 + (1.0 - w2).min(w1)).child(vec![N(v)], 1.0),
            );
        }
        for &v in live {
            if s.label(v) != A || s.count(v, &[A]) != 1 || s.count(v, &[V2bar]) != 0 {
                continue;
            }
            let wv = s.n(v).iter().copied().find(|&x| s.label(x) == A).unwrap();
            let mut first = vec![T(v), N(wv)];
            first.extend(s.n(wv).iter().filter(|&&x| x != v).map(|&x| N(x)));
            return Some(Branching::new("pendant-in-A-2").child(first, 2.0).child(vec![N(v)], 1.0 - w2));
        }
        for &v in live {
            if s.label(v) == V2bar && s.deg(v) == 1 && s.label(s.n(v)[0]) == A {
                return Some(binary("pendant-not-in-V2", s.n(v)[0], 1.0 + w2, 1.0));
            }
        }
        for &v in live {
            if s.label(v) != V1bar || s.deg(v) != 1 {
                continue;
            }
            let wv = s.n(v)[0];
            if s.label(wv) == A && s.count(wv, &[A]) == 2 {
                let mut first = vec![T(v), N(wv)];
                first.extend(s.n(wv).iter().filter(|&&x| x != v).map(|&x| N(x)));
                return Some(
                    Branching::new("pendant-not-in-V1-activ")
                        .child(first, 1.0 + w1 + 2.0 * (1.0 - w2))
                        .child(vec![N(v)], w1),
                );
            }
        }
        for &v in live {
            if s.label(v) != A || s.deg(v) < 2 || !s.simplicial(v) {
                continue;
            }
            if s.all_in(s.n(v).iter().copied(), &[V2bar]) {
                return Some(
                    Branching::new("simp-non-pendant-in-A-1")
                        .child(simplicial_two(v, s.n(v)), 1.0 + 2.0 * w2)
                        .child(vec![N(v)], 1.0),
                );
            }
            if s.count(v, &[A]) > 0 {
                return Some(
                    Branching::new("simp-non-pendant-in-A-2")
                        .child(simplicial_two(v, s.n(v)), 2.0 + w2)
                        .child(vec![N(v)], 1.0 - w2),
                );
            }
        }
        for &v in live {
            if s.label(v) != V2bar || s.deg(v) != 2 || !s.simplicial(v) {
                continue;
            }
            let (a, b) = (s.n(v)[0], s.n(v)[1]);
            let (la, lb) = (s.label(a), s.label(b));
            if la == A && lb == V2bar || la == V2bar && lb == A {
                let wv = if la == A { a } else { b };
                return Some(binary("simp-non-pandant-not-in-V2-1", wv, 1.0 + 2.0 * w2, 1.0));
            }
            if la == A && lb == A {
                return Some(
                    Branching::new("simp-non-pandant-not-in-V2-2")
                        .child(vec![T(a)], 2.0 - w1 + w2)
                        .child(vec![T(b), N(a)], 2.0 + w2)
                        .child(vec![N(a), N(b)], 2.0 - w2),
                );
            }
        }
        for &v in live {
            if s.label(v) != V2bar || s.deg(v) < 2 || !s.simplicial(v) {
                continue;
            }
            for &wv in s.n(v) {
                if s.label(wv) == V1bar && s.all_in(s.n(wv).iter().copied().filter(|&x| x != v), &[V1bar]) {
                    return Some(binary("simp-non-pendant-not-in-V2-3", wv, 2.0 * w1 + w2, w1));
                }
            }
        }
        for &v in live {
            if s.label(v) != V2bar || s.deg(v) < 2 || !s.simplicial(v) {
                continue;
            }
            for &wa in s.n(v).iter().filter(|&&x| s.label(x) == V1bar) {
                for &wb in s.n(v).iter().filter(|&&x| x != wa && s.label(x) == V1bar) {
                    if s.closed_within(wa, wb) {
                        return Some(
                            Branching::new("semi-simp").child(vec![T(wb), N(wa)], 2.0 * w1 + w2).child(vec![N(wb)], w1),
                        );
                    }
                }
            }
        }
        None
    }
}

impl Ruleset for ChordalRuleset {
    fn name(&self) -> &'static str {
        "chordal"
    }

    fn weights(&self) -> WeightSet {
        WeightSet::new(self.w1, self.w2)
    }

    fn branch(&self, state: &BranchState) -> Option<Branching> {
        let g = state.graph();
        let nb = g
            .vertices()
            .map(|v| if state.is_live(v) { state.live_neighbors(v).collect() } else { Vec::new() })
            .collect();
        let live: Vec<Vertex> = state.live_vertices().collect();
        let view = View { st: state, nb };
        if let Some(b) = self.rules(&view, &live) {
            return Some(b);
        }
        let &v =
            live.iter().find(|&&v| view.label(v) == V1bar && view.deg(v) == 1 && view.label(view.n(v)[0]) == V2bar)?;
        log::debug!("chordal: no rule applies to {}, branching on the leaf {v}", state.serialize());
        Some(
            Branching::new(CHORDAL_FALLBACK_V1_LEAF)
                .as_fallback()
                .child_unchecked(vec![T(v)])
                .child_unchecked(vec![N(v)]),
        )
    }
}

/// All minimal rdf of the chordal graph `g`. A state matched by no rule ends
/// the stream with [`Error::Stuck`].
pub fn enumerate_chordal(g: &Graph) -> Result<Search<'_, ChordalRuleset>> {
    if is_chordal(g).is_none() {
        return Err(Error::WrongClass {
            class: "chordal",
            reason: "the graph has an induced cycle of length at least 4".into(),
        });
    }
    Ok(Search::from_graph(g, ChordalRuleset::default()))
}
