//! Interval graphs, driven by the leftmost live vertex of an interval model.
//!
//! Rules are tried in order; "leftmost" means smallest right endpoint, ties by
//! left endpoint and then id. With `ω1 = 1` and `ω2 = ω` the declared drops
//! below are the per-branch minimum measure decreases.

use crate::branch::{Action, BranchState, Branching, Label, Ruleset, Search, WeightSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::interval::{graph_from_intervals, IntervalRepresentation};

pub const INTERVAL_OMEGA: f64 = 0.57;

/// Safety-net rules for a leftmost `A` vertex `v` whose single `A`-neighbor
/// `u` has fewer than three `A`-neighbors while no path rule matches: `u` has
/// no other `A`-neighbor (`PAIR`), or one more without the required pendant or
/// right-hand neighbor (`PATH`). Both branch like `BR_P1`: if `v` gets 2 then
/// `u` is its only candidate private neighbor.
pub const INTERVAL_FALLBACK_PAIR: &str = "BR_P1-relaxed-pair";
pub const INTERVAL_FALLBACK_PATH: &str = "BR_P1-relaxed-path";

#[derive(Debug, Clone)]
pub struct IntervalRuleset<'r> {
    rep: &'r IntervalRepresentation,
    omega: f64,
}

impl<'r> IntervalRuleset<'r> {
    pub fn new(rep: &'r IntervalRepresentation) -> Self {
        IntervalRuleset { rep, omega: INTERVAL_OMEGA }
    }

    fn leftmost<I: IntoIterator<Item = Vertex>>(&self, it: I) -> Option<Vertex> {
        self.rep.leftmost(it)
    }
}

fn with(state: &BranchState, v: Vertex, labels: &[Label]) -> Vec<Vertex> {
    state.graph().neighbors(v).iter().copied().filter(|&u| labels.contains(&state.label(u))).collect()
}

fn not_two_all(vs: impl IntoIterator<Item = Vertex>) -> impl Iterator<Item = Action> {
    vs.into_iter().map(Action::NotTwo)
}

impl Ruleset for IntervalRuleset<'_> {
    fn name(&self) -> &'static str {
        "interval"
    }

    fn weights(&self) -> WeightSet {
        WeightSet::new(1.0, self.omega)
    }

    fn branch(&self, state: &BranchState) -> Option<Branching> {
        let g = state.graph();
        let w = self.omega;
        use Label::{NotV1, NotV2, A};

        if let Some(v) = self.leftmost(state.vertices_with(NotV1)) {
            let Some(u) = self.leftmost(with(state, v, &[A, NotV2])) else {
                return Some(
                    Branching::new("BRDom-no-target")
                        .as_fallback()
                        .child_unchecked(vec![Action::NotTwo(v)])
                        .child_unchecked(vec![Action::Two(v)]),
                );
            };
            return Some(
                Branching::new("BRDom")
                    .child(vec![Action::NotTwo(v)], 1.0)
                    .child(vec![Action::Two(v), Action::NotTwo(u)], 1.0 + w),
            );
        }

        let v = self.leftmost(g.vertices().filter(|&x| matches!(state.label(x), A | NotV2)))?;
        if state.label(v) == NotV2 {
            let na = with(state, v, &[A]);
            let nv: Vec<Vertex> = g.neighbors(v).to_vec();
            let k = na.len() as f64;
            let mut b = Branching::new("BR_TildeV2");
            for &u in &na {
                let mut acts = vec![Action::Two(u)];
                acts.extend(not_two_all(nv.iter().copied().filter(|&x| x != u)));
                b = b.child(acts, w + k);
            }
            return Some(b.child(not_two_all(nv.iter().copied()).collect(), w + (1.0 - w) * k));
        }

        let na = with(state, v, &[A]);
        let nv2 = with(state, v, &[NotV2]);
        if na.is_empty() {
            return Some(
                Branching::new("BRNotDominatable")
                    .child(vec![Action::Two(v)], 1.0 + w)
                    .child(vec![Action::NotTwo(v)], 1.0),
            );
        }
        if na.len() >= 2 {
            let mut first = vec![Action::Two(v)];
            first.extend(not_two_all(na.iter().copied()));
            return Some(Branching::new("BRP0").child(first, 3.0).child(vec![Action::NotTwo(v)], 1.0 - w));
        }
        let u = na[0];
        if !nv2.is_empty() {
            return Some(
                Branching::new("BR_P2TildeV2")
                    .child(vec![Action::Two(v), Action::NotTwo(u)], 2.0 + w)
                    .child(vec![Action::Two(u), Action::NotTwo(v)], 2.0 + w)
                    .child(vec![Action::NotTwo(u), Action::NotTwo(v)], 2.0 - w),
            );
        }

        // v has the single live A-neighbor u and no V̄2 neighbor.
        let nu_a = with(state, u, &[A]);
        let p1_children = |b: Branching, drops: Option<(f64, f64)>| {
            let mut first = vec![Action::Two(v), Action::NotTwo(u)];
            first.extend(not_two_all(g.neighbors(u).iter().copied().filter(|&x| x != v)));
            match drops {
                Some((d1, d2)) => b.child(first, d1).child(vec![Action::NotTwo(v)], d2),
                None => b.child_unchecked(first).child_unchecked(vec![Action::NotTwo(v)]),
            }
        };
        if nu_a.len() >= 3 {
            return Some(p1_children(Branching::new("BR_P1"), Some((2.0 + 2.0 * (1.0 - w), 1.0 - w))));
        }

        let (v1, v2) = (v, u);
        if nu_a.len() == 2 {
            let v3 = nu_a[0] + nu_a[1] - v1;
            let pendant = g
                .neighbors(v3)
                .iter()
                .copied()
                .find(|&x| x != v2 && matches!(state.label(x), A | NotV2) && state.live_neighbors(x).eq([v3]));
            if let Some(p) = pendant {
                return Some(
                    Branching::new("BR_P2single")
                        .child(vec![Action::Two(v1), Action::NotTwo(v2), Action::NotTwo(v3)], 3.0 - w)
                        .child(vec![Action::NotTwo(v1), Action::NotTwo(v2)], 2.0 - w)
                        .child(vec![Action::Two(v2), Action::NotTwo(v1), Action::NotTwo(v3), Action::NotTwo(p)], 4.0)
                        .child(vec![Action::Two(v2), Action::Two(v3), Action::NotTwo(v1), Action::NotTwo(p)], 4.0),
                );
            }
            let v2_live: Vec<Vertex> = with(state, v2, &[A, NotV2]);
            let v2_clean = state.label(v2) == A && v2_live.len() == 2 && v2_live.iter().all(|&x| state.label(x) == A);
            if v2_clean {
                let u = self.leftmost(state.vertices_with(A).filter(|&x| x != v1 && x != v2 && x != v3));
                if let Some(u) = u {
                    let nu = g.neighbors(u);
                    if nu.contains(&v3) && state.live_degree(u) >= 2 {
                        let mut fourth = vec![Action::Two(v2), Action::Two(v3), Action::NotTwo(v1), Action::NotTwo(u)];
                        fourth.extend(not_two_all(nu.iter().copied().filter(|&x| x != v3)));
                        return Some(
                            Branching::new("BRP3")
                                .child(vec![Action::Two(v1), Action::NotTwo(v2), Action::NotTwo(v3)], 3.0 - w)
                                .child(vec![Action::NotTwo(v1), Action::NotTwo(v2)], 2.0 - w)
                                .child(vec![Action::Two(v2), Action::NotTwo(v1), Action::NotTwo(v3)], 3.0)
                                .child(fourth, 5.0 - w),
                        );
                    }
                }
            }
        }

        let rule = if nu_a.len() == 1 { INTERVAL_FALLBACK_PAIR } else { INTERVAL_FALLBACK_PATH };
        Some(p1_children(Branching::new(rule).as_fallback(), None))
    }

    /// Every `V̄1` or `V̄2` vertex lies in the closed neighborhood of the
    /// leftmost live vertex.
    fn invariant_holds(&self, state: &BranchState) -> bool {
        let Some(l) = self.leftmost(state.live_vertices()) else {
            return true;
        };
        let g = state.graph();
        g.vertices()
            .filter(|&x| matches!(state.label(x), Label::NotV1 | Label::NotV2))
            .all(|x| g.in_closed_neighborhood(l, x))
    }
}

/// All minimal rdf of the interval graph `g` with model `rep`.
pub fn enumerate_interval<'g>(
    g: &'g Graph,
    rep: &'g IntervalRepresentation,
) -> Result<Search<'g, IntervalRuleset<'g>>> {
    if rep.len() != g.n() || graph_from_intervals(rep) != *g {
        return Err(Error::WrongClass {
            class: "interval",
            reason: "the interval model does not describe the given graph".into(),
        });
    }
    Ok(Search::from_graph(g, IntervalRuleset::new(rep)))
}
