use std::fmt;

use crate::graph::{Graph, Vertex};
use crate::rdf::{from_v2, RomanFunction};

use super::WeightSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    Two,
    NotTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Forced {
    Free,
    Zero,
    One,
}

/// Where a vertex stands in the search.
///
/// `A`, `NotV1` and `NotV2` are the live labels. `V0` is a vertex assigned 0
/// that still waits for a dominator. `Done(i)` is a vertex whose value `i` is
/// settled and which no longer takes part in any rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    A,
    NotV1,
    NotV2,
    V0,
    Done(u8),
}

impl Label {
    #[inline]
    pub fn is_live(self) -> bool {
        matches!(self, Label::A | Label::NotV1 | Label::NotV2)
    }

    /// Open vertices (`A` or `V̄1`) may still receive 2.
    #[inline]
    pub fn is_open(self) -> bool {
        matches!(self, Label::A | Label::NotV1)
    }

    fn code(self) -> char {
        match self {
            Label::A => 'a',
            Label::NotV1 => 'x',
            Label::NotV2 => 'y',
            Label::V0 => 'z',
            Label::Done(i) => (b'0' + i) as char,
        }
    }
}

/// A single decision applied to a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// Assign 2. Neighbors become dominated.
    Two(Vertex),
    /// Forbid 2.
    NotTwo(Vertex),
    /// Assign 0; the vertex waits in `V0` until dominated.
    Zero(Vertex),
    /// Assign 1. Neighbors can no longer receive 2.
    One(Vertex),
}

/// A node of the search tree.
///
/// Every vertex is either open (may still receive 2), assigned 2, or barred
/// from 2. Labels are derived from that decision together with the number of
/// neighbors assigned 2 and an optional forced value, so the value of every
/// vertex at a leaf follows from the set of 2s alone.
#[derive(Clone, PartialEq, Eq)]
pub struct BranchState<'g> {
    g: &'g Graph,
    decision: Vec<Decision>,
    forced: Vec<Forced>,
    dominators: Vec<u32>,
    dead: bool,
}

impl<'g> BranchState<'g> {
    /// Everything in `A`.
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        BranchState {
            g,
            decision: vec![Decision::Open; n],
            forced: vec![Forced::Free; n],
            dominators: vec![0; n],
            dead: false,
        }
    }

    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Whether an applied action contradicted earlier decisions.
    #[inline]
    pub fn is_dead(&self) -> bool {
        self.dead
    }

    #[inline]
    pub fn is_dominated(&self, v: Vertex) -> bool {
        self.dominators[v] > 0
    }

    #[inline]
    pub fn is_two(&self, v: Vertex) -> bool {
        self.decision[v] == Decision::Two
    }

    pub fn label(&self, v: Vertex) -> Label {
        let dominated = self.dominators[v] > 0;
        match (self.decision[v], self.forced[v]) {
            (Decision::Open, _) if dominated => Label::NotV1,
            (Decision::Open, _) => Label::A,
            (Decision::Two, _) => Label::Done(2),
            (Decision::NotTwo, Forced::One) => Label::Done(1),
            (Decision::NotTwo, _) if dominated => Label::Done(0),
            (Decision::NotTwo, Forced::Zero) => Label::V0,
            (Decision::NotTwo, Forced::Free) => Label::NotV2,
        }
    }

    #[inline]
    pub fn is_live(&self, v: Vertex) -> bool {
        self.label(v).is_live()
    }

    #[inline]
    pub fn is_open(&self, v: Vertex) -> bool {
        self.decision[v] == Decision::Open
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.g.vertices().filter(move |&v| self.is_live(v))
    }

    pub fn vertices_with(&self, label: Label) -> impl Iterator<Item = Vertex> + '_ {
        self.g.vertices().filter(move |&v| self.label(v) == label)
    }

    pub fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&u| self.is_live(u))
    }

    pub fn neighbors_with(&self, v: Vertex, label: Label) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&u| self.label(u) == label)
    }

    pub fn count_neighbors_with(&self, v: Vertex, label: Label) -> usize {
        self.neighbors_with(v, label).count()
    }

    /// Degree in the current graph, counting only live neighbors.
    pub fn live_degree(&self, v: Vertex) -> usize {
        self.live_neighbors(v).count()
    }

    pub fn has_open(&self) -> bool {
        self.decision.contains(&Decision::Open)
    }

    /// `|A| + ω1 |V̄1| + ω2 |V̄2|`.
    pub fn measure(&self, w: WeightSet) -> f64 {
        self.g
            .vertices()
            .map(|v| match self.label(v) {
                Label::A => 1.0,
                Label::NotV1 => w.w1,
                Label::NotV2 => w.w2,
                _ => 0.0,
            })
            .sum()
    }

    pub fn two_set(&self) -> Vec<Vertex> {
        self.g.vertices().filter(|&v| self.is_two(v)).collect()
    }

    pub fn apply(&mut self, action: Action) {
        match action {
            Action::Two(v) => self.assign_two(v),
            Action::NotTwo(v) => self.assign_not_two(v),
            Action::Zero(v) => self.assign_zero(v),
            Action::One(v) => self.assign_one(v),
        }
    }

    pub fn assign_two(&mut self, v: Vertex) {
        match self.decision[v] {
            Decision::Two => return,
            Decision::NotTwo => {
                self.dead = true;
                return;
            }
            Decision::Open => {}
        }
        self.decision[v] = Decision::Two;
        for &u in self.g.neighbors(v) {
            self.dominators[u] += 1;
            if self.forced[u] == Forced::One {
                self.dead = true;
            }
        }
    }

    pub fn assign_not_two(&mut self, v: Vertex) {
        match self.decision[v] {
            Decision::Two => self.dead = true,
            Decision::NotTwo => {}
            Decision::Open => self.decision[v] = Decision::NotTwo,
        }
    }

    pub fn assign_zero(&mut self, v: Vertex) {
        if self.decision[v] == Decision::Two || self.forced[v] == Forced::One {
            self.dead = true;
            return;
        }
        self.decision[v] = Decision::NotTwo;
        self.forced[v] = Forced::Zero;
    }

    pub fn assign_one(&mut self, v: Vertex) {
        if self.decision[v] == Decision::Two || self.forced[v] == Forced::Zero || self.dominators[v] > 0 {
            self.dead = true;
            return;
        }
        self.decision[v] = Decision::NotTwo;
        self.forced[v] = Forced::One;
        for &u in self.g.neighbors(v) {
            self.assign_not_two(u);
        }
    }

    /// Applies the reduction rules until none fires.
    ///
    /// * a `V̄2` vertex without an open neighbor can never be dominated: it gets 1;
    /// * a `V0` vertex without an open neighbor kills the branch;
    /// * an open vertex without a neighbor in `A ∪ V̄2 ∪ V0` has no candidate
    ///   private neighbor, so it cannot receive 2.
    pub fn reduce(&mut self) {
        let g = self.g;
        let mut changed = true;
        while changed && !self.dead {
            changed = false;
            for v in g.vertices() {
                match self.label(v) {
                    Label::NotV2 | Label::V0 => {
                        if !g.neighbors(v).iter().any(|&u| self.is_open(u)) {
                            if self.label(v) == Label::V0 {
                                self.dead = true;
                                return;
                            }
                            self.assign_one(v);
                            changed = true;
                        }
                    }
                    Label::A | Label::NotV1 => {
                        let can_be_private = |u: Vertex| matches!(self.label(u), Label::A | Label::NotV2 | Label::V0);
                        if !g.neighbors(v).iter().any(|&u| can_be_private(u)) {
                            self.assign_not_two(v);
                            changed = true;
                        }
                    }
                    Label::Done(_) => {}
                }
                if self.dead {
                    return;
                }
            }
        }
    }

    /// No open vertex left (after reduction this also means nothing is live).
    pub fn is_leaf(&self) -> bool {
        !self.has_open()
    }

    /// The function this leaf stands for, if its pending zeros are all dominated.
    pub fn leaf_function(&self) -> Option<RomanFunction> {
        if self.dead || self.g.vertices().any(|v| self.label(v) == Label::V0) {
            return None;
        }
        Some(from_v2(self.g, &self.two_set()))
    }

    /// One character per vertex: `a`, `x` (V̄1), `y` (V̄2), `z` (V0), or the settled value.
    pub fn serialize(&self) -> String {
        self.g.vertices().map(|v| self.label(v).code()).collect()
    }
}

impl fmt::Debug for BranchState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BranchState({}{})", self.serialize(), if self.dead { ", dead" } else { "" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn isolated_vertex_reduces_to_one() {
        let g = Graph::empty(1);
        let mut s = BranchState::new(&g);
        s.reduce();
        assert_eq!(s.serialize(), "1");
        assert!(s.is_leaf());
        assert_eq!(s.leaf_function().unwrap().to_string(), "1");
    }

    #[test]
    fn dominated_vertex_with_dominated_neighbors_becomes_zero() {
        // 0 - 1 - 2 - 3 with 0 assigned 2 and 3 assigned 2: 1 and 2 are V̄1
        // with only V̄1 neighbors among the live vertices.
        let g = generate(Family::Path(4)).graph;
        let mut s = BranchState::new(&g);
        s.assign_two(0);
        s.assign_two(3);
        assert_eq!(s.serialize(), "2xx2");
        s.reduce();
        assert_eq!(s.serialize(), "2002");
    }

    #[test]
    fn fixed_point_is_stable() {
        let g = generate(Family::Path(3)).graph;
        let mut s = BranchState::new(&g);
        s.reduce();
        let before = s.clone();
        s.reduce();
        assert_eq!(s, before);
        assert_eq!(s.serialize(), "aaa");
    }

    #[test]
    fn measure_counts_labels() {
        let g = generate(Family::Path(5)).graph;
        let w = WeightSet::new(1.0, 0.57);
        let mut s = BranchState::new(&g);
        assert_eq!(s.measure(w), 5.0);
        s.assign_not_two(4);
        s.assign_two(0);
        // 0 done, 1 in V̄1, 2 and 3 in A, 4 in V̄2
        assert_eq!(s.serialize(), "2xaay");
        assert!((s.measure(w) - 3.57).abs() < 1e-12);
    }

    #[test]
    fn contradictions_kill_the_state() {
        let g = generate(Family::Path(2)).graph;
        let mut s = BranchState::new(&g);
        s.assign_one(0);
        s.assign_two(1);
        assert!(s.is_dead());
        let mut s = BranchState::new(&g);
        s.assign_zero(0);
        s.assign_not_two(1);
        s.reduce();
        assert!(s.is_dead());
    }

    #[test]
    fn one_pushes_neighbors_out_of_two() {
        let g = generate(Family::Star(3)).graph;
        let mut s = BranchState::new(&g);
        s.assign_one(1);
        assert_eq!(s.label(0), Label::NotV2);
        assert_eq!(s.label(1), Label::Done(1));
    }
}
