//! Branch-and-reduce machinery shared by the class-specific enumerators.

mod engine;
mod state;

pub use engine::{AuditViolation, Search, Stats};
pub use state::{Action, BranchState, Label};

/// Weights of `V̄1` and `V̄2` vertices in the measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSet {
    pub w1: f64,
    pub w2: f64,
}

impl WeightSet {
    /// Panics unless both weights lie in `[0, 1]`.
    pub fn new(w1: f64, w2: f64) -> Self {
        assert!((0.0..=1.0).contains(&w1) && (0.0..=1.0).contains(&w2), "weights must lie in [0, 1]");
        WeightSet { w1, w2 }
    }
}

/// One child of a branching step.
#[derive(Debug, Clone)]
pub struct Child {
    pub actions: Vec<Action>,
    /// Minimum measure drop the rule promises for this child, if any.
    pub declared_drop: Option<f64>,
}

/// The outcome of a rule match: a named list of children.
#[derive(Debug, Clone)]
pub struct Branching {
    pub rule: &'static str,
    pub children: Vec<Child>,
    /// Set by safety-net branches that are not part of the ruleset proper.
    pub fallback: bool,
}

impl Branching {
    pub fn new(rule: &'static str) -> Self {
        Branching { rule, children: Vec::new(), fallback: false }
    }

    pub fn child(mut self, actions: Vec<Action>, declared_drop: f64) -> Self {
        self.children.push(Child { actions, declared_drop: Some(declared_drop) });
        self
    }

    pub fn child_unchecked(mut self, actions: Vec<Action>) -> Self {
        self.children.push(Child { actions, declared_drop: None });
        self
    }

    pub fn as_fallback(mut self) -> Self {
        self.fallback = true;
        self
    }
}

/// A class-specific rule list. `branch` sees a reduced, non-leaf state and
/// returns the first rule that applies.
pub trait Ruleset {
    fn name(&self) -> &'static str;

    fn weights(&self) -> WeightSet;

    fn branch(&self, state: &BranchState) -> Option<Branching>;

    /// Extra leaf condition checked before the minimality filter.
    fn accept_leaf(&self, _state: &BranchState) -> bool {
        true
    }

    /// Structural invariant audited at every inner node (debug runs only).
    fn invariant_holds(&self, _state: &BranchState) -> bool {
        true
    }
}
