use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rdf::{is_minimal_rdf, RomanFunction};

use super::{BranchState, Ruleset};

const KEPT_SAMPLES: usize = 32;

/// A child whose measure dropped less than its rule declared.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditViolation {
    pub rule: &'static str,
    pub child: usize,
    pub declared: f64,
    pub actual: f64,
    pub state: String,
}

/// Counters collected while a search runs.
#[derive(Debug, Clone, Default)]
pub struct Stats {
    pub nodes: u64,
    pub leaves: u64,
    pub emitted: u64,
    /// Children discarded because an action contradicted earlier decisions.
    pub dead: u64,
    /// Leaves dropped by the minimality filter.
    pub filtered: u64,
    pub rule_firings: BTreeMap<&'static str, u64>,
    pub fallback_firings: u64,
    /// Serialized states at the first few fallback firings.
    pub fallback_states: Vec<String>,
    pub audit_checks: u64,
    pub audit_violation_count: u64,
    pub audit_violations: Vec<AuditViolation>,
    pub duplicate_leaves: u64,
    pub invariant_violations: u64,
    pub invariant_states: Vec<String>,
}

type Prune = Box<dyn Fn(&BranchState) -> bool + Send + Sync>;

/// Depth-first branch-and-reduce search, yielding minimal rdf lazily.
///
/// Children are reduced as soon as they are created and explored in the
/// order the rule lists them, so the output order is deterministic.
pub struct Search<'g, R> {
    g: &'g Graph,
    ruleset: R,
    stack: Vec<BranchState<'g>>,
    stats: Stats,
    audit: bool,
    seen: HashSet<Vec<Vertex>>,
    prune: Option<Prune>,
    finished: bool,
}

impl<'g, R: Ruleset> Search<'g, R> {
    /// Starts from the given root states (reduced here). Auditing is on in
    /// debug builds.
    pub fn new(g: &'g Graph, ruleset: R, roots: Vec<BranchState<'g>>) -> Self {
        let mut search = Search {
            g,
            ruleset,
            stack: Vec::new(),
            stats: Stats::default(),
            audit: cfg!(debug_assertions),
            seen: HashSet::new(),
            prune: None,
            finished: false,
        };
        for mut root in roots.into_iter().rev() {
            root.reduce();
            if root.is_dead() {
                search.stats.dead += 1;
            } else {
                search.stack.push(root);
            }
        }
        search
    }

    /// Starts from the all-`A` state.
    pub fn from_graph(g: &'g Graph, ruleset: R) -> Self {
        Self::new(g, ruleset, vec![BranchState::new(g)])
    }

    pub fn with_audit(mut self, audit: bool) -> Self {
        self.audit = audit;
        self
    }

    /// Installs a predicate that discards a node (and its subtree) when it
    /// returns `true`, e.g. an extendibility test. None is installed by default.
    pub fn with_prune<F>(mut self, prune: F) -> Self
    where
        F: Fn(&BranchState) -> bool + Send + Sync + 'static,
    {
        self.prune = Some(Box::new(prune));
        self
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn ruleset(&self) -> &R {
        &self.ruleset
    }

    fn leaf(&mut self, state: &BranchState<'g>) -> Option<RomanFunction> {
        self.stats.leaves += 1;
        let f = state.leaf_function()?;
        if self.audit && !self.seen.insert(state.two_set()) {
            self.stats.duplicate_leaves += 1;
        }
        if !self.ruleset.accept_leaf(state) || !is_minimal_rdf(self.g, &f) {
            self.stats.filtered += 1;
            return None;
        }
        self.stats.emitted += 1;
        Some(f)
    }

    fn expand(&mut self, state: BranchState<'g>) -> Result<()> {
        if self.audit && !self.ruleset.invariant_holds(&state) {
            self.stats.invariant_violations += 1;
            if self.stats.invariant_states.len() < KEPT_SAMPLES {
                self.stats.invariant_states.push(state.serialize());
            }
        }
        let Some(branching) = self.ruleset.branch(&state) else {
            return Err(Error::Stuck { ruleset: self.ruleset.name(), state: state.serialize() });
        };
        *self.stats.rule_firings.entry(branching.rule).or_default() += 1;
        if branching.fallback {
            self.stats.fallback_firings += 1;
            log::debug!("{}: fallback branch at {}", self.ruleset.name(), state.serialize());
            if self.stats.fallback_states.len() < KEPT_SAMPLES {
                self.stats.fallback_states.push(state.serialize());
            }
        }
        let weights = self.ruleset.weights();
        let before = if self.audit { state.measure(weights) } else { 0.0 };
        let mut children = Vec::with_capacity(branching.children.len());
        for (i, child) in branching.children.iter().enumerate() {
            let mut next = state.clone();
            for &a in &child.actions {
                next.apply(a);
            }
            next.reduce();
            if next.is_dead() {
                self.stats.dead += 1;
                continue;
            }
            if let (true, Some(declared)) = (self.audit, child.declared_drop) {
                self.stats.audit_checks += 1;
                let actual = before - next.measure(weights);
                if actual < declared - 1e-9 {
                    self.stats.audit_violation_count += 1;
                    if self.stats.audit_violations.len() < KEPT_SAMPLES {
                        self.stats.audit_violations.push(AuditViolation {
                            rule: branching.rule,
                            child: i,
                            declared,
                            actual,
                            state: state.serialize(),
                        });
                    }
                }
            }
            children.push(next);
        }
        self.stack.extend(children.into_iter().rev());
        Ok(())
    }
}

impl<R: Ruleset> Iterator for Search<'_, R> {
    type Item = Result<RomanFunction>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        while let Some(state) = self.stack.pop() {
            self.stats.nodes += 1;
            if self.prune.as_ref().is_some_and(|p| p(&state)) {
                continue;
            }
            if state.is_leaf() {
                if let Some(f) = self.leaf(&state) {
                    return Some(Ok(f));
                }
                continue;
            }
            if let Err(e) = self.expand(state) {
                self.finished = true;
                self.stack.clear();
                return Some(Err(e));
            }
        }
        self.finished = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::{Action, Branching, WeightSet};
    use crate::generate::{generate, Family};

    /// Branches on the smallest open vertex: 2 or not 2.
    struct Binary;

    impl Ruleset for Binary {
        fn name(&self) -> &'static str {
            "binary"
        }
        fn weights(&self) -> WeightSet {
            WeightSet::new(1.0, 0.5)
        }
        fn branch(&self, state: &BranchState) -> Option<Branching> {
            let v = state.graph().vertices().find(|&v| state.is_open(v))?;
            Some(
                Branching::new("binary").child_unchecked(vec![Action::Two(v)]).child_unchecked(vec![Action::NotTwo(v)]),
            )
        }
    }

    struct Never;

    impl Ruleset for Never {
        fn name(&self) -> &'static str {
            "never"
        }
        fn weights(&self) -> WeightSet {
            WeightSet::new(1.0, 0.5)
        }
        fn branch(&self, _: &BranchState) -> Option<Branching> {
            None
        }
    }

    fn run<R: Ruleset>(g: &Graph, r: R) -> Vec<String> {
        let mut out: Vec<String> = Search::from_graph(g, r).map(|f| f.unwrap().to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn k1_and_p2() {
        assert_eq!(run(&Graph::empty(1), Binary), vec!["1"]);
        assert_eq!(run(&generate(Family::Path(2)).graph, Binary), vec!["02", "11", "20"]);
    }

    #[test]
    fn binary_search_matches_oracle() {
        let g = generate(Family::Cycle(7)).graph;
        let mut expected: Vec<String> = crate::oracle::enumerate_all(&g).unwrap().map(|f| f.to_string()).collect();
        expected.sort();
        let mut search = Search::from_graph(&g, Binary);
        let mut got: Vec<String> = search.by_ref().map(|f| f.unwrap().to_string()).collect();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(search.stats().duplicate_leaves, 0);
    }

    #[test]
    fn stuck_is_reported_once() {
        let g = generate(Family::Path(3)).graph;
        let mut s = Search::from_graph(&g, Never);
        assert!(matches!(s.next(), Some(Err(Error::Stuck { ruleset: "never", .. }))));
        assert!(s.next().is_none());
    }

    #[test]
    fn prune_hook_cuts_subtrees() {
        let g = generate(Family::Path(3)).graph;
        let all = Search::from_graph(&g, Binary).with_prune(|_| true).count();
        assert_eq!(all, 0);
    }
}
