//! Measure-and-conquer analysis: branching numbers of branching vectors,
//! whole rule lists, and a grid search over the measure weights.

pub mod builtin;
pub mod dsl;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

pub use builtin::{builtin_ruleset, BuiltinRuleset, BUILTIN_NAMES};
pub use dsl::{parse_rules, parse_vector, BranchingVector, NamedVector};

use crate::branch::WeightSet;

pub const DEFAULT_FAMILY_CAP: usize = 64;
const TOLERANCE: f64 = 1e-12;
const DIRECTIONS: usize = 64;

fn excess(drops: &[f64], x: f64) -> f64 {
    drops.iter().map(|&a| x.powf(-a)).sum::<f64>() - 1.0
}

/// The root `x ≥ 1` of `Σ x^(-a_i) = 1`, or `None` if some drop is not
/// positive (or not finite) or the vector is empty.
pub fn try_branching_number(drops: &[f64]) -> Option<f64> {
    if drops.is_empty() || drops.iter().any(|&a| !(a > 0.0 && a.is_finite())) {
        return None;
    }
    if drops.len() == 1 {
        return Some(1.0);
    }
    let (mut lo, mut hi) = (1.0, 4.0);
    while excess(drops, hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    // relative once the root is large: tiny drops give huge numbers
    while hi - lo > TOLERANCE * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if excess(drops, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Branching number of a vector of measure drops, by bisection.
///
/// Panics if the vector is empty or has a non-positive entry.
pub fn branching_number(drops: &[f64]) -> f64 {
    try_branching_number(drops).unwrap_or_else(|| panic!("branching vector {drops:?} must have positive entries"))
}

/// Branching number of a parsed vector; families are maximized over
/// `k = 1..=family_cap`. Returns the number and the maximizing `k`.
pub fn vector_number(v: &BranchingVector, w: WeightSet, family_cap: usize) -> Option<(f64, Option<usize>)> {
    if !v.is_family() {
        return try_branching_number(&v.evaluate(w, 1)).map(|x| (x, None));
    }
    let mut best: Option<(f64, Option<usize>)> = None;
    for k in 1..=family_cap {
        let x = try_branching_number(&v.evaluate(w, k))?;
        if best.is_none_or(|(b, _)| x > b) {
            best = Some((x, Some(k)));
        }
    }
    best
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleNumber {
    pub name: String,
    pub vector: String,
    /// `None` when some drop is not positive at these weights.
    pub number: Option<f64>,
    /// Maximizing family member, for vectors indexed by `k`.
    pub worst_k: Option<usize>,
    pub reference: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RulesetAnalysis {
    pub w1: f64,
    pub w2: f64,
    pub rules: Vec<RuleNumber>,
    pub worst_rule: String,
    /// Infinite when some rule has a non-positive drop.
    pub worst_number: f64,
}

impl RulesetAnalysis {
    /// Aligned plain-text report.
    pub fn to_text(&self) -> String {
        let width = self.rules.iter().map(|r| r.name.chars().count()).max().unwrap_or(4).max(4);
        let mut out = format!("weights: w1 = {:.6}, w2 = {:.6}\n", self.w1, self.w2);
        for r in &self.rules {
            let number = r.number.map_or("invalid".to_string(), |x| format!("{x:.4}"));
            let k = r.worst_k.map_or(String::new(), |k| format!(" (k = {k})"));
            let reference = r.reference.map_or(String::new(), |x| format!("  [reference {x}]"));
            let pad = width - r.name.chars().count();
            let _ = writeln!(out, "{}{}  {number:>8}{k}  {}{reference}", r.name, " ".repeat(pad), r.vector);
        }
        let _ = writeln!(out, "worst: {} = {:.4}", self.worst_rule, self.worst_number);
        out
    }
}

/// Branching number of every rule at the given weights.
pub fn analyze_ruleset(rules: &[NamedVector], w: WeightSet, family_cap: usize) -> RulesetAnalysis {
    let mut rows = Vec::with_capacity(rules.len());
    let (mut worst_rule, mut worst_number) = (String::new(), f64::NEG_INFINITY);
    for r in rules {
        let res = vector_number(&r.vector, w, family_cap);
        let x = res.map_or(f64::INFINITY, |(x, _)| x);
        if x > worst_number {
            worst_number = x;
            worst_rule = r.name.clone();
        }
        rows.push(RuleNumber {
            name: r.name.clone(),
            vector: r.vector.to_string(),
            number: res.map(|(x, _)| x),
            worst_k: res.and_then(|(_, k)| k),
            reference: r.reference,
        });
    }
    RulesetAnalysis { w1: w.w1, w2: w.w2, rules: rows, worst_rule, worst_number }
}

fn worst(rules: &[NamedVector], w: WeightSet, family_cap: usize) -> f64 {
    rules
        .iter()
        .map(|r| vector_number(&r.vector, w, family_cap).map_or(f64::INFINITY, |(x, _)| x))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Closed ranges for the two weights; a degenerate range fixes a weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightBounds {
    pub w1: (f64, f64),
    pub w2: (f64, f64),
}

impl Default for WeightBounds {
    fn default() -> Self {
        WeightBounds { w1: (0.0, 1.0), w2: (0.0, 1.0) }
    }
}

/// Coarse grid step, then the step of the local refinement around the best
/// coarse point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schedule {
    pub coarse: f64,
    pub fine: f64,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule { coarse: 0.01, fine: 1e-4 }
    }
}

fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| (lo + i as f64 * step).min(hi)).collect()
}

fn grid_min(rules: &[NamedVector], a1: &[f64], a2: &[f64], family_cap: usize) -> (WeightSet, f64) {
    let points: Vec<(f64, f64)> = a1.iter().flat_map(|&x| a2.iter().map(move |&y| (x, y))).collect();
    let (i, best) = points
        .par_iter()
        .enumerate()
        .map(|(i, &(x, y))| (i, worst(rules, WeightSet::new(x, y), family_cap)))
        .reduce(|| (usize::MAX, f64::INFINITY), |a, b| if b.1 < a.1 || (b.1 == a.1 && b.0 < a.0) { b } else { a });
    let (x, y) = points.get(i).copied().unwrap_or((a1[0], a2[0]));
    (WeightSet::new(x, y), best)
}

/// Weights minimizing the worst branching number over the bounds.
pub fn optimize_weights(
    rules: &[NamedVector],
    bounds: WeightBounds,
    schedule: Schedule,
    family_cap: usize,
) -> (WeightSet, f64) {
    let (b1, b2) = (bounds.w1, bounds.w2);
    assert!(0.0 <= b1.0 && b1.0 <= b1.1 && b1.1 <= 1.0, "w1 bounds must lie in [0, 1]");
    assert!(0.0 <= b2.0 && b2.0 <= b2.1 && b2.1 <= 1.0, "w2 bounds must lie in [0, 1]");
    let (w, _) = grid_min(rules, &axis(b1.0, b1.1, schedule.coarse), &axis(b2.0, b2.1, schedule.coarse), family_cap);
    let near = |c: f64, (lo, hi): (f64, f64)| {
        axis((c - schedule.coarse).max(lo), (c + schedule.coarse).min(hi), schedule.fine)
    };
    let (mut w, mut best) = grid_min(rules, &near(w.w1, b1), &near(w.w2, b2), family_cap);
    // The optimum tends to sit in a narrow valley between two rules; follow it
    // with a pattern search over many directions at shrinking steps.
    let mut step = schedule.fine;
    while step >= schedule.fine * 1e-2 {
        let mut moved = false;
        for i in 0..DIRECTIONS {
            let (dy, dx) = (i as f64 * std::f64::consts::TAU / DIRECTIONS as f64).sin_cos();
            let x = (w.w1 + dx * step).clamp(b1.0, b1.1);
            let y = (w.w2 + dy * step).clamp(b2.0, b2.1);
            let cand = WeightSet::new(x, y);
            let val = worst(rules, cand, family_cap);
            if val < best {
                (w, best, moved) = (cand, val, true);
                break;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    (w, best)
}

#[derive(Debug, Clone, Serialize)]
pub struct Sqrt3Report {
    pub omega: f64,
    /// Branching number for `n = 1, 2, ...`.
    pub numbers: Vec<f64>,
    /// Values of `n` whose number exceeds `√3` by more than the tolerance.
    pub violations: Vec<usize>,
}

impl Sqrt3Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `(ω+n, …, ω+n [n times], ω+(1−ω)n)` has branching number at
/// most `√3` for `n = 1..=n_max` at `ω = 0.57`.
pub fn verify_sqrt3_family(n_max: usize) -> Sqrt3Report {
    assert!(n_max >= 1, "n_max must be positive");
    let omega = crate::enumerate::interval::INTERVAL_OMEGA;
    let bound = 3f64.sqrt() + 1e-9;
    let mut numbers = Vec::with_capacity(n_max);
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let k = n as f64;
        let mut drops = vec![omega + k; n];
        drops.push(omega + (1.0 - omega) * k);
        let x = branching_number(&drops);
        if x > bound {
            violations.push(n);
        }
        numbers.push(x);
    }
    Sqrt3Report { omega, numbers, violations }
}

/// Base of the split / cobipartite enumeration bound: the number of `(1, 3)`.
pub fn split_constant() -> f64 {
    branching_number(&[1.0, 3.0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_numbers() {
        assert!((branching_number(&[1.0, 1.0]) - 2.0).abs() < 1e-9);
        assert!((branching_number(&[2.0, 2.0]) - 2f64.sqrt()).abs() < 1e-9);
        assert!((branching_number(&[1.0, 1.57]) - 1.7314).abs() < 1e-3);
        assert_eq!(branching_number(&[3.0]), 1.0);
        assert!((split_constant() - 1.4656).abs() < 1e-4);
        assert!(try_branching_number(&[1.0, 0.0]).is_none());
        assert!(try_branching_number(&[]).is_none());
    }

    #[test]
    fn tiny_drops_expand_the_bracket() {
        let x = branching_number(&[0.1, 0.1]);
        assert!((x - 2f64.powf(10.0)).abs() / x < 1e-9);
    }

    #[test]
    fn sqrt3_family() {
        let r = verify_sqrt3_family(50);
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.numbers.len(), 50);
    }

    #[test]
    fn optimizer_on_single_rule() {
        let rules = parse_rules("flat: (1, 1)").unwrap();
        let (_, x) = optimize_weights(&rules, WeightBounds::default(), Schedule::default(), 4);
        assert!((x - 2.0).abs() < 1e-9);
    }
}
