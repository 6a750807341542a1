//! The branching vectors of the built-in enumerators. Each row may carry the
//! branching number expected at the built-in weights.

use crate::branch::WeightSet;
use crate::enumerate::chordal::{CHORDAL_OMEGA1, CHORDAL_OMEGA2};
use crate::enumerate::forest::FOREST_OMEGA;
use crate::enumerate::interval::INTERVAL_OMEGA;

use super::dsl::{parse_rules, NamedVector};
use super::WeightBounds;

const INTERVAL: &str = "
BRDom: (1, 1+w2) = 1.7314
BRNotDominatable: (1, 1+w2) = 1.7314
BRP0: (3, 1-w2) = 1.6992
BR_P2TildeV2: (2+w2, 2+w2, 2-w2) = 1.6829
BR_P1: (2+2*(1-w2), 1-w2) = 1.7274
BR_P2single: (3-w2, 2-w2, 4, 4) = 1.6877
BRP3: (3-w2, 2-w2, 3, 5-w2) = 1.7315
BR_TildeV2: (k*(w2+k), w2+(1-w2)*k)
";

const FOREST: &str = "
BRLeafnot2: (1+w2, 1) = 1.7314
BRLeafParentnot2: (1+w2, 1) = 1.7314
BRParentLeafs: (3, 3, 3, 3-w2) = 1.6288
BRP2vnot2: (2, 2, 2+w2) = 1.6582
BRP2ParentLeaf: (3-w2, 3-w2, 2-w2) = 1.7164
BR2P2: (5, 5, 5, 5, 3, 5, 5-w2, 5-w2, 5, 5-w2, 5-w2) = 1.7029
BRP3vnot2: (2, 3, 2-w2) = 1.7156
BRP3ParentLeaf: (2, 4-w2, 4-w2, 4-w2, 4-w2) = 1.6966
BRP3P2: (5-w2, 4, 4, 5-w2, 4, 4-w2, 4-w2, 4-w2) = 1.7158
BR2P3: (6, 5-w2, 4-w2, 3, 3-w2, 3-w2) = 1.7296
BRP4not2: (4+w2, 2+w2, 4, 4, 4, 3-w2) = 1.7275
BRP3Tree: (3-w2, 2-w2, 3, 5-w2) = 1.7315
";

const CHORDAL: &str = "
3-in-A: (1-w2, 1+3*min(1-w1, w2)) = 1.8940
A-with-one-notV2-and-one-special-notV1: (1+w1+w2, 1-w2) = 1.8014
2-not-in-V1-bar: (w1, w1+2*w2) = 1.8940
2-not-in-V1-bar-a: (w1, 2-w1+min(1-w1, w2)) = 1.8940
2-not-in-V1-bar-a (alt form): (w1, w1+min(1-w1, w2)+2*(1-w1)) = 1.8940
simp-not-in-V1: (w1, 2*w1+w2) = 1.7915
simp-non-pendant-not-in-V2-3: (w1, 2*w1+w2) = 1.7915
pendant-adjacent: (w1+w2, w1+w2) = 1.8321
pendant-in-A-1: (1+w2, 1+w2)
simp-non-pandant-not-in-V2-1: (1+w2, 1+w2)
simp-non-pandant-not-in-V2-1 (alt form): (1+2*w2, 1)
pendant-in-A-1-a: (1+w2+min(1-w2, w1), 1) = 1.6181
pendant-in-A-2: (2, 1-w2) = 1.8471
pendant-not-in-V2: (1+w2, 1) = 1.779
pendant-not-in-V1-activ: (1+w1+2*(1-w2), w1) = 1.5743
simp-non-pendant-in-A-1: (1+2*w2, 1)
simp-non-pendant-in-A-2: (2+w2, 1-w2) = 1.7249
simp-non-pandant-not-in-V2-2: (2-w1+w2, 2+w2, 2-w2) = 1.8005
semi-simp: (2-w1+w2, 2+w2, 2-w2) = 1.8005
semi-simp (alt form): (2*w1+w2, w1)
";

pub const BUILTIN_NAMES: [&str; 3] = ["interval", "forest", "chordal"];

#[derive(Debug, Clone)]
pub struct BuiltinRuleset {
    pub name: &'static str,
    pub rules: Vec<NamedVector>,
    /// The weights the enumerator runs with.
    pub weights: WeightSet,
    /// Search range for the optimizer (interval and forest fix `w1 = 1`).
    pub bounds: WeightBounds,
}

/// `interval`, `forest` or `chordal`.
pub fn builtin_ruleset(name: &str) -> Option<BuiltinRuleset> {
    let (name, text, weights) = match name {
        "interval" => ("interval", INTERVAL, WeightSet::new(1.0, INTERVAL_OMEGA)),
        "forest" => ("forest", FOREST, WeightSet::new(1.0, FOREST_OMEGA)),
        "chordal" => ("chordal", CHORDAL, WeightSet::new(CHORDAL_OMEGA1, CHORDAL_OMEGA2)),
        _ => return None,
    };
    let bounds =
        if name == "chordal" { WeightBounds::default() } else { WeightBounds { w1: (1.0, 1.0), w2: (0.0, 1.0) } };
    let rules = parse_rules(text).expect("built-in rule lists parse");
    Some(BuiltinRuleset { name, rules, weights, bounds })
}
