//! Class-specific enumerators built on the branch engine, and a dispatcher
//! that picks one by name or by recognizing the input.

pub mod chordal;
pub mod forest;
pub mod interval;
pub mod split;

use std::fmt;
use std::str::FromStr;

pub use chordal::enumerate_chordal;
pub use forest::enumerate_forest;
pub use interval::enumerate_interval;
pub use split::{enumerate_cobipartite, enumerate_split};

use crate::branch::{Search, Stats};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalRepresentation;
use crate::oracle::{self, OracleIter};
use crate::rdf::RomanFunction;
use crate::recognize::{is_chordal, is_cobipartite, is_forest, is_split};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    /// Try forest, split, cobipartite, chordal in that order, else the oracle.
    Auto,
    Split,
    Cobipartite,
    Interval,
    Forest,
    Chordal,
    Oracle,
}

impl Class {
    pub const ALL: [Class; 7] =
        [Class::Auto, Class::Split, Class::Cobipartite, Class::Interval, Class::Forest, Class::Chordal, Class::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Class::Auto => "auto",
            Class::Split => "split",
            Class::Cobipartite => "cobipartite",
            Class::Interval => "interval",
            Class::Forest => "forest",
            Class::Chordal => "chordal",
            Class::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Class::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown class {s:?}"))
    }
}

enum Inner<'g> {
    Split(Search<'g, split::SideRuleset>),
    Interval(Search<'g, interval::IntervalRuleset<'g>>),
    Forest(Search<'g, forest::ForestRuleset>),
    Chordal(Search<'g, chordal::ChordalRuleset>),
    Oracle(OracleIter<'g>),
}

/// A running enumeration together with the class that was used.
pub struct Enumeration<'g> {
    class: Class,
    inner: Inner<'g>,
}

impl Enumeration<'_> {
    /// The concrete class (never [`Class::Auto`]).
    pub fn class(&self) -> Class {
        self.class
    }

    /// Search counters; `None` for the oracle.
    pub fn stats(&self) -> Option<&Stats> {
        match &self.inner {
            Inner::Split(s) => Some(s.stats()),
            Inner::Interval(s) => Some(s.stats()),
            Inner::Forest(s) => Some(s.stats()),
            Inner::Chordal(s) => Some(s.stats()),
            Inner::Oracle(_) => None,
        }
    }
}

impl Iterator for Enumeration<'_> {
    type Item = Result<RomanFunction>;

    fn next(&mut self) -> Option<Self::Item> {
        match &mut self.inner {
            Inner::Split(s) => s.next(),
            Inner::Interval(s) => s.next(),
            Inner::Forest(s) => s.next(),
            Inner::Chordal(s) => s.next(),
            Inner::Oracle(s) => s.next().map(Ok),
        }
    }
}

/// The class `auto` resolves to for `g`.
pub fn detect_class(g: &Graph) -> Class {
    if is_forest(g) {
        Class::Forest
    } else if is_split(g).is_some() {
        Class::Split
    } else if is_cobipartite(g).is_some() {
        Class::Cobipartite
    } else if is_chordal(g).is_some() {
        Class::Chordal
    } else {
        Class::Oracle
    }
}

/// Enumerates the minimal rdf of `g` with the algorithm for `class`.
/// `intervals` is required for [`Class::Interval`] and ignored otherwise.
pub fn enumerate<'g>(
    g: &'g Graph,
    class: Class,
    intervals: Option<&'g IntervalRepresentation>,
) -> Result<Enumeration<'g>> {
    let class = if class == Class::Auto { detect_class(g) } else { class };
    let inner = match class {
        Class::Auto => unreachable!(),
        Class::Split => {
            let p = is_split(g).ok_or_else(|| Error::WrongClass {
                class: "split",
                reason: "no clique / independent set partition exists".into(),
            })?;
            Inner::Split(enumerate_split(g, &p)?)
        }
        Class::Cobipartite => {
            let p = is_cobipartite(g).ok_or_else(|| Error::WrongClass {
                class: "cobipartite",
                reason: "the complement is not bipartite".into(),
            })?;
            Inner::Split(enumerate_cobipartite(g, &p)?)
        }
        Class::Interval => {
            let rep = intervals.ok_or_else(|| Error::WrongClass {
                class: "interval",
                reason: "an interval model is required".into(),
            })?;
            Inner::Interval(enumerate_interval(g, rep)?)
        }
        Class::Forest => Inner::Forest(enumerate_forest(g)?),
        Class::Chordal => Inner::Chordal(enumerate_chordal(g)?),
        Class::Oracle => Inner::Oracle(oracle::enumerate_all(g)?),
    };
    Ok(Enumeration { class, inner })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn auto_detection_order() {
        assert_eq!(detect_class(&generate(Family::Path(4)).graph), Class::Forest);
        assert_eq!(detect_class(&generate(Family::SplitLowerBound(3)).graph), Class::Split);
        assert_eq!(detect_class(&generate(Family::CobipartiteLowerBound(3)).graph), Class::Cobipartite);
        assert_eq!(detect_class(&generate(Family::Cycle(5)).graph), Class::Oracle);
        // two triangles sharing a vertex plus a pendant path: chordal only
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)]);
        assert_eq!(detect_class(&g), Class::Chordal);
    }

    #[test]
    fn explicit_classes_agree() {
        let gen = generate(Family::Path(5));
        let rep = gen.intervals.as_ref();
        for class in [Class::Forest, Class::Interval, Class::Chordal, Class::Oracle, Class::Auto] {
            assert_eq!(enumerate(&gen.graph, class, rep).unwrap().count(), 12, "{class}");
        }
        assert!(matches!(enumerate(&gen.graph, Class::Interval, None), Err(Error::WrongClass { .. })));
        let c4 = generate(Family::Cycle(4)).graph;
        assert!(enumerate(&c4, Class::Split, None).is_err());
        assert_eq!("chordal".parse::<Class>().unwrap(), Class::Chordal);
    }
}
