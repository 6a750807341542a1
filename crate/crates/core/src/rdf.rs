//! Roman dominating functions and the minimality test.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::graph::{Graph, Vertex};

/// A total assignment `V -> {0, 1, 2}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RomanFunction {
    values: Vec<u8>,
}

impl RomanFunction {
    /// Panics if a value is not in `{0, 1, 2}`.
    pub fn new(values: Vec<u8>) -> Self {
        assert!(values.iter().all(|&x| x <= 2), "Roman function values must be 0, 1 or 2");
        RomanFunction { values }
    }

    pub fn constant(n: usize, value: u8) -> Self {
        Self::new(vec![value; n])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, v: Vertex) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Vertices with value `i`, ascending.
    pub fn level(&self, i: u8) -> Vec<Vertex> {
        (0..self.len()).filter(|&v| self.values[v] == i).collect()
    }

    pub fn v0(&self) -> Vec<Vertex> {
        self.level(0)
    }

    pub fn v1(&self) -> Vec<Vertex> {
        self.level(1)
    }

    pub fn v2(&self) -> Vec<Vertex> {
        self.level(2)
    }

    /// `|V1| + 2 |V2|`.
    pub fn weight(&self) -> usize {
        self.values.iter().map(|&x| x as usize).sum()
    }
}

impl fmt::Display for RomanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.values {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RomanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RomanFunction({self})")
    }
}

impl FromStr for RomanFunction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let values = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(ParseError::new(1, format!("invalid Roman value {c:?}"))),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(RomanFunction { values })
    }
}

/// Every vertex with value 0 has a neighbor with value 2.
pub fn is_rdf(g: &Graph, f: &RomanFunction) -> bool {
    assert_eq!(g.n(), f.len());
    g.vertices().filter(|&v| f.value(v) == 0).all(|v| g.neighbors(v).iter().any(|&u| f.value(u) == 2))
}

/// `N[v] \ N[D \ {v}]`, ascending.
pub fn private_neighborhood(g: &Graph, d: &[Vertex], v: Vertex) -> Result<Vec<Vertex>> {
    if !d.contains(&v) {
        return Err(Error::NotInSet(v));
    }
    let closed = |x: Vertex| std::iter::once(x).chain(g.neighbors(x).iter().copied());
    let mut covered = vec![false; g.n()];
    for &u in d.iter().filter(|&&u| u != v) {
        for x in closed(u) {
            covered[x] = true;
        }
    }
    let mut out: Vec<Vertex> = closed(v).filter(|&x| !covered[x]).collect();
    out.sort_unstable();
    Ok(out)
}

/// Minimality via the three structural conditions on `G' = G[V0 ∪ V2]`:
/// no 1 next to a 2, every 2 has a private vertex other than itself in `G'`,
/// and `V2` is a minimal dominating set of `G'`.
pub fn is_minimal_rdf(g: &Graph, f: &RomanFunction) -> bool {
    assert_eq!(g.n(), f.len());
    let v2 = f.v2();
    // (1) N[V2] ∩ V1 = ∅
    if v2.iter().any(|&v| g.neighbors(v).iter().any(|&u| f.value(u) == 1)) {
        return false;
    }
    // Work inside G' = G[V0 ∪ V2].
    let in_sub: Vec<bool> = f.values().iter().map(|&x| x != 1).collect();
    let mut dominators = vec![0usize; g.n()];
    for &v in &v2 {
        dominators[v] += 1;
        for &u in g.neighbors(v) {
            if in_sub[u] {
                dominators[u] += 1;
            }
        }
    }
    // (3a) V2 dominates G'.
    if g.vertices().any(|x| in_sub[x] && dominators[x] == 0) {
        return false;
    }
    for &v in &v2 {
        // Private vertices of v in G' are the members of N_{G'}[v] dominated once.
        let mut private_other = false;
        let mut private_any = dominators[v] == 1;
        for &u in g.neighbors(v) {
            if in_sub[u] && dominators[u] == 1 {
                private_other = true;
                private_any = true;
            }
        }
        // (2) privacy, (3b) N_{G'}[V2 \ {v}] ≠ V(G')
        if !private_other || !private_any {
            return false;
        }
    }
    true
}

/// The only candidate minimal rdf with `V2 = s`: 2 on `s`, 0 on `N(s) \ s`,
/// 1 elsewhere.
pub fn from_v2(g: &Graph, s: &[Vertex]) -> RomanFunction {
    let mut values = vec![1u8; g.n()];
    for &v in s {
        for &u in g.neighbors(v) {
            values[u] = 0;
        }
    }
    for &v in s {
        values[v] = 2;
    }
    RomanFunction { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn rf(s: &str) -> RomanFunction {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(RomanFunction::constant(2, 0).weight(), 0);
        assert_eq!(RomanFunction::constant(3, 1).weight(), 3);
        assert_eq!(rf("20000").weight(), 2);
    }

    #[test]
    fn rdf_checks() {
        let p3 = generate(Family::Path(3)).graph;
        assert!(is_rdf(&p3, &rf("111")));
        assert!(is_rdf(&p3, &rf("020")));
        assert!(!is_rdf(&p3, &rf("011")));
    }

    #[test]
    fn private_neighborhoods() {
        let p3 = generate(Family::Path(3)).graph;
        assert_eq!(private_neighborhood(&p3, &[1], 1).unwrap(), vec![0, 1, 2]);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(private_neighborhood(&k3, &[0, 1], 1).unwrap().is_empty());
        let p4 = generate(Family::Path(4)).graph;
        assert_eq!(private_neighborhood(&p4, &[0, 3], 0).unwrap(), vec![0, 1]);
        assert!(matches!(private_neighborhood(&p4, &[0], 2), Err(Error::NotInSet(2))));
    }

    #[test]
    fn star_examples() {
        let star = generate(Family::Star(4)).graph;
        assert!(is_minimal_rdf(&star, &rf("20000")));
        assert!(is_minimal_rdf(&star, &rf("11111")));
        assert!(!is_minimal_rdf(&star, &rf("21111")));
    }

    #[test]
    fn p3_has_four_minimal() {
        let p3 = generate(Family::Path(3)).graph;
        assert!(!is_minimal_rdf(&p3, &rf("202")));
        let mut count = 0;
        for code in 0..27u32 {
            let values: Vec<u8> = (0..3).map(|i| ((code / 3u32.pow(i)) % 3) as u8).collect();
            if is_minimal_rdf(&p3, &RomanFunction::new(values)) {
                count += 1;
            }
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn from_v2_shapes() {
        let p3 = generate(Family::Path(3)).graph;
        assert_eq!(from_v2(&p3, &[]).to_string(), "111");
        assert_eq!(from_v2(&p3, &[1]).to_string(), "020");
        let p4 = generate(Family::Path(4)).graph;
        assert_eq!(from_v2(&p4, &[0]).to_string(), "2011");
    }

    #[test]
    fn display_roundtrip_and_json() {
        let f = rf("0201");
        assert_eq!(f.to_string(), "0201");
        assert_eq!(serde_json::to_string(&f).unwrap(), "[0,2,0,1]");
        assert!("0301".parse::<RomanFunction>().is_err());
    }
}
