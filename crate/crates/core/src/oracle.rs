//! Exhaustive reference enumeration over all candidate `V2` sets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rdf::{from_v2, is_rdf, RomanFunction};

pub const DEFAULT_ORACLE_CAP: usize = 24;

/// Hard ceiling from the 64-bit subset masks.
const MASK_LIMIT: usize = 63;

/// The active size cap: `ROMAN_CENSUS_ORACLE_CAP` if set and valid, else 24.
pub fn oracle_cap() -> usize {
    std::env::var("ROMAN_CENSUS_ORACLE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
        .min(MASK_LIMIT)
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(MASK_LIMIT);
    if g.n() > cap {
        return Err(Error::OracleCap { n: g.n(), cap });
    }
    Ok(())
}

/// Bitmask tables for the subset test.
struct Masks {
    open: Vec<u64>,
    closed: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let open: Vec<u64> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u))).collect();
        let closed = open.iter().enumerate().map(|(v, &m)| m | (1 << v)).collect();
        Masks { open, closed }
    }

    /// Whether `from_v2(s)` is minimal: every member of `s` has a neighbor
    /// that no other member of `s` dominates.
    #[inline]
    fn accepts(&self, s: u64) -> bool {
        let (mut once, mut twice) = (0u64, 0u64);
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice |= once & self.closed[v];
            once |= self.closed[v];
        }
        let exact = once & !twice;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.open[v] & exact == 0 {
                return false;
            }
        }
        true
    }
}

fn mask_members(s: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| s & (1 << v) != 0).collect()
}

/// Lazily enumerates every minimal rdf of `g`, visiting the candidate sets
/// `S ⊆ V` in increasing bitmask order (vertex `i` is bit `i`).
pub struct OracleIter<'g> {
    g: &'g Graph,
    masks: Masks,
    next: u64,
    end: u64,
}

impl Iterator for OracleIter<'_> {
    type Item = RomanFunction;

    fn next(&mut self) -> Option<RomanFunction> {
        while self.next < self.end {
            let s = self.next;
            self.next += 1;
            if self.masks.accepts(s) {
                return Some(from_v2(self.g, &mask_members(s)));
            }
        }
        None
    }
}

pub fn enumerate_all(g: &Graph) -> Result<OracleIter<'_>> {
    enumerate_all_with_cap(g, oracle_cap())
}

pub fn enumerate_all_with_cap(g: &Graph, cap: usize) -> Result<OracleIter<'_>> {
    check_cap(g, cap)?;
    Ok(OracleIter { g, masks: Masks::new(g), next: 0, end: 1u64 << g.n() })
}

pub fn count_all(g: &Graph) -> Result<u64> {
    count_all_with_cap(g, oracle_cap())
}

/// Counts without materializing functions; the subset space is split across
/// rayon workers.
pub fn count_all_with_cap(g: &Graph, cap: usize) -> Result<u64> {
    check_cap(g, cap)?;
    let masks = Masks::new(g);
    let total = 1u64 << g.n();
    let chunk = 1u64 << 14;
    let chunks = total.div_ceil(chunk);
    Ok((0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk;
            (lo..(lo + chunk).min(total)).filter(|&s| masks.accepts(s)).count() as u64
        })
        .sum())
}

/// The definitional filter over all `3^n` functions: an rdf is minimal when no
/// other rdf lies pointwise below it. Meant for small cross-checks only.
pub fn definitional_minimal(g: &Graph) -> Vec<RomanFunction> {
    let n = g.n();
    assert!(n <= 12, "the 3^n filter is limited to 12 vertices");
    let total = 3usize.pow(n as u32);
    let pow3: Vec<usize> = (0..n).map(|i| 3usize.pow(i as u32)).collect();
    let decode =
        |code: usize| -> RomanFunction { RomanFunction::new((0..n).map(|i| ((code / pow3[i]) % 3) as u8).collect()) };
    let mut rdf = vec![false; total];
    // below[c]: some rdf is strictly below c.
    let mut below = vec![false; total];
    let mut out = Vec::new();
    // Codes increase along every lowering step, so one forward pass suffices.
    for code in 0..total {
        let f = decode(code);
        rdf[code] = is_rdf(g, &f);
        below[code] = (0..n).any(|i| {
            f.value(i) > 0 && {
                let lower = code - pow3[i];
                rdf[lower] || below[lower]
            }
        });
        if rdf[code] && !below[code] {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::rdf::is_minimal_rdf;

    fn strings(g: &Graph) -> Vec<String> {
        enumerate_all(g).unwrap().map(|f| f.to_string()).collect()
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(strings(&Graph::empty(1)), vec!["1"]);
        let mut k2 = strings(&generate(Family::Path(2)).graph);
        k2.sort();
        assert_eq!(k2, vec!["02", "11", "20"]);
        assert_eq!(count_all(&generate(Family::Path(3)).graph).unwrap(), 4);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(count_all(&k3).unwrap(), 4);
    }

    #[test]
    fn table_one_and_split_bound() {
        assert_eq!(count_all(&generate(Family::Path(7)).graph).unwrap(), 34);
        assert_eq!(count_all(&generate(Family::SplitLowerBound(3)).graph).unwrap(), 15);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(30);
        assert!(matches!(count_all_with_cap(&g, 24), Err(Error::OracleCap { n: 30, cap: 24 })));
        assert!(enumerate_all_with_cap(&g, 10).is_err());
    }

    #[test]
    fn mask_test_agrees_with_slow_check() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (1, 5)]);
        let masks = Masks::new(&g);
        for s in 0..64u64 {
            let f = from_v2(&g, &mask_members(s));
            assert_eq!(masks.accepts(s), is_minimal_rdf(&g, &f), "s = {s:#b}");
        }
    }

    #[test]
    fn definitional_filter_matches_on_c5() {
        let g = generate(Family::Cycle(5)).graph;
        let mut a: Vec<RomanFunction> = enumerate_all(&g).unwrap().collect();
        let mut b = definitional_minimal(&g);
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
