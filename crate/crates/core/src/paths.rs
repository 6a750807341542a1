//! Exact counts of minimal rdf on paths and on disjoint unions of paths.
//!
//! With `P_n` on vertices `1..n`, `C2(n)` counts the functions giving vertex 1
//! value 2 and `C̄(n)` the rest:
//!
//! * `C2(1) = 0`, `C2(2) = 1`, `C2(n) = C̄(n-2)`;
//! * `C̄(1..=3) = 1, 2, 3`, `C̄(n) = C̄(n-1) + C2(n-2) + C(n-3)`;
//! * `C(n) = C2(n) + C̄(n)`.
//!
//! For `n ≥ 6` this collapses to `C̄(n) = C̄(n-1) + C̄(n-3) + C̄(n-4) + C̄(n-5)`,
//! so counts grow like `x^n` for the largest root of `x^5 = x^4 + x^2 + x + 1`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// One row of the path recurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountTable {
    pub n: usize,
    pub c2: BigUint,
    pub cn2: BigUint,
    pub total: BigUint,
}

/// Rows for `n = 1..=n_max`.
pub fn path_table(n_max: usize) -> Vec<PathCountTable> {
    let mut rows: Vec<PathCountTable> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let get = |k: usize| &rows[k - 1];
        let c2 = match n {
            1 => BigUint::zero(),
            2 => BigUint::one(),
            _ => get(n - 2).cn2.clone(),
        };
        let cn2 = match n {
            1..=3 => BigUint::from(n),
            _ => &get(n - 1).cn2 + &get(n - 2).c2 + &get(n - 3).total,
        };
        let total = &c2 + &cn2;
        rows.push(PathCountTable { n, c2, cn2, total });
    }
    rows
}

fn row(n: usize) -> PathCountTable {
    assert!(n >= 1, "paths have at least one vertex");
    path_table(n).pop().unwrap()
}

/// `C2(n)`: minimal rdf of `P_n` with value 2 on the first vertex.
pub fn count_prefix2(n: usize) -> BigUint {
    row(n).c2
}

/// `C̄(n)`: minimal rdf of `P_n` without value 2 on the first vertex.
pub fn count_prefix_not2(n: usize) -> BigUint {
    row(n).cn2
}

/// `C̄(n)` from the collapsed five-term recurrence.
pub fn count_prefix_not2_reduced(n: usize) -> BigUint {
    assert!(n >= 1, "paths have at least one vertex");
    let base = path_table(n.min(5));
    let mut c: Vec<BigUint> = base.into_iter().map(|r| r.cn2).collect();
    for k in 6..=n {
        let next = &c[k - 2] + &c[k - 4] + &c[k - 5] + &c[k - 6];
        c.push(next);
    }
    c.swap_remove(n - 1)
}

/// Number of minimal rdf of the path on `n` vertices.
pub fn count_path(n: usize) -> BigUint {
    row(n).total
}

/// Number of minimal rdf of the disjoint union of paths with these orders.
pub fn count_path_forest(lengths: &[usize]) -> BigUint {
    let Some(&max) = lengths.iter().max() else {
        return BigUint::one();
    };
    assert!(lengths.iter().all(|&n| n >= 1), "paths have at least one vertex");
    let table = path_table(max);
    lengths.iter().map(|&n| &table[n - 1].total).product()
}

/// `count_path(n) / count_path(n - 1)`, which tends to about 1.6852.
pub fn growth_estimate(n: usize) -> f64 {
    assert!(n >= 2, "need two consecutive counts");
    let t = path_table(n);
    ratio(&t[n - 1].total, &t[n - 2].total)
}

fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    // Shift both down so the quotient stays inside f64 range.
    let shift = a.bits().saturating_sub(60);
    let (a, b) = (a >> shift, b >> shift);
    a.to_f64().unwrap() / b.to_f64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_values() {
        let totals: Vec<BigUint> = (1..=7).map(count_path).collect();
        assert_eq!(totals, [1u64, 3, 4, 7, 12, 20, 34].map(u));
        assert_eq!(count_prefix2(1), u(0));
        assert_eq!(count_prefix2(2), u(1));
        assert_eq!(count_prefix2(5), u(3));
        assert_eq!(count_prefix_not2(2), u(2));
        assert_eq!(count_prefix_not2(3), u(3));
    }

    #[test]
    fn reduced_recurrence_agrees() {
        for n in 1..=60 {
            assert_eq!(count_prefix_not2_reduced(n), count_prefix_not2(n), "n = {n}");
        }
    }

    #[test]
    fn table_rows_add_up() {
        for r in path_table(30) {
            assert_eq!(r.total, &r.c2 + &r.cn2);
        }
    }

    #[test]
    fn forests_of_paths() {
        assert_eq!(count_path_forest(&[2, 2, 2]), u(27));
        assert_eq!(count_path_forest(&[1]), u(1));
        assert_eq!(count_path_forest(&[3, 4]), u(28));
        assert_eq!(count_path_forest(&[]), u(1));
    }

    #[test]
    fn big_counts_and_growth() {
        assert!(count_path(100).bits() > 64);
        let r = growth_estimate(40);
        assert!((r - 1.6852).abs() < 0.01, "{r}");
        assert!(growth_estimate(10) > 1.0);
        assert!((growth_estimate(2000) - 1.6852).abs() < 1e-3);
    }
}
