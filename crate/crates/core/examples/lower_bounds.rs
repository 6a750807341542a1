//! The extremal families: split graphs with 2*2^k - 1 minimal rdf and
//! disjoint edges with 3^k.

use roman_census::enumerate::{enumerate, Class};
use roman_census::generate::{generate, Family};

fn count(f: Family) -> usize {
    let g = generate(f);
    enumerate(&g.graph, Class::Auto, g.intervals.as_ref()).unwrap().count()
}

fn main() {
    println!("{:>3} {:>8} {:>8} {:>8}", "k", "split", "cobip", "p2");
    for k in 2..=10 {
        println!(
            "{k:>3} {:>8} {:>8} {:>8}",
            count(Family::SplitLowerBound(k)),
            count(Family::CobipartiteLowerBound(k)),
            count(Family::P2Forest(k))
        );
    }
}
