//! The subset oracle against the brute-force definition on a 5-cycle, plus
//! the V2-determinacy of each solution.

use roman_census::generate::{generate, Family};
use roman_census::{from_v2, is_minimal_rdf, oracle};

fn main() {
    let g = generate(Family::Cycle(5)).graph;
    let fast: Vec<_> = oracle::enumerate_all(&g).unwrap().collect();
    let slow = oracle::definitional_minimal(&g);
    println!("oracle {} / definition {}", fast.len(), slow.len());
    for f in &fast {
        assert!(is_minimal_rdf(&g, f));
        assert_eq!(&from_v2(&g, &f.v2()), f);
        println!("{f}  V2 = {:?}", f.v2());
    }
}
