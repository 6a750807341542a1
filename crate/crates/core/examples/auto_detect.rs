//! Which enumerator `Class::Auto` picks for a few graphs.

use roman_census::enumerate::{detect_class, enumerate, Class};
use roman_census::generate::{generate, Family};
use roman_census::parse_edge_list;

fn main() {
    let graphs = [
        ("P6", generate(Family::Path(6)).graph),
        ("split_lb 3", generate(Family::SplitLowerBound(3)).graph),
        ("cobipartite_lb 3", generate(Family::CobipartiteLowerBound(3)).graph),
        ("C4 from file", parse_edge_list(include_str!("data/c4.edges")).unwrap()),
        ("C6", generate(Family::Cycle(6)).graph),
    ];
    for (name, g) in &graphs {
        let n = enumerate(g, Class::Auto, None).unwrap().count();
        println!("{name:<18} -> {:<12} {n} minimal rdf", detect_class(g).to_string());
    }
}
