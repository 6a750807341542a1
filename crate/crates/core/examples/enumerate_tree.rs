//! Lists the minimal Roman dominating functions of a small tree with the
//! forest enumerator and prints the search counters.

use roman_census::enumerate::enumerate_forest;
use roman_census::parse_edge_list;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_edge_list(include_str!("data/tree7.edges"))?;
    let mut search = enumerate_forest(&g)?;
    for f in search.by_ref() {
        let f = f?;
        println!("{f}  weight {}", f.weight());
    }
    let stats = search.stats();
    println!("{} functions, {} search nodes", stats.emitted, stats.nodes);
    for (rule, fired) in &stats.rule_firings {
        println!("  {rule}: {fired}");
    }
    Ok(())
}
