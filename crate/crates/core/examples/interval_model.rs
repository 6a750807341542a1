//! Reads an interval model, builds its intersection graph and enumerates
//! with the interval algorithm, which branches on the leftmost live vertex.

use roman_census::enumerate::{enumerate, Class};
use roman_census::{graph_from_intervals, parse_intervals};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rep = parse_intervals(include_str!("data/caterpillar.intervals"))?;
    let g = graph_from_intervals(&rep);
    print!("{}", g.to_edge_list());
    let fs: Vec<_> = enumerate(&g, Class::Interval, Some(&rep))?.collect::<Result<_, _>>()?;
    for f in &fs {
        println!("{f}");
    }
    println!("{} minimal rdf on {} intervals", fs.len(), rep.len());
    Ok(())
}
