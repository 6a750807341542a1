//! Branching numbers of the built-in rule lists, a custom rule list, and the
//! weight optimizer.

use roman_census::branch::WeightSet;
use roman_census::mc::{self, builtin_ruleset, parse_rules, Schedule, WeightBounds, DEFAULT_FAMILY_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in mc::BUILTIN_NAMES {
        let b = builtin_ruleset(name).unwrap();
        println!("== {name}");
        print!("{}", mc::analyze_ruleset(&b.rules, b.weights, DEFAULT_FAMILY_CAP).to_text());
    }

    let rules = parse_rules(include_str!("data/custom.dsl"))?;
    let a = mc::analyze_ruleset(&rules, WeightSet::new(1.0, 0.57), DEFAULT_FAMILY_CAP);
    println!("== custom\n{}", a.to_text());

    let bounds = WeightBounds { w1: (1.0, 1.0), w2: (0.0, 1.0) };
    let (w, worst) = mc::optimize_weights(&rules, bounds, Schedule::default(), DEFAULT_FAMILY_CAP);
    println!("best w2 = {:.4}, worst {worst:.5}", w.w2);
    println!("split constant {:.4}", mc::split_constant());
    Ok(())
}
