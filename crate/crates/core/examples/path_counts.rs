//! Exact path counts from the mutual recurrences and their growth rate.

use roman_census::paths::{count_path, growth_estimate, path_table};

fn main() {
    println!("{:>3} {:>6} {:>6} {:>6}", "n", "C2", "C~2", "C");
    for row in path_table(12) {
        println!("{:>3} {:>6} {:>6} {:>6}", row.n, row.c2, row.cn2, row.total);
    }
    println!("C(100) = {}", count_path(100));
    for n in [10, 20, 40, 80] {
        println!("C({n})/C({}) = {:.6}", n - 1, growth_estimate(n));
    }
}
