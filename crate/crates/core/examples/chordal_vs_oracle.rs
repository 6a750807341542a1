//! Grows random chordal graphs and checks the chordal enumerator against the
//! exhaustive oracle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use roman_census::enumerate::{enumerate, Class};
use roman_census::generate::random_chordal;
use roman_census::oracle;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [6, 9, 12, 15] {
        let g = random_chordal(n, 3, &mut rng);
        let found = enumerate(&g, Class::Chordal, None).unwrap().count();
        let expected = oracle::count_all(&g).unwrap();
        println!("n = {n:>2}, m = {:>2}: chordal {found:>5}, oracle {expected:>5}", g.edge_count());
        assert_eq!(found as u64, expected);
    }
}
