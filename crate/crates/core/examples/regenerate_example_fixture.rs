//! Searches for a rank-3 arrangement of five planes whose chambers contain
//! every tope of the worked example, and prints it in `.arr` form.
//!
//! Normals range over nonzero vectors in {-1, 0, 1}^3 in lexicographic order,
//! with the first normal fixed to (1, 0, 0). Partial arrangements are pruned
//! as soon as some mentioned tope, restricted to the normals chosen so far,
//! stops being a chamber.
//!
//!     cargo run -p topes --example regenerate_example_fixture > crates/core/fixtures/example.arr

use std::collections::BTreeSet;

use topes::fixtures::mentioned_topes;
use topes::{Arrangement, Tope};

const T: usize = 5;

fn restricted(required: &BTreeSet<Tope>, k: usize) -> BTreeSet<Tope> {
    required
        .iter()
        .map(|t| Tope::from_signs(t.entries()[..k].iter().map(|&s| s as i64)).expect("prefix"))
        .collect()
}

fn extend(prefix: &mut Vec<Vec<i64>>, directions: &[Vec<i64>], required: &BTreeSet<Tope>) -> bool {
    if prefix.len() == T {
        return true;
    }
    for dir in directions {
        prefix.push(dir.clone());
        let ok = match Arrangement::from_integers(3, prefix) {
            Ok(a) => restricted(required, prefix.len())
                .iter()
                .all(|s| a.feasible(s).unwrap_or(false)),
            Err(_) => false,
        };
        if ok && extend(prefix, directions, required) {
            return true;
        }
        prefix.pop();
    }
    false
}

fn main() {
    let required = mentioned_topes();
    let directions: Vec<Vec<i64>> = (0..27)
        .map(|i| vec![i / 9 - 1, i / 3 % 3 - 1, i % 3 - 1])
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let mut prefix = vec![vec![1, 0, 0]];
    if !extend(&mut prefix, &directions, &required) {
        eprintln!("no arrangement found");
        std::process::exit(1);
    }
    let arrangement = Arrangement::from_integers(3, &prefix).expect("valid arrangement");
    let chambers = arrangement.chambers().expect("chambers");
    println!("# Rank-3 arrangement of five planes whose chambers contain every tope of the");
    println!("# worked example (base -++++, three symmetric cycles, target +-++-).");
    println!("# Regenerate with: cargo run -p topes --example regenerate_example_fixture");
    print!("{}", arrangement.to_text());
    eprintln!("{} chambers", chambers.len());
}
