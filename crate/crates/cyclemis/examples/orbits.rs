//! Partition the maximal independent sets of C_n into orbits and show
//! each orbit's canonical word, size, stabilizer and symmetry axes.
//!
//! Usage: cargo run --example orbits [n]

use cyclemis::group::Action;
use cyclemis::mis_enum::enumerate_mis;
use cyclemis::orbits::{partition, symmetry_axis_count};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(14);

    println!("C_{n} has {} maximal independent sets", enumerate_mis(n).len());
    for action in [Action::Dihedral, Action::Rotation] {
        let orbits = partition(n, action);
        println!("\n{} action: {} orbits", action, orbits.len());
        for o in &orbits {
            println!(
                "  {} size={:<3} stab={:<3} axes={}",
                o.canonical,
                o.size,
                o.stab_size,
                symmetry_axis_count(&o.canonical)
            );
        }
    }
}
