//! The four flavors of {2,3}-compositions of n, with the sequences that
//! count them.
//!
//! Usage: cargo run --example compositions [n]

use cyclemis::compositions::{
    enumerate_bracelet, enumerate_cyclic, enumerate_linear, is_cyclic_palindrome,
};
use cyclemis::formulas::OrbitFormulas;
use cyclemis::sequences::{padovan, r_seq};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer >= 2"))
        .unwrap_or(16);
    let f = OrbitFormulas::new();
    let nn = n as u64;

    let linear = enumerate_linear(n);
    println!("linear ({} = q({n})):", padovan(nn));
    for c in &linear {
        println!("  {c}");
    }

    let cyclic = enumerate_cyclic(n);
    println!("\ncyclic, up to rotation ({} = orb_sigma({n})):", f.orb_sigma(nn));
    for c in &cyclic {
        println!("  {c}");
    }

    let bracelets = enumerate_bracelet(n);
    println!("\nbracelet, up to rotation and reversal ({} = orb({n})):", f.orb(nn));
    for c in &bracelets {
        let marker = if is_cyclic_palindrome(c) { "  (reversal-fixed)" } else { "" };
        println!("  {c}{marker}");
    }

    let palindromic = bracelets.iter().filter(|c| is_cyclic_palindrome(c)).count();
    println!("\nreversal-fixed classes: {palindromic} = r({n}) = {}", r_seq(nn));
}
