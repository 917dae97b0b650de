//! Print the main counting sequences for C_n, n = 1..=max.
//!
//! Usage: cargo run --example table [max]

use cyclemis::report::{table_report, Format};

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max must be a positive integer"))
        .unwrap_or(40);
    print!("{}", table_report(max, Format::Text));
}
