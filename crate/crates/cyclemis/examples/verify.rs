//! Run the formula-vs-brute-force sweep from the library.
//!
//! Usage: cargo run --example verify [max]

use cyclemis::verify;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max must be a positive integer"))
        .unwrap_or(20);

    let report = verify::run(max, 30, false);
    if let Some(limit) = report.capped_at {
        eprintln!("brute-force checks capped at n = {limit}");
    }
    for line in &report.lines {
        println!("{line}");
    }
    match report.failure {
        None => println!("all checks passed"),
        Some(diff) => {
            println!("verification failed: {diff}");
            std::process::exit(1);
        }
    }
}
