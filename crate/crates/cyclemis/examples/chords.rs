//! Chord sets built on thirds and fourths over k octaves of a major
//! scale: the MIS orbits of C_{7k} with note names.
//!
//! Usage: cargo run --example chords [octaves]

use cyclemis::chords::chord_sets;

fn main() {
    let octaves: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("octaves must be a positive integer"))
        .unwrap_or(2);

    let sets = chord_sets(octaves);
    println!(
        "C_{} carries {} chord set(s) on {octaves} octave(s):",
        7 * octaves,
        sets.len()
    );
    for s in &sets {
        println!(
            "  {:24} {} voicings, {} symmetry axes",
            s.notes, s.orbit_size, s.axes
        );
    }
}
