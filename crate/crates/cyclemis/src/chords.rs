//! Chords built on thirds and fourths: the MIS orbits of `C_{7k}` read as
//! note sets on a k-octave major scale.
//!
//! Scale degree i maps to octave i / 7 and letter i mod 7 of C D E F G A B.
//! The first octave is written in uppercase, the second in lowercase, and
//! octaves past the second get a numeral suffix (c2, d2, ...). On one
//! octave the single orbit is the major triad C-E-G; on two octaves the
//! size-2 orbit is the thirteenth chord C-E-G-B-d-f-a.

use crate::compositions::{composition_to_word, word_to_composition};
use crate::group::{Action, CyclicWord};
use crate::orbits::{partition, symmetry_axis_count};

/// One dihedral orbit of `C_{7k}`, named as a chord rooted at C.
#[derive(Clone, Debug)]
pub struct ChordSet {
    /// Dash-joined note names of the root-position representative.
    pub notes: String,
    /// The representative word: the orbit member rooted at degree 0 with
    /// the lexicographically smallest gap pattern.
    pub word: CyclicWord,
    pub orbit_size: usize,
    pub axes: usize,
}

/// Name of scale degree i under the octave convention above.
pub fn note_name(degree: usize) -> String {
    const LETTERS: [char; 7] = ['C', 'D', 'E', 'F', 'G', 'A', 'B'];
    let letter = LETTERS[degree % 7];
    match degree / 7 {
        0 => letter.to_string(),
        1 => letter.to_ascii_lowercase().to_string(),
        octave => format!("{}{}", letter.to_ascii_lowercase(), octave),
    }
}

/// One entry per dihedral orbit of `C_{7k}`, in orbit-partition order.
///
/// Each orbit is displayed through the member that has a note on C and,
/// among those, the smallest gap pattern; this is the rotation that reads
/// as a stacked chord from the root.
pub fn chord_sets(octaves: usize) -> Vec<ChordSet> {
    assert!(octaves >= 1, "octave count must be >= 1, got {octaves}");
    let n = 7 * octaves;
    partition(n, Action::Dihedral)
        .iter()
        .map(|o| {
            let gaps = word_to_composition(&o.canonical).0.bracelet_canonical();
            let word = composition_to_word(&gaps, 0);
            let notes: Vec<String> = word.ones().into_iter().map(note_name).collect();
            ChordSet {
                notes: notes.join("-"),
                word,
                orbit_size: o.size,
                axes: symmetry_axis_count(&o.canonical),
            }
        })
        .collect()
}
