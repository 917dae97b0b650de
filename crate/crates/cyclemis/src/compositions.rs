//! Compositions of n into parts 2 and 3, in four flavors, and the
//! bijection between composition classes and MIS orbits.
//!
//! Reading the gaps between consecutive ones of a MIS word yields a cyclic
//! list of 2s and 3s summing to n; rotating the word rotates the list and
//! reflecting the word reverses it. Hence:
//!
//! - linear compositions are counted by the Padovan numbers q(n),
//! - cyclic classes (up to rotation) correspond to rotation orbits,
//! - bracelet classes (up to rotation and reversal) to dihedral orbits,
//! - reversal-fixed cyclic classes to orbits with a symmetry axis, counted
//!   by r(n).

use crate::group::CyclicWord;
use std::collections::BTreeSet;
use std::fmt;

/// A nonempty list of parts, each 2 or 3.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Composition {
        assert!(!parts.is_empty(), "composition must have at least one part");
        for &p in &parts {
            assert!(p == 2 || p == 3, "invalid part {p}: each part must be 2 or 3");
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    /// The composed integer: the sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    fn rotated(&self, k: usize) -> Composition {
        let m = self.parts.len();
        Composition::new((0..m).map(|i| self.parts[(i + k) % m]).collect())
    }

    fn reversed(&self) -> Composition {
        Composition::new(self.parts.iter().rev().copied().collect())
    }

    /// Lexicographically smallest rotation: the canonical representative
    /// of the cyclic (rotation-only) class.
    pub fn cyclic_canonical(&self) -> Composition {
        (0..self.parts.len())
            .map(|k| self.rotated(k))
            .min()
            .unwrap()
    }

    /// Smallest rotation of the list or its reversal: the canonical
    /// representative of the bracelet (rotation and reversal) class.
    pub fn bracelet_canonical(&self) -> Composition {
        self.cyclic_canonical()
            .min(self.reversed().cyclic_canonical())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str("-")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

/// All ordered lists of 2s and 3s summing to n, lexicographic. There are
/// q(n) of them; n = 1 has none.
pub fn enumerate_linear(n: usize) -> Vec<Composition> {
    assert!(n >= 1, "composition target must be >= 1, got {n}");
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    linear_rec(n, &mut prefix, &mut out);
    out
}

fn linear_rec(remaining: usize, prefix: &mut Vec<u8>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition::new(prefix.clone()));
        return;
    }
    for part in [2u8, 3] {
        if remaining >= part as usize {
            prefix.push(part);
            linear_rec(remaining - part as usize, prefix, out);
            prefix.pop();
        }
    }
}

/// One canonical representative per rotation class, sorted.
pub fn enumerate_cyclic(n: usize) -> Vec<Composition> {
    let set: BTreeSet<Composition> = enumerate_linear(n)
        .into_iter()
        .map(|c| c.cyclic_canonical())
        .collect();
    set.into_iter().collect()
}

/// One canonical representative per rotation-and-reversal class, sorted.
pub fn enumerate_bracelet(n: usize) -> Vec<Composition> {
    let set: BTreeSet<Composition> = enumerate_linear(n)
        .into_iter()
        .map(|c| c.bracelet_canonical())
        .collect();
    set.into_iter().collect()
}

/// Whether the cyclic class of c is fixed by reversal, i.e. the reversed
/// list is a rotation of the list.
///
/// This is exactly the condition for the corresponding MIS words to have a
/// symmetry axis. Note it is wider than having a rotation that is a
/// literal palindrome: an axis may pass through the middle of a part, as
/// in (2,2,2,3,3,3), whose reversal is a rotation although no rotation
/// reads the same both ways.
pub fn is_cyclic_palindrome(c: &Composition) -> bool {
    c.reversed().cyclic_canonical() == c.cyclic_canonical()
}

/// Number of reversal-fixed cyclic classes of compositions of n; equals
/// r(n). (Each such class is a whole bracelet class by itself.)
pub fn count_cyclic_palindromic(n: usize) -> usize {
    enumerate_bracelet(n)
        .iter()
        .filter(|c| is_cyclic_palindrome(c))
        .count()
}

/// Read a MIS word as a composition: starting from the smallest index
/// holding a one, a gap of one zero contributes a 2 and a gap of two zeros
/// contributes a 3. Returns the parts and the starting index (phase).
pub fn word_to_composition(w: &CyclicWord) -> (Composition, usize) {
    let n = w.len();
    let ones = w.ones();
    assert!(
        !ones.is_empty() && n >= 2,
        "not a MIS membership word: {w}"
    );
    let k = ones.len();
    let mut parts = Vec::with_capacity(k);
    for (i, &s) in ones.iter().enumerate() {
        let next = ones[(i + 1) % k];
        let gap = (next + n - s - 1) % n + 1;
        assert!(
            gap == 2 || gap == 3,
            "not a MIS membership word: {w} (gap of {gap} at index {s})"
        );
        parts.push(gap as u8);
    }
    (Composition::new(parts), ones[0])
}

/// Place ones at phase, phase + c_0, phase + c_0 + c_1, ... modulo n. The
/// result is always a MIS word of `C_n`.
pub fn composition_to_word(c: &Composition, phase: usize) -> CyclicWord {
    let n = c.total();
    assert!(phase < n, "phase {phase} out of range for n = {n}");
    let mut ones = Vec::with_capacity(c.parts().len());
    let mut pos = phase;
    for &p in c.parts() {
        ones.push(pos % n);
        pos += p as usize;
    }
    CyclicWord::from_ones(n, &ones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Action;
    use crate::mis_enum::{enumerate_mis, is_mis};
    use crate::orbits::partition;
    use crate::sequences::{padovan, r_seq};
    use num_bigint::BigInt;

    fn comp(parts: &[u8]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn linear_of_8_is_the_four_tuples() {
        let expected = vec![
            comp(&[2, 2, 2, 2]),
            comp(&[2, 3, 3]),
            comp(&[3, 2, 3]),
            comp(&[3, 3, 2]),
        ];
        assert_eq!(enumerate_linear(8), expected);
    }

    #[test]
    fn linear_edge_cases() {
        assert_eq!(enumerate_linear(1), vec![]);
        assert_eq!(enumerate_linear(2), vec![comp(&[2])]);
        assert_eq!(enumerate_linear(4), vec![comp(&[2, 2])]);
    }

    #[test]
    fn linear_count_is_padovan() {
        for n in 1..=30u64 {
            assert_eq!(
                BigInt::from(enumerate_linear(n as usize).len()),
                padovan(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(enumerate_cyclic(5), vec![comp(&[2, 3])]);
        assert_eq!(enumerate_cyclic(6), vec![comp(&[2, 2, 2]), comp(&[3, 3])]);
        assert_eq!(enumerate_cyclic(14).len(), 5);
    }

    #[test]
    fn bracelet_counts() {
        assert_eq!(enumerate_bracelet(6).len(), 2);
        assert_eq!(enumerate_bracelet(15).len(), 5);
        assert_eq!(enumerate_bracelet(16).len(), 7);
    }

    #[test]
    fn palindrome_detection() {
        assert!(is_cyclic_palindrome(&comp(&[3, 2, 3])));
        assert!(is_cyclic_palindrome(&comp(&[2, 3, 3])));
        assert!(is_cyclic_palindrome(&comp(&[2, 2, 3, 2, 3, 2, 2])));
        // axis through the middle of a part: no rotation is a literal
        // palindrome, but the reversal is a rotation
        assert!(is_cyclic_palindrome(&comp(&[2, 2, 2, 3, 3, 3])));
        // mirror-paired class on n=15
        assert!(!is_cyclic_palindrome(&comp(&[2, 2, 3, 2, 3, 3])));
    }

    #[test]
    fn palindromic_counts_match_r() {
        assert_eq!(count_cyclic_palindromic(8), 2);
        assert_eq!(count_cyclic_palindromic(16), 7);
        for n in 2..=30u64 {
            assert_eq!(
                BigInt::from(count_cyclic_palindromic(n as usize)),
                r_seq(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn palindromic_of_8() {
        let palindromic: Vec<Composition> = enumerate_bracelet(8)
            .into_iter()
            .filter(is_cyclic_palindrome)
            .collect();
        assert_eq!(
            palindromic,
            vec![comp(&[2, 2, 2, 2]), comp(&[2, 3, 3])] // (2,3,3) ~ (3,2,3)
        );
    }

    #[test]
    fn word_composition_round_trip() {
        let (c, phase) = word_to_composition(&"10100".parse().unwrap());
        assert_eq!(c, comp(&[2, 3]));
        assert_eq!(phase, 0);
        assert_eq!(composition_to_word(&c, 0).to_string(), "10100");

        let (c, phase) = word_to_composition(&"101010".parse().unwrap());
        assert_eq!(c, comp(&[2, 2, 2]));
        assert_eq!(phase, 0);

        assert_eq!(
            composition_to_word(&comp(&[2, 2, 2]), 1).to_string(),
            "010101"
        );
        let w = composition_to_word(&comp(&[3, 3]), 0);
        assert_eq!(w.to_string(), "100100");
        assert!(enumerate_mis(6).contains(&w));
    }

    #[test]
    fn round_trip_identity_on_all_words_to_16() {
        for n in 2..=16 {
            for w in enumerate_mis(n) {
                let (c, phase) = word_to_composition(&w);
                assert_eq!(c.total(), n);
                assert_eq!(composition_to_word(&c, phase), w, "n={n} w={w}");
            }
        }
    }

    #[test]
    fn composition_to_word_always_produces_mis() {
        for n in 2..=14 {
            for c in enumerate_linear(n) {
                for phase in 0..n {
                    assert!(is_mis(&composition_to_word(&c, phase)));
                }
            }
        }
    }

    #[test]
    fn orbit_classes_biject_with_composition_classes() {
        for n in 2..=20 {
            // dihedral orbits <-> bracelet classes
            let from_orbits: BTreeSet<Composition> = partition(n, Action::Dihedral)
                .iter()
                .map(|o| word_to_composition(&o.canonical).0.bracelet_canonical())
                .collect();
            let bracelets: BTreeSet<Composition> =
                enumerate_bracelet(n).into_iter().collect();
            assert_eq!(from_orbits.len(), partition(n, Action::Dihedral).len());
            assert_eq!(from_orbits, bracelets, "n={n}");

            // rotation orbits <-> cyclic classes
            let from_orbits: BTreeSet<Composition> = partition(n, Action::Rotation)
                .iter()
                .map(|o| word_to_composition(&o.canonical).0.cyclic_canonical())
                .collect();
            let cyclics: BTreeSet<Composition> = enumerate_cyclic(n).into_iter().collect();
            assert_eq!(from_orbits.len(), partition(n, Action::Rotation).len());
            assert_eq!(from_orbits, cyclics, "n={n}");
        }
    }

    #[test]
    fn non_palindromic_bracelets_equal_orb_minus_r() {
        let forms = crate::formulas::OrbitFormulas::new();
        for n in 2..=30usize {
            let non_pal = enumerate_bracelet(n)
                .iter()
                .filter(|c| !is_cyclic_palindrome(c))
                .count();
            let expected = forms.orb(n as u64) - r_seq(n as u64);
            assert_eq!(BigInt::from(non_pal), expected, "n={n}");
        }
    }

    #[test]
    #[should_panic(expected = "invalid part")]
    fn composition_rejects_bad_part() {
        Composition::new(vec![2, 4]);
    }

    #[test]
    #[should_panic(expected = "not a MIS membership word")]
    fn word_to_composition_rejects_non_mis() {
        word_to_composition(&"1000".parse().unwrap());
    }

    #[test]
    #[should_panic(expected = "composition target must be >= 1")]
    fn linear_rejects_zero() {
        enumerate_linear(0);
    }
}
