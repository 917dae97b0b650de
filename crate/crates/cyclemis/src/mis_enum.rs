//! Enumeration of the maximal independent sets of `C_n` as cyclic words.
//!
//! A word is a MIS membership vector exactly when, at every index i taken
//! cyclically, `min(w_i, w_{i+1}) = 0` (independence: no two adjacent ones)
//! and `max(w_i, w_{i+1}, w_{i+2}) = 1` (maximality: no three consecutive
//! zeros). Equivalently, the gaps between consecutive ones all have length
//! 2 or 3.

use crate::group::CyclicWord;
use num_bigint::BigInt;

/// Both membership conditions at every index, cyclically.
pub fn is_mis(w: &CyclicWord) -> bool {
    let bits = w.bits();
    let n = bits.len();
    let at = |i: usize| bits[i % n];
    (0..n).all(|i| {
        let (a, b, c) = (at(i), at(i + 1), at(i + 2));
        !(a && b) && (a || b || c)
    })
}

/// All MIS words of `C_n`, sorted lexicographically. The list has length
/// p(n); for n = 1 it is empty.
///
/// Words are generated by backtracking over gap patterns (runs of 2 or 3
/// between consecutive ones) anchored at the first one, so the work is
/// proportional to the output, not to 2^n.
pub fn enumerate_mis(n: usize) -> Vec<CyclicWord> {
    assert!(n >= 1, "cycle length must be >= 1, got {n}");
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    // the first one sits at s0, behind fewer than 3 leading zeros
    for s0 in 0..n.min(3) {
        let mut ones = vec![s0];
        extend(n, s0, &mut ones, &mut out);
    }
    out.sort();
    out
}

fn extend(n: usize, s0: usize, ones: &mut Vec<usize>, out: &mut Vec<CyclicWord>) {
    let last = *ones.last().unwrap();
    let wrap = n - last + s0;
    if wrap == 2 || wrap == 3 {
        out.push(CyclicWord::from_ones(n, ones));
    }
    for gap in [2usize, 3] {
        if last + gap < n {
            ones.push(last + gap);
            extend(n, s0, ones, out);
            ones.pop();
        }
    }
}

/// MIS count by the Perrin recurrence (counts 0, 2, 3 for n = 1, 2, 3 and
/// u(n) = u(n-2) + u(n-3) above), kept independent of the sequences module
/// so the two can be checked against each other.
pub fn count_mis_recurrence(n: usize) -> BigInt {
    assert!(n >= 1, "cycle length must be >= 1, got {n}");
    let mut table = vec![BigInt::from(0), BigInt::from(2), BigInt::from(3)];
    while table.len() < n {
        let k = table.len();
        let next = &table[k - 2] + &table[k - 3];
        table.push(next);
    }
    table[n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Action;

    fn word(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    /// Filter all 2^n words; the independent oracle for small n.
    fn enumerate_by_filter(n: usize) -> Vec<CyclicWord> {
        (0u64..1 << n)
            .map(|x| CyclicWord::new((0..n).map(|i| x >> i & 1 == 1).collect()))
            .filter(is_mis)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    #[test]
    fn is_mis_examples() {
        assert!(is_mis(&word("10100")));
        assert!(!is_mis(&word("110"))); // adjacent ones
        assert!(!is_mis(&word("1000"))); // three consecutive zeros
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_mis(1), vec![]);
        assert_eq!(enumerate_mis(6).len(), 5);
        let four: Vec<String> = enumerate_mis(4).iter().map(|w| w.to_string()).collect();
        assert_eq!(four, vec!["0101", "1010"]);
    }

    #[test]
    fn matches_filter_oracle_to_20() {
        for n in 1..=20 {
            assert_eq!(enumerate_mis(n), enumerate_by_filter(n), "n={n}");
        }
    }

    #[test]
    fn count_matches_perrin_to_40() {
        for n in 1..=40u64 {
            assert_eq!(
                BigInt::from(enumerate_mis(n as usize).len()),
                crate::sequences::perrin(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn recurrence_count_examples() {
        assert_eq!(count_mis_recurrence(6), BigInt::from(5));
        assert_eq!(count_mis_recurrence(14), BigInt::from(51));
        for n in 1..=20 {
            assert_eq!(
                count_mis_recurrence(n),
                BigInt::from(enumerate_mis(n).len()),
                "n={n}"
            );
        }
    }

    #[test]
    fn family_closed_under_dihedral_action() {
        for n in 2..=14 {
            for w in enumerate_mis(n) {
                for g in Action::Dihedral.elements(n) {
                    assert!(is_mis(&g.apply(&w)), "n={n} w={w} g={g:?}");
                }
            }
        }
    }

    #[test]
    fn gap_structure_is_2_or_3() {
        for n in 2..=20 {
            for w in enumerate_mis(n) {
                let ones = w.ones();
                assert!(!ones.is_empty());
                assert_ne!(w.count_ones(), n, "all-ones word at n={n}");
                for (i, &s) in ones.iter().enumerate() {
                    let next = ones[(i + 1) % ones.len()];
                    let gap = (next + n - s - 1) % n + 1; // cyclic distance, 1..=n
                    assert!(gap == 2 || gap == 3, "n={n} w={w} gap={gap}");
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "cycle length must be >= 1")]
    fn enumerate_rejects_zero() {
        enumerate_mis(0);
    }

    #[test]
    #[should_panic(expected = "cycle length must be >= 1")]
    fn recurrence_rejects_zero() {
        count_mis_recurrence(0);
    }
}
