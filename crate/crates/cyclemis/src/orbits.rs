//! Brute-force partition of the MIS family into orbits, and the census of
//! orbit counts by stabilizer size.
//!
//! This module is the measurement side of the crate: it applies every
//! group element to every enumerated word. The formulas module computes
//! the same numbers by closed form; tests hold the two together.

use crate::group::{self, Action, CyclicWord, Orbit};
use crate::mis_enum::enumerate_mis;
use std::collections::BTreeMap;

/// Orbit counts of the MIS family of `C_n`, grouped by stabilizer size.
///
/// `by_stab[d]` is the number of orbits whose elements have a stabilizer
/// of size d inside the acting group; keys with zero count are omitted.
/// By orbit-stabilizer, such orbits have 2n/d (dihedral) or n/d (rotation)
/// elements, and the weighted sum over the census recovers p(n).
#[derive(Clone, Debug)]
pub struct OrbitCensus {
    pub n: usize,
    pub action: Action,
    pub by_stab: BTreeMap<usize, usize>,
    pub total: usize,
}

impl OrbitCensus {
    /// Count for stabilizer size d, zero when absent.
    pub fn count(&self, d: usize) -> usize {
        self.by_stab.get(&d).copied().unwrap_or(0)
    }
}

/// Partition the MIS words of `C_n` into orbits under the action, sorted
/// by canonical representative.
///
/// Words are visited in lexicographic order; a word opens a new orbit
/// exactly when it is its own canonical form, so each orbit is built once.
pub fn partition(n: usize, action: Action) -> Vec<Orbit> {
    enumerate_mis(n)
        .iter()
        .filter(|w| &group::canonical_form(w, action) == *w)
        .map(|w| group::orbit(w, action))
        .collect()
}

/// Tabulate the orbits of `C_n` by stabilizer size.
pub fn census(n: usize, action: Action) -> OrbitCensus {
    let orbits = partition(n, action);
    let mut by_stab = BTreeMap::new();
    for o in &orbits {
        *by_stab.entry(o.stab_size).or_insert(0) += 1;
    }
    OrbitCensus {
        n,
        action,
        by_stab,
        total: orbits.len(),
    }
}

/// Number of symmetry axes of a word: the reflections in its stabilizer.
pub fn symmetry_axis_count(w: &CyclicWord) -> usize {
    group::stabilizer(w)
        .iter()
        .filter(|g| g.is_reflection())
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mis_enum::is_mis;
    use crate::sequences::{divisors, perrin};
    use num_bigint::BigInt;

    #[test]
    fn c6_has_two_dihedral_orbits() {
        let orbits = partition(6, Action::Dihedral);
        let mut sizes: Vec<usize> = orbits.iter().map(|o| o.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn c14_orbit_sizes_both_actions() {
        let mut sizes: Vec<usize> = partition(14, Action::Dihedral)
            .iter()
            .map(|o| o.size)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 7, 14, 14, 14]);
        assert_eq!(partition(14, Action::Rotation).len(), 5);
    }

    #[test]
    fn census_examples() {
        let c14 = census(14, Action::Dihedral);
        assert_eq!(c14.total, 5);
        assert_eq!(
            c14.by_stab,
            BTreeMap::from([(2, 3), (4, 1), (14, 1)])
        );

        let c6 = census(6, Action::Dihedral);
        assert_eq!(c6.total, 2);
        assert_eq!(c6.by_stab, BTreeMap::from([(4, 1), (6, 1)]));

        let c15 = census(15, Action::Dihedral);
        assert_eq!(c15.total, 5);
        assert_eq!(c15.count(1), 1);
        assert_eq!(c15.count(2), 2);
    }

    #[test]
    fn empty_census_for_n1() {
        let c = census(1, Action::Dihedral);
        assert_eq!(c.total, 0);
        assert!(c.by_stab.is_empty());
    }

    #[test]
    fn partition_covers_family_once() {
        for n in 1..=16 {
            for action in [Action::Dihedral, Action::Rotation] {
                let words = enumerate_mis(n);
                let mut covered = std::collections::BTreeSet::new();
                for o in partition(n, action) {
                    let members = group::orbit_members(&o.canonical, action);
                    assert_eq!(members.len(), o.size);
                    assert_eq!(o.size * o.stab_size, action.order(n));
                    for m in members {
                        assert!(covered.insert(m), "word covered twice, n={n}");
                    }
                }
                assert_eq!(covered.len(), words.len(), "n={n} {action}");
            }
        }
    }

    #[test]
    fn census_weighted_sums_recover_perrin() {
        for n in 1..=24usize {
            for action in [Action::Dihedral, Action::Rotation] {
                let c = census(n, action);
                assert_eq!(c.total, c.by_stab.values().sum::<usize>());
                let mut weighted = 0usize;
                for (&d, &count) in &c.by_stab {
                    assert_eq!(action.order(n) % d, 0, "stab size divides group order");
                    weighted += action.order(n) / d * count;
                }
                assert_eq!(BigInt::from(weighted), perrin(n as u64), "n={n} {action}");
            }
        }
    }

    #[test]
    fn orbit_counts_with_and_without_axes() {
        // orbits with a reflection in the stabilizer number r(n); the rest
        // are counted by summing trivial-stabilizer orbits over divisors
        let forms = crate::formulas::OrbitFormulas::new();
        for n in 1..=24usize {
            let orbits = partition(n, Action::Dihedral);
            let with_axis = orbits
                .iter()
                .filter(|o| o.stab_elems.iter().any(|g| g.is_reflection()))
                .count();
            assert_eq!(
                BigInt::from(with_axis),
                crate::sequences::r_seq(n as u64),
                "n={n}"
            );
            let rotation_only = BigInt::from(orbits.len() - with_axis);
            let by_divisors: BigInt = divisors(n as u64)
                .into_iter()
                .map(|d| forms.orb1(d))
                .sum();
            assert_eq!(rotation_only, by_divisors, "n={n}");
        }
    }

    #[test]
    fn axis_counts_on_c14() {
        let every_other = CyclicWord::from_ones(14, &[0, 2, 4, 6, 8, 10, 12]);
        assert!(is_mis(&every_other));
        assert_eq!(symmetry_axis_count(&every_other), 7);

        let repeated_triad = CyclicWord::from_ones(14, &[0, 2, 4, 7, 9, 11]);
        assert!(is_mis(&repeated_triad));
        assert_eq!(symmetry_axis_count(&repeated_triad), 2);
    }

    #[test]
    fn no_axes_for_trivial_stabilizer() {
        for o in partition(15, Action::Dihedral) {
            if o.stab_size == 1 {
                assert_eq!(symmetry_axis_count(&o.canonical), 0);
            }
        }
    }
}
