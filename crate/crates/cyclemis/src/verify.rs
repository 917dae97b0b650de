//! Formula-vs-oracle sweep: for each n, compare the closed-form orbit
//! counts with the brute-force census and the composition counts.
//!
//! The brute-force side enumerates p(n) words and applies all 2n group
//! elements, so the sweep is capped (default n = 30) to keep runtime flat;
//! the closed forms themselves have no such limit.

use crate::compositions;
use crate::formulas::OrbitFormulas;
use crate::group::Action;
use crate::mis_enum::enumerate_mis;
use crate::orbits::census;
use crate::sequences::{divisors, padovan, perrin, r_seq};
use num_bigint::BigInt;
use std::fmt::Write as _;

/// Outcome of a verification sweep.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    /// One line per fully checked n, ascending.
    pub lines: Vec<String>,
    /// First disagreement found, if any; checking stops there.
    pub failure: Option<String>,
    /// Set when the requested range was cut down to the brute-force cap.
    pub capped_at: Option<usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check every n up to `n_max` (cut to `bruteforce_limit`). With
/// `inject_fault` the orbit counts for even stabilizer sizes are
/// deliberately perturbed by one; only tests use this to exercise the
/// failure path.
pub fn run(n_max: usize, bruteforce_limit: usize, inject_fault: bool) -> VerifyReport {
    let capped_at = (n_max > bruteforce_limit).then_some(bruteforce_limit);
    let top = n_max.min(bruteforce_limit);
    let f = OrbitFormulas::new();
    let fault = BigInt::from(u8::from(inject_fault));

    let mut report = VerifyReport {
        lines: Vec::new(),
        failure: None,
        capped_at,
    };

    for n in 1..=top {
        let nn = n as u64;
        let mut checks: Vec<(String, BigInt, BigInt)> = Vec::new();

        let words = enumerate_mis(n);
        checks.push((
            format!("MIS count of C_{n}"),
            perrin(nn),
            BigInt::from(words.len()),
        ));

        let dihedral = census(n, Action::Dihedral);
        checks.push((
            format!("orb({n})"),
            f.orb(nn),
            BigInt::from(dihedral.total),
        ));
        for d in divisors(2 * nn) {
            let formula = f.orb_d(nn, d) + if d % 2 == 0 { fault.clone() } else { BigInt::from(0) };
            checks.push((
                format!("orb_{d}({n})"),
                formula,
                BigInt::from(dihedral.count(d as usize)),
            ));
        }

        let rotation = census(n, Action::Rotation);
        checks.push((
            format!("orb_sigma({n})"),
            f.orb_sigma(nn),
            BigInt::from(rotation.total),
        ));
        for d in divisors(nn) {
            checks.push((
                format!("orb_{d}_sigma({n})"),
                f.orb_d_sigma(nn, d),
                BigInt::from(rotation.count(d as usize)),
            ));
        }

        if n >= 2 {
            checks.push((
                format!("linear compositions of {n}"),
                padovan(nn),
                BigInt::from(compositions::enumerate_linear(n).len()),
            ));
            checks.push((
                format!("cyclic compositions of {n}"),
                f.orb_sigma(nn),
                BigInt::from(compositions::enumerate_cyclic(n).len()),
            ));
            checks.push((
                format!("bracelet compositions of {n}"),
                f.orb(nn),
                BigInt::from(compositions::enumerate_bracelet(n).len()),
            ));
            checks.push((
                format!("palindromic compositions of {n}"),
                r_seq(nn),
                BigInt::from(compositions::count_cyclic_palindromic(n)),
            ));
        }

        for (what, formula, measured) in checks {
            if formula != measured {
                report.failure =
                    Some(format!("{what}: formula {formula} != brute force {measured}"));
                return report;
            }
        }

        let mut line = String::new();
        let _ = write!(
            line,
            "n={n}: ok (dihedral orbits {}, rotation orbits {})",
            dihedral.total, rotation.total
        );
        report.lines.push(line);
    }

    report
}
