//! Exact integer sequences and a Dirichlet convolution algebra.
//!
//! - [`perrin`]: p(n), A001608, the MIS count of `C_n`
//! - [`padovan`]: q(n), shifted A000931
//! - [`r_seq`]: r(n), A127682, interleaved Padovan values
//! - [`mobius`] / [`totient`]: the classical arithmetic functions
//! - [`a113788`]: (p * mu)(n) / n, an exact integer for every n
//! - [`Seq`]: memoizing sequence objects closed under Dirichlet convolution
//!
//! Everything is arbitrary precision: p(n) outgrows 64 bits before n = 200
//! and the divisibility assertions behind [`a113788`] must stay exact.
//! Sequences are indexed from 1; index 0 is rejected, not defined.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

fn check_index(n: u64) {
    assert!(n >= 1, "sequence index must be >= 1, got {n}");
}

/// p(1)=0, p(2)=2, p(3)=3, p(n) = p(n-2) + p(n-3).
pub fn perrin(n: u64) -> BigInt {
    check_index(n);
    recurrence_value(n, [0, 2, 3])
}

/// q(1)=0, q(2)=1, q(3)=1, q(n) = q(n-2) + q(n-3).
///
/// q(n) is also the number of compositions of n into parts 2 and 3.
pub fn padovan(n: u64) -> BigInt {
    check_index(n);
    recurrence_value(n, [0, 1, 1])
}

fn recurrence_value(n: u64, seeds: [i64; 3]) -> BigInt {
    let mut table: Vec<BigInt> = seeds.iter().map(|&s| BigInt::from(s)).collect();
    while (table.len() as u64) < n {
        let k = table.len();
        let next = &table[k - 2] + &table[k - 3];
        table.push(next);
    }
    table[(n - 1) as usize].clone()
}

/// r(2k-1) = q(k), r(2k) = q(k+2); satisfies r(n) = r(n-4) + r(n-6).
///
/// Counts the dihedral MIS orbits of `C_n` whose words have a symmetry
/// axis, equivalently the cyclic compositions of n into 2s and 3s that are
/// fixed by reversal.
pub fn r_seq(n: u64) -> BigInt {
    check_index(n);
    if n % 2 == 1 {
        padovan(n / 2 + 1)
    } else {
        padovan(n / 2 + 2)
    }
}

/// Möbius function (A008683) by trial division.
pub fn mobius(n: u64) -> i64 {
    check_index(n);
    let mut m = n;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            prime_count += 1;
        }
        p += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    if prime_count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler totient (A000010) by trial division.
pub fn totient(n: u64) -> u64 {
    check_index(n);
    let mut m = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// All positive divisors of n, strictly increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    check_index(n);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// A113788(n) = (p * mu)(n) / n. The division is asserted exact; a
/// remainder would be an implementation bug, not bad input.
pub fn a113788(n: u64) -> BigInt {
    Seq::a113788().eval(n)
}

/// Divide exactly, panicking on any remainder.
pub(crate) fn exact_div(value: &BigInt, by: u64, what: &str) -> BigInt {
    let by = BigInt::from(by);
    let rem = value % &by;
    assert!(rem.is_zero(), "{what}: {value} is not divisible by {by}");
    value / &by
}

enum Kind {
    /// u(n) = u(n-2) + u(n-3), seeded with u(1..=3); grown on demand.
    Recurrence { table: Mutex<Vec<BigInt>> },
    Fn {
        f: Box<dyn Fn(u64) -> BigInt + Send + Sync>,
        memo: Mutex<HashMap<u64, BigInt>>,
    },
    Dirichlet {
        lhs: Seq,
        rhs: Seq,
        memo: Mutex<HashMap<u64, BigInt>>,
    },
}

/// A memoizing integer sequence over n >= 1.
///
/// Clones share the cache (it lives behind an `Arc`), and evaluation is
/// locked per sequence, so a `Seq` can be queried from several threads;
/// concurrent and sequential evaluation agree because every definition
/// here is a pure function of n.
#[derive(Clone)]
pub struct Seq {
    kind: Arc<Kind>,
}

impl Seq {
    fn from_kind(kind: Kind) -> Seq {
        Seq { kind: Arc::new(kind) }
    }

    /// Wrap an arbitrary pure function of n as a memoized sequence.
    pub fn from_fn(f: impl Fn(u64) -> BigInt + Send + Sync + 'static) -> Seq {
        Seq::from_kind(Kind::Fn {
            f: Box::new(f),
            memo: Mutex::new(HashMap::new()),
        })
    }

    fn recurrence(seeds: [i64; 3]) -> Seq {
        Seq::from_kind(Kind::Recurrence {
            table: Mutex::new(seeds.iter().map(|&s| BigInt::from(s)).collect()),
        })
    }

    /// The Perrin sequence p (A001608).
    pub fn perrin() -> Seq {
        Seq::recurrence([0, 2, 3])
    }

    /// The Padovan sequence q (shifted A000931).
    pub fn padovan() -> Seq {
        Seq::recurrence([0, 1, 1])
    }

    /// The sequence r (A127682).
    pub fn r() -> Seq {
        let q = Seq::padovan();
        Seq::from_fn(move |n| {
            if n % 2 == 1 {
                q.eval(n / 2 + 1)
            } else {
                q.eval(n / 2 + 2)
            }
        })
    }

    /// The Möbius function mu (A008683).
    pub fn mobius() -> Seq {
        Seq::from_fn(|n| BigInt::from(mobius(n)))
    }

    /// The Euler totient phi (A000010).
    pub fn totient() -> Seq {
        Seq::from_fn(|n| BigInt::from(totient(n)))
    }

    /// The constant-one sequence, the identity's inverse partner in
    /// Möbius inversion: f = g * mu iff g = f * one.
    pub fn one() -> Seq {
        Seq::from_fn(|_| BigInt::from(1))
    }

    /// The Kronecker delta e_k: 1 at n = k, 0 elsewhere. e_1 is the unit
    /// of Dirichlet convolution.
    pub fn delta(k: u64) -> Seq {
        Seq::from_fn(move |n| BigInt::from(u64::from(n == k)))
    }

    /// Id(n) = n. Satisfies mu * Id = phi.
    pub fn identity() -> Seq {
        Seq::from_fn(BigInt::from)
    }

    /// A113788(n) = (p * mu)(n) / n, with the divisibility asserted.
    pub fn a113788() -> Seq {
        let p_mu = Seq::perrin().dirichlet(&Seq::mobius());
        Seq::from_fn(move |n| exact_div(&p_mu.eval(n), n, "(p*mu)(n)/n"))
    }

    /// Dirichlet convolution: (f * g)(n) = sum over d|n of f(d) g(n/d).
    /// Commutative and associative.
    pub fn dirichlet(&self, g: &Seq) -> Seq {
        Seq::from_kind(Kind::Dirichlet {
            lhs: self.clone(),
            rhs: g.clone(),
            memo: Mutex::new(HashMap::new()),
        })
    }

    /// Value at n >= 1. Repeated queries return equal values.
    pub fn eval(&self, n: u64) -> BigInt {
        check_index(n);
        match &*self.kind {
            Kind::Recurrence { table } => {
                let mut t = table.lock().unwrap();
                while (t.len() as u64) < n {
                    let k = t.len();
                    let next = &t[k - 2] + &t[k - 3];
                    t.push(next);
                }
                t[(n - 1) as usize].clone()
            }
            Kind::Fn { f, memo } => {
                if let Some(v) = memo.lock().unwrap().get(&n) {
                    return v.clone();
                }
                let v = f(n);
                memo.lock().unwrap().insert(n, v.clone());
                v
            }
            Kind::Dirichlet { lhs, rhs, memo } => {
                if let Some(v) = memo.lock().unwrap().get(&n) {
                    return v.clone();
                }
                let mut acc = BigInt::zero();
                for d in divisors(n) {
                    acc += lhs.eval(d) * rhs.eval(n / d);
                }
                memo.lock().unwrap().insert(n, acc.clone());
                acc
            }
        }
    }
}
