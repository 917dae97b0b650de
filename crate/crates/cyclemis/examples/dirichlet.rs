//! The sequence algebra behind the closed forms: Dirichlet convolution
//! and Möbius inversion on the crate's sequences.
//!
//! Usage: cargo run --example dirichlet

use cyclemis::sequences::{a113788, divisors, Seq};

fn main() {
    let p = Seq::perrin();
    let mu = Seq::mobius();
    let one = Seq::one();

    // Möbius inversion: convolving with one and then with mu gives the
    // sequence back
    let round_trip = p.dirichlet(&one).dirichlet(&mu);
    println!("((p * one) * mu)(n) == p(n):");
    for n in [1u64, 7, 14, 40] {
        println!("  n={n}: {} == {}", round_trip.eval(n), p.eval(n));
    }

    // mu * Id = phi, the classical identity
    let phi_by_inversion = mu.dirichlet(&Seq::identity());
    let phi = Seq::totient();
    println!("\n(mu * Id)(n) == phi(n):");
    for n in [12u64, 30, 100] {
        println!("  n={n}: {} == {}", phi_by_inversion.eval(n), phi.eval(n));
    }

    // (p * mu)(n) is divisible by n; the quotient counts the rotation
    // orbits of MIS words with trivial stabilizer
    println!("\nA113788(n) = (p * mu)(n) / n:");
    for n in [5u64, 14, 24, 40] {
        let conv: num_bigint::BigInt = divisors(n)
            .into_iter()
            .map(|d| p.eval(d) * mu.eval(n / d))
            .sum();
        println!("  n={n}: {conv} / {n} = {}", a113788(n));
    }
}
