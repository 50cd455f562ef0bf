//! Extended modular inverses: solving a*x = b (mod m) in one division
//! run, with gcd discovery and early termination for free.
//!
//! ```bash
//! cargo run --example extended_inverse
//! ```

use modinv::dayan::{ext_mod_inverse, run_trace, ExtInverseOutcome, SignStrategy};
use num_bigint::BigInt;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn show(b: i64, a: i64, m: i64) {
    let outcome = ext_mod_inverse(&big(b), &big(a), &big(m), &SignStrategy::AllPlus).unwrap();
    match outcome {
        ExtInverseOutcome::Defined {
            value,
            reduced_modulus,
            gcd,
        } => {
            println!("({b}*({a}^-1)_{m})_{m} = {value} (mod {reduced_modulus}), gcd = {gcd}");
            // Every lift value + i*(m/gcd) solves a*x = b (mod m).
            let mut i = BigInt::from(0);
            while i < gcd {
                let x = &value + &i * &reduced_modulus;
                assert!(((big(a) * &x - big(b)) % big(m)) == big(0));
                i += 1;
            }
        }
        ExtInverseOutcome::NoSolution { gcd } => {
            println!("({b}*({a}^-1)_{m})_{m}: no solution, gcd = {gcd} does not divide {b}");
        }
    }
}

fn main() {
    // b = 1 recovers the ordinary inverse.
    show(1, 106, 189);
    // The general case: 106*x = 46 (mod 189).
    show(46, 106, 189);
    // Non-co-prime: gcd(530, 945) = 5 divides 230, so the answer lives
    // modulo 945/5 = 189.
    show(230, 530, 945);
    // ... and 5 does not divide 233.
    show(233, 530, 945);

    // Early termination: when b is a multiple of a (mod m), the gamma
    // column dies after one division step.
    println!();
    for k in 1..=3i64 {
        let trace = run_trace(
            &big(997),
            &big(251),
            &big(k * 251),
            &SignStrategy::AllPlus,
        )
        .unwrap();
        println!(
            "(({k}*251)*(251^-1)_997)_997 closes its sum after {} step(s)",
            trace.sum_steps().unwrap()
        );
    }
    // The scaled task above stops as soon as gamma vanishes; the plain
    // inverse of the worked pair has to grind down the whole chain.
    let scaled = run_trace(&big(189), &big(106), &big(46), &SignStrategy::AllPlus).unwrap();
    let full = run_trace(&big(189), &big(106), &big(1), &SignStrategy::AllPlus).unwrap();
    println!(
        "(46*(106^-1)_189)_189 takes {} steps; (106^-1)_189 takes {}",
        scaled.sum_steps().unwrap(),
        full.sum_steps().unwrap()
    );
}
