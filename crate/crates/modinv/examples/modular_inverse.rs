//! Signed modulo, the sign-aware inverse, and the reciprocity
//! identities.
//!
//! ```bash
//! cargo run --example modular_inverse
//! ```

use modinv::modmath::{
    floor_mod, inverse_mod_shifted, mod_inverse, reciprocity_residual, shifted_inverse,
    ModInverseOutcome, Sign,
};
use num_bigint::BigInt;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn main() {
    // Floor modulo: the sign of the result follows the modulus.
    for (a, m) in [(7, 3), (-7, 3), (7, -3), (429, 189)] {
        println!("({a})_{m} = {}", floor_mod(&big(a), &big(m)).unwrap());
    }

    // The inverse is canonicalized per the sign of the modulus, and
    // |m| = 1 has a closed form instead of the usual 0.
    println!();
    for (a, m) in [(106, 189), (3, 10), (3, -10), (-1, 1), (7, -1)] {
        match mod_inverse(&big(a), &big(m)) {
            ModInverseOutcome::Defined(x) => println!("({a}^-1)_{m} = {x}"),
            other => println!("({a}^-1)_{m} undefined: {other:?}"),
        }
    }
    println!(
        "(4^-1)_10 = {:?}",
        mod_inverse(&big(4), &big(10)) // gcd 2: structured "undefined"
    );

    // a(a^-1)_b + b(b^-1)_a - (1 + ab) vanishes for every co-prime
    // pair, whatever the signs.
    println!();
    for (a, b) in [(106, 189), (-5, 7), (1, -9), (-1, -1)] {
        println!(
            "reciprocity residual ({a}, {b}) = {}",
            reciprocity_residual(&big(a), &big(b)).unwrap()
        );
    }

    // Shift identities: inverses of and modulo k*a + b from the two
    // small inverses, no work on the large modulus.
    println!();
    let k = big(1);
    println!(
        "((1*10+3)^-1)_10 = {}",
        shifted_inverse(&k, &big(10), &big(3)).unwrap()
    );
    println!(
        "(106^-1)_(1*106+83) = {}",
        inverse_mod_shifted(&k, &big(106), &big(83), Sign::Plus).unwrap()
    );
    println!(
        "(5^-1)_(1*5-3) = {}",
        inverse_mod_shifted(&k, &big(5), &big(3), Sign::Minus).unwrap()
    );
}
