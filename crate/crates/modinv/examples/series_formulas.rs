//! The inverse as a sum over the remainder chain: two term shapes, a
//! condensed variant of each, and the scaled-inverse pairs that fall
//! out of the all-minus chain.
//!
//! ```bash
//! cargo run --example series_formulas
//! ```

use modinv::dayan::{
    convergent_inverse_check, inverse_series_first_type, inverse_series_first_type_condensed,
    inverse_series_second_type, remainder_chain,
};
use modinv::modmath::Sign;
use num_bigint::BigInt;

fn main() {
    let (p, q) = (BigInt::from(189), BigInt::from(106));

    // First type: alternating terms over r_i = (r_{i-2})_{r_{i-1}}.
    // The raw sum can land below zero; adding p fixes the parity.
    let first = inverse_series_first_type(&p, &q).unwrap();
    println!("first type : raw {} -> value {}", first.raw, first.value);
    println!(
        "  condensed: {}",
        inverse_series_first_type_condensed(&p, &q).unwrap()
    );

    // Second type: r_i = (-r_{i-2})_{r_{i-1}} makes every term
    // positive, at the cost of a longer chain.
    println!(
        "second type: {}",
        inverse_series_second_type(&p, &q, false).unwrap()
    );
    println!(
        "  condensed: {}",
        inverse_series_second_type(&p, &q, true).unwrap()
    );

    let plus = remainder_chain(&p, &q, Sign::Plus).unwrap();
    let minus = remainder_chain(&p, &q, Sign::Minus).unwrap();
    println!(
        "\nchain lengths: first type {} steps, second type {} steps",
        plus.last_index(),
        minus.last_index()
    );

    // Every remainder of the all-minus chain is a scaled inverse:
    // (r_j * (q^-1)_p)_p = f_j, ending at (1, (q^-1)_p).
    println!("\nall-minus remainders as scaled inverses:");
    for (r, f) in convergent_inverse_check(&p, &q).unwrap() {
        println!("  ({r} * (106^-1)_189)_189 = {f}");
    }
}
