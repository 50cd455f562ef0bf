//! Chinese Remainder solving: the iterative co-prime path, the
//! non-co-prime pair formula, and the balanced reduction tree.
//!
//! ```bash
//! cargo run --example chinese_remainder
//! ```

use modinv::crt::{
    parse_congruence_file, solve_coprime, solve_general, solve_general_parallel,
    solve_general_with_rounds, solve_pair, Congruence,
};
use num_bigint::BigInt;

fn cong(a: i64, m: i64) -> Congruence {
    Congruence::new(BigInt::from(a), BigInt::from(m)).unwrap()
}

fn main() {
    // Co-prime moduli: each step costs one extended inverse.
    let system = [cong(5, 106), cong(51, 189)];
    let solution = solve_coprime(&system).unwrap();
    println!("x = 5 (mod 106), x = 51 (mod 189)  =>  x = {solution}");
    assert!(solution.satisfies(&system));

    let classic = [cong(2, 3), cong(3, 5), cong(2, 7)];
    println!("classic three-modulus system       =>  x = {}", solve_coprime(&classic).unwrap());

    // Non-co-prime pair: gcd(530, 945) = 5 comes out of the same
    // division trace, and the combined modulus is the lcm.
    let pair = (cong(79, 530), cong(309, 945));
    let solution = solve_pair(&pair.0, &pair.1).unwrap();
    println!("x = 79 (mod 530), x = 309 (mod 945) =>  x = {solution}");

    // Incompatible residues are reported with the offending moduli.
    match solve_pair(&cong(1, 4), &cong(2, 6)) {
        Err(e) => println!("x = 1 (mod 4), x = 2 (mod 6)        =>  {e}"),
        Ok(s) => unreachable!("{s}"),
    }

    // The general solver merges pairwise in ceil(log2(n)) rounds; the
    // merges inside one round are independent, so they can run on a
    // thread pool without changing the result.
    let text = "# mixed system, moduli not co-prime\n3 mod 4\n3 mod 6\n7 mod 10\n12 mod 15\n2 mod 7\n";
    let system = parse_congruence_file(text).unwrap();
    let (solution, rounds) = solve_general_with_rounds(&system).unwrap();
    println!("five-congruence mixed system        =>  x = {solution} ({rounds} rounds)");
    assert_eq!(solve_general(&system).unwrap(), solution);
    assert_eq!(solve_general_parallel(&system).unwrap(), solution);
    assert!(solution.satisfies(&system));
}
