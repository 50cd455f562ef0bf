//! Cross-module invariants: the two sum routes agree, sign strategies
//! agree, gcd discovery matches the sign-product identity, cancellation
//! of common factors, and randomized big-integer properties.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use modinv::crt::{solve_general, solve_general_parallel, Congruence};
use modinv::dayan::{
    ext_inverse_sum_f, ext_inverse_sum_fraction, ext_mod_inverse, run_trace, DayanTrace,
    ExtInverseOutcome, SignStrategy, Termination,
};
use modinv::modmath::{floor_mod, mod_inverse, ModInverseOutcome};
use modinv::render::TraceDocument;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn strategies() -> Vec<SignStrategy> {
    vec![
        SignStrategy::AllPlus,
        SignStrategy::AllMinus,
        SignStrategy::LeastAbsoluteRemainder,
    ]
}

#[test]
fn sum_routes_and_strategies_agree() {
    for p in 3..=80i64 {
        for q in 2..p {
            for a in [0, 1, q, p - 1, (3 * p) / 7] {
                let mut values = Vec::new();
                for strategy in strategies() {
                    let t = run_trace(&big(p), &big(q), &big(a), &strategy).unwrap();
                    if !t.has_solution() {
                        values.push(None);
                        continue;
                    }
                    let by_f = ext_inverse_sum_f(&t).unwrap();
                    let by_fraction = ext_inverse_sum_fraction(&t).unwrap();
                    assert_eq!(by_f, by_fraction, "p={p} q={q} a={a} {strategy}");
                    values.push(Some(by_f));
                }
                assert!(
                    values.windows(2).all(|w| w[0] == w[1]),
                    "strategy disagreement at p={p} q={q} a={a}: {values:?}"
                );
            }
        }
    }
}

/// `r_{-1} = f_i r_{i-1} + s_i f_{i-1} r_i` holds on every step where
/// the f column is live.
#[test]
fn trace_reconstructs_p_at_every_step() {
    for p in 3..=60i64 {
        for q in 2..p {
            for a in [1, p - 1] {
                for strategy in strategies() {
                    let t = run_trace(&big(p), &big(q), &big(a), &strategy).unwrap();
                    for step in &t.steps {
                        if step.index < 1 {
                            continue;
                        }
                        let (Some(f), Some(s)) = (&step.f, step.s) else {
                            continue;
                        };
                        let before = t.step(step.index - 1).unwrap();
                        let f_before = before.f.as_ref().unwrap();
                        assert_eq!(
                            big(p),
                            f * &before.r + s.apply(&(f_before * &step.r)),
                            "p={p} q={q} a={a} step {}",
                            step.index
                        );
                    }
                }
            }
        }
    }
}

/// On a remainder-zero trace the final gamma equals
/// `((-1)^N s_1...s_N gamma_0)_d` for `N` division steps and `d` the
/// discovered gcd.
#[test]
fn final_gamma_matches_sign_product_identity() {
    let mut checked = 0;
    for p in 4..=80i64 {
        for q in 2..p {
            if big(p).gcd(&big(q)).is_one() {
                continue;
            }
            for a in 1..p.min(12) {
                for strategy in strategies() {
                    let t = run_trace(&big(p), &big(q), &big(a), &strategy).unwrap();
                    // The discovered gcd divides the whole remainder column.
                    for step in &t.steps {
                        assert!((&step.r % &t.gcd).is_zero(), "p={p} q={q} a={a}");
                    }
                    if t.termination != Termination::RemainderZero {
                        continue;
                    }
                    let last = t.steps.last().unwrap();
                    assert!(last.r.is_zero());
                    let mut sign = if last.index % 2 == 0 { big(1) } else { big(-1) };
                    for step in &t.steps {
                        if let Some(s) = step.s {
                            sign *= s.apply(&big(1));
                        }
                    }
                    let expected = floor_mod(&(sign * big(a)), &t.gcd).unwrap();
                    assert_eq!(last.gamma.as_ref(), Some(&expected), "p={p} q={q} a={a}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

/// Common factors of `a` and `b` cancel:
/// `(b(a^-1)_m)_m = ((b/g)((a/g)^-1)_m)_m` for `gcd(a, m) = 1`.
#[test]
fn common_factor_cancellation() {
    let plus = SignStrategy::AllPlus;
    for m in 2..=50i64 {
        for a in 1..m {
            if !big(a).gcd(&big(m)).is_one() {
                continue;
            }
            for b in 0..2 * m {
                let g = big(a).gcd(&big(b));
                if g.is_one() {
                    continue;
                }
                let full = ext_mod_inverse(&big(b), &big(a), &big(m), &plus).unwrap();
                let reduced =
                    ext_mod_inverse(&(big(b) / &g), &(big(a) / &g), &big(m), &plus).unwrap();
                assert_eq!(
                    full.defined(),
                    reduced.defined(),
                    "m={m} a={a} b={b} g={g}"
                );
            }
        }
    }
}

fn arb_sign_strategy() -> impl Strategy<Value = SignStrategy> {
    prop_oneof![
        Just(SignStrategy::AllPlus),
        Just(SignStrategy::AllMinus),
        Just(SignStrategy::LeastAbsoluteRemainder),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn floor_mod_sign_law_at_scale(a in any::<i128>(), m in any::<i128>()) {
        prop_assume!(m != 0);
        let r = floor_mod(&BigInt::from(a), &BigInt::from(m)).unwrap();
        if m > 0 {
            prop_assert!(r >= BigInt::zero() && r < BigInt::from(m));
        } else {
            prop_assert!(r > BigInt::from(m) && r <= BigInt::zero());
        }
        prop_assert!(((BigInt::from(a) - &r) % BigInt::from(m)).is_zero());
    }

    #[test]
    fn mod_inverse_solves_congruence_at_scale(a in any::<i128>(), m in any::<i128>()) {
        prop_assume!(a != 0 && m.unsigned_abs() > 1);
        let (a, m) = (BigInt::from(a), BigInt::from(m));
        match mod_inverse(&a, &m) {
            ModInverseOutcome::Defined(x) => {
                prop_assert!(((&a * &x - BigInt::one()) % &m).is_zero());
                if m.is_positive() {
                    prop_assert!(x >= BigInt::one() && x < m);
                } else {
                    prop_assert!(x > m && x <= BigInt::from(-1));
                }
            }
            ModInverseOutcome::UndefinedNotCoprime { gcd } => {
                prop_assert_eq!(gcd, a.gcd(&m));
            }
            ModInverseOutcome::UndefinedZeroModulus => prop_assert!(false, "inputs nonzero"),
        }
    }

    #[test]
    fn ext_mod_inverse_solves_congruence_at_scale(
        b in any::<i128>(),
        a in any::<i128>(),
        m in 2u64..,
        strategy in arb_sign_strategy(),
    ) {
        prop_assume!(a != 0);
        let (b, a, m) = (BigInt::from(b), BigInt::from(a), BigInt::from(m));
        match ext_mod_inverse(&b, &a, &m, &strategy).unwrap() {
            ExtInverseOutcome::Defined { value, reduced_modulus, gcd } => {
                prop_assert!(((&a * &value - &b) % &m).is_zero());
                prop_assert!(!value.is_negative() && value < reduced_modulus);
                prop_assert_eq!(&reduced_modulus * &gcd, m);
            }
            ExtInverseOutcome::NoSolution { gcd } => {
                prop_assert!(!gcd.is_one());
                prop_assert!(!(&b % &gcd).is_zero());
            }
        }
    }

    #[test]
    fn solve_general_solution_satisfies_system(
        raw in prop::collection::vec((any::<i64>(), 2u32..5000), 1..6)
    ) {
        let system: Vec<Congruence> = raw
            .iter()
            .map(|(a, m)| Congruence::new(BigInt::from(*a), BigInt::from(*m)).unwrap())
            .collect();
        match solve_general(&system) {
            Ok(solution) => {
                prop_assert!(solution.satisfies(&system));
                prop_assert!(!solution.residue.is_negative());
                prop_assert!(solution.residue < solution.modulus);
                prop_assert_eq!(solve_general_parallel(&system).unwrap(), solution);
            }
            Err(_) => {
                // Incompatible merges stay incompatible in any order.
                prop_assert!(solve_general_parallel(&system).is_err());
            }
        }
    }

    #[test]
    fn trace_documents_round_trip_at_scale(
        p in 3u32..5000,
        q_seed in 1u32..5000,
        a_seed in 0u32..5000,
        strategy in arb_sign_strategy(),
    ) {
        let q = 1 + q_seed % (p - 1);
        let a = a_seed % p;
        let trace = run_trace(
            &BigInt::from(p),
            &BigInt::from(q),
            &BigInt::from(a),
            &strategy,
        )
        .unwrap();
        let doc = TraceDocument::from_trace(&trace);
        let json = serde_json::to_string(&doc).unwrap();
        let parsed: TraceDocument = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed.to_trace().unwrap(), trace);
    }

    #[test]
    fn unit_target_recovers_the_ordinary_inverse(
        p in 3u32..2000,
        q_seed in 1u32..2000,
        strategy in arb_sign_strategy(),
    ) {
        let q = 1 + q_seed % (p - 1);
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        prop_assume!(p.gcd(&q).is_one() && q > BigInt::one());
        let t: DayanTrace = run_trace(&p, &q, &BigInt::one(), &strategy).unwrap();
        prop_assert_eq!(
            ext_inverse_sum_f(&t).unwrap(),
            mod_inverse(&q, &p).defined().unwrap()
        );
    }
}

/// Mirrors the trace engine against the textbook route
/// `(b * (a^-1)_m)_m` where the ordinary inverse exists.
#[test]
fn trace_engine_matches_multiply_then_reduce() {
    let plus = SignStrategy::AllPlus;
    for m in 2..=60i64 {
        for a in 1..m {
            if !big(a).gcd(&big(m)).is_one() {
                continue;
            }
            let inv = mod_inverse(&big(a), &big(m)).defined().unwrap();
            for b in 0..m {
                let direct = floor_mod(&(big(b) * &inv), &big(m)).unwrap();
                let via_trace = ext_mod_inverse(&big(b), &big(a), &big(m), &plus)
                    .unwrap()
                    .defined()
                    .unwrap();
                assert_eq!(via_trace, direct, "m={m} a={a} b={b}");
            }
        }
    }
}
