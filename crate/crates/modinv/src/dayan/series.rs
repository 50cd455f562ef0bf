//! Closed-form series for the ordinary modular inverse `(q^-1)_p`.
//!
//! Both families need only the remainder chain of `p` and `q`. The
//! first type uses `r_i = (r_{i-2})_{r_{i-1}}` and alternating signs;
//! the second uses `r_i = (-r_{i-2})_{r_{i-1}}` and all-positive terms.
//! The condensed variants fold consecutive term pairs into one quotient
//! term. Everything is evaluated in exact rational arithmetic, so the
//! results are not limited to inputs where floating point would stay
//! faithful.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::DayanError;
use crate::modmath::Sign;

/// Remainder and quotient chain of a fixed-sign division run:
/// `remainders[0] = p`, `remainders[1] = q`, down to a final 1;
/// `quotients[i]` pairs with `remainders[i + 2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderChain {
    pub remainders: Vec<BigInt>,
    pub quotients: Vec<BigInt>,
}

impl RemainderChain {
    /// Index `n` of the final remainder 1 (counting `p` as index -1).
    pub fn last_index(&self) -> usize {
        self.remainders.len() - 2
    }
}

/// Runs `r_i = (s * r_{i-2})_{r_{i-1}}` from `(p, q)` down to 1, for
/// `1 < q < p`. A chain that reaches 0 instead means `gcd(p, q) > 1`
/// and is reported as such.
pub fn remainder_chain(p: &BigInt, q: &BigInt, sign: Sign) -> Result<RemainderChain, DayanError> {
    if !(*q > BigInt::one() && q < p) {
        return Err(DayanError::InvalidSeriesInputs {
            p: p.clone(),
            q: q.clone(),
        });
    }
    let mut remainders = vec![p.clone(), q.clone()];
    let mut quotients = Vec::new();
    let (mut r_prev, mut r_curr) = (p.clone(), q.clone());
    loop {
        if r_curr.is_one() {
            return Ok(RemainderChain {
                remainders,
                quotients,
            });
        }
        let (c, r_next) = sign.apply(&r_prev).div_mod_floor(&r_curr);
        if r_next.is_zero() {
            return Err(DayanError::NotCoprime { gcd: r_curr });
        }
        quotients.push(sign.apply(&c));
        remainders.push(r_next.clone());
        r_prev = std::mem::replace(&mut r_curr, r_next);
    }
}

/// First-type series before and after the parity correction: `raw` can
/// be negative, `value` is the canonical inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingSeries {
    pub raw: BigInt,
    pub value: BigInt,
}

/// `(q^-1)_p = p * sum (-1)^i / (r_{i-1} r_i)`, plus `p` whenever the
/// raw value comes out negative (equivalently, when the chain length is
/// odd).
pub fn inverse_series_first_type(p: &BigInt, q: &BigInt) -> Result<AlternatingSeries, DayanError> {
    let chain = remainder_chain(p, q, Sign::Plus)?;
    let rs = &chain.remainders;
    let mut acc = BigRational::zero();
    for i in 0..=chain.last_index() {
        let term = BigRational::new(p.clone(), &rs[i] * &rs[i + 1]);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    assert!(acc.is_integer(), "alternating series must sum to an integer");
    let raw = acc.to_integer();
    let value = if raw.is_negative() { &raw + p } else { raw.clone() };
    debug_assert_eq!(raw.is_negative(), chain.last_index() % 2 == 1);
    Ok(AlternatingSeries { raw, value })
}

/// First-type series with pairs of terms folded into quotient terms:
/// `-p * sum c_{2j+1} / (r_{2j-1} r_{2j+1})` with tail `p / r_{n-1}`
/// for even `n`, `p` for odd `n`.
pub fn inverse_series_first_type_condensed(
    p: &BigInt,
    q: &BigInt,
) -> Result<BigInt, DayanError> {
    let chain = remainder_chain(p, q, Sign::Plus)?;
    Ok(condensed_sum(p, &chain, Sign::Plus))
}

/// Second-type series: all terms positive, no parity bookkeeping.
/// `condensed` folds term pairs the same way as the first type.
pub fn inverse_series_second_type(
    p: &BigInt,
    q: &BigInt,
    condensed: bool,
) -> Result<BigInt, DayanError> {
    let chain = remainder_chain(p, q, Sign::Minus)?;
    if condensed {
        return Ok(condensed_sum(p, &chain, Sign::Minus));
    }
    let rs = &chain.remainders;
    let mut acc = BigRational::zero();
    for i in 0..=chain.last_index() {
        acc += BigRational::new(p.clone(), &rs[i] * &rs[i + 1]);
    }
    assert!(acc.is_integer(), "positive series must sum to an integer");
    Ok(acc.to_integer())
}

fn condensed_sum(p: &BigInt, chain: &RemainderChain, sign: Sign) -> BigInt {
    let n = chain.last_index();
    let rs = &chain.remainders;
    let cs = &chain.quotients;
    let mut acc = BigRational::zero();
    for j in 0..=(n - 1) / 2 {
        acc += BigRational::new(p * &cs[2 * j], &rs[2 * j] * &rs[2 * j + 2]);
    }
    let acc = match sign {
        Sign::Plus => -acc,
        Sign::Minus => acc,
    };
    let tail = if n.is_multiple_of(2) {
        // Leftover unpaired term 1/(r_{n-1} r_n) with r_n = 1.
        BigRational::new(p.clone(), rs[n].clone())
    } else {
        match sign {
            Sign::Plus => BigRational::from_integer(p.clone()),
            Sign::Minus => BigRational::zero(),
        }
    };
    let total = acc + tail;
    assert!(total.is_integer(), "condensed series must sum to an integer");
    total.to_integer()
}

/// Runs the all-minus chain and returns every `(r_j, f_j)` pair. Each
/// remainder is its own scaled inverse witness:
/// `(r_j * (q^-1)_p)_p = f_j`, and the last pair is `(1, (q^-1)_p)`.
pub fn convergent_inverse_check(
    p: &BigInt,
    q: &BigInt,
) -> Result<Vec<(BigInt, BigInt)>, DayanError> {
    let chain = remainder_chain(p, q, Sign::Minus)?;
    let n = chain.last_index();
    let mut f_prev = BigInt::zero();
    let mut f_curr = BigInt::one();
    let mut pairs = vec![(chain.remainders[1].clone(), f_curr.clone())];
    for j in 1..=n {
        // f_j = c_j f_{j-1} + s_{j-1} f_{j-2} with every s = -1 (s_0
        // multiplies f_{-1} = 0 and never matters).
        let f_next = if j == 1 {
            chain.quotients[0].clone()
        } else {
            &chain.quotients[j - 1] * &f_curr - &f_prev
        };
        f_prev = std::mem::replace(&mut f_curr, f_next);
        pairs.push((chain.remainders[j + 1].clone(), f_curr.clone()));
    }
    Ok(pairs)
}
