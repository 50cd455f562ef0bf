//! Signed modulo and the sign-aware modular inverse.
//!
//! `(a)_m` denotes the floor-division remainder: `0 <= (a)_m < m` for
//! `m > 0` and `m < (a)_m <= 0` for `m < 0`. The inverse `(a^-1)_m` is
//! canonicalized into `[1, m-1]` for `m > 1` and `[m+1, -1]` for
//! `m < -1`; for `|m| = 1` it is the closed form
//! `|m|(sgn(m) - sgn(a))/2 + sgn(a)` rather than the usual 0, which is
//! what makes the reciprocity identities below hold without sign
//! exceptions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModMathError {
    #[error("modulus is zero")]
    ZeroModulus,
    #[error("operand is zero")]
    ZeroOperand,
    #[error("not coprime, gcd={gcd}")]
    NotCoprime { gcd: BigInt },
    #[error("modulus {modulus} has magnitude <= 1")]
    ModulusTooSmall { modulus: BigInt },
    #[error("shifted modulus k*a{}b is zero", if *plus { '+' } else { '-' })]
    ZeroShiftedModulus { plus: bool },
}

/// A single division-step sign choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `s * x` without a bigint multiplication.
    pub fn apply(self, x: &BigInt) -> BigInt {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => -x,
        }
    }
}

/// Outcome of [`mod_inverse`]: "undefined" is a value, not an error, so
/// it can never be confused with a legal inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModInverseOutcome {
    Defined(BigInt),
    /// `a * m == 0`.
    UndefinedZeroModulus,
    /// `gcd(a, m) > 1`.
    UndefinedNotCoprime { gcd: BigInt },
}

impl ModInverseOutcome {
    pub fn defined(self) -> Option<BigInt> {
        match self {
            ModInverseOutcome::Defined(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, ModInverseOutcome::Defined(_))
    }
}

/// `a - m*floor(a/m)`. The sign of the result follows the modulus.
pub fn floor_mod(a: &BigInt, m: &BigInt) -> Result<BigInt, ModMathError> {
    if m.is_zero() {
        return Err(ModMathError::ZeroModulus);
    }
    Ok(a.mod_floor(m))
}

/// Sign-aware modular inverse of `a` modulo `m`. `a` may lie outside
/// the canonical range; it is reduced first.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> ModInverseOutcome {
    if a.is_zero() || m.is_zero() {
        return ModInverseOutcome::UndefinedZeroModulus;
    }
    let m_abs = m.abs();
    if m_abs.is_one() {
        let x = (m.signum() - a.signum()) / 2 + a.signum();
        return ModInverseOutcome::Defined(x);
    }
    let g = a.gcd(m);
    if !g.is_one() {
        return ModInverseOutcome::UndefinedNotCoprime { gcd: g };
    }
    let x = invert_coprime(&a.mod_floor(&m_abs), &m_abs);
    ModInverseOutcome::Defined(if m.is_negative() { x + m } else { x })
}

/// Extended Euclid for `0 < a < m`, `gcd(a, m) = 1`, `m > 1`; result in
/// `[1, m-1]`.
fn invert_coprime(a: &BigInt, m: &BigInt) -> BigInt {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, rem);
        let t = &t0 - &quot * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    debug_assert!(r0.is_one());
    t0.mod_floor(m)
}

fn inverse_checked(a: &BigInt, m: &BigInt) -> BigInt {
    match mod_inverse(a, m) {
        ModInverseOutcome::Defined(x) => x,
        _ => unreachable!("inputs pre-validated as nonzero and coprime"),
    }
}

/// `a*(a^-1)_b + b*(b^-1)_a - (1 + a*b)`, which is zero for every
/// coprime pair. Exposed so the identity is directly testable across
/// all sign and magnitude combinations.
pub fn reciprocity_residual(a: &BigInt, b: &BigInt) -> Result<BigInt, ModMathError> {
    if a.is_zero() || b.is_zero() {
        return Err(ModMathError::ZeroOperand);
    }
    let g = a.gcd(b);
    if !g.is_one() {
        return Err(ModMathError::NotCoprime { gcd: g });
    }
    let inv_a = inverse_checked(a, b);
    let inv_b = inverse_checked(b, a);
    Ok(a * inv_a + b * inv_b - (BigInt::one() + a * b))
}

/// `((k*a + b)^-1)_a` without touching `k`: equal to `(b^-1)_a` for
/// `|a| > 1`, plus a half-sign correction when `|a| = 1`.
pub fn shifted_inverse(k: &BigInt, a: &BigInt, b: &BigInt) -> Result<BigInt, ModMathError> {
    if a.is_zero() || b.is_zero() {
        return Err(ModMathError::ZeroOperand);
    }
    let g = a.gcd(b);
    if !g.is_one() {
        return Err(ModMathError::NotCoprime { gcd: g });
    }
    let shifted = k * a + b;
    if shifted.is_zero() {
        return Err(ModMathError::ZeroShiftedModulus { plus: true });
    }
    let base = inverse_checked(b, a);
    if a.abs().is_one() {
        Ok(base + (shifted.signum() - b.signum()) / 2)
    } else {
        Ok(base)
    }
}

/// Inverse of `a` modulo the shifted modulus `k*a + b` (or `k*a - b`),
/// assembled from the two small inverses `(b^-1)_a` and `(a^-1)_b`:
///
/// ```text
/// (a^-1)_{ka+b} = k*(a - (b^-1)_a) + (a^-1)_b
/// (a^-1)_{ka-b} = k*(b^-1)_a - (b - (a^-1)_b)
/// ```
///
/// Requires `|a| > 1`. The identities lean on the `|m| = 1` inverse
/// being the closed form above; they break if `(x^-1)_{+-1}` is taken
/// to be 0.
pub fn inverse_mod_shifted(
    k: &BigInt,
    a: &BigInt,
    b: &BigInt,
    sign: Sign,
) -> Result<BigInt, ModMathError> {
    if a.is_zero() || b.is_zero() {
        return Err(ModMathError::ZeroOperand);
    }
    if !(a.abs() > BigInt::one()) {
        return Err(ModMathError::ModulusTooSmall { modulus: a.clone() });
    }
    let g = a.gcd(b);
    if !g.is_one() {
        return Err(ModMathError::NotCoprime { gcd: g });
    }
    let modulus = match sign {
        Sign::Plus => k * a + b,
        Sign::Minus => k * a - b,
    };
    if modulus.is_zero() {
        return Err(ModMathError::ZeroShiftedModulus {
            plus: sign == Sign::Plus,
        });
    }
    let inv_b_mod_a = inverse_checked(b, a);
    let inv_a_mod_b = inverse_checked(a, b);
    Ok(match sign {
        Sign::Plus => k * (a - &inv_b_mod_a) + inv_a_mod_b,
        Sign::Minus => k * inv_b_mod_a - (b - inv_a_mod_b),
    })
}
