//! The generalized division trace behind the extended modular inverse.
//!
//! For `x = (a(q^-1)_p)_p` the engine iterates, with `r_{-1} = p`,
//! `r_0 = q`, `gamma_0 = (a)_p`, `f_{-1} = 0`, `f_0 = 1`:
//!
//! ```text
//! c_{i+1}     = s_{i+1} * floor(s_{i+1} * r_{i-1} / r_i)
//! r_{i+1}     = (s_{i+1} * r_{i-1})_{r_i}
//! gamma_{i+1} = (-s_{i+1} * gamma_i)_{r_i}
//! beta_i      = s_{i+1} * ceil(s_{i+1} * gamma_i / r_i)
//! f_i         = c_i * f_{i-1} + s_{i-1} * f_{i-2}
//! ```
//!
//! The answer is `sum f_i * beta_i` over `i = 0..=m`, where `m` is the
//! last index before the gamma column reaches zero (or the index at
//! which `r` reaches 1). Once the sum is closed the remainder column
//! keeps running, with the other columns frozen, until it reaches 1 or
//! 0: the last nonzero remainder is `gcd(p, q)`, so coprimality never
//! has to be known in advance.
//!
//! Extension point: the recurrences stay valid if the `r` and `gamma`
//! updates take *independent* signs per step. This engine ties them to
//! a single `s_{i+1}`, which is what [`SignStrategy`] models; a
//! two-sign variant would only need a second strategy input here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{DayanError, SignStrategy};
use crate::modmath::Sign;

/// One column of the trace. `s`, `c`, `gamma`, `beta`, `f` are absent
/// where the recurrences do not define them: everything but `r` and `f`
/// on the two seed columns, and everything but `r` and `s` on the
/// remainder-only columns that run past the closed sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DayanStep {
    pub index: i64,
    pub r: BigInt,
    pub s: Option<Sign>,
    pub c: Option<BigInt>,
    pub gamma: Option<BigInt>,
    pub beta: Option<BigInt>,
    pub f: Option<BigInt>,
}

/// How the trace ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The remainder column reached 1 with the gamma column still live.
    RemainderOne,
    /// The gamma column reached 0, so the sum closed early; a solution
    /// exists even when `gcd(p, q) > 1`.
    GammaZero,
    /// The remainder column reached 0 with gamma still nonzero:
    /// `gcd(p, q)` does not divide `a`, no solution.
    RemainderZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DayanTrace {
    pub p: BigInt,
    pub q: BigInt,
    pub a: BigInt,
    pub strategy: SignStrategy,
    pub steps: Vec<DayanStep>,
    pub termination: Termination,
    /// `gcd(p, q)`, read off the remainder column.
    pub gcd: BigInt,
    /// Last index contributing to the sum; `Some(-1)` is the empty sum
    /// (`a = 0`), `None` means no solution exists.
    pub sum_index: Option<i64>,
}

impl DayanTrace {
    pub fn has_solution(&self) -> bool {
        self.sum_index.is_some()
    }

    /// Number of terms in the closed sum, the unit in which this
    /// algorithm's division effort is counted.
    pub fn sum_steps(&self) -> Option<u64> {
        self.sum_index.map(|m| (m + 1) as u64)
    }

    /// Step at trace index `index` (from -1).
    pub fn step(&self, index: i64) -> Option<&DayanStep> {
        usize::try_from(index + 1).ok().and_then(|i| self.steps.get(i))
    }
}

/// Outcome of [`ext_mod_inverse`]. For `d = gcd(a, m) > 1` the value is
/// the canonical solution modulo `m/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtInverseOutcome {
    Defined {
        value: BigInt,
        reduced_modulus: BigInt,
        gcd: BigInt,
    },
    NoSolution {
        gcd: BigInt,
    },
}

impl ExtInverseOutcome {
    pub fn defined(self) -> Option<BigInt> {
        match self {
            ExtInverseOutcome::Defined { value, .. } => Some(value),
            ExtInverseOutcome::NoSolution { .. } => None,
        }
    }

    pub fn gcd(&self) -> &BigInt {
        match self {
            ExtInverseOutcome::Defined { gcd, .. } => gcd,
            ExtInverseOutcome::NoSolution { gcd } => gcd,
        }
    }
}

/// Runs the division trace for `(a(q^-1)_p)_p` with `0 < q < p` and
/// `0 <= a < p`. The remainder column always runs to 1 or 0 so that
/// `gcd(p, q)` is established.
pub fn run_trace(
    p: &BigInt,
    q: &BigInt,
    a: &BigInt,
    strategy: &SignStrategy,
) -> Result<DayanTrace, DayanError> {
    if !(q.is_positive() && q < p && !a.is_negative() && a < p) {
        return Err(DayanError::InvalidTraceInputs {
            p: p.clone(),
            q: q.clone(),
            a: a.clone(),
        });
    }

    let mut steps = vec![
        DayanStep {
            index: -1,
            r: p.clone(),
            s: None,
            c: None,
            gamma: None,
            beta: None,
            f: Some(BigInt::zero()),
        },
        DayanStep {
            index: 0,
            r: q.clone(),
            s: None,
            c: None,
            gamma: Some(a.clone()),
            beta: None,
            f: Some(BigInt::one()),
        },
    ];

    let mut r_prev = p.clone();
    let mut r_curr = q.clone();
    let mut gamma = a.clone(); // gamma_{j-1} while the sum is open
    let mut f_prev = BigInt::zero(); // f_{j-2}
    let mut f_curr = BigInt::one(); // f_{j-1}
    let mut s_prev = Sign::Plus; // s_{j-1}; s_0 is fixed to +1 (it multiplies f_{-1} = 0)
    let mut sum_index: Option<i64> = if a.is_zero() { Some(-1) } else { None };
    let mut j: i64 = 1;

    let (termination, gcd) = loop {
        if r_curr.is_one() {
            if sum_index.is_none() {
                // r_n = 1 closes the sum with beta_n = gamma_n.
                steps.last_mut().unwrap().beta = Some(gamma.clone());
                sum_index = Some(j - 1);
                break (Termination::RemainderOne, BigInt::one());
            }
            break (Termination::GammaZero, BigInt::one());
        }

        let s = strategy.pick(j as usize, &r_prev, &r_curr)?;
        let (c_unsigned, r_next) = s.apply(&r_prev).div_mod_floor(&r_curr);
        let c = s.apply(&c_unsigned);

        if sum_index.is_none() {
            let gamma_next = (-s.apply(&gamma)).mod_floor(&r_curr);
            // gamma_{j-1} = beta_{j-1} * r_{j-1} - s_j * gamma_j, solved
            // for beta_{j-1}; the division is exact.
            let beta_prev = (&gamma + s.apply(&gamma_next)) / &r_curr;
            steps.last_mut().unwrap().beta = Some(beta_prev);
            let f_next = &c * &f_curr + s_prev.apply(&f_prev);
            let closes_sum = gamma_next.is_zero();
            steps.push(DayanStep {
                index: j,
                r: r_next.clone(),
                s: Some(s),
                c: Some(c),
                gamma: Some(gamma_next.clone()),
                beta: closes_sum.then(BigInt::zero),
                f: Some(f_next.clone()),
            });
            if closes_sum {
                sum_index = Some(j - 1);
            }
            gamma = gamma_next;
            f_prev = std::mem::replace(&mut f_curr, f_next);
            s_prev = s;
        } else {
            // Remainder-only column: the sum is closed, the chain keeps
            // going just to pin down the gcd.
            steps.push(DayanStep {
                index: j,
                r: r_next.clone(),
                s: Some(s),
                c: None,
                gamma: None,
                beta: None,
                f: None,
            });
        }

        if r_next.is_zero() {
            let d = r_curr.clone();
            let termination = if sum_index.is_some() {
                Termination::GammaZero
            } else {
                Termination::RemainderZero
            };
            break (termination, d);
        }
        r_prev = std::mem::replace(&mut r_curr, r_next);
        j += 1;
    };

    Ok(DayanTrace {
        p: p.clone(),
        q: q.clone(),
        a: a.clone(),
        strategy: strategy.clone(),
        steps,
        termination,
        gcd,
        sum_index,
    })
}

/// `sum f_i * beta_i` over the closed sum of `trace`.
pub fn ext_inverse_sum_f(trace: &DayanTrace) -> Result<BigInt, DayanError> {
    let m = trace.sum_index.ok_or_else(|| DayanError::NoSolution {
        gcd: trace.gcd.clone(),
    })?;
    let mut acc = BigInt::zero();
    for i in 0..=m {
        let step = trace.step(i).expect("sum rows exist");
        let f = step.f.as_ref().expect("sum rows carry f");
        let beta = step.beta.as_ref().expect("sum rows carry beta");
        acc += f * beta;
    }
    Ok(acc)
}

/// `sum p*gamma_i / (r_{i-1} * r_i)` over the closed sum, evaluated in
/// exact rational arithmetic. Always an integer, equal to
/// [`ext_inverse_sum_f`].
pub fn ext_inverse_sum_fraction(trace: &DayanTrace) -> Result<BigInt, DayanError> {
    let m = trace.sum_index.ok_or_else(|| DayanError::NoSolution {
        gcd: trace.gcd.clone(),
    })?;
    let mut acc = BigRational::zero();
    for i in 0..=m {
        let r_before = &trace.step(i - 1).expect("sum rows exist").r;
        let step = trace.step(i).expect("sum rows exist");
        let gamma = step.gamma.as_ref().expect("sum rows carry gamma");
        acc += BigRational::new(&trace.p * gamma, r_before * &step.r);
    }
    assert!(acc.is_integer(), "fraction-series sum must be integral");
    Ok(acc.to_integer())
}

/// The extended modular inverse `(b(a^-1)_m)_m` for `m > 1`, `a != 0`:
/// the canonical solution of `a*x = b (mod m)`, computed from a single
/// division trace on the reduced inputs. `gcd(a, m)` falls out of the
/// same trace.
pub fn ext_mod_inverse(
    b: &BigInt,
    a: &BigInt,
    m: &BigInt,
    strategy: &SignStrategy,
) -> Result<ExtInverseOutcome, DayanError> {
    ext_mod_inverse_with_trace(b, a, m, strategy).map(|(outcome, _)| outcome)
}

/// [`ext_mod_inverse`] keeping the trace for display. The trace is
/// `None` only in the degenerate case `a = 0 (mod m)`, where no
/// division ever happens.
pub fn ext_mod_inverse_with_trace(
    b: &BigInt,
    a: &BigInt,
    m: &BigInt,
    strategy: &SignStrategy,
) -> Result<(ExtInverseOutcome, Option<DayanTrace>), DayanError> {
    if *m <= BigInt::one() {
        return Err(DayanError::ModulusTooSmall { modulus: m.clone() });
    }
    if a.is_zero() {
        return Err(DayanError::ZeroMultiplier);
    }
    let q = a.mod_floor(m);
    let b_reduced = b.mod_floor(m);
    if q.is_zero() {
        // a = 0 (mod m): gcd(a, m) = m, solvable only for b = 0 (mod m).
        let outcome = if b_reduced.is_zero() {
            ExtInverseOutcome::Defined {
                value: BigInt::zero(),
                reduced_modulus: BigInt::one(),
                gcd: m.clone(),
            }
        } else {
            ExtInverseOutcome::NoSolution { gcd: m.clone() }
        };
        return Ok((outcome, None));
    }
    let trace = run_trace(m, &q, &b_reduced, strategy)?;
    let outcome = if trace.has_solution() {
        ExtInverseOutcome::Defined {
            value: ext_inverse_sum_f(&trace)?,
            reduced_modulus: m / &trace.gcd,
            gcd: trace.gcd.clone(),
        }
    } else {
        ExtInverseOutcome::NoSolution {
            gcd: trace.gcd.clone(),
        }
    };
    Ok((outcome, Some(trace)))
}
