//! Desk-scale brute-force references and the classical extended-Euclid
//! baseline with division-step counting.
//!
//! The scans are deliberately naive (they enumerate candidate solutions
//! and test the defining congruence directly) so they stay independent
//! of the division-trace machinery they are used to check. Small inputs
//! take an i64 fast path; anything larger falls back to bigints.

use std::collections::BTreeMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::crt::Congruence;
use crate::dayan::{run_trace, SignStrategy};

/// Largest lcm [`brute_crt`] will scan.
pub const DEFAULT_SCAN_BOUND: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("modulus {modulus} out of oracle range")]
    ModulusOutOfRange { modulus: BigInt },
    #[error("scan bound exceeded: lcm {lcm} > {bound}")]
    ScanBoundExceeded { lcm: BigInt, bound: BigInt },
    #[error("sample range needs max_p >= 3 and samples >= 1")]
    EmptyRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    ExtendedEuclid,
    DayanAllPlus,
    DayanAllMinus,
    DayanLeastAbs,
}

/// Division-step tally: one step is one quotient-remainder computation,
/// counted under the same definition for every algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepCount {
    pub algorithm: Algorithm,
    pub divisions: u64,
}

/// Scans the canonical inverse range for `x` with `a*x = 1 (mod m)`.
/// Needs `|m| > 1`; the unit-modulus cases have a closed form and no
/// range to scan.
pub fn brute_inverse(a: &BigInt, m: &BigInt) -> Result<Option<BigInt>, OracleError> {
    if m.abs() <= BigInt::one() {
        return Err(OracleError::ModulusOutOfRange { modulus: m.clone() });
    }
    let m_abs = m.abs();
    let a_red = a.mod_floor(&m_abs);
    if let (Some(a_i), Some(m_i)) = (a_red.to_i64(), m.to_i64()) {
        if m_i.unsigned_abs() <= 1 << 31 {
            let m_mag = m_i.abs();
            let range: Box<dyn Iterator<Item = i64>> = if m_i > 0 {
                Box::new(1..m_i)
            } else {
                Box::new((m_i + 1)..0)
            };
            for x in range {
                if (a_i * x - 1).rem_euclid(m_mag) == 0 {
                    return Ok(Some(BigInt::from(x)));
                }
            }
            return Ok(None);
        }
    }
    let mut x = if m.is_positive() {
        BigInt::one()
    } else {
        m + BigInt::one()
    };
    let end = if m.is_positive() { m.clone() } else { BigInt::zero() };
    while x < end {
        if ((&a_red * &x) - BigInt::one()).mod_floor(&m_abs).is_zero() {
            return Ok(Some(x));
        }
        x += 1;
    }
    Ok(None)
}

/// Scans `x` in `[0, m)` for `a*x = b (mod m)`, returning the smallest
/// hit; that is the canonical reduced representative when
/// `gcd(a, m) > 1`.
pub fn brute_ext_inverse(
    b: &BigInt,
    a: &BigInt,
    m: &BigInt,
) -> Result<Option<BigInt>, OracleError> {
    if *m <= BigInt::one() {
        return Err(OracleError::ModulusOutOfRange { modulus: m.clone() });
    }
    let a_red = a.mod_floor(m);
    let b_red = b.mod_floor(m);
    if let (Some(a_i), Some(b_i), Some(m_i)) = (a_red.to_i64(), b_red.to_i64(), m.to_i64()) {
        if m_i <= 1 << 31 {
            for x in 0..m_i {
                if (a_i * x) % m_i == b_i {
                    return Ok(Some(BigInt::from(x)));
                }
            }
            return Ok(None);
        }
    }
    let mut x = BigInt::zero();
    while x < *m {
        if (&a_red * &x).mod_floor(m) == b_red {
            return Ok(Some(x));
        }
        x += 1;
    }
    Ok(None)
}

/// Scans `[0, lcm)` for a simultaneous solution of `system`, with the
/// default lcm bound of [`DEFAULT_SCAN_BOUND`].
pub fn brute_crt(system: &[Congruence]) -> Result<Option<(BigInt, BigInt)>, OracleError> {
    brute_crt_bounded(system, &BigInt::from(DEFAULT_SCAN_BOUND))
}

pub fn brute_crt_bounded(
    system: &[Congruence],
    bound: &BigInt,
) -> Result<Option<(BigInt, BigInt)>, OracleError> {
    let lcm = system
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.modulus()));
    if lcm > *bound {
        return Err(OracleError::ScanBoundExceeded {
            lcm,
            bound: bound.clone(),
        });
    }
    if let Some(lcm_i) = lcm.to_i64() {
        let parts: Vec<(i64, i64)> = system
            .iter()
            .map(|c| {
                (
                    c.residue().to_i64().expect("residue < modulus <= lcm"),
                    c.modulus().to_i64().expect("modulus divides lcm"),
                )
            })
            .collect();
        for x in 0..lcm_i {
            if parts.iter().all(|(a, m)| x % m == *a) {
                return Ok(Some((BigInt::from(x), lcm)));
            }
        }
        return Ok(None);
    }
    let mut x = BigInt::zero();
    while x < lcm {
        if system.iter().all(|c| c.holds_for(&x)) {
            return Ok(Some((x, lcm)));
        }
        x += 1;
    }
    Ok(None)
}

/// Classical extended Euclid for `(a^-1)_m`, `m > 1`, counting
/// quotient-remainder steps until the remainder reaches zero. Returns
/// the inverse canonicalized into `[1, m-1]`, or `None` when
/// `gcd(a, m) > 1`, along with the count either way.
pub fn euclid_inverse_counted(
    a: &BigInt,
    m: &BigInt,
) -> Result<(Option<BigInt>, StepCount), OracleError> {
    if *m <= BigInt::one() {
        return Err(OracleError::ModulusOutOfRange { modulus: m.clone() });
    }
    let mut r0 = m.clone();
    let mut r1 = a.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    let mut divisions = 0u64;
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1);
        divisions += 1;
        r0 = std::mem::replace(&mut r1, rem);
        let t = &t0 - &quot * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    let inverse = r0.is_one().then(|| t0.mod_floor(m));
    Ok((
        inverse,
        StepCount {
            algorithm: Algorithm::ExtendedEuclid,
            divisions,
        },
    ))
}

/// One sampled extended-inverse task and the division steps each
/// algorithm spent on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub p: u64,
    pub q: u64,
    pub a: u64,
    pub euclid: u64,
    pub dayan_plus: u64,
    pub dayan_minus: u64,
    pub dayan_least_abs: u64,
}

impl BenchRow {
    pub fn count(&self, algorithm: Algorithm) -> u64 {
        match algorithm {
            Algorithm::ExtendedEuclid => self.euclid,
            Algorithm::DayanAllPlus => self.dayan_plus,
            Algorithm::DayanAllMinus => self.dayan_minus,
            Algorithm::DayanLeastAbs => self.dayan_least_abs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn mean(&self, algorithm: Algorithm) -> f64 {
        if self.rows.is_empty() {
            return 0.0;
        }
        let total: u64 = self.rows.iter().map(|r| r.count(algorithm)).sum();
        total as f64 / self.rows.len() as f64
    }

    pub fn histogram(&self, algorithm: Algorithm) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        for row in &self.rows {
            *hist.entry(row.count(algorithm)).or_insert(0) += 1;
        }
        hist
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "p,q,a,euclid_steps,dayan_plus_steps,dayan_minus_steps,dayan_leastabs_steps"
        )?;
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.p, r.q, r.a, r.euclid, r.dayan_plus, r.dayan_minus, r.dayan_least_abs
            )?;
        }
        Ok(())
    }
}

/// Samples `(p, q, a)` extended-inverse tasks with co-prime `1 < q < p
/// <= max_p` and `0 <= a < p`, recording division steps for extended
/// Euclid (full inverse, remainder run to zero) against the trace sum
/// under each built-in strategy. Purely descriptive: it asserts no
/// winner.
pub fn compare_steps(max_p: u64, samples: usize, seed: u64) -> Result<BenchReport, OracleError> {
    if max_p < 3 || samples == 0 {
        return Err(OracleError::EmptyRange);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(samples);
    while rows.len() < samples {
        let p = rng.gen_range(3..=max_p);
        let q = rng.gen_range(2..p);
        if p.gcd(&q) != 1 {
            continue;
        }
        let a = rng.gen_range(0..p);
        let (p_big, q_big, a_big) = (BigInt::from(p), BigInt::from(q), BigInt::from(a));
        let sum_steps = |strategy: &SignStrategy| {
            run_trace(&p_big, &q_big, &a_big, strategy)
                .expect("sampled inputs are valid")
                .sum_steps()
                .expect("co-prime tasks always have a solution")
        };
        let (_, euclid) = euclid_inverse_counted(&q_big, &p_big)?;
        rows.push(BenchRow {
            p,
            q,
            a,
            euclid: euclid.divisions,
            dayan_plus: sum_steps(&SignStrategy::AllPlus),
            dayan_minus: sum_steps(&SignStrategy::AllMinus),
            dayan_least_abs: sum_steps(&SignStrategy::LeastAbsoluteRemainder),
        });
    }
    Ok(BenchReport { rows })
}
