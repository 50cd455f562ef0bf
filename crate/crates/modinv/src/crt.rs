//! Chinese Remainder solvers built on the extended modular inverse.
//!
//! `solve_coprime` is the iterative combination for pairwise co-prime
//! moduli. `solve_pair` handles two congruences whose moduli need not
//! be co-prime: the gcd falls out of the same division trace that
//! produces the inverse, so co-primality never has to be checked up
//! front. `solve_general` reduces any system by pairwise merges in a
//! balanced tree, which also parallelizes round by round.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use thiserror::Error;

use crate::dayan::{ext_mod_inverse, ExtInverseOutcome, SignStrategy};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrtError {
    #[error("empty congruence system")]
    EmptySystem,
    #[error("modulus {modulus} must exceed 1")]
    InvalidModulus { modulus: BigInt },
    #[error("moduli not pairwise co-prime (gcd {gcd}); use solve_pair or solve_general")]
    ModuliNotCoprime { gcd: BigInt },
    #[error("no solution: moduli {left_modulus},{right_modulus} (gcd {gcd}) incompatible")]
    Incompatible {
        /// Original indices of the first congruence on each side of the
        /// failing merge.
        left_index: usize,
        right_index: usize,
        left_modulus: BigInt,
        right_modulus: BigInt,
        gcd: BigInt,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// `x = residue (mod modulus)` with `modulus > 1` and the residue
/// canonicalized into `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    residue: BigInt,
    modulus: BigInt,
}

impl Congruence {
    pub fn new(residue: BigInt, modulus: BigInt) -> Result<Self, CrtError> {
        if modulus <= BigInt::one() {
            return Err(CrtError::InvalidModulus { modulus });
        }
        Ok(Congruence {
            residue: residue.mod_floor(&modulus),
            modulus,
        })
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn holds_for(&self, x: &BigInt) -> bool {
        x.mod_floor(&self.modulus) == self.residue
    }
}

impl std::fmt::Display for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Canonical solution: `0 <= residue < modulus`, where the modulus is
/// the product of co-prime input moduli or their lcm otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtSolution {
    pub residue: BigInt,
    pub modulus: BigInt,
}

impl CrtSolution {
    pub fn satisfies(&self, system: &[Congruence]) -> bool {
        system.iter().all(|c| c.holds_for(&self.residue))
    }
}

impl std::fmt::Display for CrtSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Iterative combination for pairwise co-prime moduli:
/// `x_k = M_{k-1} * ((a_k - x_{k-1}) * (M_{k-1}^-1)_{m_k})_{m_k} + x_{k-1}`.
/// A gcd > 1 surfacing from any inverse aborts with
/// [`CrtError::ModuliNotCoprime`].
pub fn solve_coprime(system: &[Congruence]) -> Result<CrtSolution, CrtError> {
    let (first, rest) = system.split_first().ok_or(CrtError::EmptySystem)?;
    let mut x = first.residue.clone();
    let mut modulus = first.modulus.clone();
    for c in rest {
        let outcome = ext_mod_inverse(
            &(&c.residue - &x),
            &modulus,
            &c.modulus,
            &SignStrategy::AllPlus,
        )
        .expect("modulus > 1 and multiplier > 0 by construction");
        match outcome {
            ExtInverseOutcome::Defined { value, gcd, .. } if gcd.is_one() => {
                x += &modulus * value;
                modulus *= &c.modulus;
            }
            other => {
                return Err(CrtError::ModuliNotCoprime {
                    gcd: other.gcd().clone(),
                })
            }
        }
    }
    Ok(CrtSolution {
        residue: x,
        modulus,
    })
}

/// Two congruences, moduli not necessarily co-prime:
/// `x = m_1 * ((a_2 - a_1)(m_1^-1)_{m_2})_{m_2} + a_1` modulo
/// `lcm(m_1, m_2)`, solvable iff `gcd(m_1, m_2)` divides `a_1 - a_2`.
pub fn solve_pair(c1: &Congruence, c2: &Congruence) -> Result<CrtSolution, CrtError> {
    merge(
        &Node {
            congruence: c1.clone(),
            origin: 0,
        },
        &Node {
            congruence: c2.clone(),
            origin: 1,
        },
    )
    .map(|node| CrtSolution {
        residue: node.congruence.residue,
        modulus: node.congruence.modulus,
    })
}

/// Any system, co-prime or not, reduced by pairwise merges in a
/// balanced tree (an odd node passes through its round unchanged).
pub fn solve_general(system: &[Congruence]) -> Result<CrtSolution, CrtError> {
    reduce(system, false).map(|(solution, _)| solution)
}

/// [`solve_general`] with the merges of each round running on the
/// rayon pool. Same result, same error selection.
pub fn solve_general_parallel(system: &[Congruence]) -> Result<CrtSolution, CrtError> {
    reduce(system, true).map(|(solution, _)| solution)
}

/// [`solve_general`] reporting how many reduction rounds the tree took
/// (`ceil(log2(n))` for `n` congruences).
pub fn solve_general_with_rounds(system: &[Congruence]) -> Result<(CrtSolution, usize), CrtError> {
    reduce(system, false)
}

#[derive(Debug, Clone)]
struct Node {
    congruence: Congruence,
    origin: usize,
}

fn merge(left: &Node, right: &Node) -> Result<Node, CrtError> {
    let (m1, a1) = (&left.congruence.modulus, &left.congruence.residue);
    let (m2, a2) = (&right.congruence.modulus, &right.congruence.residue);
    let outcome = ext_mod_inverse(&(a2 - a1), m1, m2, &SignStrategy::AllPlus)
        .expect("modulus > 1 and multiplier > 0 by construction");
    match outcome {
        ExtInverseOutcome::Defined { value, gcd, .. } => {
            let residue = m1 * value + a1;
            let modulus = m1 * m2 / &gcd;
            debug_assert!(!residue.is_negative() && residue < modulus);
            Ok(Node {
                congruence: Congruence { residue, modulus },
                origin: left.origin,
            })
        }
        ExtInverseOutcome::NoSolution { gcd } => Err(CrtError::Incompatible {
            left_index: left.origin,
            right_index: right.origin,
            left_modulus: m1.clone(),
            right_modulus: m2.clone(),
            gcd,
        }),
    }
}

fn reduce(system: &[Congruence], parallel: bool) -> Result<(CrtSolution, usize), CrtError> {
    if system.is_empty() {
        return Err(CrtError::EmptySystem);
    }
    let mut nodes: Vec<Node> = system
        .iter()
        .enumerate()
        .map(|(origin, congruence)| Node {
            congruence: congruence.clone(),
            origin,
        })
        .collect();
    let mut rounds = 0;
    while nodes.len() > 1 {
        let merge_chunk = |chunk: &[Node]| match chunk {
            [left, right] => merge(left, right),
            [single] => Ok(single.clone()),
            _ => unreachable!("chunks of 2"),
        };
        let merged: Vec<Result<Node, CrtError>> = if parallel {
            nodes.par_chunks(2).map(merge_chunk).collect()
        } else {
            nodes.chunks(2).map(merge_chunk).collect()
        };
        // First failing pair in tree order wins, parallel or not.
        nodes = merged.into_iter().collect::<Result<Vec<_>, _>>()?;
        rounds += 1;
    }
    let node = nodes.pop().expect("nonempty");
    Ok((
        CrtSolution {
            residue: node.congruence.residue,
            modulus: node.congruence.modulus,
        },
        rounds,
    ))
}

/// Parses a congruence system, one `a mod m` per line. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_congruence_file(text: &str) -> Result<Vec<Congruence>, CrtError> {
    let mut system = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |s: &str| {
            s.parse::<BigInt>().map_err(|e| CrtError::Parse {
                line: idx + 1,
                message: format!("bad integer {s:?}: {e}"),
            })
        };
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            [a, "mod", m] => {
                let modulus = parse(m)?;
                if modulus <= BigInt::one() {
                    return Err(CrtError::Parse {
                        line: idx + 1,
                        message: format!("modulus {modulus} must exceed 1"),
                    });
                }
                system.push(Congruence::new(parse(a)?, modulus).expect("modulus checked"));
            }
            _ => {
                return Err(CrtError::Parse {
                    line: idx + 1,
                    message: format!("expected \"a mod m\", got {line:?}"),
                })
            }
        }
    }
    Ok(system)
}
