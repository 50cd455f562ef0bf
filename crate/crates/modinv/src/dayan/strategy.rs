//! Per-step sign policies for the division trace.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use super::DayanError;
use crate::modmath::Sign;

/// Chooses `s_i` in `{-1, +1}` for each division step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignStrategy {
    AllPlus,
    AllMinus,
    /// Pick the sign that minimizes the next remainder; ties go to plus.
    LeastAbsoluteRemainder,
    /// Fixed sign sequence; running past its end is an error.
    Explicit(Vec<Sign>),
}

impl SignStrategy {
    /// Sign for step `index` (1-based), given `r_{i-1}` and `r_i`.
    pub(crate) fn pick(
        &self,
        index: usize,
        r_prev: &BigInt,
        r_curr: &BigInt,
    ) -> Result<Sign, DayanError> {
        match self {
            SignStrategy::AllPlus => Ok(Sign::Plus),
            SignStrategy::AllMinus => Ok(Sign::Minus),
            SignStrategy::LeastAbsoluteRemainder => {
                let plus = r_prev.mod_floor(r_curr);
                let minus = (-r_prev).mod_floor(r_curr);
                Ok(if minus < plus { Sign::Minus } else { Sign::Plus })
            }
            SignStrategy::Explicit(signs) => signs
                .get(index - 1)
                .copied()
                .ok_or(DayanError::ExplicitSignsExhausted { step: index }),
        }
    }
}

impl fmt::Display for SignStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignStrategy::AllPlus => write!(f, "all-plus"),
            SignStrategy::AllMinus => write!(f, "all-minus"),
            SignStrategy::LeastAbsoluteRemainder => write!(f, "least-abs"),
            SignStrategy::Explicit(signs) => {
                write!(f, "explicit:")?;
                for (i, s) in signs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", if *s == Sign::Plus { "+1" } else { "-1" })?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for SignStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all-plus" | "plus" => Ok(SignStrategy::AllPlus),
            "all-minus" | "minus" => Ok(SignStrategy::AllMinus),
            "least-abs" | "least-absolute-remainder" => Ok(SignStrategy::LeastAbsoluteRemainder),
            _ => {
                let seq = s
                    .strip_prefix("explicit:")
                    .ok_or_else(|| format!("unknown strategy {s:?}"))?;
                let signs = seq
                    .split(',')
                    .map(|tok| match tok.trim() {
                        "+1" | "1" | "+" => Ok(Sign::Plus),
                        "-1" | "-" => Ok(Sign::Minus),
                        other => Err(format!("bad sign {other:?} (want +1 or -1)")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if signs.is_empty() {
                    return Err("explicit strategy needs at least one sign".into());
                }
                Ok(SignStrategy::Explicit(signs))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["all-plus", "all-minus", "least-abs", "explicit:-1,-1,-1,+1"] {
            let strategy: SignStrategy = text.parse().unwrap();
            assert_eq!(strategy.to_string(), text);
        }
        assert!("frobnicate".parse::<SignStrategy>().is_err());
        assert!("explicit:0,1".parse::<SignStrategy>().is_err());
    }

    #[test]
    fn least_abs_prefers_plus_on_tie() {
        // 10 = 1*6 + 4 = 2*6 - 2: minus wins.
        let s = SignStrategy::LeastAbsoluteRemainder
            .pick(1, &BigInt::from(10), &BigInt::from(6))
            .unwrap();
        assert_eq!(s, Sign::Minus);
        // 9 = 1*6 + 3 = 2*6 - 3: tie, plus wins.
        let s = SignStrategy::LeastAbsoluteRemainder
            .pick(1, &BigInt::from(9), &BigInt::from(6))
            .unwrap();
        assert_eq!(s, Sign::Plus);
    }
}
