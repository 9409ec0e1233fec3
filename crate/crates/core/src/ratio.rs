use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-negative rational `num/den`, used for thresholds of the form
/// "meets at least `num/den` of the m edges". Comparisons are always done
/// by cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub const fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "ratio denominator must be positive");
        Self { num, den }
    }

    /// `den * value >= num * m`.
    pub fn is_met_by(self, value: u64, m: u64) -> bool {
        u128::from(self.den) * u128::from(value) >= u128::from(self.num) * u128::from(m)
    }

    /// Smallest integer `x` with `den * x >= num * m`.
    pub fn ceil_of(self, m: u64) -> u64 {
        (self.num * m).div_ceil(self.den)
    }

    pub fn cmp_ratio(self, other: Ratio) -> std::cmp::Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("expected a fraction p/q, got {s:?}"));
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let num = p.trim().parse().map_err(|_| bad())?;
        let den: u64 = q.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Self { num, den })
    }
}

/// A set is good when it meets at least this fraction of the edges.
pub const GOOD: Ratio = Ratio::new(3, 5);

/// Default slack for the engine step.
pub const DEFAULT_EPSILON: Ratio = Ratio::new(1, 15);

/// Threshold `2/3 - epsilon` as an exact fraction, checking `1/15 <= epsilon < 2/3`.
pub fn epsilon_threshold(epsilon: Ratio) -> Result<Ratio> {
    let Ratio { num: p, den: q } = epsilon;
    let too_small = 15 * p < q;
    let too_large = 3 * p >= 2 * q;
    if too_small || too_large {
        return Err(Error::EpsilonOutOfRange { num: p, den: q });
    }
    Ok(Ratio::new(2 * q - 3 * p, 3 * q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_threshold_is_ceiling_of_three_fifths() {
        for m in 0..200u64 {
            let ceil = GOOD.ceil_of(m);
            assert!(GOOD.is_met_by(ceil, m));
            if ceil > 0 {
                assert!(!GOOD.is_met_by(ceil - 1, m));
            }
        }
        assert_eq!(GOOD.ceil_of(5), 3);
        assert_eq!(GOOD.ceil_of(6), 4);
    }

    #[test]
    fn one_fifteenth_gives_three_fifths() {
        let t = epsilon_threshold(DEFAULT_EPSILON).unwrap();
        assert_eq!(t.cmp_ratio(GOOD), std::cmp::Ordering::Equal);
        assert!(epsilon_threshold(Ratio::new(1, 16)).is_err());
        assert!(epsilon_threshold(Ratio::new(2, 3)).is_err());
        assert_eq!(epsilon_threshold(Ratio::new(1, 9)).unwrap(), Ratio::new(15, 27));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!("1/15".parse::<Ratio>().unwrap(), Ratio::new(1, 15));
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("0.2".parse::<Ratio>().is_err());
    }
}
