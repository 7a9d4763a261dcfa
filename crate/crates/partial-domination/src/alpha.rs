//! Exact rational coverage fractions.
//!
//! Every threshold in this crate is decided in integer arithmetic; no
//! floating point is allowed anywhere near a comparison, because the
//! interesting boundaries are rationals with denominator dividing `n` and
//! the intervals they delimit are half-open.

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphaError {
    #[error("alpha must be positive")]
    NotPositive,
    #[error("alpha must be at most 1, got {p}/{q}")]
    AboveOne { p: u64, q: u64 },
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("malformed rational literal {literal:?}")]
    Malformed { literal: String },
    #[error("rational literal {literal:?} overflows 64-bit arithmetic")]
    Overflow { literal: String },
}

/// A coverage fraction in `(0, 1]`, stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alpha(Ratio<u64>);

impl Alpha {
    pub fn new(numer: u64, denom: u64) -> Result<Self, AlphaError> {
        if denom == 0 {
            return Err(AlphaError::ZeroDenominator);
        }
        if numer == 0 {
            return Err(AlphaError::NotPositive);
        }
        if numer > denom {
            return Err(AlphaError::AboveOne { p: numer, q: denom });
        }
        Ok(Self(Ratio::new(numer, denom)))
    }

    pub fn one() -> Self {
        Self(Ratio::from_integer(1))
    }

    /// Numerator in lowest terms.
    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    /// Denominator in lowest terms.
    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_one(&self) -> bool {
        self.numer() == self.denom()
    }

    /// The underlying reduced ratio, for exact arithmetic in callers.
    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    /// The least integer `m` with `m >= n * alpha`; always in `[1, n]` for `n >= 1`.
    ///
    /// Computed as `(n*p + q - 1) / q` in 128-bit arithmetic, so no overflow
    /// is possible for 64-bit inputs.
    pub fn coverage_target(&self, n: usize) -> usize {
        let p = self.numer() as u128;
        let q = self.denom() as u128;
        let m = (n as u128 * p + q - 1) / q;
        debug_assert!(n == 0 || (1..=n as u128).contains(&m));
        m as usize
    }

    /// `floor(1/alpha)`, exactly `q / p` on the reduced form.
    pub fn floor_inverse(&self) -> u64 {
        self.denom() / self.numer()
    }

    /// `1 - alpha`, or `None` when `alpha = 1`.
    pub fn complement(&self) -> Option<Self> {
        if self.is_one() {
            return None;
        }
        let r = Ratio::from_integer(1u64) - self.0;
        Some(Self(r))
    }

    /// `alpha / k` for `k >= 1`; stays in `(0, 1]`.
    pub fn divided_by(&self, k: u64) -> Self {
        Self(self.0 / Ratio::from_integer(k))
    }

    /// A probe strictly between this value and the next multiple of `1/n`:
    /// `alpha + 1/(n(n+1))`. Requires `alpha <= (n-1)/n` so the result stays
    /// below 1.
    pub fn nudged_up(&self, n: usize) -> Self {
        let n = n as u64;
        let step = Ratio::new(1, n * (n + 1));
        let r = self.0 + step;
        debug_assert!(r <= Ratio::from_integer(1));
        Self(r)
    }

    /// Exact midpoint of two fractions; the result is again in `(0, 1]`.
    pub fn midpoint(a: Alpha, b: Alpha) -> Self {
        Self((a.0 + b.0) / Ratio::from_integer(2))
    }
}

/// `ceil(n * alpha)` as a free function, mirroring the method.
pub fn coverage_target(n: usize, alpha: Alpha) -> usize {
    alpha.coverage_target(n)
}

/// All fractions `m/n` for `m = 1..=n`, ascending.
pub fn unit_steps(n: usize) -> impl Iterator<Item = Alpha> {
    (1..=n as u64).map(move |m| Alpha::new(m, n as u64).expect("m/n is in (0,1]"))
}

/// The midpoints `(2m-1)/(2n)` for `m = 1..=n`, each strictly inside the
/// step interval ending at `m/n`.
pub fn half_steps(n: usize) -> impl Iterator<Item = Alpha> {
    (1..=n as u64).map(move |m| Alpha::new(2 * m - 1, 2 * n as u64).expect("(2m-1)/2n is in (0,1]"))
}

/// Parses `"p/q"`, an integer, or a decimal literal into a reduced fraction.
/// Used both for alpha values (which must land in `(0,1]`) and for edge
/// probabilities (which may be 0).
pub fn parse_unit_ratio(s: &str) -> Result<(u64, u64), AlphaError> {
    let s = s.trim();
    let malformed = || AlphaError::Malformed { literal: s.to_string() };
    let overflow = || AlphaError::Overflow { literal: s.to_string() };

    if let Some((p_str, q_str)) = s.split_once('/') {
        let p: u64 = p_str.trim().parse().map_err(|_| malformed())?;
        let q: u64 = q_str.trim().parse().map_err(|_| malformed())?;
        if q == 0 {
            return Err(AlphaError::ZeroDenominator);
        }
        let g = num_integer::gcd(p, q);
        return Ok((p / g, q / g));
    }
    if let Some((int_str, frac_str)) = s.split_once('.') {
        let int_str = if int_str.is_empty() { "0" } else { int_str };
        if frac_str.is_empty() || !frac_str.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        if frac_str.len() > 18 {
            return Err(overflow());
        }
        let whole: u64 = int_str.parse().map_err(|_| malformed())?;
        let frac: u64 = frac_str.parse().map_err(|_| malformed())?;
        let q = 10u64.checked_pow(frac_str.len() as u32).ok_or_else(overflow)?;
        let p = whole
            .checked_mul(q)
            .and_then(|w| w.checked_add(frac))
            .ok_or_else(overflow)?;
        let g = num_integer::gcd(p, q).max(1);
        return Ok((p / g, q / g));
    }
    let p: u64 = s.parse().map_err(|_| malformed())?;
    Ok((p, 1))
}

impl FromStr for Alpha {
    type Err = AlphaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = parse_unit_ratio(s)?;
        Alpha::new(p, q)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverage_target_examples() {
        assert_eq!(Alpha::new(1, 2).unwrap().coverage_target(10), 5);
        assert_eq!(Alpha::new(2, 3).unwrap().coverage_target(7), 5);
        assert_eq!(Alpha::one().coverage_target(5), 5);
    }

    #[test]
    fn coverage_target_is_exact_on_unit_steps() {
        for n in 1..=40 {
            for (m, alpha) in (1..=n).zip(unit_steps(n)) {
                assert_eq!(alpha.coverage_target(n), m);
            }
            // Midpoints round up to the same threshold as the step above them.
            for (m, alpha) in (1..=n).zip(half_steps(n)) {
                assert_eq!(alpha.coverage_target(n), m);
            }
        }
    }

    #[test]
    fn reduction_and_bounds() {
        let a = Alpha::new(4, 8).unwrap();
        assert_eq!((a.numer(), a.denom()), (1, 2));
        assert_eq!(Alpha::new(0, 3), Err(AlphaError::NotPositive));
        assert_eq!(Alpha::new(5, 3), Err(AlphaError::AboveOne { p: 5, q: 3 }));
        assert_eq!(Alpha::new(1, 0), Err(AlphaError::ZeroDenominator));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3/6".parse::<Alpha>().unwrap(), Alpha::new(1, 2).unwrap());
        assert_eq!("1".parse::<Alpha>().unwrap(), Alpha::one());
        assert_eq!("0.25".parse::<Alpha>().unwrap(), Alpha::new(1, 4).unwrap());
        assert_eq!(".5".parse::<Alpha>().unwrap(), Alpha::new(1, 2).unwrap());
        assert!("2".parse::<Alpha>().is_err());
        assert!("0".parse::<Alpha>().is_err());
        assert!("1/0".parse::<Alpha>().is_err());
        assert!("x/y".parse::<Alpha>().is_err());
        assert!("".parse::<Alpha>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for (p, q) in [(1, 2), (3, 5), (1, 1), (7, 12)] {
            let a = Alpha::new(p, q).unwrap();
            assert_eq!(a.to_string().parse::<Alpha>().unwrap(), a);
        }
    }

    #[test]
    fn nudge_stays_below_next_step() {
        for n in 2..=20u64 {
            for m in 1..n {
                let a = Alpha::new(m, n).unwrap();
                let probe = a.nudged_up(n as usize);
                assert!(probe.ratio() > a.ratio());
                assert!(probe.ratio() < Ratio::new(m + 1, n));
                assert_eq!(probe.coverage_target(n as usize), (m + 1) as usize);
            }
        }
    }

    #[test]
    fn complement_and_floor_inverse() {
        let a = Alpha::new(1, 3).unwrap();
        assert_eq!(a.complement().unwrap(), Alpha::new(2, 3).unwrap());
        assert_eq!(Alpha::one().complement(), None);
        assert_eq!(a.floor_inverse(), 3);
        assert_eq!(Alpha::new(2, 3).unwrap().floor_inverse(), 1);
        assert_eq!(Alpha::one().floor_inverse(), 1);
    }
}
