//! Extended reals `R ∪ {+∞}` with the conventions `a + (+∞) = +∞` and
//! `λ·(+∞) = +∞` for every `λ ≥ 0`, including `λ = 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{invalid, Result};

/// A real number or `+∞`. NaN and `-∞` are unrepresentable.
///
/// The value is stored in a single `f64` so that dense grids of tens of
/// millions of nodes stay affordable; `+∞` is never fed into IEEE arithmetic,
/// every operation below branches on it first.
#[derive(Clone, Copy, PartialEq, Default)]
#[repr(transparent)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);
    pub const ZERO: ExtReal = ExtReal(0.0);

    /// Accepts any finite value or `+∞`.
    pub fn new(v: f64) -> Result<Self> {
        if v.is_nan() {
            return invalid("NaN is not an extended real");
        }
        if v == f64::NEG_INFINITY {
            return invalid("-inf is not an extended real");
        }
        Ok(ExtReal(v))
    }

    /// Finite value. Panics on NaN or infinities.
    #[inline]
    pub fn finite(v: f64) -> Self {
        assert!(v.is_finite(), "ExtReal::finite called with {v}");
        ExtReal(v)
    }

    /// Maps NaN-free `f64` results from kernels: `+∞` stays `+∞`, anything
    /// above `cap` becomes `+∞`.
    #[inline]
    pub(crate) fn from_capped(v: f64, cap: f64) -> Self {
        debug_assert!(!v.is_nan());
        if v > cap {
            ExtReal::INFINITY
        } else {
            ExtReal(v)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    #[inline]
    pub fn is_infinite(self) -> bool {
        !self.0.is_finite()
    }

    #[inline]
    pub fn value(self) -> Option<f64> {
        if self.is_finite() {
            Some(self.0)
        } else {
            None
        }
    }

    /// Raw representation, `f64::INFINITY` for `+∞`.
    #[inline]
    pub fn raw(self) -> f64 {
        self.0
    }

    /// `self + r` for a real `r`; `+∞` absorbs.
    #[inline]
    pub fn add_real(self, r: f64) -> Self {
        if self.is_infinite() {
            self
        } else {
            ExtReal(self.0 + r)
        }
    }

    #[inline]
    pub fn sub_real(self, r: f64) -> Self {
        if self.is_infinite() {
            self
        } else {
            ExtReal(self.0 - r)
        }
    }

    /// `λ·self` for `λ ≥ 0`, with `0·(+∞) = +∞`.
    #[inline]
    pub fn scale(self, lambda: f64) -> Self {
        debug_assert!(lambda >= 0.0);
        if self.is_infinite() {
            self
        } else {
            ExtReal(lambda * self.0)
        }
    }

    #[inline]
    pub fn min(self, other: Self) -> Self {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn max(self, other: Self) -> Self {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }
}

impl Add for ExtReal {
    type Output = ExtReal;

    #[inline]
    fn add(self, rhs: ExtReal) -> ExtReal {
        if self.is_infinite() || rhs.is_infinite() {
            ExtReal::INFINITY
        } else {
            ExtReal(self.0 + rhs.0)
        }
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nan_and_negative_infinity() {
        assert!(ExtReal::new(f64::NAN).is_err());
        assert!(ExtReal::new(f64::NEG_INFINITY).is_err());
        assert_eq!(ExtReal::new(f64::INFINITY).unwrap(), ExtReal::INFINITY);
    }

    #[test]
    fn infinity_conventions() {
        let a = ExtReal::finite(-3.5);
        assert_eq!(a + ExtReal::INFINITY, ExtReal::INFINITY);
        assert_eq!(ExtReal::INFINITY + a, ExtReal::INFINITY);
        assert_eq!(ExtReal::INFINITY.scale(0.0), ExtReal::INFINITY);
        assert_eq!(ExtReal::INFINITY.scale(2.0), ExtReal::INFINITY);
        assert_eq!(a.scale(0.0), ExtReal::finite(0.0));
        assert_eq!(ExtReal::INFINITY.sub_real(1e300), ExtReal::INFINITY);
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![ExtReal::INFINITY, ExtReal::finite(1.0), ExtReal::finite(-2.0)];
        v.sort();
        assert_eq!(v, vec![ExtReal::finite(-2.0), ExtReal::finite(1.0), ExtReal::INFINITY]);
        assert_eq!(ExtReal::finite(1.0).min(ExtReal::INFINITY), ExtReal::finite(1.0));
    }
}
