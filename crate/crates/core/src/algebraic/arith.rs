//! Scalar arithmetic backends for the sweep kernels.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::state::StateValues;

pub(crate) trait Arith {
    type Value: Clone;

    fn zero(&self) -> Self::Value;
    fn is_zero(&self, v: &Self::Value) -> bool;
    /// `d` itself, the start value of `x^(0)`.
    fn diagonal(&self) -> Self::Value;
    fn add(&self, acc: &mut Self::Value, x: &Self::Value);
    /// Closes a row: `(acc - b_i) * (-d)` when signed, `(acc + b_i) * d`
    /// otherwise, with `b_i` one at the start vertex and zero elsewhere.
    fn finish(&self, acc: Self::Value, at_start: bool, signed: bool) -> Self::Value;
    /// False for values the mode cannot carry forward (non-finite floats,
    /// negative entries in an unsigned run).
    fn is_valid(&self, v: &Self::Value, signed: bool) -> bool;
    /// Divides by `d^period`; used for floating-point regularization.
    fn rescale(&self, v: &mut Self::Value, period: u32);

    fn wrap(values: Vec<Self::Value>) -> StateValues;
    fn unwrap(values: &StateValues) -> Option<&[Self::Value]>;
}

pub(crate) struct Exact {
    d: BigInt,
}

impl Exact {
    pub fn new(d: u64) -> Self {
        Exact { d: BigInt::from(d) }
    }
}

impl Arith for Exact {
    type Value = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn is_zero(&self, v: &BigInt) -> bool {
        v.is_zero()
    }

    fn diagonal(&self) -> BigInt {
        self.d.clone()
    }

    fn add(&self, acc: &mut BigInt, x: &BigInt) {
        if !x.is_zero() {
            *acc += x;
        }
    }

    fn finish(&self, mut acc: BigInt, at_start: bool, signed: bool) -> BigInt {
        if signed {
            if at_start {
                acc -= 1;
            }
            -(acc * &self.d)
        } else {
            if at_start {
                acc += 1;
            }
            acc * &self.d
        }
    }

    fn is_valid(&self, v: &BigInt, signed: bool) -> bool {
        signed || !v.is_negative()
    }

    fn rescale(&self, _v: &mut BigInt, _period: u32) {}

    fn wrap(values: Vec<BigInt>) -> StateValues {
        StateValues::Exact(values)
    }

    fn unwrap(values: &StateValues) -> Option<&[BigInt]> {
        match values {
            StateValues::Exact(v) => Some(v),
            _ => None,
        }
    }
}

/// Nonnegative integers clamped at `cap`. Once nonzero, a saturated value
/// stays nonzero, which is all the unsigned traversal needs.
pub(crate) struct Saturating {
    d: u64,
    cap: u64,
}

impl Saturating {
    pub fn new(d: u64, cap: u64) -> Self {
        Saturating { d, cap: cap.max(1) }
    }
}

impl Arith for Saturating {
    type Value = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn is_zero(&self, v: &u64) -> bool {
        *v == 0
    }

    fn diagonal(&self) -> u64 {
        self.d.min(self.cap)
    }

    fn add(&self, acc: &mut u64, x: &u64) {
        *acc = acc.saturating_add(*x).min(self.cap);
    }

    fn finish(&self, acc: u64, at_start: bool, signed: bool) -> u64 {
        debug_assert!(!signed, "saturating arithmetic is unsigned only");
        let acc = if at_start { acc.saturating_add(1) } else { acc };
        acc.saturating_mul(self.d).min(self.cap)
    }

    fn is_valid(&self, _v: &u64, _signed: bool) -> bool {
        true
    }

    fn rescale(&self, _v: &mut u64, _period: u32) {}

    fn wrap(values: Vec<u64>) -> StateValues {
        StateValues::Saturate(values)
    }

    fn unwrap(values: &StateValues) -> Option<&[u64]> {
        match values {
            StateValues::Saturate(v) => Some(v),
            _ => None,
        }
    }
}

pub(crate) struct Float {
    d: f64,
}

impl Float {
    pub fn new(d: u64) -> Self {
        Float { d: d as f64 }
    }
}

impl Arith for Float {
    type Value = f64;

    fn zero(&self) -> f64 {
        0.0
    }

    fn is_zero(&self, v: &f64) -> bool {
        *v == 0.0
    }

    fn diagonal(&self) -> f64 {
        self.d
    }

    fn add(&self, acc: &mut f64, x: &f64) {
        *acc += *x;
    }

    fn finish(&self, acc: f64, at_start: bool, signed: bool) -> f64 {
        let b = if at_start { 1.0 } else { 0.0 };
        if signed {
            (acc - b) * -self.d
        } else {
            (acc + b) * self.d
        }
    }

    fn is_valid(&self, v: &f64, signed: bool) -> bool {
        v.is_finite() && (signed || *v >= 0.0)
    }

    fn rescale(&self, v: &mut f64, period: u32) {
        *v /= self.d.powi(period as i32);
    }

    fn wrap(values: Vec<f64>) -> StateValues {
        StateValues::Float(values)
    }

    fn unwrap(values: &StateValues) -> Option<&[f64]> {
        match values {
            StateValues::Float(v) => Some(v),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_finish_matches_row_formulas() {
        let a = Exact::new(2);
        // (-1 + 0) * (-2)
        assert_eq!(a.finish(BigInt::zero(), true, true), BigInt::from(2));
        // (2) * (-2)
        assert_eq!(a.finish(BigInt::from(2), false, true), BigInt::from(-4));
        // (1 + 3) * 2
        assert_eq!(a.finish(BigInt::from(3), true, false), BigInt::from(8));
    }

    #[test]
    fn saturating_clamps_without_wrapping() {
        let a = Saturating::new(2, 100);
        let mut acc = 90u64;
        a.add(&mut acc, &50);
        assert_eq!(acc, 100);
        assert_eq!(a.finish(60, false, false), 100);
        assert_eq!(a.finish(u64::MAX, true, false), 100);
        assert_eq!(a.finish(0, false, false), 0);
    }

    #[test]
    fn float_validity() {
        let a = Float::new(2);
        assert!(a.is_valid(&-3.0, true));
        assert!(!a.is_valid(&-3.0, false));
        assert!(!a.is_valid(&f64::INFINITY, true));
        assert!(!a.is_valid(&f64::NAN, true));
        let mut v = 106.0;
        a.rescale(&mut v, 4);
        assert_eq!(v, 6.625);
    }
}
