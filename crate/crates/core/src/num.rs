//! Scalar abstractions.
//!
//! Exact counting is generic over [`Count`], an unsigned integer type with
//! overflow detection; `BigUint` never overflows, primitive widths report
//! [`Error::Overflow`](crate::Error::Overflow) instead of wrapping.
//! Log-space evaluation is generic over [`num_traits::Float`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{Float, FloatConst, One, ToPrimitive, Zero};

/// An exact nonnegative integer usable as a counting semiring.
pub trait Count: Clone + Zero + One + Ord + fmt::Debug + fmt::Display + Send + Sync {
    /// `self += rhs`, or `None` on overflow (leaving `self` unspecified).
    fn try_add_assign(&mut self, rhs: &Self) -> Option<()>;

    fn try_mul(&self, rhs: &Self) -> Option<Self>;

    fn try_from_u64(v: u64) -> Option<Self>;

    fn try_from_biguint(v: &BigUint) -> Option<Self>;

    fn to_biguint(&self) -> BigUint;
}

macro_rules! impl_count_prim {
    ($($t:ty),*) => {$(
        impl Count for $t {
            #[inline]
            fn try_add_assign(&mut self, rhs: &Self) -> Option<()> {
                *self = self.checked_add(*rhs)?;
                Some(())
            }

            #[inline]
            fn try_mul(&self, rhs: &Self) -> Option<Self> {
                self.checked_mul(*rhs)
            }

            fn try_from_u64(v: u64) -> Option<Self> {
                <$t>::try_from(v).ok()
            }

            fn try_from_biguint(v: &BigUint) -> Option<Self> {
                <$t>::try_from(v).ok()
            }

            fn to_biguint(&self) -> BigUint {
                BigUint::from(*self)
            }
        }
    )*};
}

impl_count_prim!(u32, u64, u128);

impl Count for BigUint {
    #[inline]
    fn try_add_assign(&mut self, rhs: &Self) -> Option<()> {
        *self += rhs;
        Some(())
    }

    #[inline]
    fn try_mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }

    fn try_from_u64(v: u64) -> Option<Self> {
        Some(BigUint::from(v))
    }

    fn try_from_biguint(v: &BigUint) -> Option<Self> {
        Some(v.clone())
    }

    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

/// Natural log of a positive big integer from its top 64 bits and bit length.
///
/// Relative accuracy is bounded by the `u64 -> f64` rounding (about 1e-16).
/// Returns negative infinity for zero.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return x.to_u64().expect("fits").to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits") as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Casts an `f64` literal into `F`.
#[inline]
pub(crate) fn lit<F: Float>(v: f64) -> F {
    F::from(v).expect("float literal representable")
}

/// `ln Γ(x)` for `x > 0`: upward recurrence to `x ≥ 15`, then the Stirling series.
pub fn ln_gamma<F: Float + FloatConst>(x: F) -> F {
    assert!(x > F::zero(), "ln_gamma requires x > 0");
    let threshold = lit::<F>(15.0);
    let mut shift = F::zero();
    let mut y = x;
    while y < threshold {
        shift = shift + y.ln();
        y = y + F::one();
    }
    let inv = y.recip();
    let inv2 = inv * inv;
    // 1/12, -1/360, 1/1260, -1/1680, 1/1188
    let series = inv
        * (lit::<F>(1.0 / 12.0)
            + inv2
                * (lit::<F>(-1.0 / 360.0)
                    + inv2
                        * (lit::<F>(1.0 / 1260.0)
                            + inv2 * (lit::<F>(-1.0 / 1680.0) + inv2 * lit::<F>(1.0 / 1188.0)))));
    let half_ln_two_pi = (F::PI() + F::PI()).ln() / lit(2.0);
    (y - lit(0.5)) * y.ln() - y + half_ln_two_pi + series - shift
}

/// `ln(n!)`.
pub fn ln_factorial<F: Float + FloatConst>(n: u64) -> F {
    if n < 2 {
        return F::zero();
    }
    ln_gamma(F::from(n).expect("n representable") + F::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big_factorial(n: u32) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, i| acc * i)
    }

    #[test]
    fn ln_big_small_and_large() {
        assert_eq!(ln_big(&BigUint::one()), 0.0);
        assert!(ln_big(&BigUint::zero()).is_infinite());
        let x = BigUint::from(1u8) << 1000u32;
        let expected = 1000.0 * std::f64::consts::LN_2;
        assert!((ln_big(&x) - expected).abs() / expected < 1e-14);
        let y: BigUint = BigUint::from(10u8).pow(300);
        assert!((ln_big(&y) - 300.0 * 10f64.ln()).abs() < 1e-11);
    }

    #[test]
    fn ln_factorial_matches_exact() {
        for n in [0u32, 1, 2, 5, 14, 15, 20, 50, 170, 400, 899] {
            let exact = ln_big(&big_factorial(n));
            let approx: f64 = ln_factorial(n as u64);
            let scale = exact.abs().max(1.0);
            assert!((exact - approx).abs() / scale < 1e-12, "n = {n}: {exact} vs {approx}");
        }
    }

    #[test]
    fn ln_gamma_half() {
        let v: f64 = ln_gamma(0.5);
        assert!((v - std::f64::consts::PI.sqrt().ln()).abs() < 1e-13);
        let v32: f32 = ln_gamma(0.5f32);
        assert!((v32 - std::f32::consts::PI.sqrt().ln()).abs() < 1e-5);
    }

    #[test]
    fn primitive_overflow_detected() {
        let mut a = u32::MAX;
        assert!(a.try_add_assign(&1).is_none());
        let b = u64::MAX;
        assert!(b.try_mul(&2).is_none());
        assert_eq!(u32::try_from_u64(1 << 40), None);
        let mut c = BigUint::from(u64::MAX);
        c.try_add_assign(&BigUint::one()).unwrap();
        assert_eq!(c, BigUint::one() << 64u32);
    }
}
