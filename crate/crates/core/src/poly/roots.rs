//! Closed-form roots of cycle independence polynomials,
//! `r_i = -1 / (2 (1 + cos((2i - 1)π / n)))` for `1 ≤ i ≤ ⌊n/2⌋`.
//!
//! The largest roots sit where `1 + cos θ` nearly cancels, and the
//! polynomial's derivative there is large enough that even a correctly
//! rounded `f64` root leaves residuals of order one. Residuals are therefore
//! computed in 256-bit fixed point, root and evaluation alike.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{IntPoly, PolyError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEstimate {
    pub n: usize,
    pub index: usize,
    /// Always negative.
    pub value: f64,
}

/// Root `r_index` of `i(C_n, x)` in double precision.
pub fn cycle_root(n: usize, index: usize) -> Result<RootEstimate, PolyError> {
    check(n, index)?;
    // 1 + cos θ = 2 cos²(θ/2) avoids the cancellation near θ = π
    let half = (2 * index - 1) as f64 * std::f64::consts::PI / (2 * n) as f64;
    let c = half.cos();
    Ok(RootEstimate { n, index, value: -1.0 / (4.0 * c * c) })
}

fn check(n: usize, index: usize) -> Result<(), PolyError> {
    if n < 3 {
        return Err(PolyError::CycleOrder(n));
    }
    if index == 0 || index > n / 2 {
        return Err(PolyError::RootIndex { n, index, max: n / 2 });
    }
    Ok(())
}

/// `|p(r_index)|` for the root of `i(C_n, x)`, root and evaluation both in
/// high precision.
pub fn cycle_root_residual(p: &IntPoly, n: usize, index: usize) -> Result<f64, PolyError> {
    check(n, index)?;
    let theta = Fixed::pi().mul_int((2 * index - 1) as i64).div_int(n as i64);
    let one = Fixed::one();
    let denom = one.add(&theta.cos()).mul_int(2);
    let r = one.neg().div(&denom);
    let mut acc = Fixed::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&r).add(&Fixed::from_int(c));
    }
    Ok(acc.to_f64().abs())
}

/// Residual bound `1e-8 (1 + max |coefficient|)` for roots of `p`.
pub fn root_tolerance(p: &IntPoly) -> f64 {
    1e-8 * (1.0 + p.max_abs_coeff().to_f64().unwrap_or(f64::INFINITY))
}

const BITS: usize = 256;

/// `raw / 2^BITS`.
#[derive(Clone, Debug)]
struct Fixed {
    raw: BigInt,
}

impl Fixed {
    fn zero() -> Self {
        Fixed { raw: BigInt::zero() }
    }

    fn one() -> Self {
        Fixed { raw: BigInt::from(1) << BITS }
    }

    fn from_int(c: &BigInt) -> Self {
        Fixed { raw: c << BITS }
    }

    fn add(&self, o: &Fixed) -> Fixed {
        Fixed { raw: &self.raw + &o.raw }
    }

    fn neg(&self) -> Fixed {
        Fixed { raw: -&self.raw }
    }

    fn mul(&self, o: &Fixed) -> Fixed {
        Fixed { raw: (&self.raw * &o.raw) >> BITS }
    }

    fn div(&self, o: &Fixed) -> Fixed {
        Fixed { raw: (&self.raw << BITS) / &o.raw }
    }

    fn mul_int(&self, k: i64) -> Fixed {
        Fixed { raw: &self.raw * k }
    }

    fn div_int(&self, k: i64) -> Fixed {
        Fixed { raw: &self.raw / k }
    }

    /// Machin: π = 16 atan(1/5) - 4 atan(1/239).
    fn pi() -> Fixed {
        fn atan_inv(k: i64) -> BigInt {
            let k2 = k * k;
            let mut power = (BigInt::from(1) << BITS) / k;
            let mut sum = BigInt::zero();
            let mut j = 0i64;
            while !power.is_zero() {
                let term = &power / (2 * j + 1);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= k2;
                j += 1;
            }
            sum
        }
        Fixed { raw: atan_inv(5) * 16 - atan_inv(239) * 4 }
    }

    /// Taylor series; the argument stays within `[0, π]` here.
    fn cos(&self) -> Fixed {
        let x2 = self.mul(self);
        let mut term = Fixed::one();
        let mut sum = Fixed::one();
        let mut j = 1i64;
        while !term.raw.is_zero() {
            term = term.mul(&x2).div_int((2 * j - 1) * (2 * j)).neg();
            sum = sum.add(&term);
            j += 1;
        }
        sum
    }

    fn to_f64(&self) -> f64 {
        self.raw.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(BITS as i32))
    }
}
