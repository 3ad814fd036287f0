//! Cardinality-level objects of `Set × Set^op`.
//!
//! An object `(A, B)` reads as a rectangle of length `A` and width `B^(1/A)`.
//! Sums add lengths and take the geometric mean of widths; the tensor
//! multiplies both. All logarithms are base 2.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RectObj {
    pub a: BigUint,
    pub b: BigUint,
}

impl RectObj {
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>) -> Self {
        RectObj {
            a: a.into(),
            b: b.into(),
        }
    }

    /// Unit for [`sum`](Self::sum).
    pub fn zero() -> Self {
        RectObj::new(0u32, 1u32)
    }

    /// Unit for [`tensor`](Self::tensor).
    pub fn one() -> Self {
        RectObj::new(1u32, 1u32)
    }

    /// `(A₁ + A₂, B₁B₂)`.
    pub fn sum(&self, other: &RectObj) -> RectObj {
        RectObj {
            a: &self.a + &other.a,
            b: &self.b * &other.b,
        }
    }

    /// `(A₁A₂, B₁^{A₂} B₂^{A₁})`.
    pub fn tensor(&self, other: &RectObj) -> RectObj {
        RectObj {
            a: &self.a * &other.a,
            b: big_pow(&self.b, &other.a) * big_pow(&other.b, &self.a),
        }
    }

    /// Internal hom `[(A₁, B₁), (A₂, B₂)] = (A₂^{A₁} B₁^{B₂}, A₁B₂)`.
    pub fn closure(&self, other: &RectObj) -> RectObj {
        RectObj {
            a: big_pow(&other.a, &self.a) * big_pow(&self.b, &other.b),
            b: &self.a * &other.b,
        }
    }

    /// `#Set(A₁, A₂) · #Set(B₂, B₁) = A₂^{A₁} · B₁^{B₂}`.
    pub fn hom_count(&self, to: &RectObj) -> BigUint {
        big_pow(&to.a, &self.a) * big_pow(&self.b, &to.b)
    }

    /// `L(A, B) = log A − (log B)/A`, with `L(0, 1) = 0`.
    ///
    /// Undefined when `B = 0` or when `A = 0` and `B ≠ 1`.
    pub fn log_aspect_ratio(&self) -> Result<f64> {
        if self.a.is_zero() && self.b.is_one() {
            return Ok(0.0);
        }
        if self.a.is_zero() || self.b.is_zero() {
            return Err(Error::UndefinedAspect {
                a: self.a.clone(),
                b: self.b.clone(),
            });
        }
        Ok(log2_big(&self.a) - log2_big(&self.b) / big_to_f64(&self.a))
    }

    /// `B^(1/A)`, evaluated as `2^(log B / A)`.
    pub fn width(&self) -> Result<f64> {
        if self.a.is_zero() {
            return Err(Error::ZeroLength);
        }
        if self.b.is_zero() {
            return Ok(0.0);
        }
        Ok((log2_big(&self.b) / big_to_f64(&self.a)).exp2())
    }

    pub fn length(&self) -> f64 {
        big_to_f64(&self.a)
    }
}

impl fmt::Display for RectObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub fn rect_sum(x: &RectObj, y: &RectObj) -> RectObj {
    x.sum(y)
}

pub fn rect_tensor(x: &RectObj, y: &RectObj) -> RectObj {
    x.tensor(y)
}

pub fn rect_closure(y: &RectObj, z: &RectObj) -> RectObj {
    y.closure(z)
}

pub fn rect_hom_count(x: &RectObj, z: &RectObj) -> BigUint {
    x.hom_count(z)
}

/// `base^exp` with `0^0 = 1`.
///
/// Panics if the result cannot be materialised, i.e. `base ≥ 2` and `exp`
/// does not fit in a `u32`.
pub fn big_pow(base: &BigUint, exp: &BigUint) -> BigUint {
    if exp.is_zero() || base.is_one() {
        return BigUint::one();
    }
    if base.is_zero() {
        return BigUint::zero();
    }
    let exp = exp.to_u32().expect("exponent too large to materialise");
    Pow::pow(base, exp)
}

/// `log₂ n` for arbitrarily large `n`.
///
/// Values past the `f64` range are reduced to their top 64 bits first, so the
/// result stays accurate to double precision. Returns `-inf` for zero.
pub fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return big_to_f64(n).log2();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("top 64 bits fit in u64");
    (top as f64).log2() + shift as f64
}

fn big_to_f64(n: &BigUint) -> f64 {
    n.to_f64().unwrap_or(f64::INFINITY)
}
