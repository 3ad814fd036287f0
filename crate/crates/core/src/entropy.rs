//! Entropy of a polynomial, computed two ways.
//!
//! The categorical route sends `p` to `h(p) = (ṗ(1), Γ(ṗy))` and reads off the
//! log aspect ratio. The direct route builds the empirical distribution
//! `P(I) = #p[I] / #ṗ(1)` and takes its Shannon entropy. The two agree for
//! every polynomial with at least one draw.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::FinPoly;
use crate::rect::RectObj;

/// Absolute tolerance for comparing the two entropy routes.
pub const TOLERANCE: f64 = 1e-9;

/// A finite probability distribution with exact rational weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dist {
    probabilities: Vec<BigRational>,
}

impl Dist {
    pub fn new(probabilities: Vec<BigRational>) -> Result<Self> {
        if let Some(p) = probabilities.iter().find(|p| p.is_negative()) {
            return Err(Error::InvalidDistribution(format!("negative probability {p}")));
        }
        let total: BigRational = probabilities.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Dist { probabilities })
    }

    /// Weights proportional to `counts`. Fails if every count is zero.
    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        let total: usize = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidDistribution("all counts are zero".into()));
        }
        let total = BigInt::from(total);
        let probabilities = counts
            .iter()
            .map(|&c| BigRational::new(BigInt::from(c), total.clone()))
            .collect();
        Ok(Dist { probabilities })
    }

    pub fn probabilities(&self) -> &[BigRational] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }
}

/// `h(p) = (#ṗ(1), #Γ(ṗy))`.
pub fn categorical_entropy(p: &FinPoly) -> RectObj {
    RectObj {
        a: BigUint::from(p.terms_count()),
        b: p.total_polynomial().gamma_card(),
    }
}

/// `P(I) = #p[I] / #ṗ(1)`, indexed by canonical position.
pub fn empirical_distribution(p: &FinPoly) -> Result<Dist> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.terms_count() == 0 {
        return Err(Error::NoDraws(p.to_string()));
    }
    Dist::from_counts(p.exponents())
}

/// `H(P) = −∑ P(x) log₂ P(x)` with `0 log 0 = 0`.
pub fn shannon_entropy(d: &Dist) -> f64 {
    d.probabilities
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let x = p.to_f64().expect("probabilities are finite");
            -x * x.log2()
        })
        .sum()
}

/// `L(h(p))`, the categorical entropy.
pub fn entropy_of_polynomial(p: &FinPoly) -> f64 {
    categorical_entropy(p)
        .log_aspect_ratio()
        .expect("h(p) always lies in the domain of the log aspect ratio")
}

/// Independent product: `(i, j) ↦ d1(i)·d2(j)` in lexicographic order.
pub fn dist_tensor(d1: &Dist, d2: &Dist) -> Dist {
    let probabilities = d1
        .probabilities
        .iter()
        .flat_map(|a| d2.probabilities.iter().map(move |b| a * b))
        .collect();
    Dist { probabilities }
}

/// `w1·d1` followed by `w2·d2`.
pub fn dist_convex(d1: &Dist, w1: &BigRational, d2: &Dist, w2: &BigRational) -> Result<Dist> {
    if w1.is_negative() || w2.is_negative() || !(w1 + w2).is_one() {
        return Err(Error::InvalidWeights {
            w1: w1.to_string(),
            w2: w2.to_string(),
        });
    }
    let probabilities = d1
        .probabilities
        .iter()
        .map(|p| p * w1)
        .chain(d2.probabilities.iter().map(|p| p * w2))
        .collect();
    Ok(Dist { probabilities })
}

/// Both sides of `H(P) = L(h(p))` for one polynomial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TheoremCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub matches: bool,
}

/// Requires `p ≠ 0` and at least one draw.
pub fn verify_main_theorem(p: &FinPoly) -> Result<TheoremCheck> {
    let lhs = shannon_entropy(&empirical_distribution(p)?);
    let rhs = entropy_of_polynomial(p);
    Ok(TheoremCheck {
        lhs,
        rhs,
        matches: (lhs - rhs).abs() <= TOLERANCE,
    })
}
