//! Finite polynomial functors in one variable.
//!
//! A polynomial `∑_{I ∈ p(1)} y^{p[I]}` over finite sets is determined up to
//! isomorphism by the multiset of its exponents `#p[I]`. [`FinPoly`] stores
//! that multiset sorted in descending order, so two values are isomorphic as
//! functors exactly when they compare equal. Position `I` is the index into
//! the sorted sequence and the terms at `I` are `0..p[I]`.
//!
//! The constructions that build new positions out of old ones (sums,
//! products, derivatives, composites) are also available in a `*_labeled`
//! form that reports, for every position of the result, which data it was
//! built from. Morphism-level code relies on those labels.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{Pow, Zero};

use crate::enumerate::{MixedRadix, DEFAULT_ENUMERATION_LIMIT};
use crate::error::{Error, Result};

/// A global section: one chosen term index per position.
pub type Section = Vec<usize>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinPoly {
    exponents: Vec<usize>,
}

/// Which summand of `p + q` a position came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    Left(usize),
    Right(usize),
}

/// A canonical polynomial together with a label for each of its positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled<L> {
    pub poly: FinPoly,
    pub labels: Vec<L>,
}

impl<L> Labeled<L> {
    /// Stable-sorts `(label, exponent)` pairs into canonical order.
    fn from_pairs(mut pairs: Vec<(L, usize)>) -> Self {
        pairs.sort_by_key(|&(_, e)| std::cmp::Reverse(e));
        let (labels, exponents) = pairs.into_iter().unzip();
        Labeled {
            poly: FinPoly { exponents },
            labels,
        }
    }
}

impl<L: PartialEq> Labeled<L> {
    /// Canonical position carrying `label`, if any.
    pub fn position_of(&self, label: &L) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl FinPoly {
    pub fn canonicalize(raw: impl IntoIterator<Item = usize>) -> Self {
        let mut exponents: Vec<usize> = raw.into_iter().collect();
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        FinPoly { exponents }
    }

    pub fn zero() -> Self {
        FinPoly::default()
    }

    /// The constant `1 = y^0`.
    pub fn one() -> Self {
        FinPoly { exponents: vec![0] }
    }

    pub fn y() -> Self {
        FinPoly { exponents: vec![1] }
    }

    /// `coefficient · y^exponent`.
    pub fn monomial(coefficient: usize, exponent: usize) -> Self {
        FinPoly {
            exponents: vec![exponent; coefficient],
        }
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// `#p[I]` for position `I`. Panics if `I` is out of range.
    pub fn exponent(&self, position: usize) -> usize {
        self.exponents[position]
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `#p(1)`, the number of positions (outcomes).
    pub fn positions_count(&self) -> usize {
        self.exponents.len()
    }

    /// `#ṗ(1) = ∑_I #p[I]`, the number of terms (draws).
    pub fn terms_count(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// Start index of each position's block inside the total polynomial.
    pub(crate) fn term_offsets(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .scan(0, |acc, &e| {
                let start = *acc;
                *acc += e;
                Some(start)
            })
            .collect()
    }

    /// `#Γ(p) = ∏_I #p[I]`; the empty product is 1.
    pub fn gamma_card(&self) -> BigUint {
        self.exponents.iter().map(|&e| BigUint::from(e)).product()
    }

    /// All global sections, in mixed-radix order over positions.
    pub fn gamma_enumerate(&self) -> Result<Vec<Section>> {
        self.gamma_enumerate_bounded(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn gamma_enumerate_bounded(&self, limit: u64) -> Result<Vec<Section>> {
        let count = self.gamma_card();
        if count > BigUint::from(limit) {
            return Err(Error::BoundExceeded { count, limit });
        }
        Ok(MixedRadix::new(self.exponents.clone()).collect())
    }

    /// Position of `section` in the order produced by
    /// [`gamma_enumerate`](Self::gamma_enumerate), or `None` if it is not a
    /// section of `self`.
    pub fn section_index(&self, section: &[usize]) -> Option<BigUint> {
        if !self.is_section(section) {
            return None;
        }
        let mut index = BigUint::zero();
        for (&digit, &radix) in section.iter().zip(&self.exponents).rev() {
            index = index * radix + digit;
        }
        Some(index)
    }

    pub fn is_section(&self, section: &[usize]) -> bool {
        section.len() == self.exponents.len() && section.iter().zip(&self.exponents).all(|(&i, &e)| i < e)
    }

    /// `#p(S) = ∑_I S^{#p[I]}` with `0^0 = 1`.
    pub fn eval_card(&self, s: usize) -> BigUint {
        let base = BigUint::from(s);
        self.exponents.iter().map(|&e| Pow::pow(&base, e)).sum()
    }

    /// `#Poly(p, q) = ∏_I ∑_J #p[I]^{#q[J]}` with `0^0 = 1`.
    pub fn hom_count(&self, q: &FinPoly) -> BigUint {
        self.exponents
            .iter()
            .map(|&e| {
                let base = BigUint::from(e);
                q.exponents.iter().map(|&f| Pow::pow(&base, f)).sum::<BigUint>()
            })
            .product()
    }

    pub fn sum(&self, q: &FinPoly) -> FinPoly {
        self.sum_labeled(q).poly
    }

    /// `p + q` with each position tagged by the summand it came from. Ties
    /// keep left positions before right ones.
    pub fn sum_labeled(&self, q: &FinPoly) -> Labeled<Summand> {
        let left = self.exponents.iter().enumerate().map(|(i, &e)| (Summand::Left(i), e));
        let right = q.exponents.iter().enumerate().map(|(j, &e)| (Summand::Right(j), e));
        Labeled::from_pairs(left.chain(right).collect())
    }

    /// Cartesian product: exponents add.
    pub fn product(&self, q: &FinPoly) -> FinPoly {
        self.product_labeled(q).poly
    }

    pub fn product_labeled(&self, q: &FinPoly) -> Labeled<(usize, usize)> {
        self.pairwise(q, |a, b| a + b)
    }

    /// Dirichlet product: exponents multiply.
    pub fn dirichlet(&self, q: &FinPoly) -> FinPoly {
        self.dirichlet_labeled(q).poly
    }

    pub fn dirichlet_labeled(&self, q: &FinPoly) -> Labeled<(usize, usize)> {
        self.pairwise(q, |a, b| a * b)
    }

    fn pairwise(&self, q: &FinPoly, combine: impl Fn(usize, usize) -> usize) -> Labeled<(usize, usize)> {
        let mut pairs = Vec::with_capacity(self.exponents.len() * q.exponents.len());
        for (i, &a) in self.exponents.iter().enumerate() {
            for (j, &b) in q.exponents.iter().enumerate() {
                pairs.push(((i, j), combine(a, b)));
            }
        }
        Labeled::from_pairs(pairs)
    }

    /// Substitution `p(q(y))`.
    pub fn compose(&self, q: &FinPoly) -> FinPoly {
        self.compose_labeled(q).poly
    }

    /// Positions of `p ◁ q` are pairs `(I, f)` with `f: p[I] → q(1)`, listed
    /// with `f` in mixed-radix order.
    pub fn compose_labeled(&self, q: &FinPoly) -> Labeled<(usize, Vec<usize>)> {
        let mut pairs = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            for f in MixedRadix::new(vec![q.positions_count(); e]) {
                let exponent = f.iter().map(|&j| q.exponents[j]).sum();
                pairs.push(((i, f), exponent));
            }
        }
        Labeled::from_pairs(pairs)
    }

    /// Formal derivative `ṗ = ∑_I ∑_{i ∈ p[I]} y^{p[I] − {i}}`.
    pub fn derivative(&self) -> FinPoly {
        self.derivative_labeled().poly
    }

    /// `ṗ` with positions labeled `(I, i)` in lexicographic order, which is
    /// already canonical.
    pub fn derivative_labeled(&self) -> Labeled<(usize, usize)> {
        Labeled::from_pairs(self.term_pairs(|e| e - 1))
    }

    /// `ṗy`, with each position `(I, i)` carrying exponent `#p[I]`.
    pub fn total_polynomial(&self) -> FinPoly {
        self.total_polynomial_labeled().poly
    }

    pub fn total_polynomial_labeled(&self) -> Labeled<(usize, usize)> {
        Labeled::from_pairs(self.term_pairs(|e| e))
    }

    fn term_pairs(&self, exponent: impl Fn(usize) -> usize) -> Vec<((usize, usize), usize)> {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| (0..e).map(move |t| ((i, t), e)))
            .map(|(label, e)| (label, exponent(e)))
            .collect()
    }
}

impl Add for &FinPoly {
    type Output = FinPoly;

    fn add(self, rhs: &FinPoly) -> FinPoly {
        self.sum(rhs)
    }
}

impl Add for FinPoly {
    type Output = FinPoly;

    fn add(self, rhs: FinPoly) -> FinPoly {
        self.sum(&rhs)
    }
}

impl Mul for &FinPoly {
    type Output = FinPoly;

    fn mul(self, rhs: &FinPoly) -> FinPoly {
        self.product(rhs)
    }
}

impl Mul for FinPoly {
    type Output = FinPoly;

    fn mul(self, rhs: FinPoly) -> FinPoly {
        self.product(&rhs)
    }
}

/// Renders like `4y^4 + 4y`; the zero polynomial renders as `0`.
impl fmt::Display for FinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut rest = self.exponents.as_slice();
        while let Some(&e) = rest.first() {
            let run = rest.iter().take_while(|&&x| x == e).count();
            rest = &rest[run..];
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (run, e) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("y")?,
                (c, 1) => write!(f, "{c}y")?,
                (1, e) => write!(f, "y^{e}")?,
                (c, e) => write!(f, "{c}y^{e}")?,
            }
        }
        Ok(())
    }
}

impl From<Vec<usize>> for FinPoly {
    fn from(raw: Vec<usize>) -> Self {
        FinPoly::canonicalize(raw)
    }
}
