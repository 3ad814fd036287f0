//! Morphisms of polynomial functors.
//!
//! A natural transformation `φ: p → q` is a forward map on positions
//! `φ₁: p(1) → q(1)` together with, for every position `I` of `p`, a backward
//! map on terms `φ♯_I: q[φ₁(I)] → p[I]`. Both are stored as index tables over
//! the canonical labeling of `p` and `q`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::enumerate::{MixedRadix, DEFAULT_ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::poly::{FinPoly, Section};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMorphism {
    source: FinPoly,
    target: FinPoly,
    on_types: Vec<usize>,
    on_terms_back: Vec<Vec<usize>>,
}

impl PolyMorphism {
    /// Checks that `on_types` lands in the target's positions and every
    /// `on_terms_back[I]` is a total function `q[φ₁(I)] → p[I]`.
    pub fn new(source: FinPoly, target: FinPoly, on_types: Vec<usize>, on_terms_back: Vec<Vec<usize>>) -> Result<Self> {
        if on_types.len() != source.positions_count() || on_terms_back.len() != source.positions_count() {
            return Err(Error::InvalidMorphism(format!(
                "expected maps for {} source positions",
                source.positions_count()
            )));
        }
        for (i, (&j, back)) in on_types.iter().zip(&on_terms_back).enumerate() {
            if j >= target.positions_count() {
                return Err(Error::InvalidMorphism(format!(
                    "position {i} maps to {j}, but the target has {} positions",
                    target.positions_count()
                )));
            }
            if back.len() != target.exponent(j) {
                return Err(Error::InvalidMorphism(format!(
                    "backward map at position {i} has {} entries, expected {}",
                    back.len(),
                    target.exponent(j)
                )));
            }
            if let Some(&t) = back.iter().find(|&&t| t >= source.exponent(i)) {
                return Err(Error::InvalidMorphism(format!(
                    "backward map at position {i} hits term {t}, but the source has {} terms there",
                    source.exponent(i)
                )));
            }
        }
        Ok(Self::new_unchecked(source, target, on_types, on_terms_back))
    }

    pub(crate) fn new_unchecked(
        source: FinPoly,
        target: FinPoly,
        on_types: Vec<usize>,
        on_terms_back: Vec<Vec<usize>>,
    ) -> Self {
        debug_assert_eq!(on_types.len(), source.positions_count());
        PolyMorphism {
            source,
            target,
            on_types,
            on_terms_back,
        }
    }

    pub fn identity(p: &FinPoly) -> Self {
        let on_terms_back = p.exponents().iter().map(|&e| (0..e).collect()).collect();
        Self::new_unchecked(p.clone(), p.clone(), (0..p.positions_count()).collect(), on_terms_back)
    }

    pub fn source(&self) -> &FinPoly {
        &self.source
    }

    pub fn target(&self) -> &FinPoly {
        &self.target
    }

    pub fn on_types(&self) -> &[usize] {
        &self.on_types
    }

    pub fn on_terms_back(&self) -> &[Vec<usize>] {
        &self.on_terms_back
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &PolyMorphism) -> Result<PolyMorphism> {
        compose_morphisms(self, then)
    }

    /// True when every backward map is a bijection.
    pub fn is_cartesian(&self) -> bool {
        self.on_terms_back
            .iter()
            .enumerate()
            .all(|(i, back)| back.len() == self.source.exponent(i) && is_permutation(back))
    }

    /// Pulls a global section of the target back along `φ`:
    /// `I ↦ φ♯_I(γ(φ₁(I)))`.
    pub fn pull_back_section(&self, section: &[usize]) -> Result<Section> {
        if !self.target.is_section(section) {
            return Err(Error::InvalidSection {
                section: section.to_vec(),
                poly: self.target.to_string(),
            });
        }
        Ok(self
            .on_types
            .iter()
            .zip(&self.on_terms_back)
            .map(|(&j, back)| back[section[j]])
            .collect())
    }
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&t| t < seen.len() && !std::mem::replace(&mut seen[t], true))
}

fn invert_permutation(map: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; map.len()];
    for (k, &t) in map.iter().enumerate() {
        inverse[t] = k;
    }
    inverse
}

/// `ψ ∘ φ` for `φ: p → q` and `ψ: q → r`. Backward maps compose in reverse.
pub fn compose_morphisms(phi: &PolyMorphism, psi: &PolyMorphism) -> Result<PolyMorphism> {
    if phi.target != psi.source {
        return Err(Error::EndpointMismatch {
            left: phi.target.to_string(),
            right: psi.source.to_string(),
        });
    }
    let on_types = phi.on_types.iter().map(|&j| psi.on_types[j]).collect();
    let on_terms_back = phi
        .on_types
        .iter()
        .zip(&phi.on_terms_back)
        .map(|(&j, phi_back)| psi.on_terms_back[j].iter().map(|&t| phi_back[t]).collect())
        .collect();
    Ok(PolyMorphism::new_unchecked(
        phi.source.clone(),
        psi.target.clone(),
        on_types,
        on_terms_back,
    ))
}

/// Every morphism `p → q`, each exactly once.
///
/// Per source position the choices are a target position `J` followed by a
/// function `q[J] → p[I]`; positions vary in mixed-radix order.
pub fn enumerate_morphisms(p: &FinPoly, q: &FinPoly) -> Result<impl Iterator<Item = PolyMorphism>> {
    enumerate_morphisms_bounded(p, q, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_morphisms_bounded(p: &FinPoly, q: &FinPoly, limit: u64) -> Result<impl Iterator<Item = PolyMorphism>> {
    let count = p.hom_count(q);
    if count > BigUint::from(limit) {
        return Err(Error::BoundExceeded { count, limit });
    }

    let choices: Vec<Vec<(usize, Vec<usize>)>> = p
        .exponents()
        .iter()
        .map(|&e| {
            q.exponents()
                .iter()
                .enumerate()
                .flat_map(|(j, &f)| MixedRadix::new(vec![e; f]).map(move |back| (j, back)))
                .collect()
        })
        .collect();
    let radices = choices.iter().map(Vec::len).collect();
    let (p, q) = (p.clone(), q.clone());
    Ok(MixedRadix::new(radices).map(move |pick| {
        let (on_types, on_terms_back) = pick
            .iter()
            .zip(&choices)
            .map(|(&k, options)| options[k].clone())
            .unzip();
        PolyMorphism::new_unchecked(p.clone(), q.clone(), on_types, on_terms_back)
    }))
}

/// The functor `p ↦ ṗy` on cartesian maps.
///
/// A cartesian `φ: p → q` induces `ṗy → q̇y` sending `(I, i)` to
/// `(φ₁(I), (φ♯_I)⁻¹(i))`. Terms of `ṗy` at `(I, i)` are identified with
/// `p[I]`, so the backward map there is `φ♯_I` again.
pub fn apply_t(phi: &PolyMorphism) -> Result<PolyMorphism> {
    if !phi.is_cartesian() {
        return Err(Error::NotCartesian);
    }
    let source_offsets = phi.source.term_offsets();
    let target_offsets = phi.target.term_offsets();
    let mut on_types = Vec::with_capacity(phi.source.terms_count());
    let mut on_terms_back = Vec::with_capacity(phi.source.terms_count());
    for (i, (&j, back)) in phi.on_types.iter().zip(&phi.on_terms_back).enumerate() {
        let inverse = invert_permutation(back);
        for &t in &inverse[..phi.source.exponent(i)] {
            on_types.push(target_offsets[j] + t);
            on_terms_back.push(back.clone());
        }
        debug_assert_eq!(on_types.len(), source_offsets[i] + phi.source.exponent(i));
    }
    Ok(PolyMorphism::new_unchecked(
        phi.source.total_polynomial(),
        phi.target.total_polynomial(),
        on_types,
        on_terms_back,
    ))
}

/// A morphism of `Set × Set^op` between `(p(1), Γ(p))` and `(q(1), Γ(q))`:
/// positions forward, global sections backward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectMap {
    source: FinPoly,
    target: FinPoly,
    forward: Vec<usize>,
    /// `backward[k]` is the image of the `k`-th section of the target.
    backward: Vec<Section>,
}

impl RectMap {
    pub fn identity(p: &FinPoly) -> Result<Self> {
        Ok(RectMap {
            source: p.clone(),
            target: p.clone(),
            forward: (0..p.positions_count()).collect(),
            backward: p.gamma_enumerate()?,
        })
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn backward(&self) -> &[Section] {
        &self.backward
    }

    pub fn source(&self) -> &FinPoly {
        &self.source
    }

    pub fn target(&self) -> &FinPoly {
        &self.target
    }

    /// Image of a target section under the backward component.
    pub fn pull_back(&self, section: &[usize]) -> Option<&Section> {
        let k = self.target.section_index(section)?.to_usize()?;
        self.backward.get(k)
    }

    /// `next ∘ self` in `Set × Set^op`; the backward parts compose in reverse.
    pub fn then(&self, next: &RectMap) -> Result<RectMap> {
        if self.target != next.source {
            return Err(Error::EndpointMismatch {
                left: self.target.to_string(),
                right: next.source.to_string(),
            });
        }
        let forward = self.forward.iter().map(|&j| next.forward[j]).collect();
        let backward = next
            .backward
            .iter()
            .map(|mid| {
                self.pull_back(mid)
                    .cloned()
                    .expect("backward components land in sections of the shared object")
            })
            .collect();
        Ok(RectMap {
            source: self.source.clone(),
            target: next.target.clone(),
            forward,
            backward,
        })
    }
}

/// `R(φ) = (φ₁, Γ(φ))`.
pub fn apply_r(phi: &PolyMorphism) -> Result<RectMap> {
    let backward = phi
        .target
        .gamma_enumerate()?
        .iter()
        .map(|gamma| phi.pull_back_section(gamma))
        .collect::<Result<_>>()?;
    Ok(RectMap {
        source: phi.source.clone(),
        target: phi.target.clone(),
        forward: phi.on_types.clone(),
        backward,
    })
}
