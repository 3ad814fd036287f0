//! The comonad `p ↦ ṗy` on cartesian morphisms.
//!
//! Positions of `ṗy` are pairs `(I, i)` with `i ∈ p[I]`, laid out
//! lexicographically, and the terms at `(I, i)` are identified with `p[I]`.
//! Positions of `(ṗy)˙y` are then triples `((I, i), j)` with `j ∈ p[I]`.

use crate::error::{Error, Result};
use crate::morph::PolyMorphism;
use crate::poly::{FinPoly, Summand};

/// `ε_p: ṗy → p`, `(I, i) ↦ I`, identity on terms.
pub fn counit(p: &FinPoly) -> PolyMorphism {
    let mut on_types = Vec::with_capacity(p.terms_count());
    let mut on_terms_back = Vec::with_capacity(p.terms_count());
    for (i, &e) in p.exponents().iter().enumerate() {
        for _ in 0..e {
            on_types.push(i);
            on_terms_back.push((0..e).collect());
        }
    }
    PolyMorphism::new_unchecked(p.total_polynomial(), p.clone(), on_types, on_terms_back)
}

/// `p̈y² + ṗy`, the codomain of the comultiplication.
pub fn comultiplication_codomain(p: &FinPoly) -> FinPoly {
    let y2 = FinPoly::monomial(1, 2);
    p.derivative().derivative().product(&y2).sum(&p.total_polynomial())
}

/// `δ_p: ṗy → p̈y² + ṗy`, the coproduct inclusion of the second summand.
pub fn comultiplication(p: &FinPoly) -> PolyMorphism {
    let total = p.total_polynomial();
    let y2 = FinPoly::monomial(1, 2);
    let codomain = p.derivative().derivative().product(&y2).sum_labeled(&total);
    let on_types = (0..total.positions_count())
        .map(|m| {
            codomain
                .position_of(&Summand::Right(m))
                .expect("every position of the right summand is included")
        })
        .collect();
    let on_terms_back = total.exponents().iter().map(|&e| (0..e).collect()).collect();
    PolyMorphism::new_unchecked(total, codomain.poly, on_types, on_terms_back)
}

/// The cartesian isomorphism `p̈y² + ṗy ≅ (ṗy)˙y`.
///
/// A position `(I, i)` of the `ṗy` summand goes to the diagonal triple
/// `((I, i), i)`. A position of `p̈` removes `i` and then `j ≠ i` from `p[I]`
/// and goes to `((I, i), j)`; on terms, `i` and `j` are sent to the two
/// factors of `y²` in that order.
pub fn unfold_double_total(p: &FinPoly) -> PolyMorphism {
    let first = p.derivative_labeled();
    let second = first.poly.derivative_labeled();
    let y2 = FinPoly::monomial(1, 2);
    let lifted = second.poly.product_labeled(&y2);
    let codomain = lifted.poly.sum_labeled(&p.total_polynomial());

    let total = p.total_polynomial();
    let double_offsets = total.term_offsets();
    let mut on_types = Vec::with_capacity(codomain.poly.positions_count());
    let mut on_terms_back = Vec::with_capacity(codomain.poly.positions_count());
    for label in &codomain.labels {
        match *label {
            Summand::Right(m) => {
                let (_, i) = first.labels[m];
                on_types.push(double_offsets[m] + i);
                on_terms_back.push((0..total.exponent(m)).collect());
            }
            Summand::Left(k) => {
                let (dd_pos, _) = lifted.labels[k];
                let (m, skipped) = second.labels[dd_pos];
                let (big_i, i) = first.labels[m];
                let j = if skipped < i { skipped } else { skipped + 1 };
                let e = p.exponent(big_i);
                on_types.push(double_offsets[m] + j);
                let mut rest = 0;
                let back = (0..e)
                    .map(|t| {
                        if t == i {
                            e - 2
                        } else if t == j {
                            e - 1
                        } else {
                            rest += 1;
                            rest - 1
                        }
                    })
                    .collect();
                on_terms_back.push(back);
            }
        }
    }
    PolyMorphism::new_unchecked(codomain.poly, total.total_polynomial(), on_types, on_terms_back)
}

/// The coalgebra `p → ṗy` picking term `γ(I)` at each position.
pub fn coalgebra_from_section(p: &FinPoly, section: &[usize]) -> Result<PolyMorphism> {
    if !p.is_section(section) {
        return Err(Error::InvalidSection {
            section: section.to_vec(),
            poly: p.to_string(),
        });
    }
    let offsets = p.term_offsets();
    let on_types = section.iter().zip(&offsets).map(|(&t, &start)| start + t).collect();
    let on_terms_back = p.exponents().iter().map(|&e| (0..e).collect()).collect();
    Ok(PolyMorphism::new_unchecked(
        p.clone(),
        p.total_polynomial(),
        on_types,
        on_terms_back,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::{apply_t, compose_morphisms};

    fn p(raw: &[usize]) -> FinPoly {
        FinPoly::canonicalize(raw.iter().copied())
    }

    #[test]
    fn counit_of_y_is_identity() {
        assert_eq!(counit(&FinPoly::y()), PolyMorphism::identity(&FinPoly::y()));
    }

    #[test]
    fn counit_of_worked_sample() {
        let eps = counit(&p(&[4, 1, 1, 1, 1]));
        assert_eq!(eps.source(), &p(&[4, 4, 4, 4, 1, 1, 1, 1]));
        assert_eq!(eps.on_types(), &[0, 0, 0, 0, 1, 2, 3, 4]);
        assert!(eps.is_cartesian());
    }

    #[test]
    fn comultiplication_of_constant_is_empty() {
        let delta = comultiplication(&p(&[0, 0]));
        assert!(delta.source().is_zero());
        assert!(delta.target().is_zero());
    }

    #[test]
    fn comultiplication_of_y_squared() {
        let delta = comultiplication(&p(&[2]));
        assert_eq!(delta.source(), &p(&[2, 2]));
        assert_eq!(delta.target(), &p(&[2, 2, 2, 2]));
        // the p̈y² summand comes first on ties
        assert_eq!(delta.on_types(), &[2, 3]);
        assert!(delta.is_cartesian());
    }

    #[test]
    fn unfolding_is_a_cartesian_iso() {
        let q = p(&[3, 2, 1, 0]);
        let iso = unfold_double_total(&q);
        assert!(iso.is_cartesian());
        let mut hit = iso.on_types().to_vec();
        hit.sort_unstable();
        assert_eq!(hit, (0..iso.target().positions_count()).collect::<Vec<_>>());
        assert_eq!(iso.source(), &comultiplication_codomain(&q));
    }

    #[test]
    fn counit_laws_for_delta() {
        let q = p(&[3, 2, 1]);
        let delta = compose_morphisms(&comultiplication(&q), &unfold_double_total(&q)).unwrap();
        let id = PolyMorphism::identity(&q.total_polynomial());
        let outer = compose_morphisms(&delta, &counit(&q.total_polynomial())).unwrap();
        let inner = compose_morphisms(&delta, &apply_t(&counit(&q)).unwrap()).unwrap();
        assert_eq!(outer, id);
        assert_eq!(inner, id);
    }

    #[test]
    fn coalgebras_split_the_counit() {
        let q = p(&[2, 2]);
        let sections = q.gamma_enumerate().unwrap();
        assert_eq!(sections.len(), 4);
        let mut seen = std::collections::HashSet::new();
        for s in &sections {
            let gamma = coalgebra_from_section(&q, s).unwrap();
            assert!(gamma.is_cartesian());
            assert_eq!(
                compose_morphisms(&gamma, &counit(&q)).unwrap(),
                PolyMorphism::identity(&q)
            );
            seen.insert(gamma);
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn coalgebra_rejects_bad_sections() {
        let q = p(&[2, 1]);
        assert!(coalgebra_from_section(&q, &[0]).is_err());
        assert!(coalgebra_from_section(&q, &[0, 1]).is_err());
        assert!(coalgebra_from_section(&p(&[2, 0]), &[0, 0]).is_err());
    }
}
