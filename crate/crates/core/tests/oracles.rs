//! Independent oracles for the polynomial arithmetic and counting operations.
//!
//! The oracles work on dense coefficient vectors (`coeffs[e]` is the number of
//! positions with exponent `e`) or on raw brute-force enumeration, never on the
//! labeled multiset constructions they check.

use std::collections::HashSet;

use num_bigint::BigUint;
use polyent::{enumerate_morphisms, enumerate_polys, FinPoly, PolyMorphism};

fn coeffs(p: &FinPoly) -> Vec<u64> {
    let mut c = vec![0; p.exponents().first().map_or(0, |&e| e + 1)];
    for &e in p.exponents() {
        c[e] += 1;
    }
    c
}

fn from_coeffs(c: &[u64]) -> FinPoly {
    FinPoly::canonicalize(
        c.iter()
            .enumerate()
            .flat_map(|(e, &n)| std::iter::repeat_n(e, n as usize)),
    )
}

fn dense_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn dense_add(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (k, v) in out.iter_mut().enumerate() {
        *v = a.get(k).unwrap_or(&0) + b.get(k).unwrap_or(&0);
    }
    out
}

fn dense_derivative(c: &[u64]) -> Vec<u64> {
    c.iter().enumerate().skip(1).map(|(e, &n)| n * e as u64).collect()
}

/// `p(q(y))` by Horner's rule on coefficient vectors.
fn dense_compose(p: &[u64], q: &[u64]) -> Vec<u64> {
    let mut acc: Vec<u64> = Vec::new();
    for &c in p.iter().rev() {
        acc = dense_add(&dense_mul(&acc, q), &[c]);
    }
    acc
}

fn small() -> Vec<FinPoly> {
    enumerate_polys(3, 3).collect()
}

#[test]
fn derivative_matches_formal_differentiation() {
    for p in enumerate_polys(4, 4) {
        assert_eq!(p.derivative(), from_coeffs(&dense_derivative(&coeffs(&p))), "{p}");
    }
    // 2y³ + 5y² + 1 → 6y² + 10y
    let p = from_coeffs(&[1, 0, 5, 2]);
    assert_eq!(p.derivative(), from_coeffs(&[0, 10, 6]));
}

#[test]
fn product_matches_convolution() {
    for p in small() {
        for q in small() {
            assert_eq!(
                p.product(&q),
                from_coeffs(&dense_mul(&coeffs(&p), &coeffs(&q))),
                "{p} × {q}"
            );
        }
    }
}

#[test]
fn sum_matches_coefficient_addition() {
    for p in small() {
        for q in small() {
            assert_eq!(p.sum(&q), from_coeffs(&dense_add(&coeffs(&p), &coeffs(&q))));
        }
    }
}

#[test]
fn compose_matches_substitution() {
    let polys: Vec<_> = enumerate_polys(2, 3).collect();
    for p in &polys {
        for q in &polys {
            assert_eq!(
                p.compose(q),
                from_coeffs(&dense_compose(&coeffs(p), &coeffs(q))),
                "{p} ◁ {q}"
            );
        }
    }
    // (y² + 1) ◁ 2y = 4y² + 1
    let p = from_coeffs(&[1, 0, 1]);
    let q = from_coeffs(&[0, 2]);
    assert_eq!(p.compose(&q), from_coeffs(&[1, 0, 4]));
}

#[test]
fn dirichlet_matches_evaluation_at_products() {
    // positions (I, J) carry exponent e_I·e'_J, so (p ⊗ q)(s) = ∑_{I,J} s^{e_I e'_J}
    for p in small() {
        for q in small() {
            let d = p.dirichlet(&q);
            assert_eq!(d.positions_count(), p.positions_count() * q.positions_count());
            for s in 0..4u32 {
                let expected: BigUint = p
                    .exponents()
                    .iter()
                    .flat_map(|&a| q.exponents().iter().map(move |&b| BigUint::from(s).pow((a * b) as u32)))
                    .sum();
                assert_eq!(d.eval_card(s as usize), expected, "({p} ⊗ {q})({s})");
            }
        }
    }
}

#[test]
fn eval_card_matches_direct_sum() {
    for p in enumerate_polys(4, 4) {
        for s in 0..5u64 {
            let direct: u64 = p.exponents().iter().map(|&e| s.pow(e as u32)).sum();
            assert_eq!(p.eval_card(s as usize), BigUint::from(direct));
        }
    }
    // (y² + 2y + 1)(3) = 9 + 6 + 1
    assert_eq!(from_coeffs(&[1, 2, 1]).eval_card(3), BigUint::from(16u32));
}

#[test]
fn gamma_card_matches_brute_force_sections() {
    for p in enumerate_polys(3, 4) {
        // count every tuple in the full box {0..max}^n that is a valid section
        let n = p.positions_count();
        let side = p.exponents().first().copied().unwrap_or(0).max(1);
        let mut count = 0u64;
        for code in 0..side.pow(n as u32) {
            let mut rest = code;
            let tuple: Vec<usize> = (0..n)
                .map(|_| {
                    let d = rest % side;
                    rest /= side;
                    d
                })
                .collect();
            if tuple.iter().zip(p.exponents()).all(|(&t, &e)| t < e) {
                count += 1;
            }
        }
        assert_eq!(p.gamma_card(), BigUint::from(count), "{p}");
        assert_eq!(p.gamma_enumerate().unwrap().len() as u64, count);
    }
    assert_eq!(FinPoly::monomial(2, 3).gamma_card(), BigUint::from(9u32));
}

/// Every `(on_types, backward tables)` candidate with entries in generous
/// ranges, kept when the checked constructor accepts it.
fn brute_force_morphisms(p: &FinPoly, q: &FinPoly) -> HashSet<PolyMorphism> {
    let mut found = HashSet::new();
    let n = p.positions_count();
    let targets = q.positions_count();
    let term_range = p.exponents().first().copied().unwrap_or(0) + 1;
    let mut on_types = vec![0; n];
    loop {
        if targets > 0 || n == 0 {
            let sizes: Vec<usize> = on_types.iter().map(|&j| q.exponent(j)).collect();
            let total_entries: usize = sizes.iter().sum();
            for code in 0..term_range.pow(total_entries as u32) {
                let mut rest = code;
                let back: Vec<Vec<usize>> = sizes
                    .iter()
                    .map(|&len| {
                        (0..len)
                            .map(|_| {
                                let d = rest % term_range;
                                rest /= term_range;
                                d
                            })
                            .collect()
                    })
                    .collect();
                if let Ok(m) = PolyMorphism::new(p.clone(), q.clone(), on_types.clone(), back) {
                    found.insert(m);
                }
            }
        }
        // advance on_types
        let mut k = 0;
        loop {
            if k == n || targets == 0 {
                return found;
            }
            on_types[k] += 1;
            if on_types[k] < targets {
                break;
            }
            on_types[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn morphism_enumeration_matches_brute_force() {
    let polys: Vec<_> = enumerate_polys(2, 2).collect();
    for p in &polys {
        for q in &polys {
            let listed: Vec<_> = enumerate_morphisms(p, q).unwrap().collect();
            let distinct: HashSet<_> = listed.iter().cloned().collect();
            assert_eq!(listed.len(), distinct.len(), "duplicates in Poly({p}, {q})");
            assert_eq!(distinct, brute_force_morphisms(p, q), "Poly({p}, {q})");
            assert_eq!(p.hom_count(q), BigUint::from(listed.len()));
        }
    }
}

#[test]
fn hom_count_matches_yoneda_product() {
    // Poly(p, q) ≅ ∏_I q(p[I])
    for p in small() {
        for q in small() {
            let yoneda: BigUint = p.exponents().iter().map(|&e| q.eval_card(e)).product();
            assert_eq!(p.hom_count(&q), yoneda);
        }
    }
    let y2 = FinPoly::monomial(1, 2);
    assert_eq!(y2.hom_count(&from_coeffs(&[0, 1, 0, 1])), BigUint::from(10u32));
}

#[test]
fn gamma_of_dirichlet_product() {
    // #Γ(p ⊗ q) = #Γ(p)^{q(1)} · #Γ(q)^{p(1)}
    for p in small() {
        for q in small() {
            let lhs = p.dirichlet(&q).gamma_card();
            let rhs = p.gamma_card().pow(q.positions_count() as u32) * q.gamma_card().pow(p.positions_count() as u32);
            assert_eq!(lhs, rhs, "{p} ⊗ {q}");
        }
    }
}
