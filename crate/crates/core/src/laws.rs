//! Exhaustive law sweeps over small polynomials.
//!
//! Every suite runs over [`enumerate_polys`] at the requested bounds (or a
//! clamped version for the morphism-level suites, whose cost grows with the
//! hom-set sizes) and records how many cases it checked and how many failed.

use serde::Serialize;

use crate::comonad::{coalgebra_from_section, comultiplication, counit, unfold_double_total};
use crate::entropy::{categorical_entropy, verify_main_theorem};
use crate::enumerate::enumerate_polys;
use crate::morph::{apply_r, apply_t, compose_morphisms, enumerate_morphisms, PolyMorphism};
use crate::poly::FinPoly;
use crate::syntax::parse_poly;

/// Bound used by the morphism-level suites regardless of the requested one.
pub const MORPHISM_SWEEP_BOUND: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl LawOutcome {
    fn new(name: &'static str) -> Self {
        LawOutcome {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawsReport {
    pub max_positions: usize,
    pub max_exponent: usize,
    pub suites: Vec<LawOutcome>,
    pub passed: usize,
    pub failed: usize,
}

impl LawsReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            let status = if suite.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{status}  {:<46}{:>8} cases\n", suite.name, suite.cases));
            if let Some(first) = &suite.first_failure {
                out.push_str(&format!("      first failure: {first}\n"));
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

pub fn run_laws(max_positions: usize, max_exponent: usize) -> LawsReport {
    let polys: Vec<FinPoly> = enumerate_polys(max_positions, max_exponent).collect();
    let small: Vec<FinPoly> = enumerate_polys(
        max_positions.min(MORPHISM_SWEEP_BOUND),
        max_exponent.min(MORPHISM_SWEEP_BOUND),
    )
    .collect();

    let suites = vec![
        sum_monoid(&polys),
        dirichlet_monoid(&polys),
        distributivity(&polys),
        derivative_additive(&polys),
        leibniz(&polys),
        chain_rule(&polys),
        total_rig_functor(&polys),
        counting(&polys),
        gamma_consistency(&polys),
        entropy_rig_functor(&polys),
        main_theorem(&polys),
        lemma_guards(&polys),
        render_round_trip(&polys),
        hom_enumeration(&small),
        functor_t(&small),
        functor_r(&small),
        comonad_laws(&polys),
    ];
    let passed = suites.iter().filter(|s| s.passed()).count();
    LawsReport {
        max_positions,
        max_exponent,
        failed: suites.len() - passed,
        passed,
        suites,
    }
}

fn pairs(polys: &[FinPoly]) -> impl Iterator<Item = (&FinPoly, &FinPoly)> {
    polys.iter().flat_map(move |p| polys.iter().map(move |q| (p, q)))
}

fn sum_monoid(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("sum: commutative monoid, unit 0");
    for (p, q) in pairs(polys) {
        out.check(p.sum(q) == q.sum(p), || format!("{p} + {q}"));
        for r in polys {
            out.check(p.sum(q).sum(r) == p.sum(&q.sum(r)), || format!("({p} + {q}) + {r}"));
        }
    }
    for p in polys {
        out.check(p.sum(&FinPoly::zero()) == *p, || format!("{p} + 0"));
    }
    out
}

fn dirichlet_monoid(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("dirichlet: commutative monoid, unit y");
    for (p, q) in pairs(polys) {
        out.check(p.dirichlet(q) == q.dirichlet(p), || format!("{p} ⊗ {q}"));
        for r in polys {
            out.check(p.dirichlet(q).dirichlet(r) == p.dirichlet(&q.dirichlet(r)), || {
                format!("({p} ⊗ {q}) ⊗ {r}")
            });
        }
    }
    for p in polys {
        out.check(p.dirichlet(&FinPoly::y()) == *p, || format!("{p} ⊗ y"));
    }
    out
}

fn distributivity(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("dirichlet distributes over sum");
    for (p, q) in pairs(polys) {
        for r in polys {
            out.check(p.dirichlet(&q.sum(r)) == p.dirichlet(q).sum(&p.dirichlet(r)), || {
                format!("{p} ⊗ ({q} + {r})")
            });
        }
    }
    out
}

fn derivative_additive(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("derivative is additive");
    for (p, q) in pairs(polys) {
        out.check(p.sum(q).derivative() == p.derivative().sum(&q.derivative()), || {
            format!("d({p} + {q})")
        });
    }
    out
}

fn leibniz(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("leibniz rule");
    for (p, q) in pairs(polys) {
        let lhs = p.product(q).derivative();
        let rhs = p.derivative().product(q).sum(&p.product(&q.derivative()));
        out.check(lhs == rhs, || format!("d({p} × {q})"));
    }
    out
}

fn chain_rule(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("chain rule");
    for (p, q) in pairs(polys) {
        let lhs = p.compose(q).derivative();
        let rhs = p.derivative().compose(q).product(&q.derivative());
        out.check(lhs == rhs, || format!("d({p} ◁ {q})"));
    }
    out
}

fn total_rig_functor(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("total polynomial is a rig functor");
    out.check(FinPoly::y().total_polynomial() == FinPoly::y(), || "T(y)".into());
    out.check(FinPoly::zero().total_polynomial().is_zero(), || "T(0)".into());
    for (p, q) in pairs(polys) {
        let (tp, tq) = (p.total_polynomial(), q.total_polynomial());
        out.check(p.sum(q).total_polynomial() == tp.sum(&tq), || format!("T({p} + {q})"));
        out.check(p.dirichlet(q).total_polynomial() == tp.dirichlet(&tq), || {
            format!("T({p} ⊗ {q})")
        });
    }
    out
}

fn counting(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("counting consistency");
    for p in polys {
        let ok = p.terms_count() == p.derivative().positions_count()
            && p.terms_count() == p.total_polynomial().positions_count()
            && p.eval_card(1) == p.positions_count().into();
        out.check(ok, || p.to_string());
    }
    out
}

fn gamma_consistency(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("global sections: card, enumeration, hom");
    for p in polys {
        let card = p.gamma_card();
        let enumerated = p.gamma_enumerate().map(|s| s.len());
        let ok = enumerated.map_or(true, |n| card == n.into()) && card == p.hom_count(&FinPoly::y());
        out.check(ok, || p.to_string());

        let expected: num_bigint::BigUint = p
            .exponents()
            .iter()
            .map(|&e| num_traits::Pow::pow(num_bigint::BigUint::from(e), e))
            .product();
        out.check(p.total_polynomial().gamma_card() == expected, || format!("Γ(T({p}))"));
    }
    out
}

fn entropy_rig_functor(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("categorical entropy is a rig functor");
    for (p, q) in pairs(polys) {
        let (hp, hq) = (categorical_entropy(p), categorical_entropy(q));
        out.check(categorical_entropy(&p.sum(q)) == hp.sum(&hq), || {
            format!("h({p} + {q})")
        });
        out.check(categorical_entropy(&p.dirichlet(q)) == hp.tensor(&hq), || {
            format!("h({p} ⊗ {q})")
        });
    }
    out
}

fn main_theorem(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("entropy equals log aspect ratio");
    for p in polys.iter().filter(|p| p.terms_count() >= 1) {
        let check = verify_main_theorem(p);
        out.check(check.as_ref().is_ok_and(|c| c.matches), || format!("{p}: {check:?}"));
    }
    out
}

fn lemma_guards(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("categorical entropy stays in the domain of L");
    for p in polys {
        let h = categorical_entropy(p);
        let ok = h.b >= 1u32.into() && (h.a != 0u32.into() || h.b == 1u32.into());
        out.check(ok && h.log_aspect_ratio().is_ok(), || format!("h({p}) = {h}"));
    }
    out
}

fn render_round_trip(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("parse inverts rendering");
    for p in polys {
        out.check(parse_poly(&p.to_string()).as_ref() == Ok(p), || p.to_string());
    }
    out
}

fn hom_enumeration(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("hom count matches enumeration");
    for (p, q) in pairs(polys) {
        let count = enumerate_morphisms(p, q).map(|m| m.count());
        out.check(count.is_ok_and(|n| p.hom_count(q) == n.into()), || {
            format!("Poly({p}, {q})")
        });
    }
    out
}

fn cartesian_maps(p: &FinPoly, q: &FinPoly) -> Vec<PolyMorphism> {
    enumerate_morphisms(p, q)
        .map(|it| it.filter(PolyMorphism::is_cartesian).collect())
        .unwrap_or_default()
}

fn functor_t(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("p ↦ ṗy is a functor on cartesian maps");
    for p in polys {
        let id = apply_t(&PolyMorphism::identity(p));
        out.check(
            id.is_ok_and(|t| t == PolyMorphism::identity(&p.total_polynomial())),
            || format!("T(id {p})"),
        );
    }
    for (p, q) in pairs(polys) {
        for phi in cartesian_maps(p, q) {
            for r in polys {
                for psi in cartesian_maps(q, r) {
                    let composite = compose_morphisms(&phi, &psi).expect("composable");
                    let lhs = apply_t(&composite);
                    let rhs = apply_t(&phi).and_then(|a| compose_morphisms(&a, &apply_t(&psi)?));
                    let ok = composite.is_cartesian()
                        && matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r && l.is_cartesian());
                    out.check(ok, || format!("T(ψ∘φ) for {p} → {q} → {r}"));
                }
            }
        }
    }
    out
}

fn functor_r(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("R is a functor into Set × Set^op");
    for (p, q) in pairs(polys) {
        let Ok(phis) = enumerate_morphisms(p, q) else { continue };
        for phi in phis {
            for r in polys {
                let Ok(psis) = enumerate_morphisms(q, r) else { continue };
                for psi in psis {
                    let composite = compose_morphisms(&phi, &psi).expect("composable");
                    let lhs = apply_r(&composite);
                    let rhs = apply_r(&phi).and_then(|a| a.then(&apply_r(&psi)?));
                    let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
                    out.check(ok, || format!("R(ψ∘φ) for {p} → {q} → {r}"));
                }
            }
        }
    }
    out
}

fn comonad_laws(polys: &[FinPoly]) -> LawOutcome {
    let mut out = LawOutcome::new("comonad and coalgebra laws");
    for p in polys {
        let eps = counit(p);
        let delta = comultiplication(p);
        out.check(eps.is_cartesian() && delta.is_cartesian(), || format!("ε, δ at {p}"));

        let tp = p.total_polynomial();
        let delta_tt = compose_morphisms(&delta, &unfold_double_total(p)).expect("composable");
        let id = PolyMorphism::identity(&tp);
        let left = compose_morphisms(&delta_tt, &counit(&tp));
        let right = apply_t(&eps).and_then(|t| compose_morphisms(&delta_tt, &t));
        out.check(
            matches!((&left, &right), (Ok(l), Ok(r)) if *l == id && *r == id),
            || format!("counit laws at {p}"),
        );

        let delta_t = compose_morphisms(&comultiplication(&tp), &unfold_double_total(&tp)).expect("composable");
        let lhs = apply_t(&delta_tt).and_then(|t| compose_morphisms(&delta_tt, &t));
        let rhs = compose_morphisms(&delta_tt, &delta_t);
        out.check(matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r), || {
            format!("coassociativity at {p}")
        });

        if p.exponents().iter().all(|&e| e >= 1) {
            let id = PolyMorphism::identity(p);
            let Ok(sections) = p.gamma_enumerate() else { continue };
            for s in &sections {
                let split = coalgebra_from_section(p, s).and_then(|g| compose_morphisms(&g, &eps));
                out.check(split.is_ok_and(|m| m == id), || format!("ε∘γ at {p}, γ = {s:?}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_bounds() {
        let report = run_laws(2, 2);
        assert!(report.all_passed(), "{}", report.to_text());
        assert!(report.suites.iter().all(|s| s.cases > 0));
    }

    #[test]
    fn failures_are_recorded() {
        let mut outcome = LawOutcome::new("demo");
        outcome.check(true, || unreachable!());
        outcome.check(false, || "first".into());
        outcome.check(false, || "second".into());
        assert_eq!((outcome.cases, outcome.failures), (3, 2));
        assert_eq!(outcome.first_failure.as_deref(), Some("first"));
    }
}
