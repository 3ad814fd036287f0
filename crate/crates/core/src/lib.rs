//! Finite polynomial functors and the categorical entropy of samples.
//!
//! A sample with outcomes and draws is encoded as the polynomial
//! `p = ∑_I y^{#draws of I}`. Two functors carry it to `Set × Set^op`:
//! `p ↦ ṗy` (the total polynomial) followed by `q ↦ (q(1), Γ(q))`. The
//! composite `h(p) = (ṗ(1), Γ(ṗy))` is a pair of cardinalities whose log
//! aspect ratio `log A − (log B)/A` equals the Shannon entropy of the sample.
//!
//! ```
//! use polyent::{entropy_of_polynomial, parse_poly};
//!
//! let p = parse_poly("y^4 + 4y").unwrap();
//! assert_eq!(p.total_polynomial().to_string(), "4y^4 + 4y");
//! assert_eq!(entropy_of_polynomial(&p), 2.0);
//! ```

pub mod comonad;
pub mod entropy;
pub mod enumerate;
pub mod error;
pub mod laws;
pub mod morph;
pub mod poly;
pub mod rect;
pub mod report;
pub mod sample;
pub mod syntax;

pub use comonad::{coalgebra_from_section, comultiplication, counit};
pub use entropy::{
    categorical_entropy, dist_convex, dist_tensor, empirical_distribution, entropy_of_polynomial, shannon_entropy,
    verify_main_theorem, Dist, TheoremCheck, TOLERANCE,
};
pub use enumerate::{enumerate_polys, MixedRadix, DEFAULT_ENUMERATION_LIMIT};
pub use error::{Error, Result};
pub use morph::{apply_r, apply_t, compose_morphisms, enumerate_morphisms, PolyMorphism, RectMap};
pub use poly::{FinPoly, Labeled, Section, Summand};
pub use rect::{rect_closure, rect_hom_count, rect_sum, rect_tensor, RectObj};
pub use sample::{poly_from_sample, SampleTable};
pub use syntax::{parse_poly, ParseError};
