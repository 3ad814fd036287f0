//! Deterministic enumerators used for global sections, morphisms and the
//! exhaustive law sweeps.

use crate::poly::FinPoly;

/// Default cap on how many items a bounded enumeration may produce.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// Counts through every digit vector `d` with `d[k] < radices[k]`, least
/// significant digit first.
///
/// An empty radix list yields exactly one empty vector; any zero radix yields
/// nothing.
#[derive(Clone, Debug)]
pub struct MixedRadix {
    radices: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl MixedRadix {
    pub fn new(radices: Vec<usize>) -> Self {
        let next = if radices.contains(&0) {
            None
        } else {
            Some(vec![0; radices.len()])
        };
        MixedRadix { radices, next }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried_out = true;
        for (digit, &radix) in succ.iter_mut().zip(&self.radices) {
            if *digit + 1 < radix {
                *digit += 1;
                carried_out = false;
                break;
            }
            *digit = 0;
        }
        if !carried_out {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Every canonical polynomial with at most `max_positions` positions and
/// exponents bounded by `max_exponent`, each exactly once.
///
/// Ordered by number of positions, then lexicographically on the ascending
/// exponent sequence.
pub fn enumerate_polys(max_positions: usize, max_exponent: usize) -> PolyEnumerator {
    PolyEnumerator {
        max_positions,
        max_exponent,
        current: Some(Vec::new()),
    }
}

#[derive(Clone, Debug)]
pub struct PolyEnumerator {
    max_positions: usize,
    max_exponent: usize,
    // ascending exponent sequence of the next polynomial to yield
    current: Option<Vec<usize>>,
}

impl Iterator for PolyEnumerator {
    type Item = FinPoly;

    fn next(&mut self) -> Option<FinPoly> {
        let current = self.current.take()?;
        let mut succ = current.clone();
        match succ.iter().rposition(|&e| e < self.max_exponent) {
            Some(i) => {
                let bumped = succ[i] + 1;
                for e in &mut succ[i..] {
                    *e = bumped;
                }
                self.current = Some(succ);
            }
            None if succ.len() < self.max_positions => {
                self.current = Some(vec![0; succ.len() + 1]);
            }
            None => {}
        }
        Some(FinPoly::canonicalize(current))
    }
}
