//! Structured reports shared by the command-line front end and the golden
//! tests. Each report serializes to JSON and renders as a fixed-width table.

use serde::{Serialize, Serializer};

use crate::entropy::{categorical_entropy, empirical_distribution, entropy_of_polynomial, shannon_entropy, TOLERANCE};
use crate::error::Result;
use crate::poly::FinPoly;
use crate::rect::RectObj;

/// Significant digits used for every real printed in a report.
pub const SIGNIFICANT_DIGITS: usize = 12;

const KEY_WIDTH: usize = 21;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros dropped,
/// scientific notation outside `[1e-5, 1e12)`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= SIGNIFICANT_DIGITS as i32 {
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn rounded(x: f64) -> f64 {
    format_real(x).parse().unwrap_or(x)
}

fn real<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(rounded(*x))
}

fn opt_real<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_some(&rounded(*x)),
        None => s.serialize_none(),
    }
}

fn table(rows: &[(&str, String)]) -> String {
    rows.iter()
        .map(|(key, value)| format!("{key:<KEY_WIDTH$}{value}\n"))
        .collect()
}

fn or_dash<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

/// The full entropy decomposition of one polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntropyReport {
    pub polynomial: String,
    pub positions: usize,
    pub draws: usize,
    pub gamma_total: String,
    pub length: usize,
    #[serde(serialize_with = "opt_real")]
    pub width: Option<f64>,
    #[serde(serialize_with = "real")]
    pub entropy_categorical: f64,
    #[serde(serialize_with = "opt_real")]
    pub shannon_direct: Option<f64>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl EntropyReport {
    pub fn new(p: &FinPoly) -> Self {
        let h = categorical_entropy(p);
        let entropy_categorical = entropy_of_polynomial(p);
        let shannon_direct = empirical_distribution(p).ok().map(|d| shannon_entropy(&d));
        EntropyReport {
            polynomial: p.to_string(),
            positions: p.positions_count(),
            draws: p.terms_count(),
            gamma_total: h.b.to_string(),
            length: p.terms_count(),
            width: h.width().ok(),
            entropy_categorical,
            shannon_direct,
            matches: shannon_direct.map(|s| (s - entropy_categorical).abs() <= TOLERANCE),
        }
    }

    pub fn to_text(&self) -> String {
        table(&[
            ("polynomial", self.polynomial.clone()),
            ("positions", self.positions.to_string()),
            ("draws", self.draws.to_string()),
            ("gamma_total", self.gamma_total.clone()),
            ("length", self.length.to_string()),
            ("width", or_dash(self.width.map(format_real))),
            ("entropy_categorical", format_real(self.entropy_categorical)),
            ("shannon_direct", or_dash(self.shannon_direct.map(format_real))),
            ("match", or_dash(self.matches)),
        ])
    }
}

/// The rectangular aspect `(p(1), Γ(p))` of a polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AspectReport {
    pub polynomial: String,
    pub length: usize,
    pub gamma: String,
    #[serde(serialize_with = "opt_real")]
    pub width: Option<f64>,
    #[serde(serialize_with = "opt_real")]
    pub log_aspect_ratio: Option<f64>,
}

impl AspectReport {
    pub fn new(p: &FinPoly) -> Self {
        let aspect = RectObj {
            a: p.positions_count().into(),
            b: p.gamma_card(),
        };
        AspectReport {
            polynomial: p.to_string(),
            length: p.positions_count(),
            gamma: aspect.b.to_string(),
            width: aspect.width().ok(),
            log_aspect_ratio: aspect.log_aspect_ratio().ok(),
        }
    }

    pub fn to_text(&self) -> String {
        table(&[
            ("polynomial", self.polynomial.clone()),
            ("length", self.length.to_string()),
            ("gamma", self.gamma.clone()),
            ("width", or_dash(self.width.map(format_real))),
            ("log_aspect_ratio", or_dash(self.log_aspect_ratio.map(format_real))),
        ])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeriveReport {
    pub polynomial: String,
    pub derivative: String,
    pub total_polynomial: String,
}

impl DeriveReport {
    pub fn new(p: &FinPoly) -> Self {
        DeriveReport {
            polynomial: p.to_string(),
            derivative: p.derivative().to_string(),
            total_polynomial: p.total_polynomial().to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        table(&[
            ("polynomial", self.polynomial.clone()),
            ("derivative", self.derivative.clone()),
            ("total_polynomial", self.total_polynomial.clone()),
        ])
    }
}

/// The empirical distribution, one exact rational per canonical position.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistReport {
    pub polynomial: String,
    pub probabilities: Vec<String>,
    #[serde(serialize_with = "real")]
    pub entropy: f64,
}

impl DistReport {
    pub fn new(p: &FinPoly) -> Result<Self> {
        let d = empirical_distribution(p)?;
        Ok(DistReport {
            polynomial: p.to_string(),
            probabilities: d.probabilities().iter().map(ToString::to_string).collect(),
            entropy: shannon_entropy(&d),
        })
    }

    pub fn to_text(&self) -> String {
        let mut rows = vec![("polynomial", self.polynomial.clone())];
        let keys: Vec<String> = (0..self.probabilities.len()).map(|i| format!("P({i})")).collect();
        rows.extend(keys.iter().map(String::as_str).zip(self.probabilities.iter().cloned()));
        rows.push(("entropy", format_real(self.entropy)));
        table(&rows)
    }
}
