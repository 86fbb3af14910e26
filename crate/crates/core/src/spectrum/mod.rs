//! Primitive closed geodesics with holonomy angles, their file formats,
//! synthetic generation and the enumeration of conjugacy-class terms with
//! certified tail bounds.

mod classes;
mod io;
mod synth;

use thiserror::Error;

pub use classes::{
    best_effort_classes, class_iterator, classes_up_to, det_factor, holonomy_eigenvalues, prime_tail_bound,
    tail_bound, ClassSelection, ClassTerm, TailModel,
};
pub use io::{import_complex_lengths, parse, parse_csv, parse_jsonl, write_csv, write_jsonl, FORMAT_NAME, FORMAT_VERSION};
pub use synth::{synthesize, DEFAULT_LENGTH_FLOOR};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: expected {expected} angles, got {got}")]
    Dimension { line: usize, expected: usize, got: usize },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error("spectrum insufficient: certified tail bound {bound:e} exceeds target {target:e}")]
    InsufficientSpectrum { bound: f64, target: f64 },
    #[error("outside the region of convergence: {0}")]
    Convergence(String),
}

/// One primitive closed geodesic: length, holonomy angles and multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeGeodesic {
    pub length: f64,
    pub angles: Vec<f64>,
    pub mult: u32,
}

impl PrimeGeodesic {
    fn check(&self, n: usize, line: usize) -> Result<(), SpectrumError> {
        if !(self.length.is_finite() && self.length > 0.0) {
            return Err(SpectrumError::Malformed { line, msg: format!("length must be positive, got {}", self.length) });
        }
        if self.angles.len() != n {
            return Err(SpectrumError::Dimension { line, expected: n, got: self.angles.len() });
        }
        if self.angles.iter().any(|a| !a.is_finite()) {
            return Err(SpectrumError::Malformed { line, msg: "non-finite angle".into() });
        }
        if self.mult == 0 {
            return Err(SpectrumError::Malformed { line, msg: "multiplicity must be positive".into() });
        }
        Ok(())
    }
}

/// A list of primitive geodesics for a manifold of dimension `2n + 1`.
///
/// Every primitive class of length `<= completeness_cutoff` is assumed to be
/// listed. An infinite cutoff declares the list complete.
#[derive(Clone, Debug, PartialEq)]
pub struct LengthSpectrum {
    pub n: usize,
    pub entries: Vec<PrimeGeodesic>,
    pub completeness_cutoff: f64,
    pub growth_constant: Option<f64>,
}

impl LengthSpectrum {
    pub fn new(n: usize, entries: Vec<PrimeGeodesic>, completeness_cutoff: f64) -> Result<Self, SpectrumError> {
        if n == 0 {
            return Err(SpectrumError::Invalid("n must be at least 1".into()));
        }
        if completeness_cutoff.is_nan() || completeness_cutoff < 0.0 {
            return Err(SpectrumError::Invalid(format!("bad completeness cutoff {completeness_cutoff}")));
        }
        for (i, e) in entries.iter().enumerate() {
            e.check(n, i + 1)?;
        }
        Ok(LengthSpectrum { n, entries, completeness_cutoff, growth_constant: None })
    }

    pub fn empty(n: usize) -> Self {
        LengthSpectrum { n, entries: Vec::new(), completeness_cutoff: 0.0, growth_constant: None }
    }

    pub fn is_complete(&self) -> bool {
        self.completeness_cutoff == f64::INFINITY
    }

    /// Stored growth constant, or the fitted one.
    pub fn growth(&self) -> f64 {
        self.growth_constant.unwrap_or_else(|| fit_growth(self).0)
    }

    /// Entries sorted by length, then angles.
    pub fn sorted(&self) -> LengthSpectrum {
        let mut s = self.clone();
        s.entries.sort_by(|a, b| {
            a.length.total_cmp(&b.length).then_with(|| {
                a.angles.iter().zip(&b.angles).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        s
    }
}

/// Result of [`validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub count: usize,
    pub total_multiplicity: u64,
    pub sorted: bool,
    /// First 1-based position whose length is smaller than its predecessor.
    pub first_unsorted: Option<usize>,
    pub issues: Vec<String>,
    /// `max_R N(R) / exp(2 n R)` over the listed lengths.
    pub growth_constant: f64,
    pub growth_argmax: Option<f64>,
    pub growth_warning: Option<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.issues.is_empty()
    }
}

fn fit_growth(spec: &LengthSpectrum) -> (f64, Option<f64>) {
    let mut lens: Vec<(f64, u32)> = spec.entries.iter().map(|e| (e.length, e.mult)).collect();
    lens.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = (0.0, None);
    let mut count = 0u64;
    for (i, &(l, m)) in lens.iter().enumerate() {
        count += m as u64;
        if i + 1 < lens.len() && lens[i + 1].0 == l {
            continue;
        }
        let c = count as f64 * (-2.0 * spec.n as f64 * l).exp();
        if c > best.0 {
            best = (c, Some(l));
        }
    }
    best
}

/// Check positivity, dimensions, sortedness and fit the growth constant.
pub fn validate(spec: &LengthSpectrum, growth_bound: Option<f64>) -> ValidationReport {
    let mut issues = Vec::new();
    for (i, e) in spec.entries.iter().enumerate() {
        if let Err(err) = e.check(spec.n, i + 1) {
            issues.push(err.to_string());
        }
    }
    let first_unsorted = spec.entries.windows(2).position(|w| w[1].length < w[0].length).map(|i| i + 2);
    let (growth_constant, growth_argmax) = fit_growth(spec);
    let growth_warning = growth_bound.filter(|&b| growth_constant > b).map(|b| {
        format!("counting growth constant {growth_constant:e} exceeds the bound {b:e}")
    });
    ValidationReport {
        count: spec.entries.len(),
        total_multiplicity: spec.entries.iter().map(|e| e.mult as u64).sum(),
        sorted: first_unsorted.is_none(),
        first_unsorted,
        issues,
        growth_constant,
        growth_argmax,
        growth_warning,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geo(length: f64, angles: Vec<f64>) -> PrimeGeodesic {
        PrimeGeodesic { length, angles, mult: 1 }
    }

    #[test]
    fn growth_fit_single_prime() {
        let s = LengthSpectrum::new(1, vec![geo(1.0, vec![0.0])], 1.0).unwrap();
        let r = validate(&s, None);
        assert!((r.growth_constant - (-2.0f64).exp()).abs() < 1e-15);
        assert_eq!(r.growth_argmax, Some(1.0));
        assert!(r.sorted);
    }

    #[test]
    fn unsorted_is_flagged() {
        let s = LengthSpectrum::new(1, vec![geo(2.0, vec![0.0]), geo(1.0, vec![0.0])], 2.0).unwrap();
        let r = validate(&s, Some(1e-9));
        assert!(!r.sorted);
        assert_eq!(r.first_unsorted, Some(2));
        assert!(r.growth_warning.is_some());
        assert!(r.ok());
    }

    #[test]
    fn bad_entries_rejected() {
        assert!(LengthSpectrum::new(1, vec![geo(-1.0, vec![0.0])], 1.0).is_err());
        assert!(matches!(
            LengthSpectrum::new(2, vec![geo(1.0, vec![0.0])], 1.0),
            Err(SpectrumError::Dimension { .. })
        ));
    }
}
