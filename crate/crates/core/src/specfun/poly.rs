use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Real polynomial in `lambda^2`; `coeffs[k]` multiplies `lambda^(2k)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EvenPolynomial {
    pub coeffs: Vec<f64>,
}

impl EvenPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        EvenPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        EvenPolynomial { coeffs: Vec::new() }
    }

    /// Degree in `lambda`, ignoring trailing zeros; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0.0).map(|k| 2 * k)
    }

    pub fn eval(&self, lambda: Complex64) -> Complex64 {
        let u = lambda * lambda;
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c)
    }

    /// The polynomial `r -> p(i r)`.
    pub fn rotated(&self) -> EvenPolynomial {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c } else { -c }).collect();
        EvenPolynomial { coeffs }
    }

    /// `int_0^s p(r) dr`.
    pub fn integral_from_zero(&self, s: Complex64) -> Complex64 {
        let s2 = s * s;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * s2 + c / (2 * k + 1) as f64;
        }
        acc * s
    }

    /// Multiply by `(a lambda^2 + b)`.
    pub fn mul_linear(&self, a: f64, b: f64) -> EvenPolynomial {
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k] += b * c;
            out[k + 1] += a * c;
        }
        EvenPolynomial { coeffs: out }
    }

    pub fn scale(&self, f: f64) -> EvenPolynomial {
        EvenPolynomial { coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }
}
