use std::f64::consts::PI;

use num_complex::Complex64;

use super::ZetaError;
use crate::rootdata::{is_w0_fixed, weyl_dim, Irrep};
use crate::specfun::{digamma, extract_q, log_gamma, plancherel_poly, EvenPolynomial, EULER_GAMMA};

/// 1 if `sigma = w0 sigma`, otherwise 2.
pub fn epsilon(sigma: &Irrep) -> f64 {
    if is_w0_fixed(sigma) {
        1.0
    } else {
        2.0
    }
}

/// Everything the normalizer needs besides `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct XiData {
    pub eps: f64,
    pub dim: f64,
    pub vol: f64,
    pub cusps: f64,
    /// `eps * dim (C_Gamma - gamma p)`.
    pub c_gamma: f64,
    /// `r -> P_sigma(i r)`.
    pub plancherel: EvenPolynomial,
    /// `r -> Q(sigma, i r)`.
    pub q: EvenPolynomial,
}

impl XiData {
    pub fn new(sigma: &Irrep, vol: f64, cusps: u32, c_gamma_const: f64, c_norm: f64) -> Result<Self, ZetaError> {
        let eps = epsilon(sigma);
        let dim = weyl_dim(sigma) as f64;
        let p = cusps as f64;
        Ok(XiData {
            eps,
            dim,
            vol,
            cusps: p,
            c_gamma: eps * (dim * c_gamma_const - dim * EULER_GAMMA * p),
            plancherel: plancherel_poly(sigma, c_norm).rotated(),
            q: extract_q(sigma)?.rotated(),
        })
    }
}

/// `log` of `exp(2 pi vol eps int_0^s P - eps (p/2) int_0^s Q + s c_Gamma) Gamma(1 + s)^(-p eps dim)`.
pub fn log_xi_normalizer(s: Complex64, d: &XiData) -> Result<Complex64, ZetaError> {
    let lg = log_gamma(s + 1.0)?;
    Ok(2.0 * PI * d.vol * d.eps * d.plancherel.integral_from_zero(s) - d.eps * d.cusps / 2.0 * d.q.integral_from_zero(s)
        + s * d.c_gamma
        - d.cusps * d.eps * d.dim * lg)
}

pub fn log_xi_normalizer_derivative(s: Complex64, d: &XiData) -> Result<Complex64, ZetaError> {
    let psi = digamma(s + 1.0)?;
    Ok(2.0 * PI * d.vol * d.eps * d.plancherel.eval(s) - d.eps * d.cusps / 2.0 * d.q.eval(s) + d.c_gamma
        - d.cusps * d.eps * d.dim * psi)
}

pub fn xi_normalizer(s: Complex64, d: &XiData) -> Result<Complex64, ZetaError> {
    log_xi_normalizer(s, d).map(Complex64::exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{GroupDesc, Weight};

    fn m(w: &[i64]) -> Irrep {
        Irrep::new(GroupDesc::m(w.len()), Weight::from_ints(w)).unwrap()
    }

    #[test]
    fn unit_at_origin() {
        let d = XiData::new(&m(&[2, 1]), 3.0, 2, 0.4, 1.0).unwrap();
        assert!((xi_normalizer(Complex64::new(0.0, 0.0), &d).unwrap() - 1.0).norm() < 1e-15);
        assert_eq!(epsilon(&m(&[1, 1])), 2.0);
        assert_eq!(epsilon(&m(&[1, 0])), 1.0);
    }

    #[test]
    fn derivative_matches_differences() {
        let d = XiData::new(&m(&[3, 1, -1]), 1.7, 3, -0.2, 1.0).unwrap();
        let h = 1e-5;
        for s in [Complex64::new(0.3, 0.2), Complex64::new(2.0, -1.0)] {
            let fd = (log_xi_normalizer(s + h, &d).unwrap() - log_xi_normalizer(s - h, &d).unwrap()) / (2.0 * h);
            let an = log_xi_normalizer_derivative(s, &d).unwrap();
            assert!((fd - an).norm() < 1e-6 * an.norm().max(1.0));
        }
    }

    #[test]
    fn gamma_pole_is_an_error() {
        let d = XiData::new(&m(&[0]), 1.0, 1, 0.0, 1.0).unwrap();
        assert!(log_xi_normalizer(Complex64::new(-2.0, 0.0), &d).is_err());
    }
}
