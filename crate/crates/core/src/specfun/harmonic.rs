//! Plancherel polynomial, intertwining-operator c-function and the
//! partial-fraction resolvent identity.

use num_complex::Complex64;

use super::gamma::{digamma, is_pole, log_gamma};
use super::omega::shifted_coords;
use super::poly::EvenPolynomial;
use super::SpecfunError;
use crate::rootdata::{branch_k_to_m, Family, GroupDesc, Irrep};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Plancherel density of the principal series through `sigma`, as an even
/// polynomial in `lambda`: `c_norm * prod_alpha <lambda_sigma, alpha> / <rho_G, alpha>`
/// over the positive roots of `D_{n+1}`, with `lambda_sigma = i lambda e_1 + sum (k_j + rho_j) e_j`.
pub fn plancherel_poly(sigma: &Irrep, c_norm: f64) -> EvenPolynomial {
    let n = sigma.group.n;
    let a: Vec<f64> = shifted_coords(sigma).iter().map(|h| h.to_f64()).collect();
    let rho: Vec<f64> = GroupDesc::g(n).rho().to_f64();
    let mut constant = c_norm;
    for i in 0..n {
        for j in i + 1..n {
            constant *= a[i] * a[i] - a[j] * a[j];
        }
    }
    for i in 0..=n {
        for j in i + 1..=n {
            constant /= rho[i] * rho[i] - rho[j] * rho[j];
        }
    }
    let mut p = EvenPolynomial::new(vec![constant]);
    for aj in &a {
        p = p.mul_linear(-1.0, -aj * aj);
    }
    p
}

fn check_pair(sigma: &Irrep, nu: &Irrep) -> Result<(), SpecfunError> {
    if nu.group.family != Family::B || nu.group.n != sigma.group.n {
        return Err(SpecfunError::Domain(format!("{} is not a K-type for n = {}", nu, sigma.group.n)));
    }
    if !branch_k_to_m(nu).iter().any(|s| s.weight == sigma.weight) {
        return Err(SpecfunError::Domain(format!("{} does not contain {}", nu.weight, sigma.weight)));
    }
    Ok(())
}

/// Gamma-function arguments `(numerator, denominator)` of the c-function.
fn gamma_args(sigma: &Irrep, nu: &Irrep, lambda: Complex64) -> (Vec<Complex64>, Vec<Complex64>) {
    let il = I * lambda;
    let a = shifted_coords(sigma);
    let n = sigma.group.n as i64;
    let b: Vec<f64> = nu.weight.to_f64().iter().enumerate().map(|(i, k)| k + (n - 1 - i as i64) as f64).collect();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (aj, bj) in a.iter().zip(&b) {
        num.push(il - aj.to_f64());
        num.push(il + aj.to_f64());
        den.push(il - *bj);
        den.push(il + *bj + 1.0);
    }
    (num, den)
}

/// `log c_nu(sigma : lambda)` as a sum of log-gammas, continuous in `lambda`
/// off the imaginary axis. Add `log alpha(n)` for a non-unit normalization.
pub fn log_c_function(sigma: &Irrep, nu: &Irrep, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    check_pair(sigma, nu)?;
    let (num, den) = gamma_args(sigma, nu, lambda);
    let numerator = num.iter().filter(|z| is_pole(**z)).count();
    let denominator = den.iter().filter(|z| is_pole(**z)).count();
    if numerator + denominator > 0 {
        return Err(SpecfunError::GammaSingular { numerator, denominator });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for z in num {
        acc += log_gamma(z)?;
    }
    for z in den {
        acc -= log_gamma(z)?;
    }
    Ok(acc)
}

pub fn c_function(sigma: &Irrep, nu: &Irrep, lambda: Complex64, alpha: Complex64) -> Result<Complex64, SpecfunError> {
    Ok(alpha * log_c_function(sigma, nu, lambda)?.exp())
}

/// `d/dlambda log c_nu(sigma : lambda)`.
pub fn c_function_logderiv(sigma: &Irrep, nu: &Irrep, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    check_pair(sigma, nu)?;
    let (num, den) = gamma_args(sigma, nu, lambda);
    let mut acc = Complex64::new(0.0, 0.0);
    for z in num {
        acc += digamma(z)?;
    }
    for z in den {
        acc -= digamma(z)?;
    }
    Ok(I * acc)
}

/// Both sides of
/// `sum_i 1/(s_i^2 + z) prod_{i' != i} 1/(s_{i'}^2 - s_i^2) = prod_i 1/(s_i^2 + z)`.
pub fn resolvent_weights(s: &[Complex64], z: Complex64) -> Result<(Complex64, Complex64), SpecfunError> {
    let sq: Vec<Complex64> = s.iter().map(|x| x * x).collect();
    for i in 0..sq.len() {
        for j in i + 1..sq.len() {
            if (sq[i] - sq[j]).norm() <= 1e-14 * (1.0 + sq[i].norm()) {
                return Err(SpecfunError::Degenerate(format!("s_{i}^2 = s_{j}^2")));
            }
        }
        if sq[i] + z == Complex64::new(0.0, 0.0) {
            return Err(SpecfunError::Pole(z));
        }
    }
    let mut lhs = Complex64::new(0.0, 0.0);
    for i in 0..sq.len() {
        let mut term = (sq[i] + z).inv();
        for j in 0..sq.len() {
            if j != i {
                term /= sq[j] - sq[i];
            }
        }
        lhs += term;
    }
    let rhs = sq.iter().fold(Complex64::new(1.0, 0.0), |acc, q| acc / (q + z));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Weight;

    fn m(w: &[i64]) -> Irrep {
        Irrep::new(GroupDesc::m(w.len()), Weight::from_ints(w)).unwrap()
    }

    fn k(w: &[i64]) -> Irrep {
        Irrep::new(GroupDesc::k(w.len()), Weight::from_ints(w)).unwrap()
    }

    #[test]
    fn plancherel_rank_one_trivial() {
        let p = plancherel_poly(&m(&[0]), 1.0);
        assert_eq!(p.coeffs, vec![0.0, -1.0]);
        let q = plancherel_poly(&m(&[2, 1]), 1.0);
        let r = plancherel_poly(&m(&[2, -1]), 1.0);
        assert_eq!(q, r);
        assert_eq!(q.degree(), Some(4));
    }

    #[test]
    fn c_function_rank_one() {
        for kk in 0..4 {
            let s = m(&[kk]);
            let nu = k(&[kk]);
            for lam in [0.3, 1.1, -2.5] {
                let l = Complex64::new(lam, 0.0);
                let v = c_function(&s, &nu, l, Complex64::new(1.0, 0.0)).unwrap();
                let expect = (I * l + kk as f64).inv();
                assert!((v - expect).norm() < 1e-12 * expect.norm());
                let d = c_function_logderiv(&s, &nu, l).unwrap();
                assert!((d + I / (I * l + kk as f64)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn c_function_rejects_missing_k_type() {
        let r = c_function(&m(&[2]), &k(&[1]), Complex64::new(0.5, 0.0), Complex64::new(1.0, 0.0));
        assert!(matches!(r, Err(SpecfunError::Domain(_))));
        let r = c_function(&m(&[0]), &k(&[0]), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        assert!(matches!(r, Err(SpecfunError::GammaSingular { .. })));
    }

    #[test]
    fn resolvent_small() {
        let s = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.5), Complex64::new(0.3, -1.0)];
        let (l, r) = resolvent_weights(&s, Complex64::new(0.7, 0.2)).unwrap();
        assert!((l - r).norm() < 1e-14);
        assert!(resolvent_weights(&[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)], Complex64::new(1.0, 0.0)).is_err());
        let near = Complex64::new(-1.0 + 1e-9, 0.0);
        let (l, r) = resolvent_weights(&s, near).unwrap();
        assert!(l.norm() > 1e7 && ((l - r) / r).norm() < 1e-6);
    }
}
