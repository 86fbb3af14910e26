//! Reflected Weyl-product ratios `P_j`, the integers `c_{j,l}` and the
//! weighted-orbital-integral function `Omega(sigma, lambda)`.
//!
//! Slots `j` follow the coordinate numbering `2..=n+1` of `M`-weights.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::gamma::{digamma, EULER_GAMMA};
use super::poly::EvenPolynomial;
use super::SpecfunError;
use crate::rootdata::{weyl_dim, Half, Irrep};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `k_j + rho_j` for `j = 2..=n+1`, with `rho_j = n + 1 - j`.
pub fn shifted_coords(sigma: &Irrep) -> Vec<Half> {
    let n = sigma.group.n as i64;
    sigma.weight.coords().iter().enumerate().map(|(i, &k)| k + Half::from_int(n - 1 - i as i64)).collect()
}

fn check_slot(sigma: &Irrep, j: usize) -> Result<usize, SpecfunError> {
    let n = sigma.group.n;
    if j < 2 || j > n + 1 {
        return Err(SpecfunError::Domain(format!("slot {j} outside 2..={}", n + 1)));
    }
    Ok(j - 2)
}

/// `prod_{i<j} (xi_i^2 - xi_j^2)` divided by the same product at `rho_M`.
pub fn pi_ratio(xi: &[Complex64]) -> Complex64 {
    let n = xi.len();
    let mut num = Complex64::new(1.0, 0.0);
    let mut den = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            num *= xi[i] * xi[i] - xi[j] * xi[j];
            let (ri, rj) = ((n - 1 - i) as f64, (n - 1 - j) as f64);
            den *= ri * ri - rj * rj;
        }
    }
    num / den
}

/// `P_j(sigma, lambda)`: the ratio at `lambda_sigma` reflected by `e_1 + e_j`,
/// i.e. with slot `j` replaced by `-i lambda`.
pub fn p_j(sigma: &Irrep, j: usize, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    let slot = check_slot(sigma, j)?;
    let mut xi: Vec<Complex64> = shifted_coords(sigma).iter().map(|h| Complex64::new(h.to_f64(), 0.0)).collect();
    xi[slot] = -I * lambda;
    Ok(pi_ratio(&xi))
}

/// Closed product form
/// `dim sigma * prod_{p != j} (-lambda^2 - a_p^2) / (a_j^2 - a_p^2)`
/// with `a_p = k_p + rho_p`. Agrees with [`p_j`] exactly.
pub fn p_j_closed(sigma: &Irrep, j: usize, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    closed_form(sigma, j, lambda, |a, _k, _rho| a)
}

/// The closed form with `k_p - rho_p` in the denominator, as it is
/// sometimes printed. It only agrees with [`p_j`] in special cases and
/// is kept to document that discrepancy.
pub fn p_j_closed_as_printed(sigma: &Irrep, j: usize, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    closed_form(sigma, j, lambda, |_a, k, rho| k - rho)
}

fn closed_form(
    sigma: &Irrep,
    j: usize,
    lambda: Complex64,
    den_term: impl Fn(f64, f64, f64) -> f64,
) -> Result<Complex64, SpecfunError> {
    let slot = check_slot(sigma, j)?;
    let n = sigma.group.n;
    let a: Vec<f64> = shifted_coords(sigma).iter().map(|h| h.to_f64()).collect();
    let k: Vec<f64> = sigma.weight.to_f64();
    let dim = weyl_dim(sigma) as f64;
    let mut out = Complex64::new(dim, 0.0);
    for p in 0..n {
        if p == slot {
            continue;
        }
        let rho = (n - 1 - p) as f64;
        let d = den_term(a[p], k[p], rho);
        let den = a[slot] * a[slot] - d * d;
        if den == 0.0 {
            return Err(SpecfunError::Degenerate(format!("closed form denominator vanishes at slot {j}, p = {}", p + 2)));
        }
        out *= (-lambda * lambda - a[p] * a[p]) / den;
    }
    Ok(out)
}

/// One integer `c_{j,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cjl {
    pub j: usize,
    pub l: Half,
    pub value: i64,
}

/// `c_{j,l} = P_j(sigma, i l)` for `|k_{n+1}| <= l < |k_j| + rho_j`, steps of one.
pub fn c_jl(sigma: &Irrep) -> Result<Vec<Cjl>, SpecfunError> {
    let n = sigma.group.n;
    let m0 = sigma.weight.last().abs();
    let mut out = Vec::new();
    for j in 2..=n + 1 {
        let slot = j - 2;
        let top = sigma.weight.coords()[slot].abs() + Half::from_int((n - 1 - slot) as i64);
        let mut l = m0;
        while l < top {
            let v = p_j(sigma, j, I * l.to_f64())?;
            let r = v.re.round();
            if (v.re - r).abs() > 1e-8 || v.im.abs() > 1e-8 {
                return Err(SpecfunError::Integrality { j, l: l.to_string(), value: v.re });
            }
            out.push(Cjl { j, l, value: r as i64 });
            l = l + Half::ONE;
        }
    }
    Ok(out)
}

/// `psi(x + i lambda) + psi(x - i lambda)` for real `x`. For nonpositive
/// integer `x` the simple poles at `lambda = 0` cancel and the pair is
/// summed in closed form.
fn psi_pair(x: Half, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    let il = I * lambda;
    match x.as_integer() {
        Some(xi) if xi <= 0 => {
            let m = -xi;
            let mut acc = digamma(1.0 + il)? + digamma(1.0 - il)?;
            for k in 0..m {
                let c = (k - m) as f64;
                let (d1, d2) = (il + c, -il + c);
                if d1 == Complex64::new(0.0, 0.0) || d2 == Complex64::new(0.0, 0.0) {
                    return Err(SpecfunError::Pole(lambda));
                }
                acc -= d1.inv() + d2.inv();
            }
            Ok(acc)
        }
        _ => {
            let xf = x.to_f64();
            Ok(digamma(xf + il)? + digamma(xf - il)?)
        }
    }
}

/// `Omega(sigma, lambda)` from the sum over the roots `e_1 +- e_j`.
pub fn omega_direct(sigma: &Irrep, lambda: Complex64) -> Result<Complex64, SpecfunError> {
    let n = sigma.group.n;
    let dim = weyl_dim(sigma) as f64;
    let a = shifted_coords(sigma);
    let mut acc = Complex64::new(-2.0 * dim * EULER_GAMMA, 0.0);
    for j in 2..=n + 1 {
        let aj = a[j - 2];
        let pj = p_j(sigma, j, lambda)?;
        let s = psi_pair(Half::ONE + aj, lambda)? + psi_pair(Half::ONE - aj, lambda)?;
        acc -= 0.5 * pj * s;
    }
    Ok(acc)
}

fn rational_term(l: f64, lambda: Complex64) -> Complex64 {
    if l == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    2.0 * l / (lambda * lambda + l * l)
}

/// Everything in the decomposed form of `Omega` except `-Q(sigma, lambda)`.
pub fn omega_explicit_part(sigma: &Irrep, cjl: &[Cjl], lambda: Complex64) -> Result<Complex64, SpecfunError> {
    let n = sigma.group.n;
    let dim = weyl_dim(sigma) as f64;
    let m0 = sigma.weight.last().abs();
    let base = if m0.is_integer() { 1.0 } else { 0.5 };
    let il = I * lambda;
    let mut head = 2.0 * EULER_GAMMA + digamma(base + il)? + digamma(base - il)?;
    let mut l = Half::from_doubled(if m0.is_integer() { 2 } else { 1 });
    while l < m0 {
        head += rational_term(l.to_f64(), lambda);
        l = l + Half::ONE;
    }
    let mut acc = -dim * head;
    for c in cjl {
        acc -= c.value as f64 * rational_term(c.l.to_f64(), lambda);
    }
    for j in 2..=n + 1 {
        let slot = j - 2;
        let top = (sigma.weight.coords()[slot].abs() + Half::from_int((n - 1 - slot) as i64)).to_f64();
        if top > 0.0 {
            acc -= dim * top / (top * top + lambda * lambda);
        }
    }
    Ok(acc)
}

/// Decomposed form with explicit rational terms and the polynomial `q`.
pub fn omega_decomposed(sigma: &Irrep, lambda: Complex64, q: &EvenPolynomial) -> Result<Complex64, SpecfunError> {
    let cjl = c_jl(sigma)?;
    Ok(omega_explicit_part(sigma, &cjl, lambda)? - q.eval(lambda))
}

/// Recover the even polynomial `Q(sigma, .)` of degree `<= 2n - 4` from
/// `Omega` by least squares in `lambda^2`. One extra degree is fitted and
/// must vanish.
pub fn extract_q(sigma: &Irrep) -> Result<EvenPolynomial, SpecfunError> {
    let n = sigma.group.n;
    let cjl = c_jl(sigma)?;
    let samples = 2 * n + 8;
    let mut us = Vec::with_capacity(samples);
    let mut qs = Vec::with_capacity(samples);
    let mut scale: f64 = 1.0;
    for i in 0..samples {
        let lam = 0.25 + 1.75 * i as f64 / (samples - 1) as f64;
        let lc = Complex64::new(lam, 0.0);
        let omega = omega_direct(sigma, lc)?;
        let q = omega_explicit_part(sigma, &cjl, lc)? - omega;
        let q_neg = omega_explicit_part(sigma, &cjl, -lc)? - omega_direct(sigma, -lc)?;
        scale = scale.max(omega.norm());
        if (q - q_neg).norm() > 1e-9 * scale || q.im.abs() > 1e-9 * scale {
            return Err(SpecfunError::FitFailure(format!("Q is not real and even at lambda = {lam}")));
        }
        us.push(lam * lam);
        qs.push(q.re);
    }
    let bound = n.saturating_sub(2);
    let tol = 1e-8 * scale;
    if n < 2 {
        if let Some(q) = qs.iter().find(|q| q.abs() > tol) {
            return Err(SpecfunError::FitFailure(format!("Q should vanish for n = {n}, found {q}")));
        }
        return Ok(EvenPolynomial::zero());
    }
    let extra = least_squares(&us, &qs, bound + 2)?;
    let excess = extra[bound + 1];
    if excess.abs() > tol {
        return Err(SpecfunError::FitFailure(format!("coefficient of lambda^{} is {excess}", 2 * bound + 2)));
    }
    let coeffs = least_squares(&us, &qs, bound + 1)?;
    let poly = EvenPolynomial::new(coeffs);
    let resid = us.iter().zip(&qs).map(|(&u, &q)| (poly.eval(Complex64::new(u.sqrt(), 0.0)).re - q).abs()).fold(0.0, f64::max);
    if resid > tol {
        return Err(SpecfunError::FitFailure(format!("residual {resid}")));
    }
    Ok(poly)
}

/// Least-squares fit of `sum_k c_k u^k`, `k < terms`.
fn least_squares(us: &[f64], ys: &[f64], terms: usize) -> Result<Vec<f64>, SpecfunError> {
    let umax = us.iter().cloned().fold(1.0, f64::max);
    let a = DMatrix::from_fn(us.len(), terms, |i, k| (us[i] / umax).powi(k as i32));
    let b = DVector::from_column_slice(ys);
    let svd = a.svd(true, true);
    let x = svd.solve(&b, 1e-14).map_err(|e| SpecfunError::FitFailure(e.to_string()))?;
    Ok((0..terms).map(|k| x[k] / umax.powi(k as i32)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{GroupDesc, Weight};

    fn m(w: &[i64]) -> Irrep {
        Irrep::new(GroupDesc::m(w.len()), Weight::from_ints(w)).unwrap()
    }

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn p_j_examples() {
        let s = m(&[1, 0]);
        for lam in [0.3, 1.7] {
            assert!((p_j(&s, 2, c(lam)).unwrap() - c(-lam * lam)).norm() < 1e-14);
            assert!((p_j(&s, 3, c(lam)).unwrap() - c(4.0 + lam * lam)).norm() < 1e-14);
            let s2 = m(&[2, 1]);
            assert!((p_j(&s2, 2, c(lam)).unwrap() - c(-lam * lam - 1.0)).norm() < 1e-13);
            assert!((p_j_closed(&s2, 2, c(lam)).unwrap() - c(-lam * lam - 1.0)).norm() < 1e-13);
        }
        assert_eq!(p_j(&m(&[3]), 2, c(0.4)).unwrap(), c(1.0));
    }

    #[test]
    fn printed_closed_form_degenerates() {
        let s = m(&[1, 0]);
        assert!(matches!(p_j_closed_as_printed(&s, 3, c(0.5)), Err(SpecfunError::Degenerate(_))));
        assert!((p_j_closed(&s, 3, c(0.5)).unwrap() - c(4.25)).norm() < 1e-14);
        let v = p_j_closed_as_printed(&m(&[3, 1]), 3, c(0.5)).unwrap();
        let w = p_j(&m(&[3, 1]), 3, c(0.5)).unwrap();
        assert!((v.norm() / w.norm() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn c_jl_examples() {
        let v = c_jl(&m(&[1, 0])).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!((v[0].l, v[0].value), (Half::from_int(0), 0));
        assert_eq!((v[1].l, v[1].value), (Half::from_int(1), 1));
        let v = c_jl(&m(&[2, 1])).unwrap();
        assert_eq!(v.iter().map(|c| c.value).collect::<Vec<_>>(), vec![0, 3]);
    }

    #[test]
    fn vanishing_at_last_coordinate() {
        let s = m(&[3, 2, 2]);
        let l = c(0.0) + I * 2.0;
        assert!(p_j(&s, 2, l).unwrap().norm() < 1e-12);
        assert!(p_j(&s, 3, l).unwrap().norm() < 1e-12);
        assert!((p_j(&s, 4, l).unwrap() - c(weyl_dim(&s) as f64)).norm() < 1e-9);
    }

    #[test]
    fn omega_examples() {
        let one = m(&[1]);
        assert!((omega_direct(&one, c(0.0)).unwrap() - c(-1.0)).norm() < 1e-12);
        let triv = m(&[0]);
        for lam in [0.0, 0.7, 3.0] {
            let l = c(lam);
            let expect = -2.0 * EULER_GAMMA - digamma(1.0 + I * l).unwrap() - digamma(1.0 - I * l).unwrap();
            assert!((omega_direct(&triv, l).unwrap() - expect).norm() < 1e-13);
        }
        let q = extract_q(&one).unwrap();
        assert!((omega_decomposed(&one, c(0.0), &q).unwrap() - c(-1.0)).norm() < 1e-12);
    }

    #[test]
    fn q_fit_for_rank_three() {
        let s = m(&[3, 1, -1]);
        let q = extract_q(&s).unwrap();
        assert!(q.coeffs.len() <= 2);
        for lam in [0.11, 0.9, 2.7, 4.3] {
            let d = omega_decomposed(&s, c(lam), &q).unwrap() - omega_direct(&s, c(lam)).unwrap();
            assert!(d.norm() < 1e-8, "{d}");
        }
    }

    #[test]
    fn half_integral_sigma() {
        let s = Irrep::new(GroupDesc::m(2), Weight::from_doubled(&[3, -1])).unwrap();
        let q = extract_q(&s).unwrap();
        for lam in [0.2, 1.3] {
            let d = omega_decomposed(&s, c(lam), &q).unwrap() - omega_direct(&s, c(lam)).unwrap();
            assert!(d.norm() < 1e-9);
        }
    }
}
