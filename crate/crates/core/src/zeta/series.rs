//! Class sums for `log Z`, `log R`, the Euler product for `Z` and the
//! Ruelle-Selberg factorization.

use num_complex::Complex64;
use rayon::prelude::*;

use super::character::{ClassCharacter, SplitCharacter};
use super::{ZetaError, ZetaValue};
use crate::rootdata::{is_w0_fixed, lambda_p_nbar, w0, Irrep};
use crate::spectrum::{
    best_effort_classes, class_iterator, det_factor, prime_tail_bound, tail_bound, ClassTerm, LengthSpectrum,
    TailModel,
};
use crate::summation::tree_sum;

/// Abscissa beyond which a class sum of the given base decay converges.
/// A complete spectrum has finitely many primes and converges for any
/// positive decay.
fn require(spec: &LengthSpectrum, re: f64, manifold: f64, complete: f64, what: &str) -> Result<(), ZetaError> {
    let floor = if spec.is_complete() { complete } else { manifold };
    if re > floor {
        Ok(())
    } else {
        Err(ZetaError::Region(format!("{what} needs Re(s) > {floor}, got {re}")))
    }
}

fn selberg_model(spec: &LengthSpectrum, s: Complex64, weight: f64) -> TailModel {
    TailModel { decay: s.re + spec.n as f64, det_exponent: 2 * spec.n as u32, weight }
}

fn selberg_terms(spec: &LengthSpectrum, s: Complex64, ch: &ClassCharacter, terms: &[ClassTerm]) -> Complex64 {
    let n = spec.n as f64;
    let values: Vec<Complex64> = terms
        .par_iter()
        .map(|t| {
            let k = t.power as f64;
            -(t.prime.mult as f64) * ch.trace(&t.angles()) * (-(s + n) * t.length()).exp() / (k * det_factor(t))
        })
        .collect();
    tree_sum(&values)
}

/// `log Z(s, sigma) = -sum tr sigma(m) exp(-(s + n) l) / (k det(1 - holonomy))`.
pub fn log_selberg(
    s: Complex64,
    ch: &ClassCharacter,
    spec: &LengthSpectrum,
    tail_target: f64,
) -> Result<ZetaValue, ZetaError> {
    let n = spec.n as f64;
    require(spec, s.re, 2.0 * n, -n, "the Selberg zeta function")?;
    let model = selberg_model(spec, s, ch.bound());
    let sel = class_iterator(spec, &model, tail_target)?;
    Ok(ZetaValue { value: selberg_terms(spec, s, ch, &sel.terms), tail_bound: sel.tail_bound, cutoff_used: sel.cutoff })
}

fn exp_value(v: ZetaValue) -> ZetaValue {
    let value = v.value.exp();
    ZetaValue { value, tail_bound: value.norm() * v.tail_bound.exp_m1(), cutoff_used: v.cutoff_used }
}

pub fn selberg_z(s: Complex64, ch: &ClassCharacter, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    log_selberg(s, ch, spec, tail_target).map(exp_value)
}

/// `log S = log Z(sigma) + log Z(w0 sigma)`, or `log Z(sigma)` when `sigma = w0 sigma`.
pub fn log_symmetrized(s: Complex64, sigma: &Irrep, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    let a = log_selberg(s, &ClassCharacter::from_irrep(sigma), spec, tail_target)?;
    if is_w0_fixed(sigma) {
        return Ok(a);
    }
    let b = log_selberg(s, &ClassCharacter::from_irrep(&w0(sigma)), spec, tail_target)?;
    Ok(ZetaValue { value: a.value + b.value, tail_bound: a.tail_bound + b.tail_bound, cutoff_used: a.cutoff_used.max(b.cutoff_used) })
}

/// `log S_a = log Z(sigma) - log Z(w0 sigma)`.
pub fn log_antisymmetric(s: Complex64, sigma: &Irrep, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    let a = log_selberg(s, &ClassCharacter::from_irrep(sigma), spec, tail_target)?;
    let b = log_selberg(s, &ClassCharacter::from_irrep(&w0(sigma)), spec, tail_target)?;
    Ok(ZetaValue { value: a.value - b.value, tail_bound: a.tail_bound + b.tail_bound, cutoff_used: a.cutoff_used.max(b.cutoff_used) })
}

pub fn symmetrized_s(s: Complex64, sigma: &Irrep, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    log_symmetrized(s, sigma, spec, tail_target).map(exp_value)
}

pub fn antisymmetric_sa(s: Complex64, sigma: &Irrep, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    log_antisymmetric(s, sigma, spec, tail_target).map(exp_value)
}

/// `log(1 - x)` accurate for small `|x|`.
fn log_one_minus(x: Complex64) -> Complex64 {
    if x.norm_sqr() < 1e-8 {
        let x2 = x * x;
        -x - x2 * (0.5 + x * (1.0 / 3.0 + x * 0.25))
    } else {
        (1.0 - x).ln()
    }
}

/// Bound for symmetric degrees above `k_max` of one prime. Degree `j`
/// contributes at most `T_j = C(N + j - 1, j) (-log(1 - exp(-(decay + j) l)))`
/// and `T_{j+1} / T_j <= r_j = (N + j) / (j + 1) exp(-l)`, which decreases in
/// `j`; once `r_j < 1` the rest is bounded geometrically.
fn symmetric_tail(length: f64, decay: f64, dim_normal: u64, k_max: u64) -> f64 {
    let n = dim_normal as f64;
    let mut j = k_max + 1;
    let mut binom = (0..j).fold(1.0, |acc, i| acc * (n + i as f64) / (i + 1) as f64);
    let mut acc = 0.0;
    loop {
        let t = binom * -(-(-(decay + j as f64) * length).exp()).ln_1p();
        let ratio = (n + j as f64) / (j + 1) as f64 * (-length).exp();
        if t == 0.0 {
            return acc;
        }
        if ratio < 0.9 {
            return acc + t / (1.0 - ratio);
        }
        acc += t;
        binom *= (n + j as f64) / (j + 1) as f64;
        j += 1;
    }
}

/// `log Z` from the Euler product over primes of length `<= cutoff`, each
/// factor `prod_{j <= k_max} det(1 - sigma(m) (x) S^j(holonomy) exp(-(s + n) l))`
/// expanded into eigenvalues.
pub fn log_selberg_product(
    s: Complex64,
    ch: &ClassCharacter,
    spec: &LengthSpectrum,
    k_max: u32,
    cutoff: f64,
) -> Result<ZetaValue, ZetaError> {
    let n = spec.n as f64;
    require(spec, s.re, 2.0 * n, -n, "the Selberg product")?;
    let primes: Vec<_> = spec.entries.iter().filter(|p| p.length <= cutoff).collect();
    let per_prime: Vec<Complex64> = primes
        .par_iter()
        .map(|p| {
            let base: Vec<Complex64> =
                p.angles.iter().flat_map(|&t| [Complex64::from_polar((-p.length).exp(), t), Complex64::from_polar((-p.length).exp(), -t)]).collect();
            let scale = (-(s + n) * p.length).exp();
            let chars: Vec<(Complex64, f64)> = ch
                .weights()
                .iter()
                .map(|(w, m)| (Complex64::from_polar(1.0, w.iter().zip(&p.angles).map(|(a, b)| a * b).sum::<f64>()) * scale, *m))
                .collect();
            let mut terms = Vec::new();
            let mut monomials = vec![(Complex64::new(1.0, 0.0), 0usize)];
            for degree in 0..=k_max {
                if degree > 0 {
                    let mut next = Vec::with_capacity(monomials.len() * base.len());
                    for &(v, last) in &monomials {
                        for (i, b) in base.iter().enumerate().skip(last) {
                            next.push((v * b, i));
                        }
                    }
                    monomials = next;
                }
                for &(c, m) in &chars {
                    let block: Vec<Complex64> = monomials.iter().map(|&(v, _)| log_one_minus(c * v)).collect();
                    terms.push(tree_sum(&block) * m);
                }
            }
            tree_sum(&terms) * p.mult as f64
        })
        .collect();
    let decay = s.re + n;
    let weight = ch.bound();
    let sym: f64 = primes.iter().map(|p| p.mult as f64 * weight * symmetric_tail(p.length, decay, 2 * spec.n as u64, k_max as u64)).sum();
    let model = selberg_model(spec, s, weight);
    let rest = prime_tail_bound(spec, &model, cutoff);
    let used = primes.iter().map(|p| p.length).fold(0.0, f64::max);
    Ok(ZetaValue { value: tree_sum(&per_prime), tail_bound: sym + rest, cutoff_used: used })
}

/// `log R(s, sigma) = -sum tr sigma(m) exp(-s l) / k`.
pub fn log_ruelle_sigma(s: Complex64, ch: &ClassCharacter, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    require(spec, s.re, 2.0 * spec.n as f64, 0.0, "the Ruelle zeta function")?;
    let model = TailModel { decay: s.re, det_exponent: 0, weight: ch.bound() };
    let sel = class_iterator(spec, &model, tail_target)?;
    Ok(ZetaValue { value: ruelle_terms(s, ch, &sel.terms), tail_bound: sel.tail_bound, cutoff_used: sel.cutoff })
}

fn ruelle_terms(s: Complex64, ch: &ClassCharacter, terms: &[ClassTerm]) -> Complex64 {
    let values: Vec<Complex64> = terms
        .par_iter()
        .map(|t| -(t.prime.mult as f64) * ch.trace(&t.angles()) * (-s * t.length()).exp() / t.power as f64)
        .collect();
    tree_sum(&values)
}

/// `log R(s, tau)` for a representation of the complexified group, whose
/// trace on `m a` is `sum mult exp(l mu_1) exp(i <mu_b, theta>)`.
pub fn log_ruelle_tau(s: Complex64, tau: &SplitCharacter, spec: &LengthSpectrum, tail_target: f64) -> Result<ZetaValue, ZetaError> {
    let top = tau.max_split_weight();
    require(spec, s.re, 2.0 * spec.n as f64 + top, top, "the Ruelle zeta function of a G-representation")?;
    let model = TailModel { decay: s.re - top, det_exponent: 0, weight: tau.bound() };
    let sel = class_iterator(spec, &model, tail_target)?;
    let values: Vec<Complex64> = sel
        .terms
        .par_iter()
        .map(|t| -(t.prime.mult as f64) * tau.trace(t.length(), &t.angles()) * (-s * t.length()).exp() / t.power as f64)
        .collect();
    Ok(ZetaValue { value: tree_sum(&values), tail_bound: sel.tail_bound, cutoff_used: sel.cutoff })
}

/// Both sides of `log R(s, sigma) = sum_p (-1)^p log Z(s + p - n, sigma (x) Lambda^p)`
/// evaluated on one common set of classes.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub discrepancy: f64,
    /// Sum of the certified truncation bounds of all terms.
    pub tail_bound: f64,
    pub cutoff_used: f64,
}

pub fn ruelle_selberg_factorization(
    s: Complex64,
    sigma: &Irrep,
    spec: &LengthSpectrum,
    tail_target: f64,
) -> Result<FactorizationCheck, ZetaError> {
    let n = spec.n;
    require(spec, s.re, 3.0 * n as f64, 0.0, "the Ruelle-Selberg factorization")?;
    let sigma_ch = ClassCharacter::from_irrep(sigma);
    let parts: Vec<ClassCharacter> =
        (0..=2 * n).map(|p| Ok(sigma_ch.tensor(&ClassCharacter::from_virtual(&lambda_p_nbar(n, p)?)))).collect::<Result<_, ZetaError>>()?;
    let widest = parts.iter().map(ClassCharacter::bound).fold(0.0, f64::max);
    let worst = TailModel { decay: s.re, det_exponent: 2 * n as u32, weight: widest };
    let sel = best_effort_classes(spec, &worst, tail_target)?;
    let lhs = ruelle_terms(s, &sigma_ch, &sel.terms);
    let mut bound = tail_bound(spec, &TailModel { decay: s.re, det_exponent: 0, weight: sigma_ch.bound() }, sel.cutoff);
    let mut rhs = Complex64::new(0.0, 0.0);
    for (p, ch) in parts.iter().enumerate() {
        let shifted = s + (p as f64 - n as f64);
        let v = selberg_terms(spec, shifted, ch, &sel.terms);
        rhs += if p % 2 == 0 { v } else { -v };
        bound += tail_bound(spec, &selberg_model(spec, shifted, ch.bound()), sel.cutoff);
    }
    Ok(FactorizationCheck { lhs, rhs, discrepancy: (lhs - rhs).norm(), tail_bound: bound, cutoff_used: sel.cutoff })
}
