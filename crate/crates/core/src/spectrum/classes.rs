//! Class terms `(prime, power)`, holonomy data and certified tails.
//!
//! A term of a class sum is bounded by
//! `weight * mult * exp(-decay * k l) / (k (1 - exp(-k l))^det_exponent)`.
//! Missing powers of listed primes are summed geometrically. Primes beyond
//! the completeness cutoff `R` are controlled through the counting bound
//! `N(r) <= C exp(2 n r)` and a Stieltjes integral.

use num_complex::Complex64;

use super::{LengthSpectrum, PrimeGeodesic, SpectrumError};

/// The conjugacy class of the `power`-th iterate of a primitive geodesic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassTerm<'a> {
    pub prime: &'a PrimeGeodesic,
    pub power: u32,
}

impl ClassTerm<'_> {
    pub fn length(&self) -> f64 {
        self.power as f64 * self.prime.length
    }

    pub fn angles(&self) -> Vec<f64> {
        self.prime.angles.iter().map(|t| self.power as f64 * t).collect()
    }
}

/// Eigenvalues `exp(-k l +- i k theta_j)` of the holonomy acting on the
/// `2n`-dimensional normal space.
pub fn holonomy_eigenvalues(term: &ClassTerm) -> Vec<Complex64> {
    let r = (-term.length()).exp();
    term.angles().iter().flat_map(|&t| [Complex64::from_polar(r, t), Complex64::from_polar(r, -t)]).collect()
}

/// `det(1 - holonomy)`.
pub fn det_factor(term: &ClassTerm) -> Complex64 {
    holonomy_eigenvalues(term).iter().map(|z| 1.0 - z).product()
}

/// Parameters of the term bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailModel {
    /// Exponential decay rate in the class length.
    pub decay: f64,
    /// `2n` for sums carrying `1/det(1 - holonomy)`, otherwise 0.
    pub det_exponent: u32,
    /// Upper bound for the modulus of the class character.
    pub weight: f64,
}

/// Classes chosen for a prescribed tail.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassSelection<'a> {
    pub terms: Vec<ClassTerm<'a>>,
    pub tail_bound: f64,
    pub cutoff: f64,
}

fn max_power(length: f64, cutoff: f64) -> u64 {
    if cutoff < length {
        return 0;
    }
    let mut k = (cutoff / length).floor() as u64;
    while (k + 1) as f64 * length <= cutoff {
        k += 1;
    }
    while k > 0 && k as f64 * length > cutoff {
        k -= 1;
    }
    k
}

/// Bound for the powers `k >= k0` of one prime.
fn prime_tail(p: &PrimeGeodesic, k0: u64, m: &TailModel) -> f64 {
    let x = k0 as f64 * p.length;
    let det = (-(-x).exp_m1()).powi(m.det_exponent as i32);
    let geometric = -(-m.decay * p.length).exp_m1();
    p.mult as f64 * m.weight * (-m.decay * x).exp() / (k0 as f64 * det * geometric)
}

/// Bound for every class of every prime longer than the completeness cutoff.
fn unknown_tail(spec: &LengthSpectrum, m: &TailModel) -> f64 {
    let r = spec.completeness_cutoff;
    let c = spec.growth();
    if r == f64::INFINITY || c == 0.0 {
        return 0.0;
    }
    let g = 2.0 * spec.n as f64;
    let det = (-(-r).exp_m1()).powi(m.det_exponent as i32);
    let geometric = -(-m.decay * r).exp_m1();
    m.weight * c * ((g - m.decay) * r).exp() * m.decay / ((m.decay - g) * det * geometric)
}

fn known(spec: &LengthSpectrum) -> impl Iterator<Item = &PrimeGeodesic> {
    spec.entries.iter().filter(move |p| p.length <= spec.completeness_cutoff)
}

fn known_tail(spec: &LengthSpectrum, m: &TailModel, cutoff: f64) -> f64 {
    known(spec).map(|p| prime_tail(p, max_power(p.length, cutoff) + 1, m)).sum()
}

/// Certified bound for the classes of length `> cutoff`.
pub fn tail_bound(spec: &LengthSpectrum, m: &TailModel, cutoff: f64) -> f64 {
    known_tail(spec, m, cutoff) + unknown_tail(spec, m)
}

/// Bound for all classes whose primitive length exceeds `cutoff`.
pub fn prime_tail_bound(spec: &LengthSpectrum, m: &TailModel, cutoff: f64) -> f64 {
    known(spec).filter(|p| p.length > cutoff).map(|p| prime_tail(p, 1, m)).sum::<f64>() + unknown_tail(spec, m)
}

/// All `(prime, power)` with `power * length <= cutoff`, sorted by length.
pub fn classes_up_to(spec: &LengthSpectrum, cutoff: f64) -> Vec<ClassTerm<'_>> {
    let mut out = Vec::new();
    for p in &spec.entries {
        for k in 1..=max_power(p.length, cutoff) {
            out.push(ClassTerm { prime: p, power: k as u32 });
        }
    }
    out.sort_by(|a, b| {
        a.length()
            .total_cmp(&b.length())
            .then_with(|| a.prime.length.total_cmp(&b.prime.length))
            .then_with(|| {
                a.prime.angles.iter().zip(&b.prime.angles).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
            })
            .then_with(|| a.prime.mult.cmp(&b.prime.mult))
    });
    out
}

fn check_region(spec: &LengthSpectrum, m: &TailModel) -> Result<(), SpectrumError> {
    let floor = if spec.is_complete() { 0.0 } else { 2.0 * spec.n as f64 };
    if !(m.decay > floor) {
        return Err(SpectrumError::Convergence(format!("decay rate {} must exceed {floor}", m.decay)));
    }
    Ok(())
}

/// Smallest cutoff whose tail meets `target`, or `None` if even the
/// completeness cutoff does not.
fn minimal_cutoff(spec: &LengthSpectrum, m: &TailModel, target: f64) -> Option<f64> {
    let unknown = unknown_tail(spec, m);
    let bound = |l: f64| known_tail(spec, m, l) + unknown;
    if bound(0.0) <= target {
        return Some(0.0);
    }
    let mut hi = if spec.is_complete() {
        let mut h = spec.entries.iter().map(|p| p.length).fold(f64::INFINITY, f64::min).max(1e-3);
        let mut steps = 0;
        while bound(h) > target {
            h *= 2.0;
            steps += 1;
            if steps > 200 {
                return None;
            }
        }
        h
    } else {
        let r = spec.completeness_cutoff;
        if bound(r) > target {
            return None;
        }
        r
    };
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if bound(mid) <= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

fn selection<'a>(spec: &'a LengthSpectrum, m: &TailModel, cutoff: f64) -> ClassSelection<'a> {
    let terms = classes_up_to(spec, cutoff);
    let cutoff = terms.last().map_or(0.0, |t| t.length());
    ClassSelection { tail_bound: tail_bound(spec, m, cutoff), terms, cutoff }
}

/// Classes with `k l <= L`, where `L` is the smallest cutoff whose
/// certified tail bound is at most `tail_target`.
pub fn class_iterator<'a>(
    spec: &'a LengthSpectrum,
    m: &TailModel,
    tail_target: f64,
) -> Result<ClassSelection<'a>, SpectrumError> {
    check_region(spec, m)?;
    match minimal_cutoff(spec, m, tail_target) {
        Some(l) => Ok(selection(spec, m, l)),
        None => {
            let r = if spec.is_complete() { f64::MAX } else { spec.completeness_cutoff };
            Err(SpectrumError::InsufficientSpectrum { bound: tail_bound(spec, m, r), target: tail_target })
        }
    }
}

/// Like [`class_iterator`], but falls back to every listed class when the
/// target cannot be met; the achieved bound is reported.
pub fn best_effort_classes<'a>(
    spec: &'a LengthSpectrum,
    m: &TailModel,
    tail_target: f64,
) -> Result<ClassSelection<'a>, SpectrumError> {
    check_region(spec, m)?;
    let l = minimal_cutoff(spec, m, tail_target).unwrap_or(spec.completeness_cutoff);
    Ok(selection(spec, m, l))
}
