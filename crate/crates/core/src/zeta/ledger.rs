//! Zeros and poles of `Z(s, sigma)` predicted from model spectral data:
//! Laplace and Dirac eigenvalues, scattering poles and the cusp count.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Deserialize;

use super::ZetaError;
use crate::rootdata::{is_w0_fixed, parse_m_weight, weyl_dim, Half, Irrep};
use crate::specfun::c_jl;

/// A point with its order; positive orders are zeros, negative ones poles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Singularity {
    pub location: Complex64,
    pub order: i64,
}

/// A (possibly complex) eigenvalue or pole with a multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
pub struct PoleEntry {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
    pub mult: i64,
}

impl PoleEntry {
    fn point(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// A Dirac eigenvalue `mu != 0` with multiplicity `d(mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
pub struct EigenEntry {
    pub mu: f64,
    pub mult: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    n: Option<usize>,
    sigma: String,
    p: u32,
    #[serde(default = "one")]
    vol: f64,
    #[serde(default)]
    c_gamma: f64,
    #[serde(default)]
    laplace: Vec<PoleEntry>,
    #[serde(default)]
    ms_zero: i64,
    c1: Option<i64>,
    #[serde(default)]
    dirac: Vec<EigenEntry>,
    #[serde(default)]
    beta: Vec<PoleEntry>,
    #[serde(default)]
    eta_sigma: Vec<PoleEntry>,
    #[serde(default)]
    eta_w0sigma: Vec<PoleEntry>,
}

fn one() -> f64 {
    1.0
}

/// Model spectral data for one `sigma`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralModel {
    pub sigma: Irrep,
    /// Nonzero Laplace eigenvalues with graded multiplicity `m_s`.
    pub laplace: Vec<PoleEntry>,
    pub ms_zero: i64,
    pub c1: i64,
    pub dirac: Vec<EigenEntry>,
    pub beta: Vec<PoleEntry>,
    pub eta_sigma: Vec<PoleEntry>,
    pub eta_w0sigma: Vec<PoleEntry>,
    pub cusps: u32,
    pub vol: f64,
    pub c_gamma: f64,
}

impl SpectralModel {
    pub fn empty(sigma: Irrep, cusps: u32) -> Self {
        SpectralModel {
            sigma,
            laplace: Vec::new(),
            ms_zero: 0,
            c1: 0,
            dirac: Vec::new(),
            beta: Vec::new(),
            eta_sigma: Vec::new(),
            eta_w0sigma: Vec::new(),
            cusps,
            vol: 1.0,
            c_gamma: 0.0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, ZetaError> {
        let raw: RawModel = serde_json::from_str(text).map_err(|e| ZetaError::Input(format!("model file: {e}")))?;
        let n = match raw.n {
            Some(n) => n,
            None => raw.sigma.trim_matches(|c| c == '(' || c == ')').split(',').count(),
        };
        let sigma = parse_m_weight(n, &raw.sigma)?;
        if raw.c1.is_some() && !is_w0_fixed(&sigma) {
            return Err(ZetaError::Invariant("c1 is only defined when sigma = w0 sigma".into()));
        }
        Ok(SpectralModel {
            sigma,
            laplace: raw.laplace,
            ms_zero: raw.ms_zero,
            c1: raw.c1.unwrap_or(0),
            dirac: raw.dirac,
            beta: raw.beta,
            eta_sigma: raw.eta_sigma,
            eta_w0sigma: raw.eta_w0sigma,
            cusps: raw.p,
            vol: raw.vol,
            c_gamma: raw.c_gamma,
        })
    }

    fn check(&self) -> Result<(), ZetaError> {
        let fixed = is_w0_fixed(&self.sigma);
        let n = self.sigma.group.n as f64;
        let bad = |msg: String| Err(ZetaError::Invariant(msg));
        if self.cusps == 0 {
            return bad("the cusp count p must be at least 1".into());
        }
        let top = self.cusps as i64 * weyl_dim(&self.sigma) as i64;
        if !(0..=top).contains(&self.c1) {
            return bad(format!("c1 = {} must lie in [0, p dim sigma] = [0, {top}]", self.c1));
        }
        for e in &self.laplace {
            if e.re == 0.0 && e.im == 0.0 {
                return bad("Laplace eigenvalue 0 belongs in ms_zero".into());
            }
        }
        if fixed && !self.dirac.is_empty() {
            return bad("Dirac eigenvalues are only used when sigma != w0 sigma".into());
        }
        for e in &self.dirac {
            if e.mu == 0.0 || !e.mu.is_finite() {
                return bad(format!("Dirac eigenvalue {} must be finite and nonzero", e.mu));
            }
            if e.mult < 1 {
                return bad(format!("Dirac multiplicity at {} must be positive", e.mu));
            }
        }
        for b in &self.beta {
            if b.im != 0.0 || !(b.re > 0.0 && b.re <= n) {
                return bad(format!("beta = {} must lie in (0, {n}]", b.point()));
            }
            if b.mult < 1 {
                return bad(format!("multiplicity of beta = {} must be positive", b.re));
            }
        }
        for e in self.eta_sigma.iter().chain(&self.eta_w0sigma) {
            if !(e.re < 0.0) {
                return bad(format!("eta = {} must have negative real part", e.point()));
            }
            if e.mult < 1 {
                return bad(format!("multiplicity of eta = {} must be positive", e.point()));
            }
        }
        Ok(())
    }
}

/// Sum orders at identical locations, drop zeros, sort by `(re, im)`.
pub fn ledger_merge(items: impl IntoIterator<Item = Singularity>) -> Vec<Singularity> {
    let mut acc: BTreeMap<(u64, u64), (Complex64, i64)> = BTreeMap::new();
    for s in items {
        let z = Complex64::new(s.location.re + 0.0, s.location.im + 0.0);
        let key = (z.re.to_bits(), z.im.to_bits());
        acc.entry(key).or_insert((z, 0)).1 += s.order;
    }
    let mut out: Vec<Singularity> =
        acc.into_values().filter(|(_, o)| *o != 0).map(|(location, order)| Singularity { location, order }).collect();
    out.sort_by(|a, b| a.location.re.total_cmp(&b.location.re).then(a.location.im.total_cmp(&b.location.im)));
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct LedgerReport {
    pub singularities: Vec<Singularity>,
    pub notes: Vec<String>,
}

fn pm_i_sqrt(lambda: Complex64) -> (Complex64, Complex64) {
    let r = lambda.sqrt();
    let plus = Complex64::new(-r.im, r.re);
    (plus, -plus)
}

/// All singularities of `Z(s, sigma)` with topological points down to `-max_depth`.
pub fn singularity_ledger(model: &SpectralModel, max_depth: u32) -> Result<LedgerReport, ZetaError> {
    model.check()?;
    let sigma = &model.sigma;
    let n = sigma.group.n;
    let dim = weyl_dim(sigma) as i64;
    let p = model.cusps as i64;
    let mut raw = Vec::new();
    let mut notes = Vec::new();
    let mut push = |location: Complex64, order: i64| raw.push(Singularity { location, order });

    if is_w0_fixed(sigma) {
        for e in &model.laplace {
            let (a, b) = pm_i_sqrt(e.point());
            push(a, e.mult);
            push(b, e.mult);
        }
        push(Complex64::new(0.0, 0.0), 2 * model.ms_zero - model.c1);
    } else {
        let mut by_abs: BTreeMap<u64, (i64, i64)> = BTreeMap::new();
        for e in &model.dirac {
            let d = by_abs.entry(e.mu.abs().to_bits()).or_default();
            if e.mu > 0.0 {
                d.0 += e.mult;
            } else {
                d.1 += e.mult;
            }
        }
        let mut used = vec![false; model.laplace.len()];
        for (bits, (plus, minus)) in by_abs {
            let mu = f64::from_bits(bits);
            let mut ms = 0;
            for (i, e) in model.laplace.iter().enumerate() {
                if e.im == 0.0 && e.re == mu * mu {
                    ms += e.mult;
                    used[i] = true;
                }
            }
            let up = ms + plus - minus;
            if up.rem_euclid(2) != 0 {
                return Err(ZetaError::Invariant(format!(
                    "parity: m_s({}) + d({mu}) - d(-{mu}) = {up} is odd",
                    mu * mu
                )));
            }
            push(Complex64::new(0.0, mu), up / 2);
            push(Complex64::new(0.0, -mu), (ms + minus - plus) / 2);
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(ZetaError::Invariant(format!(
                "Laplace eigenvalue {} is not the square of a listed Dirac eigenvalue",
                model.laplace[i].point()
            )));
        }
        push(Complex64::new(0.0, 0.0), model.ms_zero);
        notes.push(
            "sigma != w0 sigma: topological orders are taken as stated for Z(s, sigma); the symmetric function carries them with weight eps(sigma) = 2"
                .into(),
        );
    }
    for b in &model.beta {
        push(-b.point(), -b.mult);
    }
    let eta = if n % 2 == 0 { &model.eta_sigma } else { &model.eta_w0sigma };
    for e in eta {
        push(e.point(), e.mult);
    }

    let m0 = sigma.weight.last().abs();
    let depth = Half::from_int(max_depth as i64);
    let mut l = if sigma.weight.is_integral() { m0.max(Half::ONE) } else { m0 };
    while l <= depth {
        push(Complex64::new(-l.to_f64(), 0.0), -p * dim);
        l = l + Half::ONE;
    }
    for c in c_jl(sigma)? {
        if c.l > Half::from_int(0) && c.l <= depth {
            push(Complex64::new(-c.l.to_f64(), 0.0), p * c.value);
        }
    }
    Ok(LedgerReport { singularities: ledger_merge(raw), notes })
}
