//! Property suites run by `geoflow verify`. Each property yields one
//! machine-readable result.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::rootdata::{
    branch_k_to_m, casimir_shift, is_w0_fixed, m_coeffs, restrict, split_nu_pm, w0, weight_multiplicities, weyl_dim,
    GroupDesc, Irrep, VirtualRep, Weight,
};
use crate::specfun::{
    c_function_logderiv, c_jl, extract_q, log_c_function, omega_decomposed, omega_direct, p_j, p_j_closed,
    resolvent_weights,
};
use crate::spectrum::{synthesize, LengthSpectrum, PrimeGeodesic};
use crate::summation::tree_sum;
use crate::zeta::{
    log_ruelle_sigma, log_selberg, log_selberg_product, ruelle_selberg_factorization, singularity_ledger,
    ClassCharacter, EigenEntry, PoleEntry, SpectralModel,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub property: &'static str,
    pub pass: bool,
    pub cases: usize,
    /// Largest observed error, 0 for exact checks.
    pub worst: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct VerifyOptions {
    /// Restrict rank-dependent checks to one `n`.
    pub n: Option<usize>,
    pub seed: u64,
    /// Flip one sign in every suite; the suites must then fail.
    pub inject_fault: bool,
}

impl VerifyOptions {
    fn ranks(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    fn sign(&self) -> f64 {
        if self.inject_fault {
            -1.0
        } else {
            1.0
        }
    }
}

/// Dominant `M`-weights with entries of modulus `<= max_entry`, integral
/// and half-integral.
pub fn m_weights(n: usize, max_entry: i64) -> Vec<Irrep> {
    let g = GroupDesc::m(n);
    let mut out = Vec::new();
    for parity in [0, 1] {
        let range: Vec<i64> = (-2 * max_entry..=2 * max_entry).filter(|d| d.rem_euclid(2) == parity).collect();
        let mut stack = vec![Vec::new()];
        while let Some(v) = stack.pop() {
            if v.len() == n {
                let w = Weight::from_doubled(&v);
                if g.is_dominant(&w) {
                    out.push(Irrep { group: g, weight: w });
                }
                continue;
            }
            for &d in &range {
                let mut next = v.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    out
}

/// Dominant weights of a `B`-type group with entries `<= max_entry`.
pub fn k_weights(n: usize, max_entry: i64) -> Vec<Irrep> {
    let g = GroupDesc::k(n);
    m_weights(n, max_entry)
        .into_iter()
        .filter_map(|s| {
            let w = s.weight;
            g.is_dominant(&w).then_some(Irrep { group: g, weight: w })
        })
        .collect()
}

struct Tally {
    suite: &'static str,
    property: &'static str,
    cases: usize,
    worst: f64,
    tolerance: f64,
    failure: Option<String>,
}

impl Tally {
    fn new(suite: &'static str, property: &'static str, tolerance: f64) -> Self {
        Tally { suite, property, cases: 0, worst: 0.0, tolerance, failure: None }
    }

    fn error(&mut self, err: f64, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !(err <= self.worst) {
            self.worst = if err.is_nan() { f64::INFINITY } else { err };
        }
        if !(err <= self.tolerance) && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn exact(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.error(if ok { 0.0 } else { 1.0 }, what);
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.worst = f64::INFINITY;
        self.failure.get_or_insert(what);
    }

    fn done(self) -> PropertyResult {
        PropertyResult {
            suite: self.suite,
            property: self.property,
            pass: self.failure.is_none() && self.cases > 0,
            cases: self.cases,
            worst: self.worst,
            tolerance: self.tolerance,
            detail: self.failure.unwrap_or_default(),
        }
    }
}

fn random_angles(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-2.0 * std::f64::consts::TAU..2.0 * std::f64::consts::TAU)).collect()
}

/// `sum m_nu char(nu) = char(sigma) (+ char(w0 sigma))` on random points of
/// the common maximal torus of `K` and `M`. The `K`-characters come from
/// their own weight tables, so the branching rule is not used.
pub fn character_identity(sigma: &Irrep, points: usize, rng: &mut ChaCha8Rng, fault: f64) -> Result<f64, String> {
    let m = m_coeffs(sigma).map_err(|e| e.to_string())?;
    let k_tables: Vec<_> = m.irreps().map(|(nu, c)| (weight_multiplicities(&nu), c as f64)).collect();
    let n = sigma.group.n;
    let partner = (!is_w0_fixed(sigma)).then(|| weight_multiplicities(&w0(sigma)));
    let table = weight_multiplicities(sigma);
    let mut worst: f64 = 0.0;
    for _ in 0..points {
        let t = random_angles(rng, n);
        let mut target = table.character(&t);
        if let Some(p) = &partner {
            target += fault * p.character(&t);
        } else if fault < 0.0 {
            target = -target;
        }
        let lhs: Complex64 = k_tables.iter().map(|(tab, c)| tab.character(&t) * c).sum();
        let scale = k_tables.iter().map(|(tab, c)| tab.dim() as f64 * c.abs()).sum::<f64>().max(1.0);
        worst = worst.max((lhs - target).norm() / scale);
    }
    Ok(worst)
}

pub fn rep_suite(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let ranks = opts.ranks(&[1, 2, 3]);
    let corpus: Vec<Irrep> = ranks.iter().flat_map(|&n| m_weights(n, if n < 3 { 3 } else { 2 })).collect();
    let s = opts.sign();
    let mut out = Vec::new();

    let mut t = Tally::new("rep", "character_identity", 1e-9);
    for sigma in &corpus {
        match character_identity(sigma, 50, &mut rng, s) {
            Ok(e) => t.error(e, || format!("sigma = {}", sigma.weight)),
            Err(e) => t.fail(format!("sigma = {}: {e}", sigma.weight)),
        }
    }
    out.push(t.done());

    let mut t = Tally::new("rep", "weyl_dim_equals_multiplicity_sum", 0.0);
    let k_corpus: Vec<Irrep> = ranks.iter().flat_map(|&n| k_weights(n, 3)).collect();
    for irrep in corpus.iter().chain(&k_corpus) {
        let d = weyl_dim(irrep) as i64;
        let sum = weight_multiplicities(irrep).dim() as i64;
        t.exact(d == sum * s as i64, || format!("{}: weyl {d}, multiplicities {sum}", irrep.weight));
    }
    out.push(t.done());

    let mut t = Tally::new("rep", "w0_involution_and_casimir", 0.0);
    for sigma in &corpus {
        let back = w0(&w0(sigma));
        let shift = casimir_shift(sigma) * s as i64;
        t.exact(back == *sigma && casimir_shift(&w0(sigma)) == shift, || format!("sigma = {}", sigma.weight));
    }
    out.push(t.done());

    let mut t = Tally::new("rep", "branching_dimensions", 0.0);
    for nu in &k_corpus {
        let parts = branch_k_to_m(nu);
        let total: i64 = parts.iter().map(|p| weyl_dim(p) as i64).sum();
        let mut ws: Vec<_> = parts.iter().map(|p| p.weight.clone()).collect();
        ws.sort();
        ws.dedup();
        let ok = total * s as i64 == weyl_dim(nu) as i64 && ws.len() == parts.len();
        t.exact(ok, || format!("nu = {}: restricted dimension {total}", nu.weight));
    }
    out.push(t.done());

    let mut t = Tally::new("rep", "m_coefficients_in_unit_range", 0.0);
    for sigma in &corpus {
        match m_coeffs(sigma) {
            Ok(m) => t.exact(m.irreps().all(|(_, c)| (-1..=1).contains(&(c * s as i64)) && (s > 0.0 || c != 1)), || {
                format!("sigma = {}: {m}", sigma.weight)
            }),
            Err(e) => t.fail(format!("sigma = {}: {e}", sigma.weight)),
        }
    }
    out.push(t.done());

    let mut t = Tally::new("rep", "spin_split_restriction", 0.0);
    for sigma in corpus.iter().filter(|x| x.weight.last().doubled() > 0) {
        match split_nu_pm(sigma) {
            Ok((plus, minus)) => {
                let mut lhs = restrict(&plus);
                lhs.add_scaled(&restrict(&minus), -(s as i64));
                let mut rhs = VirtualRep::from_irrep(sigma);
                rhs.add_term(&w0(sigma).weight, 1);
                t.exact(lhs == rhs, || format!("sigma = {}: {lhs} vs {rhs}", sigma.weight));
            }
            Err(e) => t.fail(format!("sigma = {}: {e}", sigma.weight)),
        }
    }
    out.push(t.done());
    out
}

fn generic_lambdas(rng: &mut ChaCha8Rng, count: usize) -> Vec<Complex64> {
    (0..count).map(|_| Complex64::new(rng.random_range(0.1..3.0), rng.random_range(-0.5..0.5))).collect()
}

pub fn specfun_suite(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let ranks = opts.ranks(&[1, 2, 3]);
    let s = opts.sign();
    let mut out = Vec::new();

    let mut t = Tally::new("specfun", "c_jl_integrality", 1e-8);
    for &n in ranks.iter().filter(|&&n| n >= 2) {
        for sigma in m_weights(n, 4).iter().filter(|x| x.weight.is_integral()) {
            match c_jl(sigma) {
                Ok(cs) => {
                    for c in cs {
                        let v = p_j(sigma, c.j, Complex64::new(0.0, c.l.to_f64())).map(|v| v.re + (1.0 - s) / 4.0).unwrap_or(f64::NAN);
                        t.error((v - v.round()).abs(), || format!("sigma = {}, j = {}, l = {}: {v}", sigma.weight, c.j, c.l));
                    }
                }
                Err(e) => t.fail(format!("sigma = {}: {e}", sigma.weight)),
            }
        }
    }
    out.push(t.done());

    let mut t = Tally::new("specfun", "omega_reconstruction", 1e-8);
    for &n in &ranks {
        for sigma in m_weights(n, 2) {
            let q = match extract_q(&sigma) {
                Ok(q) => q,
                Err(e) => {
                    t.fail(format!("sigma = {}: {e}", sigma.weight));
                    continue;
                }
            };
            if q.degree().is_some_and(|d| d + 4 > 2 * n) {
                t.fail(format!("sigma = {}: Q has degree {:?}", sigma.weight, q.degree()));
            }
            for lam in generic_lambdas(&mut rng, 20) {
                let direct = omega_direct(&sigma, lam);
                let dec = omega_decomposed(&sigma, lam, &q).map(|v| v * s);
                let flipped = omega_direct(&w0(&sigma), lam);
                match (direct, dec, flipped) {
                    (Ok(a), Ok(b), Ok(c)) => {
                        let scale = a.norm().max(1.0);
                        t.error((a - b).norm().max((a - c).norm() * 100.0) / scale, || {
                            format!("sigma = {}, lambda = {lam}: {a} vs {b}", sigma.weight)
                        })
                    }
                    (a, b, c) => t.fail(format!("sigma = {}: {:?} {:?} {:?}", sigma.weight, a.err(), b.err(), c.err())),
                }
            }
        }
    }
    out.push(t.done());

    let mut t = Tally::new("specfun", "p_j_closed_form", 1e-10);
    for &n in &ranks {
        for sigma in m_weights(n, 2) {
            for lam in generic_lambdas(&mut rng, 10) {
                for j in 2..=n + 1 {
                    match (p_j(&sigma, j, lam), p_j_closed(&sigma, j, lam)) {
                        (Ok(a), Ok(b)) => t.error((a - s * b).norm() / a.norm().max(1.0), || {
                            format!("sigma = {}, j = {j}, lambda = {lam}: {a} vs {b}", sigma.weight)
                        }),
                        (a, b) => t.fail(format!("sigma = {}: {:?} {:?}", sigma.weight, a.err(), b.err())),
                    }
                }
            }
        }
    }
    out.push(t.done());

    let mut t = Tally::new("specfun", "c_function_log_derivative", 1e-6);
    let h = 1e-5;
    for &n in &ranks {
        let sigmas = m_weights(n, 2);
        let mut cases = 0;
        while cases < 20 {
            let sigma = &sigmas[rng.random_range(0..sigmas.len())];
            let nus: Vec<Irrep> = k_weights(n, 3)
                .into_iter()
                .filter(|nu| branch_k_to_m(nu).iter().any(|x| x.weight == sigma.weight))
                .collect();
            if nus.is_empty() {
                continue;
            }
            let nu = &nus[rng.random_range(0..nus.len())];
            let lam = Complex64::new(rng.random_range(0.2..2.5), rng.random_range(-0.4..0.4));
            let f = |x| log_c_function(sigma, nu, x);
            match (f(lam + h), f(lam - h), c_function_logderiv(sigma, nu, lam)) {
                (Ok(a), Ok(b), Ok(d)) => {
                    let fd = (a - b) / (2.0 * h);
                    t.error((fd - s * d).norm() / d.norm().max(1.0), || {
                        format!("sigma = {}, nu = {}, lambda = {lam}", sigma.weight, nu.weight)
                    });
                }
                (a, b, d) => t.fail(format!("{:?} {:?} {:?}", a.err(), b.err(), d.err())),
            }
            cases += 1;
        }
    }
    out.push(t.done());

    let mut t = Tally::new("specfun", "c_function_rank_one", 1e-12);
    for k in 0..4 {
        let sigma = Irrep { group: GroupDesc::m(1), weight: Weight::from_ints(&[k]) };
        let nu = Irrep { group: GroupDesc::k(1), weight: Weight::from_ints(&[k]) };
        for lam in generic_lambdas(&mut rng, 5) {
            let expect = (Complex64::i() * lam + k as f64).inv();
            match log_c_function(&sigma, &nu, lam) {
                Ok(v) => t.error((v.exp() - s * expect).norm() / expect.norm(), || format!("k = {k}, lambda = {lam}")),
                Err(e) => t.fail(e.to_string()),
            }
        }
    }
    out.push(t.done());

    let mut t = Tally::new("specfun", "resolvent_identity", 1e-10);
    for _ in 0..100 {
        let count = rng.random_range(1..=6);
        let pts: Vec<Complex64> =
            (0..count).map(|_| Complex64::new(rng.random_range(0.2..3.0), rng.random_range(-3.0..3.0))).collect();
        let z = Complex64::new(rng.random_range(0.0..4.0), rng.random_range(-2.0..2.0));
        match resolvent_weights(&pts, z) {
            Ok((l, r)) => t.error((l - s * r).norm() / r.norm().max(1e-300), || format!("points {pts:?}, z = {z}")),
            Err(e) => t.fail(e.to_string()),
        }
    }
    out.push(t.done());
    out
}

fn one_geodesic() -> LengthSpectrum {
    LengthSpectrum::new(1, vec![PrimeGeodesic { length: 1.0, angles: vec![0.0], mult: 1 }], f64::INFINITY)
        .expect("valid spectrum")
}

/// Random model satisfying every invariant checked by the ledger.
pub fn random_model(rng: &mut ChaCha8Rng) -> SpectralModel {
    let n = rng.random_range(1..=3);
    let mut w: Vec<i64> = (0..n).map(|_| rng.random_range(0..4)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    if rng.random_bool(0.6) && w[n - 1] == 0 {
        w[n - 1] = 1;
        w.sort_unstable_by(|a, b| b.cmp(a));
    }
    if rng.random_bool(0.5) {
        w[n - 1] = -w[n - 1];
    }
    let sigma = Irrep::new(GroupDesc::m(n), Weight::from_ints(&w)).expect("dominant");
    let cusps = rng.random_range(1..=3);
    let mut m = SpectralModel::empty(sigma.clone(), cusps);
    m.ms_zero = rng.random_range(0..3);
    if is_w0_fixed(&sigma) {
        m.c1 = rng.random_range(0..=cusps as i64 * weyl_dim(&sigma) as i64);
        for _ in 0..rng.random_range(0..5) {
            let re = rng.random_range(-1.0..6.0);
            m.laplace.push(PoleEntry { re: if re == 0.0 { 1.0 } else { re }, im: 0.0, mult: rng.random_range(1..4) });
        }
    } else {
        for _ in 0..rng.random_range(0..5) {
            let mu = (rng.random_range(1..40) as f64) / 8.0;
            let plus = rng.random_range(0..4);
            let minus = rng.random_range(0..4);
            if plus > 0 {
                m.dirac.push(EigenEntry { mu, mult: plus });
            }
            if minus > 0 {
                m.dirac.push(EigenEntry { mu: -mu, mult: minus });
            }
            if plus + minus == 0 {
                continue;
            }
            let base = rng.random_range(0..3);
            m.laplace.push(PoleEntry { re: mu * mu, im: 0.0, mult: 2 * base + (plus + minus) % 2 });
        }
    }
    for _ in 0..rng.random_range(0..3) {
        m.beta.push(PoleEntry { re: rng.random_range(1..=4 * n) as f64 / 4.0, im: 0.0, mult: rng.random_range(1..3) });
    }
    for _ in 0..rng.random_range(0..3) {
        let e = PoleEntry { re: -rng.random_range(0.1..3.0), im: rng.random_range(-2.0..2.0), mult: rng.random_range(1..3) };
        if rng.random_bool(0.5) {
            m.eta_sigma.push(e);
        } else {
            m.eta_w0sigma.push(e);
        }
    }
    m
}

pub fn zeta_suite(opts: &VerifyOptions) -> Vec<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x2e7a);
    let ranks = opts.ranks(&[1, 2]);
    let s = opts.sign();
    let mut out = Vec::new();

    let mut t = Tally::new("zeta", "series_matches_product", 0.0);
    for &n in &ranks {
        let (count, k_max) = if n == 1 { (200, 60) } else { (60, 24) };
        let spec = match synthesize(n, count, opts.seed + n as u64, 0.1) {
            Ok(x) => x,
            Err(e) => {
                t.fail(e.to_string());
                continue;
            }
        };
        let trivial = Irrep::trivial(GroupDesc::m(n));
        let ch = ClassCharacter::from_irrep(&trivial);
        let z = Complex64::new(2.0 * n as f64 + 2.0, 0.7);
        match (log_selberg(z, &ch, &spec, 1e-10), log_selberg_product(z, &ch, &spec, k_max, spec.completeness_cutoff)) {
            (Ok(a), Ok(b)) => {
                let slack = a.tail_bound + b.tail_bound + 1e-12 * a.value.norm().max(1.0);
                t.error(((a.value - s * b.value).norm() - slack).max(0.0), || {
                    format!("n = {n}: {} vs {} (bounds {:e}, {:e})", a.value, b.value, a.tail_bound, b.tail_bound)
                });
            }
            (a, b) => t.fail(format!("n = {n}: {:?} {:?}", a.err(), b.err())),
        }
    }
    out.push(t.done());

    let mut t = Tally::new("zeta", "one_geodesic_ruelle", 1e-12);
    let spec = one_geodesic();
    let ch = ClassCharacter::from_irrep(&Irrep::trivial(GroupDesc::m(1)));
    for z in [Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0), Complex64::new(5.0, 2.0)] {
        match log_ruelle_sigma(z, &ch, &spec, 1e-15) {
            Ok(v) => t.error((v.value.exp() - s * (1.0 - (-z).exp())).norm(), || format!("s = {z}")),
            Err(e) => t.fail(e.to_string()),
        }
    }
    out.push(t.done());

    let mut t = Tally::new("zeta", "ruelle_selberg_factorization", 1e-9);
    for &n in &ranks {
        let spec = match synthesize(n, if n == 1 { 200 } else { 60 }, opts.seed + 10 + n as u64, 0.1) {
            Ok(x) => x,
            Err(e) => {
                t.fail(e.to_string());
                continue;
            }
        };
        let sigmas: Vec<&[i64]> = if n == 1 { vec![&[0], &[1]] } else { vec![&[0, 0], &[1, 0], &[1, 1]] };
        for w in sigmas {
            let sigma = Irrep::new(GroupDesc::m(n), Weight::from_ints(w)).expect("dominant");
            let z = Complex64::new(3.0 * n as f64 + 2.0, 0.4);
            match ruelle_selberg_factorization(z, &sigma, &spec, 1e-12) {
                Ok(f) => t.error((f.lhs - s * f.rhs).norm(), || format!("sigma = {}: {} vs {}", sigma.weight, f.lhs, f.rhs)),
                Err(e) => t.fail(format!("sigma = {}: {e}", sigma.weight)),
            }
        }
    }
    out.push(t.done());

    let mut t = Tally::new("zeta", "ledger_dirac_pairs", 0.0);
    for _ in 0..100 {
        let m = random_model(&mut rng);
        let report = match singularity_ledger(&m, 4) {
            Ok(r) => r,
            Err(e) => {
                t.fail(e.to_string());
                continue;
            }
        };
        let order_at = |z: Complex64| report.singularities.iter().find(|x| x.location == z).map_or(0, |x| x.order);
        let mut mus: Vec<f64> = m.dirac.iter().map(|d| d.mu.abs()).collect();
        mus.dedup();
        for mu in mus {
            let ms: i64 = m.laplace.iter().filter(|e| e.re == mu * mu).map(|e| e.mult).sum();
            let sum = order_at(Complex64::new(0.0, mu)) + (s as i64) * order_at(Complex64::new(0.0, -mu));
            let shared = m.beta.iter().chain(&m.eta_sigma).chain(&m.eta_w0sigma).any(|b| b.re == 0.0);
            t.exact(shared || sum == ms, || format!("mu = {mu}: orders sum to {sum}, m_s = {ms}"));
        }
        t.exact(report.singularities.iter().all(|x| x.order != 0), || "zero order after merge".into());
    }
    let mut bad = random_model(&mut rng);
    while is_w0_fixed(&bad.sigma) {
        bad = random_model(&mut rng);
    }
    bad.dirac = vec![EigenEntry { mu: 1.0, mult: 1 }];
    bad.laplace = vec![PoleEntry { re: 1.0, im: 0.0, mult: 2 }];
    t.exact(singularity_ledger(&bad, 0).is_err() == (s > 0.0), || "odd parity model accepted".into());
    out.push(t.done());

    let mut t = Tally::new("zeta", "virtual_linearity", 0.0);
    let spec = synthesize(1, 100, opts.seed + 20, 0.1).expect("valid parameters");
    let a = Irrep::new(GroupDesc::m(1), Weight::from_ints(&[1])).expect("dominant");
    let b = Irrep::new(GroupDesc::m(1), Weight::from_ints(&[2])).expect("dominant");
    let mut v = VirtualRep::from_irrep(&a);
    v.add_term(&b.weight, -3);
    let z = Complex64::new(4.0, 1.0);
    let eval = |ch: &ClassCharacter| log_selberg(z, ch, &spec, 1e-10);
    match (eval(&ClassCharacter::from_virtual(&v)), eval(&ClassCharacter::from_irrep(&a)), eval(&ClassCharacter::from_irrep(&b))) {
        (Ok(whole), Ok(x), Ok(y)) => {
            let slack = whole.tail_bound + x.tail_bound + 3.0 * y.tail_bound + 1e-14;
            let parts = x.value - 3.0 * s * y.value;
            t.error(((whole.value - parts).norm() - slack).max(0.0), || format!("{} vs {parts}", whole.value));
        }
        (x, y, w) => t.fail(format!("{:?} {:?} {:?}", x.err(), y.err(), w.err())),
    }
    out.push(t.done());

    let mut t = Tally::new("zeta", "deterministic_reduction", 0.0);
    let xs: Vec<Complex64> = (0..50_000).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    let sums: Vec<Complex64> = [1, 2, 8]
        .iter()
        .filter_map(|&k| rayon::ThreadPoolBuilder::new().num_threads(k).build().ok().map(|p| p.install(|| tree_sum(&xs))))
        .collect();
    let reference = sums.first().map(|x| x * s);
    t.exact(
        sums.len() == 3
            && reference.is_some_and(|r| sums.iter().all(|x| x.re.to_bits() == r.re.to_bits() && x.im.to_bits() == r.im.to_bits())),
        || format!("sums differ: {sums:?}"),
    );
    out.push(t.done());
    out
}

pub fn run(suite: &str, opts: &VerifyOptions) -> Option<Vec<PropertyResult>> {
    Some(match suite {
        "rep" => rep_suite(opts),
        "specfun" => specfun_suite(opts),
        "zeta" => zeta_suite(opts),
        "all" => {
            let mut v = rep_suite(opts);
            v.extend(specfun_suite(opts));
            v.extend(zeta_suite(opts));
            v
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        assert_eq!(m_weights(1, 1).len(), 5);
        assert!(m_weights(2, 1).iter().all(|s| s.group.is_dominant(&s.weight)));
        assert!(k_weights(2, 1).iter().all(|s| s.weight.coords().iter().all(|c| c.doubled() >= 0)));
    }

    #[test]
    fn faults_are_detected() {
        let opts = VerifyOptions { n: Some(1), seed: 3, inject_fault: true };
        for r in rep_suite(&opts).into_iter().chain(zeta_suite(&opts)) {
            assert!(!r.pass, "{} passed under an injected fault", r.property);
        }
    }
}
