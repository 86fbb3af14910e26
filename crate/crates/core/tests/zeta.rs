use geoflow::rootdata::{is_w0_fixed, w0, GroupDesc, Irrep, VirtualRep, Weight};
use geoflow::spectrum::{synthesize, LengthSpectrum, PrimeGeodesic};
use geoflow::zeta::{
    antisymmetric_sa, epsilon, grid, ledger_merge, log_ruelle_sigma, log_ruelle_tau, log_selberg,
    log_selberg_product, log_xi_normalizer, log_xi_normalizer_derivative, ruelle_selberg_factorization, scan,
    selberg_z, singularity_ledger, symmetrized_s, xi_normalizer, ClassCharacter, EigenEntry, PoleEntry, Singularity,
    SpectralModel, SplitCharacter, ZetaError, XiData,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn m(w: &[i64]) -> Irrep {
    Irrep::new(GroupDesc::m(w.len()), Weight::from_ints(w)).unwrap()
}

fn ch(w: &[i64]) -> ClassCharacter {
    ClassCharacter::from_irrep(&m(w))
}

fn one_prime(angle: f64) -> LengthSpectrum {
    LengthSpectrum::new(1, vec![PrimeGeodesic { length: 1.0, angles: vec![angle], mult: 1 }], f64::INFINITY).unwrap()
}

#[test]
fn empty_spectrum() {
    let e = LengthSpectrum::empty(1);
    let v = log_selberg(c(3.0, 0.0), &ch(&[0]), &e, 1e-12).unwrap();
    assert_eq!((v.value, v.tail_bound), (c(0.0, 0.0), 0.0));
    assert_eq!(selberg_z(c(3.0, 1.0), &ch(&[2]), &e, 1e-12).unwrap().value, c(1.0, 0.0));
    assert_eq!(log_selberg_product(c(3.0, 0.0), &ch(&[0]), &e, 10, 5.0).unwrap().value, c(0.0, 0.0));
    assert_eq!(log_ruelle_sigma(c(3.0, 0.0), &ch(&[0]), &e, 1e-12).unwrap().value, c(0.0, 0.0));
}

#[test]
fn one_prime_selberg_series() {
    let spec = one_prime(0.0);
    let first = -(-4.0f64).exp() / (1.0 - (-1.0f64).exp()).powi(2);
    assert!((first + 0.0458378).abs() < 1e-6);
    let mut oracle = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        oracle -= (-4.0 * kf).exp() / (kf * (1.0 - (-kf).exp()).powi(2));
    }
    let v = log_selberg(c(3.0, 0.0), &ch(&[0]), &spec, 1e-14).unwrap();
    assert!((v.value.re - oracle).abs() <= 1e-14 + v.tail_bound);
    assert!(v.value.im == 0.0);
}

#[test]
fn conjugation_symmetry() {
    let spec = synthesize(1, 200, 5, 0.05).unwrap();
    let s = c(3.5, 1.25);
    for w in [[0], [1], [3]] {
        let sigma = ClassCharacter::from_virtual(&{
            let mut v = VirtualRep::from_irrep(&m(&w));
            if w[0] != 0 {
                v.add_term(&Weight::from_ints(&[-w[0]]), 1);
            }
            v
        });
        let a = log_selberg(s, &sigma, &spec, 1e-6).unwrap();
        let b = log_selberg(s.conj(), &sigma, &spec, 1e-6).unwrap();
        assert!((a.value - b.value.conj()).norm() <= 1e-13);
    }
}

#[test]
fn symmetrized_and_antisymmetric() {
    let spec = synthesize(2, 150, 3, 0.05).unwrap();
    let s = c(6.0, 0.5);
    let sa = antisymmetric_sa(s, &m(&[1, 0]), &spec, 1e-12).unwrap();
    assert!((sa.value - 1.0).norm() < 1e-15);

    let sigma = m(&[1, 1]);
    let z = selberg_z(s, &ClassCharacter::from_irrep(&sigma), &spec, 1e-12).unwrap();
    let sym = symmetrized_s(s, &sigma, &spec, 1e-12).unwrap();
    let anti = antisymmetric_sa(s, &sigma, &spec, 1e-12).unwrap();
    assert!((sym.value * anti.value - z.value * z.value).norm() < 1e-10);

    let real = symmetrized_s(c(6.5, 0.0), &sigma, &spec, 1e-12).unwrap();
    assert!(real.value.im.abs() < 1e-14);
    let far = selberg_z(c(60.0, 0.0), &ClassCharacter::from_irrep(&sigma), &spec, 1e-12).unwrap();
    assert!((far.value - 1.0).norm() < 1e-12);
}

#[test]
fn product_matches_series_on_one_prime() {
    let spec = one_prime(0.7);
    let s = c(4.0, 0.0);
    let series = log_selberg(s, &ch(&[0]), &spec, 1e-14).unwrap();
    let product = log_selberg_product(s, &ch(&[0]), &spec, 60, 10.0).unwrap();
    assert!((series.value - product.value).norm() <= 1e-10);
    assert!((series.value - product.value).norm() <= series.tail_bound + product.tail_bound + 1e-13);
}

#[test]
fn product_increases_with_degree() {
    // zero holonomy makes every omitted factor log(1 - x) with 0 < x < 1
    let mut spec = synthesize(1, 40, 7, 0.1).unwrap();
    spec.entries.iter_mut().for_each(|e| e.angles = vec![0.0]);
    let s = c(3.0, 0.0);
    let mut last = f64::INFINITY;
    for k_max in 0..12 {
        let z = log_selberg_product(s, &ch(&[0]), &spec, k_max, 100.0).unwrap().value;
        assert!(z.re <= last + 1e-15, "k_max = {k_max}");
        last = z.re;
    }
}

#[test]
fn one_geodesic_ruelle() {
    let spec = one_prime(0.0);
    for s in [c(2.0, 0.0), c(3.0, 0.0), c(5.0, 2.0)] {
        let v = log_ruelle_sigma(s, &ch(&[0]), &spec, 1e-14).unwrap();
        let exact = 1.0 - (-s).exp();
        assert!((v.value.exp() - exact).norm() < 1e-12);
    }
    let theta = 0.9;
    let spec = one_prime(theta);
    let v = log_ruelle_sigma(c(3.0, 0.0), &ch(&[1]), &spec, 1e-14).unwrap();
    let exact = (1.0 - Complex64::from_polar((-3.0f64).exp(), theta)).ln();
    assert!((v.value - exact).norm() < 1e-13);
}

#[test]
fn ruelle_tau() {
    let spec = one_prime(0.4);
    let s = c(3.2, 0.3);
    let trivial = SplitCharacter::from_irrep(&Irrep::new(GroupDesc::g(1), Weight::from_ints(&[0, 0])).unwrap());
    let a = log_ruelle_tau(s, &trivial, &spec, 1e-14).unwrap();
    let b = log_ruelle_sigma(s, &ch(&[0]), &spec, 1e-14).unwrap();
    assert!((a.value - b.value).norm() < 1e-14);

    let standard = SplitCharacter::from_irrep(&Irrep::new(GroupDesc::g(1), Weight::from_ints(&[1, 0])).unwrap());
    let got = log_ruelle_tau(s, &standard, &spec, 1e-14).unwrap();
    // trace e^l + e^-l + 2 cos(theta) splits into four geometric series
    let mut exact = c(0.0, 0.0);
    for w in [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.4), c(0.0, -0.4)] {
        exact += (1.0 - (w - s).exp()).ln();
    }
    assert!((got.value - exact).norm() < 1e-12);

    let finite = synthesize(1, 20, 1, 0.1).unwrap();
    let top = standard.max_split_weight();
    assert!(matches!(log_ruelle_tau(c(2.0 + top, 0.0), &standard, &finite, 1e-8), Err(ZetaError::Region(_))));
    assert!(matches!(log_selberg(c(2.0, 0.0), &ch(&[0]), &finite, 1e-8), Err(ZetaError::Region(_))));
}

#[test]
fn factorization_examples() {
    let single = one_prime(0.0);
    assert!(ruelle_selberg_factorization(c(5.0, 0.0), &m(&[0]), &single, 1e-14).unwrap().discrepancy < 1e-12);
    let s1 = synthesize(1, 200, 11, 0.05).unwrap();
    let f = ruelle_selberg_factorization(c(5.0, 0.0), &m(&[1]), &s1, 1e-12).unwrap();
    assert!(f.discrepancy < 1e-9, "{f:?}");
    let s2 = synthesize(2, 100, 12, 0.05).unwrap();
    let f = ruelle_selberg_factorization(c(8.0, 0.0), &m(&[0, 0]), &s2, 1e-12).unwrap();
    assert!(f.discrepancy < 1e-9, "{f:?}");
}

#[test]
fn virtual_characters_are_linear() {
    let spec = synthesize(2, 80, 2, 0.05).unwrap();
    let s = c(8.0, 0.0);
    let mut v = VirtualRep::from_irrep(&m(&[1, 0]));
    v.add_term(&Weight::from_ints(&[0, 0]), -2);
    let whole = log_selberg(s, &ClassCharacter::from_virtual(&v), &spec, 1e-8).unwrap();
    let a = log_selberg(s, &ch(&[1, 0]), &spec, 1e-8).unwrap();
    let b = log_selberg(s, &ch(&[0, 0]), &spec, 1e-8).unwrap();
    let diff = (whole.value - (a.value - 2.0 * b.value)).norm();
    assert!(diff <= whole.tail_bound + a.tail_bound + 2.0 * b.tail_bound + 1e-13);
}

#[test]
fn xi_examples() {
    let d = XiData::new(&m(&[1, 0]), 1.3, 2, 0.4, 1.0).unwrap();
    assert!(log_xi_normalizer(c(0.0, 0.0), &d).unwrap().norm() < 1e-15);
    assert!((xi_normalizer(c(0.0, 0.0), &d).unwrap() - 1.0).norm() < 1e-15);
    assert_eq!(epsilon(&m(&[1, 1])), 2.0);
    assert_eq!(epsilon(&m(&[1, 0])), 1.0);
    let d = XiData::new(&m(&[2, 1]), 0.7, 1, -0.2, 1.0).unwrap();
    let s = c(0.45, 0.3);
    let h = 1e-6;
    let fd = (log_xi_normalizer(s + h, &d).unwrap() - log_xi_normalizer(s - h, &d).unwrap()) / (2.0 * h);
    assert!((fd - log_xi_normalizer_derivative(s, &d).unwrap()).norm() < 1e-6);
    assert!(log_xi_normalizer(c(-3.0, 0.0), &d).is_err());
}

fn sing(re: f64, im: f64, order: i64) -> Singularity {
    Singularity { location: c(re, im), order }
}

#[test]
fn merge_examples() {
    assert_eq!(ledger_merge([sing(-2.0, 0.0, -1), sing(-2.0, 0.0, 3)]), vec![sing(-2.0, 0.0, 2)]);
    assert!(ledger_merge([sing(-2.0, 0.0, -1), sing(-2.0, 0.0, 1)]).is_empty());
    let disjoint = vec![sing(-3.0, 0.0, 1), sing(0.0, -1.0, 2), sing(0.0, 1.0, -1)];
    assert_eq!(ledger_merge(disjoint.clone()), disjoint);
    assert_eq!(ledger_merge([sing(-0.0, 0.0, 1), sing(0.0, -0.0, 1)]), vec![sing(0.0, 0.0, 2)]);
}

#[test]
fn ledger_examples() {
    let mut model = SpectralModel::empty(m(&[1, 0]), 1);
    model.laplace.push(PoleEntry { re: 4.0, im: 0.0, mult: 2 });
    let got = singularity_ledger(&model, 0).unwrap().singularities;
    let topological: Vec<_> = got.iter().filter(|s| s.location.re < 0.0).collect();
    assert!(topological.is_empty());
    assert!(got.contains(&sing(0.0, 2.0, 2)) && got.contains(&sing(0.0, -2.0, 2)));

    let mut model = SpectralModel::empty(m(&[1, 0]), 1);
    model.ms_zero = 1;
    model.c1 = 3;
    let got = singularity_ledger(&model, 0).unwrap().singularities;
    assert_eq!(got.iter().find(|s| s.location == c(0.0, 0.0)).map(|s| s.order), Some(-1));

    let got = singularity_ledger(&SpectralModel::empty(m(&[2]), 1), 6).unwrap().singularities;
    assert_eq!(got, (2..=6).rev().map(|l| sing(-(l as f64), 0.0, -1)).collect::<Vec<_>>());

    let mut bad = SpectralModel::empty(m(&[1, 1]), 1);
    bad.dirac.push(EigenEntry { mu: 1.0, mult: 1 });
    assert!(matches!(singularity_ledger(&bad, 3), Err(ZetaError::Invariant(_))));
    let mut bad = SpectralModel::empty(m(&[1, 0]), 1);
    bad.c1 = 5;
    assert!(matches!(singularity_ledger(&bad, 3), Err(ZetaError::Invariant(_))));
}

#[test]
fn ledger_model_files() {
    let m1 = SpectralModel::from_json(r#"{"sigma":"2","p":1}"#).unwrap();
    assert_eq!(m1.sigma, m(&[2]));
    assert!(SpectralModel::from_json(r#"{"sigma":"1,0","p":1,"volume":2}"#).is_err());
    assert!(SpectralModel::from_json("not json").is_err());
}

#[test]
fn scans_keep_grid_order() {
    let pts = grid((3.0, 4.0), (-1.0, 1.0), 3, 5);
    assert_eq!(pts.len(), 15);
    assert_eq!(pts[0], c(3.0, -1.0));
    assert_eq!(pts[1], c(3.0, -0.5));
    assert_eq!(pts[14], c(4.0, 1.0));
    let spec = synthesize(1, 100, 3, 0.05).unwrap();
    let f = |s: Complex64| log_selberg(s, &ch(&[1]), &spec, 1e-3).unwrap().value;
    let one = scan(&pts, 1, f).unwrap();
    for workers in [2, 3, 8] {
        let other = scan(&pts, workers, f).unwrap();
        assert!(one.iter().zip(&other).all(|(a, b)| a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits()));
    }
}

fn model_strategy() -> impl Strategy<Value = SpectralModel> {
    let weights = prop_oneof![
        Just(vec![1i64, 1]),
        Just(vec![2, -1]),
        Just(vec![2, 1]),
        Just(vec![3, 2, 1]),
        Just(vec![1]),
        Just(vec![-2]),
    ];
    (weights, prop::collection::vec((1u32..6, -3i64..4, 0i64..3, 0i64..3), 0..6), 1u32..4, -3i64..4).prop_map(
        |(w, eig, cusps, ms_zero)| {
            let sigma = m(&w);
            let mut model = SpectralModel::empty(sigma, cusps);
            model.ms_zero = ms_zero;
            let mut used = Vec::new();
            for (mu, ms, d_plus, d_minus) in eig {
                let d_plus = if d_plus + d_minus == 0 { 1 } else { d_plus };
                if used.contains(&mu) {
                    continue;
                }
                used.push(mu);
                // keep ms + d(mu) - d(-mu) even
                let ms = if (ms + d_plus - d_minus) % 2 == 0 { ms } else { ms + 1 };
                let muf = mu as f64 * 0.5;
                if ms != 0 {
                    model.laplace.push(PoleEntry { re: muf * muf, im: 0.0, mult: ms });
                }
                if d_plus > 0 {
                    model.dirac.push(EigenEntry { mu: muf, mult: d_plus });
                }
                if d_minus > 0 {
                    model.dirac.push(EigenEntry { mu: -muf, mult: d_minus });
                }
            }
            model
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dirac_pairs_sum_to_laplace_multiplicity(model in model_strategy()) {
        prop_assume!(!is_w0_fixed(&model.sigma));
        let report = singularity_ledger(&model, 0).unwrap();
        let order_at = |z: Complex64| report.singularities.iter().find(|s| s.location == z).map_or(0, |s| s.order);
        for e in &model.laplace {
            let mu = e.re.sqrt();
            prop_assert_eq!(order_at(c(0.0, mu)) + order_at(c(0.0, -mu)), e.mult);
        }
        prop_assert!(report.singularities.iter().all(|s| s.order != 0));
        prop_assert_eq!(w0(&w0(&model.sigma)), model.sigma.clone());
    }

    #[test]
    fn merge_preserves_total_order(items in prop::collection::vec((-3i32..3, -2i32..2, -4i64..5), 0..30)) {
        let input: Vec<Singularity> = items.iter().map(|&(a, b, o)| sing(a as f64, b as f64, o)).collect();
        let merged = ledger_merge(input.clone());
        prop_assert_eq!(merged.iter().map(|s| s.order).sum::<i64>(), input.iter().map(|s| s.order).sum::<i64>());
        prop_assert!(merged.iter().all(|s| s.order != 0));
        prop_assert!(merged.windows(2).all(|w| (w[0].location.re, w[0].location.im) < (w[1].location.re, w[1].location.im)));
        prop_assert_eq!(ledger_merge(merged.clone()), merged);
    }
}
