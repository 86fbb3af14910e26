use geoflow::rootdata::{
    branch_k_to_m, casimir_shift, character, contragredient, lambda_p_nbar, m_coeffs, nu_of_sigma, nu_sigma,
    restrict, spin_reps, split_nu_pm, tensor_with_spin, w0, weight_multiplicities, weyl_dim, GroupDesc, Irrep,
    VirtualRep, Weight,
};
use num_rational::Ratio;
use proptest::prelude::*;

fn m(w: &[i64]) -> Irrep {
    Irrep::new(GroupDesc::m(w.len()), Weight::from_ints(w)).unwrap()
}

fn k(w: &[i64]) -> Irrep {
    Irrep::new(GroupDesc::k(w.len()), Weight::from_ints(w)).unwrap()
}

fn half(doubled: &[i64], g: GroupDesc) -> Irrep {
    Irrep::new(g, Weight::from_doubled(doubled)).unwrap()
}

fn weights(v: &VirtualRep) -> Vec<(String, i64)> {
    v.irreps().map(|(i, c)| (i.weight.to_string(), c)).collect()
}

#[test]
fn rho_vectors() {
    assert_eq!(GroupDesc::m(2).rho(), Weight::from_ints(&[1, 0]));
    assert_eq!(GroupDesc::m(1).rho(), Weight::from_ints(&[0]));
    assert_eq!(GroupDesc::g(2).rho(), Weight::from_ints(&[2, 1, 0]));
}

#[test]
fn dimensions() {
    assert_eq!(weyl_dim(&m(&[1, 0])), 4);
    assert_eq!(weyl_dim(&m(&[0, 0, 0])), 1);
    assert_eq!(weyl_dim(&k(&[1, 0])), 5);
    assert_eq!(weyl_dim(&spin_reps(3).0), 8);
}

#[test]
fn multiplicity_tables() {
    let t = weight_multiplicities(&m(&[1, 0]));
    let listed: Vec<_> = t.mults.iter().map(|(w, &c)| (w.to_string(), c)).collect();
    assert_eq!(listed.len(), 4);
    for w in ["(1,0)", "(-1,0)", "(0,1)", "(0,-1)"] {
        assert!(listed.contains(&(w.to_string(), 1)), "{w} missing");
    }
    let spin = weight_multiplicities(&half(&[1, 1], GroupDesc::k(2)));
    assert_eq!(spin.mults.len(), 4);
    assert!(spin.mults.values().all(|&c| c == 1));
    assert_eq!(weight_multiplicities(&m(&[0, 0])).mults.len(), 1);
}

#[test]
fn characters_at_special_points() {
    let sigma = m(&[2, 1]);
    assert!((character(&sigma, &[0.0, 0.0]).re - weyl_dim(&sigma) as f64).abs() < 1e-12);
    let z = character(&m(&[3]), &[0.4]);
    assert!((z - num_complex::Complex64::from_polar(1.0, 1.2)).norm() < 1e-15);
    assert!(character(&m(&[1, 0]), &[std::f64::consts::PI, 0.0]).norm() < 1e-12);
}

#[test]
fn w0_and_contragredient() {
    assert_eq!(w0(&m(&[1, 1])), m(&[1, -1]));
    assert_eq!(w0(&m(&[1, 0])), m(&[1, 0]));
    assert_eq!(w0(&w0(&m(&[3, 2, -1]))), m(&[3, 2, -1]));
    assert_eq!(contragredient(&m(&[1, 1])), m(&[1, 1]));
    assert_eq!(contragredient(&m(&[2])), m(&[-2]));
    assert_eq!(contragredient(&m(&[0, 0, 0])), m(&[0, 0, 0]));
}

#[test]
fn casimir_values() {
    for kk in -3..=3 {
        assert_eq!(casimir_shift(&m(&[kk])), Ratio::from_integer(kk * kk - 1));
    }
    assert_eq!(casimir_shift(&m(&[0, 0])), Ratio::from_integer(-4));
    assert_eq!(casimir_shift(&m(&[1, 1])), Ratio::from_integer(0));
}

#[test]
fn branching_examples() {
    let names = |nu: &Irrep| {
        let mut v: Vec<String> = branch_k_to_m(nu).iter().map(|s| s.weight.to_string()).collect();
        v.sort();
        v
    };
    assert_eq!(names(&k(&[1, 0])), vec!["(0,0)", "(1,0)"]);
    assert_eq!(names(&k(&[1, 1])), vec!["(1,-1)", "(1,0)", "(1,1)"]);
    let j = 3;
    let got: Vec<Irrep> = branch_k_to_m(&k(&[j]));
    assert_eq!(got.len() as i64, 2 * j + 1);
    assert!(got.iter().all(|s| s.weight.coords()[0].doubled().abs() <= 2 * j));
}

#[test]
fn nu_maps() {
    assert_eq!(nu_sigma(&m(&[1, -1])).weight, Weight::from_ints(&[1, 1]));
    assert_eq!(nu_sigma(&m(&[2, 1])).weight, Weight::from_ints(&[2, 1]));
    assert_eq!(nu_of_sigma(&m(&[1, 1])).unwrap().weight, Weight::from_doubled(&[1, 1]));
    assert_eq!(nu_of_sigma(&m(&[2, 1])).unwrap().weight, Weight::from_doubled(&[3, 1]));
    assert!(nu_of_sigma(&m(&[1, 0])).is_err());
}

#[test]
fn spin_representations() {
    let (kappa, plus, minus) = spin_reps(2);
    assert_eq!(kappa.weight, Weight::from_doubled(&[1, 1]));
    assert_eq!(plus.weight, Weight::from_doubled(&[1, 1]));
    assert_eq!(minus.weight, Weight::from_doubled(&[1, -1]));
    assert_eq!(weyl_dim(&plus), 2);
    assert_eq!(weyl_dim(&minus), 2);
}

#[test]
fn tensor_with_spinor() {
    let t = tensor_with_spin(&half(&[1, 1], GroupDesc::k(2))).unwrap();
    let mut got = weights(&t);
    got.sort();
    assert_eq!(got, vec![("(0,0)".into(), 1), ("(1,0)".into(), 1), ("(1,1)".into(), 1)]);
    assert_eq!(t.dim(), 16);
    let triv = tensor_with_spin(&k(&[0, 0])).unwrap();
    assert_eq!(weights(&triv), vec![("(1/2,1/2)".into(), 1)]);
}

#[test]
fn spin_split() {
    let (plus, minus) = split_nu_pm(&m(&[1, 1])).unwrap();
    let mut p = weights(&plus);
    p.sort();
    assert_eq!(p, vec![("(0,0)".into(), 1), ("(1,1)".into(), 1)]);
    assert_eq!(weights(&minus), vec![("(1,0)".into(), 1)]);
    assert_eq!(plus.dim() - minus.dim(), 2 * weyl_dim(&m(&[1, 1])) as i64);
    let m_direct = m_coeffs(&m(&[1, 1])).unwrap();
    let mut diff = plus.clone();
    diff.add_scaled(&minus, -1);
    assert_eq!(m_direct, diff);
}

#[test]
fn m_coefficient_examples() {
    assert_eq!(weights(&m_coeffs(&m(&[0, 0])).unwrap()), vec![("(0,0)".into(), 1)]);
    let mut got = weights(&m_coeffs(&m(&[1, 0])).unwrap());
    got.sort();
    assert_eq!(got, vec![("(0,0)".into(), -1), ("(1,0)".into(), 1)]);
    assert_eq!(m_coeffs(&m(&[1, 0])).unwrap().to_string(), "(1,0):+1 (0,0):-1");
}

#[test]
fn exterior_powers() {
    assert_eq!(weights(&lambda_p_nbar(2, 0).unwrap()), vec![("(0,0)".into(), 1)]);
    let mut one = weights(&lambda_p_nbar(1, 1).unwrap());
    one.sort();
    assert_eq!(one, vec![("(-1)".into(), 1), ("(1)".into(), 1)]);
    for n in 1..=3usize {
        for p in 0..=2 * n {
            let expect = (0..p).fold(1i64, |acc, i| acc * (2 * n - i) as i64 / (i + 1) as i64);
            assert_eq!(lambda_p_nbar(n, p).unwrap().dim(), expect, "n = {n}, p = {p}");
        }
    }
    let mut two = weights(&lambda_p_nbar(2, 2).unwrap());
    two.sort();
    assert_eq!(two, vec![("(1,-1)".into(), 1), ("(1,1)".into(), 1)]);
}

fn dominant_d(n: usize) -> impl Strategy<Value = Irrep> {
    (prop::collection::vec(0i64..4, n), any::<bool>(), any::<bool>()).prop_map(move |(mut v, halfint, neg)| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut d: Vec<i64> = v.iter().map(|x| 2 * x + halfint as i64).collect();
        if neg {
            d[n - 1] = -d[n - 1];
        }
        Irrep::new(GroupDesc::m(n), Weight::from_doubled(&d)).unwrap()
    })
}

fn dominant_b(n: usize) -> impl Strategy<Value = Irrep> {
    (prop::collection::vec(0i64..4, n), any::<bool>()).prop_map(move |(mut v, halfint)| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let d: Vec<i64> = v.iter().map(|x| 2 * x + halfint as i64).collect();
        Irrep::new(GroupDesc::k(n), Weight::from_doubled(&d)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn w0_is_an_involution_preserving_casimir(sigma in (1usize..=3).prop_flat_map(dominant_d)) {
        prop_assert_eq!(w0(&w0(&sigma)), sigma.clone());
        prop_assert_eq!(casimir_shift(&w0(&sigma)), casimir_shift(&sigma));
        prop_assert_eq!(weyl_dim(&w0(&sigma)), weyl_dim(&sigma));
    }

    #[test]
    fn branching_preserves_dimension(nu in (1usize..=3).prop_flat_map(dominant_b)) {
        let parts = branch_k_to_m(&nu);
        let total: u64 = parts.iter().map(weyl_dim).sum();
        prop_assert_eq!(total, weyl_dim(&nu));
        let mut ws: Vec<_> = parts.iter().map(|p| p.weight.clone()).collect();
        ws.sort();
        ws.dedup();
        prop_assert_eq!(ws.len(), parts.len());
    }

    #[test]
    fn weyl_dim_is_multiplicity_sum(sigma in (1usize..=3).prop_flat_map(dominant_d), nu in (1usize..=3).prop_flat_map(dominant_b)) {
        prop_assert_eq!(weyl_dim(&sigma), weight_multiplicities(&sigma).dim());
        prop_assert_eq!(weyl_dim(&nu), weight_multiplicities(&nu).dim());
    }

    #[test]
    fn spinor_tensor_preserves_dimension(nu in (1usize..=3).prop_flat_map(dominant_b)) {
        let t = tensor_with_spin(&nu).unwrap();
        prop_assert!(t.irreps().all(|(_, c)| c > 0));
        prop_assert_eq!(t.dim(), (weyl_dim(&nu) << nu.group.n) as i64);
    }

    #[test]
    fn m_coefficients_restrict_to_sigma(sigma in (1usize..=3).prop_flat_map(dominant_d)) {
        let coeffs = m_coeffs(&sigma).unwrap();
        prop_assert!(coeffs.irreps().all(|(_, c)| (-1..=1).contains(&c)));
        let mut target = VirtualRep::from_irrep(&sigma);
        if w0(&sigma) != sigma {
            target.add_term(&w0(&sigma).weight, 1);
        }
        prop_assert_eq!(restrict(&coeffs), target);
    }
}
