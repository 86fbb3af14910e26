//! Restriction from `K` to `M`, tensor products and the virtual
//! decompositions used by the zeta functions.

use std::collections::BTreeMap;

use num_rational::Ratio;

use super::tables::{reflect_to_dominant, weight_multiplicities};
use super::virtual_rep::VirtualRep;
use super::weight::{Family, GroupDesc, Half, Irrep, Weight};
use super::RootDataError;

fn expect_group(irrep: &Irrep, family: Family, what: &str) -> Result<(), RootDataError> {
    if irrep.group.family != family || irrep.group.rank != irrep.group.n {
        return Err(RootDataError::WrongGroup(format!("{what} expects a {family:?}_n weight, got {}", irrep.group)));
    }
    Ok(())
}

/// The longest Weyl element of `G` acting on `M`-weights: flips the last sign.
pub fn w0(sigma: &Irrep) -> Irrep {
    Irrep { group: sigma.group, weight: sigma.weight.flip_last() }
}

pub fn is_w0_fixed(sigma: &Irrep) -> bool {
    sigma.weight.last() == Half::ZERO
}

/// Contragredient of an `M`-irrep.
pub fn contragredient(sigma: &Irrep) -> Irrep {
    if sigma.group.n % 2 == 0 {
        sigma.clone()
    } else {
        w0(sigma)
    }
}

/// `sum_{j>=2} (k_j + rho_j)^2 - sum_{j>=1} rho_j^2` with `rho_j = n + 1 - j`.
pub fn casimir_shift(sigma: &Irrep) -> Ratio<i64> {
    let n = sigma.group.n as i64;
    let shifted: Ratio<i64> = sigma
        .weight
        .coords()
        .iter()
        .enumerate()
        .map(|(i, k)| {
            let x = k.to_ratio() + Ratio::from_integer(n - 1 - i as i64);
            x * x
        })
        .sum();
    let rho_sq: i64 = (0..=n).map(|j| j * j).sum();
    shifted - Ratio::from_integer(rho_sq)
}

/// `M`-constituents of a `K`-irrep by the interlacing rule. All
/// multiplicities are one.
pub fn branch_k_to_m(nu: &Irrep) -> Vec<Irrep> {
    let a = nu.weight.doubled();
    let n = a.len();
    let group = GroupDesc::m(nu.group.n);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(a: &[i64], cur: &mut Vec<i64>, group: GroupDesc, out: &mut Vec<Irrep>) {
        let i = cur.len();
        if i == a.len() {
            out.push(Irrep { group, weight: Weight::from_doubled(cur) });
            return;
        }
        let lo = if i + 1 < a.len() { a[i + 1] } else { -a[i] };
        let mut b = a[i];
        while b >= lo {
            cur.push(b);
            rec(a, cur, group, out);
            cur.pop();
            b -= 2;
        }
    }
    rec(&a, &mut cur, group, &mut out);
    out
}

/// Restriction of a virtual `K`-representation to `M`.
pub fn restrict(v: &VirtualRep) -> VirtualRep {
    let mut out = VirtualRep::zero(GroupDesc::m(v.group.n));
    for (r, c) in v.irreps() {
        for s in branch_k_to_m(&r) {
            out.add_term(&s.weight, c);
        }
    }
    out
}

/// `(k_2, ..., k_n, |k_{n+1}|)` as a `K`-weight.
pub fn nu_sigma(sigma: &Irrep) -> Irrep {
    let mut w = sigma.weight.clone();
    if let Some(x) = w.0.last_mut() {
        *x = x.abs();
    }
    Irrep { group: GroupDesc::k(sigma.group.n), weight: w }
}

/// `(k_2 - 1/2, ..., k_{n+1} - 1/2)`, defined when `k_{n+1} > 0`.
pub fn nu_of_sigma(sigma: &Irrep) -> Result<Irrep, RootDataError> {
    expect_group(sigma, Family::D, "nu_of_sigma")?;
    if sigma.weight.last() <= Half::ZERO {
        return Err(RootDataError::Undefined(format!("nu(sigma) needs k_(n+1) > 0, got {}", sigma.weight)));
    }
    let w = Weight(sigma.weight.coords().iter().map(|&k| k - Half::HALF).collect());
    Irrep::new(GroupDesc::k(sigma.group.n), w)
}

/// Coefficients `m_nu(sigma)` with `sum m_nu * restrict(nu)` equal to
/// `sigma` when `sigma = w0 sigma` and to `sigma + w0 sigma` otherwise.
pub fn m_coeffs(sigma: &Irrep) -> Result<VirtualRep, RootDataError> {
    expect_group(sigma, Family::D, "m_coeffs")?;
    let n = sigma.group.n;
    let mut target = VirtualRep::from_irrep(sigma);
    if !is_w0_fixed(sigma) {
        target.add_term(&w0(sigma).weight, 1);
    }
    let mut out = VirtualRep::zero(GroupDesc::k(n));
    let mut guard = 0;
    while let Some((top, &c)) = target.coeffs.iter().next_back() {
        let nu = nu_sigma(&Irrep { group: sigma.group, weight: top.clone() });
        out.add_term(&nu.weight, c);
        let mut r = VirtualRep::from_irrep(&nu);
        r = restrict(&r);
        target.add_scaled(&r, -c);
        guard += 1;
        if guard > 100_000 {
            return Err(RootDataError::Undefined("m_coeffs elimination did not terminate".into()));
        }
    }
    Ok(out)
}

/// Spin representations: `kappa` of `K` and `kappa_plus`, `kappa_minus` of `M`.
pub fn spin_reps(n: usize) -> (Irrep, Irrep, Irrep) {
    let halves = vec![Half::HALF; n];
    let kappa = Irrep { group: GroupDesc::k(n), weight: Weight(halves.clone()) };
    let plus = Irrep { group: GroupDesc::m(n), weight: Weight(halves.clone()) };
    let minus = w0(&plus);
    (kappa, plus, minus)
}

/// Tensor product by the Brauer-Klimyk rule: shift the highest weight of
/// `lambda` by every weight of `other` and reflect into the dominant chamber.
pub fn tensor_product(lambda: &Irrep, other: &Irrep) -> Result<VirtualRep, RootDataError> {
    if lambda.group != other.group {
        return Err(RootDataError::WrongGroup(format!("{} vs {}", lambda.group, other.group)));
    }
    let group = lambda.group;
    let rho = group.rho_doubled();
    let top = lambda.weight.doubled();
    let mut out = VirtualRep::zero(group);
    for (mu, &m) in &weight_multiplicities(other).mults {
        let v: Vec<i64> = top.iter().zip(mu.doubled()).zip(&rho).map(|((a, b), r)| a + b + r).collect();
        if let Some((dom, sign)) = reflect_to_dominant(&group, &v) {
            let w: Vec<i64> = dom.iter().zip(&rho).map(|(a, r)| a - r).collect();
            out.add_term(&Weight::from_doubled(&w), sign as i64 * m as i64);
        }
    }
    Ok(out)
}

pub fn tensor_with_spin(nu: &Irrep) -> Result<VirtualRep, RootDataError> {
    expect_group(nu, Family::B, "tensor_with_spin")?;
    let (kappa, _, _) = spin_reps(nu.group.n);
    tensor_product(nu, &kappa)
}

/// Split `nu(sigma) (x) kappa = nu_plus + nu_minus` so that
/// `restrict(nu_plus) - restrict(nu_minus) = sigma + w0 sigma`.
pub fn split_nu_pm(sigma: &Irrep) -> Result<(VirtualRep, VirtualRep), RootDataError> {
    let nu = nu_of_sigma(sigma)?;
    let product = tensor_with_spin(&nu)?;
    let mut parts: Vec<Weight> = Vec::new();
    for (w, &c) in &product.coeffs {
        if c < 0 {
            return Err(RootDataError::NoSplit(format!("negative coefficient in {product}")));
        }
        parts.extend(std::iter::repeat_n(w.clone(), c as usize));
    }
    if parts.len() > 24 {
        return Err(RootDataError::NoSplit(format!("{} components is too many to search", parts.len())));
    }
    let group_k = GroupDesc::k(sigma.group.n);
    let restricted: Vec<VirtualRep> = parts
        .iter()
        .map(|w| restrict(&VirtualRep::from_irrep(&Irrep { group: group_k, weight: w.clone() })))
        .collect();
    let mut target = VirtualRep::from_irrep(sigma);
    target.add_term(&w0(sigma).weight, 1);
    for mask in 0u32..(1u32 << parts.len()) {
        let mut acc = VirtualRep::zero(sigma.group);
        for (i, r) in restricted.iter().enumerate() {
            acc.add_scaled(r, if mask >> i & 1 == 1 { 1 } else { -1 });
        }
        if acc == target {
            let mut plus = VirtualRep::zero(group_k);
            let mut minus = VirtualRep::zero(group_k);
            for (i, w) in parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    plus.add_term(w, 1);
                } else {
                    minus.add_term(w, 1);
                }
            }
            return Ok((plus, minus));
        }
    }
    Err(RootDataError::NoSplit(format!("no sign assignment for {}", sigma.weight)))
}

/// Decompose a `W`-invariant weight multiset into irreducibles by peeling
/// off lexicographically highest weights.
pub fn decompose(group: GroupDesc, weights: &BTreeMap<Weight, i64>) -> Result<VirtualRep, RootDataError> {
    let mut rest: BTreeMap<Weight, i64> = weights.iter().filter(|(_, &m)| m != 0).map(|(w, &m)| (w.clone(), m)).collect();
    let mut out = VirtualRep::zero(group);
    while let Some((top, &c)) = rest.iter().next_back() {
        let top = top.clone();
        if !group.is_dominant(&top) {
            return Err(RootDataError::Undefined(format!("weight multiset is not Weyl invariant at {top}")));
        }
        out.add_term(&top, c);
        for (w, &m) in &weight_multiplicities(&Irrep { group, weight: top }).mults {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= c * m as i64;
            if *e == 0 {
                rest.remove(w);
            }
        }
    }
    Ok(out)
}

/// `p`-th exterior power of the standard `2n`-dimensional `M`-representation.
pub fn lambda_p_nbar(n: usize, p: usize) -> Result<VirtualRep, RootDataError> {
    if p > 2 * n {
        return Err(RootDataError::Undefined(format!("exterior power {p} exceeds dimension {}", 2 * n)));
    }
    let basis: Vec<Vec<i64>> = (0..n)
        .flat_map(|j| {
            [1i64, -1].into_iter().map(move |s| {
                let mut v = vec![0; n];
                v[j] = s;
                v
            })
        })
        .collect();
    let mut weights: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut subset = Vec::with_capacity(p);
    fn rec(basis: &[Vec<i64>], start: usize, p: usize, subset: &mut Vec<usize>, out: &mut BTreeMap<Weight, i64>) {
        if subset.len() == p {
            let n = basis[0].len();
            let mut v = vec![0; n];
            for &i in subset.iter() {
                for (a, b) in v.iter_mut().zip(&basis[i]) {
                    *a += b;
                }
            }
            *out.entry(Weight::from_ints(&v)).or_insert(0) += 1;
            return;
        }
        for i in start..basis.len() {
            subset.push(i);
            rec(basis, i + 1, p, subset, out);
            subset.pop();
        }
    }
    rec(&basis, 0, p, &mut subset, &mut weights);
    decompose(GroupDesc::m(n), &weights)
}
