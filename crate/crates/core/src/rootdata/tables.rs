//! Weight multiplicities (Freudenthal), Weyl dimensions, Weyl-group
//! reflections and characters as weight sums.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use super::weight::{Family, GroupDesc, Irrep, Weight};

/// All weights of an irreducible representation with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub irrep: Irrep,
    pub mults: BTreeMap<Weight, u64>,
}

impl WeightTable {
    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn character(&self, theta: &[f64]) -> Complex64 {
        self.mults
            .iter()
            .map(|(w, &m)| Complex64::from_polar(m as f64, w.pair(theta)))
            .sum()
    }
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Dominant Weyl conjugate of a doubled-coordinate vector.
pub fn dominant_representative(group: &GroupDesc, v: &[i64]) -> Vec<i64> {
    if group.family == Family::D && group.rank == 1 {
        return v.to_vec();
    }
    let negatives = v.iter().filter(|&&x| x < 0).count();
    let mut a: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    if group.family == Family::D && negatives % 2 == 1 {
        let last = a.len() - 1;
        a[last] = -a[last];
    }
    a
}

/// Reflect a doubled-coordinate vector into the dominant chamber. Returns
/// `None` if it lies on a wall, otherwise the image and the sign `det w`.
pub fn reflect_to_dominant(group: &GroupDesc, v: &[i64]) -> Option<(Vec<i64>, i32)> {
    if group.family == Family::D && group.rank == 1 {
        return Some((v.to_vec(), 1));
    }
    let negatives = v.iter().filter(|&&x| x < 0).count();
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&i, &j| v[j].abs().cmp(&v[i].abs()));
    let a: Vec<i64> = idx.iter().map(|&i| v[i].abs()).collect();
    if a.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut sign = permutation_sign(&idx);
    let mut out = a;
    match group.family {
        Family::B => {
            if out.contains(&0) {
                return None;
            }
            if negatives % 2 == 1 {
                sign = -sign;
            }
        }
        Family::D => {
            let last = out.len() - 1;
            if negatives % 2 == 1 && out[last] != 0 {
                out[last] = -out[last];
            }
        }
    }
    Some((out, sign))
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All Weyl conjugates of a dominant doubled-coordinate vector.
pub fn weyl_orbit(group: &GroupDesc, dom: &[i64]) -> Vec<Vec<i64>> {
    if group.family == Family::D && group.rank == 1 {
        return vec![dom.to_vec()];
    }
    let abs: Vec<i64> = dom.iter().map(|x| x.abs()).collect();
    let negatives_parity = dom.iter().filter(|&&x| x < 0).count() % 2;
    let has_zero = abs.contains(&0);
    let mut perms = Vec::new();
    distinct_permutations(&abs, &mut Vec::new(), &mut vec![false; abs.len()], &mut perms);
    let mut out = BTreeSet::new();
    for p in perms {
        let nz: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
        for mask in 0u32..(1u32 << nz.len()) {
            if group.family == Family::D && !has_zero && (mask.count_ones() as usize) % 2 != negatives_parity {
                continue;
            }
            let mut q = p.clone();
            for (b, &i) in nz.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    q[i] = -q[i];
                }
            }
            out.insert(q);
        }
    }
    out.into_iter().collect()
}

fn distinct_permutations(items: &[i64], cur: &mut Vec<i64>, used: &mut Vec<bool>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    let mut tried = BTreeSet::new();
    for i in 0..items.len() {
        if used[i] || !tried.insert(items[i]) {
            continue;
        }
        used[i] = true;
        cur.push(items[i]);
        distinct_permutations(items, cur, used, out);
        cur.pop();
        used[i] = false;
    }
}

/// Coefficients of `diff` (plain integer coordinates) in the simple roots,
/// if it lies in the root lattice. Returns the height when all are `>= 0`.
fn positive_height(group: &GroupDesc, diff: &[i64]) -> Option<i64> {
    let r = group.rank;
    let mut prefix = Vec::with_capacity(r);
    let mut s = 0;
    for &d in diff {
        s += d;
        prefix.push(s);
    }
    match group.family {
        Family::B => prefix.iter().all(|&c| c >= 0).then(|| prefix.iter().sum()),
        Family::D if r == 1 => (diff[0] == 0).then_some(0),
        Family::D => {
            let base = if r >= 3 { prefix[r - 3] } else { 0 };
            let plus = diff[r - 2] + diff[r - 1] + base;
            let minus = diff[r - 2] - diff[r - 1] + base;
            if plus % 2 != 0 || plus < 0 || minus < 0 {
                return None;
            }
            if prefix[..r.saturating_sub(2)].iter().any(|&c| c < 0) {
                return None;
            }
            Some(prefix[..r - 2].iter().sum::<i64>() + plus / 2 + minus / 2)
        }
    }
}

/// Dominant weights below `top` (doubled coordinates) with their heights.
fn dominant_weights_below(group: &GroupDesc, top: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let r = group.rank;
    if group.family == Family::D && r == 1 {
        return vec![(top.to_vec(), 0)];
    }
    let parity = top[0].rem_euclid(2);
    let bound = top[0];
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(
        group: &GroupDesc,
        top: &[i64],
        parity: i64,
        upper: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, i64)>,
    ) {
        let r = group.rank;
        if cur.len() == r {
            let diff: Vec<i64> = top.iter().zip(cur.iter()).map(|(a, b)| (a - b) / 2).collect();
            if let Some(h) = positive_height(group, &diff) {
                out.push((cur.clone(), h));
            }
            return;
        }
        let is_last = cur.len() + 1 == r;
        let lower = if is_last && group.family == Family::D { -upper } else { 0 };
        let mut x = upper;
        while x >= lower {
            if x.rem_euclid(2) == parity {
                cur.push(x);
                rec(group, top, parity, x.abs(), cur, out);
                cur.pop();
            }
            x -= 1;
        }
    }
    rec(group, top, parity, bound, &mut cur, &mut out);
    out
}

fn compute_dominant(irrep: &Irrep) -> BTreeMap<Vec<i64>, u64> {
    let group = irrep.group;
    let top = irrep.weight.doubled();
    let rho = group.rho_doubled();
    let roots = group.positive_roots();
    let mut doms = dominant_weights_below(&group, &top);
    doms.sort_by_key(|(_, h)| *h);
    let shifted = |x: &[i64]| -> Vec<i64> { x.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top_norm = {
        let t = shifted(&top);
        dot(&t, &t)
    };
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (mu, h) in doms {
        if h == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let s = shifted(&mu);
        let lhs = top_norm - dot(&s, &s);
        let mut rhs: i128 = 0;
        for a in &roots {
            let a2: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            let mut k = 1;
            loop {
                let nu: Vec<i64> = mu.iter().zip(&a2).map(|(x, y)| x + k * y).collect();
                let dom = dominant_representative(&group, &nu);
                match mult.get(&dom) {
                    Some(&m) => rhs += 2 * dot(&nu, &a2) * m as i128,
                    None => break,
                }
                k += 1;
            }
        }
        assert!(lhs > 0 && rhs % lhs == 0, "Freudenthal recursion is not integral");
        let m = (rhs / lhs) as u64;
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    mult
}

fn cache() -> &'static RwLock<HashMap<Irrep, Arc<WeightTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<Irrep, Arc<WeightTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Multiplicities of the dominant weights only.
pub fn dominant_multiplicities(irrep: &Irrep) -> BTreeMap<Weight, u64> {
    compute_dominant(irrep).into_iter().map(|(w, m)| (Weight::from_doubled(&w), m)).collect()
}

/// Full weight table by Freudenthal's recursion on dominant weights,
/// expanded over Weyl orbits. Results are cached.
pub fn weight_multiplicities(irrep: &Irrep) -> Arc<WeightTable> {
    if let Some(t) = cache().read().expect("weight cache poisoned").get(irrep) {
        return Arc::clone(t);
    }
    let mut mults = BTreeMap::new();
    for (dom, m) in compute_dominant(irrep) {
        for w in weyl_orbit(&irrep.group, &dom) {
            mults.insert(Weight::from_doubled(&w), m);
        }
    }
    let table = Arc::new(WeightTable { irrep: irrep.clone(), mults });
    cache().write().expect("weight cache poisoned").insert(irrep.clone(), Arc::clone(&table));
    table
}

/// Weyl dimension formula, evaluated exactly.
pub fn weyl_dim(irrep: &Irrep) -> u64 {
    let rho = irrep.group.rho_doubled();
    let lr: Vec<i64> = irrep.weight.doubled().iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for a in irrep.group.positive_roots() {
        num *= dot(&lr, &a);
        den *= dot(&rho, &a);
        let g = gcd(num.abs(), den.abs());
        num /= g;
        den /= g;
    }
    assert!(den == 1 || den == -1, "Weyl dimension is not integral");
    (num * den) as u64
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Character as a weight sum, `sum mult * exp(i <mu, theta>)`.
pub fn character(irrep: &Irrep, theta: &[f64]) -> Complex64 {
    weight_multiplicities(irrep).character(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(g: GroupDesc, w: &[i64]) -> Irrep {
        Irrep::new(g, Weight::from_ints(w)).unwrap()
    }

    #[test]
    fn spec_dimension_examples() {
        assert_eq!(weyl_dim(&irrep(GroupDesc::m(2), &[1, 0])), 4);
        assert_eq!(weyl_dim(&irrep(GroupDesc::k(2), &[1, 1])), 10);
        assert_eq!(weyl_dim(&irrep(GroupDesc::k(2), &[1, 0])), 5);
        assert_eq!(weyl_dim(&irrep(GroupDesc::m(2), &[1, 1])), 3);
        assert_eq!(weyl_dim(&Irrep::new(GroupDesc::k(3), Weight::from_doubled(&[1, 1, 1])).unwrap()), 8);
        assert_eq!(weyl_dim(&irrep(GroupDesc::m(1), &[-3])), 1);
    }

    #[test]
    fn vector_rep_weights() {
        let t = weight_multiplicities(&irrep(GroupDesc::m(3), &[1, 0, 0]));
        assert_eq!(t.dim(), 6);
        assert_eq!(t.multiplicity(&Weight::from_ints(&[0, 0, 0])), 0);
        let t = weight_multiplicities(&irrep(GroupDesc::k(2), &[1, 0]));
        assert_eq!(t.multiplicity(&Weight::from_ints(&[0, 0])), 1);
        let t = weight_multiplicities(&irrep(GroupDesc::k(2), &[1, 1]));
        assert_eq!(t.multiplicity(&Weight::from_ints(&[0, 0])), 2);
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        let t = weight_multiplicities(&irrep(GroupDesc::m(4), &[1, 1, 0, 0]));
        assert_eq!(t.dim(), 28);
        assert_eq!(t.multiplicity(&Weight::zero(4)), 4);
        let t = weight_multiplicities(&irrep(GroupDesc::k(3), &[1, 1, 0]));
        assert_eq!(t.dim(), 21);
        assert_eq!(t.multiplicity(&Weight::zero(3)), 3);
    }

    #[test]
    fn reflection_signs() {
        let g = GroupDesc::k(2);
        assert_eq!(reflect_to_dominant(&g, &[2, 4]), Some((vec![4, 2], -1)));
        assert_eq!(reflect_to_dominant(&g, &[-4, 2]), Some((vec![4, 2], -1)));
        assert_eq!(reflect_to_dominant(&g, &[2, 0]), None);
        let d = GroupDesc::m(2);
        assert_eq!(reflect_to_dominant(&d, &[2, 0]), Some((vec![2, 0], 1)));
        assert_eq!(reflect_to_dominant(&d, &[-4, 2]), Some((vec![4, -2], 1)));
        assert_eq!(reflect_to_dominant(&d, &[2, -2]), None);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(weyl_orbit(&GroupDesc::m(2), &[1, 1]).len(), 2);
        assert_eq!(weyl_orbit(&GroupDesc::m(2), &[2, 0]).len(), 4);
        assert_eq!(weyl_orbit(&GroupDesc::k(2), &[2, 2]).len(), 4);
        assert_eq!(weyl_orbit(&GroupDesc::k(3), &[3, 2, 1]).len(), 48);
        assert_eq!(weyl_orbit(&GroupDesc::m(3), &[3, 2, 1]).len(), 24);
    }
}
