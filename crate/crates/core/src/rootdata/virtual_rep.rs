use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::tables::weight_multiplicities;
use super::weight::{GroupDesc, Irrep, Weight};

/// Formal integer combination of irreducible representations of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualRep {
    pub group: GroupDesc,
    pub coeffs: BTreeMap<Weight, i64>,
}

impl VirtualRep {
    pub fn zero(group: GroupDesc) -> Self {
        VirtualRep { group, coeffs: BTreeMap::new() }
    }

    pub fn from_irrep(irrep: &Irrep) -> Self {
        let mut v = VirtualRep::zero(irrep.group);
        v.add_term(&irrep.weight, 1);
        v
    }

    pub fn add_term(&mut self, w: &Weight, c: i64) {
        let e = self.coeffs.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(w);
        }
    }

    pub fn add_scaled(&mut self, other: &VirtualRep, c: i64) {
        for (w, &k) in &other.coeffs {
            self.add_term(w, c * k);
        }
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn irreps(&self) -> impl Iterator<Item = (Irrep, i64)> + '_ {
        self.coeffs.iter().map(|(w, &c)| (Irrep { group: self.group, weight: w.clone() }, c))
    }

    /// Signed dimension.
    pub fn dim(&self) -> i64 {
        self.irreps().map(|(r, c)| c * weight_multiplicities(&r).dim() as i64).sum()
    }

    /// Sum of `|coefficient| * dim`, an upper bound for `|character|`.
    pub fn abs_dim(&self) -> u64 {
        self.irreps().map(|(r, c)| c.unsigned_abs() * weight_multiplicities(&r).dim()).sum()
    }

    /// Net weight multiplicities, `sum_c c * mult_c(mu)`.
    pub fn weight_sum(&self) -> BTreeMap<Weight, i64> {
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for (r, c) in self.irreps() {
            for (w, &m) in &weight_multiplicities(&r).mults {
                *out.entry(w.clone()).or_insert(0) += c * m as i64;
            }
        }
        out.retain(|_, m| *m != 0);
        out
    }

    pub fn character(&self, theta: &[f64]) -> Complex64 {
        self.irreps().map(|(r, c)| weight_multiplicities(&r).character(theta) * c as f64).sum()
    }
}

/// Highest weights first, e.g. `(1,0):+1 (0,0):-1`.
impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{w}:{c:+}")?;
        }
        Ok(())
    }
}
