//! Half-integers, weight vectors and group descriptors.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::RootDataError;

/// An element of `(1/2)Z`, stored as its double.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    pub const fn from_int(k: i64) -> Self {
        Half(2 * k)
    }

    pub const fn from_doubled(d: i64) -> Self {
        Half(d)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        Half(self.0.abs())
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_ratio(self) -> Ratio<i64> {
        Ratio::new(self.0, 2)
    }

    /// Integer value, if this is an integer.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Half {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || RootDataError::Parse(format!("not a half-integer: {t:?}"));
        let r: Ratio<i64> = if t.contains('/') {
            t.parse().map_err(|_| bad())?
        } else if let Ok(k) = t.parse::<i64>() {
            Ratio::from_integer(k)
        } else {
            let x: f64 = t.parse().map_err(|_| bad())?;
            let d = 2.0 * x;
            if !d.is_finite() || d.fract() != 0.0 || d.abs() > 1e15 {
                return Err(bad());
            }
            Ratio::new(d as i64, 2)
        };
        let d = r * 2;
        if !d.is_integer() {
            return Err(bad());
        }
        Ok(Half(d.to_integer()))
    }
}

/// A weight in coordinates with respect to the standard basis `e_1, e_2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<Half>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Half::ZERO; rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&k| Half::from_int(k)).collect())
    }

    pub fn from_doubled(v: &[i64]) -> Self {
        Weight(v.iter().map(|&k| Half::from_doubled(k)).collect())
    }

    pub fn doubled(&self) -> Vec<i64> {
        self.0.iter().map(|h| h.doubled()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Half] {
        &self.0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|h| h.to_f64()).collect()
    }

    pub fn last(&self) -> Half {
        *self.0.last().expect("empty weight")
    }

    /// All integers, or all strictly half-integers.
    pub fn has_uniform_parity(&self) -> bool {
        match self.0.first() {
            None => true,
            Some(h) => self.0.iter().all(|x| x.is_integer() == h.is_integer()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|h| h.is_integer())
    }

    /// Flip the sign of the last coordinate.
    pub fn flip_last(&self) -> Weight {
        let mut v = self.0.clone();
        if let Some(x) = v.last_mut() {
            *x = -*x;
        }
        Weight(v)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Euclidean pairing with a torus point.
    pub fn pair(&self, theta: &[f64]) -> f64 {
        self.0.iter().zip(theta).map(|(h, t)| h.to_f64() * t).sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = RootDataError;

    /// Accepts `1,0`, `3/2,1/2`, `(1,-1)` and the empty string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        t.split(',').map(str::parse).collect::<Result<Vec<_>, _>>().map(Weight)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
}

/// A compact group of type B or D together with the manifold parameter `n`
/// it is attached to. `K` is `B_n`, `M` is `D_n` and the complexified
/// group `G` carries weights of `D_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupDesc {
    pub family: Family,
    pub rank: usize,
    pub n: usize,
}

impl GroupDesc {
    pub fn k(n: usize) -> Self {
        GroupDesc { family: Family::B, rank: n, n }
    }

    pub fn m(n: usize) -> Self {
        GroupDesc { family: Family::D, rank: n, n }
    }

    pub fn g(n: usize) -> Self {
        GroupDesc { family: Family::D, rank: n + 1, n }
    }

    /// Positive roots as integer vectors: `e_i - e_j`, `e_i + e_j` (`i < j`)
    /// and, for type B, the short roots `e_i`.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut out = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let mut a = vec![0; r];
                a[i] = 1;
                a[j] = -1;
                out.push(a.clone());
                a[j] = 1;
                out.push(a);
            }
        }
        if self.family == Family::B {
            for i in 0..r {
                let mut a = vec![0; r];
                a[i] = 1;
                out.push(a);
            }
        }
        out
    }

    /// Half-sum of positive roots, doubled.
    pub fn rho_doubled(&self) -> Vec<i64> {
        let r = self.rank as i64;
        (0..r)
            .map(|i| match self.family {
                Family::D => 2 * (r - 1 - i),
                Family::B => 2 * (r - 1 - i) + 1,
            })
            .collect()
    }

    pub fn rho(&self) -> Weight {
        Weight::from_doubled(&self.rho_doubled())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        let c = w.coords();
        if c.len() != self.rank {
            return false;
        }
        let r = self.rank;
        if r == 0 {
            return true;
        }
        let chain = (0..r.saturating_sub(1)).all(|i| match (self.family, i + 2 == r) {
            (Family::D, true) => c[i] >= c[i + 1].abs(),
            _ => c[i] >= c[i + 1],
        });
        match self.family {
            Family::B => chain && c[r - 1] >= Half::ZERO,
            Family::D => chain,
        }
    }

    /// Check that `w` is a highest weight of an irreducible representation.
    pub fn validate(&self, w: &Weight) -> Result<(), RootDataError> {
        if w.len() != self.rank {
            return Err(RootDataError::WrongRank { expected: self.rank, got: w.len() });
        }
        if !w.has_uniform_parity() {
            return Err(RootDataError::MixedParity(w.to_string()));
        }
        if !self.is_dominant(w) {
            return Err(RootDataError::NotDominant(w.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::B => "B",
            Family::D => "D",
        };
        write!(f, "{fam}{}", self.rank)
    }
}

/// A highest weight attached to a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Irrep {
    pub group: GroupDesc,
    pub weight: Weight,
}

impl Irrep {
    pub fn new(group: GroupDesc, weight: Weight) -> Result<Self, RootDataError> {
        group.validate(&weight)?;
        Ok(Irrep { group, weight })
    }

    pub fn trivial(group: GroupDesc) -> Self {
        Irrep { group, weight: Weight::zero(group.rank) }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.group, self.weight)
    }
}
