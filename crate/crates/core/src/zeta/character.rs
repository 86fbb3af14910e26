use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::rootdata::{weight_multiplicities, Irrep, VirtualRep, Weight};

/// Net weights of an `M`-representation, evaluated on holonomy angles.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassCharacter {
    weights: Vec<(Vec<f64>, f64)>,
}

impl ClassCharacter {
    fn from_map(map: BTreeMap<Weight, i64>) -> Self {
        ClassCharacter { weights: map.into_iter().filter(|(_, m)| *m != 0).map(|(w, m)| (w.to_f64(), m as f64)).collect() }
    }

    pub fn from_irrep(irrep: &Irrep) -> Self {
        let t = weight_multiplicities(irrep);
        ClassCharacter { weights: t.mults.iter().map(|(w, &m)| (w.to_f64(), m as f64)).collect() }
    }

    pub fn from_virtual(v: &VirtualRep) -> Self {
        Self::from_map(v.weight_sum())
    }

    /// Character of the tensor product.
    pub fn tensor(&self, other: &ClassCharacter) -> ClassCharacter {
        let mut map: BTreeMap<Vec<i64>, f64> = BTreeMap::new();
        for (a, ma) in &self.weights {
            for (b, mb) in &other.weights {
                let key: Vec<i64> = a.iter().zip(b).map(|(x, y)| (2.0 * (x + y)).round() as i64).collect();
                *map.entry(key).or_insert(0.0) += ma * mb;
            }
        }
        ClassCharacter {
            weights: map.into_iter().filter(|(_, m)| *m != 0.0).map(|(k, m)| (k.iter().map(|&x| x as f64 / 2.0).collect(), m)).collect(),
        }
    }

    pub fn weights(&self) -> &[(Vec<f64>, f64)] {
        &self.weights
    }

    pub fn trace(&self, angles: &[f64]) -> Complex64 {
        self.weights
            .iter()
            .map(|(w, m)| Complex64::from_polar(*m, w.iter().zip(angles).map(|(a, b)| a * b).sum::<f64>()))
            .sum()
    }

    /// `sum |mult|`, a bound for `|trace|`.
    pub fn bound(&self) -> f64 {
        self.weights.iter().map(|(_, m)| m.abs()).sum()
    }
}

/// Weights of a `G`-representation, split as `(mu_1, mu_b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitCharacter {
    weights: Vec<(f64, Vec<f64>, f64)>,
}

impl SplitCharacter {
    pub fn from_irrep(irrep: &Irrep) -> Self {
        let t = weight_multiplicities(irrep);
        let weights = t
            .mults
            .iter()
            .map(|(w, &m)| {
                let v = w.to_f64();
                (v[0], v[1..].to_vec(), m as f64)
            })
            .collect();
        SplitCharacter { weights }
    }

    pub fn from_weights(weights: &BTreeMap<Weight, u64>) -> Self {
        SplitCharacter {
            weights: weights
                .iter()
                .map(|(w, &m)| {
                    let v = w.to_f64();
                    (v[0], v[1..].to_vec(), m as f64)
                })
                .collect(),
        }
    }

    /// `sum mult * exp(length * mu_1) * exp(i <mu_b, angles>)`.
    pub fn trace(&self, length: f64, angles: &[f64]) -> Complex64 {
        self.weights
            .iter()
            .map(|(a, b, m)| Complex64::from_polar(m * (length * a).exp(), b.iter().zip(angles).map(|(x, y)| x * y).sum::<f64>()))
            .sum()
    }

    pub fn max_split_weight(&self) -> f64 {
        self.weights.iter().map(|w| w.0).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn bound(&self) -> f64 {
        self.weights.iter().map(|w| w.2.abs()).sum()
    }
}
