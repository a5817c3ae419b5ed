use alloc::vec::Vec;

use crate::{Error, Result};

/// Tolerance on the total probability mass.
const SUM_TOLERANCE: f64 = 1e-6;

/// A class-probability distribution: entries in `[0, 1]` summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist(Vec<f64>);

impl ProbDist {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::invalid("distribution has no classes"));
        }
        if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::invalid("probabilities must lie in [0, 1]"));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::invalid("probabilities must sum to 1"));
        }
        Ok(Self(probs))
    }

    pub fn uniform(classes: usize) -> Result<Self> {
        Self::new(alloc::vec![1.0 / classes as f64; classes])
    }

    pub fn one_hot(classes: usize, hot: usize) -> Result<Self> {
        if hot >= classes {
            return Err(Error::invalid("hot class out of range"));
        }
        let mut p = alloc::vec![0.0; classes];
        p[hot] = 1.0;
        Self::new(p)
    }

    #[inline]
    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    #[inline]
    pub fn classes(&self) -> usize {
        self.0.len()
    }
}

/// Shannon entropy in bits, `0 log 0 = 0`. Ranges over `[0, log2 K]`.
pub fn entropy(p: &ProbDist) -> f64 {
    let h: f64 =
        p.0.iter()
            .filter(|&&q| q > 0.0)
            .map(|&q| q * libm::log2(q))
            .sum();
    // -0.0 for one-hot inputs.
    if h == 0.0 {
        0.0
    } else {
        -h
    }
}

/// Arithmetic mean of [`entropy`] over a non-empty list.
pub fn mean_entropy(dists: &[ProbDist]) -> Result<f64> {
    if dists.is_empty() {
        return Err(Error::invalid("mean entropy of an empty list"));
    }
    Ok(dists.iter().map(entropy).sum::<f64>() / dists.len() as f64)
}
