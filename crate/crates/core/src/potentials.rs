//! The potential sequence `φ_0 … φ_{D-1}` of the unit-resistor circuit driven
//! across an edge, computed by the forward recursion and by the shell-count
//! closed form.

use num_traits::Zero;
use serde::Serialize;

use crate::array::{compute_distance_distribution, DistanceDistribution, IntersectionArray};
use crate::error::AnalysisError;
use crate::exact::{fraction_string, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialSource {
    Recursive,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialSequence {
    /// `φ_0 … φ_D`; the last entry is the boundary value `φ_D = 0`.
    phi: Vec<Q>,
    pub source: PotentialSource,
}

impl PotentialSequence {
    pub fn from_values(mut values: Vec<Q>, source: PotentialSource) -> Self {
        values.push(Q::zero());
        Self { phi: values, source }
    }

    /// `φ_0 … φ_{D-1}`.
    pub fn values(&self) -> &[Q] {
        &self.phi[..self.phi.len() - 1]
    }

    /// `φ_i` for `0 <= i <= D`.
    pub fn phi(&self, i: usize) -> &Q {
        &self.phi[i]
    }

    pub fn with_boundary(&self) -> &[Q] {
        &self.phi
    }

    pub fn diameter(&self) -> usize {
        self.phi.len() - 1
    }

    /// `φ_0 + … + φ_{j-1}`.
    pub fn prefix_sum(&self, j: usize) -> Q {
        self.phi[..j].iter().fold(Q::zero(), |acc, x| acc + x)
    }

    /// Same values regardless of which route produced them.
    pub fn same_values(&self, other: &Self) -> bool {
        self.phi == other.phi
    }

    pub fn fraction_strings(&self) -> Vec<String> {
        self.values().iter().map(fraction_string).collect()
    }
}

/// `φ_0 = n - 1`, `φ_i = (c_i φ_{i-1} - k) / b_i`.
pub fn potentials_recursive(arr: &IntersectionArray) -> PotentialSequence {
    let dist = compute_distance_distribution(arr);
    let k = q(arr.valency() as i64);
    let mut phi = Vec::with_capacity(arr.diameter());
    phi.push(&dist.n - q(1));
    for i in 1..arr.diameter() {
        let next = (q(arr.c(i) as i64) * &phi[i - 1] - &k) / q(arr.b(i) as i64);
        phi.push(next);
    }
    PotentialSequence::from_values(phi, PotentialSource::Recursive)
}

/// `φ_i = k · (Σ_{j>i} k_j) / e_i`.
pub fn potentials_closed_form(arr: &IntersectionArray, dist: &DistanceDistribution) -> PotentialSequence {
    let k = q(arr.valency() as i64);
    let d = arr.diameter();
    let mut tail = Q::zero();
    let mut phi = vec![Q::zero(); d];
    for i in (0..d).rev() {
        tail += &dist.k_sizes[i + 1];
        phi[i] = &k * &tail / &dist.e[i];
    }
    PotentialSequence::from_values(phi, PotentialSource::ClosedForm)
}

/// Checks `φ_0 = n - 1`, positivity, strict decrease and `φ_{D-1} = k / c_D`.
pub fn check_potential_properties(p: &PotentialSequence, arr: &IntersectionArray) -> Result<(), AnalysisError> {
    let d = arr.diameter();
    if p.diameter() != d {
        return Err(AnalysisError::PropertyViolation {
            index: 0,
            detail: format!("sequence has {} terms, diameter is {d}", p.diameter()),
        });
    }
    let dist = compute_distance_distribution(arr);
    let expected_phi0 = &dist.n - q(1);
    if p.phi(0) != &expected_phi0 {
        return Err(AnalysisError::PropertyViolation {
            index: 0,
            detail: format!("φ0 = {}, expected n - 1 = {}", fraction_string(p.phi(0)), fraction_string(&expected_phi0)),
        });
    }
    for (i, v) in p.values().iter().enumerate() {
        if v <= &Q::zero() {
            return Err(AnalysisError::PropertyViolation { index: i, detail: format!("φ{i} = {} is not positive", fraction_string(v)) });
        }
    }
    for i in 0..d.saturating_sub(1) {
        if p.phi(i) <= p.phi(i + 1) {
            return Err(AnalysisError::PropertyViolation {
                index: i,
                detail: format!(
                    "φ{} = {} does not decrease from φ{i} = {}",
                    i + 1,
                    fraction_string(p.phi(i + 1)),
                    fraction_string(p.phi(i))
                ),
            });
        }
    }
    let boundary = q(arr.valency() as i64) / q(arr.c(d) as i64);
    if p.phi(d - 1) != &boundary {
        return Err(AnalysisError::PropertyViolation {
            index: d - 1,
            detail: format!("φ{} = {}, expected k/c_D = {}", d - 1, fraction_string(p.phi(d - 1)), fraction_string(&boundary)),
        });
    }
    Ok(())
}
