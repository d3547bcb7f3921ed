//! Random-walk quantities that follow from the resistance profile, and a
//! seeded Monte Carlo estimator for hitting times on explicit graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::array::IntersectionArray;
use crate::error::{AnalysisError, GraphError};
use crate::exact::{fraction_string, q, to_f64, Q};
use crate::graph::{laplacian_spectral_gap, verify_distance_regular, ExplicitGraph, EIGEN_TOLERANCE};
use crate::resistance::resistance_profile;

/// `C_j = 2m · d_j`.
pub fn commute_time(arr: &IntersectionArray, j: usize) -> Result<Q, AnalysisError> {
    let profile = resistance_profile(arr)?;
    if j == 0 || j > arr.diameter() {
        return Err(AnalysisError::DistanceOutOfRange { j, diameter: arr.diameter() });
    }
    Ok(q(2) * &profile.m * profile.at(j))
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkBoundsReport {
    pub array: IntersectionArray,
    pub n: Q,
    pub m: Q,
    /// `C_1 … C_D`.
    pub commute_times: Vec<Q>,
    /// `2(n-1)`.
    pub hitting_bound: Q,
    /// `4(n-1)`.
    pub commute_bound: Q,
    /// `4(n-1) ln n`, the leading term only.
    pub cover_bound_dominant: f64,
    /// `k / (4(n-1))`.
    pub spectral_lower_bound: Q,
    /// Distances `j` with `C_j > 4(n-1)`.
    pub commute_bound_exceeded: Vec<usize>,
}

impl Serialize for WalkBoundsReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            array: &'a IntersectionArray,
            n: String,
            m: String,
            commute_times: Vec<String>,
            hitting_bound: String,
            commute_bound: String,
            cover_bound_dominant: f64,
            cover_bound_note: &'static str,
            spectral_lower_bound: String,
            commute_bound_exceeded: &'a [usize],
        }
        Wire {
            array: &self.array,
            n: fraction_string(&self.n),
            m: fraction_string(&self.m),
            commute_times: self.commute_times.iter().map(fraction_string).collect(),
            hitting_bound: fraction_string(&self.hitting_bound),
            commute_bound: fraction_string(&self.commute_bound),
            cover_bound_dominant: self.cover_bound_dominant,
            cover_bound_note: "asymptotic dominant term; the o(1) correction is omitted",
            spectral_lower_bound: fraction_string(&self.spectral_lower_bound),
            commute_bound_exceeded: &self.commute_bound_exceeded,
        }
        .serialize(s)
    }
}

pub fn walk_bounds(arr: &IntersectionArray) -> Result<WalkBoundsReport, AnalysisError> {
    if arr.valency() < 3 {
        return Err(AnalysisError::ValencyTooSmall(arr.valency()));
    }
    let profile = resistance_profile(arr)?;
    let n_minus_one = &profile.n - q(1);
    let commute_times: Vec<Q> = profile.d.iter().map(|d| q(2) * &profile.m * d).collect();
    let commute_bound = q(4) * &n_minus_one;
    let commute_bound_exceeded =
        commute_times.iter().enumerate().filter(|(_, c)| **c > commute_bound).map(|(i, _)| i + 1).collect();
    let n_f = to_f64(&profile.n);
    Ok(WalkBoundsReport {
        array: arr.clone(),
        hitting_bound: q(2) * &n_minus_one,
        cover_bound_dominant: 4.0 * (n_f - 1.0) * n_f.ln(),
        spectral_lower_bound: q(arr.valency() as i64) / (q(4) * &n_minus_one),
        commute_bound,
        commute_times,
        commute_bound_exceeded,
        n: profile.n,
        m: profile.m,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(trials)`.
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

impl MonteCarloEstimate {
    fn from_sums(sum: u128, sum_sq: u128, trials: u64, seed: u64) -> Self {
        let t = trials as f64;
        let mean = sum as f64 / t;
        let stderr = if trials > 1 {
            // exact integer numerator: t·Σx² - (Σx)²
            let spread = (trials as u128 * sum_sq - sum * sum) as f64;
            (spread / (t * (t - 1.0))).sqrt() / t.sqrt()
        } else {
            0.0
        };
        Self { mean, stderr, trials, seed }
    }

    /// `|mean - expected| / stderr`.
    pub fn z_score(&self, expected: f64) -> f64 {
        if self.stderr == 0.0 {
            if self.mean == expected { 0.0 } else { f64::INFINITY }
        } else {
            (self.mean - expected).abs() / self.stderr
        }
    }
}

/// Independent simple random walks from `u` until the first visit to `v`.
///
/// Steps pick a uniformly random neighbour. The generator is ChaCha8 seeded
/// with `seed` via `seed_from_u64`, consumed sequentially, so results depend
/// only on `(seed, trials)`.
pub fn simulate_hitting_time(
    g: &ExplicitGraph,
    u: usize,
    v: usize,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sum_sq) = (0u128, 0u128);
    for _ in 0..trials.max(1) {
        let mut at = u;
        let mut steps = 0u64;
        while at != v {
            let nbrs = g.neighbors(at);
            at = nbrs[rng.random_range(0..nbrs.len())];
            steps += 1;
        }
        sum += steps as u128;
        sum_sq += (steps as u128) * (steps as u128);
    }
    Ok(MonteCarloEstimate::from_sums(sum, sum_sq, trials.max(1), seed))
}

pub const COVER_SIMULATION_MAX_N: usize = 50;

/// Steps until every vertex has been visited, starting from `start`.
/// Only offered for graphs with at most [`COVER_SIMULATION_MAX_N`] vertices.
pub fn simulate_cover_time(
    g: &ExplicitGraph,
    start: usize,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate, GraphError> {
    g.check_vertex(start)?;
    if g.n() > COVER_SIMULATION_MAX_N {
        return Err(GraphError::BadParams {
            family: "cover simulation".into(),
            detail: format!("n = {} exceeds {COVER_SIMULATION_MAX_N}", g.n()),
        });
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sum_sq) = (0u128, 0u128);
    for _ in 0..trials.max(1) {
        let mut seen = vec![false; g.n()];
        seen[start] = true;
        let mut remaining = g.n() - 1;
        let mut at = start;
        let mut steps = 0u64;
        while remaining > 0 {
            let nbrs = g.neighbors(at);
            at = nbrs[rng.random_range(0..nbrs.len())];
            steps += 1;
            if !seen[at] {
                seen[at] = true;
                remaining -= 1;
            }
        }
        sum += steps as u128;
        sum_sq += (steps as u128) * (steps as u128);
    }
    Ok(MonteCarloEstimate::from_sums(sum, sum_sq, trials.max(1), seed))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCheck {
    pub sigma: f64,
    /// `1 / (n · d_D)`.
    pub resistance_bound: String,
    /// `k / (4(n-1))`.
    pub valency_bound: String,
    pub sigma_above_resistance_bound: bool,
    pub resistance_bound_above_valency_bound: bool,
    pub pass: bool,
}

/// `σ >= 1/(n·d_D) >= k/(4(n-1))`; the first inequality within
/// [`EIGEN_TOLERANCE`], the second exactly.
pub fn spectral_check(g: &ExplicitGraph, arr: &IntersectionArray) -> Result<SpectralCheck, GraphError> {
    let verified = verify_distance_regular(g)?;
    if &verified != arr {
        return Err(GraphError::ArrayMismatch);
    }
    let profile = resistance_profile(arr).map_err(|_| GraphError::ArrayMismatch)?;
    let sigma = laplacian_spectral_gap(g);
    let resistance_bound = q(1) / (&profile.n * profile.max());
    let valency_bound = q(arr.valency() as i64) / (q(4) * (&profile.n - q(1)));
    let upper = sigma >= to_f64(&resistance_bound) - EIGEN_TOLERANCE;
    let middle = resistance_bound >= valency_bound;
    Ok(SpectralCheck {
        sigma,
        resistance_bound: fraction_string(&resistance_bound),
        valency_bound: fraction_string(&valency_bound),
        sigma_above_resistance_bound: upper,
        resistance_bound_above_valency_bound: middle,
        pass: upper && middle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use crate::graph::construct_named_graph;

    fn arr(s: &str) -> IntersectionArray {
        IntersectionArray::parse(s).unwrap()
    }

    #[test]
    fn commute_times() {
        let cube = arr("(3,2,1;1,2,3)");
        assert_eq!(commute_time(&cube, 1).unwrap(), q(14));
        assert_eq!(commute_time(&cube, 3).unwrap(), q(20));
        assert_eq!(commute_time(&arr("(3,2;1,1)"), 2).unwrap(), q(24));
        assert!(matches!(commute_time(&cube, 4), Err(AnalysisError::DistanceOutOfRange { .. })));
        assert!(commute_time(&cube, 0).is_err());
    }

    #[test]
    fn bounds() {
        let cube = walk_bounds(&arr("(3,2,1;1,2,3)")).unwrap();
        assert_eq!(cube.hitting_bound, q(14));
        assert_eq!(cube.commute_bound, q(28));
        assert_eq!(cube.spectral_lower_bound, frac(3, 28));
        assert!(cube.commute_bound_exceeded.is_empty());

        let bs = walk_bounds(&arr("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)")).unwrap();
        assert_eq!(bs.commute_bound, q(404));
        assert_eq!(bs.m, q(153));
        assert_eq!(bs.commute_times.last().unwrap(), &q(390));

        let k4 = walk_bounds(&arr("(3;1)")).unwrap();
        assert!((k4.cover_bound_dominant - 12.0 * 4f64.ln()).abs() < 1e-12);
        assert!((k4.cover_bound_dominant - 16.64).abs() < 0.01);

        assert_eq!(walk_bounds(&arr("(2,1;1,1)")), Err(AnalysisError::ValencyTooSmall(2)));
    }

    #[test]
    fn violation_arrays_exceed_commute_bound() {
        let r = walk_bounds(&arr("(3,2,2,1,1,1,1;1,1,1,1,1,1,3)")).unwrap();
        assert_eq!(r.commute_bound_exceeded, vec![6, 7]);
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let g = construct_named_graph("hypercube", &[3]).unwrap();
        let a = simulate_hitting_time(&g, 0, 1, 2000, 7).unwrap();
        let b = simulate_hitting_time(&g, 0, 1, 2000, 7).unwrap();
        assert_eq!(a, b);
        let c = simulate_hitting_time(&g, 0, 1, 2000, 8).unwrap();
        assert_ne!(a.mean, c.mean);
        assert_eq!(simulate_hitting_time(&g, 3, 3, 10, 1).unwrap().mean, 0.0);
    }

    #[test]
    fn estimator_statistics() {
        // samples 1, 3: mean 2, sd sqrt(2), stderr 1
        let e = MonteCarloEstimate::from_sums(4, 10, 2, 0);
        assert_eq!(e.mean, 2.0);
        assert!((e.stderr - 1.0).abs() < 1e-12);
        assert_eq!(e.z_score(4.0), 2.0);
    }

    #[test]
    fn cover_time_small_graph() {
        let k4 = construct_named_graph("complete", &[4]).unwrap();
        // coupon collector over 3 others: 1 + 3/2 + 3 = 5.5
        let e = simulate_cover_time(&k4, 0, 20000, 3).unwrap();
        assert!(e.z_score(5.5) < 4.0, "{e:?}");
        let big = construct_named_graph("hypercube", &[6]).unwrap();
        assert!(simulate_cover_time(&big, 0, 1, 1).is_err());
    }

    #[test]
    fn spectral_chain_examples() {
        let cube = construct_named_graph("hypercube", &[3]).unwrap();
        let r = spectral_check(&cube, &arr("(3,2,1;1,2,3)")).unwrap();
        assert!((r.sigma - 2.0).abs() < 1e-8);
        assert_eq!(r.resistance_bound, "3/20");
        assert_eq!(r.valency_bound, "3/28");
        assert!(r.pass);

        let k4 = construct_named_graph("complete", &[4]).unwrap();
        let r = spectral_check(&k4, &arr("(3;1)")).unwrap();
        assert_eq!((r.resistance_bound.as_str(), r.valency_bound.as_str()), ("1/2", "1/4"));

        let pet = construct_named_graph("petersen", &[]).unwrap();
        let r = spectral_check(&pet, &arr("(3,2;1,1)")).unwrap();
        assert_eq!((r.resistance_bound.as_str(), r.valency_bound.as_str()), ("1/8", "1/12"));
        assert!(r.pass);

        assert_eq!(spectral_check(&pet, &arr("(3,2,1;1,2,3)")), Err(GraphError::ArrayMismatch));
    }
}
