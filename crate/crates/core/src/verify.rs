//! End-to-end checks of the formulas on one explicit graph.

use num_traits::Zero;
use serde::Serialize;

use crate::array::IntersectionArray;
use crate::error::GraphError;
use crate::exact::fraction_string;
use crate::graph::{
    build_harmonic_function, check_harmonicity, effective_resistance_oracle, measure_current,
    verify_distance_regular, ExplicitGraph,
};
use crate::potentials::potentials_recursive;
use crate::resistance::resistance_profile;
use crate::walks::{spectral_check, SpectralCheck};

/// Largest graph for which the all-pairs oracle sweep is allowed.
pub const ALL_PAIRS_MAX_N: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarmonicCheck {
    pub pair: (usize, usize),
    pub max_residual: String,
    pub current: String,
    pub expected_current: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub distance: usize,
    pub pair: (usize, usize),
    pub oracle: String,
    pub formula: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllPairsCheck {
    pub pairs_checked: usize,
    pub mismatches: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub array: Option<IntersectionArray>,
    pub regularity_failure: Option<String>,
    pub harmonic: Option<HarmonicCheck>,
    pub oracle: Vec<OracleCheck>,
    pub all_pairs: Option<AllPairsCheck>,
    pub spectral: Option<SpectralCheck>,
    pub spectral_note: Option<String>,
    pub pass: bool,
}

/// Distance-regularity, harmonicity on the first edge, current, one oracle
/// solve per distance class and the spectral chain (valency at least 3).
pub fn verify_graph(g: &ExplicitGraph, all_pairs: bool) -> Result<VerifyReport, GraphError> {
    if all_pairs && g.n() > ALL_PAIRS_MAX_N {
        return Err(GraphError::BadParams {
            family: "all-pairs oracle".into(),
            detail: format!("n = {} exceeds {ALL_PAIRS_MAX_N}", g.n()),
        });
    }
    let mut report = VerifyReport {
        schema: 1,
        n: g.n(),
        m: g.edge_count(),
        array: None,
        regularity_failure: None,
        harmonic: None,
        oracle: Vec::new(),
        all_pairs: None,
        spectral: None,
        spectral_note: None,
        pass: false,
    };
    let arr = match verify_distance_regular(g) {
        Ok(arr) => arr,
        Err(e @ (GraphError::NotDistanceRegular(_) | GraphError::NotConnected)) => {
            report.regularity_failure = Some(e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.array = Some(arr.clone());
    let phi = potentials_recursive(&arr);
    let profile = resistance_profile(&arr).map_err(|_| GraphError::ArrayMismatch)?;

    let (u, v) = g.edges()[0];
    let f = build_harmonic_function(g, u, v, &phi)?;
    let residual = check_harmonicity(g, &f);
    let current = measure_current(g, &f, u);
    report.harmonic = Some(HarmonicCheck {
        pair: (u, v),
        pass: residual.is_zero() && current == f.expected_current,
        max_residual: fraction_string(&residual),
        current: fraction_string(&current),
        expected_current: fraction_string(&f.expected_current),
    });

    for j in 1..=arr.diameter() {
        let w = g.vertex_at_distance(0, j).expect("distance-regular graph realises every distance");
        let oracle = effective_resistance_oracle(g, 0, w);
        report.oracle.push(OracleCheck {
            distance: j,
            pair: (0, w),
            equal: &oracle == profile.at(j),
            oracle: fraction_string(&oracle),
            formula: fraction_string(profile.at(j)),
        });
    }

    if all_pairs {
        let mut check = AllPairsCheck { pairs_checked: 0, mismatches: Vec::new() };
        for x in 0..g.n() {
            let dist = g.distances_from(x);
            for (y, &dy) in dist.iter().enumerate().skip(x + 1) {
                check.pairs_checked += 1;
                if &effective_resistance_oracle(g, x, y) != profile.at(dy) {
                    check.mismatches.push((x, y));
                }
            }
        }
        report.all_pairs = Some(check);
    }

    if arr.valency() >= 3 {
        report.spectral = Some(spectral_check(g, &arr)?);
    } else {
        report.spectral_note = Some(format!("spectral chain needs valency >= 3, got {}", arr.valency()));
    }

    report.pass = report.harmonic.as_ref().is_some_and(|h| h.pass)
        && report.oracle.iter().all(|o| o.equal)
        && report.all_pairs.as_ref().is_none_or(|a| a.mismatches.is_empty())
        && report.spectral.as_ref().is_none_or(|s| s.pass);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_named_graph;

    #[test]
    fn cube_verifies() {
        let g = construct_named_graph("hypercube", &[3]).unwrap();
        let r = verify_graph(&g, true).unwrap();
        assert!(r.pass, "{r:?}");
        let formula: Vec<&str> = r.oracle.iter().map(|o| o.oracle.as_str()).collect();
        assert_eq!(formula, ["7/12", "3/4", "5/6"]);
        assert_eq!(r.all_pairs.unwrap().pairs_checked, 28);
    }

    #[test]
    fn cycle_skips_spectral_chain() {
        let g = construct_named_graph("cycle", &[9]).unwrap();
        let r = verify_graph(&g, false).unwrap();
        assert!(r.pass);
        assert!(r.spectral.is_none());
        assert!(r.spectral_note.is_some());
    }

    #[test]
    fn non_drg_fails_without_error() {
        let path = ExplicitGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = verify_graph(&path, false).unwrap();
        assert!(!r.pass);
        assert!(r.regularity_failure.is_some());
    }

    #[test]
    fn all_pairs_cap() {
        let g = construct_named_graph("hypercube", &[6]).unwrap();
        assert!(verify_graph(&g, true).is_err());
    }
}
