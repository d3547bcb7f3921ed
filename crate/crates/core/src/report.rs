//! Full single-array analysis, shared by the CLI and the Python bindings.

use serde::Serialize;

use crate::array::{
    check_divisibility, check_head_bound, check_integrality, compute_distance_distribution, validate_basic,
    CheckResult, IntersectionArray,
};
use crate::error::AnalysisError;
use crate::exact::{decimal_string, fraction_string, Q};
use crate::potentials::{check_potential_properties, potentials_closed_form, potentials_recursive};
use crate::resistance::{classify_biggs, resistance_profile, BiggsClass, BiggsVerdict};
use crate::walks::{walk_bounds, WalkBoundsReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub fraction: String,
    pub decimal: String,
}

impl From<&Q> for ExactValue {
    fn from(x: &Q) -> Self {
        Self { fraction: fraction_string(x), decimal: decimal_string(x, 6) }
    }
}

fn exact_all(xs: &[Q]) -> Vec<ExactValue> {
    xs.iter().map(ExactValue::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionSection {
    pub k_sizes: Vec<String>,
    pub e: Vec<String>,
    pub n: String,
    pub m: String,
    pub integral: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PotentialSection {
    /// `φ_0 … φ_{D-1}`.
    pub phi: Vec<ExactValue>,
    pub phi_d: String,
    pub closed_form_agrees: bool,
    pub properties: Result<(), String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResistanceSection {
    /// `d_1 … d_D`.
    pub d: Vec<ExactValue>,
    pub ratio: ExactValue,
    pub k_factor: ExactValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub array: IntersectionArray,
    pub validation: Vec<CheckResult>,
    pub filters: Vec<CheckResult>,
    pub distribution: Option<DistributionSection>,
    pub potentials: Option<PotentialSection>,
    pub resistance: Option<ResistanceSection>,
    pub verdict: Option<BiggsVerdict>,
    pub walk_bounds: Option<WalkBoundsReport>,
}

impl AnalysisReport {
    /// True when every feasibility check passes and the verdict is not a violation.
    pub fn feasible(&self) -> bool {
        self.validation.iter().chain(&self.filters).all(|c| c.pass)
            && self.verdict.as_ref().is_some_and(|v| v.class != BiggsClass::Violation)
    }
}

/// Everything computable for one array. Fails only for valency below 3;
/// arrays that break the structural constraints produce a report that stops
/// after validation.
pub fn analyze(arr: &IntersectionArray) -> Result<AnalysisReport, AnalysisError> {
    if arr.valency() < 3 {
        return Err(AnalysisError::ValencyTooSmall(arr.valency()));
    }
    let validation = validate_basic(arr);
    let mut report = AnalysisReport {
        schema: SCHEMA_VERSION,
        array: arr.clone(),
        validation: validation.checks.clone(),
        filters: Vec::new(),
        distribution: None,
        potentials: None,
        resistance: None,
        verdict: None,
        walk_bounds: None,
    };
    if !validation.overall {
        return Ok(report);
    }
    let dist = compute_distance_distribution(arr);
    report.filters = vec![check_integrality(&dist), check_divisibility(arr), check_head_bound(arr)];
    report.distribution = Some(DistributionSection {
        k_sizes: dist.k_sizes.iter().map(fraction_string).collect(),
        e: dist.e.iter().map(fraction_string).collect(),
        n: fraction_string(&dist.n),
        m: fraction_string(&dist.m),
        integral: dist.integral,
    });
    let recursive = potentials_recursive(arr);
    let closed = potentials_closed_form(arr, &dist);
    report.potentials = Some(PotentialSection {
        phi: exact_all(recursive.values()),
        phi_d: fraction_string(recursive.phi(arr.diameter())),
        closed_form_agrees: recursive.same_values(&closed),
        properties: check_potential_properties(&recursive, arr).map_err(|e| e.to_string()),
    });
    let profile = resistance_profile(arr)?;
    report.resistance = Some(ResistanceSection {
        d: exact_all(&profile.d),
        ratio: ExactValue::from(&profile.ratio),
        k_factor: ExactValue::from(&profile.k_factor),
    });
    report.verdict = Some(classify_biggs(arr)?);
    report.walk_bounds = Some(walk_bounds(arr)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biggs_smith_report() {
        let r = analyze(&"(3,2,2,2,1,1,1;1,1,1,1,1,1,3)".parse().unwrap()).unwrap();
        let v = r.verdict.as_ref().unwrap();
        assert_eq!(v.class, BiggsClass::Extremal);
        assert_eq!(v.matched_extremal, Some("Biggs-Smith Graph"));
        assert_eq!(r.resistance.as_ref().unwrap().ratio.fraction, "94/101");
        assert!(r.potentials.as_ref().unwrap().closed_form_agrees);
        assert!(r.feasible());
    }

    #[test]
    fn invalid_array_stops_after_validation() {
        let r = analyze(&"(3,2,3;1,1,3)".parse().unwrap()).unwrap();
        assert!(r.verdict.is_none());
        assert!(!r.feasible());
        assert!(analyze(&"(2,1;1,1)".parse().unwrap()).is_err());
    }

    #[test]
    fn report_is_stable_json() {
        let arr = "(3,2,1;1,2,3)".parse().unwrap();
        let a = serde_json::to_string(&analyze(&arr).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze(&arr).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"schema":1,"array":"(3,2,1;1,2,3)""#));
    }
}
