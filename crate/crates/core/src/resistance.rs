//! Per-distance resistances, the ratio `(φ_1 + … + φ_{D-1}) / φ_0`, and the
//! classification of arrays against the `0.87` bound and its four exceptions.

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::array::{compute_distance_distribution, validate_basic, IntersectionArray};
use crate::error::AnalysisError;
use crate::exact::{decimal_string, frac, fraction_string, q, Q};
use crate::potentials::{potentials_recursive, PotentialSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResistanceProfile {
    /// `d_1 … d_D`.
    pub d: Vec<Q>,
    pub ratio: Q,
    /// `d_D / d_1`.
    pub k_factor: Q,
    pub n: Q,
    pub m: Q,
    pub k: u64,
}

impl ResistanceProfile {
    /// Resistance between vertices at distance `j`, `1 <= j <= D`.
    pub fn at(&self, j: usize) -> &Q {
        &self.d[j - 1]
    }

    pub fn max(&self) -> &Q {
        self.d.last().expect("diameter is at least one")
    }
}

fn ensure_valid(arr: &IntersectionArray) -> Result<(), AnalysisError> {
    let report = validate_basic(arr);
    match report.first_failure() {
        Some(check) => Err(AnalysisError::Invalid(format!("{}: {}", check.name, check.detail))),
        None => Ok(()),
    }
}

/// `(φ_1 + … + φ_{D-1}) / φ_0`; zero for `D = 1`.
pub fn ratio_of(p: &PotentialSequence) -> Q {
    let tail = p.values()[1..].iter().fold(Q::zero(), |acc, x| acc + x);
    tail / p.phi(0)
}

/// `d_j = 2 (φ_0 + … + φ_{j-1}) / I` with driving current `I = nk`.
pub fn resistance_profile(arr: &IntersectionArray) -> Result<ResistanceProfile, AnalysisError> {
    ensure_valid(arr)?;
    let dist = compute_distance_distribution(arr);
    let p = potentials_recursive(arr);
    let current = &dist.n * q(arr.valency() as i64);
    let mut d = Vec::with_capacity(arr.diameter());
    let mut acc = Q::zero();
    for phi in p.values() {
        acc += phi;
        d.push(q(2) * &acc / &current);
    }
    let k_factor = d.last().unwrap() / &d[0];
    Ok(ResistanceProfile { d, ratio: ratio_of(&p), k_factor, n: dist.n, m: dist.m, k: arr.valency() })
}

pub fn biggs_ratio(arr: &IntersectionArray) -> Result<Q, AnalysisError> {
    ensure_valid(arr)?;
    Ok(ratio_of(&potentials_recursive(arr)))
}

/// The sharp constant `1 + 94/101` attained only by the Biggs-Smith array.
pub fn sharp_constant() -> Q {
    q(1) + frac(94, 101)
}

pub fn biggs_threshold() -> Q {
    frac(87, 100)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalEntry {
    pub name: &'static str,
    pub array: IntersectionArray,
    pub ratio: Q,
}

const EXTREMAL: [(&str, &str, i64, i64); 4] = [
    ("Biggs-Smith Graph", "(3,2,2,2,1,1,1;1,1,1,1,1,1,3)", 94, 101),
    ("Foster Graph", "(3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3)", 319, 356),
    ("Flag graph of GH(2,2)", "(4,2,2,2,2,2;1,1,1,1,1,2)", 166, 188),
    ("Tutte's 12-Cage", "(3,2,2,2,2,2;1,1,1,1,1,3)", 109, 125),
];

/// The four arrays whose ratio reaches `0.87`.
pub fn extremal_set() -> Vec<ExtremalEntry> {
    EXTREMAL
        .iter()
        .map(|&(name, text, num, den)| ExtremalEntry {
            name,
            array: IntersectionArray::parse(text).expect("built-in array"),
            ratio: frac(num, den),
        })
        .collect()
}

pub fn extremal_match(arr: &IntersectionArray) -> Option<&'static str> {
    EXTREMAL
        .iter()
        .find(|(_, text, _, _)| IntersectionArray::parse(text).is_ok_and(|e| &e == arr))
        .map(|&(name, ..)| name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BiggsClass {
    PassStrict,
    Extremal,
    Violation,
}

impl BiggsClass {
    pub fn as_str(self) -> &'static str {
        match self {
            BiggsClass::PassStrict => "PASS_STRICT",
            BiggsClass::Extremal => "EXTREMAL",
            BiggsClass::Violation => "VIOLATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiggsVerdict {
    pub array: IntersectionArray,
    pub class: BiggsClass,
    pub ratio: Q,
    pub matched_extremal: Option<&'static str>,
}

impl Serialize for BiggsVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            array: &'a IntersectionArray,
            ratio_fraction: String,
            ratio_decimal: String,
            class: BiggsClass,
            matched_extremal: Option<&'static str>,
        }
        Wire {
            array: &self.array,
            ratio_fraction: fraction_string(&self.ratio),
            ratio_decimal: decimal_string(&self.ratio, 6),
            class: self.class,
            matched_extremal: self.matched_extremal,
        }
        .serialize(s)
    }
}

/// Exact comparison against `87/100`; membership in the extremal set is by
/// array equality, never by ratio.
pub fn classify_biggs(arr: &IntersectionArray) -> Result<BiggsVerdict, AnalysisError> {
    if arr.valency() < 3 {
        return Err(AnalysisError::ValencyTooSmall(arr.valency()));
    }
    let ratio = biggs_ratio(arr)?;
    let matched_extremal = extremal_match(arr);
    let class = if matched_extremal.is_some() {
        BiggsClass::Extremal
    } else if ratio < biggs_threshold() {
        BiggsClass::PassStrict
    } else {
        BiggsClass::Violation
    };
    Ok(BiggsVerdict { array: arr.clone(), class, ratio, matched_extremal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        IntersectionArray::parse(s).unwrap()
    }

    #[test]
    fn cube_profile() {
        let p = resistance_profile(&arr("(3,2,1;1,2,3)")).unwrap();
        assert_eq!(p.d, vec![frac(7, 12), frac(3, 4), frac(5, 6)]);
        assert_eq!(p.k_factor, q(1) + &p.ratio);
    }

    #[test]
    fn small_profiles() {
        let k4 = resistance_profile(&arr("(3;1)")).unwrap();
        assert_eq!(k4.d, vec![frac(1, 2)]);
        assert_eq!(k4.ratio, Q::zero());
        let petersen = resistance_profile(&arr("(3,2;1,1)")).unwrap();
        assert_eq!(petersen.d, vec![frac(3, 5), frac(4, 5)]);
        assert_eq!(petersen.at(1), &((&petersen.n - q(1)) / &petersen.m));
    }

    #[test]
    fn ratios() {
        assert_eq!(biggs_ratio(&arr("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)")).unwrap(), frac(94, 101));
        assert_eq!(biggs_ratio(&arr("(3,2,2,2,2,2;1,1,1,1,1,3)")).unwrap(), frac(109, 125));
        assert_eq!(biggs_ratio(&arr("(3,2,2,1,1,1,1;1,1,1,1,1,1,3)")).unwrap(), frac(64, 61));
        assert_eq!(decimal_string(&frac(64, 61), 5), "1.04918");
        assert!(biggs_ratio(&arr("(3,3;1,1)")).is_err());
    }

    #[test]
    fn verdicts() {
        let cube = classify_biggs(&arr("(3,2,1;1,2,3)")).unwrap();
        assert_eq!(cube.class, BiggsClass::PassStrict);
        assert_eq!(cube.ratio, frac(3, 7));

        let foster = classify_biggs(&arr("(3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3)")).unwrap();
        assert_eq!(foster.class, BiggsClass::Extremal);
        assert_eq!(foster.matched_extremal, Some("Foster Graph"));

        let bad = classify_biggs(&arr("(5,2,2,1,1,1,1;1,1,1,1,1,1,4)")).unwrap();
        assert_eq!(bad.class, BiggsClass::Violation);
        assert_eq!(bad.ratio, frac(83, 80));
        assert_eq!(decimal_string(&bad.ratio, 4), "1.0375");

        assert_eq!(classify_biggs(&arr("(2,1;1,1)")), Err(AnalysisError::ValencyTooSmall(2)));
    }

    #[test]
    fn extremal_entries_recompute() {
        let set = extremal_set();
        assert_eq!(set.len(), 4);
        assert_eq!(set[0].name, "Biggs-Smith Graph");
        let printed = ["0.930693", "0.896067", "0.882979", "0.872000"];
        for (entry, printed) in set.iter().zip(printed) {
            assert_eq!(biggs_ratio(&entry.array).unwrap(), entry.ratio, "{}", entry.name);
            assert_eq!(decimal_string(&entry.ratio, 6), printed);
            assert!(entry.ratio >= biggs_threshold());
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = classify_biggs(&arr("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)")).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"array":"(3,2,2,2,1,1,1;1,1,1,1,1,1,3)","ratio_fraction":"94/101","ratio_decimal":"0.930693","class":"EXTREMAL","matched_extremal":"Biggs-Smith Graph"}"#
        );
    }
}
