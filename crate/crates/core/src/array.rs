//! Intersection arrays: parsing, validation and the combinatorial data they determine.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::ArrayError;
use crate::exact::{fraction_string, q, Q};

/// The parameter sequence `(b_0,…,b_{D-1}; c_1,…,c_D)` of a distance-regular graph.
///
/// Construction only enforces that both halves are non-empty and of equal
/// length; the structural constraints are checked by [`validate_basic`], so
/// that a candidate which breaks them can still be reported on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self, ArrayError> {
        if b.is_empty() || c.is_empty() {
            return Err(ArrayError::MalformedInput("empty half".into()));
        }
        if b.len() != c.len() {
            return Err(ArrayError::LengthMismatch { b_len: b.len(), c_len: c.len() });
        }
        if b.iter().chain(&c).any(|&x| x == 0) {
            return Err(ArrayError::MalformedInput("entries must be positive".into()));
        }
        Ok(Self { b, c })
    }

    pub fn parse(text: &str) -> Result<Self, ArrayError> {
        let mut body = text.trim();
        if let Some(rest) = body.strip_prefix('(') {
            body = rest
                .strip_suffix(')')
                .ok_or_else(|| ArrayError::MalformedInput("unbalanced parenthesis".into()))?;
        } else if body.ends_with(')') {
            return Err(ArrayError::MalformedInput("unbalanced parenthesis".into()));
        }
        let (b_text, c_text) = body
            .split_once(';')
            .ok_or_else(|| ArrayError::MalformedInput("missing `;` between b and c".into()))?;
        if c_text.contains(';') {
            return Err(ArrayError::MalformedInput("more than one `;`".into()));
        }
        let b = parse_half(b_text, "b")?;
        let c = parse_half(c_text, "c")?;
        Self::new(b, c)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    pub fn b_seq(&self) -> &[u64] {
        &self.b
    }

    pub fn c_seq(&self) -> &[u64] {
        &self.c
    }

    /// `b_i` for `0 <= i <= D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`; negative values mean the array is invalid.
    pub fn a(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.valency() as i64 - self.b(i) as i64 - self.c(i) as i64
    }
}

fn parse_half(text: &str, which: &str) -> Result<Vec<u64>, ArrayError> {
    if text.trim().is_empty() {
        return Err(ArrayError::MalformedInput(format!("empty {which} half")));
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u64>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| ArrayError::MalformedInput(format!("`{tok}` is not a positive integer")))
        })
        .collect()
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Strict formatting of leniently parsed text.
pub fn canonical(text: &str) -> Result<String, ArrayError> {
    IntersectionArray::parse(text).map(|a| a.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, pass: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, pass: false, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub array: IntersectionArray,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl FeasibilityReport {
    pub fn new(array: IntersectionArray, checks: Vec<CheckResult>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        Self { array, checks, overall }
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.pass)
    }
}

pub const CHECK_C1: &str = "c1_is_one";
pub const CHECK_B_MONOTONE: &str = "b_monotone";
pub const CHECK_C_MONOTONE: &str = "c_monotone";
pub const CHECK_CROSS: &str = "cross_condition";
pub const CHECK_A_NONNEG: &str = "a_nonnegative";

/// The structural constraints every intersection array must satisfy, in a
/// fixed order. Each failing check names its first violating index.
pub fn validate_basic(arr: &IntersectionArray) -> FeasibilityReport {
    let d = arr.diameter();
    let mut checks = Vec::with_capacity(5);

    checks.push(if arr.c(1) == 1 {
        CheckResult::ok(CHECK_C1, "c1 = 1")
    } else {
        CheckResult::fail(CHECK_C1, format!("c1 = {}, expected 1", arr.c(1)))
    });

    let b_violation = (1..d).find(|&i| {
        if i == 1 {
            arr.b(1) >= arr.b(0)
        } else {
            arr.b(i) > arr.b(i - 1)
        }
    });
    checks.push(match b_violation {
        None => CheckResult::ok(CHECK_B_MONOTONE, "k = b0 > b1 >= ... >= b_{D-1}"),
        Some(1) => CheckResult::fail(
            CHECK_B_MONOTONE,
            format!("i=1: b1 = {} is not below k = {}", arr.b(1), arr.b(0)),
        ),
        Some(i) => CheckResult::fail(
            CHECK_B_MONOTONE,
            format!("i={i}: b{i} = {} exceeds b{} = {}", arr.b(i), i - 1, arr.b(i - 1)),
        ),
    });

    let c_violation = (2..=d).find(|&i| arr.c(i) < arr.c(i - 1));
    checks.push(match c_violation {
        None => CheckResult::ok(CHECK_C_MONOTONE, "c1 <= c2 <= ... <= c_D"),
        Some(i) => CheckResult::fail(
            CHECK_C_MONOTONE,
            format!("i={i}: c{i} = {} is below c{} = {}", arr.c(i), i - 1, arr.c(i - 1)),
        ),
    });

    let cross = (0..d)
        .flat_map(|i| (1..=d - i).map(move |j| (i, j)))
        .find(|&(i, j)| arr.b(i) < arr.c(j));
    checks.push(match cross {
        None => CheckResult::ok(CHECK_CROSS, "b_i >= c_j whenever i + j <= D"),
        Some((i, j)) => CheckResult::fail(
            CHECK_CROSS,
            format!("i={i}, j={j}: b{i} = {} < c{j} = {}", arr.b(i), arr.c(j)),
        ),
    });

    let a_violation = (0..=d).find(|&i| arr.a(i) < 0);
    checks.push(match a_violation {
        None => CheckResult::ok(CHECK_A_NONNEG, "a_i >= 0 for 0 <= i <= D"),
        Some(i) => CheckResult::fail(CHECK_A_NONNEG, format!("i={i}: a{i} = {}", arr.a(i))),
    });

    FeasibilityReport::new(arr.clone(), checks)
}

/// Shell sizes `k_i`, inter-shell edge counts `e_i`, `n` and `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    pub k_sizes: Vec<Q>,
    pub e: Vec<Q>,
    pub n: Q,
    pub m: Q,
    pub integral: bool,
}

impl DistanceDistribution {
    /// `n` as an integer, when the distribution is integral.
    pub fn vertex_count(&self) -> Option<u64> {
        integral_u64(&self.n)
    }

    pub fn edge_count(&self) -> Option<u64> {
        integral_u64(&self.m)
    }
}

fn integral_u64(x: &Q) -> Option<u64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_u64()
    } else {
        None
    }
}

pub fn compute_distance_distribution(arr: &IntersectionArray) -> DistanceDistribution {
    let d = arr.diameter();
    let mut k_sizes = Vec::with_capacity(d + 1);
    k_sizes.push(q(1));
    for i in 0..d {
        let next = &k_sizes[i] * q(arr.b(i) as i64) / q(arr.c(i + 1) as i64);
        k_sizes.push(next);
    }
    let e = (0..d).map(|i| q(arr.b(i) as i64) * &k_sizes[i]).collect();
    let n = k_sizes.iter().fold(Q::zero(), |acc, x| acc + x);
    let m = &n * q(arr.valency() as i64) / q(2);
    let integral = k_sizes.iter().all(Q::is_integer) && m.is_integer();
    DistanceDistribution { k_sizes, e, n, m, integral }
}

pub const CHECK_INTEGRALITY: &str = "integrality";
pub const CHECK_DIVISIBILITY: &str = "divisibility";
pub const CHECK_HEAD_BOUND: &str = "head_bound";

pub fn check_integrality(dist: &DistanceDistribution) -> CheckResult {
    if dist.integral {
        return CheckResult::ok(CHECK_INTEGRALITY, format!("all k_i integral, n = {}", dist.n));
    }
    match dist.k_sizes.iter().position(|x| !x.is_integer()) {
        Some(i) => CheckResult::fail(
            CHECK_INTEGRALITY,
            format!("k{i} = {} is not an integer", fraction_string(&dist.k_sizes[i])),
        ),
        None => CheckResult::fail(
            CHECK_INTEGRALITY,
            format!("m = nk/2 = {} is not an integer", fraction_string(&dist.m)),
        ),
    }
}

/// `(a_1 + 1) | k`, which holds when `c_2 = 1` because every vertex
/// neighbourhood is then a disjoint union of `(a_1 + 1)`-cliques. Arrays with
/// `c_2 > 1` (or `D = 1`) pass as not applicable.
pub fn check_divisibility(arr: &IntersectionArray) -> CheckResult {
    let k = arr.valency();
    let a1 = arr.a(1);
    if arr.diameter() >= 2 && arr.c(2) > 1 {
        return CheckResult::ok(CHECK_DIVISIBILITY, format!("not applicable: c2 = {} > 1", arr.c(2)));
    }
    if a1 < 0 {
        return CheckResult::fail(CHECK_DIVISIBILITY, format!("a1 = {a1} is negative"));
    }
    let clique = a1 as u64 + 1;
    if k.is_multiple_of(clique) {
        CheckResult::ok(CHECK_DIVISIBILITY, format!("a1 + 1 = {clique} divides k = {k}"))
    } else {
        CheckResult::fail(CHECK_DIVISIBILITY, format!("a1 + 1 = {clique} does not divide k = {k}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HeadBound {
    pub j: usize,
    pub bound: usize,
    pub pass: bool,
}

/// With `j` the first index where `c_j >= b_j` (taking `b_D = 0`), the
/// diameter is at most `2j - 1` when `c_j > b_j` and at most `3j - 1` when
/// they are equal.
pub fn diameter_head_bound(arr: &IntersectionArray) -> HeadBound {
    let d = arr.diameter();
    let j = (1..=d).find(|&i| arr.c(i) >= arr.b(i)).unwrap_or(d);
    let bound = if arr.c(j) > arr.b(j) { 2 * j - 1 } else { 3 * j - 1 };
    HeadBound { j, bound, pass: d <= bound }
}

pub fn check_head_bound(arr: &IntersectionArray) -> CheckResult {
    let hb = diameter_head_bound(arr);
    let detail = format!("j = {}, bound = {}, D = {}", hb.j, hb.bound, arr.diameter());
    if hb.pass {
        CheckResult::ok(CHECK_HEAD_BOUND, detail)
    } else {
        CheckResult::fail(CHECK_HEAD_BOUND, detail)
    }
}
