//! Candidate enumeration and the stacked feasibility pipeline.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::array::{
    check_divisibility, check_head_bound, check_integrality, compute_distance_distribution, validate_basic,
    IntersectionArray,
};
use crate::error::ScanError;
use crate::exact::{decimal_string, fraction_string, q};
use crate::resistance::{classify_biggs, BiggsClass};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    Basic,
    Integrality,
    NMax,
    Divisibility,
    HeadBound,
    Biggs,
}

impl Filter {
    /// Pipeline order.
    pub const ORDER: [Filter; 6] =
        [Filter::Basic, Filter::Integrality, Filter::NMax, Filter::Divisibility, Filter::HeadBound, Filter::Biggs];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Basic => "basic",
            Filter::Integrality => "integrality",
            Filter::NMax => "n_max",
            Filter::Divisibility => "divisibility",
            Filter::HeadBound => "head_bound",
            Filter::Biggs => "biggs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanQuery {
    pub k_range: RangeInclusive<u64>,
    pub d_range: RangeInclusive<usize>,
    pub n_max: Option<u64>,
    pub filters: Vec<Filter>,
    #[serde(skip)]
    pub budget: u128,
}

impl ScanQuery {
    pub fn new(k_range: RangeInclusive<u64>, d_range: RangeInclusive<usize>) -> Result<Self, ScanError> {
        if *k_range.start() < 3 {
            return Err(ScanError::InvalidQuery("valency range must start at 3 or above".into()));
        }
        if *d_range.start() < 1 {
            return Err(ScanError::InvalidQuery("diameter range must start at 1 or above".into()));
        }
        Ok(Self {
            k_range,
            d_range,
            n_max: None,
            filters: vec![Filter::Basic, Filter::Integrality, Filter::Divisibility, Filter::HeadBound, Filter::Biggs],
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_n_max(mut self, n_max: Option<u64>) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_filters(mut self, filters: Vec<Filter>) -> Self {
        self.filters = filters;
        self
    }

    fn enabled(&self, f: Filter) -> bool {
        match f {
            Filter::NMax => self.n_max.is_some(),
            _ => self.filters.contains(&f),
        }
    }

    /// Exact number of candidates [`enumerate_arrays`] would yield, saturating.
    pub fn candidate_count(&self) -> u128 {
        let mut total: u128 = 0;
        for k in self.k_range.clone() {
            for d in self.d_range.clone() {
                let len = d as u128 - 1;
                let b = multisets(k as u128 - 1, len);
                let c = multisets(k as u128, len);
                total = total.saturating_add(b.saturating_mul(c));
            }
        }
        total
    }
}

/// Number of monotone sequences of length `len` over `values` symbols.
fn multisets(values: u128, len: u128) -> u128 {
    if len == 0 {
        return 1;
    }
    if values == 0 {
        return 0;
    }
    // C(values + len - 1, len)
    let (top, r) = (values + len - 1, len.min(values - 1));
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul(top - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Monotone sequences over `lo..=hi`, in lexicographic order.
#[derive(Debug, Clone)]
struct MonotoneSeqs {
    current: Option<Vec<u64>>,
    lo: u64,
    hi: u64,
    non_decreasing: bool,
}

impl MonotoneSeqs {
    fn new(len: usize, lo: u64, hi: u64, non_decreasing: bool) -> Self {
        let current = if lo <= hi || len == 0 { Some(vec![lo; len]) } else { None };
        Self { current, lo, hi, non_decreasing }
    }
}

impl Iterator for MonotoneSeqs {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let bump = (0..next.len()).rev().find(|&i| {
            let cap = if self.non_decreasing || i == 0 { self.hi } else { next[i - 1] };
            next[i] < cap
        });
        if let Some(i) = bump {
            next[i] += 1;
            let fill = if self.non_decreasing { next[i] } else { self.lo };
            next[i + 1..].iter_mut().for_each(|x| *x = fill);
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Candidates with `k = b_0 > b_1 >= … >= b_{D-1} >= 1` and
/// `1 = c_1 <= c_2 <= … <= c_D <= k`, ordered by `(k, D, b, c)`.
pub fn enumerate_arrays(q: &ScanQuery) -> Result<impl Iterator<Item = IntersectionArray>, ScanError> {
    let estimate = q.candidate_count();
    if estimate > q.budget {
        return Err(ScanError::QueryTooLarge { estimate, budget: q.budget });
    }
    let d_range = q.d_range.clone();
    Ok(q.k_range.clone().flat_map(move |k| {
        d_range.clone().flat_map(move |d| {
            MonotoneSeqs::new(d - 1, 1, k - 1, false).flat_map(move |b_tail| {
                MonotoneSeqs::new(d - 1, 1, k, true).map(move |c_tail| {
                    let mut b = Vec::with_capacity(d);
                    b.push(k);
                    b.extend(&b_tail);
                    let mut c = Vec::with_capacity(d);
                    c.push(1);
                    c.extend(c_tail);
                    IntersectionArray::new(b, c).expect("enumerated arrays are well formed")
                })
            })
        })
    }))
}

pub const STATUS_PASS: &str = "pass";
pub const STATUS_BIGGS: &str = "biggs_violation";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub array: IntersectionArray,
    pub n: Option<String>,
    pub ratio_fraction: Option<String>,
    pub ratio_decimal: Option<String>,
    /// `pass`, `biggs_violation`, or the name of the first failing filter.
    pub status: String,
    pub detail: String,
    pub verdict: Option<BiggsClass>,
    pub matched_extremal: Option<&'static str>,
}

impl ScanRecord {
    pub fn ruled_out_by_biggs(&self) -> bool {
        self.status == STATUS_BIGGS
    }
}

/// Runs the enabled filters on one array in pipeline order, stopping at the
/// first failure.
pub fn evaluate(arr: &IntersectionArray, query: &ScanQuery) -> ScanRecord {
    let mut record = ScanRecord {
        array: arr.clone(),
        n: None,
        ratio_fraction: None,
        ratio_decimal: None,
        status: STATUS_PASS.to_string(),
        detail: String::new(),
        verdict: None,
        matched_extremal: None,
    };
    let fail = |mut r: ScanRecord, f: Filter, detail: String| {
        r.status = f.name().to_string();
        r.detail = detail;
        r
    };
    if query.enabled(Filter::Basic) {
        let report = validate_basic(arr);
        if let Some(check) = report.first_failure() {
            return fail(record, Filter::Basic, format!("{}: {}", check.name, check.detail));
        }
    }
    let dist = compute_distance_distribution(arr);
    record.n = Some(fraction_string(&dist.n));
    if query.enabled(Filter::Integrality) {
        let check = check_integrality(&dist);
        if !check.pass {
            return fail(record, Filter::Integrality, check.detail);
        }
    }
    if let (true, Some(cap)) = (query.enabled(Filter::NMax), query.n_max) {
        if dist.n > q(cap as i64) {
            return fail(record, Filter::NMax, format!("n = {} exceeds {cap}", fraction_string(&dist.n)));
        }
    }
    if query.enabled(Filter::Divisibility) {
        let check = check_divisibility(arr);
        if !check.pass {
            return fail(record, Filter::Divisibility, check.detail);
        }
    }
    if query.enabled(Filter::HeadBound) {
        let check = check_head_bound(arr);
        if !check.pass {
            return fail(record, Filter::HeadBound, check.detail);
        }
    }
    if query.enabled(Filter::Biggs) {
        match classify_biggs(arr) {
            Ok(verdict) => {
                record.ratio_fraction = Some(fraction_string(&verdict.ratio));
                record.ratio_decimal = Some(decimal_string(&verdict.ratio, 6));
                record.verdict = Some(verdict.class);
                record.matched_extremal = verdict.matched_extremal;
                if verdict.class == BiggsClass::Violation {
                    record.status = STATUS_BIGGS.to_string();
                    record.detail = "ratio is at least 87/100 and the array is not extremal".to_string();
                }
            }
            Err(e) => return fail(record, Filter::Biggs, e.to_string()),
        }
    }
    record
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub schema: u32,
    pub query: ScanQuery,
    pub candidates: u64,
    pub summary: BTreeMap<String, u64>,
    pub ruled_out_by_biggs: Vec<IntersectionArray>,
    pub records: Vec<ScanRecord>,
}

const CHUNK: usize = 1 << 14;

/// Evaluates every candidate. Work fans out over the current rayon pool in
/// fixed-size chunks of the candidate stream; records come back in
/// enumeration order whatever the thread count.
pub fn scan(query: &ScanQuery) -> Result<ScanReport, ScanError> {
    let mut iter = enumerate_arrays(query)?;
    let mut records = Vec::new();
    loop {
        let chunk: Vec<IntersectionArray> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let evaluated: Vec<ScanRecord> = chunk.par_iter().map(|a| evaluate(a, query)).collect();
        records.extend(evaluated);
    }
    records.sort_by(|a, b| canonical_key(&a.array).cmp(&canonical_key(&b.array)));
    let mut summary = BTreeMap::new();
    for r in &records {
        *summary.entry(r.status.clone()).or_insert(0) += 1;
    }
    let ruled_out_by_biggs = records.iter().filter(|r| r.ruled_out_by_biggs()).map(|r| r.array.clone()).collect();
    Ok(ScanReport {
        schema: 1,
        query: query.clone(),
        candidates: records.len() as u64,
        summary,
        ruled_out_by_biggs,
        records,
    })
}

fn canonical_key(a: &IntersectionArray) -> (u64, usize, &[u64], &[u64]) {
    (a.valency(), a.diameter(), a.b_seq(), a.c_seq())
}
