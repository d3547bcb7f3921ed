use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use drg_resistance::catalog::{catalog, CatalogCheck};
use drg_resistance::exact::{fraction_string, to_f64};
use drg_resistance::graph::{construct_named_graph, verify_distance_regular, ExplicitGraph, FAMILIES};
use drg_resistance::report::{analyze, AnalysisReport};
use drg_resistance::scan::{scan, ScanQuery, ScanRecord};
use drg_resistance::verify::{verify_graph, VerifyReport};
use drg_resistance::walks::{commute_time, simulate_hitting_time, MonteCarloEstimate};
use drg_resistance::IntersectionArray;

#[derive(Parser)]
#[command(name = "drg", version, about = "Resistance, potentials and feasibility for distance-regular graphs")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one intersection array, e.g. "(3,2,1;1,2,3)".
    Analyze { array: String },
    /// Enumerate candidate arrays and run the feasibility pipeline.
    Scan {
        /// Valency range, `A..B` or a single value.
        #[arg(long = "k", value_parser = parse_range_u64)]
        k: RangeInclusive<u64>,
        /// Diameter range, `C..E` or a single value.
        #[arg(long, value_parser = parse_range_usize)]
        diameter: RangeInclusive<usize>,
        #[arg(long)]
        n_max: Option<u64>,
        /// Only print arrays ruled out by the resistance bound alone.
        #[arg(long)]
        only_biggs: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Candidate budget before the query is refused.
        #[arg(long, default_value_t = drg_resistance::scan::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Print the catalog of known graphs.
    Catalog {
        /// Recompute every vertex count and ratio and compare with the printed values.
        #[arg(long)]
        recompute: bool,
    },
    /// Check every formula on an explicit graph.
    Verify {
        family: Option<String>,
        params: Vec<usize>,
        /// Load the graph from an edge-list file instead.
        #[arg(long, conflicts_with = "family")]
        edges: Option<PathBuf>,
        /// Compare the oracle with the formula on every pair (n <= 32).
        #[arg(long)]
        all_pairs: bool,
    },
    /// Monte Carlo hitting time against the resistance formula.
    Walk {
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        from_distance: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse_range<T: std::str::FromStr + PartialOrd + Copy>(s: &str) -> Result<RangeInclusive<T>, String> {
    let parse = |x: &str| x.trim().parse::<T>().map_err(|_| format!("`{x}` is not a number"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(parse(a)?..=parse(b)?)
        }
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

fn parse_range_u64(s: &str) -> Result<RangeInclusive<u64>, String> {
    parse_range(s)
}

fn parse_range_usize(s: &str) -> Result<RangeInclusive<usize>, String> {
    parse_range(s)
}

struct Outcome {
    code: u8,
    text: String,
}

impl Outcome {
    fn render<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String, code: u8) -> Self {
        let text = match format {
            Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
            Format::Table => table(),
        };
        Self { code, text }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.code)
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze { array } => {
            let arr = IntersectionArray::parse(array).map_err(|e| e.to_string())?;
            let report = analyze(&arr).map_err(|e| e.to_string())?;
            let code = if report.feasible() { 0 } else { 2 };
            Ok(Outcome::render(format, &report, || analyze_table(&report), code))
        }
        Command::Scan { k, diameter, n_max, only_biggs, jobs, budget } => {
            let query = ScanQuery::new(k.clone(), diameter.clone())
                .map_err(|e| e.to_string())?
                .with_n_max(*n_max)
                .with_budget(*budget);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| e.to_string())?;
            let mut report = pool.install(|| scan(&query)).map_err(|e| e.to_string())?;
            if *only_biggs {
                report.records.retain(ScanRecord::ruled_out_by_biggs);
            }
            Ok(Outcome::render(format, &report, || scan_table(&report.records), 0))
        }
        Command::Catalog { recompute } => {
            let entries = catalog();
            if *recompute {
                let checks: Vec<CatalogCheck> = entries.iter().map(|e| e.recompute()).collect();
                let code = if checks.iter().all(CatalogCheck::pass) { 0 } else { 2 };
                #[derive(Serialize)]
                struct Wire<'a> {
                    schema: u32,
                    checks: &'a [CatalogCheck],
                }
                let wire = Wire { schema: 1, checks: &checks };
                Ok(Outcome::render(format, &wire, || recompute_table(&checks), code))
            } else {
                #[derive(Serialize)]
                struct Wire<'a> {
                    schema: u32,
                    entries: &'a [drg_resistance::CatalogEntry],
                }
                let wire = Wire { schema: 1, entries: &entries };
                Ok(Outcome::render(format, &wire, || catalog_table(&entries), 0))
            }
        }
        Command::Verify { family, params, edges, all_pairs } => {
            let g = match (family, edges) {
                (_, Some(path)) => {
                    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    ExplicitGraph::from_edge_list(&text).map_err(|e| e.to_string())?
                }
                (Some(name), None) => construct_named_graph(name, params).map_err(|e| e.to_string())?,
                (None, None) => return Err(format!("give a family ({}) or --edges FILE", family_list())),
            };
            let report = verify_graph(&g, *all_pairs).map_err(|e| e.to_string())?;
            let code = if report.pass { 0 } else { 2 };
            Ok(Outcome::render(format, &report, || verify_table(&report), code))
        }
        Command::Walk { family, params, from_distance, trials, seed } => {
            let g = construct_named_graph(family, params).map_err(|e| e.to_string())?;
            let arr = verify_distance_regular(&g).map_err(|e| e.to_string())?;
            let target = g
                .vertex_at_distance(0, *from_distance)
                .ok_or_else(|| format!("no vertex at distance {from_distance} (diameter {})", arr.diameter()))?;
            let commute = commute_time(&arr, *from_distance).map_err(|e| e.to_string())?;
            let estimate = simulate_hitting_time(&g, 0, target, *trials, *seed).map_err(|e| e.to_string())?;
            let expected = to_f64(&commute) / 2.0;
            let report = WalkReport {
                schema: 1,
                array: arr,
                pair: (0, target),
                distance: *from_distance,
                commute_time: fraction_string(&commute),
                expected_hitting_time: expected,
                z_score: estimate.z_score(expected),
                within_three_stderr: estimate.z_score(expected) <= 3.0,
                estimate,
            };
            let code = if report.within_three_stderr { 0 } else { 2 };
            Ok(Outcome::render(format, &report, || walk_table(&report), code))
        }
    }
}

fn family_list() -> String {
    FAMILIES.iter().map(|(name, _)| *name).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
struct WalkReport {
    schema: u32,
    array: IntersectionArray,
    pair: (usize, usize),
    distance: usize,
    commute_time: String,
    expected_hitting_time: f64,
    estimate: MonteCarloEstimate,
    z_score: f64,
    within_three_stderr: bool,
}

/// Drops a unit denominator for display: `7/1` becomes `7`.
fn short(s: &str) -> &str {
    s.strip_suffix("/1").unwrap_or(s)
}

fn shorts<'a>(xs: impl IntoIterator<Item = &'a str>) -> String {
    xs.into_iter().map(short).collect::<Vec<_>>().join(" ")
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

fn analyze_table(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "array      {}", r.array);
    for c in r.validation.iter().chain(&r.filters) {
        let _ = writeln!(out, "  {:<4} {:<16} {}", mark(c.pass), c.name, c.detail);
    }
    if let Some(d) = &r.distribution {
        let _ = writeln!(out, "shells     {}", shorts(d.k_sizes.iter().map(String::as_str)));
        let _ = writeln!(out, "n, m       {}, {}", short(&d.n), short(&d.m));
    }
    if let Some(p) = &r.potentials {
        let phi = shorts(p.phi.iter().map(|v| v.fraction.as_str()));
        let _ = writeln!(out, "phi        {phi} (phi_D = {})", short(&p.phi_d));
        let _ = writeln!(out, "closed form agrees: {}", p.closed_form_agrees);
        if let Err(e) = &p.properties {
            let _ = writeln!(out, "property violation: {e}");
        }
    }
    if let Some(res) = &r.resistance {
        for (j, d) in res.d.iter().enumerate() {
            let _ = writeln!(out, "d_{:<8} {:<14} {}", j + 1, d.fraction, d.decimal);
        }
        let _ = writeln!(out, "ratio      {} = {}", res.ratio.fraction, res.ratio.decimal);
        let _ = writeln!(out, "d_D / d_1  {} = {}", res.k_factor.fraction, res.k_factor.decimal);
    }
    if let Some(v) = &r.verdict {
        let _ = match v.matched_extremal {
            Some(name) => writeln!(out, "verdict    {} ({name})", v.class.as_str()),
            None => writeln!(out, "verdict    {}", v.class.as_str()),
        };
    }
    if let Some(w) = &r.walk_bounds {
        let commute: Vec<String> = w.commute_times.iter().map(fraction_string).collect();
        let _ = writeln!(out, "commute    {}", shorts(commute.iter().map(String::as_str)));
        let _ = writeln!(
            out,
            "bounds     H <= {}, C <= {}, cover ~ {:.4} (dominant term), sigma >= {}",
            short(&fraction_string(&w.hitting_bound)),
            short(&fraction_string(&w.commute_bound)),
            w.cover_bound_dominant,
            short(&fraction_string(&w.spectral_lower_bound))
        );
    }
    out
}

fn scan_table(records: &[ScanRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let _ = writeln!(
            out,
            "{:<40} n={:<10} ratio={:<10} {}",
            r.array.to_string(),
            r.n.as_deref().map_or("-", short),
            r.ratio_decimal.as_deref().unwrap_or("-"),
            r.status
        );
    }
    out
}

fn catalog_table(entries: &[drg_resistance::CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let _ = writeln!(
            out,
            "{:<36} {:>5}  {:<40} {:<9} {}",
            e.name,
            e.vertices,
            e.array.to_string(),
            e.printed_ratio,
            e.tables.join(",")
        );
    }
    out
}

fn recompute_table(checks: &[CatalogCheck]) -> String {
    let mut out = String::new();
    for c in checks {
        let _ = writeln!(
            out,
            "{:<4} {:<36} n {} vs {:<5} ratio {} vs {}",
            mark(c.pass()),
            c.name,
            c.printed_vertices,
            c.computed_vertices.map_or("-".to_string(), |v| v.to_string()),
            c.printed_ratio,
            c.computed_ratio.as_deref().unwrap_or("-")
        );
    }
    out
}

fn verify_table(r: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph      n={} m={}", r.n, r.m);
    if let Some(f) = &r.regularity_failure {
        let _ = writeln!(out, "FAIL distance-regularity: {f}");
        return out;
    }
    if let Some(a) = &r.array {
        let _ = writeln!(out, "array      {a}");
    }
    if let Some(h) = &r.harmonic {
        let _ = writeln!(
            out,
            "{:<4} harmonic on edge {:?}: residual {}, current {} (expected {})",
            mark(h.pass),
            h.pair,
            short(&h.max_residual),
            short(&h.current),
            short(&h.expected_current)
        );
    }
    for o in &r.oracle {
        let _ = writeln!(
            out,
            "{:<4} d_{} oracle {} formula {} (pair {:?})",
            mark(o.equal),
            o.distance,
            o.oracle,
            o.formula,
            o.pair
        );
    }
    if let Some(a) = &r.all_pairs {
        let _ = writeln!(out, "{:<4} all pairs: {} checked, {} mismatches", mark(a.mismatches.is_empty()), a.pairs_checked, a.mismatches.len());
    }
    if let Some(s) = &r.spectral {
        let _ = writeln!(
            out,
            "{:<4} sigma {:.10} >= {} >= {}",
            mark(s.pass),
            s.sigma,
            s.resistance_bound,
            s.valency_bound
        );
    }
    if let Some(note) = &r.spectral_note {
        let _ = writeln!(out, "     {note}");
    }
    out
}

fn walk_table(r: &WalkReport) -> String {
    format!(
        "{:<4} {} pair {:?} at distance {}: mean {:.4} +/- {:.4} over {} trials (seed {}), expected {:.4} = C/2 with C = {}, z = {:.2}\n",
        mark(r.within_three_stderr),
        r.array,
        r.pair,
        r.distance,
        r.estimate.mean,
        r.estimate.stderr,
        r.estimate.trials,
        r.estimate.seed,
        r.expected_hitting_time,
        short(&r.commute_time),
        r.z_score
    )
}
