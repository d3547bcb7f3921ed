//! Known distance-regular graphs with their printed vertex counts and ratios.

use serde::Serialize;

use crate::array::{compute_distance_distribution, IntersectionArray};
use crate::exact::{decimal_string, parse_decimal, round_half_even};
use crate::graph::{construct_named_graph, ExplicitGraph};
use crate::resistance::biggs_ratio;

pub const CATALOG_TSV: &str = include_str!("../data/catalog.tsv");

/// Decimal places used when comparing against printed ratios.
pub const PRINTED_PLACES: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub family: String,
    pub params: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub tables: Vec<String>,
    pub vertices: u64,
    pub array: IntersectionArray,
    pub printed_ratio: String,
    pub construction: Option<Construction>,
}

impl CatalogEntry {
    pub fn has_explicit_construction(&self) -> bool {
        self.construction.is_some()
    }

    pub fn build_graph(&self) -> Option<ExplicitGraph> {
        let c = self.construction.as_ref()?;
        construct_named_graph(&c.family, &c.params).ok()
    }

    pub fn in_table(&self, tag: &str) -> bool {
        self.tables.iter().any(|t| t == tag)
    }

    pub fn matches_name(&self, name: &str) -> bool {
        let lower = name.to_lowercase();
        self.name.to_lowercase() == lower || self.aliases.iter().any(|a| a.to_lowercase() == lower)
    }

    pub fn recompute(&self) -> CatalogCheck {
        let dist = compute_distance_distribution(&self.array);
        let computed_vertices = dist.vertex_count();
        let ratio = biggs_ratio(&self.array).ok();
        let printed = parse_decimal(&self.printed_ratio);
        let ratio_match = match (&ratio, &printed) {
            (Some(r), Some(p)) => &round_half_even(r, PRINTED_PLACES) == p,
            _ => false,
        };
        CatalogCheck {
            name: self.name.clone(),
            array: self.array.clone(),
            printed_vertices: self.vertices,
            computed_vertices,
            printed_ratio: self.printed_ratio.clone(),
            computed_ratio: ratio.as_ref().map(|r| decimal_string(r, PRINTED_PLACES)),
            vertices_match: computed_vertices == Some(self.vertices),
            ratio_match,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogCheck {
    pub name: String,
    pub array: IntersectionArray,
    pub printed_vertices: u64,
    pub computed_vertices: Option<u64>,
    pub printed_ratio: String,
    pub computed_ratio: Option<String>,
    pub vertices_match: bool,
    pub ratio_match: bool,
}

impl CatalogCheck {
    pub fn pass(&self) -> bool {
        self.vertices_match && self.ratio_match
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(lineno, line)| parse_row(line).map_err(|e| format!("line {}: {e}", lineno + 1)))
        .collect()
}

fn parse_row(line: &str) -> Result<CatalogEntry, String> {
    let cols: Vec<&str> = line.split('\t').collect();
    let [tables, name, aliases, vertices, array, ratio, construction] = cols[..] else {
        return Err(format!("expected 7 tab-separated columns, got {}", cols.len()));
    };
    let split = |s: &str, sep: char| -> Vec<String> {
        s.split(sep).map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
    };
    let construction = match construction.trim() {
        "-" | "" => None,
        spec => {
            let mut parts = spec.split_whitespace();
            let family = parts.next().unwrap().to_string();
            let params = parts.map(str::parse).collect::<Result<_, _>>().map_err(|e| format!("{e}"))?;
            Some(Construction { family, params })
        }
    };
    Ok(CatalogEntry {
        name: name.trim().to_string(),
        aliases: split(aliases, '|'),
        tables: split(tables, ','),
        vertices: vertices.trim().parse().map_err(|e| format!("vertices: {e}"))?,
        array: IntersectionArray::parse(array).map_err(|e| e.to_string())?,
        printed_ratio: ratio.trim().to_string(),
        construction,
    })
}

/// Every row of the shipped catalog, one entry per distinct array.
pub fn catalog() -> Vec<CatalogEntry> {
    parse_catalog(CATALOG_TSV).expect("shipped catalog parses")
}

pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.matches_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let all = catalog();
        assert_eq!(all.len(), 27);
        assert_eq!(all.iter().filter(|e| e.in_table("degree-3")).count(), 10);
        assert_eq!(all.iter().filter(|e| e.in_table("degree-4")).count(), 13);
        assert_eq!(all.iter().filter(|e| e.in_table("k6-a1")).count(), 4);
        assert_eq!(all.iter().filter(|e| e.in_table("extremal")).count(), 4);
        let mut arrays: Vec<_> = all.iter().map(|e| e.array.clone()).collect();
        arrays.sort();
        arrays.dedup();
        assert_eq!(arrays.len(), 27);
    }

    #[test]
    fn named_rows() {
        let dodeca = find_entry("Dodecahedron").unwrap();
        assert_eq!(dodeca.array.to_string(), "(3,2,1,1,1;1,1,1,2,3)");
        assert_eq!(dodeca.printed_ratio, "0.842105");
        let odd = find_entry("Odd graph O4").unwrap();
        assert_eq!(odd.array.to_string(), "(4,3,3;1,1,2)");
        assert_eq!(odd.printed_ratio, "0.352941");
        let halved = find_entry("Halved Foster graph").unwrap();
        assert_eq!(halved.vertices, 45);
        assert_eq!(halved.printed_ratio, "0.278409");
        assert!(find_entry("benson's graph").is_some());
    }

    #[test]
    fn every_row_recomputes() {
        for entry in catalog() {
            let check = entry.recompute();
            assert!(check.pass(), "{check:?}");
        }
    }

    #[test]
    fn bad_rows_are_reported() {
        assert!(parse_catalog("a\tb\n").is_err());
        assert!(parse_catalog("t\tn\t\tx\t(3;1)\t0\t-\n").is_err());
        assert!(parse_catalog("t\tn\t\t4\t(3;1\t0\t-\n").is_err());
    }
}
