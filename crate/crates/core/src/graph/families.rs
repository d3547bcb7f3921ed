use crate::error::GraphError;

use super::ExplicitGraph;

/// Family names accepted by [`construct_named_graph`], with their parameters.
pub const FAMILIES: &[(&str, &str)] = &[
    ("hypercube", "d"),
    ("complete", "n"),
    ("complete_bipartite", "k"),
    ("complete_bipartite_minus_matching", "k"),
    ("cocktail_party", "n"),
    ("cycle", "n"),
    ("hamming", "d q"),
    ("johnson", "n k"),
    ("petersen", ""),
    ("heawood", ""),
    ("pappus", ""),
    ("desargues", ""),
    ("dodecahedron", ""),
];

/// Vertex labelling per family:
///
/// * `hypercube d`, `hamming d q`: words over `0..q` read as base-`q` integers
///   (least significant coordinate first); adjacent when they differ in one
///   coordinate.
/// * `complete n`, `cycle n`: `0..n`, cycle edges `i ~ i+1 mod n`.
/// * `complete_bipartite k`, `complete_bipartite_minus_matching k`: sides
///   `0..k` and `k..2k`; the matching removed is `i ~ k+i`.
/// * `cocktail_party n`: `2n` vertices, `2i` and `2i+1` are the non-adjacent pairs.
/// * `johnson n k`: `k`-subsets of `0..n` in lexicographic order, adjacent when
///   they share `k-1` elements.
/// * `petersen`, `desargues`, `dodecahedron`: generalised Petersen graphs
///   GP(5,2), GP(10,3), GP(10,2); outer rim `0..r`, inner `r..2r`.
/// * `heawood`: points `0..7` and lines `7..14` of the Fano plane, line `i`
///   being `{i, i+1, i+3} mod 7`.
/// * `pappus`: LCF notation `[5,7,-7,7,-7,-5]^3` on the 18-cycle.
pub fn construct_named_graph(name: &str, params: &[usize]) -> Result<ExplicitGraph, GraphError> {
    let family = name.trim().to_ascii_lowercase().replace('-', "_");
    let bad = |detail: &str| GraphError::BadParams { family: family.clone(), detail: detail.to_string() };
    let expect = |count: usize| {
        if params.len() == count {
            Ok(())
        } else {
            Err(GraphError::BadParams {
                family: family.clone(),
                detail: format!("expected {count} parameter(s), got {}", params.len()),
            })
        }
    };
    match family.as_str() {
        "hypercube" => {
            expect(1)?;
            if params[0] == 0 || params[0] > 16 {
                return Err(bad("dimension must be in 1..=16"));
            }
            hamming(params[0], 2)
        }
        "hamming" => {
            expect(2)?;
            let (d, q) = (params[0], params[1]);
            if d == 0 || q < 2 || (q as f64).powi(d as i32) > 65536.0 {
                return Err(bad("need d >= 1, q >= 2 and q^d <= 65536"));
            }
            hamming(d, q)
        }
        "complete" => {
            expect(1)?;
            if params[0] < 2 {
                return Err(bad("need n >= 2"));
            }
            let n = params[0];
            ExplicitGraph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
        }
        "cycle" => {
            expect(1)?;
            if params[0] < 3 {
                return Err(bad("need n >= 3"));
            }
            let n = params[0];
            ExplicitGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "complete_bipartite" => {
            expect(1)?;
            if params[0] < 1 {
                return Err(bad("need k >= 1"));
            }
            let k = params[0];
            ExplicitGraph::new(2 * k, (0..k).flat_map(|a| (0..k).map(move |b| (a, k + b))))
        }
        "complete_bipartite_minus_matching" => {
            expect(1)?;
            if params[0] < 3 {
                return Err(bad("need k >= 3 for a connected graph"));
            }
            let k = params[0];
            ExplicitGraph::new(
                2 * k,
                (0..k).flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| (a, k + b))),
            )
        }
        "cocktail_party" => {
            expect(1)?;
            if params[0] < 2 {
                return Err(bad("need n >= 2"));
            }
            let v = 2 * params[0];
            ExplicitGraph::new(
                v,
                (0..v).flat_map(|a| (a + 1..v).filter(move |&b| a / 2 != b / 2).map(move |b| (a, b))),
            )
        }
        "johnson" => {
            expect(2)?;
            let (n, k) = (params[0], params[1]);
            if k == 0 || k >= n || n > 20 {
                return Err(bad("need 1 <= k < n <= 20"));
            }
            johnson(n, k)
        }
        "petersen" => {
            expect(0)?;
            generalized_petersen(5, 2)
        }
        "desargues" => {
            expect(0)?;
            generalized_petersen(10, 3)
        }
        "dodecahedron" => {
            expect(0)?;
            generalized_petersen(10, 2)
        }
        "heawood" => {
            expect(0)?;
            ExplicitGraph::new(
                14,
                (0..7).flat_map(|line| [0, 1, 3].into_iter().map(move |off| ((line + off) % 7, 7 + line))),
            )
        }
        "pappus" => {
            expect(0)?;
            lcf(18, &[5, 7, -7, 7, -7, -5])
        }
        _ => Err(GraphError::UnknownFamily(name.to_string())),
    }
}

fn hamming(d: usize, q: usize) -> Result<ExplicitGraph, GraphError> {
    let n = q.pow(d as u32);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut place = 1;
        for _ in 0..d {
            let digit = (v / place) % q;
            for other in digit + 1..q {
                edges.push((v, v + (other - digit) * place));
            }
            place *= q;
        }
    }
    ExplicitGraph::new(n, edges)
}

fn johnson(n: usize, k: usize) -> Result<ExplicitGraph, GraphError> {
    let subsets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    // lexicographic order of sorted element lists
    let mut labelled: Vec<(Vec<usize>, u32)> =
        subsets.iter().map(|&s| ((0..n).filter(|&i| s >> i & 1 == 1).collect(), s)).collect();
    labelled.sort();
    let masks: Vec<u32> = labelled.into_iter().map(|(_, s)| s).collect();
    let mut edges = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i + 1) {
            if (a & b).count_ones() as usize == k - 1 {
                edges.push((i, j));
            }
        }
    }
    ExplicitGraph::new(masks.len(), edges)
}

fn generalized_petersen(r: usize, step: usize) -> Result<ExplicitGraph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..r {
        edges.push((i, (i + 1) % r));
        edges.push((i, r + i));
        edges.push((r + i, r + (i + step) % r));
    }
    ExplicitGraph::new(2 * r, edges)
}

fn lcf(n: usize, shifts: &[isize]) -> Result<ExplicitGraph, GraphError> {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    ExplicitGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(name: &str, params: &[usize]) -> (usize, usize) {
        let g = construct_named_graph(name, params).unwrap();
        assert!(g.is_connected(), "{name}");
        (g.n(), g.edge_count())
    }

    #[test]
    fn standard_sizes() {
        assert_eq!(sizes("hypercube", &[3]), (8, 12));
        assert_eq!(sizes("complete_bipartite_minus_matching", &[5]), (10, 20));
        assert_eq!(sizes("petersen", &[]), (10, 15));
        assert_eq!(sizes("complete", &[4]), (4, 6));
        assert_eq!(sizes("cocktail_party", &[3]), (6, 12));
        assert_eq!(sizes("hamming", &[3, 3]), (27, 81));
        assert_eq!(sizes("johnson", &[5, 2]), (10, 30));
        assert_eq!(sizes("heawood", &[]), (14, 21));
        assert_eq!(sizes("pappus", &[]), (18, 27));
        assert_eq!(sizes("desargues", &[]), (20, 30));
        assert_eq!(sizes("dodecahedron", &[]), (20, 30));
        assert_eq!(sizes("complete_bipartite", &[3]), (6, 9));
        assert_eq!(sizes("cycle", &[7]), (7, 7));
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(construct_named_graph("tesseract", &[]), Err(GraphError::UnknownFamily(_))));
        assert!(matches!(construct_named_graph("hypercube", &[]), Err(GraphError::BadParams { .. })));
        assert!(matches!(construct_named_graph("johnson", &[4, 4]), Err(GraphError::BadParams { .. })));
        assert!(matches!(construct_named_graph("petersen", &[1]), Err(GraphError::BadParams { .. })));
        assert!(construct_named_graph("Complete-Bipartite-Minus-Matching", &[4]).is_ok());
    }
}
