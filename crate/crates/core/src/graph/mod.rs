//! Explicit small graphs and the checks run on them.

mod families;
mod harmonic;
mod oracle;
mod regularity;
mod spectral;

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

pub use families::{construct_named_graph, FAMILIES};
pub use harmonic::{
    build_distance_partition, build_harmonic_function, check_harmonicity, measure_current, DistancePartition,
    PotentialAssignment, VertexClass,
};
pub use oracle::{effective_resistance_oracle, solve_exact};
pub use regularity::{verify_distance_regular, RegularityWitness};
pub use spectral::{laplacian_spectral_gap, laplacian_spectrum, Spectrum, EIGEN_TOLERANCE};

use crate::error::GraphError;

pub const UNREACHABLE: usize = usize::MAX;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ExplicitGraph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(GraphError::EdgeList(format!("loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(GraphError::EdgeList(format!("repeated edge {a} {b}")));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { n, edges, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Breadth-first distances; unreachable vertices get [`UNREACHABLE`].
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.distances_from(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// First vertex (by index) at distance `j` from `u`.
    pub fn vertex_at_distance(&self, u: usize, j: usize) -> Option<usize> {
        self.distances_from(u).iter().position(|&d| d == j)
    }

    /// `n m` on the first line, then one `a b` line per edge, 0-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::EdgeList("empty input".into()))?;
        let (n, m) = parse_pair(header)?;
        let edges = lines.map(parse_pair).collect::<Result<Vec<_>, _>>()?;
        if edges.len() != m {
            return Err(GraphError::EdgeList(format!("header declares {m} edges, found {}", edges.len())));
        }
        Self::new(n, edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(GraphError::EdgeList(format!("expected two integers, got `{line}`"))),
    }
}
