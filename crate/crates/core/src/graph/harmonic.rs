//! The voltage function for a unit-resistor circuit driven across an edge.

use num_traits::{Signed, Zero};

use crate::error::GraphError;
use crate::exact::{q, Q};
use crate::potentials::{potentials_recursive, PotentialSequence};

use super::{verify_distance_regular, ExplicitGraph};

/// Where a vertex `z` sits relative to the driven edge `u ~ v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VertexClass {
    /// `d(u,z) = d(v,z) = i`.
    Level(usize),
    /// `d(u,z) = i`, `d(v,z) = i + 1`.
    TowardU(usize),
    /// `d(u,z) = i + 1`, `d(v,z) = i`.
    TowardV(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    pub u: usize,
    pub v: usize,
    pub classes: Vec<VertexClass>,
    pub level: Vec<Vec<usize>>,
    pub toward_u: Vec<Vec<usize>>,
    pub toward_v: Vec<Vec<usize>>,
}

impl DistancePartition {
    pub fn sizes(family: &[Vec<usize>]) -> Vec<usize> {
        family.iter().map(Vec::len).collect()
    }
}

pub fn build_distance_partition(g: &ExplicitGraph, u: usize, v: usize) -> Result<DistancePartition, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.is_adjacent(u, v) {
        return Err(GraphError::NotAdjacent(u, v));
    }
    let du = g.distances_from(u);
    let dv = g.distances_from(v);
    let depth = du.iter().max().copied().unwrap_or(0) + 1;
    let mut part = DistancePartition {
        u,
        v,
        classes: Vec::with_capacity(g.n()),
        level: vec![Vec::new(); depth],
        toward_u: vec![Vec::new(); depth],
        toward_v: vec![Vec::new(); depth],
    };
    for z in 0..g.n() {
        let (a, b) = (du[z], dv[z]);
        let class = if a == b {
            part.level[a].push(z);
            VertexClass::Level(a)
        } else if a + 1 == b {
            part.toward_u[a].push(z);
            VertexClass::TowardU(a)
        } else if b + 1 == a {
            part.toward_v[b].push(z);
            VertexClass::TowardV(b)
        } else {
            return Err(GraphError::PartitionGap { vertex: z });
        };
        part.classes.push(class);
    }
    Ok(part)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialAssignment {
    pub f: Vec<Q>,
    pub source_pair: (usize, usize),
    /// `n·k`.
    pub expected_current: Q,
}

/// `f(u) = -f(v) = φ_0`, zero on the level sets, `φ_i` on the side nearer
/// `u` and `-φ_i` on the side nearer `v`.
pub fn build_harmonic_function(
    g: &ExplicitGraph,
    u: usize,
    v: usize,
    p: &PotentialSequence,
) -> Result<PotentialAssignment, GraphError> {
    let arr = verify_distance_regular(g)?;
    if !potentials_recursive(&arr).same_values(p) {
        return Err(GraphError::ArrayMismatch);
    }
    let part = build_distance_partition(g, u, v)?;
    let f = part
        .classes
        .iter()
        .map(|class| match *class {
            VertexClass::Level(_) => Q::zero(),
            VertexClass::TowardU(i) => p.phi(i).clone(),
            VertexClass::TowardV(i) => -p.phi(i).clone(),
        })
        .collect();
    Ok(PotentialAssignment {
        f,
        source_pair: (u, v),
        expected_current: q(g.n() as i64) * q(arr.valency() as i64),
    })
}

/// Largest `|Σ_{x~z} (f(x) - f(z))|` over vertices other than the terminals.
pub fn check_harmonicity(g: &ExplicitGraph, f: &PotentialAssignment) -> Q {
    let (u, v) = f.source_pair;
    (0..g.n())
        .filter(|&z| z != u && z != v)
        .map(|z| {
            g.neighbors(z)
                .iter()
                .fold(Q::zero(), |acc, &x| acc + &f.f[x] - &f.f[z])
                .abs()
        })
        .max()
        .unwrap_or_else(Q::zero)
}

/// Current leaving `u`: `Σ_{x~u} (f(u) - f(x))`.
pub fn measure_current(g: &ExplicitGraph, f: &PotentialAssignment, u: usize) -> Q {
    g.neighbors(u).iter().fold(Q::zero(), |acc, &x| acc + &f.f[u] - &f.f[x])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_named_graph;

    fn assignment(name: &str, params: &[usize]) -> (ExplicitGraph, PotentialAssignment) {
        let g = construct_named_graph(name, params).unwrap();
        let arr = verify_distance_regular(&g).unwrap();
        let (u, v) = g.edges()[0];
        let f = build_harmonic_function(&g, u, v, &potentials_recursive(&arr)).unwrap();
        (g, f)
    }

    #[test]
    fn cube_partition_by_brute_force() {
        let g = construct_named_graph("hypercube", &[3]).unwrap();
        let (u, v) = (0, 1);
        let part = build_distance_partition(&g, u, v).unwrap();
        // brute-force classification from the coordinate description
        let weight = |x: usize| (x as u32).count_ones() as usize;
        for z in 0..8 {
            let (a, b) = (weight(z), weight(z ^ 1));
            let expected = if a < b { VertexClass::TowardU(a) } else { VertexClass::TowardV(b) };
            assert_eq!(part.classes[z], expected);
        }
        assert_eq!(DistancePartition::sizes(&part.level), vec![0, 0, 0, 0]);
        assert_eq!(DistancePartition::sizes(&part.toward_u), vec![1, 2, 1, 0]);
        assert_eq!(DistancePartition::sizes(&part.toward_v), vec![1, 2, 1, 0]);
    }

    #[test]
    fn complete_and_petersen_partitions() {
        let k4 = construct_named_graph("complete", &[4]).unwrap();
        let part = build_distance_partition(&k4, 0, 1).unwrap();
        assert_eq!(part.level[1], vec![2, 3]);
        assert_eq!(DistancePartition::sizes(&part.toward_u), vec![1, 0]);

        let pet = construct_named_graph("petersen", &[]).unwrap();
        let part = build_distance_partition(&pet, 0, 1).unwrap();
        assert_eq!(DistancePartition::sizes(&part.level), vec![0, 0, 4]);
        assert_eq!(DistancePartition::sizes(&part.toward_u), vec![1, 2, 0]);
        assert_eq!(DistancePartition::sizes(&part.toward_v), vec![1, 2, 0]);
    }

    #[test]
    fn partition_errors() {
        let cube = construct_named_graph("hypercube", &[3]).unwrap();
        assert_eq!(build_distance_partition(&cube, 0, 3), Err(GraphError::NotAdjacent(0, 3)));
        assert!(build_distance_partition(&cube, 0, 8).is_err());
    }

    #[test]
    fn cube_assignment() {
        let (g, f) = assignment("hypercube", &[3]);
        let (u, v) = f.source_pair;
        assert_eq!(f.f[u], q(7));
        assert_eq!(f.f[v], q(-7));
        let mut values: Vec<Q> = f.f.clone();
        values.sort();
        assert_eq!(values, [-7, -2, -2, -1, 1, 2, 2, 7].map(q).to_vec());
        assert_eq!(check_harmonicity(&g, &f), Q::zero());
        assert_eq!(measure_current(&g, &f, u), q(24));
    }

    #[test]
    fn k4_and_petersen_assignments() {
        let (g, f) = assignment("complete", &[4]);
        let mut values = f.f.clone();
        values.sort();
        assert_eq!(values, [-3, 0, 0, 3].map(q).to_vec());
        assert_eq!(check_harmonicity(&g, &f), Q::zero());
        assert_eq!(measure_current(&g, &f, f.source_pair.0), q(12));

        let (g, f) = assignment("petersen", &[]);
        let mut values = f.f.clone();
        values.sort();
        assert_eq!(values, [-9, -3, -3, 0, 0, 0, 0, 3, 3, 9].map(q).to_vec());
        assert_eq!(check_harmonicity(&g, &f), Q::zero());
        assert_eq!(measure_current(&g, &f, f.source_pair.0), q(30));
        assert_eq!(f.expected_current, q(30));
    }

    #[test]
    fn corrupted_assignment_is_detected() {
        let (g, mut f) = assignment("hypercube", &[3]);
        let (u, v) = f.source_pair;
        let z = (0..8).find(|&z| z != u && z != v).unwrap();
        f.f[z] += q(1);
        assert!(check_harmonicity(&g, &f) >= q(1));
    }

    #[test]
    fn mismatched_sequence_is_rejected() {
        let g = construct_named_graph("hypercube", &[3]).unwrap();
        let petersen = potentials_recursive(&"(3,2;1,1)".parse().unwrap());
        assert_eq!(build_harmonic_function(&g, 0, 1, &petersen), Err(GraphError::ArrayMismatch));
    }
}
