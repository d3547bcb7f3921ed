use std::fmt;

use crate::array::IntersectionArray;
use crate::error::GraphError;

use super::{ExplicitGraph, UNREACHABLE};

/// A pair `(x, y)` at distance `distance` whose forward or backward
/// neighbour count disagrees with the first pair seen at that distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityWitness {
    pub x: usize,
    pub y: usize,
    pub distance: usize,
    /// `'b'` (neighbours one step further from `x`) or `'c'` (one step closer).
    pub count: char,
    pub expected: usize,
    pub found: usize,
    pub first_pair: (usize, usize),
}

impl fmt::Display for RegularityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-count at distance {} is {} for pair ({}, {}) but {} for pair ({}, {})",
            self.count,
            self.distance,
            self.found,
            self.x,
            self.y,
            self.expected,
            self.first_pair.0,
            self.first_pair.1
        )
    }
}

/// Breadth-first search from every vertex, counting for each pair `(x, y)`
/// the neighbours of `y` one step closer to and further from `x`.
pub fn verify_distance_regular(g: &ExplicitGraph) -> Result<IntersectionArray, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    // per distance: (count, first pair)
    let mut b_at: Vec<Option<(usize, (usize, usize))>> = Vec::new();
    let mut c_at: Vec<Option<(usize, (usize, usize))>> = Vec::new();
    for x in 0..g.n() {
        let dist = g.distances_from(x);
        for y in 0..g.n() {
            let i = dist[y];
            debug_assert_ne!(i, UNREACHABLE);
            let mut b = 0;
            let mut c = 0;
            for &z in g.neighbors(y) {
                if dist[z] + 1 == i {
                    c += 1;
                } else if dist[z] == i + 1 {
                    b += 1;
                }
            }
            if b_at.len() <= i {
                b_at.resize(i + 1, None);
                c_at.resize(i + 1, None);
            }
            for (label, slot, value) in [('b', &mut b_at[i], b), ('c', &mut c_at[i], c)] {
                match slot {
                    None => *slot = Some((value, (x, y))),
                    Some((expected, first_pair)) if *expected != value => {
                        return Err(GraphError::NotDistanceRegular(RegularityWitness {
                            x,
                            y,
                            distance: i,
                            count: label,
                            expected: *expected,
                            found: value,
                            first_pair: *first_pair,
                        }));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let diameter = b_at.len() - 1;
    if diameter == 0 {
        return Err(GraphError::BadParams { family: "graph".into(), detail: "single vertex has no array".into() });
    }
    let b = (0..diameter).map(|i| b_at[i].unwrap().0 as u64).collect();
    let c = (1..=diameter).map(|i| c_at[i].unwrap().0 as u64).collect();
    IntersectionArray::new(b, c).map_err(|e| GraphError::EdgeList(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_named_graph;

    fn array_of(name: &str, params: &[usize]) -> String {
        verify_distance_regular(&construct_named_graph(name, params).unwrap()).unwrap().to_string()
    }

    #[test]
    fn known_arrays() {
        assert_eq!(array_of("hypercube", &[3]), "(3,2,1;1,2,3)");
        assert_eq!(array_of("petersen", &[]), "(3,2;1,1)");
        assert_eq!(array_of("complete", &[4]), "(3;1)");
        assert_eq!(array_of("heawood", &[]), "(3,2,2;1,1,3)");
        assert_eq!(array_of("pappus", &[]), "(3,2,2,1;1,1,2,3)");
        assert_eq!(array_of("desargues", &[]), "(3,2,2,1,1;1,1,2,2,3)");
        assert_eq!(array_of("dodecahedron", &[]), "(3,2,1,1,1;1,1,1,2,3)");
        assert_eq!(array_of("complete_bipartite_minus_matching", &[5]), "(4,3,1;1,3,4)");
        assert_eq!(array_of("cocktail_party", &[3]), "(4,1;1,4)");
        assert_eq!(array_of("hamming", &[3, 3]), "(6,4,2;1,2,3)");
        assert_eq!(array_of("johnson", &[5, 2]), "(6,2;1,4)");
        assert_eq!(array_of("hypercube", &[4]), "(4,3,2,1;1,2,3,4)");
        assert_eq!(array_of("cycle", &[7]), "(2,1,1;1,1,1)");
        assert_eq!(array_of("complete_bipartite", &[3]), "(3,2;1,3)");
    }

    #[test]
    fn path_is_rejected() {
        let path = ExplicitGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        match verify_distance_regular(&path) {
            Err(GraphError::NotDistanceRegular(w)) => {
                assert_eq!(w.count, 'b');
                assert_eq!(w.distance, 1);
                assert_eq!((w.x, w.y), (1, 0));
                assert_eq!((w.expected, w.found), (1, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn regular_but_not_distance_regular() {
        // triangular prism: 3-regular, c2 differs between pairs
        let prism = ExplicitGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(matches!(verify_distance_regular(&prism), Err(GraphError::NotDistanceRegular(_))));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = ExplicitGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(verify_distance_regular(&g), Err(GraphError::NotConnected));
    }
}
