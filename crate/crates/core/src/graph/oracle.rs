//! Effective resistance by direct exact solution of the grounded Laplacian.

use num_traits::{One, Zero};

use crate::exact::{q, Q};

use super::ExplicitGraph;

/// Gaussian elimination over the rationals. Returns `None` for a singular system.
pub fn solve_exact(mut a: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = Q::one() / &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            let (upper, lower) = a.split_at_mut(r);
            for (t, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *t -= &factor * p;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    let mut x = vec![Q::zero(); n];
    for r in (0..n).rev() {
        let mut acc = rhs[r].clone();
        for c in r + 1..n {
            acc -= &a[r][c] * &x[c];
        }
        x[r] = acc / &a[r][r];
    }
    Some(x)
}

/// Grounds `v`, injects unit current at `u` and returns the potential at `u`.
///
/// # Panics
///
/// If the graph is disconnected or `u == v`.
pub fn effective_resistance_oracle(g: &ExplicitGraph, u: usize, v: usize) -> Q {
    assert_ne!(u, v, "resistance needs two distinct vertices");
    let n = g.n();
    // reduced index: drop v
    let index = |x: usize| if x < v { x } else { x - 1 };
    let mut lap = vec![vec![Q::zero(); n - 1]; n - 1];
    for x in (0..n).filter(|&x| x != v) {
        let row = index(x);
        lap[row][row] = q(g.degree(x) as i64);
        for &y in g.neighbors(x) {
            if y != v {
                lap[row][index(y)] = q(-1);
            }
        }
    }
    let mut rhs = vec![Q::zero(); n - 1];
    rhs[index(u)] = Q::one();
    let potentials = solve_exact(lap, rhs).expect("grounded Laplacian of a connected graph is nonsingular");
    potentials[index(u)].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use crate::graph::construct_named_graph;

    #[test]
    fn cube_resistances() {
        let g = construct_named_graph("hypercube", &[3]).unwrap();
        assert_eq!(effective_resistance_oracle(&g, 0, 1), frac(7, 12));
        assert_eq!(effective_resistance_oracle(&g, 0, 3), frac(3, 4));
        assert_eq!(effective_resistance_oracle(&g, 0, 7), frac(5, 6));
        assert_eq!(effective_resistance_oracle(&g, 7, 0), frac(5, 6));
    }

    #[test]
    fn complete_graph_and_path() {
        let k4 = construct_named_graph("complete", &[4]).unwrap();
        for v in 1..4 {
            assert_eq!(effective_resistance_oracle(&k4, 0, v), frac(1, 2));
        }
        // series resistors
        let path = ExplicitGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(effective_resistance_oracle(&path, 0, 3), q(3));
        // two parallel paths of length 2 and 3 on a 5-cycle
        let c5 = construct_named_graph("cycle", &[5]).unwrap();
        assert_eq!(effective_resistance_oracle(&c5, 0, 2), frac(6, 5));
    }

    #[test]
    fn singular_system() {
        assert_eq!(solve_exact(vec![vec![q(1), q(2)], vec![q(2), q(4)]], vec![q(1), q(1)]), None);
        assert_eq!(solve_exact(vec![vec![q(0), q(1)], vec![q(1), q(0)]], vec![q(2), q(3)]), Some(vec![q(3), q(2)]));
    }
}
