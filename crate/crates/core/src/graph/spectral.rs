use nalgebra::{DMatrix, SymmetricEigen};

use super::ExplicitGraph;

/// Absolute accuracy assumed of computed eigenvalues; anything below it is zero.
pub const EIGEN_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending Laplacian eigenvalues.
    pub eigenvalues: Vec<f64>,
    pub zero_count: usize,
}

impl Spectrum {
    /// Smallest eigenvalue above the zero threshold.
    pub fn gap(&self) -> Option<f64> {
        self.eigenvalues.get(self.zero_count).copied()
    }
}

pub fn laplacian_spectrum(g: &ExplicitGraph) -> Spectrum {
    let n = g.n();
    let mut lap = DMatrix::<f64>::zeros(n, n);
    for x in 0..n {
        lap[(x, x)] = g.degree(x) as f64;
        for &y in g.neighbors(x) {
            lap[(x, y)] = -1.0;
        }
    }
    let eig = SymmetricEigen::new(lap);
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().map(|&x| x.max(0.0)).collect();
    eigenvalues.sort_by(f64::total_cmp);
    let zero_count = eigenvalues.iter().take_while(|&&x| x < EIGEN_TOLERANCE).count();
    Spectrum { eigenvalues, zero_count }
}

/// Smallest nonzero Laplacian eigenvalue `σ`; zero for a disconnected graph.
pub fn laplacian_spectral_gap(g: &ExplicitGraph) -> f64 {
    let s = laplacian_spectrum(g);
    if s.zero_count != 1 {
        return 0.0;
    }
    s.gap().unwrap_or(0.0)
}
