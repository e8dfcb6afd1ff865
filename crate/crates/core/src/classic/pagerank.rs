use super::StaticGraph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_GAMMA: f64 = 0.85;
pub const DEFAULT_PAGERANK_TOL: f64 = 1e-12;

/// Fixed point of `P_i = (1-γ)/N + γ Σ_j A_ij P_j / k_j`, with the mass of
/// degree-0 nodes spread uniformly over all nodes. Iterates until the L1
/// change drops below `tol`.
///
/// Isolated nodes are interchangeable, so they are carried as one shared
/// value; the cost per iteration is linear in the non-isolated part.
pub fn pagerank<S: Scalar>(g: &StaticGraph, gamma: S, tol: S, max_iter: usize) -> Result<Vec<S>> {
    if !(gamma > S::zero() && gamma < S::one()) {
        return Err(Error::InvalidParameter(format!("damping {gamma} outside (0, 1)")));
    }
    let n = g.n_nodes();
    if n == 0 {
        return Ok(Vec::new());
    }
    let nf = S::of_count(n);
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let n_isolated = S::of_count(n - active.len());
    let teleport = (S::one() - gamma) / nf;

    let mut p = vec![S::one() / nf; n];
    let mut isolated = S::one() / nf;
    let mut next = vec![S::zero(); n];
    let mut residual = S::infinity();
    for _ in 0..max_iter {
        let dangling = n_isolated * isolated;
        let base = teleport + gamma * dangling / nf;
        for &v in &active {
            let inflow: S = g
                .neighbors(v)
                .iter()
                .map(|&w| p[w] / S::of_count(g.degree(w)))
                .sum();
            next[v] = base + gamma * inflow;
        }
        residual = n_isolated * (base - isolated).abs();
        for &v in &active {
            residual += (next[v] - p[v]).abs();
            p[v] = next[v];
        }
        isolated = base;
        if residual < tol {
            break;
        }
    }
    if residual >= tol {
        return Err(Error::NoConvergence {
            method: "pagerank",
            iterations: max_iter,
            residual: residual.to_f64_lossy(),
        });
    }
    for v in (0..n).filter(|&v| g.degree(v) == 0) {
        p[v] = isolated;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::super::graph::fixtures::*;
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pr(g: &StaticGraph) -> Vec<f64> {
        pagerank(g, 0.85, 1e-12, 100_000).unwrap()
    }

    #[test]
    fn symmetric_graphs_uniform() {
        for v in pr(&complete(3)) {
            assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-10);
        }
        for v in pr(&complete(2)) {
            assert_abs_diff_eq!(v, 0.5, epsilon = 1e-10);
        }
    }

    #[test]
    fn path_fixed_point() {
        // P1 = a + 2γ P0, P0 = a + γ P1 / 2 with a = (1-γ)/3
        let g = 0.85;
        let p = pr(&path3());
        let middle = (1.0 + 2.0 * g) / (3.0 * (1.0 + g));
        assert_abs_diff_eq!(p[1], middle, epsilon = 1e-10);
        assert_abs_diff_eq!(p[0], (1.0 - middle) / 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p[0], p[2], epsilon = 1e-12);
    }

    #[test]
    fn isolated_nodes_share_dangling_mass() {
        let g = StaticGraph::from_edges(5, [(0, 1)]);
        let p = pr(&g);
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p[2], p[4], epsilon = 1e-15);
        // dense reference iteration with explicit dangling redistribution
        let mut q = vec![0.2; 5];
        for _ in 0..2000 {
            let dangling: f64 = q[2] + q[3] + q[4];
            let base = 0.15 / 5.0 + 0.85 * dangling / 5.0;
            q = vec![base + 0.85 * q[1], base + 0.85 * q[0], base, base, base];
        }
        for (a, b) in p.iter().zip(&q) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn bad_damping() {
        assert!(pagerank::<f64>(&path3(), 1.0, 1e-12, 10).is_err());
    }
}
