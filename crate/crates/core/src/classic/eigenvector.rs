use super::StaticGraph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_EIGENVECTOR_TOL: f64 = 1e-10;

/// Principal eigenvector of the adjacency matrix restricted to the largest
/// connected component, L2-normalized and nonnegative; other nodes score 0.
///
/// Iterates with `A + I`, which has the same eigenvectors as `A` but a
/// strictly dominant leading eigenvalue on bipartite components.
pub fn eigenvector_centrality<S: Scalar>(
    g: &StaticGraph,
    tol: S,
    max_iter: usize,
) -> Result<Vec<S>> {
    if g.n_edges() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let comp = g.largest_component();
    let n = g.n_nodes();
    let mut x = vec![S::zero(); n];
    let init = S::one() / S::of_count(comp.len()).sqrt();
    for &v in &comp {
        x[v] = init;
    }
    let mut next = vec![S::zero(); n];
    let mut residual = S::infinity();
    for _ in 0..max_iter {
        for &v in &comp {
            next[v] = x[v] + g.neighbors(v).iter().map(|&w| x[w]).sum::<S>();
        }
        let norm = comp.iter().map(|&v| next[v] * next[v]).sum::<S>().sqrt();
        residual = S::zero();
        for &v in &comp {
            next[v] = next[v] / norm;
            residual = residual.max((next[v] - x[v]).abs());
        }
        std::mem::swap(&mut x, &mut next);
        if residual < tol {
            return Ok(x);
        }
    }
    Err(Error::NoConvergence {
        method: "eigenvector centrality",
        iterations: max_iter,
        residual: residual.to_f64_lossy(),
    })
}
