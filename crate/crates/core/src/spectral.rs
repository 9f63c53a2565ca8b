//! Adjacency matrices, full symmetric eigendecomposition, and the
//! bipartite-Ramanujan predicate on the second-largest eigenvalue.
//!
//! The in-scope graphs are small enough (≤ a few thousand vertices) that a
//! dense solver with full-spectrum identities — trace, handshake, bipartite
//! pairing — is both simplest and easiest to check.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::CayleyGraph;

/// Maximum allowed asymmetry of an input matrix.
const SYMMETRY_TOL: f64 = 1e-12;
/// Relative residual bound ‖Av − λv‖ ≤ RESIDUAL_TOL·‖v‖ for extreme pairs.
const RESIDUAL_TOL: f64 = 1e-8;
/// Tolerance for the structural identities λ₁ = d and λ_{n+1−i} = −λ_i.
const STRUCTURE_TOL: f64 = 1e-9;
/// Slack added to the Ramanujan bound 2√(d−1) to absorb rounding.
const RAMANUJAN_SLACK: f64 = 1e-9;

/// A full adjacency spectrum: eigenvalues sorted descending plus the
/// regular degree and the measured residual of the extreme eigenpairs.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Eigenvalues, descending; length = matrix order.
    pub values: Vec<f64>,
    /// Vertex degree of the originating regular graph.
    pub degree: f64,
    /// Largest relative residual observed on the checked eigenpairs.
    pub residual_bound: f64,
}

impl Spectrum {
    /// Wrap an externally obtained value list (for synthetic inputs).
    pub fn new(values: Vec<f64>, degree: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::SpecError("a spectrum cannot be empty".into()));
        }
        if !degree.is_finite() || values.iter().any(|v| !v.is_finite()) {
            return Err(Error::SpecError("spectrum entries must be finite".into()));
        }
        for pair in values.windows(2) {
            if pair[0] < pair[1] - STRUCTURE_TOL {
                return Err(Error::SpecError(
                    "spectrum values must be sorted descending".into(),
                ));
            }
        }
        Ok(Spectrum {
            values,
            degree,
            residual_bound: 0.0,
        })
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// The k-th largest eigenvalue, 1-based: `lambda(2)` is λ₂.
    pub fn lambda(&self, k: usize) -> f64 {
        self.values[k - 1]
    }
}

/// The symmetric 0/1 adjacency matrix of a graph: `a_{uv} = 1` iff u and v
/// share an edge; zero diagonal; all row sums equal the rank.
pub fn adjacency(g: &CayleyGraph) -> DMatrix<f64> {
    let n = g.order();
    let mut m = DMatrix::zeros(n, n);
    for (u, v, _) in g.edges() {
        m[(u, v)] = 1.0;
        m[(v, u)] = 1.0;
    }
    m
}

/// All eigenvalues of a symmetric real matrix, sorted descending. The
/// residual of the largest and smallest eigenpairs is checked against
/// ‖Av − λv‖ ≤ 1e−8·‖v‖. The degree field is set to λ₁ (for the adjacency
/// matrix of a connected regular graph they coincide).
pub fn eigenvalues(m: &DMatrix<f64>) -> Result<Spectrum> {
    let n = m.nrows();
    if n == 0 || m.ncols() != n {
        return Err(Error::NonSymmetric);
    }
    for r in 0..n {
        for c in r + 1..n {
            if (m[(r, c)] - m[(c, r)]).abs() > SYMMETRY_TOL {
                return Err(Error::NonSymmetric);
            }
        }
    }
    let eigen = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eigen.eigenvalues[b]
            .partial_cmp(&eigen.eigenvalues[a])
            .expect("finite eigenvalues")
    });
    let values: Vec<f64> = order.iter().map(|&i| eigen.eigenvalues[i]).collect();

    let mut residual_bound: f64 = 0.0;
    for &i in [order[0], order[n - 1]].iter() {
        let v = eigen.eigenvectors.column(i);
        let residual = (m * v - eigen.eigenvalues[i] * v).norm();
        let relative = residual / v.norm();
        residual_bound = residual_bound.max(relative);
        if relative > RESIDUAL_TOL {
            return Err(Error::Internal(format!(
                "eigenpair residual {:.3e} exceeds {:.0e}",
                relative, RESIDUAL_TOL
            )));
        }
    }
    Ok(Spectrum {
        degree: values[0],
        values,
        residual_bound,
    })
}

/// The spectrum of a graph's adjacency matrix, with the regular/bipartite
/// structure enforced: λ₁ equals the degree and the value list is
/// symmetric about zero, both within 1e−9.
pub fn graph_spectrum(g: &CayleyGraph) -> Result<Spectrum> {
    let mut s = eigenvalues(&adjacency(g))?;
    let d = g.rank() as f64;
    let n = s.values.len();
    if (s.values[0] - d).abs() > STRUCTURE_TOL {
        return Err(Error::Internal(format!(
            "λ₁ = {} differs from the degree {}",
            s.values[0], d
        )));
    }
    for i in 0..n {
        if (s.values[i] + s.values[n - 1 - i]).abs() > STRUCTURE_TOL {
            return Err(Error::Internal(format!(
                "spectrum is not symmetric about zero at position {}",
                i + 1
            )));
        }
    }
    s.degree = d;
    Ok(s)
}

/// True iff every interior eigenvalue satisfies |λ| ≤ 2√(d−1) + 1e−9.
pub fn is_bipartite_ramanujan(s: &Spectrum) -> Result<bool> {
    let n = s.order();
    if n < 3 {
        return Err(Error::DegenerateOrder);
    }
    let bound = 2.0 * (s.degree - 1.0).max(0.0).sqrt() + RAMANUJAN_SLACK;
    let interior_max = s.values[1..n - 1]
        .iter()
        .fold(0.0_f64, |acc, &v| acc.max(v.abs()));
    Ok(interior_max <= bound)
}
