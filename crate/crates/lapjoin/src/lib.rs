//! Laplacian spectra of double join graph operations.
//!
//! Four double join constructions are supported, built from the subdivision
//! graph S(G), the Q-graph, the R-graph and the total graph T(G) of a
//! connected base graph G, joined completely to two arbitrary graphs G1
//! (against the original vertices) and G2 (against the inserted vertices).
//!
//! Every spectrum can be computed three ways and cross-checked:
//!
//! * [`closed_form`] — per-variant eigenvalue families for a regular base
//!   graph, in terms of the factor spectra only;
//! * [`solver`] — the generic block eigensolver for double join matrices,
//!   including full eigenvector construction with residual certificates;
//! * [`eigen`] — brute-force dense symmetric eigendecomposition of the
//!   explicitly assembled graph.
//!
//! [`analytics`] adds spanning-tree counts (Matrix-Tree theorem), the
//! Kirchhoff index, and Laplacian-cospectral pair construction.

pub mod analytics;
pub mod closed_form;
pub mod eigen;
pub mod families;
pub mod graph;
pub mod ops;
pub mod report;
pub mod solver;

mod error;

pub use error::Error;
pub use graph::Graph;
pub use ops::DoubleJoinVariant;

pub type Result<T> = std::result::Result<T, Error>;

/// Default tolerance for spectrum comparison.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Tolerance for symmetry and normalization checks.
pub const SYMMETRY_TOL: f64 = 1e-12;
