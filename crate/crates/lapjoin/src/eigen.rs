//! Brute-force spectral ground truth.
//!
//! Dense symmetric eigendecomposition with residual certificates, plus the
//! tolerance-aware multiset semantics used to compare spectra from different
//! computation routes.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::graph::to_f64;
use crate::{Error, Graph, Result, SPECTRUM_TOL, SYMMETRY_TOL};

/// Sorted list of real eigenvalues with tolerance-aware multiset semantics.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMultiset {
    values: Vec<f64>,
    tolerance: f64,
}

impl SpectralMultiset {
    pub fn new(mut values: Vec<f64>, tolerance: f64) -> Self {
        assert!(tolerance > 0.0, "tolerance must be positive");
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        SpectralMultiset { values, tolerance }
    }

    pub fn from_values(values: Vec<f64>) -> Self {
        Self::new(values, SPECTRUM_TOL)
    }

    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Count of values equal to zero within `tol`.
    pub fn zero_multiplicity(&self, tol: f64) -> usize {
        self.values.iter().filter(|v| v.abs() <= tol).count()
    }

    /// Largest absolute elementwise difference after ascending sort, or
    /// infinity on length mismatch.
    pub fn max_abs_difference(&self, other: &SpectralMultiset) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Multiset equality: equal lengths and elementwise agreement within `tol`
/// after ascending sort.
pub fn spectra_equal(s1: &SpectralMultiset, s2: &SpectralMultiset, tol: f64) -> bool {
    s1.len() == s2.len() && s1.max_abs_difference(s2) <= tol
}

/// Count of values in `s` with absolute value at most `tol`.
pub fn zero_multiplicity(s: &SpectralMultiset, tol: f64) -> usize {
    s.zero_multiplicity(tol)
}

/// An eigenvalue/eigenvector pair with a residual-norm certificate
/// r = ||A x - lambda x||_2.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub vector: DVector<f64>,
    pub residual: f64,
}

impl EigenPair {
    /// Certifies `(value, vector)` against `a`, normalizing the vector and
    /// recording the residual norm.
    pub fn certify(a: &DMatrix<f64>, value: f64, vector: DVector<f64>) -> Self {
        let vector = vector.normalize();
        let residual = (a * &vector - &vector * value).norm();
        EigenPair {
            value,
            vector,
            residual,
        }
    }
}

fn check_symmetric(a: &DMatrix<f64>) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(Error::Precondition(format!(
            "matrix is {}x{}, expected square",
            a.nrows(),
            a.ncols()
        )));
    }
    for i in 0..a.nrows() {
        for j in i + 1..a.ncols() {
            let diff = (a[(i, j)] - a[(j, i)]).abs();
            if diff > SYMMETRY_TOL {
                return Err(Error::NotSymmetric { i, j, diff });
            }
        }
    }
    Ok(())
}

/// Full eigendecomposition of a symmetric matrix, values ascending, with
/// residual certificates. The residual of every accepted pair and the
/// reconstruction error are bounded by 1e-8 * max(1, ||A||_F).
pub fn symmetric_eigen(a: &DMatrix<f64>) -> Result<Vec<EigenPair>> {
    check_symmetric(a)?;
    let n = a.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let decomp = SymmetricEigen::new(a.clone());
    let mut pairs: Vec<EigenPair> = (0..n)
        .map(|i| {
            EigenPair::certify(
                a,
                decomp.eigenvalues[i],
                decomp.eigenvectors.column(i).into_owned(),
            )
        })
        .collect();
    pairs.sort_by(|x, y| x.value.partial_cmp(&y.value).unwrap());

    let bound = 1e-8 * a.norm().max(1.0);
    for p in &pairs {
        if p.residual > bound {
            return Err(Error::Inconsistent(format!(
                "eigenpair residual {:e} exceeds bound {:e}",
                p.residual, bound
            )));
        }
    }
    Ok(pairs)
}

/// Eigenvalues only, as a [`SpectralMultiset`] with the default tolerance.
pub fn spectrum(a: &DMatrix<f64>) -> Result<SpectralMultiset> {
    let pairs = symmetric_eigen(a)?;
    Ok(SpectralMultiset::from_values(
        pairs.into_iter().map(|p| p.value).collect(),
    ))
}

/// Oracle Laplacian spectrum of a graph.
pub fn laplacian_spectrum(g: &Graph) -> Result<SpectralMultiset> {
    spectrum(&to_f64(&g.laplacian()))
}
