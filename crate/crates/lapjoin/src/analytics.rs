//! Spanning trees, Kirchhoff index and Laplacian-cospectral pairs.
//!
//! Spanning-tree counts come from the Matrix-Tree theorem with an exact
//! integer determinant as the authoritative value and the floating-point
//! spectral product as a cross-check. Cospectral mates are found by
//! exhaustive enumeration of isomorphism classes of small graphs, grouped
//! by the exact integer characteristic polynomial of the Laplacian.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::eigen::{self, SpectralMultiset};
use crate::ops::{self, DoubleJoinVariant};
use crate::{Error, Graph, Result, SPECTRUM_TOL};

/// Largest vertex count for which exhaustive canonical labeling is used.
const ISO_LIMIT: usize = 8;
/// Largest vertex count accepted by [`cospectral_mate_search`].
const SEARCH_LIMIT: usize = 7;

/// Exact determinant by fraction-free Gaussian elimination.
fn det_exact(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact division in Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact characteristic polynomial coefficients of the Laplacian,
/// [c_0, ..., c_n] for det(xI - L) = sum c_k x^k, via principal minors.
fn laplacian_charpoly(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count();
    let l = g.laplacian();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let k = idx.len();
        let minor: Vec<Vec<BigInt>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| BigInt::from(l[(i, j)])).collect())
            .collect();
        let d = det_exact(minor);
        if k % 2 == 1 {
            coeffs[n - k] -= d;
        } else {
            coeffs[n - k] += d;
        }
    }
    coeffs
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    permute_rec(&mut perm, 0, f);
}

fn permute_rec(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_rec(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Lexicographically minimal edge list over all relabelings. Feasible only
/// for small graphs; used for isomorphism decisions at <= 8 vertices.
fn canonical_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    if n > ISO_LIMIT {
        return Err(Error::Precondition(format!(
            "canonical labeling supported up to {ISO_LIMIT} vertices, got {n}"
        )));
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    for_each_permutation(n, &mut |perm| {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    });
    Ok(best.unwrap_or_default())
}

/// Isomorphism by canonical-form comparison; feasible at <= 8 vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_edges(a)? == canonical_edges(b)?)
}

/// Number of spanning trees by the Matrix-Tree theorem. The value is the
/// exact integer determinant of the Laplacian with row and column 0
/// deleted; the product of nonzero Laplacian eigenvalues divided by N is
/// verified against it (exactly after rounding when the count fits double
/// precision, to relative 1e-6 otherwise). Disconnected graphs have 0.
pub fn spanning_trees(g: &Graph) -> Result<BigUint> {
    if !g.is_connected() {
        return Ok(BigUint::zero());
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(BigUint::one());
    }
    let l = g.laplacian();
    let reduced: Vec<Vec<BigInt>> = (1..n)
        .map(|i| (1..n).map(|j| BigInt::from(l[(i, j)])).collect())
        .collect();
    let det = det_exact(reduced);
    if det.is_negative() {
        return Err(Error::Inconsistent(format!(
            "reduced Laplacian determinant is negative: {det}"
        )));
    }

    // spectral cross-check
    let spec = eigen::laplacian_spectrum(g)?;
    let product: f64 = spec.values()[1..].iter().product::<f64>() / n as f64;
    let det_f = det.to_f64().unwrap_or(f64::INFINITY);
    let agrees = if det_f < 2f64.powi(53) {
        product.round() == det_f
    } else {
        (product - det_f).abs() <= 1e-6 * det_f
    };
    if !agrees {
        return Err(Error::Inconsistent(format!(
            "spectral product {product} disagrees with determinant {det}"
        )));
    }
    Ok(det.to_biguint().unwrap())
}

/// Kirchhoff index from a Laplacian spectrum of a connected graph:
/// N times the sum of reciprocals of the N - 1 nonzero eigenvalues.
pub fn kirchhoff_from_spectrum(spec: &SpectralMultiset) -> Result<f64> {
    let n = spec.len();
    if n < 2 {
        return Err(Error::Precondition(
            "Kirchhoff index needs at least 2 vertices".into(),
        ));
    }
    if spec.zero_multiplicity(SPECTRUM_TOL) != 1 {
        return Err(Error::Precondition(
            "Kirchhoff index is defined for connected graphs only".into(),
        ));
    }
    Ok(n as f64 * spec.values()[1..].iter().map(|l| 1.0 / l).sum::<f64>())
}

/// Kirchhoff index of a connected graph from its oracle spectrum.
pub fn kirchhoff_index(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "Kirchhoff index is undefined for disconnected graphs".into(),
        ));
    }
    kirchhoff_from_spectrum(&eigen::laplacian_spectrum(g)?)
}

/// Isomorphism-class representatives of all simple graphs on exactly `n`
/// vertices, generated by vertex augmentation with canonical deduplication.
fn graph_representatives(n: usize) -> Result<Vec<Graph>> {
    let mut reps: Vec<Graph> = vec![Graph::null(0)];
    for size in 1..=n {
        let mut next: BTreeMap<Vec<(usize, usize)>, Graph> = BTreeMap::new();
        for rep in &reps {
            for mask in 0u32..(1 << (size - 1)) {
                let mut edges = rep.edges().to_vec();
                edges.extend((0..size - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, size - 1)));
                let g = Graph::new(size, edges)?;
                let key = canonical_edges(&g)?;
                next.entry(key).or_insert(g);
            }
        }
        reps = next.into_values().collect();
    }
    Ok(reps)
}

/// All unordered pairs of non-isomorphic Laplacian-cospectral graphs with
/// the same vertex count, up to `max_vertices` (at most 7). Candidates are
/// grouped by exact characteristic polynomial and then verified cospectral
/// by the oracle at tolerance 1e-8.
pub fn cospectral_mate_search(max_vertices: usize) -> Result<Vec<(Graph, Graph)>> {
    if max_vertices > SEARCH_LIMIT {
        return Err(Error::Precondition(format!(
            "exhaustive search supported up to {SEARCH_LIMIT} vertices, got {max_vertices}"
        )));
    }
    let mut pairs = Vec::new();
    for n in 1..=max_vertices {
        let mut by_poly: BTreeMap<Vec<BigInt>, Vec<Graph>> = BTreeMap::new();
        for g in graph_representatives(n)? {
            by_poly.entry(laplacian_charpoly(&g)).or_default().push(g);
        }
        for group in by_poly.values() {
            for i in 0..group.len() {
                for j in i + 1..group.len() {
                    let sa = eigen::laplacian_spectrum(&group[i])?;
                    let sb = eigen::laplacian_spectrum(&group[j])?;
                    if !eigen::spectra_equal(&sa, &sb, SPECTRUM_TOL) {
                        return Err(Error::Inconsistent(
                            "equal characteristic polynomials but oracle spectra differ".into(),
                        ));
                    }
                    pairs.push((group[i].clone(), group[j].clone()));
                }
            }
        }
    }
    Ok(pairs)
}

/// Witness that two double joins over cospectral factors are themselves
/// Laplacian cospectral.
#[derive(Debug, Clone)]
pub struct CospectralCertificate {
    pub graph_a: Graph,
    pub graph_b: Graph,
    pub shared_spectrum: SpectralMultiset,
    /// Whether the two joins are known isomorphic. Decided exactly at
    /// <= 8 vertices; for larger joins this reports isomorphism of all
    /// three factor pairs instead.
    pub isomorphic: bool,
    pub tolerance: f64,
}

fn factor_pair_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    if a.vertex_count() <= ISO_LIMIT && b.vertex_count() <= ISO_LIMIT {
        is_isomorphic(a, b)
    } else {
        Ok(false)
    }
}

/// Builds the swap construction: two double joins over Laplacian-cospectral
/// base graphs and factor pairs, verifies that their oracle spectra agree,
/// and reports the isomorphism evidence.
#[allow(clippy::too_many_arguments)]
pub fn cospectral_double_join(
    variant: DoubleJoinVariant,
    g: &Graph,
    h: &Graph,
    g1: &Graph,
    h1: &Graph,
    g2: &Graph,
    h2: &Graph,
) -> Result<CospectralCertificate> {
    let kg = g.regularity().ok_or_else(|| {
        Error::Precondition("swap construction requires regular base graphs".into())
    })?;
    let kh = h.regularity().ok_or_else(|| {
        Error::Precondition("swap construction requires regular base graphs".into())
    })?;
    if kg != kh || g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Err(Error::Precondition(
            "base graphs must share (n, m, k)".into(),
        ));
    }
    for (a, b, what) in [(g, h, "base graphs"), (g1, h1, "first factors"), (g2, h2, "second factors")] {
        if a.vertex_count() != b.vertex_count() {
            return Err(Error::Precondition(format!("{what} must have equal order")));
        }
        let sa = eigen::laplacian_spectrum(a)?;
        let sb = eigen::laplacian_spectrum(b)?;
        if !eigen::spectra_equal(&sa, &sb, SPECTRUM_TOL) {
            return Err(Error::Precondition(format!("{what} are not Laplacian cospectral")));
        }
    }

    let join_a = ops::double_join(variant, g, g1, g2)?;
    let join_b = ops::double_join(variant, h, h1, h2)?;
    let spec_a = eigen::laplacian_spectrum(&join_a)?;
    let spec_b = eigen::laplacian_spectrum(&join_b)?;
    if !eigen::spectra_equal(&spec_a, &spec_b, SPECTRUM_TOL) {
        return Err(Error::Inconsistent(format!(
            "double joins are not cospectral: max difference {:e}",
            spec_a.max_abs_difference(&spec_b)
        )));
    }

    let isomorphic = if join_a.vertex_count() <= ISO_LIMIT {
        is_isomorphic(&join_a, &join_b)?
    } else {
        factor_pair_isomorphic(g, h)?
            && factor_pair_isomorphic(g1, h1)?
            && factor_pair_isomorphic(g2, h2)?
    };
    Ok(CospectralCertificate {
        graph_a: join_a,
        graph_b: join_b,
        shared_spectrum: spec_a,
        isomorphic,
        tolerance: SPECTRUM_TOL,
    })
}
