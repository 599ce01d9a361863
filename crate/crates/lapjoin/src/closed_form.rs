//! Closed-form Laplacian spectra of the four double joins.
//!
//! For a connected k-regular base graph G the Laplacian of every double join
//! variant is a double join matrix with c = -1, B = -M (the incidence
//! matrix) and diagonal blocks built from L(G), L(l(G)), L(G1) and L(G2).
//! Since M M^T = 2k I - L(G) and L(l(G)) = 2k I - M^T M, all scalar data can
//! be read off the factor spectra, so the full spectrum of the join follows
//! without assembling the large matrix.

use nalgebra::DMatrix;

use crate::eigen::SpectralMultiset;
use crate::graph::to_f64;
use crate::ops::DoubleJoinVariant;
use crate::solver::{self, DoubleJoinBlocks, DoubleJoinScalars};
use crate::{eigen, Error, Graph, Result};

/// Factor data of a closed-form instance: the degree and Laplacian spectrum
/// of a regular base graph plus the orders and Laplacian spectra of the two
/// join factors.
#[derive(Debug, Clone)]
pub struct ClosedFormInstance {
    pub variant: DoubleJoinVariant,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub spectrum_g: SpectralMultiset,
    pub n1: usize,
    pub n2: usize,
    pub spectrum_g1: SpectralMultiset,
    pub spectrum_g2: SpectralMultiset,
}

impl ClosedFormInstance {
    /// Builds the instance from explicit graphs, checking the closed
    /// form's hypotheses: G connected and k-regular with at least as many
    /// edges as vertices.
    pub fn from_graphs(
        variant: DoubleJoinVariant,
        g: &Graph,
        g1: &Graph,
        g2: &Graph,
    ) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Precondition(
                "closed form requires a connected base graph".into(),
            ));
        }
        let k = g.regularity().ok_or_else(|| {
            Error::Precondition("closed form requires a regular base graph".into())
        })?;
        let (n, m) = (g.vertex_count(), g.edge_count());
        if m < n {
            return Err(Error::Precondition(format!(
                "closed form requires m >= n (double join matrix needs p <= q), got n={n} m={m}"
            )));
        }
        let inst = ClosedFormInstance {
            variant,
            k,
            n,
            m,
            spectrum_g: eigen::laplacian_spectrum(g)?,
            n1: g1.vertex_count(),
            n2: g2.vertex_count(),
            spectrum_g1: eigen::laplacian_spectrum(g1)?,
            spectrum_g2: eigen::laplacian_spectrum(g2)?,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        if 2 * self.m != self.n * self.k {
            return Err(Error::Precondition(format!(
                "handshake mismatch: 2m = {} but nk = {}",
                2 * self.m,
                self.n * self.k
            )));
        }
        let lam = self.spectrum_g.values();
        if lam.len() != self.n
            || self.spectrum_g1.len() != self.n1
            || self.spectrum_g2.len() != self.n2
        {
            return Err(Error::Precondition("factor spectrum length mismatch".into()));
        }
        if let Some(&first) = lam.first() {
            if first.abs() > 1e-8 {
                return Err(Error::Precondition(format!(
                    "base spectrum must start at 0, got {first}"
                )));
            }
        }
        if let Some(&last) = lam.last() {
            if last > 2.0 * self.k as f64 + 1e-8 {
                return Err(Error::Precondition(format!(
                    "base Laplacian eigenvalue {last} exceeds 2k = {}",
                    2 * self.k
                )));
            }
        }
        Ok(())
    }

    /// The scalar data of the double join matrix for this variant: shared
    /// b_i^2 = 2k - lambda_i(G), d_i = lambda_i(G1) + n, e_i =
    /// lambda_i(G2) + m, and the per-variant (a_i, c_i) recipes. Negative
    /// roundoff in 2k - lambda is clamped at zero.
    pub fn scalars(&self) -> DoubleJoinScalars {
        let (n1, n2, k) = (self.n1 as f64, self.n2 as f64, self.k as f64);
        let lam = self.spectrum_g.values();
        let shifts_original = self.variant.keeps_original_edges();
        let shifts_line = self.variant.adds_line_edges();

        let b: Vec<f64> = lam.iter().map(|&l| (2.0 * k - l).max(0.0).sqrt()).collect();
        let a: Vec<f64> = lam
            .iter()
            .map(|&l| n1 + k + if shifts_original { l } else { 0.0 })
            .collect();
        let c_head: Vec<f64> = lam
            .iter()
            .map(|&l| n2 + 2.0 + if shifts_line { l } else { 0.0 })
            .collect();
        let tail_value = n2 + 2.0 + if shifts_line { 2.0 * k } else { 0.0 };
        let c_tail = vec![tail_value; self.m - self.n];

        DoubleJoinScalars {
            p: self.n,
            q: self.m,
            r: self.n1,
            s: self.n2,
            sign: -1.0,
            a,
            b,
            c_head,
            c_tail,
            d: self.spectrum_g1.values().iter().map(|l| l + self.n as f64).collect(),
            e: self.spectrum_g2.values().iter().map(|l| l + self.m as f64).collect(),
        }
    }
}

/// Closed-form Laplacian spectrum of the double join in the general case
/// n1 >= 1 and n2 >= 1.
pub fn closed_form_spectrum(inst: &ClosedFormInstance) -> Result<SpectralMultiset> {
    if inst.n1 == 0 || inst.n2 == 0 {
        return Err(Error::Precondition(
            "closed_form_spectrum requires n1 >= 1 and n2 >= 1; use reduced_spectrum".into(),
        ));
    }
    solver::spectrum_from_scalars(&inst.scalars())
}

/// Closed-form spectrum of the vertex-join / edge-join reductions where one
/// or both factors are null graphs.
pub fn reduced_spectrum(inst: &ClosedFormInstance) -> Result<SpectralMultiset> {
    if inst.n1 >= 1 && inst.n2 >= 1 {
        return Err(Error::Precondition(
            "reduced_spectrum requires n1 = 0 or n2 = 0; use closed_form_spectrum".into(),
        ));
    }
    solver::spectrum_reduced(&inst.scalars())
}

/// Dispatches to the general or reduced closed form based on the factor
/// orders.
pub fn laplacian_spectrum(inst: &ClosedFormInstance) -> Result<SpectralMultiset> {
    if inst.n1 >= 1 && inst.n2 >= 1 {
        closed_form_spectrum(inst)
    } else {
        reduced_spectrum(inst)
    }
}

/// The double join Laplacian as explicit blocks, suitable for the generic
/// solver: A and C carry the variant shifts, B = -M, D and E the shifted
/// factor Laplacians, with coupling sign -1.
pub fn laplacian_blocks(
    variant: DoubleJoinVariant,
    g: &Graph,
    g1: &Graph,
    g2: &Graph,
) -> Result<DoubleJoinBlocks> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "double join blocks require a connected base graph".into(),
        ));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m < n {
        return Err(Error::Precondition(format!(
            "double join matrix needs p <= q, got n={n} m={m}"
        )));
    }
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let deg = g.degrees();

    let mut a = DMatrix::<f64>::zeros(n, n);
    for (i, &d) in deg.iter().enumerate() {
        a[(i, i)] = (n1 + d) as f64;
    }
    if variant.keeps_original_edges() {
        a += to_f64(&g.laplacian());
    }
    let mut c = DMatrix::<f64>::identity(m, m) * (n2 as f64 + 2.0);
    if variant.adds_line_edges() {
        c += to_f64(&g.line_graph().laplacian());
    }
    let b = -to_f64(&g.incidence_matrix());
    let d = to_f64(&g1.laplacian()) + DMatrix::identity(n1, n1) * n as f64;
    let e = to_f64(&g2.laplacian()) + DMatrix::identity(n2, n2) * m as f64;
    DoubleJoinBlocks::new(a, b, c, d, e, -1.0)
}
