//! Generic eigensolver for double join matrices.
//!
//! A double join matrix is a 4x4 block matrix
//!
//! ```text
//!   | A    B    cJ   0  |
//!   | B^T  C    0    cJ |
//!   | cJ   0    D    0  |
//!   | 0    cJ   0    E  |
//! ```
//!
//! with symmetric diagonal blocks of orders p, q, r, s (p <= q), all-ones
//! coupling blocks scaled by c = +-1, and a compatibility structure between
//! A, B and C: every singular pair of B is an eigenpair of A and C, the
//! all-ones vectors are eigenvectors of A, C, D and E, and kernel vectors of
//! B are eigenvectors of C.
//!
//! Under these conditions the full spectrum splits into five families driven
//! by scalar data alone, and every eigenvector can be written down
//! explicitly. The last four eigenvalues come from the quotient matrix of
//! the blockwise-constant subspace; its characteristic quartic is used as an
//! independent residual check.

use nalgebra::{DMatrix, DVector};

use crate::eigen::{self, EigenPair, SpectralMultiset};
use crate::{Error, Result, SYMMETRY_TOL};

/// Scalar data of a double join matrix, sufficient to list all p+q+r+s
/// eigenvalues.
///
/// The first entry of `a`, `b`, `c_head`, `d` and `e` always corresponds to
/// the all-ones directions. `c_tail` holds the eigenvalues of C on the
/// kernel directions of B.
#[derive(Debug, Clone)]
pub struct DoubleJoinScalars {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    /// Coupling sign, +1.0 or -1.0.
    pub sign: f64,
    /// Eigenvalues of A paired with the singular structure of B; `a[0]` is
    /// the all-ones eigenvalue.
    pub a: Vec<f64>,
    /// Singular values of B (nonnegative), `b[0]` first.
    pub b: Vec<f64>,
    /// Eigenvalues of C paired with `a` and `b`.
    pub c_head: Vec<f64>,
    /// Eigenvalues of C on kernel directions of B (q - p entries).
    pub c_tail: Vec<f64>,
    /// Eigenvalues of D, all-ones first.
    pub d: Vec<f64>,
    /// Eigenvalues of E, all-ones first.
    pub e: Vec<f64>,
}

impl DoubleJoinScalars {
    pub fn validate(&self) -> Result<()> {
        if self.p > self.q {
            return Err(Error::Precondition(format!(
                "double join scalars need p <= q, got p={} q={}",
                self.p, self.q
            )));
        }
        if self.p == 0 {
            return Err(Error::Precondition("double join scalars need p >= 1".into()));
        }
        if self.sign != 1.0 && self.sign != -1.0 {
            return Err(Error::Precondition(format!("sign must be +-1, got {}", self.sign)));
        }
        let lens = [
            ("a", self.a.len(), self.p),
            ("b", self.b.len(), self.p),
            ("c_head", self.c_head.len(), self.p),
            ("c_tail", self.c_tail.len(), self.q - self.p),
            ("d", self.d.len(), self.r),
            ("e", self.e.len(), self.s),
        ];
        for (name, got, want) in lens {
            if got != want {
                return Err(Error::Precondition(format!(
                    "scalar list `{name}` has length {got}, expected {want}"
                )));
            }
        }
        if let Some(b) = self.b.iter().find(|&&b| b < 0.0) {
            return Err(Error::Precondition(format!("singular values must be >= 0, got {b}")));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.p + self.q + self.r + self.s
    }
}

/// The explicit blocks of a double join matrix.
#[derive(Debug, Clone)]
pub struct DoubleJoinBlocks {
    a: DMatrix<f64>,
    b: DMatrix<f64>,
    c: DMatrix<f64>,
    d: DMatrix<f64>,
    e: DMatrix<f64>,
    sign: f64,
}

impl DoubleJoinBlocks {
    pub fn new(
        a: DMatrix<f64>,
        b: DMatrix<f64>,
        c: DMatrix<f64>,
        d: DMatrix<f64>,
        e: DMatrix<f64>,
        sign: f64,
    ) -> Result<Self> {
        let (p, q) = (a.nrows(), c.nrows());
        if b.shape() != (p, q) {
            return Err(Error::Precondition(format!(
                "B must be {p}x{q}, got {}x{}",
                b.nrows(),
                b.ncols()
            )));
        }
        if p > q {
            return Err(Error::Precondition(format!(
                "double join blocks need p <= q, got p={p} q={q}"
            )));
        }
        if p == 0 {
            return Err(Error::Precondition("double join blocks need p >= 1".into()));
        }
        if sign != 1.0 && sign != -1.0 {
            return Err(Error::Precondition(format!("sign must be +-1, got {sign}")));
        }
        for (name, m) in [("A", &a), ("C", &c), ("D", &d), ("E", &e)] {
            if m.nrows() != m.ncols() {
                return Err(Error::Precondition(format!("block {name} must be square")));
            }
            for i in 0..m.nrows() {
                for j in i + 1..m.ncols() {
                    let diff = (m[(i, j)] - m[(j, i)]).abs();
                    if diff > SYMMETRY_TOL {
                        return Err(Error::NotSymmetric { i, j, diff });
                    }
                }
            }
        }
        Ok(DoubleJoinBlocks { a, b, c, d, e, sign })
    }

    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.a.nrows(), self.c.nrows(), self.d.nrows(), self.e.nrows())
    }

    pub fn sign(&self) -> f64 {
        self.sign
    }

    /// Assembles the full (p+q+r+s) x (p+q+r+s) double join matrix.
    pub fn assemble(&self) -> DMatrix<f64> {
        let (p, q, r, s) = self.dims();
        let total = p + q + r + s;
        let mut m = DMatrix::zeros(total, total);
        m.view_mut((0, 0), (p, p)).copy_from(&self.a);
        m.view_mut((0, p), (p, q)).copy_from(&self.b);
        m.view_mut((p, 0), (q, p)).copy_from(&self.b.transpose());
        m.view_mut((p, p), (q, q)).copy_from(&self.c);
        m.view_mut((p + q, p + q), (r, r)).copy_from(&self.d);
        m.view_mut((p + q + r, p + q + r), (s, s)).copy_from(&self.e);
        m.view_mut((0, p + q), (p, r)).fill(self.sign);
        m.view_mut((p + q, 0), (r, p)).fill(self.sign);
        m.view_mut((p, p + q + r), (q, s)).fill(self.sign);
        m.view_mut((p + q + r, p), (s, q)).fill(self.sign);
        m
    }
}

/// Orthonormal basis of the complement of the all-ones vector in R^n, as the
/// trailing n-1 columns of the Householder reflection mapping e_1 to
/// 1/sqrt(n).
fn ones_complement_basis(n: usize) -> DMatrix<f64> {
    let mut h = DMatrix::identity(n, n);
    if n > 0 {
        let u = 1.0 / (n as f64).sqrt();
        let mut w = DVector::from_element(n, -u);
        w[0] += 1.0;
        let norm = w.norm();
        if norm > 0.0 {
            w /= norm;
            h -= &w * w.transpose() * 2.0;
        }
    }
    h.columns(1, n.saturating_sub(1)).into_owned()
}

/// One singular mode of B away from the all-ones pair, together with the
/// matching eigenvalues of A and C. `beta = x^T B y` carries the sign that
/// the nonnegative singular value drops.
struct ModePair {
    x: DVector<f64>,
    y: DVector<f64>,
    a: f64,
    c: f64,
    beta: f64,
}

/// Full spectral decomposition of the compatibility structure, shared by
/// scalar extraction and eigenvector construction.
struct Decomposition {
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    sign: f64,
    a1: f64,
    beta1: f64,
    c1: f64,
    d1: Option<f64>,
    e1: Option<f64>,
    pairs: Vec<ModePair>,
    /// (c_j, Y_j) for kernel directions of B, j = p+1..q.
    kernel: Vec<(f64, DVector<f64>)>,
    d_rest: Vec<(f64, DVector<f64>)>,
    e_rest: Vec<(f64, DVector<f64>)>,
}

fn condition_err(condition: &'static str, detail: String) -> Error {
    Error::Condition { condition, detail }
}

/// Checks that `v` is an eigenvector of `m` for the Rayleigh-quotient
/// eigenvalue; returns the eigenvalue.
fn rayleigh_check(
    m: &DMatrix<f64>,
    v: &DVector<f64>,
    tol: f64,
    condition: &'static str,
    what: &str,
) -> Result<f64> {
    let val = v.dot(&(m * v));
    let res = (m * v - v * val).norm();
    if res > tol {
        return Err(condition_err(
            condition,
            format!("{what} is not an eigenvector: residual {res:e} > {tol:e}"),
        ));
    }
    Ok(val)
}

/// Restricted eigendecomposition of `m` on the complement of the all-ones
/// vector, returned ascending with vectors lifted back to R^n.
fn complement_eigen(m: &DMatrix<f64>) -> Result<Vec<(f64, DVector<f64>)>> {
    let n = m.nrows();
    let basis = ones_complement_basis(n);
    let restricted = basis.transpose() * m * &basis;
    // symmetrize roundoff before decomposition
    let restricted = (&restricted + restricted.transpose()) * 0.5;
    let pairs = eigen::symmetric_eigen(&restricted)?;
    Ok(pairs
        .into_iter()
        .map(|p| (p.value, &basis * p.vector))
        .collect())
}

fn decompose(blocks: &DoubleJoinBlocks) -> Result<Decomposition> {
    let (p, q, r, s) = blocks.dims();
    let full = blocks.assemble();
    let tol = 1e-8 * full.norm().max(1.0);

    let ones_p = DVector::from_element(p, 1.0);
    let ones_q = DVector::from_element(q, 1.0);

    let a1 = rayleigh_check(&blocks.a, &(ones_p.clone() / (p as f64).sqrt()), tol, "(ii)", "1_p on A")?;
    let c1 = rayleigh_check(&blocks.c, &(ones_q.clone() / (q as f64).sqrt()), tol, "(ii)", "1_q on C")?;

    // B must map the all-ones pair to itself: B 1_q = beta1 sqrt(q/p) 1_p.
    let beta1 = (ones_p.dot(&(&blocks.b * &ones_q))) / ((p * q) as f64).sqrt();
    let res_b = (&blocks.b * &ones_q - &ones_p * (beta1 * (q as f64 / p as f64).sqrt())).norm();
    let res_bt =
        (blocks.b.transpose() * &ones_p - &ones_q * (beta1 * (p as f64 / q as f64).sqrt())).norm();
    if res_b.max(res_bt) > tol {
        return Err(condition_err(
            "(ii)",
            format!("all-ones vectors are not a singular pair of B: residual {:e}", res_b.max(res_bt)),
        ));
    }

    let (d1, d_rest) = if r > 0 {
        let ones_r = DVector::from_element(r, 1.0) / (r as f64).sqrt();
        let d1 = rayleigh_check(&blocks.d, &ones_r, tol, "(iv)", "1_r on D")?;
        (Some(d1), complement_eigen(&blocks.d)?)
    } else {
        (None, Vec::new())
    };
    let (e1, e_rest) = if s > 0 {
        let ones_s = DVector::from_element(s, 1.0) / (s as f64).sqrt();
        let e1 = rayleigh_check(&blocks.e, &ones_s, tol, "(iv)", "1_s on E")?;
        (Some(e1), complement_eigen(&blocks.e)?)
    } else {
        (None, Vec::new())
    };

    // Singular structure of B on the complement of the all-ones pair.
    let basis_p = ones_complement_basis(p);
    let basis_q = ones_complement_basis(q);
    let b_restricted = basis_p.transpose() * &blocks.b * &basis_q;
    let sv_tol = 1e-7 * blocks.b.norm().max(1.0);

    let left_gram = &b_restricted * b_restricted.transpose();
    let left_gram = (&left_gram + left_gram.transpose()) * 0.5;
    let mut left = eigen::symmetric_eigen(&left_gram)?;
    left.sort_by(|x, y| y.value.partial_cmp(&x.value).unwrap());

    let mut pairs: Vec<ModePair> = Vec::with_capacity(p.saturating_sub(1));
    let mut zero_left: Vec<DVector<f64>> = Vec::new();
    // singular vectors with positive singular value, grouped by multiplicity
    let mut i = 0;
    while i < left.len() {
        let sv = left[i].value.max(0.0).sqrt();
        if sv <= sv_tol {
            zero_left.extend(left[i..].iter().map(|pair| &basis_p * &pair.vector));
            break;
        }
        let mut j = i + 1;
        while j < left.len() && (left[j].value.max(0.0).sqrt() - sv).abs() <= 1e-6 * sv.max(1.0) {
            j += 1;
        }
        let group: Vec<usize> = (i..j).collect();
        let mut xs: Vec<DVector<f64>> = group.iter().map(|&g| &basis_p * &left[g].vector).collect();
        let mut ys: Vec<DVector<f64>> = group
            .iter()
            .map(|&g| {
                let sv_g = left[g].value.max(0.0).sqrt();
                &basis_q * (b_restricted.transpose() * &left[g].vector) / sv_g
            })
            .collect();
        simultaneous_diagonalize(&blocks.a, &blocks.c, &mut xs, &mut ys)?;
        for (x, y) in xs.into_iter().zip(ys) {
            let a = rayleigh_check(&blocks.a, &x, tol, "(i)", "singular vector X_i")?;
            let c = rayleigh_check(&blocks.c, &y, tol, "(i)", "singular vector Y_i")?;
            let beta = x.dot(&(&blocks.b * &y));
            let res = (&blocks.b * &y - &x * beta)
                .norm()
                .max((blocks.b.transpose() * &x - &y * beta).norm());
            if res > tol {
                return Err(condition_err(
                    "(i)",
                    format!("(X_i, Y_i) is not a singular pair of B: residual {res:e}"),
                ));
            }
            pairs.push(ModePair { x, y, a, c, beta });
        }
        i = j;
    }

    // Kernel of B on the complement: holds the Y-side of zero singular
    // values plus the q - p extra directions of condition (iii).
    let right_gram = b_restricted.transpose() * &b_restricted;
    let right_gram = (&right_gram + right_gram.transpose()) * 0.5;
    let right = eigen::symmetric_eigen(&right_gram)?;
    let kernel_cols: Vec<DVector<f64>> = right
        .iter()
        .filter(|pair| pair.value.max(0.0).sqrt() <= sv_tol)
        .map(|pair| &basis_q * &pair.vector)
        .collect();
    let expected = (q - p) + zero_left.len();
    if kernel_cols.len() != expected {
        return Err(condition_err(
            "(iii)",
            format!(
                "kernel of B has dimension {} on the all-ones complement, expected {}",
                kernel_cols.len(),
                expected
            ),
        ));
    }
    // diagonalize C on the kernel so every kernel direction is a C-eigenvector
    let kernel_pairs = diagonalize_on(&blocks.c, kernel_cols)?;
    let mut kernel = Vec::new();
    for (idx, (c_val, y)) in kernel_pairs.into_iter().enumerate() {
        let c_val = rayleigh_check(&blocks.c, &y, tol, "(iii)", "kernel vector Y_j")
            .inspect(|v| {
                debug_assert!((v - c_val).abs() <= 1e-6 * c_val.abs().max(1.0));
            })?;
        if (&blocks.b * &y).norm() > tol {
            return Err(condition_err("(iii)", "kernel vector not annihilated by B".into()));
        }
        if idx < zero_left.len() {
            let x = zero_left[idx].clone();
            let a = rayleigh_check(&blocks.a, &x, tol, "(i)", "singular vector X_i (b_i = 0)")?;
            pairs.push(ModePair { x, y, a, c: c_val, beta: 0.0 });
        } else {
            kernel.push((c_val, y));
        }
    }

    Ok(Decomposition {
        p,
        q,
        r,
        s,
        sign: blocks.sign,
        a1,
        beta1,
        c1,
        d1,
        e1,
        pairs,
        kernel,
        d_rest,
        e_rest,
    })
}

/// Rotates a group of singular vectors sharing one singular value so that
/// the X-side diagonalizes A and, within equal eigenvalues of A, the Y-side
/// diagonalizes C. Rotating both sides by the same orthogonal matrix keeps
/// the singular relation intact.
fn simultaneous_diagonalize(
    a: &DMatrix<f64>,
    c: &DMatrix<f64>,
    xs: &mut [DVector<f64>],
    ys: &mut [DVector<f64>],
) -> Result<()> {
    let g = xs.len();
    if g <= 1 {
        return Ok(());
    }
    let xmat = DMatrix::from_columns(xs);
    let sa = xmat.transpose() * a * &xmat;
    let sa = (&sa + sa.transpose()) * 0.5;
    let a_pairs = eigen::symmetric_eigen(&sa)?;
    let rot = DMatrix::from_columns(
        &a_pairs.iter().map(|p| p.vector.clone()).collect::<Vec<_>>(),
    );
    rotate(xs, &rot);
    rotate(ys, &rot);

    // second stage: within equal a-eigenvalues, diagonalize C on the Y-side
    let mut i = 0;
    while i < g {
        let ai = a_pairs[i].value;
        let mut j = i + 1;
        while j < g && (a_pairs[j].value - ai).abs() <= 1e-6 * ai.abs().max(1.0) {
            j += 1;
        }
        if j - i > 1 {
            let ymat = DMatrix::from_columns(&ys[i..j]);
            let sc = ymat.transpose() * c * &ymat;
            let sc = (&sc + sc.transpose()) * 0.5;
            let c_pairs = eigen::symmetric_eigen(&sc)?;
            let rot2 = DMatrix::from_columns(
                &c_pairs.iter().map(|p| p.vector.clone()).collect::<Vec<_>>(),
            );
            rotate(&mut xs[i..j], &rot2);
            rotate(&mut ys[i..j], &rot2);
        }
        i = j;
    }
    Ok(())
}

fn rotate(vecs: &mut [DVector<f64>], rot: &DMatrix<f64>) {
    let mat = DMatrix::from_columns(vecs);
    let rotated = mat * rot;
    for (i, v) in vecs.iter_mut().enumerate() {
        *v = rotated.column(i).into_owned();
    }
}

/// Diagonalizes `m` restricted to the span of `cols` (assumed orthonormal
/// and m-invariant); returns (eigenvalue, vector) pairs ascending.
fn diagonalize_on(m: &DMatrix<f64>, cols: Vec<DVector<f64>>) -> Result<Vec<(f64, DVector<f64>)>> {
    if cols.is_empty() {
        return Ok(Vec::new());
    }
    let mat = DMatrix::from_columns(&cols);
    let restricted = mat.transpose() * m * &mat;
    let restricted = (&restricted + restricted.transpose()) * 0.5;
    let pairs = eigen::symmetric_eigen(&restricted)?;
    Ok(pairs.into_iter().map(|p| (p.value, &mat * p.vector)).collect())
}

/// Reads the scalar data off explicit blocks: SVD of B paired with Rayleigh
/// quotients of A and C, kernel eigenvalues of C, and the spectra of D and E
/// with the all-ones eigenvalue first.
pub fn scalars_from_blocks(blocks: &DoubleJoinBlocks) -> Result<DoubleJoinScalars> {
    let dec = decompose(blocks)?;
    let mut a = vec![dec.a1];
    let mut b = vec![dec.beta1.abs()];
    let mut c_head = vec![dec.c1];
    for pair in &dec.pairs {
        a.push(pair.a);
        b.push(pair.beta.abs());
        c_head.push(pair.c);
    }
    let c_tail = dec.kernel.iter().map(|(c, _)| *c).collect();
    let mut d: Vec<f64> = dec.d1.into_iter().collect();
    d.extend(dec.d_rest.iter().map(|(v, _)| *v));
    let mut e: Vec<f64> = dec.e1.into_iter().collect();
    e.extend(dec.e_rest.iter().map(|(v, _)| *v));
    let sc = DoubleJoinScalars {
        p: dec.p,
        q: dec.q,
        r: dec.r,
        s: dec.s,
        sign: dec.sign,
        a,
        b,
        c_head,
        c_tail,
        d,
        e,
    };
    sc.validate()?;
    Ok(sc)
}

/// Symmetric quotient matrix of the blockwise-constant subspace. Only the
/// blocks with nonzero dimension participate; the full case is 4x4. The
/// quotient is similar to the linear system in the unknown blockwise
/// constants, conjugated by diag(sqrt(p), sqrt(q), sqrt(r), sqrt(s)).
#[allow(clippy::too_many_arguments)]
fn quotient_matrix(
    a1: f64,
    b1: f64,
    c1: f64,
    d1: Option<f64>,
    e1: Option<f64>,
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    sign: f64,
) -> DMatrix<f64> {
    let mut dim = 2;
    let r_idx = d1.is_some().then(|| {
        dim += 1;
        dim - 1
    });
    let s_idx = e1.is_some().then(|| {
        dim += 1;
        dim - 1
    });
    let mut m = DMatrix::zeros(dim, dim);
    m[(0, 0)] = a1;
    m[(1, 1)] = c1;
    m[(0, 1)] = b1;
    m[(1, 0)] = b1;
    if let (Some(d1), Some(i)) = (d1, r_idx) {
        m[(i, i)] = d1;
        let coupling = sign * ((p * r) as f64).sqrt();
        m[(0, i)] = coupling;
        m[(i, 0)] = coupling;
    }
    if let (Some(e1), Some(i)) = (e1, s_idx) {
        m[(i, i)] = e1;
        let coupling = sign * ((q * s) as f64).sqrt();
        m[(1, i)] = coupling;
        m[(i, 1)] = coupling;
    }
    m
}

/// The four eigenvalues of the blockwise-constant quotient in the general
/// case p, q, r, s >= 1. Every root is checked against the characteristic
/// quartic with residual bound 1e-6 * (1 + |root|)^4.
#[allow(clippy::too_many_arguments)]
pub fn quartic_eigenvalues(
    a1: f64,
    b1: f64,
    c1: f64,
    d1: f64,
    e1: f64,
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    sign: f64,
) -> Result<[f64; 4]> {
    if p == 0 || q == 0 || r == 0 || s == 0 {
        return Err(Error::Precondition(
            "quartic eigenvalues require p, q, r, s >= 1".into(),
        ));
    }
    let m = quotient_matrix(a1, b1, c1, Some(d1), Some(e1), p, q, r, s, sign);
    let pairs = eigen::symmetric_eigen(&m)?;
    let roots = [pairs[0].value, pairs[1].value, pairs[2].value, pairs[3].value];

    // residual check against the displayed quartic
    let (pr, qs) = ((p * r) as f64, (q * s) as f64);
    let b2 = b1 * b1;
    let coeffs = [
        (a1 * d1 - pr) * (e1 * c1 - qs) - d1 * e1 * b2,
        (d1 + e1) * b2 - (a1 + d1) * (e1 * c1 - qs) - (a1 * d1 - pr) * (e1 + c1),
        e1 * c1 - qs + (a1 + d1) * (e1 + c1) + a1 * d1 - pr - b2,
        -(e1 + c1 + a1 + d1),
        1.0,
    ];
    for &root in &roots {
        let mut val = 0.0;
        for &c in coeffs.iter().rev() {
            val = val * root + c;
        }
        let bound = 1e-6 * (1.0 + root.abs()).powi(4);
        if val.abs() > bound {
            return Err(Error::Inconsistent(format!(
                "quartic residual |p({root})| = {:e} exceeds {bound:e}",
                val.abs()
            )));
        }
    }
    Ok(roots)
}

/// Eigenvalue families shared by the general and the reduced case; excludes
/// the blockwise-constant quotient roots.
fn family_eigenvalues(sc: &DoubleJoinScalars) -> Vec<f64> {
    let mut vals = Vec::with_capacity(sc.order());
    vals.extend_from_slice(&sc.d[1.min(sc.d.len())..]);
    vals.extend_from_slice(&sc.e[1.min(sc.e.len())..]);
    for i in 1..sc.p {
        let (a, c, b) = (sc.a[i], sc.c_head[i], sc.b[i]);
        let disc = ((a - c) * (a - c) + 4.0 * b * b).sqrt();
        vals.push((a + c - disc) / 2.0);
        vals.push((a + c + disc) / 2.0);
    }
    vals.extend_from_slice(&sc.c_tail);
    vals
}

/// Full spectrum in the general case r >= 1 and s >= 1: the five eigenvalue
/// families of the double join matrix, sorted ascending.
pub fn spectrum_from_scalars(sc: &DoubleJoinScalars) -> Result<SpectralMultiset> {
    sc.validate()?;
    if sc.r == 0 || sc.s == 0 {
        return Err(Error::Precondition(
            "spectrum_from_scalars requires r >= 1 and s >= 1; use spectrum_reduced".into(),
        ));
    }
    let mut vals = family_eigenvalues(sc);
    vals.extend(quartic_eigenvalues(
        sc.a[0], sc.b[0], sc.c_head[0], sc.d[0], sc.e[0], sc.p, sc.q, sc.r, sc.s, sc.sign,
    )?);
    Ok(SpectralMultiset::from_values(vals))
}

/// Spectrum when one or both of the outer factors are empty (r = 0 or
/// s = 0): the blockwise-constant system drops to degree 3 or 2.
pub fn spectrum_reduced(sc: &DoubleJoinScalars) -> Result<SpectralMultiset> {
    sc.validate()?;
    if sc.r >= 1 && sc.s >= 1 {
        return Err(Error::Precondition(
            "spectrum_reduced requires r = 0 or s = 0; use spectrum_from_scalars".into(),
        ));
    }
    let mut vals = family_eigenvalues(sc);
    let m = quotient_matrix(
        sc.a[0],
        sc.b[0],
        sc.c_head[0],
        sc.d.first().copied(),
        sc.e.first().copied(),
        sc.p,
        sc.q,
        sc.r,
        sc.s,
        sc.sign,
    );
    vals.extend(eigen::symmetric_eigen(&m)?.into_iter().map(|p| p.value));
    Ok(SpectralMultiset::from_values(vals))
}

/// Constructs and certifies all p+q+r+s eigenpairs of the assembled double
/// join matrix from the proof's vector families:
///
/// * complement eigenvectors of D and E, zero elsewhere;
/// * `(k1 X_i, Y_i, 0, 0)` for each root of the 2x2 mode equation, with the
///   decoupled pairs `(X_i, 0, ..)` and `(0, Y_i, ..)` when b_i = 0;
/// * kernel vectors `(0, Y_j, 0, 0)`;
/// * blockwise-constant vectors from the quotient eigenbasis.
///
/// Every returned pair has residual at most 1e-8 * max(1, ||M||_F), and the
/// set is linearly independent by construction (mutually orthogonal block
/// supports plus orthogonal quotient modes).
pub fn eigenvectors_from_blocks(blocks: &DoubleJoinBlocks) -> Result<Vec<EigenPair>> {
    let dec = decompose(blocks)?;
    let full = blocks.assemble();
    let (p, q, r, s) = (dec.p, dec.q, dec.r, dec.s);
    let total = p + q + r + s;
    let bound = 1e-8 * full.norm().max(1.0);
    let mut out: Vec<EigenPair> = Vec::with_capacity(total);

    let embed = |offset: usize, v: &DVector<f64>| {
        let mut x = DVector::zeros(total);
        x.rows_mut(offset, v.len()).copy_from(v);
        x
    };

    for (val, z) in &dec.d_rest {
        out.push(EigenPair::certify(&full, *val, embed(p + q, z)));
    }
    for (val, w) in &dec.e_rest {
        out.push(EigenPair::certify(&full, *val, embed(p + q + r, w)));
    }
    for pair in &dec.pairs {
        if pair.beta.abs() > 0.0 {
            let (a, c, beta) = (pair.a, pair.c, pair.beta);
            let disc = ((a - c) * (a - c) + 4.0 * beta * beta).sqrt();
            for val in [(a + c - disc) / 2.0, (a + c + disc) / 2.0] {
                let k1 = (val - c) / beta;
                let mut x = DVector::zeros(total);
                x.rows_mut(0, p).copy_from(&(&pair.x * k1));
                x.rows_mut(p, q).copy_from(&pair.y);
                out.push(EigenPair::certify(&full, val, x));
            }
        } else {
            out.push(EigenPair::certify(&full, pair.a, embed(0, &pair.x)));
            out.push(EigenPair::certify(&full, pair.c, embed(p, &pair.y)));
        }
    }
    for (val, y) in &dec.kernel {
        out.push(EigenPair::certify(&full, *val, embed(p, y)));
    }

    // blockwise-constant modes from the symmetric quotient, using the signed
    // all-ones coupling of B
    let quot = quotient_matrix(
        dec.a1, dec.beta1, dec.c1, dec.d1, dec.e1, p, q, r, s, dec.sign,
    );
    let mut block_dims = vec![p, q];
    if dec.d1.is_some() {
        block_dims.push(r);
    }
    if dec.e1.is_some() {
        block_dims.push(s);
    }
    let offsets = [0, p, p + q, p + q + r];
    for mode in eigen::symmetric_eigen(&quot)? {
        let mut x = DVector::zeros(total);
        for (idx, &dim) in block_dims.iter().enumerate() {
            let coeff = mode.vector[idx] / (dim as f64).sqrt();
            x.rows_mut(offsets[idx], dim)
                .copy_from(&DVector::from_element(dim, coeff));
        }
        out.push(EigenPair::certify(&full, mode.value, x));
    }

    if out.len() != total {
        return Err(Error::Inconsistent(format!(
            "constructed {} eigenpairs, expected {total}",
            out.len()
        )));
    }
    for pair in &out {
        if pair.residual > bound {
            return Err(Error::Inconsistent(format!(
                "eigenpair at {} has residual {:e} above bound {bound:e}",
                pair.value, pair.residual
            )));
        }
    }
    out.sort_by(|x, y| x.value.partial_cmp(&y.value).unwrap());
    Ok(out)
}
