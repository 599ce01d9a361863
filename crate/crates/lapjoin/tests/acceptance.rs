//! End-to-end acceptance suite. Each test covers one acceptance criterion
//! and prints a single PASS line when it holds; a failed assertion is the
//! FAIL line.

use std::time::Instant;

use nalgebra::{DMatrix, DVector};

use lapjoin::analytics;
use lapjoin::closed_form::{self, ClosedFormInstance};
use lapjoin::eigen::{self, SpectralMultiset};
use lapjoin::families;
use lapjoin::ops;
use lapjoin::solver::{self, DoubleJoinBlocks};
use lapjoin::{DoubleJoinVariant, Graph};

const TOL: f64 = 1e-8;

/// The full sweep: every variant over the builtin factor triples.
fn sweep() -> Vec<(DoubleJoinVariant, Graph, Graph, Graph, String)> {
    let triples = [
        ("K3", "P2", "P3"),
        ("C4", "K2", "P3"),
        ("K4", "P2", "K2"),
        ("petersen", "P2", "C4"),
    ];
    let mut cases = Vec::new();
    for variant in DoubleJoinVariant::ALL {
        for (g, g1, g2) in triples {
            cases.push((
                variant,
                families::family(g).unwrap(),
                families::family(g1).unwrap(),
                families::family(g2).unwrap(),
                format!("{variant} {g} {g1} {g2}"),
            ));
        }
    }
    cases
}

fn oracle_spectrum(variant: DoubleJoinVariant, g: &Graph, g1: &Graph, g2: &Graph) -> SpectralMultiset {
    let join = ops::double_join(variant, g, g1, g2).unwrap();
    eigen::laplacian_spectrum(&join).unwrap()
}

#[test]
fn criterion_1_closed_form_matches_oracle_on_sweep() {
    let started = Instant::now();
    for (variant, g, g1, g2, label) in sweep() {
        let inst = ClosedFormInstance::from_graphs(variant, &g, &g1, &g2).unwrap();
        let closed = closed_form::laplacian_spectrum(&inst).unwrap();
        let oracle = oracle_spectrum(variant, &g, &g1, &g2);
        let diff = closed.max_abs_difference(&oracle);
        assert!(diff <= TOL, "{label}: closed form vs oracle differ by {diff:e}");
    }
    println!(
        "criterion 1: PASS  closed form equals oracle on all 16 sweep cases (<= 1e-8, {:.0} ms)",
        started.elapsed().as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_2_reductions_and_classical_join() {
    // 8 null-factor cases: each variant with n2 = 0 (vertex join only) and
    // with n1 = 0 (edge join only).
    let reduced = [("K3", "P2", "null0"), ("K4", "null0", "P3")];
    for variant in DoubleJoinVariant::ALL {
        for (g, g1, g2) in reduced {
            let (g, g1, g2) = (
                families::family(g).unwrap(),
                families::family(g1).unwrap(),
                families::family(g2).unwrap(),
            );
            let inst = ClosedFormInstance::from_graphs(variant, &g, &g1, &g2).unwrap();
            let closed = closed_form::laplacian_spectrum(&inst).unwrap();
            let oracle = oracle_spectrum(variant, &g, &g1, &g2);
            let diff = closed.max_abs_difference(&oracle);
            assert!(diff <= TOL, "{variant} reduced case differs by {diff:e}");
        }
    }

    // Classical join K2 v P3 as a degenerate double join matrix (r = s = 0):
    // A = L(K2) + 3I, C = L(P3) + 2I, B = -J.
    let (p, q) = (2usize, 3usize);
    let g1 = families::complete(2);
    let g2 = families::path(3);
    let a = lapjoin::graph::to_f64(&g1.laplacian()) + DMatrix::identity(p, p) * q as f64;
    let c = lapjoin::graph::to_f64(&g2.laplacian()) + DMatrix::identity(q, q) * p as f64;
    let b = DMatrix::from_element(p, q, -1.0);
    let blocks = DoubleJoinBlocks::new(
        a,
        b,
        c,
        DMatrix::zeros(0, 0),
        DMatrix::zeros(0, 0),
        -1.0,
    )
    .unwrap();
    let scalars = solver::scalars_from_blocks(&blocks).unwrap();
    let spectrum = solver::spectrum_reduced(&scalars).unwrap();

    // join graph built explicitly: K2 on {0,1}, P3 on {2,3,4}, all cross edges
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (2, 3), (3, 4)];
    for u in 0..p {
        for v in p..p + q {
            edges.push((u, v));
        }
    }
    let join = Graph::new(p + q, edges).unwrap();
    let oracle = eigen::laplacian_spectrum(&join).unwrap();
    assert!(spectrum.max_abs_difference(&oracle) <= TOL);

    // nonzero spectrum formula: {p+q} u {lam_i(G1)+q} u {lam_i(G2)+p}
    let mut expected = vec![0.0, (p + q) as f64];
    expected.extend(
        eigen::laplacian_spectrum(&g1).unwrap().values()[1..]
            .iter()
            .map(|l| l + q as f64),
    );
    expected.extend(
        eigen::laplacian_spectrum(&g2).unwrap().values()[1..]
            .iter()
            .map(|l| l + p as f64),
    );
    let expected = SpectralMultiset::from_values(expected);
    assert!(spectrum.max_abs_difference(&expected) <= TOL);

    println!(
        "criterion 2: PASS  8 null-factor reductions and the classical join K2 v P3 (<= 1e-8)"
    );
}

#[test]
fn criterion_3_eigenvectors_certified_and_independent() {
    // (K3, P2, P3) subdivision instance (11x11) and the (C4, K2, P3)
    // subdivision instance (13x13), which has b_i = 0 from bipartiteness.
    let cases = [
        (families::complete(3), families::path(2), families::path(3), 11usize),
        (families::cycle(4), families::complete(2), families::path(3), 13usize),
    ];
    for (g, g1, g2, order) in cases {
        let blocks =
            closed_form::laplacian_blocks(DoubleJoinVariant::S, &g, &g1, &g2).unwrap();
        let full = blocks.assemble();
        assert_eq!(full.nrows(), order);
        let pairs = solver::eigenvectors_from_blocks(&blocks).unwrap();
        assert_eq!(pairs.len(), order);

        let bound = 1e-8 * full.norm();
        for pair in &pairs {
            assert!(
                pair.residual <= bound,
                "residual {:e} exceeds {:e} at eigenvalue {}",
                pair.residual,
                bound,
                pair.value
            );
        }

        // full-rank Gram matrix at rank tolerance 1e-8
        let v = DMatrix::from_columns(
            &pairs.iter().map(|p| p.vector.clone()).collect::<Vec<_>>(),
        );
        let gram = v.transpose() * &v;
        let gram_eigs = eigen::spectrum(&gram).unwrap();
        assert!(
            gram_eigs.values()[0] > 1e-8,
            "Gram matrix rank-deficient: min eigenvalue {:e}",
            gram_eigs.values()[0]
        );
    }
    println!(
        "criterion 3: PASS  certified eigenpairs with full-rank Gram on the 11x11 and 13x13 instances"
    );
}

#[test]
fn criterion_4_quartic_residuals_and_zero_root() {
    for (variant, g, g1, g2, label) in sweep() {
        let sc = ClosedFormInstance::from_graphs(variant, &g, &g1, &g2)
            .unwrap()
            .scalars();
        let (a1, b1, c1, d1, e1) = (sc.a[0], sc.b[0], sc.c_head[0], sc.d[0], sc.e[0]);
        let roots =
            solver::quartic_eigenvalues(a1, b1, c1, d1, e1, sc.p, sc.q, sc.r, sc.s, sc.sign)
                .unwrap();

        // independent residual check against the displayed quartic
        let (pr, qs) = ((sc.p * sc.r) as f64, (sc.q * sc.s) as f64);
        let b2 = b1 * b1;
        let coeffs = [
            (a1 * d1 - pr) * (e1 * c1 - qs) - d1 * e1 * b2,
            (d1 + e1) * b2 - (a1 + d1) * (e1 * c1 - qs) - (a1 * d1 - pr) * (e1 + c1),
            e1 * c1 - qs + (a1 + d1) * (e1 + c1) + a1 * d1 - pr - b2,
            -(e1 + c1 + a1 + d1),
            1.0,
        ];
        for root in roots {
            let poly = coeffs
                .iter()
                .rev()
                .fold(0.0, |acc: f64, &c| acc * root + c);
            let bound = 1e-6 * (1.0 + root.abs()).powi(4);
            assert!(
                poly.abs() <= bound,
                "{label}: quartic residual {:e} at root {root}",
                poly.abs()
            );
        }

        // Laplacian instance: one root is 0 and the blockwise all-ones
        // vector (k1 = k2 = k3 = 1) is its eigenvector.
        let zero = roots.iter().fold(f64::INFINITY, |m, r| m.min(r.abs()));
        assert!(zero <= 1e-9, "{label}: smallest quartic root {zero:e}");
        let blocks = closed_form::laplacian_blocks(variant, &g, &g1, &g2).unwrap();
        let full = blocks.assemble();
        let ones = DVector::from_element(full.nrows(), 1.0);
        let residual = (&full * &ones).norm() / ones.norm();
        assert!(residual <= 1e-9, "{label}: L * 1 has norm {residual:e}");
    }
    println!(
        "criterion 4: PASS  quartic residuals within 1e-6*(1+|x|)^4 and zero root with all-ones eigenvector"
    );
}

#[test]
fn criterion_5_trace_and_connectivity() {
    for (variant, g, g1, g2, label) in sweep() {
        let join = ops::double_join(variant, &g, &g1, &g2).unwrap();
        let spectrum = eigen::laplacian_spectrum(&join).unwrap();
        let trace_gap = (spectrum.sum() - 2.0 * join.edge_count() as f64).abs();
        assert!(trace_gap <= TOL, "{label}: trace gap {trace_gap:e}");
        assert_eq!(
            spectrum.zero_multiplicity(TOL),
            1,
            "{label}: zero multiplicity"
        );
    }
    println!("criterion 5: PASS  trace = 2|E| and zero multiplicity 1 on all sweep cases");
}

#[test]
fn criterion_6_spanning_trees() {
    // spanning_trees cross-checks the exact determinant against the
    // spectral product internally and errors on disagreement.
    for (variant, g, g1, g2, label) in sweep() {
        let join = ops::double_join(variant, &g, &g1, &g2).unwrap();
        let count = analytics::spanning_trees(&join).unwrap();
        assert!(count > num_bigint::BigUint::ZERO, "{label}: no spanning trees");
    }
    assert_eq!(
        analytics::spanning_trees(&families::complete(3)).unwrap(),
        num_bigint::BigUint::from(3u32)
    );
    for tree in [families::path(2), families::complete(2), families::path(3)] {
        assert_eq!(
            analytics::spanning_trees(&tree).unwrap(),
            num_bigint::BigUint::from(1u32)
        );
    }
    println!(
        "criterion 6: PASS  determinant and spectral-product tree counts agree on all sweep cases; K3 = 3, trees = 1"
    );
}

#[test]
fn criterion_7_kirchhoff_index() {
    for (variant, g, g1, g2, label) in sweep() {
        let inst = ClosedFormInstance::from_graphs(variant, &g, &g1, &g2).unwrap();
        let closed = closed_form::laplacian_spectrum(&inst).unwrap();
        let oracle = oracle_spectrum(variant, &g, &g1, &g2);
        let kf_closed = analytics::kirchhoff_from_spectrum(&closed).unwrap();
        let kf_oracle = analytics::kirchhoff_from_spectrum(&oracle).unwrap();
        let rel = (kf_closed - kf_oracle).abs() / kf_oracle.abs();
        assert!(rel <= 1e-6, "{label}: Kirchhoff relative gap {rel:e}");
    }
    let kf = analytics::kirchhoff_index(&families::complete(3)).unwrap();
    assert!((kf - 2.0).abs() <= 1e-12, "Kf(K3) = {kf}");
    println!(
        "criterion 7: PASS  Kirchhoff agreement within 1e-6 on all sweep cases; Kf(K3) = 2"
    );
}

#[test]
fn criterion_8_cospectral_swap_construction() {
    assert!(
        analytics::cospectral_mate_search(3).unwrap().is_empty(),
        "no cospectral mates exist at <= 3 vertices"
    );

    let started = Instant::now();
    let pairs = analytics::cospectral_mate_search(7).unwrap();
    let elapsed = started.elapsed().as_secs_f64();
    assert!(!pairs.is_empty(), "expected cospectral mates at <= 7 vertices");
    let (a, b) = &pairs[0];
    assert!(!analytics::is_isomorphic(a, b).unwrap());

    let base = families::complete(4);
    let spacer = families::path(2);
    let cert = analytics::cospectral_double_join(
        DoubleJoinVariant::S,
        &base,
        &base,
        a,
        b,
        &spacer,
        &spacer,
    )
    .unwrap();
    let sa = eigen::laplacian_spectrum(&cert.graph_a).unwrap();
    let sb = eigen::laplacian_spectrum(&cert.graph_b).unwrap();
    assert!(sa.max_abs_difference(&sb) <= TOL);
    assert!(sa.max_abs_difference(&cert.shared_spectrum) <= TOL);

    println!(
        "criterion 8: PASS  non-isomorphic cospectral pair on {} vertices yields cospectral double joins (search {:.1} s)",
        a.vertex_count(),
        elapsed
    );
}
