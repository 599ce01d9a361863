//! The S/Q/R/T graph operations and the four double join constructions.
//!
//! All four operations insert one new vertex per edge of G. The block vertex
//! ordering of a double join is [V(G) | I(G) | V(G1) | V(G2)], where original
//! vertices keep their indices, the vertex inserted for edge j (canonical
//! order) gets index n + j, and the factor graphs follow. This matches the
//! 4x4 block layout of the double join Laplacian, so the block identities can
//! be asserted entrywise.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Graph, Result};

/// Selects one of the four double join constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DoubleJoinVariant {
    /// Subdivision graph S(G).
    S,
    /// Q-graph: S(G) plus edges between inserted vertices on adjacent edges.
    Q,
    /// R-graph: G plus one new vertex per edge, adjacent to its endpoints.
    R,
    /// Total graph T(G).
    T,
}

impl DoubleJoinVariant {
    pub const ALL: [DoubleJoinVariant; 4] = [
        DoubleJoinVariant::S,
        DoubleJoinVariant::Q,
        DoubleJoinVariant::R,
        DoubleJoinVariant::T,
    ];

    /// True when the variant keeps the original edges of G (R and T).
    pub fn keeps_original_edges(self) -> bool {
        matches!(self, DoubleJoinVariant::R | DoubleJoinVariant::T)
    }

    /// True when the variant adds the line-graph edges (Q and T).
    pub fn adds_line_edges(self) -> bool {
        matches!(self, DoubleJoinVariant::Q | DoubleJoinVariant::T)
    }
}

impl fmt::Display for DoubleJoinVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DoubleJoinVariant::S => "S",
            DoubleJoinVariant::Q => "Q",
            DoubleJoinVariant::R => "R",
            DoubleJoinVariant::T => "T",
        };
        f.write_str(s)
    }
}

impl FromStr for DoubleJoinVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "S" => Ok(DoubleJoinVariant::S),
            "Q" => Ok(DoubleJoinVariant::Q),
            "R" => Ok(DoubleJoinVariant::R),
            "T" => Ok(DoubleJoinVariant::T),
            other => Err(Error::Parse(format!(
                "unknown double join variant `{other}` (expected S, Q, R or T)"
            ))),
        }
    }
}

fn subdivision_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + j));
        edges.push((v, n + j));
    }
    edges
}

fn line_edges_shifted(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    g.line_graph()
        .edges()
        .iter()
        .map(|&(a, b)| (n + a, n + b))
        .collect()
}

/// Subdivision graph S(G): every edge replaced by a path of length two
/// through a new vertex.
pub fn subdivision(g: &Graph) -> Graph {
    Graph::new(g.vertex_count() + g.edge_count(), subdivision_edges(g)).unwrap()
}

/// Q-graph: S(G) plus an edge between inserted vertices whose underlying
/// edges of G share an endpoint.
pub fn q_graph(g: &Graph) -> Graph {
    let mut edges = subdivision_edges(g);
    edges.extend(line_edges_shifted(g));
    Graph::new(g.vertex_count() + g.edge_count(), edges).unwrap()
}

/// R-graph: G together with one new vertex per edge adjacent to both of its
/// endpoints.
pub fn r_graph(g: &Graph) -> Graph {
    let mut edges = subdivision_edges(g);
    edges.extend_from_slice(g.edges());
    Graph::new(g.vertex_count() + g.edge_count(), edges).unwrap()
}

/// Total graph T(G): vertices V(G) ∪ E(G), adjacency = adjacent or incident
/// in G.
pub fn total_graph(g: &Graph) -> Graph {
    let mut edges = subdivision_edges(g);
    edges.extend_from_slice(g.edges());
    edges.extend(line_edges_shifted(g));
    Graph::new(g.vertex_count() + g.edge_count(), edges).unwrap()
}

/// The variant operation selected by `variant`.
pub fn variant_graph(variant: DoubleJoinVariant, g: &Graph) -> Graph {
    match variant {
        DoubleJoinVariant::S => subdivision(g),
        DoubleJoinVariant::Q => q_graph(g),
        DoubleJoinVariant::R => r_graph(g),
        DoubleJoinVariant::T => total_graph(g),
    }
}

/// Double join of a connected graph `g` with factors `g1` and `g2`: the
/// variant graph of `g`, plus `g1` joined completely to V(G) and `g2` joined
/// completely to the inserted vertices I(G). Either factor may be the null
/// graph, which yields the corresponding vertex-join or edge-join.
pub fn double_join(
    variant: DoubleJoinVariant,
    g: &Graph,
    g1: &Graph,
    g2: &Graph,
) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "double join requires a connected base graph".into(),
        ));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let off1 = n + m;
    let off2 = n + m + n1;

    let base = variant_graph(variant, g);
    let mut edges = base.edges().to_vec();
    edges.extend(g1.edges().iter().map(|&(a, b)| (off1 + a, off1 + b)));
    edges.extend(g2.edges().iter().map(|&(a, b)| (off2 + a, off2 + b)));
    for i in 0..n {
        for a in 0..n1 {
            edges.push((i, off1 + a));
        }
    }
    for j in 0..m {
        for a in 0..n2 {
            edges.push((n + j, off2 + a));
        }
    }
    Graph::new(n + m + n1 + n2, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::to_f64;
    use nalgebra::DMatrix;

    fn counts(g: &Graph) -> (usize, usize) {
        (g.vertex_count(), g.edge_count())
    }

    #[test]
    fn subdivision_examples() {
        let s = subdivision(&families::complete(3));
        assert_eq!(counts(&s), (6, 6));
        // S(K3) is the 6-cycle: connected and 2-regular, bipartite by parts
        assert_eq!(s.regularity(), Some(2));
        assert!(s.is_connected());
        assert_eq!(subdivision(&families::path(2)), {
            // S(P2) = P3 up to labeling; here 0-2-1
            Graph::new(3, [(0, 2), (1, 2)]).unwrap()
        });
        assert_eq!(counts(&subdivision(&families::petersen())), (25, 30));
    }

    #[test]
    fn q_graph_examples() {
        assert_eq!(counts(&q_graph(&families::complete(3))), (6, 9));
        assert_eq!(q_graph(&families::path(2)), subdivision(&families::path(2)));
        assert_eq!(counts(&q_graph(&families::cycle(4))), (8, 12));
    }

    #[test]
    fn r_graph_examples() {
        assert_eq!(counts(&r_graph(&families::complete(3))), (6, 9));
        assert_eq!(r_graph(&families::path(2)), families::complete(3));
        assert_eq!(counts(&r_graph(&families::cycle(4))), (8, 12));
    }

    #[test]
    fn total_graph_examples() {
        assert_eq!(counts(&total_graph(&families::complete(3))), (6, 12));
        assert_eq!(total_graph(&families::path(2)), families::complete(3));
        let t = total_graph(&families::cycle(4));
        assert_eq!(counts(&t), (8, 16));
        assert_eq!(t.regularity(), Some(4));
    }

    #[test]
    fn double_join_counts() {
        let k3 = families::complete(3);
        let p2 = families::path(2);
        let p3 = families::path(3);
        let s = double_join(DoubleJoinVariant::S, &k3, &p2, &p3).unwrap();
        assert_eq!(counts(&s), (11, 24));
        let t = double_join(DoubleJoinVariant::T, &k3, &p2, &p3).unwrap();
        assert_eq!(counts(&t), (11, 30));

        let empty = Graph::null(0);
        let s0 = double_join(DoubleJoinVariant::S, &k3, &empty, &empty).unwrap();
        assert_eq!(s0, subdivision(&k3));
    }

    #[test]
    fn double_join_rejects_disconnected_base() {
        let g = Graph::null(2);
        let err = double_join(DoubleJoinVariant::S, &g, &Graph::null(0), &Graph::null(0));
        assert!(matches!(err, Err(crate::Error::Precondition(_))));
    }

    /// The Laplacian of the double join, partitioned by the canonical vertex
    /// ordering, must match the per-variant block matrix built from M, L(G),
    /// L(l(G)), L(G1) and L(G2) entrywise.
    #[test]
    fn block_laplacian_identity() {
        let g = families::complete(3);
        let g1 = families::path(2);
        let g2 = families::path(3);
        let (n, m) = (g.vertex_count(), g.edge_count());
        let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
        let k = g.regularity().unwrap() as i64;
        let inc = g.incidence_matrix();

        for variant in DoubleJoinVariant::ALL {
            let join = double_join(variant, &g, &g1, &g2).unwrap();
            let lap = join.laplacian();
            let total = n + m + n1 + n2;
            let mut expect: DMatrix<i64> = DMatrix::zeros(total, total);

            // block (1,1): (n1 + k) I + [L(G) for R, T]
            let mut b11 = DMatrix::identity(n, n) * (n1 as i64 + k);
            if variant.keeps_original_edges() {
                b11 += g.laplacian();
            }
            expect.view_mut((0, 0), (n, n)).copy_from(&b11);
            // block (2,2): (n2 + 2) I + [L(l(G)) for Q, T]
            let mut b22 = DMatrix::identity(m, m) * (n2 as i64 + 2);
            if variant.adds_line_edges() {
                b22 += g.line_graph().laplacian();
            }
            expect.view_mut((n, n), (m, m)).copy_from(&b22);
            // blocks (1,2)/(2,1): -M
            expect.view_mut((0, n), (n, m)).copy_from(&(-&inc));
            expect.view_mut((n, 0), (m, n)).copy_from(&(-inc.transpose()));
            // factor blocks and all-ones couplings
            expect
                .view_mut((n + m, n + m), (n1, n1))
                .copy_from(&(g1.laplacian() + DMatrix::identity(n1, n1) * n as i64));
            expect
                .view_mut((n + m + n1, n + m + n1), (n2, n2))
                .copy_from(&(g2.laplacian() + DMatrix::identity(n2, n2) * m as i64));
            expect
                .view_mut((0, n + m), (n, n1))
                .copy_from(&DMatrix::from_element(n, n1, -1));
            expect
                .view_mut((n + m, 0), (n1, n))
                .copy_from(&DMatrix::from_element(n1, n, -1));
            expect
                .view_mut((n, n + m + n1), (m, n2))
                .copy_from(&DMatrix::from_element(m, n2, -1));
            expect
                .view_mut((n + m + n1, n), (n2, m))
                .copy_from(&DMatrix::from_element(n2, m, -1));

            assert_eq!(lap, expect, "variant {variant}");
        }
    }

    /// Relabeling g1 permutes the join but leaves the spectrum unchanged.
    #[test]
    fn relabeling_invariance() {
        let g = families::complete(3);
        let g1 = families::path(3);
        // P3 relabeled through the permutation 0->2, 1->0, 2->1
        let g1_perm = Graph::new(3, [(2, 0), (0, 1)]).unwrap();
        let g2 = families::path(2);
        let a = double_join(DoubleJoinVariant::Q, &g, &g1, &g2).unwrap();
        let b = double_join(DoubleJoinVariant::Q, &g, &g1_perm, &g2).unwrap();
        let sa = crate::eigen::spectrum(&to_f64(&a.laplacian())).unwrap();
        let sb = crate::eigen::spectrum(&to_f64(&b.laplacian())).unwrap();
        assert!(crate::eigen::spectra_equal(&sa, &sb, 1e-8));
    }
}
