//! Canonical simple-graph representation and its standard matrices.
//!
//! Graphs are stored as a vertex count plus a sorted, deduplicated list of
//! edges `(u, v)` with `u < v`. Two graphs with equal fields are identical,
//! which makes the incidence matrix and all derived constructions
//! reproducible across runs. All matrices are built with exact integer
//! entries; conversion to floating point happens only at eigendecomposition.

use nalgebra::DMatrix;

use crate::{Error, Result};

/// Simple undirected labeled graph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoints are reordered,
    /// the list is sorted and deduplicated. Self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (a, b) in edges {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == v || v >= n {
                return Err(Error::InvalidEdge { u: a, v: b, n });
            }
            canon.push((u, v));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Graph { n, edges: canon })
    }

    /// Graph with no edges.
    pub fn null(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order; this order defines incidence-matrix
    /// columns and the labels of inserted vertices in the graph operations.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Symmetric 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> DMatrix<i64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    /// Laplacian L = D - A. Rows sum to zero; positive semidefinite.
    pub fn laplacian(&self) -> DMatrix<i64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, u)] += 1;
            l[(v, v)] += 1;
            l[(u, v)] -= 1;
            l[(v, u)] -= 1;
        }
        l
    }

    /// Signless Laplacian |L| = D + A.
    pub fn signless_laplacian(&self) -> DMatrix<i64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, u)] += 1;
            l[(v, v)] += 1;
            l[(u, v)] += 1;
            l[(v, u)] += 1;
        }
        l
    }

    /// Vertex-edge incidence matrix M (n x m); column j holds the two
    /// endpoints of edge j in canonical order. Satisfies M M^T = |L|(G) and
    /// M^T M = A(l(G)) + 2I.
    pub fn incidence_matrix(&self) -> DMatrix<i64> {
        let mut m = DMatrix::zeros(self.n, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            m[(u, j)] = 1;
            m[(v, j)] = 1;
        }
        m
    }

    /// Line graph l(G): one vertex per edge of G (in canonical order), two
    /// adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let m = self.edges.len();
        let mut edges = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for (j, &(c, d)) in self.edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(m, edges).expect("line graph edges are valid")
    }

    /// Returns `Some(k)` if every vertex has degree k, `None` otherwise.
    /// The null graph on 0 vertices is vacuously 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            None => Some(0),
            Some(&k) => deg.iter().all(|&d| d == k).then_some(k),
        }
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Parses the edge-list format: first non-comment line `n m`, then m
    /// lines `u v` with 0 <= u < v < n. Blank lines and lines starting with
    /// '#' are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n m` header line".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "vertex count")?;
        let m: usize = parse_field(it.next(), "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), "edge endpoint")?;
            let v: usize = parse_field(it.next(), "edge endpoint")?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {} edges but {} were given",
                m,
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    /// Writes the canonical edge-list representation.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

fn parse_field(tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("invalid {what}: `{tok}`")))
}

/// Converts an integer matrix to floating point for eigendecomposition.
pub fn to_f64(m: &DMatrix<i64>) -> DMatrix<f64> {
    m.map(|x| x as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn adjacency_examples() {
        assert_eq!(Graph::null(3).adjacency_matrix(), DMatrix::zeros(3, 3));
        let k3 = families::complete(3);
        let a = k3.adjacency_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(i, j)], i64::from(i != j));
            }
        }
        let p2 = families::path(2);
        assert_eq!(p2.adjacency_matrix(), DMatrix::from_row_slice(2, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn laplacian_examples() {
        let p2 = families::path(2);
        assert_eq!(p2.laplacian(), DMatrix::from_row_slice(2, 2, &[1, -1, -1, 1]));
        let k3 = families::complete(3);
        assert_eq!(
            k3.laplacian(),
            DMatrix::from_row_slice(3, 3, &[2, -1, -1, -1, 2, -1, -1, -1, 2])
        );
        // row sums are zero
        let g = families::petersen();
        let l = g.laplacian();
        for i in 0..10 {
            assert_eq!(l.row(i).sum(), 0);
        }
    }

    #[test]
    fn signless_laplacian_examples() {
        let p2 = families::path(2);
        assert_eq!(p2.signless_laplacian(), DMatrix::from_row_slice(2, 2, &[1, 1, 1, 1]));
        let k3 = families::complete(3);
        assert_eq!(
            k3.signless_laplacian(),
            DMatrix::from_row_slice(3, 3, &[2, 1, 1, 1, 2, 1, 1, 1, 2])
        );
        // for k-regular g: |L| = 2kI - L
        let g = families::cycle(5);
        let k = g.regularity().unwrap() as i64;
        let expect = DMatrix::identity(5, 5) * (2 * k) - g.laplacian();
        assert_eq!(g.signless_laplacian(), expect);
    }

    #[test]
    fn incidence_identities() {
        let p2 = families::path(2);
        assert_eq!(p2.incidence_matrix(), DMatrix::from_row_slice(2, 1, &[1, 1]));

        // K3 is 2-regular: M M^T = 4I - L
        let k3 = families::complete(3);
        let m = k3.incidence_matrix();
        assert_eq!(&m * m.transpose(), DMatrix::identity(3, 3) * 4 - k3.laplacian());

        // C4: M^T M - 2I = A(l(C4)), and l(C4) = C4
        let c4 = families::cycle(4);
        let m = c4.incidence_matrix();
        let lg = c4.line_graph();
        assert_eq!(
            m.transpose() * &m - DMatrix::identity(4, 4) * 2,
            lg.adjacency_matrix()
        );
        assert_eq!(lg.vertex_count(), 4);
        assert_eq!(lg.edge_count(), 4);
        assert_eq!(lg.regularity(), Some(2));
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(families::path(3).line_graph(), families::path(2));
        let lk3 = families::complete(3).line_graph();
        assert_eq!(lk3, families::complete(3));
        let lp = families::petersen().line_graph();
        assert_eq!(lp.vertex_count(), 15);
        assert_eq!(lp.edge_count(), 30);
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(families::complete(3).regularity(), Some(2));
        assert_eq!(families::path(3).regularity(), None);
        assert_eq!(families::petersen().regularity(), Some(3));
    }

    #[test]
    fn connectivity_examples() {
        assert!(families::complete(3).is_connected());
        assert!(!Graph::null(2).is_connected());
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::null(0).is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = families::petersen();
        let text = g.to_edge_list();
        assert!(text.starts_with("10 15\n"));
        let back = Graph::from_edge_list(&text).unwrap();
        assert_eq!(g, back);

        let with_comments = "# a triangle\n3 3\n\n0 1\n0 2\n1 2\n";
        assert_eq!(Graph::from_edge_list(with_comments).unwrap(), families::complete(3));
    }

    #[test]
    fn degenerate_empty_graph() {
        let g = Graph::null(0);
        assert_eq!(g.laplacian().nrows(), 0);
        assert_eq!(g.incidence_matrix().shape(), (0, 0));
        assert_eq!(g.regularity(), Some(0));
    }
}
