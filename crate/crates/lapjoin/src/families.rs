//! Builtin graph families used as join factors and test fixtures.

use crate::{Error, Graph, Result};

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::new(n, edges).unwrap()
}

/// Path P_n on n vertices.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Star on n vertices: vertex 0 joined to the other n - 1.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1, "star needs at least 1 vertex");
    Graph::new(n, (1..n).map(|i| (0, i))).unwrap()
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).unwrap()
}

/// Resolves a family spec such as "K3", "P5", "C4", "star6", "null2" or
/// "petersen" (case-insensitive).
pub fn family(spec: &str) -> Result<Graph> {
    let s = spec.trim().to_ascii_lowercase();
    if s == "petersen" {
        return Ok(petersen());
    }
    let (prefix, min) = if let Some(rest) = s.strip_prefix("null") {
        (("null", rest), 0)
    } else if let Some(rest) = s.strip_prefix("star") {
        (("star", rest), 1)
    } else if let Some(rest) = s.strip_prefix('k') {
        (("k", rest), 1)
    } else if let Some(rest) = s.strip_prefix('p') {
        (("p", rest), 1)
    } else if let Some(rest) = s.strip_prefix('c') {
        (("c", rest), 3)
    } else {
        return Err(Error::UnknownFamily(spec.into()));
    };
    let (name, digits) = prefix;
    let n: usize = digits
        .parse()
        .map_err(|_| Error::UnknownFamily(spec.into()))?;
    if n < min {
        return Err(Error::FamilySize {
            family: name.into(),
            min,
            got: n,
        });
    }
    Ok(match name {
        "null" => Graph::null(n),
        "star" => star(n),
        "k" => complete(n),
        "p" => path(n),
        "c" => cycle(n),
        _ => unreachable!(),
    })
}
