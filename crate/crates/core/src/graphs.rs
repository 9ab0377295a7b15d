//! Graph families and all-pairs shortest-path distances.
//!
//! Every graph here is finite, simple, undirected and connected; the
//! constructors reject anything else. Vertices are labelled `0..n`, and a
//! grid with `s` rows and `t` columns maps cell `(i, j)` to label `i * t + j`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Provenance tag recording which constructor produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Grid { s: usize, t: usize },
    Custom { n: usize },
}

impl Family {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Path { n } | Family::Cycle { n } | Family::Custom { n } => n,
            Family::Grid { s, t } => s * t,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "path({n})"),
            Family::Cycle { n } => write!(f, "cycle({n})"),
            Family::Grid { s, t } => write!(f, "grid({s}x{t})"),
            Family::Custom { n } => write!(f, "custom({n})"),
        }
    }
}

/// A finite simple connected undirected graph with vertex labels `0..n`.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    family: Family,
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalised edge list: each pair `(u, v)` has `u < v`, sorted, no duplicates.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    fn from_parts(n: usize, mut edges: Vec<(usize, usize)>, family: Family) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex".into(),
            ));
        }
        for &mut (ref mut u, ref mut v) in &mut edges {
            if *u == *v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if *u >= n || *v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if *u > *v {
                std::mem::swap(u, v);
            }
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }

        let g = Graph {
            n,
            edges,
            adj,
            family,
        };
        if !g.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }
}

/// Path on `n >= 1` vertices with edges `{i, i+1}`.
pub fn build_path(n: usize) -> Result<Graph, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_parts(n, edges, Family::Path { n })
}

/// Cycle on `n >= 3` vertices with edges `{i, (i+1) mod n}`.
pub fn build_cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_parts(n, edges, Family::Cycle { n })
}

/// Grid graph (Cartesian product of two paths) with `s` rows and `t`
/// columns, both at least 2. Cell `(i, j)` gets label `i * t + j`.
pub fn build_grid(s: usize, t: usize) -> Result<Graph, Error> {
    if s < 2 || t < 2 {
        return Err(Error::InvalidParameter(
            "grid needs s >= 2 and t >= 2".into(),
        ));
    }
    let mut edges = Vec::with_capacity(s * (t - 1) + t * (s - 1));
    for i in 0..s {
        for j in 0..t {
            let v = i * t + j;
            if j + 1 < t {
                edges.push((v, v + 1));
            }
            if i + 1 < s {
                edges.push((v, v + t));
            }
        }
    }
    Graph::from_parts(s * t, edges, Family::Grid { s, t })
}

/// Arbitrary connected graph from an explicit edge list.
pub fn build_custom(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
    Graph::from_parts(n, edges.to_vec(), Family::Custom { n })
}

/// Parses the plain-text graph format: first non-empty line `n`, then one
/// `u v` edge per line (0-based labels).
pub fn parse_graph_text(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::InvalidParameter("empty graph file".into()))?
        .parse()
        .map_err(|_| Error::InvalidParameter("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "expected `u v` on edge line, got `{line}`"
                )))
            }
        };
        let u = u
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex label `{u}`")))?;
        let v = v
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex label `{v}`")))?;
        edges.push((u, v));
    }
    build_custom(n, &edges)
}

/// All-pairs shortest-path distances of a connected graph, in hops.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
    family: Family,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn family(&self) -> Family {
        self.family
    }
}

/// Computes all-pairs distances by one BFS per vertex, O(n·(n+m)).
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![0u32; n * n];
    let mut diameter = 0;
    let mut queue = VecDeque::new();
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        let mut seen = vec![false; n];
        seen[src] = true;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    row[v] = row[u] + 1;
                    diameter = diameter.max(row[v]);
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix {
        n,
        d,
        diameter,
        family: g.family(),
    }
}

/// The sphere `G_j(v)`: all vertices at distance exactly `j` from `v`.
/// Empty whenever `j` exceeds the diameter.
pub fn sphere(dm: &DistanceMatrix, v: usize, j: u32) -> Result<Vec<usize>, Error> {
    if v >= dm.n() {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} out of range for {} vertices",
            dm.n()
        )));
    }
    Ok((0..dm.n()).filter(|&w| dm.get(w, v) == j).collect())
}
