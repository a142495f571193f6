//! Simple connected graphs, their symmetric arcs, and the two exact
//! operators attached to them: the vertex transition matrix `T` and the
//! arc-indexed Grover transfer matrix `U`.

mod family;
mod io;

use std::collections::VecDeque;

use thiserror::Error;

use crate::drg::IntersectionArray;
use crate::{Integer, Rational, RationalMatrix, SparseMatrix};

pub use family::{complete, complete_multipartite, cycle, hamming, johnson, petersen, Family};
pub use io::parse_edge_list;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("graph has no edges")]
    Empty,
    #[error("edge {u}-{v} references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("{what} {value} exceeds the configured limit {limit}")]
    SizeLimit { what: &'static str, value: u128, limit: u128 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph is not regular: vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    NotRegular { vertex: usize, degree: usize, expected: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Caps on exact-matrix work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_arcs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 4096, max_arcs: 65536 }
    }
}

impl Limits {
    pub fn check_vertices(&self, n: u128) -> Result<(), GraphError> {
        if n > self.max_vertices as u128 {
            return Err(GraphError::SizeLimit {
                what: "vertex count",
                value: n,
                limit: self.max_vertices as u128,
            });
        }
        Ok(())
    }

    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        self.check_vertices(g.vertex_count() as u128)?;
        if g.arc_count() > self.max_arcs {
            return Err(GraphError::SizeLimit {
                what: "arc count",
                value: g.arc_count() as u128,
                limit: self.max_arcs as u128,
            });
        }
        Ok(())
    }
}

/// A directed arc `origin -> terminus` along an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

impl Arc {
    pub fn reversed(self) -> Arc {
        Arc { origin: self.terminus, terminus: self.origin }
    }
}

/// A validated simple, undirected, connected graph with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    // offsets[u] = index of the first arc leaving u in lexicographic arc order
    offsets: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `0..=max id` from an edge list.
    pub fn from_edge_list(edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::from_edges(n, edges)
    }

    /// Builds a graph on exactly `n` vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge { u: u.min(w[0]), v: u.max(w[0]) });
            }
        }
        let g = Graph::from_sorted_adjacency(adj);
        let dist = g.distances_from(0);
        if let Some(v) = dist.iter().position(Option::is_none) {
            return Err(GraphError::Disconnected { vertex: v });
        }
        Ok(g)
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut acc = 0;
        for nbrs in &adj {
            offsets.push(acc);
            acc += nbrs.len();
        }
        offsets.push(acc);
        Graph { adj, offsets }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.arc_count() / 2
    }

    pub fn arc_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.arcs()
            .into_iter()
            .filter(|a| a.origin < a.terminus)
            .map(|a| (a.origin, a.terminus))
            .collect()
    }

    /// Common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.adj.iter().all(|n| n.len() == k).then_some(k)
    }

    /// All arcs in lexicographic `(origin, terminus)` order; position in this
    /// list is the arc's matrix index.
    pub fn arcs(&self) -> Vec<Arc> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| Arc { origin: u, terminus: v }))
            .collect()
    }

    pub fn arc_index(&self, arc: Arc) -> Option<usize> {
        self.adj
            .get(arc.origin)?
            .binary_search(&arc.terminus)
            .ok()
            .map(|p| self.offsets[arc.origin] + p)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.distances_from(v).into_iter().flatten().max().unwrap_or(0)
    }

    pub fn is_bipartite(&self) -> bool {
        let dist = self.distances_from(0);
        self.arcs()
            .iter()
            .all(|a| dist[a.origin].unwrap() % 2 != dist[a.terminus].unwrap() % 2)
    }

    /// Cycle rank `|E| - |V| + 1`.
    pub fn betti_number(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }
}

/// Exact diameter by breadth-first search from every vertex.
pub fn diameter(g: &Graph) -> usize {
    (0..g.vertex_count()).map(|v| g.eccentricity(v)).max().unwrap_or(0)
}

/// Distance-partition counts from every base vertex; returns the intersection
/// array when they are constant across all base vertices.
pub fn intersection_array_of(g: &Graph) -> Result<Option<IntersectionArray>, GraphError> {
    let Some(k) = g.regular_degree() else {
        let (vertex, degree) = (0..g.vertex_count())
            .map(|v| (v, g.degree(v)))
            .find(|&(_, d)| d != g.degree(0))
            .unwrap();
        return Err(GraphError::NotRegular { vertex, degree, expected: g.degree(0) });
    };
    // per distance j: (c_j, a_j, b_j) as first observed
    let mut table: Option<Vec<(usize, usize, usize)>> = None;
    for x in 0..g.vertex_count() {
        let dist: Vec<usize> = g.distances_from(x).into_iter().map(Option::unwrap).collect();
        let d = *dist.iter().max().unwrap();
        let mut local: Vec<Option<(usize, usize, usize)>> = vec![None; d + 1];
        for y in 0..g.vertex_count() {
            let j = dist[y];
            let mut counts = (0, 0, 0);
            for &z in g.neighbors(y) {
                match dist[z] {
                    dz if dz + 1 == j => counts.0 += 1,
                    dz if dz == j => counts.1 += 1,
                    _ => counts.2 += 1,
                }
            }
            match local[j] {
                None => local[j] = Some(counts),
                Some(prev) if prev != counts => return Ok(None),
                _ => {}
            }
        }
        let local: Vec<_> = local.into_iter().map(Option::unwrap).collect();
        match &table {
            None => table = Some(local),
            Some(t) if *t != local => return Ok(None),
            _ => {}
        }
    }
    let table = table.unwrap();
    let d = table.len() - 1;
    let b = table[..d].iter().map(|t| t.2 as u64).collect();
    let c = table[1..].iter().map(|t| t.0 as u64).collect();
    debug_assert_eq!(table[0].2, k);
    Ok(IntersectionArray::new(b, c).ok())
}

/// Simple random walk matrix: `T[u][v] = 1/deg(u)` for `u ~ v`.
pub fn transition_matrix(g: &Graph) -> RationalMatrix {
    let n = g.vertex_count();
    let mut t = RationalMatrix::zeros(n, n);
    for u in 0..n {
        let w = Rational::new(Integer::from(1), Integer::from(g.degree(u)));
        for &v in g.neighbors(u) {
            t[(u, v)] = w.clone();
        }
    }
    t
}

/// The Grover transfer matrix in row-sparse form, arcs indexed as in
/// [`Graph::arcs`].
///
/// `U[e][f] = 2/deg(t(f))` when `t(f) = o(e)` and `e != f⁻¹`,
/// `2/deg(t(f)) - 1` when `e = f⁻¹`, and zero otherwise.
pub fn grover_operator(g: &Graph) -> SparseMatrix<Rational> {
    let arcs = g.arcs();
    let rows = arcs
        .iter()
        .map(|e| {
            let u = e.origin;
            let w = Rational::new(Integer::from(2), Integer::from(g.degree(u)));
            g.neighbors(u)
                .iter()
                .map(|&x| {
                    let f = Arc { origin: x, terminus: u };
                    let idx = g.arc_index(f).unwrap();
                    let v = if x == e.terminus { &w - Rational::from_integer(1.into()) } else { w.clone() };
                    (idx, v)
                })
                .collect()
        })
        .collect();
    SparseMatrix::from_rows(arcs.len(), rows)
}

/// Dense form of [`grover_operator`].
pub fn grover_unitary(g: &Graph) -> RationalMatrix {
    grover_operator(g).to_dense()
}
