//! Simple undirected graphs with dense 0-based labels, immutable after
//! construction.

use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {u}-{v} is not in the graph")]
    MissingEdge { u: usize, v: usize },
    #[error("vertex set over universe {set_universe} used with a graph on {n} vertices")]
    UniverseMismatch { set_universe: usize, n: usize },
}

/// A simple undirected graph. Vertices are exactly `{0, …, n-1}` with `n >= 1`;
/// the adjacency structure is symmetric, loop-free, and never mutated after
/// construction, so graphs can be shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Open neighborhoods: `adj[v]` excludes `v`.
    adj: Vec<VertexSet>,
    /// Closed neighborhoods: `closed[v] = adj[v] ∪ {v}`, precomputed because
    /// every coverage computation unions these rows.
    closed: Vec<VertexSet>,
    degrees: Vec<usize>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(n, adj))
    }

    fn from_adjacency(n: usize, adj: Vec<VertexSet>) -> Self {
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        let degrees: Vec<usize> = adj.iter().map(VertexSet::len).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        Self { n, adj, closed, degrees, max_degree }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degrees[v])
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Open neighborhood of a single vertex.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood row `N[v]`.
    pub fn closed_row(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.degrees.iter().any(|&d| d == 0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::InvalidVertex { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                let mut row = VertexSet::full(self.n);
                row.remove(u);
                for v in self.adj[u].iter() {
                    row.remove(v);
                }
                row
            })
            .collect();
        Self::from_adjacency(self.n, adj)
    }

    /// Deletes a vertex, reindexing the survivors to `{0, …, n-2}` in order.
    /// Returns the new graph and the old-to-new index map (`None` at the
    /// deleted vertex). The graph must keep at least one vertex.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(GraphError::Empty);
        }
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (map[a].unwrap(), map[b].unwrap()))
            .collect();
        let g = Graph::from_edges(self.n - 1, &edges)?;
        Ok((g, map))
    }

    /// Deletes an existing edge; errors if the edge is absent.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.adj[u].contains(v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Connected components, each as a graph plus the ascending list of
    /// original vertex labels (`vertices[new] = old`).
    pub fn components(&self) -> Vec<Component> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut stack = vec![start];
            let mut members = VertexSet::empty(self.n);
            members.insert(start);
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if seen.insert(w) {
                        members.insert(w);
                        stack.push(w);
                    }
                }
            }
            let vertices = members.to_vec();
            let local: std::collections::HashMap<usize, usize> =
                vertices.iter().enumerate().map(|(new, &old)| (old, new)).collect();
            let edges: Vec<(usize, usize)> = self
                .edges()
                .into_iter()
                .filter(|&(a, _)| members.contains(a))
                .map(|(a, b)| (local[&a], local[&b]))
                .collect();
            let graph = Graph::from_edges(vertices.len(), &edges)
                .expect("component edges are valid by construction");
            out.push(Component { graph, vertices });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Disjoint union; the right graph's vertices are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges).expect("union of simple graphs is simple")
    }
}

/// One connected component with its embedding back into the parent graph.
#[derive(Clone)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[new] = old`, ascending.
    pub vertices: Vec<usize>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// `N[S] = S ∪ ⋃_{v∈S} N(v)`. The set must belong to this graph's universe.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet, GraphError> {
    if s.universe() != g.vertex_count() {
        return Err(GraphError::UniverseMismatch {
            set_universe: s.universe(),
            n: g.vertex_count(),
        });
    }
    let mut out = s.clone();
    for v in s.iter() {
        out.union_with(g.closed_row(v));
    }
    Ok(out)
}
