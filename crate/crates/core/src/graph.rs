//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one neighbor bitset per vertex.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Largest supported vertex count. Keeps every neighborhood in one `u64`
/// and every size in the single-byte graph6 header.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("{0} vertices exceeds the capacity of {MAX_VERTICES}")]
    Capacity(usize),
    #[error("{n} vertices exceeds the brute-force limit of {limit}")]
    BruteForceLimit { n: usize, limit: usize },
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
}

/// A finite simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Vertex count.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Open neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// `self ∪ other`, with `other`'s vertices shifted above `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << self.n));
        Ok(Graph { n, adj })
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        let mut counts = BTreeMap::new();
        for v in 0..self.n {
            *counts.entry(self.degree(v)).or_insert(0) += 1;
        }
        DegreeHistogram { counts }
    }

    /// Number of vertex triples inducing `K_3`.
    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1).map(|d| u + 1 + d) {
                // w > v, adjacent to both
                t += (self.adj[u] & self.adj[v] & !((bit(v) << 1) - 1)).count_ones() as usize;
            }
        }
        t
    }

    /// Vertex sets of the connected components within `mask`, as bitmasks,
    /// ordered by their least vertex.
    pub(crate) fn component_masks(&self, mut mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while mask != 0 {
            let start = mask & mask.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= mask & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            mask &= !comp;
        }
        out
    }

    /// Connected components as standalone graphs, ordered by least original
    /// vertex. Each component keeps the relative order of its vertices.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_masks(self.vertex_mask())
            .into_iter()
            .map(|m| self.induced_subgraph(m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks(self.vertex_mask()).len() <= 1
    }

    /// Subgraph induced by the vertices in `mask`, relabeled `0..k` in
    /// increasing order of original label.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = [0usize; 64];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = bits(self.adj[v]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// `G - v`, keeping labels dense.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertex_mask() & !bit(v))
    }

    /// `G - N[v]`, keeping labels dense.
    pub fn remove_closed_neighborhood(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertex_mask() & !(self.adj[v] | bit(v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Number of vertices of each degree (`g_i` vertices of degree `i`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeHistogram {
    counts: BTreeMap<usize, usize>,
}

impl DegreeHistogram {
    /// Vertices of degree `d`; zero when absent.
    pub fn count(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// `(degree, count)` pairs with nonzero count, by increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    /// `Σ g_i`, the vertex count.
    pub fn vertex_total(&self) -> usize {
        self.counts.values().sum()
    }

    /// `Σ i·g_i`, twice the edge count.
    pub fn degree_sum(&self) -> usize {
        self.iter().map(|(d, c)| d * c).sum()
    }

    /// `Σ C(i,2)·g_i`, the number of paths of length two.
    pub fn wedge_count(&self) -> u64 {
        self.iter()
            .map(|(d, c)| (d as u64 * d.saturating_sub(1) as u64 / 2) * c as u64)
            .sum()
    }
}
