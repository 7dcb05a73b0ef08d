//! Isomorph-free generation of graphs with fixed order and size by canonical
//! augmentation: graphs grow one edge at a time from the empty graph, and a
//! child is kept only when the edge just added is equivalent to the child's
//! canonical last edge.
//!
//! Every yielded graph is in canonical form, so its graph6 string is its
//! canonical code.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, canonical_labeling, CanonicalCode};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("no graph on {n} vertices has {m} edges (at most {max})")]
    Infeasible { n: usize, m: usize, max: usize },
    #[error("shard index {index} out of range for {count} shards")]
    Shard { index: usize, count: usize },
    #[error("cannot start a thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Predicate = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct GenConstraint {
    pub n: usize,
    pub m: usize,
    pub max_degree: Option<usize>,
    /// Applied to completed graphs only.
    pub predicate: Option<Predicate>,
}

impl GenConstraint {
    pub fn new(n: usize, m: usize) -> Self {
        GenConstraint { n, m, max_degree: None, predicate: None }
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn predicate(mut self, f: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Self {
        self.predicate = Some(Arc::new(f));
        self
    }

    fn check(&self) -> Result<(), EnumError> {
        Graph::empty(self.n)?;
        let max = self.n * self.n.saturating_sub(1) / 2;
        if self.m > max {
            return Err(EnumError::Infeasible { n: self.n, m: self.m, max });
        }
        Ok(())
    }

    fn accepts(&self, g: &Graph) -> bool {
        self.predicate.as_ref().is_none_or(|p| p(g))
    }
}

impl fmt::Debug for GenConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenConstraint")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("max_degree", &self.max_degree)
            .field("predicate", &self.predicate.as_ref().map(|_| ".."))
            .finish()
    }
}

/// Depth of the generation tree at which shards split the work.
fn shard_depth(m: usize) -> usize {
    m.min(3)
}

/// Depth-first walk of the augmentation tree; children of each node are
/// visited in canonical-code order.
pub struct GraphStream {
    c: GenConstraint,
    stack: Vec<std::vec::IntoIter<Graph>>,
    shard: Option<(usize, usize)>,
    ordinal: usize,
}

impl GraphStream {
    fn new(c: GenConstraint, shard: Option<(usize, usize)>) -> Result<Self, EnumError> {
        c.check()?;
        let root = Graph::empty(c.n)?;
        Ok(GraphStream { c, stack: vec![vec![root].into_iter()], shard, ordinal: 0 })
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let top = self.stack.last_mut()?;
            let Some(g) = top.next() else {
                self.stack.pop();
                continue;
            };
            let depth = g.size();
            if let Some((k, count)) = self.shard {
                if depth == shard_depth(self.c.m) {
                    let mine = self.ordinal % count == k;
                    self.ordinal += 1;
                    if !mine {
                        continue;
                    }
                }
            }
            if depth == self.c.m {
                if self.c.accepts(&g) {
                    return Some(g);
                }
            } else {
                self.stack.push(children(&g, self.c.max_degree).into_iter());
            }
        }
    }
}

/// Accepted one-edge extensions of `g`, in canonical form, sorted by code.
fn children(g: &Graph, max_degree: Option<usize>) -> Vec<Graph> {
    let n = g.order();
    let open = |v: usize| max_degree.is_none_or(|d| g.degree(v) < d);
    let mut seen = BTreeSet::new();
    for u in 0..n {
        if !open(u) {
            continue;
        }
        for v in u + 1..n {
            if g.has_edge(u, v) || !open(v) {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(u, v);
            let lab = canonical_labeling(&h);
            if seen.contains(&lab.code) {
                continue;
            }
            if is_canonical_parent(&h, (u, v), &lab.position) {
                seen.insert(lab.code);
            }
        }
    }
    seen.into_iter().map(|c: CanonicalCode| c.to_graph()).collect()
}

/// `h - e` is isomorphic to `h - e*`, where `e*` is the edge whose
/// canonical labels are largest.
fn is_canonical_parent(h: &Graph, e: (usize, usize), position: &[usize]) -> bool {
    let key = |(a, b): (usize, usize)| {
        let (x, y) = (position[a], position[b]);
        (x.max(y), x.min(y))
    };
    let last = h.edges().max_by_key(|&e| key(e)).expect("h has an edge");
    if key(last) == key(e) {
        return true;
    }
    let degs = |(a, b): (usize, usize)| {
        let (x, y) = (h.degree(a), h.degree(b));
        (x.max(y), x.min(y))
    };
    if degs(last) != degs(e) {
        return false;
    }
    let mut without_e = h.clone();
    without_e.remove_edge(e.0, e.1);
    let mut without_last = h.clone();
    without_last.remove_edge(last.0, last.1);
    canonical_form(&without_e) == canonical_form(&without_last)
}

/// One graph per isomorphism class meeting `c`, in a fixed order.
pub fn enumerate_graphs(c: &GenConstraint) -> Result<GraphStream, EnumError> {
    GraphStream::new(c.clone(), None)
}

/// The part of [`enumerate_graphs`] owned by shard `index` of `count`.
/// Shards are disjoint and together cover the whole stream.
pub fn enumerate_shard(c: &GenConstraint, index: usize, count: usize) -> Result<GraphStream, EnumError> {
    if index >= count {
        return Err(EnumError::Shard { index, count });
    }
    GraphStream::new(c.clone(), Some((index, count)))
}

/// All graphs meeting `c`, generated on `jobs` threads and sorted by
/// canonical code, which makes the result independent of `jobs`.
pub fn enumerate_parallel(c: &GenConstraint, jobs: usize) -> Result<Vec<Graph>, EnumError> {
    c.check()?;
    let jobs = jobs.max(1);
    let count = if jobs == 1 { 1 } else { jobs * 8 };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| EnumError::Pool(e.to_string()))?;
    let mut out: Vec<Graph> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|k| enumerate_shard(c, k, count).map(Iterator::collect::<Vec<_>>))
            .collect::<Result<Vec<_>, _>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    // yielded graphs are canonical, so their graph6 bytes are their codes
    out.sort_by_cached_key(crate::graph6::encode);
    Ok(out)
}

/// Number of isomorphism classes of graphs with `n` vertices and `m` edges.
pub fn count_graphs(n: usize, m: usize) -> Result<u64, EnumError> {
    Ok(enumerate_graphs(&GenConstraint::new(n, m))?.count() as u64)
}
