//! Canonical labeling by partition refinement with individualization and
//! backtracking.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell
//! in turn, and recurse. Every leaf is a discrete partition, i.e. a vertex
//! ordering, and the canonical form is the relabeled graph that is largest
//! under row-wise comparison. Two kinds of pruning keep symmetric graphs
//! cheap:
//!
//! * automorphisms discovered at leaves are kept, and children of a node that
//!   lie in the same orbit (under the discovered automorphisms fixing the
//!   node's individualized prefix) as an explored child are skipped;
//! * a leaf equivalent to the first leaf proves the whole subtree below the
//!   divergence point is an image of the first path's subtree, so the search
//!   jumps straight back there.
//!
//! The resulting code is the graph6 string of the canonical graph.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, bits, Graph};
use crate::graph6;

/// Isomorphism certificate: equal exactly for isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical graph in graph6 form.
    pub fn as_graph6(&self) -> &str {
        // built from graph6 output, which is ASCII
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// Decodes the canonical representative.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_graph6()).expect("canonical code is valid graph6")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_graph6())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

/// Canonical labeling of a graph.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub code: CanonicalCode,
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).code
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            code: CanonicalCode(graph6::encode(g).into_bytes()),
            position: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        first_path: Vec::new(),
        autos: Vec::new(),
    };
    let root = vec![bits(g.vertex_mask()).collect::<Vec<_>>()];
    search.explore(root, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut position = vec![0; n];
    for (pos, &v) in best.order.iter().enumerate() {
        position[v] = pos;
    }
    let canon = Graph::from_adjacency(n, best.rows);
    Labeling {
        code: CanonicalCode(graph6::encode(&canon).into_bytes()),
        position,
    }
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    /// `order[pos]` is the vertex placed at `pos`.
    order: Vec<usize>,
    /// Adjacency of the relabeled graph.
    rows: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    /// Automorphisms as vertex maps `v -> autos[k][v]`.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn explore(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells, prefix);
        };
        let depth = prefix.len();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, w) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&v| v != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(w);
            let jump = self.explore(child, prefix);
            prefix.pop();
            explored.push(w);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: Cells, prefix: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let rows = relabeled_rows(self.g, &order);
        let leaf = Leaf { order, rows };
        let Some(first) = &self.first else {
            self.first_path = prefix.to_vec();
            self.best = Some(Leaf { order: leaf.order.clone(), rows: leaf.rows.clone() });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            self.autos.push(automorphism(&first.order, &leaf.order));
            let common = prefix
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.rows.cmp(&best.rows) {
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Equal => self.autos.push(automorphism(&best.order, &leaf.order)),
            Ordering::Less => {}
        }
        None
    }

    /// Whether `w` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }
}

/// Map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut map = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        map[a] = b;
    }
    map
}

fn relabeled_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut position = [0usize; 64];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    order
        .iter()
        .map(|&v| bits(g.neighbors(v)).fold(0u64, |acc, w| acc | bit(position[w])))
        .collect()
}

/// Refines an ordered partition until it is equitable: every vertex of a
/// cell has the same number of neighbors in every cell.
///
/// A cell split by neighbor counts into some splitter is replaced in place by
/// its fragments in increasing count order, then scanning restarts. Both
/// choices depend only on cell positions and counts, so the outcome commutes
/// with relabeling.
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | bit(v));
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbors(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut fragments: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        fragments.push(Vec::new());
                        last = Some(k);
                    }
                    fragments.last_mut().expect("pushed above").push(v);
                }
                cells.splice(c..=c, fragments);
                continue 'outer;
            }
        }
        break;
    }
}
