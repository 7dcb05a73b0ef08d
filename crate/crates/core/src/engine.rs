//! Independence polynomials by deletion recursion, closed forms and bitmask
//! brute force, plus the structural formula for the cubic coefficient.
//!
//! Counts are `u64` internally: a graph on at most 62 vertices has at most
//! `2^62` independent sets, so no coefficient or partial sum can overflow.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::binomial;

use crate::canon::{canonical_form, CanonicalCode};
use crate::graph::{bit, bits, Graph, GraphError};
use crate::poly::{IntPoly, PolyError};

/// Components with more vertices than this recurse without memo lookups.
pub const MEMO_MAX_ORDER: usize = 16;
/// Components this small are cheaper to recurse on than to canonicalize.
const MEMO_MIN_ORDER: usize = 5;
pub const BRUTE_FORCE_LIMIT: usize = 24;
const DEFAULT_CAPACITY: usize = 1 << 16;

/// Bounded map from canonical code to coefficient counts, evicting in
/// insertion order. Shareable between threads; lookups and inserts are each
/// atomic, so concurrent misses may compute the same entry twice.
pub struct MemoTable {
    capacity: usize,
    inner: Mutex<MemoInner>,
}

#[derive(Default)]
struct MemoInner {
    map: HashMap<CanonicalCode, Arc<[u64]>>,
    order: VecDeque<CanonicalCode>,
}

impl MemoTable {
    pub fn new(capacity: usize) -> Self {
        MemoTable { capacity, inner: Mutex::new(MemoInner::default()) }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.lock().map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<IntPoly> {
        self.lookup(code).map(|c| IntPoly::from_u64s(&c))
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, MemoInner> {
        // a panic while holding the lock cannot leave a torn entry behind,
        // so poisoning is ignored
        self.inner.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn lookup(&self, code: &CanonicalCode) -> Option<Arc<[u64]>> {
        self.lock().map.get(code).cloned()
    }

    fn insert(&self, code: CanonicalCode, counts: Arc<[u64]>) {
        if self.capacity == 0 {
            return;
        }
        let mut inner = self.lock();
        if inner.map.contains_key(&code) {
            return;
        }
        while inner.map.len() >= self.capacity {
            let Some(old) = inner.order.pop_front() else { break };
            inner.map.remove(&old);
        }
        inner.order.push_back(code.clone());
        inner.map.insert(code, counts);
    }
}

impl Default for MemoTable {
    fn default() -> Self {
        MemoTable::new(DEFAULT_CAPACITY)
    }
}

impl std::fmt::Debug for MemoTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MemoTable")
            .field("capacity", &self.capacity)
            .field("len", &self.len())
            .finish()
    }
}

/// Deletion-recursion evaluator with a (possibly shared) memo table.
#[derive(Debug, Clone, Default)]
pub struct IndependenceEngine {
    memo: Arc<MemoTable>,
}

impl IndependenceEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_memo(memo: Arc<MemoTable>) -> Self {
        IndependenceEngine { memo }
    }

    pub fn memo(&self) -> &Arc<MemoTable> {
        &self.memo
    }

    pub fn polynomial(&self, g: &Graph) -> IntPoly {
        IntPoly::from_u64s(&self.counts(g))
    }

    /// Coefficients `i_0, …, i_α` as machine integers.
    pub fn counts(&self, g: &Graph) -> Vec<u64> {
        self.rec(g, g.vertex_mask())
    }

    fn rec(&self, g: &Graph, mask: u64) -> Vec<u64> {
        if mask == 0 {
            return vec![1];
        }
        let comps = g.component_masks(mask);
        if comps.len() == 1 {
            return self.component(g, mask);
        }
        comps
            .into_iter()
            .map(|c| self.component(g, c))
            .reduce(|a, b| mul(&a, &b))
            .expect("mask is nonempty")
    }

    /// `mask` induces a connected subgraph.
    fn component(&self, g: &Graph, mask: u64) -> Vec<u64> {
        let k = mask.count_ones() as u64;
        let adj = g.adjacency();
        if k == 1 || bits(mask).all(|v| adj[v] & mask == mask & !bit(v)) {
            return vec![1, k];
        }
        let memo = (MEMO_MIN_ORDER as u64..=MEMO_MAX_ORDER as u64).contains(&k);
        let code = memo.then(|| canonical_form(&g.induced_subgraph(mask)));
        if let Some(hit) = code.as_ref().and_then(|c| self.memo.lookup(c)) {
            return hit.to_vec();
        }
        let v = bits(mask)
            .max_by_key(|&v| ((adj[v] & mask).count_ones(), std::cmp::Reverse(v)))
            .expect("mask is nonempty");
        let mut out = self.rec(g, mask & !bit(v));
        let with_v = self.rec(g, mask & !adj[v] & !bit(v));
        if out.len() < with_v.len() + 1 {
            out.resize(with_v.len() + 1, 0);
        }
        for (j, c) in with_v.into_iter().enumerate() {
            out[j + 1] += c;
        }
        if let Some(code) = code {
            self.memo.insert(code, out.as_slice().into());
        }
        out
    }
}

fn mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `i(G, x)` with a private memo table.
pub fn independence_polynomial(g: &Graph) -> IntPoly {
    IndependenceEngine::new().polynomial(g)
}

/// Counts every vertex subset; the reference oracle.
pub fn independence_polynomial_bruteforce(g: &Graph) -> Result<IntPoly, GraphError> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(GraphError::BruteForceLimit { n, limit: BRUTE_FORCE_LIMIT });
    }
    let adj = g.adjacency();
    let mut indep = vec![false; 1usize << n];
    let mut counts = vec![0u64; n + 1];
    indep[0] = true;
    counts[0] = 1;
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if indep[rest] && adj[v] & rest as u64 == 0 {
            indep[mask] = true;
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(IntPoly::from_u64s(&counts))
}

/// Counts of independent sets of sizes `0..=k`, or `None` as soon as some
/// count exceeds `caps[j]`. Sets are grown in increasing vertex order, so
/// each is visited once.
pub fn bounded_low_counts(g: &Graph, k: usize, caps: &[u64]) -> Option<Vec<u64>> {
    fn grow(adj: &[u64], set_size: usize, cand: u64, k: usize, caps: &[u64], out: &mut [u64]) -> bool {
        if set_size == k {
            return true;
        }
        for v in bits(cand) {
            let j = set_size + 1;
            out[j] += 1;
            if caps.get(j).is_some_and(|&c| out[j] > c) {
                return false;
            }
            // only later vertices, and none adjacent to v
            let next = cand & !adj[v] & !(bit(v + 1) - 1);
            if !grow(adj, j, next, k, caps, out) {
                return false;
            }
        }
        true
    }
    let mut out = vec![0u64; k + 1];
    out[0] = 1;
    if caps.first().is_some_and(|&c| c < 1) {
        return None;
    }
    grow(g.adjacency(), 0, g.vertex_mask(), k, caps, &mut out).then_some(out)
}

/// `i(P_n, x) = Σ_j C(n + 1 - j, j) x^j`.
pub fn path_poly_closed_form(n: usize) -> IntPoly {
    let coeffs = (0..=(n + 1) / 2)
        .map(|j| binomial(BigInt::from(n + 1 - j), BigInt::from(j)))
        .collect();
    IntPoly::new(coeffs)
}

/// `i(C_n, x) = i(P_{n-1}, x) + x i(P_{n-3}, x)`.
pub fn cycle_poly(n: usize) -> Result<IntPoly, PolyError> {
    if n < 3 {
        return Err(PolyError::CycleOrder(n));
    }
    Ok(&path_poly_closed_form(n - 1) + &path_poly_closed_form(n - 3).shift(1))
}

/// `C(n,3) - m(n-2) + Σ_v C(deg v, 2) - #triangles`, which equals `i_3`.
pub fn i3_formula(g: &Graph) -> i64 {
    let n = g.order() as i64;
    let m = g.size() as i64;
    let wedges = g.degree_histogram().wedge_count() as i64;
    n * (n - 1) * (n - 2) / 6 - m * (n - 2) + wedges - g.triangle_count() as i64
}
