#![allow(dead_code)]

use indpoly::{FamilySpec, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fam(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().graph().unwrap()
}

/// G(n, p) with p itself drawn at random, so sparse and dense graphs both show up.
pub fn random_graph(r: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = r.random();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_perm(r: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over pairs
/// `(i, j)`, `i < j`, in row order.
pub fn labeled(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Tries every permutation.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.permute(&perm) == *b {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Independent-set counts by direct subset test, no shared code with the library.
pub fn count_independent_sets(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let edges: Vec<_> = g.edges().collect();
    let mut c = vec![0u64; n + 1];
    for s in 0u64..1 << n {
        if edges.iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0) {
            c[s.count_ones() as usize] += 1;
        }
    }
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    c
}

pub fn triangles_brute(g: &Graph) -> usize {
    let n = g.order();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
