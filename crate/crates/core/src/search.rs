//! Independence-equivalence classes: exhaustive discovery for small targets
//! and verification of explicit candidate lists for larger ones.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalCode};
use crate::engine::{bounded_low_counts, i3_formula, IndependenceEngine};
use crate::enumerate::{enumerate_parallel, EnumError, GenConstraint};
use crate::families::{FamilyError, FamilySpec, Special};
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6;
use crate::poly::IntPoly;

pub const DEFAULT_ENVELOPE: usize = 10;
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("not the independence polynomial of any graph: {0}")]
    NotIndependencePolynomial(String),
    #[error(
        "target has {n} vertices, above the discovery envelope of {envelope}; \
         raise the envelope or verify an explicit candidate list instead"
    )]
    Envelope { n: usize, envelope: usize },
    #[error("even-path family needs t >= 2, got {0}")]
    EvenPathOrder(usize),
    #[error("unknown candidate set `{0}`")]
    UnknownCandidateSet(String),
    #[error("bad report: {0}")]
    Report(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Order, size and cubic coefficient implied by a target polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTarget {
    pub target: IntPoly,
    pub n: usize,
    pub m: usize,
    pub i3: i64,
}

pub fn make_target(p: &IntPoly) -> Result<SearchTarget, SearchError> {
    let bad = |why: String| SearchError::NotIndependencePolynomial(why);
    if !p.coeff(0).is_one() {
        return Err(bad(format!("constant term is {}, not 1", p.coeff(0))));
    }
    if let Some(c) = p.coeffs().iter().find(|c| c.is_negative()) {
        return Err(bad(format!("negative coefficient {c}")));
    }
    let n = match p.coeff(1).to_usize() {
        Some(n) if (1..=MAX_VERTICES).contains(&n) => n,
        _ => return Err(bad(format!("linear coefficient {} is not a vertex count in 1..={MAX_VERTICES}", p.coeff(1)))),
    };
    let pairs = BigInt::from(n * (n - 1) / 2);
    let m = &pairs - p.coeff(2);
    if m.is_negative() {
        return Err(bad(format!("{} non-adjacent pairs exceed the {pairs} pairs of {n} vertices", p.coeff(2))));
    }
    let i3 = p.coeff(3).to_i64().ok_or_else(|| bad(format!("cubic coefficient {} too large", p.coeff(3))))?;
    Ok(SearchTarget { target: p.clone(), n, m: m.to_usize().expect("m <= pairs"), i3 })
}

/// Rejects graphs whose cubic coefficient, computed from degrees and
/// triangles, differs from the target's. Never rejects a true member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq3Filter {
    pub i3: i64,
}

impl Eq3Filter {
    pub fn new(t: &SearchTarget) -> Self {
        Eq3Filter { i3: t.i3 }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        i3_formula(g) == self.i3
    }
}

pub fn eq3_accepts(f: &Eq3Filter, g: &Graph) -> bool {
    f.accepts(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMember {
    pub code: CanonicalCode,
    pub graph6: String,
    pub name: Option<String>,
}

impl ClassMember {
    fn new(g: &Graph) -> Self {
        let code = canonical_form(g);
        ClassMember { graph6: code.as_graph6().to_string(), name: member_name(&code.to_graph()), code }
    }

    pub fn graph(&self) -> Graph {
        self.code.to_graph()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub target: IntPoly,
    pub n: Option<usize>,
    pub m: Option<usize>,
    /// Whether every graph with the target's order and size was examined.
    pub complete: bool,
    /// Sorted by canonical code.
    pub members: Vec<ClassMember>,
}

#[derive(Serialize, Deserialize)]
struct WireReport {
    schema: u32,
    target: IntPoly,
    n: Option<usize>,
    m: Option<usize>,
    complete: bool,
    members: Vec<WireMember>,
}

#[derive(Serialize, Deserialize)]
struct WireMember {
    graph6: String,
    name: Option<String>,
}

impl ClassReport {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let code = canonical_form(g);
        self.members.binary_search_by(|m| m.code.cmp(&code)).is_ok()
    }

    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.members.iter().map(|m| m.code.clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = WireReport {
            schema: REPORT_SCHEMA,
            target: self.target.clone(),
            n: self.n,
            m: self.m,
            complete: self.complete,
            members: self
                .members
                .iter()
                .map(|m| WireMember { graph6: m.graph6.clone(), name: m.name.clone() })
                .collect(),
        };
        serde_json::to_value(wire).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SearchError> {
        let wire: WireReport = serde_json::from_str(s).map_err(|e| SearchError::Report(e.to_string()))?;
        if wire.schema != REPORT_SCHEMA {
            return Err(SearchError::Report(format!("unsupported schema {}", wire.schema)));
        }
        let mut members = Vec::with_capacity(wire.members.len());
        for m in wire.members {
            let g = graph6::decode(&m.graph6).map_err(|e| SearchError::Report(e.to_string()))?;
            members.push(ClassMember { code: canonical_form(&g), graph6: m.graph6, name: m.name });
        }
        Ok(ClassReport { target: wire.target, n: wire.n, m: wire.m, complete: wire.complete, members })
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Largest order discovery will attempt.
    pub envelope: usize,
    pub jobs: usize,
    /// Apply the cheap rejection rungs before the full comparison.
    pub filters: bool,
    pub engine: IndependenceEngine,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { envelope: DEFAULT_ENVELOPE, jobs: 1, filters: true, engine: IndependenceEngine::new() }
    }
}

/// Every graph, up to isomorphism, whose independence polynomial is `p`.
pub fn find_equivalence_class(p: &IntPoly, opts: &SearchOptions) -> Result<ClassReport, SearchError> {
    let t = make_target(p)?;
    if t.n > opts.envelope {
        return Err(SearchError::Envelope { n: t.n, envelope: opts.envelope });
    }
    let accept = candidate_test(&t, opts);
    let c = GenConstraint::new(t.n, t.m).predicate(move |g| accept(g));
    let members = enumerate_parallel(&c, opts.jobs)?.iter().map(ClassMember::new).collect();
    Ok(ClassReport { target: t.target, n: Some(t.n), m: Some(t.m), complete: true, members })
}

fn candidate_test(t: &SearchTarget, opts: &SearchOptions) -> Arc<dyn Fn(&Graph) -> bool + Send + Sync> {
    let engine = opts.engine.clone();
    let target = t.target.clone();
    if !opts.filters {
        return Arc::new(move |g| engine.polynomial(g) == target);
    }
    let eq3 = Eq3Filter::new(t);
    let alpha = target.degree().unwrap_or(0);
    let low = alpha.div_ceil(2);
    let caps: Vec<u64> = (0..=low).map(|j| target.coeff(j).to_u64().unwrap_or(u64::MAX)).collect();
    Arc::new(move |g| {
        eq3.accepts(g)
            && bounded_low_counts(g, low, &caps).is_some_and(|c| c == caps)
            && engine.polynomial(g) == target
    })
}

/// The candidates whose polynomial is `p`, deduplicated up to isomorphism.
pub fn verify_class_members(p: &IntPoly, candidates: &[Graph]) -> ClassReport {
    let engine = IndependenceEngine::new();
    let mut kept = BTreeMap::new();
    for g in candidates {
        if engine.polynomial(g) == *p {
            let m = ClassMember::new(g);
            kept.entry(m.code.clone()).or_insert(m);
        }
    }
    let (n, m) = match make_target(p) {
        Ok(t) => (Some(t.n), Some(t.m)),
        Err(_) => (None, None),
    };
    ClassReport { target: p.clone(), n, m, complete: false, members: kept.into_values().collect() }
}

/// Named candidate lists for classes too large to discover.
pub fn candidate_set(name: &str) -> Result<Vec<FamilySpec>, SearchError> {
    let specs: &[&str] = match name {
        "specials-c9" => &[
            "C:9",
            "D:9",
            "special:G1+C:3",
            "special:G2+C:3",
            "special:G3+C:3",
        ],
        "specials-c15" => &[
            "C:15",
            "D:15",
            "special:G1p+C:3+C:5",
            "special:G2p+C:3+C:5",
            "special:G3p+C:3+C:5",
        ],
        "specials-c21" => &[
            "C:21",
            "D:21",
            "special:G1+C:3+C:12",
            "special:G2+C:3+C:12",
            "special:G3+C:3+C:12",
            "special:G1p+C:3+C:11",
            "special:G2p+C:3+C:11",
            "special:G3p+C:3+C:11",
        ],
        _ => return Err(SearchError::UnknownCandidateSet(name.to_string())),
    };
    Ok(specs.iter().map(|s| s.parse().expect("built-in specs parse")).collect())
}

/// Family specs of the graphs sharing `i(P_n)` for `n = 2^t - 2`, obtained
/// by repeatedly splitting the path into a shorter path and a cycle and then
/// swapping any of the cycles for the D-graph of the same order.
pub fn even_path_class_specs(t: usize) -> Result<Vec<FamilySpec>, SearchError> {
    if t < 2 {
        return Err(SearchError::EvenPathOrder(t));
    }
    let n = (1usize << t) - 2;
    if n > MAX_VERTICES {
        return Err(SearchError::Enumeration(EnumError::Graph(crate::graph::GraphError::Capacity(n))));
    }
    let mut out = vec![FamilySpec::Path(n)];
    for k in 0..t - 2 {
        let path = FamilySpec::Path((1 << (t - 1 - k)) - 2);
        let orders: Vec<usize> = (0..=k).map(|l| 1 << (t - 1 - l)).collect();
        // bit l of `swap` picks the D-graph for cycle l
        for swap in 0u32..1 << orders.len() {
            let mut parts = vec![path.clone()];
            for (l, &q) in orders.iter().enumerate().rev() {
                parts.push(if swap >> l & 1 == 1 { FamilySpec::Dgraph(q) } else { FamilySpec::Cycle(q) });
            }
            out.push(FamilySpec::Union(parts));
        }
    }
    Ok(out)
}

pub fn even_path_class_family(t: usize) -> Result<Vec<Graph>, SearchError> {
    even_path_class_specs(t)?.iter().map(|s| Ok(s.graph()?)).collect()
}

/// Family-grammar name for `g`, built from its components when each one is
/// a catalog graph, otherwise from the whole-graph catalog entries.
pub fn member_name(g: &Graph) -> Option<String> {
    let mut comps: Vec<Graph> = g.connected_components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.order()));
    let names: Option<Vec<String>> = comps.iter().map(component_name).collect();
    if let Some(names) = names {
        return Some(names.join("+"));
    }
    let code = canonical_form(g);
    Special::ALL
        .into_iter()
        .find(|s| canonical_form(&s.graph()) == code)
        .map(|s| FamilySpec::Special(s).to_string())
}

fn component_name(c: &Graph) -> Option<String> {
    let k = c.order();
    let mut cands = vec![FamilySpec::Path(k)];
    if k >= 3 {
        cands.push(FamilySpec::Cycle(k));
    }
    if k >= 4 {
        cands.push(FamilySpec::Dgraph(k));
        cands.push(FamilySpec::Complete(k));
    }
    if k == 4 {
        cands.push(FamilySpec::K4MinusE);
    }
    cands.extend(Special::ALL.into_iter().map(FamilySpec::Special));
    let code = canonical_form(c);
    cands.into_iter().find_map(|s| {
        let h = s.graph().ok()?;
        (h.order() == k && h.is_connected() && canonical_form(&h) == code).then(|| s.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{cycle_poly, independence_polynomial, path_poly_closed_form};

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().graph().unwrap()
    }

    #[test]
    fn targets() {
        let t = make_target(&IntPoly::from_i64s(&[1, 6, 9, 2])).unwrap();
        assert_eq!((t.n, t.m, t.i3), (6, 6, 2));
        let t = make_target(&IntPoly::from_i64s(&[1, 4, 3])).unwrap();
        assert_eq!((t.n, t.m, t.i3), (4, 3, 0));
        assert!(make_target(&IntPoly::from_i64s(&[1, 3, 5])).is_err());
        assert!(make_target(&IntPoly::from_i64s(&[2, 3])).is_err());
        assert!(make_target(&IntPoly::from_i64s(&[1])).is_err());
        assert!(make_target(&IntPoly::from_i64s(&[1, 63])).is_err());
        assert!(make_target(&IntPoly::from_i64s(&[1, 3, -1])).is_err());
    }

    #[test]
    fn eq3() {
        let f = Eq3Filter::new(&make_target(&cycle_poly(6).unwrap()).unwrap());
        assert!(!eq3_accepts(&f, &fam("K:3+K:3")));
        assert!(eq3_accepts(&f, &fam("K4-e+K:2")));
        assert!(eq3_accepts(&f, &fam("C:6")));
    }

    #[test]
    fn c6_class() {
        let r = find_equivalence_class(&cycle_poly(6).unwrap(), &SearchOptions::default()).unwrap();
        assert!(r.complete);
        assert_eq!(r.len(), 3);
        for s in ["C:6", "D:6", "K4-e+K:2"] {
            assert!(r.contains(&fam(s)), "{s}");
        }
        let mut names: Vec<_> = r.members.iter().map(|m| m.name.clone().unwrap()).collect();
        names.sort();
        assert_eq!(names, ["C:6", "D:6", "K4-e+P:2"]);
    }

    #[test]
    fn envelope() {
        let err = find_equivalence_class(&cycle_poly(15).unwrap(), &SearchOptions::default());
        assert_eq!(err, Err(SearchError::Envelope { n: 15, envelope: 10 }));
    }

    #[test]
    fn verification() {
        let p = cycle_poly(3).unwrap();
        let r = verify_class_members(&p, &[fam("K:3"), fam("C:3"), fam("P:3")]);
        assert!(!r.complete);
        assert_eq!(r.len(), 1);
        let p = cycle_poly(21).unwrap();
        let cands: Vec<_> = candidate_set("specials-c21").unwrap().iter().map(|s| s.graph().unwrap()).collect();
        let r = verify_class_members(&p, &cands);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&fam("C:21")) && r.contains(&fam("D:21")));
    }

    #[test]
    fn even_paths() {
        let names = |t| -> Vec<String> { even_path_class_specs(t).unwrap().iter().map(|s| s.to_string()).collect() };
        assert_eq!(names(2), ["P:2"]);
        assert_eq!(names(3), ["P:6", "P:2+C:4", "P:2+D:4"]);
        assert_eq!(names(4).len(), 7);
        assert!(names(4).contains(&"P:2+D:4+C:8".to_string()));
        for t in 2..=5 {
            let gs = even_path_class_family(t).unwrap();
            let n = (1 << t) - 2;
            assert_eq!(gs.len(), n / 2);
            for g in &gs {
                assert_eq!(independence_polynomial(g), path_poly_closed_form(n));
            }
        }
        assert_eq!(even_path_class_specs(1), Err(SearchError::EvenPathOrder(1)));
    }

    #[test]
    fn names() {
        assert_eq!(member_name(&fam("special:G1+C:3")).as_deref(), Some("special:G1+C:3"));
        assert_eq!(member_name(&fam("K:1+K:3")).as_deref(), Some("C:3+P:1"));
        assert_eq!(member_name(&fam("special:H2")).as_deref(), Some("special:H2"));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(member_name(&star), None);
    }

    #[test]
    fn json_roundtrip() {
        let r = find_equivalence_class(&cycle_poly(6).unwrap(), &SearchOptions::default()).unwrap();
        let v = r.to_json();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["target"], serde_json::json!([1, 6, 9, 2]));
        assert_eq!(v["members"].as_array().unwrap().len(), 3);
        assert_eq!(ClassReport::from_json(&v.to_string()).unwrap(), r);
    }
}
