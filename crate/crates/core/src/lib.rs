//! Exact independence polynomials, isomorph-free graph enumeration and
//! independence-equivalence class search.

pub mod audit;
pub mod canon;
pub mod engine;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod search;

pub use audit::{run_suite, Check, Suite};
pub use canon::{canonical_form, canonical_labeling, CanonicalCode, Labeling};
pub use families::{family_graph, FamilyError, FamilySpec, Special};
pub use graph::{DegreeHistogram, Graph, GraphError, MAX_VERTICES};
pub use poly::{IntPoly, PolyError};
pub use engine::{
    cycle_poly, i3_formula, independence_polynomial, independence_polynomial_bruteforce,
    path_poly_closed_form, IndependenceEngine, MemoTable,
};
pub use enumerate::{
    count_graphs, enumerate_graphs, enumerate_parallel, enumerate_shard, EnumError, GenConstraint,
};
pub use search::{
    candidate_set, eq3_accepts, even_path_class_family, find_equivalence_class, make_target,
    verify_class_members, ClassMember, ClassReport, Eq3Filter, SearchError, SearchOptions,
    SearchTarget,
};
