//! Named graph families: paths, cycles, D-graphs, complete graphs, `K4 - e`,
//! a small catalog of hand-transcribed special graphs, and disjoint unions.
//!
//! Text grammar: `P:n`, `C:n`, `D:n`, `K:n`, `K4-e`, `special:NAME`, joined
//! with `+` for unions (`special:G1+C:3`).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs at least {min} vertices, got {got}")]
    OrderTooSmall { family: &'static str, min: usize, got: usize },
    #[error("unknown special graph `{0}`")]
    UnknownSpecial(String),
    #[error("cannot parse `{0}` as a family term")]
    BadToken(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Fixed catalog of graphs defined by drawings rather than by a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Special {
    G1,
    G2,
    G3,
    G1p,
    G2p,
    G3p,
    H1,
    H2,
    H3,
}

impl Special {
    pub const ALL: [Special; 9] = [
        Special::G1,
        Special::G2,
        Special::G3,
        Special::G1p,
        Special::G2p,
        Special::G3p,
        Special::H1,
        Special::H2,
        Special::H3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Special::G1 => "G1",
            Special::G2 => "G2",
            Special::G3 => "G3",
            Special::G1p => "G1p",
            Special::G2p => "G2p",
            Special::G3p => "G3p",
            Special::H1 => "H1",
            Special::H2 => "H2",
            Special::H3 => "H3",
        }
    }

    fn edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            // triangle a,b,c = 0,1,2; path b-d-e; pendant c-f
            Special::G1 => (6, &[(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (2, 5)]),
            // 4-cycle a,b,c,d; path b-e-f
            Special::G2 => (6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5)]),
            // 5-cycle a..e; pendant c-f
            Special::G3 => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]),
            // G1 with the b-path one vertex longer
            Special::G1p => (7, &[(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (4, 6), (2, 5)]),
            // G2 with the b-path one vertex longer
            Special::G2p => (7, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 6)]),
            // 6-cycle with one pendant: here the cycle grows, not the tail
            Special::G3p => (7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 6)]),
            // K3 + tree with edges a-b, b-c, c-d, c-e, e-f, f-g
            Special::H1 => (
                10,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (5, 7), (7, 8), (8, 9)],
            ),
            // K3 + K2 + 4-cycle with one pendant
            Special::H2 => (
                10,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (5, 6), (6, 7), (7, 8), (8, 5), (7, 9)],
            ),
            // K3 + K2 + triangle with pendants on two of its vertices
            Special::H3 => (
                10,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (5, 6), (6, 7), (5, 7), (5, 8), (6, 9)],
            ),
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges) = self.edges();
        Graph::from_edges(n, edges).expect("catalog entries are valid")
    }
}

impl FromStr for Special {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Special::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| FamilyError::UnknownSpecial(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// Triangle with a pendant path hanging off one corner, `n` vertices.
    Dgraph(usize),
    Complete(usize),
    K4MinusE,
    Special(Special),
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn graph(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Ok(Graph::from_edges(n, &edges)?)
            }
            FamilySpec::Cycle(n) => {
                check_order("cycle", n, 3)?;
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Graph::from_edges(n, &edges)?)
            }
            FamilySpec::Dgraph(n) => {
                check_order("D-graph", n, 3)?;
                let mut edges = vec![(0, 1), (1, 2), (0, 2)];
                edges.extend((3..n).map(|i| (i - 1, i)));
                Ok(Graph::from_edges(n, &edges)?)
            }
            FamilySpec::Complete(n) => {
                check_order("complete graph", n, 1)?;
                Ok(Graph::complete(n)?)
            }
            FamilySpec::K4MinusE => {
                Ok(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?)
            }
            FamilySpec::Special(s) => Ok(s.graph()),
            FamilySpec::Union(ref parts) => {
                let mut acc = Graph::empty(0)?;
                for p in parts {
                    acc = acc.disjoint_union(&p.graph()?)?;
                }
                Ok(acc)
            }
        }
    }
}

fn check_order(family: &'static str, got: usize, min: usize) -> Result<(), FamilyError> {
    if got < min {
        Err(FamilyError::OrderTooSmall { family, min, got })
    } else {
        Ok(())
    }
}

/// Convenience wrapper over [`FamilySpec::graph`].
pub fn family_graph(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.graph()
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms: Vec<&str> = s.split('+').map(str::trim).collect();
        if terms.len() > 1 {
            let parts = terms.into_iter().map(parse_term).collect::<Result<_, _>>()?;
            return Ok(FamilySpec::Union(parts));
        }
        parse_term(terms[0])
    }
}

fn parse_term(t: &str) -> Result<FamilySpec, FamilyError> {
    if t == "K4-e" {
        return Ok(FamilySpec::K4MinusE);
    }
    let bad = || FamilyError::BadToken(t.to_string());
    let (head, arg) = t.split_once(':').ok_or_else(bad)?;
    if head == "special" {
        return Ok(FamilySpec::Special(arg.parse()?));
    }
    let n: usize = arg.parse().map_err(|_| bad())?;
    let spec = match head {
        "P" => FamilySpec::Path(n),
        "C" => FamilySpec::Cycle(n),
        "D" => FamilySpec::Dgraph(n),
        "K" => FamilySpec::Complete(n),
        _ => return Err(bad()),
    };
    Ok(spec)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P:{n}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Dgraph(n) => write!(f, "D:{n}"),
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::K4MinusE => f.write_str("K4-e"),
            FamilySpec::Special(s) => write!(f, "special:{}", s.name()),
            FamilySpec::Union(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}
