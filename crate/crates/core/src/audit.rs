//! Named check suites run by `ipoly verify-paper`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::canon::canonical_form;
use crate::engine::{cycle_poly, independence_polynomial, independence_polynomial_bruteforce, path_poly_closed_form};
use crate::families::{FamilySpec, Special};
use crate::graph::Graph;
use crate::poly::{
    cycle_root, cycle_root_residual, root_tolerance, eisenstein_witness, is_unicyclic_poly, kronecker_factor, IntPoly, Kronecker,
    DEFAULT_DEGREE_CAP,
};
use crate::search::{
    candidate_set, even_path_class_family, find_equivalence_class, verify_class_members, SearchOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Paths,
    Cycles,
    Algebra,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paths" => Ok(Suite::Paths),
            "cycles" => Ok(Suite::Cycles),
            "algebra" => Ok(Suite::Algebra),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite `{s}` (expected paths, cycles, algebra or all)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    fn eq<T: PartialEq + fmt::Display>(name: impl Into<String>, expected: T, got: T) -> Self {
        let pass = expected == got;
        Check { name: name.into(), expected: expected.to_string(), got: got.to_string(), pass }
    }

    /// For checks over a range: `failures` lists the offending cases.
    fn all(name: impl Into<String>, failures: Vec<String>) -> Self {
        let got = if failures.is_empty() { "all hold".to_string() } else { failures.join(", ") };
        Check { name: name.into(), expected: "all hold".into(), pass: failures.is_empty(), got }
    }
}

pub fn run_suite(suite: Suite, opts: &SearchOptions) -> Vec<Check> {
    match suite {
        Suite::Paths => paths(opts),
        Suite::Cycles => cycles(opts),
        Suite::Algebra => algebra(),
        Suite::All => {
            let mut out = paths(opts);
            out.extend(cycles(opts));
            out.extend(algebra());
            out
        }
    }
}

fn fam(s: &str) -> Graph {
    s.parse::<FamilySpec>().and_then(|f| f.graph()).expect("built-in spec")
}

fn cyc(n: usize) -> IntPoly {
    cycle_poly(n).expect("n >= 3")
}

fn paths(opts: &SearchOptions) -> Vec<Check> {
    let mut out = Vec::new();
    let bad: Vec<String> = (0..=20)
        .filter(|&n| independence_polynomial_bruteforce(&FamilySpec::Path(n).graph().unwrap()).ok()
            != Some(path_poly_closed_form(n)))
        .map(|n| format!("P{n}"))
        .collect();
    out.push(Check::all("path closed form = brute force, n <= 20", bad));
    let bad = (21..=30)
        .filter(|&n| independence_polynomial(&FamilySpec::Path(n).graph().unwrap()) != path_poly_closed_form(n))
        .map(|n| format!("P{n}"))
        .collect();
    out.push(Check::all("path closed form = recursion, 21 <= n <= 30", bad));
    let bad = (2..=14)
        .filter(|&n| path_poly_closed_form(2 * n) != &path_poly_closed_form(n - 1) * &cyc(n + 1))
        .map(|n| format!("n={n}"))
        .collect();
    out.push(Check::all("i(P_2n) = i(P_n-1) i(C_n+1), 2 <= n <= 14", bad));
    for n in [1, 3, 5, 7, 9] {
        let got = class_size(&path_poly_closed_form(n), opts);
        out.push(Check::eq(format!("|[P{n}]|"), "1".to_string(), got));
    }
    match find_equivalence_class(&path_poly_closed_form(10), opts) {
        Ok(r) => {
            out.push(Check::eq("|[P10]|", 10, r.len()));
            let missing: Vec<String> = [Special::H1, Special::H2, Special::H3]
                .into_iter()
                .filter(|s| !r.contains(&s.graph()))
                .map(|s| s.name().to_string())
                .collect();
            out.push(Check::all("H1, H2, H3 in [P10]", missing));
        }
        Err(e) => out.push(Check::eq("|[P10]|", "10".to_string(), e.to_string())),
    }
    for t in 2..=5 {
        let n = (1usize << t) - 2;
        let fam = even_path_class_family(t).unwrap_or_default();
        let target = path_poly_closed_form(n);
        let same = fam.iter().all(|g| independence_polynomial(g) == target);
        let distinct = fam.iter().map(canonical_form).collect::<std::collections::BTreeSet<_>>().len();
        out.push(Check::eq(
            format!("even-path family t={t}: distinct members sharing i(P{n})"),
            n / 2,
            if same { distinct } else { 0 },
        ));
    }
    out
}

fn class_size(p: &IntPoly, opts: &SearchOptions) -> String {
    match find_equivalence_class(p, opts) {
        Ok(r) => r.len().to_string(),
        Err(e) => e.to_string(),
    }
}

fn cycles(opts: &SearchOptions) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, size) in [(4, 2), (5, 2), (6, 3), (7, 2), (8, 2), (9, 5)] {
        out.push(Check::eq(format!("|[C{n}]|"), size.to_string(), class_size(&cyc(n), opts)));
    }
    if let Ok(r) = find_equivalence_class(&cyc(6), opts) {
        out.push(Check::eq("(K4-e)+K2 in [C6]", true, r.contains(&fam("K4-e+K:2"))));
    }
    if let Ok(r) = find_equivalence_class(&cyc(9), opts) {
        let mut want: Vec<_> = candidate_set("specials-c9")
            .expect("built in")
            .iter()
            .map(|s| canonical_form(&s.graph().unwrap()))
            .collect();
        want.sort();
        out.push(Check::eq("[C9] = {C9, D9, G1+C3, G2+C3, G3+C3}", true, r.codes() == want));
    }
    let bad = (3..=20)
        .filter(|&n| independence_polynomial(&FamilySpec::Dgraph(n).graph().unwrap()) != cyc(n))
        .map(|n| format!("n={n}"))
        .collect();
    out.push(Check::all("i(C_n) = i(D_n), 3 <= n <= 20", bad));
    for (set, n, size) in [("specials-c15", 15, 5), ("specials-c21", 21, 2)] {
        let cands: Vec<Graph> = candidate_set(set).expect("built in").iter().map(|s| s.graph().unwrap()).collect();
        let r = verify_class_members(&cyc(n), &cands);
        out.push(Check::eq(format!("{set}: candidates sharing i(C{n})"), size, r.len()));
    }
    let mut bad = Vec::new();
    for n in 3..=20 {
        let p = cyc(n);
        let tol = root_tolerance(&p);
        let mut roots = Vec::new();
        for i in 1..=n / 2 {
            let r = cycle_root(n, i).expect("index in range");
            let res = cycle_root_residual(&p, n, i).expect("index in range");
            if res >= tol {
                bad.push(format!("C{n} r{i} residual {res:.3e}"));
            }
            roots.push(r.value);
        }
        roots.sort_by(f64::total_cmp);
        if roots.windows(2).any(|w| w[1] - w[0] <= 1e-12) {
            bad.push(format!("C{n} repeated root"));
        }
    }
    out.push(Check::all("cycle root formula, 3 <= n <= 20", bad));
    out
}

fn odd_primes() -> impl Iterator<Item = usize> {
    (3..=31usize).step_by(2).filter(|&p| (3..p).step_by(2).all(|d| p % d != 0))
}

fn divides(k: usize, n: usize) -> bool {
    matches!(cyc(n).divide_exact(&cyc(k)), Ok(Some(_)))
}

fn algebra() -> Vec<Check> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for p in odd_primes() {
        let c = cyc(p);
        let w = eisenstein_witness(&c.reverse().expect("nonzero"));
        if w != Some(BigInt::from(p)) {
            bad.push(format!("C{p} witness {w:?}"));
        }
        if c.coeff(p / 2) != BigInt::from(p) {
            bad.push(format!("C{p} coefficient {}", c.coeff(p / 2)));
        }
    }
    out.push(Check::all("Eisenstein witness p on reversed i(C_p), top coefficient p", bad));
    for (k, n) in [(3, 9), (9, 27), (5, 15)] {
        out.push(Check::eq(format!("i(C{k}) | i(C{n})"), true, divides(k, n)));
    }
    let mut bad = Vec::new();
    for n in (3..=31).step_by(2) {
        for k in 3..=n {
            if divides(k, n) != (n % k == 0) {
                bad.push(format!("k={k} n={n}"));
            }
        }
    }
    out.push(Check::all("i(C_k) | i(C_n) iff k | n, odd n <= 31", bad));
    let q = cyc(9).divide_exact(&cyc(3)).ok().flatten().unwrap_or_else(IntPoly::zero);
    out.push(Check::eq("i(C9)/i(C3)", "[1,6,9,3]".to_string(), q.to_list_string()));
    out.push(Check::eq("i(C9)/i(C3) unicyclic", true, is_unicyclic_poly(&q)));
    let w = q.reverse().ok().and_then(|r| eisenstein_witness(&r));
    out.push(Check::eq("Eisenstein witness of reversed i(C9)/i(C3)", "Some(3)".to_string(), format!("{w:?}")));
    let mut bad = Vec::new();
    for (k, n) in [(1, 3), (3, 9), (9, 27), (1, 5), (5, 15), (3, 15)] {
        let f = if k == 1 { Some(cyc(n)) } else { cyc(n).divide_exact(&cyc(k)).ok().flatten() };
        match f {
            Some(f) if is_unicyclic_poly(&f) => {}
            _ => bad.push(format!("i(C{n})/i(C{k})")),
        }
    }
    out.push(Check::all("division-chain factors are unicyclic", bad));
    let bad = [3, 5, 7, 11, 13]
        .into_iter()
        .filter(|&p| kronecker_factor(&cyc(p), DEFAULT_DEGREE_CAP) != Kronecker::Irreducible)
        .map(|p| format!("C{p}"))
        .collect();
    out.push(Check::all("Kronecker: i(C_p) irreducible, p in {3,5,7,11,13}", bad));
    let got = match kronecker_factor(&cyc(6), DEFAULT_DEGREE_CAP) {
        Kronecker::Factor(f, g) => format!("{} * {}", f.to_list_string(), g.to_list_string()),
        other => format!("{other:?}"),
    };
    out.push(Check::eq("Kronecker: i(C6)", "[1,2] * [1,4,1]".to_string(), got));
    out
}
