//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use indpoly::poly::{
    cycle_root, cycle_root_residual, eisenstein_witness, is_unicyclic_poly, kronecker_factor, root_tolerance,
    Kronecker,
};
use indpoly::{
    canonical_form, cycle_poly, enumerate_graphs, even_path_class_family, find_equivalence_class, i3_formula,
    independence_polynomial, independence_polynomial_bruteforce, path_poly_closed_form, CanonicalCode, FamilySpec,
    GenConstraint, IntPoly, SearchOptions, Special,
};
use num_bigint::BigInt;
use rand::Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cyc(n: usize) -> IntPoly {
    cycle_poly(n).unwrap()
}

fn criterion_1() -> Outcome {
    for n in 0..=30 {
        let p = path_poly_closed_form(n);
        let g = FamilySpec::Path(n).graph().unwrap();
        if n <= 20 {
            ensure(independence_polynomial_bruteforce(&g).unwrap() == p, || format!("P{n} vs bitmask"))?;
        }
        ensure(independence_polynomial(&g) == p, || format!("P{n} vs recursion"))?;
    }
    for n in 3..=30 {
        let p = cyc(n);
        let g = FamilySpec::Cycle(n).graph().unwrap();
        if n <= 20 {
            ensure(independence_polynomial_bruteforce(&g).unwrap() == p, || format!("C{n} vs bitmask"))?;
        }
        ensure(independence_polynomial(&g) == p, || format!("C{n} vs recursion"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for n in 2..=14 {
        let lhs = independence_polynomial(&FamilySpec::Path(2 * n).graph().unwrap());
        let rhs = &independence_polynomial(&FamilySpec::Path(n - 1).graph().unwrap())
            * &independence_polynomial(&FamilySpec::Cycle(n + 1).graph().unwrap());
        ensure(lhs == rhs, || format!("P{} vs P{} + C{}", 2 * n, n - 1, n + 1))?;
    }
    for n in 3..=20 {
        let c = independence_polynomial(&FamilySpec::Cycle(n).graph().unwrap());
        let d = independence_polynomial(&FamilySpec::Dgraph(n).graph().unwrap());
        ensure(c == d, || format!("C{n} vs D{n}"))?;
    }
    Ok(())
}

fn codes_of(specs: &[&str]) -> BTreeSet<CanonicalCode> {
    specs.iter().map(|s| canonical_form(&fam(s))).collect()
}

fn class_codes(p: &IntPoly) -> Result<BTreeSet<CanonicalCode>, String> {
    let r = find_equivalence_class(p, &SearchOptions::default()).map_err(|e| e.to_string())?;
    Ok(r.codes().into_iter().collect())
}

fn describe(codes: &BTreeSet<CanonicalCode>) -> String {
    let names: Vec<String> = codes
        .iter()
        .map(|c| indpoly::search::member_name(&c.to_graph()).unwrap_or_else(|| c.as_graph6().to_string()))
        .collect();
    format!("{{{}}}", names.join(", "))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut exact = |label: &str, p: IntPoly, want: BTreeSet<CanonicalCode>| match class_codes(&p) {
        Ok(got) if got == want => {}
        Ok(got) => failures.push(format!("{label}: expected {} got {}", describe(&want), describe(&got))),
        Err(e) => failures.push(format!("{label}: {e}")),
    };
    exact("[C4]", cyc(4), codes_of(&["C:4", "D:4"]));
    exact("[C5]", cyc(5), codes_of(&["C:5", "D:5"]));
    exact("[C6]", cyc(6), codes_of(&["C:6", "D:6", "K4-e+K:2"]));
    exact("[C7]", cyc(7), codes_of(&["C:7", "D:7"]));
    exact("[C8]", cyc(8), codes_of(&["C:8", "D:8"]));
    exact(
        "[C9]",
        cyc(9),
        codes_of(&["C:9", "D:9", "special:G1+C:3", "special:G2+C:3", "special:G3+C:3"]),
    );
    for n in [1, 3, 5, 7, 9] {
        exact(&format!("[P{n}]"), path_poly_closed_form(n), codes_of(&[&format!("P:{n}")]));
    }
    match class_codes(&path_poly_closed_form(10)) {
        Ok(got) => {
            if got.len() != 10 {
                failures.push(format!("|[P10]| = {}", got.len()));
            }
            for s in [Special::H1, Special::H2, Special::H3] {
                if !got.contains(&canonical_form(&s.graph())) {
                    failures.push(format!("{} missing from [P10]", s.name()));
                }
            }
        }
        Err(e) => failures.push(format!("[P10]: {e}")),
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn criterion_4() -> Outcome {
    let c15 = independence_polynomial(&fam("C:15"));
    for s in ["special:G1p+C:3+C:5", "special:G2p+C:3+C:5", "special:G3p+C:3+C:5", "D:15"] {
        ensure(independence_polynomial(&fam(s)) == c15, || format!("{s} vs C15"))?;
    }
    ensure(independence_polynomial(&fam("D:21")) == independence_polynomial(&fam("C:21")), || {
        "D21 vs C21".into()
    })
}

fn divides(k: usize, n: usize) -> Option<IntPoly> {
    cyc(n).divide_exact(&cyc(k)).unwrap()
}

fn criterion_5() -> Outcome {
    let primes = [3usize, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    for p in primes {
        let c = cyc(p);
        let w = eisenstein_witness(&c.reverse().unwrap());
        ensure(w == Some(BigInt::from(p)), || format!("reversed i(C{p}) witness {w:?}"))?;
        ensure(c.coeff(p / 2) == BigInt::from(p), || format!("i(C{p}) coefficient {}", c.coeff(p / 2)))?;
    }
    let mut factors = Vec::new();
    for (k, n) in [(3, 9), (9, 27), (5, 15)] {
        let q = divides(k, n).ok_or_else(|| format!("i(C{k}) does not divide i(C{n})"))?;
        factors.push(q);
    }
    factors.push(cyc(3));
    factors.push(cyc(5));
    for n in (3..=31).step_by(2) {
        for k in 3..=n {
            if n % k != 0 {
                ensure(divides(k, n).is_none(), || format!("i(C{k}) divides i(C{n})"))?;
            }
        }
    }
    let q = &factors[0];
    ensure(*q == IntPoly::from_i64s(&[1, 6, 9, 3]), || format!("i(C9)/i(C3) = {q}"))?;
    ensure(is_unicyclic_poly(q), || "i(C9)/i(C3) not unicyclic".into())?;
    let w = eisenstein_witness(&q.reverse().unwrap());
    ensure(w == Some(BigInt::from(3)), || format!("reversed i(C9)/i(C3) witness {w:?}"))?;
    for f in &factors {
        ensure(is_unicyclic_poly(f), || format!("chain factor {f} not unicyclic"))?;
    }
    for p in [3, 5, 7, 11, 13] {
        let v = kronecker_factor(&cyc(p), 12);
        ensure(v == Kronecker::Irreducible, || format!("Kronecker on i(C{p}): {v:?}"))?;
    }
    let v = kronecker_factor(&cyc(6), 12);
    let want = Kronecker::Factor(IntPoly::from_i64s(&[1, 2]), IntPoly::from_i64s(&[1, 4, 1]));
    ensure(v == want, || format!("Kronecker on i(C6): {v:?}"))
}

fn criterion_6() -> Outcome {
    for n in 3..=20 {
        let p = cyc(n);
        let tol = root_tolerance(&p);
        let mut roots = Vec::new();
        for i in 1..=n / 2 {
            let r = cycle_root(n, i).map_err(|e| e.to_string())?;
            let res = cycle_root_residual(&p, n, i).map_err(|e| e.to_string())?;
            ensure(res < tol, || format!("C{n} r{i}: residual {res:e} >= {tol:e}"))?;
            roots.push(r.value);
        }
        roots.sort_by(f64::total_cmp);
        let gap = roots.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        ensure(gap > 1e-12, || format!("C{n}: min root gap {gap:e}"))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut r = rng(7001);
    for _ in 0..500 {
        let n = r.random_range(1..=14);
        let g = random_graph(&mut r, n);
        let want = count_independent_sets(&g);
        let got: Vec<u64> = independence_polynomial(&g).coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        ensure(got == want, || format!("recursion vs oracle on {g:?}"))?;
    }
    for _ in 0..500 {
        let n = r.random_range(0..=12);
        let g = random_graph(&mut r, n);
        let want = count_independent_sets(&g).get(3).copied().unwrap_or(0) as i64;
        ensure(i3_formula(&g) == want, || format!("i3 formula on {g:?}"))?;
    }
    let unfiltered = SearchOptions { filters: false, ..SearchOptions::default() };
    for n in 1..=7 {
        for m in 0..=n.min(n * (n - 1) / 2) {
            let targets: BTreeSet<Vec<u64>> =
                enumerate_graphs(&GenConstraint::new(n, m)).unwrap().map(|g| count_independent_sets(&g)).collect();
            for t in targets {
                let p = IntPoly::from_u64s(&t);
                let a = find_equivalence_class(&p, &SearchOptions::default()).map_err(|e| e.to_string())?;
                let b = find_equivalence_class(&p, &unfiltered).map_err(|e| e.to_string())?;
                ensure(a.codes() == b.codes(), || format!("filtered vs unfiltered for {p}"))?;
            }
        }
    }
    for n in 0..=7usize {
        let pairs = n * n.saturating_sub(1) / 2;
        let mut oracle: BTreeMap<usize, BTreeSet<CanonicalCode>> = BTreeMap::new();
        for mask in 0u64..1 << pairs {
            let g = labeled(n, mask);
            oracle.entry(g.size()).or_default().insert(canonical_form(&g));
        }
        for (m, want) in oracle {
            let got: Vec<_> = enumerate_graphs(&GenConstraint::new(n, m)).unwrap().map(|g| canonical_form(&g)).collect();
            let set: BTreeSet<_> = got.iter().cloned().collect();
            ensure(set.len() == got.len() && set == want, || format!("enumeration n={n} m={m}"))?;
        }
    }
    for _ in 0..1000 {
        let n = r.random_range(0..=20);
        let g = random_graph(&mut r, n);
        let h = g.permute(&random_perm(&mut r, n));
        ensure(canonical_form(&g) == canonical_form(&h), || format!("canonical form not invariant on {g:?}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for t in 2..=5 {
        let n = (1usize << t) - 2;
        let gs = even_path_class_family(t).map_err(|e| e.to_string())?;
        let target = path_poly_closed_form(n);
        ensure(gs.len() == n / 2, || format!("t={t}: {} members", gs.len()))?;
        let distinct: BTreeSet<_> = gs.iter().map(canonical_form).collect();
        ensure(distinct.len() == gs.len(), || format!("t={t}: duplicate members"))?;
        for g in &gs {
            ensure(independence_polynomial(g) == target, || format!("t={t}: {g:?}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("path and cycle closed forms", Duration::from_secs(10), criterion_1),
        ("path splitting and cycle/D-graph identities", Duration::from_secs(5), criterion_2),
        ("class discovery up to 10 vertices", Duration::from_secs(15 * 60), criterion_3),
        ("verification-only classes", Duration::from_secs(5), criterion_4),
        ("algebra suite", Duration::from_secs(60), criterion_5),
        ("cycle root formula", Duration::from_secs(2), criterion_6),
        ("property suites", Duration::from_secs(10 * 60), criterion_7),
        ("even-path families", Duration::from_secs(5), criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(()) if took <= budget => Ok(()),
            Ok(()) => Err(format!("over budget ({:.1?} > {:.0?})", took, budget)),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS criterion {}: {name} ({took:.2?}, budget {budget:.0?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({took:.2?}, budget {budget:.0?}): {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
