use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use indpoly::poly::{cycle_root, cycle_root_residual, root_tolerance, eisenstein_witness, factorize, is_unicyclic_poly, FactorStatus};
use indpoly::search::{candidate_set, DEFAULT_ENVELOPE};
use indpoly::{
    cycle_poly, enumerate_parallel, find_equivalence_class, graph6, independence_polynomial, run_suite,
    verify_class_members, ClassReport, FamilySpec, GenConstraint, Graph, IntPoly, SearchError, SearchOptions,
    Suite,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ENVELOPE: u8 = 3;

/// `println!` that exits quietly once the reader has gone away.
macro_rules! out {
    ($($t:tt)*) => {{
        let mut o = io::stdout().lock();
        writeln!(o, $($t)*).unwrap_or_else(stdout_failed);
    }};
}

fn stdout_failed(e: io::Error) {
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    eprintln!("ipoly: cannot write output: {e}");
    std::process::exit(EXIT_FAIL.into());
}

#[derive(Parser)]
#[command(name = "ipoly", version, about = "Independence polynomials and independence-equivalence classes")]
struct Cli {
    /// Output format; `class` defaults to json, everything else to human.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print i(G, x).
    Compute {
        /// graph6 string or family spec such as `C:6` or `special:G1+C:3`
        spec: String,
    },
    /// Find (or verify) the independence-equivalence class of a graph.
    Class {
        /// Graph spec, or a coefficient list like `[1,6,9,2]`.
        spec: String,
        /// Check these candidates instead of enumerating: a named set
        /// (specials-c9, specials-c15, specials-c21) or a comma-separated
        /// list of graph specs.
        #[arg(long)]
        verify_against: Option<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        /// Largest order to enumerate (default 10, or $IPOLY_ENVELOPE).
        #[arg(long)]
        envelope: Option<usize>,
        /// Compare full polynomials only, skipping the cheap rejection tests.
        #[arg(long)]
        no_filters: bool,
    },
    /// Run a suite of checks and print a table.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// List all graphs with n vertices and m edges, one graph6 per line.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Factor i(G, x): Eisenstein, cycle divisor chain, Kronecker.
    Factor { spec: String },
    /// Cycle roots from the closed formula, with residuals.
    Roots { spec: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Command::Compute { spec } => compute(&spec, cli.format.unwrap_or(Format::Human)),
        Command::Class { spec, verify_against, jobs, envelope, no_filters } => class(
            &spec,
            verify_against.as_deref(),
            jobs.into(),
            envelope,
            !no_filters,
            cli.format.unwrap_or(Format::Json),
        ),
        Command::VerifyPaper { suite, jobs } => verify(&suite, jobs.into(), cli.format.unwrap_or(Format::Human)),
        Command::Enumerate { n, m, max_degree, jobs } => enumerate(n, m, max_degree, jobs.into()),
        Command::Factor { spec } => factor(&spec, cli.format.unwrap_or(Format::Human)),
        Command::Roots { spec } => roots(&spec, cli.format.unwrap_or(Format::Human)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("ipoly: {msg}");
            ExitCode::from(code)
        }
    }
}

struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn parse_family(spec: &str) -> Result<FamilySpec, Failure> {
    spec.parse::<FamilySpec>().map_err(|e| usage(format!("cannot parse `{spec}`: {e}")))
}

/// Family grammar when the token looks like it, graph6 otherwise.
fn parse_graph(spec: &str) -> Result<Graph, Failure> {
    let spec = spec.trim();
    if spec.contains(':') || spec.contains('+') || spec == "K4-e" {
        parse_family(spec)?.graph().map_err(|e| usage(format!("cannot build `{spec}`: {e}")))
    } else {
        graph6::decode(spec).map_err(|e| usage(format!("cannot parse `{spec}` as graph6: {e}")))
    }
}

fn print_json(v: &serde_json::Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn compute(spec: &str, format: Format) -> Result<u8, Failure> {
    let g = parse_graph(spec)?;
    let p = independence_polynomial(&g);
    match format {
        Format::Human => {
            out!("{p}");
            out!("{}", p.to_list_string());
        }
        Format::Json => print_json(&json!({
            "schema": 1,
            "spec": spec,
            "graph6": graph6::encode(&g),
            "polynomial": p,
        })),
    }
    Ok(0)
}

fn envelope_from_env() -> Result<usize, Failure> {
    match std::env::var("IPOLY_ENVELOPE") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("IPOLY_ENVELOPE=`{v}` is not a vertex count"))),
        Err(_) => Ok(DEFAULT_ENVELOPE),
    }
}

fn class(
    spec: &str,
    verify_against: Option<&str>,
    jobs: usize,
    envelope: Option<usize>,
    filters: bool,
    format: Format,
) -> Result<u8, Failure> {
    let target = if spec.trim_start().starts_with('[') {
        spec.parse::<IntPoly>().map_err(|e| usage(format!("cannot parse `{spec}`: {e}")))?
    } else {
        independence_polynomial(&parse_graph(spec)?)
    };
    let report = match verify_against {
        Some(list) => {
            let cands = candidates(list)?;
            verify_class_members(&target, &cands)
        }
        None => {
            let envelope = match envelope {
                Some(e) => e,
                None => envelope_from_env()?,
            };
            if envelope > DEFAULT_ENVELOPE {
                eprintln!("ipoly: warning: discovery envelope {envelope} exceeds {DEFAULT_ENVELOPE}; this may take very long");
            }
            let opts = SearchOptions { envelope, jobs, filters, ..SearchOptions::default() };
            match find_equivalence_class(&target, &opts) {
                Ok(r) => r,
                Err(e @ SearchError::Envelope { .. }) => {
                    return Err(Failure(
                        EXIT_ENVELOPE,
                        format!("{e}; for example `--verify-against specials-c15` or a comma-separated spec list"),
                    ))
                }
                Err(e) => return Err(usage(e.to_string())),
            }
        }
    };
    match format {
        Format::Json => print_json(&report.to_json()),
        Format::Human => print_report(&report),
    }
    Ok(0)
}

fn candidates(list: &str) -> Result<Vec<Graph>, Failure> {
    if let Ok(specs) = candidate_set(list) {
        return specs.iter().map(|s| s.graph().map_err(|e| usage(e.to_string()))).collect();
    }
    list.split(',').map(|s| parse_graph(s.trim())).collect()
}

fn print_report(r: &ClassReport) {
    out!("target   {}", r.target);
    if let (Some(n), Some(m)) = (r.n, r.m) {
        out!("n, m     {n}, {m}");
    }
    out!("complete {}", r.complete);
    out!("members  {}", r.len());
    for m in &r.members {
        out!("  {:<16} {}", m.graph6, m.name.as_deref().unwrap_or("-"));
    }
}

fn verify(suite: &str, jobs: usize, format: Format) -> Result<u8, Failure> {
    let suite: Suite = suite.parse().map_err(usage)?;
    let opts = SearchOptions { jobs, ..SearchOptions::default() };
    let checks = run_suite(suite, &opts);
    let ok = checks.iter().all(|c| c.pass);
    match format {
        Format::Human => {
            let w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let x = checks.iter().map(|c| c.expected.len()).max().unwrap_or(0).max(8);
            out!("{:<w$}  {:<x$}  pass  got", "check", "expected");
            for c in &checks {
                let pass = if c.pass { "yes" } else { "NO" };
                out!("{:<w$}  {:<x$}  {:<4}  {}", c.name, c.expected, pass, c.got);
            }
            out!("{} of {} checks passed", checks.iter().filter(|c| c.pass).count(), checks.len());
        }
        Format::Json => {
            let rows: Vec<_> = checks
                .iter()
                .map(|c| json!({"name": c.name, "expected": c.expected, "got": c.got, "pass": c.pass}))
                .collect();
            print_json(&json!({"schema": 1, "pass": ok, "checks": rows}));
        }
    }
    Ok(if ok { 0 } else { EXIT_FAIL })
}

fn enumerate(n: usize, m: usize, max_degree: Option<usize>, jobs: usize) -> Result<u8, Failure> {
    let mut c = GenConstraint::new(n, m);
    c.max_degree = max_degree;
    let graphs = enumerate_parallel(&c, jobs).map_err(|e| usage(e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        writeln!(out, "{}", graph6::encode(g)).unwrap_or_else(stdout_failed);
    }
    out.flush().unwrap_or_else(stdout_failed);
    eprintln!("{} graphs", graphs.len());
    Ok(0)
}

/// `i(C_k)` for a chain `k_1 | k_2 | … | n` of odd-cycle orders that divide
/// exactly, each step taking the smallest available multiple.
fn cycle_chain(n: usize) -> Vec<(usize, IntPoly)> {
    let full = cycle_poly(n).expect("n >= 3");
    let mut chain = Vec::new();
    let mut last = 1;
    for k in 3..n {
        if n % k == 0 && k % last == 0 {
            let p = cycle_poly(k).expect("k >= 3");
            if matches!(full.divide_exact(&p), Ok(Some(_))) {
                chain.push((k, p));
                last = k;
            }
        }
    }
    chain
}

fn factor(spec: &str, format: Format) -> Result<u8, Failure> {
    let g = parse_graph(spec)?;
    let p = independence_polynomial(&g);
    let witness = p.reverse().ok().and_then(|r| eisenstein_witness(&r));
    let cycle_order = match spec.parse::<FamilySpec>() {
        Ok(FamilySpec::Cycle(n)) => Some(n),
        _ => None,
    };
    // successive quotients along the divisor chain, or p itself
    let mut pieces: Vec<(String, IntPoly)> = Vec::new();
    let mut prev: Option<(usize, IntPoly)> = None;
    let chain = cycle_order.map(cycle_chain).unwrap_or_default();
    for (k, q) in chain.into_iter().chain(cycle_order.map(|n| (n, p.clone()))) {
        let (name, piece) = match &prev {
            None => (format!("i(C{k})"), q.clone()),
            Some((j, d)) => (format!("i(C{k})/i(C{j})"), q.divide_exact(d).ok().flatten().expect("chain divides")),
        };
        pieces.push((name, piece));
        prev = Some((k, q));
    }
    if pieces.is_empty() {
        pieces.push(("i(G)".to_string(), p.clone()));
    }

    let mut rows = Vec::new();
    for (origin, piece) in &pieces {
        for (f, status) in factorize(piece, indpoly::poly::DEFAULT_DEGREE_CAP) {
            let w = f.reverse().ok().and_then(|r| eisenstein_witness(&r));
            rows.push((origin.clone(), f.clone(), status, is_unicyclic_poly(&f), w));
        }
    }
    match format {
        Format::Human => {
            out!("polynomial  {p}");
            match &witness {
                Some(q) => out!("eisenstein  witness {q} on the reversed polynomial: irreducible"),
                None => out!("eisenstein  no witness on the reversed polynomial (inconclusive)"),
            }
            if pieces.len() > 1 {
                let chain: Vec<String> = pieces.iter().map(|(_, q)| q.to_list_string()).collect();
                out!("chain       {}", chain.join(" * "));
            }
            for (origin, f, status, uni, w) in &rows {
                out!(
                    "factor      {:<24} from {:<14} {:<12} unicyclic={} eisenstein={}",
                    f.to_list_string(),
                    origin,
                    status_name(*status),
                    uni,
                    w.as_ref().map_or("-".to_string(), |q| q.to_string())
                );
            }
        }
        Format::Json => {
            let factors: Vec<_> = rows
                .iter()
                .map(|(origin, f, status, uni, w)| {
                    json!({
                        "factor": f,
                        "from": origin,
                        "status": status_name(*status),
                        "unicyclic": uni,
                        "eisenstein": w.as_ref().map(|q| q.to_string()),
                    })
                })
                .collect();
            let chain: Vec<_> = pieces.iter().map(|(o, q)| json!({"piece": o, "poly": q})).collect();
            print_json(&json!({
                "schema": 1,
                "polynomial": p,
                "eisenstein": witness.map(|q| q.to_string()),
                "chain": chain,
                "factors": factors,
            }));
        }
    }
    Ok(0)
}

fn status_name(s: FactorStatus) -> &'static str {
    match s {
        FactorStatus::Irreducible => "irreducible",
        FactorStatus::Unresolved => "unresolved",
        FactorStatus::Constant => "constant",
    }
}

fn roots(spec: &str, format: Format) -> Result<u8, Failure> {
    let n = match parse_family(spec)? {
        FamilySpec::Cycle(n) if n >= 3 => n,
        FamilySpec::Cycle(n) => return Err(usage(format!("a cycle needs at least 3 vertices, got {n}"))),
        _ => return Err(usage(format!("`{spec}` is not a cycle; the root formula covers C:n only"))),
    };
    let p = cycle_poly(n).map_err(|e| usage(e.to_string()))?;
    let tol = root_tolerance(&p);
    let mut rows = Vec::new();
    for i in 1..=n / 2 {
        let r = cycle_root(n, i).map_err(|e| usage(e.to_string()))?;
        let res = cycle_root_residual(&p, n, i).map_err(|e| usage(e.to_string()))?;
        rows.push((i, r.value, res));
    }
    let ok = rows.iter().all(|&(_, _, res)| res < tol);
    match format {
        Format::Human => {
            out!("i(C{n}) = {p}");
            out!("{:>4}  {:>20}  {:>12}", "i", "r_i", "residual");
            for (i, r, res) in &rows {
                out!("{i:>4}  {r:>20.12}  {res:>12.3e}");
            }
            out!("tolerance {tol:.3e}: {}", if ok { "all roots pass" } else { "FAILED" });
        }
        Format::Json => {
            let rs: Vec<_> = rows.iter().map(|(i, r, res)| json!({"i": i, "root": r, "residual": res})).collect();
            print_json(&json!({"schema": 1, "n": n, "polynomial": p, "tolerance": tol, "roots": rs, "pass": ok}));
        }
    }
    Ok(if ok { 0 } else { EXIT_FAIL })
}
