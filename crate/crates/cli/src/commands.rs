use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Duration;

use eqcodes::codes::{fw_bound, largest_sunflower_size, partial_spread_bounds, sunflower_bound, SpreadBounds};
use eqcodes::constructions::{
    ball, example_code_g2_6_3, extend_code, mixed_projective_code, orthogonal_code, plucker_code,
    recursive_plucker_code, spread, sunflower,
};
use eqcodes::document::{CodeDocument, ProfileDocument, RankCodeDocument};
use eqcodes::rankmetric::rank_code;
use eqcodes::search::{max_partial_spread, max_t_intersecting_clique, SearchBudget, SearchResult};
use eqcodes::{FieldCtx, SubspaceCode};
use serde_json::{json, Value};

use crate::{
    BoundsArgs, BudgetArgs, Cli, Command, ConstructArgs, Kind, RankcodeArgs, SearchArgs, SearchKind, VerifyArgs,
};

pub const EXIT_VERIFY_FAILED: u8 = 2;
pub const EXIT_UNCERTIFIED: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 1 }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<eqcodes::Error> for CliError {
    fn from(e: eqcodes::Error) -> Self {
        let code = if matches!(e, eqcodes::Error::BudgetExhausted(_)) { EXIT_UNCERTIFIED } else { 1 };
        CliError { message: e.to_string(), code }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `12345`, `10^7` or `1e7`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let bad = || format!("invalid count {s:?}; use forms like 10000000, 10^7 or 1e7");
    let pow = |base: &str, exp: &str| -> Result<u64, String> {
        let b: u64 = base.trim().parse().map_err(|_| bad())?;
        let e: u32 = exp.trim().parse().map_err(|_| bad())?;
        b.checked_pow(e).ok_or_else(bad)
    };
    if let Some((b, e)) = s.split_once('^') {
        pow(b, e)
    } else if let Some((m, e)) = s.split_once(['e', 'E']) {
        let m: u64 = m.trim().parse().map_err(|_| bad())?;
        m.checked_mul(pow("10", e)?).ok_or_else(bad)
    } else {
        s.trim().parse().map_err(|_| bad())
    }
}

pub fn run(cli: &Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Construct(a) => construct(cli, a),
        Command::Verify(a) => verify(cli, a),
        Command::Bounds(a) => bounds(cli, a),
        Command::Rankcode(a) => rankcode(cli, a),
        Command::Search(a) => search(cli, a),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::usage(format!("{kind} needs --{flag}")))
}

fn field(q: u32) -> CliResult<FieldCtx> {
    Ok(FieldCtx::from_order(q)?)
}

fn budget(b: &BudgetArgs) -> CliResult<SearchBudget> {
    let time = match b.time_limit {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return Err(CliError::usage("--time-limit must be a positive number"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    if b.node_limit.is_none() && time.is_none() {
        return Ok(SearchBudget::default());
    }
    Ok(SearchBudget::new(b.node_limit, time)?)
}

fn read_code(path: &Path) -> CliResult<(CodeDocument, SubspaceCode)> {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = CodeDocument::from_json(&text)?;
    let code = doc.to_code()?;
    Ok((doc, code))
}

/// Sends a document to `--out`, or to standard output without it.
fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Prints a report unless standard output already carries the document.
fn report(cli: &Cli, human: &str, machine: Value) {
    if cli.out.is_none() {
        eprintln!("{human}");
    } else if cli.json {
        println!("{machine}");
    } else {
        println!("{human}");
    }
}

fn set(values: &[usize]) -> String {
    let items: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn describe(p: &ProfileDocument) -> String {
    format!(
        "size {}, dimensions {}, distances {}, intersections {}, t {}, min distance {}, equidistant {}, sunflower {}, ball {}",
        p.size,
        set(&p.dimension_set),
        set(&p.pairwise_distance_set),
        set(&p.pairwise_intersection_dim_set),
        opt(p.t),
        opt(p.min_distance),
        p.is_equidistant,
        p.sunflower_center.is_some(),
        p.is_ball
    )
}

fn construct(cli: &Cli, a: &ConstructArgs) -> CliResult<u8> {
    let name = format!("{:?}", a.kind);
    let (code, provenance, note) = match a.kind {
        Kind::Spread => {
            let (q, n, k) = (need(a.q, "q", "spread")?, need(a.n, "n", "spread")?, need(a.k, "k", "spread")?);
            (spread(&field(q)?, n, k)?, format!("spread q={q} n={n} k={k}"), None)
        }
        Kind::Sunflower => {
            let q = need(a.q, "q", "sunflower")?;
            let (n, k, t) = (need(a.n, "n", "sunflower")?, need(a.k, "k", "sunflower")?, need(a.t, "t", "sunflower")?);
            let s = sunflower(&field(q)?, n, k, t, budget(&a.budget)?)?;
            let note = format!("target size {} {}", s.target, if s.target_met { "met" } else { "not met" });
            (s.code, format!("sunflower q={q} n={n} k={k} t={t}"), Some(note))
        }
        Kind::Ball => {
            let (q, n, k) = (need(a.q, "q", "ball")?, need(a.n, "n", "ball")?, need(a.k, "k", "ball")?);
            (ball(&field(q)?, n, k)?, format!("ball q={q} n={n} k={k}"), None)
        }
        Kind::Plucker => {
            let (q, n) = (need(a.q, "q", "plucker")?, need(a.n, "n", "plucker")?);
            (plucker_code(&field(q)?, n)?, format!("plucker q={q} n={n}"), None)
        }
        Kind::Recursive => {
            let (q, n) = (need(a.q, "q", "recursive")?, need(a.n, "n", "recursive")?);
            (recursive_plucker_code(&field(q)?, n)?, format!("recursive q={q} n={n}"), None)
        }
        Kind::ExampleG263 => (example_code_g2_6_3(), "example-g263".to_string(), None),
        Kind::MixedProjective => {
            let n = need(a.n, "n", "mixed-projective")?;
            let mp = mixed_projective_code(n, budget(&a.budget)?)?;
            let note = format!("enlarges a {}-word sunflower", mp.sunflower.len());
            (mp.code, format!("mixed-projective n={n}"), Some(note))
        }
        Kind::Orthogonal | Kind::Extend => {
            let path = a.input.as_deref().ok_or_else(|| CliError::usage(format!("{name} needs --input")))?;
            let (doc, input) = read_code(path)?;
            let origin = doc.provenance.unwrap_or_else(|| path.display().to_string());
            if a.kind == Kind::Orthogonal {
                (orthogonal_code(&input)?, format!("orthogonal of ({origin})"), None)
            } else {
                (extend_code(&input, a.l)?, format!("extend l={} of ({origin})", a.l), None)
            }
        }
    };
    let with_profile = !code.is_empty();
    let doc = CodeDocument::from_code(&code, with_profile, Some(provenance.clone()))?;
    emit(cli, &doc.to_json())?;
    let mut human = format!("{provenance}: ");
    human += &doc.profile.as_ref().map_or_else(|| "empty code".into(), describe);
    if let Some(n) = &note {
        human += &format!("; {n}");
    }
    report(cli, &human, json!({ "provenance": provenance, "profile": doc.profile, "note": note }));
    Ok(0)
}

struct Check {
    name: &'static str,
    expected: String,
    found: String,
}

impl Check {
    fn ok(&self) -> bool {
        self.expected == self.found
    }
}

fn verify(cli: &Cli, a: &VerifyArgs) -> CliResult<u8> {
    let (doc, code) = read_code(&a.input)?;
    let profile = ProfileDocument::from(&code.profile()?);
    let mut checks = Vec::new();
    if let Some(t) = a.expect_t {
        checks.push(Check { name: "t", expected: t.to_string(), found: opt(profile.t) });
        checks.push(Check { name: "equidistant", expected: "true".into(), found: profile.is_equidistant.to_string() });
    }
    if let Some(d) = a.expect_d {
        checks.push(Check { name: "distance", expected: set(&[d]), found: set(&profile.pairwise_distance_set) });
    }
    if let Some(s) = a.expect_size {
        checks.push(Check { name: "size", expected: s.to_string(), found: profile.size.to_string() });
    }
    if let Some(s) = a.expect_sunflower {
        checks.push(Check {
            name: "sunflower",
            expected: s.to_string(),
            found: profile.sunflower_center.is_some().to_string(),
        });
    }
    if let Some(embedded) = &doc.profile {
        let same = embedded == &profile;
        checks.push(Check {
            name: "embedded profile",
            expected: "matches".into(),
            found: (if same { "matches" } else { "differs" }).into(),
        });
    }
    let ok = checks.iter().all(Check::ok);
    let mut lines = vec![format!("profile: {}", describe(&profile))];
    for c in &checks {
        let mark = if c.ok() { "ok" } else { "FAIL" };
        lines.push(format!("[{mark}] {}: expected {}, found {}", c.name, c.expected, c.found));
    }
    lines.push(if ok { "verification passed".into() } else { "verification FAILED".into() });
    if cli.json {
        let items: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "expected": c.expected, "found": c.found, "ok": c.ok() }))
            .collect();
        println!("{}", json!({ "ok": ok, "profile": profile, "checks": items }));
    } else {
        println!("{}", lines.join("\n"));
    }
    Ok(if ok { 0 } else { EXIT_VERIFY_FAILED })
}

fn spread_json(b: &SpreadBounds) -> Value {
    json!({
        "lower": b.lower.to_string(),
        "upper": b.upper.to_string(),
        "exact": b.exact.as_ref().map(ToString::to_string),
        "attribution": b.attribution,
    })
}

fn spread_line(label: &str, b: &SpreadBounds) -> String {
    match &b.exact {
        Some(v) => format!("{label}: exact {v} ({})", b.attribution),
        None => format!("{label}: between {} and {} ({})", b.lower, b.upper, b.attribution),
    }
}

fn bounds(cli: &Cli, a: &BoundsArgs) -> CliResult<u8> {
    let mut lines = Vec::new();
    let mut out = serde_json::Map::new();
    let (q, k) = (a.q, a.k);
    if let Some(t) = a.t {
        let v = sunflower_bound(q, k, t)?;
        lines.push(format!(
            "sunflower threshold (q={q}, k={k}, t={t}): {v}; larger t-intersecting codes are sunflowers"
        ));
        out.insert("sunflower_bound".into(), json!(v.to_string()));
    }
    if let Some(n) = a.n {
        if let Some(t) = a.t {
            let v = fw_bound(q, n, k, t)?;
            lines.push(format!("Frankl–Wilson bound (q={q}, n={n}, k={k}, t={t}): {v}"));
            out.insert("fw_bound".into(), json!(v.to_string()));
            if t < k {
                let b = largest_sunflower_size(q, n, k, t)?;
                lines.push(spread_line("largest t-intersecting sunflower", &b));
                out.insert("largest_sunflower".into(), spread_json(&b));
            }
        }
        let b = partial_spread_bounds(q, n, k)?;
        lines.push(spread_line(&format!("largest partial {k}-spread in F_{q}^{n}"), &b));
        out.insert("partial_spread".into(), spread_json(&b));
    }
    if lines.is_empty() {
        return Err(CliError::usage("bounds needs --n, --t, or both"));
    }
    if cli.json {
        println!("{}", Value::Object(out));
    } else {
        println!("{}", lines.join("\n"));
    }
    Ok(0)
}

fn rankcode(cli: &Cli, a: &RankcodeArgs) -> CliResult<u8> {
    let code = rank_code(&field(a.q)?, a.n)?;
    let p = code.profile();
    let doc = RankCodeDocument::from_code(&code, Some(format!("rankcode q={} n={}", a.q, a.n)));
    emit(cli, &doc.to_json())?;
    let ranks: Vec<usize> = p.rank_set.iter().copied().collect();
    let dists: Vec<usize> = p.distance_set.iter().copied().collect();
    let human = match (ranks.as_slice(), dists.as_slice()) {
        ([r], [d]) => {
            format!("{} matrices of shape {}x{}, rank {r}, distance {d}", p.size, code.shape().0, code.shape().1)
        }
        _ => format!("{} matrices, ranks {}, distances {}", p.size, set(&ranks), set(&dists)),
    };
    report(cli, &human, json!({ "size": p.size, "ranks": ranks, "distances": dists }));
    Ok(0)
}

fn search(cli: &Cli, a: &SearchArgs) -> CliResult<u8> {
    let f = field(a.q)?;
    let b = budget(&a.budget)?;
    let (result, what): (SearchResult, String) = match a.kind {
        SearchKind::Spread => {
            (max_partial_spread(&f, a.n, a.k, b)?, format!("partial spread q={} n={} k={}", a.q, a.n, a.k))
        }
        SearchKind::Clique => {
            let t = need(a.t, "t", "clique search")?;
            let r = max_t_intersecting_clique(&f, a.n, a.k, t, b, a.forbid_sunflower)?;
            let extra = if a.forbid_sunflower { " non-sunflower" } else { "" };
            (r, format!("{t}-intersecting{extra} clique q={} n={} k={}", a.q, a.n, a.k))
        }
    };
    let code = &result.best_code;
    let doc = CodeDocument::from_code(code, !code.is_empty(), Some(format!("search {what}")))?;
    emit(cli, &doc.to_json())?;
    let status = if result.certified_optimal { "certified optimal" } else { "NOT certified (budget exhausted)" };
    let human = format!(
        "{what}: size {}, {status}, {} nodes, {:.3} s",
        code.len(),
        result.nodes_explored,
        result.elapsed.as_secs_f64()
    );
    report(
        cli,
        &human,
        json!({
            "size": code.len(),
            "certified_optimal": result.certified_optimal,
            "nodes_explored": result.nodes_explored,
            "elapsed_seconds": result.elapsed.as_secs_f64(),
            "deterministic": b.deterministic,
        }),
    );
    Ok(if result.certified_optimal { 0 } else { EXIT_UNCERTIFIED })
}
