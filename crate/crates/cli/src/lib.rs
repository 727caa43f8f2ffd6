//! Request dispatch for the `tropsec` binary. Every command parses a JSON
//! payload, calls into the library, and renders the result as JSON with
//! exact rationals as strings and ∞ as `"inf"`.

use serde_json::{json, Map, Value};
use tropsec::grass2::{self, PlueckerPoint};
use tropsec::hyperdet::{self, BergmanFan, HyperdetContext};
use tropsec::linsection::{self, LinearSpaceParam};
use tropsec::matrixvar;
use tropsec::matroids::Verdict;
use tropsec::tropcore::{self, OracleCase, TropMatrix, TropScalar};
use tropsec::valfield::{names, Polynomial};
use tropsec::{fmt_q, parse_q, Error, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Membership,
    SectionEval,
    Decompose,
    Rank,
    VerifyHyperdet,
    OracleCompare,
    Remark43Demo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Linear,
    Grass2,
    Rank2,
    Corank1,
    Hyperdet,
    Hypersurface,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "linear" => Family::Linear,
            "grass2" => Family::Grass2,
            "rank2" => Family::Rank2,
            "corank1" => Family::Corank1,
            "hyperdet" => Family::Hyperdet,
            "hypersurface" => Family::Hypersurface,
            _ => return Err(format!("unknown family {s:?}")),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub family: Option<Family>,
    pub seed: u64,
    pub samples: usize,
    pub verbose: bool,
    pub orbits_only: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { family: None, seed: 0, samples: 1000, verbose: false, orbits_only: false }
    }
}

/// Exit code and JSON body: 0 positive verdict, 1 negative, 2 error.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Outcome { code: 0, output }
    }

    fn negative(output: Value) -> Self {
        Outcome { code: 1, output }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome { code: 2, output: json!({ "error": e.to_string() }) }
    }
}

type Res<T> = std::result::Result<T, Error>;

pub fn run(cmd: Command, input: &Value, opts: &Options) -> Outcome {
    let r = match cmd {
        Command::Membership => family(opts).and_then(|f| membership(f, input)),
        Command::SectionEval => family(opts).and_then(|f| section_eval(f, input, opts.verbose)),
        Command::Decompose => family(opts).and_then(|f| decompose(f, input)),
        Command::Rank => rank(input),
        Command::VerifyHyperdet => verify_hyperdet(opts),
        Command::OracleCompare => oracle_compare(input, opts),
        Command::Remark43Demo => remark43(input),
    };
    r.unwrap_or_else(|e| match e {
        Error::NotMember(msg) => Outcome::negative(json!({ "member": false, "reason": msg })),
        e => Outcome::error(e),
    })
}

fn family(opts: &Options) -> Res<Family> {
    opts.family.ok_or_else(|| Error::Parse("--family is required".into()))
}

// ─── parsing ────────────────────────────────────────────────────────────

fn scalar(v: &Value) -> Res<TropScalar> {
    match v {
        Value::String(s) => TropScalar::parse(s),
        Value::Number(n) => n.as_i64().map(TropScalar::int).ok_or_else(|| Error::Parse(format!("{n} is not an integer; use \"p/q\""))),
        _ => Err(Error::Parse(format!("expected a tropical scalar, got {v}"))),
    }
}

fn rational(v: &Value) -> Res<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => n.as_i64().map(tropsec::q).ok_or_else(|| Error::Parse(format!("{n} is not an integer; use \"p/q\""))),
        _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
    }
}

fn field<'a>(input: &'a Value, key: &str) -> Res<&'a Value> {
    input.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Res<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("\"{what}\" must be an array")))
}

/// `{"point": {"values": [...]}}`, `{"point": [...]}` or `{"values": [...]}`.
fn point(input: &Value) -> Res<Vec<TropScalar>> {
    let p = input.get("point").unwrap_or(input);
    let vals = p.get("values").unwrap_or(p);
    array(vals, "values")?.iter().map(scalar).collect()
}

fn finite(p: &[TropScalar]) -> Res<Vec<Q>> {
    p.iter().map(|x| x.fin().cloned().ok_or_else(|| Error::Precondition("point must be finite".into()))).collect()
}

fn matrix(input: &Value) -> Res<TropMatrix> {
    let rows = array(field(input, "matrix")?, "matrix")?;
    let rows: Vec<Vec<TropScalar>> = rows.iter().map(|r| array(r, "matrix row")?.iter().map(scalar).collect()).collect::<Res<_>>()?;
    TropMatrix::from_rows(rows)
}

fn rational_rows(v: &Value, what: &str) -> Res<Vec<Vec<Q>>> {
    array(v, what)?.iter().map(|r| array(r, what)?.iter().map(rational).collect()).collect()
}

fn linear_space(input: &Value) -> Res<LinearSpaceParam> {
    if let Some(f) = input.get("forms") {
        let forms = rational_rows(f, "forms")?;
        let vars = vars_or_default(input, forms.len())?;
        LinearSpaceParam::new(forms, vars)
    } else {
        let eqs = rational_rows(field(input, "equations")?, "equations")?;
        let n = eqs.first().map_or(0, |r| r.len());
        LinearSpaceParam::from_equations(&eqs, vars_or_default(input, n)?)
    }
}

fn vars_or_default(input: &Value, n: usize) -> Res<Vec<String>> {
    match input.get("vars") {
        Some(v) => array(v, "vars")?
            .iter()
            .map(|s| s.as_str().map(String::from).ok_or_else(|| Error::Parse("variable names must be strings".into())))
            .collect(),
        None => Ok(names("x", n)),
    }
}

fn grass_point(input: &Value) -> Res<PlueckerPoint> {
    let xi = point(input)?;
    let m = (2..=64).find(|m| m * (m - 1) / 2 == xi.len()).ok_or_else(|| Error::Dimension(format!("{} is not a binomial(m,2)", xi.len())))?;
    PlueckerPoint::new(m, xi)
}

fn polynomials(input: &Value) -> Res<Vec<Polynomial>> {
    array(field(input, "polynomials")?, "polynomials")?.iter().map(Polynomial::from_json).collect()
}

// ─── rendering ──────────────────────────────────────────────────────────

fn ts(v: &[TropScalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn qs(v: &[Q]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(fmt_q(x))).collect())
}

fn verdict(v: &Verdict, extra: Map<String, Value>) -> Outcome {
    let mut body = Map::new();
    body.insert("member".into(), json!(v.member));
    body.insert("witness".into(), json!(v.witness));
    body.extend(extra);
    if v.member {
        Outcome::ok(Value::Object(body))
    } else {
        Outcome::negative(Value::Object(body))
    }
}

fn values(vals: Vec<TropScalar>, decomposition: Option<Value>) -> Outcome {
    let mut body = json!({ "values": ts(&vals) });
    if let Some(d) = decomposition {
        body["decomposition"] = d;
    }
    Outcome::ok(body)
}

// ─── commands ───────────────────────────────────────────────────────────

fn hyperdet_setup() -> Res<(HyperdetContext, BergmanFan)> {
    let ctx = hyperdet::build_context()?;
    let fan = hyperdet::bergman_orbits(&ctx);
    Ok((ctx, fan))
}

fn membership(f: Family, input: &Value) -> Res<Outcome> {
    Ok(match f {
        Family::Linear => {
            let y = linear_space(input)?;
            verdict(&linsection::trop_membership_linear(&y, &point(input)?)?, Map::new())
        }
        Family::Grass2 => verdict(&grass2::membership_trop_gr2(&grass_point(input)?), Map::new()),
        Family::Rank2 => verdict(&matrixvar::membership_rank2(&matrix(input)?), Map::new()),
        Family::Corank1 => verdict(&matrixvar::membership_corank1_u(&matrix(input)?)?, Map::new()),
        Family::Hyperdet => {
            let ctx = hyperdet::build_context()?;
            let p = point(input)?;
            finite(&p)?;
            verdict(&if hyperdet::membership_hyperdet(&ctx, &p) { Verdict::yes() } else { Verdict::no(Vec::new()) }, Map::new())
        }
        Family::Hypersurface => {
            let poly = Polynomial::from_json(field(input, "polynomial")?)?;
            let p = point(input)?;
            if p.len() != poly.nvars() {
                return Err(Error::Dimension(format!("{} values for {} variables", p.len(), poly.nvars())));
            }
            let (value, count) = poly.trop_eval_min(&p);
            let mut extra = Map::new();
            extra.insert("value".into(), json!(value.to_string()));
            extra.insert("attained".into(), json!(count));
            let v = if poly.hypersurface_membership(&p) { Verdict::yes() } else { Verdict::no(Vec::new()) };
            verdict(&v, extra)
        }
    })
}

fn section_eval(f: Family, input: &Value, verbose: bool) -> Res<Outcome> {
    let fs = polynomials(input)?;
    let eval_all = |e: &dyn Fn(&Polynomial) -> Res<TropScalar>| fs.iter().map(e).collect::<Res<Vec<_>>>();
    Ok(match f {
        Family::Linear => {
            let y = linear_space(input)?;
            let sp = linsection::build_lin_section(&y, &point(input)?)?;
            let vals = eval_all(&|p| linsection::eval_lin_section(&sp, p))?;
            let d = verbose.then(|| json!({ "s": sp.s, "basis": sp.basis, "rewrite": sp.rewrite.iter().map(|r| qs(r)).collect::<Vec<_>>() }));
            values(vals, d)
        }
        Family::Grass2 => {
            let sp = grass2::build_grass_section(&grass_point(input)?)?;
            let vals = eval_all(&|p| grass2::eval_grass_section(&sp, p))?;
            let d = verbose.then(|| json!({ "support": sp.support, "tau": ts(&sp.tau), "eta": ts(&sp.eta), "tree": sp.tree }));
            values(vals, d)
        }
        Family::Rank2 => {
            let sp = matrixvar::build_rank2_section(&matrix(input)?)?;
            let vals = eval_all(&|p| matrixvar::eval_rank2_section(&sp, p))?;
            let d = verbose.then(|| {
                json!({ "rows": sp.rows, "cols": sp.cols, "tau": ts(&sp.tau), "rho": ts(&sp.rho), "eta": ts(sp.eta.entries()), "tree": sp.tree })
            });
            values(vals, d)
        }
        Family::Corank1 => {
            let sp = matrixvar::corank1_section(&matrix(input)?)?;
            let vals = eval_all(&|p| matrixvar::eval_corank1_section(&sp, p))?;
            let d = verbose.then(|| json!({ "tau": qs(&sp.tau), "eta": ts(sp.eta.entries()), "basis": sp.inner.basis }));
            values(vals, d)
        }
        Family::Hyperdet => {
            let (ctx, fan) = hyperdet_setup()?;
            let xi = finite(&point(input)?)?;
            let sp = hyperdet::hyperdet_section(&ctx, &fan, &xi)?;
            let vals = eval_all(&|p| hyperdet::eval_hyperdet_section(&sp, p))?;
            let d = verbose.then(|| {
                json!({ "cone": sp.cone, "orbit": fan.orbits[fan.cones[sp.cone].orbit].label, "tau": qs(&sp.tau), "eta": qs(&sp.eta), "basis": sp.inner.basis })
            });
            values(vals, d)
        }
        Family::Hypersurface => return Err(Error::Precondition("section-eval has no hypersurface family".into())),
    })
}

fn decompose(f: Family, input: &Value) -> Res<Outcome> {
    Ok(Outcome::ok(match f {
        Family::Grass2 => {
            let d = grass2::decompose(&grass_point(input)?)?;
            json!({ "support": d.support, "tau": ts(&d.tau), "eta": ts(&d.eta) })
        }
        Family::Rank2 => {
            let d = matrixvar::decompose_rank2(&matrix(input)?)?;
            json!({ "rows": d.rows, "cols": d.cols, "tau": ts(&d.tau), "rho": ts(&d.rho), "eta": ts(d.eta.entries()) })
        }
        Family::Corank1 => {
            let (tau, eta) = matrixvar::decompose_corank1(&matrix(input)?)?;
            json!({ "tau": qs(&tau), "eta": ts(eta.entries()) })
        }
        Family::Hyperdet => {
            let (ctx, fan) = hyperdet_setup()?;
            let sp = hyperdet::hyperdet_section(&ctx, &fan, &finite(&point(input)?)?)?;
            json!({ "cone": sp.cone, "orbit": fan.orbits[fan.cones[sp.cone].orbit].label, "tau": qs(&sp.tau), "eta": qs(&sp.eta) })
        }
        Family::Linear => {
            let y = linear_space(input)?;
            let sp = linsection::build_lin_section(&y, &point(input)?)?;
            json!({ "s": sp.s, "basis": sp.basis, "rewrite": sp.rewrite.iter().map(|r| qs(r)).collect::<Vec<_>>() })
        }
        Family::Hypersurface => return Err(Error::Precondition("decompose has no hypersurface family".into())),
    }))
}

fn rank(input: &Value) -> Res<Outcome> {
    let m = matrix(input)?;
    Ok(Outcome::ok(json!({ "rank": tropcore::tropical_rank(&m)? })))
}

fn verify_hyperdet(opts: &Options) -> Res<Outcome> {
    let (ctx, fan) = hyperdet_setup()?;
    let mut report = json!({
        "context": hyperdet::context_json(&ctx),
        "fan": hyperdet::fan_json(&ctx, &fan),
    });
    let fan_ok = fan.orbits.len() == 6 && fan.covering_orbits().len() == 3;
    let mut failures = Vec::new();
    if !fan_ok {
        failures.push(format!("{} orbits, {} covering", fan.orbits.len(), fan.covering_orbits().len()));
    }
    if !opts.orbits_only {
        let abs = hyperdet::verify_absorption(&fan, opts.samples, opts.seed);
        if !abs.clean() {
            failures.push("absorption sampling found a point outside the covered region".into());
        }
        report["absorption"] = hyperdet::absorption_json(&abs);
        let cover = hyperdet::verify_cover_lps(&ctx, &fan);
        if !cover.all_infeasible() {
            failures.push("a cover LP was feasible or a certificate failed".into());
        }
        report["cover"] = hyperdet::cover_json(&fan, &cover);
    }
    report["passed"] = json!(failures.is_empty());
    report["failures"] = json!(failures);
    Ok(if failures.is_empty() { Outcome::ok(report) } else { Outcome::negative(report) })
}

fn case_json(c: &OracleCase) -> Value {
    match c {
        OracleCase::Agree(v) => json!({ "status": "agree", "point": ts(v) }),
        OracleCase::Degenerate => json!({ "status": "degenerate" }),
        OracleCase::Disagree { formula, oracle } => {
            json!({ "status": "disagree", "formula": ts(formula), "oracle": oracle.as_ref().map(|o| ts(o)) })
        }
    }
}

/// With a payload: one instance (`"matrix"` of hyperplane columns, or
/// `"values"` of Plücker coordinates). Without: `--samples` random
/// instances of each operation.
fn oracle_compare(input: &Value, opts: &Options) -> Res<Outcome> {
    let cases: Vec<(String, OracleCase)> = if input.is_null() {
        let mut out = Vec::new();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(opts.seed);
        for k in 0..opts.samples {
            let m = 3 + k % 3;
            let c = tropcore::random_matrix(m, m - 1, -50, 50, &mut rng);
            out.push(("hyperplanes".into(), tropcore::oracle_compare_hyperplanes(&c, opts.seed)));
            let p = grass2::random_member(m + 1, &(0..m + 1).collect::<Vec<_>>(), false, &mut rng);
            out.push(("line_h".into(), tropcore::oracle_compare_line_h(p.m, &p.xi, opts.seed)));
        }
        out
    } else if input.get("matrix").is_some() {
        vec![("hyperplanes".into(), tropcore::oracle_compare_hyperplanes(&matrix(input)?, opts.seed))]
    } else {
        let p = grass_point(input)?;
        vec![("line_h".into(), tropcore::oracle_compare_line_h(p.m, &p.xi, opts.seed))]
    };
    let count = |op: &str, pred: fn(&OracleCase) -> bool| cases.iter().filter(|(o, c)| o == op && pred(c)).count();
    let mut summary = Map::new();
    for op in ["hyperplanes", "line_h"] {
        summary.insert(
            op.into(),
            json!({
                "agree": count(op, |c| matches!(c, OracleCase::Agree(_))),
                "degenerate": count(op, |c| matches!(c, OracleCase::Degenerate)),
                "disagree": count(op, |c| matches!(c, OracleCase::Disagree { .. })),
            }),
        );
    }
    let disagreements = cases.iter().filter(|(_, c)| matches!(c, OracleCase::Disagree { .. })).count();
    let mut body = json!({ "summary": summary });
    if opts.verbose || !input.is_null() {
        body["cases"] = Value::Array(cases.iter().map(|(op, c)| json!({ "operation": op, "result": case_json(c) })).collect());
    }
    Ok(if disagreements == 0 { Outcome::ok(body) } else { Outcome::negative(body) })
}

fn remark43(input: &Value) -> Res<Outcome> {
    let get = |k: &str, default: [i64; 4]| -> Res<Vec<TropScalar>> {
        match input.get(k) {
            Some(v) => array(v, k)?.iter().map(scalar).collect(),
            None => Ok(default.iter().map(|&x| TropScalar::int(x)).collect()),
        }
    };
    let (a, b) = (get("a", [0, 1, 2, 3])?, get("b", [3, 1, 0, 2])?);
    let r = matrixvar::remark43_demo(&a, &b)?;
    let body = json!({ "a": ts(&a), "b": ts(&b), "p": ts(&r.p), "q": ts(&r.q), "distinct": r.distinct });
    Ok(if r.distinct { Outcome::ok(body) } else { Outcome::negative(body) })
}
