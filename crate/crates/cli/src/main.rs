use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use heckelab::algebra::json::poly_from_json;
use heckelab::algebra::json::poly_to_json;
use heckelab::algebra::{ExactRational, MultiPoly, RationalFunction, Var};
use heckelab::hecke::dirichlet::{dirichlet_from_euler, factorize, is_prime};
use heckelab::hecke::euler::{x_coeffs, x_degree};
use heckelab::hecke::{check_normalization, spinor_factor, standard_factor, triple_factor, SatakeParams};
use heckelab::lifts;
use heckelab::motives::{self, GammaKind};
use heckelab::rankin::newton::{newton_polygon_integers, newton_polygon_polys, NewtonPolygon};
use heckelab::rankin::{run_rankin, RankinOptions};
use heckelab::Error;

#[derive(Parser)]
#[command(name = "heckelab", version, about = "Exact Hecke-algebra and Rankin-series computations")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tensor generating series, R and S, reconstruction and functional equation.
    Rankin(RankinArgs),
    /// Spinor, standard and triple Euler factors.
    Euler(EulerArgs),
    /// Hodge types and the lifting check.
    Hodge(HodgeArgs),
    /// Gamma shifts and critical values.
    Gamma(GammaArgs),
    /// Ikeda, Eisenstein and Hecke-quadratic checks.
    Lift(LiftArgs),
    /// The p-adic Eisenstein family.
    Family(FamilyArgs),
    /// Dirichlet coefficients from Euler factors.
    Dirichlet(DirichletArgs),
    /// Newton polygon of a coefficient list.
    Newton(NewtonArgs),
}

#[derive(Args)]
struct RankinArgs {
    #[arg(long, default_value_t = 1)]
    genus: u8,
    /// Truncation order; the series oracle runs up to order − 2.
    #[arg(long, default_value_t = 8)]
    order: u16,
    #[arg(long)]
    reconstruct: bool,
    #[arg(long)]
    check_feq: bool,
    /// Write the Newton polygon of S as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EulerType {
    Spinor,
    Standard,
    Triple,
}

#[derive(Args)]
struct EulerArgs {
    #[arg(long = "type", value_enum)]
    kind: EulerType,
    #[arg(long, default_value_t = 1)]
    genus: u8,
    /// Use Siegel-Eisenstein parameters of this weight instead of symbols.
    #[arg(long)]
    weight: Option<i64>,
}

#[derive(Args)]
struct HodgeArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    weight: i64,
    /// Tensor with the spinor type of this weight.
    #[arg(long)]
    tensor: Option<i64>,
    /// Run the lifting check for this m.
    #[arg(long)]
    check_lift: Option<u32>,
    #[arg(long)]
    standard: bool,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(long)]
    kind: String,
    #[arg(long, value_delimiter = ',', required = true)]
    weights: Vec<i64>,
    /// Also run the numeric gamma table with this many sample points.
    #[arg(long)]
    numeric: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftCheck {
    IkedaStandard,
    Eisenstein,
    Quadratic,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long, value_enum)]
    check: LiftCheck,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long)]
    weight: i64,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, value_delimiter = ',', required_unless_present = "quadratic")]
    weights: Vec<u32>,
    #[arg(long, default_value_t = 20)]
    bound: u64,
    /// Check the congruence modulo p^m between the two weights.
    #[arg(long)]
    kummer: Option<u32>,
    /// Slope of 1 − aX + bX², given as `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    quadratic: Option<String>,
    /// Write the (n, k, a_n(k)) table here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct DirichletArgs {
    /// JSON object mapping primes to Euler polynomials in X.
    #[arg(long)]
    factors: PathBuf,
    #[arg(long, default_value_t = 100)]
    bound: u64,
}

#[derive(Args)]
struct NewtonArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

struct Outcome {
    artifacts: Vec<String>,
    checks: Vec<(String, bool, Value)>,
    details: Value,
}

impl Outcome {
    fn new(details: Value) -> Self {
        Outcome {
            artifacts: Vec::new(),
            checks: Vec::new(),
            details,
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: Value) {
        self.checks.push((name.to_string(), ok, detail));
    }

    fn status(&self) -> Status {
        if self.checks.iter().all(|c| c.1) {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

type CliResult<T> = Result<T, String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn write_artifact(path: &Path, contents: &str, out: &mut Outcome) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    out.artifacts.push(path.display().to_string());
    Ok(())
}

fn polygon_json(np: &NewtonPolygon) -> Value {
    json!({
        "points": np.points,
        "vertices": np.vertices,
        "slopes": np.slope_list().iter().map(ExactRational::to_ratio_string).collect::<Vec<_>>(),
        "height": np.height(),
        "integral": np.all_slopes_integral(),
    })
}

fn rankin(a: &RankinArgs) -> CliResult<Outcome> {
    let opts = RankinOptions {
        genus: a.genus,
        order: a.order,
        reconstruct: a.reconstruct || a.svg.is_some(),
        check_feq: a.check_feq,
    };
    let run = run_rankin(&opts).map_err(err)?;
    let mut out = Outcome::new(run.to_json());
    for c in &run.checks {
        out.check(&c.name, c.passed, c.detail.clone());
    }
    if let (Some(path), Some(ns)) = (&a.svg, &run.newton_s) {
        write_artifact(path, &ns.to_svg(), &mut out)?;
    }
    Ok(out)
}

fn symbolic_triple() -> [(RationalFunction, RationalFunction); 3] {
    let v = |x: Var| RationalFunction::var(x);
    [(v(Var::X0), v(Var::X1)), (v(Var::Y0), v(Var::Y1)), (v(Var::X2), v(Var::Y2))]
}

fn euler(a: &EulerArgs) -> CliResult<Outcome> {
    let n = a.genus;
    if n == 0 {
        return Err("genus must be positive".into());
    }
    if a.weight.is_none() && n > 3 {
        return Err(format!("symbolic parameters exist up to genus 3, got {n}"));
    }
    if a.weight.is_some() && n > 8 {
        return Err(format!("genus {n} is too large"));
    }
    let sp = match a.weight {
        Some(k) => SatakeParams::eisenstein(n, k),
        None => SatakeParams::symbolic(n),
    };
    let (factor, expected) = match a.kind {
        EulerType::Spinor => (spinor_factor(&sp), 1u16 << n),
        EulerType::Standard => (standard_factor(&sp).map_err(err)?, 2 * n as u16 + 1),
        EulerType::Triple => {
            let pairs = match a.weight {
                Some(k) => {
                    let e = SatakeParams::eisenstein(1, k);
                    let pair = (e.alpha(0).clone(), e.alpha(0) * e.alpha(1));
                    [pair.clone(), pair.clone(), pair]
                }
                None => symbolic_triple(),
            };
            (triple_factor(&pairs), 8)
        }
    };
    let degree = x_degree(&factor);
    let mut out = Outcome::new(json!({
        "type": match a.kind { EulerType::Spinor => "spinor", EulerType::Standard => "standard", EulerType::Triple => "triple" },
        "genus": n,
        "weight": a.weight,
        "parameters": sp.alphas.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "factor": factor.to_string(),
        "coefficients": x_coeffs(&factor).iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "degree": degree,
    }));
    out.check("degree", degree == Some(expected), json!({"degree": degree, "expected": expected}));
    if a.weight.is_some() {
        let r = check_normalization(&sp).map_err(err)?;
        out.check(
            "normalization",
            r.holds,
            json!({"lhs": r.lhs.to_string(), "rhs": r.rhs.to_string()}),
        );
    }
    Ok(out)
}

fn hodge(a: &HodgeArgs) -> CliResult<Outcome> {
    let spin = motives::hodge_spin(a.genus, a.weight).map_err(err)?;
    let mut details = json!({ "genus": a.genus, "weight": a.weight, "spin": spin.to_json() });
    let mut checks = vec![("spin_symmetric".to_string(), spin.is_symmetric(), Value::Null)];
    if a.standard {
        details["standard"] = motives::hodge_standard(a.genus, a.weight).to_json();
    }
    if let Some(l) = a.tensor {
        let other = motives::hodge_spin(a.genus, l).map_err(err)?;
        details["tensor"] = motives::hodge_tensor(&spin, &other).to_json();
    }
    if let Some(m) = a.check_lift {
        let r = motives::check_lift_hodge(m, a.weight).map_err(err)?;
        checks.push((
            "lift_hodge".to_string(),
            r.holds,
            json!({"m": r.m, "k": r.k, "l": r.l, "rank": r.rank, "first_mismatch": r.first_mismatch}),
        ));
    }
    let mut out = Outcome::new(details);
    out.checks = checks;
    Ok(out)
}

fn gamma(a: &GammaArgs) -> CliResult<Outcome> {
    let kind: GammaKind = a.kind.parse().map_err(err)?;
    let g = motives::gamma_data(kind, &a.weights).map_err(err)?;
    let crit = motives::critical_values(&g);
    let mut details = g.to_json();
    details["critical_values"] = json!(crit);
    let mut out = Outcome::new(details);
    let symmetric = crit.iter().all(|s| crit.contains(&(g.center - s)));
    out.check("critical_symmetry", symmetric, Value::Null);
    if let Some(samples) = a.numeric {
        let table = motives::numeric_checks(samples).map_err(err)?;
        for c in &table {
            out.check(&c.name, c.passed, json!({"rel_error": c.rel_error, "tolerance": c.tolerance}));
        }
    }
    Ok(out)
}

fn lift(a: &LiftArgs) -> CliResult<Outcome> {
    match a.check {
        LiftCheck::IkedaStandard => {
            if a.n == 0 || a.n > 4 {
                return Err(format!("n = {} out of range 1..=4", a.n));
            }
            let params = lifts::ikeda_satake(a.n, a.weight);
            let r = lifts::verify_ikeda_standard_params(&params).map_err(err)?;
            let mut out = Outcome::new(json!({
                "parameters": params.to_json(),
                "degree_lhs": r.degree_lhs,
                "degree_rhs": r.degree_rhs,
                "first_mismatch": r.first_mismatch,
                "caveat": r.caveat,
            }));
            out.check("parameter_invariants", params.invariants_hold(), Value::Null);
            out.check(
                "standard_factorization",
                r.holds,
                json!({"first_mismatching_power": r.first_mismatch}),
            );
            out.check("miyawaki_form", r.miyawaki_holds, Value::Null);
            out.check(
                "family_substitution",
                lifts::family_substitution_consistent(a.n, a.weight),
                Value::Null,
            );
            Ok(out)
        }
        LiftCheck::Eisenstein => {
            let r = lifts::eisenstein_lift_evidence(a.n, a.weight).map_err(err)?;
            let mut out = Outcome::new(r.to_json());
            out.check("gamma_multiset", r.holds, json!(r.gamma_exponents));
            Ok(out)
        }
        LiftCheck::Quadratic => {
            let r = lifts::hecke_quadratic_check(a.weight);
            let mut out = Outcome::new(json!({
                "k": r.k,
                "a_p": r.x1_coeff.to_string(),
                "x2_coefficient": r.x2_coeff.to_string(),
            }));
            out.check("quadratic_identity", r.holds, Value::Null);
            out.check("unit_case", r.unit_case_holds, Value::Null);
            Ok(out)
        }
    }
}

fn parse_pair(s: &str) -> CliResult<(BigInt, BigInt)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("expected `a,b`, got {s:?}"));
    }
    let p = |t: &str| t.parse::<BigInt>().map_err(|e| format!("bad integer {t:?}: {e}"));
    Ok((p(parts[0])?, p(parts[1])?))
}

fn family(a: &FamilyArgs) -> CliResult<Outcome> {
    let rows = lifts::eisenstein_family_table(a.bound, &a.weights, a.p).map_err(err)?;
    let mut csv = String::from("n,k,a_n\n");
    for (n, k, c) in &rows {
        writeln!(csv, "{n},{k},{c}").unwrap();
    }
    let mut slopes = Vec::new();
    for &k in &a.weights {
        // 1 − (1 + p^{k−1})X + p^{k−1}X²
        let b = BigInt::from(a.p).pow(k - 1);
        let s = lifts::slope_quadratic(&(&b + 1), &b, a.p).map_err(err)?;
        slopes.push(json!({"k": k, "slope": s.to_ratio_string()}));
    }
    let mut details = json!({ "p": a.p, "weights": a.weights, "bound": a.bound, "eisenstein_slopes": slopes });
    let mut out = Outcome::new(Value::Null);
    match &a.csv {
        Some(path) => write_artifact(path, &csv, &mut out)?,
        None => details["table"] = json!(rows.iter().map(|(n, k, c)| json!([n, k, c.to_string()])).collect::<Vec<_>>()),
    }
    if let Some(m) = a.kummer {
        if a.weights.len() != 2 {
            return Err("--kummer needs exactly two weights".into());
        }
        let r = lifts::kummer_check(a.bound, a.weights[0], a.weights[1], a.p, m).map_err(err)?;
        out.check("kummer_congruence", r.holds, r.to_json());
    }
    if let Some(q) = &a.quadratic {
        let (qa, qb) = parse_pair(q)?;
        let s = lifts::slope_quadratic(&qa, &qb, a.p).map_err(err)?;
        details["quadratic_slope"] = json!({"a": qa.to_string(), "b": qb.to_string(), "slope": s.to_ratio_string()});
    }
    out.details = details;
    Ok(out)
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: invalid JSON: {e}", path.display()))
}

fn dirichlet(a: &DirichletArgs) -> CliResult<Outcome> {
    let v = read_json(&a.factors)?;
    let obj = v.as_object().ok_or("factors file must be a JSON object")?;
    let mut factors = BTreeMap::new();
    for (k, f) in obj {
        let p: u64 = k.parse().map_err(|_| format!("key {k:?} is not an integer"))?;
        if !is_prime(p) {
            return Err(format!("key {p} is not prime"));
        }
        let poly = poly_from_json(f).map_err(err)?;
        if !poly.only_uses(&[Var::P, Var::U, Var::X0, Var::X1, Var::X2, Var::X3, Var::X]) {
            return Err(format!("factor at {p} uses unsupported variables"));
        }
        factors.insert(p, poly);
    }
    let d = dirichlet_from_euler(&factors, a.bound).map_err(err)?;
    let mut failures = Vec::new();
    for h1 in 2..=a.bound {
        for h2 in h1 + 1..=a.bound / h1 {
            if factorize(h1).iter().any(|(q, _)| h2 % q == 0) {
                continue;
            }
            if d.get(h1 * h2) != &(d.get(h1) * d.get(h2)) {
                failures.push([h1, h2]);
            }
        }
    }
    let mut out = Outcome::new(json!({
        "bound": a.bound,
        "coefficients": d.coeffs.iter().map(|(h, c)| (h.to_string(), poly_to_json(c))).collect::<serde_json::Map<_, _>>(),
    }));
    out.check("multiplicativity", failures.is_empty(), json!({"failures": failures}));
    Ok(out)
}

fn newton(a: &NewtonArgs) -> CliResult<Outcome> {
    let v = read_json(&a.input)?;
    let np = if let Some(pts) = v.get("points") {
        let pts: Vec<(i64, i64)> =
            serde_json::from_value(pts.clone()).map_err(|e| format!("points must be [[degree, valuation], …]: {e}"))?;
        NewtonPolygon::from_points(&pts).map_err(err)?
    } else if let Some(cs) = v.get("coeffs").and_then(Value::as_array) {
        match v.get("p").and_then(Value::as_u64) {
            Some(p) => {
                let ints: Vec<BigInt> = cs
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => s.parse::<BigInt>().map_err(|e| format!("bad integer {s:?}: {e}")),
                        Value::Number(n) => n
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| format!("bad integer {n}")),
                        _ => Err(format!("coefficient {c} is not an integer")),
                    })
                    .collect::<CliResult<_>>()?;
                newton_polygon_integers(&ints, p).map_err(err)?
            }
            None => {
                let polys: Vec<MultiPoly> = cs.iter().map(poly_from_json).collect::<Result<_, _>>().map_err(err)?;
                newton_polygon_polys(&polys).map_err(err)?
            }
        }
    } else {
        return Err("input needs `points` or `coeffs`".into());
    };
    let mut out = Outcome::new(polygon_json(&np));
    if let Some(path) = &a.svg {
        write_artifact(path, &np.to_svg(), &mut out)?;
    }
    if let Some(path) = &a.csv {
        write_artifact(path, &np.to_csv(), &mut out)?;
    }
    Ok(out)
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Rankin(_) => "rankin",
        Cmd::Euler(_) => "euler",
        Cmd::Hodge(_) => "hodge",
        Cmd::Gamma(_) => "gamma",
        Cmd::Lift(_) => "lift",
        Cmd::Family(_) => "family",
        Cmd::Dirichlet(_) => "dirichlet",
        Cmd::Newton(_) => "newton",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = heckelab::configure_threads() {
        eprintln!("{e}");
        return ExitCode::from(2);
    }
    let name = command_name(&cli.cmd);
    let result = match &cli.cmd {
        Cmd::Rankin(a) => rankin(a),
        Cmd::Euler(a) => euler(a),
        Cmd::Hodge(a) => hodge(a),
        Cmd::Gamma(a) => gamma(a),
        Cmd::Lift(a) => lift(a),
        Cmd::Family(a) => family(a),
        Cmd::Dirichlet(a) => dirichlet(a),
        Cmd::Newton(a) => newton(a),
    };
    let (status, report) = match result {
        Ok(out) => {
            let status = out.status();
            for (n, _, d) in out.checks.iter().filter(|c| !c.1) {
                eprintln!("verification failed: {n}: {d}");
            }
            let checks: Vec<Value> =
                out.checks.iter().map(|(n, ok, d)| json!({"name": n, "passed": ok, "detail": d})).collect();
            let mut details = out.details;
            if let Value::Object(m) = &mut details {
                m.entry("checks").or_insert(Value::Array(checks));
            }
            (
                status,
                json!({"command": name, "status": status.name(), "artifacts": out.artifacts, "details": details}),
            )
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            (
                Status::Error,
                json!({"command": name, "status": "error", "artifacts": [], "details": {"error": msg}}),
            )
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(status.code())
}
