//! One end-to-end run of the Rankin pipeline with a named list of checks.

use std::time::Instant;

use serde_json::{json, Value};

use crate::algebra::json::{poly_to_json, ratfun_to_json};
use crate::algebra::{product, MultiPoly, RationalFunction, Var};
use crate::error::{Error, Result};
use crate::hecke::omega::{closed_form_single_series, omega_tp_delta_on, Side};

use super::feq::{check_s_functional_equation, FunctionalEquationReport};
use super::newton::{newton_polygon_tensor, NewtonPolygon};
use super::operator::genus1_operator_form_check;
use super::reconstruct::reconstruct_series;
use super::series::{combine_extract, series_oracle, tensor_partial_fractions, RankinDecomposition};
use super::tensor::TensorHeckeElement;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: &str, passed: bool, detail: Value) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RankinOptions {
    pub genus: u8,
    /// Truncation order of the series oracle; `δ ≤ order − 2` is compared.
    pub order: u16,
    pub reconstruct: bool,
    pub check_feq: bool,
}

impl RankinOptions {
    pub fn new(genus: u8) -> Self {
        RankinOptions {
            genus,
            order: 8,
            reconstruct: false,
            check_feq: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RankinRun {
    pub genus: u8,
    pub decomposition: RankinDecomposition,
    pub partial_fraction_count: usize,
    pub r: Option<Vec<TensorHeckeElement>>,
    pub s: Option<Vec<TensorHeckeElement>>,
    pub feq: Option<FunctionalEquationReport>,
    pub newton_r: Option<NewtonPolygon>,
    pub newton_s: Option<NewtonPolygon>,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl RankinRun {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> Value {
        let dec = &self.decomposition;
        let elems = |v: &Option<Vec<TensorHeckeElement>>| {
            v.as_ref()
                .map(|es| Value::Array(es.iter().map(TensorHeckeElement::to_json).collect()))
                .unwrap_or(Value::Null)
        };
        let polygon = |np: &Option<NewtonPolygon>| {
            np.as_ref()
                .map(|np| {
                    json!({
                        "points": np.points,
                        "slopes": np.slope_list().iter().map(|s| s.to_ratio_string()).collect::<Vec<_>>(),
                        "height": np.height(),
                    })
                })
                .unwrap_or(Value::Null)
        };
        json!({
            "genus": self.genus,
            "partial_fractions": self.partial_fraction_count,
            "denominator_factors": dec.denominator_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "quadratic_factor": dec.quadratic_factor.to_string(),
            "r_degree": dec.r_degree(),
            "s_degree": dec.s_degree(),
            "r_xy": ratfun_to_json(&dec.r_xy),
            "s_xy": poly_to_json(&dec.s_xy),
            "r": elems(&self.r),
            "s": elems(&self.s),
            "newton_r": polygon(&self.newton_r),
            "newton_s": polygon(&self.newton_s),
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        })
    }
}

fn xy(i: usize) -> MultiPoly {
    &MultiPoly::var(Var::x(i)) * &MultiPoly::var(Var::y(i))
}

/// `x0 y0 ∏_{i∈I} x_i ∏_{j∈J} y_j` over all subsets `I, J ⊆ {1..n}`.
fn expected_roots(genus: u8) -> Vec<MultiPoly> {
    let n = genus as usize;
    let mut out = Vec::new();
    for a in 0u32..(1 << n) {
        for b in 0u32..(1 << n) {
            let mut m = xy(0);
            for i in 1..=n {
                if a & (1 << (i - 1)) != 0 {
                    m = &m * &MultiPoly::var(Var::x(i));
                }
                if b & (1 << (i - 1)) != 0 {
                    m = &m * &MultiPoly::var(Var::y(i));
                }
            }
            out.push(m);
        }
    }
    out.sort_by_cached_key(|m| m.to_string());
    out
}

/// `x0² y0² ∏ x_i y_i`.
fn quadratic_monomial(genus: u8) -> MultiPoly {
    let mut m = xy(0).pow(2);
    for i in 1..=genus as usize {
        m = &m * &xy(i);
    }
    m
}

fn one_minus_root_x(r: &MultiPoly) -> MultiPoly {
    &MultiPoly::one() - &(r * &MultiPoly::var(Var::X))
}

fn structure_checks(genus: u8, dec: &RankinDecomposition, n_pf: usize, checks: &mut Vec<Check>) {
    let roots = expected_roots(genus);
    let want_factors: Vec<MultiPoly> = roots.iter().map(one_minus_root_x).collect();
    let mut got = dec.denominator_factors.clone();
    got.sort_by_cached_key(|m| m.to_string());
    let mut want_sorted = want_factors.clone();
    want_sorted.sort_by_cached_key(|m| m.to_string());
    checks.push(Check::new(
        "partial_fraction_count",
        n_pf == roots.len(),
        json!({"count": n_pf, "expected": roots.len()}),
    ));
    checks.push(Check::new(
        "denominator_factors",
        got == want_sorted && dec.s_xy == product(&want_factors),
        json!({"count": got.len(), "factors": got.iter().map(|f| f.to_string()).collect::<Vec<_>>()}),
    ));
    let q = &MultiPoly::one() - &(&quadratic_monomial(genus) * &MultiPoly::var_pow(Var::X, 2));
    checks.push(Check::new(
        "quadratic_factor",
        dec.quadratic_factor == q,
        json!(dec.quadratic_factor.to_string()),
    ));
    let r = dec.r_coeffs();
    let deg = dec.r_degree();
    let want_deg = if genus == 1 { 0 } else { 12 };
    checks.push(Check::new(
        "r_degree",
        deg == want_deg,
        json!({"degree": deg, "expected": want_deg}),
    ));
    checks.push(Check::new(
        "s_degree",
        dec.s_degree() as usize == roots.len(),
        json!({"degree": dec.s_degree(), "expected": roots.len()}),
    ));
    checks.push(Check::new(
        "r_constant_term",
        r[0] == RationalFunction::one(),
        json!(r[0].to_string()),
    ));
    if genus == 2 {
        let odd_zero = r.len() > 11 && r[1].is_zero() && r[11].is_zero();
        checks.push(Check::new(
            "r_x1_x11_vanish",
            odd_zero,
            json!({"r1": r.get(1).map(|c| c.to_string()), "r11": r.get(11).map(|c| c.to_string())}),
        ));
        let lead = &RationalFunction::from(quadratic_monomial(2).pow(6)) * &RationalFunction::p_pow(-2);
        checks.push(Check::new(
            "r_leading_term",
            r.last() == Some(&lead),
            json!(r.last().map(|c| c.to_string())),
        ));
    }
}

/// Closed form of the genus-1 series: `(1 − x0²y0²x1y1X²) / ∏(1 − rX)`.
pub fn genus1_closed_form() -> RationalFunction {
    let den = product(&expected_roots(1).iter().map(one_minus_root_x).collect::<Vec<_>>());
    let num = &MultiPoly::one() - &(&quadratic_monomial(1) * &MultiPoly::var_pow(Var::X, 2));
    RationalFunction::new(num, den).expect("nonzero")
}

/// `δ ≤ max_delta` coefficients of the single series against its closed form.
fn single_series_check(genus: u8, max_delta: u16) -> Result<Option<u16>> {
    let closed = closed_form_single_series(genus, max_delta as usize, Side::X)?;
    for d in 0..=max_delta {
        if omega_tp_delta_on(genus, d, Side::X)? != closed[d as usize] {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

pub fn run_rankin(opts: &RankinOptions) -> Result<RankinRun> {
    let genus = opts.genus;
    if !(1..=2).contains(&genus) {
        return Err(Error::UnsupportedGenus(genus));
    }
    if opts.order < 4 {
        return Err(Error::InvalidInput(format!("order {} < 4", opts.order)));
    }
    let start = Instant::now();
    let pf = tensor_partial_fractions(genus)?;
    let dec = combine_extract(genus)?;
    let mut checks = Vec::new();
    structure_checks(genus, &dec, pf.terms.len(), &mut checks);

    if genus == 1 {
        let closed = genus1_closed_form();
        checks.push(Check::new(
            "closed_form",
            dec.as_rational_function() == closed,
            json!(closed.to_string()),
        ));
        let op = genus1_operator_form_check(None)?;
        checks.push(Check::new("operator_form", op.holds, json!(op.denominator_image.to_string())));
    }

    let max_delta = opts.order - 2;
    let single = single_series_check(genus, max_delta)?;
    checks.push(Check::new(
        "single_series_closed_form",
        single.is_none(),
        json!({"max_delta": max_delta, "first_mismatch": single}),
    ));
    let mismatch = series_oracle(&dec, max_delta)?;
    checks.push(Check::new(
        "series_oracle",
        mismatch.is_none(),
        json!({"max_delta": max_delta, "first_mismatch": mismatch}),
    ));

    let mut run = RankinRun {
        genus,
        partial_fraction_count: pf.terms.len(),
        decomposition: dec,
        r: None,
        s: None,
        feq: None,
        newton_r: None,
        newton_s: None,
        checks,
        seconds: 0.0,
    };

    if opts.reconstruct || opts.check_feq {
        let rc = run.decomposition.r_coeffs();
        let sc: Vec<RationalFunction> = run.decomposition.s_coeffs().into_iter().map(Into::into).collect();
        let (r, s) = match (reconstruct_series(&rc, genus), reconstruct_series(&sc, genus)) {
            (Ok(r), Ok(s)) => (r, s),
            (Err(e), _) | (_, Err(e)) => {
                run.checks.push(Check::new("reconstruction", false, json!(e.to_string())));
                run.seconds = start.elapsed().as_secs_f64();
                return Ok(run);
            }
        };
        let integral = r.iter().chain(&s).all(TensorHeckeElement::has_laurent_integral_coeffs);
        run.checks.push(Check::new(
            "reconstruction",
            true,
            json!({"r_terms": r.iter().map(TensorHeckeElement::len).collect::<Vec<_>>(),
                   "s_terms": s.iter().map(TensorHeckeElement::len).collect::<Vec<_>>()}),
        ));
        run.checks.push(Check::new("laurent_integral", integral, Value::Null));

        let w = [0i64; 4];
        let nr = newton_polygon_tensor(&r, &w)?;
        let ns = newton_polygon_tensor(&s, &w)?;
        run.checks.push(Check::new(
            "newton_slopes_integral",
            nr.all_slopes_integral() && ns.all_slopes_integral(),
            json!({"height_r": nr.height(), "height_s": ns.height()}),
        ));
        run.newton_r = Some(nr);
        run.newton_s = Some(ns);

        if opts.check_feq {
            let f = check_s_functional_equation(&s, genus)?;
            run.checks.push(Check::new(
                "functional_equation",
                f.holds,
                json!(f.checks.iter().map(|(i, ok)| json!([i, ok])).collect::<Vec<_>>()),
            ));
            run.feq = Some(f);
        }
        run.r = Some(r);
        run.s = Some(s);
    }
    run.seconds = start.elapsed().as_secs_f64();
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus1_run_passes() {
        let mut o = RankinOptions::new(1);
        o.reconstruct = true;
        o.check_feq = true;
        let run = run_rankin(&o).unwrap();
        assert!(run.passed(), "{:?}", run.failures());
        assert_eq!(run.decomposition.denominator_factors.len(), 4);
        assert_eq!(run.feq.as_ref().unwrap().degree, 4);
    }

    #[test]
    fn rejects_bad_options() {
        assert_eq!(run_rankin(&RankinOptions::new(3)).unwrap_err(), Error::UnsupportedGenus(3));
        let mut o = RankinOptions::new(1);
        o.order = 2;
        assert!(run_rankin(&o).is_err());
    }
}
