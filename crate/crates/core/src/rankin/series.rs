//! The tensor generating series `Σ Ω_x(T(p^δ)) Ω_y(T(p^δ)) X^δ`, its
//! partial-fraction form and the extraction of `R_{x,y}` and `S_{x,y}`.

use rayon::prelude::*;

use crate::algebra::{one_minus, MultiPoly, RationalFunction, TruncatedSeries, Var};
use crate::error::{Error, Result};
use crate::hecke::omega::{omega_tp_delta_on, Side};

/// `Ω(T(p^δ)) = x0^δ · Σ_j c_j r_j^δ / (p^e · D)`, with `D` free of `p`.
#[derive(Clone, Debug)]
pub struct GeometricComponents {
    pub coeffs: Vec<MultiPoly>,
    pub ratios: Vec<MultiPoly>,
    pub den: MultiPoly,
    pub p_exp: u16,
}

/// Splits `Ω(T(p^δ))` into geometric progressions in `δ`.
///
/// Genus 1: `x0^δ(1 − x1^{δ+1})/(1 − x1)`. Genus 2: the four-term compact
/// form, with ratios `1, x1, x2, x1x2`.
pub fn geometric_components(genus: u8, side: Side) -> Result<GeometricComponents> {
    let one = MultiPoly::one();
    let x = |i| MultiPoly::var(side.var(i));
    match genus {
        1 => Ok(GeometricComponents {
            coeffs: vec![one.clone(), -&x(1)],
            ratios: vec![one.clone(), x(1)],
            den: &one - &x(1),
            p_exp: 0,
        }),
        2 => {
            let p = MultiPoly::var(Var::P);
            let (x1, x2) = (x(1), x(2));
            let x12 = &x1 * &x2;
            let d12 = &x1 - &x2;
            let a = &(&one - &x12) * &(&(&p * &x1) - &x2);
            let b = &(&one - &x12) * &(&x1 - &(&p * &x2));
            let c = &(&one - &(&p * &x12)) * &d12;
            let e = &(&p - &x12) * &d12;
            Ok(GeometricComponents {
                coeffs: vec![e, -&(&a * &x1), -&(&b * &x2), &c * &x12],
                ratios: vec![one.clone(), x1.clone(), x2.clone(), x12.clone()],
                den: crate::hecke::omega::compact_denominator(side),
                p_exp: 1,
            })
        }
        g => Err(Error::UnsupportedGenus(g)),
    }
}

/// One term `coeff / (common · (1 − root·X))` of the tensor series.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFraction {
    pub coeff: MultiPoly,
    pub root: MultiPoly,
}

/// The partial-fraction terms together with their shared X-free denominator
/// `p^{p_exp} · common`.
#[derive(Clone, Debug)]
pub struct PartialFractionSum {
    pub genus: u8,
    pub terms: Vec<PartialFraction>,
    pub common: MultiPoly,
    pub p_exp: u16,
}

impl PartialFractionSum {
    pub fn term(&self, i: usize) -> RationalFunction {
        let t = &self.terms[i];
        let den = &(&self.common * &MultiPoly::var_pow(Var::P, self.p_exp)) * &one_minus(&(&t.root * &MultiPoly::var(Var::X)));
        RationalFunction::new(t.coeff.clone(), den).expect("nonzero denominator")
    }

    pub fn as_rational_functions(&self) -> Vec<RationalFunction> {
        (0..self.terms.len()).map(|i| self.term(i)).collect()
    }

    /// `1 − root·X` for every term.
    pub fn denominator_factors(&self) -> Vec<MultiPoly> {
        let xv = MultiPoly::var(Var::X);
        self.terms.iter().map(|t| one_minus(&(&t.root * &xv))).collect()
    }

    /// Value of the sum at `X = 0`.
    pub fn value_at_zero(&self) -> Result<RationalFunction> {
        let s = self.terms.iter().fold(MultiPoly::zero(), |acc, t| &acc + &t.coeff);
        RationalFunction::new(s, &self.common * &MultiPoly::var_pow(Var::P, self.p_exp))
    }
}

/// Builds the `4^n` partial-fraction terms of `Σ_δ Ω_x(T(p^δ))Ω_y(T(p^δ))X^δ`
/// by multiplying the x- and y-progressions and summing each over `δ`.
pub fn tensor_partial_fractions(genus: u8) -> Result<PartialFractionSum> {
    let gx = geometric_components(genus, Side::X)?;
    let gy = geometric_components(genus, Side::Y)?;
    let x0y0 = &MultiPoly::var(Var::X0) * &MultiPoly::var(Var::Y0);
    let mut terms = Vec::new();
    for (cx, rx) in gx.coeffs.iter().zip(&gx.ratios) {
        for (cy, ry) in gy.coeffs.iter().zip(&gy.ratios) {
            terms.push(PartialFraction {
                coeff: cx * cy,
                root: &(&x0y0 * rx) * ry,
            });
        }
    }
    Ok(PartialFractionSum {
        genus,
        terms,
        common: &gx.den * &gy.den,
        p_exp: gx.p_exp + gy.p_exp,
    })
}

pub fn tensor_partial_fractions_genus2() -> Result<Vec<RationalFunction>> {
    Ok(tensor_partial_fractions(2)?.as_rational_functions())
}

/// `(Ω⊗Ω)(D_p(X)) = quadratic · R_{x,y}(X) / S_{x,y}(X)`.
#[derive(Clone, Debug)]
pub struct RankinDecomposition {
    pub genus: u8,
    pub denominator_factors: Vec<MultiPoly>,
    pub quadratic_factor: MultiPoly,
    /// `R_{x,y}` with its `p`-power denominator.
    pub r_xy: RationalFunction,
    pub s_xy: MultiPoly,
}

impl RankinDecomposition {
    pub fn r_degree(&self) -> u16 {
        self.r_xy.numer().degree_in(Var::X).unwrap_or(0)
    }

    pub fn s_degree(&self) -> u16 {
        self.s_xy.degree_in(Var::X).unwrap_or(0)
    }

    pub fn r_coeffs(&self) -> Vec<RationalFunction> {
        let den = self.r_xy.denom().clone();
        self.r_xy
            .numer()
            .coeffs_in(Var::X)
            .into_iter()
            .map(|c| RationalFunction::new(c, den.clone()).expect("nonzero"))
            .collect()
    }

    pub fn s_coeffs(&self) -> Vec<MultiPoly> {
        self.s_xy.coeffs_in(Var::X)
    }

    pub fn as_rational_function(&self) -> RationalFunction {
        let num = &RationalFunction::from(self.quadratic_factor.clone()) * &self.r_xy;
        &num * &RationalFunction::new(MultiPoly::one(), self.s_xy.clone()).expect("nonzero")
    }

    /// Series coefficients `0..=order` of the rational form.
    pub fn expand(&self, order: usize) -> Result<Vec<RationalFunction>> {
        let inv_s = TruncatedSeries::from_poly_in_x(&self.s_xy, order).invert()?;
        let num = TruncatedSeries::from_poly_in_x(&(&self.quadratic_factor * self.r_xy.numer()), order);
        let den = self.r_xy.denom();
        Ok(num
            .mul(&inv_s)
            .into_coeffs()
            .into_iter()
            .map(|c| RationalFunction::new(c, den.clone()).expect("nonzero"))
            .collect())
    }
}

/// `f/(1 − rX)` by synthetic division on X-coefficients; the remainder must vanish.
fn divide_linear(coeffs: &[MultiPoly], r: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let n = coeffs.len() - 1;
    let mut q: Vec<MultiPoly> = Vec::with_capacity(n);
    for k in 0..n {
        let v = if k == 0 { coeffs[0].clone() } else { &coeffs[k] + &(r * &q[k - 1]) };
        q.push(v);
    }
    if !(&coeffs[n] + &(r * &q[n - 1])).is_zero() {
        return Err(Error::NotDivisible(format!("1 - ({r})*X does not divide")));
    }
    Ok(q)
}

/// `f/(1 − mX²)` by synthetic division on X-coefficients.
fn divide_quadratic(coeffs: &[MultiPoly], m: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let n = coeffs.len() - 1;
    let mut q: Vec<MultiPoly> = Vec::with_capacity(n - 1);
    let step = |k: usize, q: &[MultiPoly]| {
        if k < 2 {
            coeffs[k].clone()
        } else {
            &coeffs[k] + &(m * &q[k - 2])
        }
    };
    for k in 0..n - 1 {
        let v = step(k, &q);
        q.push(v);
    }
    for k in [n - 1, n] {
        if !step(k, &q).is_zero() {
            return Err(Error::NotDivisible(format!("1 - ({m})*X^2 leaves a remainder at X^{k}")));
        }
    }
    Ok(q)
}

/// Sums the partial fractions over the product of their X-denominators,
/// certifies that the X-free denominator cancels, and splits off the
/// quadratic factor `1 − x0²y0²(x1⋯xn)(y1⋯yn)X²`.
pub fn combine_extract(genus: u8) -> Result<RankinDecomposition> {
    let pf = tensor_partial_fractions(genus)?;
    let factors = pf.denominator_factors();
    let s_xy = factors.iter().fold(MultiPoly::one(), |acc, f| &acc * f);
    let s_coeffs = s_xy.coeffs_in(Var::X);

    let quotients: Vec<Vec<MultiPoly>> = pf
        .terms
        .par_iter()
        .map(|t| divide_linear(&s_coeffs, &t.root))
        .collect::<Result<_>>()?;
    let deg = s_coeffs.len() - 1;
    let num_coeffs: Vec<MultiPoly> = (0..deg)
        .into_par_iter()
        .map(|k| {
            pf.terms
                .iter()
                .zip(&quotients)
                .fold(MultiPoly::zero(), |acc, (t, q)| &acc + &(&t.coeff * &q[k]))
        })
        .collect();

    // the X-free denominator must cancel coefficientwise
    let reduced: Vec<MultiPoly> = num_coeffs
        .par_iter()
        .map(|c| c.exact_divide(&pf.common))
        .collect::<Result<_>>()?;

    let n = genus as usize;
    let mut m = (&MultiPoly::var(Var::X0) * &MultiPoly::var(Var::Y0)).pow(2);
    for i in 1..=n {
        m = &(&m * &MultiPoly::var(Var::x(i))) * &MultiPoly::var(Var::y(i));
    }
    let quadratic_factor = one_minus(&(&m * &MultiPoly::var_pow(Var::X, 2)));
    let mut top = reduced.clone();
    while top.last().is_some_and(MultiPoly::is_zero) {
        top.pop();
    }
    let r = if top.len() <= 2 {
        if top.len() > 1 && !top[1].is_zero() {
            return Err(Error::NotDivisible("quadratic factor".into()));
        }
        top.truncate(1);
        top
    } else {
        divide_quadratic(&top, &m)?
    };
    let r_num = MultiPoly::from_coeffs_in(Var::X, &r);
    let r_xy = RationalFunction::new(r_num, MultiPoly::var_pow(Var::P, pf.p_exp))?;
    Ok(RankinDecomposition {
        genus,
        denominator_factors: factors,
        quadratic_factor,
        r_xy,
        s_xy,
    })
}

pub fn combine_extract_genus2() -> Result<RankinDecomposition> {
    combine_extract(2)
}

/// `Ω_x(T(p^δ)) · Ω_y(T(p^δ))` for `δ = 0..=order`, term by term.
pub fn direct_tensor_coefficients(genus: u8, order: u16) -> Result<Vec<RationalFunction>> {
    (0..=order)
        .into_par_iter()
        .map(|d| {
            let x = omega_tp_delta_on(genus, d, Side::X)?;
            let y = omega_tp_delta_on(genus, d, Side::Y)?;
            Ok(&x * &y)
        })
        .collect()
}

/// Compares the expansion of the rational form with the direct products for
/// `δ ≤ max_delta`; returns the first mismatching `δ`, if any.
pub fn series_oracle(dec: &RankinDecomposition, max_delta: u16) -> Result<Option<u16>> {
    let expanded = dec.expand(max_delta as usize)?;
    let direct = direct_tensor_coefficients(dec.genus, max_delta)?;
    Ok((0..=max_delta).find(|&d| expanded[d as usize] != direct[d as usize]))
}

/// Genus-1 tensor series: the closed form and its first coefficients.
#[derive(Clone, Debug)]
pub struct GenusOneSeries {
    pub closed_form: RationalFunction,
    pub decomposition: RankinDecomposition,
    pub coefficients: Vec<RationalFunction>,
}

/// The genus-1 tensor series through the shared partial-fraction pipeline.
pub fn tensor_series_genus1(order: usize) -> Result<GenusOneSeries> {
    if order < 4 {
        return Err(Error::InvalidInput(format!("order {order} < 4")));
    }
    let dec = combine_extract(1)?;
    let coefficients = dec.expand(order)?;
    Ok(GenusOneSeries {
        closed_form: dec.as_rational_function(),
        decomposition: dec,
        coefficients,
    })
}
