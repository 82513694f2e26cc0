//! Local Euler factors as polynomials in `X`.

use crate::algebra::{MultiPoly, RationalFunction, Ring, Var};
use crate::error::{Error, Result};

use super::element::HeckeElement;
use super::satake::SatakeParams;

fn one_minus_x(a: &RationalFunction) -> RationalFunction {
    &RationalFunction::one() - &(a * &RationalFunction::var(Var::X))
}

/// `Q(X) = (1 − α0X) ∏_{∅≠I⊆{1..n}} (1 − α0 α_I X)`, of degree `2^n`.
pub fn spinor_factor(sp: &SatakeParams) -> RationalFunction {
    let n = sp.genus as usize;
    let mut acc = RationalFunction::one();
    for mask in 0u32..(1 << n) {
        let root = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(sp.alphas[0].clone(), |r, i| &r * &sp.alphas[i + 1]);
        acc = &acc * &one_minus_x(&root);
    }
    acc
}

/// `R(X) = (1 − X) ∏ (1 − αi⁻¹X)(1 − αiX)`, of degree `2n + 1`.
///
/// Inverses are taken in the Laurent sense, so every `αi` must be a monomial.
pub fn standard_factor(sp: &SatakeParams) -> Result<RationalFunction> {
    let mut acc = one_minus_x(&RationalFunction::one());
    for a in &sp.alphas[1..] {
        if !a.is_monomial() {
            return Err(Error::NonInvertibleParameter(a.to_string()));
        }
        let inv = a.inverse().map_err(|_| Error::NonInvertibleParameter(a.to_string()))?;
        acc = &acc * &(&one_minus_x(a) * &one_minus_x(&inv));
    }
    Ok(acc)
}

/// Cleared form of the standard factor: `((∏αi)·R(X), ∏αi)`, where
/// `(∏αi)·R(X) = (1 − X) ∏ (αi − X)(1 − αiX)` needs no inverses.
pub fn standard_factor_cleared(sp: &SatakeParams) -> Result<(RationalFunction, RationalFunction)> {
    let xv = RationalFunction::var(Var::X);
    let mut acc = one_minus_x(&RationalFunction::one());
    let mut prod = RationalFunction::one();
    for a in &sp.alphas[1..] {
        if a.is_zero() {
            return Err(Error::NonInvertibleParameter("0".into()));
        }
        acc = &acc * &(&(a - &xv) * &one_minus_x(a));
        prod = &prod * a;
    }
    Ok((acc, prod))
}

/// `∏_{i,j,l ∈ {1,2}} (1 − a1[i] a2[j] a3[l] X)`, of degree 8.
pub fn triple_factor(pairs: &[(RationalFunction, RationalFunction); 3]) -> RationalFunction {
    let pick = |pr: &(RationalFunction, RationalFunction), b: usize| if b == 0 { pr.0.clone() } else { pr.1.clone() };
    let mut acc = RationalFunction::one();
    for mask in 0..8usize {
        let root = &(&pick(&pairs[0], mask & 1) * &pick(&pairs[1], mask >> 1 & 1)) * &pick(&pairs[2], mask >> 2 & 1);
        acc = &acc * &one_minus_x(&root);
    }
    acc
}

/// X-degree of a polynomial-in-X rational function (numerator degree when the
/// denominator is free of `X`).
pub fn x_degree(f: &RationalFunction) -> Option<u16> {
    if f.denom().uses(Var::X) {
        return None;
    }
    f.numer().degree_in(Var::X)
}

/// Constant term in `X`.
pub fn x_constant_term(f: &RationalFunction) -> RationalFunction {
    f.specialize(Var::X, &crate::algebra::ExactRational::zero())
        .expect("denominator free of X")
}

/// Coefficients in `X` of a polynomial-in-X rational function.
pub fn x_coeffs(f: &RationalFunction) -> Vec<RationalFunction> {
    f.numer()
        .coeffs_in(Var::X)
        .into_iter()
        .map(|c| RationalFunction::new(c, f.denom().clone()).expect("nonzero denominator"))
        .collect()
}

/// Andrianov's polynomial `E(X)` at genus 3, as coefficients of `X⁰ … X⁶`.
pub fn andrianov_e3() -> Vec<HeckeElement> {
    let g = 3;
    let p = |e: i32| RationalFunction::p_pow(e);
    let t = HeckeElement::t(g);
    let t2 = HeckeElement::ti(g, 2);
    let b = HeckeElement::bracket_p(g);
    // (p² − p + 1)(p² + p + 1) = p⁴ + p² + 1
    let c = &(&p(4) + &p(2)) + &RationalFunction::one();
    let inner = &t2 + &b.scale(&c);
    let mut e = vec![HeckeElement::zero(); 7];
    e[0] = HeckeElement::one().with_genus(g).expect("scalar");
    e[2] = -&inner.scale(&p(2));
    e[3] = (&t * &b).scale(&(&p(4) * &(&p(1) + &RationalFunction::one())));
    e[4] = -&(&b * &inner).scale(&p(7));
    e[6] = Ring::pow(&b, 3).scale(&p(15));
    for c in &mut e {
        if c.genus() == 0 {
            *c = c.with_genus(g).expect("scalar");
        }
    }
    e
}

/// Polynomial in `X` from a coefficient list.
pub fn poly_in_x(coeffs: &[MultiPoly]) -> MultiPoly {
    MultiPoly::from_coeffs_in(Var::X, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TruncatedSeries;

    #[test]
    fn spinor_degrees_and_constant_terms() {
        for n in 1..=3u8 {
            let q = spinor_factor(&SatakeParams::symbolic(n));
            assert_eq!(x_degree(&q), Some(1 << n));
            assert!(x_constant_term(&q) == RationalFunction::one());
        }
    }

    #[test]
    fn spinor_genus1_explicit() {
        let q = spinor_factor(&SatakeParams::symbolic(1));
        let a0 = RationalFunction::var(Var::X0);
        let a1 = RationalFunction::var(Var::X1);
        assert_eq!(q, &one_minus_x(&a0) * &one_minus_x(&(&a0 * &a1)));
    }

    #[test]
    fn standard_factor_forms() {
        for n in 1..=3u8 {
            let sp = SatakeParams::symbolic(n);
            let r = standard_factor(&sp).unwrap();
            let (cleared, prod) = standard_factor_cleared(&sp).unwrap();
            assert_eq!(&r * &prod, cleared);
            assert_eq!(x_degree(&cleared), Some(2 * n as u16 + 1));
            assert_eq!(x_coeffs(&r).len(), 2 * n as usize + 2);
        }
        let ones = SatakeParams::new(2, vec![RationalFunction::one(); 3], None).unwrap();
        let r = standard_factor(&ones).unwrap();
        assert_eq!(r, Ring::pow(&one_minus_x(&RationalFunction::one()), 5));
        let bad = SatakeParams::new(1, vec![RationalFunction::one(), RationalFunction::int(0)], None).unwrap();
        assert!(matches!(standard_factor(&bad), Err(Error::NonInvertibleParameter(_))));
        let sum = SatakeParams::new(
            1,
            vec![RationalFunction::one(), &RationalFunction::var(Var::X1) + &RationalFunction::one()],
            None,
        )
        .unwrap();
        assert!(matches!(standard_factor(&sum), Err(Error::NonInvertibleParameter(_))));
    }

    #[test]
    fn triple_factor_top_coefficient() {
        let v = |i: usize| RationalFunction::var(Var::x(i));
        let w = |i: usize| RationalFunction::var(Var::y(i));
        let pairs = [(v(0), w(0)), (v(1), w(1)), (v(2), w(2))];
        let f = triple_factor(&pairs);
        assert_eq!(x_degree(&f), Some(8));
        let q = (0..3).fold(RationalFunction::one(), |acc, j| &acc * &(&v(j) * &w(j)));
        assert_eq!(x_coeffs(&f)[8], Ring::pow(&q, 4));
        let ones = (RationalFunction::one(), RationalFunction::one());
        let g = triple_factor(&[ones.clone(), ones.clone(), ones]);
        assert_eq!(g, Ring::pow(&one_minus_x(&RationalFunction::one()), 8));
    }

    #[test]
    fn e3_anchor_coefficients() {
        let e = andrianov_e3();
        assert_eq!(e.len(), 7);
        assert_eq!(e[0], HeckeElement::one());
        assert!(e[1].is_zero() && e[5].is_zero());
        let b = HeckeElement::bracket_p(3);
        let x3 = (&HeckeElement::t(3) * &b).scale(&(&RationalFunction::p_pow(5) + &RationalFunction::p_pow(4)));
        assert_eq!(e[3], x3);
        assert_eq!(e[6], Ring::pow(&b, 3).scale(&RationalFunction::p_pow(15)));
    }

    #[test]
    fn e3_inverse_second_coefficient() {
        let inv = TruncatedSeries::new(andrianov_e3(), 4).invert().unwrap();
        let c = &(&RationalFunction::p_pow(4) + &RationalFunction::p_pow(2)) + &RationalFunction::one();
        let expect = (&HeckeElement::ti(3, 2) + &HeckeElement::bracket_p(3).scale(&c)).scale(&RationalFunction::p_pow(2));
        assert_eq!(inv.coeff(2), &expect);
        assert!(inv.coeff(1).is_zero());
    }
}
