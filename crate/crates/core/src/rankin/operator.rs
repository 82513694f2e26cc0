//! The genus-1 Rankin identity in operator form:
//! `Σ T(p^δ)⊗T(p^δ) X^δ = (1 − p²[p]⊗[p]X²) / Q(X)` with
//! `Q = 1 − T⊗T X + (pT²⊗[p] + p[p]⊗T² − 2p²[p]⊗[p])X² − p²T[p]⊗T[p]X³ + p⁴[p]²⊗[p]²X⁴`.

use crate::algebra::{RationalFunction, Ring, Var};
use crate::error::Result;
use crate::hecke::omega::Normalization;
use crate::hecke::HeckeElement;

use super::series::tensor_series_genus1;
use super::tensor::TensorHeckeElement;

fn tt(a: &HeckeElement, b: &HeckeElement) -> TensorHeckeElement {
    TensorHeckeElement::tensor(a, b)
}

/// Coefficients of `Q(X)`.
pub fn genus1_operator_denominator() -> Vec<TensorHeckeElement> {
    let t = HeckeElement::t(1);
    let b = HeckeElement::bracket_p(1);
    let p = RationalFunction::p_pow;
    let t2 = &t * &t;
    let tb = &t * &b;
    let x2 = &(&tt(&t2, &b).scale(&p(1)) + &tt(&b, &t2).scale(&p(1)))
        - &tt(&b, &b).scale(&(&RationalFunction::int(2) * &p(2)));
    vec![
        TensorHeckeElement::one().with_genus(1).expect("scalar"),
        -&tt(&t, &t),
        x2,
        -&tt(&tb, &tb).scale(&p(2)),
        tt(&Ring::pow(&b, 2), &Ring::pow(&b, 2)).scale(&p(4)),
    ]
}

/// Coefficients of the numerator `1 − p²[p]⊗[p]X²`.
pub fn genus1_operator_numerator() -> Vec<TensorHeckeElement> {
    let b = HeckeElement::bracket_p(1);
    vec![
        TensorHeckeElement::one().with_genus(1).expect("scalar"),
        TensorHeckeElement::zero().with_genus(1).expect("scalar"),
        -&tt(&b, &b).scale(&RationalFunction::p_pow(2)),
    ]
}

/// `Σ (Ω⊗Ω)(c_k) X^k`.
pub fn omega_poly_in_x(coeffs: &[TensorHeckeElement]) -> Result<RationalFunction> {
    let xv = RationalFunction::var(Var::X);
    let mut acc = RationalFunction::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let img = c.omega(Normalization::Polynomial)?;
        acc = &acc + &(&img * &Ring::pow(&xv, k as u32));
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct OperatorFormReport {
    pub holds: bool,
    pub numerator_image: RationalFunction,
    pub denominator_image: RationalFunction,
    pub series: RationalFunction,
}

/// Applies `Ω⊗Ω` to the operator display and compares it with the tensor
/// series computed from partial fractions. `perturb` adds a scalar to the
/// given coefficient of `Q` first.
pub fn genus1_operator_form_check(perturb: Option<(usize, RationalFunction)>) -> Result<OperatorFormReport> {
    let mut q = genus1_operator_denominator();
    if let Some((k, c)) = perturb {
        q[k] = &q[k] + &TensorHeckeElement::scalar(c);
    }
    let num = omega_poly_in_x(&genus1_operator_numerator())?;
    let den = omega_poly_in_x(&q)?;
    let series = tensor_series_genus1(4)?.closed_form;
    let holds = &num * &den.inverse()? == series;
    Ok(OperatorFormReport {
        holds,
        numerator_image: num,
        denominator_image: den,
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;

    #[test]
    fn identity_holds_and_perturbation_fails() {
        assert!(genus1_operator_form_check(None).unwrap().holds);
        let bad = genus1_operator_form_check(Some((3, RationalFunction::one()))).unwrap();
        assert!(!bad.holds);
    }

    #[test]
    fn x2_coefficient_image() {
        let img = genus1_operator_denominator()[2].omega(Normalization::Polynomial).unwrap();
        let v = |x: Var| MultiPoly::var(x);
        let one = MultiPoly::one();
        let (x1, y1) = (v(Var::X1), v(Var::Y1));
        let inner = &(&(&(&one + &x1).pow(2) * &y1) + &(&x1 * &(&one + &y1).pow(2))) - &(&MultiPoly::int(2) * &(&x1 * &y1));
        let expect = &(&v(Var::X0) * &v(Var::Y0)).pow(2) * &inner;
        assert_eq!(img, expect.into());
    }
}
