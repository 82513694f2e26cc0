use crate::algebra::{RationalFunction, Ring};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;

use super::tensor::TensorHeckeElement;

#[derive(Clone, Debug)]
pub struct FunctionalEquationReport {
    pub genus: u8,
    pub degree: usize,
    pub multiplier: TensorHeckeElement,
    /// `(i, holds)` for `s_{D−i} = M^{D/2−i} s_i`, `i = 0..=D/2`.
    pub checks: Vec<(usize, bool)>,
    pub holds: bool,
}

/// `p^{n(n+1)} [p] ⊗ [p]`: `p²[p]⊗[p]` at genus 1 and `p⁶[p]⊗[p]` at genus 2.
pub fn feq_multiplier(genus: u8) -> TensorHeckeElement {
    let b = HeckeElement::bracket_p(genus);
    let n = genus as i32;
    TensorHeckeElement::tensor(&b, &b).scale(&RationalFunction::p_pow(n * (n + 1)))
}

/// Checks `s_{D−i} = (p^{n(n+1)}[p]⊗[p])^{D/2−i} s_i` for the coefficients of `S`.
pub fn check_s_functional_equation(s: &[TensorHeckeElement], genus: u8) -> Result<FunctionalEquationReport> {
    if s.is_empty() || !(s.len() - 1).is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("S of degree {} has no centre", s.len() as i64 - 1)));
    }
    let deg = s.len() - 1;
    let m = feq_multiplier(genus);
    let checks: Vec<(usize, bool)> = (0..=deg / 2)
        .map(|i| {
            let rhs = &Ring::pow(&m, (deg / 2 - i) as u32) * &s[i];
            (i, s[deg - i] == rhs)
        })
        .collect();
    let holds = checks.iter().all(|(_, ok)| *ok);
    Ok(FunctionalEquationReport {
        genus,
        degree: deg,
        multiplier: m,
        checks,
        holds,
    })
}
