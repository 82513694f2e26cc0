use crate::algebra::{RationalFunction, Ring, Var};
use crate::error::{Error, Result};

/// Satake parameters `(α0, …, αn)`, optionally tagged with a weight.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakeParams {
    pub genus: u8,
    pub alphas: Vec<RationalFunction>,
    pub weight: Option<i64>,
}

/// Result of comparing `α0²α1⋯αn` with `p^{kn − n(n+1)/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizationReport {
    pub holds: bool,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
}

impl SatakeParams {
    pub fn new(genus: u8, alphas: Vec<RationalFunction>, weight: Option<i64>) -> Result<Self> {
        if alphas.len() != genus as usize + 1 {
            return Err(Error::InvalidInput(format!(
                "genus {} needs {} parameters, got {}",
                genus,
                genus + 1,
                alphas.len()
            )));
        }
        Ok(SatakeParams { genus, alphas, weight })
    }

    /// `(x0, …, xn)`.
    pub fn symbolic(genus: u8) -> Self {
        SatakeParams {
            genus,
            alphas: (0..=genus as usize).map(|i| RationalFunction::var(Var::x(i))).collect(),
            weight: None,
        }
    }

    /// Symbolic weight-`k` parameters forced onto the normalization:
    /// `αi = xi²` and `α0 = p^{(kn − n(n+1)/2)/2}/(x1⋯xn)`, with `u` carrying
    /// a half power of `p`.
    pub fn symbolic_normalized(genus: u8, k: i64) -> Self {
        let xs: Vec<RationalFunction> = (1..=genus as usize)
            .map(|i| RationalFunction::var(Var::x(i)))
            .collect();
        let prod = xs.iter().fold(RationalFunction::one(), |a, b| &a * b);
        let half = RationalFunction::p_half_pow(target_exponent(genus, k) as i32);
        let mut alphas = vec![&half * &prod.inverse().expect("nonzero")];
        alphas.extend(xs.iter().map(|x| x * x));
        SatakeParams {
            genus,
            alphas,
            weight: Some(k),
        }
    }

    /// Siegel-Eisenstein parameters: `α0 = 1`, `αi = p^{k−n−1+i}`.
    pub fn eisenstein(genus: u8, k: i64) -> Self {
        let n = genus as i64;
        let mut alphas = vec![RationalFunction::one()];
        alphas.extend((1..=n).map(|i| RationalFunction::p_pow((k - n - 1 + i) as i32)));
        SatakeParams {
            genus,
            alphas,
            weight: Some(k),
        }
    }

    pub fn alpha(&self, i: usize) -> &RationalFunction {
        &self.alphas[i]
    }
}

pub fn target_exponent(genus: u8, k: i64) -> i64 {
    let n = genus as i64;
    k * n - n * (n + 1) / 2
}

/// Checks `α0²α1⋯αn = p^{kn − n(n+1)/2}` exactly.
pub fn check_normalization(sp: &SatakeParams) -> Result<NormalizationReport> {
    let k = sp
        .weight
        .ok_or_else(|| Error::InvalidInput("normalization check needs a weight".into()))?;
    let lhs = sp.alphas[1..]
        .iter()
        .fold(Ring::pow(&sp.alphas[0], 2), |acc, a| &acc * a);
    let e = target_exponent(sp.genus, k);
    let rhs = RationalFunction::p_pow(e as i32);
    Ok(NormalizationReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_is_normalized() {
        for k in 4..12 {
            for g in 1..=3 {
                assert!(check_normalization(&SatakeParams::eisenstein(g, k)).unwrap().holds);
            }
        }
    }

    #[test]
    fn symbolic_forced_normalization() {
        for k in [5, 6, 10] {
            let sp = SatakeParams::symbolic_normalized(2, k);
            assert!(check_normalization(&sp).unwrap().holds, "k={k}");
        }
    }

    #[test]
    fn perturbation_fails() {
        let mut sp = SatakeParams::eisenstein(2, 8);
        sp.alphas[0] = RationalFunction::var(Var::P);
        assert!(!check_normalization(&sp).unwrap().holds);
        assert!(check_normalization(&SatakeParams::symbolic(2)).is_err());
    }
}
