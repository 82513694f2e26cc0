use crate::algebra::RationalFunction;
use crate::error::{Error, Result};
use crate::hecke::SatakeParams;

#[derive(Clone, Debug, PartialEq)]
pub struct EisensteinLiftReport {
    pub m: u32,
    pub k: i64,
    pub gammas: Vec<RationalFunction>,
    /// Exponents of `p` in `γ1, …, γ_{4m}`, sorted.
    pub gamma_exponents: Vec<i64>,
    pub holds: bool,
    pub interpretation: String,
}

impl EisensteinLiftReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "k": self.k,
            "gammas": self.gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "gamma_exponents": self.gamma_exponents,
            "holds": self.holds,
            "interpretation": self.interpretation,
        })
    }
}

fn p_exponent(c: &RationalFunction) -> Option<i64> {
    let v = c.p_valuation()?;
    (c == &RationalFunction::p_pow(v as i32)).then_some(v)
}

/// Builds `γ0 = α0β0`, `γ = (α1, …, α_{2m}, β1, …, β_{2m})` from the Eisenstein
/// parameters of weights `k` and `k − 2m`, and checks `γ0 = 1` and
/// `{γ_i} = {p^{k−4m}, …, p^{k−1}}`.
pub fn eisenstein_lift_evidence(m: u32, k: i64) -> Result<EisensteinLiftReport> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    if k <= 4 * m as i64 {
        return Err(Error::WeightTooSmall(format!("k = {k} must exceed 4m = {}", 4 * m)));
    }
    let g = (2 * m) as u8;
    let alpha = SatakeParams::eisenstein(g, k);
    let beta = SatakeParams::eisenstein(g, k - 2 * m as i64);
    let mut gammas = vec![alpha.alpha(0) * beta.alpha(0)];
    gammas.extend(alpha.alphas[1..].iter().cloned());
    gammas.extend(beta.alphas[1..].iter().cloned());
    let mut exps: Vec<i64> = Vec::with_capacity(4 * m as usize);
    let mut all_powers = true;
    for c in &gammas[1..] {
        match p_exponent(c) {
            Some(e) => exps.push(e),
            None => all_powers = false,
        }
    }
    exps.sort_unstable();
    let expect: Vec<i64> = (k - 4 * m as i64..k).collect();
    let holds = all_powers && gammas[0] == RationalFunction::one() && exps == expect;
    Ok(EisensteinLiftReport {
        m,
        k,
        gammas,
        gamma_exponents: exps,
        holds,
        interpretation: format!(
            "gamma_1..gamma_{} read as the full multiset p^{}..p^{}",
            4 * m,
            k - 4 * m as i64,
            k - 1
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let r = eisenstein_lift_evidence(1, 8).unwrap();
        assert!(r.holds);
        assert_eq!(r.gamma_exponents, vec![4, 5, 6, 7]);
        assert_eq!(r.gammas[0], RationalFunction::one());
        assert!(eisenstein_lift_evidence(2, 12).unwrap().holds);
        assert!(matches!(eisenstein_lift_evidence(1, 4), Err(Error::WeightTooSmall(_))));
    }

    #[test]
    fn matches_genus_4m_eisenstein() {
        for (m, k) in [(1u32, 9i64), (1, 10), (2, 13)] {
            let r = eisenstein_lift_evidence(m, k).unwrap();
            let big = SatakeParams::eisenstein(4 * m as u8, k);
            let mut want: Vec<i64> = big.alphas[1..].iter().map(|a| p_exponent(a).unwrap()).collect();
            want.sort_unstable();
            assert_eq!(r.gamma_exponents, want);
        }
    }
}
