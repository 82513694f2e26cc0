use crate::algebra::{RationalFunction, Var};
use crate::error::{Error, Result};
use crate::hecke::euler::{x_coeffs, x_degree};

/// Satake parameters `β0, …, β_{2n}` of a genus-`2n` lift.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftParams {
    pub n: u32,
    pub k: i64,
    pub betas: Vec<RationalFunction>,
    pub warnings: Vec<String>,
}

impl LiftParams {
    pub fn genus(&self) -> u32 {
        2 * self.n
    }

    /// `β0 = p^{nk − n(n+1)/2}` and `β_i β_{n+i} = p^{2i−1}`.
    pub fn invariants_hold(&self) -> bool {
        let n = self.n as i64;
        if self.betas.len() != 2 * self.n as usize + 1 {
            return false;
        }
        if self.betas[0] != RationalFunction::p_pow((n * self.k - n * (n + 1) / 2) as i32) {
            return false;
        }
        (1..=self.n as usize)
            .all(|i| &self.betas[i] * &self.betas[self.n as usize + i] == RationalFunction::p_pow(2 * i as i32 - 1))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "betas": self.betas.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

fn alpha_tilde() -> RationalFunction {
    RationalFunction::var(Var::AlphaTilde)
}

fn beta0(n: u32, k: i64) -> RationalFunction {
    let n = n as i64;
    RationalFunction::p_pow((n * k - n * (n + 1) / 2) as i32)
}

fn hypothesis_warnings(n: u32, k: i64) -> Vec<String> {
    let mut w = Vec::new();
    if k % 2 != 0 {
        w.push(format!("k = {k} is odd"));
    }
    if (k - n as i64) % 2 != 0 {
        w.push(format!("k = {k} and n = {n} have different parity"));
    }
    w
}

/// `β0 = p^{nk−n(n+1)/2}`, `β_i = α̃ p^{i−1/2}`, `β_{n+i} = α̃^{−1} p^{i−1/2}`.
pub fn ikeda_satake(n: u32, k: i64) -> LiftParams {
    let at = alpha_tilde();
    let at_inv = at.inverse().expect("nonzero");
    let mut betas = vec![beta0(n, k)];
    for i in 1..=n as i32 {
        betas.push(&at * &RationalFunction::p_half_pow(2 * i - 1));
    }
    for i in 1..=n as i32 {
        betas.push(&at_inv * &RationalFunction::p_half_pow(2 * i - 1));
    }
    LiftParams {
        n,
        k,
        betas,
        warnings: hypothesis_warnings(n, k),
    }
}

/// `β_i = α(k) p^{i−k}`, `β_{n+i} = α(k)^{−1} p^{k+i−1}`.
pub fn ikeda_family_satake(n: u32, k: i64) -> LiftParams {
    let ak = RationalFunction::var(Var::AlphaK);
    let ak_inv = ak.inverse().expect("nonzero");
    let mut betas = vec![beta0(n, k)];
    for i in 1..=n as i64 {
        betas.push(&ak * &RationalFunction::p_pow((i - k) as i32));
    }
    for i in 1..=n as i64 {
        betas.push(&ak_inv * &RationalFunction::p_pow((k + i - 1) as i32));
    }
    LiftParams {
        n,
        k,
        betas,
        warnings: Vec::new(),
    }
}

/// Substitutes `α̃ = α(k) p^{1/2−k}` into [`ikeda_satake`] and compares with
/// [`ikeda_family_satake`].
pub fn family_substitution_consistent(n: u32, k: i64) -> bool {
    let value = &RationalFunction::var(Var::AlphaK) * &RationalFunction::p_half_pow(1 - 2 * k as i32);
    let sub: Vec<RationalFunction> = ikeda_satake(n, k)
        .betas
        .iter()
        .map(|b| b.substitute(Var::AlphaTilde, &value))
        .collect();
    sub == ikeda_family_satake(n, k).betas
}

fn one_minus_x(c: &RationalFunction) -> RationalFunction {
    &RationalFunction::one() - &(c * &RationalFunction::var(Var::X))
}

/// `a(p) = p^{k−1/2}(α̃ + α̃^{−1})`.
pub fn hecke_eigenvalue(k: i64) -> RationalFunction {
    let at = alpha_tilde();
    &RationalFunction::p_half_pow(2 * k as i32 - 1) * &(&at + &at.inverse().expect("nonzero"))
}

/// `1 − a(p)X + p^{2k−1}X²`.
pub fn hecke_quadratic(k: i64) -> RationalFunction {
    let x = RationalFunction::var(Var::X);
    let x2 = &x * &x;
    &(&RationalFunction::one() - &(&hecke_eigenvalue(k) * &x)) + &(&RationalFunction::p_pow(2 * k as i32 - 1) * &x2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticReport {
    pub k: i64,
    pub holds: bool,
    pub x1_coeff: RationalFunction,
    pub x2_coeff: RationalFunction,
    /// At `α̃ = 1` the product is `(1 − p^{k−1/2}X)²`.
    pub unit_case_holds: bool,
}

/// `(1 − α̃p^{k−1/2}X)(1 − α̃^{−1}p^{k−1/2}X) = 1 − a(p)X + p^{2k−1}X²`.
pub fn hecke_quadratic_check(k: i64) -> QuadraticReport {
    let at = alpha_tilde();
    let s = RationalFunction::p_half_pow(2 * k as i32 - 1);
    let lhs = &one_minus_x(&(&at * &s)) * &one_minus_x(&(&at.inverse().expect("nonzero") * &s));
    let rhs = hecke_quadratic(k);
    let cs = x_coeffs(&lhs);
    let one = crate::algebra::ExactRational::one();
    let unit = lhs.specialize(Var::AlphaTilde, &one).expect("no pole at 1");
    let sq = one_minus_x(&s);
    QuadraticReport {
        k,
        holds: lhs == rhs,
        x1_coeff: -&cs[1],
        x2_coeff: cs[2].clone(),
        unit_case_holds: unit == &sq * &sq,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IkedaStandardReport {
    pub n: u32,
    pub k: i64,
    pub degree_lhs: Option<u16>,
    pub degree_rhs: Option<u16>,
    pub holds: bool,
    /// First `X`-power whose coefficients differ.
    pub first_mismatch: Option<usize>,
    pub miyawaki_holds: bool,
    pub caveat: String,
}

/// `(1 − X) ∏_{i=1}^{2n} (1 − β_i X)(1 − β_i^{−1} X)`.
pub fn lift_standard_factor(params: &LiftParams) -> Result<RationalFunction> {
    let mut acc = one_minus_x(&RationalFunction::one());
    for b in &params.betas[1..] {
        acc = &acc * &one_minus_x(b);
        acc = &acc * &one_minus_x(&b.inverse().map_err(|_| Error::NonInvertibleParameter(b.to_string()))?);
    }
    Ok(acc)
}

/// `(1 − X) ∏_{j=1}^{2n} L_p(f, X p^{−(k+n−j)})^{−1}`: the Euler factor of
/// `ζ(s) ∏ L(f, s+k+n−j)` at `X = p^{−s}`.
pub fn shifted_product(n: u32, k: i64) -> RationalFunction {
    let q = hecke_quadratic(k);
    let x = RationalFunction::var(Var::X);
    let mut acc = one_minus_x(&RationalFunction::one());
    for j in 1..=2 * n as i64 {
        let shift = RationalFunction::p_pow(-(k + n as i64 - j) as i32);
        acc = &acc * &q.substitute(Var::X, &(&x * &shift));
    }
    acc
}

pub fn verify_ikeda_standard_params(params: &LiftParams) -> Result<IkedaStandardReport> {
    let (n, k) = (params.n, params.k);
    let lhs = lift_standard_factor(params)?;
    let rhs = shifted_product(n, k);
    let (dl, dr) = (x_degree(&lhs), x_degree(&rhs));
    let (cl, cr) = (x_coeffs(&lhs), x_coeffs(&rhs));
    let first_mismatch = (0..cl.len().max(cr.len())).find(|&i| {
        let z = RationalFunction::zero();
        cl.get(i).unwrap_or(&z) != cr.get(i).unwrap_or(&z)
    });
    let holds = first_mismatch.is_none();
    let g = RationalFunction::var(Var::Lg);
    let miyawaki_holds = &g * &lhs == &g * &rhs;
    Ok(IkedaStandardReport {
        n,
        k,
        degree_lhs: dl,
        degree_rhs: dr,
        holds,
        first_mismatch,
        miyawaki_holds,
        caveat: "Miyawaki form checked with L_p(g,St) as a free factor; the non-vanishing condition is not verified"
            .into(),
    })
}

/// The standard factor of the lift against `ζ(s) ∏_{j=1}^{2n} L(f, s+k+n−j)`.
pub fn verify_ikeda_standard(n: u32, k: i64) -> Result<IkedaStandardReport> {
    verify_ikeda_standard_params(&ikeda_satake(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> RationalFunction {
        RationalFunction::var(Var::U)
    }

    #[test]
    fn genus_two_parameters() {
        let lp = ikeda_satake(1, 10);
        let at = alpha_tilde();
        assert_eq!(lp.betas[0], RationalFunction::p_pow(9));
        assert_eq!(lp.betas[1], &at * &u());
        assert_eq!(lp.betas[2], &at.inverse().unwrap() * &u());
        assert!(lp.invariants_hold());
        assert!(!lp.warnings.is_empty());
        assert!(ikeda_satake(2, 10).warnings.is_empty());
    }

    #[test]
    fn quadratic() {
        let r = hecke_quadratic_check(6);
        assert!(r.holds && r.unit_case_holds);
        assert_eq!(r.x2_coeff, RationalFunction::p_pow(11));
        assert_eq!(r.x1_coeff, hecke_eigenvalue(6));
    }

    #[test]
    fn standard_identity_and_perturbation() {
        for n in 1..=3 {
            let r = verify_ikeda_standard(n, 12).unwrap();
            assert!(r.holds && r.miyawaki_holds, "n={n}");
            assert_eq!(r.degree_lhs, Some(4 * n as u16 + 1));
        }
        let mut lp = ikeda_satake(1, 12);
        lp.betas[2] = &lp.betas[2] * &RationalFunction::p_pow(1);
        let r = verify_ikeda_standard_params(&lp).unwrap();
        assert!(!r.holds);
        assert!(r.first_mismatch.is_some());
    }

    #[test]
    fn exponent_multiset_oracle() {
        // inverse roots α̃^{±1} p^{e}: both sides must give e ∈ {±1/2, …, ±(n−1/2)}
        for n in 1..=3u32 {
            let lp = ikeda_satake(n, 8);
            let mut exps: Vec<i32> = Vec::new();
            for b in &lp.betas[1..] {
                for c in [b.clone(), b.inverse().unwrap()] {
                    let at = alpha_tilde();
                    let stripped = [&c * &at, &c * &at.inverse().unwrap()]
                        .into_iter()
                        .find(|t| !t.numer().uses(Var::AlphaTilde) && !t.denom().uses(Var::AlphaTilde))
                        .unwrap();
                    // stripped is u^a p^b
                    let num = stripped.numer().leading_term().unwrap().0;
                    let den = stripped.denom().leading_term().unwrap().0;
                    let twice = num.exp(Var::U) as i32 + 2 * num.exp(Var::P) as i32
                        - den.exp(Var::U) as i32
                        - 2 * den.exp(Var::P) as i32;
                    exps.push(twice);
                }
            }
            exps.sort();
            let mut expect: Vec<i32> = (1..=2 * n as i32)
                .flat_map(|j| {
                    let e = 2 * (j - n as i32) - 1;
                    [e, e]
                })
                .collect();
            expect.sort();
            assert_eq!(exps, expect);
        }
    }

    #[test]
    fn family_form() {
        for n in 1..=3 {
            let f = ikeda_family_satake(n, 14);
            assert!(f.invariants_hold());
            assert!(family_substitution_consistent(n, 14));
        }
        let f = ikeda_family_satake(1, 14);
        assert_eq!(f.betas[1], &RationalFunction::var(Var::AlphaK) * &RationalFunction::p_pow(-13));
    }
}
