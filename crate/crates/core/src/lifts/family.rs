use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::algebra::ExactRational;
use crate::error::{Error, Result};
use crate::hecke::dirichlet::is_prime;
use crate::rankin::newton::newton_polygon_integers;

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    Ok(())
}

/// `a_n(k) = Σ_{d | n, p ∤ d} d^{k−1}`.
pub fn eisenstein_family_coeff(n: u64, k: u32, p: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if k < 2 {
        return Err(Error::InvalidInput(format!("weight {k} < 2")));
    }
    check_prime(p)?;
    let mut acc = BigInt::zero();
    let mut add = |d: u64| {
        if !d.is_multiple_of(p) {
            acc += Pow::pow(BigInt::from(d), k - 1);
        }
    };
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            add(d);
            if d * d != n {
                add(n / d);
            }
        }
        d += 1;
    }
    Ok(acc)
}

/// `(n, k, a_n(k))` rows for `n ≤ bound`.
pub fn eisenstein_family_table(bound: u64, weights: &[u32], p: u64) -> Result<Vec<(u64, u32, BigInt)>> {
    let mut rows = Vec::new();
    for &k in weights {
        for n in 1..=bound {
            rows.push((n, k, eisenstein_family_coeff(n, k, p)?));
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KummerReport {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub k2: u32,
    pub bound: u64,
    pub holds: bool,
    pub first_failure: Option<u64>,
}

impl KummerReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p, "m": self.m, "k": self.k, "k2": self.k2, "bound": self.bound,
            "holds": self.holds, "first_failure": self.first_failure,
        })
    }
}

/// `a_n(k) ≡ a_n(k') mod p^m` for `n ≤ bound`, given `k ≡ k' mod (p−1)p^{m−1}`.
pub fn kummer_check(bound: u64, k: u32, k2: u32, p: u64, m: u32) -> Result<KummerReport> {
    check_prime(p)?;
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    if k < 2 || k2 < 2 {
        return Err(Error::InvalidInput(format!("weights {k}, {k2} must be ≥ 2")));
    }
    let modulus = (p - 1) * p.pow(m - 1);
    if !(k as u64).abs_diff(k2 as u64).is_multiple_of(modulus) {
        return Err(Error::CongruenceHypothesisFails {
            k: k as u64,
            k2: k2 as u64,
            modulus,
        });
    }
    let pm = BigInt::from(p).pow(m);
    let mut first_failure = None;
    for n in 1..=bound {
        let diff = eisenstein_family_coeff(n, k, p)? - eisenstein_family_coeff(n, k2, p)?;
        if !(diff % &pm).is_zero() {
            first_failure = Some(n);
            break;
        }
    }
    Ok(KummerReport {
        p,
        m,
        k,
        k2,
        bound,
        holds: first_failure.is_none(),
        first_failure,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum SlopeInput {
    /// Inverse roots of `1 − aX + bX²`.
    Quadratic { a: BigInt, b: BigInt },
    Value(ExactRational),
}

/// Smallest `p`-adic valuation of an inverse root of `1 − aX + bX²`, read off
/// the Newton polygon of `Y² − aY + b`.
pub fn slope_quadratic(a: &BigInt, b: &BigInt, p: u64) -> Result<ExactRational> {
    check_prime(p)?;
    if b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let np = newton_polygon_integers(&[b.clone(), -a, BigInt::one()], p)?;
    let steepest = np.slopes.last().expect("degree 2 has a segment").0.clone();
    Ok(-&steepest)
}

pub fn slope_value(v: &ExactRational, p: u64) -> Result<ExactRational> {
    check_prime(p)?;
    v.padic_valuation(p)
        .map(ExactRational::from_integer)
        .ok_or(Error::ZeroInput)
}

pub fn slope(input: &SlopeInput, p: u64) -> Result<ExactRational> {
    match input {
        SlopeInput::Quadratic { a, b } => slope_quadratic(a, b, p),
        SlopeInput::Value(v) => slope_value(v, p),
    }
}

/// `σ1 + σ2 + σ3` for the product of three eigenvalues.
pub fn triple_slope(inputs: &[SlopeInput; 3], p: u64) -> Result<ExactRational> {
    let mut acc = ExactRational::zero();
    for s in inputs {
        acc = &acc + &slope(s, p)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> ExactRational {
        ExactRational::from_integer(n)
    }

    #[test]
    fn coefficients() {
        assert_eq!(eisenstein_family_coeff(1, 12, 5).unwrap(), BigInt::one());
        assert_eq!(eisenstein_family_coeff(6, 2, 7).unwrap(), BigInt::from(12));
        assert_eq!(eisenstein_family_coeff(7, 9, 7).unwrap(), BigInt::one());
        assert_eq!(eisenstein_family_coeff(2, 6, 5).unwrap(), BigInt::from(33));
        assert!(eisenstein_family_coeff(3, 2, 4).is_err());
    }

    #[test]
    fn kummer() {
        let r = kummer_check(50, 2, 6, 5, 1).unwrap();
        assert!(r.holds);
        assert!(kummer_check(10, 4, 4, 3, 3).unwrap().holds);
        assert_eq!(
            kummer_check(2, 2, 3, 5, 1),
            Err(Error::CongruenceHypothesisFails { k: 2, k2: 3, modulus: 4 })
        );
        assert!(kummer_check(50, 3, 23, 5, 2).unwrap().holds);
    }

    #[test]
    fn delta_slope() {
        let a = BigInt::from(-7 * 2392);
        let b = BigInt::from(7).pow(11u32);
        assert_eq!(slope_quadratic(&a, &b, 7).unwrap(), int(1));
        assert_eq!(slope_quadratic(&BigInt::zero(), &BigInt::from(7).pow(3u32), 7).unwrap(), ExactRational::new(3, 2).unwrap());
        assert_eq!(slope_quadratic(&a, &BigInt::zero(), 7), Err(Error::ZeroInput));
    }

    #[test]
    fn eisenstein_and_triple() {
        for k in [4u32, 12, 30] {
            let a = BigInt::one() + BigInt::from(5).pow(k - 1);
            let b = BigInt::from(5).pow(k - 1);
            assert_eq!(slope_quadratic(&a, &b, 5).unwrap(), int(0));
        }
        assert_eq!(slope_value(&int(1), 3).unwrap(), int(0));
        let t = [
            SlopeInput::Value(int(7)),
            SlopeInput::Value(int(1)),
            SlopeInput::Value(int(49)),
        ];
        assert_eq!(triple_slope(&t, 7).unwrap(), int(3));
    }
}
