use std::collections::BTreeMap;

use crate::algebra::{MultiPoly, TruncatedSeries};
use crate::error::Result;

/// Coefficients `h ↦ c_h` of a formal Dirichlet series for `1 ≤ h ≤ bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCoefficients {
    pub bound: u64,
    pub coeffs: BTreeMap<u64, MultiPoly>,
}

impl DirichletCoefficients {
    pub fn get(&self, h: u64) -> &MultiPoly {
        &self.coeffs[&h]
    }
}

/// Prime factorization by trial division.
pub fn factorize(mut h: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= h {
        if h.is_multiple_of(q) {
            let mut e = 0;
            while h.is_multiple_of(q) {
                h /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += 1;
    }
    if h > 1 {
        out.push((h, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Expands `∏_p 1/F_p(p^{-s})` into `Σ c_h h^{-s}` for `h ≤ bound`.
///
/// `factors` maps a prime to its Euler polynomial `F_p` in `X`; primes
/// without an entry contribute the factor 1.
pub fn dirichlet_from_euler(factors: &BTreeMap<u64, MultiPoly>, bound: u64) -> Result<DirichletCoefficients> {
    let mut local: BTreeMap<u64, Vec<MultiPoly>> = BTreeMap::new();
    for (&p, f) in factors {
        let mut order = 0;
        let mut pk = p;
        while pk <= bound {
            order += 1;
            pk = pk.saturating_mul(p);
        }
        let inv = TruncatedSeries::from_poly_in_x(f, order).invert()?;
        local.insert(p, inv.into_coeffs());
    }
    let mut coeffs = BTreeMap::new();
    for h in 1..=bound {
        let mut c = MultiPoly::one();
        for (p, e) in factorize(h) {
            match local.get(&p) {
                Some(series) => c = &c * &series[e as usize],
                None => {
                    c = MultiPoly::zero();
                    break;
                }
            }
        }
        coeffs.insert(h, c);
    }
    Ok(DirichletCoefficients { bound, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;
    use crate::error::Error;

    #[test]
    fn trivial_factors() {
        let fs: BTreeMap<u64, MultiPoly> = [(2, MultiPoly::one()), (3, MultiPoly::one())].into();
        let d = dirichlet_from_euler(&fs, 12).unwrap();
        assert!(d.get(1).is_one());
        assert!((2..=12).all(|h| d.get(h).is_zero()));
    }

    #[test]
    fn zeta_like_factors_give_all_ones() {
        let x = MultiPoly::var(Var::X);
        let fs: BTreeMap<u64, MultiPoly> = [2, 3, 5, 7]
            .into_iter()
            .map(|p| (p, &MultiPoly::one() - &x))
            .collect();
        let d = dirichlet_from_euler(&fs, 10).unwrap();
        assert!((1..=10).all(|h| d.get(h).is_one()));
        assert!(factorize(360) == vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn non_unit_propagates() {
        let fs: BTreeMap<u64, MultiPoly> = [(2, MultiPoly::int(2))].into();
        assert!(matches!(dirichlet_from_euler(&fs, 4), Err(Error::NotAUnit(_))));
    }
}
