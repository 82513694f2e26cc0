use super::poly::{MultiPoly, Var};
use super::ring::{Ring, RingOps};
use crate::error::{Error, Result};

/// Power series `c_0 + c_1 X + … + c_N X^N + O(X^{N+1})` over a ring `R`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R>
where
    for<'a> &'a R: RingOps<R>,
{
    /// Series of order `order` from leading coefficients; missing ones are zero,
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                    .fold(R::zero(), |acc, i| &acc + &(&self.coeffs[i] * &other.coeffs[k - i]))
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Inverse series; the constant coefficient must be exactly 1.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotAUnit(format!("{:?}", self.coeffs[0])));
        }
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(R::one());
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || g[k - j].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[j] * &g[k - j]);
            }
            g.push(-&acc);
        }
        Ok(TruncatedSeries { coeffs: g })
    }
}

impl TruncatedSeries<MultiPoly> {
    /// Reads a polynomial as a series in the variable `X`.
    pub fn from_poly_in_x(f: &MultiPoly, order: usize) -> Self {
        Self::new(f.coeffs_in(Var::X), order)
    }

    pub fn to_poly_in_x(&self) -> MultiPoly {
        MultiPoly::from_coeffs_in(Var::X, &self.coeffs)
    }
}

/// Inverse of a truncated series (free-function form).
pub fn series_invert<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>>
where
    for<'a> &'a R: RingOps<R>,
{
    f.invert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ExactRational;

    fn xv() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn geometric_series() {
        let f = TruncatedSeries::from_poly_in_x(&(&MultiPoly::one() - &xv()), 3);
        let g = f.invert().unwrap();
        assert!(g.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn two_geometric_factors() {
        let a0 = MultiPoly::var(Var::X0);
        let a1 = MultiPoly::var(Var::X1);
        let f = &(&MultiPoly::one() - &(&a0 * &xv())) * &(&MultiPoly::one() - &(&(&a0 * &a1) * &xv()));
        let g = TruncatedSeries::from_poly_in_x(&f, 4).invert().unwrap();
        // α0²(1 + α1 + α1²)
        let expect = &a0.pow(2) * &(&(&MultiPoly::one() + &a1) + &a1.pow(2));
        assert_eq!(g.coeff(2), &expect);
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let f = TruncatedSeries::new(vec![MultiPoly::int(2), MultiPoly::one()], 2);
        assert!(matches!(f.invert(), Err(Error::NotAUnit(_))));
        let q = TruncatedSeries::new(vec![ExactRational::from(3)], 1);
        assert!(q.invert().is_err());
    }
}
