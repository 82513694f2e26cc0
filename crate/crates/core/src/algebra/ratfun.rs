use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Monomial, MultiPoly, Var};
use super::rational::ExactRational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Quotient of two polynomials.
///
/// Normalization removes the common monomial content of numerator and
/// denominator, rationalizes a monomial denominator containing `u`, and makes
/// the leading coefficient of the denominator `+1`. No polynomial gcd is
/// taken; for monomial denominators (the Laurent case, e.g. pure powers of
/// `p`) the representation is canonical.
#[derive(Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        RationalFunction {
            num,
            den: MultiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(MultiPoly::int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    /// `p^e` for any integer `e`.
    pub fn p_pow(e: i32) -> Self {
        Self::monomial_pow(Var::P, e)
    }

    /// `v^e` for any integer `e`.
    pub fn monomial_pow(v: Var, e: i32) -> Self {
        if e >= 0 {
            Self::from_poly(MultiPoly::var_pow(v, e as u16))
        } else {
            Self::normalized(MultiPoly::one(), MultiPoly::var_pow(v, (-e) as u16))
        }
    }

    /// `p^{e/2}` for any integer `e`, through `u`.
    pub fn p_half_pow(e: i32) -> Self {
        let u = Self::var(Var::U);
        let whole = Self::p_pow(e.div_euclid(2));
        if e.rem_euclid(2) == 1 {
            &whole * &u
        } else {
            whole
        }
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = strip_content(num, den);
        if den.is_monomial() && den.leading_term().unwrap().0.exp(Var::U) == 1 {
            let u = MultiPoly::var(Var::U);
            num = &num * &u;
            den = &den * &u;
            (num, den) = strip_content(num, den);
        }
        let lc = den.leading_term().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.recip().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// True when the denominator is `p^k` for some `k ≥ 0`.
    pub fn has_p_power_denominator(&self) -> bool {
        self.den.is_monomial() && {
            let (m, c) = self.den.leading_term().unwrap();
            c.is_one() && m.with_exp(Var::P, 0).is_one()
        }
    }

    /// Exponent `k` of a `p^k` denominator.
    pub fn p_denominator_exponent(&self) -> Option<u16> {
        self.has_p_power_denominator()
            .then(|| self.den.leading_term().unwrap().0.exp(Var::P))
    }

    /// Smallest power of `p` occurring, counting the denominator negatively.
    pub fn p_valuation(&self) -> Option<i64> {
        let k = self.p_denominator_exponent()? as i64;
        let low = self.num.min_degree_in(Var::P)? as i64;
        Some(low - k)
    }

    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    /// Multiplicative inverse; fails for zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonInvertibleParameter("0".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow_i(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(Ring::pow(self, e as u32))
        } else {
            Ok(Ring::pow(&self.inverse()?, (-e) as u32))
        }
    }

    pub fn substitute(&self, v: Var, value: &RationalFunction) -> RationalFunction {
        let d = self
            .num
            .degree_in(v)
            .unwrap_or(0)
            .max(self.den.degree_in(v).unwrap_or(0));
        // clear the denominator of `value` with value.den^d
        let lift = |f: &MultiPoly| {
            let cs = f.coeffs_in(v);
            let mut acc = MultiPoly::zero();
            for (i, c) in cs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = &(c * &value.num.pow(i as u32)) * &value.den.pow(d as u32 - i as u32);
                acc = &acc + &t;
            }
            acc
        };
        Self::normalized(lift(&self.num), lift(&self.den))
    }

    pub fn specialize(&self, v: Var, value: &ExactRational) -> Result<Self> {
        RationalFunction::new(self.num.specialize(v, value), self.den.specialize(v, value))
    }

    /// Exact equality by cross multiplication.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    fn combine(&self, other: &RationalFunction, negate: bool) -> RationalFunction {
        let signed = |p: &MultiPoly| if negate { -p } else { p.clone() };
        if self.den == other.den {
            let n = if negate { &self.num - &other.num } else { &self.num + &other.num };
            return Self::normalized(n, self.den.clone());
        }
        if self.den.is_monomial() && other.den.is_monomial() {
            let (ma, ca) = self.den.leading_term().unwrap();
            let (mb, cb) = other.den.leading_term().unwrap();
            if ma.exp(Var::U) == 0 && mb.exp(Var::U) == 0 {
                let l = ma.lcm(mb);
                let fa = l.checked_div(ma).unwrap();
                let fb = l.checked_div(mb).unwrap();
                let na = self.num.mul_term(&fa, &ca.recip().unwrap());
                let nb = other.num.mul_term(&fb, &cb.recip().unwrap());
                return Self::normalized(&na + &signed(&nb), MultiPoly::term(l, ExactRational::one()));
            }
        }
        let n = &(&self.num * &other.den) + &signed(&(&other.num * &self.den));
        Self::normalized(n, &self.den * &other.den)
    }
}

fn strip_content(num: MultiPoly, den: MultiPoly) -> (MultiPoly, MultiPoly) {
    let g: Monomial = num.monomial_content().gcd(&den.monomial_content());
    if g.is_one() {
        (num, den)
    } else {
        (num.div_monomial(&g).unwrap(), den.div_monomial(&g).unwrap())
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_in_p_is_canonical() {
        let a = &RationalFunction::p_pow(-2) + &RationalFunction::p_pow(-1);
        // (1 + p)/p^2
        assert_eq!(a.denom(), &MultiPoly::var_pow(Var::P, 2));
        assert_eq!(a.numer(), &(&MultiPoly::one() + &MultiPoly::var(Var::P)));
        let b = &a * &RationalFunction::p_pow(2);
        assert!(b.is_polynomial());
        assert_eq!(a.p_valuation(), Some(-2));
    }

    #[test]
    fn half_powers_rationalize() {
        let h = RationalFunction::p_half_pow(-1);
        // p^{-1/2} = u/p
        assert_eq!(h.numer(), &MultiPoly::var(Var::U));
        assert_eq!(h.denom(), &MultiPoly::var(Var::P));
        let one = &h * &RationalFunction::p_half_pow(1);
        assert!(one.is_polynomial() && one.numer().is_one());
    }

    #[test]
    fn substitution_with_fraction() {
        // at ↦ ak·u/p^k in at·u = ak·p^{1-k}·... check at·u → ak/p^{k-1} for k=3
        let f = &RationalFunction::var(Var::AlphaTilde) * &RationalFunction::var(Var::U);
        let val = &(&RationalFunction::var(Var::AlphaK) * &RationalFunction::var(Var::U))
            * &RationalFunction::p_pow(-3);
        let g = f.substitute(Var::AlphaTilde, &val);
        assert_eq!(g, &RationalFunction::var(Var::AlphaK) * &RationalFunction::p_pow(-2));
    }

    #[test]
    fn general_denominators_compare_by_cross_multiplication() {
        let x = MultiPoly::var(Var::X1);
        let one = MultiPoly::one();
        let a = RationalFunction::new(&x - &one, &(&x * &x) - &one).unwrap();
        let b = RationalFunction::new(one.clone(), &x + &one).unwrap();
        assert_eq!(a, b);
        assert!(RationalFunction::new(one.clone(), MultiPoly::zero()).is_err());
    }
}
