use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::ExactRational;

/// Arithmetic on references, so generic code can write `&a * &b`.
pub trait RingOps<T>: Sized + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T> {}

impl<T, R> RingOps<T> for R where
    R: Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// Commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync
where
    for<'a> &'a Self: RingOps<Self>,
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Integral domain with exact division, used by fraction-free elimination.
pub trait ExactDomain: Ring
where
    for<'a> &'a Self: RingOps<Self>,
{
    /// `Some(q)` with `q * divisor == self`, `None` when the division is not exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn one() -> Self {
        ExactRational::one()
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl ExactDomain for BigInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, divisor);
        Zero::is_zero(&r).then_some(q)
    }
}
