//! The spherical map on generators and on `T(p^δ)`.
//!
//! Two normalizations are offered. `Polynomial` is the one under which the
//! Rankin-series displays hold: `Ω([p]_n) = p^{-n(n+1)/2} x0² x1⋯xn`.
//! `Eigenvalue` sends `[p]_n ↦ x0² x1⋯xn`, matching `λ_f([p])` evaluated at
//! Satake parameters. All other generator images agree.

use crate::algebra::{product, MultiPoly, RationalFunction, Ring, TruncatedSeries, Var};
use crate::error::{Error, Result};

use super::element::{check_genus, HeckeElement, HeckeGenerator};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    Polynomial,
    Eigenvalue,
}

/// Which copy of the Satake variables an image is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn var(self, i: usize) -> Var {
        match self {
            Side::X => Var::x(i),
            Side::Y => Var::y(i),
        }
    }

    fn poly(self, i: usize) -> MultiPoly {
        MultiPoly::var(self.var(i))
    }
}

fn spherical_genus(genus: u8) -> Result<()> {
    check_genus(genus)?;
    if genus == 3 {
        return Err(Error::UnsupportedGenus(3));
    }
    Ok(())
}

/// `Ω(g)` in the variables of `side`.
pub fn generator_image(genus: u8, g: HeckeGenerator, norm: Normalization, side: Side) -> Result<RationalFunction> {
    spherical_genus(genus)?;
    let n = genus as usize;
    let x = |i| side.poly(i);
    let one = MultiPoly::one();
    match g {
        HeckeGenerator::Tp => {
            let f = (1..=n).fold(x(0), |acc, i| &acc * &(&one + &x(i)));
            Ok(f.into())
        }
        HeckeGenerator::Ti(i) if i as usize == n => {
            let m = (1..=n).fold(x(0).pow(2), |acc, j| &acc * &x(j));
            let shift = match norm {
                Normalization::Polynomial => -((n * (n + 1) / 2) as i32),
                Normalization::Eigenvalue => 0,
            };
            Ok(&RationalFunction::from_poly(m) * &RationalFunction::p_pow(shift))
        }
        HeckeGenerator::Ti(1) if n == 2 => {
            // x0²[(x1+x2)(1+x1x2)/p + (1/p − 1/p³)x1x2]
            let (x1, x2) = (x(1), x(2));
            let p2 = MultiPoly::var_pow(Var::P, 2);
            let a = &(&(&x1 + &x2) * &(&one + &(&x1 * &x2))) * &p2;
            let b = &(&p2 - &one) * &(&x1 * &x2);
            let num = &x(0).pow(2) * &(&a + &b);
            RationalFunction::new(num, MultiPoly::var_pow(Var::P, 3))
        }
        HeckeGenerator::Ti(i) => Err(Error::InvalidInput(format!("T{i}(p²) at genus {genus}"))),
    }
}

/// Generator images indexed by generator slot.
pub fn generator_images(genus: u8, norm: Normalization, side: Side) -> Result<Vec<RationalFunction>> {
    HeckeGenerator::all(genus)
        .into_iter()
        .map(|g| generator_image(genus, g, norm, side))
        .collect()
}

/// Ring-homomorphic extension of the generator images.
pub fn spherical_image(e: &HeckeElement, norm: Normalization) -> Result<RationalFunction> {
    spherical_image_on(e, norm, Side::X)
}

pub fn spherical_image_on(e: &HeckeElement, norm: Normalization, side: Side) -> Result<RationalFunction> {
    if e.genus() == 0 {
        return Ok(e.coeff(&[0; 4]));
    }
    let imgs = generator_images(e.genus(), norm, side)?;
    let mut acc = RationalFunction::zero();
    for (exps, c) in e.terms() {
        let mut t = c.clone();
        for (slot, img) in imgs.iter().enumerate() {
            if exps[slot] > 0 {
                t = &t * &Ring::pow(img, exps[slot] as u32);
            }
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

/// `Ω(T(p^δ))` under the polynomial normalization.
///
/// Genus 1 uses the geometric sum `x0^δ(1 − x1^{δ+1})/(1 − x1)`; genus 2 the
/// four-term compact form over `(1−x1)(1−x2)(1−x1x2)(x1−x2)`. Both divisions
/// are certified exact.
pub fn omega_tp_delta(genus: u8, delta: u16) -> Result<RationalFunction> {
    omega_tp_delta_on(genus, delta, Side::X)
}

pub fn omega_tp_delta_on(genus: u8, delta: u16, side: Side) -> Result<RationalFunction> {
    spherical_genus(genus)?;
    let one = MultiPoly::one();
    let x = |i| side.poly(i);
    let x0d = MultiPoly::var_pow(side.var(0), delta);
    if genus == 1 {
        let num = &one - &MultiPoly::var_pow(side.var(1), delta + 1);
        let q = num.exact_divide(&(&one - &x(1)))?;
        return Ok((&x0d * &q).into());
    }
    let num = compact_numerator(delta, side);
    let den = compact_denominator(side);
    let q = num.exact_divide(&den)?;
    RationalFunction::new(-&(&x0d * &q), MultiPoly::var(Var::P))
}

/// The bracket in the genus-2 compact form, without the factor `−x0^δ/p`.
pub(crate) fn compact_numerator(delta: u16, side: Side) -> MultiPoly {
    let one = MultiPoly::one();
    let p = MultiPoly::var(Var::P);
    let (x1, x2) = (side.poly(1), side.poly(2));
    let x12 = &x1 * &x2;
    let e = delta + 1;
    let d12 = &x1 - &x2;
    let t1 = &(&(&one - &x12) * &(&(&p * &x1) - &x2)) * &MultiPoly::var_pow(side.var(1), e);
    let t2 = &(&(&one - &x12) * &(&x1 - &(&p * &x2))) * &MultiPoly::var_pow(side.var(2), e);
    let t3 = &(&(&one - &(&p * &x12)) * &d12) * &x12.pow(e as u32);
    let t4 = &(&p - &x12) * &d12;
    &(&(&t1 + &t2) - &t3) - &t4
}

pub(crate) fn compact_denominator(side: Side) -> MultiPoly {
    let one = MultiPoly::one();
    let (x1, x2) = (side.poly(1), side.poly(2));
    product(&[&one - &x1, &one - &x2, &one - &(&x1 * &x2), &x1 - &x2])
}

/// Coefficients `0..=order` of the closed-form single series
/// `Σ Ω(T(p^δ)) X^δ`: `1/((1−x0X)(1−x0x1X))` at genus 1 and
/// `(1 − x0²x1x2X²/p)/∏_{S⊆{1,2}}(1 − x0 x_S X)` at genus 2.
pub fn closed_form_single_series(genus: u8, order: usize, side: Side) -> Result<Vec<RationalFunction>> {
    spherical_genus(genus)?;
    let n = genus as usize;
    let xv = MultiPoly::var(Var::X);
    let mut den = MultiPoly::one();
    for mask in 0u32..(1 << n) {
        let m = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(side.poly(0), |acc, i| &acc * &side.poly(i + 1));
        den = &den * &(&MultiPoly::one() - &(&m * &xv));
    }
    let inv = TruncatedSeries::from_poly_in_x(&den, order).invert()?;
    let inv: Vec<RationalFunction> = inv.into_coeffs().into_iter().map(RationalFunction::from).collect();
    if n == 1 {
        return Ok(inv);
    }
    let q = {
        let m = &(&side.poly(0).pow(2) * &side.poly(1)) * &side.poly(2);
        &RationalFunction::from_poly(m) * &RationalFunction::p_pow(-1)
    };
    Ok((0..=order)
        .map(|k| {
            if k >= 2 {
                &inv[k] - &(&q * &inv[k - 2])
            } else {
                inv[k].clone()
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(i: usize) -> MultiPoly {
        MultiPoly::var(Var::x(i))
    }

    #[test]
    fn tp_genus1() {
        let img = spherical_image(&HeckeElement::t(1), Normalization::Polynomial).unwrap();
        assert_eq!(img, (&xs(0) * &(&MultiPoly::one() + &xs(1))).into());
    }

    #[test]
    fn bracket_normalizations() {
        let b = HeckeElement::bracket_p(2);
        let m = &(&xs(0).pow(2) * &xs(1)) * &xs(2);
        assert_eq!(spherical_image(&b, Normalization::Eigenvalue).unwrap(), m.clone().into());
        let poly = spherical_image(&b, Normalization::Polynomial).unwrap();
        assert_eq!(poly, &RationalFunction::from(m) * &RationalFunction::p_pow(-3));
        assert_eq!(poly.p_denominator_exponent(), Some(3));
    }

    #[test]
    fn genus3_is_refused() {
        assert_eq!(
            spherical_image(&HeckeElement::t(3), Normalization::Polynomial),
            Err(Error::UnsupportedGenus(3))
        );
    }

    #[test]
    fn t1_image_matches_spinor_x2_coefficient() {
        // p·Ω(T1) + p(p²+1)·Ω([p]) is e2 of {x0, x0x1, x0x2, x0x1x2}
        let roots = [xs(0), &xs(0) * &xs(1), &xs(0) * &xs(2), &(&xs(0) * &xs(1)) * &xs(2)];
        let mut e2 = MultiPoly::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                e2 = &e2 + &(&roots[i] * &roots[j]);
            }
        }
        let p = RationalFunction::var(Var::P);
        let t1 = spherical_image(&HeckeElement::ti(2, 1), Normalization::Polynomial).unwrap();
        let b = spherical_image(&HeckeElement::bracket_p(2), Normalization::Polynomial).unwrap();
        let p2p1 = &(&p * &p) + &RationalFunction::one();
        let lhs = &(&p * &t1) + &(&(&p * &p2p1) * &b);
        assert_eq!(lhs, e2.into());
    }

    #[test]
    fn compact_form_small_delta() {
        assert!(omega_tp_delta(2, 0).unwrap().numer().is_one());
        let one = MultiPoly::one();
        let t = &(&xs(0) * &(&one + &xs(1))) * &(&one + &xs(2));
        assert_eq!(omega_tp_delta(2, 1).unwrap(), t.into());
        let g1 = &xs(0).pow(2) * &(&(&one + &xs(1)) + &xs(1).pow(2));
        assert_eq!(omega_tp_delta(1, 2).unwrap(), g1.into());
    }

    #[test]
    fn compact_form_agrees_with_closed_series() {
        for genus in 1..=2 {
            let s = closed_form_single_series(genus, 8, Side::X).unwrap();
            for (d, c) in s.iter().enumerate() {
                assert_eq!(&omega_tp_delta(genus, d as u16).unwrap(), c, "genus {genus} δ={d}");
            }
        }
    }
}
