//! Preimages under `Ω ⊗ Ω` of X-coefficients of the Rankin series.
//!
//! Every generator image is `x0`-homogeneous, so the `X^d` coefficient only
//! involves monomials `T^a T1^b [p]^c` with `a + 2b + 2c = d` on each side.
//! Ordering the remaining Satake variables lexicographically (`x1 > x2`), the
//! leading monomial of `Ω(T^a T1^b [p]^c)` is `x1^{a+2b+c} x2^{a+b+c}` at
//! genus 2 and `x1^{a+c}` at genus 1; together with `d` it determines
//! `(a, b, c)`. Peeling leading terms therefore solves the coefficient
//! system triangularly, first over the `y` side with `x`-dependent
//! coefficients, then over the `x` side. The dense route builds the same
//! system explicitly and solves it by fraction-free elimination.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{solve_linear_poly, Monomial, MultiPoly, RationalFunction, Ring, Var};
use crate::error::{Error, Result};
use crate::hecke::element::GenExps;
use crate::hecke::omega::{generator_images, Normalization, Side};

use super::tensor::TensorHeckeElement;

/// Generator exponent vectors of `x0`-degree `d`.
pub fn graded_monomials(genus: u8, d: u16) -> Vec<GenExps> {
    let mut out = Vec::new();
    match genus {
        1 => {
            for c in 0..=d / 2 {
                out.push([d - 2 * c, c, 0, 0]);
            }
        }
        2 => {
            for b in 0..=d / 2 {
                for c in 0..=(d - 2 * b) / 2 {
                    out.push([d - 2 * b - 2 * c, b, c, 0]);
                }
            }
        }
        _ => {}
    }
    out
}

/// Leading `(x1, x2)` exponents of a Hecke monomial's image.
fn leading_exps(genus: u8, e: &GenExps) -> (u16, u16) {
    match genus {
        1 => (e[0] + e[1], 0),
        _ => (e[0] + 2 * e[1] + e[2], e[0] + e[1] + e[2]),
    }
}

/// Inverse of [`leading_exps`] at `x0`-degree `d`.
fn monomial_from_leading(genus: u8, d: u16, (e1, e2): (u16, u16)) -> Option<GenExps> {
    let (d, e1, e2) = (d as i32, e1 as i32, e2 as i32);
    let e = match genus {
        1 => {
            let c = d - e1;
            let a = 2 * e1 - d;
            (e2 == 0 && a >= 0 && c >= 0).then_some([a, c, 0])
        }
        _ => {
            let b = e1 - e2;
            let c = d - b - e2;
            let a = e2 - b - c;
            (a >= 0 && b >= 0 && c >= 0).then_some([a, b, c])
        }
    }?;
    Some([e[0] as u16, e[1] as u16, e[2] as u16, 0])
}

/// Image of a Hecke monomial and its leading coefficient (a function of `p`).
struct ImageCache {
    genus: u8,
    side: Side,
    gens: Vec<RationalFunction>,
    cache: BTreeMap<GenExps, (RationalFunction, RationalFunction)>,
}

impl ImageCache {
    fn new(genus: u8, side: Side) -> Result<Self> {
        Ok(ImageCache {
            genus,
            side,
            gens: generator_images(genus, Normalization::Polynomial, side)?,
            cache: BTreeMap::new(),
        })
    }

    fn get(&mut self, e: &GenExps) -> &(RationalFunction, RationalFunction) {
        if !self.cache.contains_key(e) {
            let img = self
                .gens
                .iter()
                .enumerate()
                .filter(|(s, _)| e[*s] > 0)
                .fold(RationalFunction::one(), |acc, (s, g)| &acc * &Ring::pow(g, e[s] as u32));
            let d = e[0] + 2 * e[1..].iter().sum::<u16>();
            let (e1, e2) = leading_exps(self.genus, e);
            let lead = self.lead_monomial(d, e1, e2);
            let lc = group_coeff(img.numer(), &lead, self.side, self.genus);
            let lc = RationalFunction::new(lc, img.denom().clone()).expect("nonzero");
            self.cache.insert(*e, (img, lc));
        }
        &self.cache[e]
    }

    fn lead_monomial(&self, d: u16, e1: u16, e2: u16) -> Monomial {
        let mut pairs = vec![(self.side.var(0), d), (self.side.var(1), e1)];
        if self.genus == 2 {
            pairs.push((self.side.var(2), e2));
        }
        Monomial::from_pairs(&pairs)
    }
}

fn side_exps(m: &Monomial, side: Side, genus: u8) -> (u16, u16, u16) {
    let e2 = if genus == 2 { m.exp(side.var(2)) } else { 0 };
    (m.exp(side.var(0)), m.exp(side.var(1)), e2)
}

/// Sum of the terms whose `side` exponents equal those of `lead`, with those
/// exponents removed.
fn group_coeff(f: &MultiPoly, lead: &Monomial, side: Side, genus: u8) -> MultiPoly {
    let target = side_exps(lead, side, genus);
    MultiPoly::from_terms(f.terms().iter().filter(|&(m, _c)| side_exps(m, side, genus) == target).map(|(m, c)| (m.checked_div(lead).expect("divisible"), c.clone())))
}

/// Peels leading `side` terms off `target`, returning coefficients (free of
/// the `side` variables) per Hecke monomial.
fn peel(target: &RationalFunction, d: u16, genus: u8, side: Side) -> Result<Vec<(GenExps, RationalFunction)>> {
    let mut cache = ImageCache::new(genus, side)?;
    let den = target.denom().clone();
    if !target.has_p_power_denominator() {
        return Err(Error::NotInImage(format!("denominator {den} is not a power of p")));
    }
    let mut rem = target.clone();
    let mut out = Vec::new();
    while !rem.is_zero() {
        let lead_key = rem
            .numer()
            .terms()
            .iter()
            .map(|(m, _)| side_exps(m, side, genus))
            .max_by_key(|&(_, e1, e2)| (e1, e2))
            .expect("nonzero");
        let (e0, e1, e2) = lead_key;
        if e0 != d {
            return Err(Error::NotInImage(format!("{}-degree {e0} where {d} was expected", side.var(0))));
        }
        let e = monomial_from_leading(genus, d, (e1, e2))
            .ok_or_else(|| Error::NotInImage(format!("leading exponents ({e1}, {e2}) at degree {d}")))?;
        let lead = cache.lead_monomial(d, e1, e2);
        let c = RationalFunction::new(group_coeff(rem.numer(), &lead, side, genus), rem.denom().clone())?;
        let (img, lc) = cache.get(&e);
        let k = &c * &lc.inverse()?;
        rem = &rem - &(&k * img);
        out.push((e, k));
    }
    Ok(out)
}

/// Triangular reconstruction of the preimage of `c`, the `X^d` coefficient of
/// an `(Ω ⊗ Ω)`-image; the result is verified by re-applying `Ω ⊗ Ω`.
pub fn reconstruct_preimage(c: &RationalFunction, d: u16, genus: u8) -> Result<TensorHeckeElement> {
    if !(1..=2).contains(&genus) {
        return Err(Error::UnsupportedGenus(genus));
    }
    let ys = peel(c, d, genus, Side::Y)?;
    let mut terms = Vec::new();
    for (mu, k) in ys {
        for (lambda, kk) in peel(&k, d, genus, Side::X)? {
            if !kk.numer().only_uses(&[Var::P]) {
                return Err(Error::NotInImage(format!("coefficient {kk} depends on Satake variables")));
            }
            terms.push(((lambda, mu), kk));
        }
    }
    let out = TensorHeckeElement::from_terms(genus, terms);
    verify_round_trip(&out, c)?;
    Ok(out)
}

fn verify_round_trip(e: &TensorHeckeElement, c: &RationalFunction) -> Result<()> {
    let back = e.omega(Normalization::Polynomial)?;
    if &back != c {
        let diff = &back - c;
        return Err(Error::NotInImage(format!("residual {diff}")));
    }
    Ok(())
}

/// Dense route: unknowns for every pair of graded monomials, one equation per
/// Satake monomial, solved by fraction-free elimination over `ℚ[p]`.
pub fn reconstruct_preimage_dense(c: &RationalFunction, d: u16, genus: u8) -> Result<TensorHeckeElement> {
    if !(1..=2).contains(&genus) {
        return Err(Error::UnsupportedGenus(genus));
    }
    let mut xc = ImageCache::new(genus, Side::X)?;
    let mut yc = ImageCache::new(genus, Side::Y)?;
    let mons = graded_monomials(genus, d);
    let mut cols: Vec<((GenExps, GenExps), RationalFunction)> = Vec::new();
    for l in &mons {
        for m in &mons {
            let img = &xc.get(l).0.clone() * &yc.get(m).0.clone();
            cols.push(((*l, *m), img));
        }
    }
    // common p-power clearing every denominator
    let shift = cols
        .iter()
        .map(|(_, f)| f.p_denominator_exponent())
        .chain(std::iter::once(c.p_denominator_exponent()))
        .try_fold(0u16, |acc, e| e.map(|e| acc.max(e)))
        .ok_or_else(|| Error::NotInImage("denominator is not a power of p".into()))?;
    let clear = |f: &RationalFunction| -> MultiPoly {
        let k = shift - f.p_denominator_exponent().expect("checked");
        f.numer() * &MultiPoly::var_pow(Var::P, k)
    };
    let split = |f: &MultiPoly| -> BTreeMap<Monomial, MultiPoly> {
        let mut rows: BTreeMap<Monomial, Vec<(Monomial, _)>> = BTreeMap::new();
        for (m, q) in f.terms() {
            let pe = m.exp(Var::P);
            rows.entry(m.with_exp(Var::P, 0))
                .or_default()
                .push((Monomial::var(Var::P, pe), q.clone()));
        }
        rows.into_iter().map(|(k, v)| (k, MultiPoly::from_terms(v))).collect()
    };
    let col_rows: Vec<BTreeMap<Monomial, MultiPoly>> = cols.iter().map(|(_, f)| split(&clear(f))).collect();
    let rhs_rows = split(&clear(c));
    let mut keys: Vec<Monomial> = col_rows.iter().flat_map(|r| r.keys().cloned()).collect();
    keys.extend(rhs_rows.keys().cloned());
    keys.sort();
    keys.dedup();
    let a: Vec<Vec<MultiPoly>> = keys
        .iter()
        .map(|k| col_rows.iter().map(|r| r.get(k).cloned().unwrap_or_else(MultiPoly::zero)).collect())
        .collect();
    let b: Vec<MultiPoly> = keys
        .iter()
        .map(|k| rhs_rows.get(k).cloned().unwrap_or_else(MultiPoly::zero))
        .collect();
    let sol = solve_linear_poly(&a, &b)?;
    let out = TensorHeckeElement::from_terms(genus, cols.iter().map(|(e, _)| *e).zip(sol));
    verify_round_trip(&out, c)?;
    Ok(out)
}

/// Reconstructs every coefficient of a polynomial in `X`, in parallel.
pub fn reconstruct_series(coeffs: &[RationalFunction], genus: u8) -> Result<Vec<TensorHeckeElement>> {
    coeffs
        .par_iter()
        .enumerate()
        .map(|(d, c)| {
            if c.is_zero() {
                Ok(TensorHeckeElement::zero().with_genus(genus)?)
            } else {
                reconstruct_preimage(c, d as u16, genus)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeElement;

    fn tt(a: &HeckeElement, b: &HeckeElement) -> TensorHeckeElement {
        TensorHeckeElement::tensor(a, b)
    }

    #[test]
    fn leading_exponents_are_injective_per_degree() {
        for genus in 1..=2 {
            for d in 0..=16 {
                let ms = graded_monomials(genus, d);
                let mut lead: Vec<_> = ms.iter().map(|e| leading_exps(genus, e)).collect();
                for (e, l) in ms.iter().zip(&lead) {
                    assert_eq!(monomial_from_leading(genus, d, *l), Some(*e));
                }
                lead.sort();
                lead.dedup();
                assert_eq!(lead.len(), ms.len());
            }
        }
    }

    #[test]
    fn genus1_t_tensor_t() {
        let target = tt(&HeckeElement::t(1), &HeckeElement::t(1));
        let c = target.omega(Normalization::Polynomial).unwrap();
        assert_eq!(reconstruct_preimage(&c, 1, 1).unwrap(), target);
        assert_eq!(reconstruct_preimage_dense(&c, 1, 1).unwrap(), target);
    }

    #[test]
    fn constant_reconstructs_to_one() {
        let one = RationalFunction::one();
        let r = reconstruct_preimage(&one, 0, 2).unwrap();
        assert_eq!(r, TensorHeckeElement::one());
    }

    #[test]
    fn genus2_random_combination_round_trips() {
        let t = HeckeElement::t(2);
        let t1 = HeckeElement::ti(2, 1);
        let b = HeckeElement::bracket_p(2);
        let p = |e| RationalFunction::p_pow(e);
        let target = &(&tt(&(&t * &t), &t1).scale(&p(3)) - &tt(&b, &b).scale(&p(-2)))
            + &tt(&t1, &(&t * &t)).scale(&RationalFunction::int(5));
        let c = target.omega(Normalization::Polynomial).unwrap();
        assert_eq!(reconstruct_preimage(&c, 2, 2).unwrap(), target);
        assert_eq!(reconstruct_preimage_dense(&c, 2, 2).unwrap(), target);
    }

    #[test]
    fn non_image_is_rejected() {
        let x1 = RationalFunction::var(Var::X1);
        let c = &(&RationalFunction::var(Var::X0) * &RationalFunction::var(Var::Y0)) * &x1;
        assert!(matches!(reconstruct_preimage(&c, 1, 1), Err(Error::NotInImage(_))));
    }
}
