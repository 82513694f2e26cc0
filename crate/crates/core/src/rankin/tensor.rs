use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

use crate::algebra::json::{ratfun_from_json, ratfun_to_json};
use crate::algebra::{RationalFunction, Ring, Var};
use crate::error::{Error, Result};
use crate::hecke::element::{check_genus, GenExps};
use crate::hecke::omega::{generator_images, Normalization, Side};
use crate::hecke::HeckeElement;

pub type TensorExps = (GenExps, GenExps);

/// Element of `𝓛_n ⊗ 𝓛_n` with Laurent-in-`p` coefficients.
///
/// Genus 0 marks a scalar, as for [`HeckeElement`].
#[derive(Clone)]
pub struct TensorHeckeElement {
    genus: u8,
    terms: BTreeMap<TensorExps, RationalFunction>,
}

impl TensorHeckeElement {
    pub fn scalar(c: RationalFunction) -> Self {
        Self::monomial(0, ([0; 4], [0; 4]), c)
    }

    pub fn zero() -> Self {
        Self::scalar(RationalFunction::zero())
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    pub fn monomial(genus: u8, e: TensorExps, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TensorHeckeElement { genus, terms }
    }

    /// `a ⊗ b`.
    pub fn tensor(a: &HeckeElement, b: &HeckeElement) -> Self {
        let genus = a.genus().max(b.genus());
        let mut out = TensorHeckeElement {
            genus,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                out.add_term((*ea, *eb), ca * cb);
            }
        }
        out
    }

    pub fn from_terms(genus: u8, terms: impl IntoIterator<Item = (TensorExps, RationalFunction)>) -> Self {
        let mut out = TensorHeckeElement {
            genus,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: TensorExps, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn genus(&self) -> u8 {
        self.genus
    }

    pub fn terms(&self) -> &BTreeMap<TensorExps, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::from_terms(self.genus, self.terms.iter().map(|(e, v)| (*e, v * c)))
    }

    pub fn with_genus(&self, genus: u8) -> Result<Self> {
        if self.genus != 0 && self.genus != genus {
            return Err(Error::InvalidInput(format!(
                "genus {} tensor used at genus {}",
                self.genus, genus
            )));
        }
        Ok(TensorHeckeElement {
            genus,
            terms: self.terms.clone(),
        })
    }

    /// Every coefficient lies in `ℤ[p, p⁻¹]`.
    pub fn has_laurent_integral_coeffs(&self) -> bool {
        self.terms.values().all(|c| {
            c.has_p_power_denominator()
                && c.numer().only_uses(&[Var::P])
                && c.numer().terms().iter().all(|(_, q)| q.is_integer())
        })
    }

    /// Minimum over terms of `ord_p(coefficient) + Σ weight·exponent`, where
    /// `weights[slot]` is the p-weight of a generator on either side.
    pub fn p_valuation(&self, weights: &[i64; 4]) -> Option<i64> {
        self.terms
            .iter()
            .filter_map(|((a, b), c)| {
                let w: i64 = (0..4).map(|i| weights[i] * (a[i] as i64 + b[i] as i64)).sum();
                c.p_valuation().map(|v| v + w)
            })
            .min()
    }

    /// `(Ω ⊗ Ω)(self)` with `x` on the left and `y` on the right.
    pub fn omega(&self, norm: Normalization) -> Result<RationalFunction> {
        if self.genus == 0 {
            return Ok(self.terms.get(&([0; 4], [0; 4])).cloned().unwrap_or_else(RationalFunction::zero));
        }
        let gx = generator_images(self.genus, norm, Side::X)?;
        let gy = generator_images(self.genus, norm, Side::Y)?;
        let img = |imgs: &[RationalFunction], e: &GenExps| {
            imgs.iter()
                .enumerate()
                .filter(|(s, _)| e[*s] > 0)
                .fold(RationalFunction::one(), |acc, (s, g)| &acc * &Ring::pow(g, e[s] as u32))
        };
        let mut acc = RationalFunction::zero();
        for ((a, b), c) in &self.terms {
            acc = &acc + &(&(c * &img(&gx, a)) * &img(&gy, b));
        }
        Ok(acc)
    }

    pub fn key(&self, e: &TensorExps) -> String {
        let g = self.genus.max(1);
        format!("{} ⊗ {}", HeckeElement::key(g, &e.0), HeckeElement::key(g, &e.1))
    }

    pub fn to_json(&self) -> Value {
        let mut t = Map::new();
        for (e, c) in &self.terms {
            t.insert(self.key(e), ratfun_to_json(c));
        }
        serde_json::json!({ "genus": self.genus, "terms": Value::Object(t) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let genus = v
            .get("genus")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing genus".into()))? as u8;
        check_genus(genus)?;
        let terms = v
            .get("terms")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        let mut out = Vec::new();
        for (k, c) in terms {
            let (l, r) = k
                .split_once('⊗')
                .ok_or_else(|| Error::Parse(format!("bad tensor key {k:?}")))?;
            let e = (HeckeElement::parse_key(genus, l)?, HeckeElement::parse_key(genus, r)?);
            out.push((e, ratfun_from_json(c)?));
        }
        Ok(Self::from_terms(genus, out))
    }

    fn joint_genus(&self, other: &Self) -> u8 {
        match (self.genus, other.genus) {
            (0, g) | (g, 0) => g,
            (a, b) if a == b => a,
            (a, b) => panic!("cannot combine tensors of genus {a} and {b}"),
        }
    }
}

impl PartialEq for TensorHeckeElement {
    fn eq(&self, other: &Self) -> bool {
        let genus_ok = self.genus == 0 || other.genus == 0 || self.genus == other.genus;
        genus_ok
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((ea, ca), (eb, cb))| ea == eb && ca == cb)
    }
}

impl fmt::Display for TensorHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("({c})*[{}]", self.key(e))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &TensorHeckeElement {
    type Output = TensorHeckeElement;
    fn add(self, rhs: &TensorHeckeElement) -> TensorHeckeElement {
        let mut out = TensorHeckeElement {
            genus: self.joint_genus(rhs),
            terms: self.terms.clone(),
        };
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &TensorHeckeElement {
    type Output = TensorHeckeElement;
    fn sub(self, rhs: &TensorHeckeElement) -> TensorHeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &TensorHeckeElement {
    type Output = TensorHeckeElement;
    fn neg(self) -> TensorHeckeElement {
        TensorHeckeElement {
            genus: self.genus,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &TensorHeckeElement {
    type Output = TensorHeckeElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TensorHeckeElement) -> TensorHeckeElement {
        let mut out = TensorHeckeElement {
            genus: self.joint_genus(rhs),
            terms: BTreeMap::new(),
        };
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                let a = std::array::from_fn(|i| a1[i] + a2[i]);
                let b = std::array::from_fn(|i| b1[i] + b2[i]);
                out.add_term((a, b), c1 * c2);
            }
        }
        out
    }
}

impl Ring for TensorHeckeElement {
    fn zero() -> Self {
        TensorHeckeElement::zero()
    }
    fn one() -> Self {
        TensorHeckeElement::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;

    #[test]
    fn omega_of_t_tensor_t() {
        let tt = TensorHeckeElement::tensor(&HeckeElement::t(1), &HeckeElement::t(1));
        let one = MultiPoly::one();
        let x = &MultiPoly::var(Var::X0) * &(&one + &MultiPoly::var(Var::X1));
        let y = &MultiPoly::var(Var::Y0) * &(&one + &MultiPoly::var(Var::Y1));
        assert_eq!(tt.omega(Normalization::Polynomial).unwrap(), (&x * &y).into());
    }

    #[test]
    fn json_and_valuation() {
        let b = HeckeElement::bracket_p(2);
        let e = TensorHeckeElement::tensor(&b, &b).scale(&RationalFunction::p_pow(6));
        let back = TensorHeckeElement::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
        assert_eq!(e.p_valuation(&[0; 4]), Some(6));
        assert_eq!(e.p_valuation(&[0, 0, 3, 0]), Some(12));
        assert!(e.has_laurent_integral_coeffs());
    }
}
