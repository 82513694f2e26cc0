use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

use crate::algebra::json::{ratfun_from_json, ratfun_to_json};
use crate::algebra::{Ring, RationalFunction, Var};
use crate::error::{Error, Result};

/// Exponents of `T(p), T_1(p²), …, T_n(p²)` in that order; `T_n(p²) = [p]`.
pub type GenExps = [u16; 4];

/// A generator of the local Hecke algebra of genus `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeckeGenerator {
    /// `T(p)`
    Tp,
    /// `T_i(p²)`, `1 ≤ i ≤ n`; `i = n` is `[p]`
    Ti(u8),
}

impl HeckeGenerator {
    pub fn slot(self) -> usize {
        match self {
            HeckeGenerator::Tp => 0,
            HeckeGenerator::Ti(i) => i as usize,
        }
    }

    pub fn all(genus: u8) -> Vec<HeckeGenerator> {
        std::iter::once(HeckeGenerator::Tp)
            .chain((1..=genus).map(HeckeGenerator::Ti))
            .collect()
    }

    pub fn name(self, genus: u8) -> String {
        match self {
            HeckeGenerator::Tp => "T".into(),
            HeckeGenerator::Ti(i) if i == genus => "[p]".into(),
            HeckeGenerator::Ti(i) => format!("T{i}"),
        }
    }
}

pub(crate) fn check_genus(genus: u8) -> Result<()> {
    if (1..=3).contains(&genus) {
        Ok(())
    } else {
        Err(Error::UnsupportedGenus(genus))
    }
}

/// Element of `𝓛_n ⊗ ℚ(p)`: a polynomial in the genus-`n` generators with
/// coefficients that are Laurent polynomials in `p`.
///
/// Genus 0 marks a scalar; it combines with elements of any genus.
#[derive(Clone)]
pub struct HeckeElement {
    genus: u8,
    terms: BTreeMap<GenExps, RationalFunction>,
}

impl HeckeElement {
    pub fn scalar(c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        HeckeElement { genus: 0, terms }
    }

    pub fn zero() -> Self {
        Self::scalar(RationalFunction::zero())
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    pub fn generator(genus: u8, g: HeckeGenerator) -> Result<Self> {
        check_genus(genus)?;
        if g.slot() > genus as usize {
            return Err(Error::InvalidInput(format!("generator {g:?} at genus {genus}")));
        }
        let mut e = [0; 4];
        e[g.slot()] = 1;
        Ok(Self::monomial(genus, e, RationalFunction::one()))
    }

    /// `T(p)` of the given genus.
    pub fn t(genus: u8) -> Self {
        Self::generator(genus, HeckeGenerator::Tp).expect("valid genus")
    }

    /// `T_i(p²)` of the given genus.
    pub fn ti(genus: u8, i: u8) -> Self {
        Self::generator(genus, HeckeGenerator::Ti(i)).expect("valid generator")
    }

    /// `[p] = T_n(p²)`.
    pub fn bracket_p(genus: u8) -> Self {
        Self::ti(genus, genus)
    }

    pub fn monomial(genus: u8, exps: GenExps, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        HeckeElement { genus, terms }
    }

    pub fn from_terms(genus: u8, terms: impl IntoIterator<Item = (GenExps, RationalFunction)>) -> Self {
        let mut out = HeckeElement {
            genus,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: GenExps, c: RationalFunction) {
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

    pub fn terms(&self) -> &BTreeMap<GenExps, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &GenExps) -> RationalFunction {
        self.terms.get(e).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        HeckeElement::from_terms(self.genus, self.terms.iter().map(|(e, v)| (*e, v * c)))
    }

    /// Lifts a scalar to the given genus; fails on a genus mismatch.
    pub fn with_genus(&self, genus: u8) -> Result<Self> {
        if self.genus != 0 && self.genus != genus {
            return Err(Error::InvalidInput(format!(
                "genus {} element used at genus {}",
                self.genus, genus
            )));
        }
        Ok(HeckeElement {
            genus,
            terms: self.terms.clone(),
        })
    }

    /// Coefficients lie in `ℤ[p, p⁻¹]`.
    pub fn has_laurent_integral_coeffs(&self) -> bool {
        self.terms.values().all(|c| {
            c.has_p_power_denominator()
                && c.numer().only_uses(&[Var::P])
                && c.numer().terms().iter().all(|(_, q)| q.is_integer())
        })
    }

    /// Exponent-vector key such as `"T^1 T1^0 [p]^2"`.
    pub fn key(genus: u8, e: &GenExps) -> String {
        HeckeGenerator::all(genus.max(1))
            .iter()
            .map(|g| format!("{}^{}", g.name(genus.max(1)), e[g.slot()]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_key(genus: u8, key: &str) -> Result<GenExps> {
        let gens = HeckeGenerator::all(genus);
        let mut e = [0u16; 4];
        for part in key.split_whitespace() {
            let (name, pow) = part
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("bad generator power {part:?}")))?;
            let g = gens
                .iter()
                .find(|g| g.name(genus) == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?} at genus {genus}")))?;
            e[g.slot()] = pow
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?;
        }
        Ok(e)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("genus".into(), Value::from(self.genus));
        let mut t = Map::new();
        for (e, c) in &self.terms {
            t.insert(Self::key(self.genus, e), ratfun_to_json(c));
        }
        m.insert("terms".into(), Value::Object(t));
        Value::Object(m)
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
            out.push((Self::parse_key(genus, k)?, ratfun_from_json(c)?));
        }
        Ok(Self::from_terms(genus, out))
    }

    fn joint_genus(&self, other: &Self) -> u8 {
        match (self.genus, other.genus) {
            (0, g) | (g, 0) => g,
            (a, b) if a == b => a,
            (a, b) => panic!("cannot combine Hecke elements of genus {a} and {b}"),
        }
    }
}

impl PartialEq for HeckeElement {
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

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = self.genus.max(1);
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let gens: Vec<String> = HeckeGenerator::all(g)
                    .into_iter()
                    .filter(|x| e[x.slot()] > 0)
                    .map(|x| match e[x.slot()] {
                        1 => x.name(g),
                        k => format!("{}^{}", x.name(g), k),
                    })
                    .collect();
                if gens.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", gens.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[genus {}] {}", self.genus, self)
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement {
            genus: self.joint_genus(rhs),
            terms: self.terms.clone(),
        };
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement {
            genus: self.genus,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &HeckeElement {
    type Output = HeckeElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement {
            genus: self.joint_genus(rhs),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = std::array::from_fn(|i| ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Ring for HeckeElement {
    fn zero() -> Self {
        HeckeElement::zero()
    }
    fn one() -> Self {
        HeckeElement::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_and_keys() {
        let t = HeckeElement::t(2);
        let b = HeckeElement::bracket_p(2);
        let e = &(&t * &t) * &b;
        let (k, _) = e.terms().iter().next().unwrap();
        assert_eq!(HeckeElement::key(2, k), "T^2 T1^0 [p]^1");
        assert_eq!(HeckeElement::parse_key(2, "T^2 T1^0 [p]^1").unwrap(), *k);
        assert!(HeckeElement::parse_key(1, "T1^1").is_err());
        assert_eq!(HeckeElement::key(3, &[0, 0, 1, 0]), "T^0 T1^0 T2^1 [p]^0");
    }

    #[test]
    fn scalars_adapt_to_genus() {
        let t = HeckeElement::t(1);
        let s = &t - &t;
        assert!(s.is_zero());
        let u = &HeckeElement::one() + &t;
        assert_eq!(u.genus(), 1);
        assert!(HeckeElement::t(3).with_genus(2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = &HeckeElement::t(2).scale(&RationalFunction::p_pow(-2))
            + &HeckeElement::bracket_p(2).scale(&RationalFunction::int(3));
        let back = HeckeElement::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
        assert!(e.has_laurent_integral_coeffs());
    }
}
