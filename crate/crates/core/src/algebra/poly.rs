//! Sparse multivariate polynomials over ℚ on a fixed, ordered variable alphabet.
//!
//! The alphabet is `p < u < x0 < … < x3 < y0 < … < y3 < X < at < ak < Lg`.
//! Monomials are compared lexicographically starting from the *largest*
//! variable, so `X` dominates every other variable and `p` is the least
//! significant. The variable `u` is a square root of `p`: every product is
//! reduced with `u² → p`, so no stored monomial carries `u` to a power above 1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::rational::ExactRational;
use super::ring::{ExactDomain, Ring};
use crate::error::{Error, Result};

pub const NVARS: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Var {
    P,
    U,
    X0,
    X1,
    X2,
    X3,
    Y0,
    Y1,
    Y2,
    Y3,
    X,
    /// α̃, the normalized Satake parameter of an elliptic eigenform.
    AlphaTilde,
    /// α(k), the unit-root parameter of a p-adic family.
    AlphaK,
    /// Uninterpreted placeholder for a local factor `L_p(g, St)`.
    Lg,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::P,
        Var::U,
        Var::X0,
        Var::X1,
        Var::X2,
        Var::X3,
        Var::Y0,
        Var::Y1,
        Var::Y2,
        Var::Y3,
        Var::X,
        Var::AlphaTilde,
        Var::AlphaK,
        Var::Lg,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::U => "u",
            Var::X0 => "x0",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::Y0 => "y0",
            Var::Y1 => "y1",
            Var::Y2 => "y2",
            Var::Y3 => "y3",
            Var::X => "X",
            Var::AlphaTilde => "at",
            Var::AlphaK => "ak",
            Var::Lg => "Lg",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    /// `x_i` for `i ≤ 3`.
    pub fn x(i: usize) -> Var {
        [Var::X0, Var::X1, Var::X2, Var::X3][i]
    }

    /// `y_i` for `i ≤ 3`.
    pub fn y(i: usize) -> Var {
        [Var::Y0, Var::Y1, Var::Y2, Var::Y3][i]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`Var::index`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.0[v.index()] = e;
        m
    }

    pub fn from_pairs(pairs: &[(Var, u16)]) -> Self {
        let mut m = Self::one();
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m.reduce_u()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Product of exponent vectors followed by `u² → p`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a + b;
        }
        Monomial(out).reduce_u()
    }

    fn reduce_u(mut self) -> Monomial {
        let u = Var::U.index();
        if self.0[u] >= 2 {
            self.0[Var::P.index()] += self.0[u] / 2;
            self.0[u] %= 2;
        }
        self
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Exponent-wise quotient, `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i].min(other.0[i]);
        }
        Monomial(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i].max(other.0[i]);
        }
        Monomial(out)
    }

    /// Canonical key, e.g. `p^2 x0^1 X^3`; the unit monomial is `1`.
    pub fn key(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        Var::ALL
            .iter()
            .filter(|v| self.exp(**v) > 0)
            .map(|v| format!("{}^{}", v.name(), self.exp(*v)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_key(s: &str) -> Result<Monomial> {
        let s = s.trim();
        let mut m = Monomial::one();
        if s == "1" || s.is_empty() {
            return Ok(m);
        }
        for tok in s.split_whitespace() {
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u16>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            let v = Var::from_name(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            m.0[v.index()] += e;
        }
        Ok(m.reduce_u())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for i in (0..NVARS).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// Sparse polynomial: terms sorted ascending in monomial order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, ExactRational)>,
}

const PAR_THRESHOLD: usize = 1 << 14;

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: impl Into<ExactRational>) -> Self {
        Self::term(Monomial::one(), c.into())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(ExactRational::from(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), ExactRational::one())
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        Self::term(Monomial::var(v, e).reduce_u(), ExactRational::one())
    }

    pub fn term(m: Monomial, c: ExactRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly {
                terms: vec![(m.reduce_u(), c)],
            }
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, ExactRational)>) -> Self {
        let mut acc: FxHashMap<Monomial, ExactRational> = FxHashMap::default();
        for (m, c) in iter {
            let m = m.reduce_u();
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, ExactRational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        MultiPoly { terms }
    }

    fn from_sorted_unchecked(terms: Vec<(Monomial, ExactRational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, ExactRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> ExactRational {
        self.coeff(&Monomial::one())
    }

    pub fn coeff(&self, m: &Monomial) -> ExactRational {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => ExactRational::zero(),
        }
    }

    /// Largest term in the monomial order.
    pub fn leading_term(&self) -> Option<&(Monomial, ExactRational)> {
        self.terms.last()
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exp(v)).min()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// True when every variable occurring is in `allowed`.
    pub fn only_uses(&self, allowed: &[Var]) -> bool {
        Var::ALL
            .iter()
            .filter(|v| !allowed.contains(v))
            .all(|v| !self.uses(*v))
    }

    /// Coefficient of `v^e`, as a polynomial free of `v`.
    pub fn coeff_of(&self, v: Var, e: u16) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone())),
        )
    }

    /// Coefficients `c_0, …, c_d` with `self = Σ c_i v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let Some(d) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut buckets: Vec<Vec<(Monomial, ExactRational)>> = vec![Vec::new(); d as usize + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
        }
        buckets.into_iter().map(MultiPoly::from_terms).collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        MultiPoly::from_terms(coeffs.iter().enumerate().flat_map(|(i, c)| {
            c.terms
                .iter()
                .map(move |(m, a)| (m.mul(&Monomial::var(v, i as u16)), a.clone()))
        }))
    }

    pub fn scale(&self, c: &ExactRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly::from_sorted_unchecked(self.terms.iter().map(|(m, a)| (*m, a * c)).collect())
    }

    pub fn mul_term(&self, m: &Monomial, c: &ExactRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        if m.exp(Var::U) == 0 {
            // multiplication by a u-free monomial is order preserving
            MultiPoly::from_sorted_unchecked(
                self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
            )
        } else {
            MultiPoly::from_terms(self.terms.iter().map(|(a, b)| (a.mul(m), b * c)))
        }
    }

    /// Divides every term by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MultiPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| a.checked_div(m).map(|q| (q, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(MultiPoly::from_sorted_unchecked(terms))
    }

    /// Greatest common monomial divisor of all terms (1 for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(*first, |g, (m, _)| g.gcd(m))
    }

    /// Exact quotient `num / den`, failing with `NotDivisible` when a remainder is left.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly> {
        if den.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        if den.is_monomial() {
            let (m, c) = &den.terms[0];
            let inv = c.recip().expect("nonzero");
            if m.exp(Var::U) == 0 {
                if let Some(q) = self.div_monomial(m) {
                    return Ok(q.scale(&inv));
                }
                return Err(Error::NotDivisible(format!(
                    "{} is not divisible by the monomial {}",
                    self.short(),
                    den
                )));
            }
        }
        if den.uses(Var::U) {
            return self.exact_divide_by_u_poly(den);
        }
        let (lm, lc) = den.leading_term().expect("nonzero").clone();
        let lc_inv = lc.recip().expect("nonzero");
        let rest: Vec<_> = den.terms[..den.terms.len() - 1].to_vec();
        let mut rem: BTreeMap<Monomial, ExactRational> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, ExactRational)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let Some(qm) = m.checked_div(&lm) else {
                return Err(Error::NotDivisible(format!(
                    "{} by {}: leftover term {} {}",
                    self.short(),
                    den.short(),
                    c,
                    m.key()
                )));
            };
            let qc = &c * &lc_inv;
            for (dm, dc) in &rest {
                let t = qm.mul(dm);
                let sub = &qc * dc;
                match rem.get_mut(&t) {
                    Some(e) => {
                        *e -= &sub;
                        if e.is_zero() {
                            rem.remove(&t);
                        }
                    }
                    None => {
                        rem.insert(t, -sub);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Ok(MultiPoly::from_sorted_unchecked(quot))
    }

    // With u² = p the ring is not a polynomial ring in u; divide in the
    // u-free representation `a + u b` by multiplying through by the conjugate.
    fn exact_divide_by_u_poly(&self, den: &MultiPoly) -> Result<MultiPoly> {
        let conj = den.u_conjugate();
        let norm = den * &conj;
        debug_assert!(!norm.uses(Var::U));
        let q = (self * &conj).exact_divide(&norm)?;
        if &(&q * den) != self {
            return Err(Error::NotDivisible(format!("{} by {}", self.short(), den.short())));
        }
        Ok(q)
    }

    /// Image under `u ↦ −u`.
    pub fn u_conjugate(&self) -> MultiPoly {
        MultiPoly::from_sorted_unchecked(
            self.terms
                .iter()
                .map(|(m, c)| (*m, if m.exp(Var::U) % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        )
    }

    /// Substitutes `v := value` everywhere.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let Some(d) = self.degree_in(v) else {
            return MultiPoly::zero();
        };
        let mut powers = vec![MultiPoly::one()];
        for i in 1..=d as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let coeffs = self.coeffs_in(v);
        coeffs
            .iter()
            .zip(powers.iter())
            .filter(|(c, _)| !c.is_zero())
            .fold(MultiPoly::zero(), |acc, (c, pw)| &acc + &(c * pw))
    }

    pub fn specialize(&self, v: Var, value: &ExactRational) -> MultiPoly {
        self.substitute(v, &MultiPoly::constant(value.clone()))
    }

    pub fn map_coeffs(&self, f: impl Fn(&ExactRational) -> ExactRational) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        Ring::pow(self, e)
    }

    fn short(&self) -> String {
        if self.terms.len() <= 6 {
            self.to_string()
        } else {
            format!("<polynomial with {} terms>", self.terms.len())
        }
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MultiPoly::from_sorted_unchecked(out)
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let accumulate = |chunk: &[(Monomial, ExactRational)]| {
            let mut acc: FxHashMap<Monomial, ExactRational> = FxHashMap::default();
            acc.reserve(chunk.len() * small.len());
            for (ma, ca) in chunk {
                for (mb, cb) in &small.terms {
                    let c = ca * cb;
                    match acc.entry(ma.mul(mb)) {
                        std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += &c,
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(c);
                        }
                    }
                }
            }
            MultiPoly::from_map(acc)
        };
        if small.len() * large.len() < PAR_THRESHOLD {
            return accumulate(&large.terms);
        }
        let chunk = (large.len() / rayon::current_num_threads().max(1)).max(64);
        large
            .terms
            .par_chunks(chunk)
            .map(accumulate)
            .reduce(MultiPoly::zero, |a, b| &a + &b)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                let body = Var::ALL
                    .iter()
                    .filter(|v| m.exp(**v) > 0)
                    .map(|v| match m.exp(*v) {
                        1 => v.name().to_string(),
                        e => format!("{}^{}", v.name(), e),
                    })
                    .collect::<Vec<_>>()
                    .join("*");
                f.write_str(&body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::from_sorted_unchecked(self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl ExactDomain for MultiPoly {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.exact_divide(divisor).ok()
    }
}

/// `1 - c·m·X` style helper: `1 - m` for a polynomial `m`.
pub fn one_minus(m: &MultiPoly) -> MultiPoly {
    &MultiPoly::one() - m
}

/// Product of all factors (1 for an empty list).
pub fn product<'a>(factors: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
    factors
        .into_iter()
        .fold(MultiPoly::one(), |acc, f| &acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::x(i))
    }

    #[test]
    fn difference_of_squares() {
        let a = &x(0) + &MultiPoly::one();
        let b = &x(0) - &MultiPoly::one();
        assert_eq!(&a * &b, &x(0).pow(2) - &MultiPoly::one());
    }

    #[test]
    fn u_squared_is_p() {
        let u = MultiPoly::var(Var::U);
        assert_eq!(&u * &u, MultiPoly::var(Var::P));
        assert_eq!(MultiPoly::var_pow(Var::U, 5), &MultiPoly::var_pow(Var::P, 2) * &u);
    }

    #[test]
    fn self_difference_is_empty() {
        let a = &x(0) + &MultiPoly::one();
        let d = &a - &a;
        assert!(d.is_zero());
        assert!(d.terms().is_empty());
    }

    #[test]
    fn exact_division() {
        let num = &x(0).pow(2) - &MultiPoly::one();
        let den = &x(0) - &MultiPoly::one();
        assert_eq!(num.exact_divide(&den).unwrap(), &x(0) + &MultiPoly::one());
        // (x1^2 y1 - x1 y1^2) / (x1 - x2)
        let y1 = MultiPoly::var(Var::Y1);
        let num = &(&x(1).pow(2) * &y1) - &(&x(1) * &y1.pow(2));
        let den = &x(1) - &x(2);
        assert!(matches!(num.exact_divide(&den), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn exact_division_with_u() {
        let u = MultiPoly::var(Var::U);
        let a = &u + &x(1);
        let b = &(&u * &x(2)) - &MultiPoly::int(3);
        let prod = &a * &b;
        assert_eq!(prod.exact_divide(&a).unwrap(), b);
    }

    #[test]
    fn monomial_order_puts_big_x_last() {
        let f = &(&MultiPoly::var(Var::X) + &x(3).pow(5)) + &MultiPoly::var_pow(Var::P, 9);
        assert_eq!(f.leading_term().unwrap().0, Monomial::var(Var::X, 1));
    }

    #[test]
    fn key_round_trip() {
        let m = Monomial::from_pairs(&[(Var::P, 2), (Var::X0, 1), (Var::X, 3)]);
        assert_eq!(m.key(), "p^2 x0^1 X^3");
        assert_eq!(Monomial::parse_key(&m.key()).unwrap(), m);
        assert_eq!(Monomial::parse_key("1").unwrap(), Monomial::one());
        assert!(Monomial::parse_key("q^2").is_err());
    }

    #[test]
    fn coefficient_extraction() {
        let f = &(&x(1) * &MultiPoly::var(Var::X).pow(2)) + &x(2);
        let cs = f.coeffs_in(Var::X);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], x(2));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], x(1));
        assert_eq!(MultiPoly::from_coeffs_in(Var::X, &cs), f);
    }

    #[test]
    fn substitution() {
        let f = &x(1).pow(2) + &x(2);
        let g = f.substitute(Var::X1, &(&x(3) + &MultiPoly::one()));
        let expect = &(&(&x(3).pow(2) + &x(3).scale(&2.into())) + &MultiPoly::one()) + &x(2);
        assert_eq!(g, expect);
    }

    #[test]
    fn large_products_agree_with_serial() {
        let a = product(
            (1..=4)
                .map(|i| &MultiPoly::one() + &x(i % 4))
                .collect::<Vec<_>>()
                .iter(),
        );
        let big = a.pow(6);
        let serial = (0..6).fold(MultiPoly::one(), |acc, _| &acc * &a);
        assert_eq!(big, serial);
    }
}
