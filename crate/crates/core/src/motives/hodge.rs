use std::fmt;

use crate::error::{Error, Result};

/// `c + k·K + l·L`, an integer affine form in two weight symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Affine {
    pub k: i64,
    pub l: i64,
    pub c: i64,
}

impl Affine {
    pub const fn constant(c: i64) -> Self {
        Affine { k: 0, l: 0, c }
    }

    pub const fn new(c: i64, k: i64, l: i64) -> Self {
        Affine { k, l, c }
    }

    /// The symbol `K`.
    pub const fn sym_k() -> Self {
        Affine { k: 1, l: 0, c: 0 }
    }

    /// The symbol `L`.
    pub const fn sym_l() -> Self {
        Affine { k: 0, l: 1, c: 0 }
    }

    pub fn is_constant(&self) -> bool {
        self.k == 0 && self.l == 0
    }

    pub fn eval(&self, k: i64, l: i64) -> i64 {
        self.c + self.k * k + self.l * l
    }

    pub fn scale(&self, s: i64) -> Self {
        Affine {
            k: self.k * s,
            l: self.l * s,
            c: self.c * s,
        }
    }
}

impl std::ops::Add for Affine {
    type Output = Affine;
    fn add(self, o: Affine) -> Affine {
        Affine {
            k: self.k + o.k,
            l: self.l + o.l,
            c: self.c + o.c,
        }
    }
}

impl std::ops::Sub for Affine {
    type Output = Affine;
    fn sub(self, o: Affine) -> Affine {
        self + o.scale(-1)
    }
}

impl std::ops::Neg for Affine {
    type Output = Affine;
    fn neg(self) -> Affine {
        self.scale(-1)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, name) in [(self.k, "k"), (self.l, "l")] {
            if coef == 0 {
                continue;
            }
            let sign = if coef < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = coef.abs();
            if mag == 1 {
                out.push_str(&format!("{sign}{name}"));
            } else {
                out.push_str(&format!("{sign}{mag}{name}"));
            }
        }
        if out.is_empty() {
            out = self.c.to_string();
        } else if self.c != 0 {
            out.push_str(&format!("{}{}", if self.c < 0 { "-" } else { "+" }, self.c.abs()));
        }
        f.write_str(&out)
    }
}

/// A multiset of Hodge numbers `(p, q)`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeType {
    pub pairs: Vec<(Affine, Affine)>,
    pub weight: Affine,
}

impl HodgeType {
    pub fn new(mut pairs: Vec<(Affine, Affine)>, weight: Affine) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((p, q)) = pairs.iter().find(|(p, q)| *p + *q != weight) {
            return Err(Error::InvalidInput(format!("pair ({p},{q}) has weight other than {weight}")));
        }
        pairs.sort();
        Ok(HodgeType { pairs, weight })
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    /// Pairs as integers; `None` if some entry still involves a symbol.
    pub fn concrete_pairs(&self) -> Option<Vec<(i64, i64)>> {
        self.pairs
            .iter()
            .map(|(p, q)| (p.is_constant() && q.is_constant()).then_some((p.c, q.c)))
            .collect()
    }

    pub fn specialize(&self, k: i64, l: i64) -> HodgeType {
        let w = Affine::constant(self.weight.eval(k, l));
        let pairs = self
            .pairs
            .iter()
            .map(|(p, q)| (Affine::constant(p.eval(k, l)), Affine::constant(q.eval(k, l))))
            .collect();
        HodgeType::new(pairs, w).expect("specialization keeps the weight")
    }

    pub fn is_symmetric(&self) -> bool {
        let mut swapped: Vec<_> = self.pairs.iter().map(|(p, q)| (*q, *p)).collect();
        swapped.sort();
        swapped == self.pairs
    }

    /// `[[p, q], …]` with entries rendered as affine forms.
    pub fn to_json(&self) -> serde_json::Value {
        let pair = |a: &Affine| match a.is_constant() {
            true => serde_json::Value::from(a.c),
            false => serde_json::Value::from(a.to_string()),
        };
        serde_json::json!({
            "rank": self.rank(),
            "weight": pair(&self.weight),
            "pairs": self.pairs.iter().map(|(p, q)| serde_json::json!([pair(p), pair(q)])).collect::<Vec<_>>(),
        })
    }
}

fn spin_pairs(n: u32, k: Affine) -> HodgeType {
    let mut pairs = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let (mut p, mut q) = (Affine::default(), Affine::default());
        for i in 1..=n {
            let term = k - Affine::constant(i as i64);
            if mask & (1 << (i - 1)) != 0 {
                p = p + term;
            } else {
                q = q + term;
            }
        }
        pairs.push((p, q));
    }
    let n = n as i64;
    let w = k.scale(n) - Affine::constant(n * (n + 1) / 2);
    HodgeType::new(pairs, w).expect("spin pairs have the right weight")
}

/// Hodge type of the spinor motive: `p = Σ_{i∈I}(k−i)`, `q = Σ_{j∈J}(k−j)` over the
/// `2^n` splittings `I ⊔ J = {1..n}`.
pub fn hodge_spin(n: u32, k: i64) -> Result<HodgeType> {
    if n == 0 || n > 16 {
        return Err(Error::InvalidInput(format!("genus {n} out of range")));
    }
    if k <= n as i64 {
        return Err(Error::WeightTooSmall(format!("k = {k} must exceed n = {n}")));
    }
    Ok(spin_pairs(n, Affine::constant(k)))
}

/// [`hodge_spin`] with the weight given as an affine form, e.g. [`Affine::sym_k`].
pub fn hodge_spin_symbolic(n: u32, k: Affine) -> Result<HodgeType> {
    if n == 0 || n > 16 {
        return Err(Error::InvalidInput(format!("genus {n} out of range")));
    }
    Ok(spin_pairs(n, k))
}

/// `H^{0,0} ⊕ ⊕_i (H^{−k+i,k−i} ⊕ H^{k−i,−k+i})`.
pub fn hodge_standard(n: u32, k: i64) -> HodgeType {
    let mut pairs = vec![(Affine::default(), Affine::default())];
    for i in 1..=n as i64 {
        let a = Affine::constant(k - i);
        pairs.push((-a, a));
        pairs.push((a, -a));
    }
    HodgeType::new(pairs, Affine::default()).expect("weight 0")
}

pub fn hodge_tensor(a: &HodgeType, b: &HodgeType) -> HodgeType {
    let pairs = a
        .pairs
        .iter()
        .flat_map(|(p1, q1)| b.pairs.iter().map(move |(p2, q2)| (*p1 + *p2, *q1 + *q2)))
        .collect();
    HodgeType::new(pairs, a.weight + b.weight).expect("weights add")
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftHodgeReport {
    pub m: u32,
    pub k: i64,
    pub l: i64,
    pub rank: usize,
    pub holds: bool,
    /// Pairs where the two multisets first differ, if any.
    pub first_mismatch: Option<((i64, i64), (i64, i64))>,
}

/// Compares `Sp(2m, k) ⊗ Sp(2m, k−2m)` with `Sp(4m, k)` as multisets.
pub fn check_lift_hodge(m: u32, k: i64) -> Result<LiftHodgeReport> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    if k <= 4 * m as i64 {
        return Err(Error::WeightTooSmall(format!("k = {k} must exceed 4m = {}", 4 * m)));
    }
    let l = k - 2 * m as i64;
    let lhs = hodge_tensor(&hodge_spin(2 * m, k)?, &hodge_spin(2 * m, l)?);
    let rhs = hodge_spin(4 * m, k)?;
    let lp = lhs.concrete_pairs().expect("concrete");
    let rp = rhs.concrete_pairs().expect("concrete");
    let first_mismatch = lp.iter().zip(&rp).find(|(a, b)| a != b).map(|(a, b)| (*a, *b));
    Ok(LiftHodgeReport {
        m,
        k,
        l,
        rank: rp.len(),
        holds: lp == rp,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: i64, q: i64) -> (i64, i64) {
        (p, q)
    }

    #[test]
    fn genus_one_and_two() {
        let h = hodge_spin(1, 12).unwrap();
        assert_eq!(h.concrete_pairs().unwrap(), vec![c(0, 11), c(11, 0)]);
        let k = 10;
        let h = hodge_spin(2, k).unwrap();
        let mut expect = vec![c(0, 2 * k - 3), c(k - 2, k - 1), c(k - 1, k - 2), c(2 * k - 3, 0)];
        expect.sort();
        assert_eq!(h.concrete_pairs().unwrap(), expect);
        assert_eq!(h.weight, Affine::constant(2 * k - 3));
        assert_eq!(hodge_spin(2, 2), Err(Error::WeightTooSmall("k = 2 must exceed n = 2".into())));
    }

    #[test]
    fn standard_type() {
        let h = hodge_standard(1, 6);
        assert_eq!(h.concrete_pairs().unwrap(), vec![c(-5, 5), c(0, 0), c(5, -5)]);
        assert_eq!(hodge_standard(3, 9).rank(), 7);
    }

    #[test]
    fn tensor_identity_and_rank() {
        let one = HodgeType::new(vec![(Affine::default(), Affine::default())], Affine::default()).unwrap();
        let h = hodge_spin(3, 7).unwrap();
        assert_eq!(hodge_tensor(&h, &one), h);
        assert_eq!(hodge_tensor(&h, &hodge_spin(2, 5).unwrap()).rank(), 32);
    }

    #[test]
    fn lift_hodge_against_brute_force() {
        // independent count: multiplicities of p over the 2^{4m} subsets
        for (m, k) in [(1u32, 8i64), (2, 12)] {
            let r = check_lift_hodge(m, k).unwrap();
            assert!(r.holds);
            assert_eq!(r.rank, 1 << (4 * m));
            let n = 4 * m as i64;
            let mut counts = std::collections::BTreeMap::new();
            for mask in 0u32..(1 << n) {
                let p: i64 = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).map(|i| k - i).sum();
                *counts.entry(p).or_insert(0) += 1;
            }
            let lhs = hodge_tensor(&hodge_spin(2 * m, k).unwrap(), &hodge_spin(2 * m, k - 2 * m as i64).unwrap());
            let mut lc = std::collections::BTreeMap::new();
            for (p, _) in lhs.concrete_pairs().unwrap() {
                *lc.entry(p).or_insert(0) += 1;
            }
            assert_eq!(lc, counts);
        }
        assert!(matches!(check_lift_hodge(1, 4), Err(Error::WeightTooSmall(_))));
    }

    #[test]
    fn symbolic_specializes() {
        let s = hodge_spin_symbolic(3, Affine::sym_k()).unwrap();
        assert_eq!(s.specialize(9, 0), hodge_spin(3, 9).unwrap());
        assert_eq!(Affine::new(-3, 2, 1).to_string(), "2k+l-3");
        assert_eq!(Affine::new(0, 0, -1).to_string(), "-l");
    }
}
