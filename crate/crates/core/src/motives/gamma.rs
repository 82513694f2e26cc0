use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    /// Spinor L-function in genus 3, weight `k`.
    Spin3,
    /// Spinor L-function in genus 4, weight `k`.
    Spin4,
    /// `Sp(f) ⊗ Sp(g)` for genus-2 forms of weights `k > l + 1`.
    TensorG2,
    /// Triple product of weights `k1 ≥ k2 ≥ k3`.
    Triple,
}

impl GammaKind {
    pub fn name(self) -> &'static str {
        match self {
            GammaKind::Spin3 => "spin3",
            GammaKind::Spin4 => "spin4",
            GammaKind::TensorG2 => "tensor-g2",
            GammaKind::Triple => "triple",
        }
    }
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spin3" | "spin_n3" => Ok(GammaKind::Spin3),
            "spin4" | "spin_n4" => Ok(GammaKind::Spin4),
            "tensor-g2" | "tensor_g2" => Ok(GammaKind::TensorG2),
            "triple" => Ok(GammaKind::Triple),
            _ => Err(Error::Parse(format!("unknown gamma kind {s:?}"))),
        }
    }
}

/// `Γ_R(s − shift)^{a_plus} Γ_R(s + 1 − shift)^{a_minus}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RShift {
    pub shift: i64,
    pub a_plus: u32,
    pub a_minus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sign {
    pub expr: String,
    /// Known value of the root number, if determined.
    pub value: Option<i8>,
}

/// `∏ Γ_C(s − a)` over `c_shifts`, with functional equation `s ↦ center − s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaData {
    pub kind: GammaKind,
    pub weights: Vec<i64>,
    pub c_shifts: Vec<i64>,
    /// Γ_R pairs already merged into `c_shifts` by duplication; informational.
    pub r_shifts: Vec<RShift>,
    pub center: i64,
    pub sign: Sign,
}

impl GammaData {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.name(),
            "weights": self.weights,
            "c_shifts": self.c_shifts,
            "r_shifts": self.r_shifts.iter().map(|r| serde_json::json!({
                "shift": r.shift, "a_plus": r.a_plus, "a_minus": r.a_minus
            })).collect::<Vec<_>>(),
            "center": self.center,
            "sign": { "expr": self.sign.expr, "value": self.sign.value },
        })
    }
}

fn spin_sign(n: u32) -> Sign {
    // k·2^{n−2} is even for n ≥ 3
    Sign {
        expr: format!("(-1)^(k*2^{})", n - 2),
        value: Some(1),
    }
}

pub fn gamma_data(kind: GammaKind, weights: &[i64]) -> Result<GammaData> {
    let arity = match kind {
        GammaKind::Spin3 | GammaKind::Spin4 => 1,
        GammaKind::TensorG2 => 2,
        GammaKind::Triple => 3,
    };
    if weights.len() != arity {
        return Err(Error::InvalidWeights(format!("{kind} takes {arity} weight(s), got {}", weights.len())));
    }
    let (mut c_shifts, r_shifts, center, sign) = match kind {
        GammaKind::Spin3 => {
            let k = weights[0];
            if k < 5 {
                return Err(Error::InvalidWeights(format!("spin3 needs k ≥ 5, got {k}")));
            }
            (vec![0, k - 3, k - 2, k - 1], vec![], 3 * k - 5, spin_sign(3))
        }
        GammaKind::Spin4 => {
            let k = weights[0];
            if k <= 5 {
                return Err(Error::InvalidWeights(format!("spin4 needs k > 5, got {k}")));
            }
            (
                vec![0, k - 4, k - 3, k - 2, k - 1, 2 * k - 7, 2 * k - 6, 2 * k - 5],
                vec![],
                4 * k - 9,
                spin_sign(4),
            )
        }
        GammaKind::TensorG2 => {
            let (k, l) = (weights[0], weights[1]);
            if l <= 2 || k <= l + 1 {
                return Err(Error::InvalidWeights(format!("tensor-g2 needs k > l + 1 and l > 2, got k = {k}, l = {l}")));
            }
            (
                vec![0, l - 2, l - 1, k - 2, k - 1, 2 * l - 3, k + l - 2, k + l - 3],
                vec![RShift {
                    shift: k + l - 3,
                    a_plus: 1,
                    a_minus: 1,
                }],
                2 * k + 2 * l - 5,
                Sign {
                    expr: "eps(f,g), |eps| = 1".into(),
                    value: None,
                },
            )
        }
        GammaKind::Triple => {
            let (k1, k2, k3) = (weights[0], weights[1], weights[2]);
            if k3 < 1 || k2 < k3 || k1 < k2 {
                return Err(Error::InvalidWeights(format!(
                    "triple needs k1 ≥ k2 ≥ k3 ≥ 1, got ({k1}, {k2}, {k3})"
                )));
            }
            (
                vec![0, k3 - 1, k2 - 1, k1 - 1],
                vec![],
                k1 + k2 + k3 - 2,
                Sign {
                    expr: "eps(f1,f2,f3)".into(),
                    value: None,
                },
            )
        }
    };
    c_shifts.sort_unstable();
    Ok(GammaData {
        kind,
        weights: weights.to_vec(),
        c_shifts,
        r_shifts,
        center,
        sign,
    })
}

/// Integers `s` with no `Γ_C(s − a)` pole at `s` or at `center − s`.
pub fn critical_values(g: &GammaData) -> Vec<i64> {
    let Some(&amax) = g.c_shifts.iter().max() else {
        return Vec::new();
    };
    (amax + 1..=g.center - amax - 1).collect()
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Complex Γ by the Lanczos approximation, reflected into `Re z ≥ 1/2`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::PoleAt(format!("{z}")));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Ok(Complex64::from(PI) / (s * gamma(Complex64::from(1.0) - z)?));
    }
    let z = z - 1.0;
    let mut acc = Complex64::from(LANCZOS[0]);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * acc)
}

/// `Γ_C(s) = 2(2π)^{−s} Γ(s)`.
pub fn gamma_c(s: Complex64) -> Result<Complex64> {
    Ok(2.0 * Complex64::from(2.0 * PI).powc(-s) * gamma(s)?)
}

/// `Γ_R(s) = π^{−s/2} Γ(s/2)`.
pub fn gamma_r(s: Complex64) -> Result<Complex64> {
    Ok(Complex64::from(PI).powc(-s / 2.0) * gamma(s / 2.0)?)
}

/// Relative error of the duplication formula `Γ_C(s) = Γ_R(s)Γ_R(s+1)`.
pub fn duplication_error(s: Complex64) -> Result<f64> {
    let lhs = gamma_c(s)?;
    let rhs = gamma_r(s)? * gamma_r(s + 1.0)?;
    Ok((lhs - rhs).norm() / lhs.norm())
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheck {
    pub name: String,
    pub rel_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl NumericCheck {
    fn new(name: String, rel_error: f64, tolerance: f64) -> Self {
        NumericCheck {
            name,
            rel_error,
            tolerance,
            passed: rel_error <= tolerance,
        }
    }
}

/// Special values, duplication on `s = 1/2 + it` and the recurrence
/// `Γ(s+1) = sΓ(s)`, over `samples` points with `t ∈ [−10, 10]`.
pub fn numeric_checks(samples: usize) -> Result<Vec<NumericCheck>> {
    let one = Complex64::from(1.0);
    let mut out = vec![
        NumericCheck::new("gamma_c(1) = 1/pi".into(), rel(gamma_c(one)?, Complex64::from(1.0 / PI)), 1e-12),
        NumericCheck::new("gamma_r(1) = 1".into(), rel(gamma_r(one)?, one), 1e-12),
    ];
    let n = samples.max(2);
    for i in 0..n {
        let t = -10.0 + 20.0 * i as f64 / (n - 1) as f64;
        let s = Complex64::new(0.5, t);
        out.push(NumericCheck::new(format!("duplication at 0.5{t:+.4}i"), duplication_error(s)?, 1e-10));
        out.push(NumericCheck::new(
            format!("recurrence at 0.5{t:+.4}i"),
            rel(gamma(s + 1.0)?, s * gamma(s)?),
            1e-10,
        ));
    }
    Ok(out)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}
