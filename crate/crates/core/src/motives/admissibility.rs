use num_traits::ToPrimitive;

use crate::algebra::ExactRational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthKind {
    Bounded,
    LogGrowth,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityReport {
    pub ord_alpha: ExactRational,
    pub kind: GrowthKind,
    /// Exponent `h = ⌊2·ord⌋ + 1` of `o(log^h)` growth.
    pub h: Option<u64>,
}

impl AdmissibilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ord_alpha": self.ord_alpha.to_ratio_string(),
            "kind": match self.kind { GrowthKind::Bounded => "bounded", GrowthKind::LogGrowth => "log-growth" },
            "h": self.h,
        })
    }
}

pub fn padic_admissibility(ord_alpha: &ExactRational) -> Result<AdmissibilityReport> {
    if ord_alpha.is_negative() {
        return Err(Error::NegativeOrder(ord_alpha.to_ratio_string()));
    }
    if ord_alpha.is_zero() {
        return Ok(AdmissibilityReport {
            ord_alpha: ord_alpha.clone(),
            kind: GrowthKind::Bounded,
            h: None,
        });
    }
    let two = ExactRational::from_integer(2);
    let h: num_bigint::BigInt = (&two * ord_alpha).floor() + 1;
    let h = h
        .to_u64()
        .ok_or_else(|| Error::InvalidInput(format!("h = {h} out of range")))?;
    Ok(AdmissibilityReport {
        ord_alpha: ord_alpha.clone(),
        kind: GrowthKind::LogGrowth,
        h: Some(h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn cases() {
        assert_eq!(padic_admissibility(&q(0, 1)).unwrap().kind, GrowthKind::Bounded);
        assert_eq!(padic_admissibility(&q(1, 1)).unwrap().h, Some(3));
        assert_eq!(padic_admissibility(&q(1, 2)).unwrap().h, Some(2));
        assert_eq!(padic_admissibility(&q(1, 3)).unwrap().h, Some(1));
        assert!(matches!(padic_admissibility(&q(-1, 2)), Err(Error::NegativeOrder(_))));
    }
}
