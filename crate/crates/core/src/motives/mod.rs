//! Hodge types, gamma factors, critical strips and the admissibility exponent.

pub mod admissibility;
pub mod gamma;
pub mod hodge;

pub use admissibility::{padic_admissibility, AdmissibilityReport, GrowthKind};
pub use gamma::{
    critical_values, duplication_error, gamma, gamma_c, gamma_data, gamma_r, numeric_checks, GammaData, GammaKind,
    NumericCheck, RShift, Sign,
};
pub use hodge::{
    check_lift_hodge, hodge_spin, hodge_spin_symbolic, hodge_standard, hodge_tensor, Affine, HodgeType,
    LiftHodgeReport,
};
