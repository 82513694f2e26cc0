//! Ikeda and Ikeda-Miyawaki parameters, Eisenstein lifting evidence and
//! p-adic Eisenstein families.

pub mod eisenstein;
pub mod family;
pub mod ikeda;

pub use eisenstein::{eisenstein_lift_evidence, EisensteinLiftReport};
pub use family::{
    eisenstein_family_coeff, eisenstein_family_table, kummer_check, slope, slope_quadratic, slope_value, triple_slope,
    KummerReport, SlopeInput,
};
pub use ikeda::{
    family_substitution_consistent, hecke_eigenvalue, hecke_quadratic, hecke_quadratic_check, ikeda_family_satake,
    ikeda_satake, lift_standard_factor, shifted_product, verify_ikeda_standard, verify_ikeda_standard_params,
    IkedaStandardReport, LiftParams, QuadraticReport,
};
