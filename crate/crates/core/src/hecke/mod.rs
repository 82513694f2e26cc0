//! Local Hecke algebras of genus 1 to 3, the spherical map, Euler factors
//! and Dirichlet-series expansion.

pub mod dirichlet;
pub mod element;
pub mod euler;
pub mod omega;
pub mod satake;

pub use dirichlet::{dirichlet_from_euler, DirichletCoefficients};
pub use element::{HeckeElement, HeckeGenerator};
pub use euler::{andrianov_e3, spinor_factor, standard_factor, standard_factor_cleared, triple_factor};
pub use omega::{omega_tp_delta, spherical_image, Normalization, Side};
pub use satake::{check_normalization, SatakeParams};
