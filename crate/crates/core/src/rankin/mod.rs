//! The Rankin convolution of two local Hecke algebras: partial fractions,
//! extraction of `R` and `S`, reconstruction in the tensor Hecke algebra,
//! the functional equation of `S` and Newton polygons.

pub mod feq;
pub mod newton;
pub mod operator;
pub mod reconstruct;
pub mod report;
pub mod series;
pub mod tensor;

pub use feq::{check_s_functional_equation, FunctionalEquationReport};
pub use newton::NewtonPolygon;
pub use operator::genus1_operator_form_check;
pub use reconstruct::{reconstruct_preimage, reconstruct_preimage_dense, reconstruct_series};
pub use report::{run_rankin, Check, RankinOptions, RankinRun};
pub use series::{
    combine_extract, combine_extract_genus2, tensor_partial_fractions, tensor_partial_fractions_genus2,
    tensor_series_genus1, RankinDecomposition,
};
pub use tensor::TensorHeckeElement;
