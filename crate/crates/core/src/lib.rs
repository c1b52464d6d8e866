//! Exact structure-constant toolkit for bialgebras, unital infinitesimal bialgebras and
//! their two-operation variants (2as, 2b, 22b).

pub mod axioms;
pub mod bundle;
pub mod catalog;
pub mod classify;
pub mod constructions;
pub mod derived;
pub mod error;
pub mod registry;
pub mod scalar;
pub mod tensor;

pub use axioms::{
    check_algebra, check_bialgebra, check_bundle, check_coalgebra, check_infinitesimal, CheckReport,
};
pub use bundle::{Bundle, BundleKind};
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use tensor::{
    evaluate_comult, evaluate_mult, tensor_square_product, ComultTensor, LinearEndo, MultTensor,
    Tensor2,
};
