//! Exact construction and verification of Gelfand-Tsetlin orthogonal Appell bases
//! for homogeneous solutions of Hodge-de Rham and generalized Moisil-Théodoresco
//! systems in `R^m`.
//!
//! All arithmetic is over the rationals or Gaussian rationals; there is no floating
//! point anywhere in the crate.

pub mod clifford;
pub mod error;
pub mod ball;
pub mod basis;
pub mod factors;
pub mod json;
pub mod linalg;
pub mod mvpoly;
pub mod oracle;
pub mod scalar;
pub mod taylor;
pub mod verify;

pub use clifford::{blade_product, Blade, Multivector};
pub use error::{Error, Result};
pub use mvpoly::{MVPoly, Monomial};
pub use scalar::{Field, Scalar};
