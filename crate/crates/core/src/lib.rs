//! Admissible monomial bases of the polynomial algebra `P_t = F2[x_1..x_t]`
//! over the mod-2 Steenrod algebra.
//!
//! The engine determines, for a given arity t and degree n, the monomials
//! whose classes form a basis of the quotient of `(P_t)_n` by the image of
//! the positive-degree Steenrod squares, together with the weight-vector
//! filtration of that quotient, the Kameko squaring map, the variable-adding
//! maps between arities, and the GL_t-invariant subspace.

pub mod arith;
pub mod cache;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod glt;
pub mod monomial;
pub mod oracle;
pub mod report;
pub mod steenrod;
pub mod suite;
pub mod summaps;

pub use engine::{Engine, EngineConfig, Strategy};
pub use error::{Error, Result};
pub use monomial::{Monomial, WeightVector};
pub use report::{BasisReport, Part, Scope};
pub use steenrod::{Polynomial, SqMode};

/// Version stamp recorded in every persisted report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
