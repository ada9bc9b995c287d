//! Bott's theorem on classical and isotropic Grassmannians, the Schur-functor
//! combinatorics around it, and an exact linear-algebra oracle for the
//! four-term complex that computes `H^0_m` and `H^1_m` of the Kähler
//! differentials of a Plücker algebra.

pub mod acceptance;
pub mod bott_grassmannian;
pub mod bott_isotropic;
pub mod cotangent_oracle;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod root_systems;
pub mod schur;
pub mod weights;

pub use error::{Error, ParseError, Result};
pub use weights::{Partition, Weight};
