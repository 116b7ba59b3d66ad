//! Constructions and exact verification of equidistant codes over finite
//! vector spaces: constant-dimension subspace codes (sunflowers, balls, codes
//! from the Plücker embedding) and equidistant constant-rank matrix codes.

pub mod codes;
pub mod constructions;
pub mod document;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod rankmetric;
pub mod search;
pub mod subspace;

pub use codes::{CodeProfile, SubspaceCode};
pub use error::{Error, Result};
pub use gf::{FieldCtx, FieldElement};
pub use linalg::Matrix;
pub use subspace::Subspace;
