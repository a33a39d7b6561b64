//! Model dimension and degrees of freedom for hierarchical log-linear models.
//!
//! A hierarchical model is described by an abstract simplicial complex on the
//! variables `1..=m` together with the number of levels of each variable. The
//! rank of its 0/1 design matrix equals the coarse exponential Hilbert series of
//! the complex evaluated at `x_i = log(r_i)`, i.e. `Σ_F Π_{f∈F} (r_f - 1)` over
//! all faces. With equal level counts this collapses to a polynomial in `r`
//! whose coefficients (the e-vector) are a binomial transform of the face
//! vector.
//!
//! The crate computes those quantities exactly and ships an explicit
//! design-matrix rank oracle to check them:
//!
//! - [`complex`]: complexes, faces, f-vectors, minimal non-faces
//! - [`hilbert`]: e-vectors, exact series evaluation, truncated series oracle
//! - [`design`]: the design matrix `A_Γ` and its exact rank
//! - [`engine`]: rank formulas, reports and the named model families
//! - [`enumerate`]: exhaustive and random complex generation for sweeps

pub mod complex;
pub mod design;
pub mod engine;
pub mod enumerate;
mod error;
pub mod families;
pub mod hilbert;
pub mod linalg;

pub use complex::{FVector, Face, SimplicialComplex};
pub use design::{DesignMatrix, ModelSpec, Verification, DEFAULT_SIZE_CAP};
pub use engine::{Method, RankReport};
pub use error::{Error, Result};
pub use hilbert::EVector;
