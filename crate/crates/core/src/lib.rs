//! Exact toric geometry of thin quiver representations.
//!
//! The crate is organised bottom-up:
//!
//! - [`quiver`]: acyclic quivers, filters, nonoriented walks and primitive cycles.
//! - [`lattice`]: integer vectors over vertices and arrows, the incidence map,
//!   the cones `C_Q` / `X_Q` and constructive membership.
//! - [`poly`]: sparse exact-rational polynomials, the last-variable-first
//!   lexicographic term order, binomial telescoping and subduction.
//! - [`family`]: the five-parameter family of quivers `Q(p,q,r,s,t)`, the
//!   representation `P(p,q,r,s,t)` of the quiver `Δ`, and the certificates
//!   tying them together.
//!
//! All arithmetic is exact. Coefficients are arbitrary-precision rationals;
//! lattice entries and exponents are `i64` with overflow checks.

pub mod error;
pub mod family;
pub mod lattice;
pub mod limits;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod report;

pub use error::{Error, FamilyError, LatticeError, PolyError, QuiverError};
pub use limits::Limits;
