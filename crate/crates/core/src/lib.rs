//! Exact-arithmetic invariants of one-dimensional hypersurface rings
//! R = k[[x,y]]/(f) over finite fields and of numerical semigroup rings k[H].
//!
//! The crate computes the index (the order of the defining equation, which
//! equals the multiplicity for a hypersurface), the generalized Loewy length
//! (the least n with m^n contained in a parameter ideal), and the graded
//! analogues, with every containment decided by exact linear algebra over
//! GF(q) or by integer semigroup membership.

pub mod error;
pub mod gf;
pub mod hyper;
pub mod linalg;
pub mod poly;
pub mod sgp;

pub use error::{Error, Result};
