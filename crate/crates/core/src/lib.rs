//! Exact computation and verification of the derivative polynomials of
//! `tan` and `sec`, written as polynomials in `y = tan x`, `z = sec x`, and
//! of the integer triangles read off them.
//!
//! Everything is exact (`BigInt` / `BigRational`); floating point appears
//! only in the normal-approximation diagnostic of [`analytic::clt_report`].

pub mod analytic;
pub mod error;
pub mod exact;
pub mod export;
pub mod identities;
pub mod operator;
pub mod oracle;
pub mod triangle;
pub mod verify;
pub mod yz;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, TruncSeries, UniPoly};
pub use triangle::{Family, TriangleRow};
pub use yz::YZPoly;
