//! Exact computations around the link family `L_{m,p}`: its multivariable
//! Alexander polynomial, the Seiberg-Witten invariant of the associated link
//! surgery manifolds and its basic classes, the integral homology bookkeeping
//! of the gluings, and a braid/Fox-calculus oracle that recomputes Alexander
//! polynomials of braid closures together with their axis.
//!
//! All arithmetic happens in [`laurent::LaurentPoly`], a sparse Laurent
//! polynomial ring over arbitrary-precision integers.

pub mod alexander;
pub mod braid;
pub mod error;
pub mod homology;
pub mod laurent;
pub mod matrix;
pub mod swcalc;
pub mod sweep;

mod serde_util;

pub use alexander::FamilyParams;
pub use error::{Error, Result};
pub use laurent::{gsum, Ctx, ExponentVector, LaurentError, LaurentPoly, Unit, VarContext};
pub use swcalc::SwResult;
