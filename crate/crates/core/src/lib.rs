//! Exact verification and construction of Reynolds structures on finite
//! dimensional Lie algebras over ℚ.
//!
//! Every identity check is exhaustive over basis tuples and returns a
//! [`Certificate`]; constructions validate their hypotheses first and return
//! [`AlgError::Hypothesis`] when they fail.

pub mod bialgebra;
pub mod block;
pub mod catalog;
pub mod cert;
pub mod cybe;
pub mod error;
pub mod exact;
pub mod io;
pub mod lie;
pub mod matched;
pub mod nslie;
pub mod report;
pub mod reynolds;
pub mod rotabaxter;
pub mod tensor;
#[cfg(test)]
mod testutil;

pub use cert::{Certificate, Violation};
pub use error::{AlgError, Result};
pub use exact::{fmt_rat, int, parse_rat, rat, Matrix, Rat, Vector};
pub use lie::{BilinForm, BilinearMap, LieAlgebra, Representation};
pub use report::Report;
pub use reynolds::{ReynoldsLieAlgebra, ReynoldsRep};
pub use tensor::{Tensor2, Tensor3};
