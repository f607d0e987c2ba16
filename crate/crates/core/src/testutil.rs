//! Hand-computed fixtures shared by unit tests.

use crate::catalog::{H, X, Y};
use crate::exact::int;
use crate::lie::LieAlgebra;

/// Dual bracket on `sl(2)*` induced by `r = H⊗X − X⊗H`, worked out by hand:
/// `[H*,X*] = 2H*`, `[H*,Y*] = 0`, `[X*,Y*] = −2Y*`.
pub(crate) fn fl_dual() -> LieAlgebra {
    LieAlgebra::new(
        ["H*", "X*", "Y*"].iter().map(|s| s.to_string()).collect(),
        [(H, X, H, int(2)), (X, Y, Y, int(-2))],
    )
    .expect("Jacobi holds")
}
