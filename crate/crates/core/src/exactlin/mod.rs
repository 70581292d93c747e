//! Exact dense linear algebra over `Q` and `F_p`.
//!
//! Everything above this module is expressed as [`LinMap`]s composed with [`compose`],
//! tensored with [`kron`] (or the sparse [`Chain`] engine for long composites), and
//! analysed with the elimination routines in [`reduce`].

mod chain;
mod linmap;
pub mod reduce;
mod scalar;

pub use chain::{Chain, Factor};
pub use linmap::LinMap;
pub use reduce::{
    cokernel_projection, invert, kernel_basis, rank, right_inverse, solve,
    solve_factor_through_mono, Cokernel, Kernel,
};
pub use scalar::{Field, Scalar, MAX_PRIME};

use crate::error::Result;

/// `f ∘ g`.
pub fn compose(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    f.compose(g)
}

/// `f ⊗ g` under the row-major basis convention.
pub fn kron(f: &LinMap, g: &LinMap) -> LinMap {
    f.kron(g)
}
