//! Exact computations with the homology representation of the mapping class
//! group of the twice-marked torus, and with the liftable subgroups of its
//! k-fold cyclic branched covers.
//!
//! * [`word`] and [`rewrite`]: words in `T_a`, `T_b`, `T_c`, `ι` and braid
//!   rewriting.
//! * [`matrix`]: arbitrary-precision and residue matrices.
//! * [`homology`]: `Ψ`, `Ψ_k`, block forms and liftability.
//! * [`sl2`]: constructive SL₂(ℤ).
//! * [`liftable`]: generating sets, the kernel basis, constructive
//!   membership and identity checks.
//! * [`quotient`]: finite quotients, cosets and maximality.
//! * [`report`] and [`suites`]: verification reports.

pub mod error;
pub mod homology;
pub mod liftable;
pub mod matrix;
pub mod quotient;
pub mod report;
pub mod rewrite;
pub mod sl2;
pub mod suites;
pub mod word;

pub use error::{Error, Result};
pub use homology::{eval_psi, eval_psi_mod, lift_test, BlockForm, Cover};
pub use matrix::{ExactMat2, ExactMat3, ResidueMat3};
pub use word::{Symbol, TwistWord};
