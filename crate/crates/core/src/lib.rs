//! Exact-arithmetic library for multivariate Eulerian polynomials of labeled
//! posets, the descent-bottom (DAB) and Dyck-path algebras with their
//! stability-preserving product, and certification machinery for
//! real-rootedness and stability.
//!
//! Everything algebraic is computed over arbitrary-precision rationals; the
//! stability checkers distinguish exact decisions (`Certified`/`Refuted`) from
//! sampled evidence (`Inconclusive`).
//!
//! With the default `parallel` feature the enumeration and sampling inner
//! loops run on rayon; building with `--no-default-features` selects the
//! sequential fallbacks with identical results.

pub mod dyck;
pub mod error;
pub mod eulerian;
pub mod fqsym;
pub mod permstat;
pub mod polyring;
pub mod poset;
pub mod stability;
pub mod verify;

pub(crate) mod exec;

pub use error::{Error, Result};
pub use permstat::Permutation;
pub use polyring::{Monomial, Poly, UnivariatePoly, VarId};
pub use poset::LabeledPoset;
pub use stability::{Region, StabilityVerdict};
