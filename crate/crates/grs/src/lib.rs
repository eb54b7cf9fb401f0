//! Exact-arithmetic toolkit for simply-laced generalized root systems.
//!
//! A generalized root system is presented here by a symmetric integer Cartan
//! matrix with diagonal 2; the ordered standard basis is its root basis and
//! the Coxeter transformation is the product of the basis reflections in
//! basis order. On top of that presentation the crate provides:
//!
//! - [`linalg`] — exact integer/rational linear algebra (fraction-free
//!   elimination, integer kernels, definiteness); no floating point anywhere.
//! - [`presentation`] — the root-system data model: reflections, Coxeter
//!   matrices, the Euler form together with its uniqueness check, radicals,
//!   and morphism validation.
//! - [`weyl`] — finite enumeration of real roots and Weyl groups, conjugacy
//!   testing, axiom checking, irreducible components, subsystem closure.
//! - [`diagram`] — Carter diagrams, graph isomorphism, and the transcribed
//!   rank ≤ 8 diagram catalog.
//! - [`carter`] — admissible representations of Weyl elements, realization
//!   of catalog entries inside classical systems, and classification of
//!   positive-definite systems by the diagram of their Coxeter element.
//! - [`selftest`] — the acceptance suite run by `grs selftest`.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything is safe to use from concurrent contexts.
//!
//! ```
//! use grs::{carter, weyl, GrsPresentation};
//!
//! let a2 = GrsPresentation::from_i64_rows(&[vec![2, -1], vec![-1, 2]])?;
//! assert_eq!(weyl::enumerate_roots(&a2)?.len(), 6);
//! assert_eq!(a2.coxeter_order(100), grs::CoxeterOrder::Finite(3));
//! let classification = carter::classify_grs(&a2)?;
//! assert_eq!(classification.single_name(), Some("A_2"));
//! # Ok::<(), grs::Error>(())
//! ```

#![allow(clippy::needless_range_loop)] // dense index arithmetic throughout

pub mod carter;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod presentation;
pub mod selftest;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, KernelBasis, LinearSolution, RatMatrix};
pub use num_bigint::BigInt;
pub use presentation::{
    CoxeterOrder, EulerForm, GrsPresentation, LatticeMap, MorphismReport, Root, WeylElement,
};
