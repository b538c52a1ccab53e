//! Exhaustive axiom checking and order analysis for effect algebras and
//! sequential effect algebras.
//!
//! The centerpiece is E₀, a countable sequential effect algebra with elements
//! `0, 1, aₙ, bₙ, c_{Λ,n}, d_{Λ,n}` whose sharp elements admit no least
//! sharp upper bound for `a₁`. The crate provides:
//!
//! - [`element`] and [`ops`]: the symbolic elements and the exact ⊕/∘ tables;
//! - [`fragment`]: finite sub-universes used as quantification domains;
//! - [`kernel`]: the generic [`AlgebraInstance`] interface and the EA/SEA verifiers;
//! - [`mutation`]: single-rule table mutations used as negative controls;
//! - [`order`]: bounds, meets, joins and sharp elements inside a carrier;
//! - [`analysis`]: the dominator refutation and descending-chain evidence for E₀;
//! - [`reference`](mod@reference): Boolean and rational-interval instances;
//! - [`cli`]: the `seacheck` command line.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod analysis;
pub mod cli;
pub mod element;
pub mod fragment;
pub mod kernel;
pub mod mutation;
pub mod ops;
pub mod order;
pub mod reference;

pub use element::{Element, Index, IndexSet};
pub use fragment::Fragment;
pub use kernel::{
    verify_ea, verify_sea, AlgebraInstance, Axiom, CheckMode, VerifyOptions, VerifyReport,
    Violation,
};
