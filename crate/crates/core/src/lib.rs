//! Homotopy types of sphere fibrations over spheres with mod `n` Moore-space
//! total-space skeleta: the groups `K_k^n`, the self-equivalence action on
//! them, and the count `G_k^n` of orbits of admissible attaching maps.
//!
//! ```
//! let r = spherefib::classify::cross_validate(2, 12).unwrap();
//! assert_eq!(r.brute_force_g, 6);
//! ```

pub mod abelian;
pub mod action;
pub mod classify;
pub mod cli;
pub mod error;
pub mod kgroups;
pub mod numtheory;

pub use abelian::{AbelianGroup, Endo, GroupElement, Partition};
pub use action::{EpsilonRule, SelfEquivalence};
pub use classify::{brute_force_classify, closed_form_g, cross_validate, Branch, ClassificationResult};
pub use error::{Error, Result};
pub use kgroups::{build_k, KGroup, Notation, SphereGenerator};
