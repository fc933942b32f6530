//! Explicit real spinor representations of Clifford algebras.
//!
//! The algebraic layer (`division`, `clifford`, `matrix_rep`, `recipe`,
//! `spin`) is exact over [`Rational`]. The geometric layer (`lift`,
//! `surface`) works in `f64`.

pub mod clifford;
pub mod division;
pub mod error;
pub mod lift;
pub mod linalg;
pub mod matrix_rep;
pub mod rational;
pub mod recipe;
pub mod spin;
pub mod surface;

pub use clifford::{Blade, Multivector, Signature};
pub use division::{Algebra, KElement};
pub use error::{Error, Result};
pub use linalg::RMatrix;
pub use matrix_rep::{AlgebraTag, Commutant, GradedSpace, KMatrix, Side};
pub use rational::{rat, Rational};
pub use recipe::{Family, SpinorModule, Variant};
