//! Exact combinatorics of matroids and the symbolic powers of their
//! Stanley-Reisner and cover ideals.
//!
//! The crate is organized around a structure theorem: every minimal generator
//! of a symbolic power of a matroid ideal is a product of squarefree minimal
//! generators of lower symbolic powers with nested supports. [`sympow`]
//! computes symbolic powers through that tower description, [`oracle`]
//! recomputes them from the definition for differential testing, and
//! [`invariants`] derives the closed-form consequences (symbolic defects,
//! Noether numbers, initial degrees, Waldschmidt constants, resurgence
//! bounds).

pub mod error;
pub mod formats;
pub mod fraction;
pub mod ground;
pub mod ideal;
pub mod invariants;
pub mod matroid;
pub mod matroid_ideals;
pub mod monomial;
pub mod oracle;
pub mod sympow;
pub mod text;

pub use error::{Error, Result};
pub use fraction::Fraction;
pub use ground::{GroundSubset, SubsetFamily};
pub use ideal::MonomialIdeal;
pub use matroid::Matroid;
pub use monomial::Monomial;
pub use sympow::{Side, SymbolicEngine};
