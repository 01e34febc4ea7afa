//! Tetrahedral curves: the monomial ideals `∩ (x,y)^{a_xy}` over the six
//! edges of the coordinate tetrahedron in `P³`.
//!
//! Everything here is a pure function of its inputs.

pub mod betti;
pub mod classify;
pub mod error;
pub mod gin;
pub mod groebner;
pub mod monomial;
pub mod resolution;
pub mod tuple;

pub use betti::{betti_table_oracle, BettiTable};
pub use classify::{classify, ClassificationReport};
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
pub use tuple::{ReductionStep, ReductionTrace, ReductionType, TetTuple};
