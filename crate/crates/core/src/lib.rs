//! Exact computations with finite multivalued groups.
//!
//! * [`mvg`]: multiplicity tables, axiom verification, the order-3 normal
//!   forms and isomorphism testing.
//! * [`algebra`]: finite fields, explicit groups, automorphism actions and the
//!   coset construction.
//! * [`srg`]: strongly regular graphs, their intersection numbers, the
//!   rank-3 family constructions and the multivalued group of a parameter set.
//! * [`classify`]: the catalogue of attainable rank-3 parameters and the
//!   decision procedure for whether an order-3 group is a coset group.

pub mod algebra;
pub mod classify;
mod error;
mod limits;
pub mod mvg;
pub mod srg;

pub use error::{Error, Result};
pub use limits::Limits;
