//! Finite n-valued groups stored as integer multiplicity tables.
//!
//! A group of order `N` and valency `n` is a table `m[x][y][z]` giving the
//! multiplicity of `z` in the product multiset `x * y`; every product has
//! exactly `n` entries counted with multiplicity.

mod axioms;
mod format;
mod group;
mod iso;
mod multiset;
mod order3;

pub use axioms::{
    check_reciprocity, verify_all, verify_axioms, verify_involutive, Axiom, AxiomReport,
    Counterexample,
};
pub use format::{from_json, to_json, MVG_FORMAT};
pub use group::{ElementId, MultivaluedGroup};
pub use iso::{are_isomorphic, is_isomorphism};
pub use multiset::Multiset;
pub use order3::{
    build_type1, build_type2, build_xk, signature, Order3Form, Signature, SignatureKind,
};
