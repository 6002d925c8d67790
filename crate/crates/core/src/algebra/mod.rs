//! Finite fields, explicit finite groups, automorphism actions and the coset
//! construction of multivalued groups.

pub mod arith;
mod coset;
mod field;
mod format;
mod group;

pub use arith::{is_prime, is_prime_power, is_sum_of_two_squares, mult_order};
pub use coset::{coset_group, coset_group_from_homomorphism, representative_independence};
pub use field::{make_field, FieldElement, FiniteField};
pub use format::{
    action_from_json, action_to_json, group_from_json, group_to_json, ACT_FORMAT, GRP_FORMAT,
};
pub use group::{
    close_action, make_elementary_abelian, orbits, ActionGroup, Automorphism, FiniteGroup,
    GroupElement, OrbitPartition,
};
