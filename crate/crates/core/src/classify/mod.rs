//! Parameter families of rank 3 graphs with a regular normal subgroup and
//! the coset test for multivalued groups of order 3.

mod families;
mod verdict;

pub use families::{
    catalogue_csv, collisions, enumerate_families, families_at, match_params, Collision,
    FamilyDescriptor, FamilyId, Witness, TABLE1,
};
pub use verdict::{classify_order3, derive_params, Verdict, VerdictKind};
