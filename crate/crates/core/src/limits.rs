use crate::error::{Error, Result};

/// Size caps for explicit constructions.
///
/// The defaults keep every construction at desk scale: groups and fields of
/// at most 4096 elements, action groups of at most 20000 automorphisms and
/// graphs of at most 4096 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_group: usize,
    pub max_action: usize,
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group: 4096,
            max_action: 20_000,
            max_vertices: 4096,
        }
    }
}

impl Limits {
    /// The same cap applied to every kind of object.
    pub fn uniform(cap: usize) -> Self {
        Limits {
            max_group: cap,
            max_action: cap,
            max_vertices: cap,
        }
    }

    pub(crate) fn check_group(&self, requested: u128) -> Result<usize> {
        check("group order", requested, self.max_group)
    }

    pub(crate) fn check_action(&self, requested: u128) -> Result<usize> {
        check("action group order", requested, self.max_action)
    }

    pub(crate) fn check_vertices(&self, requested: u128) -> Result<usize> {
        check("vertex count", requested, self.max_vertices)
    }
}

fn check(what: &'static str, requested: u128, cap: usize) -> Result<usize> {
    if requested > cap as u128 {
        Err(Error::ResourceLimit {
            what,
            requested,
            cap,
        })
    } else {
        Ok(requested as usize)
    }
}

/// `base^exp` as u128, or `None` on overflow.
pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}
