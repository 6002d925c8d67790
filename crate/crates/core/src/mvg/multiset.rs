use std::collections::BTreeMap;
use std::fmt;

use super::ElementId;

/// A finite multiset of element indices; absent elements have multiplicity zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multiset {
    counts: BTreeMap<ElementId, u64>,
    total: u64,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, element: ElementId, count: u64) {
        if count == 0 {
            return;
        }
        *self.counts.entry(element).or_insert(0) += count;
        self.total += count;
    }

    /// Builds the multiset whose multiplicity of `z` is `row[z]`.
    pub fn from_row(row: &[u64]) -> Self {
        let mut ms = Multiset::new();
        for (z, &c) in row.iter().enumerate() {
            ms.insert(z, c);
        }
        ms
    }

    pub fn count(&self, element: ElementId) -> u64 {
        self.counts.get(&element).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, u64)> + '_ {
        self.counts.iter().map(|(&z, &c)| (z, c))
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }
}

impl FromIterator<(ElementId, u64)> for Multiset {
    fn from_iter<I: IntoIterator<Item = (ElementId, u64)>>(iter: I) -> Self {
        let mut ms = Multiset::new();
        for (z, c) in iter {
            ms.insert(z, c);
        }
        ms
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (z, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{z}:{c}")?;
        }
        write!(f, "}}")
    }
}
