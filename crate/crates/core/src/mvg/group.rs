use crate::error::{invalid, Error, Result};

use super::Multiset;

/// Index of an element of a multivalued group.
pub type ElementId = usize;

/// A finite n-valued group given by its multiplicity table.
///
/// Construction checks only the shape of the data: dimensions, that `star`
/// is a permutation, and that every product `x * y` has exactly `n` entries.
/// The identity, inverse and associativity axioms are the business of
/// [`verify_axioms`](super::verify_axioms); builders in this crate never
/// return a table that fails them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivaluedGroup {
    names: Vec<String>,
    n: u64,
    identity: ElementId,
    star: Vec<ElementId>,
    table: Vec<u64>,
}

impl MultivaluedGroup {
    /// `table[x][y][z]` is the multiplicity of `z` in `x * y`.
    pub fn new(
        names: Vec<String>,
        n: u64,
        identity: ElementId,
        star: Vec<ElementId>,
        table: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self> {
        let order = names.len();
        if table.len() != order || table.iter().any(|r| r.len() != order) {
            return Err(invalid(format!("table must be {order}x{order}x{order}")));
        }
        let mut flat = Vec::with_capacity(order * order * order);
        for row in &table {
            for cell in row {
                if cell.len() != order {
                    return Err(invalid(format!("table must be {order}x{order}x{order}")));
                }
                flat.extend_from_slice(cell);
            }
        }
        Self::from_flat(names, n, identity, star, flat)
    }

    /// Same as [`new`](Self::new) with the table flattened in `x, y, z` order.
    pub fn from_flat(
        names: Vec<String>,
        n: u64,
        identity: ElementId,
        star: Vec<ElementId>,
        table: Vec<u64>,
    ) -> Result<Self> {
        let order = names.len();
        if order == 0 {
            return Err(invalid("a multivalued group needs at least one element"));
        }
        if n == 0 {
            return Err(invalid("valency n must be at least 1"));
        }
        if identity >= order {
            return Err(invalid(format!("identity {identity} out of range")));
        }
        if star.len() != order {
            return Err(invalid("star must have one entry per element"));
        }
        let mut seen = vec![false; order];
        for &s in &star {
            if s >= order || std::mem::replace(&mut seen[s], true) {
                return Err(invalid("star must be a permutation of the elements"));
            }
        }
        if table.len() != order * order * order {
            return Err(invalid(format!("table must be {order}x{order}x{order}")));
        }
        for x in 0..order {
            for y in 0..order {
                let row = &table[(x * order + y) * order..][..order];
                let sum = row
                    .iter()
                    .try_fold(0u64, |acc, &c| acc.checked_add(c))
                    .ok_or_else(|| invalid("row sum overflows"))?;
                if sum != n {
                    return Err(invalid(format!(
                        "product {x}*{y} has {sum} entries, expected n = {n}"
                    )));
                }
            }
        }
        Ok(MultivaluedGroup {
            names,
            n,
            identity,
            star,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// The valency `n`.
    pub fn valency(&self) -> u64 {
        self.n
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn star(&self, x: ElementId) -> ElementId {
        self.star[x]
    }

    pub fn stars(&self) -> &[ElementId] {
        &self.star
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order()
    }

    /// Multiplicity of `z` in `x * y`. Panics on out-of-range indices.
    #[inline]
    pub fn mult(&self, x: ElementId, y: ElementId, z: ElementId) -> u64 {
        let order = self.order();
        self.table[(x * order + y) * order + z]
    }

    /// The multiplicities of `x * y` indexed by element.
    #[inline]
    pub fn row(&self, x: ElementId, y: ElementId) -> &[u64] {
        let order = self.order();
        &self.table[(x * order + y) * order..][..order]
    }

    pub fn flat_table(&self) -> &[u64] {
        &self.table
    }

    /// The product multiset `x * y`.
    pub fn product(&self, x: ElementId, y: ElementId) -> Result<Multiset> {
        let order = self.order();
        if x >= order || y >= order {
            return Err(invalid(format!(
                "element index out of range: ({x}, {y}) with order {order}"
            )));
        }
        Ok(Multiset::from_row(self.row(x, y)))
    }

    /// The diagonal multiplicity `m(x)`: how often the identity occurs in `x * x*`.
    pub fn diagonal(&self, x: ElementId) -> u64 {
        self.mult(x, self.star[x], self.identity)
    }

    /// Every multiplicity multiplied by `factor`; the valency becomes `factor * n`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        if factor == 0 {
            return Err(invalid("scaling factor must be positive"));
        }
        let n = self
            .n
            .checked_mul(factor)
            .ok_or_else(|| Error::Parameter("scaled valency overflows".into()))?;
        let table = self.table.iter().map(|&c| c * factor).collect();
        Ok(MultivaluedGroup {
            names: self.names.clone(),
            n,
            identity: self.identity,
            star: self.star.clone(),
            table,
        })
    }

    /// The group transported along the bijection `perm` (old index -> new index).
    pub fn relabeled(&self, perm: &[ElementId]) -> Result<Self> {
        let order = self.order();
        let mut inverse = vec![usize::MAX; order];
        if perm.len() != order {
            return Err(invalid("relabeling must cover every element"));
        }
        for (old, &new) in perm.iter().enumerate() {
            if new >= order || inverse[new] != usize::MAX {
                return Err(invalid("relabeling must be a bijection"));
            }
            inverse[new] = old;
        }
        let mut table = vec![0u64; order * order * order];
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    table[(perm[x] * order + perm[y]) * order + perm[z]] = self.mult(x, y, z);
                }
            }
        }
        let names = inverse.iter().map(|&old| self.names[old].clone()).collect();
        let star = inverse.iter().map(|&old| perm[self.star[old]]).collect();
        Ok(MultivaluedGroup {
            names,
            n: self.n,
            identity: perm[self.identity],
            star,
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic3() -> MultivaluedGroup {
        let mut table = vec![vec![vec![0u64; 3]; 3]; 3];
        for x in 0..3 {
            for y in 0..3 {
                table[x][y][(x + y) % 3] = 1;
            }
        }
        MultivaluedGroup::new(
            vec!["0".into(), "1".into(), "2".into()],
            1,
            0,
            vec![0, 2, 1],
            table,
        )
        .unwrap()
    }

    #[test]
    fn product_reads_the_table() {
        let g = cyclic3();
        let p = g.product(1, 2).unwrap();
        assert_eq!(p.total(), 1);
        assert_eq!(p.count(0), 1);
        assert!(g.product(3, 0).is_err());
    }

    #[test]
    fn rejects_bad_row_sum() {
        let mut table = vec![vec![vec![0u64; 1]; 1]; 1];
        table[0][0][0] = 2;
        assert!(MultivaluedGroup::new(vec!["e".into()], 1, 0, vec![0], table).is_err());
    }

    #[test]
    fn rejects_non_permutation_star() {
        let g = cyclic3();
        let table = g.flat_table().to_vec();
        let err = MultivaluedGroup::from_flat(g.names().to_vec(), 1, 0, vec![0, 0, 1], table);
        assert!(err.is_err());
    }

    #[test]
    fn relabel_round_trip() {
        let g = cyclic3();
        let h = g.relabeled(&[0, 2, 1]).unwrap();
        assert_eq!(h.mult(2, 2, 1), 1);
        assert_eq!(h.relabeled(&[0, 2, 1]).unwrap(), g);
    }
}
