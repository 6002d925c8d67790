use std::collections::HashMap;

use crate::error::{invalid, Error, Result};
use crate::mvg::{verify_all, MultivaluedGroup};

use super::group::{orbits, ActionGroup, Automorphism, FiniteGroup, GroupElement, OrbitPartition};

/// The coset multivalued group of `group` under `action`.
///
/// Elements are the orbits (identity first), the valency is `|A|`, and with
/// least representatives `g` of `x` and `h` of `y`,
/// `m[x][y][z] = #{a in A : g * a(h) in z}`. The inverse of `x` is the orbit
/// of `g^-1`.
pub fn coset_group(group: &FiniteGroup, action: &ActionGroup) -> Result<MultivaluedGroup> {
    let images: Vec<&Automorphism> = action.elements().iter().collect();
    build(group, action, &images)
}

/// The coset group for a possibly non-faithful action: `images` lists
/// `phi(a)` for every element `a` of the acting group, with repetition.
///
/// The distinct images must form a group and every image must occur equally
/// often (the fibres of a homomorphism are kernel cosets). The result is the
/// faithful coset group with every multiplicity scaled by the kernel order.
pub fn coset_group_from_homomorphism(
    group: &FiniteGroup,
    images: &[Automorphism],
) -> Result<MultivaluedGroup> {
    let mut fibres: HashMap<&Automorphism, usize> = HashMap::new();
    for a in images {
        Automorphism::new(group, a.images())?;
        *fibres.entry(a).or_insert(0) += 1;
    }
    let kernel = *fibres
        .values()
        .next()
        .ok_or_else(|| invalid("the acting group must be nonempty"))?;
    if fibres.values().any(|&c| c != kernel) {
        return Err(invalid("homomorphism fibres must all have the same size"));
    }
    let distinct: Vec<Automorphism> = fibres.keys().map(|&a| a.clone()).collect();
    for a in &distinct {
        for b in &distinct {
            if !fibres.contains_key(&a.then(b)) {
                return Err(invalid(
                    "automorphism images are not closed under composition",
                ));
            }
        }
    }
    let action = ActionGroup::from_closed(distinct);
    let refs: Vec<&Automorphism> = images.iter().collect();
    build_with(group, &orbits(group, &action), &refs)
}

fn build(
    group: &FiniteGroup,
    action: &ActionGroup,
    images: &[&Automorphism],
) -> Result<MultivaluedGroup> {
    build_with(group, &orbits(group, action), images)
}

fn build_with(
    group: &FiniteGroup,
    part: &OrbitPartition,
    images: &[&Automorphism],
) -> Result<MultivaluedGroup> {
    let k = part.len();
    let mut table = vec![0u64; k * k * k];
    for (x, ox) in part.orbits.iter().enumerate() {
        let g = ox[0];
        for (y, oy) in part.orbits.iter().enumerate() {
            let h = oy[0];
            for a in images {
                let z = part.orbit_of[group.op(g, a.apply(h))];
                table[(x * k + y) * k + z] += 1;
            }
        }
    }
    let star = part
        .orbits
        .iter()
        .map(|o| part.orbit_of[group.inv(o[0])])
        .collect();
    let names = (0..k)
        .map(|i| {
            if i == 0 {
                "e".to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect();
    let g = MultivaluedGroup::from_flat(names, images.len() as u64, 0, star, table)?;
    let report = verify_all(&g);
    if let Some(c) = report.first_failure() {
        return Err(Error::Internal(format!(
            "coset group fails {} at {:?}",
            c.axiom, c.witness
        )));
    }
    Ok(g)
}

/// Recomputes every multiplicity from every representative pair and compares
/// with the least-representative table. Returns the first disagreeing
/// `(g, h)` pair, or `None` when the construction is representative
/// independent.
pub fn representative_independence(
    group: &FiniteGroup,
    action: &ActionGroup,
    table: &MultivaluedGroup,
) -> Option<(GroupElement, GroupElement)> {
    let part = orbits(group, action);
    let k = part.len();
    let mut counts = vec![0u64; k];
    for (x, ox) in part.orbits.iter().enumerate() {
        for (y, oy) in part.orbits.iter().enumerate() {
            for &g in ox {
                for &h in oy {
                    counts.iter_mut().for_each(|c| *c = 0);
                    for a in action.elements() {
                        counts[part.orbit_of[group.op(g, a.apply(h))]] += 1;
                    }
                    if counts.as_slice() != table.row(x, y) {
                        return Some((g, h));
                    }
                }
            }
        }
    }
    None
}
