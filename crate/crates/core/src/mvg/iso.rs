use super::{signature, verify_involutive, ElementId, MultivaluedGroup};

/// Whether `f` (an index map from `g1` to `g2`) is an isomorphism: a bijection
/// sending identity to identity with `m1[x][y][z] / n1 = m2[fx][fy][fz] / n2`.
pub fn is_isomorphism(g1: &MultivaluedGroup, g2: &MultivaluedGroup, f: &[ElementId]) -> bool {
    let order = g1.order();
    if g2.order() != order || f.len() != order || f[g1.identity()] != g2.identity() {
        return false;
    }
    let mut hit = vec![false; order];
    for &y in f {
        if y >= order || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    let (n1, n2) = (g1.valency() as u128, g2.valency() as u128);
    (0..order).all(|x| {
        (0..order).all(|y| {
            (0..order)
                .all(|z| g1.mult(x, y, z) as u128 * n2 == g2.mult(f[x], f[y], f[z]) as u128 * n1)
        })
    })
}

/// Finds an isomorphism `g1 -> g2` if one exists.
///
/// Involutive groups of order 3 are decided by comparing signatures; all
/// other cases run a backtracking search over identity-preserving bijections.
pub fn are_isomorphic(g1: &MultivaluedGroup, g2: &MultivaluedGroup) -> Option<Vec<ElementId>> {
    if g1.order() != g2.order() {
        return None;
    }
    if g1.order() == 3 && verify_involutive(g1).is_ok() && verify_involutive(g2).is_ok() {
        if let (Ok(s1), Ok(s2)) = (signature(g1), signature(g2)) {
            if s1 != s2 {
                return None;
            }
            let (e1, e2) = (g1.identity(), g2.identity());
            let rest1: Vec<_> = g1.elements().filter(|&z| z != e1).collect();
            let rest2: Vec<_> = g2.elements().filter(|&z| z != e2).collect();
            for (a, b) in [(rest2[0], rest2[1]), (rest2[1], rest2[0])] {
                let mut f = vec![0; 3];
                f[e1] = e2;
                f[rest1[0]] = a;
                f[rest1[1]] = b;
                if is_isomorphism(g1, g2, &f) {
                    return Some(f);
                }
            }
        }
    }
    search(g1, g2)
}

/// Scaled, sorted row/column/target profiles of every element.
fn fingerprints(g: &MultivaluedGroup, scale: u128) -> Vec<[Vec<u128>; 3]> {
    let order = g.order();
    (0..order)
        .map(|x| {
            let mut as_left = Vec::with_capacity(order * order);
            let mut as_right = Vec::with_capacity(order * order);
            let mut as_target = Vec::with_capacity(order * order);
            for y in 0..order {
                for z in 0..order {
                    as_left.push(g.mult(x, y, z) as u128 * scale);
                    as_right.push(g.mult(y, x, z) as u128 * scale);
                    as_target.push(g.mult(y, z, x) as u128 * scale);
                }
            }
            as_left.sort_unstable();
            as_right.sort_unstable();
            as_target.sort_unstable();
            [as_left, as_right, as_target]
        })
        .collect()
}

fn search(g1: &MultivaluedGroup, g2: &MultivaluedGroup) -> Option<Vec<ElementId>> {
    let order = g1.order();
    let (n1, n2) = (g1.valency() as u128, g2.valency() as u128);
    let fp1 = fingerprints(g1, n2);
    let fp2 = fingerprints(g2, n1);
    let candidates: Vec<Vec<ElementId>> = (0..order)
        .map(|x| (0..order).filter(|&y| fp1[x] == fp2[y]).collect())
        .collect();
    if !candidates[g1.identity()].contains(&g2.identity()) {
        return None;
    }

    // Assign the identity first, then the rest in index order.
    let mut sequence = vec![g1.identity()];
    sequence.extend(g1.elements().filter(|&x| x != g1.identity()));

    let mut f = vec![usize::MAX; order];
    let mut used = vec![false; order];
    let consistent = |f: &[ElementId], assigned: &[ElementId], x: ElementId| {
        assigned.iter().chain(std::iter::once(&x)).all(|&a| {
            assigned.iter().chain(std::iter::once(&x)).all(|&b| {
                [(x, a, b), (a, x, b), (a, b, x)].iter().all(|&(p, q, r)| {
                    g1.mult(p, q, r) as u128 * n2 == g2.mult(f[p], f[q], f[r]) as u128 * n1
                })
            })
        })
    };

    fn step(
        depth: usize,
        sequence: &[ElementId],
        candidates: &[Vec<ElementId>],
        f: &mut Vec<ElementId>,
        used: &mut Vec<bool>,
        identity2: ElementId,
        consistent: &dyn Fn(&[ElementId], &[ElementId], ElementId) -> bool,
    ) -> bool {
        if depth == sequence.len() {
            return true;
        }
        let x = sequence[depth];
        let options: Vec<ElementId> = if depth == 0 {
            vec![identity2]
        } else {
            candidates[x].clone()
        };
        for y in options {
            if used[y] {
                continue;
            }
            f[x] = y;
            used[y] = true;
            if consistent(f, &sequence[..depth], x)
                && step(
                    depth + 1,
                    sequence,
                    candidates,
                    f,
                    used,
                    identity2,
                    consistent,
                )
            {
                return true;
            }
            used[y] = false;
            f[x] = usize::MAX;
        }
        false
    }

    if step(
        0,
        &sequence,
        &candidates,
        &mut f,
        &mut used,
        g2.identity(),
        &consistent,
    ) {
        debug_assert!(is_isomorphism(g1, g2, &f));
        Some(f)
    } else {
        None
    }
}
