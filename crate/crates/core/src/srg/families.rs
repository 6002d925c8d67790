use crate::algebra::{
    is_prime, is_prime_power, make_field, mult_order, FieldElement, FiniteField, FiniteGroup,
    GroupElement,
};
use crate::error::{invalid, Error, Result};
use crate::limits::{checked_pow, Limits};

use super::formulas::{self, PolarSign};
use super::graph::{DirectedGraph, Graph};
use super::params::{srg_check, SrgParams};

/// Parameter triples `(p, c, t)` left out of the cyclotomic family because
/// their parameters coincide with other families.
pub const VLS_EXCLUDED: [(u64, u64, u32); 8] = [
    (2, 3, 2),
    (5, 3, 1),
    (2, 3, 3),
    (3, 5, 1),
    (2, 5, 2),
    (3, 7, 1),
    (2, 11, 1),
    (2, 13, 1),
];

/// Cayley graph: `g ~ h` iff `h g^{-1}` lies in the connection set.
pub fn cayley_graph(group: &FiniteGroup, connection: &[GroupElement]) -> Result<Graph> {
    let size = group.size();
    let mut in_set = vec![false; size];
    for &s in connection {
        if s >= size {
            return Err(invalid(format!("connection element {s} out of range")));
        }
        in_set[s] = true;
    }
    if in_set[group.identity()] {
        return Err(invalid("connection set contains the identity"));
    }
    if let Some(s) = (0..size).find(|&s| in_set[s] && !in_set[group.inv(s)]) {
        return Err(invalid(format!(
            "connection set is not closed under inversion: {s} in, {} out",
            group.inv(s)
        )));
    }
    let mut g = Graph::empty(size);
    for a in group.elements() {
        for s in (0..size).filter(|&s| in_set[s]) {
            let b = group.op(s, a);
            if a < b {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

fn field_of_order(q: u64, limits: &Limits) -> Result<FiniteField> {
    match is_prime_power(q)? {
        Some((p, s)) => make_field(p, s, limits),
        None => Err(invalid(format!("{q} is not a prime power"))),
    }
}

fn additive_group(field: &FiniteField, dim: u32, limits: &Limits) -> Result<FiniteGroup> {
    let p = field.characteristic() as u64;
    FiniteGroup::elementary_abelian(p, field.degree() * dim, limits)
}

/// Paley graph: `x ~ y` iff `y - x` is a nonzero square; needs `q = 1 mod 4`.
pub fn paley_graph(field: &FiniteField) -> Result<Graph> {
    let q = field.order();
    if q % 4 != 1 {
        return Err(invalid(format!("Paley graph needs q = 1 mod 4, got {q}")));
    }
    let group = additive_group(field, 1, &Limits::uniform(q))?;
    let squares: Vec<_> = field
        .elements()
        .filter(|&x| field.is_nonzero_power(x, 2))
        .map(|x| x as usize)
        .collect();
    let g = cayley_graph(&group, &squares)?;
    confirm(&g, formulas::paley(q as u64), "Paley graph")?;
    Ok(g)
}

/// Paley tournament: `x -> y` iff `y - x` is a nonzero square; needs `q = 3 mod 4`.
pub fn paley_tournament(field: &FiniteField) -> Result<DirectedGraph> {
    let q = field.order();
    if q % 4 != 3 {
        return Err(invalid(format!(
            "Paley tournament needs q = 3 mod 4, got {q}"
        )));
    }
    let mut d = DirectedGraph::empty(q);
    for x in field.elements() {
        for y in field.elements() {
            if field.is_nonzero_power(field.sub(y, x), 2) {
                d.add_arc(x as usize, y as usize)?;
            }
        }
    }
    if !d.is_tournament() {
        return Err(Error::Internal(format!(
            "Paley digraph of order {q} is not a tournament"
        )));
    }
    Ok(d)
}

/// `p^s` disjoint cliques of size `p^t`.
pub fn clique_union(p: u64, t: u32, s: u32, limits: &Limits) -> Result<Graph> {
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    if t == 0 || s == 0 {
        return Err(invalid("clique union needs t, s >= 1"));
    }
    let v = limits.check_vertices(checked_pow(p, t + s).unwrap_or(u128::MAX))?;
    let size = p.pow(t) as usize;
    let mut g = Graph::empty(v);
    for a in 0..v {
        for b in a + 1..(a / size + 1) * size {
            g.add_edge(a, b)?;
        }
    }
    confirm(&g, formulas::cliques(p, t, s), "clique union")?;
    Ok(g)
}

/// Rook's graph on a `q x q` board.
pub fn grid_graph(q: u64, limits: &Limits) -> Result<Graph> {
    if q < 2 {
        return Err(invalid("grid needs q >= 2"));
    }
    let v = limits.check_vertices(q as u128 * q as u128)?;
    let q = q as usize;
    let mut g = Graph::empty(v);
    for a in 0..v {
        for b in a + 1..v {
            if a / q == b / q || a % q == b % q {
                g.add_edge(a, b)?;
            }
        }
    }
    confirm(&g, formulas::grid(q as u64), "grid")?;
    Ok(g)
}

/// Cyclotomic graph on `GF(p^{(c-1)t})` whose connection set is the group
/// of nonzero `c`-th powers.
pub fn vanlint_schrijver(p: u64, c: u64, t: u32, limits: &Limits) -> Result<Graph> {
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    if c < 3 || !is_prime(c) {
        return Err(invalid(format!("{c} is not an odd prime")));
    }
    if t == 0 {
        return Err(invalid("t must be at least 1"));
    }
    if p == c || mult_order(p, c)? != c - 1 {
        return Err(invalid(format!("{p} is not a primitive root modulo {c}")));
    }
    if VLS_EXCLUDED.contains(&(p, c, t)) {
        return Err(invalid(format!(
            "({p},{c},{t}) is an excluded parameter triple"
        )));
    }
    let s = u32::try_from(c - 1)
        .ok()
        .and_then(|c1| c1.checked_mul(t))
        .ok_or_else(|| invalid("field degree overflows"))?;
    limits.check_vertices(checked_pow(p, s).unwrap_or(u128::MAX))?;
    let field = make_field(p, s, limits)?;
    if !field.is_nonzero_power(field.neg(1), c) {
        return Err(Error::Internal(format!(
            "-1 is not a {c}-th power in GF({p}^{s})"
        )));
    }
    let group = additive_group(&field, 1, limits)?;
    let powers: Vec<_> = field
        .elements()
        .filter(|&x| field.is_nonzero_power(x, c))
        .map(|x| x as usize)
        .collect();
    let g = cayley_graph(&group, &powers)?;
    confirm(&g, formulas::vanlint_schrijver(p, c, t), "cyclotomic graph")?;
    Ok(g)
}

/// Affine polar graph: `x ~ y` iff `Q(x - y) = 0`, for the hyperbolic form
/// `x0 x1 + x2 x3 + ...` with the last plane made anisotropic when the sign
/// is minus.
pub fn affine_polar(q: u64, e: u32, sign: PolarSign, limits: &Limits) -> Result<Graph> {
    if q == 2 && sign == PolarSign::Plus {
        return Err(invalid("the hyperbolic polar graph over GF(2) is excluded"));
    }
    polar_graph(q, e, sign, limits)
}

fn polar_graph(q: u64, e: u32, sign: PolarSign, limits: &Limits) -> Result<Graph> {
    if e < 2 {
        return Err(invalid("affine polar graph needs e >= 2"));
    }
    let dim = e
        .checked_mul(2)
        .ok_or_else(|| invalid("dimension overflows"))?;
    limits.check_vertices(checked_pow(q, dim).unwrap_or(u128::MAX))?;
    let field = field_of_order(q, limits)?;
    let last = last_plane(&field, sign);
    let form = |x: &[FieldElement]| {
        let (head, tail) = x.split_at(x.len() - 2);
        let hyperbolic = head
            .chunks(2)
            .fold(0, |acc, pair| field.add(acc, field.mul(pair[0], pair[1])));
        field.add(hyperbolic, last(tail[0], tail[1]))
    };
    let g = vector_cayley(&field, dim, limits, |x| form(x) == 0)?;
    confirm(&g, formulas::affine_polar(q, e, sign), "affine polar graph")?;
    Ok(g)
}

/// Binary form on the last coordinate plane.
fn last_plane(
    field: &FiniteField,
    sign: PolarSign,
) -> impl Fn(FieldElement, FieldElement) -> FieldElement + '_ {
    let coefficient = match sign {
        PolarSign::Plus => None,
        PolarSign::Minus if field.characteristic() == 2 => field.elements().find(|&b| {
            field
                .elements()
                .all(|t| field.add(field.add(field.mul(t, t), t), b) != 0)
        }),
        PolarSign::Minus => field.elements().find(|&a| !field.is_square(a)),
    };
    let even = field.characteristic() == 2;
    move |x, y| match coefficient {
        None => field.mul(x, y),
        Some(b) if even => field.add(
            field.add(field.mul(x, x), field.mul(x, y)),
            field.mul(b, field.mul(y, y)),
        ),
        Some(a) => field.sub(field.mul(x, x), field.mul(a, field.mul(y, y))),
    }
}

/// Complement of the hyperbolic affine polar graph over `GF(2)`.
pub fn affine_polar_plus_complement(e: u32, limits: &Limits) -> Result<Graph> {
    let g = polar_graph(2, e, PolarSign::Plus, limits)?.complement();
    confirm(&g, formulas::polar_plus_complement(e), "polar complement")?;
    Ok(g)
}

/// Bilinear forms graph: `2 x e` matrices, adjacent when the difference has
/// rank one.
pub fn bilinear_forms_graph(q: u64, e: u32, limits: &Limits) -> Result<Graph> {
    if e < 3 {
        return Err(invalid("bilinear forms graph needs e >= 3"));
    }
    let dim = e
        .checked_mul(2)
        .ok_or_else(|| invalid("dimension overflows"))?;
    limits.check_vertices(checked_pow(q, dim).unwrap_or(u128::MAX))?;
    let field = field_of_order(q, limits)?;
    let e = e as usize;
    let g = vector_cayley(&field, dim, limits, |x| {
        rank(&field, vec![x[..e].to_vec(), x[e..].to_vec()]) == 1
    })?;
    confirm(&g, formulas::bilinear(q, e as u32), "bilinear forms graph")?;
    Ok(g)
}

/// Alternating forms graph: `5 x 5` alternating matrices, adjacent when the
/// difference has rank two.
pub fn alternating_forms_graph(q: u64, limits: &Limits) -> Result<Graph> {
    limits.check_vertices(checked_pow(q, 10).unwrap_or(u128::MAX))?;
    let field = field_of_order(q, limits)?;
    let g = vector_cayley(&field, 10, limits, |x| {
        let mut m = vec![vec![0; 5]; 5];
        let mut entries = x.iter();
        for i in 0..5 {
            for j in i + 1..5 {
                let a = *entries.next().expect("ten entries");
                m[i][j] = a;
                m[j][i] = field.neg(a);
            }
        }
        rank(&field, m) == 2
    })?;
    confirm(&g, formulas::alternating(q), "alternating forms graph")?;
    Ok(g)
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Cayley graph on `F_q^dim` whose connection set is the nonzero vectors
/// satisfying `pred`. Vector `x` has index `sum x_i q^i`.
fn vector_cayley(
    field: &FiniteField,
    dim: u32,
    limits: &Limits,
    pred: impl Fn(&[FieldElement]) -> bool,
) -> Result<Graph> {
    let group = additive_group(field, dim, limits)?;
    let q = field.order();
    let mut coords = vec![0; dim as usize];
    let connection: Vec<_> = (1..group.size())
        .filter(|&x| {
            let mut rest = x;
            for c in coords.iter_mut() {
                *c = (rest % q) as FieldElement;
                rest /= q;
            }
            pred(&coords)
        })
        .collect();
    cayley_graph(&group, &connection)
}

fn rank(field: &FiniteField, mut m: Vec<Vec<FieldElement>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for i in r + 1..m.len() {
            let f = field.mul(m[i][c], inv);
            if f != 0 {
                for j in c..cols {
                    m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
                }
            }
        }
        r += 1;
    }
    r
}

fn confirm(g: &Graph, expected: Option<SrgParams>, what: &str) -> Result<()> {
    let found = srg_check(g);
    if found.is_none() || found != expected {
        return Err(Error::Internal(format!(
            "{what}: counted parameters {found:?}, closed form {expected:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn params(g: &Graph) -> (u64, u64, u64, u64) {
        srg_check(g).unwrap().tuple()
    }

    #[test]
    fn cayley_preconditions() {
        let z5 = FiniteGroup::cyclic(5, &lim()).unwrap();
        assert_eq!(params(&cayley_graph(&z5, &[1, 4]).unwrap()), (5, 2, 0, 1));
        let z7 = FiniteGroup::cyclic(7, &lim()).unwrap();
        assert!(cayley_graph(&z7, &[1, 2, 4]).is_err());
        assert!(cayley_graph(&z7, &[0, 1, 6]).is_err());
        let klein = FiniteGroup::elementary_abelian(2, 2, &lim()).unwrap();
        let g = cayley_graph(&klein, &[1]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn paley() {
        for (q, expect) in [(5, (5, 2, 0, 1)), (9, (9, 4, 1, 2)), (13, (13, 6, 2, 3))] {
            let f = field_of_order(q, &lim()).unwrap();
            assert_eq!(params(&paley_graph(&f).unwrap()), expect);
        }
        let f7 = field_of_order(7, &lim()).unwrap();
        assert!(paley_graph(&f7).is_err());
        let t = paley_tournament(&f7).unwrap();
        assert!(t.is_tournament());
        assert!((0..7).all(|x| t.out_degree(x) == 3));
        let f5 = field_of_order(5, &lim()).unwrap();
        assert!(paley_tournament(&f5).is_err());
    }

    #[test]
    fn small_families() {
        assert_eq!(
            params(&clique_union(2, 1, 1, &lim()).unwrap()),
            (4, 1, 0, 0)
        );
        assert_eq!(
            params(&clique_union(2, 2, 1, &lim()).unwrap()),
            (8, 3, 2, 0)
        );
        assert_eq!(
            params(&clique_union(3, 1, 1, &lim()).unwrap()),
            (9, 2, 1, 0)
        );
        assert_eq!(params(&grid_graph(2, &lim()).unwrap()), (4, 2, 0, 2));
        assert_eq!(params(&grid_graph(3, &lim()).unwrap()), (9, 4, 1, 2));
        assert_eq!(params(&grid_graph(4, &lim()).unwrap()), (16, 6, 2, 2));
    }

    #[test]
    fn cyclotomic() {
        assert_eq!(
            params(&vanlint_schrijver(2, 3, 1, &lim()).unwrap()),
            (4, 1, 0, 0)
        );
        assert!(matches!(
            vanlint_schrijver(3, 5, 1, &lim()),
            Err(Error::InvalidInput(_))
        ));
        assert!(vanlint_schrijver(2, 7, 1, &lim()).is_err());
        assert!(vanlint_schrijver(2, 4, 1, &lim()).is_err());
        assert!(matches!(
            vanlint_schrijver(2, 3, 7, &lim()),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn polar() {
        assert_eq!(
            params(&affine_polar(2, 2, PolarSign::Minus, &lim()).unwrap()),
            (16, 5, 0, 2)
        );
        assert_eq!(
            params(&affine_polar(3, 2, PolarSign::Minus, &lim()).unwrap()),
            (81, 20, 1, 6)
        );
        assert_eq!(
            params(&affine_polar(4, 2, PolarSign::Minus, &lim()).unwrap()),
            (256, 51, 2, 12)
        );
        assert!(affine_polar(2, 2, PolarSign::Plus, &lim()).is_err());
        assert!(affine_polar(3, 1, PolarSign::Minus, &lim()).is_err());
        assert!(affine_polar(6, 2, PolarSign::Minus, &lim()).is_err());
        assert_eq!(
            params(&affine_polar_plus_complement(2, &lim()).unwrap()),
            (16, 6, 2, 2)
        );
        assert!(affine_polar_plus_complement(1, &lim()).is_err());
    }

    #[test]
    fn forms_graphs() {
        assert_eq!(
            params(&bilinear_forms_graph(2, 3, &lim()).unwrap()),
            (64, 21, 8, 6)
        );
        assert!(bilinear_forms_graph(2, 2, &lim()).is_err());
        assert!(matches!(
            alternating_forms_graph(3, &lim()),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn ranks() {
        let f = field_of_order(3, &lim()).unwrap();
        assert_eq!(rank(&f, vec![vec![1, 2, 0], vec![2, 1, 0]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 0, 0], vec![0, 0, 1]]), 2);
        assert_eq!(rank(&f, vec![vec![0, 0], vec![0, 0]]), 0);
    }
}
