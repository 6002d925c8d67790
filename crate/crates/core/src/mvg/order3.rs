//! Involutive multivalued groups of order 3.
//!
//! Up to relabeling, such a group on `{e, x, y}` has one of two shapes. With a
//! symmetric star (`x* = x`, `y* = y`), writing `m1 = m(x)`, `m2 = m(y)`,
//! `a = m[x][x][x]` and `r = m2 / m1`:
//!
//! ```text
//! x*x = [e^m1, x^a, y^(n-m1-a)]
//! x*y = y*x = [x^axy, y^(n-axy)]             axy = r (n - m1 - a)
//! y*y = [e^m2, x^ayy, y^(n-m2-ayy)]          ayy = r (n - axy)
//! ```
//!
//! With a swapping star (`x* = y`):
//!
//! ```text
//! x*x = [x^a, y^(n-a)]    y*y = [x^(n-a), y^a]    x*y = y*x = [e^(n-2a), x^a, y^a]
//! ```
//!
//! Two groups of the same shape are isomorphic iff their multiplicities agree
//! after dividing by the valency, which makes [`Signature`] a complete
//! invariant.

use std::fmt;

use num_rational::Ratio;

use crate::error::{invalid, Error, Result};

use super::{verify_axioms, verify_involutive, ElementId, MultivaluedGroup};

const NAMES: [&str; 3] = ["e", "x", "y"];

/// `products[x][y]` lists the multiplicities of `(e, x, y)` in `x * y`.
fn from_products(
    n: u64,
    star: [ElementId; 3],
    products: [[[u64; 3]; 3]; 3],
) -> Result<MultivaluedGroup> {
    let table = products
        .iter()
        .map(|row| row.iter().map(|cell| cell.to_vec()).collect())
        .collect();
    let g = MultivaluedGroup::new(
        NAMES.iter().map(|s| s.to_string()).collect(),
        n,
        0,
        star.to_vec(),
        table,
    )?;
    let report = verify_axioms(&g).merge(verify_involutive(&g));
    match report.first_failure() {
        None => Ok(g),
        Some(c) => Err(Error::NotAMultivaluedGroup {
            axiom: c.axiom,
            witness: c.witness.clone(),
        }),
    }
}

fn sub(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_sub(b)
        .ok_or_else(|| Error::Parameter(format!("{what} would be negative")))
}

/// `num / den` when exact.
fn exact_div(num: u128, den: u128, what: &str) -> Result<u64> {
    if !num.is_multiple_of(den) {
        return Err(Error::Parameter(format!(
            "{what} = {} is not an integer",
            Ratio::new(num, den)
        )));
    }
    u64::try_from(num / den).map_err(|_| Error::Parameter(format!("{what} overflows")))
}

/// The symmetric-star group `X_n(m1, m2, a)`.
pub fn build_type1(n: u64, m1: u64, m2: u64, a: u64) -> Result<MultivaluedGroup> {
    if n == 0 || m1 == 0 || m2 == 0 {
        return Err(Error::Parameter("need n, m1, m2 >= 1".into()));
    }
    let xx_y = sub(n, m1.saturating_add(a), "n - m1 - a")?;
    let axy = exact_div(m2 as u128 * xx_y as u128, m1 as u128, "m[x][y][x]")?;
    let xy_y = sub(n, axy, "n - m[x][y][x]")?;
    let ayy = exact_div(m2 as u128 * xy_y as u128, m1 as u128, "m[y][y][x]")?;
    let yy_y = sub(n, m2.saturating_add(ayy), "m[y][y][y]")?;
    let id = |i: usize| {
        let mut c = [0; 3];
        c[i] = n;
        c
    };
    from_products(
        n,
        [0, 1, 2],
        [
            [id(0), id(1), id(2)],
            [id(1), [m1, a, xx_y], [0, axy, xy_y]],
            [id(2), [0, axy, xy_y], [m2, ayy, yy_y]],
        ],
    )
}

/// The swap-star group `X_n(a)`.
pub fn build_type2(n: u64, a: u64) -> Result<MultivaluedGroup> {
    if n == 0 {
        return Err(Error::Parameter("need n >= 1".into()));
    }
    let e_count = sub(n, a.saturating_mul(2), "n - 2a")?;
    let rest = n - a;
    let id = |i: usize| {
        let mut c = [0; 3];
        c[i] = n;
        c
    };
    from_products(
        n,
        [0, 2, 1],
        [
            [id(0), id(1), id(2)],
            [id(1), [0, a, rest], [e_count, a, a]],
            [id(2), [e_count, a, a], [0, rest, a]],
        ],
    )
}

/// `X(k)`, the `(2k+1)`-valued swap-star group with `a = k`.
pub fn build_xk(k: u64) -> Result<MultivaluedGroup> {
    let n = k
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::Parameter("2k + 1 overflows".into()))?;
    build_type2(n, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignatureKind {
    SymmetricStar,
    SwapStar,
}

/// Normalized isomorphism invariant of an involutive group of order 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Signature {
    /// `(m1/n, m2/n, a/n)` with the non-identity elements ordered so that
    /// `m1/n >= m2/n`, ties broken by the larger diagonal `m[x][x][x]`.
    SymmetricStar {
        m1: Ratio<u64>,
        m2: Ratio<u64>,
        a: Ratio<u64>,
    },
    /// `a/n`.
    SwapStar { a: Ratio<u64> },
}

impl Signature {
    pub fn kind(&self) -> SignatureKind {
        match self {
            Signature::SymmetricStar { .. } => SignatureKind::SymmetricStar,
            Signature::SwapStar { .. } => SignatureKind::SwapStar,
        }
    }

    pub fn ratios(&self) -> Vec<Ratio<u64>> {
        match *self {
            Signature::SymmetricStar { m1, m2, a } => vec![m1, m2, a],
            Signature::SwapStar { a } => vec![a],
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::SymmetricStar { m1, m2, a } => write!(f, "SymmetricStar({m1}, {m2}, {a})"),
            Signature::SwapStar { a } => write!(f, "SwapStar({a})"),
        }
    }
}

fn non_identity(g: &MultivaluedGroup) -> (ElementId, ElementId) {
    let mut it = g.elements().filter(|&z| z != g.identity());
    let p = it.next().expect("order 3");
    let q = it.next().expect("order 3");
    (p, q)
}

fn require_order3_involutive(g: &MultivaluedGroup) -> Result<()> {
    if g.order() != 3 {
        return Err(Error::Unsupported(format!(
            "signature is defined for order 3, got order {}",
            g.order()
        )));
    }
    if !verify_involutive(g).is_ok() {
        return Err(invalid("group is not involutive"));
    }
    Ok(())
}

/// The isomorphism invariant of an involutive order-3 group.
pub fn signature(g: &MultivaluedGroup) -> Result<Signature> {
    require_order3_involutive(g)?;
    let n = g.valency();
    let r = |u: u64| Ratio::new(u, n);
    let (p, q) = non_identity(g);
    if g.star(p) == q {
        return Ok(Signature::SwapStar {
            a: r(g.mult(p, p, p)),
        });
    }
    let key = |x: ElementId| (g.diagonal(x), g.mult(x, x, x));
    let (x, y) = if key(q) > key(p) { (q, p) } else { (p, q) };
    Ok(Signature::SymmetricStar {
        m1: r(g.diagonal(x)),
        m2: r(g.diagonal(y)),
        a: r(g.mult(x, x, x)),
    })
}

/// The defining integers of an involutive order-3 group, read off with
/// `x` the first non-identity element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order3Form {
    Type1 { n: u64, m1: u64, m2: u64, a: u64 },
    Type2 { n: u64, a: u64 },
}

impl Order3Form {
    /// Extracts the form together with the labeling `[e, x, y]` it was read in.
    pub fn extract(g: &MultivaluedGroup) -> Result<(Self, [ElementId; 3])> {
        require_order3_involutive(g)?;
        let (x, y) = non_identity(g);
        let n = g.valency();
        let labels = [g.identity(), x, y];
        let form = if g.star(x) == y {
            Order3Form::Type2 {
                n,
                a: g.mult(x, x, x),
            }
        } else {
            Order3Form::Type1 {
                n,
                m1: g.diagonal(x),
                m2: g.diagonal(y),
                a: g.mult(x, x, x),
            }
        };
        Ok((form, labels))
    }

    pub fn build(&self) -> Result<MultivaluedGroup> {
        match *self {
            Order3Form::Type1 { n, m1, m2, a } => build_type1(n, m1, m2, a),
            Order3Form::Type2 { n, a } => build_type2(n, a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvg::{check_reciprocity, verify_all, Multiset};

    fn ms(pairs: &[(usize, u64)]) -> Multiset {
        pairs.iter().copied().collect()
    }

    #[test]
    fn petersen_table() {
        let g = build_type1(6, 2, 1, 0).unwrap();
        assert_eq!(g.product(1, 1).unwrap(), ms(&[(0, 2), (2, 4)]));
        assert_eq!(g.product(2, 2).unwrap(), ms(&[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(g.product(1, 2).unwrap(), ms(&[(1, 2), (2, 4)]));
        assert_eq!(g.product(2, 1).unwrap(), ms(&[(1, 2), (2, 4)]));
        assert!(verify_all(&g).is_ok());
        // m(x1) m[x2][x2][x1] = 2*2 = 1*4 = m(x2) m[x2][x1][x2]
        assert_eq!(g.diagonal(1) * g.mult(2, 2, 1), 4);
        assert_eq!(g.diagonal(2) * g.mult(2, 1, 2), 4);
        assert!(check_reciprocity(&g).unwrap());
    }

    #[test]
    fn pentagon_group() {
        let g = build_type1(2, 1, 1, 0).unwrap();
        assert_eq!(g.product(1, 1).unwrap(), ms(&[(0, 1), (2, 1)]));
        assert_eq!(g.product(2, 2).unwrap(), ms(&[(0, 1), (1, 1)]));
        assert_eq!(g.product(1, 2).unwrap(), ms(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn type1_non_integral() {
        assert!(matches!(build_type1(6, 4, 1, 0), Err(Error::Parameter(_))));
        assert!(matches!(build_type1(6, 5, 1, 2), Err(Error::Parameter(_))));
        assert!(matches!(build_type1(0, 1, 1, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn swap_type() {
        let g = build_type2(3, 1).unwrap();
        assert_eq!(g.product(1, 1).unwrap(), ms(&[(1, 1), (2, 2)]));
        assert_eq!(g.product(1, 2).unwrap(), ms(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(g, build_xk(1).unwrap());
        assert!(check_reciprocity(&g).unwrap());

        let z3 = build_type2(1, 0).unwrap();
        assert_eq!(z3.valency(), 1);
        assert_eq!(z3.product(1, 1).unwrap(), ms(&[(2, 1)]));
        assert_eq!(z3, build_xk(0).unwrap());

        assert!(matches!(build_type2(4, 3), Err(Error::Parameter(_))));
        // n = 2a kills the identity in x*y.
        assert!(matches!(
            build_type2(4, 2),
            Err(Error::NotAMultivaluedGroup { .. })
        ));
    }

    #[test]
    fn xk_two() {
        let g = build_xk(2).unwrap();
        assert_eq!(g.valency(), 5);
        assert_eq!(g.product(1, 2).unwrap(), ms(&[(0, 1), (1, 2), (2, 2)]));
    }

    #[test]
    fn signatures() {
        let r = |a, b| Ratio::new(a, b);
        assert_eq!(
            signature(&build_type1(6, 2, 1, 0).unwrap()).unwrap(),
            Signature::SymmetricStar {
                m1: r(1, 3),
                m2: r(1, 6),
                a: r(0, 1)
            }
        );
        assert_eq!(
            signature(&build_type1(12, 4, 2, 0).unwrap()).unwrap(),
            Signature::SymmetricStar {
                m1: r(1, 3),
                m2: r(1, 6),
                a: r(0, 1)
            }
        );
        assert_eq!(
            signature(&build_type2(3, 1).unwrap()).unwrap(),
            Signature::SwapStar { a: r(1, 3) }
        );
        // Petersen labeled the other way round has the same signature.
        let swapped = build_type1(6, 2, 1, 0)
            .unwrap()
            .relabeled(&[0, 2, 1])
            .unwrap();
        assert_eq!(
            signature(&swapped).unwrap(),
            signature(&build_type1(6, 2, 1, 0).unwrap()).unwrap()
        );
    }

    #[test]
    fn form_round_trip() {
        let g = build_type1(6, 1, 1, 2).unwrap();
        let (form, labels) = Order3Form::extract(&g).unwrap();
        assert_eq!(labels, [0, 1, 2]);
        assert_eq!(
            form,
            Order3Form::Type1 {
                n: 6,
                m1: 1,
                m2: 1,
                a: 2
            }
        );
        assert_eq!(form.build().unwrap(), g);
    }
}
