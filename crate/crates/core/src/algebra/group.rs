use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::limits::{checked_pow, Limits};

use super::arith::is_prime;

pub type GroupElement = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Table {
        op: Vec<u32>,
        inv: Vec<u32>,
    },
    /// `(Z/p)^dim` with base-`p` digit encoding.
    Vector {
        p: u32,
        dim: u32,
    },
    Cyclic,
}

/// An explicit finite group on the indices `0..size`.
///
/// Tables are validated on construction. Elementary abelian and cyclic groups
/// compute products arithmetically instead of storing a `size x size` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    size: usize,
    identity: GroupElement,
    repr: Repr,
}

/// Additive group of `d`-vectors over `GF(p)`.
pub fn make_elementary_abelian(p: u64, d: u32, limits: &Limits) -> Result<FiniteGroup> {
    FiniteGroup::elementary_abelian(p, d, limits)
}

impl FiniteGroup {
    pub fn elementary_abelian(p: u64, d: u32, limits: &Limits) -> Result<Self> {
        if !is_prime(p) {
            return Err(invalid(format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        let size = limits.check_group(checked_pow(p, d).unwrap_or(u128::MAX))?;
        Ok(FiniteGroup {
            size,
            identity: 0,
            repr: Repr::Vector {
                p: p as u32,
                dim: d,
            },
        })
    }

    /// `Z/m` under addition.
    pub fn cyclic(m: usize, limits: &Limits) -> Result<Self> {
        if m == 0 {
            return Err(invalid("cyclic group order must be positive"));
        }
        let size = limits.check_group(m as u128)?;
        Ok(FiniteGroup {
            size,
            identity: 0,
            repr: Repr::Cyclic,
        })
    }

    /// A group from its multiplication table, `op[g][h] = g h`.
    ///
    /// Associativity is checked on all triples up to order 256 and on a fixed
    /// pseudo-random sample of triples above that.
    pub fn from_table(op: Vec<Vec<usize>>, limits: &Limits) -> Result<Self> {
        let size = limits.check_group(op.len() as u128)?;
        if size == 0 {
            return Err(invalid("group must be nonempty"));
        }
        let mut flat = Vec::with_capacity(size * size);
        for row in &op {
            if row.len() != size {
                return Err(invalid("multiplication table must be square"));
            }
            for &v in row {
                if v >= size {
                    return Err(invalid(format!("table entry {v} out of range")));
                }
                flat.push(v as u32);
            }
        }
        let at = |g: usize, h: usize| flat[g * size + h] as usize;
        let identity = (0..size)
            .find(|&e| (0..size).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| invalid("table has no identity element"))?;
        let mut inv = vec![0u32; size];
        for g in 0..size {
            let h = (0..size)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| invalid(format!("element {g} has no inverse")))?;
            inv[g] = h as u32;
        }
        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if size <= 256 {
            for a in 0..size {
                for b in 0..size {
                    for c in 0..size {
                        if !assoc(a, b, c) {
                            return Err(invalid(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..200_000 {
                let (a, b, c) = (
                    rng.gen_range(0..size),
                    rng.gen_range(0..size),
                    rng.gen_range(0..size),
                );
                if !assoc(a, b, c) {
                    return Err(invalid(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(FiniteGroup {
            size,
            identity,
            repr: Repr::Table { op: flat, inv },
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> GroupElement {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<GroupElement> {
        0..self.size
    }

    #[inline]
    pub fn op(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        match &self.repr {
            Repr::Table { op, .. } => op[g * self.size + h] as usize,
            Repr::Cyclic => (g + h) % self.size,
            Repr::Vector { p: 2, .. } => g ^ h,
            Repr::Vector { p, .. } => {
                let p = *p as usize;
                let (mut g, mut h) = (g, h);
                let mut out = 0;
                let mut place = 1;
                while g != 0 || h != 0 {
                    out += (g % p + h % p) % p * place;
                    g /= p;
                    h /= p;
                    place *= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn inv(&self, g: GroupElement) -> GroupElement {
        match &self.repr {
            Repr::Table { inv, .. } => inv[g] as usize,
            Repr::Cyclic => (self.size - g) % self.size,
            Repr::Vector { p: 2, .. } => g,
            Repr::Vector { p, .. } => {
                let p = *p as usize;
                let mut g = g;
                let mut out = 0;
                let mut place = 1;
                while g != 0 {
                    out += (p - g % p) % p * place;
                    g /= p;
                    place *= p;
                }
                out
            }
        }
    }

    /// `(p, dim)` when this is a vector group.
    pub fn vector_space(&self) -> Option<(u32, u32)> {
        match self.repr {
            Repr::Vector { p, dim } => Some((p, dim)),
            _ => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self.repr {
            Repr::Table { .. } => self
                .elements()
                .all(|g| self.elements().all(|h| self.op(g, h) == self.op(h, g))),
            _ => true,
        }
    }

    /// The full multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements()
            .map(|g| self.elements().map(|h| self.op(g, h)).collect())
            .collect()
    }
}

/// An automorphism of a [`FiniteGroup`], stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    perm: Vec<u32>,
}

impl Automorphism {
    /// Validates that `perm` is a bijection fixing the identity and respecting
    /// the group operation.
    pub fn new(group: &FiniteGroup, perm: Vec<usize>) -> Result<Self> {
        let size = group.size();
        if perm.len() != size {
            return Err(invalid(format!(
                "automorphism needs {size} images, got {}",
                perm.len()
            )));
        }
        let mut hit = vec![false; size];
        for &y in &perm {
            if y >= size || std::mem::replace(&mut hit[y], true) {
                return Err(invalid("automorphism images must form a permutation"));
            }
        }
        if perm[group.identity()] != group.identity() {
            return Err(invalid("automorphism must fix the identity"));
        }
        for g in group.elements() {
            for h in group.elements() {
                if perm[group.op(g, h)] != group.op(perm[g], perm[h]) {
                    return Err(invalid(format!("not a homomorphism at ({g}, {h})")));
                }
            }
        }
        Ok(Automorphism {
            perm: perm.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn identity(size: usize) -> Self {
        Automorphism {
            perm: (0..size as u32).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, g: GroupElement) -> GroupElement {
        self.perm[g] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: self.perm.iter().map(|&g| other.perm[g as usize]).collect(),
        }
    }

    pub fn images(&self) -> Vec<usize> {
        self.perm.iter().map(|&g| g as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &g)| i == g as usize)
    }
}

/// A finite group of automorphisms acting faithfully on a group.
///
/// A non-faithful action only multiplies every multiplicity of the coset
/// group by the kernel order, which gives an isomorphic multivalued group,
/// so the faithful image is all the coset construction needs. See
/// [`coset_group_from_homomorphism`](super::coset_group_from_homomorphism)
/// for the non-faithful case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionGroup {
    elements: Vec<Automorphism>,
}

impl ActionGroup {
    pub fn trivial(group: &FiniteGroup) -> Self {
        ActionGroup {
            elements: vec![Automorphism::identity(group.size())],
        }
    }

    /// Wraps a set already known to be closed under composition.
    pub(crate) fn from_closed(mut elements: Vec<Automorphism>) -> Self {
        elements.sort();
        ActionGroup { elements }
    }

    /// Number of automorphisms, the valency of the coset group.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Members in canonical (lexicographic image) order.
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }
}

/// Closure of `generators` under composition, sorted canonically.
pub fn close_action(
    group: &FiniteGroup,
    generators: &[Automorphism],
    limits: &Limits,
) -> Result<ActionGroup> {
    for gen in generators {
        // Re-validate: generators may come from untrusted input.
        Automorphism::new(group, gen.images())?;
    }
    let id = Automorphism::identity(group.size());
    let mut seen: HashSet<Automorphism> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for gen in generators {
            let b = a.then(gen);
            if !seen.contains(&b) {
                limits.check_action(seen.len() as u128 + 1)?;
                seen.insert(b.clone());
                queue.push_back(b);
            }
        }
    }
    let mut elements: Vec<_> = seen.into_iter().collect();
    elements.sort();
    Ok(ActionGroup { elements })
}

/// The orbits of an action on the group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbit_of: Vec<usize>,
    /// Identity orbit first, the rest ordered by least element; each orbit sorted.
    pub orbits: Vec<Vec<GroupElement>>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

pub fn orbits(group: &FiniteGroup, action: &ActionGroup) -> OrbitPartition {
    let size = group.size();
    let mut orbit_of = vec![usize::MAX; size];
    let mut orbits = Vec::new();
    let starts = std::iter::once(group.identity())
        .chain(group.elements().filter(|&g| g != group.identity()));
    for g in starts {
        if orbit_of[g] != usize::MAX {
            continue;
        }
        let idx = orbits.len();
        let mut orbit: Vec<GroupElement> = action.elements().iter().map(|a| a.apply(g)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &h in &orbit {
            orbit_of[h] = idx;
        }
        orbits.push(orbit);
    }
    OrbitPartition { orbit_of, orbits }
}
