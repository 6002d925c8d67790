#![allow(dead_code)]

use mvgroups::algebra::{
    close_action, is_prime_power, make_field, ActionGroup, Automorphism, FiniteField, FiniteGroup,
};
use mvgroups::Limits;

pub fn lim() -> Limits {
    Limits::default()
}

pub fn field(q: u64) -> FiniteField {
    let (p, s) = is_prime_power(q).unwrap().unwrap();
    make_field(p, s, &lim()).unwrap()
}

/// Additive group of a field, indexed like the field elements.
pub fn additive(f: &FiniteField) -> FiniteGroup {
    FiniteGroup::elementary_abelian(f.characteristic() as u64, f.degree(), &lim()).unwrap()
}

/// Multiplication by `c` as an automorphism of the additive group.
pub fn scalar(f: &FiniteField, g: &FiniteGroup, c: u32) -> Automorphism {
    Automorphism::new(g, f.elements().map(|x| f.mul(c, x) as usize).collect()).unwrap()
}

/// The multiplier group of index `index` in `F_q^*`.
pub fn multipliers(f: &FiniteField, g: &FiniteGroup, index: u64) -> ActionGroup {
    let gen = f.pow(f.primitive(), index);
    close_action(g, &[scalar(f, g, gen)], &lim()).unwrap()
}

pub fn times_mod(g: &FiniteGroup, c: usize) -> Automorphism {
    let m = g.size();
    Automorphism::new(g, (0..m).map(|x| x * c % m).collect()).unwrap()
}

/// Klein four-group with its coordinate swap.
pub fn klein_swap() -> (FiniteGroup, ActionGroup) {
    let v = FiniteGroup::elementary_abelian(2, 2, &lim()).unwrap();
    let swap = Automorphism::new(&v, vec![0, 2, 1, 3]).unwrap();
    let a = close_action(&v, &[swap], &lim()).unwrap();
    (v, a)
}

/// Klein four-group with all six automorphisms.
pub fn klein_full() -> (FiniteGroup, ActionGroup) {
    let v = FiniteGroup::elementary_abelian(2, 2, &lim()).unwrap();
    let swap = Automorphism::new(&v, vec![0, 2, 1, 3]).unwrap();
    let cycle = Automorphism::new(&v, vec![0, 2, 3, 1]).unwrap();
    let a = close_action(&v, &[swap, cycle], &lim()).unwrap();
    (v, a)
}

/// Symmetric group on three letters as permutations of `[0, 1, 2]`, listed
/// in lexicographic order so that index 0 is the identity.
pub fn s3() -> FiniteGroup {
    let perms = s3_perms();
    let op = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab = [a[b[0]], a[b[1]], a[b[2]]];
                    perms.iter().position(|p| *p == ab).unwrap()
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(op, &lim()).unwrap()
}

fn s3_perms() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

/// Conjugation by every element.
pub fn inner(g: &FiniteGroup) -> ActionGroup {
    let gens: Vec<_> = g
        .elements()
        .map(|a| {
            let ai = g.inv(a);
            Automorphism::new(g, g.elements().map(|x| g.op(g.op(a, x), ai)).collect()).unwrap()
        })
        .collect();
    close_action(g, &gens, &lim()).unwrap()
}
