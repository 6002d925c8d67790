//! Prime-power fields `GF(p^s)` with a canonical modulus.
//!
//! Elements are indexed by the base-`p` encoding of their coefficient vector:
//! `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`. Addition works digitwise and
//! multiplication through discrete-log tables built from a primitive element.

use crate::error::{invalid, Result};
use crate::limits::{checked_pow, Limits};

use super::arith::is_prime;

pub type FieldElement = u32;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    s: u32,
    q: usize,
    /// Monic modulus, low degree first, length `s + 1`.
    modulus: Vec<u32>,
    exp: Vec<FieldElement>,
    log: Vec<u32>,
}

/// `GF(p^s)` reduced by the lexicographically least monic irreducible of
/// degree `s` (coefficients compared from the constant term upward).
pub fn make_field(p: u64, s: u32, limits: &Limits) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(invalid(format!("field characteristic {p} is not prime")));
    }
    if s == 0 {
        return Err(invalid("field degree must be at least 1"));
    }
    let q = checked_pow(p, s).unwrap_or(u128::MAX);
    let q = limits.check_group(q)?;
    let p = p as u32;
    let modulus = least_irreducible(p, s);
    let primitive = find_primitive(p, &modulus, q);

    let mut exp = Vec::with_capacity(q - 1);
    let mut log = vec![u32::MAX; q];
    let mut acc = vec![0u32; s as usize];
    acc[0] = 1;
    for i in 0..q - 1 {
        let idx = encode(p, &acc);
        exp.push(idx);
        log[idx as usize] = i as u32;
        acc = poly_mulmod(p, &acc, &primitive, &modulus);
    }
    Ok(FiniteField {
        p,
        s,
        q,
        modulus,
        exp,
        log,
    })
}

fn encode(p: u32, coeffs: &[u32]) -> FieldElement {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn decode(p: u32, s: u32, mut x: FieldElement) -> Vec<u32> {
    (0..s)
        .map(|_| {
            let c = x % p;
            x /= p;
            c
        })
        .collect()
}

/// Remainder of `a` modulo the monic `m` (both low degree first).
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let deg = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - deg;
            for (i, &c) in m[..deg].iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
    }
    r
}

fn poly_mulmod(p: u32, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(p, &prod, m);
    r.resize(m.len() - 1, 0);
    r
}

fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let s = m.len() - 1;
    for deg in 1..=s / 2 {
        let count = (p as usize).pow(deg as u32);
        for idx in 0..count {
            let mut d = decode(p, deg as u32, idx as u32);
            d.push(1);
            if poly_rem(p, m, &d).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u32, s: u32) -> Vec<u32> {
    let count = (p as usize).pow(s);
    for idx in 0..count {
        // The constant term is the most significant digit of `idx`.
        let mut m: Vec<u32> = decode(p, s, idx as u32).into_iter().rev().collect();
        m.push(1);
        if is_irreducible(p, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn find_primitive(p: u32, modulus: &[u32], q: usize) -> Vec<u32> {
    let s = modulus.len() - 1;
    let mut one = vec![0u32; s];
    one[0] = 1;
    for cand in 1..q as u32 {
        let g = decode(p, s as u32, cand);
        let mut acc = g.clone();
        let mut order = 1usize;
        while acc != one {
            acc = poly_mulmod(p, &acc, &g, modulus);
            order += 1;
        }
        if order == q - 1 {
            return g;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

impl FiniteField {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q as FieldElement
    }

    pub fn coefficients(&self, x: FieldElement) -> Vec<u32> {
        decode(self.p, self.s, x)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a != 0 || b != 0 {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a != 0 {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a == 0 || b == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as usize + self.log[b as usize] as usize) % (self.q - 1);
        self.exp[l]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize] as usize;
        Some(self.exp[(self.q - 1 - l) % (self.q - 1)])
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u128 * e as u128 % (self.q as u128 - 1);
        self.exp[l as usize]
    }

    /// The fixed primitive element used for the log tables.
    pub fn primitive(&self) -> FieldElement {
        self.exp[if self.q == 2 { 0 } else { 1 }]
    }

    /// Discrete log to the base [`primitive`](Self::primitive); `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Whether `a` is a nonzero `c`-th power.
    pub fn is_nonzero_power(&self, a: FieldElement, c: u64) -> bool {
        match self.log(a) {
            None => false,
            Some(l) => {
                let g = num_integer::gcd(c, self.q as u64 - 1);
                (l as u64).is_multiple_of(g)
            }
        }
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        a == 0 || self.is_nonzero_power(a, 2)
    }
}
