use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::mvg::{verify_all, MultivaluedGroup};

use super::graph::Graph;

/// Parameters `(v, k, lambda, mu)` of a strongly regular graph.
///
/// Only the defining relation `k(k-1-lambda) = (v-k-1) mu` and
/// `0 < k < v-1` are enforced; with `mu = 0` the relation forces
/// `lambda = k-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u64; 4]", try_from = "[u64; 4]")]
pub struct SrgParams {
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
}

impl SrgParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        if k == 0 || k.checked_add(1).is_none_or(|k1| k1 >= v) {
            return Err(invalid(format!(
                "({v},{k},{lambda},{mu}): need 0 < k < v-1"
            )));
        }
        let lhs = k as i128 * (k as i128 - 1 - lambda as i128);
        let rhs = (v - k - 1) as i128 * mu as i128;
        if lhs != rhs {
            return Err(invalid(format!(
                "({v},{k},{lambda},{mu}): k(k-1-lambda) = {lhs} but (v-k-1)mu = {rhs}"
            )));
        }
        Ok(SrgParams { v, k, lambda, mu })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// Complement valency `v - k - 1`.
    pub fn k_bar(&self) -> u64 {
        self.v - self.k - 1
    }

    pub fn tuple(&self) -> (u64, u64, u64, u64) {
        (self.v, self.k, self.lambda, self.mu)
    }

    /// The orientation of `self` and its complement with the smaller valency.
    /// Sets whose complement is not a valid parameter set are returned as is.
    pub fn canonical(&self) -> SrgParams {
        if self.k > self.k_bar() {
            if let Ok(c) = complement_params(self) {
                return c;
            }
        }
        *self
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl From<SrgParams> for [u64; 4] {
    fn from(p: SrgParams) -> Self {
        [p.v, p.k, p.lambda, p.mu]
    }
}

impl TryFrom<[u64; 4]> for SrgParams {
    type Error = Error;

    fn try_from(a: [u64; 4]) -> Result<Self> {
        SrgParams::new(a[0], a[1], a[2], a[3])
    }
}

/// Strong-regularity test by counting common neighbours of every pair.
pub fn srg_check(g: &Graph) -> Option<SrgParams> {
    let v = g.vertex_count();
    if v < 2 {
        return None;
    }
    let k = g.degree(0);
    if (1..v).any(|a| g.degree(a) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for a in 0..v {
        for b in a + 1..v {
            let c = g.common_neighbors(a, b);
            let slot = if g.has_edge(a, b) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    let (lambda, mu) = (lambda?, mu?);
    SrgParams::new(v as u64, k as u64, lambda as u64, mu as u64).ok()
}

/// Parameters of the complement graph.
///
/// `lambda' = v - 2k + mu - 2` and `mu' = v - 2k + lambda`.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    let (v, k, l, m) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    let lb = v - 2 * k + m - 2;
    let mb = v - 2 * k + l;
    if lb < 0 || mb < 0 {
        return Err(Error::Parameter(format!(
            "{p} has no realizable complement: lambda' = {lb}, mu' = {mb}"
        )));
    }
    SrgParams::new(p.v, p.k_bar(), lb as u64, mb as u64)
}

/// Structure constants of the adjacency algebra spanned by `I`, `A` and the
/// complement adjacency `A'`: `A_r A_s = sum_t c[r][s][t] A_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    pub c: [[[i64; 3]; 3]; 3],
    pub d: [i64; 3],
}

impl IntersectionNumbers {
    /// `sum_t c[r][s][t] d[t] = d[r] d[s]` for all `r, s`.
    pub fn representation_identity_holds(&self) -> bool {
        (0..3).all(|r| {
            (0..3).all(|s| {
                (0..3).map(|t| self.c[r][s][t] * self.d[t]).sum::<i64>() == self.d[r] * self.d[s]
            })
        })
    }
}

pub fn intersection_numbers(p: &SrgParams) -> IntersectionNumbers {
    let (v, k, l, m) = (p.v as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let kb = v - k - 1;
    let lb = v - 2 * k + m - 2;
    let mb = v - 2 * k + l;
    let mut c = [[[0i64; 3]; 3]; 3];
    for s in 0..3 {
        c[0][s][s] = 1;
        c[s][0][s] = 1;
    }
    c[1][1] = [k, l, m];
    c[2][2] = [kb, mb, lb];
    c[1][2] = [0, k - 1 - l, k - m];
    c[2][1] = c[1][2];
    let numbers = IntersectionNumbers { c, d: [1, k, kb] };
    debug_assert!(numbers.representation_identity_holds());
    numbers
}

/// The 3-element involutive multivalued group of a parameter set, with
/// valency `lcm(k, k')` and `m[r][s][t] = n c[r][s][t] d[t] / (d[r] d[s])`.
pub fn mvgroup_from_params(p: &SrgParams) -> Result<MultivaluedGroup> {
    let nums = intersection_numbers(p);
    if nums.c.iter().flatten().flatten().any(|&x| x < 0) {
        return Err(Error::Parameter(format!(
            "{p} has negative intersection numbers"
        )));
    }
    let d = nums.d.map(|x| x as i128);
    let n = (p.k as i128).lcm(&(p.k_bar() as i128));
    let mut table = vec![vec![vec![0u64; 3]; 3]; 3];
    for r in 0..3 {
        for s in 0..3 {
            for t in 0..3 {
                let num = n * nums.c[r][s][t] as i128 * d[t];
                let den = d[r] * d[s];
                if num % den != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral multiplicity {num}/{den} at ({r},{s},{t}) for {p}"
                    )));
                }
                table[r][s][t] = u64::try_from(num / den)
                    .map_err(|_| Error::Internal(format!("multiplicity overflow for {p}")))?;
            }
        }
    }
    let names = ["x0", "x1", "x2"].map(String::from).to_vec();
    let g = MultivaluedGroup::new(names, n as u64, 0, vec![0, 1, 2], table)
        .map_err(|e| Error::Internal(format!("{p}: {e}")))?;
    let report = verify_all(&g);
    if let Some(cx) = report.first_failure() {
        return Err(Error::Internal(format!(
            "{p}: {} fails at {:?}",
            cx.axiom, cx.witness
        )));
    }
    Ok(g)
}
