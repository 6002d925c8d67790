//! Closed-form parameters of the rank 3 families with a regular normal
//! subgroup. Each function returns `None` when the arithmetic leaves the
//! nonnegative integers or overflows; side conditions on the arguments
//! (primality, order conditions, exclusions) are the caller's concern.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::arith::exact_sqrt;

use super::params::SrgParams;

/// Witt type of a quadratic form on `F_q^{2e}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PolarSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl PolarSign {
    pub fn value(self) -> i128 {
        match self {
            PolarSign::Plus => 1,
            PolarSign::Minus => -1,
        }
    }
}

impl fmt::Display for PolarSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolarSign::Plus => "+",
            PolarSign::Minus => "-",
        })
    }
}

impl FromStr for PolarSign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" => Ok(PolarSign::Plus),
            "-" | "minus" => Ok(PolarSign::Minus),
            _ => Err(format!("expected + or -, got {s:?}")),
        }
    }
}

fn pow(b: u64, e: u32) -> Option<i128> {
    (b as i128).checked_pow(e)
}

fn params(v: i128, k: i128, l: i128, m: i128) -> Option<SrgParams> {
    let conv = |x: i128| u64::try_from(x).ok();
    SrgParams::new(conv(v)?, conv(k)?, conv(l)?, conv(m)?).ok()
}

fn exact_div(a: i128, b: i128) -> Option<i128> {
    (a % b == 0).then(|| a / b)
}

/// `p^s` disjoint cliques of size `p^t`.
pub fn cliques(p: u64, t: u32, s: u32) -> Option<SrgParams> {
    let pt = pow(p, t)?;
    params(pow(p, t.checked_add(s)?)?, pt - 1, pt - 2, 0)
}

/// `q x q` grid.
pub fn grid(q: u64) -> Option<SrgParams> {
    let q = q as i128;
    params(q.checked_mul(q)?, 2 * (q - 1), q - 2, 2)
}

/// Conference parameters on `v = 4t + 1` vertices.
pub fn paley(v: u64) -> Option<SrgParams> {
    if v % 4 != 1 {
        return None;
    }
    let t = (v / 4) as i128;
    params(v as i128, 2 * t, t - 1, t)
}

/// Cyclotomic graph on `v = p^{(c-1)t}` vertices with connection set the
/// nonzero `c`-th powers.
pub fn vanlint_schrijver(p: u64, c: u64, t: u32) -> Option<SrgParams> {
    let exp = u32::try_from(c.checked_sub(1)?).ok()?.checked_mul(t)?;
    let v = pow(p, exp)?;
    let root = exact_sqrt(u64::try_from(v).ok()?)? as i128;
    let c = c as i128;
    let sign = if t.is_multiple_of(2) { 1 } else { -1 };
    let k = exact_div(v - 1, c)?;
    let l = exact_div(v - 3 * c + 1 - sign * (c - 2) * (c - 1) * root, c * c)?;
    let m = exact_div(v - c + 1 + sign * (c - 2) * root, c * c)?;
    params(v, k, l, m)
}

/// Bilinear forms graph on `2 x e` matrices.
pub fn bilinear(q: u64, e: u32) -> Option<SrgParams> {
    let qe = pow(q, e)?;
    let q = q as i128;
    params(
        qe.checked_mul(qe)?,
        (q + 1) * (qe - 1),
        qe + (q - 2) * (q + 1),
        q * (q + 1),
    )
}

/// Affine polar graph of a nondegenerate quadratic form on `F_q^{2e}`.
pub fn affine_polar(q: u64, e: u32, sign: PolarSign) -> Option<SrgParams> {
    let eps = sign.value();
    let v = pow(q, e.checked_mul(2)?)?;
    let qe = pow(q, e)?;
    let qe1 = pow(q, e.checked_sub(1)?)?;
    let qe2 = pow(q, e.checked_sub(2)?)?;
    let q = q as i128;
    params(
        v,
        (qe - eps) * (qe1 + eps),
        q * (qe1 - eps) * (qe2 + eps) + q - 2,
        qe1 * (qe1 + eps),
    )
}

/// Complement of the hyperbolic affine polar graph over `F_2`.
pub fn polar_plus_complement(e: u32) -> Option<SrgParams> {
    let h = pow(2, e.checked_sub(1)?)?;
    params(
        pow(2, e.checked_mul(2)?)?,
        h * (2 * h - 1),
        h * (h - 1),
        h * (h - 1),
    )
}

/// Alternating forms graph on `5 x 5` alternating matrices.
pub fn alternating(q: u64) -> Option<SrgParams> {
    let (q2, q4, q5) = (pow(q, 2)?, pow(q, 4)?, pow(q, 5)?);
    params(
        pow(q, 10)?,
        (q2 + 1) * (q5 - 1),
        q5 + q4 - q2 - 2,
        q2 * (q2 + 1),
    )
}

/// Affine half spin graph on `F_q^16`.
pub fn half_spin(q: u64) -> Option<SrgParams> {
    let (q3, q6, q8) = (pow(q, 3)?, pow(q, 6)?, pow(q, 8)?);
    params(
        pow(q, 16)?,
        (q3 + 1) * (q8 - 1),
        q8 + q6 - q3 - 2,
        q3 * (q3 + 1),
    )
}
