use num_integer::Integer;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::is_prime_power;
use crate::error::{invalid, Error, Result};
use crate::mvg::{
    are_isomorphic, signature, verify_axioms, verify_involutive, MultivaluedGroup, Order3Form,
    Signature,
};
use crate::srg::{mvgroup_from_params, SrgParams};

use super::families::{match_params, FamilyDescriptor};

/// What an order-3 group was recognised as.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictKind {
    /// A scaled copy of `X(k)`.
    Xk {
        k: u64,
    },
    /// The group of a rank 3 graph with a regular normal subgroup.
    Srg(FamilyDescriptor),
    None(String),
}

/// Whether an order-3 multivalued group is isomorphic to a coset group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub coset: bool,
    pub kind: VerdictKind,
    pub derived: Option<SrgParams>,
    /// Every family instance with the derived parameters.
    pub matches: Vec<FamilyDescriptor>,
}

impl Verdict {
    fn negative(reason: String, derived: Option<SrgParams>) -> Self {
        Verdict {
            coset: false,
            kind: VerdictKind::None(reason),
            derived,
            matches: Vec::new(),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("coset", &self.coset)?;
        match &self.kind {
            VerdictKind::Xk { k } => {
                map.serialize_entry("kind", "XK")?;
                map.serialize_entry("witness", &serde_json::json!({ "k": k }))?;
            }
            VerdictKind::Srg(f) => {
                map.serialize_entry("kind", "SRG")?;
                map.serialize_entry("witness", f)?;
            }
            VerdictKind::None(reason) => {
                map.serialize_entry("kind", "NONE")?;
                map.serialize_entry("witness", &serde_json::json!({ "reason": reason }))?;
            }
        }
        if let Some(d) = &self.derived {
            map.serialize_entry("derived", d)?;
        }
        if !self.matches.is_empty() {
            let labels: Vec<String> = self.matches.iter().map(|f| f.to_string()).collect();
            map.serialize_entry("matches", &labels)?;
        }
        map.end()
    }
}

/// Reads `(v, k, lambda, mu)` back off a symmetric-star signature:
/// `m1/n = 1/k`, `m2/n = 1/k'` and `a/n = lambda/k`.
pub fn derive_params(sig: &Signature) -> Result<Option<SrgParams>> {
    let Signature::SymmetricStar { m1, m2, a } = *sig else {
        return Err(Error::Unsupported(format!(
            "parameters are only derived from symmetric-star signatures, got {sig}"
        )));
    };
    if *m1.numer() != 1 || *m2.numer() != 1 {
        return Ok(None);
    }
    let (k, kb) = (*m1.denom(), *m2.denom());
    let lambda = a * k;
    if !lambda.is_integer() {
        return Ok(None);
    }
    let lambda = lambda.to_integer();
    if lambda + 1 > k {
        return Ok(None);
    }
    let num = k * (k - 1 - lambda);
    if num % kb != 0 {
        return Ok(None);
    }
    Ok(SrgParams::new(k + kb + 1, k, lambda, num / kb).ok())
}

/// Decides cosetness of an involutive multivalued group of order 3.
pub fn classify_order3(g: &MultivaluedGroup) -> Result<Verdict> {
    if g.order() != 3 {
        return Err(invalid(format!(
            "expected a group of order 3, got {}",
            g.order()
        )));
    }
    let report = verify_axioms(g).merge(verify_involutive(g));
    if let Some(c) = report.first_failure() {
        return Err(invalid(format!(
            "not an involutive multivalued group: {} fails at {:?}",
            c.axiom, c.witness
        )));
    }
    match Order3Form::extract(g)?.0 {
        Order3Form::Type2 { n, a } => Ok(classify_swap(n, a)),
        Order3Form::Type1 { .. } => classify_symmetric(g),
    }
}

fn classify_swap(n: u64, a: u64) -> Verdict {
    let d = n - 2 * a;
    if d == 0 || d != a.gcd(&n) {
        return Verdict::negative(format!("a/n = {a}/{n} is not of the form k/(2k+1)"), None);
    }
    let k = a / d;
    let order = 4 * k as u128 + 3;
    let prime_power = u64::try_from(order)
        .ok()
        .is_some_and(|o| matches!(is_prime_power(o), Ok(Some(_))));
    if prime_power {
        Verdict {
            coset: true,
            kind: VerdictKind::Xk { k },
            derived: None,
            matches: Vec::new(),
        }
    } else {
        Verdict::negative(format!("X({k}): 4k+3 = {order} is not a prime power"), None)
    }
}

fn classify_symmetric(g: &MultivaluedGroup) -> Result<Verdict> {
    let sig = signature(g)?;
    let Some(p) = derive_params(&sig)? else {
        return Ok(Verdict::negative(
            format!("{sig} yields no strongly regular parameters"),
            None,
        ));
    };
    let realized = match mvgroup_from_params(&p) {
        Ok(h) => are_isomorphic(g, &h).is_some(),
        Err(Error::Parameter(_)) => false,
        Err(e) => return Err(e),
    };
    if !realized {
        return Ok(Verdict::negative(
            format!("{p} does not reproduce the table"),
            Some(p),
        ));
    }
    let matches = match_params(p.v(), p.k(), p.lambda(), p.mu())?;
    let Some(first) = matches.first().copied() else {
        let reason = match is_prime_power(p.v())? {
            None => format!("v = {} is not a prime power", p.v()),
            Some(_) => format!("{p} is not attained by any family"),
        };
        return Ok(Verdict::negative(reason, Some(p)));
    };
    Ok(Verdict {
        coset: true,
        kind: VerdictKind::Srg(first),
        derived: Some(p),
        matches,
    })
}
