use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::arith::primes_up_to;
use crate::algebra::{is_prime_power, mult_order};
use crate::error::Result;
use crate::srg::formulas::{self, PolarSign};
use crate::srg::{complement_params, SrgParams, VLS_EXCLUDED};

/// Parameters of the sporadic affine rank 3 graphs outside the infinite
/// families, indexed from row 1.
pub const TABLE1: [(u64, u64, u64, u64); 24] = [
    (64, 18, 2, 6),
    (169, 72, 31, 30),
    (243, 22, 1, 2),
    (243, 110, 37, 60),
    (256, 45, 16, 6),
    (256, 102, 38, 42),
    (361, 144, 59, 56),
    (625, 144, 43, 30),
    (625, 240, 95, 90),
    (841, 168, 47, 30),
    (961, 240, 71, 56),
    (961, 360, 139, 132),
    (1681, 480, 149, 132),
    (2048, 276, 44, 36),
    (2048, 759, 310, 264),
    (2401, 240, 59, 20),
    (2401, 720, 229, 210),
    (2401, 960, 389, 380),
    (4096, 1575, 614, 600),
    (5041, 840, 179, 132),
    (6241, 1560, 419, 380),
    (6561, 1440, 351, 306),
    (15625, 7560, 3655, 3660),
    (531441, 65520, 8559, 8010),
];

/// Family labels in theorem order; table rows come last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    Table(usize),
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::I => "I",
            FamilyId::II => "II",
            FamilyId::III => "III",
            FamilyId::IV => "IV",
            FamilyId::V => "V",
            FamilyId::VI => "VI",
            FamilyId::VII => "VII",
            FamilyId::VIII => "VIII",
            FamilyId::IX => "IX",
            FamilyId::Table(_) => "TABLE",
        };
        f.write_str(s)
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The integers that instantiate a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Cliques { p: u64, t: u32, s: u32 },
    Field { q: u64 },
    Conference { t: u64 },
    Cyclotomic { p: u64, c: u64, t: u32 },
    Forms { q: u64, e: u32 },
    Polar { q: u64, e: u32, sign: PolarSign },
    Dimension { e: u32 },
    Row { row: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Cliques { p, t, s } => write!(f, "p={p},t={t},s={s}"),
            Witness::Field { q } => write!(f, "q={q}"),
            Witness::Conference { t } => write!(f, "t={t}"),
            Witness::Cyclotomic { p, c, t } => write!(f, "p={p},c={c},t={t}"),
            Witness::Forms { q, e } => write!(f, "q={q},e={e}"),
            Witness::Polar { q, e, sign } => write!(f, "q={q},e={e},eps={sign}"),
            Witness::Dimension { e } => write!(f, "e={e}"),
            Witness::Row { row } => write!(f, "row {row}"),
        }
    }
}

/// One instance of a family: its label, defining integers and the
/// lower-valency orientation of its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyDescriptor {
    pub id: FamilyId,
    pub params: SrgParams,
    pub witness: Witness,
}

impl FamilyDescriptor {
    fn sort_key(&self) -> ((u64, u64, u64, u64), FamilyId, Witness) {
        (self.params.tuple(), self.id, self.witness)
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}({})", self.params, self.id, self.witness)
    }
}

/// Parameter sets emitted by more than one family instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub params: SrgParams,
    pub members: Vec<FamilyDescriptor>,
}

fn push(
    out: &mut Vec<FamilyDescriptor>,
    id: FamilyId,
    witness: Witness,
    params: Option<SrgParams>,
) {
    if let Some(p) = params {
        out.push(FamilyDescriptor {
            id,
            params: p.canonical(),
            witness,
        });
    }
}

/// Whether `p` and its complement are both connected.
fn primitive(p: &SrgParams) -> bool {
    p.mu() > 0 && complement_params(p).is_ok_and(|c| c.mu() > 0)
}

/// Every family instance on exactly `v` vertices, in theorem order.
pub fn families_at(v: u64) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    let Ok(Some((p, d))) = is_prime_power(v) else {
        return out;
    };
    for t in 1..d {
        push(
            &mut out,
            FamilyId::I,
            Witness::Cliques { p, t, s: d - t },
            formulas::cliques(p, t, d - t),
        );
    }
    if d % 2 == 0 {
        let q = p.pow(d / 2);
        push(
            &mut out,
            FamilyId::II,
            Witness::Field { q },
            formulas::grid(q),
        );
    }
    if v % 4 == 1 {
        push(
            &mut out,
            FamilyId::III,
            Witness::Conference { t: v / 4 },
            formulas::paley(v),
        );
    }
    for c in primes_up_to(d as u64 + 1).into_iter().filter(|&c| c > 2) {
        let c1 = (c - 1) as u32;
        if d % c1 != 0 || p == c || VLS_EXCLUDED.contains(&(p, c, d / c1)) {
            continue;
        }
        if mult_order(p, c).ok() != Some(c - 1) {
            continue;
        }
        let t = d / c1;
        let params = formulas::vanlint_schrijver(p, c, t).filter(primitive);
        push(
            &mut out,
            FamilyId::IV,
            Witness::Cyclotomic { p, c, t },
            params,
        );
    }
    // v = q^{2e} with q = p^j
    for j in (1..=d).filter(|j| d % (2 * j) == 0) {
        let (q, e) = (p.pow(j), d / (2 * j));
        if e >= 3 {
            push(
                &mut out,
                FamilyId::V,
                Witness::Forms { q, e },
                formulas::bilinear(q, e),
            );
        }
        if e >= 2 {
            for sign in [PolarSign::Plus, PolarSign::Minus] {
                if q == 2 && sign == PolarSign::Plus {
                    continue;
                }
                let w = Witness::Polar { q, e, sign };
                push(
                    &mut out,
                    FamilyId::VI,
                    w,
                    formulas::affine_polar(q, e, sign),
                );
            }
        }
    }
    if p == 2 && d % 2 == 0 && d >= 4 {
        let e = d / 2;
        push(
            &mut out,
            FamilyId::VII,
            Witness::Dimension { e },
            formulas::polar_plus_complement(e),
        );
    }
    if d % 10 == 0 {
        let q = p.pow(d / 10);
        push(
            &mut out,
            FamilyId::VIII,
            Witness::Field { q },
            formulas::alternating(q),
        );
    }
    if d % 16 == 0 {
        let q = p.pow(d / 16);
        push(
            &mut out,
            FamilyId::IX,
            Witness::Field { q },
            formulas::half_spin(q),
        );
    }
    for (i, &(tv, k, l, m)) in TABLE1.iter().enumerate() {
        if tv == v {
            let params = SrgParams::new(tv, k, l, m).ok();
            push(
                &mut out,
                FamilyId::Table(i + 1),
                Witness::Row { row: i + 1 },
                params,
            );
        }
    }
    out
}

/// All family instances with at most `v_max` vertices, sorted by
/// `(v, k, lambda, mu, id)`.
pub fn enumerate_families(v_max: u64) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    for p in primes_up_to(v_max) {
        let mut v = p;
        while v <= v_max {
            out.extend(families_at(v));
            match v.checked_mul(p) {
                Some(next) => v = next,
                None => break,
            }
        }
    }
    out.sort_by_key(FamilyDescriptor::sort_key);
    out
}

/// Parameter sets shared by two or more descriptors.
pub fn collisions(families: &[FamilyDescriptor]) -> Vec<Collision> {
    let mut by_params: BTreeMap<SrgParams, Vec<FamilyDescriptor>> = BTreeMap::new();
    for f in families {
        by_params.entry(f.params).or_default().push(*f);
    }
    by_params
        .into_iter()
        .filter(|(_, m)| m.len() > 1)
        .map(|(params, members)| Collision { params, members })
        .collect()
}

/// All family instances with these parameters, in theorem order. The input
/// is reduced to its lower-valency orientation first; when both valencies
/// are equal, either orientation matches.
pub fn match_params(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Vec<FamilyDescriptor>> {
    let p = SrgParams::new(v, k, lambda, mu)?;
    let canonical = p.canonical();
    let mut wanted = vec![canonical];
    if canonical.k() == canonical.k_bar() {
        wanted.extend(complement_params(&canonical).ok());
    }
    let mut out: Vec<_> = families_at(v)
        .into_iter()
        .filter(|f| wanted.contains(&f.params))
        .collect();
    out.sort_by_key(|f| (f.id, f.witness));
    Ok(out)
}

/// The catalogue as CSV with header `v,k,lambda,mu,family,witness`.
pub fn catalogue_csv(families: &[FamilyDescriptor]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["v", "k", "lambda", "mu", "family", "witness"])?;
    for f in families {
        let (v, k, l, m) = f.params.tuple();
        w.write_record([
            v.to_string(),
            k.to_string(),
            l.to_string(),
            m.to_string(),
            f.id.to_string(),
            f.witness.to_string(),
        ])?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| crate::Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| crate::Error::Internal(e.to_string()))
}
