use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Result};

use super::{ElementId, MultivaluedGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Associativity,
    Identity,
    Inverse,
    Involution,
    Reciprocity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Involution => "involution",
            Axiom::Reciprocity => "reciprocity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub witness: Vec<ElementId>,
}

/// Outcome of axiom verification.
///
/// A flag is `false` exactly when a counterexample with that axiom is listed.
/// Flags for checks that were not run stay `true`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub associative: bool,
    pub has_identity: bool,
    pub has_inverses: bool,
    pub involutive: bool,
    pub reciprocity_holds: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport {
            associative: true,
            has_identity: true,
            has_inverses: true,
            involutive: true,
            reciprocity_holds: true,
            counterexamples: Vec::new(),
        }
    }
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn fail(&mut self, axiom: Axiom, witness: Vec<ElementId>) {
        let flag = match axiom {
            Axiom::Associativity => &mut self.associative,
            Axiom::Identity => &mut self.has_identity,
            Axiom::Inverse => &mut self.has_inverses,
            Axiom::Involution => &mut self.involutive,
            Axiom::Reciprocity => &mut self.reciprocity_holds,
        };
        *flag = false;
        self.counterexamples.push(Counterexample { axiom, witness });
    }

    pub fn merge(mut self, other: AxiomReport) -> AxiomReport {
        for c in other.counterexamples {
            self.fail(c.axiom, c.witness);
        }
        self
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.counterexamples.first()
    }
}

/// Checks associativity, the identity law and the inverse law.
///
/// Associativity is the multiplicity form of the equality of the `n^2`
/// multisets `(x*y)*z` and `x*(y*z)`: for all `x, y, z, t`,
/// `sum_w m[x][y][w] m[w][z][t] == sum_w m[y][z][w] m[x][w][t]`.
/// Witnesses are `[x, y, z, t]`.
pub fn verify_axioms(g: &MultivaluedGroup) -> AxiomReport {
    let mut report = AxiomReport::default();
    check_identity(g, &mut report);
    check_inverses(g, &mut report);
    check_associativity(g, &mut report);
    report
}

fn check_identity(g: &MultivaluedGroup, report: &mut AxiomReport) {
    let e = g.identity();
    let n = g.valency();
    for x in g.elements() {
        if g.mult(e, x, x) != n {
            report.fail(Axiom::Identity, vec![e, x]);
        }
        if g.mult(x, e, x) != n {
            report.fail(Axiom::Identity, vec![x, e]);
        }
    }
}

fn check_inverses(g: &MultivaluedGroup, report: &mut AxiomReport) {
    let e = g.identity();
    if g.star(e) != e {
        report.fail(Axiom::Inverse, vec![e]);
    }
    for x in g.elements() {
        let xs = g.star(x);
        if g.mult(x, xs, e) == 0 {
            report.fail(Axiom::Inverse, vec![x, xs]);
        }
        if g.mult(xs, x, e) == 0 {
            report.fail(Axiom::Inverse, vec![xs, x]);
        }
    }
}

fn check_associativity(g: &MultivaluedGroup, report: &mut AxiomReport) {
    let order = g.order();
    // Products are sparse for group-like tables, so walk only the support.
    let support: Vec<Vec<(usize, u128)>> = (0..order * order)
        .map(|xy| {
            let (x, y) = (xy / order, xy % order);
            g.row(x, y)
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(z, &c)| (z, c as u128))
                .collect()
        })
        .collect();
    let at = |x: usize, y: usize| &support[x * order + y];

    // Each side is bounded by n^2 < 2^128, so u128 sums cannot overflow.
    let mut lhs = vec![0u128; order];
    let mut rhs = vec![0u128; order];
    let mut touched = Vec::with_capacity(order);
    let mut mark = vec![false; order];
    for x in 0..order {
        for y in 0..order {
            for z in 0..order {
                for &(w, a) in at(x, y) {
                    for &(t, b) in at(w, z) {
                        lhs[t] += a * b;
                        if !mark[t] {
                            mark[t] = true;
                            touched.push(t);
                        }
                    }
                }
                for &(w, a) in at(y, z) {
                    for &(t, b) in at(x, w) {
                        rhs[t] += a * b;
                        if !mark[t] {
                            mark[t] = true;
                            touched.push(t);
                        }
                    }
                }
                touched.sort_unstable();
                for &t in &touched {
                    if lhs[t] != rhs[t] {
                        report.fail(Axiom::Associativity, vec![x, y, z, t]);
                    }
                    lhs[t] = 0;
                    rhs[t] = 0;
                    mark[t] = false;
                }
                touched.clear();
            }
        }
    }
}

/// Checks the involutivity conditions:
/// `star` is an involution fixing the identity; `m[x][y][e] > 0` iff
/// `y = x*`; `m(x) = m(x*)`; and `m[x][y][z] = m[y*][x*][z*]`.
pub fn verify_involutive(g: &MultivaluedGroup) -> AxiomReport {
    let mut report = AxiomReport::default();
    let e = g.identity();
    if g.star(e) != e {
        report.fail(Axiom::Involution, vec![e]);
    }
    for x in g.elements() {
        if g.star(g.star(x)) != x {
            report.fail(Axiom::Involution, vec![x]);
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            if (g.mult(x, y, e) > 0) != (y == g.star(x)) {
                report.fail(Axiom::Involution, vec![x, y, e]);
            }
        }
        if g.diagonal(x) != g.diagonal(g.star(x)) {
            report.fail(Axiom::Involution, vec![x, g.star(x)]);
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                if g.mult(x, y, z) != g.mult(g.star(y), g.star(x), g.star(z)) {
                    report.fail(Axiom::Involution, vec![x, y, z]);
                }
            }
        }
    }
    report
}

fn reciprocity_failures(g: &MultivaluedGroup) -> Vec<Vec<ElementId>> {
    let mut failures = Vec::new();
    for x in g.elements() {
        let mx = g.diagonal(x) as u128;
        for y in g.elements() {
            let my = g.diagonal(y) as u128;
            for z in g.elements() {
                let lhs = mx * g.mult(y, z, g.star(x)) as u128;
                let rhs = my * g.mult(z, x, g.star(y)) as u128;
                if lhs != rhs {
                    failures.push(vec![x, y, z]);
                }
            }
        }
    }
    failures
}

/// The reciprocity identity `m(x) m[y][z][x*] = m(y) m[z][x][y*]` for all
/// triples. Defined for involutive groups only.
pub fn check_reciprocity(g: &MultivaluedGroup) -> Result<bool> {
    if !verify_involutive(g).is_ok() {
        return Err(invalid("reciprocity is only defined for involutive groups"));
    }
    Ok(reciprocity_failures(g).is_empty())
}

/// Every check: the group axioms, involutivity, and (for involutive tables)
/// reciprocity.
pub fn verify_all(g: &MultivaluedGroup) -> AxiomReport {
    let involutive = verify_involutive(g);
    let run_reciprocity = involutive.is_ok();
    let mut report = verify_axioms(g).merge(involutive);
    if run_reciprocity {
        for w in reciprocity_failures(g) {
            report.fail(Axiom::Reciprocity, w);
        }
    }
    report
}
