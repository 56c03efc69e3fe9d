//! Ocycle builders: each construction paired with a verified 1-ocycle.
//!
//! A builder assembles its cycle out of partial cycles and paths, records
//! which blocks each step contributed, and only returns once the cycle
//! validates against the constructed system and the steps partition the
//! block set exactly.

mod bose;
mod dispatch;
mod doubling;
mod product;
mod skolem;

pub use bose::ocycle_bose;
pub use dispatch::{ocycle_af, ocycle_any, AfBuilder};
pub use doubling::{ocycle_double_plus_one, ocycle_double_plus_seven, ocycle_double_plus_seven_with};
pub use product::{ocycle_product, ProductStats};
pub use skolem::ocycle_skolem;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use serde_json::Value;

use crate::constructions::BaseCaseAsset;
use crate::design::{LabelScheme, Origin, Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::ocycle::{validate_ocycle, OrientedBlock, OverlapCycle};

/// Which construction produced a certificate, with what parameters, from
/// which sub-certificates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, Value>,
    pub children: Vec<Provenance>,
}

impl Provenance {
    pub fn new(construction: &str, params: impl IntoIterator<Item = (&'static str, Value)>) -> Self {
        Provenance {
            construction: construction.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            children: Vec::new(),
        }
    }

    pub fn with_children(mut self, children: Vec<Provenance>) -> Self {
        self.children = children;
        self
    }

    pub fn order(&self) -> Option<u32> {
        self.params.get("order").and_then(Value::as_u64).map(|o| o as u32)
    }

    /// One-line rendering such as `37 = 2*15+7 [15 = base]`.
    pub fn tree(&self) -> String {
        let order = self.order().map(|o| o.to_string()).unwrap_or_else(|| "?".into());
        let child = |i: usize| self.children.get(i).and_then(Provenance::order).unwrap_or(0);
        let head = match self.construction.as_str() {
            "base_case" => format!("{order} = base"),
            "double_plus_one" => format!("{order} = 2*{}+1", child(0)),
            "double_plus_seven" => format!("{order} = 2*{}+7", child(0)),
            "product" => format!("{order} = {}*{}", child(0), child(1)),
            other => format!("{order} = {other}"),
        };
        if self.children.is_empty() {
            head
        } else {
            let inner: Vec<String> = self.children.iter().map(Provenance::tree).collect();
            format!("{head} [{}]", inner.join("; "))
        }
    }

    /// Depth of the construction tree; a leaf has depth 1.
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Provenance::depth).max().unwrap_or(0)
    }
}

/// Blocks contributed by one step of a builder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub name: String,
    pub blocks: Vec<Triple>,
}

/// A triple system with a verified ocycle over it.
#[derive(Debug, Clone)]
pub struct OcycleCertificate {
    pub ts: TripleSystem,
    pub cycle: OverlapCycle,
    pub provenance: Provenance,
    pub steps: Vec<StepRecord>,
}

impl OcycleCertificate {
    /// Checks everything a certificate promises and wraps it up.
    pub fn assemble(
        ts: TripleSystem,
        cycle: OverlapCycle,
        provenance: Provenance,
        steps: Vec<StepRecord>,
    ) -> Result<Self> {
        let cert = OcycleCertificate {
            ts,
            cycle,
            provenance,
            steps,
        };
        cert.verify()?;
        Ok(cert)
    }

    pub fn from_base_case(asset: &BaseCaseAsset) -> Result<Self> {
        let cycle = asset.cycle()?;
        let steps = vec![StepRecord {
            name: "listing".into(),
            blocks: asset.parsed_sts.blocks().to_vec(),
        }];
        let provenance = Provenance::new(
            "base_case",
            [
                ("order", Value::from(asset.v)),
                ("errata", Value::from(asset.errata.len())),
            ],
        );
        OcycleCertificate::assemble(asset.parsed_sts.clone(), cycle, provenance, steps)
    }

    pub fn order(&self) -> u32 {
        self.ts.order()
    }

    pub fn block_count(&self) -> usize {
        self.ts.block_count()
    }

    /// Re-runs the cycle validator and the step partition check.
    pub fn verify(&self) -> Result<()> {
        let report = validate_ocycle(&self.ts, self.cycle.blocks());
        if !report.is_clean() {
            return Err(Error::step(
                format!("{} certificate", self.provenance.construction),
                report,
            ));
        }
        self.partition_check()
    }

    /// Every block of the system lies in exactly one step.
    pub fn partition_check(&self) -> Result<()> {
        let mut owner: HashMap<Triple, &str> = HashMap::with_capacity(self.ts.block_count());
        for step in &self.steps {
            for t in &step.blocks {
                if !self.ts.contains(t) {
                    return Err(Error::step(&step.name, format!("block {t} is not in the system")));
                }
                if let Some(prev) = owner.insert(*t, &step.name) {
                    return Err(Error::step(&step.name, format!("block {t} already used by {prev}")));
                }
            }
        }
        if owner.len() != self.ts.block_count() {
            return Err(Error::step(
                "partition",
                format!("steps cover {} of {} blocks", owner.len(), self.ts.block_count()),
            ));
        }
        Ok(())
    }
}

/// Oriented block from structured origins.
pub(crate) fn oriented(scheme: &LabelScheme, h: Origin, x: Origin, t: Origin) -> Result<OrientedBlock> {
    OrientedBlock::new(scheme.label(h)?, scheme.label(x)?, scheme.label(t)?)
}

pub(crate) fn pt(coset: u32, residue: i64, modulus: u32) -> Origin {
    Origin::Pair {
        coset,
        residue: residue.rem_euclid(modulus as i64) as u32,
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Cycles of the blocks `template(x)`, each leading from `x` to
/// `x + step`, stepping through `Z_modulus` from the coset representatives
/// `0..gcd(step, modulus)` in turn.
pub(crate) fn step_cycles(
    modulus: u32,
    step: u32,
    template: impl Fn(u32) -> Result<OrientedBlock>,
) -> Result<Vec<OverlapCycle>> {
    let g = gcd(step % modulus, modulus);
    let len = modulus / g;
    let mut out = Vec::with_capacity(g as usize);
    for r in 0..g {
        let mut blocks = Vec::with_capacity(len as usize);
        let mut x = r;
        for _ in 0..len {
            blocks.push(template(x)?);
            x = (x + step) % modulus;
        }
        out.push(OverlapCycle::new(blocks)?);
    }
    Ok(out)
}

/// The cycles of one difference class: `gcd(d, modulus)` of them, each
/// stepping by `d`. `template(x)` must lead from `x` to `x + d`.
pub fn difference_class_cycles(
    modulus: u32,
    d: u32,
    template: impl Fn(u32) -> Result<OrientedBlock>,
) -> Result<Vec<OverlapCycle>> {
    if d < 1 || d > modulus.saturating_sub(1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "difference {d} outside 1..={} for modulus {modulus}",
            modulus.saturating_sub(1) / 2
        )));
    }
    step_cycles(modulus, d, template)
}

/// Fails loudly unless `p` is a junction of `cycle`.
pub(crate) fn require_junction(cycle: &OverlapCycle, p: Point, step: &str) -> Result<()> {
    if cycle.has_junction(p) {
        Ok(())
    } else {
        Err(Error::step(step, format!("point {p} is not an overlap point")))
    }
}

/// Merges and insists on a single survivor.
pub(crate) fn merge_to_one(cycles: Vec<OverlapCycle>, step: &str) -> Result<OverlapCycle> {
    let mut merged = crate::ocycle::merge_all(cycles);
    match merged.len() {
        1 => Ok(merged.pop().expect("one cycle")),
        0 => Err(Error::step(step, "no cycles to merge")),
        n => Err(Error::step(step, format!("{n} cycles remain after merging"))),
    }
}

/// Collects step records as a builder goes.
#[derive(Default)]
pub(crate) struct Steps(Vec<StepRecord>);

impl Steps {
    pub(crate) fn record<'a>(&mut self, name: &str, cycles: impl IntoIterator<Item = &'a OverlapCycle>) {
        let blocks = cycles.into_iter().flat_map(|c| c.triples()).collect();
        self.0.push(StepRecord {
            name: name.to_string(),
            blocks,
        });
    }

    pub(crate) fn into_inner(self) -> Vec<StepRecord> {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_template(v: u32, d: u32) -> impl Fn(u32) -> Result<OrientedBlock> {
        let scheme = LabelScheme::DoublePlusOne { base: v };
        let inv2 = (v as i64 + 1) / 2;
        move |x| {
            let x = x as i64;
            oriented(
                &scheme,
                pt(0, x, v),
                pt(1, x + d as i64 * inv2, v),
                pt(0, x + d as i64, v),
            )
        }
    }

    #[test]
    fn class_counts() {
        let one = difference_class_cycles(7, 1, class_template(7, 1)).unwrap();
        assert_eq!(one.len(), 1);
        let heads: Vec<u32> = one[0].blocks().iter().map(|b| b.head.0).collect();
        assert_eq!(heads, (0..7).collect::<Vec<_>>());
        let three = difference_class_cycles(9, 3, class_template(9, 3)).unwrap();
        assert_eq!(three.len(), 3);
        assert!(three.iter().all(|c| c.len() == 3));
        let five = difference_class_cycles(15, 5, class_template(15, 5)).unwrap();
        assert_eq!(five.len(), 5);
        let mut all: Vec<Triple> = five.iter().flat_map(|c| c.triples()).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 15);
        assert!(difference_class_cycles(9, 5, class_template(9, 5)).is_err());
        assert!(difference_class_cycles(9, 0, class_template(9, 0)).is_err());
    }
}
