//! Ocycles for the 2v+1 and 2v+7 doubling constructions.

use serde_json::Value;

use super::{merge_to_one, oriented, pt, require_junction, step_cycles, OcycleCertificate, Provenance, Steps};
use crate::constructions::{double_plus_one, double_plus_seven, half, Fano7Seed};
use crate::design::{is_admissible, LabelScheme, Origin, Point};
use crate::error::{Error, Result};
use crate::ocycle::{cut_between, merge_all, splice_at, OverlapCycle, PathEnd};

fn lift(cycle: &OverlapCycle, v: u32, step: &str) -> Result<OverlapCycle> {
    cycle.map_points(|p| Point(v + p.0)).map_err(|e| Error::step(step, e))
}

fn check_input(cert: &OcycleCertificate, min: u32) -> Result<u32> {
    let v = cert.order();
    if !is_admissible(v) {
        return Err(Error::InadmissibleOrder { order: v });
    }
    if v < min {
        return Err(Error::InvalidParameter(format!(
            "needs an input of order >= {min}, got {v}"
        )));
    }
    Ok(v)
}

/// STS(2v+1) with an ocycle, from an STS(v) with one.
pub fn ocycle_double_plus_one(cert: &OcycleCertificate) -> Result<OcycleCertificate> {
    let v = check_input(cert, 7)?;
    let ts = double_plus_one(&cert.ts)?;
    let scheme = LabelScheme::DoublePlusOne { base: v };
    let inf = Origin::Infinity(0);
    let inv2 = half(v) as i64;
    let vi = v as i64;
    let mut steps = Steps::default();

    let step1 = lift(&cert.cycle, v, "step 1")?;
    steps.record("step 1: type (1)", [&step1]);

    let mut classes = Vec::new();
    for d in (1..=(v - 1) / 2).filter(|&d| d != 2) {
        let d = d as i64;
        classes.extend(step_cycles(v, d as u32, |x| {
            let x = x as i64;
            oriented(&scheme, pt(0, x, v), pt(1, x + d * inv2, v), pt(0, x + d, v))
        })?);
    }
    steps.record("step 2: type (2), d != 2", &classes);
    let step2 = merge_to_one(classes, "step 2")?;

    let mut blocks = Vec::with_capacity(2 * v as usize);
    for x in 0..vi {
        blocks.push(oriented(&scheme, pt(1, x + 1, v), pt(0, x, v), pt(0, x + 2, v))?);
        blocks.push(oriented(&scheme, pt(0, x + 2, v), inf, pt(1, x + 2, v))?);
    }
    let step3 = OverlapCycle::new(blocks).map_err(|e| Error::step("step 3", e))?;
    steps.record("step 3: type (3) and d = 2", [&step3]);
    for c in 0..2 {
        for x in 0..vi {
            require_junction(&step3, scheme.label(pt(c, x, v))?, "step 3")?;
        }
    }

    let cycle = merge_to_one(vec![step1, step2, step3], "final merge")?;
    let provenance = Provenance::new(
        "double_plus_one",
        [("order", Value::from(2 * v + 1)), ("v", Value::from(v))],
    )
    .with_children(vec![cert.provenance.clone()]);
    OcycleCertificate::assemble(ts, cycle, provenance, steps.into_inner())
}

/// STS(2v+7) with an ocycle, from an STS(v) with one, `v >= 15`, using the
/// standard seed on the infinite points.
pub fn ocycle_double_plus_seven(cert: &OcycleCertificate) -> Result<OcycleCertificate> {
    ocycle_double_plus_seven_with(cert, &Fano7Seed::standard()?)
}

pub fn ocycle_double_plus_seven_with(cert: &OcycleCertificate, seed: &Fano7Seed) -> Result<OcycleCertificate> {
    let v = check_input(cert, 15)?;
    let ts = double_plus_seven(&cert.ts, seed)?;
    let scheme = LabelScheme::DoublePlusSeven { base: v };
    let inf = Origin::Infinity;
    let vi = v as i64;
    let mut steps = Steps::default();

    let step1 = lift(&cert.cycle, v, "step 1")?;
    steps.record("step 1: type (1)", [&step1]);

    let step2 = step_cycles(v, 2, |x| {
        let x = x as i64;
        oriented(&scheme, pt(0, x, v), pt(0, x + 6, v), pt(0, x + 2, v))
    })?;
    steps.record("step 2: type (3)", &step2);

    // Stepping by 2y splits into gcd(y, v) cycles when y shares a factor
    // with v.
    let mut step3 = Vec::new();
    for y in 5..=((v - 1) / 2) as i64 {
        step3.extend(step_cycles(v, (2 * y % vi) as u32, |x| {
            let x = x as i64;
            oriented(&scheme, pt(0, x, v), pt(1, x + y, v), pt(0, x + 2 * y, v))
        })?);
    }
    steps.record("step 3: type (4), y > 4", &step3);
    let step3 = merge_all(step3);

    let mut blocks = Vec::with_capacity(2 * v as usize);
    for x in 0..vi {
        blocks.push(oriented(&scheme, pt(0, x, v), pt(0, x + 8, v), pt(1, x + 4, v))?);
        blocks.push(oriented(&scheme, pt(1, x + 4, v), inf(-3), pt(0, x + 1, v))?);
    }
    let step4 = OverlapCycle::new(blocks).map_err(|e| Error::step("step 4", e))?;
    steps.record("step 4: type (4) y = 4, type (5) i = -3", [&step4]);
    for c in 0..2 {
        for x in 0..vi {
            require_junction(&step4, scheme.label(pt(c, x, v))?, "step 4")?;
        }
    }

    // Step 5: open the step 4 cycle just before its first block, split it
    // after {(0,v-8),(0,0),(1,v-4)}, and close both halves.
    let full = cut_between(&step4, step4.len() - 1)?;
    let (first, second) = full.split_at(2 * (v as usize - 8) + 1)?;
    let first = first
        .reorient_end(PathEnd::Last)?
        .close()
        .map_err(|e| Error::step("step 5 (first path)", e))?;
    let second = second
        .reorient_end(PathEnd::First)?
        .reorient_end(PathEnd::Last)?
        .close()
        .map_err(|e| Error::step("step 5 (second path)", e))?;
    let anchor = scheme.label(inf(-3))?;
    let seed_cycle = seed
        .cycle
        .map_points(|p| seed.embed(v, p).expect("seed label below 7"))?;
    steps.record("step 5: type (2)", [&seed_cycle]);
    require_junction(&second, anchor, "step 5")?;
    let second = splice_at(&second, &seed_cycle, anchor).map_err(|e| Error::step("step 5", e))?;

    let mut step6 = Vec::new();
    for k in [-2i64, 0, 2] {
        let mut blocks = Vec::with_capacity(2 * v as usize);
        for x in 0..vi {
            blocks.push(oriented(&scheme, pt(0, x, v), inf(-k as i32), pt(1, x + k, v))?);
            blocks.push(oriented(&scheme, pt(1, x + k, v), inf(1 - k as i32), pt(0, x + 1, v))?);
        }
        step6.push(OverlapCycle::new(blocks).map_err(|e| Error::step("step 6", e))?);
    }
    steps.record("step 6: type (5), i != -3", &step6);

    let mut all = vec![step1];
    all.extend(step2);
    all.extend(step3);
    all.push(first);
    all.push(second);
    all.extend(step6);
    let cycle = merge_to_one(all, "final merge")?;
    let provenance = Provenance::new(
        "double_plus_seven",
        [("order", Value::from(2 * v + 7)), ("v", Value::from(v))],
    )
    .with_children(vec![cert.provenance.clone()]);
    OcycleCertificate::assemble(ts, cycle, provenance, steps.into_inner())
}
