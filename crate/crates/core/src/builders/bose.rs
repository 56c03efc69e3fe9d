//! Ocycle for the Bose construction, STS(3m).

use serde_json::Value;

use super::{
    difference_class_cycles, merge_to_one, oriented, pt, require_junction, step_cycles, OcycleCertificate, Provenance,
    Steps,
};
use crate::constructions::{bose, half};
use crate::design::LabelScheme;
use crate::error::{Error, Result};
use crate::ocycle::{cut_between, merge_all, splice_at, OrientedBlock, OverlapCycle, OverlapPath, PathEnd};

/// Position `i` with `blocks[i] == x` and `blocks[i+1] == y`, cyclically.
fn find_adjacent(cycle: &OverlapCycle, x: &OrientedBlock, y: &OrientedBlock, step: &str) -> Result<usize> {
    let n = cycle.len();
    (0..n)
        .find(|&i| cycle.blocks()[i] == *x && cycle.blocks()[(i + 1) % n] == *y)
        .ok_or_else(|| Error::step(step, format!("blocks {x} and {y} are not adjacent")))
}

/// Cycles of the type (1) blocks with first coordinate `a`, one class per
/// distance in `1..=(m-1)/2` other than `skip`.
fn level_classes(scheme: &LabelScheme, m: u32, a: u32, skip: Option<u32>) -> Result<Vec<OverlapCycle>> {
    let inv2 = half(m) as i64;
    let mut out = Vec::new();
    for d in (1..=(m - 1) / 2).filter(|&d| Some(d) != skip) {
        let di = d as i64;
        out.extend(difference_class_cycles(m, d, |x| {
            let x = x as i64;
            oriented(scheme, pt(a, x, m), pt((a + 1) % 3, x + di * inv2, m), pt(a, x + di, m))
        })?);
    }
    Ok(out)
}

/// STS(3m) with an ocycle, `m` odd and at least 3.
pub fn ocycle_bose(m: u32) -> Result<OcycleCertificate> {
    let ts = bose(m)?;
    let scheme = LabelScheme::Bose { m };
    let p = |a: u32, i: i64| pt(a, i, m);
    let b = |h: (u32, i64), x: (u32, i64), t: (u32, i64)| oriented(&scheme, p(h.0, h.1), p(x.0, x.1), p(t.0, t.1));
    let mi = m as i64;
    // The distance of the blocks stepped through by +2.
    let two = 2.min(m - 2);
    let mut steps = Steps::default();

    let step1 = level_classes(&scheme, m, 1, None)?;
    steps.record("step 1: type (1), a = 1", &step1);
    let step1 = merge_to_one(step1, "step 1")?;

    // Step 2: the +2 cycle is attached at (2,0) only, so the junction (2,1)
    // between X and Y survives for the cut.
    let plus_two = step_cycles(m, 2, |x| {
        let x = x as i64;
        b((2, x), (0, x + 1), (2, x + 2))
    })?;
    let others = level_classes(&scheme, m, 2, Some(two))?;
    steps.record("step 2: type (1), a = 2", plus_two.iter().chain(&others));
    let plus_two = merge_to_one(plus_two, "step 2")?;
    let step2 = if others.is_empty() {
        plus_two
    } else {
        let others = merge_to_one(others, "step 2")?;
        splice_at(&others, &plus_two, scheme.label(p(2, 0))?).map_err(|e| Error::step("step 2", e))?
    };
    let x = b((2, mi - 1), (0, 0), (2, 1))?;
    let y = b((2, 1), (0, 2), (2, 3))?;
    let at = find_adjacent(&step2, &x, &y, "step 2")?;
    let from_step2 = cut_between(&step2, at)?.reorient_end(PathEnd::Last)?;

    // Step 3: type (2) blocks paired with the a = 0 blocks of the +2
    // distance, then the remaining a = 0 classes.
    let mut paired = Vec::with_capacity(2 * m as usize);
    for i in 1..=mi {
        paired.push(b((0, i), (2, i), (1, i))?);
        paired.push(b((1, i), (0, i - 1), (0, i + 1))?);
    }
    let paired = OverlapCycle::new(paired).map_err(|e| Error::step("step 3", e))?;
    for i in 0..mi {
        require_junction(&paired, scheme.label(p(0, i))?, "step 3")?;
        require_junction(&paired, scheme.label(p(1, i))?, "step 3")?;
    }
    let others = level_classes(&scheme, m, 0, Some(two))?;
    steps.record(
        "step 3: type (2), type (1) a = 0",
        std::iter::once(&paired).chain(&others),
    );
    let mut step3 = vec![paired];
    step3.extend(others);
    let step3 = merge_to_one(step3, "step 3")?;

    // Step 4: join at (1,0), never at (1,1).
    let joint = scheme.label(p(1, 0))?;
    require_junction(&step1, joint, "step 4")?;
    let step4 = splice_at(&step3, &step1, joint).map_err(|e| Error::step("step 4", e))?;
    let x = b((0, 1), (2, 1), (1, 1))?;
    let y = b((1, 1), (0, 0), (0, 2))?;
    let at = find_adjacent(&step4, &x, &y, "step 4")?;
    let from_step4: OverlapPath = cut_between(&step4, at)?
        .reorient_end(PathEnd::First)?
        .reorient_end(PathEnd::Last)?;

    let cycle = from_step2
        .join(from_step4)
        .and_then(OverlapPath::close)
        .map_err(|e| Error::step("final join", e))?;
    // A no-op merge keeps the single-cycle invariant explicit.
    let cycle = merge_all(vec![cycle]).pop().expect("one cycle");
    let provenance = Provenance::new("bose", [("order", Value::from(3 * m)), ("m", Value::from(m))]);
    OcycleCertificate::assemble(ts, cycle, provenance, steps.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ocycle::compress;

    #[test]
    fn small_orders() {
        for m in [3, 5, 7, 9, 11] {
            let c = ocycle_bose(m).unwrap();
            assert_eq!(c.block_count() as u32, 3 * m * (3 * m - 1) / 6);
        }
        assert!(ocycle_bose(4).is_err());
    }

    #[test]
    fn m3_steps_partition() {
        let c = ocycle_bose(3).unwrap();
        let sizes: Vec<usize> = c.steps.iter().map(|s| s.blocks.len()).collect();
        assert_eq!(sizes, vec![3, 3, 6]);
        assert_eq!(compress(&c.cycle).len(), 12);
    }
}
