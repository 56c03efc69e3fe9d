//! Ocycle for the Skolem construction, STS(6t+1).

use serde_json::Value;

use super::{difference_class_cycles, merge_to_one, oriented, OcycleCertificate, Provenance, Steps};
use crate::constructions::{skolem, skolem_op};
use crate::design::{LabelScheme, Origin};
use crate::error::{Error, Result};
use crate::ocycle::OverlapCycle;

/// The seven blocks through `A_x` for `x < t`, with `y = x + t`:
/// compressed `x2 y2 inf y0 x0 x1 y1`.
pub(crate) fn mini_cycle(t: u32, x: u32) -> Result<OverlapCycle> {
    let scheme = LabelScheme::Skolem { t };
    let p = |x: u32, i: u32| Origin::Pair { coset: i, residue: x };
    let inf = Origin::Infinity(0);
    let y = x + t;
    let z = skolem_op(x, y, t);
    let b = |h, m, tl| oriented(&scheme, h, m, tl);
    OverlapCycle::new(vec![
        b(p(x, 2), p(z, 0), p(y, 2))?,
        b(p(y, 2), p(x, 0), inf)?,
        b(inf, p(x, 1), p(y, 0))?,
        b(p(y, 0), p(z, 1), p(x, 0))?,
        b(p(x, 0), p(x, 2), p(x, 1))?,
        b(p(x, 1), p(z, 2), p(y, 1))?,
        b(p(y, 1), inf, p(x, 2))?,
    ])
}

/// STS(6t+1) with an ocycle, `t >= 1`.
pub fn ocycle_skolem(t: u32) -> Result<OcycleCertificate> {
    let ts = skolem(t)?;
    let scheme = LabelScheme::Skolem { t };
    let n = 2 * t;
    let mut steps = Steps::default();

    let mut backbones = Vec::new();
    let mut step1_cycles = Vec::new();
    for i in 0..3 {
        let mut level = Vec::new();
        for k in 1..t {
            level.extend(difference_class_cycles(n, k, |x| {
                let y = (x + k) % n;
                oriented(
                    &scheme,
                    Origin::Pair { coset: i, residue: x },
                    Origin::Pair {
                        coset: (i + 1) % 3,
                        residue: skolem_op(x, y, t),
                    },
                    Origin::Pair { coset: i, residue: y },
                )
            })?);
        }
        step1_cycles.extend(level.iter().cloned());
        if !level.is_empty() {
            backbones.push(merge_to_one(level, &format!("step 1, i = {i}"))?);
        }
    }
    steps.record("step 1: type (2), distance < t", &step1_cycles);

    let minis = (0..t)
        .map(|x| mini_cycle(t, x).map_err(|e| Error::step("step 2", e)))
        .collect::<Result<Vec<_>>>()?;
    steps.record("step 2: types (1), (3), type (2) distance t", &minis);

    let mut all = backbones;
    all.extend(minis);
    let cycle = merge_to_one(all, "final merge")?;
    let provenance = Provenance::new("skolem", [("order", Value::from(6 * t + 1)), ("t", Value::from(t))]);
    OcycleCertificate::assemble(ts, cycle, provenance, steps.into_inner())
}
