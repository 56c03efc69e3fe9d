//! Ocycle for the direct product of two systems with ocycles.

use std::collections::BTreeSet;

use serde_json::Value;

use super::{OcycleCertificate, Provenance, Steps};
use crate::constructions::direct_product;
use crate::design::Point;
use crate::error::{Error, Result};
use crate::ocycle::{merge_all, OrientedBlock, OverlapCycle};

/// How the product cycle was connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductStats {
    /// Cycles left after the first greedy merge.
    pub greedy_components: usize,
    /// Mixed families rebuilt around a point of the first factor that is
    /// never an overlap point of its cycle.
    pub reoriented_families: usize,
}

/// The six-block cycle over `{i,j,k} x {a,b,c}`; the roles are the points
/// of the two blocks in the given order.
fn mixed_cycle(w: u32, [i, j, k]: [Point; 3], [a, b, c]: [Point; 3]) -> Result<OverlapCycle> {
    let l = |r: Point, s: Point| Point(r.0 * w + s.0);
    let ob = |h, x, t| OrientedBlock::new(h, x, t);
    OverlapCycle::new(vec![
        ob(l(i, a), l(j, b), l(k, c))?,
        ob(l(k, c), l(j, a), l(i, b))?,
        ob(l(i, b), l(j, c), l(k, a))?,
        ob(l(k, a), l(j, b), l(i, c))?,
        ob(l(i, c), l(j, a), l(k, b))?,
        ob(l(k, b), l(j, c), l(i, a))?,
    ])
}

fn roles(b: &OrientedBlock) -> [Point; 3] {
    [b.head, b.hidden, b.tail]
}

/// STS(uw) with an ocycle from certificates of order `u` and `w`.
pub fn ocycle_product(a: &OcycleCertificate, b: &OcycleCertificate) -> Result<(OcycleCertificate, ProductStats)> {
    let (u, w) = (a.order(), b.order());
    let ts = direct_product(&a.ts, &b.ts)?;
    let mut steps = Steps::default();

    let type1 = (0..u)
        .map(|i| b.cycle.map_points(|q| Point(i * w + q.0)))
        .collect::<Result<Vec<_>>>()?;
    steps.record("type (1)", &type1);
    let type2 = (0..w)
        .map(|x| a.cycle.map_points(|p| Point(p.0 * w + x)))
        .collect::<Result<Vec<_>>>()?;
    steps.record("type (2)", &type2);

    // A block whose hidden point is never an overlap point of the first
    // cycle gets that point moved into a junction role for one family.
    let overlap: BTreeSet<Point> = a.cycle.blocks().iter().map(|blk| blk.head).collect();
    let mut swapped: Vec<usize> = Vec::new();
    for p in a.ts.points().filter(|p| !overlap.contains(p)) {
        let first = a.cycle.blocks().iter().position(|blk| blk.hidden == p);
        if let Some(idx) = first {
            if !swapped.contains(&idx) {
                swapped.push(idx);
            }
        }
    }

    let build_mixed = |reorient: &[usize]| -> Result<Vec<OverlapCycle>> {
        let mut out = Vec::with_capacity(a.block_count() * b.block_count());
        for (ia, ab) in a.cycle.blocks().iter().enumerate() {
            for (ib, bb) in b.cycle.blocks().iter().enumerate() {
                let [h, x, t] = roles(ab);
                let r = if ib == 0 && reorient.contains(&ia) {
                    [x, h, t]
                } else {
                    [h, x, t]
                };
                out.push(mixed_cycle(w, r, roles(bb))?);
            }
        }
        Ok(out)
    };

    let type3 = build_mixed(&[])?;
    steps.record("type (3)", &type3);
    let mut all = type1.clone();
    all.extend(type2.iter().cloned());
    all.extend(type3);
    let mut merged = merge_all(all);
    let greedy_components = merged.len();
    let mut reoriented_families = 0;
    if merged.len() > 1 {
        reoriented_families = swapped.len();
        let mut all = type1;
        all.extend(type2);
        all.extend(build_mixed(&swapped)?);
        merged = merge_all(all);
    }
    if merged.len() != 1 {
        return Err(Error::step("product merge", format!("{} cycles remain", merged.len())));
    }
    let cycle = merged.pop().expect("one cycle");
    let provenance = Provenance::new(
        "product",
        [
            ("order", Value::from(u * w)),
            ("u", Value::from(u)),
            ("w", Value::from(w)),
            ("reoriented_families", Value::from(reoriented_families)),
        ],
    )
    .with_children(vec![a.provenance.clone(), b.provenance.clone()]);
    let cert = OcycleCertificate::assemble(ts, cycle, provenance, steps.into_inner())?;
    Ok((
        cert,
        ProductStats {
            greedy_components,
            reoriented_families,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{ocycle_bose, ocycle_skolem};
    use crate::constructions::base_case;

    #[test]
    fn fano_squared_needs_no_fallback() {
        let a = ocycle_skolem(1).unwrap();
        let (c, stats) = ocycle_product(&a, &a).unwrap();
        assert_eq!(c.block_count(), 49 * 48 / 6);
        assert_eq!(stats.greedy_components, 1);
        assert_eq!(stats.reoriented_families, 0);
    }

    #[test]
    fn non_overlap_point_in_first_factor() {
        // The tabulated STS(9) cycle never uses 1 as an overlap point.
        let nine = OcycleCertificate::from_base_case(&base_case(9).unwrap()).unwrap();
        let (c, stats) = ocycle_product(&nine, &ocycle_bose(3).unwrap()).unwrap();
        assert_eq!(c.block_count(), 81 * 80 / 6);
        assert!(stats.greedy_components > 1);
        assert_eq!(stats.reoriented_families, 1);
    }

    #[test]
    fn mixed_cycle_is_valid() {
        let c = mixed_cycle(9, [Point(0), Point(1), Point(2)], [Point(3), Point(4), Point(5)]).unwrap();
        assert_eq!(c.len(), 6);
    }
}
