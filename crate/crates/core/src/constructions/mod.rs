//! Triple system constructions: Bose, Skolem, direct product, the two
//! doubling constructions, and the tabulated base cases.
//!
//! Every constructor hands its block list to [`TripleSystem::new`], so a
//! wrong block rule surfaces as an [`Error::InvalidDesign`] at build time
//! rather than as a silently broken design.

mod base_case;
mod listing;

pub use base_case::{base_case, corrected_compressed_display, BaseCaseAsset, BaseCases, ErrataEntry, BASE_CASE_ORDERS};
pub use listing::{listing_cells, parse_listing, ListingCell};

use crate::design::{is_admissible, LabelScheme, Origin, Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::ocycle::OverlapCycle;

/// Inverse of 2 modulo an odd modulus.
pub(crate) fn half(modulus: u32) -> u32 {
    (modulus + 1) / 2
}

pub(crate) fn modp(x: i64, m: u32) -> u32 {
    x.rem_euclid(m as i64) as u32
}

fn pair(coset: u32, residue: u32) -> Origin {
    Origin::Pair { coset, residue }
}

fn triple(scheme: &LabelScheme, a: Origin, b: Origin, c: Origin) -> Result<Triple> {
    Triple::new(scheme.label(a)?, scheme.label(b)?, scheme.label(c)?)
}

/// Bose construction on `Z_3 x Z_m`, labelled `(a, i) -> a*m + i`.
pub fn bose(m: u32) -> Result<TripleSystem> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::InvalidParameter(format!("bose needs odd m >= 3, got {m}")));
    }
    let scheme = LabelScheme::Bose { m };
    let inv2 = half(m);
    let mut blocks = Vec::with_capacity((3 * m * (3 * m - 1) / 6) as usize);
    for a in 0..3 {
        for i in 0..m {
            for j in i + 1..m {
                let k = ((i + j) as u64 * inv2 as u64 % m as u64) as u32;
                blocks.push(triple(&scheme, pair(a, i), pair(a, j), pair((a + 1) % 3, k))?);
            }
        }
    }
    for i in 0..m {
        blocks.push(triple(&scheme, pair(0, i), pair(1, i), pair(2, i))?);
    }
    TripleSystem::new(3 * m, blocks)
}

/// The half-idempotent quasigroup used by the Skolem construction:
/// `x o y = pi(x + y mod 2t)`.
pub fn skolem_pi(z: u32, t: u32) -> u32 {
    if z % 2 == 0 {
        z / 2
    } else {
        (z + 2 * t - 1) / 2
    }
}

pub(crate) fn skolem_op(x: u32, y: u32, t: u32) -> u32 {
    skolem_pi((x + y) % (2 * t), t)
}

/// Skolem construction on `(Z_2t x Z_3) + {inf}`. The point `(x, i)` has
/// label `i*2t + x` and `inf` is `6t`.
pub fn skolem(t: u32) -> Result<TripleSystem> {
    if t < 1 {
        return Err(Error::InvalidParameter("skolem needs t >= 1".into()));
    }
    let scheme = LabelScheme::Skolem { t };
    let p = |x: u32, i: u32| pair(i % 3, x % (2 * t));
    let inf = Origin::Infinity(0);
    let mut blocks = Vec::new();
    for x in 0..t {
        blocks.push(triple(&scheme, p(x, 0), p(x, 1), p(x, 2))?);
    }
    for i in 0..3 {
        for x in 0..2 * t {
            for y in x + 1..2 * t {
                blocks.push(triple(&scheme, p(x, i), p(y, i), p(skolem_op(x, y, t), i + 1))?);
            }
        }
    }
    for x in 0..t {
        for i in 0..3 {
            blocks.push(triple(&scheme, inf, p(x + t, i), p(x, i + 1))?);
        }
    }
    TripleSystem::new(6 * t + 1, blocks)
}

/// The six assignments of `{a, b, c}` to the roles `(i, j, k)` used for the
/// mixed blocks of the direct product, in the order of the six-block cycle.
pub const PRODUCT_ASSIGNMENTS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [1, 2, 0], [2, 1, 0], [2, 0, 1], [0, 2, 1]];

/// Direct product of an STS(u) and an STS(w); `(i, a) -> i*w + a`.
pub fn direct_product(a: &TripleSystem, b: &TripleSystem) -> Result<TripleSystem> {
    let (u, w) = (a.order(), b.order());
    let scheme = LabelScheme::Product { u, w };
    let lab = |i: Point, x: Point| scheme.label(pair(i.0, x.0));
    let mut blocks = Vec::with_capacity(
        u as usize * b.block_count() + w as usize * a.block_count() + 6 * a.block_count() * b.block_count(),
    );
    for i in a.points() {
        for bb in b.blocks() {
            let [x, y, z] = bb.points();
            blocks.push(Triple::new(lab(i, x)?, lab(i, y)?, lab(i, z)?)?);
        }
    }
    for x in b.points() {
        for ab in a.blocks() {
            let [i, j, k] = ab.points();
            blocks.push(Triple::new(lab(i, x)?, lab(j, x)?, lab(k, x)?)?);
        }
    }
    for ab in a.blocks() {
        let [i, j, k] = ab.points();
        for bb in b.blocks() {
            let pts = bb.points();
            for perm in PRODUCT_ASSIGNMENTS {
                blocks.push(Triple::new(
                    lab(i, pts[perm[0]])?,
                    lab(j, pts[perm[1]])?,
                    lab(k, pts[perm[2]])?,
                )?);
            }
        }
    }
    TripleSystem::new(u * w, blocks)
}

fn check_base(a: &TripleSystem, min: u32, what: &str) -> Result<u32> {
    let v = a.order();
    if !is_admissible(v) {
        return Err(Error::InadmissibleOrder { order: v });
    }
    if v < min {
        return Err(Error::InvalidParameter(format!("{what} needs v >= {min}, got {v}")));
    }
    Ok(v)
}

/// STS(2v+1) on `(Z_2 x Z_v) + {inf}`: `(c, x) -> c*v + x`, `inf -> 2v`.
pub fn double_plus_one(a: &TripleSystem) -> Result<TripleSystem> {
    let v = check_base(a, 3, "double_plus_one")?;
    let scheme = LabelScheme::DoublePlusOne { base: v };
    let inv2 = half(v) as u64;
    let mut blocks = Vec::new();
    for blk in a.blocks() {
        blocks.push(blk.map(|p| Point(v + p.0))?);
    }
    for x in 0..v {
        for y in x + 1..v {
            let mid = ((x + y) as u64 * inv2 % v as u64) as u32;
            blocks.push(triple(&scheme, pair(0, x), pair(0, y), pair(1, mid))?);
        }
    }
    for x in 0..v {
        blocks.push(triple(&scheme, pair(0, x), pair(1, x), Origin::Infinity(0))?);
    }
    TripleSystem::new(2 * v + 1, blocks)
}

/// The STS(7) placed on the seven infinite points by [`double_plus_seven`],
/// with the bijection from its labels `0..6` to the indices `-3..3`.
#[derive(Debug, Clone)]
pub struct Fano7Seed {
    pub sts: TripleSystem,
    pub cycle: OverlapCycle,
    pub relabel: [i32; 7],
}

impl Fano7Seed {
    pub fn new(sts: TripleSystem, cycle: OverlapCycle, relabel: [i32; 7]) -> Result<Self> {
        if sts.order() != 7 {
            return Err(Error::InvalidParameter(format!(
                "seed must have order 7, got {}",
                sts.order()
            )));
        }
        let mut sorted = relabel;
        sorted.sort_unstable();
        if sorted != [-3, -2, -1, 0, 1, 2, 3] {
            return Err(Error::InvalidParameter(
                "seed relabel must be a bijection onto -3..3".into(),
            ));
        }
        Ok(Fano7Seed { sts, cycle, relabel })
    }

    /// The base-case STS(7) and its cycle, with `l -> l - 3`.
    pub fn standard() -> Result<Self> {
        let asset = base_case(7)?;
        let cycle = asset.cycle()?;
        Fano7Seed::new(asset.parsed_sts, cycle, [-3, -2, -1, 0, 1, 2, 3])
    }

    /// Label of the seed point `l` inside STS(2v+7).
    pub fn embed(&self, base: u32, l: Point) -> Result<Point> {
        LabelScheme::DoublePlusSeven { base }.label(Origin::Infinity(self.relabel[l.index()]))
    }
}

/// STS(2v+7) on `(Z_2 x Z_v) + {inf_i : |i| <= 3}`: `(c, x) -> c*v + x`,
/// `inf_i -> 2v + i + 3`.
///
/// Mixed blocks `{(0,x), (1,x+y), (0,x+2y)}` are generated for `y` in
/// `4..=(v-1)/2` only; the block for `-y` is the block for `y` started at
/// `x + 2y`, so this yields each of them once.
pub fn double_plus_seven(a: &TripleSystem, seed: &Fano7Seed) -> Result<TripleSystem> {
    let v = check_base(a, 15, "double_plus_seven")?;
    let scheme = LabelScheme::DoublePlusSeven { base: v };
    let z = |x: i64| modp(x, v);
    let mut blocks = Vec::new();
    for blk in a.blocks() {
        blocks.push(blk.map(|p| Point(v + p.0))?);
    }
    for blk in seed.sts.blocks() {
        let [p, q, r] = blk.points();
        blocks.push(Triple::new(seed.embed(v, p)?, seed.embed(v, q)?, seed.embed(v, r)?)?);
    }
    for x in 0..v as i64 {
        blocks.push(triple(&scheme, pair(0, z(x)), pair(0, z(x + 2)), pair(0, z(x + 6)))?);
    }
    for y in 4..=((v - 1) / 2) as i64 {
        for x in 0..v as i64 {
            blocks.push(triple(
                &scheme,
                pair(0, z(x)),
                pair(1, z(x + y)),
                pair(0, z(x + 2 * y)),
            )?);
        }
    }
    for i in -3..=3i64 {
        for j in 0..v as i64 {
            blocks.push(triple(
                &scheme,
                Origin::Infinity(i as i32),
                pair(1, z(j)),
                pair(0, z(i + j)),
            )?);
        }
    }
    TripleSystem::new(2 * v + 7, blocks).map_err(|e| match e {
        Error::InvalidDesign(report) => Error::step("double_plus_seven", format!("block rule rejected: {report}")),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{expected_block_count, validate_sts};

    #[test]
    fn bose_orders() {
        for m in (3..=33).step_by(2) {
            let ts = bose(m).unwrap();
            assert_eq!(ts.block_count(), expected_block_count(3 * m));
        }
        assert!(bose(4).is_err());
        assert!(bose(1).is_err());
    }

    #[test]
    fn bose_parallel_blocks() {
        let ts = bose(3).unwrap();
        for i in 0..3 {
            assert!(ts.contains(&Triple::from_labels(i, 3 + i, 6 + i).unwrap()));
        }
    }

    #[test]
    fn skolem_orders_and_pi() {
        assert_eq!((0..4).map(|z| skolem_pi(z, 2)).collect::<Vec<_>>(), vec![0, 2, 1, 3]);
        for t in 1..=16 {
            assert_eq!(skolem(t).unwrap().block_count(), expected_block_count(6 * t + 1));
        }
        assert!(skolem(0).is_err());
    }

    #[test]
    fn product_counts() {
        let s3 = TripleSystem::trivial();
        assert_eq!(direct_product(&s3, &s3).unwrap().block_count(), 12);
        let p = direct_product(&skolem(1).unwrap(), &bose(3).unwrap()).unwrap();
        assert_eq!(p.block_count(), 651);
    }

    #[test]
    fn product_assignments_are_all_permutations() {
        let mut seen: Vec<[usize; 3]> = PRODUCT_ASSIGNMENTS.to_vec();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn doubling_keeps_base_blocks() {
        let a = skolem(1).unwrap();
        let d = double_plus_one(&a).unwrap();
        assert_eq!(d.block_count(), 35);
        let back: Vec<Triple> = d.blocks()[..7]
            .iter()
            .map(|b| b.map(|p| Point(p.0 - 7)).unwrap())
            .collect();
        assert_eq!(back, a.blocks());
        // (0,0),(0,1) meet (1,4) when v = 7
        assert!(d.contains(&Triple::from_labels(0, 1, 11).unwrap()));
    }

    #[test]
    fn double_plus_seven_from_fifteen() {
        let seed = Fano7Seed::standard().unwrap();
        let d = double_plus_seven(&bose(5).unwrap(), &seed).unwrap();
        assert_eq!(d.block_count(), 222);
        assert!(validate_sts(37, d.blocks()).is_clean());
        assert!(double_plus_seven(&bose(3).unwrap(), &seed).is_err());
    }
}
