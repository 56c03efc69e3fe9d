//! Points, triples and Steiner triple systems.
//!
//! A [`TripleSystem`] is immutable once built: [`TripleSystem::new`] checks
//! every structural property (order admissibility, block count, exact pair
//! coverage, replication) and builds a dense pair index so that the block
//! through any two points is a single lookup.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A design point, identified by its canonical integer label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub u32);

impl Point {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Point {
    fn from(v: u32) -> Self {
        Point(v)
    }
}

/// Structured name of a point, as used by the constructions before labels
/// are flattened.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    Plain(u32),
    Pair { coset: u32, residue: u32 },
    Infinity(i32),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Plain(z) => write!(f, "{z}"),
            Origin::Pair { coset, residue } => write!(f, "({coset},{residue})"),
            Origin::Infinity(i) => write!(f, "inf_{i}"),
        }
    }
}

/// Fixed bijection between structured origins and flat labels, one per
/// construction.
///
/// | scheme | origin | label |
/// |---|---|---|
/// | `DoublePlusOne { base: v }` | `(c, x)`, `Infinity(0)` | `c*v + x`, `2v` |
/// | `DoublePlusSeven { base: v }` | `(c, x)`, `Infinity(i)`, `|i| <= 3` | `c*v + x`, `2v + i + 3` |
/// | `Bose { m }` | `(a, i)`, `a < 3` | `a*m + i` |
/// | `Skolem { t }` | `(i, x)` with coset `i < 3`, residue `x < 2t`; `Infinity(0)` | `i*2t + x`, `6t` |
/// | `Product { u, w }` | `(i, a)`, `i < u`, `a < w` | `i*w + a` |
/// | `Tabulated { m, infinities }` | `(c, x)`, `Infinity(k)` | `c*m + x`, `2m + k` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelScheme {
    Plain { order: u32 },
    DoublePlusOne { base: u32 },
    DoublePlusSeven { base: u32 },
    Bose { m: u32 },
    Skolem { t: u32 },
    Product { u: u32, w: u32 },
    Tabulated { m: u32, infinities: u32 },
}

impl fmt::Display for LabelScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl LabelScheme {
    pub fn order(&self) -> u32 {
        match *self {
            LabelScheme::Plain { order } => order,
            LabelScheme::DoublePlusOne { base } => 2 * base + 1,
            LabelScheme::DoublePlusSeven { base } => 2 * base + 7,
            LabelScheme::Bose { m } => 3 * m,
            LabelScheme::Skolem { t } => 6 * t + 1,
            LabelScheme::Product { u, w } => u * w,
            LabelScheme::Tabulated { m, infinities } => 2 * m + infinities,
        }
    }

    /// Maps a structured origin to its canonical label.
    pub fn label(&self, origin: Origin) -> Result<Point> {
        let out_of_scheme = || Error::OriginOutOfScheme {
            origin: origin.to_string(),
            scheme: self.to_string(),
        };
        let label = match (*self, origin) {
            (LabelScheme::Plain { order }, Origin::Plain(z)) if z < order => z,
            (LabelScheme::DoublePlusOne { base }, Origin::Pair { coset, residue })
            | (LabelScheme::DoublePlusSeven { base }, Origin::Pair { coset, residue })
                if coset < 2 && residue < base =>
            {
                coset * base + residue
            }
            (LabelScheme::DoublePlusOne { base }, Origin::Infinity(0)) => 2 * base,
            (LabelScheme::DoublePlusSeven { base }, Origin::Infinity(i)) if (-3..=3).contains(&i) => {
                (2 * base as i64 + i as i64 + 3) as u32
            }
            (LabelScheme::Bose { m }, Origin::Pair { coset, residue }) if coset < 3 && residue < m => {
                coset * m + residue
            }
            (LabelScheme::Skolem { t }, Origin::Pair { coset, residue }) if coset < 3 && residue < 2 * t => {
                coset * 2 * t + residue
            }
            (LabelScheme::Skolem { t }, Origin::Infinity(0)) => 6 * t,
            (LabelScheme::Product { u, w }, Origin::Pair { coset, residue }) if coset < u && residue < w => {
                coset * w + residue
            }
            (LabelScheme::Tabulated { m, .. }, Origin::Pair { coset, residue }) if coset < 2 && residue < m => {
                coset * m + residue
            }
            (LabelScheme::Tabulated { m, infinities }, Origin::Infinity(k)) if k >= 0 && (k as u32) < infinities => {
                2 * m + k as u32
            }
            _ => return Err(out_of_scheme()),
        };
        Ok(Point(label))
    }

    /// Inverse of [`LabelScheme::label`].
    pub fn origin(&self, point: Point) -> Result<Origin> {
        let order = self.order();
        if point.0 >= order {
            return Err(Error::PointOutOfRange { point, order });
        }
        let p = point.0;
        let pair = |coset, residue| Origin::Pair { coset, residue };
        Ok(match *self {
            LabelScheme::Plain { .. } => Origin::Plain(p),
            LabelScheme::DoublePlusOne { base } => {
                if p == 2 * base {
                    Origin::Infinity(0)
                } else {
                    pair(p / base, p % base)
                }
            }
            LabelScheme::DoublePlusSeven { base } => {
                if p >= 2 * base {
                    Origin::Infinity(p as i32 - 2 * base as i32 - 3)
                } else {
                    pair(p / base, p % base)
                }
            }
            LabelScheme::Bose { m } => pair(p / m, p % m),
            LabelScheme::Skolem { t } => {
                if p == 6 * t {
                    Origin::Infinity(0)
                } else {
                    pair(p / (2 * t), p % (2 * t))
                }
            }
            LabelScheme::Product { w, .. } => pair(p / w, p % w),
            LabelScheme::Tabulated { m, .. } => {
                if p >= 2 * m {
                    Origin::Infinity((p - 2 * m) as i32)
                } else {
                    pair(p / m, p % m)
                }
            }
        })
    }

    /// Every origin in the scheme's domain, in label order.
    pub fn origins(&self) -> Vec<Origin> {
        (0..self.order())
            .map(|p| self.origin(Point(p)).expect("label below order"))
            .collect()
    }
}

/// Canonical label of a structured point under `scheme`.
pub fn canonical_label(origin: Origin, scheme: LabelScheme) -> Result<Point> {
    scheme.label(origin)
}

/// An unordered block of three distinct points, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple([Point; 3]);

impl Triple {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::DegenerateBlock([a.0, b.0, c.0]));
        }
        let mut pts = [a, b, c];
        pts.sort_unstable();
        Ok(Triple(pts))
    }

    pub fn from_labels(a: u32, b: u32, c: u32) -> Result<Self> {
        Triple::new(Point(a), Point(b), Point(c))
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    /// The point of the block other than `p` and `q`.
    pub fn third(&self, p: Point, q: Point) -> Option<Point> {
        if !self.contains(p) || !self.contains(q) || p == q {
            return None;
        }
        self.0.iter().copied().find(|&r| r != p && r != q)
    }

    /// The three unordered pairs of the block, each as `(low, high)`.
    pub fn pairs(&self) -> [(Point, Point); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        let [a, b, c] = self.0;
        Triple::new(f(a), f(b), f(c))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{{{a},{b},{c}}}")
    }
}

/// One structural problem found by [`validate_sts`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StsDefect {
    ZeroOrder,
    InadmissibleOrder {
        order: u32,
    },
    BlockCount {
        found: usize,
        expected: usize,
    },
    OutOfRange {
        block: usize,
        point: u32,
    },
    DegenerateBlock {
        block: usize,
    },
    DuplicatePair {
        p: u32,
        q: u32,
        first_block: usize,
        second_block: usize,
    },
    MissingPair {
        p: u32,
        q: u32,
    },
    Replication {
        point: u32,
        found: usize,
        expected: usize,
    },
}

impl fmt::Display for StsDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StsDefect::ZeroOrder => write!(f, "order 0 is not a design"),
            StsDefect::InadmissibleOrder { order } => write!(f, "{order} \u{2262} 1,3 (mod 6)"),
            StsDefect::BlockCount { found, expected } => {
                write!(f, "block count {found} \u{2260} {expected}")
            }
            StsDefect::OutOfRange { block, point } => {
                write!(f, "block {block}: label {point} out of range")
            }
            StsDefect::DegenerateBlock { block } => write!(f, "block {block} repeats a point"),
            StsDefect::DuplicatePair {
                p,
                q,
                first_block,
                second_block,
            } => write!(
                f,
                "pair {{{p},{q}}} covered twice (blocks {first_block} and {second_block})"
            ),
            StsDefect::MissingPair { p, q } => write!(f, "pair {{{p},{q}}} not covered"),
            StsDefect::Replication { point, found, expected } => {
                write!(f, "point {point} lies in {found} blocks, expected {expected}")
            }
        }
    }
}

/// Maximum number of itemised defects kept in a report; totals are always exact.
pub const MAX_REPORTED_DEFECTS: usize = 100;

/// Outcome of [`validate_sts`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StsReport {
    pub order: u32,
    pub block_count: usize,
    pub expected_blocks: usize,
    pub uncovered_pairs: usize,
    pub doubly_covered_pairs: usize,
    pub replication_deviations: usize,
    pub invalid_blocks: usize,
    pub total_defects: usize,
    pub defects: Vec<StsDefect>,
}

impl StsReport {
    pub fn is_clean(&self) -> bool {
        self.total_defects == 0
    }

    fn push(&mut self, defect: StsDefect) {
        self.total_defects += 1;
        if self.defects.len() < MAX_REPORTED_DEFECTS {
            self.defects.push(defect);
        }
    }

    /// Short totals line, e.g. `3 uncovered pairs, block count 6 ≠ 7`.
    pub fn summary(&self) -> String {
        if self.is_clean() {
            return format!("clean: v={} b={}", self.order, self.block_count);
        }
        let mut parts = Vec::new();
        if self.uncovered_pairs > 0 {
            parts.push(format!("{} uncovered pairs", self.uncovered_pairs));
        }
        if self.doubly_covered_pairs > 0 {
            parts.push(format!("{} doubly covered pairs", self.doubly_covered_pairs));
        }
        if self.block_count != self.expected_blocks {
            parts.push(format!(
                "block count {} \u{2260} {}",
                self.block_count, self.expected_blocks
            ));
        }
        if self.replication_deviations > 0 {
            parts.push(format!("{} replication deviations", self.replication_deviations));
        }
        if self.invalid_blocks > 0 {
            parts.push(format!("{} invalid blocks", self.invalid_blocks));
        }
        if parts.is_empty() {
            parts.push(format!("{} defects", self.total_defects));
        }
        parts.join(", ")
    }
}

impl fmt::Display for StsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.defects.first() {
            Some(first) => write!(f, "{first}; {}", self.summary()),
            None => f.write_str(&self.summary()),
        }
    }
}

pub fn is_admissible(order: u32) -> bool {
    order % 6 == 1 || order % 6 == 3
}

pub fn expected_block_count(order: u32) -> usize {
    let v = order as usize;
    v * v.saturating_sub(1) / 6
}

const NO_BLOCK: u32 = u32::MAX;

/// Checks `blocks` against every Steiner triple system property without
/// failing. The defect list is empty iff [`TripleSystem::new`] would succeed.
pub fn validate_sts(order: u32, blocks: &[Triple]) -> StsReport {
    validate_inner(order, blocks).0
}

fn validate_inner(order: u32, blocks: &[Triple]) -> (StsReport, Vec<u32>) {
    let expected_blocks = expected_block_count(order);
    let mut report = StsReport {
        order,
        block_count: blocks.len(),
        expected_blocks,
        uncovered_pairs: 0,
        doubly_covered_pairs: 0,
        replication_deviations: 0,
        invalid_blocks: 0,
        total_defects: 0,
        defects: Vec::new(),
    };
    if order == 0 {
        report.push(StsDefect::ZeroOrder);
        return (report, Vec::new());
    }
    if !is_admissible(order) {
        report.push(StsDefect::InadmissibleOrder { order });
    }
    if blocks.len() != expected_blocks {
        report.push(StsDefect::BlockCount {
            found: blocks.len(),
            expected: expected_blocks,
        });
    }

    let v = order as usize;
    let mut index = vec![NO_BLOCK; v * v];
    let mut seen_duplicate = vec![false; v * v];
    let mut replication = vec![0usize; v];
    for (bi, block) in blocks.iter().enumerate() {
        let pts = block.points();
        if let Some(bad) = pts.iter().find(|p| p.0 >= order) {
            report.invalid_blocks += 1;
            report.push(StsDefect::OutOfRange {
                block: bi,
                point: bad.0,
            });
            continue;
        }
        if pts[0] == pts[1] || pts[1] == pts[2] {
            report.invalid_blocks += 1;
            report.push(StsDefect::DegenerateBlock { block: bi });
            continue;
        }
        for p in pts {
            replication[p.index()] += 1;
        }
        for (p, q) in block.pairs() {
            let key = p.index() * v + q.index();
            if index[key] == NO_BLOCK {
                index[key] = bi as u32;
                index[q.index() * v + p.index()] = bi as u32;
            } else {
                if !seen_duplicate[key] {
                    seen_duplicate[key] = true;
                    report.doubly_covered_pairs += 1;
                }
                report.push(StsDefect::DuplicatePair {
                    p: p.0,
                    q: q.0,
                    first_block: index[key] as usize,
                    second_block: bi,
                });
            }
        }
    }
    for p in 0..v {
        for q in p + 1..v {
            if index[p * v + q] == NO_BLOCK {
                report.uncovered_pairs += 1;
                report.push(StsDefect::MissingPair {
                    p: p as u32,
                    q: q as u32,
                });
            }
        }
    }
    let expected_rep = (v - 1) / 2;
    for (p, &r) in replication.iter().enumerate() {
        if r != expected_rep {
            report.replication_deviations += 1;
            report.push(StsDefect::Replication {
                point: p as u32,
                found: r,
                expected: expected_rep,
            });
        }
    }
    (report, index)
}

/// A Steiner triple system: order, blocks in construction order, and the
/// pair index.
#[derive(Clone, PartialEq, Eq)]
pub struct TripleSystem {
    order: u32,
    blocks: Vec<Triple>,
    pair_index: Vec<u32>,
}

impl fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleSystem")
            .field("order", &self.order)
            .field("blocks", &self.blocks.len())
            .finish()
    }
}

impl TripleSystem {
    /// Validates and indexes `blocks`. Fails with the full [`StsReport`] on
    /// any defect; the report's first entry names the first offending pair
    /// or block.
    pub fn new(order: u32, blocks: Vec<Triple>) -> Result<Self> {
        let (report, pair_index) = validate_inner(order, &blocks);
        if !report.is_clean() {
            return Err(Error::InvalidDesign(Box::new(report)));
        }
        Ok(TripleSystem {
            order,
            blocks,
            pair_index,
        })
    }

    /// The unique STS(3).
    pub fn trivial() -> Self {
        let block = Triple::from_labels(0, 1, 2).expect("distinct");
        TripleSystem::new(3, vec![block]).expect("STS(3) is valid")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn blocks(&self) -> &[Triple] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> {
        (0..self.order).map(Point)
    }

    fn check_point(&self, p: Point) -> Result<()> {
        if p.0 >= self.order {
            Err(Error::PointOutOfRange {
                point: p,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Position in [`TripleSystem::blocks`] of the block through `p` and `q`.
    pub fn block_index(&self, p: Point, q: Point) -> Result<usize> {
        self.check_point(p)?;
        self.check_point(q)?;
        if p == q {
            return Err(Error::InvalidParameter(format!("pair ({p},{p}) is not a pair")));
        }
        let idx = self.pair_index[p.index() * self.order as usize + q.index()];
        debug_assert_ne!(idx, NO_BLOCK);
        Ok(idx as usize)
    }

    /// The unique block containing both `p` and `q`.
    pub fn block_of_pair(&self, p: Point, q: Point) -> Result<Triple> {
        Ok(self.blocks[self.block_index(p, q)?])
    }

    /// The hidden point recovered from two points of a block.
    pub fn third_point(&self, p: Point, q: Point) -> Result<Point> {
        let block = self.block_of_pair(p, q)?;
        Ok(block.third(p, q).expect("indexed block contains both points"))
    }

    /// Position of `t` in the block list, if it is a block of this system.
    pub fn position(&self, t: &Triple) -> Option<usize> {
        let [a, b, c] = t.points();
        if c.0 >= self.order {
            return None;
        }
        let idx = self.block_index(a, b).ok()?;
        (self.blocks[idx] == *t).then_some(idx)
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.position(t).is_some()
    }

    pub fn replication(&self) -> usize {
        (self.order as usize).saturating_sub(1) / 2
    }

    /// Applies the point permutation `perm` (`perm[old] = new`).
    pub fn relabeled(&self, perm: &[Point]) -> Result<Self> {
        if perm.len() != self.order as usize {
            return Err(Error::InvalidParameter(format!(
                "permutation has {} entries, order is {}",
                perm.len(),
                self.order
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.map(|p| perm[p.index()]))
            .collect::<Result<Vec<_>>>()?;
        TripleSystem::new(self.order, blocks)
    }
}

/// Builds a [`TripleSystem`]; see [`TripleSystem::new`].
pub fn make_triple_system(order: u32, blocks: Vec<Triple>) -> Result<TripleSystem> {
    TripleSystem::new(order, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano_blocks() -> Vec<Triple> {
        [
            [0, 1, 2],
            [0, 3, 4],
            [2, 4, 5],
            [0, 5, 6],
            [1, 4, 6],
            [1, 3, 5],
            [2, 3, 6],
        ]
        .iter()
        .map(|&[a, b, c]| Triple::from_labels(a, b, c).unwrap())
        .collect()
    }

    #[test]
    fn fano_listing_is_a_triple_system() {
        let ts = TripleSystem::new(7, fano_blocks()).unwrap();
        assert_eq!(ts.block_count(), 7);
        assert_eq!(ts.replication(), 3);
        assert_eq!(
            ts.block_of_pair(Point(2), Point(0)).unwrap(),
            Triple::from_labels(0, 1, 2).unwrap()
        );
        assert_eq!(ts.third_point(Point(2), Point(0)).unwrap(), Point(1));
    }

    #[test]
    fn trivial_system() {
        let ts = TripleSystem::trivial();
        assert_eq!(ts.block_count(), 1);
        assert_eq!(
            ts.block_of_pair(Point(0), Point(2)).unwrap(),
            Triple::from_labels(0, 1, 2).unwrap()
        );
        assert!(TripleSystem::new(1, vec![]).is_ok());
    }

    #[test]
    fn zero_order_rejected() {
        assert!(TripleSystem::new(0, vec![]).is_err());
    }

    #[test]
    fn duplicate_pair_is_named() {
        let mut blocks = fano_blocks();
        blocks[1] = Triple::from_labels(0, 1, 3).unwrap();
        let err = TripleSystem::new(7, blocks).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("pair {0,1} covered twice"), "{msg}");
    }

    #[test]
    fn deleted_block_report() {
        let mut blocks = fano_blocks();
        blocks.pop();
        let report = validate_sts(7, &blocks);
        assert!(!report.is_clean());
        assert_eq!(report.uncovered_pairs, 3);
        assert!(report
            .summary()
            .starts_with("3 uncovered pairs, block count 6 \u{2260} 7"));
    }

    #[test]
    fn out_of_range_label() {
        let mut blocks = fano_blocks();
        blocks[0] = Triple::from_labels(0, 1, 9).unwrap();
        let report = validate_sts(7, &blocks);
        assert!(matches!(
            report.defects[0],
            StsDefect::OutOfRange { block: 0, point: 9 }
        ));
        let ts = TripleSystem::new(7, fano_blocks()).unwrap();
        assert!(ts.block_of_pair(Point(0), Point(7)).is_err());
    }

    #[test]
    fn defect_list_is_capped() {
        let blocks: Vec<Triple> = (0..300)
            .map(|i| Triple::from_labels(0, 1, 2 + (i % 5)).unwrap())
            .collect();
        let report = validate_sts(7, &blocks);
        assert_eq!(report.defects.len(), MAX_REPORTED_DEFECTS);
        assert!(report.total_defects > MAX_REPORTED_DEFECTS);
    }

    #[test]
    fn degenerate_triple_rejected() {
        assert!(Triple::from_labels(1, 1, 2).is_err());
        assert_eq!(
            Triple::from_labels(5, 1, 3).unwrap().points(),
            [Point(1), Point(3), Point(5)]
        );
    }

    #[test]
    fn construction_one_labels() {
        let s = LabelScheme::DoublePlusOne { base: 7 };
        assert_eq!(s.label(Origin::Pair { coset: 0, residue: 3 }).unwrap(), Point(3));
        assert_eq!(s.label(Origin::Pair { coset: 1, residue: 3 }).unwrap(), Point(10));
        assert_eq!(s.label(Origin::Infinity(0)).unwrap(), Point(14));
        assert!(s.label(Origin::Pair { coset: 2, residue: 0 }).is_err());
    }

    #[test]
    fn construction_two_labels() {
        let s = LabelScheme::DoublePlusSeven { base: 15 };
        assert_eq!(s.label(Origin::Infinity(-3)).unwrap(), Point(30));
        assert_eq!(s.label(Origin::Infinity(3)).unwrap(), Point(36));
        assert!(s.label(Origin::Infinity(4)).is_err());
    }

    #[test]
    fn every_scheme_round_trips_exhaustively() {
        let schemes = [
            LabelScheme::Plain { order: 9 },
            LabelScheme::DoublePlusOne { base: 15 },
            LabelScheme::DoublePlusSeven { base: 19 },
            LabelScheme::Bose { m: 7 },
            LabelScheme::Skolem { t: 4 },
            LabelScheme::Product { u: 7, w: 9 },
            LabelScheme::Tabulated { m: 9, infinities: 7 },
        ];
        for scheme in schemes {
            let origins = scheme.origins();
            assert_eq!(origins.len(), scheme.order() as usize);
            for (label, origin) in origins.into_iter().enumerate() {
                assert_eq!(canonical_label(origin, scheme).unwrap(), Point(label as u32));
            }
        }
    }
}
