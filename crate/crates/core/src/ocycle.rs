//! 1-overlap cycles over the blocks of a triple system.
//!
//! Every block of an ocycle is written `(head, hidden, tail)`; the tail of
//! each block is the head of the next. The point shared at such a junction
//! is an overlap point. Dropping the hidden points gives the compressed form,
//! which for a Steiner triple system is a rank-two universal cycle: each
//! consecutive pair of the compressed sequence names exactly one block.
//!
//! The splice / cut / reorient operations here are the whole toolkit the
//! cycle builders use to assemble a cycle out of partial cycles and paths.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::design::{Point, Triple, TripleSystem, MAX_REPORTED_DEFECTS};
use crate::error::{Error, Result};

/// A block written with its two overlap points and its hidden point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedBlock {
    pub head: Point,
    pub hidden: Point,
    pub tail: Point,
}

impl OrientedBlock {
    pub fn new(head: Point, hidden: Point, tail: Point) -> Result<Self> {
        if head == hidden || hidden == tail || head == tail {
            return Err(Error::DegenerateBlock([head.0, hidden.0, tail.0]));
        }
        Ok(OrientedBlock { head, hidden, tail })
    }

    pub fn from_labels(head: u32, hidden: u32, tail: u32) -> Result<Self> {
        OrientedBlock::new(Point(head), Point(hidden), Point(tail))
    }

    pub fn triple(&self) -> Triple {
        Triple::new(self.head, self.hidden, self.tail).expect("oriented block has distinct points")
    }

    /// The same block read backwards, `(tail, hidden, head)`.
    pub fn reversed(&self) -> Self {
        OrientedBlock {
            head: self.tail,
            hidden: self.hidden,
            tail: self.head,
        }
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        OrientedBlock::new(f(self.head), f(self.hidden), f(self.tail))
    }
}

impl fmt::Display for OrientedBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.head, self.hidden, self.tail)
    }
}

fn check_chain(blocks: &[OrientedBlock], cyclic: bool) -> Result<()> {
    let n = blocks.len();
    let junctions = if cyclic { n } else { n.saturating_sub(1) };
    for i in 0..junctions {
        let next = &blocks[(i + 1) % n];
        if blocks[i].tail != next.head {
            return Err(Error::BrokenChain {
                position: i,
                tail: blocks[i].tail,
                head: next.head,
            });
        }
    }
    Ok(())
}

fn check_distinct(blocks: &[OrientedBlock]) -> Result<()> {
    let mut seen = HashSet::with_capacity(blocks.len());
    for b in blocks {
        if !seen.insert(b.triple()) {
            return Err(Error::SharedBlock(b.triple().to_string()));
        }
    }
    Ok(())
}

/// Cyclic sequence of oriented blocks with `tail(i) = head(i+1)`, indices
/// taken modulo the length, and no block repeated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapCycle {
    blocks: Vec<OrientedBlock>,
}

impl OverlapCycle {
    pub fn new(blocks: Vec<OrientedBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Empty);
        }
        check_chain(&blocks, true)?;
        check_distinct(&blocks)?;
        Ok(OverlapCycle { blocks })
    }

    pub fn blocks(&self) -> &[OrientedBlock] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<OrientedBlock> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.blocks.iter().map(OrientedBlock::triple)
    }

    /// Junction points with their multiplicities. In a cycle every block
    /// starts at a junction, so these are the heads.
    pub fn junction_points(&self) -> BTreeMap<Point, usize> {
        let mut out = BTreeMap::new();
        for b in &self.blocks {
            *out.entry(b.head).or_insert(0) += 1;
        }
        out
    }

    pub fn has_junction(&self, p: Point) -> bool {
        self.blocks.iter().any(|b| b.head == p)
    }

    /// Position of the first block whose head is `p`.
    pub fn first_junction_at(&self, p: Point) -> Option<usize> {
        self.blocks.iter().position(|b| b.head == p)
    }

    /// Position of the block equal to `block`, orientation included.
    pub fn position_of(&self, block: &OrientedBlock) -> Option<usize> {
        self.blocks.iter().position(|b| b == block)
    }

    /// The same cycle starting at block `start`.
    pub fn rotated(&self, start: usize) -> Self {
        let n = self.blocks.len();
        let mut blocks = Vec::with_capacity(n);
        blocks.extend_from_slice(&self.blocks[start % n..]);
        blocks.extend_from_slice(&self.blocks[..start % n]);
        OverlapCycle { blocks }
    }

    /// The cycle read backwards; each `(h, x, t)` becomes `(t, x, h)`.
    pub fn reversed(&self) -> Self {
        OverlapCycle {
            blocks: self.blocks.iter().rev().map(OrientedBlock::reversed).collect(),
        }
    }

    /// Rotation whose compressed form is lexicographically least.
    pub fn canonical_rotation(&self) -> Self {
        let heads: Vec<Point> = self.blocks.iter().map(|b| b.head).collect();
        self.rotated(least_rotation(&heads))
    }

    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        let blocks = self.blocks.iter().map(|b| b.map(&f)).collect::<Result<Vec<_>>>()?;
        OverlapCycle::new(blocks)
    }
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut failure = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = failure[j - k - 1];
        while i != usize::MAX && *sj != s[(k + i + 1) % n] {
            if *sj < s[(k + i + 1) % n] {
                k = j - i - 1;
            }
            i = failure[i];
        }
        if i == usize::MAX && *sj != s[(k + i.wrapping_add(1)) % n] {
            if *sj < s[k % n] {
                k = j;
            }
            failure[j - k] = usize::MAX;
        } else {
            failure[j - k] = i.wrapping_add(1);
        }
    }
    k % n
}

/// Open sequence of oriented blocks with `tail(i) = head(i+1)` for every
/// interior junction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapPath {
    blocks: Vec<OrientedBlock>,
}

/// Which end of a path to reorient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnd {
    First,
    Last,
}

impl OverlapPath {
    pub fn new(blocks: Vec<OrientedBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Empty);
        }
        check_chain(&blocks, false)?;
        Ok(OverlapPath { blocks })
    }

    pub fn blocks(&self) -> &[OrientedBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Head of the first block.
    pub fn start(&self) -> Point {
        self.blocks[0].head
    }

    /// Tail of the last block.
    pub fn end(&self) -> Point {
        self.blocks[self.blocks.len() - 1].tail
    }

    /// Splits into `[0, at)` and `[at, len)`.
    pub fn split_at(self, at: usize) -> Result<(OverlapPath, OverlapPath)> {
        if at == 0 || at >= self.blocks.len() {
            return Err(Error::IndexOutOfRange {
                index: at,
                len: self.blocks.len(),
            });
        }
        let mut left = self.blocks;
        let right = left.split_off(at);
        Ok((OverlapPath { blocks: left }, OverlapPath { blocks: right }))
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn join(mut self, other: OverlapPath) -> Result<OverlapPath> {
        if self.end() != other.start() {
            return Err(Error::BrokenChain {
                position: self.blocks.len() - 1,
                tail: self.end(),
                head: other.start(),
            });
        }
        self.blocks.extend(other.blocks);
        Ok(self)
    }

    /// Closes the path into a cycle; needs `end() == start()`.
    pub fn close(self) -> Result<OverlapCycle> {
        OverlapCycle::new(self.blocks)
    }

    pub fn reorient_end(self, which: PathEnd) -> Result<OverlapPath> {
        reorient_end(self, which)
    }
}

/// Swaps the terminal overlap point of one end of a path with that block's
/// hidden point. For the last block `(h, x, t)` becomes `(h, t, x)`; for the
/// first, `(h, x, t)` becomes `(x, h, t)`. Applying it twice is the identity.
pub fn reorient_end(path: OverlapPath, which: PathEnd) -> Result<OverlapPath> {
    let mut blocks = path.blocks;
    if blocks.is_empty() {
        return Err(Error::Empty);
    }
    match which {
        PathEnd::First => {
            let b = &mut blocks[0];
            std::mem::swap(&mut b.head, &mut b.hidden);
        }
        PathEnd::Last => {
            let last = blocks.len() - 1;
            let b = &mut blocks[last];
            std::mem::swap(&mut b.tail, &mut b.hidden);
        }
    }
    Ok(OverlapPath { blocks })
}

/// Opens `cycle` between block `i` and block `i + 1`. The path begins at
/// block `i + 1` and ends at block `i`.
pub fn cut_between(cycle: &OverlapCycle, i: usize) -> Result<OverlapPath> {
    let n = cycle.len();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    Ok(OverlapPath {
        blocks: cycle.rotated(i + 1).blocks,
    })
}

/// Joins two block-disjoint cycles at a junction point they share.
///
/// Each cycle is rotated to its first block headed by `p` and the two are
/// concatenated, so the only junctions that change partners are the two at
/// `p` used for the join.
pub fn splice_at(c1: &OverlapCycle, c2: &OverlapCycle, p: Point) -> Result<OverlapCycle> {
    let a = c1.first_junction_at(p).ok_or(Error::NotAJunction {
        point: p,
        which: "the first cycle",
    })?;
    let b = c2.first_junction_at(p).ok_or(Error::NotAJunction {
        point: p,
        which: "the second cycle",
    })?;
    let left: HashSet<Triple> = c1.triples().collect();
    if let Some(shared) = c2.triples().find(|t| left.contains(t)) {
        return Err(Error::SharedBlock(shared.to_string()));
    }
    Ok(splice_rotated(c1, a, c2, b))
}

fn splice_rotated(c1: &OverlapCycle, a: usize, c2: &OverlapCycle, b: usize) -> OverlapCycle {
    let mut blocks = Vec::with_capacity(c1.len() + c2.len());
    blocks.extend_from_slice(&c1.blocks[a..]);
    blocks.extend_from_slice(&c1.blocks[..a]);
    blocks.extend_from_slice(&c2.blocks[b..]);
    blocks.extend_from_slice(&c2.blocks[..b]);
    OverlapCycle { blocks }
}

/// Splices pairwise block-disjoint cycles together wherever they share a
/// junction point, until no two remaining cycles share one.
///
/// Junction points are visited in ascending label order; at each point the
/// live cycles having it as a junction are spliced, in creation order, into
/// the earliest of them. Because splicing keeps every junction of both
/// inputs, one pass reaches the fixed point. Survivors are returned in
/// creation order.
pub fn merge_all(cycles: Vec<OverlapCycle>) -> Vec<OverlapCycle> {
    let mut live: Vec<Option<OverlapCycle>> = cycles.into_iter().map(Some).collect();
    let mut owners: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for (id, c) in live.iter().enumerate() {
        let c = c.as_ref().expect("fresh");
        let points: BTreeSet<Point> = c.blocks.iter().map(|b| b.head).collect();
        for p in points {
            owners.entry(p).or_default().push(id);
        }
    }
    // Each original cycle forwards to the live cycle that absorbed it.
    let mut absorbed_into: Vec<usize> = (0..live.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (p, ids) in owners {
        let mut roots: Vec<usize> = ids.iter().map(|&id| find(&mut absorbed_into, id)).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() < 2 {
            continue;
        }
        let target = roots[0];
        for &other in &roots[1..] {
            let c1 = live[target].take().expect("live target");
            let c2 = live[other].take().expect("live source");
            let a = c1.first_junction_at(p).expect("owner has junction");
            let b = c2.first_junction_at(p).expect("owner has junction");
            live[target] = Some(splice_rotated(&c1, a, &c2, b));
            absorbed_into[other] = target;
        }
    }
    live.into_iter().flatten().collect()
}

/// Compressed form of an ocycle: the head of every block, one point per
/// block, no closing repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompressedCycle {
    points: Vec<Point>,
}

impl CompressedCycle {
    pub fn new(points: Vec<Point>) -> Self {
        CompressedCycle { points }
    }

    pub fn from_labels(labels: &[u32]) -> Self {
        CompressedCycle {
            points: labels.iter().copied().map(Point).collect(),
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn labels(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.0).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn rotated(&self, start: usize) -> Self {
        let n = self.points.len();
        let mut points = self.points[start % n..].to_vec();
        points.extend_from_slice(&self.points[..start % n]);
        CompressedCycle { points }
    }

    pub fn canonical_rotation(&self) -> Self {
        self.rotated(least_rotation(&self.points))
    }

    /// True if `other` is a rotation of `self`.
    pub fn is_rotation_of(&self, other: &CompressedCycle) -> bool {
        self.len() == other.len() && (self.is_empty() || self.canonical_rotation() == other.canonical_rotation())
    }
}

/// Displays with the closing repeat, e.g. `(2,0,4,5,6,1,3,2)`.
impl fmt::Display for CompressedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for p in &self.points {
            write!(f, "{p},")?;
        }
        match self.points.first() {
            Some(p) => write!(f, "{p})"),
            None => f.write_str(")"),
        }
    }
}

pub fn compress(cycle: &OverlapCycle) -> CompressedCycle {
    CompressedCycle {
        points: cycle.blocks.iter().map(|b| b.head).collect(),
    }
}

/// Recovers the full cycle, using `ts` as the lookup table for hidden
/// points. Fails on a repeated consecutive point or when the result is not
/// a valid ocycle of `ts`.
pub fn decompress(ts: &TripleSystem, cc: &CompressedCycle) -> Result<OverlapCycle> {
    let n = cc.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut blocks = Vec::with_capacity(n);
    for i in 0..n {
        let p = cc.points[i];
        let q = cc.points[(i + 1) % n];
        if p == q {
            return Err(Error::RepeatedPoint { point: p, position: i });
        }
        let hidden = ts.third_point(p, q)?;
        blocks.push(OrientedBlock {
            head: p,
            hidden,
            tail: q,
        });
    }
    let report = validate_ocycle(ts, &blocks);
    if !report.is_clean() {
        return Err(Error::InvalidCycle(Box::new(report)));
    }
    Ok(OverlapCycle { blocks })
}

/// One problem found by [`validate_ocycle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OcycleDefect {
    BrokenJunction { position: usize, tail: u32, head: u32 },
    DegenerateBlock { position: usize },
    UnknownBlock { position: usize, block: [u32; 3] },
    RepeatedBlock { position: usize, first_position: usize },
    Coverage { covered: usize, total: usize },
}

impl fmt::Display for OcycleDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OcycleDefect::BrokenJunction { position, tail, head } => write!(
                f,
                "junction {position}: tail {tail} of block {position} != head {head} of the next block"
            ),
            OcycleDefect::DegenerateBlock { position } => {
                write!(f, "block {position} repeats a point")
            }
            OcycleDefect::UnknownBlock { position, block } => write!(
                f,
                "block {position} {{{},{},{}}} is not a block of the system",
                block[0], block[1], block[2]
            ),
            OcycleDefect::RepeatedBlock {
                position,
                first_position,
            } => write!(f, "block {position} repeats block {first_position}"),
            OcycleDefect::Coverage { covered, total } => {
                write!(f, "coverage: {covered} of {total} blocks")
            }
        }
    }
}

/// Outcome of [`validate_ocycle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OcycleReport {
    pub order: u32,
    pub length: usize,
    pub expected_blocks: usize,
    pub covered_blocks: usize,
    pub chaining_violations: usize,
    pub unknown_blocks: usize,
    pub repeated_blocks: usize,
    pub total_defects: usize,
    pub defects: Vec<OcycleDefect>,
}

impl OcycleReport {
    pub fn is_clean(&self) -> bool {
        self.total_defects == 0
    }

    fn push(&mut self, defect: OcycleDefect) {
        self.total_defects += 1;
        if self.defects.len() < MAX_REPORTED_DEFECTS {
            self.defects.push(defect);
        }
    }

    pub fn summary(&self) -> String {
        if self.is_clean() {
            return format!("clean: {} blocks", self.length);
        }
        let mut parts = Vec::new();
        if self.chaining_violations > 0 {
            parts.push(format!("chaining violation at {} junctions", self.chaining_violations));
        }
        if self.unknown_blocks > 0 {
            parts.push(format!("{} unknown blocks", self.unknown_blocks));
        }
        if self.repeated_blocks > 0 {
            parts.push(format!("{} repeated blocks", self.repeated_blocks));
        }
        if self.covered_blocks != self.expected_blocks {
            parts.push(format!(
                "coverage: {} of {} blocks",
                self.covered_blocks, self.expected_blocks
            ));
        }
        parts.join(", ")
    }
}

impl fmt::Display for OcycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.defects.first() {
            Some(first) => write!(f, "{first}; {}", self.summary()),
            None => f.write_str(&self.summary()),
        }
    }
}

/// Checks chaining at every junction, that every block belongs to `ts`, and
/// that every block of `ts` appears exactly once. Never fails.
pub fn validate_ocycle(ts: &TripleSystem, blocks: &[OrientedBlock]) -> OcycleReport {
    let mut report = OcycleReport {
        order: ts.order(),
        length: blocks.len(),
        expected_blocks: ts.block_count(),
        covered_blocks: 0,
        chaining_violations: 0,
        unknown_blocks: 0,
        repeated_blocks: 0,
        total_defects: 0,
        defects: Vec::new(),
    };
    let n = blocks.len();
    for i in 0..n {
        let next = &blocks[(i + 1) % n];
        if blocks[i].tail != next.head {
            report.chaining_violations += 1;
            report.push(OcycleDefect::BrokenJunction {
                position: i,
                tail: blocks[i].tail.0,
                head: next.head.0,
            });
        }
    }
    let mut first_seen: HashMap<usize, usize> = HashMap::with_capacity(n);
    for (i, b) in blocks.iter().enumerate() {
        let triple = match Triple::new(b.head, b.hidden, b.tail) {
            Ok(t) => t,
            Err(_) => {
                report.unknown_blocks += 1;
                report.push(OcycleDefect::DegenerateBlock { position: i });
                continue;
            }
        };
        match ts.position(&triple) {
            None => {
                report.unknown_blocks += 1;
                let [x, y, z] = triple.points();
                report.push(OcycleDefect::UnknownBlock {
                    position: i,
                    block: [x.0, y.0, z.0],
                });
            }
            Some(idx) => {
                if let Some(&first) = first_seen.get(&idx) {
                    report.repeated_blocks += 1;
                    report.push(OcycleDefect::RepeatedBlock {
                        position: i,
                        first_position: first,
                    });
                } else {
                    first_seen.insert(idx, i);
                }
            }
        }
    }
    report.covered_blocks = first_seen.len();
    if report.covered_blocks != report.expected_blocks {
        report.push(OcycleDefect::Coverage {
            covered: report.covered_blocks,
            total: report.expected_blocks,
        });
    }
    report
}
