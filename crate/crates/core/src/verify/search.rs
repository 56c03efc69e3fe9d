//! Brute-force ocycle search for very small systems.

use crate::design::{Point, TripleSystem};
use crate::error::{Error, Result};
use crate::ocycle::{OrientedBlock, OverlapCycle};

pub const DEFAULT_SEARCH_LIMIT: u32 = 9;

struct Dfs<'a> {
    ts: &'a TripleSystem,
    through: Vec<Vec<usize>>,
    used: Vec<bool>,
    path: Vec<OrientedBlock>,
}

impl Dfs<'_> {
    fn extend(&mut self, start: Point) -> bool {
        let b = self.ts.block_count();
        if self.path.len() == b {
            return self.path.last().map(|blk| blk.tail) == Some(start);
        }
        let at = self.path.last().expect("seeded").tail;
        for i in 0..self.through[at.index()].len() {
            let idx = self.through[at.index()][i];
            if self.used[idx] {
                continue;
            }
            let others: Vec<Point> = self.ts.blocks()[idx]
                .points()
                .into_iter()
                .filter(|&p| p != at)
                .collect();
            for (hidden, tail) in [(others[0], others[1]), (others[1], others[0])] {
                self.used[idx] = true;
                self.path.push(OrientedBlock { head: at, hidden, tail });
                if self.extend(start) {
                    return true;
                }
                self.path.pop();
                self.used[idx] = false;
            }
        }
        false
    }
}

/// Finds an ocycle of `ts` by exhaustive search, or proves there is none.
/// The first block is fixed (any cycle can be rotated to start there) and
/// all six of its orientations are tried.
pub fn exhaustive_ocycle_search(ts: &TripleSystem, limit: u32) -> Result<Option<OverlapCycle>> {
    if ts.order() > limit {
        return Err(Error::SearchLimit {
            order: ts.order(),
            limit,
        });
    }
    if ts.block_count() == 0 {
        return Ok(None);
    }
    let mut through = vec![Vec::new(); ts.order() as usize];
    for (i, b) in ts.blocks().iter().enumerate() {
        for p in b.points() {
            through[p.index()].push(i);
        }
    }
    let mut dfs = Dfs {
        ts,
        through,
        used: vec![false; ts.block_count()],
        path: Vec::new(),
    };
    let [a, b, c] = ts.blocks()[0].points();
    dfs.used[0] = true;
    for (h, x, t) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
        dfs.path.clear();
        dfs.path.push(OrientedBlock {
            head: h,
            hidden: x,
            tail: t,
        });
        if dfs.extend(h) {
            return OverlapCycle::new(dfs.path).map(Some);
        }
    }
    Ok(None)
}
