//! Automorphism counting for triple systems.
//!
//! A permutation is an automorphism iff it commutes with the "third point"
//! map, so once the images of two points are fixed the image of their third
//! point is forced. The search assigns images one free point at a time and
//! propagates that closure rule; in an STS a handful of free choices force
//! everything.
//!
//! Candidates are pruned by a pair invariant: for a pair `{x, y}` with third
//! point `z`, the maps `w -> third(x, w)` and `w -> third(y, w)` are two
//! fixed-point-free involutions on the remaining points, and the lengths of
//! the cycles they generate together form a multiset any automorphism must
//! preserve. Points are then classified by colour refinement over the pair
//! invariants.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use crate::design::{Point, TripleSystem};

/// Default node budget for the search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Outcome of [`automorphism_order`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismReport {
    /// Exact group order, absent when the budget ran out first.
    pub order: Option<u64>,
    /// The first non-identity automorphism found, as `image[point]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
    pub nodes: u64,
    pub millis: u64,
    pub budget_exhausted: bool,
}

/// Verdict of [`is_af`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AfVerdict {
    Af,
    NotAf,
    Inconclusive,
}

impl std::fmt::Display for AfVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AfVerdict::Af => "AF",
            AfVerdict::NotAf => "not AF",
            AfVerdict::Inconclusive => "inconclusive",
        })
    }
}

struct Tables {
    v: usize,
    /// `third[x * v + y]`, or `u32::MAX` on the diagonal.
    third: Vec<u32>,
    /// Interned pair invariant, symmetric, `u32::MAX` on the diagonal.
    pair: Vec<u32>,
    colour: Vec<u32>,
}

fn tables(ts: &TripleSystem) -> Tables {
    let v = ts.order() as usize;
    let mut third = vec![u32::MAX; v * v];
    for b in ts.blocks() {
        let [a, c, d] = b.points();
        for (x, y, z) in [(a, c, d), (a, d, c), (c, d, a)] {
            third[x.index() * v + y.index()] = z.0;
            third[y.index() * v + x.index()] = z.0;
        }
    }
    let mut intern: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut pair = vec![u32::MAX; v * v];
    let mut seen = vec![false; v];
    for x in 0..v {
        for y in x + 1..v {
            let z = third[x * v + y] as usize;
            seen.iter_mut().for_each(|s| *s = false);
            seen[x] = true;
            seen[y] = true;
            seen[z] = true;
            let mut lengths = Vec::new();
            for start in 0..v {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut w = start;
                let mut use_x = true;
                loop {
                    seen[w] = true;
                    len += 1;
                    let from = if use_x { x } else { y };
                    w = third[from * v + w] as usize;
                    use_x = !use_x;
                    if w == start {
                        break;
                    }
                }
                lengths.push(len);
            }
            lengths.sort_unstable();
            let next = intern.len() as u32;
            let id = *intern.entry(lengths).or_insert(next);
            pair[x * v + y] = id;
            pair[y * v + x] = id;
        }
    }
    let colour = refine(v, &pair);
    Tables { v, third, pair, colour }
}

/// Colour refinement: a point's colour is its previous colour together with
/// the multiset of (pair invariant, colour) over all other points.
fn refine(v: usize, pair: &[u32]) -> Vec<u32> {
    let mut colour = vec![0u32; v];
    let mut classes = 1;
    loop {
        let mut intern: HashMap<(u32, Vec<(u32, u32)>), u32> = HashMap::new();
        let mut keys: Vec<(u32, Vec<(u32, u32)>)> = (0..v)
            .map(|x| {
                let mut sig: Vec<(u32, u32)> = (0..v)
                    .filter(|&y| y != x)
                    .map(|y| (pair[x * v + y], colour[y]))
                    .collect();
                sig.sort_unstable();
                (colour[x], sig)
            })
            .collect();
        // Intern in sorted key order so colours do not depend on labels.
        let mut sorted: Vec<_> = keys.clone();
        sorted.sort();
        sorted.dedup();
        for (i, k) in sorted.into_iter().enumerate() {
            intern.insert(k, i as u32);
        }
        let next: Vec<u32> = keys.drain(..).map(|k| intern[&k]).collect();
        let count = intern.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

struct Search<'a> {
    t: &'a Tables,
    image: Vec<u32>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    nodes: u64,
    budget: u64,
    count: u64,
    witness: Option<Vec<u32>>,
    stop_at_witness: bool,
    exhausted: bool,
}

const FREE: u32 = u32::MAX;

impl Search<'_> {
    /// Assigns `p -> q` and everything it forces. On failure the caller
    /// restores the assignment stack to `mark`.
    fn assign(&mut self, p: usize, q: usize) -> bool {
        let v = self.t.v;
        let mut queue = vec![(p, q)];
        while let Some((p, q)) = queue.pop() {
            if self.image[p] != FREE {
                if self.image[p] as usize != q {
                    return false;
                }
                continue;
            }
            if self.used[q] || self.t.colour[p] != self.t.colour[q] {
                return false;
            }
            for &b in &self.assigned {
                let bq = self.image[b] as usize;
                if self.t.pair[p * v + b] != self.t.pair[q * v + bq] {
                    return false;
                }
            }
            self.image[p] = q as u32;
            self.used[q] = true;
            let before = self.assigned.len();
            self.assigned.push(p);
            for i in 0..before {
                let b = self.assigned[i];
                let r = self.t.third[p * v + b] as usize;
                let s = self.t.third[q * v + self.image[b] as usize] as usize;
                queue.push((r, s));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let p = self.assigned.pop().expect("nonempty");
            self.used[self.image[p] as usize] = false;
            self.image[p] = FREE;
        }
    }

    fn done(&self) -> bool {
        self.exhausted || (self.stop_at_witness && self.witness.is_some())
    }

    fn run(&mut self) {
        let v = self.t.v;
        let Some(p) = (0..v).find(|&p| self.image[p] == FREE) else {
            self.count += 1;
            if self.witness.is_none() && self.image.iter().enumerate().any(|(i, &q)| i as u32 != q) {
                self.witness = Some(self.image.clone());
            }
            return;
        };
        for q in 0..v {
            if self.done() {
                return;
            }
            if self.used[q] || self.t.colour[p] != self.t.colour[q] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            let mark = self.assigned.len();
            if self.assign(p, q) {
                self.run();
            }
            self.undo(mark);
        }
    }
}

fn search(ts: &TripleSystem, budget: u64, stop_at_witness: bool) -> AutomorphismReport {
    let start = Instant::now();
    let t = tables(ts);
    let v = t.v;
    let mut s = Search {
        t: &t,
        image: vec![FREE; v],
        used: vec![false; v],
        assigned: Vec::with_capacity(v),
        nodes: 0,
        budget,
        count: 0,
        witness: None,
        stop_at_witness,
        exhausted: false,
    };
    s.run();
    let complete = !s.exhausted && !(stop_at_witness && s.witness.is_some());
    AutomorphismReport {
        order: complete.then_some(s.count),
        witness: s.witness.take(),
        nodes: s.nodes,
        millis: start.elapsed().as_millis() as u64,
        budget_exhausted: s.exhausted,
    }
}

/// Order of the automorphism group of `ts`, searching at most `budget`
/// nodes.
pub fn automorphism_order(ts: &TripleSystem, budget: u64) -> AutomorphismReport {
    search(ts, budget, false)
}

/// Whether `ts` is automorphism free; stops at the first non-identity
/// automorphism.
pub fn is_af(ts: &TripleSystem, budget: u64) -> (AfVerdict, AutomorphismReport) {
    let report = search(ts, budget, true);
    let verdict = if report.witness.is_some() {
        AfVerdict::NotAf
    } else if report.order == Some(1) {
        AfVerdict::Af
    } else {
        AfVerdict::Inconclusive
    };
    (verdict, report)
}

/// True if `perm` (`perm[p]` is the image of `p`) maps blocks to blocks.
pub fn is_automorphism(ts: &TripleSystem, perm: &[u32]) -> bool {
    perm.len() == ts.order() as usize
        && ts.blocks().iter().all(|b| {
            b.map(|p| Point(perm[p.index()]))
                .map(|img| ts.contains(&img))
                .unwrap_or(false)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bose, skolem};

    #[test]
    fn fano_group() {
        let r = automorphism_order(&skolem(1).unwrap(), DEFAULT_BUDGET);
        assert_eq!(r.order, Some(168));
        let ts = skolem(1).unwrap();
        assert!(is_automorphism(&ts, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn affine_plane_group() {
        assert_eq!(automorphism_order(&bose(3).unwrap(), DEFAULT_BUDGET).order, Some(432));
        let (verdict, _) = is_af(&bose(3).unwrap(), DEFAULT_BUDGET);
        assert_eq!(verdict, AfVerdict::NotAf);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let r = automorphism_order(&bose(3).unwrap(), 5);
        assert!(r.budget_exhausted);
        assert_eq!(r.order, None);
    }

    #[test]
    fn trivial_system() {
        assert_eq!(automorphism_order(&TripleSystem::trivial(), 1000).order, Some(6));
    }
}
