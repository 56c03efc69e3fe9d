//! The nine tabulated base cases and their errata.
//!
//! Listings ship verbatim under `data/base_cases/`; corrections live in
//! `data/errata.json` and are applied cell by cell before parsing. An
//! erratum whose `original` text does not match the listing is an error, so
//! a correction can never silently drift away from what it corrects.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::listing::parse_with_corrections;
use crate::design::{Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::ocycle::{validate_ocycle, OrientedBlock, OverlapCycle};

pub const BASE_CASE_ORDERS: [u32; 9] = [7, 9, 13, 15, 19, 21, 25, 27, 33];

const EMBEDDED: [(u32, &str); 9] = [
    (7, include_str!("../../data/base_cases/v07.txt")),
    (9, include_str!("../../data/base_cases/v09.txt")),
    (13, include_str!("../../data/base_cases/v13.txt")),
    (15, include_str!("../../data/base_cases/v15.txt")),
    (19, include_str!("../../data/base_cases/v19.txt")),
    (21, include_str!("../../data/base_cases/v21.txt")),
    (25, include_str!("../../data/base_cases/v25.txt")),
    (27, include_str!("../../data/base_cases/v27.txt")),
    (33, include_str!("../../data/base_cases/v33.txt")),
];

const EMBEDDED_ERRATA: &str = include_str!("../../data/errata.json");

/// One documented correction to a tabulated listing or displayed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataEntry {
    pub v: u32,
    /// `col C row R` for a table cell, `compressed position N` for the
    /// N-th (1-based) point of a displayed compressed form.
    pub location: String,
    pub original: String,
    pub corrected: String,
    pub reason: String,
}

enum Location {
    Cell { col: usize, row: usize },
    Compressed { position: usize },
}

impl ErrataEntry {
    fn parse_location(&self) -> Result<Location> {
        let bad = || Error::Errata(format!("v={}: unrecognised location {:?}", self.v, self.location));
        let words: Vec<&str> = self.location.split_whitespace().collect();
        match words.as_slice() {
            ["col", c, "row", r] => Ok(Location::Cell {
                col: c.parse().map_err(|_| bad())?,
                row: r.parse().map_err(|_| bad())?,
            }),
            ["compressed", "position", n] => Ok(Location::Compressed {
                position: n.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

/// A parsed and certified base case.
#[derive(Debug, Clone)]
pub struct BaseCaseAsset {
    pub v: u32,
    pub raw_text: String,
    pub parsed_blocks: Vec<OrientedBlock>,
    pub parsed_sts: TripleSystem,
    /// Corrections applied to this order, including ones that concern only
    /// a displayed form rather than the listing.
    pub errata: Vec<ErrataEntry>,
}

impl BaseCaseAsset {
    fn certify(v: u32, raw_text: String, errata: Vec<ErrataEntry>) -> Result<Self> {
        let mut corrections = Vec::new();
        for e in &errata {
            if let Location::Cell { col, row } = e.parse_location()? {
                corrections.push((col, row, e.original.as_str(), e.corrected.as_str()));
            }
        }
        let parsed_blocks = parse_with_corrections(&raw_text, v, &corrections)?;
        let triples: Vec<Triple> = parsed_blocks.iter().map(OrientedBlock::triple).collect();
        let parsed_sts = TripleSystem::new(v, triples)
            .map_err(|e| Error::Listing(format!("v={v} listing is not a triple system: {e}")))?;
        let report = validate_ocycle(&parsed_sts, &parsed_blocks);
        if !report.is_clean() {
            return Err(Error::Listing(format!("v={v} listing is not an ocycle: {report}")));
        }
        Ok(BaseCaseAsset {
            v,
            raw_text,
            parsed_blocks,
            parsed_sts,
            errata,
        })
    }

    pub fn cycle(&self) -> Result<OverlapCycle> {
        OverlapCycle::new(self.parsed_blocks.clone())
    }
}

/// A set of base-case listings plus errata, either the embedded copy or a
/// directory laid out like `data/`.
#[derive(Debug, Clone)]
pub struct BaseCases {
    listings: BTreeMap<u32, String>,
    errata: Vec<ErrataEntry>,
}

impl BaseCases {
    pub fn embedded() -> Self {
        BaseCases {
            listings: EMBEDDED.iter().map(|&(v, t)| (v, t.to_string())).collect(),
            errata: serde_json::from_str(EMBEDDED_ERRATA).expect("embedded errata parse"),
        }
    }

    /// Reads `base_cases/vNN.txt` and `errata.json` under `dir`. Missing
    /// listings are reported when requested, not here.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let errata_path = dir.join("errata.json");
        let errata = if errata_path.exists() {
            serde_json::from_str(&std::fs::read_to_string(&errata_path)?)?
        } else {
            Vec::new()
        };
        let mut listings = BTreeMap::new();
        for v in BASE_CASE_ORDERS {
            let path = dir.join("base_cases").join(format!("v{v:02}.txt"));
            if path.exists() {
                listings.insert(v, std::fs::read_to_string(path)?);
            }
        }
        Ok(BaseCases { listings, errata })
    }

    /// The embedded set, unless `OCYCLE_DATA_DIR` names another directory.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os("OCYCLE_DATA_DIR") {
            Some(dir) if !dir.is_empty() => BaseCases::from_dir(Path::new(&dir)),
            _ => Ok(BaseCases::embedded()),
        }
    }

    pub fn errata(&self) -> &[ErrataEntry] {
        &self.errata
    }

    pub fn errata_for(&self, v: u32) -> Vec<ErrataEntry> {
        self.errata.iter().filter(|e| e.v == v).cloned().collect()
    }

    pub fn get(&self, v: u32) -> Result<BaseCaseAsset> {
        if !BASE_CASE_ORDERS.contains(&v) {
            return Err(Error::UnsupportedBaseCase(v));
        }
        let text = self
            .listings
            .get(&v)
            .ok_or_else(|| Error::Listing(format!("no listing for v={v} in the data directory")))?;
        BaseCaseAsset::certify(v, text.clone(), self.errata_for(v))
    }
}

/// Base case `v` from the embedded data.
pub fn base_case(v: u32) -> Result<BaseCaseAsset> {
    BaseCases::embedded().get(v)
}

/// Applies the `compressed position` errata for order `v` to a displayed
/// compressed form such as `(0,2,5,4)`. The closing repeat, if present, is
/// kept in step with the first point.
pub fn corrected_compressed_display(v: u32, display: &str, errata: &[ErrataEntry]) -> Result<String> {
    let inner = display.trim().trim_start_matches('(').trim_end_matches(')');
    let mut points: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
    for e in errata.iter().filter(|e| e.v == v) {
        if let Location::Compressed { position } = e.parse_location()? {
            let slot = position
                .checked_sub(1)
                .and_then(|i| points.get_mut(i))
                .ok_or_else(|| Error::Errata(format!("v={v}: no position {position}")))?;
            if *slot != e.original {
                return Err(Error::Errata(format!(
                    "v={v} position {position}: expected {:?}, found {slot:?}",
                    e.original
                )));
            }
            *slot = e.corrected.clone();
        }
    }
    Ok(format!("({})", points.join(",")))
}
