//! Reader for the tabulated base-case ocycles.
//!
//! Three notations occur. Flat listings are a comma-separated run of the
//! whole full form, overlap points at even positions. Tables hold one block
//! per cell, cells separated by `|`, read column by column; a cell is either
//! three hex digits, an `a,b,c` integer triple, or three tokens in pair
//! notation (`ci`, `c(ii)`, `∞_k`, bare `∞`).

use crate::design::{LabelScheme, Origin, Point};
use crate::error::{Error, Result};
use crate::ocycle::OrientedBlock;

/// One table cell with its 1-based column and row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListingCell {
    pub col: usize,
    pub row: usize,
    pub text: String,
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Table cells in reading order: down each column, then the next column.
/// Short rows leave their trailing cells empty.
pub fn listing_cells(text: &str) -> Vec<ListingCell> {
    let rows: Vec<Vec<&str>> = content_lines(text)
        .map(|l| l.split('|').map(str::trim).collect())
        .collect();
    let ncol = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut cells = Vec::new();
    for c in 0..ncol {
        for (r, row) in rows.iter().enumerate() {
            if let Some(cell) = row.get(c).filter(|s| !s.is_empty()) {
                cells.push(ListingCell {
                    col: c + 1,
                    row: r + 1,
                    text: cell.to_string(),
                });
            }
        }
    }
    cells
}

fn is_table(text: &str) -> bool {
    content_lines(text).any(|l| l.contains('|'))
}

fn block(labels: [u32; 3], v: u32, context: &str) -> Result<OrientedBlock> {
    if let Some(&bad) = labels.iter().find(|&&p| p >= v) {
        return Err(Error::Listing(format!("{context}: point {bad} is outside 0..{v}")));
    }
    OrientedBlock::from_labels(labels[0], labels[1], labels[2])
        .map_err(|_| Error::Listing(format!("{context}: block repeats a point")))
}

fn parse_flat(text: &str, v: u32) -> Result<Vec<OrientedBlock>> {
    let mut seq: Vec<u32> = Vec::new();
    for (n, line) in content_lines(text).enumerate() {
        let mut values = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Listing(format!("line {}: bad token {:?}", n + 1, t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        // A continuation line restates the point it continues from.
        if let (Some(&last), Some(&first)) = (seq.last(), values.first()) {
            if last != first {
                return Err(Error::Listing(format!(
                    "line {} starts at {first} but the previous line ends at {last}",
                    n + 1
                )));
            }
            values.remove(0);
        }
        seq.extend(values);
    }
    if seq.len() < 3 || seq.len() % 2 == 0 {
        return Err(Error::Listing(format!(
            "full form needs an odd number of at least 3 points, found {}",
            seq.len()
        )));
    }
    (0..(seq.len() - 1) / 2)
        .map(|k| block([seq[2 * k], seq[2 * k + 1], seq[2 * k + 2]], v, &format!("block {k}")))
        .collect()
}

fn parse_pair_token(tok: &str, scheme: &LabelScheme) -> Result<Point> {
    let bad = || Error::Listing(format!("bad point token {tok:?}"));
    let origin = if let Some(rest) = tok.strip_prefix('∞') {
        let k = match rest.strip_prefix('_') {
            Some(k) => k.parse::<i32>().map_err(|_| bad())?,
            None if rest.is_empty() => 0,
            None => return Err(bad()),
        };
        Origin::Infinity(k)
    } else {
        let mut chars = tok.chars();
        let coset = chars.next().and_then(|c| c.to_digit(10)).ok_or_else(bad)?;
        let rest = chars.as_str();
        let residue = match rest.strip_prefix('(') {
            Some(inner) => inner.strip_suffix(')').ok_or_else(bad)?,
            None if rest.len() == 1 => rest,
            None => return Err(bad()),
        };
        Origin::Pair {
            coset,
            residue: residue.parse().map_err(|_| bad())?,
        }
    };
    scheme
        .label(origin)
        .map_err(|e| Error::Listing(format!("{tok:?}: {e}")))
}

/// Residue modulus and infinity count for a pair-notation listing.
fn pair_scheme(cells: &[ListingCell], v: u32) -> Result<LabelScheme> {
    let mut infinities = std::collections::BTreeSet::new();
    for cell in cells {
        for tok in cell.text.split(',').map(str::trim) {
            if tok.starts_with('∞') {
                infinities.insert(tok.to_string());
            }
        }
    }
    let count = infinities.len() as u32;
    if count >= v || (v - count) % 2 != 0 {
        return Err(Error::Listing(format!(
            "{count} infinite points do not fit an order-{v} pair listing"
        )));
    }
    Ok(LabelScheme::Tabulated {
        m: (v - count) / 2,
        infinities: count,
    })
}

fn cell_tokens(cell: &ListingCell) -> Result<[&str; 3]> {
    let toks: Vec<&str> = cell.text.split(',').map(str::trim).collect();
    <[&str; 3]>::try_from(toks).map_err(|_| {
        Error::Listing(format!(
            "col {} row {}: expected three points in {:?}",
            cell.col, cell.row, cell.text
        ))
    })
}

fn parse_cells(cells: &[ListingCell], v: u32) -> Result<Vec<OrientedBlock>> {
    let first = cells
        .first()
        .ok_or_else(|| Error::Listing("listing has no cells".into()))?;
    let context = |c: &ListingCell| format!("col {} row {}", c.col, c.row);
    if !first.text.contains(',') {
        return cells
            .iter()
            .map(|c| {
                let digits: Vec<u32> = c.text.chars().filter_map(|ch| ch.to_digit(16)).collect();
                if digits.len() != 3 || c.text.chars().count() != 3 {
                    return Err(Error::Listing(format!("{}: bad hex cell {:?}", context(c), c.text)));
                }
                block([digits[0], digits[1], digits[2]], v, &context(c))
            })
            .collect();
    }
    let pair_notation = cells.iter().any(|c| c.text.contains('∞') || c.text.contains('('));
    if pair_notation {
        let scheme = pair_scheme(cells, v)?;
        return cells
            .iter()
            .map(|c| {
                let [a, b, d] = cell_tokens(c)?;
                let labels = [
                    parse_pair_token(a, &scheme)?.0,
                    parse_pair_token(b, &scheme)?.0,
                    parse_pair_token(d, &scheme)?.0,
                ];
                block(labels, v, &context(c))
            })
            .collect();
    }
    // Plain integers; the listing may name the points 1..v with v standing
    // for 0.
    cells
        .iter()
        .map(|c| {
            let toks = cell_tokens(c)?;
            let mut labels = [0u32; 3];
            for (slot, tok) in labels.iter_mut().zip(toks) {
                let n: u32 = tok
                    .parse()
                    .map_err(|_| Error::Listing(format!("{}: bad token {tok:?}", context(c))))?;
                if n > v {
                    return Err(Error::Listing(format!("{}: point {n} exceeds {v}", context(c))));
                }
                *slot = n % v;
            }
            block(labels, v, &context(c))
        })
        .collect()
}

/// Parses a listing in any of the three notations into oriented blocks in
/// reading order. No design or cycle checks are made here.
pub fn parse_listing(text: &str, v: u32) -> Result<Vec<OrientedBlock>> {
    if is_table(text) {
        parse_cells(&listing_cells(text), v)
    } else {
        parse_flat(text, v)
    }
}

/// Cell-level corrections: `(col, row, original, corrected)`.
pub(crate) fn parse_with_corrections(
    text: &str,
    v: u32,
    corrections: &[(usize, usize, &str, &str)],
) -> Result<Vec<OrientedBlock>> {
    if corrections.is_empty() {
        return parse_listing(text, v);
    }
    if !is_table(text) {
        return Err(Error::Errata(format!("v={v}: cell corrections need a table listing")));
    }
    let mut cells = listing_cells(text);
    for &(col, row, original, corrected) in corrections {
        let cell = cells
            .iter_mut()
            .find(|c| c.col == col && c.row == row)
            .ok_or_else(|| Error::Errata(format!("v={v}: no cell at col {col} row {row}")))?;
        if cell.text != original.trim() {
            return Err(Error::Errata(format!(
                "v={v} col {col} row {row}: expected {original:?}, found {:?}",
                cell.text
            )));
        }
        cell.text = corrected.trim().to_string();
    }
    parse_cells(&cells, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_cell() {
        let blocks = parse_listing("2,1,0 | 0,3,2", 19).unwrap();
        assert_eq!(blocks[0], OrientedBlock::from_labels(2, 1, 0).unwrap());
    }

    #[test]
    fn pair_tokens() {
        let scheme = LabelScheme::Tabulated { m: 13, infinities: 1 };
        assert_eq!(parse_pair_token("1(10)", &scheme).unwrap(), Point(23));
        assert_eq!(parse_pair_token("07", &scheme).unwrap(), Point(7));
        assert_eq!(parse_pair_token("∞", &scheme).unwrap(), Point(26));
        assert!(parse_pair_token("1(10", &scheme).is_err());
        assert!(parse_pair_token("123", &scheme).is_err());
    }

    #[test]
    fn infinity_first_cell() {
        let text = "∞_1, 00, 11 | 11, ∞_0, 01";
        // Two infinities in an order-21 listing would leave an odd count;
        // use order 20 purely to exercise the token mapping.
        let blocks = parse_listing(text, 20).unwrap();
        assert_eq!(blocks[0], OrientedBlock::from_labels(19, 0, 10).unwrap());
    }

    #[test]
    fn column_major_with_short_rows() {
        let cells = listing_cells("a | b\nc | d\ne\n");
        let order: Vec<&str> = cells.iter().map(|c| c.text.as_str()).collect();
        assert_eq!(order, ["a", "c", "e", "b", "d"]);
        assert_eq!((cells[4].col, cells[4].row), (2, 2));
    }

    #[test]
    fn flat_continuation() {
        let blocks = parse_listing("0,1,2,3,4\n4,5,0", 7).unwrap();
        assert_eq!(blocks.len(), 3);
        assert!(parse_listing("0,1,2,3,4\n5,6,0", 7).is_err());
    }

    #[test]
    fn repeated_point_rejected() {
        assert!(matches!(parse_listing("1,1,2 | 2,0,1", 7), Err(Error::Listing(_))));
    }

    #[test]
    fn hex_cells() {
        let blocks = parse_listing("210 | 0a9", 15).unwrap();
        assert_eq!(blocks[1], OrientedBlock::from_labels(0, 10, 9).unwrap());
        assert!(parse_listing("2g0 | 0a9", 15).is_err());
    }

    #[test]
    fn correction_must_match() {
        let text = "0,1,2 | 2,3,0";
        assert!(parse_with_corrections(text, 7, &[(1, 1, "0,1,2", "0,4,2")]).is_ok());
        assert!(matches!(
            parse_with_corrections(text, 7, &[(1, 1, "0,1,3", "0,4,2")]),
            Err(Error::Errata(_))
        ));
    }
}
