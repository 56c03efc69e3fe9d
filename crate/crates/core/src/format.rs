//! Text formats.
//!
//! ```text
//! STS 7 7          OCYCLE 7 7       UCYCLE2 7 7
//! 0 1 2            2 1 0            2 0 4 5 6 1 3
//! 0 3 4            0 3 4
//! ...              ...
//! ```
//!
//! `STS` lists blocks ascending, each block's points ascending. `OCYCLE`
//! lists `head hidden tail` per block in cycle order. `UCYCLE2` is the
//! compressed form on one line with no closing repeat. Blank lines and lines
//! starting with `#` are ignored when reading; everything else is strict.

use std::fmt::Write as _;

use crate::design::{Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::ocycle::{CompressedCycle, OrientedBlock};

pub fn write_sts(ts: &TripleSystem) -> String {
    let mut blocks = ts.blocks().to_vec();
    blocks.sort();
    let mut out = format!("STS {} {}\n", ts.order(), blocks.len());
    for b in blocks {
        let [x, y, z] = b.points();
        writeln!(out, "{x} {y} {z}").expect("string write");
    }
    out
}

pub fn write_ocycle(order: u32, blocks: &[OrientedBlock]) -> String {
    let mut out = format!("OCYCLE {order} {}\n", blocks.len());
    for b in blocks {
        writeln!(out, "{} {} {}", b.head, b.hidden, b.tail).expect("string write");
    }
    out
}

pub fn write_ucycle(order: u32, cc: &CompressedCycle) -> String {
    let labels: Vec<String> = cc.points().iter().map(Point::to_string).collect();
    format!("UCYCLE2 {order} {}\n{}\n", cc.len(), labels.join(" "))
}

/// Lines that carry content, with 1-based line numbers.
fn content(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| parse_err(line, format!("not a label: {t:?}")))
        })
        .collect()
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    expect: &[&str],
) -> Result<(String, u32, usize, usize)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| parse_err(1, format!("missing {} header", expect.join("/"))))?;
    let mut words = text.split_whitespace();
    let tag = words.next().unwrap_or_default();
    if !expect.contains(&tag) {
        return Err(parse_err(
            line,
            format!("expected {} header, found {tag:?}", expect.join("/")),
        ));
    }
    let rest: Vec<&str> = words.collect();
    if rest.len() != 2 {
        return Err(parse_err(line, "header needs an order and a count"));
    }
    let order = rest[0].parse().map_err(|_| parse_err(line, "bad order"))?;
    let count = rest[1].parse().map_err(|_| parse_err(line, "bad count"))?;
    Ok((tag.to_string(), order, count, line))
}

fn rows<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    count: usize,
    header_line: usize,
) -> Result<Vec<(usize, [u32; 3])>> {
    let mut out = Vec::with_capacity(count);
    for (line, text) in lines {
        let ns = numbers(line, text)?;
        let row: [u32; 3] = ns.try_into().map_err(|_| parse_err(line, "expected three labels"))?;
        out.push((line, row));
    }
    if out.len() != count {
        return Err(parse_err(
            header_line,
            format!("header announces {count} blocks, found {}", out.len()),
        ));
    }
    Ok(out)
}

/// A block list as read from an `STS` file, not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StsFile {
    pub order: u32,
    pub blocks: Vec<Triple>,
}

impl StsFile {
    pub fn into_system(self) -> Result<TripleSystem> {
        TripleSystem::new(self.order, self.blocks)
    }
}

pub fn parse_sts(text: &str) -> Result<StsFile> {
    let mut lines = content(text);
    let (_, order, count, hl) = header(&mut lines, &["STS"])?;
    let blocks = rows(lines, count, hl)?
        .into_iter()
        .map(|(line, [a, b, c])| Triple::from_labels(a, b, c).map_err(|_| parse_err(line, "block repeats a point")))
        .collect::<Result<Vec<_>>>()?;
    Ok(StsFile { order, blocks })
}

/// Contents of an `OCYCLE` or `UCYCLE2` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleFile {
    Full { order: u32, blocks: Vec<OrientedBlock> },
    Compressed { order: u32, cycle: CompressedCycle },
}

impl CycleFile {
    pub fn order(&self) -> u32 {
        match self {
            CycleFile::Full { order, .. } | CycleFile::Compressed { order, .. } => *order,
        }
    }
}

pub fn parse_cycle_file(text: &str) -> Result<CycleFile> {
    let mut lines = content(text);
    let (tag, order, count, hl) = header(&mut lines, &["OCYCLE", "UCYCLE2"])?;
    if tag == "OCYCLE" {
        let blocks = rows(lines, count, hl)?
            .into_iter()
            .map(|(line, [h, x, t])| {
                OrientedBlock::from_labels(h, x, t).map_err(|_| parse_err(line, "block repeats a point"))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(CycleFile::Full { order, blocks });
    }
    let mut labels = Vec::with_capacity(count);
    for (line, text) in lines {
        labels.extend(numbers(line, text)?);
    }
    if labels.len() != count {
        return Err(parse_err(
            hl,
            format!("header announces {count} points, found {}", labels.len()),
        ));
    }
    Ok(CycleFile::Compressed {
        order,
        cycle: CompressedCycle::from_labels(&labels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::base_case;
    use crate::ocycle::compress;

    #[test]
    fn round_trips() {
        let asset = base_case(7).unwrap();
        let sts = write_sts(&asset.parsed_sts);
        assert!(sts.starts_with("STS 7 7\n0 1 2\n"));
        assert_eq!(parse_sts(&sts).unwrap().into_system().unwrap().block_count(), 7);
        let oc = write_ocycle(7, &asset.parsed_blocks);
        assert_eq!(
            parse_cycle_file(&oc).unwrap(),
            CycleFile::Full {
                order: 7,
                blocks: asset.parsed_blocks.clone()
            }
        );
        let cc = compress(&asset.cycle().unwrap());
        let uc = write_ucycle(7, &cc);
        assert_eq!(uc, "UCYCLE2 7 7\n2 0 4 5 6 1 3\n");
        assert_eq!(
            parse_cycle_file(&uc).unwrap(),
            CycleFile::Compressed { order: 7, cycle: cc }
        );
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_sts("STS 7 2\n0 1 2\n# note\n0 x 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse_sts("STS 7 2\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_cycle_file("OCYCLE 7 1\n1 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_cycle_file("STS 7 7\n").is_err());
    }
}
