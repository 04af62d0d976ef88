//! Text formats.
//!
//! A `.cys` block is a line holding `n` followed by `n` lines, line `i`
//! listing the 1-based one-line images of `ψ(s_i)`. `#` starts a comment
//! and blank lines are ignored.
//!
//! A census file is a sequence of `.cys` blocks separated by blank lines,
//! followed by footer lines `total=<k>`, `dmax=<d>` and one
//! `hist <class>=<count>` line per class.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cycle_set::PermTable;
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        }
        .trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected an integer, found `{tok}`"),
            })
        })
        .collect()
}

fn parse_blocks<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
    out: &mut Vec<PermTable>,
) -> Result<()> {
    while let Some(&(line_no, line)) = lines.peek() {
        if line.contains('=') {
            break;
        }
        lines.next();
        let header = parse_numbers(line_no, line)?;
        let [n] = header[..] else {
            return Err(Error::Parse {
                line: line_no,
                msg: "expected a single size".into(),
            });
        };
        if n == 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: "size must be positive".into(),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (row_no, row) = lines.next().ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected {n} rows"),
            })?;
            let nums = parse_numbers(row_no, row)?;
            if nums.len() != n {
                return Err(Error::Parse {
                    line: row_no,
                    msg: format!("expected {n} entries, found {}", nums.len()),
                });
            }
            rows.push(nums);
        }
        out.push(PermTable::from_one_line_rows(&rows)?);
    }
    Ok(())
}

/// Parses exactly one `.cys` block.
pub fn parse_cys(text: &str) -> Result<PermTable> {
    let mut tables = Vec::new();
    let mut lines = content_lines(text).peekable();
    parse_blocks(&mut lines, &mut tables)?;
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "unexpected trailing content".into(),
        });
    }
    match tables.len() {
        1 => Ok(tables.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 0,
            msg: "empty input".into(),
        }),
        k => Err(Error::Parse {
            line: 0,
            msg: format!("expected one cycle set, found {k}"),
        }),
    }
}

/// Parses any number of consecutive `.cys` blocks (no footer).
pub fn parse_cys_blocks(text: &str) -> Result<Vec<PermTable>> {
    let mut tables = Vec::new();
    let mut lines = content_lines(text).peekable();
    parse_blocks(&mut lines, &mut tables)?;
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "unexpected trailing content".into(),
        });
    }
    Ok(tables)
}

pub fn write_cys(table: &PermTable) -> String {
    let mut out = String::new();
    writeln!(out, "{}", table.n()).unwrap();
    for row in table.rows() {
        let line: Vec<String> = row.one_line().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// Summary footer of a census file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusFooter {
    pub total: u64,
    pub dmax: u64,
    pub histogram: BTreeMap<u64, u64>,
}

impl CensusFooter {
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "total={}", self.total).unwrap();
        writeln!(out, "dmax={}", self.dmax).unwrap();
        for (class, count) in &self.histogram {
            writeln!(out, "hist {class}={count}").unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusFile {
    pub tables: Vec<PermTable>,
    pub footer: CensusFooter,
}

pub fn write_census_block(table: &PermTable) -> String {
    let mut s = write_cys(table);
    s.push('\n');
    s
}

pub fn parse_census(text: &str) -> Result<CensusFile> {
    let mut tables = Vec::new();
    let mut lines = content_lines(text).peekable();
    parse_blocks(&mut lines, &mut tables)?;
    let mut footer = CensusFooter::default();
    let (mut seen_total, mut seen_dmax) = (false, false);
    for (line_no, line) in lines {
        let bad = || Error::Parse {
            line: line_no,
            msg: format!("bad footer line `{line}`"),
        };
        let (key, value) = line.split_once('=').ok_or_else(bad)?;
        let value: u64 = value.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "total" => {
                footer.total = value;
                seen_total = true;
            }
            "dmax" => {
                footer.dmax = value;
                seen_dmax = true;
            }
            k => {
                let class = k
                    .strip_prefix("hist ")
                    .and_then(|c| c.trim().parse::<u64>().ok())
                    .ok_or_else(bad)?;
                footer.histogram.insert(class, value);
            }
        }
    }
    if !(seen_total && seen_dmax) {
        return Err(Error::Parse {
            line: 0,
            msg: "missing census footer".into(),
        });
    }
    Ok(CensusFile { tables, footer })
}
