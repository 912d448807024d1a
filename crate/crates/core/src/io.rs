//! Text formats.
//!
//! * graph: `#` comment lines, then `n m`, then `m` lines `u v`. Written with
//!   `u < v`; either order is read.
//! * order: one line of `n` vertex ids, minimum first.
//! * orientation: one line `u v` per edge, meaning `u -> v`, sorted.
//! * coloring: one line of `n` colors, the i-th for vertex i, starting at 1.

use std::io::{BufRead, Write};

use crate::colorsolve::Coloring;
use crate::error::{Error, Result};
use crate::graph::ComparisonGraph;
use crate::orientation::OrientationStore;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e.into())),
            Ok(l) => {
                let t = l.trim();
                if t.is_empty() || t.starts_with('#') {
                    None
                } else {
                    Some(Ok((i + 1, t.to_string())))
                }
            }
        })
}

fn parse_ints(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                Error::parse(
                    line,
                    format!("expected a non-negative integer, got {tok:?}"),
                )
            })
        })
        .collect()
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    match parse_ints(line, text)?.as_slice() {
        &[u, v] => Ok((u, v)),
        other => Err(Error::parse(
            line,
            format!("expected 2 integers, got {}", other.len()),
        )),
    }
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<ComparisonGraph> {
    let mut lines = data_lines(reader);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing \"n m\" header"))??;
    let (n, m) = parse_pair(line, &header)?;
    let mut g = ComparisonGraph::empty(n);
    let mut last = line;
    for i in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(last + 1, format!("expected {m} edges, found {i}")))??;
        last = line;
        let (u, v) = parse_pair(line, &text)?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
        }
        g.try_insert(u, v, line)?;
    }
    if let Some(extra) = lines.next() {
        let (line, _) = extra?;
        return Err(Error::parse(line, format!("more than {m} edge lines")));
    }
    g.finish();
    Ok(g)
}

pub fn load_graph(text: &str) -> Result<ComparisonGraph> {
    read_graph(text.as_bytes())
}

pub fn write_graph<W: Write>(mut w: W, g: &ComparisonGraph) -> Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

/// Reads a single-line list of integers (order or coloring files).
fn read_int_line<R: BufRead>(reader: R) -> Result<Vec<usize>> {
    let mut lines = data_lines(reader);
    let Some(first) = lines.next() else {
        return Ok(Vec::new());
    };
    let (line, text) = first?;
    if let Some(extra) = lines.next() {
        let (extra_line, _) = extra?;
        return Err(Error::parse(extra_line, "expected a single line"));
    }
    parse_ints(line, &text)
}

/// Vertex ids from minimum to maximum. Permutation checks happen when the
/// order is applied to a graph.
pub fn read_order<R: BufRead>(reader: R) -> Result<Vec<usize>> {
    read_int_line(reader)
}

pub fn write_order<W: Write>(mut w: W, order: &[usize]) -> Result<()> {
    writeln!(w, "{}", join(order))?;
    Ok(())
}

pub fn read_coloring<R: BufRead>(reader: R) -> Result<Coloring> {
    Coloring::new(read_int_line(reader)?)
}

pub fn write_coloring<W: Write>(mut w: W, c: &Coloring) -> Result<()> {
    writeln!(w, "{}", join(c.as_slice()))?;
    Ok(())
}

/// Directed pairs as listed in the file, in file order.
pub fn read_orientation<R: BufRead>(reader: R) -> Result<Vec<(usize, usize)>> {
    data_lines(reader)
        .map(|item| item.and_then(|(line, text)| parse_pair(line, &text)))
        .collect()
}

pub fn write_orientation<W: Write>(mut w: W, o: &OrientationStore) -> Result<()> {
    for (u, v) in o.directed_edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
