//! Problem files and result tables.
//!
//! Problem files follow the DIMACS shortest-path layout with one extra
//! line for the battery:
//!
//! ```text
//! c comment
//! p ec <n> <m>
//! b <capacity> <initial>
//! s <source>
//! t <target>
//! a <tail> <head> <cost>
//! ```
//!
//! Vertex ids are 1-based. `b`, `s` and `t` are optional and may appear
//! anywhere after the header; exactly `m` arc lines must follow. Costs are
//! kept as written, even outside `[-B, B]`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::energy::{BatteryConfig, Energy};
use crate::error::{Error, Result};
use crate::graph::{Arc, Graph};
use crate::solvers::{AllPairs, InitialCharges, SolveResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub graph: Graph,
    pub battery: Option<BatteryConfig>,
    pub source: Option<usize>,
    pub target: Option<usize>,
}

impl ProblemFile {
    pub fn new(graph: Graph) -> Self {
        ProblemFile {
            graph,
            battery: None,
            source: None,
            target: None,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: std::str::FromStr>(token: Option<&str>, what: &str, line: usize) -> Result<T> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("{what} `{token}` is not a valid number")))
}

fn vertex(token: Option<&str>, what: &str, n: usize, line: usize) -> Result<usize> {
    let id: usize = field(token, what, line)?;
    if id == 0 || id > n {
        return Err(parse_err(line, format!("{what} {id} is outside 1..={n}")));
    }
    Ok(id - 1)
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut battery = None;
    let mut source = None;
    let mut target = None;
    let mut last_line = 0;

    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        if kind == "c" {
            continue;
        }
        last_line = line;
        let Some((n, m)) = header else {
            if kind != "p" {
                return Err(parse_err(line, "expected `p ec <n> <m>` header"));
            }
            if tokens.next() != Some("ec") {
                return Err(parse_err(line, "problem type must be `ec`"));
            }
            let n = field(tokens.next(), "vertex count", line)?;
            let m = field(tokens.next(), "arc count", line)?;
            if tokens.next().is_some() {
                return Err(parse_err(line, "trailing tokens after header"));
            }
            header = Some((n, m));
            arcs.reserve(m);
            continue;
        };
        match kind {
            "p" => return Err(parse_err(line, "duplicate `p` header")),
            "b" => {
                if battery.is_some() {
                    return Err(parse_err(line, "duplicate `b` line"));
                }
                let cap: i64 = field(tokens.next(), "capacity", line)?;
                let initial: i64 = field(tokens.next(), "initial charge", line)?;
                battery = Some(BatteryConfig::new(cap, initial).map_err(|e| parse_err(line, e.to_string()))?);
            }
            "s" | "t" => {
                let slot = if kind == "s" { &mut source } else { &mut target };
                if slot.is_some() {
                    return Err(parse_err(line, format!("duplicate `{kind}` line")));
                }
                *slot = Some(vertex(tokens.next(), "vertex", n, line)?);
            }
            "a" => {
                if arcs.len() == m {
                    return Err(parse_err(line, format!("more than the {m} declared arcs")));
                }
                let tail = vertex(tokens.next(), "tail", n, line)?;
                let head = vertex(tokens.next(), "head", n, line)?;
                let cost = field(tokens.next(), "cost", line)?;
                arcs.push(Arc { tail, head, cost });
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
        if tokens.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }

    let Some((n, m)) = header else {
        return Err(parse_err(1, "missing `p ec <n> <m>` header"));
    };
    if arcs.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} arcs, found {}", arcs.len()),
        ));
    }
    Ok(ProblemFile {
        graph: Graph::new(n, arcs)?,
        battery,
        source,
        target,
    })
}

/// Canonical text: header, optional `b`, `s`, `t` lines, then arcs in
/// order, each line LF-terminated.
pub fn serialize_problem(problem: &ProblemFile) -> String {
    let g = &problem.graph;
    let mut out = String::with_capacity(16 * (g.m() + 4));
    let _ = writeln!(out, "p ec {} {}", g.n(), g.m());
    if let Some(b) = problem.battery {
        let _ = writeln!(out, "b {} {}", b.capacity(), b.initial());
    }
    if let Some(s) = problem.source {
        let _ = writeln!(out, "s {}", s + 1);
    }
    if let Some(t) = problem.target {
        let _ = writeln!(out, "t {}", t + 1);
    }
    for a in g.arcs() {
        let _ = writeln!(out, "a {} {} {}", a.tail + 1, a.head + 1, a.cost);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

/// Rows of text cells under named columns.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// A table plus an optional path, given as 0-based vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub table: Table,
    pub path: Option<Vec<usize>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn id(v: usize) -> String {
    (v + 1).to_string()
}

/// `vertex delta alpha pred` for every vertex of a single-source result.
pub fn solve_table(result: &SolveResult) -> Table {
    let mut t = Table::new(["vertex", "delta", "alpha", "pred"]);
    for v in 0..result.energies().len() {
        t.push(vec![
            id(v),
            result.energy(v).to_string(),
            result.final_charge(v).to_string(),
            result.pred(v).map_or_else(|| "-".to_string(), |p| id(p.vertex)),
        ]);
    }
    t
}

/// `vertex beta` toward the charges' target.
pub fn beta_table(charges: &InitialCharges) -> Table {
    let mut t = Table::new(["vertex", "beta"]);
    for (v, b) in charges.values().iter().enumerate() {
        t.push(vec![id(v), b.to_string()]);
    }
    t
}

/// Square matrix of energetic costs, one row per source.
pub fn allpairs_table(all: &AllPairs) -> Table {
    let n = all.rows().len();
    let mut t = Table::new(std::iter::once("source".to_string()).chain((0..n).map(id)));
    for (s, row) in all.rows().iter().enumerate() {
        t.push(std::iter::once(id(s)).chain(row.energies().iter().map(Energy::to_string)).collect());
    }
    t
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Tsv => render_tsv(report),
        Format::Json => render_json(report),
    }
}

fn render_tsv(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&report.table.columns.join("\t"));
    out.push('\n');
    for row in &report.table.rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    if let Some(path) = &report.path {
        out.push('\n');
        out.push_str("path");
        for &v in path {
            out.push('\t');
            out.push_str(&id(v));
        }
        out.push('\n');
    }
    out
}

fn json_cell(cell: &str) -> Value {
    cell.parse::<i64>().map_or_else(|_| Value::from(cell), Value::from)
}

fn render_json(report: &Report) -> String {
    let rows: Vec<Value> = report
        .table
        .rows
        .iter()
        .map(|r| Value::Array(r.iter().map(|c| json_cell(c)).collect()))
        .collect();
    let mut v = json!({ "columns": report.table.columns, "rows": rows });
    if let Some(path) = &report.path {
        v["path"] = json!(path.iter().map(|&p| p + 1).collect::<Vec<_>>());
    }
    let mut out = v.to_string();
    out.push('\n');
    out
}

/// Reads back the TSV produced by [`render`].
pub fn parse_tsv(text: &str) -> Result<Report> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| parse_err(1, "missing final newline"))?;
    let (table_part, path_part) = match body.split_once("\n\n") {
        Some((t, p)) => (t, Some(p)),
        None => (body, None),
    };
    let mut lines = table_part.split('\n');
    let columns: Vec<String> = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header row"))?
        .split('\t')
        .map(String::from)
        .collect();
    let mut table = Table {
        columns,
        rows: Vec::new(),
    };
    for (i, line) in lines.enumerate() {
        let row: Vec<String> = line.split('\t').map(String::from).collect();
        if row.len() != table.columns.len() {
            return Err(parse_err(
                i + 2,
                format!("row has {} cells, header has {}", row.len(), table.columns.len()),
            ));
        }
        table.rows.push(row);
    }
    let path = match path_part {
        None => None,
        Some(p) => {
            let line = table.rows.len() + 3;
            let mut cells = p.split('\t');
            if cells.next() != Some("path") {
                return Err(parse_err(line, "expected a `path` line"));
            }
            Some(
                cells
                    .map(|c| vertex(Some(c), "path vertex", usize::MAX, line))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
    };
    Ok(Report { table, path })
}
