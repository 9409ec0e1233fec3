//! Plain-text instance files.
//!
//! ```text
//! p h3 <n> <m>          p smg <n> <m> <k>
//! <u> <v> <w>           s <v>
//! ...                   e <u> <v> <mult>
//! ```
//!
//! Ids are 1-based in files and 0-based in memory. Lines starting with `#`
//! and blank lines are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use judicious::{Hypergraph3, SpecialMultigraph, Vertex};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Hypergraph(Hypergraph3),
    Special(SpecialMultigraph),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, line) in self.inner.by_ref() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }
}

fn err(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("line {line}: {msg}"))
}

fn number<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T, CliError> {
    tok.parse().map_err(|_| err(line, format!("invalid {what} `{tok}`")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<Vertex, CliError> {
    let id: u64 = number(line, tok, "vertex id")?;
    if id == 0 || id > n as u64 {
        return Err(err(line, format!("vertex {id} outside 1..={n}")));
    }
    Ok((id - 1) as Vertex)
}

pub fn parse(text: &str) -> Result<InstanceFile, CliError> {
    let mut lines = Lines { inner: text.lines().enumerate() };
    let (line, header) = lines.next().ok_or_else(|| CliError::Input("empty input".into()))?;
    match header.as_slice() {
        ["p", "h3", n, m] => {
            let n: usize = number(line, n, "vertex count")?;
            let m: usize = number(line, m, "edge count")?;
            parse_h3(lines, n, m).map(InstanceFile::Hypergraph)
        }
        ["p", "smg", n, m, k] => {
            let n: usize = number(line, n, "vertex count")?;
            let m: u64 = number(line, m, "edge count")?;
            let k: usize = number(line, k, "special count")?;
            parse_smg(lines, n, m, k).map(InstanceFile::Special)
        }
        _ => Err(err(line, "expected header `p h3 <n> <m>` or `p smg <n> <m> <k>`")),
    }
}

fn parse_h3(lines: Lines<'_>, n: usize, m: usize) -> Result<Hypergraph3, CliError> {
    if n > Vertex::MAX as usize {
        return Err(CliError::Input(format!("line 1: too many vertices ({n})")));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashMap::with_capacity(m);
    let mut last = 1;
    for (line, toks) in lines {
        last = line;
        let [u, v, w] = toks.as_slice() else {
            return Err(err(line, format!("expected 3 vertex ids, found {}", toks.len())));
        };
        let mut e = [vertex(line, u, n)?, vertex(line, v, n)?, vertex(line, w, n)?];
        e.sort_unstable();
        if e[0] == e[1] || e[1] == e[2] {
            return Err(err(line, "edge repeats a vertex"));
        }
        if let Some(first) = seen.insert(e, line) {
            return Err(err(line, format!("duplicate of the edge on line {first}")));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(err(last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Hypergraph3::new(n, edges).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_smg(lines: Lines<'_>, n: usize, m: u64, k: usize) -> Result<SpecialMultigraph, CliError> {
    let mut specials = Vec::with_capacity(k);
    let mut seen_special = vec![false; n];
    let mut pairs = Vec::new();
    let mut total = 0u64;
    let mut last = 1;
    for (line, toks) in lines {
        last = line;
        match toks.as_slice() {
            ["s", v] => {
                let v = vertex(line, v, n)?;
                if std::mem::replace(&mut seen_special[v as usize], true) {
                    return Err(err(line, format!("vertex {} listed as special twice", v + 1)));
                }
                specials.push(v);
            }
            ["e", u, v, mult] => {
                let (u, v) = (vertex(line, u, n)?, vertex(line, v, n)?);
                if u == v {
                    return Err(err(line, "loop edge"));
                }
                let mult: u64 = number(line, mult, "multiplicity")?;
                if mult == 0 {
                    return Err(err(line, "multiplicity must be positive"));
                }
                total = total
                    .checked_add(mult)
                    .ok_or_else(|| err(line, "total multiplicity overflows"))?;
                pairs.push((u, v, mult));
            }
            _ => return Err(err(line, "expected `s <v>` or `e <u> <v> <mult>`")),
        }
    }
    if specials.len() != k {
        return Err(err(last, format!("header declares {k} specials, found {}", specials.len())));
    }
    if total != m {
        return Err(err(last, format!("header declares total multiplicity {m}, found {total}")));
    }
    SpecialMultigraph::new(n, pairs, specials).map_err(|e| CliError::Input(e.to_string()))
}

pub fn serialize_h3(g: &Hypergraph3) -> String {
    let mut out = format!("p h3 {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e[0] + 1, e[1] + 1, e[2] + 1);
    }
    out
}

pub fn serialize_smg(g: &SpecialMultigraph) -> String {
    let mut out = format!("p smg {} {} {}\n", g.n(), g.m(), g.k());
    for s in g.specials() {
        let _ = writeln!(out, "s {}", s + 1);
    }
    for &(u, v, w) in g.pairs() {
        let _ = writeln!(out, "e {} {} {}", u + 1, v + 1, w);
    }
    out
}

pub fn serialize(instance: &InstanceFile) -> String {
    match instance {
        InstanceFile::Hypergraph(g) => serialize_h3(g),
        InstanceFile::Special(g) => serialize_smg(g),
    }
}
