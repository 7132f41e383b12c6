//! The Cayley table text format.
//!
//! ```text
//! # Z3, with labels
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! labels: e a b
//! ```
//!
//! A file holds one or more tables in sequence. Each is a size line `n`,
//! then `n` rows of `n` whitespace-separated entries in `0..n`, then an
//! optional `labels:` line. `#` starts a comment and blank lines are ignored.

use std::fmt;

use crsg_core::Semigroup;

/// A table as read, before the associativity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTable {
    pub rows: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
    /// Line of the size header, 1-based.
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<Vec<RawTable>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    let mut tables = Vec::new();
    while let Some((at, header)) = lines.next() {
        let n: usize = header
            .parse()
            .map_err(|_| err(at, format!("expected a table size, found {header:?}")))?;
        if n == 0 {
            return Err(err(at, "table size must be positive"));
        }
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (ln, row) = lines.next().ok_or_else(|| err(at, format!("table ends after {r} of {n} rows")))?;
            if row.starts_with("labels:") {
                return Err(err(ln, format!("expected row {} of {n}, found labels", r + 1)));
            }
            let entries = row
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(ln, format!("not an element index: {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != n {
                return Err(err(ln, format!("expected {n} entries, found {}", entries.len())));
            }
            if let Some(&bad) = entries.iter().find(|&&x| x >= n) {
                return Err(err(ln, format!("entry {bad} out of range 0..{n}")));
            }
            rows.push(entries);
        }
        let mut labels = None;
        if let Some(&(ln, l)) = lines.peek() {
            if let Some(rest) = l.strip_prefix("labels:") {
                lines.next();
                let ls: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if ls.len() != n {
                    return Err(err(ln, format!("expected {n} labels, found {}", ls.len())));
                }
                let mut sorted = ls.clone();
                sorted.sort();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(err(ln, "labels must be distinct"));
                }
                labels = Some(ls);
            }
        }
        tables.push(RawTable { rows, labels, line: at });
    }
    Ok(tables)
}

impl RawTable {
    pub fn to_semigroup(&self) -> crsg_core::Result<Semigroup> {
        Semigroup::from_table(&self.rows, self.labels.clone())
    }
}

/// One table in the text format, ending in a newline.
pub fn serialize(s: &Semigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(labels) = s.labels() {
        out.push_str("labels: ");
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Several tables separated by blank lines, each preceded by a `# name` comment when given.
pub fn serialize_many<'a>(items: impl IntoIterator<Item = (Option<&'a str>, &'a Semigroup)>) -> String {
    let mut parts = Vec::new();
    for (name, s) in items {
        let mut part = String::new();
        if let Some(name) = name {
            part.push_str(&format!("# {name}\n"));
        }
        part.push_str(&serialize(s));
        parts.push(part);
    }
    parts.join("\n")
}
