//! The `.hg` text format.
//!
//! ```text
//! r n m
//! v_1 ... v_r      (m lines)
//! ```
//!
//! Vertices are 0-based, every line is strictly increasing, the edge lines
//! are strictly increasing in lexicographic order, fields are separated by
//! one space and every line ends with `\n`. The reader rejects anything
//! else instead of normalizing it, so a file round-trips byte for byte.

use std::fmt;

use hyperlambda_core::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    if tok.is_empty() {
        return fail(line, "empty field (fields are separated by exactly one space)");
    }
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return fail(line, format!("{tok:?} is not a nonnegative decimal integer"));
    }
    if tok.len() > 1 && tok.starts_with('0') {
        return fail(line, format!("{tok:?} has a leading zero"));
    }
    tok.parse().or_else(|_| fail(line, format!("{tok:?} is too large")))
}

fn fields(text: &str, line: usize) -> Result<Vec<usize>, ParseError> {
    text.split(' ').map(|t| number(t, line)).collect()
}

pub fn parse(text: &str) -> Result<Hypergraph, ParseError> {
    if let Some(pos) = text.find('\r') {
        let line = text[..pos].matches('\n').count() + 1;
        return fail(line, "carriage return (line endings must be \\n)");
    }
    if text.is_empty() {
        return fail(1, "missing header `r n m`");
    }
    let Some(body) = text.strip_suffix('\n') else {
        return fail(text.matches('\n').count() + 1, "missing final newline");
    };
    let lines: Vec<&str> = body.split('\n').collect();
    let header = fields(lines[0], 1)?;
    let [r, n, m] = header[..] else {
        return fail(1, format!("header must be `r n m`, found {} field(s)", header.len()));
    };
    if r < 2 {
        return fail(1, format!("uniformity must be at least 2, got {r}"));
    }
    if lines.len() - 1 < m {
        return fail(lines.len() + 1, format!("expected {m} edge line(s), found {}", lines.len() - 1));
    }
    if lines.len() - 1 > m {
        return fail(m + 2, format!("unexpected line after the {m} declared edge(s)"));
    }
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    for (i, text) in lines[1..].iter().enumerate() {
        let line = i + 2;
        let e = fields(text, line)?;
        if e.len() != r {
            return fail(line, format!("edge has {} vertices, expected {r}", e.len()));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return fail(line, format!("vertex {v} out of range for n = {n}"));
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return fail(line, "vertices must be strictly increasing");
        }
        if let Some(prev) = edges.last() {
            if *prev == e {
                return fail(line, "duplicate edge");
            }
            if *prev > e {
                return fail(line, "edges must be in increasing lexicographic order");
            }
        }
        edges.push(e);
    }
    Hypergraph::from_edges(r, n, edges).or_else(|e| fail(1, e.to_string()))
}

pub fn write(g: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", g.uniformity(), g.order(), g.size());
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// The `.hg` text on one line, lines joined by `|`, for CSV cells.
pub fn compact(g: &Hypergraph) -> String {
    write(g).trim_end().replace('\n', "|")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for g in [Hypergraph::fano(), Hypergraph::empty(3, 4).unwrap(), Hypergraph::complete(2, 4).unwrap()] {
            let text = write(&g);
            assert_eq!(parse(&text).unwrap(), g);
            assert_eq!(write(&parse(&text).unwrap()), text);
        }
        assert_eq!(compact(&Hypergraph::complete(2, 3).unwrap()), "2 3 3|0 1|0 2|1 2");
    }

    #[test]
    fn diagnostics() {
        let cases = [
            ("", 1, "missing header"),
            ("2 3 1\n0 1", 2, "final newline"),
            ("2 3 1\r\n0 1\n", 1, "carriage return"),
            ("2 3\n", 1, "header"),
            ("1 3 0\n", 1, "uniformity"),
            ("2 3 2\n0 1\n", 3, "expected 2"),
            ("2 3 1\n0 1\n0 2\n", 3, "unexpected line"),
            ("2 3 1\n0  1\n", 2, "empty field"),
            ("2 3 1\n0 3\n", 2, "out of range"),
            ("2 3 1\n1 0\n", 2, "strictly increasing"),
            ("2 3 2\n0 2\n0 1\n", 3, "lexicographic"),
            ("2 3 2\n0 1\n0 1\n", 3, "duplicate"),
            ("2 3 1\n0 01\n", 2, "leading zero"),
            ("2 3 1\n0 -1\n", 2, "nonnegative"),
            ("2 3 1\n0 1 2\n", 2, "expected 2"),
            ("2 3 0\n\n", 2, "unexpected line"),
        ];
        for (text, line, needle) in cases {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
            assert!(e.message.contains(needle), "{text:?}: {e}");
        }
    }
}
