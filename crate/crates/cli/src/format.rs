//! The line-based surface file.
//!
//! ```text
//! # genus 2
//! pants 2
//! edge 0 0.0 1.0 len 1.5 twist 0/1
//! edge 1 0.1 1.1 len 2 twist 1/2
//! edge 2 0.2 1.2 len 0.75 twist 1/2
//! ```
//!
//! Edge ids run `0, 1, 2, …` in order. The first half-edge of an edge line is
//! side zero.

use std::fmt::{self, Write as _};

use fenchel_core::surface::{MAX_LENGTH, MIN_LENGTH};
use fenchel_core::{Edge, FnSurface, HalfEdge, PantsGraph, Rational, Slot, SurfaceError, Violation};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

struct Cursor<'a> {
    line: usize,
    end_column: usize,
    tokens: std::vec::IntoIter<Token<'a>>,
}

impl<'a> Cursor<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column, message: message.into() }
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        self.tokens.next().ok_or_else(|| self.error(self.end_column, format!("expected {what}")))
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("`{word}`"))?;
        if t.text != word {
            return Err(self.error(t.column, format!("expected `{word}`, found `{}`", t.text)));
        }
        Ok(())
    }

    fn finish(mut self) -> Result<(), ParseError> {
        match self.tokens.next() {
            Some(t) => Err(self.error(t.column, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }
}

fn parse_usize(cursor: &Cursor, t: &Token, what: &str) -> Result<usize, ParseError> {
    if !t.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(cursor.error(t.column, format!("expected {what}, found `{}`", t.text)));
    }
    t.text.parse().map_err(|_| cursor.error(t.column, format!("{what} `{}` is too large", t.text)))
}

fn parse_half_edge(cursor: &Cursor, t: &Token) -> Result<HalfEdge, ParseError> {
    let bad = || cursor.error(t.column, format!("expected <pants>.<slot>, found `{}`", t.text));
    let (v, s) = t.text.split_once('.').ok_or_else(bad)?;
    if v.is_empty() || !v.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let vertex = v.parse().map_err(|_| bad())?;
    let slot = match s {
        "0" | "1" | "2" => Slot::new(s.as_bytes()[0] - b'0').expect("slot below 3"),
        _ => {
            let column = t.column + v.chars().count() + 1;
            return Err(cursor.error(column, format!("slot must be 0, 1 or 2, found `{s}`")));
        }
    };
    Ok(HalfEdge::new(vertex, slot))
}

/// Decimal with an optional exponent and at most 17 significant digits.
pub fn parse_decimal(text: &str) -> Result<f64, String> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], Some(&text[i + 1..])),
        None => (text, None),
    };
    let digits = mantissa.strip_prefix('+').unwrap_or(mantissa);
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    let exponent_ok = exponent.is_none_or(|e| {
        let e = e.strip_prefix(['+', '-']).unwrap_or(e);
        !e.is_empty() && all_digits(e)
    });
    if int.len() + frac.len() == 0 || !all_digits(int) || !all_digits(frac) || !exponent_ok {
        return Err(format!("`{text}` is not a decimal number"));
    }
    let significant = format!("{int}{frac}");
    let significant = significant.trim_start_matches('0').trim_end_matches('0');
    if significant.len() > 17 {
        return Err(format!("`{text}` has more than 17 significant digits"));
    }
    text.parse().map_err(|_| format!("`{text}` is not a decimal number"))
}

/// `p/q` with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = || format!("`{text}` is not a fraction p/q");
    let (p, q) = text.split_once('/').ok_or_else(bad)?;
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q <= 0 {
        return Err(format!("denominator of `{text}` must be positive"));
    }
    Ok(Rational::new(p, q))
}

struct EdgeLine {
    line: usize,
    length_column: usize,
    edge: Edge,
    length: f64,
    twist: Rational,
}

/// Parses and validates a surface file.
pub fn parse_surface(text: &str) -> Result<FnSurface, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<EdgeLine> = Vec::new();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        if toks.is_empty() {
            continue;
        }
        let end_column = content.trim_end().chars().count() + 1;
        let mut cursor = Cursor { line, end_column, tokens: toks.into_iter() };
        let head = cursor.next("a keyword")?;
        match head.text {
            "pants" => {
                if header.is_some() {
                    return Err(cursor.error(head.column, "repeated `pants` header"));
                }
                let t = cursor.next("pants count")?;
                let count = parse_usize(&cursor, &t, "pants count")?;
                cursor.finish()?;
                header = Some((line, count));
            }
            "edge" => {
                if header.is_none() {
                    return Err(cursor.error(head.column, "`edge` before the `pants` header"));
                }
                let t = cursor.next("edge id")?;
                let id = parse_usize(&cursor, &t, "edge id")?;
                if id != edges.len() {
                    return Err(cursor.error(t.column, format!("expected edge id {}, found {id}", edges.len())));
                }
                let t = cursor.next("side-zero half-edge")?;
                let side0 = parse_half_edge(&cursor, &t)?;
                let t = cursor.next("side-one half-edge")?;
                let side1 = parse_half_edge(&cursor, &t)?;
                cursor.keyword("len")?;
                let t = cursor.next("length")?;
                let length = parse_decimal(t.text).map_err(|m| cursor.error(t.column, m))?;
                let length_column = t.column;
                cursor.keyword("twist")?;
                let t = cursor.next("twist")?;
                let twist = parse_rational(t.text).map_err(|m| cursor.error(t.column, m))?;
                cursor.finish()?;
                edges.push(EdgeLine { line, length_column, edge: Edge::new(side0, side1), length, twist });
            }
            other => return Err(cursor.error(head.column, format!("unknown keyword `{other}`"))),
        }
    }

    let Some((header_line, vertices)) = header else {
        return Err(ParseError { line: last_line.max(1), column: 1, message: "missing `pants` header".into() });
    };
    let graph = PantsGraph::new(vertices, edges.iter().map(|e| e.edge));
    let report = graph.validate();
    // problems tied to one edge line are the most useful to report
    let attached = report.violations.iter().find(|v| v.edge().is_some());
    if let Some(v) = attached.or(report.violations.first()) {
        let line = v.edge().map_or(header_line, |e| edges[e].line);
        let column = 1;
        let message = match *v {
            Violation::HalfEdgeReused { first_edge, .. } => {
                format!("{v} (first used on line {})", edges[first_edge].line)
            }
            _ => v.to_string(),
        };
        return Err(ParseError { line, column, message });
    }
    let lengths = edges.iter().map(|e| e.length).collect();
    let twists: Vec<Rational> = edges.iter().map(|e| e.twist).collect();
    FnSurface::new(graph, lengths, twists).map_err(|e| match e {
        SurfaceError::LengthOutOfRange { edge, length } => ParseError {
            line: edges[edge].line,
            column: edges[edge].length_column,
            message: format!("length {length} outside [{MIN_LENGTH:e}, {MAX_LENGTH}]"),
        },
        other => ParseError { line: header_line, column: 1, message: other.to_string() },
    })
}

fn write_half_edge(out: &mut String, h: HalfEdge) -> fmt::Result {
    write!(out, "{}.{}", h.vertex, h.slot.index())
}

/// Canonical text of a surface. Lengths use the shortest representation that
/// parses back to the same `f64`.
pub fn emit_surface(surface: &FnSurface) -> String {
    let mut out = String::new();
    let graph = surface.graph();
    writeln!(out, "# genus {}", surface.genus()).unwrap();
    writeln!(out, "pants {}", graph.vertex_count()).unwrap();
    for (i, edge) in graph.edges().iter().enumerate() {
        let t = surface.twist(i);
        write!(out, "edge {i} ").unwrap();
        write_half_edge(&mut out, edge.sides[0]).unwrap();
        out.push(' ');
        write_half_edge(&mut out, edge.sides[1]).unwrap();
        writeln!(out, " len {} twist {}/{}", surface.length(i), t.numer(), t.denom()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = "pants 2\nedge 0 0.0 1.0 len 1 twist 0/1\nedge 1 0.1 1.1 len 2 twist 1/2\nedge 2 0.2 1.2 len 3 twist 0/1\n";

    #[test]
    fn theta_parses() {
        let s = parse_surface(THETA).unwrap();
        assert_eq!(s.genus(), 2);
        assert!(s.is_real());
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_decimal("1.5"), Ok(1.5));
        assert_eq!(parse_decimal("2e-3"), Ok(0.002));
        assert_eq!(parse_decimal(".5"), Ok(0.5));
        assert!(parse_decimal("1.2345678901234567").is_ok());
        assert!(parse_decimal("1.23456789012345678").is_err());
        assert!(parse_decimal("0.000000000000000000012").is_ok());
        for bad in ["", ".", "1,5", "nan", "inf", "-1", "1e", "0x10"] {
            assert!(parse_decimal(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_rational("3/6"), Ok(Rational::new(1, 2)));
        assert_eq!(parse_rational("-1/2"), Ok(Rational::new(-1, 2)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_surface("pants 2\nedge 0 0.0 1.0 len x twist 0/1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 20));
        let e = parse_surface("pants 2\nedge 0 0.0 1.3 len 1 twist 0/1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 14));
        let e = parse_surface("pants 2\nedge 1 0.0 1.0 len 1 twist 0/1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = parse_surface("edge 0 0.0 1.0 len 1 twist 0/1\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_surface("pants 2\nedge 0 0.0 1.0 len 1 twist 0/1 extra\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 32));
        let e = parse_surface("pants 2\nedge 0 0.0 1.0 len 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 21));
    }

    #[test]
    fn duplicate_half_edge_names_its_line() {
        let text = "pants 2\nedge 0 0.0 1.0 len 1 twist 0/1\nedge 1 0.1 1.0 len 1 twist 0/1\nedge 2 0.2 1.2 len 1 twist 0/1\n";
        let e = parse_surface(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("line 2"), "{}", e.message);
    }

    #[test]
    fn out_of_range_length_points_at_the_number() {
        let e = parse_surface(&THETA.replace("len 2 ", "len 51 ")).unwrap_err();
        assert_eq!((e.line, e.column), (3, 20));
    }

    #[test]
    fn round_trip() {
        let s = parse_surface(THETA).unwrap();
        let text = emit_surface(&s);
        assert_eq!(parse_surface(&text).unwrap(), s);
        assert_eq!(emit_surface(&parse_surface(&text).unwrap()), text);
    }
}
