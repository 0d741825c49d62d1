//! Line-oriented text format for diagrams.
//!
//! ```text
//! # trefoil staked at two bigons
//! crossings 3
//! edge (0,0) (1,1)
//! ...
//! over 0 1
//! ...
//! puncture (0,2)
//! ```
//!
//! `#` starts a comment. Whitespace inside a line is insignificant. The
//! first directive must be `crossings N`; it is followed by exactly `2N`
//! `edge` lines, exactly one `over` line per crossing, and any number of
//! `puncture` lines, in any order.

use std::fmt::Write as _;

use crate::diagram::{Dart, Diagram, PunctureMark};
use crate::error::{DiagramError, ParseError};

struct Cursor<'a> {
    line: usize,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column(), message)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.bytes.len()
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or("")
    }

    fn expect(&mut self, ch: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", ch as char)))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ParseError::new(self.line, start + 1, "integer too large"))
    }

    /// `(a,b)` with `b` in 0..=3.
    fn pair(&mut self, what: &str) -> Result<(usize, u8, usize), ParseError> {
        self.skip_ws();
        let col = self.column();
        self.expect(b'(')?;
        let a = self.number()?;
        self.expect(b',')?;
        self.skip_ws();
        let slot_col = self.column();
        let b = self.number()?;
        self.expect(b')')?;
        if b > 3 {
            return Err(ParseError::new(self.line, slot_col, format!("{what} index {b} out of range 0..3")));
        }
        Ok((a, b as u8, col))
    }
}

/// Parses the text format into a [`Diagram`].
pub fn parse_diagram(text: &str) -> Result<Diagram, ParseError> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(Dart, Dart, usize, usize)> = Vec::new();
    let mut axes: Vec<Option<u8>> = Vec::new();
    let mut punctures = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor { line: line_no, bytes: content.as_bytes(), pos: 0 };
        if cur.at_end() {
            continue;
        }
        let word_col = cur.column();
        let word = cur.word();
        let check_range = |c: usize, col: usize, n: usize| {
            if c >= n {
                Err(ParseError::new(line_no, col, format!("crossing index {c} out of range (N = {n})")))
            } else {
                Ok(())
            }
        };
        match (word, n) {
            ("crossings", None) => {
                let count = cur.number()?;
                n = Some(count);
                axes = vec![None; count];
            }
            ("crossings", Some(_)) => {
                return Err(ParseError::new(line_no, word_col, "duplicate 'crossings' directive"));
            }
            (_, None) => {
                return Err(ParseError::new(line_no, word_col, "first directive must be 'crossings N'"));
            }
            ("edge", Some(n)) => {
                let (c1, s1, col1) = cur.pair("slot")?;
                check_range(c1, col1, n)?;
                let (c2, s2, col2) = cur.pair("slot")?;
                check_range(c2, col2, n)?;
                pairs.push((Dart::new(c1, s1), Dart::new(c2, s2), line_no, col1));
            }
            ("over", Some(n)) => {
                let col = {
                    cur.skip_ws();
                    cur.column()
                };
                let c = cur.number()?;
                check_range(c, col, n)?;
                cur.skip_ws();
                let axis_col = cur.column();
                let a = cur.number()?;
                if a > 1 {
                    return Err(ParseError::new(line_no, axis_col, format!("over-axis must be 0 or 1, found {a}")));
                }
                if axes[c].is_some() {
                    return Err(ParseError::new(line_no, col, format!("duplicate over-axis declaration for crossing {c}")));
                }
                axes[c] = Some(a as u8);
            }
            ("puncture", Some(n)) => {
                let (c, j, col) = cur.pair("corner")?;
                check_range(c, col, n)?;
                punctures.push(PunctureMark::new(c, j));
            }
            (other, Some(_)) => {
                return Err(ParseError::new(line_no, word_col, format!("unknown directive '{other}'")));
            }
        }
        if !cur.at_end() {
            return Err(cur.err("unexpected trailing input"));
        }
    }

    let end = last_line.max(1);
    let n = n.ok_or_else(|| ParseError::new(end, 1, "missing 'crossings N' directive"))?;

    let mut used: Vec<Option<usize>> = vec![None; 4 * n];
    for &(a, b, line, col) in &pairs {
        if a == b {
            return Err(ParseError::new(line, col, format!("dart paired with itself: {a}")));
        }
        for d in [a, b] {
            if let Some(prev) = used[d.index()] {
                return Err(ParseError::new(line, col, format!("dart {d} referenced twice in edges (first on line {prev})")));
            }
            used[d.index()] = Some(line);
        }
    }
    if let Some(i) = used.iter().position(Option::is_none) {
        return Err(ParseError::new(end, 1, format!("dart {} unreferenced", Dart::from_index(i))));
    }
    if pairs.len() != 2 * n {
        return Err(ParseError::new(end, 1, format!("expected {} edges, found {}", 2 * n, pairs.len())));
    }
    let axes = axes
        .iter()
        .enumerate()
        .map(|(c, a)| a.ok_or_else(|| ParseError::new(end, 1, format!("missing over-axis for crossing {c}"))))
        .collect::<Result<Vec<_>, _>>()?;

    let plain: Vec<_> = pairs.iter().map(|&(a, b, _, _)| (a, b)).collect();
    Diagram::new(n, &plain, axes, punctures).map_err(|e: DiagramError| ParseError::new(end, 1, e.to_string()))
}

/// Canonical text for a diagram: edges in edge-id order, punctures in
/// stored order.
pub fn serialize_diagram(d: &Diagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "crossings {}", d.n_crossings());
    for e in d.edges() {
        let _ = writeln!(out, "edge {} {}", e.lo, e.hi);
    }
    for (c, a) in d.axes().iter().enumerate() {
        let _ = writeln!(out, "over {c} {a}");
    }
    for p in d.punctures() {
        let _ = writeln!(out, "puncture {}", p.corner);
    }
    out
}
