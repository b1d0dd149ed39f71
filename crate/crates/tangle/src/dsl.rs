//! Text format for tangle words.
//!
//! ```text
//! # comment
//! type: v^^ | ^v^
//! X+(2) X+(1)
//! ```
//!
//! The header gives the top and bottom boundaries (`v` = down, `^` = up);
//! the bottom may be omitted and is then derived. Slices are read top to
//! bottom, separated by whitespace, `,` or `;`:
//!
//! | token   | slice                         |
//! |---------|-------------------------------|
//! | `X+(p)` | crossing, first strand over   |
//! | `X-(p)` | crossing, first strand under  |
//! | `U(p)`  | local minimum (cup)           |
//! | `N>(p)` | local maximum, left to right  |
//! | `N<(p)` | local maximum, right to left  |
//! | `S+(p)` | same as `X+(p)`               |
//! | `S-(p)` | same as `X-(p)`               |
//! | `E(p)`  | `U(p)` followed by the cap that restores the level |

use std::fmt;

use crate::types::{BoundarySeq, Hand, MaxTag, Orientation, Slice, TangleType};
use crate::{TangleError, TangleWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub line: usize,
    pub column: usize,
    /// 1-based index of the offending slice token, if any.
    pub token: Option<usize>,
    pub msg: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)?;
        if let Some(t) = self.token {
            write!(f, " (token {t})")?;
        }
        write!(f, ": {}", self.msg)
    }
}

impl std::error::Error for DslError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Slice(Slice),
    E(usize),
}

struct Located {
    tok: Tok,
    offset: usize,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

struct Src<'a> {
    text: &'a str,
    base: usize,
}

impl Src<'_> {
    fn err(&self, offset: usize, token: Option<usize>, msg: impl Into<String>) -> DslError {
        let (line, column) = line_col(self.text, self.base + offset);
        DslError { line, column, token, msg: msg.into() }
    }
}

pub fn parse_boundary(s: &str) -> Result<BoundarySeq, String> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'v' | 'V' | '↓' => Ok(Orientation::Down),
            '^' | '↑' => Ok(Orientation::Up),
            _ => Err(format!("unexpected boundary symbol {c:?}")),
        })
        .collect()
}

/// Parses `"top | bottom"` or just `"top"` (bottom then derived).
fn parse_type_spec(s: &str) -> Result<(BoundarySeq, Option<BoundarySeq>), String> {
    match s.split_once('|') {
        Some((a, b)) => Ok((parse_boundary(a)?, Some(parse_boundary(b)?))),
        None => Ok((parse_boundary(s)?, None)),
    }
}

fn lex(src: &Src, body: &str) -> Result<Vec<Located>, DslError> {
    let b = body.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() || c == b',' || c == b';' {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < b.len() && b[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tokno = out.len() + 1;
        while i < b.len() && b[i] != b'(' && !b[i].is_ascii_whitespace() {
            i += 1;
        }
        let name = &body[start..i];
        if i >= b.len() || b[i] != b'(' {
            return Err(src.err(start, Some(tokno), format!("expected '(' after {name:?}")));
        }
        i += 1;
        let num_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let pos: usize = body[num_start..i]
            .parse()
            .map_err(|_| src.err(num_start, Some(tokno), "expected a position"))?;
        if i >= b.len() || b[i] != b')' {
            return Err(src.err(i.min(b.len()), Some(tokno), "expected ')'"));
        }
        i += 1;
        if pos == 0 {
            return Err(src.err(num_start, Some(tokno), "positions are 1-based"));
        }
        let tok = match name {
            "X+" | "S+" => Tok::Slice(Slice::Cross { pos, hand: Hand::FirstOver }),
            "X-" | "S-" => Tok::Slice(Slice::Cross { pos, hand: Hand::FirstUnder }),
            "U" => Tok::Slice(Slice::Min { pos }),
            "N>" => Tok::Slice(Slice::Max { pos, tag: MaxTag::LeftToRight }),
            "N<" => Tok::Slice(Slice::Max { pos, tag: MaxTag::RightToLeft }),
            "E" => Tok::E(pos),
            _ => return Err(src.err(start, Some(tokno), format!("unknown slice {name:?}"))),
        };
        out.push(Located { tok, offset: start });
    }
    Ok(out)
}

fn build(
    src: &Src,
    top: BoundarySeq,
    bottom: Option<BoundarySeq>,
    toks: &[Located],
    header_err: &dyn Fn(String) -> DslError,
) -> Result<TangleWord, DslError> {
    let mut slices = Vec::new();
    let mut owner = Vec::new();
    let mut level = top.clone();
    for (k, t) in toks.iter().enumerate() {
        let err = |e: TangleError| src.err(t.offset, Some(k + 1), strip_slice_prefix(&e));
        let expanded: Vec<Slice> = match t.tok {
            Tok::Slice(s) => vec![s],
            Tok::E(pos) => {
                if pos >= level.len() {
                    return Err(err(TangleError::PositionOutOfRange { slice: 0, pos, width: level.len() }));
                }
                vec![Slice::Min { pos }, Slice::Max { pos, tag: MaxTag::with_left(level[pos - 1]) }]
            }
        };
        for s in expanded {
            level = s.apply(slices.len(), &level).map_err(err)?;
            slices.push(s);
            owner.push(k);
        }
    }
    let bottom = bottom.unwrap_or_else(|| level.clone());
    let ty = TangleType::new(top, bottom).map_err(|e| header_err(e.to_string()))?;
    TangleWord::validate(ty, slices).map_err(|e| header_err(e.to_string()))
}

fn strip_slice_prefix(e: &TangleError) -> String {
    let s = e.to_string();
    match s.split_once(": ") {
        Some((head, rest)) if head.starts_with("slice ") => rest.to_string(),
        _ => s,
    }
}

/// Parses a word given its type spec (`"vv | vv"`) and slice tokens.
pub fn parse_word(type_spec: &str, body: &str) -> Result<TangleWord, DslError> {
    let hsrc = Src { text: type_spec, base: 0 };
    let (top, bottom) = parse_type_spec(type_spec).map_err(|m| hsrc.err(0, None, m))?;
    let src = Src { text: body, base: 0 };
    let toks = lex(&src, body)?;
    build(&src, top, bottom, &toks, &|m| hsrc.err(0, None, m))
}

/// Parses a document with a `type:` header line followed by slice tokens.
pub fn parse_document(text: &str) -> Result<TangleWord, DslError> {
    let src = Src { text, base: 0 };
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            offset += line.len();
            continue;
        }
        let Some(rest) = trimmed.strip_prefix("type:") else {
            return Err(src.err(offset, None, "expected a 'type:' header"));
        };
        let header_offset = offset;
        let (top, bottom) = parse_type_spec(rest.trim()).map_err(|m| src.err(header_offset, None, m))?;
        let body_start = offset + line.len();
        let body = &text[body_start..];
        let bsrc = Src { text, base: body_start };
        let toks = lex(&bsrc, body)?;
        return build(&bsrc, top, bottom, &toks, &|m| src.err(header_offset, None, m));
    }
    Err(src.err(text.len(), None, "missing 'type:' header"))
}
