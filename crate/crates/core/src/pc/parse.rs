//! Reader for the line-oriented presentation format:
//!
//! ```text
//! group <name>
//! prime <p>
//! ngens <n>
//! pow <i>: <e1> ... <en>      # image of g_i^p, identity when omitted
//! comm <j> <i>: <e1> ... <en> # value of [g_j, g_i], j > i
//! end
//! ```
//!
//! `#` starts a comment. A file may hold several group blocks.

use std::fmt;

use thiserror::Error;

use super::presentation::{PcPresentation, PresentationBuilder, PresentationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.kind
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..idx],
                    column: offset + s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: offset + s + 1,
        });
    }
    out
}

struct Block {
    name: String,
    prime: Option<u64>,
    ngens: Option<usize>,
    builder: Option<PresentationBuilder>,
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn parse_int<T: std::str::FromStr>(
    tok: Token<'_>,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    tok.text.parse().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

/// Parses every group block in `text`.
pub fn parse_presentations(text: &str) -> Result<Vec<PcPresentation>, ParseError> {
    let mut groups = Vec::new();
    let mut block: Option<Block> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = raw.split('#').next().unwrap_or("");
        let (head, values) = match content.find(':') {
            Some(pos) => (&content[..pos], Some((pos + 1, &content[pos + 1..]))),
            None => (content, None),
        };
        let tokens = tokenize(head, 0);
        let Some(&kw) = tokens.first() else {
            if let Some((pos, _)) = values {
                return Err(syntax(lineno, pos, "unexpected `:`"));
            }
            continue;
        };
        let expect_args = |n: usize| -> Result<(), ParseError> {
            if tokens.len() != n + 1 {
                let col = tokens.get(n + 1).map_or(kw.column, |t| t.column);
                return Err(syntax(
                    lineno,
                    col,
                    format!("`{}` takes {n} argument(s)", kw.text),
                ));
            }
            Ok(())
        };
        let no_values = || -> Result<(), ParseError> {
            match values {
                Some((pos, _)) => Err(syntax(lineno, pos, "unexpected `:`")),
                None => Ok(()),
            }
        };

        match kw.text {
            "group" => {
                no_values()?;
                if block.is_some() {
                    return Err(syntax(
                        lineno,
                        kw.column,
                        "`group` inside an open block (missing `end`)",
                    ));
                }
                expect_args(1)?;
                block = Some(Block {
                    name: tokens[1].text.to_string(),
                    prime: None,
                    ngens: None,
                    builder: None,
                });
            }
            "prime" | "ngens" => {
                no_values()?;
                let b = block.as_mut().ok_or_else(|| {
                    syntax(
                        lineno,
                        kw.column,
                        format!("`{}` outside a group block", kw.text),
                    )
                })?;
                expect_args(1)?;
                let arg = tokens[1];
                if kw.text == "prime" {
                    if b.prime.is_some() {
                        return Err(syntax(lineno, kw.column, "duplicate `prime`"));
                    }
                    b.prime = Some(parse_int(arg, lineno, "an integer")?);
                } else {
                    if b.ngens.is_some() {
                        return Err(syntax(lineno, kw.column, "duplicate `ngens`"));
                    }
                    b.ngens = Some(parse_int(arg, lineno, "an integer")?);
                }
                if let (Some(p), Some(n)) = (b.prime, b.ngens) {
                    let builder =
                        PresentationBuilder::new(b.name.clone(), p, n).map_err(|e| ParseError {
                            line: lineno,
                            column: arg.column,
                            kind: e.into(),
                        })?;
                    b.builder = Some(builder);
                }
            }
            "pow" | "comm" => {
                let b = block.as_mut().ok_or_else(|| {
                    syntax(
                        lineno,
                        kw.column,
                        format!("`{}` outside a group block", kw.text),
                    )
                })?;
                let builder = b.builder.as_mut().ok_or_else(|| {
                    syntax(lineno, kw.column, "relation before `prime` and `ngens`")
                })?;
                let Some((vpos, vtext)) = values else {
                    return Err(syntax(
                        lineno,
                        kw.column + head.trim_end().len(),
                        "expected `:`",
                    ));
                };
                let exps = tokenize(vtext, vpos)
                    .into_iter()
                    .map(|t| parse_int::<i64>(t, lineno, "an integer exponent"))
                    .collect::<Result<Vec<_>, _>>()?;
                let rel_err = |e: PresentationError| ParseError {
                    line: lineno,
                    column: kw.column,
                    kind: e.into(),
                };
                if kw.text == "pow" {
                    expect_args(1)?;
                    let i = parse_int(tokens[1], lineno, "a generator index")?;
                    builder.power(i, &exps).map_err(rel_err)?;
                } else {
                    expect_args(2)?;
                    let j = parse_int(tokens[1], lineno, "a generator index")?;
                    let i = parse_int(tokens[2], lineno, "a generator index")?;
                    builder.commutator(j, i, &exps).map_err(rel_err)?;
                }
            }
            "end" => {
                no_values()?;
                expect_args(0)?;
                let b = block
                    .take()
                    .ok_or_else(|| syntax(lineno, kw.column, "`end` without `group`"))?;
                let builder = b.builder.ok_or_else(|| {
                    let missing = if b.prime.is_none() { "prime" } else { "ngens" };
                    syntax(
                        lineno,
                        kw.column,
                        format!("group `{}` has no `{missing}`", b.name),
                    )
                })?;
                groups.push(builder.finish());
            }
            other => {
                return Err(syntax(
                    lineno,
                    kw.column,
                    format!("unknown keyword `{other}`"),
                ));
            }
        }
    }
    if let Some(b) = block {
        return Err(syntax(
            last_line.max(1),
            1,
            format!("group `{}` is missing `end`", b.name),
        ));
    }
    Ok(groups)
}

/// Parses a text expected to hold exactly one group block.
pub fn parse_presentation(text: &str) -> Result<PcPresentation, ParseError> {
    let mut groups = parse_presentations(text)?;
    match groups.len() {
        1 => Ok(groups.pop().unwrap()),
        n => Err(syntax(
            1,
            1,
            format!("expected exactly one group block, found {n}"),
        )),
    }
}
