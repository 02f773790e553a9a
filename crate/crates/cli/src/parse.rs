//! The line-oriented algebra description format.
//!
//! One directive per line; `#` starts a comment; blank lines are skipped.
//!
//! ```text
//! field 2              # coefficient field: a prime, or 0 for the rationals
//! vertex 1
//! vertex 2
//! arrow a: 1 -> 2      # name: source -> target
//! relation a b         # the path "first a, then b" is declared zero
//! bound nodes 100000   # optional cap on enumerated pairs
//! bound dim 4096       # optional cap on module dimension
//! ```
//!
//! A relation lists arrow names in traversal order: `relation a b` kills the
//! path that first traverses `a` and then `b`. When no `field` line is
//! present the field defaults to `F_2`. Every diagnostic carries the
//! 1-based line and column of the offending token.

use quiver_algebra::{Arrow, BoundQuiverPresentation, FieldSpec};
use std::fmt;

/// What went wrong while reading a description file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Malformed directive, unknown keyword, bad token, duplicate name.
    Syntax,
    /// An arrow endpoint names a vertex that was never declared.
    UnknownVertex,
    /// Consecutive arrows of a relation do not compose.
    NonComposablePath,
    /// `field p` with `p` composite, one, or out of range.
    NonPrimeCharacteristic,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UnknownVertex => "unknown vertex",
            ParseErrorKind::NonComposablePath => "non-composable path",
            ParseErrorKind::NonPrimeCharacteristic => "non-prime characteristic",
        };
        f.write_str(s)
    }
}

/// A diagnostic with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}: {}",
            self.line, self.column, self.kind, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Optional enumeration caps read from `bound` lines. Command-line flags
/// override these; absent values fall back to the built-in defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FileBounds {
    pub node_bound: Option<usize>,
    pub dim_bound: Option<usize>,
}

type Tok = (usize, String);

/// Splits a line into `(column, token)` pairs, dropping `#` comments.
/// Columns count characters starting at 1.
fn tokenize(line: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0usize;
    for (i, ch) in line.chars().enumerate() {
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() {
            if !cur.is_empty() {
                out.push((start + 1, std::mem::take(&mut cur)));
            }
        } else {
            if cur.is_empty() {
                start = i;
            }
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push((start + 1, cur));
    }
    out
}

/// Column just past the final token, for "something is missing" messages.
fn after(toks: &[Tok]) -> usize {
    toks.last()
        .map(|(c, t)| c + t.chars().count())
        .unwrap_or(1)
}

fn err(kind: ParseErrorKind, line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        kind,
        line,
        column,
        message: message.into(),
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    err(ParseErrorKind::Syntax, line, column, message)
}

/// Parses a description file into a presentation plus any `bound` lines.
pub fn parse_algebra_spec(
    text: &str,
) -> Result<(BoundQuiverPresentation, FileBounds), ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relations: Vec<Vec<usize>> = Vec::new();
    let mut bounds = FileBounds::default();

    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let toks = tokenize(raw);
        let Some((kcol, kw)) = toks.first().map(|(c, t)| (*c, t.as_str())) else {
            continue;
        };
        match kw {
            "field" => {
                if field.is_some() {
                    return Err(syntax(line, kcol, "the field was already declared"));
                }
                let (col, tok) = toks
                    .get(1)
                    .ok_or_else(|| syntax(line, after(&toks), "expected a characteristic after `field`"))?;
                if toks.len() > 2 {
                    return Err(syntax(line, toks[2].0, format!("unexpected token `{}`", toks[2].1)));
                }
                let p: u64 = tok.parse().map_err(|_| {
                    syntax(line, *col, format!("`{tok}` is not a nonnegative integer"))
                })?;
                field = Some(if p == 0 {
                    FieldSpec::Rationals
                } else {
                    FieldSpec::prime(p).map_err(|e| {
                        err(ParseErrorKind::NonPrimeCharacteristic, line, *col, e.to_string())
                    })?
                });
            }
            "vertex" => {
                let (col, name) = toks
                    .get(1)
                    .ok_or_else(|| syntax(line, after(&toks), "expected a vertex name"))?;
                if toks.len() > 2 {
                    return Err(syntax(line, toks[2].0, format!("unexpected token `{}`", toks[2].1)));
                }
                if vertices.iter().any(|v| v == name) {
                    return Err(syntax(line, *col, format!("duplicate vertex name `{name}`")));
                }
                vertices.push(name.clone());
            }
            "arrow" => {
                // Accepted shapes: `arrow a: 1 -> 2` and `arrow a : 1 -> 2`.
                let (ncol, first) = toks
                    .get(1)
                    .ok_or_else(|| syntax(line, after(&toks), "expected an arrow name"))?;
                let (name, rest) = if let Some(stripped) = first.strip_suffix(':') {
                    (stripped.to_string(), &toks[2..])
                } else if toks.get(2).map(|(_, t)| t.as_str()) == Some(":") {
                    (first.clone(), &toks[3..])
                } else {
                    return Err(syntax(
                        line,
                        ncol + first.chars().count(),
                        "expected `:` after the arrow name",
                    ));
                };
                if name.is_empty() {
                    return Err(syntax(line, *ncol, "empty arrow name"));
                }
                if arrows.iter().any(|a| a.name == name) {
                    return Err(syntax(line, *ncol, format!("duplicate arrow name `{name}`")));
                }
                let [src, sep, tgt] = rest else {
                    return Err(syntax(
                        line,
                        after(&toks),
                        "expected `source -> target` after the arrow name",
                    ));
                };
                if sep.1 != "->" {
                    return Err(syntax(line, sep.0, format!("expected `->`, found `{}`", sep.1)));
                }
                let lookup = |(col, tok): &Tok| {
                    vertices.iter().position(|v| v == tok).ok_or_else(|| {
                        err(
                            ParseErrorKind::UnknownVertex,
                            line,
                            *col,
                            format!("vertex `{tok}` is not declared; add `vertex {tok}` first"),
                        )
                    })
                };
                arrows.push(Arrow {
                    name,
                    source: lookup(src)?,
                    target: lookup(tgt)?,
                });
            }
            "relation" => {
                if toks.len() < 3 {
                    return Err(syntax(
                        line,
                        after(&toks),
                        "a monomial relation needs at least two arrow names",
                    ));
                }
                let mut rel: Vec<usize> = Vec::with_capacity(toks.len() - 1);
                for (col, tok) in &toks[1..] {
                    let Some(i) = arrows.iter().position(|a| &a.name == tok) else {
                        return Err(syntax(
                            line,
                            *col,
                            format!("unknown arrow `{tok}`; declare it with `arrow` first"),
                        ));
                    };
                    if let Some(&prev) = rel.last() {
                        let (x, y) = (&arrows[prev], &arrows[i]);
                        if x.target != y.source {
                            return Err(err(
                                ParseErrorKind::NonComposablePath,
                                line,
                                *col,
                                format!(
                                    "`{}` ends at vertex `{}` but `{}` starts at vertex `{}`",
                                    x.name, vertices[x.target], y.name, vertices[y.source]
                                ),
                            ));
                        }
                    }
                    rel.push(i);
                }
                relations.push(rel);
            }
            "bound" => {
                let (wcol, which) = toks
                    .get(1)
                    .map(|(c, t)| (*c, t.as_str()))
                    .ok_or_else(|| syntax(line, after(&toks), "expected `nodes` or `dim`"))?;
                let (vcol, val) = toks
                    .get(2)
                    .ok_or_else(|| syntax(line, after(&toks), "expected a value"))?;
                if toks.len() > 3 {
                    return Err(syntax(line, toks[3].0, format!("unexpected token `{}`", toks[3].1)));
                }
                let k: usize = val.parse().map_err(|_| {
                    syntax(line, *vcol, format!("`{val}` is not a nonnegative integer"))
                })?;
                let slot = match which {
                    "nodes" => &mut bounds.node_bound,
                    "dim" => &mut bounds.dim_bound,
                    other => {
                        return Err(syntax(
                            line,
                            wcol,
                            format!("unknown bound `{other}`; expected `nodes` or `dim`"),
                        ))
                    }
                };
                if slot.is_some() {
                    return Err(syntax(line, wcol, format!("bound `{which}` was already set")));
                }
                *slot = Some(k);
            }
            other => {
                return Err(syntax(
                    line,
                    kcol,
                    format!(
                        "unknown directive `{other}`; expected field, vertex, arrow, relation, or bound"
                    ),
                ));
            }
        }
    }

    if vertices.is_empty() {
        return Err(syntax(1, 1, "the file declares no vertices"));
    }
    let field = field.unwrap_or(FieldSpec::Prime(2));
    let pres = BoundQuiverPresentation::new(field, vertices, arrows, relations)
        .map_err(|e| syntax(1, 1, e.to_string()))?;
    Ok((pres, bounds))
}

/// Serializes a presentation back into the file format. Applied to the
/// output of [`parse_algebra_spec`] this round-trips exactly.
pub fn format_algebra_spec(pres: &BoundQuiverPresentation, bounds: &FileBounds) -> String {
    let mut s = String::new();
    s.push_str(&format!("field {}\n", pres.field.characteristic()));
    for v in &pres.vertices {
        s.push_str(&format!("vertex {v}\n"));
    }
    for a in &pres.arrows {
        s.push_str(&format!(
            "arrow {}: {} -> {}\n",
            a.name, pres.vertices[a.source], pres.vertices[a.target]
        ));
    }
    for rel in &pres.relations {
        s.push_str("relation");
        for &i in rel {
            s.push(' ');
            s.push_str(&pres.arrows[i].name);
        }
        s.push('\n');
    }
    if let Some(k) = bounds.node_bound {
        s.push_str(&format!("bound nodes {k}\n"));
    }
    if let Some(k) = bounds.dim_bound {
        s.push_str(&format!("bound dim {k}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_loop_algebra_example() {
        let (pres, bounds) =
            parse_algebra_spec("field 2\nvertex 1\narrow x: 1 -> 1\nrelation x x\n").unwrap();
        assert_eq!(pres.field, FieldSpec::Prime(2));
        assert_eq!(pres.vertices, vec!["1".to_string()]);
        assert_eq!(pres.arrows.len(), 1);
        assert_eq!((pres.arrows[0].source, pres.arrows[0].target), (0, 0));
        assert_eq!(pres.relations, vec![vec![0, 0]]);
        assert_eq!(bounds, FileBounds::default());
    }

    #[test]
    fn accepts_comments_blanks_spaced_colons_and_bounds() {
        let text = "# a two-point path algebra\n\nvertex 1\nvertex 2   # target\narrow a : 1 -> 2\nbound nodes 50\nbound dim 12\n";
        let (pres, bounds) = parse_algebra_spec(text).unwrap();
        assert_eq!(pres.field, FieldSpec::Prime(2), "field defaults to F_2");
        assert_eq!(pres.arrows[0].name, "a");
        assert_eq!(bounds.node_bound, Some(50));
        assert_eq!(bounds.dim_bound, Some(12));
    }

    #[test]
    fn undeclared_vertex_is_flagged_at_its_token() {
        let e = parse_algebra_spec("vertex 1\narrow a: 1 -> 3\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVertex);
        assert_eq!((e.line, e.column), (2, 15));
        assert!(e.message.contains("`3`"), "{}", e.message);
    }

    #[test]
    fn non_composable_relation_is_flagged_at_the_second_arrow() {
        let text = "vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelation a b\n";
        let e = parse_algebra_spec(text).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonComposablePath);
        assert_eq!((e.line, e.column), (5, 12));
        assert!(e.message.contains("`a` ends at vertex `2`"), "{}", e.message);
    }

    #[test]
    fn composite_characteristic_is_rejected() {
        let e = parse_algebra_spec("field 6\nvertex 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonPrimeCharacteristic);
        assert_eq!((e.line, e.column), (1, 7));

        let (pres, _) = parse_algebra_spec("field 0\nvertex 1\n").unwrap();
        assert_eq!(pres.field, FieldSpec::Rationals);
    }

    #[test]
    fn assorted_syntax_errors_carry_positions() {
        let cases: Vec<(&str, (usize, usize), &str)> = vec![
            ("vertex 1\nfrobnicate\n", (2, 1), "unknown directive"),
            ("vertex 1\nvertex 1\n", (2, 8), "duplicate vertex"),
            ("vertex 1\narrow x 1 -> 1\n", (2, 8), "expected `:`"),
            ("vertex 1\narrow x: 1 -> 1\nrelation x\n", (3, 11), "at least two"),
            ("vertex 1\narrow x: 1 -> 1\nrelation x y\n", (3, 12), "unknown arrow"),
            ("vertex 1\nbound widgets 3\n", (2, 7), "unknown bound"),
            ("", (1, 1), "no vertices"),
        ];
        for (text, pos, needle) in cases {
            let e = parse_algebra_spec(text).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::Syntax, "{text:?}");
            assert_eq!((e.line, e.column), pos, "{text:?}: {}", e.message);
            assert!(e.message.contains(needle), "{text:?}: {}", e.message);
        }
    }

    #[test]
    fn parse_format_parse_round_trips() {
        let text = "field 3\nvertex u\nvertex v\nvertex w\narrow a: u -> v\narrow b: v -> w\nrelation a b\nbound nodes 99\n";
        let (pres, bounds) = parse_algebra_spec(text).unwrap();
        let printed = format_algebra_spec(&pres, &bounds);
        let (pres2, bounds2) = parse_algebra_spec(&printed).unwrap();
        assert_eq!(pres, pres2);
        assert_eq!(bounds, bounds2);
        assert_eq!(printed, format_algebra_spec(&pres2, &bounds2));
    }
}
