//! Text formats for arrangements, weights and dependent-set lists.
//!
//! Arrangement: first line `n ell`, then `n` rows of `ell + 1` rationals.
//! Weights: one line of `n` rationals. Dependent-set list: header
//! `dep n ell`, then one `i,j,k m` line per set. Blank lines and `#`
//! comments are ignored everywhere.

use crate::arrangement::{CombType, Realization, Weights};
use crate::error::{Error, Result};
use crate::exterior::IndexSet;
use crate::ring::{parse_rational, Rational};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty content lines as token lists, with 1-based positions.
fn lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    toks.push(Token {
                        text: &content[s..pos],
                        line: i + 1,
                        column: s + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push((i + 1, toks));
        }
    }
    out
}

fn rational(tok: &Token<'_>) -> Result<Rational> {
    parse_rational(tok.text).map_err(|e| match e {
        Error::Parse { message, .. } => err(tok.line, tok.column, message),
        other => other,
    })
}

fn integer(tok: &Token<'_>, what: &str) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| err(tok.line, tok.column, format!("expected {what}, found {:?}", tok.text)))
}

pub fn parse_arrangement(text: &str) -> Result<Realization> {
    let lines = lines(text);
    let Some((hline, header)) = lines.first() else {
        return Err(err(1, 1, "empty arrangement file"));
    };
    if header.len() != 2 {
        return Err(err(*hline, 1, "header must be `n ell`"));
    }
    let n = integer(&header[0], "hyperplane count")?;
    let ell = integer(&header[1], "dimension")?;
    let body = &lines[1..];
    if body.len() != n {
        let at = body.last().map_or(*hline, |l| l.0);
        return Err(err(at, 1, format!("expected {n} rows, found {}", body.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (lno, toks) in body {
        if toks.len() != ell + 1 {
            return Err(err(*lno, 1, format!("expected {} entries, found {}", ell + 1, toks.len())));
        }
        rows.push(toks.iter().map(rational).collect::<Result<Vec<_>>>()?);
    }
    Realization::new(ell, rows)
}

pub fn parse_weights(text: &str, n: usize) -> Result<Weights> {
    let lines = lines(text);
    if lines.len() != 1 {
        return Err(err(lines.get(1).map_or(1, |l| l.0), 1, "weights must be a single line"));
    }
    let (lno, toks) = &lines[0];
    if toks.len() != n {
        return Err(err(*lno, 1, format!("expected {n} weights, found {}", toks.len())));
    }
    Ok(Weights::new(toks.iter().map(rational).collect::<Result<Vec<_>>>()?))
}

pub fn parse_dep_list(text: &str) -> Result<CombType> {
    let lines = lines(text);
    let Some((hline, header)) = lines.first() else {
        return Err(err(1, 1, "empty dependent-set file"));
    };
    if header.len() != 3 || header[0].text != "dep" {
        return Err(err(*hline, 1, "header must be `dep n ell`"));
    }
    let n = integer(&header[1], "hyperplane count")?;
    let ell = integer(&header[2], "dimension")?;
    let mut sets = Vec::new();
    for (lno, toks) in &lines[1..] {
        if toks.len() != 2 {
            return Err(err(*lno, 1, "expected `i,j,... multiplicity`"));
        }
        let mut s = IndexSet::EMPTY;
        let mut col = toks[0].column;
        for part in toks[0].text.split(',') {
            let i: usize = part
                .parse()
                .map_err(|_| err(*lno, col, format!("bad index {part:?}")))?;
            if i == 0 || i > n + 1 {
                return Err(err(*lno, col, format!("index {i} outside 1..={}", n + 1)));
            }
            s = s.insert(i);
            col += part.len() + 1;
        }
        let m = integer(&toks[1], "multiplicity")?;
        sets.push((s, m));
    }
    CombType::from_list(n, ell, sets)
}

/// Either a realization or a bare dependent-set list, chosen by the header.
pub enum TypeSource {
    Realized(Realization),
    Listed(CombType),
}

pub fn parse_type_source(text: &str) -> Result<TypeSource> {
    let first = lines(text).first().and_then(|l| l.1.first().map(|t| t.text == "dep"));
    if first == Some(true) {
        parse_dep_list(text).map(TypeSource::Listed)
    } else {
        parse_arrangement(text).map(TypeSource::Realized)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::frac;

    #[test]
    fn arrangement_round_trip() {
        let b = parse_arrangement("3 2\n0 1 0\n# comment\n0 0 1\n\n1/2 1 -1\n").unwrap();
        assert_eq!(b.n(), 3);
        assert_eq!(b.row(3)[0], frac(1, 2));
    }

    #[test]
    fn arrangement_errors_carry_positions() {
        match parse_arrangement("2 1\n0 1\n1 x/2\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_arrangement("2 1\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_arrangement(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_arrangement("2 1\n0 1\n3 0\n"), Err(Error::InvalidRealization(_))));
    }

    #[test]
    fn weights_and_dep_lists() {
        let w = parse_weights("-1/2 1/3 2", 3).unwrap();
        assert_eq!(w.get(4), frac(1, 2) - frac(1, 3) - frac(2, 1));
        assert!(parse_weights("1 2", 3).is_err());
        let t = parse_dep_list("dep 5 2\n3,4,5 2\n3,4 1\n").unwrap();
        assert_eq!(t.multiplicity(IndexSet::from_indices([3, 4, 5])), 2);
        match parse_dep_list("dep 5 2\n3,9 1\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
    }
}
