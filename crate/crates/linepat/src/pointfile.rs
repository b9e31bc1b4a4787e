//! Point-set text format: one point per line as two fields `A B`, each an
//! integer or a fraction `p/q`. Blank lines and lines starting with `#` are
//! skipped.

use std::fmt::Write as _;
use std::path::Path;

use linepat_core::rational::parse as parse_rational;
use linepat_core::{CoeffPoint, EuclidPoint, PointSet, Rational};

#[derive(Debug, thiserror::Error)]
pub enum PointFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid point literal {literal:?}: {message}")]
    Literal { literal: String, message: String },
}

pub fn parse(label: &str, text: &str) -> Result<PointSet, PointFileError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| PointFileError::Line { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(format!("expected two fields, found {}", fields.len())));
        }
        let a = parse_rational(fields[0]).map_err(|e| bad(format!("{e}: {:?}", fields[0])))?;
        let b = parse_rational(fields[1]).map_err(|e| bad(format!("{e}: {:?}", fields[1])))?;
        points.push(CoeffPoint::new(a, b).map_err(|e| bad(e.to_string()))?);
    }
    Ok(PointSet::new(label, points))
}

pub fn read(path: &Path) -> Result<PointSet, PointFileError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| PointFileError::Io { path: path.display().to_string(), source })?;
    let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    parse(label, &text)
}

pub fn format(s: &PointSet) -> String {
    let mut out = String::new();
    if !s.label().is_empty() {
        writeln!(out, "# {}", s.label()).unwrap();
    }
    for p in s {
        writeln!(out, "{} {}", p.a(), p.b()).unwrap();
    }
    out
}

/// Parses a `"p/q,r/s"` pair.
pub fn parse_pair(literal: &str) -> Result<(Rational, Rational), PointFileError> {
    let bad = |message: String| PointFileError::Literal { literal: literal.to_string(), message };
    let (x, y) = literal.split_once(',').ok_or_else(|| bad("expected two comma-separated values".into()))?;
    let x = parse_rational(x.trim()).map_err(|e| bad(e.to_string()))?;
    let y = parse_rational(y.trim()).map_err(|e| bad(e.to_string()))?;
    Ok((x, y))
}

pub fn parse_point(literal: &str) -> Result<CoeffPoint, PointFileError> {
    let (a, b) = parse_pair(literal)?;
    CoeffPoint::new(a, b).map_err(|e| PointFileError::Literal { literal: literal.to_string(), message: e.to_string() })
}

pub fn parse_euclid(literal: &str) -> Result<EuclidPoint, PointFileError> {
    let (x, y) = parse_pair(literal)?;
    Ok(EuclidPoint::new(x, y))
}

/// Comma-separated list of rationals, e.g. a lattice spec or a view box.
pub fn parse_list(literal: &str) -> Result<Vec<Rational>, PointFileError> {
    literal
        .split(',')
        .map(|f| {
            parse_rational(f.trim())
                .map_err(|e| PointFileError::Literal { literal: literal.to_string(), message: e.to_string() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_keeps_points() {
        let s = parse("t", "# comment\n1 0\n\n  -1/2 3/4\n2 2\n").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(parse("t", &format(&s)).unwrap().points(), s.points());
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse("t", "1 0\n1 2 3\n").unwrap_err();
        assert!(e.to_string().starts_with("line 2:"), "{e}");
        let e = parse("t", "1 0\n\n0 0\n").unwrap_err();
        assert!(e.to_string().starts_with("line 3:"), "{e}");
        let e = parse("t", "0.5 1\n").unwrap_err();
        assert!(e.to_string().starts_with("line 1:"), "{e}");
    }

    #[test]
    fn pair_literals() {
        let p = parse_point("1/2,-3").unwrap();
        assert_eq!(p.to_string(), "(1/2,-3)");
        assert!(parse_point("0,0").is_err());
        assert!(parse_point("1").is_err());
        assert_eq!(parse_list("1/3,1/5,2/7,1/2,4,3").unwrap().len(), 6);
    }
}
