//! The line-oriented input format.
//!
//! ```text
//! # SO(8)/T^2
//! generators
//!   x1, x2 deg 2
//! relations
//!   x1^2 + x2^2 + x1*x2
//!   (x1 + x2)^2*x1^2*x2^2
//! exterior
//!   z1, z2 deg 7
//! ```
//!
//! or a single catalog reference such as `space A_partial n=4 k=2`.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{parse_expr, parse_polynomial, Expr, GradedGenerator, Vars};
use crate::catalog::CatalogCase;
use crate::sullivan::CohomPresentation;
use crate::{Error, Result};

/// A parsed specification: a catalog reference or a custom presentation.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecInput {
    Catalog(CatalogCase),
    Custom(CohomPresentation),
}

impl fmt::Display for SpecInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecInput::Catalog(case) => writeln!(f, "space {case}"),
            SpecInput::Custom(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Generators,
    Relations,
    Exterior,
}

/// A meaningful line: its number, the column of its first character and
/// the text with comments and surrounding whitespace removed.
struct Line<'a> {
    number: usize,
    column: usize,
    text: &'a str,
}

fn syntax(line: &Line<'_>, offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: line.number,
        column: line.column + offset,
        message: message.into(),
    }
}

fn semantic(line: usize, message: impl Into<String>) -> Error {
    Error::Semantic {
        line,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn meaningful_lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = body.chars().take_while(|c| c.is_whitespace()).count();
        out.push(Line {
            number: i + 1,
            column: lead + 1,
            text: trimmed,
        });
    }
    out
}

fn parse_space(line: &Line<'_>) -> Result<CatalogCase> {
    let mut words = Vec::new();
    let mut offset = 0;
    for w in line.text.split(' ') {
        if !w.is_empty() {
            words.push((offset, w));
        }
        offset += w.chars().count() + 1;
    }
    let (name_at, name) = *words
        .get(1)
        .ok_or_else(|| syntax(line, offset, "expected a catalog case name"))?;
    if !is_identifier(name) {
        return Err(syntax(
            line,
            name_at,
            format!("`{name}` is not a case name"),
        ));
    }
    let mut params = Vec::new();
    for &(at, w) in &words[2..] {
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| syntax(line, at, "expected `key=value`"))?;
        if !is_identifier(key) {
            return Err(syntax(line, at, format!("`{key}` is not a parameter name")));
        }
        let value: i64 = value.parse().map_err(|_| {
            syntax(
                line,
                at + key.len() + 1,
                format!("`{value}` is not an integer"),
            )
        })?;
        params.push((key.to_string(), value));
    }
    CatalogCase::from_parts(name, &params).map_err(|e| semantic(line.number, e.to_string()))
}

/// Parses `names deg D`.
fn parse_declaration(line: &Line<'_>) -> Result<(Vec<String>, u32)> {
    let text = line.text;
    let split = text
        .match_indices("deg")
        .find(|(i, _)| {
            let before = text[..*i].chars().last();
            let after = text[i + 3..].chars().next();
            before.is_some_and(char::is_whitespace) && after.is_some_and(char::is_whitespace)
        })
        .map(|(i, _)| i)
        .ok_or_else(|| syntax(line, 0, "expected `<names> deg <degree>`"))?;
    let mut names = Vec::new();
    let mut offset = 0;
    for part in text[..split].split(',') {
        let name = part.trim();
        let at = offset + part.chars().take_while(|c| c.is_whitespace()).count();
        if !is_identifier(name) {
            return Err(syntax(
                line,
                at,
                format!("`{name}` is not a generator name"),
            ));
        }
        names.push(name.to_string());
        offset += part.chars().count() + 1;
    }
    let degree_text = text[split + 3..].trim();
    let degree_at = text.len() - text[split + 3..].trim_start().len();
    let degree: u32 = degree_text
        .parse()
        .map_err(|_| syntax(line, degree_at, format!("`{degree_text}` is not a degree")))?;
    if degree == 0 {
        return Err(semantic(line.number, "degrees must be positive"));
    }
    Ok((names, degree))
}

fn collect_vars(e: &Expr, out: &mut Vec<(String, usize)>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var { name, column } => out.push((name.clone(), *column)),
        Expr::Neg(a) | Expr::Pow(a, _) => collect_vars(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

/// Parses a specification into a validated presentation or catalog case.
pub fn parse_spec(text: &str) -> Result<SpecInput> {
    let lines = meaningful_lines(text);
    let Some(first) = lines.first() else {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "empty specification".into(),
        });
    };
    if first.text == "space" || first.text.starts_with("space ") {
        if let Some(extra) = lines.get(1) {
            return Err(syntax(
                extra,
                0,
                "a `space` line must be the only statement",
            ));
        }
        return parse_space(first).map(SpecInput::Catalog);
    }

    let mut section: Option<Section> = None;
    let mut seen: Vec<Section> = Vec::new();
    let mut generators: Vec<(GradedGenerator, usize)> = Vec::new();
    let mut exterior: Vec<(GradedGenerator, usize)> = Vec::new();
    let mut relations: Vec<&Line<'_>> = Vec::new();
    for line in &lines {
        let header = match line.text {
            "generators" => Some(Section::Generators),
            "relations" => Some(Section::Relations),
            "exterior" => Some(Section::Exterior),
            _ => None,
        };
        if let Some(h) = header {
            if seen.contains(&h) {
                return Err(semantic(
                    line.number,
                    format!("section `{}` appears twice", line.text),
                ));
            }
            seen.push(h);
            section = Some(h);
            continue;
        }
        match section {
            None => {
                return Err(syntax(
                    line,
                    0,
                    "expected `generators`, `relations`, `exterior` or `space`",
                ))
            }
            Some(Section::Relations) => relations.push(line),
            Some(s) => {
                let (names, degree) = parse_declaration(line)?;
                let odd = degree % 2 == 1;
                if s == Section::Generators && odd {
                    return Err(semantic(
                        line.number,
                        format!("polynomial generators need even degree, got {degree}"),
                    ));
                }
                if s == Section::Exterior && !odd {
                    return Err(semantic(
                        line.number,
                        format!("exterior generators need odd degree, got {degree}"),
                    ));
                }
                let target = if s == Section::Generators {
                    &mut generators
                } else {
                    &mut exterior
                };
                for n in names {
                    target.push((GradedGenerator::new(n, degree)?, line.number));
                }
            }
        }
    }

    let mut declared: HashMap<&str, usize> = HashMap::new();
    for (g, line) in generators.iter().chain(&exterior) {
        if let Some(first) = declared.insert(g.name(), *line) {
            return Err(semantic(
                *line,
                format!(
                    "generator `{}` is already declared on line {first}",
                    g.name()
                ),
            ));
        }
    }
    let vars = Vars::new(generators.iter().map(|(g, _)| g.clone()).collect())?;
    let mut polys = Vec::with_capacity(relations.len());
    for line in relations {
        let expr = parse_expr(line.text).map_err(|e| match e {
            Error::Expression { column, message } => syntax(line, column - 1, message),
            other => other,
        })?;
        let mut used = Vec::new();
        collect_vars(&expr, &mut used);
        if let Some((name, _)) = used.iter().find(|(n, _)| vars.position(n).is_none()) {
            let what = if declared.contains_key(name.as_str()) {
                "an exterior generator"
            } else {
                "undeclared"
            };
            return Err(semantic(
                line.number,
                format!("relation uses `{name}`, which is {what}"),
            ));
        }
        let p = parse_polynomial(line.text, &vars).map_err(|e| match e {
            Error::Expression { column, message } => syntax(line, column - 1, message),
            other => other,
        })?;
        if p.is_zero() {
            return Err(semantic(line.number, "relation is zero"));
        }
        if !p.is_homogeneous() {
            let mut degrees: Vec<u32> = p.terms().map(|(m, _)| m.degree()).collect();
            degrees.sort_unstable();
            degrees.dedup();
            let listed: Vec<String> = degrees.iter().map(u32::to_string).collect();
            return Err(semantic(
                line.number,
                format!(
                    "relation `{}` is not homogeneous (degrees {})",
                    line.text,
                    listed.join(", ")
                ),
            ));
        }
        polys.push(p);
    }
    let exterior = exterior.into_iter().map(|(g, _)| g).collect();
    CohomPresentation::new(vars, polys, exterior).map(SpecInput::Custom)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SO8: &str = "# SO(8)/T^2\ngenerators\n  x1, x2 deg 2\nrelations\n  x1^2 + x2^2 + x1*x2\n  (x1+x2)^2*x1^2*x2^2\nexterior\n  z1, z2 deg 7\n";

    fn custom(text: &str) -> CohomPresentation {
        match parse_spec(text).unwrap() {
            SpecInput::Custom(p) => p,
            other => panic!("expected a custom presentation, got {other:?}"),
        }
    }

    #[test]
    fn catalog_reference() {
        assert_eq!(
            parse_spec("space SU_odd n=2").unwrap(),
            SpecInput::Catalog(CatalogCase::SuOdd { n: 2 })
        );
        assert_eq!(
            parse_spec("  space SO8 # comment\n\n").unwrap(),
            SpecInput::Catalog(CatalogCase::So8)
        );
    }

    #[test]
    fn so8_block() {
        let p = custom(SO8);
        assert_eq!(p.relation_degrees(), vec![4, 12]);
        assert_eq!(p.exterior().len(), 2);
        assert_eq!(p.to_string(), "generators\n  x1, x2 deg 2\nrelations\n  x1^2 + x1*x2 + x2^2\n  x1^4*x2^2 + 2*x1^3*x2^3 + x1^2*x2^4\nexterior\n  z1, z2 deg 7\n");
    }

    #[test]
    fn echo_round_trips() {
        let p = parse_spec(SO8).unwrap();
        assert_eq!(parse_spec(&p.to_string()).unwrap(), p);
        let c = parse_spec("space A_partial n=4 k=2").unwrap();
        assert_eq!(parse_spec(&c.to_string()).unwrap(), c);
        let r = parse_spec("generators\n x deg 2\nrelations\n 1/2*x^3\n").unwrap();
        assert_eq!(parse_spec(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn inhomogeneous_relation_is_semantic() {
        let err = parse_spec("generators\n  x1, x2 deg 2\nrelations\n  x1^2 + x2^3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Semantic {
                line: 4,
                message: "relation `x1^2 + x2^3` is not homogeneous (degrees 4, 6)".into()
            }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_spec("generators\n  x1 deg 2\nrelations\n  x1^2 +* x1\n") {
            Err(Error::Syntax {
                line: 4, column, ..
            }) => assert_eq!(column, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_spec("x1 deg 2"),
            Err(Error::Syntax {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_spec("generators\n  x1 deg two\n"),
            Err(Error::Syntax {
                line: 2,
                column: 10,
                ..
            })
        ));
        assert!(matches!(
            parse_spec("space SU_odd n"),
            Err(Error::Syntax {
                line: 1,
                column: 14,
                ..
            })
        ));
        assert!(matches!(
            parse_spec("  \n# nothing\n"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn semantic_errors_name_the_declaration() {
        let dup = parse_spec("generators\n  x deg 2\nexterior\n  x deg 3\n").unwrap_err();
        assert_eq!(
            dup,
            Error::Semantic {
                line: 4,
                message: "generator `x` is already declared on line 2".into()
            }
        );
        assert!(matches!(
            parse_spec("space G2"),
            Err(Error::Semantic { line: 1, .. })
        ));
        assert!(matches!(
            parse_spec("generators\n  x deg 3\n"),
            Err(Error::Semantic { line: 2, .. })
        ));
        assert!(matches!(
            parse_spec("generators\n  x deg 2\nrelations\n  y^2\n"),
            Err(Error::Semantic { line: 4, .. })
        ));
        assert!(matches!(
            parse_spec("generators\n  x deg 2\nrelations\n  x - x\n"),
            Err(Error::Semantic { .. })
        ));
        assert!(matches!(
            parse_spec("space A_partial n=3 k=2"),
            Err(Error::Semantic { .. })
        ));
    }

    #[test]
    fn no_relations() {
        let p = custom("generators\n  x deg 2\nexterior\n  z deg 3\n");
        assert!(p.relations().is_empty());
        assert_eq!(p.exterior()[0].degree(), 3);
    }
}
