//! Line-oriented text formats for algebras and triangulations.
//!
//! Algebra files contain `vertex <name>`, `arrow <name> <src> <dst>` and
//! `rel <first> <second>` lines; triangulation files contain `edge <name>`,
//! `triangle <e1> <e2> <e3>` (counterclockwise) and `boundary <name>`.
//! Everything after `#` is a comment and blank lines are ignored.

use crate::algebra::{GentleAlgebra, Presentation};
use crate::error::{FormatError, LoadError};
use crate::triangulation::{Triangulation, TriangulationData};

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn expect_args(line: usize, tokens: &[&str], n: usize) -> Result<Vec<String>, FormatError> {
    if tokens.len() != n + 1 {
        return Err(FormatError {
            line,
            message: format!(
                "`{}` takes {} argument{}, found {}",
                tokens[0],
                n,
                if n == 1 { "" } else { "s" },
                tokens.len() - 1
            ),
        });
    }
    Ok(tokens[1..].iter().map(|s| s.to_string()).collect())
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FormatError> {
    let mut p = Presentation::default();
    for (line, tokens) in records(text) {
        match tokens[0] {
            "vertex" => p.vertices.extend(expect_args(line, &tokens, 1)?),
            "arrow" => {
                let a = expect_args(line, &tokens, 3)?;
                p.arrows.push((a[0].clone(), a[1].clone(), a[2].clone()));
            }
            "rel" => {
                let a = expect_args(line, &tokens, 2)?;
                p.relations.push((a[0].clone(), a[1].clone()));
            }
            other => {
                return Err(FormatError {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    Ok(p)
}

pub fn parse_algebra(text: &str) -> Result<GentleAlgebra, LoadError> {
    Ok(GentleAlgebra::validate(&parse_presentation(text)?)?)
}

pub fn parse_triangulation_data(text: &str) -> Result<TriangulationData, FormatError> {
    let mut d = TriangulationData::default();
    for (line, tokens) in records(text) {
        match tokens[0] {
            "edge" => d.edges.extend(expect_args(line, &tokens, 1)?),
            "boundary" => d.boundary.extend(expect_args(line, &tokens, 1)?),
            "triangle" => {
                let a = expect_args(line, &tokens, 3)?;
                d.triangles.push([a[0].clone(), a[1].clone(), a[2].clone()]);
            }
            other => {
                return Err(FormatError {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    Ok(d)
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation, LoadError> {
    Ok(Triangulation::new(&parse_triangulation_data(text)?)?)
}

/// Plain graph description of the quiver, one edge per arrow; relations
/// are listed as comments.
pub fn to_dot(a: &GentleAlgebra) -> String {
    let mut s = String::from("digraph quiver {\n");
    for v in a.vertices() {
        s.push_str(&format!("  \"{}\";\n", a.vertex_name(v)));
    }
    for id in a.arrow_ids() {
        let arr = a.arrow(id);
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            a.vertex_name(arr.source),
            a.vertex_name(arr.target),
            arr.name
        ));
    }
    for &(x, y) in a.relations() {
        s.push_str(&format!(
            "  // rel {} {}\n",
            a.arrow_name(x),
            a.arrow_name(y)
        ));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        for text in [
            fixtures::C4,
            fixtures::LIN,
            fixtures::TRI3,
            fixtures::A3,
            fixtures::BAND,
        ] {
            let a = parse_algebra(text).unwrap();
            let b = parse_algebra(&a.to_string()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_presentation("vertex 1\n\narrow x 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_presentation("# c\nloop 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("loop"));
    }

    #[test]
    fn comments_are_ignored() {
        let p = parse_presentation("vertex 1 # first\n  # nothing\nvertex 2\n").unwrap();
        assert_eq!(p.vertices, ["1", "2"]);
    }

    #[test]
    fn dot_lists_every_arrow() {
        let dot = to_dot(&fixtures::c4());
        assert_eq!(dot.matches("->").count(), 6);
    }
}
