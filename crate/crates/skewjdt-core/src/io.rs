//! Text and JSON forms of shapes, fillings, traces, and reports.
//!
//! The plain-text tableau document is line-oriented:
//!
//! ```text
//! shape: 4,4,4,3/2,2,1
//! . . 0 1
//! . . 1 7
//! . 1 4 9
//! 2 9 9
//! ```
//!
//! Line 1 names the shape (outer parts, then `/` and inner parts; the
//! slash is omitted when the inner partition is empty). Each following line
//! is one outer row: `.` for a cell of the inner partition, an integer for
//! a filled cell, `-` for an empty cell of a partial filling. Tokens are
//! separated by single spaces; parsing accepts any amount of blank space
//! between tokens and re-serialization restores the canonical single-space
//! form byte for byte.
//!
//! The structured form is a JSON object `{kind, lambda, mu, rows}` with
//! `kind` either `"tabloid"` or `"partial"` and `null` for empty cells.

use serde::{Deserialize, Serialize};

use crate::bijections::BijectionTrace;
use crate::error::Error;
use crate::genfunc::{BijectionReport, IdentityReport, MatchupRow};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tabloids::{PartialFilling, Tabloid};

/// Canonical shape string: comma-separated outer parts, then `/` and inner
/// parts when the inner partition is nonempty. The empty shape is the empty
/// string.
pub fn format_shape(shape: &SkewShape) -> String {
    let join = |parts: &[usize]| {
        parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    if shape.inner().is_empty() {
        join(shape.outer().parts())
    } else {
        format!(
            "{}/{}",
            join(shape.outer().parts()),
            join(shape.inner().parts())
        )
    }
}

fn parse_partition(text: &str, what: &str) -> Result<Partition, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for (index, token) in text.split(',').enumerate() {
        let part: usize = token.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            token: index + 1,
            msg: format!("invalid {what} part {:?}", token.trim()),
        })?;
        parts.push(part);
    }
    Partition::new(parts)
}

/// Parses a shape string such as `4,4,4,3/2,2,1`.
pub fn parse_shape(text: &str) -> Result<SkewShape, Error> {
    let text = text.trim();
    let (outer, inner) = match text.split_once('/') {
        None => (text, ""),
        Some((outer, inner)) => {
            if inner.contains('/') {
                return Err(Error::Parse {
                    line: 0,
                    token: 0,
                    msg: "shape has more than one '/'".to_string(),
                });
            }
            (outer, inner)
        }
    };
    SkewShape::new(
        parse_partition(outer, "outer")?,
        parse_partition(inner, "inner")?,
    )
}

fn body_lines(shape: &SkewShape, entry: impl Fn(Cell) -> Option<u64>) -> String {
    let mut out = String::new();
    for row in 1..=shape.rows() {
        let mut tokens: Vec<String> = vec![".".to_string(); shape.inner().part(row)];
        for col in shape.row_cols(row) {
            tokens.push(match entry(Cell { row, col }) {
                Some(v) => v.to_string(),
                None => "-".to_string(),
            });
        }
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// Canonical text document for a total filling.
pub fn serialize_tabloid(t: &Tabloid) -> String {
    format!(
        "shape: {}\n{}",
        format_shape(t.shape()),
        body_lines(t.shape(), |c| t.get_opt(c))
    )
}

/// Canonical text document for a partial filling; empty cells print as `-`.
pub fn serialize_partial(p: &PartialFilling) -> String {
    format!(
        "shape: {}\n{}",
        format_shape(p.shape()),
        body_lines(p.shape(), |c| p.get(c))
    )
}

/// A parsed tableau document: total if no cell was `-`, partial otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedTableau {
    Total(Tabloid),
    Partial(PartialFilling),
}

impl ParsedTableau {
    pub fn shape(&self) -> &SkewShape {
        match self {
            ParsedTableau::Total(t) => t.shape(),
            ParsedTableau::Partial(p) => p.shape(),
        }
    }

    /// The filling as a total tabloid; errors on the first hole.
    pub fn into_total(self) -> Result<Tabloid, Error> {
        match self {
            ParsedTableau::Total(t) => Ok(t),
            ParsedTableau::Partial(p) => p.into_tabloid(),
        }
    }

    pub fn into_partial(self) -> PartialFilling {
        match self {
            ParsedTableau::Total(t) => PartialFilling::from(&t),
            ParsedTableau::Partial(p) => p,
        }
    }
}

/// Parses a plain-text tableau document.
pub fn parse_tableau(text: &str) -> Result<ParsedTableau, Error> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    let Some(header) = lines.first() else {
        return Err(Error::Parse {
            line: 1,
            token: 0,
            msg: "empty document".to_string(),
        });
    };
    let Some(shape_text) = header.trim_start().strip_prefix("shape:") else {
        return Err(Error::Parse {
            line: 1,
            token: 0,
            msg: "first line must start with 'shape:'".to_string(),
        });
    };
    let shape = parse_shape(shape_text).map_err(|e| match e {
        Error::Parse { token, msg, .. } => Error::Parse {
            line: 1,
            token,
            msg,
        },
        other => other,
    })?;
    let body = &lines[1..];
    if body.len() != shape.rows() {
        return Err(Error::Parse {
            line: 2 + body.len().min(shape.rows()),
            token: 0,
            msg: format!("expected {} row lines, found {}", shape.rows(), body.len()),
        });
    }
    let mut rows: Vec<Vec<Option<u64>>> = Vec::with_capacity(shape.rows());
    let mut partial = false;
    for (i, line) in body.iter().enumerate() {
        let row = i + 1;
        let line_no = i + 2;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let width = shape.outer().part(row);
        if tokens.len() != width {
            return Err(Error::Parse {
                line: line_no,
                token: 0,
                msg: format!("expected {width} tokens, found {}", tokens.len()),
            });
        }
        let inner = shape.inner().part(row);
        let mut entries = Vec::with_capacity(width - inner);
        for (j, token) in tokens.iter().enumerate() {
            let col = j + 1;
            if col <= inner {
                if *token != "." {
                    return Err(Error::Parse {
                        line: line_no,
                        token: col,
                        msg: format!("expected '.' under the inner shape, found {token:?}"),
                    });
                }
                continue;
            }
            if *token == "." {
                return Err(Error::Parse {
                    line: line_no,
                    token: col,
                    msg: "'.' outside the inner shape".to_string(),
                });
            }
            if *token == "-" {
                partial = true;
                entries.push(None);
                continue;
            }
            let value: u64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                token: col,
                msg: format!("invalid entry {token:?}"),
            })?;
            entries.push(Some(value));
        }
        rows.push(entries);
    }
    let filling = PartialFilling::from_rows(shape, &rows)?;
    if partial {
        Ok(ParsedTableau::Partial(filling))
    } else {
        Ok(ParsedTableau::Total(filling.into_tabloid()?))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauDoc {
    kind: String,
    lambda: Vec<usize>,
    mu: Vec<usize>,
    rows: Vec<Vec<Option<u64>>>,
}

/// Canonical JSON document for a total filling.
pub fn serialize_structured_tabloid(t: &Tabloid) -> String {
    let doc = TableauDoc {
        kind: "tabloid".to_string(),
        lambda: t.shape().outer().parts().to_vec(),
        mu: t.shape().inner().parts().to_vec(),
        rows: (1..=t.shape().rows())
            .map(|r| t.row(r).iter().map(|&v| Some(v)).collect())
            .collect(),
    };
    serde_json::to_string(&doc).unwrap() + "\n"
}

/// Canonical JSON document for a partial filling.
pub fn serialize_structured_partial(p: &PartialFilling) -> String {
    let doc = TableauDoc {
        kind: "partial".to_string(),
        lambda: p.shape().outer().parts().to_vec(),
        mu: p.shape().inner().parts().to_vec(),
        rows: (1..=p.shape().rows()).map(|r| p.row(r).to_vec()).collect(),
    };
    serde_json::to_string(&doc).unwrap() + "\n"
}

/// Parses the JSON tableau document.
pub fn parse_structured(text: &str) -> Result<ParsedTableau, Error> {
    let doc: TableauDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        token: e.column(),
        msg: e.to_string(),
    })?;
    let shape = SkewShape::new(Partition::new(doc.lambda)?, Partition::new(doc.mu)?)?;
    let filling = PartialFilling::from_rows(shape, &doc.rows)?;
    match doc.kind.as_str() {
        "tabloid" => Ok(ParsedTableau::Total(filling.into_tabloid()?)),
        "partial" => Ok(ParsedTableau::Partial(filling)),
        other => Err(Error::Parse {
            line: 1,
            token: 0,
            msg: format!("unknown kind {other:?}, expected \"tabloid\" or \"partial\""),
        }),
    }
}

/// One-line rendering of a filling: rows joined by `/`, entries by `,`.
pub fn compact(t: &Tabloid) -> String {
    (1..=t.shape().rows())
        .map(|r| {
            t.row(r)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Renders a trace: the header, both initial fillings, then each step with
/// its slide summary and both fillings after it.
pub fn render_trace(trace: &BijectionTrace) -> String {
    let labels = trace.kind.labels();
    let mut out = format!(
        "trace: {}\nshape: {}\n",
        trace.kind.name(),
        format_shape(&trace.shape)
    );
    if let Some(a) = trace.a {
        out.push_str(&format!("a: {a}\n"));
    }
    let dump = |out: &mut String, fillings: &[PartialFilling; 2]| {
        for (label, filling) in labels.iter().zip(fillings) {
            out.push_str(&format!("{label}:\n"));
            out.push_str(&body_lines(filling.shape(), |c| filling.get(c)));
        }
    };
    dump(&mut out, &trace.initial);
    for (i, step) in trace.steps.iter().enumerate() {
        out.push_str(&format!(
            "step {}: e={} start={} stop={} path={}\n",
            i + 1,
            step.entry,
            step.selected,
            step.path.stop(),
            step.path,
        ));
        dump(&mut out, &step.after);
    }
    out
}

/// Renders matchup rows as a tab-separated table with a header line.
pub fn render_matchup(rows: &[MatchupRow]) -> String {
    let mut out = String::from("P\tQ\tR\tT\n");
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            compact(&row.p),
            compact(&row.q),
            compact(&row.r),
            compact(&row.t)
        ));
    }
    out
}

/// Plain-text identity report: one line per coefficient, both routes.
pub fn render_identity_report(report: &IdentityReport) -> String {
    let mut out = format!(
        "identity check: shape {}, a {}, through degree {}\nfactors:",
        if report.shape.is_empty() {
            "(empty)"
        } else {
            &report.shape
        },
        report.a,
        report.max_degree
    );
    for f in &report.factors {
        out.push_str(&format!(" {f}"));
    }
    out.push('\n');
    for n in 0..=report.max_degree {
        let lhs = report.ssyt_series[n];
        let rhs = report.product_route[n];
        let sign = if lhs == rhs { "=" } else { "!=" };
        out.push_str(&format!("q^{n}: {lhs} {sign} {rhs}\n"));
    }
    match report
        .bounded_series
        .iter()
        .zip(&report.complement_route)
        .position(|(b, c)| b != c)
    {
        None => out.push_str(&format!(
            "complement route: agrees through degree {}\n",
            report.max_degree
        )),
        Some(n) => out.push_str(&format!(
            "complement route: first mismatch at q^{n}: {} vs {}\n",
            report.bounded_series[n], report.complement_route[n]
        )),
    }
    match &report.first_discrepancy {
        None => out.push_str(&format!(
            "result: identity holds through degree {}\n",
            report.max_degree
        )),
        Some(d) => out.push_str(&format!(
            "result: FAILED at q^{} via {} route: lhs {}, rhs {}\n",
            d.exponent, d.route, d.lhs, d.rhs
        )),
    }
    out
}

/// Plain-text bijection report: per-norm counts and any failures.
pub fn render_bijection_report(report: &BijectionReport) -> String {
    let mut out = format!(
        "bijection check: shape {}, a {}, through norm {}\nchecked {} tableaux\n",
        if report.shape.is_empty() {
            "(empty)"
        } else {
            &report.shape
        },
        report.a,
        report.max_norm,
        report.checked
    );
    for counts in &report.per_norm {
        let sign = if counts.ssyt == counts.pairs {
            "="
        } else {
            "!="
        };
        out.push_str(&format!(
            "norm {}: {} tableaux {sign} {} pairs\n",
            counts.norm, counts.ssyt, counts.pairs
        ));
    }
    for failure in &report.failures {
        out.push_str(&format!(
            "failure [{}]: {}\n",
            failure.instance, failure.what
        ));
    }
    if report.ok {
        out.push_str(&format!(
            "result: bijection verified through norm {}\n",
            report.max_norm
        ));
    } else {
        out.push_str(&format!(
            "result: FAILED with {} failures\n",
            report.failures.len()
        ));
    }
    out
}

/// Pretty JSON for any serializable report, newline-terminated.
pub fn report_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).unwrap() + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::{evacuate, split};

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn tab(shape: &SkewShape, rows: &[&[u64]]) -> Tabloid {
        Tabloid::from_rows(
            shape.clone(),
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn big_p() -> Tabloid {
        tab(
            &shape(&[4, 4, 4, 3], &[2, 2, 1]),
            &[&[0, 1], &[1, 7], &[1, 4, 9], &[2, 9, 9]],
        )
    }

    const BIG_P_DOC: &str = "shape: 4,4,4,3/2,2,1\n. . 0 1\n. . 1 7\n. 1 4 9\n2 9 9\n";

    #[test]
    fn shape_strings_round_trip() {
        for text in ["4,4,4,3/2,2,1", "4,3,3,1", "1", ""] {
            let s = parse_shape(text).unwrap();
            assert_eq!(format_shape(&s), text);
        }
        assert_eq!(format_shape(&parse_shape(" 3 , 2 / 1 ").unwrap()), "3,2/1");
    }

    #[test]
    fn shape_string_errors() {
        assert!(matches!(
            parse_shape("3,x"),
            Err(Error::Parse { token: 2, .. })
        ));
        assert!(matches!(parse_shape("3/2/1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_shape("3,4"),
            Err(Error::NotWeaklyDecreasing { .. })
        ));
        assert!(matches!(
            parse_shape("2/3"),
            Err(Error::ContainmentViolation { .. })
        ));
    }

    #[test]
    fn tabloid_document_round_trips_byte_for_byte() {
        assert_eq!(serialize_tabloid(&big_p()), BIG_P_DOC);
        let parsed = parse_tableau(BIG_P_DOC).unwrap();
        assert_eq!(parsed, ParsedTableau::Total(big_p()));
        assert_eq!(serialize_tabloid(&parsed.into_total().unwrap()), BIG_P_DOC);
    }

    #[test]
    fn parser_tolerates_extra_spaces() {
        let sloppy = "shape:  4,4,4,3/2,2,1\n.   . 0  1\n. . 1 7\n. 1 4 9\n 2 9 9\n\n";
        assert_eq!(
            parse_tableau(sloppy).unwrap(),
            ParsedTableau::Total(big_p())
        );
    }

    #[test]
    fn partial_document_round_trips() {
        let s = shape(&[3, 2], &[1]);
        let mut p = PartialFilling::from(&tab(&s, &[&[1, 2], &[0, 3]]));
        p.clear(Cell::new(2, 1)).unwrap();
        let doc = serialize_partial(&p);
        assert_eq!(doc, "shape: 3,2/1\n. 1 2\n- 3\n");
        assert_eq!(parse_tableau(&doc).unwrap(), ParsedTableau::Partial(p));
    }

    #[test]
    fn empty_shape_document_round_trips() {
        let t = Tabloid::zero(shape(&[], &[]));
        let doc = serialize_tabloid(&t);
        assert_eq!(doc, "shape: \n");
        assert_eq!(parse_tableau(&doc).unwrap(), ParsedTableau::Total(t));
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            parse_tableau("shape: 3,2/1\n. 1 2\n0 3 9\n"),
            Err(Error::Parse {
                line: 3,
                token: 0,
                msg: "expected 2 tokens, found 3".to_string()
            })
        );
        assert_eq!(
            parse_tableau("shape: 3,2/1\n. 1 2\n0 x\n"),
            Err(Error::Parse {
                line: 3,
                token: 2,
                msg: "invalid entry \"x\"".to_string()
            })
        );
        assert_eq!(
            parse_tableau("shape: 3,2/1\n1 1 2\n0 3\n"),
            Err(Error::Parse {
                line: 2,
                token: 1,
                msg: "expected '.' under the inner shape, found \"1\"".to_string()
            })
        );
        assert!(matches!(
            parse_tableau("shape: 3,2/1\n. 1 2\n"),
            Err(Error::Parse {
                line: 3,
                token: 0,
                ..
            })
        ));
        assert!(matches!(
            parse_tableau("rows: 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn structured_documents_round_trip() {
        let doc = serialize_structured_tabloid(&big_p());
        assert_eq!(
            doc,
            "{\"kind\":\"tabloid\",\"lambda\":[4,4,4,3],\"mu\":[2,2,1],\"rows\":[[0,1],[1,7],[1,4,9],[2,9,9]]}\n"
        );
        assert_eq!(
            parse_structured(&doc).unwrap(),
            ParsedTableau::Total(big_p())
        );

        let s = shape(&[3, 2], &[1]);
        let mut p = PartialFilling::from(&tab(&s, &[&[1, 2], &[0, 3]]));
        p.clear(Cell::new(1, 2)).unwrap();
        let doc = serialize_structured_partial(&p);
        assert_eq!(parse_structured(&doc).unwrap(), ParsedTableau::Partial(p));
    }

    #[test]
    fn structured_rejects_bad_kind_and_rows() {
        let bad_kind = "{\"kind\":\"grid\",\"lambda\":[1],\"mu\":[],\"rows\":[[1]]}";
        assert!(matches!(
            parse_structured(bad_kind),
            Err(Error::Parse { .. })
        ));
        let bad_rows = "{\"kind\":\"tabloid\",\"lambda\":[2],\"mu\":[],\"rows\":[[1]]}";
        assert!(matches!(
            parse_structured(bad_rows),
            Err(Error::RowLengthMismatch { .. })
        ));
        let hole_in_tabloid = "{\"kind\":\"tabloid\",\"lambda\":[2],\"mu\":[],\"rows\":[[1,null]]}";
        assert!(matches!(
            parse_structured(hole_in_tabloid),
            Err(Error::EmptyCell { .. })
        ));
    }

    #[test]
    fn compact_form_is_slash_separated_rows() {
        let s = shape(&[3, 2], &[1]);
        assert_eq!(compact(&tab(&s, &[&[0, 0], &[0, 5]])), "0,0/0,5");
        assert_eq!(compact(&big_p()), "0,1/1,7/1,4,9/2,9,9");
    }

    #[test]
    fn trace_rendering_shows_steps_and_snapshots() {
        let s = shape(&[2], &[]);
        let (_, trace) = evacuate(&tab(&s, &[&[3, 5]])).unwrap();
        let text = render_trace(&trace);
        assert_eq!(
            text,
            "trace: evacuate\nshape: 2\nP:\n3 5\nQ:\n- -\n\
             step 1: e=3 start=(1,1) stop=(1,2) path=(1,1)->(1,2)\nP:\n5 -\nQ:\n- 3\n\
             step 2: e=5 start=(1,1) stop=(1,1) path=(1,1)\nP:\n- -\nQ:\n5 3\n"
        );
    }

    #[test]
    fn split_trace_rendering_includes_offset() {
        let s = shape(&[1], &[]);
        let (_, trace) = split(&tab(&s, &[&[2]]), 1).unwrap();
        let text = render_trace(&trace);
        assert!(text.starts_with("trace: split\nshape: 1\na: 1\nR:\n2\nT:\n0\n"));
        assert!(text.contains("step 1: e=1 start=(1,1) stop=(1,1) path=(1,1)"));
    }
}
