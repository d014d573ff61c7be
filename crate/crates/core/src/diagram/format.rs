//! Line-oriented and structured (JSON) diagram documents.
//!
//! ```text
//! # right-handed curl
//! X 0: 1 1 2 2
//! O 0: dotted
//! puncture: unbounded
//! outer: 0.1
//! orient: 0=reversed
//! ```
//!
//! Several documents may share one file, separated by `---` lines.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AnnularDiagram, Corner, Crossing, Loop, Marker};
use crate::error::{Error, ParseError};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    ParseError::Syntax { line, message: message.into() }.into()
}

/// Parses one diagram document, text or structured form. A document whose
/// first non-blank character is `{` is read as the structured form.
pub fn parse_diagram(text: &str) -> Result<AnnularDiagram, Error> {
    if text.trim_start().starts_with('{') {
        let doc: DiagramDocument = serde_json::from_str(text).map_err(|e| ParseError::Object(e.to_string()))?;
        return doc.into_diagram();
    }
    parse_text(text, 0)
}

/// Splits a text stream on `---` separator lines (or reads a JSON array of
/// documents) and parses every document.
pub fn parse_documents(text: &str) -> Vec<Result<AnnularDiagram, Error>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return match serde_json::from_str::<Vec<DiagramDocument>>(text) {
            Ok(docs) => docs.into_iter().map(DiagramDocument::into_diagram).collect(),
            Err(e) => vec![Err(ParseError::Object(e.to_string()).into())],
        };
    }
    if trimmed.starts_with('{') {
        return vec![parse_diagram(text)];
    }
    let mut out = Vec::new();
    let mut start_line = 0;
    let mut chunk = String::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            if chunk.lines().any(is_content) {
                out.push(parse_text(&chunk, start_line));
            }
            chunk.clear();
            start_line = i + 1;
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    if chunk.lines().any(is_content) {
        out.push(parse_text(&chunk, start_line));
    }
    out
}

fn is_content(line: &str) -> bool {
    let l = strip_comment(line).trim();
    !l.is_empty()
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_text(text: &str, line_offset: usize) -> Result<AnnularDiagram, Error> {
    let mut crossings = Vec::new();
    let mut loops = Vec::new();
    let mut puncture = None;
    let mut outer = None;
    let mut reversed = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = line_offset + i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (head, body) = line.split_once(':').ok_or_else(|| syntax(lineno, "expected `<key>: <value>`"))?;
        let head = head.trim();
        let body = body.trim();
        let mut words = head.split_whitespace();
        match words.next() {
            Some("X") => {
                let idx = parse_index(words.next(), lineno)?;
                if idx != crossings.len() {
                    return Err(syntax(lineno, format!("crossing index {idx}, expected {}", crossings.len())));
                }
                let labels: Vec<u32> = body
                    .split_whitespace()
                    .map(|w| w.parse().map_err(|_| syntax(lineno, format!("bad edge label `{w}`"))))
                    .collect::<Result<_, _>>()?;
                let edges: [u32; 4] =
                    labels.try_into().map_err(|_| syntax(lineno, "a crossing needs exactly 4 edge labels"))?;
                crossings.push(Crossing::new(edges));
            }
            Some("O") => {
                let idx = parse_index(words.next(), lineno)?;
                if idx != loops.len() {
                    return Err(syntax(lineno, format!("loop index {idx}, expected {}", loops.len())));
                }
                let dotted = match body {
                    "dotted" => true,
                    "plain" => false,
                    other => return Err(syntax(lineno, format!("loop kind `{other}`"))),
                };
                loops.push(Loop { dotted });
            }
            Some("puncture") => puncture = Some(parse_marker(body, lineno)?),
            Some("outer") => outer = Some(parse_marker(body, lineno)?),
            Some("orient") => {
                for item in body.split(',') {
                    let (comp, dir) =
                        item.trim().split_once('=').ok_or_else(|| syntax(lineno, "expected `<component>=reversed`"))?;
                    let comp: usize =
                        comp.trim().parse().map_err(|_| syntax(lineno, format!("bad component `{comp}`")))?;
                    match dir.trim() {
                        "reversed" => reversed.push(comp),
                        "default" => {}
                        other => return Err(syntax(lineno, format!("orientation `{other}`"))),
                    }
                }
            }
            _ => return Err(syntax(lineno, format!("unknown key `{head}`"))),
        }
        if words.next().is_some() {
            return Err(syntax(lineno, format!("trailing tokens in `{head}`")));
        }
    }

    Ok(AnnularDiagram::new(crossings, loops, puncture.unwrap_or_default(), outer.unwrap_or_default())?
        .with_reversed(reversed))
}

fn parse_index(word: Option<&str>, line: usize) -> Result<usize, Error> {
    let w = word.ok_or_else(|| syntax(line, "missing index"))?;
    w.parse().map_err(|_| syntax(line, format!("bad index `{w}`")))
}

fn parse_marker(body: &str, line: usize) -> Result<Marker, Error> {
    if body == "unbounded" {
        return Ok(Marker::Unbounded);
    }
    let (c, s) = body.split_once('.').ok_or_else(|| syntax(line, format!("bad corner token `{body}`")))?;
    let crossing: usize = c.parse().map_err(|_| syntax(line, format!("bad corner crossing `{c}`")))?;
    let slot: u64 = s.parse().map_err(|_| syntax(line, format!("bad corner slot `{s}`")))?;
    if slot > 3 {
        return Err(ParseError::SlotOutOfRange { line, slot }.into());
    }
    Ok(Marker::Corner(Corner::new(crossing, slot as u8)))
}

impl fmt::Display for AnnularDiagram {
    /// Canonical text form; `parse_diagram` reads it back unchanged.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = x.edges;
            writeln!(f, "X {i}: {a} {b} {c} {d}")?;
        }
        for (i, l) in self.loops.iter().enumerate() {
            writeln!(f, "O {i}: {}", if l.dotted { "dotted" } else { "plain" })?;
        }
        writeln!(f, "puncture: {}", self.puncture)?;
        writeln!(f, "outer: {}", self.outer)?;
        for comp in &self.reversed {
            writeln!(f, "orient: {comp}=reversed")?;
        }
        Ok(())
    }
}

/// Structured-object form of a diagram document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub crossings: Vec<[u32; 4]>,
    #[serde(default)]
    pub loops: Vec<Loop>,
    #[serde(default = "unbounded")]
    pub puncture: String,
    #[serde(default = "unbounded")]
    pub outer: String,
    #[serde(default)]
    pub orient: Vec<usize>,
}

fn unbounded() -> String {
    "unbounded".to_string()
}

impl DiagramDocument {
    pub fn into_diagram(self) -> Result<AnnularDiagram, Error> {
        let puncture = parse_marker(&self.puncture, 0)?;
        let outer = parse_marker(&self.outer, 0)?;
        Ok(AnnularDiagram::new(self.crossings.into_iter().map(Crossing::new).collect(), self.loops, puncture, outer)?
            .with_reversed(self.orient))
    }
}

impl From<&AnnularDiagram> for DiagramDocument {
    fn from(d: &AnnularDiagram) -> Self {
        DiagramDocument {
            crossings: d.crossings.iter().map(|x| x.edges).collect(),
            loops: d.loops.clone(),
            puncture: d.puncture.to_string(),
            outer: d.outer.to_string(),
            orient: d.reversed.clone(),
        }
    }
}

impl AnnularDiagram {
    /// Canonical structured form (pretty-printed JSON).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DiagramDocument::from(self)).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dotted_loop_document() {
        let d = parse_diagram("O 0: dotted\npuncture: unbounded\n").unwrap();
        assert!(d.crossings().is_empty());
        assert_eq!(d.loops(), &[Loop { dotted: true }]);
    }

    #[test]
    fn one_crossing_document() {
        let d = parse_diagram("X 0: 1 2 1 2\nouter: 0.0\n").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.outer(), Marker::Corner(Corner::new(0, 0)));
    }

    #[test]
    fn edge_multiplicity_error() {
        let err = parse_diagram("X 0: 1 1 1 2\n").unwrap_err();
        assert!(err.to_string().contains("edge multiplicity"));
    }

    #[test]
    fn slot_out_of_range() {
        let err = parse_diagram("X 0: 1 1 2 2\nouter: 0.4\n").unwrap_err();
        assert_eq!(err, Error::Parse(ParseError::SlotOutOfRange { line: 2, slot: 4 }));
    }

    #[test]
    fn syntax_error_reports_line() {
        let err = parse_diagram("X 0: 1 1 2 2\n\nX 1 1 2\n").unwrap_err();
        match err {
            Error::Parse(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_diagram("X 1: 1 1 2 2\n").is_err());
        assert!(parse_diagram("X 0: 1 1 2\n").is_err());
        assert!(parse_diagram("O 0: striped\n").is_err());
    }

    #[test]
    fn text_and_object_forms_agree() {
        let text = "X 0: 1 1 2 2\nO 0: plain\npuncture: 0.0\nouter: 0.1\norient: 0=reversed\n";
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.to_string(), text);
        let json = d.to_json();
        let back = parse_diagram(&json).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn multi_document_stream() {
        let docs = parse_documents("O 0: plain\n---\n# second\nO 0: dotted\n---\n");
        assert_eq!(docs.len(), 2);
        assert!(docs[1].as_ref().unwrap().loops()[0].dotted);
    }
}
