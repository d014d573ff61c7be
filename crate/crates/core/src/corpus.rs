//! Curated diagrams shipped with the crate, with expected values.
//!
//! Each entry is a text document under `corpus/`; `corpus/expected.json`
//! holds its bracket, Jones polynomial, writhe, nugatory crossings and where
//! those numbers come from.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::diagram::{parse_diagram, AnnularDiagram};
use crate::poly::SkeinPolynomial;

const FILES: &[(&str, &str)] = &[
    ("dotted-loop", include_str!("../corpus/dotted-loop.knot")),
    ("double-kink", include_str!("../corpus/double-kink.knot")),
    ("figure-eight-bigon", include_str!("../corpus/figure-eight-bigon.knot")),
    ("figure-eight", include_str!("../corpus/figure-eight.knot")),
    ("granny-a", include_str!("../corpus/granny-a.knot")),
    ("granny-b", include_str!("../corpus/granny-b.knot")),
    ("hopf-core", include_str!("../corpus/hopf-core.knot")),
    ("hopf", include_str!("../corpus/hopf.knot")),
    ("kink-irreducible", include_str!("../corpus/kink-irreducible.knot")),
    ("kink-outer", include_str!("../corpus/kink-outer.knot")),
    ("kink-puncture-lobe", include_str!("../corpus/kink-puncture-lobe.knot")),
    ("kink-puncture-shared", include_str!("../corpus/kink-puncture-shared.knot")),
    ("nonalternating-core", include_str!("../corpus/nonalternating-core.knot")),
    ("nonalternating", include_str!("../corpus/nonalternating.knot")),
    ("plain-and-dotted", include_str!("../corpus/plain-and-dotted.knot")),
    ("plain-loop", include_str!("../corpus/plain-loop.knot")),
    ("sum-twist-split", include_str!("../corpus/sum-twist-split.knot")),
    ("sum-twist", include_str!("../corpus/sum-twist.knot")),
    ("trefoil-face1", include_str!("../corpus/trefoil-face1.knot")),
    ("trefoil-face2", include_str!("../corpus/trefoil-face2.knot")),
    ("trefoil-face3", include_str!("../corpus/trefoil-face3.knot")),
    ("trefoil-face4", include_str!("../corpus/trefoil-face4.knot")),
    ("trefoil", include_str!("../corpus/trefoil.knot")),
    ("two-dotted", include_str!("../corpus/two-dotted.knot")),
];

const EXPECTED: &str = include_str!("../corpus/expected.json");

/// Pairs of diagrams of the same link, for comparing writhes.
pub const ISOTOPIC_PAIRS: &[(&str, &str)] = &[("granny-a", "granny-b"), ("kink-puncture-lobe", "kink-puncture-shared")];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub bracket: SkeinPolynomial,
    pub jones: SkeinPolynomial,
    pub writhe: i64,
    pub nugatory: Vec<usize>,
    pub dotted_reduced: bool,
    pub source: String,
}

#[derive(Deserialize)]
struct RawExpected {
    bracket: String,
    jones: String,
    writhe: i64,
    nugatory: Vec<usize>,
    dotted_reduced: bool,
    source: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub diagram: AnnularDiagram,
    pub expected: Expected,
}

/// All corpus entries, sorted by name.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut raw: BTreeMap<String, RawExpected> = serde_json::from_str(EXPECTED).expect("expected.json parses");
    FILES
        .iter()
        .map(|&(name, text)| {
            let e = raw.remove(name).unwrap_or_else(|| panic!("no expected values for {name}"));
            let poly = |s: &str| s.parse::<SkeinPolynomial>().unwrap_or_else(|err| panic!("{name}: {err}"));
            CorpusEntry {
                name,
                text,
                diagram: parse_diagram(text).unwrap_or_else(|err| panic!("{name}: {err}")),
                expected: Expected {
                    bracket: poly(&e.bracket),
                    jones: poly(&e.jones),
                    writhe: e.writhe,
                    nugatory: e.nugatory,
                    dotted_reduced: e.dotted_reduced,
                    source: e.source,
                },
            }
        })
        .collect()
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_has_expectations() {
        let all = corpus();
        assert_eq!(all.len(), FILES.len());
        let raw: BTreeMap<String, serde_json::Value> = serde_json::from_str(EXPECTED).unwrap();
        assert_eq!(raw.len(), FILES.len());
        assert!(entry("trefoil").is_some());
    }
}
