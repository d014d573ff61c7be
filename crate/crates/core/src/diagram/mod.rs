//! Annular link diagrams.
//!
//! A diagram is a 4-valent plane graph given as a rotation system: every
//! crossing lists the labels of its four incident edges in counterclockwise
//! order, and the strand occupying slots 0 and 2 passes under the strand on
//! slots 1 and 3. Each edge label appears on exactly two slots. Two marked
//! regions turn the plane picture into an annulus: the face containing the
//! puncture (the core of the solid torus) and the face touching the outer
//! boundary circle. Crossingless components are kept separately as loops
//! carrying an explicit `dotted` flag.

mod faces;
mod format;
mod orient;
mod transform;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};

pub use faces::{cut_path, cut_path_from_walk, faces, CutPath, Face, FaceMap};
pub use format::{parse_diagram, parse_documents, DiagramDocument};
pub(crate) use orient::carry_orientation;
pub use orient::{is_alternating, orient, writhe, OrientedComponentSet, StrandComponent};
pub use transform::{canonical_key, mirror};
pub use validate::{validate, ValidationIssue, ValidationReport};

pub type EdgeLabel = u32;

/// A corner of a crossing: the region between rotation slot `slot` and slot
/// `slot + 1 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub slot: u8,
}

impl Corner {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Corner { crossing, slot: slot % 4 }
    }

    pub(crate) fn index(self) -> usize {
        4 * self.crossing + self.slot as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Corner { crossing: i / 4, slot: (i % 4) as u8 }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.crossing, self.slot)
    }
}

/// Designates a region of the diagram plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    /// The unbounded region. For the puncture this means "same face as the
    /// outer marker"; for crossingless diagrams it is the only option.
    #[default]
    Unbounded,
    Corner(Corner),
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marker::Unbounded => f.write_str("unbounded"),
            Marker::Corner(c) => c.fmt(f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Crossing {
    /// Edge labels in counterclockwise slots 0..3; slots 0 and 2 are under.
    pub edges: [EdgeLabel; 4],
}

impl Crossing {
    pub fn new(edges: [EdgeLabel; 4]) -> Self {
        Crossing { edges }
    }
}

/// A crossingless closed component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Loop {
    /// Encircles the puncture.
    pub dotted: bool,
}

/// The central input object. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnularDiagram {
    crossings: Vec<Crossing>,
    loops: Vec<Loop>,
    puncture: Marker,
    outer: Marker,
    reversed: Vec<usize>,
    partner: Vec<usize>,
}

impl AnnularDiagram {
    /// Builds a diagram, checking that every edge label is used exactly twice.
    pub fn new(crossings: Vec<Crossing>, loops: Vec<Loop>, puncture: Marker, outer: Marker) -> Result<Self, Error> {
        let partner = pair_half_edges(&crossings)?;
        Ok(AnnularDiagram { crossings, loops, puncture, outer, reversed: Vec::new(), partner })
    }

    /// Crossingless diagram made of the given loops.
    pub fn from_loops(loops: Vec<Loop>) -> Self {
        AnnularDiagram {
            crossings: Vec::new(),
            loops,
            puncture: Marker::Unbounded,
            outer: Marker::Unbounded,
            reversed: Vec::new(),
            partner: Vec::new(),
        }
    }

    /// Replaces the orientation flags: listed strand components are traversed
    /// against their default direction.
    pub fn with_reversed(mut self, components: impl IntoIterator<Item = usize>) -> Self {
        let mut r: Vec<usize> = components.into_iter().collect();
        r.sort_unstable();
        r.dedup();
        self.reversed = r;
        self
    }

    pub fn with_markers(mut self, puncture: Marker, outer: Marker) -> Self {
        self.puncture = puncture;
        self.outer = outer;
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn puncture(&self) -> Marker {
        self.puncture
    }

    pub fn outer(&self) -> Marker {
        self.outer
    }

    pub fn reversed_components(&self) -> &[usize] {
        &self.reversed
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.loops.is_empty()
    }

    pub fn edge_at(&self, crossing: usize, slot: u8) -> EdgeLabel {
        self.crossings[crossing].edges[slot as usize % 4]
    }

    /// Half-edge index `4 * crossing + slot` at the other end of the edge.
    pub(crate) fn partner(&self, half_edge: usize) -> usize {
        self.partner[half_edge]
    }

    pub(crate) fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub(crate) fn label(&self, half_edge: usize) -> EdgeLabel {
        self.crossings[half_edge / 4].edges[half_edge % 4]
    }

    /// Sorted list of edge labels, each once.
    pub fn edge_labels(&self) -> Vec<EdgeLabel> {
        let mut labels: Vec<EdgeLabel> = self.crossings.iter().flat_map(|c| c.edges).collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// The two half-edges of an edge, lower index first.
    pub fn edge_ends(&self, label: EdgeLabel) -> Option<(usize, usize)> {
        let h = (0..4 * self.crossings.len()).find(|&h| self.label(h) == label)?;
        Some((h, self.partner[h]))
    }

    /// Connected pieces of the crossing graph, each a sorted list of crossing
    /// indices; pieces are ordered by their smallest crossing.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if piece[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            piece[start] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                i += 1;
                for s in 0..4 {
                    let other = self.partner[4 * c + s] / 4;
                    if piece[other] == usize::MAX {
                        piece[other] = id;
                        members.push(other);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Number of connected pieces, counting every loop as its own piece.
    pub fn piece_count(&self) -> usize {
        self.pieces().len() + self.loops.len()
    }

    pub(crate) fn max_label(&self) -> EdgeLabel {
        self.crossings.iter().flat_map(|c| c.edges).max().unwrap_or(0)
    }
}

fn pair_half_edges(crossings: &[Crossing]) -> Result<Vec<usize>, Error> {
    let mut seen: BTreeMap<EdgeLabel, Vec<usize>> = BTreeMap::new();
    for (c, x) in crossings.iter().enumerate() {
        for (s, &e) in x.edges.iter().enumerate() {
            seen.entry(e).or_default().push(4 * c + s);
        }
    }
    let mut partner = vec![0; 4 * crossings.len()];
    for (label, hs) in seen {
        if hs.len() != 2 {
            return Err(ParseError::EdgeMultiplicity { label, count: hs.len() }.into());
        }
        partner[hs[0]] = hs[1];
        partner[hs[1]] = hs[0];
    }
    Ok(partner)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partners_pair_up() {
        let d = AnnularDiagram::new(
            vec![Crossing::new([1, 1, 2, 2])],
            vec![],
            Marker::Unbounded,
            Marker::Corner(Corner::new(0, 1)),
        )
        .unwrap();
        assert_eq!(d.partner(0), 1);
        assert_eq!(d.partner(2), 3);
        assert_eq!(d.edge_ends(2), Some((2, 3)));
        assert_eq!(d.pieces(), vec![vec![0]]);
    }

    #[test]
    fn triple_label_is_rejected() {
        let err = AnnularDiagram::new(vec![Crossing::new([1, 1, 1, 2])], vec![], Marker::Unbounded, Marker::Unbounded)
            .unwrap_err();
        assert!(matches!(err, Error::Parse(ParseError::EdgeMultiplicity { label: 1, count: 3 })));
    }
}
