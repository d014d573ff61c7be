use std::fmt;

use super::{faces, AnnularDiagram, Marker};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    /// An edge label does not occur on exactly two slots.
    EdgeMultiplicity { label: u32, count: usize },
    /// A connected piece fails the Euler count `faces = crossings + 2`.
    NonPlanar { piece: usize, crossings: usize, faces: usize },
    /// A marker names a crossing that does not exist.
    DanglingCorner { marker: &'static str, crossing: usize },
    /// A diagram with crossings needs an explicit outer corner.
    MissingOuter,
    /// Puncture and outer marker sit on different connected pieces.
    MarkersOnDifferentPieces,
    /// An orientation flag names a strand component that does not exist.
    UnknownComponent(usize),
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::EdgeMultiplicity { label, count } => {
                write!(f, "edge multiplicity: label {label} used {count} times")
            }
            ValidationIssue::NonPlanar { piece, crossings, faces } => {
                write!(f, "non-planar rotation system: piece {piece} has {crossings} crossings and {faces} faces")
            }
            ValidationIssue::DanglingCorner { marker, crossing } => {
                write!(f, "dangling corner: {marker} references crossing {crossing}")
            }
            ValidationIssue::MissingOuter => f.write_str("outer corner required when crossings exist"),
            ValidationIssue::MarkersOnDifferentPieces => {
                f.write_str("puncture and outer corners lie on different pieces")
            }
            ValidationIssue::UnknownComponent(c) => write!(f, "orientation flag for unknown component {c}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return f.write_str("ok");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            issue.fmt(f)?;
        }
        Ok(())
    }
}

pub fn validate(d: &AnnularDiagram) -> ValidationReport {
    let mut issues = Vec::new();
    let n = d.crossing_count();

    // 4-valence: the partner table must be a fixed-point-free involution
    // pairing equal labels
    let mut counts = std::collections::BTreeMap::new();
    for x in d.crossings() {
        for e in x.edges {
            *counts.entry(e).or_insert(0usize) += 1;
        }
    }
    for (&label, &count) in &counts {
        if count != 2 {
            issues.push(ValidationIssue::EdgeMultiplicity { label, count });
        }
    }
    if !issues.is_empty() {
        return ValidationReport { issues };
    }

    let pieces = d.pieces();
    let fm = faces(d);
    for (p, members) in pieces.iter().enumerate() {
        let f = fm.faces().iter().filter(|f| f.piece == p).count();
        if f != members.len() + 2 {
            issues.push(ValidationIssue::NonPlanar { piece: p, crossings: members.len(), faces: f });
        }
    }

    let mut marker_piece = Vec::new();
    for (name, m) in [("puncture", d.puncture()), ("outer", d.outer())] {
        if let Marker::Corner(c) = m {
            if c.crossing >= n {
                issues.push(ValidationIssue::DanglingCorner { marker: name, crossing: c.crossing });
            } else {
                marker_piece.push(fm.faces()[fm.face_of(c)].piece);
            }
        }
    }
    if n > 0 && d.outer() == Marker::Unbounded {
        issues.push(ValidationIssue::MissingOuter);
    }
    if marker_piece.len() == 2 && marker_piece[0] != marker_piece[1] {
        issues.push(ValidationIssue::MarkersOnDifferentPieces);
    }

    if issues.is_empty() {
        let comps = super::orient::strand_components(d).len();
        for &r in d.reversed_components() {
            if r >= comps {
                issues.push(ValidationIssue::UnknownComponent(r));
            }
        }
    }

    ValidationReport { issues }
}
