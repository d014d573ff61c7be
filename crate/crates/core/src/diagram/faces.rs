use std::collections::{BTreeMap, VecDeque};

use super::{AnnularDiagram, Corner, EdgeLabel, Marker};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Corner tokens in boundary order, starting from the smallest.
    pub corners: Vec<Corner>,
    pub contains_puncture: bool,
    pub is_outer: bool,
    /// Index into [`AnnularDiagram::pieces`].
    pub piece: usize,
}

/// All faces of a diagram together with the corner-to-face lookup.
#[derive(Clone, Debug)]
pub struct FaceMap {
    faces: Vec<Face>,
    face_of: Vec<usize>,
    puncture: Option<usize>,
    outer: Option<usize>,
}

impl FaceMap {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, corner: Corner) -> usize {
        self.face_of[corner.index()]
    }

    /// Face holding the puncture, if the marker resolves.
    pub fn puncture_face(&self) -> Option<usize> {
        self.puncture
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer
    }

    pub fn marker_face(&self, m: Marker) -> Option<usize> {
        match m {
            Marker::Unbounded => self.outer,
            Marker::Corner(c) => self.face_of.get(c.index()).copied(),
        }
    }

    /// The two faces on either side of the edge leaving `half_edge`: the
    /// counterclockwise side first.
    pub(crate) fn sides_of(&self, half_edge: usize) -> (usize, usize) {
        let c = half_edge / 4;
        let s = half_edge % 4;
        (self.face_of[half_edge], self.face_of[4 * c + (s + 3) % 4])
    }
}

/// Successor of a corner along its face boundary.
pub(crate) fn next_corner(d: &AnnularDiagram, corner: usize) -> usize {
    let c = corner / 4;
    let s = corner % 4;
    d.partner(4 * c + (s + 1) % 4)
}

/// Traces corner orbits. Ids follow the smallest corner of each face.
pub fn faces(d: &AnnularDiagram) -> FaceMap {
    let total = 4 * d.crossing_count();
    let pieces = d.pieces();
    let mut piece_of = vec![0; d.crossing_count()];
    for (p, members) in pieces.iter().enumerate() {
        for &c in members {
            piece_of[c] = p;
        }
    }

    let mut face_of = vec![usize::MAX; total];
    let mut out = Vec::new();
    for start in 0..total {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut corners = Vec::new();
        let mut cur = start;
        while face_of[cur] == usize::MAX {
            face_of[cur] = id;
            corners.push(Corner::from_index(cur));
            cur = next_corner(d, cur);
        }
        debug_assert_eq!(cur, start, "corner orbits must be cycles");
        out.push(Face { id, corners, contains_puncture: false, is_outer: false, piece: piece_of[start / 4] });
    }

    let resolve = |m: Marker| match m {
        Marker::Corner(c) if c.crossing < d.crossing_count() => Some(face_of[c.index()]),
        _ => None,
    };
    let outer = resolve(d.outer());
    let puncture = match d.puncture() {
        Marker::Unbounded => outer,
        m => resolve(m),
    };
    if let Some(f) = outer {
        out[f].is_outer = true;
    }
    if let Some(f) = puncture {
        out[f].contains_puncture = true;
    }
    FaceMap { faces: out, face_of, puncture, outer }
}

/// Winding parities of edges relative to a fixed arc from the puncture to the
/// outer boundary. A state circle winds around the puncture an odd number of
/// times iff the parities of its edges sum to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPath {
    pub edge_parities: BTreeMap<EdgeLabel, u8>,
    pub loop_parities: Vec<u8>,
    /// Edges crossed by the dual walk, in order.
    pub walk: Vec<EdgeLabel>,
}

impl CutPath {
    pub fn parity(&self, label: EdgeLabel) -> u8 {
        self.edge_parities.get(&label).copied().unwrap_or(0)
    }

    /// Sum of all edge and loop parities, mod 2.
    pub fn total_parity(&self) -> u8 {
        let e: u32 = self.edge_parities.values().map(|&p| p as u32).sum();
        let l: u32 = self.loop_parities.iter().map(|&p| p as u32).sum();
        ((e + l) % 2) as u8
    }

    /// Parity per half-edge index, for the state-sum inner loop.
    pub(crate) fn half_edge_parities(&self, d: &AnnularDiagram) -> Vec<u8> {
        (0..4 * d.crossing_count()).map(|h| self.parity(d.label(h))).collect()
    }

    fn from_walk(d: &AnnularDiagram, walk: Vec<EdgeLabel>) -> Self {
        let mut edge_parities: BTreeMap<EdgeLabel, u8> = d.edge_labels().into_iter().map(|e| (e, 0)).collect();
        for e in &walk {
            *edge_parities.get_mut(e).expect("walk edge exists") ^= 1;
        }
        CutPath { edge_parities, loop_parities: d.loops().iter().map(|l| l.dotted as u8).collect(), walk }
    }
}

fn marker_faces(d: &AnnularDiagram, fm: &FaceMap) -> Result<Option<(usize, usize)>> {
    if d.crossing_count() == 0 {
        return Ok(None);
    }
    match (fm.puncture, fm.outer) {
        (Some(p), Some(o)) => Ok(Some((p, o))),
        _ => Err(Error::Invalid(super::validate(d))),
    }
}

/// Breadth-first dual walk from the puncture face to the outer face.
pub fn cut_path(d: &AnnularDiagram) -> Result<CutPath> {
    let fm = faces(d);
    let Some((start, goal)) = marker_faces(d, &fm)? else {
        return Ok(CutPath::from_walk(d, Vec::new()));
    };

    // dual adjacency, sorted so the walk is deterministic
    let mut adj: Vec<Vec<(usize, EdgeLabel)>> = vec![Vec::new(); fm.len()];
    for h in 0..4 * d.crossing_count() {
        if h < d.partner(h) {
            let (a, b) = fm.sides_of(h);
            let e = d.label(h);
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut prev: Vec<Option<(usize, EdgeLabel)>> = vec![None; fm.len()];
    let mut seen = vec![false; fm.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        if f == goal {
            break;
        }
        for &(g, e) in &adj[f] {
            if !seen[g] {
                seen[g] = true;
                prev[g] = Some((f, e));
                queue.push_back(g);
            }
        }
    }
    if !seen[goal] {
        return Err(Error::Invalid(super::validate(d)));
    }
    let mut walk = Vec::new();
    let mut cur = goal;
    while let Some((f, e)) = prev[cur] {
        walk.push(e);
        cur = f;
    }
    walk.reverse();
    Ok(CutPath::from_walk(d, walk))
}

/// Cut path from an explicit dual walk: starting in the puncture face, each
/// listed edge must bound the current face and the walk steps across it. The
/// walk must end in the outer face.
pub fn cut_path_from_walk(d: &AnnularDiagram, walk: &[EdgeLabel]) -> Result<CutPath> {
    let fm = faces(d);
    let Some((start, goal)) = marker_faces(d, &fm)? else {
        return if walk.is_empty() { Ok(CutPath::from_walk(d, Vec::new())) } else { Err(Error::InvalidEdge(walk[0])) };
    };
    let mut cur = start;
    for &e in walk {
        let (h, _) = d.edge_ends(e).ok_or(Error::InvalidEdge(e))?;
        let (a, b) = fm.sides_of(h);
        cur = if cur == a {
            b
        } else if cur == b {
            a
        } else {
            return Err(Error::InvalidEdge(e));
        };
    }
    if cur != goal {
        return Err(Error::Unsupported("dual walk does not end in the outer face".into()));
    }
    Ok(CutPath::from_walk(d, walk.to_vec()))
}
