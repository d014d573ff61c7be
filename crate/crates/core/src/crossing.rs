//! Nugatory crossings and their classification relative to the puncture.
//!
//! A crossing is nugatory when two opposite corners lie in one face `F`. A
//! simple closed curve then runs through `F` and the double point, splitting
//! the diagram into two tangles. The curve is contractible in the solid torus
//! exactly when the puncture and the outer face end up on the same side.

use serde::Serialize;

use crate::diagram::{cut_path, faces, orient, AnnularDiagram, Corner, FaceMap};
use crate::error::{Error, Result};
use crate::skein::{ensure_valid, BracketOptions, KauffmanState, StateCounter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingStatus {
    NonNugatory,
    DottedReducible,
    DottedIrreducible,
}

impl std::fmt::Display for CrossingStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CrossingStatus::NonNugatory => "non-nugatory",
            CrossingStatus::DottedReducible => "dotted-reducible",
            CrossingStatus::DottedIrreducible => "dotted-irreducible",
        })
    }
}

/// Side of a separating curve. `First` holds the strands at slots `k+1` and
/// `k+2` when the curve passes through corners `k` and `k+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    First,
    Second,
}

/// One isotopy class of separating curve through a crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingCurve {
    pub corners: [Corner; 2],
    pub face: usize,
    pub puncture_side: Side,
    pub outer_side: Side,
}

impl SeparatingCurve {
    pub fn contractible(&self) -> bool {
        self.puncture_side == self.outer_side
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub crossing: usize,
    pub status: CrossingStatus,
    pub curves: Vec<SeparatingCurve>,
}

/// Opposite corner pairs `(k, k+2)` with `k` in `{0, 1}` that share a face.
fn shared_pairs(fm: &FaceMap, c: usize) -> Vec<u8> {
    (0..2u8).filter(|&k| fm.face_of(Corner::new(c, k)) == fm.face_of(Corner::new(c, k + 2))).collect()
}

pub fn nugatory_crossings(d: &AnnularDiagram) -> Vec<usize> {
    let fm = faces(d);
    (0..d.crossing_count()).filter(|&c| !shared_pairs(&fm, c).is_empty()).collect()
}

/// Crossings reachable from the given slots of `c` without passing through `c`.
pub(crate) fn tangle(d: &AnnularDiagram, c: usize, slots: [u8; 2]) -> Vec<bool> {
    let mut inside = vec![false; d.crossing_count()];
    let mut stack: Vec<usize> = slots.iter().map(|&s| d.partner(4 * c + s as usize) / 4).filter(|&x| x != c).collect();
    while let Some(x) = stack.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        for s in 0..4 {
            let y = d.partner(4 * x + s) / 4;
            if y != c && !inside[y] {
                stack.push(y);
            }
        }
    }
    inside
}

/// Side of a face other than the shared one, read off any of its corners.
fn face_side(fm: &FaceMap, face: usize, c: usize, k: u8, first: &[bool]) -> Side {
    let corner = fm.faces()[face].corners[0];
    if corner.crossing == c {
        if corner.slot == (k + 1) % 4 {
            Side::First
        } else {
            Side::Second
        }
    } else if first[corner.crossing] {
        Side::First
    } else {
        Side::Second
    }
}

fn curves_through(d: &AnnularDiagram, fm: &FaceMap, c: usize, k: u8) -> Vec<SeparatingCurve> {
    let shared = fm.face_of(Corner::new(c, k));
    let piece = fm.faces()[shared].piece;
    let first = tangle(d, c, [(k + 1) % 4, (k + 2) % 4]);
    // a marker off this piece or inside the shared face can sit on either side
    let options = |face: Option<usize>| -> Vec<Side> {
        match face {
            Some(f) if f != shared && fm.faces()[f].piece == piece => {
                vec![face_side(fm, f, c, k, &first)]
            }
            _ => vec![Side::First, Side::Second],
        }
    };
    let mut out = Vec::new();
    for &p in &options(fm.puncture_face()) {
        for &o in &options(fm.outer_face()) {
            out.push(SeparatingCurve {
                corners: [Corner::new(c, k), Corner::new(c, k + 2)],
                face: shared,
                puncture_side: p,
                outer_side: o,
            });
        }
    }
    out
}

fn report(d: &AnnularDiagram, fm: &FaceMap, c: usize) -> CrossingReport {
    let curves: Vec<SeparatingCurve> =
        shared_pairs(fm, c).into_iter().flat_map(|k| curves_through(d, fm, c, k)).collect();
    let status = if curves.is_empty() {
        CrossingStatus::NonNugatory
    } else if curves.iter().any(SeparatingCurve::contractible) {
        CrossingStatus::DottedReducible
    } else {
        CrossingStatus::DottedIrreducible
    };
    CrossingReport { crossing: c, status, curves }
}

pub fn classify_nugatory(d: &AnnularDiagram, c: usize) -> Result<CrossingReport> {
    if c >= d.crossing_count() {
        return Err(Error::NoSuchCrossing(c));
    }
    let r = report(d, &faces(d), c);
    if r.status == CrossingStatus::NonNugatory {
        return Err(Error::NotNugatory(c));
    }
    Ok(r)
}

/// Reports for every crossing, nugatory or not.
pub fn classify_crossings(d: &AnnularDiagram) -> Vec<CrossingReport> {
    let fm = faces(d);
    (0..d.crossing_count()).map(|c| report(d, &fm, c)).collect()
}

pub fn is_dotted_reduced(d: &AnnularDiagram) -> bool {
    classify_crossings(d).iter().all(|r| r.status != CrossingStatus::DottedReducible)
}

/// Sign of each crossing under the default orientation.
pub fn crossing_signs(d: &AnnularDiagram) -> Vec<i8> {
    orient(d).crossing_signs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateAdjacency {
    pub from: KauffmanState,
    pub to: KauffmanState,
    pub crossing: usize,
    pub delta_circles: i32,
    pub delta_dotted: i32,
}

/// Every pair of states differing at one crossing, listed once with the
/// A-smoothed side as `from`.
pub fn state_adjacency_scan(d: &AnnularDiagram, opts: &BracketOptions) -> Result<Vec<StateAdjacency>> {
    ensure_valid(d)?;
    let n = d.crossing_count();
    opts.check_size(n)?;
    let counter = StateCounter::new(d, &cut_path(d)?);
    let counts: Vec<(usize, usize)> = (0..1u64 << n).map(|m| counter.counts(m)).collect();
    let mut out = Vec::with_capacity(n << n.saturating_sub(1));
    for mask in 0..1u64 << n {
        for c in (0..n).filter(|&c| mask >> c & 1 == 0) {
            let to = mask | 1 << c;
            let (s0, t0) = counts[mask as usize];
            let (s1, t1) = counts[to as usize];
            out.push(StateAdjacency {
                from: KauffmanState::new(mask, n),
                to: KauffmanState::new(to, n),
                crossing: c,
                delta_circles: s1 as i32 - s0 as i32,
                delta_dotted: t1 as i32 - t0 as i32,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{mirror, parse_diagram};

    fn d(s: &str) -> AnnularDiagram {
        parse_diagram(s).unwrap()
    }

    const TREFOIL: &str = "X 0: 1 4 2 5\nX 1: 5 2 6 3\nX 2: 3 6 4 1\nouter: 0.0\n";

    #[test]
    fn trefoil_has_no_nugatory_crossings() {
        let t = d(TREFOIL);
        assert!(crate::diagram::validate(&t).ok());
        assert!(nugatory_crossings(&t).is_empty());
        assert!(is_dotted_reduced(&t));
        assert_eq!(classify_nugatory(&t, 1), Err(Error::NotNugatory(1)));
    }

    #[test]
    fn kink_with_markers_outside_is_reducible() {
        // corners 0.1 and 0.3 lie in the face bordering both lobes
        let k = d("X 0: 1 1 2 2\nouter: 0.1\n");
        assert_eq!(nugatory_crossings(&k), vec![0]);
        let r = classify_nugatory(&k, 0).unwrap();
        assert_eq!(r.status, CrossingStatus::DottedReducible);
        assert!(!is_dotted_reduced(&k));
    }

    #[test]
    fn kink_separating_puncture_from_outer_is_irreducible() {
        let k = d("X 0: 1 1 2 2\npuncture: 0.0\nouter: 0.2\n");
        let r = classify_nugatory(&k, 0).unwrap();
        assert_eq!(r.status, CrossingStatus::DottedIrreducible);
        assert_eq!(r.curves.len(), 1);
        assert!(is_dotted_reduced(&k));
        assert_eq!(classify_nugatory(&mirror(&k), 0).unwrap().status, CrossingStatus::DottedIrreducible);
    }

    #[test]
    fn puncture_in_lobe_with_outer_in_shared_face_is_reducible() {
        let k = d("X 0: 1 1 2 2\npuncture: 0.0\nouter: 0.1\n");
        let r = classify_nugatory(&k, 0).unwrap();
        assert_eq!(r.status, CrossingStatus::DottedReducible);
        assert_eq!(r.curves.len(), 2);
    }

    #[test]
    fn puncture_in_shared_face_is_reducible() {
        let k = d("X 0: 1 1 2 2\npuncture: 0.3\nouter: 0.0\n");
        assert_eq!(classify_nugatory(&k, 0).unwrap().status, CrossingStatus::DottedReducible);
    }

    #[test]
    fn adjacency_deltas_are_unit_and_antisymmetric() {
        let t = d(TREFOIL);
        let scan = state_adjacency_scan(&t, &BracketOptions::default()).unwrap();
        assert_eq!(scan.len(), 3 * 4);
        for a in &scan {
            assert!(a.delta_circles.abs() == 1);
            assert_eq!(a.to.flipped(a.crossing), a.from);
        }
        // a reduced diagram loses a circle when any crossing leaves all-A
        for a in scan.iter().filter(|a| a.from.mask() == 0) {
            assert_eq!(a.delta_circles, -1);
        }
    }

    #[test]
    fn negative_kink_splits_from_all_a() {
        let k = mirror(&d("X 0: 1 1 2 2\nouter: 0.1\n"));
        assert_eq!(crossing_signs(&k), vec![-1]);
        let scan = state_adjacency_scan(&k, &BracketOptions::default()).unwrap();
        assert_eq!(scan[0].delta_circles, 1);
    }
}
