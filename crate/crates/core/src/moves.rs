//! Local rewrites: kinks, finger moves, disjoint loops and the untwisting of
//! dotted-reducible crossings.
//!
//! Every rewrite keeps the orientation of the strands it touches, so the
//! normalized polynomial of the result can be compared with the original.

use crate::crossing::{classify_nugatory, crossing_signs, tangle, CrossingStatus, Side};
use crate::diagram::{carry_orientation, cut_path, faces, AnnularDiagram, Corner, Crossing, EdgeLabel, Loop, Marker};
use crate::error::{Error, Result};
use crate::poly::SkeinPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteResult {
    pub diagram: AnnularDiagram,
    /// `bracket(diagram) = expected_bracket_factor * bracket(original)`.
    pub expected_bracket_factor: SkeinPolynomial,
    pub crossing_delta: i32,
}

/// Side of the traversal direction (lower half-edge towards its partner) on
/// which a kink's lobe is drawn. For a loop, left is its inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KinkSide {
    Left,
    Right,
}

impl std::str::FromStr for KinkSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(KinkSide::Left),
            "right" => Ok(KinkSide::Right),
            other => Err(Error::Unsupported(format!("kink side `{other}`"))),
        }
    }
}

fn kink_factor(sign: i8) -> SkeinPolynomial {
    SkeinPolynomial::monomial(-1, 3 * sign as i32, 0)
}

pub fn insert_loop(d: &AnnularDiagram, dotted: bool) -> RewriteResult {
    let empty = d.is_empty() && d.loops().is_empty();
    let factor = match (empty, dotted) {
        (true, false) => SkeinPolynomial::one(),
        (true, true) => SkeinPolynomial::monomial(1, 0, 1),
        (false, false) => SkeinPolynomial::delta(),
        (false, true) => SkeinPolynomial::delta().scale(&1, 0, 1).expect("small"),
    };
    let mut loops = d.loops().to_vec();
    loops.push(Loop { dotted });
    let diagram = AnnularDiagram::new(d.crossings().to_vec(), loops, d.puncture(), d.outer())
        .expect("crossings unchanged")
        .with_reversed(d.reversed_components().iter().copied());
    RewriteResult { diagram, expected_bracket_factor: factor, crossing_delta: 0 }
}

/// Adds a kink of the given sign on `edge`. On a diagram without crossings
/// `edge` is the index of the loop to twist.
pub fn r1_insert(d: &AnnularDiagram, edge: EdgeLabel, side: KinkSide, sign: i8) -> Result<RewriteResult> {
    if sign != 1 && sign != -1 {
        return Err(Error::Unsupported(format!("kink sign {sign}")));
    }
    let n = d.crossing_count();
    for j in 0..2 {
        let diagram = if n == 0 {
            twist_loop(d, edge, side, j)?
        } else {
            let (_, h2) = d.edge_ends(edge).ok_or(Error::InvalidEdge(edge))?;
            let (eb, lobe) = (d.max_label() + 1, d.max_label() + 2);
            let ring = match side {
                KinkSide::Left => [edge, eb, lobe, lobe],
                KinkSide::Right => [eb, edge, lobe, lobe],
            };
            let mut crossings = d.crossings().to_vec();
            crossings[h2 / 4].edges[h2 % 4] = eb;
            crossings.push(Crossing::new(std::array::from_fn(|s| ring[(s + 4 - j) % 4])));
            let nd = AnnularDiagram::new(crossings, d.loops().to_vec(), d.puncture(), d.outer())?;
            carry_orientation(d, nd, Some)
        };
        if crossing_signs(&diagram)[n] == sign {
            return Ok(RewriteResult { diagram, expected_bracket_factor: kink_factor(sign), crossing_delta: 1 });
        }
    }
    unreachable!("the two slot offsets give opposite signs")
}

fn twist_loop(d: &AnnularDiagram, index: u32, side: KinkSide, j: usize) -> Result<AnnularDiagram> {
    let i = index as usize;
    let dotted = d.loops().get(i).ok_or(Error::InvalidEdge(index))?.dotted;
    let mut loops = d.loops().to_vec();
    loops.remove(i);
    let ring = [1, 1, 2, 2];
    let x = Crossing::new(std::array::from_fn(|s| ring[(s + 4 - j) % 4]));
    // corner j is bounded by the old loop alone, j+1 and j+3 touch both lobes
    let at = |k: usize| Marker::Corner(Corner::new(0, ((j + k) % 4) as u8));
    let (puncture, outer) = match (side, dotted) {
        (KinkSide::Left, false) => (Marker::Unbounded, at(0)),
        (KinkSide::Left, true) => (at(1), at(0)),
        (KinkSide::Right, false) => (Marker::Unbounded, at(1)),
        (KinkSide::Right, true) => (at(0), at(1)),
    };
    AnnularDiagram::new(vec![x], loops, puncture, outer)
}

/// Pushes a finger of `over` across `under` inside a face both border,
/// creating a bigon. Without an explicit face the lowest-numbered shared face
/// is used.
pub fn r2_insert(d: &AnnularDiagram, over: EdgeLabel, under: EdgeLabel, face: Option<usize>) -> Result<RewriteResult> {
    let e1 = d.edge_ends(over).ok_or(Error::InvalidEdge(over))?;
    let e2 = d.edge_ends(under).ok_or(Error::InvalidEdge(under))?;
    if over == under {
        return Err(Error::Unsupported("R2 needs two distinct edges".into()));
    }
    let fm = faces(d);
    // face on the right when leaving half-edge h along its edge
    let right = |h: usize| fm.face_of(Corner::new(h / 4, ((h % 4 + 3) % 4) as u8));
    let shared: Vec<usize> = [e1.0, e1.1]
        .iter()
        .map(|&h| right(h))
        .filter(|f| [e2.0, e2.1].iter().any(|&g| right(g) == *f))
        .filter(|&f| face.is_none_or(|want| want == f))
        .collect();
    let f = *shared.iter().min().ok_or(Error::NoSharedFace(over, under))?;
    let p1 = if right(e1.0) == f { e1.0 } else { e1.1 };
    let p2 = if right(e2.0) == f { e2.0 } else { e2.1 };
    let (q1, q2) = (d.partner(p1), d.partner(p2));

    let l = d.max_label();
    let (m1, b1, m2, b2) = (l + 1, l + 2, l + 3, l + 4);
    let mut crossings = d.crossings().to_vec();
    crossings[q1 / 4].edges[q1 % 4] = b1;
    crossings[q2 / 4].edges[q2 % 4] = b2;
    crossings.push(Crossing::new([m2, over, b2, m1]));
    crossings.push(Crossing::new([under, b1, m2, m1]));
    let nd = AnnularDiagram::new(crossings, d.loops().to_vec(), d.puncture(), d.outer())?;
    Ok(RewriteResult {
        diagram: carry_orientation(d, nd, Some),
        expected_bracket_factor: SkeinPolynomial::one(),
        crossing_delta: 2,
    })
}

/// Untwists a dotted-reducible crossing: the tangle on the side of a
/// contractible separating curve away from both markers is turned over, after
/// which the crossing disappears.
pub fn remove_dotted_reducible(d: &AnnularDiagram, c: usize) -> Result<RewriteResult> {
    let report = classify_nugatory(d, c)?;
    if report.status != CrossingStatus::DottedReducible {
        return Err(Error::NotDottedReducible(c));
    }
    let sign = crossing_signs(d)[c];
    let factor = kink_factor(-sign);
    let n = d.crossing_count();

    if n == 1 {
        let cp = cut_path(d)?;
        let parity = d.crossings()[0].edges.iter().map(|&e| cp.parity(e)).sum::<u8>() / 2 % 2;
        let mut loops = d.loops().to_vec();
        loops.push(Loop { dotted: parity == 1 });
        return Ok(RewriteResult {
            diagram: AnnularDiagram::from_loops(loops),
            expected_bracket_factor: factor,
            crossing_delta: -1,
        });
    }

    let flipped = report
        .curves
        .iter()
        .filter(|curve| curve.contractible())
        .map(|curve| {
            let k = curve.corners[0].slot as usize;
            let slots = match curve.puncture_side {
                Side::First => [(k + 3) % 4, k],
                Side::Second => [(k + 1) % 4, (k + 2) % 4],
            };
            tangle(d, c, slots.map(|s| s as u8))
        })
        .min_by_key(|t| t.iter().filter(|&&x| x).count())
        .expect("a contractible curve");

    let pos = |h: usize| -> usize {
        let (t, s) = (h / 4, h % 4);
        let s = if flipped[t] { 3 - s } else { s };
        4 * (t - usize::from(t > c)) + s
    };
    let through = |h: usize| -> usize {
        let mut p = d.partner(h);
        while p / 4 == c {
            p = d.partner(4 * c + (p % 4 + 2) % 4);
        }
        p
    };
    let mut edges = vec![[0; 4]; n - 1];
    for h in (0..4 * n).filter(|h| h / 4 != c) {
        let p = pos(h);
        edges[p / 4][p % 4] = d.label(h).min(d.label(through(h)));
    }

    let fm = faces(d);
    let relocate = |m: Marker| -> Marker {
        let Some(f) = fm.marker_face(m).filter(|_| m != Marker::Unbounded) else {
            return m;
        };
        let off_c = |f: usize| fm.faces()[f].corners.iter().find(|x| x.crossing != c).copied();
        let corner = off_c(f).or_else(|| {
            // a lobe at c merges with the lobe opposite it
            let at_c = fm.faces()[f].corners[0];
            off_c(fm.face_of(Corner::new(c, (at_c.slot + 2) % 4)))
        });
        let corner = corner.expect("a face away from the crossing");
        // a turned-over crossing lists its slots backwards, so corner k becomes 2-k
        let slot = if flipped[corner.crossing] { (6 - corner.slot) % 4 } else { corner.slot };
        Marker::Corner(Corner::new(corner.crossing - usize::from(corner.crossing > c), slot))
    };

    let nd = AnnularDiagram::new(
        edges.into_iter().map(Crossing::new).collect(),
        d.loops().to_vec(),
        relocate(d.puncture()),
        relocate(d.outer()),
    )?;
    Ok(RewriteResult {
        diagram: carry_orientation(d, nd, |h| (h / 4 != c).then(|| pos(h))),
        expected_bracket_factor: factor,
        crossing_delta: -1,
    })
}

/// Removes dotted-reducible crossings, lowest index first, until none is left.
pub fn dotted_reduce(d: &AnnularDiagram) -> Result<RewriteResult> {
    let mut diagram = d.clone();
    let mut factor = SkeinPolynomial::one();
    let mut delta = 0;
    while let Some(c) = (0..diagram.crossing_count())
        .find(|&c| classify_nugatory(&diagram, c).is_ok_and(|r| r.status == CrossingStatus::DottedReducible))
    {
        let step = remove_dotted_reducible(&diagram, c)?;
        factor = factor.checked_mul(&step.expected_bracket_factor)?;
        delta += step.crossing_delta;
        diagram = step.diagram;
    }
    Ok(RewriteResult { diagram, expected_bracket_factor: factor, crossing_delta: delta })
}
