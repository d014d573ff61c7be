use super::{AnnularDiagram, EdgeLabel};

/// One strand component traced through the crossings. A strand entering a
/// crossing at slot `i` leaves it at slot `i + 2 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandComponent {
    /// Edges in traversal order.
    pub edges: Vec<EdgeLabel>,
    /// `(crossing, entry slot)` for every passage, in traversal order.
    pub passages: Vec<(usize, u8)>,
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedComponentSet {
    pub components: Vec<StrandComponent>,
    /// Sign of every crossing, indexed by crossing.
    pub crossing_signs: Vec<i8>,
}

/// Components in default direction, ordered by their smallest edge label.
pub(crate) fn strand_components(d: &AnnularDiagram) -> Vec<StrandComponent> {
    let mut visited = vec![false; 4 * d.crossing_count()];
    let mut out = Vec::new();
    for label in d.edge_labels() {
        let (lo, _) = d.edge_ends(label).expect("label exists");
        if visited[lo] {
            continue;
        }
        out.push(trace(d, lo, &mut visited, false));
    }
    out
}

fn trace(d: &AnnularDiagram, depart: usize, visited: &mut [bool], reversed: bool) -> StrandComponent {
    let mut edges = Vec::new();
    let mut passages = Vec::new();
    let mut out_half = depart;
    loop {
        let arrive = d.partner(out_half);
        visited[out_half] = true;
        visited[arrive] = true;
        edges.push(d.label(out_half));
        let c = arrive / 4;
        let slot = (arrive % 4) as u8;
        passages.push((c, slot));
        out_half = 4 * c + (slot as usize + 2) % 4;
        if out_half == depart {
            break;
        }
    }
    StrandComponent { edges, passages, reversed }
}

/// For every half-edge, whether the oriented strand leaves its crossing there.
pub(crate) fn departures(d: &AnnularDiagram) -> Vec<bool> {
    let mut out = vec![false; 4 * d.crossing_count()];
    for comp in orient(d).components {
        for (c, entry) in comp.passages {
            out[4 * c + (entry as usize + 2) % 4] = true;
        }
    }
    out
}

/// Orients `new` to agree with `old` along surviving half-edges.
pub(crate) fn carry_orientation(
    old: &AnnularDiagram,
    new: AnnularDiagram,
    map: impl Fn(usize) -> Option<usize>,
) -> AnnularDiagram {
    let old_dep = departures(old);
    let mut known = vec![None; 4 * new.crossing_count()];
    for (h, &dep) in old_dep.iter().enumerate() {
        if let Some(h2) = map(h) {
            known[h2] = Some(dep);
        }
    }
    let reversed: Vec<usize> = strand_components(&new)
        .iter()
        .enumerate()
        .filter(|(_, comp)| {
            comp.passages.iter().find_map(|&(c, entry)| known[4 * c + (entry as usize + 2) % 4]) == Some(false)
        })
        .map(|(i, _)| i)
        .collect();
    new.with_reversed(reversed)
}

/// Orients every strand component: away from its smallest edge label's first
/// slot by default, the other way for components flagged reversed.
pub fn orient(d: &AnnularDiagram) -> OrientedComponentSet {
    let defaults = strand_components(d);
    let mut visited = vec![false; 4 * d.crossing_count()];
    let components: Vec<StrandComponent> = defaults
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            let (lo, hi) = d.edge_ends(comp.edges[0]).expect("label exists");
            if d.reversed_components().contains(&i) {
                trace(d, hi, &mut visited, true)
            } else {
                trace(d, lo, &mut visited, false)
            }
        })
        .collect();

    let n = d.crossing_count();
    let mut over_out = vec![0u8; n];
    let mut under_out = vec![0u8; n];
    for comp in &components {
        for &(c, entry) in &comp.passages {
            let exit = (entry + 2) % 4;
            if exit % 2 == 1 {
                over_out[c] = exit;
            } else {
                under_out[c] = exit;
            }
        }
    }
    let crossing_signs = (0..n).map(|c| if under_out[c] == (over_out[c] + 1) % 4 { 1 } else { -1 }).collect();
    OrientedComponentSet { components, crossing_signs }
}

pub fn writhe(o: &OrientedComponentSet) -> i64 {
    o.crossing_signs.iter().map(|&s| s as i64).sum()
}

/// Every component alternates over and under passages along its traversal.
pub fn is_alternating(d: &AnnularDiagram) -> bool {
    strand_components(d).iter().all(|comp| {
        let k = comp.passages.len();
        (0..k).all(|i| comp.passages[i].1 % 2 != comp.passages[(i + 1) % k].1 % 2)
    })
}
