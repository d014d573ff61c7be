use super::{carry_orientation, faces, AnnularDiagram, Corner, Crossing, Marker};

/// Changes every crossing: the over strand becomes the under strand. The
/// rotation order is kept, so slots shift by one and so do the corner tokens.
/// Strand directions are preserved.
pub fn mirror(d: &AnnularDiagram) -> AnnularDiagram {
    let crossings = d
        .crossings()
        .iter()
        .map(|x| {
            let [a, b, c, e] = x.edges;
            Crossing::new([b, c, e, a])
        })
        .collect();
    let shift = |m: Marker| match m {
        Marker::Corner(c) => Marker::Corner(Corner::new(c.crossing, (c.slot + 3) % 4)),
        Marker::Unbounded => Marker::Unbounded,
    };
    let m = AnnularDiagram::new(crossings, d.loops().to_vec(), shift(d.puncture()), shift(d.outer()))
        .expect("mirror keeps edge multiplicities");
    carry_orientation(d, m, |h| Some(4 * (h / 4) + (h % 4 + 3) % 4))
}

/// Relabeling-invariant fingerprint. Two diagrams get equal keys iff they
/// differ only by crossing order, edge labels, rotating slots by two at a
/// crossing (which keeps the under strand on slots 0 and 2), and the choice
/// of corner token within the marked faces. Orientation flags are ignored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pieces: Vec<Vec<u64>>,
    plain_loops: usize,
    dotted_loops: usize,
}

pub fn canonical_key(d: &AnnularDiagram) -> CanonicalKey {
    let fm = faces(d);
    let marker_faces = [fm.puncture_face().map(|f| f as u64), fm.outer_face().map(|f| f as u64)];
    let mut pieces: Vec<Vec<u64>> = d
        .pieces()
        .iter()
        .map(|members| {
            let mut best: Option<Vec<u64>> = None;
            for &start in members {
                for offset in [0u8, 2] {
                    let key = encode_from(d, &fm, start, offset, &marker_faces);
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
            best.unwrap_or_default()
        })
        .collect();
    pieces.sort();
    let dotted_loops = d.loops().iter().filter(|l| l.dotted).count();
    CanonicalKey { pieces, plain_loops: d.loops().len() - dotted_loops, dotted_loops }
}

fn encode_from(
    d: &AnnularDiagram,
    fm: &super::FaceMap,
    start: usize,
    offset: u8,
    marker_faces: &[Option<u64>; 2],
) -> Vec<u64> {
    let n = d.crossing_count();
    let mut new_index = vec![usize::MAX; n];
    let mut offsets = vec![0u8; n];
    let mut order = vec![start];
    new_index[start] = 0;
    offsets[start] = offset;
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        i += 1;
        for j in 0..4u8 {
            let s = (j + offsets[c]) % 4;
            let p = d.partner(4 * c + s as usize);
            let (pc, ps) = (p / 4, (p % 4) as u8);
            if new_index[pc] == usize::MAX {
                new_index[pc] = order.len();
                offsets[pc] = ps - ps % 2;
                order.push(pc);
            }
        }
    }

    let mut relabel = std::collections::HashMap::new();
    let mut key = Vec::with_capacity(4 * order.len() + 2);
    for &c in &order {
        for j in 0..4u8 {
            let label = d.edge_at(c, j + offsets[c]);
            let next = relabel.len() as u64;
            key.push(*relabel.entry(label).or_insert(next));
        }
    }
    for mf in marker_faces {
        let code = mf
            .and_then(|f| {
                fm.faces()[f as usize]
                    .corners
                    .iter()
                    .filter(|c| new_index[c.crossing] != usize::MAX)
                    .map(|c| {
                        let slot = (c.slot + 4 - offsets[c.crossing]) % 4;
                        (4 * new_index[c.crossing] + slot as usize) as u64
                    })
                    .min()
            })
            .unwrap_or(u64::MAX);
        key.push(code);
    }
    key
}
