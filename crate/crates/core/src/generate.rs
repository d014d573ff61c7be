//! Random annular diagrams.
//!
//! Every connected 4-valent plane diagram is the medial graph of a connected
//! plane graph (its checkerboard graph). We grow a random plane graph one
//! edge at a time, either hanging a new vertex into a corner or drawing a
//! chord between two corners of one face, then take its medial graph. Giving
//! every crossing the same rotation offset yields an alternating diagram.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crossing::nugatory_crossings;
use crate::diagram::{faces, validate, AnnularDiagram, Corner, Crossing, Loop, Marker};
use crate::error::{Error, Result};

/// Plane multigraph as a rotation system. Edge `e` owns darts `2e` and
/// `2e + 1`; each vertex lists its darts counterclockwise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
}

impl PlaneGraph {
    /// A single vertex and no edges.
    pub fn point() -> Self {
        PlaneGraph { rotations: vec![Vec::new()], vertex_of: Vec::new() }
    }

    /// Builds a graph from counterclockwise dart lists and checks planarity
    /// with the Euler count.
    pub fn from_rotations(rotations: Vec<Vec<usize>>) -> Result<Self> {
        let darts: usize = rotations.iter().map(Vec::len).sum();
        let mut vertex_of = vec![usize::MAX; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for &d in rot {
                if d >= darts || vertex_of[d] != usize::MAX {
                    return Err(Error::Unsupported(format!("bad dart {d} in rotation system")));
                }
                vertex_of[d] = v;
            }
        }
        if darts % 2 == 1 {
            return Err(Error::Unsupported("odd number of darts".into()));
        }
        let g = PlaneGraph { rotations, vertex_of };
        let (v, e, f) = (g.rotations.len(), g.edge_count(), g.face_corners().len());
        if v + f != e + 2 || !g.is_connected() {
            return Err(Error::Unsupported("rotation system is not a connected plane graph".into()));
        }
        Ok(g)
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_of.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.rotations.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &self.rotations[v] {
                let w = self.vertex_of[d ^ 1];
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn sigma(&self, d: usize) -> usize {
        let rot = &self.rotations[self.vertex_of[d]];
        let i = rot.iter().position(|&x| x == d).expect("dart in rotation");
        rot[(i + 1) % rot.len()]
    }

    fn sigma_inv(&self, d: usize) -> usize {
        let rot = &self.rotations[self.vertex_of[d]];
        let i = rot.iter().position(|&x| x == d).expect("dart in rotation");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Faces as lists of corners; corner `d` is the angle from dart `d` to
    /// its counterclockwise successor.
    pub fn face_corners(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_of.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        if n == 0 {
            return vec![Vec::new()];
        }
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.sigma(d) ^ 1;
            }
            out.push(face);
        }
        out
    }

    fn insert_after(&mut self, corner: usize, dart: usize) {
        let v = self.vertex_of[corner];
        let rot = &mut self.rotations[v];
        let i = rot.iter().position(|&x| x == corner).expect("corner dart");
        rot.insert(i + 1, dart);
        self.vertex_of.push(v);
    }

    /// Hangs a new vertex into `corner` (or onto the lone vertex of an
    /// edgeless graph).
    pub fn add_pendant(&mut self, corner: Option<usize>) {
        let x = self.vertex_of.len();
        match corner {
            Some(c) => self.insert_after(c, x),
            None => {
                self.rotations[0].push(x);
                self.vertex_of.push(0);
            }
        }
        self.rotations.push(vec![x + 1]);
        self.vertex_of.push(self.rotations.len() - 1);
    }

    /// Draws an edge between two corners of one face; equal corners give a
    /// loop. With no edges yet, adds a loop at the lone vertex.
    pub fn add_chord(&mut self, from: Option<usize>, to: Option<usize>) {
        let x = self.vertex_of.len();
        match (from, to) {
            (Some(a), Some(b)) if a == b => {
                self.insert_after(a, x);
                self.insert_after(x, x + 1);
            }
            (Some(a), Some(b)) => {
                self.insert_after(a, x);
                self.insert_after(b, x + 1);
            }
            _ => {
                self.rotations[0].extend([x, x + 1]);
                self.vertex_of.extend([0, 0]);
            }
        }
    }

    /// Medial diagram: one crossing per edge, one diagram edge per corner.
    /// `offsets[e]` rotates the slots of crossing `e`, choosing which strand
    /// is under; equal offsets everywhere give an alternating diagram.
    pub fn medial(&self, offsets: &[u8]) -> AnnularDiagram {
        let label = |corner: usize| corner as u32 + 1;
        let crossings = (0..self.edge_count())
            .map(|e| {
                let (d, dd) = (2 * e, 2 * e + 1);
                // counterclockwise around the edge midpoint, u on the left
                let ring = [label(self.sigma_inv(dd)), label(d), label(self.sigma_inv(d)), label(dd)];
                let o = offsets[e] as usize % 4;
                Crossing::new(std::array::from_fn(|j| ring[(j + o) % 4]))
            })
            .collect();
        AnnularDiagram::new(crossings, Vec::new(), Marker::Unbounded, Marker::Unbounded)
            .expect("medial edges appear twice")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PuncturePolicy {
    /// Puncture in the outer face: the classical case.
    Outer,
    UniformRandomFace,
    /// Prefer faces touching nugatory crossings.
    AdversarialInner,
}

impl std::str::FromStr for PuncturePolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "outer" => Ok(PuncturePolicy::Outer),
            "uniform" | "uniform-random-face" => Ok(PuncturePolicy::UniformRandomFace),
            "adversarial" | "adversarial-inner" => Ok(PuncturePolicy::AdversarialInner),
            other => Err(Error::Unsupported(format!("puncture policy `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorConfig {
    pub min_crossings: usize,
    pub max_crossings: usize,
    pub alternating: bool,
    pub policy: PuncturePolicy,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            min_crossings: 1,
            max_crossings: 8,
            alternating: true,
            policy: PuncturePolicy::UniformRandomFace,
            seed: 0,
        }
    }
}

/// Infinite deterministic stream of validated diagrams.
pub fn generate_random(cfg: GeneratorConfig) -> impl Iterator<Item = AnnularDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    std::iter::from_fn(move || loop {
        let n = rng.gen_range(cfg.min_crossings..=cfg.max_crossings.max(cfg.min_crossings));
        let d = random_diagram(&mut rng, n, cfg.alternating, cfg.policy);
        if validate(&d).ok() {
            return Some(d);
        }
    })
}

fn random_plane_graph(rng: &mut impl Rng, edges: usize) -> PlaneGraph {
    let mut g = PlaneGraph::point();
    for _ in 0..edges {
        let pendant = rng.gen_bool(0.3);
        if g.edge_count() == 0 {
            if pendant {
                g.add_pendant(None);
            } else {
                g.add_chord(None, None);
            }
            continue;
        }
        if pendant {
            let corner = rng.gen_range(0..2 * g.edge_count());
            g.add_pendant(Some(corner));
        } else {
            let faces = g.face_corners();
            let face = faces.choose(rng).expect("a face");
            let a = *face.choose(rng).expect("a corner");
            let b = *face.choose(rng).expect("a corner");
            g.add_chord(Some(a), Some(b));
        }
    }
    g
}

fn random_diagram(rng: &mut impl Rng, n: usize, alternating: bool, policy: PuncturePolicy) -> AnnularDiagram {
    if n == 0 {
        return AnnularDiagram::from_loops(vec![Loop { dotted: rng.gen_bool(0.5) }]);
    }
    let g = random_plane_graph(rng, n);
    let offsets: Vec<u8> =
        if alternating { vec![rng.gen_range(0..2); n] } else { (0..n).map(|_| rng.gen_range(0..2)).collect() };
    let d = g.medial(&offsets);
    let fm = faces(&d);
    let pick_corner = |rng: &mut dyn rand::RngCore, face: usize| -> Marker {
        let corners = &fm.faces()[face].corners;
        Marker::Corner(corners[rng.gen_range(0..corners.len())])
    };
    let outer_face = rng.gen_range(0..fm.len());
    let outer = pick_corner(rng, outer_face);
    let puncture = match policy {
        PuncturePolicy::Outer => Marker::Unbounded,
        PuncturePolicy::UniformRandomFace => {
            let f = rng.gen_range(0..fm.len());
            pick_corner(rng, f)
        }
        PuncturePolicy::AdversarialInner => {
            let d0 = d.clone().with_markers(Marker::Unbounded, outer);
            let mut candidates: Vec<usize> = nugatory_crossings(&d0)
                .into_iter()
                .flat_map(|c| (0..4).map(move |s| Corner::new(c, s)))
                .map(|c| fm.face_of(c))
                .filter(|&f| f != outer_face)
                .collect();
            candidates.sort_unstable();
            candidates.dedup();
            let f = if candidates.is_empty() {
                rng.gen_range(0..fm.len())
            } else {
                candidates[rng.gen_range(0..candidates.len())]
            };
            pick_corner(rng, f)
        }
    };
    d.with_markers(puncture, outer)
}
