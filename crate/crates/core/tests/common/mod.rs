//! Independent oracles and shared fixtures for the integration tests.
//!
//! The oracle reads only the raw crossing lists and markers. Faces, the cut
//! path (depth-first here, breadth-first in the library), circle counting
//! (union-find) and polynomial arithmetic are all redone from scratch.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use solidtorus::diagram::{AnnularDiagram, Marker};
use solidtorus::generate::{generate_random, GeneratorConfig, PuncturePolicy};
use solidtorus::moves::dotted_reduce;
use solidtorus::SkeinPolynomial;

/// `(t, a) -> coefficient`, zero terms removed.
pub type Terms = BTreeMap<(u32, i32), i64>;

pub fn terms_of(p: &SkeinPolynomial) -> Terms {
    p.terms().map(|(a, t, c)| ((t, a), *c)).collect()
}

fn add(acc: &mut Terms, key: (u32, i32), c: i64) {
    let e = acc.entry(key).or_insert(0);
    *e += c;
    if *e == 0 {
        acc.remove(&key);
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `A^a delta^k t^t` expanded: delta^k = sum_j C(k,j) (-1)^k A^(2k-4j).
pub fn add_state(acc: &mut Terms, a: i32, k: u32, t: u32) {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    for j in 0..=k {
        add(acc, (t, a + 2 * k as i32 - 4 * j as i32), sign * binomial(k as u64, j as u64));
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

pub struct Oracle {
    pub n: usize,
    partner: Vec<usize>,
    /// Parity of the edge at each half-edge.
    parity: Vec<u8>,
    plain_loops: u32,
    dotted_loops: u32,
}

impl Oracle {
    pub fn new(d: &AnnularDiagram) -> Self {
        Self::with_parities(d, true)
    }

    /// Ignores the puncture: every circle counts as plain.
    pub fn classical(d: &AnnularDiagram) -> Self {
        Self::with_parities(d, false)
    }

    fn with_parities(d: &AnnularDiagram, punctured: bool) -> Self {
        let n = d.crossings().len();
        let labels: Vec<u32> = d.crossings().iter().flat_map(|x| x.edges).collect();
        let mut ends: HashMap<u32, Vec<usize>> = HashMap::new();
        for (h, &l) in labels.iter().enumerate() {
            ends.entry(l).or_default().push(h);
        }
        let mut partner = vec![0; 4 * n];
        for hs in ends.values() {
            assert_eq!(hs.len(), 2);
            partner[hs[0]] = hs[1];
            partner[hs[1]] = hs[0];
        }

        // faces as corner orbits
        let mut face = vec![usize::MAX; 4 * n];
        let mut count = 0;
        for start in 0..4 * n {
            if face[start] != usize::MAX {
                continue;
            }
            let mut i = start;
            while face[i] == usize::MAX {
                face[i] = count;
                i = partner[4 * (i / 4) + (i % 4 + 1) % 4];
            }
            count += 1;
        }

        let mut parity_of: HashMap<u32, u8> = HashMap::new();
        if punctured && n > 0 {
            let corner = |m: Marker| match m {
                Marker::Corner(c) => Some(face[4 * c.crossing + c.slot as usize]),
                Marker::Unbounded => None,
            };
            let goal = corner(d.outer()).expect("outer corner");
            let start = corner(d.puncture()).unwrap_or(goal);
            // dual edges: the edge at half-edge h separates face[h] from the
            // face of the corner just clockwise of it
            let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); count];
            for h in 0..4 * n {
                let other = face[4 * (h / 4) + (h % 4 + 3) % 4];
                adj[face[h]].push((other, labels[h]));
            }
            let mut prev: Vec<Option<(usize, u32)>> = vec![None; count];
            let mut seen = vec![false; count];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(f) = stack.pop() {
                for &(g, e) in adj[f].iter().rev() {
                    if !seen[g] {
                        seen[g] = true;
                        prev[g] = Some((f, e));
                        stack.push(g);
                    }
                }
            }
            assert!(seen[goal], "outer face unreachable");
            let mut cur = goal;
            while let Some((f, e)) = prev[cur] {
                *parity_of.entry(e).or_insert(0) ^= 1;
                cur = f;
            }
        }
        let parity = labels.iter().map(|l| parity_of.get(l).copied().unwrap_or(0)).collect();
        let dotted = d.loops().iter().filter(|l| l.dotted).count() as u32;
        let (plain_loops, dotted_loops) =
            if punctured { (d.loops().len() as u32 - dotted, dotted) } else { (d.loops().len() as u32, 0) };
        Oracle { n, partner, parity, plain_loops, dotted_loops }
    }

    /// `(|S|, |T|)` of the state whose B-smoothed crossings are the set bits.
    pub fn counts(&self, mask: u64) -> (u32, u32) {
        let mut uf = UnionFind((0..4 * self.n).collect());
        for h in 0..4 * self.n {
            uf.union(h, self.partner[h]);
        }
        for c in 0..self.n {
            let b = 4 * c;
            if mask >> c & 1 == 1 {
                uf.union(b, b + 3);
                uf.union(b + 1, b + 2);
            } else {
                uf.union(b, b + 1);
                uf.union(b + 2, b + 3);
            }
        }
        let mut odd: HashMap<usize, u8> = HashMap::new();
        for h in 0..4 * self.n {
            let r = uf.find(h);
            let e = odd.entry(r).or_insert(0);
            if h < self.partner[h] {
                *e ^= self.parity[h];
            }
        }
        let circles = odd.len() as u32 + self.plain_loops + self.dotted_loops;
        let dotted = odd.values().filter(|&&p| p == 1).count() as u32 + self.dotted_loops;
        (circles, dotted)
    }

    pub fn bracket(&self) -> Terms {
        let mut acc = Terms::new();
        if self.n == 0 && self.plain_loops + self.dotted_loops == 0 {
            acc.insert((0, 0), 1);
            return acc;
        }
        for mask in 0..1u64 << self.n {
            let b = mask.count_ones() as i32;
            let (s, t) = self.counts(mask);
            add_state(&mut acc, self.n as i32 - 2 * b, s - 1, t);
        }
        acc
    }
}

/// Writhe by direct strand tracing: leave the lower half-edge of each
/// component's smallest label (the upper one for reversed components), sign
/// +1 when the under exit follows the over exit counterclockwise.
pub fn oracle_writhe(d: &AnnularDiagram) -> i64 {
    let n = d.crossings().len();
    let labels: Vec<u32> = d.crossings().iter().flat_map(|x| x.edges).collect();
    let other = |h: usize| (0..4 * n).find(|&g| g != h && labels[g] == labels[h]).unwrap();
    let mut order: Vec<usize> = (0..4 * n).collect();
    order.sort_by_key(|&h| (labels[h], h));
    let mut exit_slot = vec![[None::<usize>; 2]; n];
    let mut done = vec![false; 4 * n];
    let mut component = 0;
    for &first in &order {
        if done[first] {
            continue;
        }
        let start = if d.reversed_components().contains(&component) { other(first) } else { first };
        component += 1;
        let mut out = start;
        loop {
            done[out] = true;
            let arrive = other(out);
            done[arrive] = true;
            let c = arrive / 4;
            let exit = (arrive % 4 + 2) % 4;
            exit_slot[c][exit % 2] = Some(exit);
            out = 4 * c + exit;
            if out == start {
                break;
            }
        }
    }
    exit_slot.iter().map(|[under, over]| if under.unwrap() == (over.unwrap() + 1) % 4 { 1 } else { -1 }).sum()
}

pub fn mul(p: &Terms, q: &Terms) -> Terms {
    let mut acc = Terms::new();
    for (&(t1, a1), &c1) in p {
        for (&(t2, a2), &c2) in q {
            add(&mut acc, (t1 + t2, a1 + a2), c1 * c2);
        }
    }
    acc
}

/// -A^2 - A^-2
pub fn delta() -> Terms {
    [((0, 2), -1), ((0, -2), -1)].into_iter().collect()
}

pub fn span(p: &Terms) -> i32 {
    let max = p.keys().map(|k| k.1).max().unwrap();
    let min = p.keys().map(|k| k.1).min().unwrap();
    max - min
}

/// Jones in A from the oracle bracket and writhe.
pub fn oracle_jones(d: &AnnularDiagram) -> Terms {
    let w = oracle_writhe(d);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Oracle::new(d).bracket().into_iter().map(|((t, a), c)| ((t, a - 3 * w as i32), sign * c)).collect()
}

/// Random diagrams over all puncture policies, alternating or not, each
/// followed by its dotted-reduced form when that still has crossings.
pub fn population(seed: u64, per_stream: usize, max_n: usize) -> Vec<AnnularDiagram> {
    let mut out = Vec::new();
    let policies = [PuncturePolicy::Outer, PuncturePolicy::UniformRandomFace, PuncturePolicy::AdversarialInner];
    for (i, policy) in policies.into_iter().enumerate() {
        for (j, alternating) in [true, false].into_iter().enumerate() {
            let cfg = GeneratorConfig {
                min_crossings: 1,
                max_crossings: max_n,
                alternating,
                policy,
                seed: seed + 2 * i as u64 + j as u64,
            };
            for d in generate_random(cfg).take(per_stream) {
                let reduced = dotted_reduce(&d).expect("reduction").diagram;
                out.push(d);
                if reduced.crossing_count() > 0 {
                    out.push(reduced);
                }
            }
        }
    }
    out
}
