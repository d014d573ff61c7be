//! Solid-torus Kauffman bracket.
//!
//! Every Kauffman state contributes `A^(a-b) (-A^2-A^-2)^(|S|-1) t^|T|`,
//! where `a`/`b` count A-/B-smoothings, `|S|` counts state circles and `|T|`
//! counts circles winding an odd number of times around the puncture.
//!
//! Smoothing convention: with slots in counterclockwise order and the under
//! strand on slots 0 and 2, the A-smoothing joins each under half-edge to its
//! counterclockwise successor (0-1, 2-3) and the B-smoothing to its
//! predecessor (0-3, 2-1).

mod recursive;

use rayon::prelude::*;

use crate::diagram::{cut_path, orient, validate, writhe, AnnularDiagram, CutPath, EdgeLabel};
use crate::error::{Error, Result};
use crate::poly::{Coefficient, Poly, SkeinPolynomial};

pub use recursive::evaluate_recursive;

pub const DEFAULT_MAX_STATES: u64 = 1 << 26;

/// A choice of smoothing at every crossing. Bit `c` set means crossing `c`
/// is B-smoothed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct KauffmanState {
    mask: u64,
    len: usize,
}

impl KauffmanState {
    pub fn new(mask: u64, len: usize) -> Self {
        assert!(len <= 64, "at most 64 crossings");
        let keep = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        KauffmanState { mask: mask & keep, len }
    }

    pub fn all_a(len: usize) -> Self {
        Self::new(0, len)
    }

    pub fn all_b(len: usize) -> Self {
        Self::new(u64::MAX, len)
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn is_b(self, crossing: usize) -> bool {
        self.mask >> crossing & 1 == 1
    }

    pub fn b_count(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn a_count(self) -> usize {
        self.len - self.b_count()
    }

    pub fn flipped(self, crossing: usize) -> Self {
        Self::new(self.mask ^ (1 << crossing), self.len)
    }

    /// Every state of `len` crossings in binary counting order.
    pub fn all(len: usize) -> impl Iterator<Item = KauffmanState> {
        (0..1u64 << len).map(move |m| KauffmanState::new(m, len))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    /// Edges in traversal order; empty for crossingless loops.
    pub edges: Vec<EdgeLabel>,
    pub winding_parity: u8,
    /// Index of the crossingless loop this circle is, if any.
    pub from_loop: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateResolution {
    pub circles: Vec<Circle>,
    pub num_circles: usize,
    pub num_dotted: usize,
    pub a: usize,
    pub b: usize,
}

#[inline]
fn mate(half_edge: usize, b_smoothed: bool) -> usize {
    let base = half_edge & !3;
    let s = half_edge & 3;
    if b_smoothed {
        base + 3 - s
    } else {
        base + (s ^ 1)
    }
}

/// Applies the smoothings of `state` and traces the resulting circles.
pub fn resolve_state(d: &AnnularDiagram, state: KauffmanState, cp: &CutPath) -> Result<StateResolution> {
    let n = d.crossing_count();
    if state.len() != n {
        return Err(Error::StateSize { expected: n, got: state.len() });
    }
    let par = cp.half_edge_parities(d);
    let mut visited = vec![false; 4 * n];
    let mut circles = Vec::new();
    for start in 0..4 * n {
        if visited[start] {
            continue;
        }
        let mut edges = Vec::new();
        let mut parity = 0u8;
        let mut h = start;
        loop {
            let p = d.partner(h);
            visited[h] = true;
            visited[p] = true;
            edges.push(d.label(h));
            parity ^= par[h];
            h = mate(p, state.is_b(p / 4));
            if h == start {
                break;
            }
        }
        circles.push(Circle { edges, winding_parity: parity, from_loop: None });
    }
    for (i, l) in d.loops().iter().enumerate() {
        circles.push(Circle { edges: Vec::new(), winding_parity: l.dotted as u8, from_loop: Some(i) });
    }
    let num_dotted = circles.iter().filter(|c| c.winding_parity == 1).count();
    Ok(StateResolution { num_circles: circles.len(), num_dotted, circles, a: state.a_count(), b: state.b_count() })
}

/// `A^(a-b) (-A^2-A^-2)^(|S|-1) t^|T|` expanded.
pub fn state_contribution(r: &StateResolution) -> Result<SkeinPolynomial> {
    contribution(r.a, r.b, r.num_circles, r.num_dotted)
}

pub(crate) fn contribution<C: Coefficient>(a: usize, b: usize, circles: usize, dotted: usize) -> Result<Poly<C>> {
    if circles == 0 {
        return Err(Error::EmptyState);
    }
    let exp = a as i64 - b as i64;
    let exp = i32::try_from(exp).map_err(|_| Error::Overflow)?;
    Poly::<C>::delta().checked_pow((circles - 1) as u32)?.scale(&C::one(), exp, dotted as u32)
}

/// Circle counter for repeated state evaluation on one diagram.
#[derive(Clone, Debug)]
pub struct StateCounter {
    partner: Vec<u32>,
    parity: Vec<u8>,
    crossings: usize,
    loops: usize,
    dotted_loops: usize,
}

impl StateCounter {
    pub fn new(d: &AnnularDiagram, cp: &CutPath) -> Self {
        StateCounter {
            partner: d.partners().iter().map(|&p| p as u32).collect(),
            parity: cp.half_edge_parities(d),
            crossings: d.crossing_count(),
            loops: d.loops().len(),
            dotted_loops: d.loops().iter().filter(|l| l.dotted).count(),
        }
    }

    pub fn crossings(&self) -> usize {
        self.crossings
    }

    /// `(|S|, |T|)` for the state given by `mask`, loops included.
    pub fn counts(&self, mask: u64) -> (usize, usize) {
        let mut visited = vec![false; self.partner.len()];
        self.counts_with(mask, &mut visited)
    }

    fn counts_with(&self, mask: u64, visited: &mut [bool]) -> (usize, usize) {
        visited.fill(false);
        let mut circles = self.loops;
        let mut dotted = self.dotted_loops;
        for start in 0..visited.len() {
            if visited[start] {
                continue;
            }
            circles += 1;
            let mut parity = 0u8;
            let mut h = start;
            loop {
                let p = self.partner[h] as usize;
                visited[h] = true;
                visited[p] = true;
                parity ^= self.parity[h];
                h = mate(p, mask >> (p / 4) & 1 == 1);
                if h == start {
                    break;
                }
            }
            dotted += parity as usize;
        }
        (circles, dotted)
    }

    /// Adds the number of states sharing each `(b, |S|, |T|)`.
    fn accumulate(&self, hist: &mut Histogram, range: std::ops::Range<u64>) {
        let mut visited = vec![false; self.partner.len()];
        for mask in range {
            let (s, t) = self.counts_with(mask, &mut visited);
            hist.bump(mask.count_ones() as usize, s, t, 1);
        }
    }

    fn empty_histogram(&self) -> Histogram {
        Histogram::new(self.crossings, self.max_circles())
    }

    fn max_circles(&self) -> usize {
        // every circle through crossings uses at least one edge
        2 * self.crossings + self.loops
    }
}

#[derive(Clone, Debug)]
struct Histogram {
    dim: usize,
    counts: Vec<u64>,
}

impl Histogram {
    fn new(n: usize, max_circles: usize) -> Self {
        let dim = max_circles + 1;
        Histogram { dim, counts: vec![0; (n + 1) * dim * dim] }
    }

    fn bump(&mut self, b: usize, s: usize, t: usize, by: u64) {
        self.counts[(b * self.dim + s) * self.dim + t] += by;
    }

    fn merge(mut self, other: Histogram) -> Histogram {
        for (x, y) in self.counts.iter_mut().zip(other.counts) {
            *x += y;
        }
        self
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, u64)> + '_ {
        let dim = self.dim;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(i, &c)| (i / (dim * dim), i / dim % dim, i % dim, c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketOptions {
    /// Refuse diagrams with more states than this.
    pub max_states: u64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for BracketOptions {
    fn default() -> Self {
        BracketOptions { max_states: DEFAULT_MAX_STATES, threads: None }
    }
}

impl BracketOptions {
    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        let states = 1u128 << n.min(127);
        if n >= 64 || states > self.max_states as u128 {
            return Err(Error::InstanceTooLarge { states, cap: self.max_states });
        }
        Ok(())
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(k) => rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build().expect("thread pool").install(f),
            None => f(),
        }
    }
}

const CHUNK: u64 = 1 << 12;

pub(crate) fn ensure_valid(d: &AnnularDiagram) -> Result<()> {
    let report = validate(d);
    if report.ok() {
        Ok(())
    } else {
        Err(Error::Invalid(report))
    }
}

/// State-sum bracket over all `2^n` states.
pub fn bracket(d: &AnnularDiagram) -> Result<SkeinPolynomial> {
    bracket_with(d, &BracketOptions::default())
}

pub fn bracket_with<C: Coefficient>(d: &AnnularDiagram, opts: &BracketOptions) -> Result<Poly<C>> {
    ensure_valid(d)?;
    let n = d.crossing_count();
    opts.check_size(n)?;
    if d.is_empty() {
        return Ok(Poly::one());
    }
    let cp = cut_path(d)?;
    let counter = StateCounter::new(d, &cp);
    let total = 1u64 << n;
    let hist = opts.run(|| {
        let chunks = total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .fold(
                || counter.empty_histogram(),
                |mut h, i| {
                    counter.accumulate(&mut h, i * CHUNK..((i + 1) * CHUNK).min(total));
                    h
                },
            )
            .reduce(|| counter.empty_histogram(), Histogram::merge)
    });

    let mut delta_powers: Vec<Poly<C>> = vec![Poly::one()];
    let mut out = Poly::zero();
    for (b, s, t, count) in hist.entries() {
        while delta_powers.len() < s {
            let next = delta_powers.last().unwrap().checked_mul(&Poly::delta())?;
            delta_powers.push(next);
        }
        let coef = C::from_u64(count).ok_or(Error::Overflow)?;
        let a_exp = n as i32 - 2 * b as i32;
        let term = delta_powers[s - 1].scale(&coef, a_exp, t as u32)?;
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

/// `(-A^3)^(-w) <D>`, kept in the variable `A`.
pub fn jones(d: &AnnularDiagram) -> Result<SkeinPolynomial> {
    jones_with(d, &BracketOptions::default())
}

pub fn jones_with<C: Coefficient>(d: &AnnularDiagram, opts: &BracketOptions) -> Result<Poly<C>> {
    let br = bracket_with::<C>(d, opts)?;
    let w = writhe(&orient(d));
    normalize(&br, w)
}

pub(crate) fn normalize<C: Coefficient>(br: &Poly<C>, writhe: i64) -> Result<Poly<C>> {
    let sign = if writhe % 2 == 0 { C::one() } else { C::from_i64(-1) };
    let shift = i32::try_from(-3 * writhe).map_err(|_| Error::Overflow)?;
    br.scale(&sign, shift, 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_a: i32,
    pub min_a: i32,
    pub span_a: i32,
}

pub fn degree_stats<C: Coefficient>(p: &Poly<C>) -> Result<DegreeStats> {
    match (p.max_a(), p.min_a()) {
        (Some(max_a), Some(min_a)) => Ok(DegreeStats { max_a, min_a, span_a: max_a - min_a }),
        _ => Err(Error::ZeroPolynomial),
    }
}

/// Contributions of the all-A and all-B states.
pub fn extreme_state_contributions(d: &AnnularDiagram) -> Result<(SkeinPolynomial, SkeinPolynomial)> {
    ensure_valid(d)?;
    let n = d.crossing_count();
    if d.is_empty() {
        return Ok((Poly::one(), Poly::one()));
    }
    let cp = cut_path(d)?;
    let all_a = resolve_state(d, KauffmanState::all_a(n), &cp)?;
    let all_b = resolve_state(d, KauffmanState::all_b(n), &cp)?;
    Ok((state_contribution(&all_a)?, state_contribution(&all_b)?))
}
