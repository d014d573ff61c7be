//! Bracket by recursive crossing resolution, kept as an independent check on
//! the state sum.
//!
//! Crossings are resolved one at a time with `<X> = A <)(> + A^-1 <=>`.
//! The remaining diagram is a wiring between the half-edges of unresolved
//! crossings; smoothing a crossing splices wires together, and a wire that
//! closes on itself is peeled off as a free circle using
//! `<D u O> = (-A^2-A^-2) <D>` and its dotted version.

use crate::diagram::{cut_path, AnnularDiagram};
use crate::error::Result;
use crate::poly::SkeinPolynomial;

use super::{ensure_valid, BracketOptions};

#[derive(Clone)]
struct Wiring {
    /// Far end of the wire leaving each half-edge.
    to: Vec<usize>,
    /// Winding parity accumulated along that wire.
    parity: Vec<u8>,
    plain: u32,
    dotted: u32,
}

impl Wiring {
    fn splice(&mut self, x: usize, y: usize) {
        let px = self.to[x];
        if px == y {
            if self.parity[x] == 1 {
                self.dotted += 1;
            } else {
                self.plain += 1;
            }
            return;
        }
        let py = self.to[y];
        let par = self.parity[x] ^ self.parity[y];
        self.to[px] = py;
        self.to[py] = px;
        self.parity[px] = par;
        self.parity[py] = par;
    }

    fn smooth(&self, c: usize, b: bool) -> Wiring {
        let mut w = self.clone();
        let base = 4 * c;
        if b {
            w.splice(base, base + 3);
            w.splice(base + 2, base + 1);
        } else {
            w.splice(base, base + 1);
            w.splice(base + 2, base + 3);
        }
        w
    }

    /// Value of a crossingless collection of circles.
    fn value(&self) -> Result<SkeinPolynomial> {
        let k = self.plain + self.dotted;
        if k == 0 {
            return Ok(SkeinPolynomial::one());
        }
        // <O> = 1 or <dotted O> = t for the last circle, a factor of
        // (-A^2-A^-2) or (-A^2-A^-2) t for each other one
        SkeinPolynomial::delta().checked_pow(k - 1)?.scale(&1, 0, self.dotted)
    }
}

fn eval(w: &Wiring, next: usize, n: usize) -> Result<SkeinPolynomial> {
    if next == n {
        return w.value();
    }
    let a_side = eval(&w.smooth(next, false), next + 1, n)?;
    let b_side = eval(&w.smooth(next, true), next + 1, n)?;
    a_side.scale(&1, 1, 0)?.checked_add(&b_side.scale(&1, -1, 0)?)
}

pub fn evaluate_recursive(d: &AnnularDiagram) -> Result<SkeinPolynomial> {
    ensure_valid(d)?;
    BracketOptions::default().check_size(d.crossing_count())?;
    let cp = cut_path(d)?;
    let n = d.crossing_count();
    let w = Wiring {
        to: d.partners().to_vec(),
        parity: cp.half_edge_parities(d),
        plain: d.loops().iter().filter(|l| !l.dotted).count() as u32,
        dotted: d.loops().iter().filter(|l| l.dotted).count() as u32,
    };
    eval(&w, 0, n)
}
