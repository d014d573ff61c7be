//! Writhe normalization: a kink changes the bracket but not the Jones polynomial.

use solidtorus::diagram::{orient, parse_diagram, writhe};
use solidtorus::moves::{r1_insert, KinkSide};
use solidtorus::skein::{bracket, jones};

fn main() -> solidtorus::Result<()> {
    let hopf = parse_diagram("X 0: 1 3 2 4\nX 1: 3 1 4 2\npuncture: 0.1\nouter: 0.0\n")?;
    let kinked = r1_insert(&hopf, 1, KinkSide::Left, -1)?.diagram;
    for (label, d) in [("hopf", &hopf), ("hopf + kink", &kinked)] {
        let v = jones(d)?;
        println!("{label}: w = {}", writhe(&orient(d)));
        println!("    bracket   {}", bracket(d)?);
        println!("    jones (A) {v}");
        println!("    jones (q) {}", v.to_q_string());
    }
    Ok(())
}
