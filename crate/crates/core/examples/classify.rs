//! Nugatory crossings and their separating curves.

use solidtorus::corpus::entry;
use solidtorus::crossing::{classify_crossings, is_dotted_reduced, CrossingStatus};

fn main() {
    for name in ["kink-outer", "kink-puncture-lobe", "kink-irreducible", "double-kink", "sum-twist", "sum-twist-split"]
    {
        let d = entry(name).expect("corpus entry").diagram;
        println!("{name} (dotted-reduced: {})", is_dotted_reduced(&d));
        for r in classify_crossings(&d).iter().filter(|r| r.status != CrossingStatus::NonNugatory) {
            println!("  crossing {}: {}", r.crossing, r.status);
            for c in &r.curves {
                let kind = if c.contractible() { "contractible" } else { "around the core" };
                println!(
                    "    through corners {} {} in face {}: {kind} (puncture {:?}, outer {:?})",
                    c.corners[0], c.corners[1], c.face, c.puncture_side, c.outer_side
                );
            }
        }
    }
}
