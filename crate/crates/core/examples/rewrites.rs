//! Local rewrites and the bracket factor each one predicts.

use solidtorus::corpus::entry;
use solidtorus::moves::{dotted_reduce, insert_loop, r1_insert, r2_insert, KinkSide, RewriteResult};
use solidtorus::skein::{bracket, jones};
use solidtorus::AnnularDiagram;

fn report(label: &str, before: &AnnularDiagram, r: &RewriteResult) -> solidtorus::Result<()> {
    let predicted = r.expected_bracket_factor.checked_mul(&bracket(before)?)?;
    println!("{label}: {} -> {} crossings", before.crossing_count(), r.diagram.crossing_count());
    println!("    factor {}", r.expected_bracket_factor);
    println!("    bracket matches prediction: {}", bracket(&r.diagram)? == predicted);
    println!("    jones unchanged: {}", jones(&r.diagram)? == jones(before)?);
    Ok(())
}

fn main() -> solidtorus::Result<()> {
    let trefoil = entry("trefoil-face2").expect("corpus entry").diagram;
    let kinked = r1_insert(&trefoil, 3, KinkSide::Right, 1)?;
    report("r1 on edge 3", &trefoil, &kinked)?;
    let finger = r2_insert(&kinked.diagram, 1, 3, None)?;
    report("r2 pushing 1 over 3", &kinked.diagram, &finger)?;
    report("dotted loop", &finger.diagram, &insert_loop(&finger.diagram, true))?;
    let reduced = dotted_reduce(&finger.diagram)?;
    report("dotted_reduce", &finger.diagram, &reduced)?;
    print!("{}", reduced.diagram);
    Ok(())
}
