//! Bracket of the trefoil with the puncture in each face.

use solidtorus::corpus::entry;
use solidtorus::diagram::faces;
use solidtorus::skein::bracket;

fn main() -> solidtorus::Result<()> {
    for name in ["trefoil", "trefoil-face1", "trefoil-face2", "trefoil-face3", "trefoil-face4"] {
        let d = entry(name).expect("corpus entry").diagram;
        let f = faces(&d);
        let b = bracket(&d)?;
        println!("{name:14} puncture face {:?}, outer face {:?}", f.puncture_face(), f.outer_face());
        println!("    <D>     = {b}");
        println!("    <D>|t=1 = {}", b.at_t_one()?);
    }
    Ok(())
}
