//! Random diagrams under each puncture policy.

use solidtorus::crossing::is_dotted_reduced;
use solidtorus::diagram::is_alternating;
use solidtorus::generate::{generate_random, GeneratorConfig, PuncturePolicy};
use solidtorus::skein::bracket;

fn main() -> solidtorus::Result<()> {
    for policy in [PuncturePolicy::Outer, PuncturePolicy::UniformRandomFace, PuncturePolicy::AdversarialInner] {
        let cfg = GeneratorConfig { min_crossings: 3, max_crossings: 8, policy, seed: 7, ..Default::default() };
        println!("{policy:?}");
        for d in generate_random(cfg).take(4) {
            let b = bracket(&d)?;
            println!(
                "  n={} alternating={} reduced={} span={} max t-degree={}",
                d.crossing_count(),
                is_alternating(&d),
                is_dotted_reduced(&d),
                b.max_a().unwrap_or(0) - b.min_a().unwrap_or(0),
                b.max_t().unwrap_or(0)
            );
        }
    }
    let one = generate_random(GeneratorConfig { seed: 1, ..Default::default() }).next().expect("diagram");
    print!("\n{one}");
    Ok(())
}
