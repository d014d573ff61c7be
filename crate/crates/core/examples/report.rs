//! Degree checks over a random batch, written as CSV and JSON.

use solidtorus::generate::{generate_random, GeneratorConfig, PuncturePolicy};
use solidtorus::moves::dotted_reduce;
use solidtorus::skein::BracketOptions;
use solidtorus::verify::{verify_all, CheckStatus, Report};

fn main() -> solidtorus::Result<()> {
    let cfg =
        GeneratorConfig { max_crossings: 9, policy: PuncturePolicy::AdversarialInner, seed: 21, ..Default::default() };
    let mut items = Vec::new();
    for (i, d) in generate_random(cfg).take(8).enumerate() {
        let reduced = dotted_reduce(&d)?.diagram;
        items.push((format!("d{i}"), d));
        items.push((format!("d{i}-reduced"), reduced));
    }
    let records = verify_all(&items, &BracketOptions::default()).into_iter().collect::<Result<Vec<_>, _>>()?;
    let report = Report::new(Some(21), records);
    print!("{}", report.to_csv());
    let applied = report.records.iter().filter(|r| r.thm3_5 != CheckStatus::Vacuous).count();
    println!("\nspan = 4n applied to {applied} of {} diagrams; any failure: {}", report.records.len(), report.failed());
    println!("json report: {} bytes", report.to_json().len());
    Ok(())
}
