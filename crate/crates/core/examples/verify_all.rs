//! Exhaustive checks of all three bijections plus count cross-checks
//! against the reference files in `data/`.
//!
//!     cargo run --release --example verify_all -- 8

use std::path::PathBuf;

use latticebij::verify::{self, BijectionId, Bounds, ReferenceCounts};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(7);
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");

    let mut all_pass = true;
    for id in BijectionId::ALL {
        let bounds = match id {
            BijectionId::Kimberling => Bounds::grid(max.min(6), max.min(5)),
            _ => Bounds::up_to(max),
        };
        let report = verify::check_bijection(id, bounds)?;
        let counts: Vec<String> = report.counts().iter().map(|c| c.to_string()).collect();
        println!("{id:<10} {} {} [{}] {} ms", report.range, if report.pass { "PASS" } else { "FAIL" }, counts.join(" "), report.elapsed_ms);
        all_pass &= report.pass;
    }

    for (file, id) in [
        ("little-schroder.txt", BijectionId::Schroder),
        ("kimberling.txt", BijectionId::Kimberling),
        ("ramirez.txt", BijectionId::Deutsch),
    ] {
        let reference = ReferenceCounts::load(&data.join(file))?;
        let report = verify::crosscheck_counts(id.reference_family(), Bounds::up_to(max), &reference)?;
        println!("{file:<20} {} entries {}", report.sizes.len(), if report.pass { "agree" } else { "DISAGREE" });
        all_pass &= report.pass;
    }

    let catalan: Vec<String> = (1..=max)
        .map(|n| verify::catalan_check(n).map(|c| format!("{}{}", c.dfree_paths, if c.passed() { "" } else { "!" })))
        .collect::<Result<_, _>>()?;
    println!("D-free paths onto zero-free sequences: {}", catalan.join(" "));

    std::process::exit(if all_pass { 0 } else { 1 });
}
