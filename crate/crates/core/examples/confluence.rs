//! Leftmost and rightmost rewriting strategies reach the same normal form.
//!
//!     cargo run --release --example confluence -- 9

use latticebij::bijection::schroder::{self, Strategy};
use latticebij::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(7);

    // one sequence where the strategies take different routes
    let h = schroder::heights_of(&"EDENEDNDDNEN".parse()?)?;
    for s in [Strategy::Leftmost, Strategy::Rightmost] {
        let d = schroder::lonely_derivation(&h, s);
        let steps: Vec<String> = d.steps.iter().map(|st| st.to_string()).collect();
        println!("{s:?}: {}", steps.join(", "));
        println!("  -> {}", d.result());
    }

    for n in 1..=max {
        let (checked, mismatches) = verify::confluence_sweep(n)?;
        println!("n={n}: {checked} raw sequences, {} mismatches", mismatches.len());
        for m in mismatches.iter().take(5) {
            println!("  {m}");
        }
    }
    Ok(())
}
