//! Little Schröder path -> growth sequence, showing each rewriting step.
//!
//!     cargo run --example schroder_bijection -- EDENEDNDDNEN

use latticebij::bijection::schroder::{self, Strategy};
use latticebij::paths::SchroderPath;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "EDENEDNDDNEN".to_string());
    let path: SchroderPath = word.parse()?;

    let heights = schroder::heights_of(&path)?;
    let derivation = schroder::lonely_derivation(&heights, Strategy::Leftmost);
    println!("path     {path}");
    println!("heights  {heights}");
    for (state, step) in derivation.states.iter().skip(1).zip(&derivation.steps) {
        println!("  {step:<24} {state}");
    }
    let growth = schroder::zero_out(derivation.result())?;
    println!("growth   {growth}");

    // and back: re-mark, push offending marks right, rebuild the path
    let marked = schroder::remark(&growth)?;
    let back = schroder::offending_derivation(&marked, Strategy::Leftmost);
    println!("remarked {marked}");
    for (state, step) in back.states.iter().skip(1).zip(&back.steps) {
        println!("  {step:<24} {state}");
    }
    let path_again = schroder::backward(&growth)?;
    println!("path     {path_again}");
    assert_eq!(path_again, path);
    Ok(())
}
