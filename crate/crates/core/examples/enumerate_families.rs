//! Counts of all six families side by side, and a few small listings.
//!
//!     cargo run --example enumerate_families

use latticebij::enumeration::{self, Enumerator, Size};
use latticebij::paths::Family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = Enumerator::from_env();

    println!("{:>3} {:>8} {:>8} {:>8} {:>8}", "n", "LS_n", "S_n", "P_n", "R_n");
    for n in 1..=8 {
        let c = |f| e.count(f, Size::N(n));
        println!(
            "{n:>3} {:>8} {:>8} {:>8} {:>8}",
            c(Family::LittleSchroder)?,
            c(Family::GrowthSeq)?,
            c(Family::Deutsch)?,
            c(Family::Ramirez)?
        );
    }

    println!("\n|L(i,j)| = |K(i+1,j)|");
    for i in 0..=4 {
        let row: Vec<String> = (0..=4)
            .map(|j| e.count(Family::BoundedSeq, Size::IJ(i, j)).map(|c| format!("{c:>5}")))
            .collect::<Result<_, _>>()?;
        println!("i={i} {}", row.join(""));
    }

    println!("\nLS_3:");
    for p in enumeration::enum_little_schroder(3)? {
        println!("  {p}");
    }
    println!("P_5:");
    for p in enumeration::enum_deutsch(5)? {
        println!("  {p}");
    }
    println!("R_5:");
    for q in enumeration::enum_ramirez(5)? {
        println!("  {q}");
    }
    Ok(())
}
