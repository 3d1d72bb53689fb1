//! Short-valley Deutsch path -> Ramírez path: expansion into unit steps,
//! coloring by parenthesis matching, and group-wise contraction.
//!
//!     cargo run --example deutsch_bijection -- UUUU1UUU1UU313

use latticebij::bijection::deutsch;
use latticebij::paths::DeutschPath;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "UUUU1UUU1UU313".to_string());
    let path: DeutschPath = word.parse()?;

    let (colored, events) = deutsch::expand_color_traced(&path)?;
    println!("deutsch    {path}");
    // u plain, B blue-run, T terminator, d plain down, b blue down
    println!("colored    {colored}");
    println!("blue runs  {:?}", colored.blue_runs());
    println!("terminators {:?}", colored.terminators());
    for e in &events {
        println!("  {e}");
    }
    let ramirez = deutsch::contract(&colored)?;
    println!("ramirez    {ramirez}");

    let (back, replay) = deutsch::backward_traced(&ramirez)?;
    assert_eq!(replay, events);
    println!("inverse    {back}");
    Ok(())
}
