//! Bounded sequences of L(i, j) -> Kimberling paths of K(i+1, j), with the
//! unrolled recursion printed one entry at a time.
//!
//!     cargo run --example kimberling_bijection -- 3 1 4 3 5

use latticebij::bijection::kimberling;
use latticebij::enumeration;
use latticebij::paths::BoundedSeq;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (j, values) = match args.split_first() {
        Some((j, rest)) => (*j, rest.to_vec()),
        None => (3, vec![1, 4, 3, 5]),
    };
    let u = BoundedSeq::new(values, j)?;
    let (path, trace) = kimberling::phi_traced(&u)?;
    println!("sequence [{u}] with j={j}");
    for step in &trace {
        println!("  {step}");
    }
    println!("path     {path}");
    println!("inverse  [{}]", kimberling::phi_inv(&path)?);

    // the whole of L(2,1) against K(3,1)
    println!();
    for u in enumeration::enum_bounded_sequences(2, 1)? {
        println!("[{u}] -> {}", kimberling::phi(&u)?);
    }
    Ok(())
}
