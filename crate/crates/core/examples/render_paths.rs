//! Character-grid drawings of one object per path family, and SVG files
//! written to a directory.
//!
//!     cargo run --example render_paths -- /tmp/drawings

use std::fs;
use std::path::PathBuf;

use latticebij::paths::{parse_path, Family};
use latticebij::render;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = [
        (Family::LittleSchroder, "EDENEDNDDNEN"),
        (Family::Kimberling, "0,0 2,2 4,3 5,3"),
        (Family::Deutsch, "UUUU1UUU1UU313"),
        (Family::Ramirez, "3 1 D 1 2 D 2 D D D"),
    ];
    let out_dir = std::env::args().nth(1).map(PathBuf::from);
    if let Some(dir) = &out_dir {
        fs::create_dir_all(dir)?;
    }
    for (family, text) in samples {
        let obj = parse_path(family, text)?;
        println!("{family}: {obj}");
        println!("{}", render::ascii(&obj));
        if let Some(dir) = &out_dir {
            let file = dir.join(format!("{family}.svg"));
            fs::write(&file, render::svg(&obj))?;
            println!("wrote {}", file.display());
        }
    }
    Ok(())
}
