//! Bijections between lattice-path families, with exhaustive enumerators
//! and a verification harness.
//!
//! Three bijections are implemented, each with an explicit inverse:
//!
//! * little Schröder paths of semilength `n` to growth sequences of length
//!   `n` ([`bijection::schroder`]), by rewriting the marked height sequence
//!   of the path;
//! * bounded sequences `L(i, j)` to Kimberling paths `K(i+1, j)`
//!   ([`bijection::kimberling`]);
//! * closed short-valley Deutsch paths with `n` steps to Ramírez paths of
//!   size `n` ([`bijection::deutsch`]), by expanding long downsteps,
//!   coloring matched upsteps and contracting blue runs.
//!
//! ```
//! use latticebij::bijection::schroder;
//! use latticebij::paths::SchroderPath;
//!
//! let p: SchroderPath = "EDENEDNDDNEN".parse().unwrap();
//! let g = schroder::forward(&p).unwrap();
//! assert_eq!(g.to_string(), "1 0 0 0 2 3 0 8");
//! assert_eq!(schroder::backward(&g).unwrap(), p);
//! ```

pub mod bijection;
pub mod cli;
pub mod count;
pub mod enumeration;
pub mod error;
pub mod paths;
pub mod render;
pub mod verify;

pub use count::Count;
pub use enumeration::{Enumerator, Size};
pub use error::{Error, Result, Violation};
pub use paths::{format_path, parse_path, validate, Family, PathObject};
