//! The three bijections. Each module exposes its stages publicly so the
//! intermediate objects can be inspected and tested.

pub mod deutsch;
pub mod kimberling;
pub mod schroder;
