use std::fmt;
use std::str::FromStr;

use super::{check, Family};
use crate::error::{Error, Result, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// A lattice path from the origin whose steps all have finite nonnegative
/// slope. Identity is the vertex sequence, so collinear interior vertices
/// are meaningful.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KimberlingPath {
    vertices: Vec<Point>,
}

impl KimberlingPath {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let k = KimberlingPath { vertices };
        check(Family::Kimberling, k.violations())?;
        Ok(k)
    }

    pub fn new_unchecked(vertices: Vec<Point>) -> Self {
        KimberlingPath { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn terminal(&self) -> Point {
        *self.vertices.last().expect("path has vertices")
    }

    pub fn interior_count(&self) -> usize {
        self.vertices.len().saturating_sub(2)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.vertices.len() < 2 {
            out.push(Violation::new("fewer than two vertices"));
        }
        if let Some(first) = self.vertices.first() {
            if *first != Point::ORIGIN {
                out.push(Violation::at("does not start at origin", 1));
            }
        }
        for (i, w) in self.vertices.windows(2).enumerate() {
            if w[1].x <= w[0].x {
                out.push(Violation::at("x-coordinates not strictly increasing", i + 2));
            }
            if w[1].y < w[0].y {
                out.push(Violation::at("y-coordinates decreasing", i + 2));
            }
        }
        out
    }
}

impl fmt::Display for KimberlingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::join_display(f, &self.vertices)
    }
}

impl FromStr for KimberlingPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vertices = s
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| {
                let err = || Error::Syntax {
                    family: Family::Kimberling,
                    token: tok.to_owned(),
                    position: i + 1,
                };
                let (x, y) = tok.split_once(',').ok_or_else(err)?;
                let coord = |c: &str| {
                    if c.is_empty() || !c.bytes().all(|b| b.is_ascii_digit()) {
                        return None;
                    }
                    c.parse::<u32>().ok()
                };
                Ok(Point::new(coord(x).ok_or_else(err)?, coord(y).ok_or_else(err)?))
            })
            .collect::<Result<Vec<_>>>()?;
        KimberlingPath::new(vertices)
    }
}
