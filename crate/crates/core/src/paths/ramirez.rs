use std::fmt;
use std::str::FromStr;

use super::{check, parse_positive, word_tokens, Family};
use crate::error::{Error, Result, Violation};

/// A Ramírez token: downstep (1,-1) or upstep (k,1). The derived order
/// `D < 1 < 2 < ...` is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RStep {
    Down,
    Up(u32),
}

impl fmt::Display for RStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RStep::Down => f.write_str("D"),
            RStep::Up(k) => write!(f, "{k}"),
        }
    }
}

/// Upsteps (k,1) and downsteps (1,-1), weakly above the axis and ending on it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RamirezPath {
    steps: Vec<RStep>,
}

impl RamirezPath {
    pub fn new(steps: Vec<RStep>) -> Result<Self> {
        let p = RamirezPath { steps };
        check(Family::Ramirez, p.violations())?;
        Ok(p)
    }

    pub fn new_unchecked(steps: Vec<RStep>) -> Self {
        RamirezPath { steps }
    }

    pub fn steps(&self) -> &[RStep] {
        &self.steps
    }

    /// x-coordinate of the terminal point.
    pub fn size(&self) -> u64 {
        self.steps
            .iter()
            .map(|s| match s {
                RStep::Down => 1,
                RStep::Up(k) => *k as u64,
            })
            .sum()
    }

    pub fn down_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == RStep::Down).count()
    }

    /// Total horizontal extent of the upsteps.
    pub fn up_width(&self) -> u64 {
        self.size() - self.down_count() as u64
    }

    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let (mut x, mut level) = (0i64, 0i64);
        let mut pts = vec![(0, 0)];
        for s in &self.steps {
            match s {
                RStep::Down => {
                    x += 1;
                    level -= 1;
                }
                RStep::Up(k) => {
                    x += *k as i64;
                    level += 1;
                }
            }
            pts.push((x, level));
        }
        pts
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut level = 0i64;
        let mut below = None;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                RStep::Up(0) => out.push(Violation::at("upstep of width zero", i + 1)),
                RStep::Up(_) => level += 1,
                RStep::Down => level -= 1,
            }
            if level < 0 && below.is_none() {
                below = Some(i + 1);
            }
        }
        if let Some(p) = below {
            out.push(Violation::at("goes below axis", p));
        }
        if level != 0 {
            out.push(Violation::new("not closed"));
        }
        out
    }
}

impl fmt::Display for RamirezPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::join_display(f, &self.steps)
    }
}

impl FromStr for RamirezPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = word_tokens(s)
            .iter()
            .enumerate()
            .map(|(i, tok)| match tok.as_str() {
                "D" => Ok(RStep::Down),
                t => parse_positive(Family::Ramirez, t, i + 1).map(RStep::Up),
            })
            .collect::<Result<Vec<_>>>()?;
        RamirezPath::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_vertices() {
        let q: RamirezPath = "3 1 D 1 2 D 2 D D D".parse().unwrap();
        assert_eq!(q.size(), 14);
        assert_eq!(q.down_count(), 5);
        assert_eq!(q, "31D12D2DDD".parse().unwrap());
        assert_eq!(
            q.vertices(),
            vec![(0, 0), (3, 1), (4, 2), (5, 1), (6, 2), (8, 3), (9, 2), (11, 3), (12, 2), (13, 1), (14, 0)]
        );
    }

    #[test]
    fn violations() {
        let c = |s: &str| -> Vec<&str> {
            let steps = s
                .split_whitespace()
                .map(|t| if t == "D" { RStep::Down } else { RStep::Up(t.parse().unwrap()) })
                .collect();
            RamirezPath::new_unchecked(steps).violations().iter().map(|v| v.clause).collect()
        };
        assert_eq!(c("4 D D"), vec!["goes below axis", "not closed"]);
        assert_eq!(c("0 D"), vec!["upstep of width zero", "goes below axis", "not closed"]);
        assert!(c("2 2 D D").is_empty());
    }
}
