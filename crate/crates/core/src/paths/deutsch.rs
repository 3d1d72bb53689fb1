use std::fmt;
use std::str::FromStr;

use super::{check, parse_positive, word_tokens, Family};
use crate::error::{Error, Result, Violation};

/// A Deutsch token: upstep (1,1) or downstep (1,-j). The derived order
/// `U < 1 < 2 < ...` is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DStep {
    Up,
    Down(u32),
}

impl fmt::Display for DStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DStep::Up => f.write_str("U"),
            DStep::Down(j) => write!(f, "{j}"),
        }
    }
}

/// A closed Deutsch path with short valley downsteps: a downstep immediately
/// followed by an upstep always has size 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeutschPath {
    steps: Vec<DStep>,
}

impl DeutschPath {
    pub fn new(steps: Vec<DStep>) -> Result<Self> {
        let p = DeutschPath { steps };
        check(Family::Deutsch, p.violations())?;
        Ok(p)
    }

    pub fn new_unchecked(steps: Vec<DStep>) -> Self {
        DeutschPath { steps }
    }

    pub fn steps(&self) -> &[DStep] {
        &self.steps
    }

    /// Number of steps, which is also the x-extent.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == DStep::Up).count()
    }

    pub fn down_count(&self) -> usize {
        self.steps.len() - self.up_count()
    }

    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut level = 0i64;
        let mut pts = vec![(0, 0)];
        for (i, s) in self.steps.iter().enumerate() {
            level += match s {
                DStep::Up => 1,
                DStep::Down(j) => -(*j as i64),
            };
            pts.push((i as i64 + 1, level));
        }
        pts
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut level = 0i64;
        let mut below = None;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                DStep::Up => level += 1,
                DStep::Down(0) => out.push(Violation::at("downstep of size zero", i + 1)),
                DStep::Down(j) => level -= *j as i64,
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
        for (i, w) in self.steps.windows(2).enumerate() {
            if matches!(w[0], DStep::Down(j) if j >= 2) && w[1] == DStep::Up {
                out.push(Violation::at("long downstep followed by upstep", i + 1));
            }
        }
        out
    }
}

impl fmt::Display for DeutschPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::join_display(f, &self.steps)
    }
}

impl FromStr for DeutschPath {
    type Err = Error;

    /// Accepts space-separated tokens, or the compact digit form when the
    /// text has no whitespace. `D` is read as a downstep of size 1.
    fn from_str(s: &str) -> Result<Self> {
        let steps = word_tokens(s)
            .iter()
            .enumerate()
            .map(|(i, tok)| match tok.as_str() {
                "U" => Ok(DStep::Up),
                "D" => Ok(DStep::Down(1)),
                t => parse_positive(Family::Deutsch, t, i + 1).map(DStep::Down),
            })
            .collect::<Result<Vec<_>>>()?;
        DeutschPath::new(steps)
    }
}
