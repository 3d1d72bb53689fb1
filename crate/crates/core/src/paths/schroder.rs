use std::fmt;
use std::str::FromStr;

use super::{check, Family};
use crate::error::{Error, Result, Violation};

/// One Schröder step. The derived order `E < N < D` is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// East, (1, 0).
    E,
    /// North, (0, 1).
    N,
    /// Diagonal, (1, 1).
    D,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
            Step::D => 'D',
        }
    }
}

/// A little Schröder path: E/N/D steps from (0,0) to (n,n), never above
/// `y = x`, with no D step starting on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchroderPath {
    steps: Vec<Step>,
}

impl SchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let p = SchroderPath { steps };
        check(Family::LittleSchroder, p.violations())?;
        Ok(p)
    }

    /// Wraps `steps` without checking anything; use with `violations()`.
    pub fn new_unchecked(steps: Vec<Step>) -> Self {
        SchroderPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of E steps plus number of D steps.
    pub fn semilength(&self) -> usize {
        self.steps.iter().filter(|s| **s != Step::N).count()
    }

    pub fn diagonal_steps(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::D).count()
    }

    /// 1-based index of the first D step that starts on `y = x`.
    pub fn first_diagonal_d(&self) -> Option<usize> {
        let (mut x, mut y) = (0i64, 0i64);
        for (i, s) in self.steps.iter().enumerate() {
            if *s == Step::D && x == y {
                return Some(i + 1);
            }
            let (dx, dy) = delta(*s);
            x += dx;
            y += dy;
        }
        None
    }

    pub fn is_little(&self) -> bool {
        self.first_diagonal_d().is_none()
    }

    /// Lattice points visited, starting at the origin.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            let (dx, dy) = delta(*s);
            x += dx;
            y += dy;
            pts.push((x, y));
        }
        pts
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.steps.is_empty() {
            out.push(Violation::new("empty path"));
            return out;
        }
        let (mut x, mut y) = (0i64, 0i64);
        let mut above = None;
        for (i, s) in self.steps.iter().enumerate() {
            let (dx, dy) = delta(*s);
            x += dx;
            y += dy;
            if y > x && above.is_none() {
                above = Some(i + 1);
            }
        }
        if x != y {
            out.push(Violation::new("unequal E and N counts"));
        }
        if let Some(p) = above {
            out.push(Violation::at("rises above diagonal", p));
        }
        if let Some(p) = self.first_diagonal_d() {
            out.push(Violation::at("D starts on diagonal", p));
        }
        out
    }
}

fn delta(s: Step) -> (i64, i64) {
    match s {
        Step::E => (1, 0),
        Step::N => (0, 1),
        Step::D => (1, 1),
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                'D' => Ok(Step::D),
                other => Err(Error::Syntax {
                    family: Family::LittleSchroder,
                    token: other.to_string(),
                    position: i + 1,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(steps)
    }
}
