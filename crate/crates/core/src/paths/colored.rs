use std::fmt;

use crate::error::Violation;

/// Role of an up-unit after coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UpRole {
    Plain,
    /// Blue because it is matched by a blue down-unit.
    RunBlue,
    /// The upstep right after a maximal run of `RunBlue` units; blue as well.
    Terminator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DownColor {
    Plain,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Up(UpRole),
    Down(DownColor),
}

impl Unit {
    pub fn is_up(self) -> bool {
        matches!(self, Unit::Up(_))
    }

    pub fn is_blue(self) -> bool {
        matches!(self, Unit::Up(UpRole::RunBlue | UpRole::Terminator) | Unit::Down(DownColor::Blue))
    }
}

/// A word of unit up/down steps with colors. A downstep of size `j` becomes
/// `j` consecutive down-units; no fractional coordinates are involved.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredUnitWord {
    units: Vec<Unit>,
}

impl ColoredUnitWord {
    pub fn new_unchecked(units: Vec<Unit>) -> Self {
        ColoredUnitWord { units }
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    /// Parenthesis matching: for each unit, the index of its partner. `None`
    /// for unmatched units (only possible on invalid words).
    pub fn matching(&self) -> Vec<Option<usize>> {
        let mut partner = vec![None; self.units.len()];
        let mut stack = Vec::new();
        for (i, u) in self.units.iter().enumerate() {
            if u.is_up() {
                stack.push(i);
            } else if let Some(top) = stack.pop() {
                partner[i] = Some(top);
                partner[top] = Some(i);
            }
        }
        partner
    }

    /// 1-based unit positions of `RunBlue` up-units, grouped into maximal runs.
    pub fn blue_runs(&self) -> Vec<Vec<usize>> {
        let mut runs: Vec<Vec<usize>> = Vec::new();
        let mut prev_blue = false;
        for (i, u) in self.units.iter().enumerate() {
            let blue = *u == Unit::Up(UpRole::RunBlue);
            if blue {
                if prev_blue {
                    runs.last_mut().expect("run open").push(i + 1);
                } else {
                    runs.push(vec![i + 1]);
                }
            }
            prev_blue = blue;
        }
        runs
    }

    /// 1-based unit positions of terminator up-units.
    pub fn terminators(&self) -> Vec<usize> {
        self.units
            .iter()
            .enumerate()
            .filter(|(_, u)| **u == Unit::Up(UpRole::Terminator))
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut level = 0i64;
        for (i, u) in self.units.iter().enumerate() {
            level += if u.is_up() { 1 } else { -1 };
            if level < 0 {
                out.push(Violation::at("goes below axis", i + 1));
                return out;
            }
        }
        if level != 0 {
            out.push(Violation::new("not closed"));
        }
        for i in 0..self.units.len() {
            if self.units[i] == Unit::Down(DownColor::Blue) && (i == 0 || self.units[i - 1].is_up()) {
                out.push(Violation::at("blue down-unit not preceded by a down-unit", i + 1));
            }
        }
        let partner = self.matching();
        for (i, u) in self.units.iter().enumerate() {
            if let (Unit::Down(color), Some(p)) = (u, partner[i]) {
                let ok = matches!(
                    (color, self.units[p]),
                    (DownColor::Blue, Unit::Up(UpRole::RunBlue))
                        | (DownColor::Plain, Unit::Up(UpRole::Plain | UpRole::Terminator))
                );
                if !ok {
                    out.push(Violation::at("down-unit color does not match its upstep", i + 1));
                }
            }
        }
        for i in 0..self.units.len() {
            let run_ends = self.units[i] == Unit::Up(UpRole::RunBlue)
                && self.units.get(i + 1) != Some(&Unit::Up(UpRole::RunBlue));
            if run_ends && self.units.get(i + 1) != Some(&Unit::Up(UpRole::Terminator)) {
                out.push(Violation::at("blue run without terminator", i + 1));
            }
            if self.units[i] == Unit::Up(UpRole::Terminator) && (i == 0 || self.units[i - 1] != Unit::Up(UpRole::RunBlue)) {
                out.push(Violation::at("terminator without blue run", i + 1));
            }
        }
        out
    }
}

impl fmt::Display for ColoredUnitWord {
    /// Debug text: `u`/`d` plain, `B` run-blue up, `T` terminator, `b` blue down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in &self.units {
            let c = match u {
                Unit::Up(UpRole::Plain) => 'u',
                Unit::Up(UpRole::RunBlue) => 'B',
                Unit::Up(UpRole::Terminator) => 'T',
                Unit::Down(DownColor::Plain) => 'd',
                Unit::Down(DownColor::Blue) => 'b',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
