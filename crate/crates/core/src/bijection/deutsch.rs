//! Closed short-valley Deutsch paths to Ramírez paths.
//!
//! Forward: every downstep `(1,-j)` is split into `j` unit down-units, the
//! last `j - 1` of them blue. Parenthesis matching colors the up-unit matched
//! by each blue down-unit (a *run-blue* up-unit). Each maximal run of
//! run-blue up-units is followed by a plain up-unit, which joins the run as
//! its *terminator*. Contraction turns each run of length `m` plus its
//! terminator into one upstep `(m + 1, 1)`, every other up-unit into `(1, 1)`,
//! every plain down-unit into `(1, -1)`, and drops the blue down-units.
//!
//! Contraction is group-wise: two groups that end up adjacent stay two
//! upsteps. Merging them would send `UUUU22` to `4DD`, which dips below the
//! axis.
//!
//! Backward: expand `(k, 1)` into `k - 1` up-units that need a blue partner
//! followed by one that needs a plain partner, then rematch with a stack. A
//! downstep absorbs blue partners from the stack top only when it is not
//! followed by an upstep, which is exactly the short-valley condition.

use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{ColoredUnitWord, DStep, DeutschPath, DownColor, RStep, RamirezPath, Unit, UpRole};

/// One downstep's matching record: the 1-based index (among up-units) of the
/// up-unit matched by its plain unit, and how many blue units it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatchEvent {
    pub up_index: usize,
    pub absorbed: u32,
}

impl fmt::Display for MatchEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pop={} absorbed={}", self.up_index, self.absorbed)
    }
}

pub fn expand_color(p: &DeutschPath) -> Result<ColoredUnitWord> {
    expand_color_traced(p).map(|(w, _)| w)
}

pub fn expand_color_traced(p: &DeutschPath) -> Result<(ColoredUnitWord, Vec<MatchEvent>)> {
    if let Some(v) = p.violations().into_iter().next() {
        return Err(Error::Invariant {
            family: crate::paths::Family::Deutsch,
            violations: vec![v],
        });
    }
    let mut units = Vec::with_capacity(p.len());
    for s in p.steps() {
        match *s {
            DStep::Up => units.push(Unit::Up(UpRole::Plain)),
            DStep::Down(j) => {
                units.push(Unit::Down(DownColor::Plain));
                units.extend(std::iter::repeat_n(Unit::Down(DownColor::Blue), j as usize - 1));
            }
        }
    }

    // phase 1: matching; blue down-units color their partners
    let mut up_ordinal = vec![0usize; units.len()];
    let mut stack: Vec<usize> = Vec::new();
    let mut events = Vec::new();
    let mut seen_ups = 0;
    for i in 0..units.len() {
        match units[i] {
            Unit::Up(_) => {
                seen_ups += 1;
                up_ordinal[i] = seen_ups;
                stack.push(i);
            }
            Unit::Down(color) => {
                let partner = stack.pop().expect("valid Deutsch path never dips below the axis");
                match color {
                    DownColor::Plain => events.push(MatchEvent {
                        up_index: up_ordinal[partner],
                        absorbed: 0,
                    }),
                    DownColor::Blue => {
                        units[partner] = Unit::Up(UpRole::RunBlue);
                        events.last_mut().expect("blue unit follows a plain unit").absorbed += 1;
                    }
                }
            }
        }
    }

    // phase 2: the unit after each maximal run of run-blue up-units becomes its terminator
    let mut i = 0;
    while i < units.len() {
        if units[i] != Unit::Up(UpRole::RunBlue) {
            i += 1;
            continue;
        }
        while i < units.len() && units[i] == Unit::Up(UpRole::RunBlue) {
            i += 1;
        }
        match units.get(i) {
            Some(Unit::Up(UpRole::Plain)) => units[i] = Unit::Up(UpRole::Terminator),
            _ => {
                return Err(Error::ColoringAssertion {
                    reason: "run follower not a plain upstep",
                    position: i + 1,
                })
            }
        }
        i += 1;
    }
    Ok((ColoredUnitWord::new_unchecked(units), events))
}

/// Contracts a colored word group-wise into a Ramírez path.
pub fn contract(w: &ColoredUnitWord) -> Result<RamirezPath> {
    let units = w.units();
    let mut steps = Vec::new();
    let mut i = 0;
    while i < units.len() {
        match units[i] {
            Unit::Up(UpRole::Plain) => steps.push(RStep::Up(1)),
            Unit::Up(UpRole::RunBlue) => {
                let start = i;
                while units[i] == Unit::Up(UpRole::RunBlue) {
                    i += 1;
                    if i == units.len() {
                        return Err(Error::ColoringAssertion {
                            reason: "blue run without terminator",
                            position: start + 1,
                        });
                    }
                }
                if units[i] != Unit::Up(UpRole::Terminator) {
                    return Err(Error::ColoringAssertion {
                        reason: "blue run without terminator",
                        position: i + 1,
                    });
                }
                steps.push(RStep::Up((i - start + 1) as u32));
            }
            Unit::Up(UpRole::Terminator) => {
                return Err(Error::ColoringAssertion {
                    reason: "terminator without blue run",
                    position: i + 1,
                })
            }
            Unit::Down(DownColor::Plain) => steps.push(RStep::Down),
            Unit::Down(DownColor::Blue) => {}
        }
        i += 1;
    }
    Ok(RamirezPath::new_unchecked(steps))
}

pub fn forward(p: &DeutschPath) -> Result<RamirezPath> {
    contract(&expand_color(p)?)
}

pub fn backward(q: &RamirezPath) -> Result<DeutschPath> {
    backward_traced(q).map(|(p, _)| p)
}

pub fn backward_traced(q: &RamirezPath) -> Result<(DeutschPath, Vec<MatchEvent>)> {
    if let Some(v) = q.violations().into_iter().next() {
        return Err(Error::Invariant {
            family: crate::paths::Family::Ramirez,
            violations: vec![v],
        });
    }
    // (1-based up-unit index, needs a blue partner)
    let mut stack: Vec<(usize, bool)> = Vec::new();
    let mut ups = 0usize;
    let mut out = Vec::new();
    let mut events = Vec::new();
    let tokens = q.steps();
    for (t, tok) in tokens.iter().enumerate() {
        match *tok {
            RStep::Up(k) => {
                for b in 0..k {
                    ups += 1;
                    stack.push((ups, b + 1 < k));
                    out.push(DStep::Up);
                }
            }
            RStep::Down => {
                let (up_index, needs_blue) = stack.pop().ok_or(Error::InversionFailure {
                    reason: "stack empty at downstep",
                    position: t + 1,
                })?;
                if needs_blue {
                    return Err(Error::InversionFailure {
                        reason: "downstep matches blue upstep",
                        position: t + 1,
                    });
                }
                let mut absorbed = 0u32;
                if matches!(tokens.get(t + 1), None | Some(RStep::Down)) {
                    while let Some(&(_, true)) = stack.last() {
                        stack.pop();
                        absorbed += 1;
                    }
                }
                out.push(DStep::Down(1 + absorbed));
                events.push(MatchEvent { up_index, absorbed });
            }
        }
    }
    if !stack.is_empty() {
        return Err(Error::InversionFailure {
            reason: "unmatched upsteps remain",
            position: tokens.len(),
        });
    }
    Ok((DeutschPath::new_unchecked(out), events))
}
