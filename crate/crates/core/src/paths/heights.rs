use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, Violation};

/// One entry of a marked height sequence. `value` is the height above the
/// line `y = -1` (terminal y-coordinate plus one); `marked` flags a D step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Height {
    pub value: u32,
    pub marked: bool,
}

impl Height {
    pub fn plain(value: u32) -> Self {
        Height { value, marked: false }
    }

    pub fn marked(value: u32) -> Self {
        Height { value, marked: true }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}d", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Intermediate state of the height-sequence rewriting. Construction checks
/// only the general-form invariants: entry `i` has value at most `i`, and
/// entry 1 is an unmarked 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedHeightSeq {
    entries: Vec<Height>,
}

impl MarkedHeightSeq {
    pub fn new(entries: Vec<Height>) -> Result<Self> {
        let m = MarkedHeightSeq { entries };
        match m.general_violations().into_iter().next() {
            None => Ok(m),
            Some(v) => Err(Error::NotRaw(v)),
        }
    }

    pub fn new_unchecked(entries: Vec<Height>) -> Self {
        MarkedHeightSeq { entries }
    }

    pub fn entries(&self) -> &[Height] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Height] {
        &mut self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn marked_count(&self) -> usize {
        self.entries.iter().filter(|h| h.marked).count()
    }

    /// Sum of the 1-based positions of marked entries. Lonely steps never
    /// increase it and offending steps never decrease it; it stays put when a
    /// mark swaps with another mark.
    pub fn marked_position_sum(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, h)| h.marked)
            .map(|(i, _)| i + 1)
            .sum()
    }

    /// Marked entry at 0-based index `i` whose predecessor value `g` has `h >= g + 2`.
    pub fn is_lonely(&self, i: usize) -> bool {
        i >= 1 && self.entries[i].marked && self.entries[i].value >= self.entries[i - 1].value + 2
    }

    /// Marked entry at 0-based index `i` whose right neighbour value is smaller.
    pub fn is_offending(&self, i: usize) -> bool {
        i + 1 < self.entries.len() && self.entries[i].marked && self.entries[i].value > self.entries[i + 1].value
    }

    pub fn general_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        match self.entries.first() {
            None => {
                out.push(Violation::new("empty sequence"));
                return out;
            }
            Some(h) if *h != Height::plain(1) => out.push(Violation::at("first entry not unmarked 1", 1)),
            Some(_) => {}
        }
        for (i, h) in self.entries.iter().enumerate() {
            if h.value == 0 {
                out.push(Violation::at("value not positive", i + 1));
            } else if h.value as usize > i + 1 {
                out.push(Violation::at("entry exceeds its position", i + 1));
            }
        }
        out
    }

    /// Violations of the form produced directly from a path: weakly
    /// increasing values, strictly increasing into every marked entry.
    pub fn raw_violations(&self) -> Vec<Violation> {
        let mut out = self.general_violations();
        for i in 1..self.entries.len() {
            let (g, h) = (self.entries[i - 1], self.entries[i]);
            if h.value < g.value {
                out.push(Violation::at("not weakly increasing", i + 1));
            } else if h.marked && h.value == g.value {
                out.push(Violation::at("not strictly increasing into marked entry", i + 1));
            }
        }
        out
    }

    /// Violations of the lonely-free form: each marked value `h` sits right
    /// after an entry of value `h - 1`.
    pub fn lonely_free_violations(&self) -> Vec<Violation> {
        let mut out = self.general_violations();
        for i in 1..self.entries.len() {
            let (g, h) = (self.entries[i - 1], self.entries[i]);
            if h.marked && h.value != g.value + 1 {
                out.push(Violation::at("marked entry not preceded by its value minus one", i + 1));
            }
        }
        out
    }

    pub fn is_raw(&self) -> bool {
        self.raw_violations().is_empty()
    }

    pub fn is_lonely_free(&self) -> bool {
        self.lonely_free_violations().is_empty()
    }
}

impl fmt::Display for MarkedHeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::join_display(f, &self.entries)
    }
}

impl FromStr for MarkedHeightSeq {
    type Err = Error;

    /// Parses tokens like `4` and `4d`. Only syntax is checked here; the
    /// caller decides which form predicate applies.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| {
                let (digits, marked) = match tok.strip_suffix('d') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                match digits.parse::<u32>() {
                    Ok(value) if digits.bytes().all(|b| b.is_ascii_digit()) => Ok(Height { value, marked }),
                    _ => Err(Error::Syntax {
                        family: super::Family::LittleSchroder,
                        token: tok.to_owned(),
                        position: i + 1,
                    }),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MarkedHeightSeq { entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MarkedHeightSeq {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let seq = m("1 2d 2 3 4d 6d 7d 8");
        assert_eq!(seq.len(), 8);
        assert_eq!(seq.marked_count(), 4);
        assert_eq!(seq.to_string(), "1 2d 2 3 4d 6d 7d 8");
        assert!("1 2x".parse::<MarkedHeightSeq>().is_err());
    }

    #[test]
    fn forms() {
        assert!(m("1 2d 2 3 4d 6d 7d 8").is_raw());
        assert!(!m("1 2d 2 3 4d 6d 7d 8").is_lonely_free());
        assert!(m("1 2d 3d 4d 2 3 4d 8").is_lonely_free());
        assert!(!m("1 2d 3d 4d 2 3 4d 8").is_raw());
        assert!(!m("1 1d").is_raw());
        assert!(m("1 1").is_raw());
        let v = m("1 3").general_violations();
        assert_eq!(v, vec![Violation::at("entry exceeds its position", 2)]);
        let v = m("2d").general_violations();
        assert_eq!(v[0].clause, "first entry not unmarked 1");
    }

    #[test]
    fn lonely_and_offending() {
        let seq = m("1 2d 2 3 4d 6d 7d 8");
        let lonely: Vec<_> = (0..seq.len()).filter(|&i| seq.is_lonely(i)).collect();
        assert_eq!(lonely, vec![5]);
        let seq = m("1 2d 3d 4d 2 3 4d 8");
        let offending: Vec<_> = (0..seq.len()).filter(|&i| seq.is_offending(i)).collect();
        assert_eq!(offending, vec![3]);
        // equal right neighbour is not offending
        assert!(!m("1 2d 2").is_offending(1));
    }
}
