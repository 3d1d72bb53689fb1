use std::fmt;
use std::str::FromStr;

use super::{check, parse_integers, Family};
use crate::error::{Error, Result, Violation};

/// A sequence `(u_1, ..., u_n)` of nonnegative integers with `u_1 = 1`,
/// `u_i <= i`, and nonzero entries weakly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrowthSeq {
    u: Vec<u32>,
}

impl GrowthSeq {
    pub fn new(u: Vec<u32>) -> Result<Self> {
        let g = GrowthSeq { u };
        check(Family::GrowthSeq, g.violations())?;
        Ok(g)
    }

    pub fn new_unchecked(u: Vec<u32>) -> Self {
        GrowthSeq { u }
    }

    pub fn values(&self) -> &[u32] {
        &self.u
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.u.iter().filter(|&&v| v == 0).count()
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.u.is_empty() {
            out.push(Violation::new("empty sequence"));
            return out;
        }
        if self.u[0] != 1 {
            out.push(Violation::at("first entry not 1", 1));
        }
        for (i, &v) in self.u.iter().enumerate() {
            if v as usize > i + 1 {
                out.push(Violation::at("entry exceeds its position", i + 1));
            }
        }
        let mut last_nonzero = 0;
        for (i, &v) in self.u.iter().enumerate() {
            if v == 0 {
                continue;
            }
            if v < last_nonzero {
                out.push(Violation::at("nonzero entries not weakly increasing", i + 1));
                break;
            }
            last_nonzero = v;
        }
        out.sort_by_key(|v| v.position);
        out
    }
}

impl fmt::Display for GrowthSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::join_display(f, &self.u)
    }
}

impl FromStr for GrowthSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GrowthSeq::new(parse_integers(Family::GrowthSeq, s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clauses() {
        let c = |v: Vec<u32>| GrowthSeq::new_unchecked(v).violations();
        assert_eq!(c(vec![1, 0, 2, 1]), vec![Violation::at("nonzero entries not weakly increasing", 4)]);
        assert!(c(vec![1, 0, 0, 0, 2, 3, 0, 8]).is_empty());
        assert_eq!(c(vec![0, 1])[0].clause, "first entry not 1");
        assert_eq!(c(vec![1, 3]), vec![Violation::at("entry exceeds its position", 2)]);
        assert_eq!(c(vec![])[0].clause, "empty sequence");
    }

    #[test]
    fn text_round_trip() {
        let g: GrowthSeq = "1 0 0 0 2 3 0 8".parse().unwrap();
        assert_eq!(g.zeros(), 4);
        assert_eq!(g.to_string(), "1 0 0 0 2 3 0 8");
        assert!("1 x".parse::<GrowthSeq>().is_err());
        assert!("1 -1".parse::<GrowthSeq>().is_err());
    }
}
