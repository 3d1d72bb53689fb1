use std::fmt;
use std::str::FromStr;

use super::{check, parse_integers, Family};
use crate::error::{Error, Result, Violation};

/// A member of `L(i, j)`: positive integers `u_1..u_i` with `u_k <= j + 2`
/// and `u_k >= max(u_1..u_{k-1}) - 1`. The length gives `i`; `j` has to be
/// carried alongside because it cannot be read off the entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedSeq {
    u: Vec<u32>,
    j: u32,
}

impl BoundedSeq {
    pub fn new(u: Vec<u32>, j: u32) -> Result<Self> {
        let b = BoundedSeq { u, j };
        check(Family::BoundedSeq, b.violations())?;
        Ok(b)
    }

    pub fn new_unchecked(u: Vec<u32>, j: u32) -> Self {
        BoundedSeq { u, j }
    }

    pub fn empty(j: u32) -> Self {
        BoundedSeq { u: Vec::new(), j }
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

    pub fn ambient_j(&self) -> u32 {
        self.j
    }

    /// Parses a space-separated sequence with `j` supplied out of band.
    pub fn parse_with_j(text: &str, j: u32) -> Result<Self> {
        BoundedSeq::new(parse_integers(Family::BoundedSeq, text)?, j)
    }

    /// Text form with its `j=` header line.
    pub fn with_header(&self) -> String {
        format!("j={}\n{}", self.j, self)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let cap = self.j as u64 + 2;
        let mut running_max = 0u32;
        for (k, &v) in self.u.iter().enumerate() {
            if v == 0 {
                out.push(Violation::at("entry not positive", k + 1));
            }
            if v as u64 > cap {
                out.push(Violation::at("entry exceeds j+2", k + 1));
            }
            if k >= 1 && (v as u64) + 1 < running_max as u64 {
                out.push(Violation::at("entry below running maximum minus one", k + 1));
            }
            running_max = running_max.max(v);
        }
        out
    }
}

impl fmt::Display for BoundedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::join_display(f, &self.u)
    }
}

pub(crate) fn parse_header(line: &str, line_no: usize) -> Result<u32> {
    let err = || Error::Syntax {
        family: Family::BoundedSeq,
        token: line.to_owned(),
        position: line_no,
    };
    let rest = line.trim().strip_prefix("j=").ok_or_else(err)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    rest.parse().map_err(|_| err())
}

impl FromStr for BoundedSeq {
    type Err = Error;

    /// Expects a `j=<int>` header line followed by at most one sequence line.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines.next().unwrap_or("");
        let j = parse_header(header, 1)?;
        let body: Vec<&str> = lines.collect();
        if body.iter().filter(|l| !l.trim().is_empty()).count() > 1 {
            return Err(Error::Syntax {
                family: Family::BoundedSeq,
                token: body.join("\n"),
                position: 2,
            });
        }
        BoundedSeq::parse_with_j(&body.join(" "), j)
    }
}

/// Parses a bounded-seq file: a `j=<int>` header, then one sequence per
/// line (an empty line is the empty sequence).
pub fn parse_bounded_file(text: &str) -> Result<Vec<BoundedSeq>> {
    let mut lines = text.lines();
    let j = parse_header(lines.next().unwrap_or(""), 1)?;
    lines.map(|l| BoundedSeq::parse_with_j(l, j)).collect()
}

/// Inverse of [`parse_bounded_file`]; all sequences must share one `j`.
pub fn format_bounded_file(j: u32, seqs: &[BoundedSeq]) -> String {
    let mut out = format!("j={j}\n");
    for s in seqs {
        debug_assert_eq!(s.ambient_j(), j);
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}
