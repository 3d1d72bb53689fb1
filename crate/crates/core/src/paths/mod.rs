//! Domain types for the six path and sequence families, their validity
//! predicates and their canonical text grammars.
//!
//! Every type can be built unchecked (for feeding malformed data to a
//! validator) or checked through `new`/`FromStr`. Checked construction
//! rejects anything whose `violations()` list is non-empty.

mod bounded;
mod colored;
mod deutsch;
mod growth;
mod heights;
mod kimberling;
mod ramirez;
mod schroder;

use std::fmt;
use std::str::FromStr;

pub use bounded::{format_bounded_file, parse_bounded_file, BoundedSeq};
pub use colored::{ColoredUnitWord, DownColor, Unit, UpRole};
pub use deutsch::{DStep, DeutschPath};
pub use growth::GrowthSeq;
pub use heights::{Height, MarkedHeightSeq};
pub use kimberling::{KimberlingPath, Point};
pub use ramirez::{RStep, RamirezPath};
pub use schroder::{SchroderPath, Step};

use crate::error::{Error, Result, Violation};

/// The object families handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Little Schröder paths over {E, N, D}.
    LittleSchroder,
    /// Sequences `u_1 = 1`, `u_i <= i`, nonzero entries weakly increasing.
    GrowthSeq,
    Kimberling,
    /// Sequences of `L(i, j)`.
    BoundedSeq,
    Deutsch,
    Ramirez,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::LittleSchroder,
        Family::GrowthSeq,
        Family::Kimberling,
        Family::BoundedSeq,
        Family::Deutsch,
        Family::Ramirez,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::LittleSchroder => "schroder",
            Family::GrowthSeq => "growth-seq",
            Family::Kimberling => "kimberling",
            Family::BoundedSeq => "bounded-seq",
            Family::Deutsch => "deutsch",
            Family::Ramirez => "ramirez",
        }
    }

    /// Families whose size is a pair `(i, j)` rather than a single `n`.
    pub fn is_two_parameter(self) -> bool {
        matches!(self, Family::Kimberling | Family::BoundedSeq)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "schroder" | "little-schroder" => Family::LittleSchroder,
            "growth-seq" => Family::GrowthSeq,
            "kimberling" => Family::Kimberling,
            "bounded-seq" => Family::BoundedSeq,
            "deutsch" => Family::Deutsch,
            "ramirez" => Family::Ramirez,
            other => return Err(format!("unknown family {other:?}")),
        })
    }
}

/// A parsed object of any family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PathObject {
    Schroder(SchroderPath),
    Growth(GrowthSeq),
    Kimberling(KimberlingPath),
    Bounded(BoundedSeq),
    Deutsch(DeutschPath),
    Ramirez(RamirezPath),
}

impl PathObject {
    pub fn family(&self) -> Family {
        match self {
            PathObject::Schroder(_) => Family::LittleSchroder,
            PathObject::Growth(_) => Family::GrowthSeq,
            PathObject::Kimberling(_) => Family::Kimberling,
            PathObject::Bounded(_) => Family::BoundedSeq,
            PathObject::Deutsch(_) => Family::Deutsch,
            PathObject::Ramirez(_) => Family::Ramirez,
        }
    }
}

impl fmt::Display for PathObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathObject::Schroder(p) => p.fmt(f),
            PathObject::Growth(g) => g.fmt(f),
            PathObject::Kimberling(k) => k.fmt(f),
            PathObject::Bounded(b) => b.fmt(f),
            PathObject::Deutsch(d) => d.fmt(f),
            PathObject::Ramirez(r) => r.fmt(f),
        }
    }
}

/// Parses one object of `family` from its text form.
///
/// Bounded sequences need their ambient `j`, so their text must start with a
/// `j=<int>` header line (the sequence itself may be on the next line, or
/// absent for the empty sequence).
pub fn parse_path(family: Family, text: &str) -> Result<PathObject> {
    Ok(match family {
        Family::LittleSchroder => PathObject::Schroder(text.parse()?),
        Family::GrowthSeq => PathObject::Growth(text.parse()?),
        Family::Kimberling => PathObject::Kimberling(text.parse()?),
        Family::BoundedSeq => PathObject::Bounded(text.parse()?),
        Family::Deutsch => PathObject::Deutsch(text.parse()?),
        Family::Ramirez => PathObject::Ramirez(text.parse()?),
    })
}

/// Canonical text of an object. Bounded sequences print without their `j=` header.
pub fn format_path(obj: &PathObject) -> String {
    obj.to_string()
}

/// Every violated invariant of `obj`, in a fixed order; empty means valid.
pub fn validate(obj: &PathObject) -> Vec<Violation> {
    match obj {
        PathObject::Schroder(p) => p.violations(),
        PathObject::Growth(g) => g.violations(),
        PathObject::Kimberling(k) => k.violations(),
        PathObject::Bounded(b) => b.violations(),
        PathObject::Deutsch(d) => d.violations(),
        PathObject::Ramirez(r) => r.violations(),
    }
}

pub(crate) fn check(family: Family, violations: Vec<Violation>) -> Result<()> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Invariant { family, violations })
    }
}

/// Splits a token word. Text containing whitespace is read as space-separated
/// tokens; text without whitespace is read in compact form, one character per
/// token.
pub(crate) fn word_tokens(text: &str) -> Vec<String> {
    let text = text.trim();
    if text.contains(char::is_whitespace) {
        text.split_whitespace().map(str::to_owned).collect()
    } else {
        text.chars().map(String::from).collect()
    }
}

pub(crate) fn parse_positive(family: Family, token: &str, position: usize) -> Result<u32> {
    match token.parse::<u32>() {
        Ok(v) if v >= 1 && token.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
        _ => Err(Error::Syntax {
            family,
            token: token.to_owned(),
            position,
        }),
    }
}

pub(crate) fn parse_integers(family: Family, text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            if tok.bytes().all(|b| b.is_ascii_digit()) {
                tok.parse::<u32>().ok()
            } else {
                None
            }
            .ok_or_else(|| Error::Syntax {
                family,
                token: tok.to_owned(),
                position: i + 1,
            })
        })
        .collect()
}

pub(crate) fn join_display<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        item.fmt(f)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert_eq!("little-schroder".parse::<Family>().unwrap(), Family::LittleSchroder);
        assert!("dyck".parse::<Family>().is_err());
    }

    #[test]
    fn compact_and_spaced_tokens() {
        assert_eq!(word_tokens("UUU12"), vec!["U", "U", "U", "1", "2"]);
        assert_eq!(word_tokens("U U 12"), vec!["U", "U", "12"]);
        assert_eq!(word_tokens("  "), Vec::<String>::new());
    }

    #[test]
    fn parse_path_dispatches() {
        let obj = parse_path(Family::LittleSchroder, "EDENEDNDDNEN").unwrap();
        assert_eq!(format_path(&obj), "EDENEDNDDNEN");
        match obj {
            PathObject::Schroder(p) => {
                assert_eq!(p.steps().len(), 12);
                assert_eq!(p.semilength(), 8);
            }
            _ => unreachable!(),
        }

        let obj = parse_path(Family::Deutsch, "U 1").unwrap();
        assert_eq!(obj, PathObject::Deutsch(DeutschPath::new(vec![DStep::Up, DStep::Down(1)]).unwrap()));
        assert_eq!(parse_path(Family::Deutsch, "UD").unwrap(), obj);

        let err = parse_path(Family::LittleSchroder, "DEN").unwrap_err();
        match err {
            Error::Invariant { violations, .. } => {
                assert_eq!(violations[0].clause, "D starts on diagonal");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validate_reports_clauses() {
        let g = PathObject::Growth(GrowthSeq::new_unchecked(vec![1, 0, 2, 1]));
        let clauses: Vec<_> = validate(&g).iter().map(|v| v.clause).collect();
        assert_eq!(clauses, vec!["nonzero entries not weakly increasing"]);

        let g = PathObject::Growth(GrowthSeq::new_unchecked(vec![1, 0, 0, 0, 2, 3, 0, 8]));
        assert!(validate(&g).is_empty());

        let d = PathObject::Deutsch(DeutschPath::new_unchecked(vec![
            DStep::Up,
            DStep::Up,
            DStep::Down(2),
            DStep::Up,
        ]));
        let clauses: Vec<_> = validate(&d).iter().map(|v| v.clause).collect();
        assert!(clauses.contains(&"long downstep followed by upstep"));
    }

    #[test]
    fn format_examples() {
        let k: KimberlingPath = "0,0 2,2 4,3 5,3".parse().unwrap();
        assert_eq!(format_path(&PathObject::Kimberling(k)), "0,0 2,2 4,3 5,3");
        let r: RamirezPath = "31D12D2DDD".parse().unwrap();
        assert_eq!(format_path(&PathObject::Ramirez(r)), "3 1 D 1 2 D 2 D D D");
        let b = BoundedSeq::new(vec![], 4).unwrap();
        assert_eq!(format_path(&PathObject::Bounded(b)), "");
    }
}
