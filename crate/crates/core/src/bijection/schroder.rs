//! Little Schröder paths of semilength `n` to growth sequences of length `n`.
//!
//! The forward map records the marked height sequence of the path, rewrites
//! it until no marked entry is lonely, then replaces every marked entry by
//! zero. The backward map re-marks the zeros and rewrites until no marked
//! entry is offending, which recovers the raw height sequence of the path.
//!
//! A marked entry `h` is *lonely* when its predecessor has value `g` with
//! `h >= g + 2`; the rewriting step swaps it with the predecessor and
//! decrements it. A marked entry `h` is *offending* when its right neighbour
//! has value `j < h`; the rewriting step swaps it with that neighbour and
//! increments it.

use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{GrowthSeq, Height, MarkedHeightSeq, SchroderPath, Step};

/// Which redex a normalizer rewrites when several are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// One rewriting step. `position` is the 1-based position of the marked
/// entry before the swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    pub position: usize,
    pub from: u32,
    pub to: u32,
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "swap pos={} value={}→{}", self.position, self.from, self.to)
    }
}

/// Every intermediate state of a normalization, starting with the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub states: Vec<MarkedHeightSeq>,
    pub steps: Vec<RewriteStep>,
}

impl Derivation {
    pub fn result(&self) -> &MarkedHeightSeq {
        self.states.last().expect("derivation has an initial state")
    }
}

/// Heights above `y = -1` of the endpoints of the E and D steps, D heights marked.
pub fn heights_of(p: &SchroderPath) -> Result<MarkedHeightSeq> {
    if let Some(position) = p.first_diagonal_d() {
        return Err(Error::NotLittle { position });
    }
    let mut y = 0u32;
    let mut entries = Vec::with_capacity(p.semilength());
    for s in p.steps() {
        match s {
            Step::N => y += 1,
            Step::E => entries.push(Height::plain(y + 1)),
            Step::D => {
                y += 1;
                entries.push(Height::marked(y + 1));
            }
        }
    }
    Ok(MarkedHeightSeq::new_unchecked(entries))
}

/// Rebuilds the path from a raw height sequence.
pub fn path_of_heights(m: &MarkedHeightSeq) -> Result<SchroderPath> {
    if let Some(v) = m.raw_violations().into_iter().next() {
        return Err(Error::NotRaw(v));
    }
    let n = m.len() as u32;
    let mut steps = Vec::with_capacity(2 * m.len());
    let mut y = 0u32;
    for h in m.entries() {
        // y-coordinate at the start of this step
        let start = if h.marked { h.value - 2 } else { h.value - 1 };
        steps.extend(std::iter::repeat_n(Step::N, (start - y) as usize));
        if h.marked {
            steps.push(Step::D);
            y = start + 1;
        } else {
            steps.push(Step::E);
            y = start;
        }
    }
    steps.extend(std::iter::repeat_n(Step::N, (n - y) as usize));
    Ok(SchroderPath::new_unchecked(steps))
}

fn pick(candidates: impl DoubleEndedIterator<Item = usize>, strategy: Strategy) -> Option<usize> {
    let mut it = candidates;
    match strategy {
        Strategy::Leftmost => it.next(),
        Strategy::Rightmost => it.next_back(),
    }
}

/// Full lonely-elimination derivation.
pub fn lonely_derivation(m: &MarkedHeightSeq, strategy: Strategy) -> Derivation {
    let mut cur = m.clone();
    let mut states = vec![cur.clone()];
    let mut steps = Vec::new();
    while let Some(i) = pick((1..cur.len()).filter(|&i| cur.is_lonely(i)), strategy) {
        let e = cur.entries_mut();
        let h = e[i].value;
        e.swap(i - 1, i);
        e[i - 1].value = h - 1;
        steps.push(RewriteStep { position: i + 1, from: h, to: h - 1 });
        states.push(cur.clone());
    }
    Derivation { states, steps }
}

/// Rewrites until no marked entry is lonely.
pub fn normalize_lonely(m: &MarkedHeightSeq, strategy: Strategy) -> MarkedHeightSeq {
    let mut cur = m.clone();
    while let Some(i) = pick((1..cur.len()).filter(|&i| cur.is_lonely(i)), strategy) {
        let e = cur.entries_mut();
        let h = e[i].value;
        e.swap(i - 1, i);
        e[i - 1].value = h - 1;
    }
    cur
}

/// Full offending-elimination derivation; the fixed point is not checked.
pub fn offending_derivation(m: &MarkedHeightSeq, strategy: Strategy) -> Derivation {
    let mut cur = m.clone();
    let mut states = vec![cur.clone()];
    let mut steps = Vec::new();
    while let Some(i) = pick((0..cur.len()).filter(|&i| cur.is_offending(i)), strategy) {
        let e = cur.entries_mut();
        let h = e[i].value;
        e.swap(i, i + 1);
        e[i + 1].value = h + 1;
        steps.push(RewriteStep { position: i + 1, from: h, to: h + 1 });
        states.push(cur.clone());
    }
    Derivation { states, steps }
}

/// Rewrites until no marked entry is offending. Fails with `NotInvertible`
/// when the fixed point is not a raw height sequence.
pub fn normalize_offending(m: &MarkedHeightSeq, strategy: Strategy) -> Result<MarkedHeightSeq> {
    let mut cur = m.clone();
    while let Some(i) = pick((0..cur.len()).filter(|&i| cur.is_offending(i)), strategy) {
        let e = cur.entries_mut();
        let h = e[i].value;
        e.swap(i, i + 1);
        e[i + 1].value = h + 1;
    }
    match cur.raw_violations().into_iter().next() {
        None => Ok(cur),
        Some(v) => Err(Error::NotInvertible(v)),
    }
}

/// Replaces every marked entry of a lonely-free sequence by 0.
pub fn zero_out(m: &MarkedHeightSeq) -> Result<GrowthSeq> {
    if let Some(v) = m.lonely_free_violations().into_iter().next() {
        return Err(Error::NotLonelyFree(v));
    }
    let u = m.entries().iter().map(|h| if h.marked { 0 } else { h.value }).collect();
    Ok(GrowthSeq::new_unchecked(u))
}

/// Inverse of [`zero_out`]: each zero becomes a marked entry one above its
/// (reconstructed) predecessor.
pub fn remark(g: &GrowthSeq) -> Result<MarkedHeightSeq> {
    if let Some(v) = g.violations().into_iter().next() {
        return Err(Error::InvalidGrowthSeq(v));
    }
    let mut entries: Vec<Height> = Vec::with_capacity(g.len());
    for &v in g.values() {
        let h = match (v, entries.last()) {
            (0, Some(prev)) => Height::marked(prev.value + 1),
            (v, _) => Height::plain(v),
        };
        entries.push(h);
    }
    Ok(MarkedHeightSeq::new_unchecked(entries))
}

pub fn forward(p: &SchroderPath) -> Result<GrowthSeq> {
    zero_out(&normalize_lonely(&heights_of(p)?, Strategy::Leftmost))
}

pub fn backward(g: &GrowthSeq) -> Result<SchroderPath> {
    path_of_heights(&normalize_offending(&remark(g)?, Strategy::Leftmost)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MarkedHeightSeq {
        s.parse().unwrap()
    }

    fn path(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    #[test]
    fn heights_examples() {
        assert_eq!(heights_of(&path("EDENEDNDDNEN")).unwrap(), m("1 2d 2 3 4d 6d 7d 8"));
        assert_eq!(heights_of(&path("EN")).unwrap(), m("1"));
        assert_eq!(heights_of(&path("EDN")).unwrap(), m("1 2d"));
        let not_little = SchroderPath::new_unchecked(vec![Step::D]);
        assert_eq!(heights_of(&not_little), Err(Error::NotLittle { position: 1 }));
    }

    #[test]
    fn path_of_heights_examples() {
        assert_eq!(path_of_heights(&m("1 2d 2 3 4d 6d 7d 8")).unwrap(), path("EDENEDNDDNEN"));
        assert_eq!(path_of_heights(&m("1")).unwrap(), path("EN"));
        assert_eq!(path_of_heights(&m("1 1")).unwrap(), path("EENN"));
        let err = path_of_heights(&m("1 1d")).unwrap_err();
        assert!(matches!(err, Error::NotRaw(v) if v.clause == "not strictly increasing into marked entry"));
    }

    #[test]
    fn lonely_derivation_matches_worked_table() {
        let d = lonely_derivation(&m("1 2d 2 3 4d 6d 7d 8"), Strategy::Leftmost);
        let states: Vec<String> = d.states.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            states,
            vec![
                "1 2d 2 3 4d 6d 7d 8",
                "1 2d 2 3 5d 4d 7d 8",
                "1 2d 2 4d 3 4d 7d 8",
                "1 2d 3d 2 3 4d 7d 8",
                "1 2d 3d 2 3 6d 4d 8",
                "1 2d 3d 2 5d 3 4d 8",
                "1 2d 3d 4d 2 3 4d 8",
            ]
        );
        assert_eq!(d.steps[0].to_string(), "swap pos=6 value=6→5");
        assert_eq!(normalize_lonely(&m("1 2d"), Strategy::Leftmost), m("1 2d"));
        assert_eq!(
            normalize_lonely(&m("1 2d 2 3 4d 6d 7d 8"), Strategy::Rightmost),
            m("1 2d 3d 4d 2 3 4d 8")
        );
    }

    #[test]
    fn zero_out_and_remark() {
        assert_eq!(zero_out(&m("1 2d 3d 4d 2 3 4d 8")).unwrap().to_string(), "1 0 0 0 2 3 0 8");
        assert_eq!(zero_out(&m("1")).unwrap().to_string(), "1");
        assert_eq!(zero_out(&m("1 2d")).unwrap().to_string(), "1 0");
        assert!(matches!(zero_out(&m("1 2d 2 3 4d 6d 7d 8")), Err(Error::NotLonelyFree(_))));

        let g: GrowthSeq = "1 0 0 0 2 3 0 8".parse().unwrap();
        assert_eq!(remark(&g).unwrap(), m("1 2d 3d 4d 2 3 4d 8"));
        assert_eq!(remark(&"1".parse().unwrap()).unwrap(), m("1"));
        assert_eq!(remark(&"1 0".parse().unwrap()).unwrap(), m("1 2d"));
        let bad = GrowthSeq::new_unchecked(vec![1, 2, 1]);
        assert!(matches!(remark(&bad), Err(Error::InvalidGrowthSeq(_))));
    }

    #[test]
    fn offending_examples() {
        assert_eq!(
            normalize_offending(&m("1 2d 3d 4d 2 3 4d 8"), Strategy::Leftmost).unwrap(),
            m("1 2d 2 3 4d 6d 7d 8")
        );
        assert_eq!(normalize_offending(&m("1 2d"), Strategy::Leftmost).unwrap(), m("1 2d"));
        assert_eq!(normalize_offending(&m("1 2d 2"), Strategy::Leftmost).unwrap(), m("1 2d 2"));
        // an unmarked descent is never repaired
        assert!(matches!(
            normalize_offending(&m("1 2 1"), Strategy::Leftmost),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn offending_derivation_reverses_lonely_table() {
        let lonely = lonely_derivation(&m("1 2d 2 3 4d 6d 7d 8"), Strategy::Leftmost);
        let off = offending_derivation(lonely.result(), Strategy::Leftmost);
        assert_eq!(off.result(), &lonely.states[0]);
        assert_eq!(off.steps.len(), lonely.steps.len());
    }

    #[test]
    fn composite_examples() {
        let g = forward(&path("EDENEDNDDNEN")).unwrap();
        assert_eq!(g.to_string(), "1 0 0 0 2 3 0 8");
        assert_eq!(backward(&g).unwrap(), path("EDENEDNDDNEN"));
        // n = 2 table: EENN, EDN, ENEN -> 11, 10, 12
        assert_eq!(forward(&path("EENN")).unwrap().to_string(), "1 1");
        assert_eq!(forward(&path("EDN")).unwrap().to_string(), "1 0");
        assert_eq!(forward(&path("ENEN")).unwrap().to_string(), "1 2");
    }
}
