//! Exhaustive desk-scale verification of the three bijections, and count
//! cross-checks against b-file style reference files.
//!
//! For every size in range, both sides are enumerated. Each domain object is
//! mapped forward, checked for codomain membership and mapped back; each
//! codomain object likewise in the other direction. Both round trips plus
//! equal counts establish a bijection without materializing either side.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{deutsch, kimberling, schroder};
use crate::count::Count;
use crate::enumeration::{self, Enumerator, Size};
use crate::error::{Error, Result};
use crate::paths::{Family, GrowthSeq, MarkedHeightSeq};

/// Failure lists keep at most this many entries per size; the rest are only counted.
pub const MAX_LISTED_FAILURES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BijectionId {
    Schroder,
    Kimberling,
    Deutsch,
}

impl BijectionId {
    pub const ALL: [BijectionId; 3] = [BijectionId::Schroder, BijectionId::Kimberling, BijectionId::Deutsch];

    pub fn name(self) -> &'static str {
        match self {
            BijectionId::Schroder => "schroder",
            BijectionId::Kimberling => "kimberling",
            BijectionId::Deutsch => "deutsch",
        }
    }

    pub fn domain(self) -> Family {
        match self {
            BijectionId::Schroder => Family::LittleSchroder,
            BijectionId::Kimberling => Family::BoundedSeq,
            BijectionId::Deutsch => Family::Deutsch,
        }
    }

    /// The family whose counts reference files list for this bijection.
    pub fn reference_family(self) -> Family {
        match self {
            BijectionId::Schroder => Family::LittleSchroder,
            BijectionId::Kimberling => Family::Kimberling,
            BijectionId::Deutsch => Family::Ramirez,
        }
    }

    pub fn codomain(self) -> Family {
        match self {
            BijectionId::Schroder => Family::GrowthSeq,
            BijectionId::Kimberling => Family::Kimberling,
            BijectionId::Deutsch => Family::Ramirez,
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "schroder" => Ok(BijectionId::Schroder),
            "kimberling" => Ok(BijectionId::Kimberling),
            "deutsch" => Ok(BijectionId::Deutsch),
            other => Err(format!("unknown bijection {other:?}")),
        }
    }
}

/// Size range to verify. For Kimberling, `max` bounds the sequence length
/// `i` of `L(i, j)` and `max_j` bounds `j`; other bijections ignore `max_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max: u32,
    pub max_j: u32,
}

impl Bounds {
    pub fn up_to(max: u32) -> Self {
        Bounds { max, max_j: max }
    }

    pub fn grid(max_i: u32, max_j: u32) -> Self {
        Bounds { max: max_i, max_j }
    }

    /// The sizes a bijection is checked at, in canonical order.
    pub fn sizes(&self, id: BijectionId) -> Vec<Size> {
        match id {
            BijectionId::Schroder => (1..=self.max).map(Size::N).collect(),
            BijectionId::Deutsch => (0..=self.max).map(Size::N).collect(),
            BijectionId::Kimberling => (0..=self.max)
                .flat_map(|i| (0..=self.max_j).map(move |j| Size::IJ(i, j)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub size: Size,
    pub domain_count: Count,
    pub codomain_count: Count,
    pub round_trip_failures: Vec<String>,
    pub codomain_violations: Vec<String>,
    pub confluence_mismatches: Vec<String>,
    pub count_mismatches: Vec<String>,
    /// Failures found beyond the listed ones.
    pub omitted_failures: u64,
}

impl SizeReport {
    fn new(size: Size) -> Self {
        SizeReport {
            size,
            domain_count: Count::ZERO,
            codomain_count: Count::ZERO,
            round_trip_failures: Vec::new(),
            codomain_violations: Vec::new(),
            confluence_mismatches: Vec::new(),
            count_mismatches: Vec::new(),
            omitted_failures: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.round_trip_failures.is_empty()
            && self.codomain_violations.is_empty()
            && self.confluence_mismatches.is_empty()
            && self.count_mismatches.is_empty()
    }

    fn first_failure(&self) -> Option<&String> {
        self.round_trip_failures
            .first()
            .or(self.codomain_violations.first())
            .or(self.confluence_mismatches.first())
            .or(self.count_mismatches.first())
    }
}

fn record(list: &mut Vec<String>, omitted: &mut u64, entry: String) {
    if list.len() < MAX_LISTED_FAILURES {
        list.push(entry);
    } else {
        *omitted += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Bijection id, or `crosscheck:<family>` for reference-count reports.
    pub subject: String,
    pub range: String,
    pub sizes: Vec<SizeReport>,
    pub pass: bool,
    /// Canonical text of the first failing input at the smallest failing size.
    pub smallest_counterexample: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn from_sizes(subject: String, mut sizes: Vec<SizeReport>, elapsed_ms: u64) -> Self {
        sizes.sort_by_key(|s| s.size);
        let pass = sizes.iter().all(SizeReport::passed);
        let smallest_counterexample = sizes.iter().find_map(|s| s.first_failure()).cloned();
        let range = match (sizes.first(), sizes.last()) {
            (Some(a), Some(b)) => format!("{}..{}", a.size, b.size),
            _ => "empty".to_string(),
        };
        Report {
            subject,
            range,
            sizes,
            pass,
            smallest_counterexample,
            elapsed_ms,
        }
    }

    /// Combines reports over disjoint size shards of the same subject.
    pub fn merge(self, other: Report) -> Report {
        assert_eq!(self.subject, other.subject, "merging reports of different subjects");
        let mut sizes = self.sizes;
        sizes.extend(other.sizes);
        Report::from_sizes(self.subject, sizes, self.elapsed_ms + other.elapsed_ms)
    }

    /// Domain counts in size order.
    pub fn counts(&self) -> Vec<Count> {
        self.sizes.iter().map(|s| s.domain_count).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Same report with timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Report {
        Report { elapsed_ms: 0, ..self.clone() }
    }
}

impl fmt::Display for Report {
    /// Line-oriented text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subject {}", self.subject)?;
        writeln!(f, "range {}", self.range)?;
        let counts: Vec<String> = self.counts().iter().map(|c| c.to_string()).collect();
        writeln!(f, "counts {}", counts.join(" "))?;
        for s in &self.sizes {
            write!(
                f,
                "{} domain={} codomain={} {}",
                s.size,
                s.domain_count,
                s.codomain_count,
                if s.passed() { "ok" } else { "FAIL" }
            )?;
            writeln!(f)?;
            for (label, list) in [
                ("round-trip", &s.round_trip_failures),
                ("codomain", &s.codomain_violations),
                ("confluence", &s.confluence_mismatches),
                ("count", &s.count_mismatches),
            ] {
                for item in list {
                    writeln!(f, "  {label}: {item}")?;
                }
            }
            if s.omitted_failures > 0 {
                writeln!(f, "  ... {} more", s.omitted_failures)?;
            }
        }
        if let Some(c) = &self.smallest_counterexample {
            writeln!(f, "counterexample {c}")?;
        }
        writeln!(f, "result {}", if self.pass { "PASS" } else { "FAIL" })?;
        write!(f, "elapsed_ms {}", self.elapsed_ms)
    }
}

fn limit_guard(limit: u64) -> impl FnMut(&mut Count) -> Result<()> {
    move |c: &mut Count| {
        if c.get() >= limit {
            return Err(Error::ResourceLimit { limit });
        }
        c.incr()
    }
}

fn check_schroder_size(n: u32, limit: u64) -> Result<SizeReport> {
    use schroder::Strategy::{Leftmost, Rightmost};
    let mut rep = SizeReport::new(Size::N(n));
    let mut omitted = 0;
    let mut tick = limit_guard(limit);
    enumeration::for_each_little_schroder(n, |p| {
        tick(&mut rep.domain_count)?;
        let heights = schroder::heights_of(&p)?;
        let left = schroder::normalize_lonely(&heights, Leftmost);
        let right = schroder::normalize_lonely(&heights, Rightmost);
        if left != right {
            record(&mut rep.confluence_mismatches, &mut omitted, format!("{p}: lonely {left} vs {right}"));
        }
        match schroder::forward(&p) {
            Ok(g) => {
                if !g.violations().is_empty() || g.len() != n as usize || g.zeros() != p.diagonal_steps() {
                    record(&mut rep.codomain_violations, &mut omitted, format!("{p} -> {g}"));
                }
                match schroder::backward(&g) {
                    Ok(back) if back == p => {}
                    Ok(back) => record(&mut rep.round_trip_failures, &mut omitted, format!("{p} -> {g} -> {back}")),
                    Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{p} -> {g}: {e}")),
                }
            }
            Err(e) => record(&mut rep.codomain_violations, &mut omitted, format!("{p}: {e}")),
        }
        Ok(())
    })?;
    let mut tick = limit_guard(limit);
    enumeration::for_each_growth_sequence(n, |g: GrowthSeq| {
        tick(&mut rep.codomain_count)?;
        if let Ok(marked) = schroder::remark(&g) {
            let left = schroder::normalize_offending(&marked, Leftmost);
            let right = schroder::normalize_offending(&marked, Rightmost);
            if left != right {
                record(&mut rep.confluence_mismatches, &mut omitted, format!("{g}: offending {left:?} vs {right:?}"));
            }
        }
        match schroder::backward(&g) {
            Ok(p) => {
                if !p.violations().is_empty() {
                    record(&mut rep.codomain_violations, &mut omitted, format!("{g} -> {p}"));
                }
                match schroder::forward(&p) {
                    Ok(back) if back == g => {}
                    Ok(back) => record(&mut rep.round_trip_failures, &mut omitted, format!("{g} -> {p} -> {back}")),
                    Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{g} -> {p}: {e}")),
                }
            }
            Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{g}: {e}")),
        }
        Ok(())
    })?;
    rep.omitted_failures = omitted;
    count_agreement(&mut rep);
    Ok(rep)
}

fn check_kimberling_size(i: u32, j: u32, limit: u64) -> Result<SizeReport> {
    let mut rep = SizeReport::new(Size::IJ(i, j));
    let mut omitted = 0;
    let mut tick = limit_guard(limit);
    enumeration::for_each_bounded_sequence(i, j, |u| {
        tick(&mut rep.domain_count)?;
        match kimberling::phi(&u) {
            Ok(q) => {
                let t = q.terminal();
                if !q.violations().is_empty() || t.x != i + 1 || t.y != j {
                    record(&mut rep.codomain_violations, &mut omitted, format!("[{u}] -> {q}"));
                }
                match kimberling::phi_inv(&q) {
                    Ok(back) if back == u => {}
                    Ok(back) => record(&mut rep.round_trip_failures, &mut omitted, format!("[{u}] -> {q} -> [{back}]")),
                    Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("[{u}] -> {q}: {e}")),
                }
            }
            Err(e) => record(&mut rep.codomain_violations, &mut omitted, format!("[{u}]: {e}")),
        }
        Ok(())
    })?;
    let mut tick = limit_guard(limit);
    enumeration::for_each_kimberling(i + 1, j, |q| {
        tick(&mut rep.codomain_count)?;
        match kimberling::phi_inv(&q) {
            Ok(u) => {
                if !u.violations().is_empty() || u.len() != i as usize || u.ambient_j() != j {
                    record(&mut rep.codomain_violations, &mut omitted, format!("{q} -> [{u}]"));
                }
                match kimberling::phi(&u) {
                    Ok(back) if back == q => {}
                    Ok(back) => record(&mut rep.round_trip_failures, &mut omitted, format!("{q} -> [{u}] -> {back}")),
                    Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{q} -> [{u}]: {e}")),
                }
            }
            Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{q}: {e}")),
        }
        Ok(())
    })?;
    rep.omitted_failures = omitted;
    count_agreement(&mut rep);
    Ok(rep)
}

fn check_deutsch_size(n: u32, limit: u64) -> Result<SizeReport> {
    let mut rep = SizeReport::new(Size::N(n));
    let mut omitted = 0;
    let mut tick = limit_guard(limit);
    enumeration::for_each_deutsch(n, |p| {
        tick(&mut rep.domain_count)?;
        match deutsch::forward(&p) {
            Ok(q) => {
                let ok = q.violations().is_empty()
                    && q.size() == n as u64
                    && q.down_count() == p.down_count()
                    && q.up_width() == p.up_count() as u64;
                if !ok {
                    record(&mut rep.codomain_violations, &mut omitted, format!("{p} -> {q}"));
                }
                match deutsch::backward(&q) {
                    Ok(back) if back == p => {}
                    Ok(back) => record(&mut rep.round_trip_failures, &mut omitted, format!("{p} -> {q} -> {back}")),
                    Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{p} -> {q}: {e}")),
                }
            }
            Err(e) => record(&mut rep.codomain_violations, &mut omitted, format!("{p}: {e}")),
        }
        Ok(())
    })?;
    let mut tick = limit_guard(limit);
    enumeration::for_each_ramirez(n, |q| {
        tick(&mut rep.codomain_count)?;
        match deutsch::backward(&q) {
            Ok(p) => {
                if !p.violations().is_empty() || p.len() != n as usize {
                    record(&mut rep.codomain_violations, &mut omitted, format!("{q} -> {p}"));
                }
                match deutsch::forward(&p) {
                    Ok(back) if back == q => {}
                    Ok(back) => record(&mut rep.round_trip_failures, &mut omitted, format!("{q} -> {p} -> {back}")),
                    Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{q} -> {p}: {e}")),
                }
            }
            Err(e) => record(&mut rep.round_trip_failures, &mut omitted, format!("{q}: {e}")),
        }
        Ok(())
    })?;
    rep.omitted_failures = omitted;
    count_agreement(&mut rep);
    Ok(rep)
}

fn count_agreement(rep: &mut SizeReport) {
    if rep.domain_count != rep.codomain_count {
        rep.count_mismatches.push(format!(
            "domain has {} objects, codomain has {}",
            rep.domain_count, rep.codomain_count
        ));
    }
}

/// Checks one bijection over `bounds`, using the default object ceiling per side and size.
pub fn check_bijection(id: BijectionId, bounds: Bounds) -> Result<Report> {
    check_bijection_with(id, bounds, &Enumerator::default())
}

/// Checks one bijection; sizes run on concurrent workers and are merged in
/// canonical order.
pub fn check_bijection_with(id: BijectionId, bounds: Bounds, limits: &Enumerator) -> Result<Report> {
    let start = Instant::now();
    let limit = limits.max_objects();
    let sizes = bounds.sizes(id);
    let reports = sizes
        .par_iter()
        .map(|&size| match (id, size) {
            (BijectionId::Schroder, Size::N(n)) => check_schroder_size(n, limit),
            (BijectionId::Deutsch, Size::N(n)) => check_deutsch_size(n, limit),
            (BijectionId::Kimberling, Size::IJ(i, j)) => check_kimberling_size(i, j, limit),
            _ => unreachable!("bounds produce matching size kinds"),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_sizes(id.name().to_string(), reports, start.elapsed().as_millis() as u64))
}

/// Confluence of both normalizers over every raw marked height sequence of
/// length `n` (these are exactly the height sequences of little Schröder
/// paths). Offending-normalization is compared on the lonely-free normal
/// forms, which is where it has work to do, and on the raw input itself.
/// Returns the number of sequences checked and the mismatches found.
pub fn confluence_sweep(n: u32) -> Result<(Count, Vec<String>)> {
    use schroder::Strategy::{Leftmost, Rightmost};
    let mut checked = Count::ZERO;
    let mut mismatches = Vec::new();
    enumeration::for_each_little_schroder(n, |p| {
        checked.incr()?;
        let raw: MarkedHeightSeq = schroder::heights_of(&p)?;
        let left = schroder::normalize_lonely(&raw, Leftmost);
        let right = schroder::normalize_lonely(&raw, Rightmost);
        if left != right {
            mismatches.push(format!("lonely {raw}: {left} vs {right}"));
        }
        for m in [&raw, &left] {
            let a = schroder::normalize_offending(m, Leftmost);
            let b = schroder::normalize_offending(m, Rightmost);
            if a != b {
                mismatches.push(format!("offending {m}: {a:?} vs {b:?}"));
            }
        }
        Ok(())
    })?;
    Ok((checked, mismatches))
}

/// Outcome of [`catalan_check`] at one semilength.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalanCheck {
    pub n: u32,
    /// D-free little Schröder paths of semilength `n`.
    pub dfree_paths: Count,
    /// Zero-free growth sequences of length `n`.
    pub zerofree_sequences: Count,
    /// D-free paths whose image contains a zero, or does not map back.
    pub stray_images: Vec<String>,
}

impl CatalanCheck {
    pub fn passed(&self) -> bool {
        self.stray_images.is_empty() && self.dfree_paths == self.zerofree_sequences
    }
}

/// The forward map restricted to D-free paths lands in zero-free growth
/// sequences, injectively (by round trip), and both sets have equal size, so
/// the restriction is onto.
pub fn catalan_check(n: u32) -> Result<CatalanCheck> {
    let mut out = CatalanCheck {
        n,
        dfree_paths: Count::ZERO,
        zerofree_sequences: Count::ZERO,
        stray_images: Vec::new(),
    };
    enumeration::for_each_little_schroder(n, |p| {
        if p.diagonal_steps() != 0 {
            return Ok(());
        }
        out.dfree_paths.incr()?;
        let g = schroder::forward(&p)?;
        if g.zeros() != 0 || schroder::backward(&g)? != p {
            out.stray_images.push(format!("{p} -> {g}"));
        }
        Ok(())
    })?;
    enumeration::for_each_growth_sequence(n, |g| {
        if g.zeros() == 0 {
            out.zerofree_sequences.incr()?;
        }
        Ok(())
    })?;
    Ok(out)
}

/// Reference counts read from a b-file style text: `n value` lines for
/// one-parameter families, `i j value` lines for two-parameter ones, `#`
/// starting a comment.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReferenceCounts {
    pub entries: BTreeMap<Size, Count>,
}

impl ReferenceCounts {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<u64>().map_err(|_| Error::FileFormat {
                    line: ln + 1,
                    reason: format!("not a nonnegative integer: {s:?}"),
                })
            };
            let narrow = |v: u64| {
                u32::try_from(v).map_err(|_| Error::FileFormat {
                    line: ln + 1,
                    reason: format!("index {v} out of range"),
                })
            };
            let (size, value) = match fields.as_slice() {
                [n, v] => (Size::N(narrow(num(n)?)?), num(v)?),
                [i, j, v] => (Size::IJ(narrow(num(i)?)?, narrow(num(j)?)?), num(v)?),
                _ => {
                    return Err(Error::FileFormat {
                        line: ln + 1,
                        reason: format!("expected 2 or 3 fields, found {}", fields.len()),
                    })
                }
            };
            if entries.insert(size, Count(value)).is_some() {
                return Err(Error::FileFormat {
                    line: ln + 1,
                    reason: format!("duplicate entry for {size}"),
                });
            }
        }
        Ok(ReferenceCounts { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::FileFormat {
            line: 0,
            reason: format!("{}: {e}", path.display()),
        })?;
        ReferenceCounts::parse(&text)
    }

    /// Renders the b-file text, one entry per line.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (size, v) in &self.entries {
            match size {
                Size::N(n) => out.push_str(&format!("{n} {v}\n")),
                Size::IJ(i, j) => out.push_str(&format!("{i} {j} {v}\n")),
            }
        }
        out
    }
}

/// Whether `size` lies within `bounds` for `family`: `n <= max`, or
/// `i <= max` and `j <= max_j`.
fn in_bounds(size: Size, bounds: Bounds) -> bool {
    match size {
        Size::N(n) => n <= bounds.max,
        Size::IJ(i, j) => i <= bounds.max && j <= bounds.max_j,
    }
}

/// Compares enumerated counts of `family` with every reference entry inside `bounds`.
pub fn crosscheck_counts(family: Family, bounds: Bounds, reference: &ReferenceCounts) -> Result<Report> {
    crosscheck_counts_with(family, bounds, reference, &Enumerator::default())
}

pub fn crosscheck_counts_with(
    family: Family,
    bounds: Bounds,
    reference: &ReferenceCounts,
    limits: &Enumerator,
) -> Result<Report> {
    let start = Instant::now();
    let wanted: Vec<(Size, Count)> = reference
        .entries
        .iter()
        .filter(|(s, _)| in_bounds(**s, bounds))
        .map(|(s, c)| (*s, *c))
        .collect();
    let sizes = wanted
        .par_iter()
        .map(|&(size, expected)| {
            let actual = limits.count_by_enumeration(family, size)?;
            let mut rep = SizeReport::new(size);
            rep.domain_count = actual;
            rep.codomain_count = expected;
            if actual != expected {
                rep.count_mismatches
                    .push(format!("{family} {size}: enumerated {actual}, reference {expected}"));
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_sizes(format!("crosscheck:{family}"), sizes, start.elapsed().as_millis() as u64))
}
