//! Exhaustive generators and exact counts.
//!
//! Every generator emits its family in lexicographic order of the token word
//! (E < N < D for Schröder paths, U < 1 < 2 < ... for Deutsch paths,
//! D < 1 < 2 < ... for Ramírez paths, numeric order for sequences and
//! vertex lists). The `for_each_*` visitors stream objects without
//! collecting them; the [`Enumerator`] methods collect under an object
//! ceiling.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::count::{binomial, Count};
use crate::error::{Error, Result};
use crate::paths::{
    BoundedSeq, DStep, DeutschPath, Family, GrowthSeq, KimberlingPath, Point, RStep, RamirezPath, SchroderPath, Step,
};

pub const DEFAULT_MAX_OBJECTS: u64 = 10_000_000;

/// Environment variable that overrides the object ceiling in [`Enumerator::from_env`].
pub const MAX_OBJECTS_ENV: &str = "LATTICEBIJ_MAX_OBJECTS";

/// Size parameter of a family: `n` for one-parameter families, `(i, j)` for
/// Kimberling paths and bounded sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Size {
    N(u32),
    IJ(u32, u32),
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Size::N(n) => write!(f, "n={n}"),
            Size::IJ(i, j) => write!(f, "i={i},j={j}"),
        }
    }
}

impl FromStr for Size {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |v: &str| v.parse::<u32>().map_err(|e| format!("bad size {s:?}: {e}"));
        if let Some(n) = s.strip_prefix("n=") {
            return Ok(Size::N(num(n)?));
        }
        let (i, j) = s.split_once(",j=").ok_or_else(|| format!("bad size {s:?}"))?;
        let i = i.strip_prefix("i=").ok_or_else(|| format!("bad size {s:?}"))?;
        Ok(Size::IJ(num(i)?, num(j)?))
    }
}

impl Serialize for Size {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Collecting generator with an object ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    max_objects: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { max_objects: DEFAULT_MAX_OBJECTS }
    }
}

impl Enumerator {
    pub fn with_limit(max_objects: u64) -> Self {
        Enumerator { max_objects }
    }

    /// Reads the ceiling from `LATTICEBIJ_MAX_OBJECTS`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var(MAX_OBJECTS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Enumerator::with_limit)
            .unwrap_or_default()
    }

    pub fn max_objects(&self) -> u64 {
        self.max_objects
    }

    fn collect<T>(&self, visit: impl FnOnce(&mut dyn FnMut(T) -> Result<()>) -> Result<()>) -> Result<Vec<T>> {
        let mut out = Vec::new();
        let limit = self.max_objects;
        visit(&mut |x| {
            if out.len() as u64 >= limit {
                return Err(Error::ResourceLimit { limit });
            }
            out.push(x);
            Ok(())
        })?;
        Ok(out)
    }

    pub fn little_schroder(&self, n: u32) -> Result<Vec<SchroderPath>> {
        self.collect(|f| for_each_little_schroder(n, f))
    }

    pub fn growth_sequences(&self, n: u32) -> Result<Vec<GrowthSeq>> {
        self.collect(|f| for_each_growth_sequence(n, f))
    }

    pub fn kimberling(&self, i: u32, j: u32) -> Result<Vec<KimberlingPath>> {
        self.collect(|f| for_each_kimberling(i, j, f))
    }

    pub fn bounded_sequences(&self, i: u32, j: u32) -> Result<Vec<BoundedSeq>> {
        self.collect(|f| for_each_bounded_sequence(i, j, f))
    }

    pub fn deutsch(&self, n: u32) -> Result<Vec<DeutschPath>> {
        self.collect(|f| for_each_deutsch(n, f))
    }

    pub fn ramirez(&self, n: u32) -> Result<Vec<RamirezPath>> {
        self.collect(|f| for_each_ramirez(n, f))
    }

    /// Exact size of a family. Kimberling paths use the binomial closed form;
    /// every other family is enumerated and counted under the ceiling.
    pub fn count(&self, family: Family, size: Size) -> Result<Count> {
        match (family, size) {
            (Family::Kimberling, Size::IJ(i, j)) => kimberling_count(i, j),
            _ => self.count_by_enumeration(family, size),
        }
    }

    /// Exact size of a family, always by streaming enumeration under the ceiling.
    pub fn count_by_enumeration(&self, family: Family, size: Size) -> Result<Count> {
        let mut c = Count::ZERO;
        let limit = self.max_objects;
        let mut tick = || -> Result<()> {
            if c.get() >= limit {
                return Err(Error::ResourceLimit { limit });
            }
            c.incr()
        };
        match (family, size) {
            (Family::LittleSchroder, Size::N(n)) => for_each_little_schroder(n, |_| tick())?,
            (Family::GrowthSeq, Size::N(n)) => for_each_growth_sequence(n, |_| tick())?,
            (Family::Kimberling, Size::IJ(i, j)) => for_each_kimberling(i, j, |_| tick())?,
            (Family::BoundedSeq, Size::IJ(i, j)) => for_each_bounded_sequence(i, j, |_| tick())?,
            (Family::Deutsch, Size::N(n)) => for_each_deutsch(n, |_| tick())?,
            (Family::Ramirez, Size::N(n)) => for_each_ramirez(n, |_| tick())?,
            (fam, size) => {
                return Err(Error::SizeMismatch { family: fam, size: size.to_string() })
            }
        }
        Ok(c)
    }
}

pub fn enum_little_schroder(n: u32) -> Result<Vec<SchroderPath>> {
    Enumerator::default().little_schroder(n)
}

pub fn enum_growth_sequences(n: u32) -> Result<Vec<GrowthSeq>> {
    Enumerator::default().growth_sequences(n)
}

pub fn enum_kimberling(i: u32, j: u32) -> Result<Vec<KimberlingPath>> {
    Enumerator::default().kimberling(i, j)
}

pub fn enum_bounded_sequences(i: u32, j: u32) -> Result<Vec<BoundedSeq>> {
    Enumerator::default().bounded_sequences(i, j)
}

pub fn enum_deutsch(n: u32) -> Result<Vec<DeutschPath>> {
    Enumerator::default().deutsch(n)
}

pub fn enum_ramirez(n: u32) -> Result<Vec<RamirezPath>> {
    Enumerator::default().ramirez(n)
}

pub fn count(family: Family, size: Size) -> Result<Count> {
    Enumerator::default().count(family, size)
}

/// Number of paths in `K(i, j)` with exactly `k` interior vertices:
/// `C(i-1, k) * C(j+k, k)`.
pub fn kimberling_count_by_interior(i: u32, j: u32, k: u32) -> Result<Count> {
    if i == 0 {
        return Ok(Count::ZERO);
    }
    let (i, j, k) = (i as u64, j as u64, k as u64);
    binomial(i - 1, k)?.checked_mul(binomial(j + k, k)?)
}

/// `|K(i, j)|` as the sum over interior-vertex counts.
pub fn kimberling_count(i: u32, j: u32) -> Result<Count> {
    Count::try_sum((0..i.max(1)).map(|k| kimberling_count_by_interior(i, j, k)).collect::<Result<Vec<_>>>()?)
}

/// Streams the little Schröder paths of semilength `n`.
pub fn for_each_little_schroder<F>(n: u32, mut f: F) -> Result<()>
where
    F: FnMut(SchroderPath) -> Result<()>,
{
    fn go(n: u32, x: u32, y: u32, word: &mut Vec<Step>, f: &mut dyn FnMut(SchroderPath) -> Result<()>) -> Result<()> {
        if x == n && y == n {
            return f(SchroderPath::new_unchecked(word.clone()));
        }
        if x < n {
            word.push(Step::E);
            go(n, x + 1, y, word, f)?;
            word.pop();
        }
        if y < x {
            word.push(Step::N);
            go(n, x, y + 1, word, f)?;
            word.pop();
        }
        // a D step may not start on the diagonal
        if x < n && y < x {
            word.push(Step::D);
            go(n, x + 1, y + 1, word, f)?;
            word.pop();
        }
        Ok(())
    }
    if n == 0 {
        return Ok(());
    }
    go(n, 0, 0, &mut Vec::new(), &mut f)
}

/// Streams the growth sequences of length `n`.
pub fn for_each_growth_sequence<F>(n: u32, mut f: F) -> Result<()>
where
    F: FnMut(GrowthSeq) -> Result<()>,
{
    fn go(n: usize, last: u32, u: &mut Vec<u32>, f: &mut dyn FnMut(GrowthSeq) -> Result<()>) -> Result<()> {
        if u.len() == n {
            return f(GrowthSeq::new_unchecked(u.clone()));
        }
        let pos = u.len() as u32 + 1;
        u.push(0);
        go(n, last, u, f)?;
        u.pop();
        for v in last.max(1)..=pos {
            u.push(v);
            go(n, v, u, f)?;
            u.pop();
        }
        Ok(())
    }
    if n == 0 {
        return Ok(());
    }
    go(n as usize, 1, &mut vec![1], &mut f)
}

/// Streams `K(i, j)`: every choice of interior x-coordinates from
/// `1..i` with weakly increasing y-values from `0..=j`.
pub fn for_each_kimberling<F>(i: u32, j: u32, mut f: F) -> Result<()>
where
    F: FnMut(KimberlingPath) -> Result<()>,
{
    fn go(i: u32, j: u32, verts: &mut Vec<Point>, f: &mut dyn FnMut(KimberlingPath) -> Result<()>) -> Result<()> {
        let last = *verts.last().expect("origin present");
        for x in last.x + 1..i {
            for y in last.y..=j {
                verts.push(Point::new(x, y));
                go(i, j, verts, f)?;
                verts.pop();
            }
        }
        verts.push(Point::new(i, j));
        f(KimberlingPath::new_unchecked(verts.clone()))?;
        verts.pop();
        Ok(())
    }
    if i == 0 {
        return Ok(());
    }
    go(i, j, &mut vec![Point::ORIGIN], &mut f)
}

/// Streams `L(i, j)`; for `i = 0` this is the empty sequence alone.
pub fn for_each_bounded_sequence<F>(i: u32, j: u32, mut f: F) -> Result<()>
where
    F: FnMut(BoundedSeq) -> Result<()>,
{
    fn go(i: usize, j: u32, max: u32, u: &mut Vec<u32>, f: &mut dyn FnMut(BoundedSeq) -> Result<()>) -> Result<()> {
        if u.len() == i {
            return f(BoundedSeq::new_unchecked(u.clone(), j));
        }
        let lo = if u.is_empty() { 1 } else { max.saturating_sub(1).max(1) };
        for v in lo..=j + 2 {
            u.push(v);
            go(i, j, max.max(v), u, f)?;
            u.pop();
        }
        Ok(())
    }
    go(i as usize, j, 0, &mut Vec::new(), &mut f)
}

/// Feasibility table for completing a short-valley closed Deutsch path:
/// `table[rem][level][long]` is true when `rem` more steps can close a path
/// currently at `level` whose last step was a long downstep (`long = 1`).
fn deutsch_feasibility(n: usize) -> Vec<Vec<[bool; 2]>> {
    let mut t = vec![vec![[false; 2]; n + 2]; n + 1];
    t[0][0] = [true, true];
    for rem in 1..=n {
        for level in 0..=n {
            for long in 0..2 {
                let up = long == 0 && level < n && t[rem - 1][level + 1][0];
                let down = (1..=level).any(|d| t[rem - 1][level - d][usize::from(d >= 2)]);
                t[rem][level][long] = up || down;
            }
        }
    }
    t
}

/// Streams the closed short-valley Deutsch paths with `n` steps.
pub fn for_each_deutsch<F>(n: u32, mut f: F) -> Result<()>
where
    F: FnMut(DeutschPath) -> Result<()>,
{
    struct Ctx<'a> {
        n: usize,
        feasible: Vec<Vec<[bool; 2]>>,
        f: &'a mut dyn FnMut(DeutschPath) -> Result<()>,
    }
    fn go(ctx: &mut Ctx<'_>, level: usize, long: bool, word: &mut Vec<DStep>) -> Result<()> {
        let rem = ctx.n - word.len();
        if rem == 0 {
            return (ctx.f)(DeutschPath::new_unchecked(word.clone()));
        }
        if !long && level < ctx.n && ctx.feasible[rem - 1][level + 1][0] {
            word.push(DStep::Up);
            go(ctx, level + 1, false, word)?;
            word.pop();
        }
        for d in 1..=level {
            if ctx.feasible[rem - 1][level - d][usize::from(d >= 2)] {
                word.push(DStep::Down(d as u32));
                go(ctx, level - d, d >= 2, word)?;
                word.pop();
            }
        }
        Ok(())
    }
    let n = n as usize;
    let mut ctx = Ctx {
        n,
        feasible: deutsch_feasibility(n),
        f: &mut f,
    };
    if !ctx.feasible[n][0][0] {
        return Ok(());
    }
    go(&mut ctx, 0, false, &mut Vec::with_capacity(n))
}

/// Streams the Ramírez paths of size `n`.
pub fn for_each_ramirez<F>(n: u32, mut f: F) -> Result<()>
where
    F: FnMut(RamirezPath) -> Result<()>,
{
    // closing from `level` with `rem` x-extent left needs `level` downs plus
    // any number of up/down pairs, each of extent at least 2
    fn feasible(level: u32, rem: u32) -> bool {
        rem >= level && (rem == level || rem - level >= 2)
    }
    fn go(level: u32, rem: u32, word: &mut Vec<RStep>, f: &mut dyn FnMut(RamirezPath) -> Result<()>) -> Result<()> {
        if rem == 0 {
            return f(RamirezPath::new_unchecked(word.clone()));
        }
        if level > 0 && feasible(level - 1, rem - 1) {
            word.push(RStep::Down);
            go(level - 1, rem - 1, word, f)?;
            word.pop();
        }
        for k in 1..=rem {
            if feasible(level + 1, rem - k) {
                word.push(RStep::Up(k));
                go(level + 1, rem - k, word, f)?;
                word.pop();
            }
        }
        Ok(())
    }
    if !feasible(0, n) {
        return Ok(());
    }
    go(0, n, &mut Vec::new(), &mut f)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::paths::{validate, PathObject};

    fn words<T: fmt::Display>(v: &[T]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    // Independent backtracking straight over clauses (i)-(iii), no pruning.
    fn growth_oracle(n: usize) -> usize {
        fn ok(u: &[u32]) -> bool {
            let nz: Vec<u32> = u.iter().copied().filter(|&v| v != 0).collect();
            u[0] == 1 && u.iter().enumerate().all(|(i, &v)| v as usize <= i + 1) && nz.windows(2).all(|w| w[0] <= w[1])
        }
        fn go(n: usize, u: &mut Vec<u32>) -> usize {
            if u.len() == n {
                return usize::from(ok(u));
            }
            let mut c = 0;
            for v in 0..=n as u32 {
                u.push(v);
                c += go(n, u);
                u.pop();
            }
            c
        }
        go(n, &mut Vec::new())
    }

    #[test]
    fn little_schroder_small() {
        assert_eq!(words(&enum_little_schroder(1).unwrap()), vec!["EN"]);
        assert_eq!(words(&enum_little_schroder(2).unwrap()), vec!["EENN", "ENEN", "EDN"]);
        let counts: Vec<usize> = (1..=5).map(|n| enum_little_schroder(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 11, 45, 197]);
    }

    #[test]
    fn growth_small() {
        assert_eq!(words(&enum_growth_sequences(1).unwrap()), vec!["1"]);
        assert_eq!(words(&enum_growth_sequences(2).unwrap()), vec!["1 0", "1 1", "1 2"]);
        assert_eq!(growth_oracle(5), 197);
        assert_eq!(enum_growth_sequences(5).unwrap().len(), 197);
        for n in 1..=6 {
            assert_eq!(enum_growth_sequences(n as u32).unwrap().len(), growth_oracle(n));
        }
    }

    #[test]
    fn kimberling_small() {
        let k21 = words(&enum_kimberling(2, 1).unwrap());
        assert_eq!(k21, vec!["0,0 1,0 2,1", "0,0 1,1 2,1", "0,0 2,1"]);
        assert_eq!(words(&enum_kimberling(1, 4).unwrap()), vec!["0,0 1,4"]);
        assert_eq!(enum_kimberling(3, 1).unwrap().len(), 8);
        assert!(enum_kimberling(0, 3).unwrap().is_empty());
    }

    #[test]
    fn kimberling_interior_counts() {
        assert_eq!(kimberling_count_by_interior(2, 1, 1).unwrap(), Count(2));
        assert_eq!(kimberling_count_by_interior(5, 3, 0).unwrap(), Count(1));
        assert_eq!(kimberling_count_by_interior(2, 1, 2).unwrap(), Count(0));
        let with_one = enum_kimberling(2, 1).unwrap().iter().filter(|p| p.interior_count() == 1).count();
        assert_eq!(with_one, 2);
        // Σ_k C(2,k)C(1+k,k) = 1 + 4 + 3
        assert_eq!(kimberling_count(3, 1).unwrap(), Count(8));
    }

    #[test]
    fn bounded_small() {
        assert_eq!(
            words(&enum_bounded_sequences(2, 1).unwrap()),
            vec!["1 1", "1 2", "1 3", "2 1", "2 2", "2 3", "3 2", "3 3"]
        );
        assert_eq!(words(&enum_bounded_sequences(1, 3).unwrap()), vec!["1", "2", "3", "4", "5"]);
        let eps = enum_bounded_sequences(0, 5).unwrap();
        assert_eq!(eps.len(), 1);
        assert!(eps[0].is_empty());
        assert_eq!(eps[0].ambient_j(), 5);
    }

    #[test]
    fn deutsch_small() {
        assert_eq!(words(&enum_deutsch(4).unwrap()), vec!["U U U 3", "U U 1 1", "U 1 U 1"]);
        assert_eq!(
            words(&enum_deutsch(5).unwrap()),
            vec!["U U U U 4", "U U U 1 2", "U U U 2 1", "U U 1 U 2", "U 1 U U 2"]
        );
        assert!(enum_deutsch(1).unwrap().is_empty());
        assert_eq!(enum_deutsch(0).unwrap().len(), 1);
        assert_eq!(words(&enum_deutsch(2).unwrap()), vec!["U 1"]);
    }

    #[test]
    fn ramirez_small() {
        assert_eq!(words(&enum_ramirez(4).unwrap()), vec!["1 D 1 D", "1 1 D D", "3 D"]);
        assert_eq!(
            words(&enum_ramirez(5).unwrap()),
            vec!["1 D 2 D", "1 2 D D", "2 D 1 D", "2 1 D D", "4 D"]
        );
        assert_eq!(words(&enum_ramirez(2).unwrap()), vec!["1 D"]);
        assert!(enum_ramirez(1).unwrap().is_empty());
        assert_eq!(enum_ramirez(0).unwrap().len(), 1);
    }

    #[test]
    fn emission_is_sorted_valid_and_duplicate_free() {
        fn check<T: Ord + Clone + std::hash::Hash>(v: Vec<T>, wrap: impl Fn(T) -> PathObject) {
            let mut sorted = v.clone();
            sorted.sort();
            assert!(v == sorted, "not in canonical order");
            let set: HashSet<_> = v.iter().cloned().collect();
            assert_eq!(set.len(), v.len());
            for x in v {
                let obj = wrap(x);
                assert!(validate(&obj).is_empty(), "{obj} invalid");
            }
        }
        for n in 1..=7 {
            check(enum_little_schroder(n).unwrap(), PathObject::Schroder);
            check(enum_growth_sequences(n).unwrap(), PathObject::Growth);
        }
        for n in 0..=10 {
            check(enum_deutsch(n).unwrap(), PathObject::Deutsch);
            check(enum_ramirez(n).unwrap(), PathObject::Ramirez);
        }
        for i in 0..=4 {
            for j in 0..=4 {
                check(enum_kimberling(i, j).unwrap(), PathObject::Kimberling);
                check(enum_bounded_sequences(i, j).unwrap(), PathObject::Bounded);
            }
        }
    }

    #[test]
    fn resource_limit_is_enforced() {
        let e = Enumerator::with_limit(10);
        assert_eq!(e.little_schroder(4), Err(Error::ResourceLimit { limit: 10 }));
        assert_eq!(Enumerator::with_limit(11).little_schroder(3).unwrap().len(), 11);
        assert_eq!(e.count(Family::Deutsch, Size::N(12)), Err(Error::ResourceLimit { limit: 10 }));
    }

    #[test]
    fn count_dispatch() {
        assert_eq!(count(Family::LittleSchroder, Size::N(4)).unwrap(), Count(45));
        assert_eq!(count(Family::Kimberling, Size::IJ(2, 1)).unwrap(), Count(3));
        assert_eq!(
            count(Family::Ramirez, Size::N(6)).unwrap(),
            count(Family::Deutsch, Size::N(6)).unwrap()
        );
        assert!(count(Family::Deutsch, Size::IJ(1, 1)).is_err());
    }

    #[test]
    fn size_text() {
        for s in [Size::N(7), Size::IJ(2, 0)] {
            assert_eq!(s.to_string().parse::<Size>().unwrap(), s);
        }
    }
}
