//! The map `L(i, j) -> K(i+1, j)` and its inverse.
//!
//! The map is defined by recursion on the first entry `k` of the sequence:
//! for `k = 1` the image of the tail is shifted one unit east and its first
//! vertex is replaced by the origin; for `k = 2` the shifted image gets the
//! origin prepended; for `k >= 3` the tail is lowered by `k - 2`, mapped with
//! `j` reduced by `k - 2`, translated by `(1, k - 2)`, and the origin is
//! prepended. Both directions here unroll the recursion into a single
//! left-to-right pass that carries the accumulated translation.

use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{BoundedSeq, KimberlingPath, Point};

/// Which recursive case handled an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiCase {
    /// First entry 1: no vertex on `x = 1`.
    Skip,
    /// First entry 2: vertex `(1, 0)`.
    Floor,
    /// First entry `k >= 3`: vertex `(1, k - 2)`, everything lifted by `k - 2`.
    Lift(u32),
}

/// One unrolled recursion level, for tracing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhiStep {
    /// The entry as seen by its recursion level (after earlier lifts).
    pub entry: u32,
    pub case: PhiCase,
    /// Absolute position of the current sub-path origin after this step.
    pub origin: Point,
    /// Ambient `j` of the remaining recursion.
    pub remaining_j: u32,
}

impl fmt::Display for PhiStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let case = match self.case {
            PhiCase::Skip => "skip".to_string(),
            PhiCase::Floor => "floor".to_string(),
            PhiCase::Lift(h) => format!("lift+{h}"),
        };
        write!(f, "entry={} case={} origin={} j={}", self.entry, case, self.origin, self.remaining_j)
    }
}

pub fn phi(u: &BoundedSeq) -> Result<KimberlingPath> {
    phi_traced(u).map(|(p, _)| p)
}

pub fn phi_traced(u: &BoundedSeq) -> Result<(KimberlingPath, Vec<PhiStep>)> {
    if let Some(v) = u.violations().into_iter().next() {
        return Err(Error::InvalidSequence(v));
    }
    let mut verts = vec![Point::ORIGIN];
    let mut trace = Vec::with_capacity(u.len());
    let mut origin = Point::ORIGIN;
    let mut lowered = 0u32;
    let mut j = u.ambient_j();
    for &raw in u.values() {
        let k = raw - lowered;
        assert!(k >= 1 && k <= j + 2, "bounded-sequence invariants guarantee 1 <= k <= j+2");
        origin.x += 1;
        let case = match k {
            1 => PhiCase::Skip,
            2 => {
                verts.push(origin);
                PhiCase::Floor
            }
            k => {
                let h = k - 2;
                origin.y += h;
                lowered += h;
                j -= h;
                verts.push(origin);
                PhiCase::Lift(h)
            }
        };
        trace.push(PhiStep { entry: k, case, origin, remaining_j: j });
    }
    verts.push(Point::new(origin.x + 1, origin.y + j));
    Ok((KimberlingPath::new_unchecked(verts), trace))
}

/// Inverse of [`phi`]. The ambient `j` of the result is the terminal
/// y-coordinate of the path.
pub fn phi_inv(q: &KimberlingPath) -> Result<BoundedSeq> {
    if let Some(v) = q.violations().into_iter().next() {
        return Err(Error::MalformedPath(v));
    }
    let v = q.vertices();
    let last = v.len() - 1;
    let mut u = Vec::with_capacity(q.terminal().x as usize);
    let mut origin = Point::ORIGIN;
    let mut next = 1;
    let mut lift = 0u32;
    loop {
        let p = v[next];
        let dx = p.x - origin.x;
        if next == last && dx == 1 {
            break;
        }
        if dx > 1 {
            // no vertex on the line x = 1 of the current sub-path
            u.push(1 + lift);
            origin.x += 1;
        } else {
            let dy = p.y - origin.y;
            u.push(dy + 2 + lift);
            lift += dy;
            origin = p;
            next += 1;
        }
    }
    let b = BoundedSeq::new_unchecked(u, q.terminal().y);
    debug_assert!(b.violations().is_empty(), "inverse produced {b:?}");
    Ok(b)
}
