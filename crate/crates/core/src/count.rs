use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact object count. Arithmetic is checked; overflow is reported, never wrapped.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Count(pub u64);

impl Count {
    pub const ZERO: Count = Count(0);
    pub const ONE: Count = Count(1);

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, other: Count) -> Result<Count> {
        self.0.checked_add(other.0).map(Count).ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, other: Count) -> Result<Count> {
        self.0.checked_mul(other.0).map(Count).ok_or(Error::Overflow)
    }

    pub fn incr(&mut self) -> Result<()> {
        *self = self.checked_add(Count::ONE)?;
        Ok(())
    }

    /// Sums counts, failing on overflow.
    pub fn try_sum<I: IntoIterator<Item = Count>>(iter: I) -> Result<Count> {
        iter.into_iter().try_fold(Count::ZERO, Count::checked_add)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(v)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> Result<Count> {
    if k > n {
        return Ok(Count::ZERO);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        // acc * (n - t) / (t + 1) stays integral at every step
        acc = acc.checked_mul(u128::from(n - t)).ok_or(Error::Overflow)? / u128::from(t + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(Count(acc as u64))
}
