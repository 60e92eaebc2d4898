use alloc::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

/// Nonnegative ranks indexed by degree over a closed validity range.
///
/// Only nonzero ranks are stored; degrees inside the range without an entry
/// have rank zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRankTable {
    q_min: i64,
    q_max: i64,
    entries: BTreeMap<i64, BigUint>,
}

impl GradedRankTable {
    pub fn new(q_min: i64, q_max: i64) -> Self {
        GradedRankTable {
            q_min,
            q_max,
            entries: BTreeMap::new(),
        }
    }

    pub fn q_min(&self) -> i64 {
        self.q_min
    }

    pub fn q_max(&self) -> i64 {
        self.q_max
    }

    pub fn contains(&self, q: i64) -> bool {
        self.q_min <= q && q <= self.q_max
    }

    /// Adds `r` to the rank in degree `q`; ignored outside the range.
    pub fn add(&mut self, q: i64, r: &BigUint) {
        if !self.contains(q) || r.is_zero() {
            return;
        }
        *self.entries.entry(q).or_default() += r;
    }

    pub fn set(&mut self, q: i64, r: BigUint) {
        if !self.contains(q) {
            return;
        }
        if r.is_zero() {
            self.entries.remove(&q);
        } else {
            self.entries.insert(q, r);
        }
    }

    /// Rank in degree `q`, zero outside the range.
    pub fn rank(&self, q: i64) -> BigUint {
        self.entries.get(&q).cloned().unwrap_or_default()
    }

    /// Nonzero entries in increasing degree.
    pub fn nonzero(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.entries.iter().map(|(&q, r)| (q, r))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same values restricted to a smaller range.
    pub fn restrict(&self, q_min: i64, q_max: i64) -> GradedRankTable {
        if q_min > q_max {
            return GradedRankTable::new(q_min, q_max);
        }
        GradedRankTable {
            q_min,
            q_max,
            entries: self
                .entries
                .range(q_min..=q_max)
                .map(|(&q, r)| (q, r.clone()))
                .collect(),
        }
    }
}
