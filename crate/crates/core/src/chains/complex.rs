use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::ChainError;
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    min_degree: i64,
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Builds a complex with chain groups of the given ranks in degrees
    /// `min_degree, min_degree + 1, ...`. Boundaries not listed are zero.
    ///
    /// Fails if a boundary is given outside the degree range, has the wrong
    /// shape, or if some composite of consecutive boundaries is nonzero.
    pub fn new(
        min_degree: i64,
        ranks: Vec<usize>,
        boundaries: impl IntoIterator<Item = (i64, IntMatrix)>,
    ) -> Result<Self, ChainError> {
        let rank_at = |d: i64| -> usize {
            d.checked_sub(min_degree)
                .and_then(|i| usize::try_from(i).ok())
                .and_then(|i| ranks.get(i).copied())
                .unwrap_or(0)
        };
        let mut given: BTreeMap<i64, IntMatrix> = BTreeMap::new();
        for (d, m) in boundaries {
            let expected = (rank_at(d - 1), rank_at(d));
            let in_range = d >= min_degree && ((d - min_degree) as u128) < ranks.len() as u128;
            if !in_range || m.shape() != expected {
                return Err(ChainError::ShapeMismatch {
                    what: "boundary",
                    degree: d,
                    expected,
                    found: m.shape(),
                });
            }
            given.insert(d, m);
        }
        let boundaries = (0..ranks.len())
            .map(|i| {
                let d = min_degree + i as i64;
                given
                    .remove(&d)
                    .unwrap_or_else(|| IntMatrix::zeros(rank_at(d - 1), ranks[i]))
            })
            .collect();
        let c = ChainComplex {
            min_degree,
            ranks,
            boundaries,
        };
        c.check_square_zero()?;
        Ok(c)
    }

    /// The complex with no generators.
    pub fn zero() -> Self {
        ChainComplex {
            min_degree: 0,
            ranks: Vec::new(),
            boundaries: Vec::new(),
        }
    }

    fn check_square_zero(&self) -> Result<(), ChainError> {
        for d in self.degrees() {
            if d == self.min_degree {
                continue;
            }
            let sq = self
                .boundary(d - 1)
                .mul(&self.boundary(d))
                .expect("consistent boundary shapes");
            if !sq.is_zero() {
                return Err(ChainError::BoundarySquareNonzero { degree: d });
            }
        }
        Ok(())
    }

    fn index(&self, d: i64) -> Option<usize> {
        let i = usize::try_from(d.checked_sub(self.min_degree)?).ok()?;
        (i < self.ranks.len()).then_some(i)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest stored degree; `min_degree - 1` for a complex with no degrees.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> RangeInclusive<i64> {
        self.min_degree..=self.max_degree()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, d: i64) -> usize {
        self.index(d).map_or(0, |i| self.ranks[i])
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Boundary out of degree `d`; the zero map of the right shape outside
    /// the stored range.
    pub fn boundary(&self, d: i64) -> IntMatrix {
        match self.index(d) {
            Some(i) => self.boundaries[i].clone(),
            None => IntMatrix::zeros(self.rank(d - 1), self.rank(d)),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|d| {
                let r = self.rank(d) as i64;
                if d.rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Drops zero-rank degrees at both ends of the range.
    pub fn trimmed(&self) -> ChainComplex {
        let lo = self.ranks.iter().position(|&r| r > 0);
        let hi = self.ranks.iter().rposition(|&r| r > 0);
        match (lo, hi) {
            (Some(lo), Some(hi)) => ChainComplex {
                min_degree: self.min_degree + lo as i64,
                ranks: self.ranks[lo..=hi].to_vec(),
                boundaries: self.boundaries[lo..=hi].to_vec(),
            },
            _ => ChainComplex::zero(),
        }
    }

    /// Equality up to zero-rank padding at the ends of the degree range.
    pub fn same_as(&self, other: &ChainComplex) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// Builds a complex over `lo..=hi` from rank and boundary callbacks,
    /// checking all invariants.
    pub(crate) fn from_fn(
        lo: i64,
        hi: i64,
        rank: impl Fn(i64) -> usize,
        boundary: impl Fn(i64) -> IntMatrix,
    ) -> Result<Self, ChainError> {
        if hi < lo {
            return Ok(ChainComplex::zero());
        }
        let ranks = (lo..=hi).map(&rank).collect();
        ChainComplex::new(lo, ranks, (lo..=hi).map(|d| (d, boundary(d))))
    }

    pub fn identity_map(&self) -> ChainMap {
        ChainMap {
            source: self.clone(),
            target: self.clone(),
            components: self.ranks.iter().map(|&r| IntMatrix::identity(r)).collect(),
        }
    }
}

/// A degree-preserving map of chain complexes commuting with the boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    /// One matrix per source degree, shape `target.rank(d) x source.rank(d)`.
    components: Vec<IntMatrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: impl IntoIterator<Item = (i64, IntMatrix)>,
    ) -> Result<Self, ChainError> {
        let mut given: BTreeMap<i64, IntMatrix> = BTreeMap::new();
        for (d, m) in components {
            let expected = (target.rank(d), source.rank(d));
            if source.index(d).is_none() || m.shape() != expected {
                return Err(ChainError::ShapeMismatch {
                    what: "map component",
                    degree: d,
                    expected,
                    found: m.shape(),
                });
            }
            given.insert(d, m);
        }
        let components = source
            .degrees()
            .map(|d| {
                given
                    .remove(&d)
                    .unwrap_or_else(|| IntMatrix::zeros(target.rank(d), source.rank(d)))
            })
            .collect();
        let f = ChainMap {
            source,
            target,
            components,
        };
        f.check_commutes()?;
        Ok(f)
    }

    pub fn zero(source: ChainComplex, target: ChainComplex) -> Self {
        let components = source
            .degrees()
            .map(|d| IntMatrix::zeros(target.rank(d), source.rank(d)))
            .collect();
        ChainMap {
            source,
            target,
            components,
        }
    }

    fn check_commutes(&self) -> Result<(), ChainError> {
        let lo = self.source.min_degree();
        let hi = self.source.max_degree() + 1;
        for d in lo..=hi {
            let left = self.target.boundary(d).mul(&self.component(d));
            let right = self.component(d - 1).mul(&self.source.boundary(d));
            if left != right {
                return Err(ChainError::NotAChainMap { degree: d });
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// Component in degree `d`; zero outside the source range.
    pub fn component(&self, d: i64) -> IntMatrix {
        match self.source.index(d) {
            Some(i) => self.components[i].clone(),
            None => IntMatrix::zeros(self.target.rank(d), self.source.rank(d)),
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap, ChainError> {
        if !first.target.same_as(&self.source) {
            return Err(ChainError::ComplexMismatch(format!(
                "cannot compose: target ranks {:?} do not match source ranks {:?}",
                first.target.trimmed().ranks(),
                self.source.trimmed().ranks()
            )));
        }
        let components = first
            .source
            .degrees()
            .map(|d| {
                let m = self
                    .component(d)
                    .mul(&first.component(d))
                    .expect("ranks agree degreewise");
                (d, m)
            })
            .collect::<Vec<_>>();
        ChainMap::new(first.source.clone(), self.target.clone(), components)
    }
}
