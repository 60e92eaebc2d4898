//! Rational homotopy ranks of finite wedges of spheres.
//!
//! By Hilton–Milnor, `Omega(S^{d_1} v ... v S^{d_g})` splits as a weak
//! product of loop spaces of spheres, one per basic product. Indexing the
//! basic products by Lyndon words in the summands, a word using summand `i`
//! exactly `m_i` times contributes the sphere of dimension
//! `1 + sum_i m_i (d_i - 1)`. Rationally each such sphere is described by
//! Serre's computation, so only the number of Lyndon words per sphere
//! dimension matters.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::graded::GradedRankTable;
use crate::lie::lyndon_count_by_content;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HiltonError {
    #[error("sphere dimension {0} is below 2")]
    DimensionTooSmall(u32),
}

/// A wedge of simply connected spheres, given by the multiset of dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereWedge {
    dims: Vec<u32>,
}

impl SphereWedge {
    pub fn new(dims: Vec<u32>) -> Result<Self, HiltonError> {
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(HiltonError::DimensionTooSmall(d));
        }
        Ok(SphereWedge { dims })
    }

    /// `count` copies of `S^dim`.
    pub fn copies(dim: u32, count: usize) -> Result<Self, HiltonError> {
        Self::new(alloc::vec![dim; count])
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Distinct dimensions with their multiplicities, ascending.
    fn grouped(&self) -> Vec<(u32, u64)> {
        let mut groups: BTreeMap<u32, u64> = BTreeMap::new();
        for &d in &self.dims {
            *groups.entry(d).or_default() += 1;
        }
        groups.into_iter().collect()
    }
}

/// Rank of `pi_q(S^m) (x) Q`: one in degree `m`, and in degree `2m - 1`
/// when `m` is even; zero otherwise.
pub fn serre_rank(q: i64, m: u32) -> u8 {
    let m = i64::from(m);
    u8::from(q == m || (m % 2 == 0 && q == 2 * m - 1))
}

/// Number of basic products of each sphere dimension up to `max_dim`.
///
/// Letters of equal dimension are grouped, so the enumeration runs over
/// how often each dimension class is used rather than over individual
/// words. Since every summand has dimension at least 2, a product of
/// weight `w` has dimension at least `1 + w`, which bounds the search.
pub fn basic_product_spheres(w: &SphereWedge, max_dim: i64) -> BTreeMap<i64, BigUint> {
    let groups = w.grouped();
    let sizes: Vec<u64> = groups.iter().map(|&(_, g)| g).collect();
    let steps: Vec<i64> = groups.iter().map(|&(d, _)| i64::from(d) - 1).collect();
    let mut out: BTreeMap<i64, BigUint> = BTreeMap::new();
    if groups.is_empty() || max_dim < 2 {
        return out;
    }
    let mut content = alloc::vec![0u64; groups.len()];
    enumerate_contents(&steps, max_dim - 1, 0, &mut content, &mut |c, used| {
        if used == 0 {
            return;
        }
        let n = lyndon_count_by_content(&sizes, c);
        if !n.is_zero() {
            *out.entry(1 + used).or_default() += n;
        }
    });
    out
}

/// Visits every content vector with `sum content[c] * steps[c] <= budget`,
/// passing the vector and the weighted sum.
fn enumerate_contents(
    steps: &[i64],
    budget: i64,
    pos: usize,
    content: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64], i64),
) {
    if pos == steps.len() {
        let used = content.iter().zip(steps).map(|(&c, &s)| c as i64 * s).sum();
        visit(content, used);
        return;
    }
    let mut k = 0u64;
    loop {
        content[pos] = k;
        let used: i64 = content[..=pos].iter().zip(steps).map(|(&c, &s)| c as i64 * s).sum();
        if used > budget {
            break;
        }
        enumerate_contents(steps, budget, pos + 1, content, visit);
        k += 1;
    }
    content[pos] = 0;
}

/// Ranks of `pi_q(w) (x) Q` for `1 <= q <= q_max`.
///
/// A sphere `S^D` has nonzero rational homotopy only in degrees `D` and
/// `2D - 1 >= D`, so basic products with `D > q_max` cannot contribute and
/// the enumeration stops at dimension `q_max`.
pub fn wedge_pi_ranks(w: &SphereWedge, q_max: i64) -> GradedRankTable {
    let mut table = GradedRankTable::new(1, q_max);
    for (dim, count) in basic_product_spheres(w, q_max) {
        table.add(dim, &count);
        if dim % 2 == 0 {
            table.add(2 * dim - 1, &count);
        }
    }
    table
}

/// Ranks of `pi_q(Omega prod_t w) (x) Q` for `0 <= q <= q_max`: looping
/// shifts degrees down by one and a product of `t` copies multiplies ranks.
pub fn looped_product_ranks(w: &SphereWedge, t: u64, q_max: i64) -> GradedRankTable {
    let base = wedge_pi_ranks(w, q_max + 1);
    let mut table = GradedRankTable::new(0, q_max);
    let t = BigUint::from(t);
    for (q, r) in base.nonzero() {
        table.add(q - 1, &(r * &t));
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(t: &GradedRankTable) -> Vec<(i64, u64)> {
        t.nonzero()
            .map(|(q, r)| (q, u64::try_from(r).unwrap()))
            .collect()
    }

    #[test]
    fn serre_examples() {
        assert_eq!(serre_rank(3, 3), 1);
        assert_eq!(serre_rank(7, 4), 1);
        assert_eq!(serre_rank(5, 3), 0);
        assert_eq!(serre_rank(4, 4), 1);
        assert_eq!(serre_rank(6, 4), 0);
    }

    #[test]
    fn two_three_spheres() {
        let w = SphereWedge::copies(3, 2).unwrap();
        assert_eq!(ranks(&wedge_pi_ranks(&w, 9)), [(3, 2), (5, 1), (7, 2), (9, 3)]);
    }

    #[test]
    fn two_two_spheres() {
        let w = SphereWedge::copies(2, 2).unwrap();
        assert_eq!(ranks(&wedge_pi_ranks(&w, 3)), [(2, 2), (3, 3)]);
    }

    #[test]
    fn single_sphere_degenerates_to_serre() {
        for m in 2..8u32 {
            let t = wedge_pi_ranks(&SphereWedge::new(alloc::vec![m]).unwrap(), 20);
            for q in 1..=20 {
                assert_eq!(t.rank(q), BigUint::from(serre_rank(q, m)), "m={m} q={q}");
            }
        }
    }

    #[test]
    fn below_all_dims_is_empty() {
        let w = SphereWedge::copies(5, 3).unwrap();
        assert!(wedge_pi_ranks(&w, 4).is_empty());
    }

    #[test]
    fn looped_examples() {
        let w = SphereWedge::copies(3, 2).unwrap();
        let l = looped_product_ranks(&w, 2, 8);
        assert_eq!(l.rank(4), BigUint::from(2u32));
        assert_eq!(l.rank(2), BigUint::from(4u32));
        let single = SphereWedge::new(alloc::vec![5]).unwrap();
        assert_eq!(looped_product_ranks(&single, 1, 10).rank(4), BigUint::from(1u32));
    }

    #[test]
    fn rejects_low_dimensions() {
        assert_eq!(SphereWedge::new(alloc::vec![3, 1]), Err(HiltonError::DimensionTooSmall(1)));
    }
}
