//! Embeddings of a disjoint union of `t` disks `D^n x T` in `D^n`.
//!
//! The relevant wedge is `S^{n-1} ^ T_+`, a wedge of `t` copies of
//! `S^{n-1}`. Its rational homotopy `r_q` comes from [`crate::hilton`].

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::hilton::{wedge_pi_ranks, SphereWedge};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiskLinksError {
    #[error("PARITY_UNSUPPORTED: n = {0} is odd; only even n splits into short exact sequences")]
    ParityUnsupported(u32),
    #[error("OUT_OF_RANGE: {field} = {value} must be at least {min}")]
    OutOfRange {
        field: &'static str,
        value: u32,
        min: u32,
    },
}

impl DiskLinksError {
    pub fn code(&self) -> &'static str {
        match self {
            DiskLinksError::ParityUnsupported(_) => "PARITY_UNSUPPORTED",
            DiskLinksError::OutOfRange { .. } => "OUT_OF_RANGE",
        }
    }
}

/// Number of path components of the embedding space: `2^t`.
pub fn pi0_cardinality(t: u32) -> BigUint {
    BigUint::one() << t
}

/// The elementary abelian group `(Z/2)^rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementaryAbelian2 {
    pub rank: u32,
}

impl ElementaryAbelian2 {
    pub fn order(&self) -> BigUint {
        BigUint::one() << self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0
    }
}

impl fmt::Display for ElementaryAbelian2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            0 => f.write_str("0"),
            1 => f.write_str("Z/2"),
            r => write!(f, "(Z/2)^{r}"),
        }
    }
}

/// Fundamental group of each component: `t` copies of `Z/2`.
pub fn pi1_description(t: u32) -> ElementaryAbelian2 {
    ElementaryAbelian2 { rank: t }
}

/// Rank data from the split exact sequence
///
/// ```text
/// 0 -> pi_{2m+1}(E) -> (+)_T pi_{2m+1}(W) -> pi_{2m+n-1}(W) -> pi_{2m}(E) -> 0
/// ```
///
/// of rational homotopy groups, `W` the wedge of `t` copies of `S^{n-1}`.
/// The middle map is unknown, so only bounds and the alternating-sum
/// relation are determined in general; a zero middle term pins the
/// neighbouring rank exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesRankReport {
    pub n: u32,
    pub t: u32,
    pub m: u32,
    /// `t * r_{2m+1}`.
    pub rank_b: BigUint,
    /// `r_{2m+n-1}`.
    pub rank_c: BigUint,
    /// Bound for `rank pi_{2m+1}(E) (x) Q`.
    pub upper_odd: BigUint,
    /// Bound for `rank pi_{2m}(E) (x) Q`.
    pub upper_even: BigUint,
    /// `rank_c - rank_b = rank pi_{2m}(E) - rank pi_{2m+1}(E)`.
    pub euler_relation: BigInt,
    pub exact_odd: Option<BigUint>,
    pub exact_even: Option<BigUint>,
}

impl SesRankReport {
    /// Whether at least one of the two ranks is determined exactly.
    pub fn is_exact(&self) -> bool {
        self.exact_odd.is_some() || self.exact_even.is_some()
    }
}

pub fn ses_rank_report(n: u32, t: u32, m: u32) -> Result<SesRankReport, DiskLinksError> {
    if n < 3 {
        return Err(DiskLinksError::OutOfRange {
            field: "n",
            value: n,
            min: 3,
        });
    }
    if n % 2 == 1 {
        return Err(DiskLinksError::ParityUnsupported(n));
    }
    if t == 0 {
        return Err(DiskLinksError::OutOfRange {
            field: "t",
            value: t,
            min: 1,
        });
    }
    if m == 0 {
        return Err(DiskLinksError::OutOfRange {
            field: "m",
            value: m,
            min: 1,
        });
    }
    let wedge = SphereWedge::copies(n - 1, t as usize).expect("n - 1 >= 3");
    let odd = 2 * i64::from(m) + 1;
    let top = 2 * i64::from(m) + i64::from(n) - 1;
    let table = wedge_pi_ranks(&wedge, top);
    let rank_b = BigUint::from(t) * table.rank(odd);
    let rank_c = table.rank(top);
    let euler_relation = BigInt::from(rank_c.clone()) - BigInt::from(rank_b.clone());
    // rank_c = 0: pi_{2m}(E) is a quotient of 0 and pi_{2m+1}(E) is all of B.
    // rank_b = 0: pi_{2m+1}(E) injects into 0 and pi_{2m}(E) is all of C.
    let (exact_odd, exact_even) = if rank_c.is_zero() {
        (Some(rank_b.clone()), Some(BigUint::zero()))
    } else if rank_b.is_zero() {
        (Some(BigUint::zero()), Some(rank_c.clone()))
    } else {
        (None, None)
    };
    Ok(SesRankReport {
        n,
        t,
        m,
        upper_odd: rank_b.clone(),
        upper_even: rank_c.clone(),
        rank_b,
        rank_c,
        euler_relation,
        exact_odd,
        exact_even,
    })
}
