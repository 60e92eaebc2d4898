//! Numerical invariants of the unlinked-embedding tower.
//!
//! Parameters: ambient dimension `n`, a CW/handle dimension bound `k` for
//! `P`, and the tower stage `j`. Connectivities are the integers of the
//! "r-connected map" convention and are reported verbatim, including values
//! at or below -2.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graded::GradedRankTable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error("INVALID_PARAMS: {0}")]
    InvalidParams(String),
    #[error("STAGE_TOO_LOW: {what} needs j >= 2, got j = {j}")]
    StageTooLow { what: &'static str, j: i64 },
    #[error("INVALID_BETTI: {0}")]
    InvalidBetti(String),
}

impl TowerError {
    pub fn code(&self) -> &'static str {
        match self {
            TowerError::InvalidParams(_) => "INVALID_PARAMS",
            TowerError::StageTooLow { .. } => "STAGE_TOO_LOW",
            TowerError::InvalidBetti(_) => "INVALID_BETTI",
        }
    }
}

/// Validated `(n, k, j)` with `n >= 3`, `k >= 0`, `j >= 1` and codimension
/// `n - k >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerParams {
    n: i64,
    k: i64,
    j: i64,
}

impl TowerParams {
    pub fn new(n: i64, k: i64, j: i64) -> Result<Self, TowerError> {
        if n < 3 {
            return Err(TowerError::InvalidParams(format!("n = {n} must be at least 3")));
        }
        if k < 0 {
            return Err(TowerError::InvalidParams(format!("k = {k} must be nonnegative")));
        }
        if j < 1 {
            return Err(TowerError::InvalidParams(format!("j = {j} must be at least 1")));
        }
        if n - k < 3 {
            return Err(TowerError::InvalidParams(format!(
                "codimension n - k = {} must be at least 3",
                n - k
            )));
        }
        Ok(TowerParams { n, k, j })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn j(&self) -> i64 {
        self.j
    }
}

/// A connectivity value. Values `<= -2` are legitimate but say nothing
/// (every space, even the empty one, is (-2)-connected); they are flagged
/// rather than clamped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Connectivity(pub i64);

impl Connectivity {
    pub fn value(self) -> i64 {
        self.0
    }

    pub fn is_vacuous(self) -> bool {
        self.0 <= -2
    }

    pub fn note(self) -> Option<&'static str> {
        self.is_vacuous()
            .then_some("NOTE: connectivity <= -2 carries no information")
    }
}

/// Connectivity of `phi_j` from the unlinked embedding space to stage `j`:
/// `2 - n + (j + 1)(n - k - 2)`.
pub fn phi_connectivity(p: &TowerParams) -> Connectivity {
    Connectivity(2 - p.n + (p.j + 1) * (p.n - p.k - 2))
}

/// Connectivity of the stage map `j -> j - 1`: `2 - n + j(n - k - 2)`.
pub fn stage_map_connectivity(p: &TowerParams) -> Result<Connectivity, TowerError> {
    if p.j < 2 {
        return Err(TowerError::StageTooLow {
            what: "stage map connectivity",
            j: p.j,
        });
    }
    Ok(Connectivity(2 - p.n + p.j * (p.n - p.k - 2)))
}

/// Whether `(j + 1) k + 2 j <= j n`, the range in which a point of stage `j`
/// lifts to the unlinked embedding space.
pub fn convergence_check(p: &TowerParams) -> bool {
    (p.j + 1) * p.k + 2 * p.j <= p.j * p.n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodimVerdict {
    /// Homotopy codimension `>= n - cw_dim` is certified.
    Certified,
    NotCertified,
    /// `n - cw_dim < 3`: the criterion does not apply.
    NotApplicable,
}

impl CodimVerdict {
    pub fn code(self) -> &'static str {
        match self {
            CodimVerdict::Certified => "true",
            CodimVerdict::NotCertified => "false",
            CodimVerdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

/// Homotopy-codimension criterion: if `dP -> P` is 2-connected and `P` has
/// the type of a CW complex of dimension `<= cw_dim` with `n - cw_dim >= 3`,
/// then `P` has homotopy codimension `>= n - cw_dim`.
pub fn codim_check(boundary_map_connectivity: i64, cw_dim: i64, n: i64) -> CodimVerdict {
    if n - cw_dim < 3 {
        CodimVerdict::NotApplicable
    } else if boundary_map_connectivity >= 2 {
        CodimVerdict::Certified
    } else {
        CodimVerdict::NotCertified
    }
}

/// Degree `s = (n - 2)(j - 1) + 1` of the rational cohomology group of
/// `P^{x j}` detecting the stage-`j` obstruction.
pub fn obstruction_degree(n: i64, j: i64) -> Result<i64, TowerError> {
    if n < 3 {
        return Err(TowerError::InvalidParams(format!("n = {n} must be at least 3")));
    }
    if j < 2 {
        return Err(TowerError::StageTooLow {
            what: "obstruction degree",
            j,
        });
    }
    Ok((n - 2) * (j - 1) + 1)
}

/// Rational Betti numbers of a space of dimension at most `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    betti: Vec<BigUint>,
}

impl BettiVector {
    /// `entries` are `(degree, betti)` pairs; unlisted degrees are zero.
    /// Requires `b_0 >= 1` and no classes above degree `k`.
    pub fn new(entries: impl IntoIterator<Item = (u32, u64)>, k: u32) -> Result<Self, TowerError> {
        let mut betti = vec![BigUint::zero(); k as usize + 1];
        for (d, b) in entries {
            if d > k {
                if b != 0 {
                    return Err(TowerError::InvalidBetti(format!(
                        "b_{d} = {b} is nonzero above the dimension bound {k}"
                    )));
                }
                continue;
            }
            betti[d as usize] = BigUint::from(b);
        }
        if betti[0].is_zero() {
            return Err(TowerError::InvalidBetti("b_0 must be at least 1".into()));
        }
        Ok(BettiVector { betti })
    }

    /// `t` points: `b = {0: t}`, dimension bound 0.
    pub fn points(t: u64) -> Result<Self, TowerError> {
        Self::new([(0, t)], 0)
    }

    pub fn dimension_bound(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn get(&self, d: usize) -> BigUint {
        self.betti.get(d).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.betti
    }
}

/// Poincaré polynomial of `P^{x j}` over `Q`: the `j`-th power of the
/// Poincaré polynomial of `P`. Entry `d` is `dim H^d(P^{x j}; Q)`.
pub fn kunneth_power(b: &BettiVector, j: u32) -> Vec<BigUint> {
    let mut acc = vec![BigUint::one()];
    for _ in 0..j {
        let mut next = vec![BigUint::zero(); acc.len() + b.betti.len() - 1];
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.betti.iter().enumerate() {
                next[i + k] += x * y;
            }
        }
        acc = next;
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn stage_as_u32(j: i64) -> Result<u32, TowerError> {
    u32::try_from(j).map_err(|_| TowerError::InvalidParams(format!("j = {j} is too large")))
}

/// Rank of `H^s(P^{x j}; Q^{(j-1)!})` with `s` the obstruction degree.
pub fn obstruction_group_rank(b: &BettiVector, n: i64, j: i64) -> Result<BigUint, TowerError> {
    let s = obstruction_degree(n, j)?;
    let power = kunneth_power(b, stage_as_u32(j)?);
    let dim = usize::try_from(s)
        .ok()
        .and_then(|s| power.get(s).cloned())
        .unwrap_or_default();
    Ok(factorial((j - 1) as u64) * dim)
}

/// Unequivariant rank profile of a tower layer before homotopy orbits.
///
/// The coefficient spectrum is a wedge of `(j-1)!` spheres of dimension
/// `(j-1)(n-2)`, so the mapping spectrum out of `P^{x j}_+` has rank
/// `(j-1)! * dim H^{(j-1)(n-2) - q}(P^{x j}; Q)` in degree `q`. Taking
/// homotopy orbits can only lower rational ranks, so every entry is an
/// upper bound for the layer itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerProfile {
    pub table: GradedRankTable,
    /// `(j-1)(n-2)`: the highest degree that can be nonzero.
    pub top_degree: i64,
    /// `(j-1)!`: number of spheres in the coefficient wedge.
    pub sphere_count: BigUint,
}

impl LayerProfile {
    /// Every rank is an upper bound, never an exact value.
    pub const LABEL: &'static str = "UPPER_BOUND";
}

pub fn layer_profile(
    b: &BettiVector,
    n: i64,
    j: i64,
    q_min: i64,
    q_max: i64,
) -> Result<LayerProfile, TowerError> {
    if n < 3 {
        return Err(TowerError::InvalidParams(format!("n = {n} must be at least 3")));
    }
    if j < 2 {
        return Err(TowerError::StageTooLow {
            what: "layer profile",
            j,
        });
    }
    let power = kunneth_power(b, stage_as_u32(j)?);
    let top = (j - 1) * (n - 2);
    let count = factorial((j - 1) as u64);
    let mut table = GradedRankTable::new(q_min, q_max);
    for (d, dim) in power.iter().enumerate() {
        table.add(top - d as i64, &(&count * dim));
    }
    Ok(LayerProfile {
        table,
        top_degree: top,
        sphere_count: count,
    })
}

/// Connectivities of the comparison maps around the tower. Fields needing
/// a stage (`a`, `b_raw`, `b`, `e`) are `None` when `j < 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonConnectivities {
    /// Pontryagin–Thom map: `2n - 3k - 6`.
    pub pt: i64,
    /// Decompression map: `2n - 3k - 4`.
    pub decompression: i64,
    /// `2n - 3k - 5`.
    pub a: Option<i64>,
    /// Fiberwise stabilization before accounting for the base: `(j+1)(n-2) + 2 - n`.
    pub b_raw: Option<i64>,
    /// `b_raw - j k = j(n - k - 2)`.
    pub b: Option<i64>,
    /// Forgetting the diagonal condition: `(j-1)(n-2) - k - 1`.
    pub e: Option<i64>,
}

pub fn comparison_connectivities(p: &TowerParams) -> ComparisonConnectivities {
    let (n, k, j) = (p.n, p.k, p.j);
    let staged = j >= 2;
    ComparisonConnectivities {
        pt: 2 * n - 3 * k - 6,
        decompression: 2 * n - 3 * k - 4,
        a: staged.then_some(2 * n - 3 * k - 5),
        b_raw: staged.then_some((j + 1) * (n - 2) + 2 - n),
        b: staged.then_some(j * (n - k - 2)),
        e: staged.then_some((j - 1) * (n - 2) - k - 1),
    }
}
