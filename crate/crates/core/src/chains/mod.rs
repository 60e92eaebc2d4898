//! Bounded free chain complexes over the integers.
//!
//! A complex is stored by its lowest degree, the rank of each chain group and
//! one boundary matrix per degree. The boundary in degree `d` maps degree-`d`
//! chains to degree-`(d-1)` chains and acts on column vectors, so its shape is
//! `rank(d-1) x rank(d)`.
//!
//! Mapping cones use the block convention
//!
//! ```text
//! cone(f)_d = target_d (+) source_{d-1}
//! boundary  = [[ d_target, f ], [ 0, -d_source ]]
//! ```
//!
//! with target generators listed before source generators in every degree.

mod complex;
mod homology;
mod thom;

use alloc::string::String;

pub use complex::{ChainComplex, ChainMap};
pub use homology::{homology, reduced_homology, CycleClass, DegreeHomology, HomologyGroup, HomologySummary};
pub use thom::{
    check_normal_invariant, is_quasi_isomorphism, mapping_cone, quotient_complex,
    relative_homology, suspension, verify_desuspension,
    DegreeComparison, DesuspensionReport, DesuspensionVerdict, NormalInvariantCheck,
    NormalInvariantVerdict, Sectioning,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("{what} in degree {degree} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch {
        what: &'static str,
        degree: i64,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("boundary squares to a nonzero map from degree {degree}")]
    BoundarySquareNonzero { degree: i64 },
    #[error("map does not commute with the boundaries in degree {degree}")]
    NotAChainMap { degree: i64 },
    #[error("map is not a split injection in degree {degree}")]
    NotSplitInjective { degree: i64 },
    #[error("augmentation is not a chain map: boundaries into degree 0 have nonzero column sums")]
    NotAugmented,
    #[error("complexes do not match: {0}")]
    ComplexMismatch(String),
    #[error("INVALID_SECTIONING: {0}")]
    InvalidSectioning(String),
    #[error("NOT_ORIENTABLE_OR_DISCONNECTED: relative top homology in degree {degree} is {group}, not Z")]
    NotOrientableOrDisconnected { degree: i64, group: String },
    #[error("source of the map is not a homology {dimension}-sphere: top group is {group}")]
    NotASphere { dimension: i64, group: String },
}

impl ChainError {
    /// Stable upper-case name used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            ChainError::ShapeMismatch { .. } => "SHAPE_MISMATCH",
            ChainError::BoundarySquareNonzero { .. } => "BOUNDARY_SQUARE_NONZERO",
            ChainError::NotAChainMap { .. } => "NOT_A_CHAIN_MAP",
            ChainError::NotSplitInjective { .. } => "NOT_SPLIT_INJECTIVE",
            ChainError::NotAugmented => "NOT_AUGMENTED",
            ChainError::ComplexMismatch(_) => "COMPLEX_MISMATCH",
            ChainError::InvalidSectioning(_) => "INVALID_SECTIONING",
            ChainError::NotOrientableOrDisconnected { .. } => "NOT_ORIENTABLE_OR_DISCONNECTED",
            ChainError::NotASphere { .. } => "NOT_A_SPHERE",
        }
    }
}
