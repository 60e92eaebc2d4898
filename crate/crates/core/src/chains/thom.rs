//! Mapping cones, pairs and the generalized Thom space of a sectioning.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::homology::{homology, DegreeHomology, HomologyGroup, HomologySummary};
use super::{ChainComplex, ChainError, ChainMap};
use crate::matrix::IntMatrix;
use crate::snf::smith_normal_form;

/// Algebraic mapping cone of `f: S -> T`.
///
/// `cone_d = T_d (+) S_{d-1}` with boundary `[[d_T, f], [0, -d_S]]`; target
/// generators come first in each degree. For a map of unreduced cellular
/// chains its homology is the reduced homology of the topological cofiber.
pub fn mapping_cone(f: &ChainMap) -> ChainComplex {
    let s = f.source();
    let t = f.target();
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    if !t.ranks().is_empty() {
        lo = lo.min(t.min_degree());
        hi = hi.max(t.max_degree());
    }
    if !s.ranks().is_empty() {
        lo = lo.min(s.min_degree() + 1);
        hi = hi.max(s.max_degree() + 1);
    }
    if lo > hi {
        return ChainComplex::zero();
    }
    let rank = |d: i64| t.rank(d) + s.rank(d - 1);
    let boundary = |d: i64| {
        let (tr, tc) = (t.rank(d - 1), t.rank(d));
        let mut m = IntMatrix::zeros(tr + s.rank(d - 2), tc + s.rank(d - 1));
        m.set_block(0, 0, &t.boundary(d));
        m.set_block(0, tc, &f.component(d - 1));
        m.set_block(tr, tc, &s.boundary(d - 1).neg());
        m
    };
    ChainComplex::from_fn(lo, hi, rank, boundary).expect("cone of a chain map is a complex")
}

/// Quotient `C / sub(A)` for a degreewise split injection `sub: A -> C`.
pub fn quotient_complex(sub: &ChainMap) -> Result<ChainComplex, ChainError> {
    let c = sub.target();
    let mut proj = Vec::new();
    let mut lift = Vec::new();
    for d in c.degrees() {
        let f = sub.component(d);
        let a = f.cols();
        let snf = smith_normal_form(&f);
        if snf.rank() != a || snf.invariant_factors().iter().any(|x| !x.is_one()) {
            return Err(ChainError::NotSplitInjective { degree: d });
        }
        // In the coordinates given by u, the image of sub is exactly the
        // first `a` coordinates.
        let n = c.rank(d);
        proj.push(snf.u.submatrix(a, n, 0, n));
        lift.push(snf.u_inv.submatrix(0, n, a, n));
    }
    // Every source degree must land inside the target's range.
    for d in sub.source().degrees() {
        if sub.source().rank(d) > 0 && c.rank(d) == 0 {
            return Err(ChainError::NotSplitInjective { degree: d });
        }
    }
    let lo = c.min_degree();
    let q_rank = |d: i64| proj[(d - lo) as usize].rows();
    let q_boundary = |d: i64| {
        if d == lo {
            return IntMatrix::zeros(0, q_rank(d));
        }
        let i = (d - lo) as usize;
        proj[i - 1]
            .mul(&c.boundary(d))
            .and_then(|m| m.mul(&lift[i]))
            .expect("projection and lift shapes")
    };
    ChainComplex::from_fn(lo, c.max_degree(), q_rank, q_boundary)
}

/// Homology of the pair `(c, sub(A))`, i.e. of the quotient complex.
pub fn relative_homology(c: &ChainComplex, sub: &ChainMap) -> Result<HomologySummary, ChainError> {
    if !sub.target().same_as(c) {
        return Err(ChainError::ComplexMismatch(
            "subcomplex inclusion does not land in the given complex".to_string(),
        ));
    }
    Ok(homology(&quotient_complex(sub)?))
}

/// Reduced suspension.
///
/// A fresh basepoint generator sits in degree 0 and every other generator
/// moves up one degree with negated boundary. The first degree-0 generator
/// of `c` (when it is a cycle) plays the basepoint and is collapsed, so
/// `H_{k+1}(suspension(c)) = H_k(c, basepoint)`, the reduced homology of `c`.
pub fn suspension(c: &ChainComplex) -> ChainComplex {
    let collapse = c.rank(0) > 0 && c.boundary(0).column(0).iter().all(Zero::is_zero);
    let lo = (c.min_degree() + 1).min(0);
    let hi = (c.max_degree() + 1).max(0);
    let rank = |e: i64| {
        let mut r = c.rank(e - 1);
        if e == 1 && collapse {
            r -= 1;
        }
        if e == 0 {
            r += 1;
        }
        r
    };
    let boundary = |e: i64| {
        let m = c.boundary(e - 1).neg();
        let (rows, cols) = (rank(e - 1), rank(e));
        // Offsets: which leading row/column of `m` is dropped, and whether a
        // zero row/column is prepended for the fresh basepoint.
        let drop_col = usize::from(e == 1 && collapse);
        let drop_row = usize::from(e == 2 && collapse);
        let add_col = usize::from(e == 0);
        let add_row = usize::from(e == 1);
        let mut out = IntMatrix::zeros(rows, cols);
        let core = m.submatrix(drop_row, m.rows(), drop_col, m.cols());
        out.set_block(add_row, add_col, &core);
        out
    };
    ChainComplex::from_fn(lo, hi, rank, boundary).expect("suspension of a complex is a complex")
}

/// `true` iff `f` induces isomorphisms on all homology groups.
pub fn is_quasi_isomorphism(f: &ChainMap) -> bool {
    homology(&mapping_cone(f)).is_acyclic()
}

/// Chain-level sectioning data: the boundary inclusion `dP -> P` and a
/// section `K -> dP`.
#[derive(Clone, Debug)]
pub struct Sectioning {
    boundary_inclusion: ChainMap,
    section: ChainMap,
}

impl Sectioning {
    /// Checks the structural conditions: the section lands in the boundary
    /// and the boundary inclusion is a degreewise split injection.
    pub fn new(boundary_inclusion: ChainMap, section: ChainMap) -> Result<Self, ChainError> {
        if !section.target().same_as(boundary_inclusion.source()) {
            return Err(ChainError::InvalidSectioning(
                "section does not land in the boundary complex".to_string(),
            ));
        }
        if let Err(e) = quotient_complex(&boundary_inclusion) {
            return Err(ChainError::InvalidSectioning(format!("boundary inclusion: {e}")));
        }
        Ok(Sectioning {
            boundary_inclusion,
            section,
        })
    }

    pub fn total(&self) -> &ChainComplex {
        self.boundary_inclusion.target()
    }

    pub fn boundary_inclusion(&self) -> &ChainMap {
        &self.boundary_inclusion
    }

    pub fn section(&self) -> &ChainMap {
        &self.section
    }

    /// Chain model of the generalized Thom space: the cone of the section.
    pub fn thom_space(&self) -> ChainComplex {
        mapping_cone(&self.section)
    }

    fn check_total(&self, p: &ChainComplex) -> Result<(), ChainError> {
        if p.same_as(self.total()) {
            Ok(())
        } else {
            Err(ChainError::InvalidSectioning(
                "boundary inclusion does not land in the given total complex".to_string(),
            ))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    /// Degree `k` of the relative group; the Thom-space side is in degree `k - 1`.
    pub degree: i64,
    pub thom: HomologyGroup,
    pub relative: HomologyGroup,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DesuspensionVerdict {
    Pass,
    Mismatch,
    /// Every degree matched, but `K -> dP -> P` is not a homology isomorphism.
    InvalidSectioning,
}

impl DesuspensionVerdict {
    pub fn code(self) -> &'static str {
        match self {
            DesuspensionVerdict::Pass => "PASS",
            DesuspensionVerdict::Mismatch => "MISMATCH",
            DesuspensionVerdict::InvalidSectioning => "INVALID_SECTIONING",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesuspensionReport {
    pub rows: Vec<DegreeComparison>,
    pub composite_quasi_isomorphism: bool,
    pub verdict: DesuspensionVerdict,
}

impl DesuspensionReport {
    pub fn passed(&self) -> bool {
        self.verdict == DesuspensionVerdict::Pass
    }
}

/// Compares `H_{k-1}` of the Thom space `cone(section)` with `H_k(P, dP)` in
/// every degree.
///
/// Structural failures (section not landing in the boundary, boundary not
/// split-injective into `p`) are returned as `InvalidSectioning` errors. A
/// degree mismatch yields `Mismatch`; a clean comparison whose composite
/// `K -> P` is not a homology isomorphism yields `InvalidSectioning`.
pub fn verify_desuspension(
    p: &ChainComplex,
    boundary_inclusion: &ChainMap,
    section: &ChainMap,
) -> Result<DesuspensionReport, ChainError> {
    let data = Sectioning::new(boundary_inclusion.clone(), section.clone())?;
    data.check_total(p)?;
    let thom = homology(&data.thom_space());
    let rel = relative_homology(p, &data.boundary_inclusion)?;
    let lo = (thom.min_degree() + 1).min(rel.min_degree());
    let hi = (thom.max_degree() + 1).max(rel.max_degree());
    let rows: Vec<DegreeComparison> = (lo..=hi)
        .map(|k| {
            let thom_group = thom.group(k - 1);
            let rel_group = rel.group(k);
            DegreeComparison {
                degree: k,
                matches: thom_group == rel_group,
                thom: thom_group,
                relative: rel_group,
            }
        })
        .collect();
    let composite = data.boundary_inclusion.compose(&data.section)?;
    let quasi_iso = is_quasi_isomorphism(&composite);
    let verdict = if rows.iter().any(|r| !r.matches) {
        DesuspensionVerdict::Mismatch
    } else if !quasi_iso {
        DesuspensionVerdict::InvalidSectioning
    } else {
        DesuspensionVerdict::Pass
    };
    Ok(DesuspensionReport {
        rows,
        composite_quasi_isomorphism: quasi_iso,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalInvariantVerdict {
    IsNormalInvariant,
    Not,
}

impl NormalInvariantVerdict {
    pub fn code(self) -> &'static str {
        match self {
            NormalInvariantVerdict::IsNormalInvariant => "IS_NORMAL_INVARIANT",
            NormalInvariantVerdict::Not => "NOT",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalInvariantCheck {
    /// Image of the sphere's fundamental class in `H_{n-1}` of the Thom
    /// space, as a multiple of its generator. Generators on both sides are
    /// oriented so that their first nonzero chain coefficient is positive.
    pub degree: BigInt,
    pub verdict: NormalInvariantVerdict,
}

/// Generator of an infinite cyclic `H_d`, sign-normalized so its first
/// nonzero coefficient is positive.
fn oriented_generator(h: &DegreeHomology) -> Vec<BigInt> {
    let mut g = h.free_generator(0).expect("group is infinite cyclic");
    if g.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        for x in &mut g {
            *x = -&*x;
        }
    }
    g
}

/// Decides whether `alpha: S^{n-1} -> P^xi` sends the fundamental class of
/// the sphere to a generator of `H_{n-1}(P^xi) = H_n(P, dP) = Z`.
///
/// Orientability and connectedness are detected by computing `H_n(P, dP)`.
/// The target of `alpha` must be the Thom-space model `cone(section)`.
pub fn check_normal_invariant(
    alpha: &ChainMap,
    p: &ChainComplex,
    boundary_inclusion: &ChainMap,
    section: &ChainMap,
    n: i64,
) -> Result<NormalInvariantCheck, ChainError> {
    let data = Sectioning::new(boundary_inclusion.clone(), section.clone())?;
    data.check_total(p)?;
    let rel = relative_homology(p, &data.boundary_inclusion)?;
    let top = rel.group(n);
    if !top.is_infinite_cyclic() {
        return Err(ChainError::NotOrientableOrDisconnected {
            degree: n,
            group: top.to_string(),
        });
    }
    let thom = data.thom_space();
    if !alpha.target().same_as(&thom) {
        return Err(ChainError::ComplexMismatch(
            "target of alpha is not the Thom-space model cone(section)".to_string(),
        ));
    }
    // Work with the trimmed complexes so chain vectors index consistently.
    let thom = thom.trimmed();
    let sphere = alpha.source();
    let sphere_h = DegreeHomology::new(sphere, n - 1);
    if !sphere_h.group().is_infinite_cyclic() {
        return Err(ChainError::NotASphere {
            dimension: n - 1,
            group: sphere_h.group().to_string(),
        });
    }
    let thom_h = DegreeHomology::new(&thom, n - 1);
    if !thom_h.group().is_infinite_cyclic() {
        return Err(ChainError::InvalidSectioning(format!(
            "Thom space has H_{} = {}, expected Z",
            n - 1,
            thom_h.group()
        )));
    }
    let fundamental = oriented_generator(&sphere_h);
    let image = alpha
        .component(n - 1)
        .mul_vec(&fundamental)
        .expect("component shape matches sphere rank");
    let image_class = thom_h.class_of(&image).expect("chain maps send cycles to cycles");
    let gen_class = thom_h
        .class_of(&oriented_generator(&thom_h))
        .expect("generator is a cycle");
    // gen_class.free[0] is +-1.
    let degree = &image_class.free[0] * &gen_class.free[0];
    let verdict = if degree.abs().is_one() {
        NormalInvariantVerdict::IsNormalInvariant
    } else {
        NormalInvariantVerdict::Not
    };
    Ok(NormalInvariantCheck { degree, verdict })
}
