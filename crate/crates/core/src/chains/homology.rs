use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ChainComplex, ChainError};
use crate::matrix::IntMatrix;
use crate::snf::{smith_normal_form, SmithForm};

/// A finitely generated abelian group `Z^betti (+) Z/t_1 (+) ... (+) Z/t_r`
/// with `1 < t_1 | t_2 | ... | t_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.betti == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let s = if first { "" } else { " + " };
            first = false;
            f.write_str(s)
        };
        match self.betti {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Z")?;
            }
            b => {
                sep(f)?;
                write!(f, "Z^{b}")?;
            }
        }
        for t in &self.torsion {
            sep(f)?;
            write!(f, "Z/{t}")?;
        }
        Ok(())
    }
}

/// Homology groups of a complex, one per degree of its range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    min_degree: i64,
    groups: Vec<HomologyGroup>,
}

impl HomologySummary {
    pub fn from_groups(min_degree: i64, groups: Vec<HomologyGroup>) -> Self {
        HomologySummary { min_degree, groups }
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.groups.len() as i64 - 1
    }

    /// The group in degree `d`; zero outside the computed range.
    pub fn group(&self, d: i64) -> HomologyGroup {
        d.checked_sub(self.min_degree)
            .and_then(|i| usize::try_from(i).ok())
            .and_then(|i| self.groups.get(i).cloned())
            .unwrap_or_default()
    }

    pub fn betti(&self, d: i64) -> usize {
        self.group(d).betti
    }

    pub fn torsion(&self, d: i64) -> Vec<BigInt> {
        self.group(d).torsion
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &HomologyGroup)> {
        self.groups
            .iter()
            .enumerate()
            .map(move |(i, g)| (self.min_degree + i as i64, g))
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, g)| if d.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }
}

/// Integral homology by Smith normal form of each boundary matrix.
///
/// In degree `d` the free rank is `rank C_d - rank d_d - rank d_{d+1}` and
/// the torsion is the invariant factors of `d_{d+1}` greater than one.
pub fn homology(c: &ChainComplex) -> HomologySummary {
    let forms: Vec<SmithForm> = (c.min_degree()..=c.max_degree() + 1)
        .map(|d| smith_normal_form(&c.boundary(d)))
        .collect();
    let groups = c
        .degrees()
        .enumerate()
        .map(|(i, d)| {
            let out_rank = forms[i].rank();
            let into = &forms[i + 1];
            HomologyGroup {
                betti: c.rank(d) - out_rank - into.rank(),
                torsion: into.torsion(),
            }
        })
        .collect();
    HomologySummary {
        min_degree: c.min_degree(),
        groups,
    }
}

/// Reduced homology via the augmentation sending every degree-0 generator
/// to 1. The summary covers degree -1, which is `Z` only for the empty
/// complex.
pub fn reduced_homology(c: &ChainComplex) -> Result<HomologySummary, ChainError> {
    if c.degrees().any(|d| d < 0 && c.rank(d) > 0) {
        return Err(ChainError::NotAugmented);
    }
    let eps = IntMatrix::from_rows(c.rank(0), &[alloc::vec![BigInt::one(); c.rank(0)]])
        .expect("row of correct length");
    if !eps.mul(&c.boundary(1)).expect("shapes agree").is_zero() {
        return Err(ChainError::NotAugmented);
    }
    let hi = c.max_degree().max(0);
    let augmented = ChainComplex::from_fn(
        -1,
        hi,
        |d| if d == -1 { 1 } else { c.rank(d) },
        |d| if d == 0 { eps.clone() } else if d == -1 { IntMatrix::zeros(0, 1) } else { c.boundary(d) },
    )?;
    Ok(homology(&augmented))
}

/// Coordinates of a cycle's homology class: free coordinates, then the
/// residue modulo each torsion factor (in the order of `HomologyGroup::torsion`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClass {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl CycleClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }
}

/// A presentation of `H_d` that can name the class of any cycle and produce
/// cycles representing the free generators.
#[derive(Clone, Debug)]
pub struct DegreeHomology {
    group: HomologyGroup,
    /// Rows send a degree-`d` chain to its coordinates in the kernel basis.
    kernel_coords: IntMatrix,
    /// Columns form a basis of the cycles.
    kernel_basis: IntMatrix,
    /// Number of leading coordinates that must vanish for a cycle.
    out_rank: usize,
    to_kernel: IntMatrix,
    quotient: SmithForm,
}

impl DegreeHomology {
    pub fn new(c: &ChainComplex, d: i64) -> Self {
        let n = c.rank(d);
        let out = smith_normal_form(&c.boundary(d));
        let r = out.rank();
        let kernel_coords = out.v_inv.submatrix(r, n, 0, n);
        let kernel_basis = out.v.submatrix(0, n, r, n);
        let boundaries = kernel_coords
            .mul(&c.boundary(d + 1))
            .expect("boundary lands in degree d");
        let quotient = smith_normal_form(&boundaries);
        let group = HomologyGroup {
            betti: (n - r) - quotient.rank(),
            torsion: quotient.torsion(),
        };
        DegreeHomology {
            group,
            kernel_coords,
            kernel_basis,
            out_rank: r,
            to_kernel: out.v_inv,
            quotient,
        }
    }

    pub fn group(&self) -> &HomologyGroup {
        &self.group
    }

    /// Class of `chain`, or `None` if it has the wrong length or is not a cycle.
    pub fn class_of(&self, chain: &[BigInt]) -> Option<CycleClass> {
        let y = self.to_kernel.mul_vec(chain)?;
        if y[..self.out_rank].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let c = self.kernel_coords.mul_vec(chain)?;
        let y2 = self.quotient.u.mul_vec(&c).expect("kernel coordinates");
        let r2 = self.quotient.rank();
        let torsion = (0..r2)
            .filter(|&i| !self.quotient.d[(i, i)].is_one())
            .map(|i| y2[i].mod_floor(&self.quotient.d[(i, i)]))
            .collect();
        Some(CycleClass {
            free: y2[r2..].to_vec(),
            torsion,
        })
    }

    /// A cycle representing the `i`-th free generator.
    pub fn free_generator(&self, i: usize) -> Option<Vec<BigInt>> {
        if i >= self.group.betti {
            return None;
        }
        let col = self.quotient.u_inv.column(self.quotient.rank() + i);
        self.kernel_basis.mul_vec(&col)
    }
}
