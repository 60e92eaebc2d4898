//! Small cellular chain models used as fixtures and examples.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::chains::{mapping_cone, ChainComplex, ChainMap};
use crate::matrix::IntMatrix;

pub fn point() -> ChainComplex {
    ChainComplex::new(0, vec![1], []).expect("point")
}

/// `S^m` with one 0-cell and one m-cell; `S^0` is two points.
pub fn sphere(m: u32) -> ChainComplex {
    let mut ranks = vec![0usize; m as usize + 1];
    ranks[0] += 1;
    ranks[m as usize] += 1;
    ChainComplex::new(0, ranks, []).expect("sphere")
}

/// `RP^2` with one cell in each dimension and `d_2 = 2`.
pub fn projective_plane() -> ChainComplex {
    ChainComplex::new(0, vec![1, 1, 1], [(2, IntMatrix::from_i64(&[&[2]]))]).expect("RP^2")
}

/// Disk `D^n` (`n >= 2`) with cells `v, sigma, tau` in degrees `0, n-1, n`,
/// `d tau = sigma`, and its boundary sphere.
#[derive(Clone, Debug)]
pub struct DiskPair {
    pub disk: ChainComplex,
    pub boundary: ChainComplex,
    pub inclusion: ChainMap,
}

pub fn disk_pair(n: u32) -> DiskPair {
    assert!(n >= 2, "disk model needs n >= 2");
    let top = n as i64;
    let mut ranks = vec![0usize; n as usize + 1];
    ranks[0] = 1;
    ranks[n as usize - 1] = 1;
    ranks[n as usize] = 1;
    let disk = ChainComplex::new(0, ranks, [(top, IntMatrix::from_i64(&[&[1]]))]).expect("disk");
    let boundary = sphere(n - 1);
    let inclusion = ChainMap::new(
        boundary.clone(),
        disk.clone(),
        [
            (0, IntMatrix::identity(1)),
            (top - 1, IntMatrix::identity(1)),
        ],
    )
    .expect("boundary inclusion");
    DiskPair {
        disk,
        boundary,
        inclusion,
    }
}

/// The basepoint section `pt -> S^{n-1}` of the disk's boundary.
pub fn basepoint_section(n: u32) -> ChainMap {
    ChainMap::new(point(), sphere(n - 1), [(0, IntMatrix::identity(1))]).expect("section")
}

/// A map `S^{n-1} -> (D^n)^xi` of the given degree, where the Thom space
/// model is `cone(basepoint_section(n))`.
pub fn disk_sphere_map(n: u32, degree: i64) -> ChainMap {
    let thom = mapping_cone(&basepoint_section(n));
    let top = n as i64 - 1;
    // In degree n-1 the sphere cell sigma is the first (target) generator.
    let mut col = IntMatrix::zeros(thom.rank(top), 1);
    col[(0, 0)] = BigInt::from(degree);
    ChainMap::new(
        sphere(n - 1),
        thom,
        [(0, IntMatrix::identity(1)), (top, col)],
    )
    .expect("sphere map")
}

/// `S^1 x D^1` with vertices `v0, v1`, loops `a0, a1`, edge `e` from `v0`
/// to `v1` and one square `F` with `d F = a0 - a1`, together with its two
/// boundary circles.
#[derive(Clone, Debug)]
pub struct CylinderPair {
    pub cylinder: ChainComplex,
    pub boundary: ChainComplex,
    pub inclusion: ChainMap,
}

pub fn cylinder_pair() -> CylinderPair {
    let cylinder = ChainComplex::new(
        0,
        vec![2, 3, 1],
        [
            (1, IntMatrix::from_i64(&[&[0, 0, -1], &[0, 0, 1]])),
            (2, IntMatrix::from_i64(&[&[1], &[-1], &[0]])),
        ],
    )
    .expect("cylinder");
    let boundary = ChainComplex::new(0, vec![2, 2], []).expect("two circles");
    let inclusion = ChainMap::new(
        boundary.clone(),
        cylinder.clone(),
        [
            (0, IntMatrix::identity(2)),
            (1, IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0]])),
        ],
    )
    .expect("inclusion");
    CylinderPair {
        cylinder,
        boundary,
        inclusion,
    }
}

/// Section `S^1 -> S^1 + S^1` wrapping `degree` times around the first
/// circle.
pub fn cylinder_section(degree: i64) -> ChainMap {
    ChainMap::new(
        sphere(1),
        ChainComplex::new(0, vec![2, 2], []).expect("two circles"),
        [
            (0, IntMatrix::from_i64(&[&[1], &[0]])),
            (1, IntMatrix::from_i64(&[&[degree], &[0]])),
        ],
    )
    .expect("section")
}

/// Disjoint union of chain complexes (degreewise direct sum).
pub fn disjoint_union(parts: &[ChainComplex]) -> ChainComplex {
    let lo = parts.iter().map(ChainComplex::min_degree).min().unwrap_or(0);
    let hi = parts.iter().map(ChainComplex::max_degree).max().unwrap_or(-1);
    if hi < lo {
        return ChainComplex::zero();
    }
    let ranks: Vec<usize> = (lo..=hi)
        .map(|d| parts.iter().map(|p| p.rank(d)).sum())
        .collect();
    let boundaries = (lo..=hi).map(|d| {
        let rows = parts.iter().map(|p| p.rank(d - 1)).sum();
        let cols = parts.iter().map(|p| p.rank(d)).sum();
        let mut m = IntMatrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            m.set_block(r, c, &p.boundary(d));
            r += p.rank(d - 1);
            c += p.rank(d);
        }
        (d, m)
    });
    ChainComplex::new(lo, ranks, boundaries.collect::<Vec<_>>()).expect("direct sum of complexes")
}
