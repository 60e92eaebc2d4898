//! Independent oracles and random generators shared by the integration tests.
//! Nothing here calls the code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

use towercalc_core::models::disjoint_union;
use towercalc_core::{ChainComplex, ChainMap, IntMatrix};

// ---------------------------------------------------------------- SNF oracle

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant by the Leibniz expansion.
fn leibniz(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    permutations(n)
        .iter()
        .map(|p| {
            let prod: BigInt = (0..n).map(|i| BigInt::from(m[i][p[i]])).product();
            prod * sign(p)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}` with
/// `D_k` the gcd of all `k x k` minors.
pub fn determinantal_factors(a: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                g = g.gcd(&leibniz(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> (Vec<Vec<i64>>, usize) {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let a = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    (a, cols)
}

// ------------------------------------------------------------- Lyndon oracle

/// A word is Lyndon iff it is strictly smaller than each proper rotation.
pub fn rotation_minimal(w: &[u32]) -> bool {
    let n = w.len();
    (1..n).all(|r| {
        let rot: Vec<u32> = w[r..].iter().chain(&w[..r]).copied().collect();
        w < rot.as_slice()
    })
}

/// All words of length `len` over `g` letters, in lexicographic order.
pub fn all_words(g: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..g).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn brute_lyndon(g: u32, len: usize) -> Vec<Vec<u32>> {
    all_words(g, len).into_iter().filter(|w| rotation_minimal(w)).collect()
}

/// Rational homotopy ranks of a wedge of spheres by explicit enumeration of
/// basic products: every Lyndon word over the summands (found by brute
/// force) yields the sphere `S^{1 + sum (d_letter - 1)}`, to which Serre's
/// ranks are applied.
pub fn brute_wedge_ranks(dims: &[u32], q_max: i64) -> BTreeMap<i64, u64> {
    let g = dims.len() as u32;
    let mut out = BTreeMap::new();
    let mut len = 1;
    loop {
        // Shortest possible sphere at this length exceeds q_max: stop.
        let min_dim = 1 + len as i64 * (*dims.iter().min().unwrap() as i64 - 1);
        if min_dim > q_max {
            break;
        }
        for w in brute_lyndon(g, len) {
            let dim: i64 = 1 + w.iter().map(|&l| dims[l as usize] as i64 - 1).sum::<i64>();
            for q in 1..=q_max {
                let serre = q == dim || (dim % 2 == 0 && q == 2 * dim - 1);
                if serre {
                    *out.entry(q).or_insert(0) += 1;
                }
            }
        }
        len += 1;
    }
    out
}

// ----------------------------------------------------------- Künneth oracle

/// `dim H^s(P^{x j})` by summing products of Betti numbers over all
/// `j`-tuples of degrees adding to `s`.
pub fn kunneth_tuple(b: &[u64], j: usize, s: usize) -> BigInt {
    fn go(b: &[u64], left: usize, s: usize) -> BigInt {
        if left == 0 {
            return if s == 0 { BigInt::from(1) } else { BigInt::zero() };
        }
        (0..b.len().min(s + 1))
            .map(|d| BigInt::from(b[d]) * go(b, left - 1, s - d))
            .sum()
    }
    go(b, j, s)
}

// --------------------------------------------------------- random complexes

/// Random unimodular `n x n` matrix with its inverse, as a product of
/// elementary operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut m = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m.negate_row(0);
            inv.negate_col(0);
        }
        return (m, inv);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = BigInt::from(rng.gen_range(-2..=2));
        m.add_row_multiple(i, j, &c);
        inv.add_col_multiple(j, i, &-c);
    }
    (m, inv)
}

/// Random complex in degrees `0..=top`: a direct sum of free generators and
/// elementary pieces `Z --c--> Z`, in randomly changed bases. Returns the
/// complex and the known homology (betti, torsion) per degree.
pub fn random_complex(rng: &mut impl Rng, top: i64) -> (ChainComplex, Vec<(usize, Vec<i64>)>) {
    let n = (top + 1) as usize;
    let mut free = vec![0usize; n];
    // pieces[d] lists multipliers c for pieces x_d -> c y_{d-1}.
    let mut pieces: Vec<Vec<i64>> = vec![vec![]; n];
    for d in 0..n {
        free[d] = rng.gen_range(0..=2);
        if d > 0 {
            pieces[d] = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(1..=4)).collect();
        }
    }
    let ranks: Vec<usize> = (0..n)
        .map(|d| free[d] + pieces[d].len() + pieces.get(d + 1).map_or(0, Vec::len))
        .collect();
    // Generators in degree d: free, then sources of pieces[d], then targets of pieces[d+1].
    let mut std_boundaries = Vec::new();
    for d in 1..n {
        let mut m = IntMatrix::zeros(ranks[d - 1], ranks[d]);
        let src_off = free[d];
        let tgt_off = free[d - 1] + pieces[d - 1].len();
        for (i, &c) in pieces[d].iter().enumerate() {
            m[(tgt_off + i, src_off + i)] = BigInt::from(c);
        }
        std_boundaries.push(m);
    }
    let bases: Vec<(IntMatrix, IntMatrix)> =
        ranks.iter().map(|&r| random_unimodular(rng, r)).collect();
    let boundaries = (1..n).map(|d| {
        let m = bases[d - 1]
            .0
            .mul(&std_boundaries[d - 1])
            .unwrap()
            .mul(&bases[d].1)
            .unwrap();
        (d as i64, m)
    });
    let c = ChainComplex::new(0, ranks, boundaries.collect::<Vec<_>>()).unwrap();
    let expected = (0..n)
        .map(|d| {
            let cs = pieces.get(d + 1).cloned().unwrap_or_default();
            (free[d], diagonal_invariant_factors(&cs))
        })
        .collect();
    (c, expected)
}

/// Invariant factors (> 1) of a diagonal matrix, by repeatedly replacing
/// pairs with their gcd and lcm.
pub fn diagonal_invariant_factors(diag: &[i64]) -> Vec<i64> {
    let mut v = diag.to_vec();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let (g, l) = (v[i].gcd(&v[j]), v[i].lcm(&v[j]));
            v[i] = g;
            v[j] = l;
        }
    }
    v.into_iter().filter(|&x| x > 1).collect()
}

/// Random pair `(A (+) B, A)` with the inclusion of `A`, in a changed basis
/// of the total complex.
pub fn random_pair(rng: &mut impl Rng) -> (ChainComplex, ChainMap) {
    let (a, _) = random_complex(rng, 2);
    let (b, _) = random_complex(rng, 2);
    let sum = disjoint_union(&[a.clone(), b]);
    let bases: Vec<(IntMatrix, IntMatrix)> =
        sum.ranks().iter().map(|&r| random_unimodular(rng, r)).collect();
    let total = ChainComplex::new(
        0,
        sum.ranks().to_vec(),
        (1..=sum.max_degree())
            .map(|d| {
                let m = bases[d as usize - 1]
                    .0
                    .mul(&sum.boundary(d))
                    .unwrap()
                    .mul(&bases[d as usize].1)
                    .unwrap();
                (d, m)
            })
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let incl = a
        .degrees()
        .map(|d| {
            let mut std = IntMatrix::zeros(sum.rank(d), a.rank(d));
            for i in 0..a.rank(d) {
                std[(i, i)] = BigInt::from(1);
            }
            (d, bases[d as usize].0.mul(&std).unwrap())
        })
        .collect::<Vec<_>>();
    let map = ChainMap::new(a, total.clone(), incl).unwrap();
    (total, map)
}

/// Torsion lists in a comparable form.
pub fn torsion_i64(t: &[BigInt]) -> Vec<i64> {
    t.iter().map(|x| i64::try_from(x.abs()).unwrap()).collect()
}
