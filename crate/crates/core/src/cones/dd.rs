//! Incremental double-description method.
//!
//! Constraints are inserted in lexicographic order of their normals, starting
//! from the simplicial cone cut out by the first `dim` independent ones. Two
//! rays are adjacent iff the constraints tight at both have rank `dim - 2`.
//! That rank is first computed modulo a prime; since the rational rank is
//! never smaller than the modular one and never exceeds `dim - 2` for two
//! distinct rays, a modular hit is conclusive and only misses are rechecked
//! over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{check_dims, ConeError, Halfspace, Ray};
use crate::linalg::{dot_bigints, int_rank, primitive_bigints, RatMatrix, RatVector};

const PRIME: u64 = (1 << 61) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn intersection_len(&self, other: &BitSet) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

#[derive(Clone, Debug)]
struct DdRay {
    coords: Vec<BigInt>,
    tight: BitSet,
}

struct Rows {
    exact: Vec<Vec<BigInt>>,
    modular: Vec<Vec<u64>>,
    dim: usize,
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn to_mod(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let mut r = x % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().expect("reduced residue fits")
}

impl Rows {
    fn new(dim: usize, exact: Vec<Vec<BigInt>>) -> Self {
        let modular = exact.iter().map(|r| r.iter().map(to_mod).collect()).collect();
        Rows { exact, modular, dim }
    }

    fn modular_rank(&self, idx: &[usize]) -> usize {
        let mut m: Vec<Vec<u64>> = idx.iter().map(|&i| self.modular[i].clone()).collect();
        let mut rank = 0;
        for c in 0..self.dim {
            let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let inv = powmod(m[rank][c], PRIME - 2);
            let (head, tail) = m.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                if row[c] == 0 {
                    continue;
                }
                let f = mulmod(row[c], inv);
                for j in c..self.dim {
                    let sub = mulmod(f, pivot[j]);
                    row[j] = (row[j] + PRIME - sub) % PRIME;
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }

    fn exact_rank(&self, idx: &[usize]) -> usize {
        let refs: Vec<&[BigInt]> = idx.iter().map(|&i| self.exact[i].as_slice()).collect();
        int_rank(&refs, self.dim)
    }

    /// Rank of the rows in `set` equals `target`, assuming it cannot exceed it.
    fn has_rank(&self, set: &BitSet, target: usize) -> bool {
        let idx: Vec<usize> = set.ones().collect();
        if idx.len() < target {
            return false;
        }
        self.modular_rank(&idx) == target || self.exact_rank(&idx) == target
    }
}

/// Extremal rays of `{x : <a, x> >= 0 for every halfspace a}`, sorted
/// lexicographically.
pub fn rays_from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Vec<Ray>, ConeError> {
    check_dims(dim, halfspaces.iter().map(|h| h.normal()))?;
    let mut normals: Vec<Vec<BigInt>> = halfspaces.iter().map(|h| h.normal().to_vec()).collect();
    normals.sort();
    normals.dedup();

    let matrix = RatMatrix::from_int_rows(dim, &normals).expect("dimensions checked");
    let lineality = matrix.kernel_basis();
    if !lineality.is_empty() {
        return Err(ConeError::NotPointed { lineality });
    }
    if dim == 0 {
        return Ok(Vec::new());
    }

    let initial = independent_prefix(dim, &normals);
    let mut order: Vec<usize> = initial.clone();
    order.extend((0..normals.len()).filter(|i| !initial.contains(i)));

    let rows = Rows::new(dim, normals);
    let m = rows.exact.len();
    let mut rays = initial_rays(dim, &rows.exact, &initial, m);

    for &k in &order[dim..] {
        rays = insert_constraint(&rows, rays, k);
        if rays.is_empty() {
            break;
        }
    }

    let mut out: Vec<Ray> = rays.into_iter().map(|r| Ray(r.coords)).collect();
    out.sort();
    Ok(out)
}

/// Indices of the first `dim` rows, in order, that are linearly independent.
fn independent_prefix(dim: usize, rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(dim);
    for i in 0..rows.len() {
        let mut refs: Vec<&[BigInt]> = chosen.iter().map(|&j| rows[j].as_slice()).collect();
        refs.push(&rows[i]);
        if int_rank(&refs, dim) == refs.len() {
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        }
    }
    chosen
}

fn initial_rays(dim: usize, rows: &[Vec<BigInt>], initial: &[usize], m: usize) -> Vec<DdRay> {
    let basis: Vec<Vec<BigInt>> = initial.iter().map(|&i| rows[i].clone()).collect();
    let b = RatMatrix::from_int_rows(dim, &basis).expect("square");
    (0..dim)
        .map(|i| {
            let x = b.solve(&RatVector::unit(dim, i)).expect("initial rows are independent");
            let coords = x.primitive_ints().expect("nonzero solution");
            let mut tight = BitSet::new(m);
            for (j, &row) in initial.iter().enumerate() {
                if j != i {
                    tight.insert(row);
                }
            }
            DdRay { coords, tight }
        })
        .collect()
}

fn insert_constraint(rows: &Rows, rays: Vec<DdRay>, k: usize) -> Vec<DdRay> {
    let a = &rows.exact[k];
    let values: Vec<BigInt> = rays.iter().map(|r| dot_bigints(a, &r.coords)).collect();

    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    for (i, v) in values.iter().enumerate() {
        if v.is_positive() {
            pos.push(i);
        } else if v.is_negative() {
            neg.push(i);
        } else {
            zero.push(i);
        }
    }

    let dim = rows.dim;
    let need = dim.saturating_sub(2);
    let created: Vec<DdRay> = if neg.is_empty() || pos.is_empty() {
        Vec::new()
    } else {
        pos.par_iter()
            .map(|&p| {
                let rp = &rays[p];
                neg.iter()
                    .filter_map(|&n| {
                        let rn = &rays[n];
                        if rp.tight.intersection_len(&rn.tight) < need {
                            return None;
                        }
                        let common = rp.tight.intersection(&rn.tight);
                        if !rows.has_rank(&common, need) {
                            return None;
                        }
                        let sp = &values[p];
                        let sn = &values[n];
                        let coords: Vec<BigInt> = rn
                            .coords
                            .iter()
                            .zip(&rp.coords)
                            .map(|(xn, xp)| sp * xn - sn * xp)
                            .collect();
                        let mut tight = common;
                        tight.insert(k);
                        Some(DdRay {
                            coords: primitive_bigints(coords),
                            tight,
                        })
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };

    let mut next = Vec::with_capacity(pos.len() + zero.len() + created.len());
    let mut rays: Vec<Option<DdRay>> = rays.into_iter().map(Some).collect();
    for &i in &pos {
        next.push(rays[i].take().unwrap());
    }
    for &i in &zero {
        let mut r = rays[i].take().unwrap();
        r.tight.insert(k);
        next.push(r);
    }
    next.extend(created);
    debug_assert!(next.iter().all(|r| !r.coords.iter().all(Zero::is_zero)));
    next
}
