//! Brute-force extremal ray enumeration, kept independent of the
//! double-description engine so the two can be checked against each other.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{check_dims, ConeError, Halfspace, Ray};
use crate::linalg::{dot_bigints, RatMatrix};

pub const MAX_DIM: usize = 6;
pub const MAX_HALFSPACES: usize = 20;

/// Every `(dim - 1)`-subset of normals with a one-dimensional kernel yields a
/// candidate direction; a candidate oriented into the cone is an extremal ray.
pub fn brute_force_rays(dim: usize, halfspaces: &[Halfspace]) -> Result<Vec<Ray>, ConeError> {
    if dim > MAX_DIM || halfspaces.len() > MAX_HALFSPACES {
        return Err(ConeError::TooLarge {
            dim,
            halfspaces: halfspaces.len(),
        });
    }
    check_dims(dim, halfspaces.iter().map(|h| h.normal()))?;
    let normals: Vec<Vec<BigInt>> = halfspaces.iter().map(|h| h.normal().to_vec()).collect();
    let lineality = RatMatrix::from_int_rows(dim, &normals)
        .expect("dimensions checked")
        .kernel_basis();
    if !lineality.is_empty() {
        return Err(ConeError::NotPointed { lineality });
    }
    if dim == 0 {
        return Ok(Vec::new());
    }

    let feasible = |x: &[BigInt]| normals.iter().all(|a| !dot_bigints(a, x).is_negative());
    let mut found = BTreeSet::new();
    for subset in subsets(normals.len(), dim - 1) {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let kernel = RatMatrix::from_int_rows(dim, &rows)
            .expect("dimensions checked")
            .kernel_basis();
        if kernel.len() != 1 {
            continue;
        }
        let dir = kernel[0].primitive_ints().expect("kernel vector is nonzero");
        let opposite: Vec<BigInt> = dir.iter().map(|x| -x).collect();
        for cand in [dir, opposite] {
            if feasible(&cand) {
                found.insert(Ray(cand));
            }
        }
    }
    Ok(found.into_iter().collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
