//! Test-side reference data, written independently of the library code.
#![allow(dead_code)]

use movcone::{Fan, Halfspace, RatMatrix, Ray};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rays(v: &[&[i64]]) -> Vec<Ray> {
    v.iter().map(|r| Ray::from_ints(r).unwrap()).collect()
}

pub fn y2_fan() -> Fan {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/y2.fan")).unwrap();
    Fan::from_json(&text).unwrap()
}

/// A Kapranov basis element as the set of points it involves: `H` is empty,
/// `E_i` is `{i}`, `E_jk` is `{j, k}`.
pub type Label = Vec<u8>;

pub fn labels(r: u8) -> Vec<Label> {
    let mut out = vec![vec![]];
    out.extend((1..=r).map(|i| vec![i]));
    for j in 1..=r {
        for k in j + 1..=r {
            out.push(vec![j, k]);
        }
    }
    out
}

/// The product of two basis divisors as `(label, coefficient)` terms of the
/// dual basis, straight from the multiplication rules.
pub fn rule(a: &Label, b: &Label) -> Vec<(Label, i64)> {
    let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    match (a.len(), b.len()) {
        (0, 0) => vec![(vec![], 1)],
        (0, 1) => vec![],
        (0, 2) => vec![(b.clone(), -1)],
        (1, 1) if a == b => vec![(a.clone(), 1)],
        (1, 1) => vec![],
        (1, 2) if b.contains(&a[0]) => vec![(b.clone(), -1)],
        (1, 2) => vec![],
        (2, 2) if a == b => vec![(a.clone(), 2), (vec![], -1), (vec![a[0]], -1), (vec![a[1]], -1)],
        _ => vec![],
    }
}

/// The full product table of `X_r` as integer vectors.
pub fn table(r: u8) -> Vec<Vec<Vec<i64>>> {
    let ls = labels(r);
    ls.iter()
        .map(|a| {
            ls.iter()
                .map(|b| {
                    let mut v = vec![0; ls.len()];
                    for (l, c) in rule(a, b) {
                        v[ls.iter().position(|x| *x == l).unwrap()] += c;
                    }
                    v
                })
                .collect()
        })
        .collect()
}

pub fn product(t: &[Vec<Vec<i64>>], x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = x.len();
    let mut out = vec![0; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out[c] += x[a] * y[b] * t[a][b][c];
            }
        }
    }
    out
}

fn full_rank(dim: usize, rows: &[Vec<i64>]) -> bool {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    RatMatrix::from_int_rows(dim, &big).unwrap().rank() == dim
}

/// Pointed systems: between `dim` and 20 rows of full rank.
pub fn pointed_system() -> impl Strategy<Value = (usize, Vec<Halfspace>)> {
    (2usize..=5)
        .prop_flat_map(|dim| {
            (
                Just(dim),
                prop::collection::vec(prop::collection::vec(-3i64..=3, dim), dim..=20),
            )
        })
        .prop_filter("full rank", |(dim, rows)| full_rank(*dim, rows))
        .prop_map(|(dim, rows)| {
            let hs = rows.iter().filter_map(|r| Halfspace::from_ints(r).ok()).collect();
            (dim, hs)
        })
}

/// Generators in the open halfspace `sum x > 0`, spanning the space.
pub fn pointed_generators() -> impl Strategy<Value = (usize, Vec<Ray>)> {
    (2usize..=5)
        .prop_flat_map(|dim| {
            (
                Just(dim),
                prop::collection::vec(prop::collection::vec(-3i64..=4, dim), dim..=14),
            )
        })
        .prop_map(|(dim, rows)| {
            let rows: Vec<Vec<i64>> = rows.into_iter().filter(|r| r.iter().sum::<i64>() > 0).collect();
            (dim, rows)
        })
        .prop_filter("full rank", |(dim, rows)| full_rank(*dim, rows))
        .prop_map(|(dim, rows)| (dim, rows.iter().map(|r| Ray::from_ints(r).unwrap()).collect()))
}

/// Nonzero entries `(a, b, c, value)` of a product table.
pub fn sparse(t: &[Vec<Vec<i64>>]) -> Vec<(usize, usize, usize, i64)> {
    let mut out = Vec::new();
    for (a, row) in t.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            for (c, &x) in v.iter().enumerate() {
                if x != 0 {
                    out.push((a, b, c, x));
                }
            }
        }
    }
    out
}

/// Product divided by the gcd of its entries; `None` for zero.
pub fn primitive_product(sp: &[(usize, usize, usize, i64)], x: &[i64], y: &[i64]) -> Option<Vec<i64>> {
    let mut out = vec![0i64; x.len()];
    for &(a, b, c, v) in sp {
        out[c] += x[a] * y[b] * v;
    }
    let g = out.iter().fold(0i64, |g, &v| num_integer::gcd(g, v));
    (g != 0).then(|| out.iter().map(|v| v / g).collect())
}

/// Faces of a fan: its rays, walls and maximal cones.
fn faces(f: &Fan) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..f.rays.len()).map(|i| vec![i]).collect();
    out.extend(f.walls().iter().map(|w| vec![w.a, w.b]));
    out.extend(f.max_cones.iter().map(|c| c.to_vec()));
    out
}

pub fn random_blowup(picks: &[usize]) -> Fan {
    let mut f = Fan::projective_space();
    for &p in picks {
        let fs: Vec<Vec<usize>> = faces(&f).into_iter().filter(|c| c.len() > 1).collect();
        f = f.star_subdivide(&fs[p % fs.len()]).unwrap();
    }
    f
}
