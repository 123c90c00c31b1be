//! Smooth complete toric threefolds given by a fan: validation, star
//! subdivisions, the divisor class group in a chosen basis of prime divisors,
//! torus-invariant curve classes and pairwise products of divisors.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cones::{self, ConeError, Ray};
use crate::linalg::{RatMatrix, RatVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("invalid fan: {0}")]
    Invalid(Diagnostics),
    #[error("rays {0:?} do not span a cone of the fan")]
    NotAFace(Vec<usize>),
    #[error("r = {0} is outside 1..=4")]
    BadR(usize),
    #[error("basis {0:?} is not independent modulo the lattice relations")]
    SingularBasis(Vec<usize>),
    #[error("basis must contain {expected} ray indices, found {found}")]
    BasisSize { expected: usize, found: usize },
    #[error("ray index {0} out of range")]
    BadRayIndex(usize),
    #[error("fan file, line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// A simplicial fan in a rank-3 lattice; cone indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub rays: Vec<[i64; 3]>,
    pub max_cones: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanIssue {
    Empty,
    RayIndex { cone: usize, index: usize },
    RepeatedIndex { cone: usize },
    ZeroRay(usize),
    NonPrimitiveRay(usize),
    DuplicateRay(usize, usize),
    DuplicateCone(usize, usize),
    Singular { cone: usize, det: i64 },
    WallIncidence { a: usize, b: usize, cones: usize },
    WallOverlap { a: usize, b: usize },
    Disconnected,
}

impl fmt::Display for FanIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FanIssue::*;
        match self {
            Empty => write!(f, "fan has no rays or no maximal cones"),
            RayIndex { cone, index } => write!(f, "cone {cone} refers to missing ray {index}"),
            RepeatedIndex { cone } => write!(f, "cone {cone} repeats a ray"),
            ZeroRay(i) => write!(f, "ray {i} is zero"),
            NonPrimitiveRay(i) => write!(f, "ray {i} is not primitive"),
            DuplicateRay(i, j) => write!(f, "rays {i} and {j} coincide"),
            DuplicateCone(i, j) => write!(f, "cones {i} and {j} coincide"),
            Singular { cone, det } => write!(f, "cone {cone} is not smooth (det {det})"),
            WallIncidence { a, b, cones } => {
                write!(f, "wall ({a},{b}) lies in {cones} maximal cone(s), expected 2")
            }
            WallOverlap { a, b } => write!(f, "the two cones at wall ({a},{b}) lie on the same side"),
            Disconnected => write!(f, "maximal cones are not connected through walls"),
        }
    }
}

/// Outcome of [`Fan::validate`]; valid iff `issues` is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub issues: Vec<FanIssue>,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A two-dimensional cone `(a, b)`, `a < b`, with the opposite rays `c < c2`
/// of its two incident maximal cones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub c2: usize,
}

fn det3(u: [i64; 3], v: [i64; 3], w: [i64; 3]) -> i64 {
    u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0])
}

fn cross(u: [i64; 3], v: [i64; 3]) -> [i64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn dot3(u: [i64; 3], v: [i64; 3]) -> i64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Fan {
    /// The fan of P^3: rays `-e1-e2-e3, e1, e2, e3`, all four 3-subsets.
    pub fn projective_space() -> Fan {
        Fan {
            rays: vec![[-1, -1, -1], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
            max_cones: vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        }
    }

    pub fn from_json(text: &str) -> Result<Fan, ToricError> {
        serde_json::from_str(text).map_err(|e| ToricError::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fan serializes")
    }

    pub fn validate(&self) -> Diagnostics {
        let mut issues = Vec::new();
        if self.rays.is_empty() || self.max_cones.is_empty() {
            issues.push(FanIssue::Empty);
            return Diagnostics { issues };
        }
        for (i, u) in self.rays.iter().enumerate() {
            let g = u.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g == 0 {
                issues.push(FanIssue::ZeroRay(i));
            } else if g != 1 {
                issues.push(FanIssue::NonPrimitiveRay(i));
            }
            for j in 0..i {
                if self.rays[j] == *u {
                    issues.push(FanIssue::DuplicateRay(j, i));
                }
            }
        }
        let mut seen: BTreeMap<[usize; 3], usize> = BTreeMap::new();
        for (k, cone) in self.max_cones.iter().enumerate() {
            if let Some(&index) = cone.iter().find(|&&i| i >= self.rays.len()) {
                issues.push(FanIssue::RayIndex { cone: k, index });
                continue;
            }
            if cone[0] == cone[1] || cone[0] == cone[2] || cone[1] == cone[2] {
                issues.push(FanIssue::RepeatedIndex { cone: k });
                continue;
            }
            let mut sorted = *cone;
            sorted.sort_unstable();
            if let Some(&prev) = seen.get(&sorted) {
                issues.push(FanIssue::DuplicateCone(prev, k));
            }
            seen.insert(sorted, k);
        }
        if !issues.is_empty() {
            return Diagnostics { issues };
        }
        for (k, c) in self.max_cones.iter().enumerate() {
            let det = det3(self.rays[c[0]], self.rays[c[1]], self.rays[c[2]]);
            if det.abs() != 1 {
                issues.push(FanIssue::Singular { cone: k, det });
            }
        }
        let incidence = self.wall_incidence();
        for (&(a, b), cones) in &incidence {
            if cones.len() != 2 {
                issues.push(FanIssue::WallIncidence {
                    a,
                    b,
                    cones: cones.len(),
                });
            }
        }
        if issues.is_empty() {
            for (&(a, b), cones) in &incidence {
                let (c, c2) = (cones[0].1, cones[1].1);
                let [ua, ub] = [self.rays[a], self.rays[b]];
                let side = |x: usize| det3(ua, ub, self.rays[x]).signum();
                if side(c) == side(c2) {
                    issues.push(FanIssue::WallOverlap { a, b });
                }
            }
        }
        if !self.connected(&incidence) {
            issues.push(FanIssue::Disconnected);
        }
        Diagnostics { issues }
    }

    /// Wall -> list of (incident max cone, opposite ray).
    fn wall_incidence(&self) -> BTreeMap<(usize, usize), Vec<(usize, usize)>> {
        let mut map: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (k, c) in self.max_cones.iter().enumerate() {
            for (x, y, z) in [(c[0], c[1], c[2]), (c[0], c[2], c[1]), (c[1], c[2], c[0])] {
                map.entry(pair(x, y)).or_default().push((k, z));
            }
        }
        map
    }

    fn connected(&self, incidence: &BTreeMap<(usize, usize), Vec<(usize, usize)>>) -> bool {
        let n = self.max_cones.len();
        let mut adj = vec![Vec::new(); n];
        for cones in incidence.values() {
            for &(x, _) in cones {
                for &(y, _) in cones {
                    if x != y {
                        adj[x].push(y);
                    }
                }
            }
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(k) = queue.pop_front() {
            for &m in &adj[k] {
                if !seen[m] {
                    seen[m] = true;
                    queue.push_back(m);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn ensure_valid(&self) -> Result<(), ToricError> {
        let d = self.validate();
        if d.is_valid() {
            Ok(())
        } else {
            Err(ToricError::Invalid(d))
        }
    }

    /// Walls in sorted order. The fan must be valid.
    pub fn walls(&self) -> Vec<Wall> {
        self.wall_incidence()
            .into_iter()
            .filter(|(_, cones)| cones.len() == 2)
            .map(|((a, b), cones)| {
                let (c, c2) = pair(cones[0].1, cones[1].1);
                Wall { a, b, c, c2 }
            })
            .collect()
    }

    /// Inserts the sum of the face's generators as a new ray and replaces
    /// every maximal cone containing the face by its star subdivision.
    pub fn star_subdivide(&self, face: &[usize]) -> Result<Fan, ToricError> {
        let mut face = face.to_vec();
        face.sort_unstable();
        face.dedup();
        if !(2..=3).contains(&face.len()) {
            return Err(ToricError::NotAFace(face));
        }
        if let Some(&i) = face.iter().find(|&&i| i >= self.rays.len()) {
            return Err(ToricError::BadRayIndex(i));
        }
        let incident: Vec<usize> = (0..self.max_cones.len())
            .filter(|&k| face.iter().all(|i| self.max_cones[k].contains(i)))
            .collect();
        if incident.is_empty() {
            return Err(ToricError::NotAFace(face));
        }
        let mut u = [0i64; 3];
        for &i in &face {
            for (x, y) in u.iter_mut().zip(self.rays[i]) {
                *x += y;
            }
        }
        let new = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(u);
        let mut max_cones = Vec::new();
        for (k, cone) in self.max_cones.iter().enumerate() {
            if !incident.contains(&k) {
                max_cones.push(*cone);
                continue;
            }
            for &f in &face {
                let mut c = *cone;
                for x in c.iter_mut() {
                    if *x == f {
                        *x = new;
                    }
                }
                max_cones.push(c);
            }
        }
        Ok(Fan { rays, max_cones })
    }

    /// Rays sorted lexicographically, cones relabelled, sorted within and
    /// across; two fans are equal up to ray order iff their canonical forms
    /// are equal.
    pub fn canonical(&self) -> Fan {
        let mut order: Vec<usize> = (0..self.rays.len()).collect();
        order.sort_by_key(|&i| self.rays[i]);
        let mut relabel = vec![0; self.rays.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let mut max_cones: Vec<[usize; 3]> = self
            .max_cones
            .iter()
            .map(|c| {
                let mut c = c.map(|i| relabel[i]);
                c.sort_unstable();
                c
            })
            .collect();
        max_cones.sort_unstable();
        Fan {
            rays: order.iter().map(|&i| self.rays[i]).collect(),
            max_cones,
        }
    }

    /// `sum_rho <e_j, u_rho> [D_rho] = 0` for `j = 0, 1, 2`.
    pub fn relations(&self) -> [Vec<i64>; 3] {
        std::array::from_fn(|j| self.rays.iter().map(|u| u[j]).collect())
    }
}

/// Torus-invariant model of `X_r`, `r <= 4`: P^3 blown up at `r` of its fixed
/// points and then along the lines joining them. Point `i` is the maximal cone
/// omitting ray `i - 1`; the line through points `i, j` is the 2-cone omitting
/// rays `i - 1` and `j - 1`.
pub fn kapranov_fan(r: usize) -> Result<Fan, ToricError> {
    if !(1..=4).contains(&r) {
        return Err(ToricError::BadR(r));
    }
    let mut fan = Fan::projective_space();
    for i in 0..r {
        let face: Vec<usize> = (0..4).filter(|&x| x != i).collect();
        fan = fan.star_subdivide(&face)?;
    }
    for i in 0..r {
        for j in i + 1..r {
            let face: Vec<usize> = (0..4).filter(|&x| x != i && x != j).collect();
            fan = fan.star_subdivide(&face)?;
        }
    }
    Ok(fan)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDivisorClass {
    coords: RatVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricCurveClass {
    coords: RatVector,
}

impl ToricDivisorClass {
    pub fn new(coords: RatVector) -> Self {
        ToricDivisorClass { coords }
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }

    pub fn pairing(&self, c: &ToricCurveClass) -> BigRational {
        self.coords.dot(&c.coords)
    }
}

impl ToricCurveClass {
    pub fn new(coords: RatVector) -> Self {
        ToricCurveClass { coords }
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }
}

/// A validated fan together with a basis of `N^1` made of prime divisors.
#[derive(Debug, Clone)]
pub struct ToricVariety {
    fan: Fan,
    basis: Vec<usize>,
    walls: Vec<Wall>,
    wall_of: HashMap<(usize, usize), usize>,
    /// `D_rho . V(wall)` for every wall and ray.
    wall_ints: Vec<Vec<i64>>,
    ray_classes: Vec<RatVector>,
}

fn relation_matrix(fan: &Fan, extra: &[usize]) -> RatMatrix {
    let n = fan.rays.len();
    let mut rows: Vec<Vec<BigInt>> = fan
        .relations()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for &i in extra {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        rows.push(e);
    }
    RatMatrix::from_int_rows(n, &rows).expect("uniform rows")
}

/// Greedy choice from the highest ray index downward, returned ascending.
pub fn default_basis(fan: &Fan) -> Vec<usize> {
    let n = fan.rays.len();
    let target = n.saturating_sub(3);
    let mut chosen = Vec::new();
    for i in (0..n).rev() {
        if chosen.len() == target {
            break;
        }
        chosen.push(i);
        if relation_matrix(fan, &chosen).rank() != 3 + chosen.len() {
            chosen.pop();
        }
    }
    chosen.sort_unstable();
    chosen
}

fn basis_error(basis: &[usize]) -> ToricError {
    ToricError::SingularBasis(basis.to_vec())
}

impl ToricVariety {
    /// Validates the fan; `basis` defaults to [`default_basis`].
    pub fn new(fan: Fan, basis: Option<Vec<usize>>) -> Result<ToricVariety, ToricError> {
        fan.ensure_valid()?;
        let n = fan.rays.len();
        let basis = match basis {
            Some(mut b) => {
                if let Some(&i) = b.iter().find(|&&i| i >= n) {
                    return Err(ToricError::BadRayIndex(i));
                }
                if b.len() != n - 3 {
                    return Err(ToricError::BasisSize {
                        expected: n - 3,
                        found: b.len(),
                    });
                }
                b.sort_unstable();
                b.dedup();
                if b.len() != n - 3 || relation_matrix(&fan, &b).rank() != n {
                    return Err(basis_error(&b));
                }
                b
            }
            None => default_basis(&fan),
        };
        let ray_classes = reduce_to_basis(&fan, &basis)?;
        let walls = fan.walls();
        let wall_of = walls.iter().enumerate().map(|(k, w)| ((w.a, w.b), k)).collect();
        let wall_ints = walls.iter().map(|w| wall_intersections(&fan, w)).collect();
        Ok(ToricVariety {
            fan,
            basis,
            walls,
            wall_of,
            wall_ints,
            ray_classes,
        })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Picard rank, `#rays - 3`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn wall(&self, a: usize, b: usize) -> Option<&Wall> {
        self.wall_of.get(&pair(a, b)).map(|&k| &self.walls[k])
    }

    pub fn divisor_in_basis(&self, ray: usize) -> Result<ToricDivisorClass, ToricError> {
        self.ray_classes
            .get(ray)
            .map(|c| ToricDivisorClass::new(c.clone()))
            .ok_or(ToricError::BadRayIndex(ray))
    }

    /// `D_rho . V(wall)`.
    pub fn intersection(&self, ray: usize, wall: &Wall) -> i64 {
        let k = self.wall_of[&(wall.a, wall.b)];
        self.wall_ints[k][ray]
    }

    fn curve_from_ints(&self, ints: &[i64]) -> ToricCurveClass {
        let coords: Vec<i64> = self.basis.iter().map(|&b| ints[b]).collect();
        ToricCurveClass::new(RatVector::from_ints(&coords))
    }

    pub fn wall_curve_class(&self, wall: &Wall) -> ToricCurveClass {
        let k = self.wall_of[&(wall.a, wall.b)];
        self.curve_from_ints(&self.wall_ints[k])
    }

    /// Classes of all prime invariant divisors and of all wall curves.
    pub fn eff_and_ne_generators(&self) -> (Vec<ToricDivisorClass>, Vec<ToricCurveClass>) {
        let eff = self.ray_classes.iter().cloned().map(ToricDivisorClass::new).collect();
        let ne = self.walls.iter().map(|w| self.wall_curve_class(w)).collect();
        (eff, ne)
    }

    /// Two integer vectors `m` with `<m, u_i> = -1`: one from the extended
    /// Euclidean algorithm and a second one shifted by a lattice vector
    /// orthogonal to `u_i`.
    pub fn aux_vectors(&self, i: usize) -> ([i64; 3], [i64; 3]) {
        let u = self.fan.rays[i];
        let first = euclid(&u[..2]);
        let ab = u[0] * first[0] + u[1] * first[1];
        let last = euclid(&[ab, u[2]]);
        let mut m = [-first[0] * last[0], -first[1] * last[0], -last[1]];
        if dot3(m, u) != -1 {
            m = m.map(|x| -x);
        }
        debug_assert_eq!(dot3(m, u), -1);
        let shift = (0..3)
            .map(|j| {
                let mut e = [0; 3];
                e[j] = 1;
                cross(u, e)
            })
            .find(|k| *k != [0, 0, 0])
            .expect("u_i is nonzero");
        let m2 = [m[0] + shift[0], m[1] + shift[1], m[2] + shift[2]];
        (m, m2)
    }

    fn transverse_ints(&self, i: usize, j: usize) -> Option<&[i64]> {
        self.wall_of.get(&pair(i, j)).map(|&k| self.wall_ints[k].as_slice())
    }

    fn prime_ints(&self, i: usize, j: usize, m: [i64; 3]) -> Vec<i64> {
        let n = self.fan.rays.len();
        let mut out = vec![0i64; n];
        if i != j {
            if let Some(ints) = self.transverse_ints(i, j) {
                out.copy_from_slice(ints);
            }
            return out;
        }
        for (rho, &u) in self.fan.rays.iter().enumerate() {
            let c = dot3(m, u);
            if rho == i || c == 0 {
                continue;
            }
            if let Some(ints) = self.transverse_ints(i, rho) {
                for (o, x) in out.iter_mut().zip(ints) {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn prime_product(&self, i: usize, j: usize) -> ToricCurveClass {
        self.prime_product_with(i, j, self.aux_vectors(i).0)
    }

    /// As [`prime_product`](Self::prime_product), with the auxiliary vector
    /// `m` used for self-intersections given explicitly.
    pub fn prime_product_with(&self, i: usize, j: usize, m: [i64; 3]) -> ToricCurveClass {
        self.curve_from_ints(&self.prime_ints(i, j, m))
    }

    /// Product of two basis divisors, by basis position.
    pub fn basis_product(&self, a: usize, b: usize) -> ToricCurveClass {
        self.prime_product(self.basis[a], self.basis[b])
    }

    pub fn class_product(&self, x: &ToricDivisorClass, y: &ToricDivisorClass) -> ToricCurveClass {
        let k = self.rank();
        let mut out = RatVector::zeros(k);
        for a in 0..k {
            if x.coords[a].is_zero() {
                continue;
            }
            for b in 0..k {
                if y.coords[b].is_zero() {
                    continue;
                }
                let p = self.basis_product(a, b);
                out.add_scaled(&(&x.coords[a] * &y.coords[b]), &p.coords);
            }
        }
        ToricCurveClass::new(out)
    }

    /// Extremal rays of the cone generated by the prime invariant divisors.
    pub fn eff_rays(&self) -> Result<Vec<Ray>, ToricError> {
        Ok(cones::minimal_generators(self.rank(), &self.ray_classes)?)
    }

    /// Extremal rays of the cone generated by the wall curves.
    pub fn ne_rays(&self) -> Result<Vec<Ray>, ToricError> {
        let ne: Vec<RatVector> = self.eff_and_ne_generators().1.into_iter().map(|c| c.coords).collect();
        Ok(cones::minimal_generators(self.rank(), &ne)?)
    }
}

/// Coefficients `x` with `x . v = gcd(v)` (for two entries).
fn euclid(v: &[i64]) -> [i64; 2] {
    let e = v[0].extended_gcd(&v[1]);
    if e.gcd < 0 {
        [-e.x, -e.y]
    } else {
        [e.x, e.y]
    }
}

/// Intersection numbers of every prime divisor with the wall curve, from the
/// relation `u_c + u_c2 + alpha u_a + beta u_b = 0`.
fn wall_intersections(fan: &Fan, w: &Wall) -> Vec<i64> {
    let [ua, ub, uc, ud] = [w.a, w.b, w.c, w.c2].map(|i| fan.rays[i]);
    // Cramer's rule for u_c2 = p u_a + q u_b + s u_c, where s = -1.
    let det = det3(ua, ub, uc);
    let p = det3(ud, ub, uc) / det;
    let q = det3(ua, ud, uc) / det;
    let mut out = vec![0i64; fan.rays.len()];
    out[w.c] = 1;
    out[w.c2] = 1;
    out[w.a] = -p;
    out[w.b] = -q;
    out
}

/// Coordinates of every prime divisor in the basis, by elimination of the
/// non-basis classes through the three relations.
fn reduce_to_basis(fan: &Fan, basis: &[usize]) -> Result<Vec<RatVector>, ToricError> {
    let n = fan.rays.len();
    let basis_set: BTreeSet<usize> = basis.iter().copied().collect();
    let others: Vec<usize> = (0..n).filter(|i| !basis_set.contains(i)).collect();
    let rel = fan.relations();
    // Columns of the relation matrix on non-basis rays, as rows of its transpose.
    let rows: Vec<Vec<BigInt>> = others
        .iter()
        .map(|&o| rel.iter().map(|r| BigInt::from(r[o])).collect())
        .collect();
    let m = RatMatrix::from_int_rows(3, &rows).expect("three columns");
    let mut out = Vec::with_capacity(n);
    for rho in 0..n {
        if let Some(pos) = basis.iter().position(|&b| b == rho) {
            out.push(RatVector::unit(basis.len(), pos));
            continue;
        }
        // lambda . R restricted to the non-basis columns equals e_rho there.
        let target = RatVector::from_ints(&others.iter().map(|&o| i64::from(o == rho)).collect::<Vec<_>>());
        let lambda = m.solve(&target).ok_or_else(|| basis_error(basis))?;
        let coords: Vec<BigRational> = basis
            .iter()
            .map(|&b| {
                let mut s = BigRational::zero();
                for (l, r) in lambda.entries().iter().zip(&rel) {
                    s -= l * BigRational::from_integer(BigInt::from(r[b]));
                }
                s
            })
            .collect();
        out.push(RatVector::new(coords));
    }
    Ok(out)
}
