//! Pointed polyhedral cones over the rationals and their dual descriptions.
//!
//! Cones are stored with integer data only: rays and inequality normals are
//! primitive integer vectors, so two representations of the same ray compare
//! equal coordinatewise. Conversion between the inequality (H) and generator
//! (V) descriptions goes through an incremental double-description engine in
//! [`dd`]; [`oracle`] holds a brute-force enumeration used to check it.

mod dd;
pub mod io;
pub mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::{dot_bigints, int_rank, primitive_bigints, RatMatrix, RatVector};

pub use dd::rays_from_halfspaces;
pub use oracle::brute_force_rays;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("the zero vector does not define a ray")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone is not pointed (lineality space of dimension {})", lineality.len())]
    NotPointed { lineality: Vec<RatVector> },
    #[error("no generators given")]
    EmptyInput,
    #[error("generators span a space of dimension {rank}, expected {dim}")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("system too large for brute-force enumeration ({halfspaces} halfspaces in dimension {dim})")]
    TooLarge { dim: usize, halfspaces: usize },
}

fn normalize(coords: Vec<BigInt>) -> Result<Vec<BigInt>, ConeError> {
    if coords.iter().all(Zero::is_zero) {
        return Err(ConeError::ZeroVector);
    }
    Ok(primitive_bigints(coords))
}

fn to_bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A ray, represented by its primitive integer generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray(Vec<BigInt>);

impl Ray {
    /// Normalizes any nonzero integer vector to its primitive positive multiple.
    pub fn new(coords: Vec<BigInt>) -> Result<Ray, ConeError> {
        normalize(coords).map(Ray)
    }

    pub fn from_ints(coords: &[i64]) -> Result<Ray, ConeError> {
        Ray::new(to_bigints(coords))
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_rat(&self) -> RatVector {
        RatVector::from_bigints(&self.0)
    }

    pub fn pairing(&self, other: &[BigInt]) -> BigInt {
        dot_bigints(&self.0, other)
    }

    /// Coordinates as machine integers, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ints(f, &self.0)
    }
}

fn fmt_ints(f: &mut fmt::Formatter<'_>, v: &[BigInt]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// The homogeneous halfspace `<normal, x> >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace(Vec<BigInt>);

impl Halfspace {
    pub fn new(normal: Vec<BigInt>) -> Result<Halfspace, ConeError> {
        normalize(normal).map(Halfspace)
    }

    pub fn from_ints(normal: &[i64]) -> Result<Halfspace, ConeError> {
        Halfspace::new(to_bigints(normal))
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        dot_bigints(&self.0, x)
    }

    pub fn eval_rat(&self, x: &RatVector) -> num_rational::BigRational {
        x.dot_ints(&self.0)
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        !self.eval_rat(x).is_negative()
    }

    pub fn as_ray(&self) -> Ray {
        Ray(self.0.clone())
    }
}

impl From<&Ray> for Halfspace {
    fn from(r: &Ray) -> Halfspace {
        Halfspace(r.0.clone())
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ints(f, &self.0)?;
        write!(f, " . x >= 0")
    }
}

/// Canonical representative of the ray through `v` under positive scaling.
pub fn primitive(v: &RatVector) -> Result<Ray, ConeError> {
    v.primitive_ints().map(Ray).ok_or(ConeError::ZeroVector)
}

/// Holds iff both vectors are nonzero and one is a positive multiple of the
/// other.
pub fn is_positive_multiple(u: &RatVector, v: &RatVector) -> bool {
    match (primitive(u), primitive(v)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

fn check_dims<'a>(dim: usize, vs: impl IntoIterator<Item = &'a [BigInt]>) -> Result<(), ConeError> {
    for v in vs {
        if v.len() != dim {
            return Err(ConeError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
    }
    Ok(())
}

fn span_rank(dim: usize, vs: &[&[BigInt]]) -> usize {
    int_rank(vs, dim)
}

/// Minimal inequality description of the cone generated by `rays`.
///
/// When the rays do not span the ambient space the result also contains both
/// orientations of a basis of the equations cutting out their span.
pub fn halfspaces_from_rays(dim: usize, rays: &[Ray]) -> Result<Vec<Halfspace>, ConeError> {
    if rays.is_empty() {
        return Err(ConeError::EmptyInput);
    }
    check_dims(dim, rays.iter().map(|r| r.coords()))?;
    let rows: Vec<Vec<BigInt>> = rays.iter().map(|r| r.0.clone()).collect();
    let matrix = RatMatrix::from_int_rows(dim, &rows).expect("dimensions checked");
    let equations = matrix.kernel_basis();
    let mut out = BTreeSet::new();
    if equations.is_empty() {
        let polar: Vec<Halfspace> = rays.iter().map(Halfspace::from).collect();
        for r in rays_from_halfspaces(dim, &polar)? {
            out.insert(Halfspace(r.0));
        }
    } else {
        // Project onto pivot coordinates, where the projection is injective on
        // the span of the rays, and lift the facets back by zero extension.
        let pivots = pivot_columns(&matrix);
        let k = pivots.len();
        let projected: Vec<Halfspace> = rays
            .iter()
            .map(|r| Halfspace(primitive_bigints(pivots.iter().map(|&c| r.0[c].clone()).collect())))
            .collect();
        for facet in rays_from_halfspaces(k, &projected)? {
            let mut normal = vec![BigInt::zero(); dim];
            for (&c, x) in pivots.iter().zip(facet.0) {
                normal[c] = x;
            }
            out.insert(Halfspace::new(normal)?);
        }
        for eq in equations {
            let ints = eq.primitive_ints().expect("kernel basis vectors are nonzero");
            let neg: Vec<BigInt> = ints.iter().map(|x| -x).collect();
            out.insert(Halfspace(ints));
            out.insert(Halfspace(neg));
        }
    }
    Ok(out.into_iter().collect())
}

fn pivot_columns(m: &RatMatrix) -> Vec<usize> {
    // Columns whose restriction keeps the row space rank, chosen greedily.
    let t = m.transpose();
    let mut chosen: Vec<usize> = Vec::new();
    let mut kept: Vec<RatVector> = Vec::new();
    let target = m.rank();
    for (c, col) in t.rows().iter().enumerate() {
        kept.push(col.clone());
        let rank = RatMatrix::from_rows(m.nrows(), kept.clone())
            .expect("uniform length")
            .rank();
        if rank == chosen.len() + 1 {
            chosen.push(c);
            if chosen.len() == target {
                break;
            }
        } else {
            kept.pop();
        }
    }
    chosen
}

/// Extremal rays of the dual cone `{y : <y, r> >= 0 for all r}`.
pub fn dual_rays(dim: usize, rays: &[Ray]) -> Result<Vec<Ray>, ConeError> {
    check_dims(dim, rays.iter().map(|r| r.coords()))?;
    let refs: Vec<&[BigInt]> = rays.iter().map(|r| r.coords()).collect();
    let rank = span_rank(dim, &refs);
    if rank != dim {
        return Err(ConeError::NotFullDimensional { rank, dim });
    }
    let hs: Vec<Halfspace> = rays.iter().map(Halfspace::from).collect();
    rays_from_halfspaces(dim, &hs)
}

/// Reduces a generating set to the extremal rays of the cone it generates.
///
/// Zero vectors are dropped; duplicates and positive multiples collapse.
pub fn minimal_generators(dim: usize, vectors: &[RatVector]) -> Result<Vec<Ray>, ConeError> {
    let mut set = BTreeSet::new();
    for v in vectors {
        if v.dim() != dim {
            return Err(ConeError::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
        if let Ok(r) = primitive(v) {
            set.insert(r);
        }
    }
    let rays: Vec<Ray> = set.into_iter().collect();
    if rays.len() <= 1 {
        return Ok(rays);
    }
    let hs = halfspaces_from_rays(dim, &rays)?;
    Ok(rays
        .into_iter()
        .filter(|r| tight_rank(dim, &hs, r.coords()) + 1 == dim)
        .collect())
}

/// The members of `halfspaces` that support facets of the full-dimensional
/// pointed cone they cut out, in sorted order.
pub fn facets(dim: usize, halfspaces: &[Halfspace]) -> Result<Vec<Halfspace>, ConeError> {
    let rays = rays_from_halfspaces(dim, halfspaces)?;
    facets_with_rays(dim, halfspaces, &rays)
}

/// As [`facets`], with the extremal rays of the cone already known.
pub fn facets_with_rays(dim: usize, halfspaces: &[Halfspace], rays: &[Ray]) -> Result<Vec<Halfspace>, ConeError> {
    let refs: Vec<&[BigInt]> = rays.iter().map(|r| r.coords()).collect();
    let rank = span_rank(dim, &refs);
    if rank != dim {
        return Err(ConeError::NotFullDimensional { rank, dim });
    }
    let set: BTreeSet<Halfspace> = halfspaces
        .iter()
        .filter(|h| {
            let tight: Vec<&[BigInt]> = refs.iter().copied().filter(|r| h.eval(r).is_zero()).collect();
            span_rank(dim, &tight) + 1 == dim
        })
        .cloned()
        .collect();
    Ok(set.into_iter().collect())
}

/// Rank of the normals of the members of `hs` that vanish at `x`.
pub fn tight_rank(dim: usize, hs: &[Halfspace], x: &[BigInt]) -> usize {
    let tight: Vec<&[BigInt]> = hs.iter().filter(|h| h.eval(x).is_zero()).map(|h| h.normal()).collect();
    int_rank(&tight, dim)
}

/// A pointed cone, held by inequalities, by extremal rays, or both. A missing
/// description is computed on first use.
#[derive(Debug)]
pub struct Cone {
    dim: usize,
    hrep: OnceLock<Vec<Halfspace>>,
    vrep: OnceLock<Vec<Ray>>,
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        let hrep = OnceLock::new();
        if let Some(h) = self.hrep.get() {
            let _ = hrep.set(h.clone());
        }
        let vrep = OnceLock::new();
        if let Some(v) = self.vrep.get() {
            let _ = vrep.set(v.clone());
        }
        Cone {
            dim: self.dim,
            hrep,
            vrep,
        }
    }
}

impl Cone {
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Cone, ConeError> {
        check_dims(dim, halfspaces.iter().map(|h| h.normal()))?;
        let cone = Cone {
            dim,
            hrep: OnceLock::new(),
            vrep: OnceLock::new(),
        };
        let _ = cone.hrep.set(halfspaces);
        Ok(cone)
    }

    pub fn from_rays(dim: usize, rays: Vec<Ray>) -> Result<Cone, ConeError> {
        check_dims(dim, rays.iter().map(|r| r.coords()))?;
        let cone = Cone {
            dim,
            hrep: OnceLock::new(),
            vrep: OnceLock::new(),
        };
        let _ = cone.vrep.set(rays);
        Ok(cone)
    }

    /// Both descriptions supplied by the caller; they are trusted to agree.
    pub fn from_both(dim: usize, halfspaces: Vec<Halfspace>, rays: Vec<Ray>) -> Result<Cone, ConeError> {
        let cone = Cone::from_halfspaces(dim, halfspaces)?;
        check_dims(dim, rays.iter().map(|r| r.coords()))?;
        let _ = cone.vrep.set(rays);
        Ok(cone)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> Result<&[Halfspace], ConeError> {
        if let Some(h) = self.hrep.get() {
            return Ok(h);
        }
        let rays = self.vrep.get().expect("cone has at least one description");
        let h = if rays.is_empty() {
            // The zero cone.
            (0..self.dim)
                .flat_map(|i| {
                    let mut e = vec![0i64; self.dim];
                    e[i] = 1;
                    let pos = Halfspace::from_ints(&e).unwrap();
                    e[i] = -1;
                    [pos, Halfspace::from_ints(&e).unwrap()]
                })
                .collect()
        } else {
            halfspaces_from_rays(self.dim, rays)?
        };
        let _ = self.hrep.set(h);
        Ok(self.hrep.get().unwrap())
    }

    pub fn rays(&self) -> Result<&[Ray], ConeError> {
        if let Some(v) = self.vrep.get() {
            return Ok(v);
        }
        let h = self.hrep.get().expect("cone has at least one description");
        let v = rays_from_halfspaces(self.dim, h)?;
        let _ = self.vrep.set(v);
        Ok(self.vrep.get().unwrap())
    }

    pub fn is_member(&self, x: &RatVector) -> Result<bool, ConeError> {
        is_member(x, self)
    }

    pub fn is_extremal(&self, r: &Ray) -> Result<bool, ConeError> {
        is_extremal(self, r)
    }
}

pub fn is_member(x: &RatVector, cone: &Cone) -> Result<bool, ConeError> {
    if x.dim() != cone.dim {
        return Err(ConeError::DimensionMismatch {
            expected: cone.dim,
            found: x.dim(),
        });
    }
    Ok(cone.halfspaces()?.iter().all(|h| h.contains(x)))
}

/// `r` lies in the cone and its tight constraints have rank `dim - 1`.
pub fn is_extremal(cone: &Cone, r: &Ray) -> Result<bool, ConeError> {
    if !is_member(&r.to_rat(), cone)? {
        return Ok(false);
    }
    Ok(tight_rank(cone.dim, cone.halfspaces()?, r.coords()) + 1 == cone.dim)
}
