//! Comparison of the cone generated by pairwise products of nef divisors
//! with the movable cone of curves.
//!
//! Products of extremal nef rays are canonicalized to primitive vectors and
//! kept in a sorted set. An extremal movable ray belongs to the product cone
//! iff it is a positive multiple of one of these products, so the extremal
//! movable rays missing from the set (`NotEq`) decide the comparison.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::io;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::cones::{self, ConeError, Halfspace, Ray};
use crate::kapranov::{self, KapranovSpace};
use crate::linalg::RatVector;
use crate::toric::ToricVariety;

/// Above this many distinct products the full facet description of the
/// product cone is not computed; see [`CiRays::Partial`].
pub const DEFAULT_HULL_LIMIT: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompareError {
    #[error("no nef rays given")]
    EmptyNef,
    #[error("product generator {generator} violates movable inequality {halfspace}")]
    CiNotInMov { generator: Ray, halfspace: Halfspace },
    #[error("{0} is not an extremal ray of the movable cone")]
    NotExtremal(Ray),
    #[error("no facet of the product cone separates {0}")]
    NoCertificate(Ray),
    #[error("expected a report in dimension {expected}, found {found}")]
    WrongVariety { expected: usize, found: usize },
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Kapranov(#[from] kapranov::KapranovError),
}

/// A symmetric bilinear product `N^1 x N^1 -> N_1`, both sides written in
/// coordinates with respect to fixed bases.
pub trait ProductOracle: Sync {
    fn dim(&self) -> usize;

    /// Product of basis divisors `a` and `b`.
    fn basis_product(&self, a: usize, b: usize) -> RatVector;

    fn product(&self, x: &RatVector, y: &RatVector) -> RatVector {
        let n = self.dim();
        let mut out = RatVector::zeros(n);
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() {
                    continue;
                }
                out.add_scaled(&(&x[a] * &y[b]), &self.basis_product(a, b));
            }
        }
        out
    }
}

impl ProductOracle for KapranovSpace {
    fn dim(&self) -> usize {
        KapranovSpace::dim(self)
    }

    fn basis_product(&self, a: usize, b: usize) -> RatVector {
        let labels = self.labels();
        kapranov::basis_product(*self, labels[a], labels[b]).coords().clone()
    }
}

impl ProductOracle for ToricVariety {
    fn dim(&self) -> usize {
        self.rank()
    }

    fn basis_product(&self, a: usize, b: usize) -> RatVector {
        ToricVariety::basis_product(self, a, b).coords().clone()
    }
}

/// Integer structure constants `t[a][b][c]` of an oracle, for bulk products.
struct ProductTable {
    dim: usize,
    t: Vec<i64>,
}

impl ProductTable {
    fn new(oracle: &dyn ProductOracle) -> Option<ProductTable> {
        let n = oracle.dim();
        let mut t = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for x in oracle.basis_product(a, b).entries() {
                    if !x.is_integer() {
                        return None;
                    }
                    t.push(x.to_integer().to_i64()?);
                }
            }
        }
        Some(ProductTable { dim: n, t })
    }

    /// `sum_a x_a t[a]`, an `n x n` matrix.
    fn partial(&self, x: &[i64]) -> Option<Vec<i128>> {
        let n = self.dim;
        let mut l = vec![0i128; n * n];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (acc, &t) in l.iter_mut().zip(&self.t[a * n * n..(a + 1) * n * n]) {
                *acc = acc.checked_add(i128::from(xa).checked_mul(i128::from(t))?)?;
            }
        }
        Some(l)
    }

    fn finish(&self, l: &[i128], y: &[i64]) -> Option<Vec<i128>> {
        let n = self.dim;
        let mut out = vec![0i128; n];
        for (b, &yb) in y.iter().enumerate() {
            if yb == 0 {
                continue;
            }
            for (acc, &v) in out.iter_mut().zip(&l[b * n..(b + 1) * n]) {
                *acc = acc.checked_add(i128::from(yb).checked_mul(v)?)?;
            }
        }
        Some(out)
    }
}

enum Product {
    Zero,
    Small(Box<[i64]>),
    Large(Ray),
}

fn canonical_i128(mut v: Vec<i128>) -> Product {
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    if g == 0 {
        return Product::Zero;
    }
    for x in v.iter_mut() {
        *x /= g;
    }
    match v.iter().map(|&x| i64::try_from(x).ok()).collect::<Option<Vec<i64>>>() {
        Some(small) => Product::Small(small.into_boxed_slice()),
        None => Product::Large(Ray::new(v.into_iter().map(BigInt::from).collect()).expect("nonzero")),
    }
}

fn canonical_rat(v: &RatVector) -> Product {
    match cones::primitive(v) {
        Err(_) => Product::Zero,
        Ok(r) => match r.to_i64s() {
            Some(s) => Product::Small(s.into_boxed_slice()),
            None => Product::Large(r),
        },
    }
}

/// A sorted set of primitive integer vectors. Vectors fitting in `i64` are
/// stored unboxed from big integers; the rest are kept as [`Ray`]s.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    dim: usize,
    small: Vec<Box<[i64]>>,
    large: Vec<Ray>,
}

fn ray_of(v: &[i64]) -> Ray {
    Ray::from_ints(v).expect("stored generators are nonzero and primitive")
}

impl GeneratorSet {
    pub fn from_rays(dim: usize, rays: impl IntoIterator<Item = Ray>) -> GeneratorSet {
        let mut small = HashSet::new();
        let mut large = BTreeSet::new();
        for r in rays {
            match r.to_i64s() {
                Some(s) => {
                    small.insert(s.into_boxed_slice());
                }
                None => {
                    large.insert(r);
                }
            }
        }
        Self::assemble(dim, small, large)
    }

    fn assemble(dim: usize, small: HashSet<Box<[i64]>>, large: BTreeSet<Ray>) -> GeneratorSet {
        let mut small: Vec<Box<[i64]>> = small.into_iter().collect();
        small.sort_unstable();
        GeneratorSet {
            dim,
            small,
            large: large.into_iter().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.small.len() + self.large.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, r: &Ray) -> bool {
        match r.to_i64s() {
            Some(s) => self.small.binary_search_by(|x| x.as_ref().cmp(s.as_slice())).is_ok(),
            None => self.large.binary_search(r).is_ok(),
        }
    }

    /// All members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Ray> + '_ {
        let mut small = self.small.iter().map(|s| ray_of(s)).peekable();
        let mut large = self.large.iter().cloned().peekable();
        std::iter::from_fn(move || match (small.peek(), large.peek()) {
            (Some(a), Some(b)) if a <= b => small.next(),
            (Some(_), Some(_)) => large.next(),
            (Some(_), None) => small.next(),
            (None, _) => large.next(),
        })
    }

    pub fn to_vec(&self) -> Vec<Ray> {
        self.iter().collect()
    }

    /// Largest absolute value of any coordinate.
    pub fn max_abs(&self) -> BigInt {
        let small = self
            .small
            .iter()
            .flat_map(|s| s.iter())
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0);
        let large = self.large.iter().flat_map(|r| r.coords()).map(|x| x.abs()).max();
        BigInt::from(small).max(large.unwrap_or_default())
    }

    /// First member (in order) with `<normal, g> < 0`.
    pub fn first_violator(&self, normal: &[BigInt]) -> Option<Ray> {
        let fast: Option<Vec<i64>> = normal.iter().map(|x| x.to_i64()).collect();
        let small = match fast {
            Some(h) => self
                .small
                .par_iter()
                .find_first(|g| {
                    let s: i128 = h
                        .iter()
                        .zip(g.iter())
                        .map(|(&a, &b)| i128::from(a) * i128::from(b))
                        .sum();
                    s < 0
                })
                .map(|g| ray_of(g)),
            None => self
                .small
                .par_iter()
                .map(|g| ray_of(g))
                .find_first(|g| g.pairing(normal).is_negative()),
        };
        let large = self.large.iter().find(|g| g.pairing(normal).is_negative()).cloned();
        match (small, large) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Writes the set in the ray file format.
    pub fn write_rays(&self, mut out: impl io::Write, header: Option<&str>) -> io::Result<()> {
        if let Some(h) = header {
            for l in h.lines() {
                writeln!(out, "# {l}")?;
            }
        }
        writeln!(out, "DIM {}", self.dim)?;
        let mut line = String::new();
        for r in self.iter() {
            line.clear();
            for (i, x) in r.coords().iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{x}");
            }
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

/// Distinct nonzero pairwise products of the nef rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefPower {
    pub generators: GeneratorSet,
    /// Number of pairs `i <= j` considered.
    pub pairs: usize,
    /// Pairs whose product is zero.
    pub zero_products: usize,
}

fn sorted_unique(rays: &[Ray]) -> Vec<Ray> {
    let set: BTreeSet<Ray> = rays.iter().cloned().collect();
    set.into_iter().collect()
}

/// All products `eta_i . eta_j`, `i <= j`, of the distinct nef rays,
/// canonicalized, with zeros dropped and counted.
pub fn nef_power_generators(nef_rays: &[Ray], oracle: &dyn ProductOracle) -> Result<NefPower, CompareError> {
    let nef = sorted_unique(nef_rays);
    if nef.is_empty() {
        return Err(CompareError::EmptyNef);
    }
    let dim = oracle.dim();
    for r in &nef {
        if r.dim() != dim {
            return Err(ConeError::DimensionMismatch {
                expected: dim,
                found: r.dim(),
            }
            .into());
        }
    }
    let table = ProductTable::new(oracle);
    let ints: Vec<Option<Vec<i64>>> = nef.iter().map(|r| r.to_i64s()).collect();
    let rats: Vec<RatVector> = nef.iter().map(|r| r.to_rat()).collect();
    let row = |i: usize| -> Vec<Product> {
        let partial = match (&table, &ints[i]) {
            (Some(t), Some(x)) => t.partial(x),
            _ => None,
        };
        (i..nef.len())
            .map(|j| {
                let fast = match (&table, &partial, &ints[j]) {
                    (Some(t), Some(l), Some(y)) => t.finish(l, y),
                    _ => None,
                };
                match fast {
                    Some(v) => canonical_i128(v),
                    None => canonical_rat(&oracle.product(&rats[i], &rats[j])),
                }
            })
            .collect()
    };

    let mut small = HashSet::new();
    let mut large = BTreeSet::new();
    let mut zero_products = 0;
    let n = nef.len();
    // Bounded batches keep the transient product lists small.
    const BATCH: usize = 64;
    for start in (0..n).step_by(BATCH) {
        let rows: Vec<Vec<Product>> = (start..(start + BATCH).min(n)).into_par_iter().map(row).collect();
        for p in rows.into_iter().flatten() {
            match p {
                Product::Zero => zero_products += 1,
                Product::Small(s) => {
                    small.insert(s);
                }
                Product::Large(r) => {
                    large.insert(r);
                }
            }
        }
    }
    Ok(NefPower {
        generators: GeneratorSet::assemble(dim, small, large),
        pairs: n * (n + 1) / 2,
        zero_products,
    })
}

/// Every product `eta_i . eta_j`, `i <= j`, in input order, zeros included.
pub fn raw_products(nef_rays: &[Ray], oracle: &dyn ProductOracle) -> Vec<RatVector> {
    let rats: Vec<RatVector> = nef_rays.iter().map(|r| r.to_rat()).collect();
    let mut out = Vec::new();
    for i in 0..rats.len() {
        for j in i..rats.len() {
            out.push(oracle.product(&rats[i], &rats[j]));
        }
    }
    out
}

/// Movable rays that are not positive multiples of any generator.
pub fn not_eq(mov_rays: &[Ray], generators: &GeneratorSet) -> Vec<Ray> {
    let mov = sorted_unique(mov_rays);
    mov.into_par_iter().filter(|g| !generators.contains(g)).collect()
}

/// The same list computed by rescanning all products for every movable ray.
pub fn not_eq_by_rescan(mov_rays: &[Ray], products: &[RatVector]) -> Vec<Ray> {
    let mut out = BTreeSet::new();
    for gamma in mov_rays {
        let g = gamma.to_rat();
        if !products.iter().any(|p| cones::is_positive_multiple(p, &g)) {
            out.insert(gamma.clone());
        }
    }
    out.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Strict,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Strict => "strict",
        }
    }
}

/// Extremal rays of the product cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CiRays {
    /// The full list, from a facet description of the product cone.
    Complete(Vec<Ray>),
    /// Only the products that are extremal movable rays. Each of them is
    /// extremal in the product cone, since that cone lies in the movable one.
    Partial(Vec<Ray>),
}

impl CiRays {
    pub fn rays(&self) -> &[Ray] {
        match self {
            CiRays::Complete(r) | CiRays::Partial(r) => r,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, CiRays::Complete(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// A facet of the product cone.
    Facet,
    /// `N h0 - w`, where `h0` is the sum of the movable inequalities tight at
    /// the ray (zero on the movable cone only along the ray), `w` a signed unit
    /// vector positive on the ray and `N` exceeds every generator coordinate.
    Exposing,
}

/// `<halfspace, g> >= 0` for every product generator `g`, while
/// `<halfspace, ray> < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub ray: Ray,
    pub halfspace: Halfspace,
    pub kind: CertificateKind,
}

impl Certificate {
    /// Checks both defining conditions against the generators.
    pub fn holds(&self, generators: &GeneratorSet) -> bool {
        self.halfspace.eval(self.ray.coords()).is_negative()
            && generators.first_violator(self.halfspace.normal()).is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub variety: String,
    pub dim: usize,
    pub nef_rays: Vec<Ray>,
    pub mov_rays: Vec<Ray>,
    pub generators: GeneratorSet,
    pub pairs: usize,
    pub zero_products: usize,
    pub not_eq: Vec<Ray>,
    pub verdict: Verdict,
    pub ci_rays: CiRays,
    /// Facets of the product cone, when computed.
    pub ci_facets: Option<Vec<Halfspace>>,
    pub common_rays: Vec<Ray>,
    pub certificates: Vec<Certificate>,
    /// Named boolean checks attached by callers.
    pub checks: Vec<(String, bool)>,
}

pub struct CompareInput<'a> {
    pub variety: String,
    pub nef_rays: &'a [Ray],
    pub mov_rays: &'a [Ray],
    /// Inequalities cutting out the movable cone.
    pub mov_hrep: &'a [Halfspace],
    pub oracle: &'a dyn ProductOracle,
    pub hull_limit: usize,
}

/// Runs the comparison: product generators, `NotEq`, verdict, extremal rays
/// of the product cone and a separating halfspace for every `NotEq` ray.
pub fn verdict_and_certificates(input: &CompareInput<'_>) -> Result<CompareReport, CompareError> {
    let dim = input.oracle.dim();
    let nef_rays = sorted_unique(input.nef_rays);
    let mov_rays = sorted_unique(input.mov_rays);
    let power = nef_power_generators(&nef_rays, input.oracle)?;
    let generators = power.generators;

    for h in input.mov_hrep {
        if let Some(g) = generators.first_violator(h.normal()) {
            return Err(CompareError::CiNotInMov {
                generator: g,
                halfspace: h.clone(),
            });
        }
    }

    let not_eq = not_eq(&mov_rays, &generators);
    let common_rays: Vec<Ray> = mov_rays.iter().filter(|g| generators.contains(g)).cloned().collect();
    let verdict = if not_eq.is_empty() {
        Verdict::Equal
    } else {
        Verdict::Strict
    };

    let (ci_rays, ci_facets, certificates) = if generators.len() <= input.hull_limit {
        let gens = generators.to_vec();
        let facets = cones::halfspaces_from_rays(dim, &gens)?;
        let rays: Vec<Ray> = gens
            .into_iter()
            .filter(|g| cones::tight_rank(dim, &facets, g.coords()) + 1 == dim)
            .collect();
        let certs = not_eq
            .iter()
            .map(|gamma| {
                facets
                    .iter()
                    .find(|h| h.eval(gamma.coords()).is_negative())
                    .map(|h| Certificate {
                        ray: gamma.clone(),
                        halfspace: h.clone(),
                        kind: CertificateKind::Facet,
                    })
                    .ok_or_else(|| CompareError::NoCertificate(gamma.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        (CiRays::Complete(rays), Some(facets), certs)
    } else {
        let bound = generators.max_abs() + 1;
        let certs = not_eq
            .par_iter()
            .map(|gamma| exposing_certificate(dim, input.mov_hrep, gamma, &bound))
            .collect::<Result<Vec<_>, _>>()?;
        (CiRays::Partial(common_rays.clone()), None, certs)
    };

    Ok(CompareReport {
        variety: input.variety.clone(),
        dim,
        nef_rays,
        mov_rays,
        generators,
        pairs: power.pairs,
        zero_products: power.zero_products,
        not_eq,
        verdict,
        ci_rays,
        ci_facets,
        common_rays,
        certificates,
        checks: Vec::new(),
    })
}

fn exposing_certificate(
    dim: usize,
    mov_hrep: &[Halfspace],
    gamma: &Ray,
    bound: &BigInt,
) -> Result<Certificate, CompareError> {
    let tight: Vec<&Halfspace> = mov_hrep.iter().filter(|h| h.eval(gamma.coords()).is_zero()).collect();
    if cones::tight_rank(dim, mov_hrep, gamma.coords()) + 1 != dim {
        return Err(CompareError::NotExtremal(gamma.clone()));
    }
    let mut normal = vec![BigInt::zero(); dim];
    for h in tight {
        for (n, x) in normal.iter_mut().zip(h.normal()) {
            *n += x;
        }
    }
    for n in normal.iter_mut() {
        *n *= bound;
    }
    let (k, x) = gamma
        .coords()
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .expect("rays are nonzero");
    normal[k] -= x.signum();
    Ok(Certificate {
        ray: gamma.clone(),
        halfspace: Halfspace::new(normal)?,
        kind: CertificateKind::Exposing,
    })
}

/// Every ray pairs strictly negatively with the canonical class of
/// M_{0,6}-bar.
pub fn k_negative(rays: &[Ray]) -> bool {
    let k = kapranov::canonical_class_m06();
    rays.iter()
        .all(|r| r.dim() == k.coords().dim() && k.coords().dot_ints(r.coords()) < BigRational::zero())
}

pub fn k_negativity_check(report: &CompareReport) -> Result<bool, CompareError> {
    let expected = KapranovSpace::new(5).expect("r = 5 is valid").dim();
    if report.dim != expected {
        return Err(CompareError::WrongVariety {
            expected,
            found: report.dim,
        });
    }
    Ok(k_negative(&report.not_eq))
}

/// `6H^ + 2(E1^ + .. + E4^) + E15^ + E25^ + E35^` on M_{0,6}-bar.
pub fn shared_ray() -> Ray {
    use kapranov::BasisLabel::*;
    let space = KapranovSpace::new(5).expect("r = 5 is valid");
    let c = space.curve(&[
        (H, 6),
        (E(1), 2),
        (E(2), 2),
        (E(3), 2),
        (E(4), 2),
        (E2(1, 5), 1),
        (E2(2, 5), 1),
        (E2(3, 5), 1),
    ]);
    cones::primitive(c.coords()).expect("nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedRayCheck {
    pub extremal_in_mov: bool,
    pub in_ci: bool,
    pub not_pullback: bool,
}

impl SharedRayCheck {
    pub fn all(&self) -> bool {
        self.extremal_in_mov && self.in_ci && self.not_pullback
    }
}

fn extremal_in(dim: usize, hrep: &[Halfspace], r: &Ray) -> bool {
    hrep.iter().all(|h| !h.eval(r.coords()).is_negative()) && cones::tight_rank(dim, hrep, r.coords()) + 1 == dim
}

/// Checks a ray of N_1(M_{0,6}-bar) against the M_{0,6}-bar report: extremal
/// in the movable cone, extremal in the product cone, and not the pullback of
/// any extremal movable ray of the Losev-Manin space.
pub fn both_extremal_not_pullback_check(
    gamma: &Ray,
    x5: &CompareReport,
    mov5_hrep: &[Halfspace],
    mov4_rays: &[Ray],
) -> Result<SharedRayCheck, CompareError> {
    let pullbacks = mov4_rays
        .iter()
        .map(kapranov::pullback_ray)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SharedRayCheck {
        extremal_in_mov: extremal_in(x5.dim, mov5_hrep, gamma),
        in_ci: x5.ci_rays.rays().contains(gamma),
        not_pullback: !pullbacks.contains(gamma),
    })
}

/// For every extremal movable ray of the Losev-Manin space, its pullback and
/// whether that pullback is extremal in the movable cone of M_{0,6}-bar.
pub fn pullbacks_extremal(mov4_rays: &[Ray], mov5_hrep: &[Halfspace]) -> Result<Vec<(Ray, bool)>, CompareError> {
    let dim = KapranovSpace::new(5).expect("r = 5 is valid").dim();
    mov4_rays
        .par_iter()
        .map(|d| {
            let p = kapranov::pullback_ray(d)?;
            let ok = extremal_in(dim, mov5_hrep, &p);
            Ok((p, ok))
        })
        .collect()
}

/// Largest number of product generators listed inline in a report.
pub const REPORT_GENERATOR_LIMIT: usize = 10_000;

fn ray_strings(rays: &[Ray]) -> Vec<String> {
    rays.iter().map(|r| r.to_string()).collect()
}

impl CompareReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "variety: {}", self.variety);
        let _ = writeln!(s, "dimension of N_1: {}", self.dim);
        let _ = writeln!(s, "verdict: {}", self.verdict.as_str());
        let _ = writeln!(s, "nef extremal rays: {}", self.nef_rays.len());
        let _ = writeln!(s, "movable extremal rays: {}", self.mov_rays.len());
        let _ = writeln!(
            s,
            "products: {} pairs, {} zero, {} distinct generators",
            self.pairs,
            self.zero_products,
            self.generators.len()
        );
        let kind = if self.ci_rays.is_complete() {
            "complete"
        } else {
            "partial"
        };
        let _ = writeln!(s, "product cone extremal rays: {} ({kind})", self.ci_rays.rays().len());
        if let Some(f) = &self.ci_facets {
            let _ = writeln!(s, "product cone facets: {}", f.len());
        }
        let _ = writeln!(s, "common extremal rays: {}", self.common_rays.len());
        let _ = writeln!(s, "NotEq: {}", self.not_eq.len());
        for (name, ok) in &self.checks {
            let _ = writeln!(s, "check {name}: {}", if *ok { "pass" } else { "fail" });
        }
        if self.dim <= 4 {
            let _ = writeln!(s, "nef rays: {}", ray_strings(&self.nef_rays).join(" "));
            let _ = writeln!(s, "movable rays: {}", ray_strings(&self.mov_rays).join(" "));
            let _ = writeln!(s, "generators: {}", ray_strings(&self.generators.to_vec()).join(" "));
            let _ = writeln!(s, "NotEq rays: {}", ray_strings(&self.not_eq).join(" "));
        }
        s
    }

    pub fn to_structured(&self) -> String {
        let generators =
            (self.generators.len() <= REPORT_GENERATOR_LIMIT).then(|| ray_strings(&self.generators.to_vec()));
        let certificates: Vec<_> = self
            .certificates
            .iter()
            .map(|c| {
                json!({
                    "ray": c.ray.to_string(),
                    "halfspace": c.halfspace.as_ray().to_string(),
                    "kind": match c.kind {
                        CertificateKind::Facet => "facet",
                        CertificateKind::Exposing => "exposing",
                    },
                })
            })
            .collect();
        let checks: serde_json::Map<String, serde_json::Value> =
            self.checks.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let doc = json!({
            "variety": self.variety,
            "dim": self.dim,
            "verdict": self.verdict.as_str(),
            "counts": {
                "nef_rays": self.nef_rays.len(),
                "mov_rays": self.mov_rays.len(),
                "product_pairs": self.pairs,
                "zero_products": self.zero_products,
                "generators": self.generators.len(),
                "ci_rays": self.ci_rays.rays().len(),
                "ci_facets": self.ci_facets.as_ref().map(|f| f.len()),
                "common_rays": self.common_rays.len(),
                "not_eq": self.not_eq.len(),
            },
            "ci_rays_complete": self.ci_rays.is_complete(),
            "nef_rays": ray_strings(&self.nef_rays),
            "mov_rays": ray_strings(&self.mov_rays),
            "generators": generators,
            "ci_rays": ray_strings(self.ci_rays.rays()),
            "common_rays": ray_strings(&self.common_rays),
            "not_eq": ray_strings(&self.not_eq),
            "certificates": certificates,
            "checks": checks,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    }
}
