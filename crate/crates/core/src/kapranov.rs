//! Intersection data of the blow-ups `X_r` of P^3 in `r` general points and
//! the lines joining them, `1 <= r <= 5`, written in the Kapranov basis
//! `H, E_1..E_r, E_12..E_{r-1,r}` of divisor classes and its dual basis of
//! curve classes.
//!
//! `X_4` is the Losev-Manin space and `X_5` is M_{0,6}-bar. Inequality systems
//! for `r < 5` are obtained from the `r = 5` ones by zeroing the coefficients
//! of points and lines that do not exist on `X_r`: the blow-down `X_5 -> X_r`
//! pulls divisor classes back by zero extension, so pushed-forward curves and
//! divisors give exactly these truncated rows. Truncation produces redundant
//! rows, which are then discarded so that only facets remain.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::cones::{self, ConeError, Halfspace, Ray};
use crate::linalg::RatVector;

/// Number of points blown up on M_{0,6}-bar.
pub const MAX_POINTS: u8 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KapranovError {
    #[error("r = {0} is outside 1..=5")]
    BadR(usize),
    #[error("classes live on different spaces (X_{left} and X_{right})")]
    SpaceMismatch { left: usize, right: usize },
    #[error("invalid label: {0}")]
    BadLabel(String),
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// An element of the Kapranov basis. Pairs are stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    H,
    E(u8),
    E2(u8, u8),
}

impl BasisLabel {
    /// `E_{ab}` with the indices in either order.
    pub fn pair(a: u8, b: u8) -> BasisLabel {
        assert_ne!(a, b, "E_ab needs two distinct points");
        BasisLabel::E2(a.min(b), a.max(b))
    }

    fn max_point(self) -> u8 {
        match self {
            BasisLabel::H => 0,
            BasisLabel::E(i) => i,
            BasisLabel::E2(_, b) => b,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::H => write!(f, "H"),
            BasisLabel::E(i) => write!(f, "E{i}"),
            BasisLabel::E2(a, b) => write!(f, "E{a}{b}"),
        }
    }
}

/// The variety `X_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KapranovSpace {
    r: u8,
}

impl KapranovSpace {
    pub fn new(r: usize) -> Result<Self, KapranovError> {
        if (1..=MAX_POINTS as usize).contains(&r) {
            Ok(KapranovSpace { r: r as u8 })
        } else {
            Err(KapranovError::BadR(r))
        }
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    /// `1 + r + r(r-1)/2`.
    pub fn dim(&self) -> usize {
        let r = self.r();
        1 + r + r * (r - 1) / 2
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        let mut out = vec![BasisLabel::H];
        out.extend((1..=self.r).map(BasisLabel::E));
        for a in 1..=self.r {
            for b in a + 1..=self.r {
                out.push(BasisLabel::E2(a, b));
            }
        }
        out
    }

    /// Coordinate index of a label, or `None` if it involves a point beyond `r`.
    pub fn index(&self, label: BasisLabel) -> Option<usize> {
        if label.max_point() > self.r {
            return None;
        }
        let r = self.r();
        match label {
            BasisLabel::H => Some(0),
            BasisLabel::E(0) => None,
            BasisLabel::E(i) => Some(i as usize),
            BasisLabel::E2(a, b) => {
                let (a, b) = (a as usize, b as usize);
                if a == 0 || a >= b {
                    return None;
                }
                // pairs (1,2),(1,3),..,(1,r),(2,3),..
                let before: usize = (1..a).map(|i| r - i).sum();
                Some(1 + r + before + (b - a - 1))
            }
        }
    }

    /// Integer row from `(label, coefficient)` terms; terms on labels that do
    /// not exist on this space are dropped.
    fn truncated_row(&self, terms: &[(BasisLabel, i64)]) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); self.dim()];
        for &(label, c) in terms {
            if let Some(i) = self.index(label) {
                row[i] += c;
            }
        }
        row
    }

    fn vector(&self, terms: &[(BasisLabel, i64)]) -> RatVector {
        RatVector::from_bigints(&self.truncated_row(terms))
    }

    pub fn divisor(&self, terms: &[(BasisLabel, i64)]) -> DivisorClass {
        DivisorClass {
            space: *self,
            coords: self.vector(terms),
        }
    }

    pub fn curve(&self, terms: &[(BasisLabel, i64)]) -> CurveClass {
        CurveClass {
            space: *self,
            coords: self.vector(terms),
        }
    }

    fn check_len(&self, v: &RatVector) -> Result<(), KapranovError> {
        if v.dim() == self.dim() {
            Ok(())
        } else {
            Err(KapranovError::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            })
        }
    }

    pub fn divisor_from_coords(&self, coords: RatVector) -> Result<DivisorClass, KapranovError> {
        self.check_len(&coords)?;
        Ok(DivisorClass { space: *self, coords })
    }

    pub fn curve_from_coords(&self, coords: RatVector) -> Result<CurveClass, KapranovError> {
        self.check_len(&coords)?;
        Ok(CurveClass { space: *self, coords })
    }
}

/// A class in N^1(X_r), coordinates `(d_h; d_1..d_r; d_12..)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    space: KapranovSpace,
    coords: RatVector,
}

/// A class in N_1(X_r) in the dual basis: coordinate `k` is the intersection
/// number with the `k`-th basis divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    space: KapranovSpace,
    coords: RatVector,
}

impl DivisorClass {
    pub fn space(&self) -> KapranovSpace {
        self.space
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }

    pub fn pairing(&self, c: &CurveClass) -> Result<BigRational, KapranovError> {
        same_space(self.space, c.space)?;
        Ok(self.coords.dot(&c.coords))
    }
}

impl CurveClass {
    pub fn space(&self) -> KapranovSpace {
        self.space
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }
}

fn same_space(a: KapranovSpace, b: KapranovSpace) -> Result<(), KapranovError> {
    if a == b {
        Ok(())
    } else {
        Err(KapranovError::SpaceMismatch {
            left: a.r(),
            right: b.r(),
        })
    }
}

/// A partition of `{1..6}` into four nonempty blocks, each sorted, blocks
/// ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMu {
    blocks: [Vec<u8>; 4],
}

impl PartitionMu {
    pub fn new(blocks: [Vec<u8>; 4]) -> Result<Self, KapranovError> {
        let mut blocks = blocks;
        let mut seen = [false; 7];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(KapranovError::BadLabel("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if !(1..=6).contains(&x) || seen[x as usize] {
                    return Err(KapranovError::BadLabel(format!(
                        "partition blocks must cover 1..6 exactly (offending marking {x})"
                    )));
                }
                seen[x as usize] = true;
            }
        }
        if !seen[1..].iter().all(|&s| s) {
            return Err(KapranovError::BadLabel("partition does not cover 1..6".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(PartitionMu { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>; 4] {
        &self.blocks
    }

    /// All 65 partitions, in order of their restricted growth strings.
    pub fn all() -> Vec<PartitionMu> {
        let mut out = Vec::new();
        let mut assign = [0u8; 6];
        fn rec(pos: usize, used: u8, assign: &mut [u8; 6], out: &mut Vec<PartitionMu>) {
            if pos == 6 {
                if used == 4 {
                    let mut blocks: [Vec<u8>; 4] = Default::default();
                    for (i, &b) in assign.iter().enumerate() {
                        blocks[b as usize].push(i as u8 + 1);
                    }
                    out.push(PartitionMu::new(blocks).expect("valid by construction"));
                }
                return;
            }
            for b in 0..=used.min(3) {
                assign[pos] = b;
                rec(pos + 1, used.max(b + 1), assign, out);
            }
        }
        rec(0, 0, &mut assign, &mut out);
        out
    }

    fn block_masks(&self) -> [u8; 4] {
        self.blocks.clone().map(|b| mask(&b))
    }
}

impl fmt::Display for PartitionMu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for x in b {
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}

fn mask(set: &[u8]) -> u8 {
    set.iter().fold(0u8, |m, &x| m | 1 << (x - 1))
}

const ALL_MARKINGS: u8 = 0b11_1111;

/// A boundary divisor `Delta_J`, stored with `6 in J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryLabel {
    set: Vec<u8>,
}

impl BoundaryLabel {
    /// Accepts either `J` or its complement.
    pub fn new(subset: &[u8]) -> Result<Self, KapranovError> {
        let m = mask_checked(subset)?;
        let m = if m & 1 << 5 == 0 { ALL_MARKINGS & !m } else { m };
        let set: Vec<u8> = (1..=6).filter(|&x| m & 1 << (x - 1) != 0).collect();
        if !(2..=4).contains(&set.len()) {
            return Err(KapranovError::BadLabel(format!(
                "boundary label {subset:?} must have between 2 and 4 markings"
            )));
        }
        Ok(BoundaryLabel { set })
    }

    pub fn set(&self) -> &[u8] {
        &self.set
    }

    /// All 25 boundary divisors, by size of `J` and then lexicographically.
    pub fn all() -> Vec<BoundaryLabel> {
        let mut out = Vec::new();
        for size in 1..=3usize {
            for m in 1u8..32 {
                if m.count_ones() as usize == size {
                    let mut set: Vec<u8> = (1..=5).filter(|&x| m & 1 << (x - 1) != 0).collect();
                    set.push(6);
                    out.push(BoundaryLabel { set });
                }
            }
        }
        out.sort_by(|a, b| a.set.len().cmp(&b.set.len()).then_with(|| a.set.cmp(&b.set)));
        out
    }
}

fn mask_checked(subset: &[u8]) -> Result<u8, KapranovError> {
    let mut m = 0u8;
    for &x in subset {
        if !(1..=6).contains(&x) || m & 1 << (x - 1) != 0 {
            return Err(KapranovError::BadLabel(format!("bad marking set {subset:?}")));
        }
        m |= 1 << (x - 1);
    }
    Ok(m)
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delta_")?;
        for x in &self.set {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// The Keel-Vermeire divisor `Q_{(ab)(cd)(e6)}`, stored as the two pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KvLabel {
    first: (u8, u8),
    second: (u8, u8),
}

impl KvLabel {
    pub fn new(p: (u8, u8), q: (u8, u8)) -> Result<Self, KapranovError> {
        let norm = |(a, b): (u8, u8)| (a.min(b), a.max(b));
        let (p, q) = (norm(p), norm(q));
        let pts = [p.0, p.1, q.0, q.1];
        if pts.iter().any(|x| !(1..=5).contains(x)) || mask_checked(&pts).is_err() {
            return Err(KapranovError::BadLabel(format!(
                "Keel-Vermeire label needs four distinct points of 1..5, got {p:?} {q:?}"
            )));
        }
        Ok(KvLabel {
            first: p.min(q),
            second: p.max(q),
        })
    }

    pub fn pairs(&self) -> ((u8, u8), (u8, u8)) {
        (self.first, self.second)
    }

    /// The point of `1..5` not in either pair.
    pub fn leftover(&self) -> u8 {
        let m = mask(&[self.first.0, self.first.1, self.second.0, self.second.1]);
        (1..=5).find(|&x| m & 1 << (x - 1) == 0).unwrap()
    }

    /// All 15 labels.
    pub fn all() -> Vec<KvLabel> {
        let mut out = BTreeSet::new();
        for e in 1..=5u8 {
            let rest: Vec<u8> = (1..=5).filter(|&x| x != e).collect();
            let a = rest[0];
            for &b in &rest[1..] {
                let others: Vec<u8> = rest.iter().copied().filter(|&x| x != a && x != b).collect();
                out.insert(KvLabel::new((a, b), (others[0], others[1])).unwrap());
            }
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for KvLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q_({}{})({}{})({}6)",
            self.first.0,
            self.first.1,
            self.second.0,
            self.second.1,
            self.leftover()
        )
    }
}

fn points() -> std::ops::RangeInclusive<u8> {
    1..=MAX_POINTS
}

/// The 65 F-curve inequalities on divisor coordinates of X_5, as term lists.
fn nef_template() -> Vec<Vec<(BasisLabel, i64)>> {
    use BasisLabel::*;
    let mut rows = Vec::new();
    for i in points() {
        for j in i + 1..=MAX_POINTS {
            rows.push(vec![(BasisLabel::pair(i, j), -1)]);
        }
    }
    for i in points() {
        for j in i + 1..=MAX_POINTS {
            rows.push(vec![(H, 1), (E(i), 1), (E(j), 1), (BasisLabel::pair(i, j), -1)]);
        }
    }
    for i in points() {
        let others: Vec<u8> = points().filter(|&x| x != i).collect();
        for (a, &j) in others.iter().enumerate() {
            for &k in &others[a + 1..] {
                rows.push(vec![
                    (E(i), -1),
                    (BasisLabel::pair(i, j), 1),
                    (BasisLabel::pair(i, k), 1),
                ]);
            }
        }
    }
    for i in points() {
        let others: Vec<u8> = points().filter(|&x| x != i).collect();
        let j = others[0];
        for &k in &others[1..] {
            let rest: Vec<u8> = others.iter().copied().filter(|&x| x != j && x != k).collect();
            rows.push(vec![
                (H, 1),
                (E(i), 1),
                (BasisLabel::pair(j, k), 1),
                (BasisLabel::pair(rest[0], rest[1]), 1),
            ]);
        }
    }
    rows
}

fn collect_halfspaces(space: KapranovSpace, rows: Vec<Vec<BigInt>>) -> Result<Vec<Halfspace>, KapranovError> {
    let set: BTreeSet<Halfspace> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(Halfspace::new)
        .collect::<Result<_, _>>()?;
    let hs: Vec<Halfspace> = set.into_iter().collect();
    if space.r() == MAX_POINTS as usize {
        Ok(hs)
    } else {
        Ok(cones::facets(space.dim(), &hs)?)
    }
}

/// Inequalities `<a, d> >= 0` cutting out Nef(X_r) in divisor coordinates.
///
/// For `r = 5` these are the 65 rows of the four F-curve families; for smaller
/// `r` the truncated rows are reduced to the facets of the cone.
pub fn nef_hrep(r: usize) -> Result<Vec<Halfspace>, KapranovError> {
    let space = KapranovSpace::new(r)?;
    let rows = nef_template().iter().map(|t| space.truncated_row(t)).collect();
    collect_halfspaces(space, rows)
}

/// Inequalities `<a, c> >= 0` cutting out Mov(X_r) in dual-basis curve
/// coordinates. The normals are the effective generators of M_{0,6}-bar,
/// truncated to `X_r`.
pub fn mov_hrep(r: usize) -> Result<Vec<Halfspace>, KapranovError> {
    let space = KapranovSpace::new(r)?;
    let rows = eff_terms_m06().iter().map(|t| space.truncated_row(t)).collect();
    collect_halfspaces(space, rows)
}

fn table_product(a: BasisLabel, b: BasisLabel) -> Vec<(BasisLabel, i64)> {
    use BasisLabel::*;
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (H, H) => vec![(H, 1)],
        (H, E(_)) => vec![],
        (H, E2(j, k)) => vec![(E2(j, k), -1)],
        (E(i), E(j)) if i == j => vec![(E(i), 1)],
        (E(_), E(_)) => vec![],
        (E(i), E2(j, k)) if i == j || i == k => vec![(E2(j, k), -1)],
        (E(_), E2(_, _)) => vec![],
        (E2(j, k), E2(l, m)) if (j, k) == (l, m) => {
            vec![(E2(j, k), 2), (H, -1), (E(j), -1), (E(k), -1)]
        }
        (E2(_, _), E2(_, _)) => vec![],
        _ => unreachable!("labels are ordered"),
    }
}

/// Product of two basis divisors as a dual-basis curve class.
pub fn basis_product(space: KapranovSpace, a: BasisLabel, b: BasisLabel) -> CurveClass {
    space.curve(&table_product(a, b))
}

/// Intersection product of two divisor classes, by bilinear extension of the
/// products of basis elements.
pub fn pair_product(d1: &DivisorClass, d2: &DivisorClass) -> Result<CurveClass, KapranovError> {
    same_space(d1.space, d2.space)?;
    let space = d1.space;
    let labels = space.labels();
    let mut out = RatVector::zeros(space.dim());
    for (i, &a) in labels.iter().enumerate() {
        let x = &d1.coords[i];
        if x.is_zero() {
            continue;
        }
        for (j, &b) in labels.iter().enumerate() {
            let y = &d2.coords[j];
            if y.is_zero() {
                continue;
            }
            let prod = basis_product(space, a, b);
            out.add_scaled(&(x * y), &prod.coords);
        }
    }
    Ok(CurveClass { space, coords: out })
}

fn m06() -> KapranovSpace {
    KapranovSpace { r: MAX_POINTS }
}

fn boundary_terms(label: &BoundaryLabel) -> Vec<(BasisLabel, i64)> {
    use BasisLabel::*;
    let k: Vec<u8> = label.set.iter().copied().filter(|&x| x != 6).collect();
    match k.len() {
        1 => vec![(E(k[0]), 1)],
        2 => vec![(BasisLabel::pair(k[0], k[1]), 1)],
        3 => vec![
            (H, 1),
            (E(k[0]), -1),
            (E(k[1]), -1),
            (E(k[2]), -1),
            (BasisLabel::pair(k[0], k[1]), -1),
            (BasisLabel::pair(k[0], k[2]), -1),
            (BasisLabel::pair(k[1], k[2]), -1),
        ],
        _ => unreachable!("boundary labels have 2..=4 markings"),
    }
}

/// Class of `Delta_J` on M_{0,6}-bar.
pub fn boundary_class(label: &BoundaryLabel) -> DivisorClass {
    m06().divisor(&boundary_terms(label))
}

fn kv_terms(label: &KvLabel) -> Vec<(BasisLabel, i64)> {
    let ((a, b), (c, d)) = label.pairs();
    let mut terms = vec![(BasisLabel::H, 2)];
    terms.extend(points().map(|i| (BasisLabel::E(i), -1)));
    for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
        terms.push((BasisLabel::pair(x, y), -1));
    }
    terms
}

/// `2H - sum E_i - E_ac - E_ad - E_bc - E_bd` for the pairs `{a,b}`, `{c,d}`.
pub fn kv_class(label: &KvLabel) -> DivisorClass {
    m06().divisor(&kv_terms(label))
}

fn eff_terms_m06() -> Vec<Vec<(BasisLabel, i64)>> {
    BoundaryLabel::all()
        .iter()
        .map(boundary_terms)
        .chain(KvLabel::all().iter().map(kv_terms))
        .collect()
}

/// The 25 boundary classes followed by the 15 Keel-Vermeire classes.
pub fn eff_generators_m06() -> Vec<DivisorClass> {
    let mut seen = BTreeSet::new();
    eff_terms_m06()
        .iter()
        .map(|t| m06().divisor(t))
        .filter(|d| seen.insert(d.coords.clone()))
        .collect()
}

/// `F_mu . Delta_J`.
pub fn fcurve_boundary_pairing(mu: &PartitionMu, label: &BoundaryLabel) -> i64 {
    let j = mask(&label.set);
    let jc = ALL_MARKINGS & !j;
    let blocks = mu.block_masks();
    if blocks.iter().any(|&b| b == j || b == jc) {
        return -1;
    }
    for x in 0..4 {
        for y in x + 1..4 {
            if blocks[x] | blocks[y] == j {
                return 1;
            }
        }
    }
    0
}

/// Dual-basis coordinates `(F.H; F.E_i; F.E_jk)` of an F-curve.
pub fn fcurve_class(mu: &PartitionMu) -> CurveClass {
    let space = m06();
    let coords = space
        .labels()
        .into_iter()
        .map(|label| {
            let v = match label {
                BasisLabel::H => i64::from(mu.blocks.iter().any(|b| b == &[6])),
                BasisLabel::E(i) => fcurve_boundary_pairing(mu, &BoundaryLabel::new(&[i, 6]).unwrap()),
                BasisLabel::E2(a, b) => fcurve_boundary_pairing(mu, &BoundaryLabel::new(&[a, b, 6]).unwrap()),
            };
            BigRational::from_integer(BigInt::from(v))
        })
        .collect();
    CurveClass {
        space,
        coords: RatVector::new(coords),
    }
}

/// Classes of the 65 F-curves, in the order of [`PartitionMu::all`].
pub fn fcurve_classes() -> Vec<CurveClass> {
    PartitionMu::all().iter().map(fcurve_class).collect()
}

/// `-4H + 2 sum E_i + sum E_jk`.
pub fn canonical_class_m06() -> DivisorClass {
    let space = m06();
    let terms: Vec<(BasisLabel, i64)> = space
        .labels()
        .into_iter()
        .map(|l| match l {
            BasisLabel::H => (l, -4),
            BasisLabel::E(_) => (l, 2),
            BasisLabel::E2(_, _) => (l, 1),
        })
        .collect();
    space.divisor(&terms)
}

/// Pull-back of a curve class along the blow-down M_{0,6}-bar -> X_4: the
/// same coordinates on labels not involving point 5, zero on the rest.
pub fn pullback_l4_to_m06(gamma: &CurveClass) -> Result<CurveClass, KapranovError> {
    if gamma.space.r() != 4 {
        return Err(KapranovError::SpaceMismatch {
            left: gamma.space.r(),
            right: 4,
        });
    }
    let target = m06();
    let mut coords = RatVector::zeros(target.dim());
    for (i, label) in gamma.space.labels().into_iter().enumerate() {
        let j = target.index(label).expect("labels of X_4 exist on X_5");
        coords.add_scaled(&gamma.coords[i], &RatVector::unit(target.dim(), j));
    }
    Ok(CurveClass { space: target, coords })
}

/// Pull-back of a ray of Mov(X_4) as a ray of N_1(X_5).
pub fn pullback_ray(ray: &Ray) -> Result<Ray, KapranovError> {
    let l4 = KapranovSpace::new(4)?;
    let gamma = l4.curve_from_coords(ray.to_rat())?;
    Ok(cones::primitive(&pullback_l4_to_m06(&gamma)?.coords)?)
}
