//! End-to-end pipeline for a single variety: its nef, movable, effective and
//! Mori cones, and the comparison of the product cone with the movable cone.

use num_bigint::BigInt;
use thiserror::Error;

use crate::compare::{self, CompareError, CompareInput, CompareReport, ProductOracle, DEFAULT_HULL_LIMIT};
use crate::cones::{self, ConeError, Halfspace, Ray};
use crate::kapranov::{self, KapranovError, KapranovSpace};
use crate::linalg::RatVector;
use crate::toric::{ToricError, ToricVariety};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("unknown variety `{0}`")]
    UnknownVariety(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Kapranov(#[from] KapranovError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Compare(#[from] CompareError),
}

#[derive(Debug, Clone)]
pub enum Variety {
    Kapranov(KapranovSpace),
    Toric { name: String, variety: Box<ToricVariety> },
}

/// The four cones of a variety, each by inequalities or rays as appropriate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cones {
    pub dim: usize,
    /// Facets of the nef cone; their normals are the extremal rays of NE.
    pub nef_hrep: Vec<Halfspace>,
    /// Facets of the movable cone; their normals are the extremal rays of Eff.
    pub mov_hrep: Vec<Halfspace>,
    pub nef_rays: Vec<Ray>,
    pub mov_rays: Vec<Ray>,
    pub ne_rays: Vec<Ray>,
    pub eff_rays: Vec<Ray>,
}

fn rays_of(hs: &[Halfspace]) -> Vec<Ray> {
    hs.iter().map(|h| h.as_ray()).collect()
}

fn halfspaces_of(rays: &[Ray]) -> Vec<Halfspace> {
    rays.iter().map(Halfspace::from).collect()
}

fn sorted(mut rays: Vec<Ray>) -> Vec<Ray> {
    rays.sort();
    rays
}

impl Variety {
    /// `x1`..`x5`, with `l4` and `m06` as aliases of `x4` and `x5`.
    pub fn builtin(name: &str) -> Result<Variety, PipelineError> {
        let r = match name {
            "l4" => 4,
            "m06" => 5,
            _ => name
                .strip_prefix('x')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|r| (1..=5).contains(r))
                .ok_or_else(|| PipelineError::UnknownVariety(name.to_string()))?,
        };
        Ok(Variety::Kapranov(KapranovSpace::new(r)?))
    }

    pub fn toric(name: impl Into<String>, variety: ToricVariety) -> Variety {
        Variety::Toric {
            name: name.into(),
            variety: Box::new(variety),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Variety::Kapranov(s) => format!("x{}", s.r()),
            Variety::Toric { name, .. } => name.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.oracle().dim()
    }

    pub fn oracle(&self) -> &dyn ProductOracle {
        match self {
            Variety::Kapranov(s) => s,
            Variety::Toric { variety, .. } => variety.as_ref(),
        }
    }

    pub fn cones(&self) -> Result<Cones, PipelineError> {
        let dim = self.dim();
        match self {
            Variety::Kapranov(s) => {
                let r = s.r();
                let nef_in = kapranov::nef_hrep(r)?;
                let mov_in = kapranov::mov_hrep(r)?;
                let nef_rays = cones::rays_from_halfspaces(dim, &nef_in)?;
                let mov_rays = cones::rays_from_halfspaces(dim, &mov_in)?;
                let nef_hrep = cones::facets_with_rays(dim, &nef_in, &nef_rays)?;
                let mov_hrep = cones::facets_with_rays(dim, &mov_in, &mov_rays)?;
                Ok(Cones {
                    dim,
                    ne_rays: sorted(rays_of(&nef_hrep)),
                    eff_rays: sorted(rays_of(&mov_hrep)),
                    nef_hrep,
                    mov_hrep,
                    nef_rays,
                    mov_rays,
                })
            }
            Variety::Toric { variety, .. } => {
                let eff_rays = variety.eff_rays()?;
                let ne_rays = variety.ne_rays()?;
                let nef_rays = cones::dual_rays(dim, &ne_rays)?;
                let mov_rays = cones::dual_rays(dim, &eff_rays)?;
                Ok(Cones {
                    dim,
                    nef_hrep: halfspaces_of(&ne_rays),
                    mov_hrep: halfspaces_of(&eff_rays),
                    nef_rays,
                    mov_rays,
                    ne_rays,
                    eff_rays,
                })
            }
        }
    }

    pub fn compare(&self, cones: &Cones, hull_limit: usize) -> Result<CompareReport, PipelineError> {
        let input = CompareInput {
            variety: self.name(),
            nef_rays: &cones.nef_rays,
            mov_rays: &cones.mov_rays,
            mov_hrep: &cones.mov_hrep,
            oracle: self.oracle(),
            hull_limit,
        };
        let mut report = compare::verdict_and_certificates(&input)?;
        if matches!(self, Variety::Kapranov(s) if s.r() == 5) {
            let ok = compare::k_negativity_check(&report)?;
            report.checks.push(("not_eq_k_negative".into(), ok));
        }
        Ok(report)
    }

    /// Cones and comparison with the default hull limit.
    pub fn run(&self) -> Result<(Cones, CompareReport), PipelineError> {
        let cones = self.cones()?;
        let report = self.compare(&cones, DEFAULT_HULL_LIMIT)?;
        Ok((cones, report))
    }

    /// Independent consistency checks, by name.
    ///
    /// On M_{0,6}-bar: the nef rays are the dual of the F-curves and the
    /// movable rays the dual of the 40 effective generators. On toric
    /// varieties: self-intersections agree for two auxiliary vectors, and wall
    /// classes pair with every divisor class as the direct intersection
    /// numbers. Elsewhere: the cones are dual to their generators.
    pub fn cross_check(&self, cones: &Cones) -> Result<Vec<(String, bool)>, PipelineError> {
        let dim = cones.dim;
        let mut out = Vec::new();
        match self {
            Variety::Kapranov(s) if s.r() == 5 => {
                let fcurves = primitive_all(kapranov::fcurve_classes().iter().map(|c| c.coords()))?;
                out.push((
                    "nef_dual_of_fcurves".into(),
                    cones::dual_rays(dim, &fcurves)? == cones.nef_rays,
                ));
                let eff = primitive_all(kapranov::eff_generators_m06().iter().map(|d| d.coords()))?;
                out.push(("mov_dual_of_eff".into(), cones::dual_rays(dim, &eff)? == cones.mov_rays));
            }
            Variety::Toric { variety, .. } => {
                let n = variety.fan().rays.len();
                let m_independent = (0..n).all(|i| {
                    let (m, m2) = variety.aux_vectors(i);
                    variety.prime_product_with(i, i, m) == variety.prime_product_with(i, i, m2)
                });
                out.push(("self_intersection_m_independent".into(), m_independent));
                let consistent = variety.walls().iter().all(|w| {
                    let c = variety.wall_curve_class(w);
                    (0..n).all(|rho| {
                        let d = variety.divisor_in_basis(rho).expect("valid index");
                        d.pairing(&c) == BigInt::from(variety.intersection(rho, w)).into()
                    })
                });
                out.push(("wall_pairing_consistent".into(), consistent));
                out.extend(self.duality_checks(cones)?);
            }
            Variety::Kapranov(_) => out.extend(self.duality_checks(cones)?),
        }
        Ok(out)
    }

    fn duality_checks(&self, cones: &Cones) -> Result<Vec<(String, bool)>, PipelineError> {
        let dim = cones.dim;
        Ok(vec![
            (
                "nef_dual_of_ne".into(),
                cones::dual_rays(dim, &cones.ne_rays)? == cones.nef_rays,
            ),
            (
                "mov_dual_of_eff".into(),
                cones::dual_rays(dim, &cones.eff_rays)? == cones.mov_rays,
            ),
        ])
    }
}

fn primitive_all<'a>(vs: impl Iterator<Item = &'a RatVector>) -> Result<Vec<Ray>, ConeError> {
    vs.map(cones::primitive).collect()
}
