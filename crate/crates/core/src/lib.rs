//! Exact computations with cones of divisor and curve classes on blow-ups of
//! projective threefolds, and a test of whether the complete intersection cone
//! of curves equals the movable cone.

pub mod compare;
pub mod cones;
pub mod kapranov;
pub mod linalg;
pub mod toric;
pub mod variety;

pub use compare::{CompareReport, ProductOracle, Verdict};
pub use cones::{Cone, ConeError, Halfspace, Ray};
pub use kapranov::{CurveClass, DivisorClass, KapranovSpace};
pub use linalg::{RatMatrix, RatVector};
pub use toric::{Fan, ToricCurveClass, ToricDivisorClass, ToricVariety};
pub use variety::{Cones, PipelineError, Variety};
