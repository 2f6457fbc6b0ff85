//! Differential and integral calculus on the space of fuzzy numbers that are
//! linearly correlated with an asymmetric basis number `A`.
//!
//! Every element has the form `r + qA` and is stored as the coefficient pair
//! `(r, q)`. The map `r + iq -> r + qA` transports the complex field onto this
//! space, so addition, the product `⊙`, division, norms, polar forms and the
//! whole theory of analytic functions carry over. The basis `A` only matters
//! when an element is realized as a fuzzy set through its α-levels.
//!
//! The numeric core is generic over the scalar type. Field arithmetic needs
//! only [`num_traits::Num`], so exact rationals work there; everything that
//! touches transcendental functions requires [`Scalar`] (`f32` or `f64`).
//! Concrete `f64` aliases are exported at the crate root.

pub mod analytic;
pub mod basis;
pub mod dynamics;
mod error;
pub mod number;
pub mod polar;
mod scalar;

pub use crate::basis::{BasisNumber, FuzzySpace};
pub use crate::error::{Error, Result};
pub use crate::number::{AlphaBand, LcNumber};
pub use crate::polar::PolarForm;
pub use crate::scalar::Scalar;

/// `r + qA` with `f64` coefficients.
pub type Lc = LcNumber<f64>;
/// `r + qA` with `f32` coefficients.
pub type Lc32 = LcNumber<f32>;
pub type Basis = BasisNumber<f64>;
pub type Space = FuzzySpace<f64>;
pub type Band = AlphaBand<f64>;
pub type Polar = PolarForm<f64>;
pub type Mapping = analytic::FuzzyMapping<f64>;
pub type Curve = dynamics::FuzzyCurve<f64>;
pub type Traj = dynamics::Trajectory<f64>;
