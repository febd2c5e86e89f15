//! Computational convex geometry built on support functions.
//!
//! A convex body is represented by an evaluator for its support function
//! `h(u) = max { <x, u> : x in K }` together with the gradient and Hessian of
//! the degree-1 homogeneous extension where those exist. On top of that the
//! crate computes widths, volumes of projections onto random subspaces
//! (k-brightness), principal radii of curvature, surface-area-measure
//! densities, and runs the algebraic and geometric consistency checks of the
//! Nakajima problem: can a non-ball have constant width and constant
//! k-brightness?

pub mod bodies;
pub mod curvature;
pub mod error;
pub mod grassmann;
pub mod nakajima;
pub mod projvol;
pub mod sphere;
pub mod tol;

pub(crate) mod linalg;

pub use bodies::{BodySpec, SupportBody};
pub use curvature::{CurvatureSpectrum, RelativeSpectrum};
pub use error::{Error, Result};
pub use grassmann::Subspace;
pub use projvol::BrightnessReport;
pub use sphere::{Cap, Direction, QuadratureRule, TangentFrame};
