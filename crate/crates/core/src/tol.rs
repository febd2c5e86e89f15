//! Pinned numeric tolerances.
//!
//! Every threshold that decides a verdict or gates an error path lives here,
//! so there is exactly one place to audit them.

/// Unit-norm and orthonormality checks on directions and frames.
pub const FRAME_ORTHO: f64 = 1e-12;

/// Tie detection for polytope support maximizers (multivalued subdifferential).
pub const SUPPORT_TIE: f64 = 1e-12;

/// Euler relation, Hessian annihilation and other first-order identities.
pub const FIRST_ORDER: f64 = 1e-9;

/// Eigenvalues of convex-body Hessians may round off slightly negative.
/// Anything below this is a genuine convexity failure, not noise.
pub const EIGEN_CLAMP: f64 = -1e-9;

/// Floor applied inside the symmetric inverse square root of a reference
/// Hessian. The reference is certified positively curved first, so this
/// only guards round-off.
pub const SQRT_EIGEN_FLOOR: f64 = 1e-12;

/// Minimum reference radius of curvature for the relative curvature operator.
pub const REFERENCE_MIN_RADIUS: f64 = 1e-8;

/// Constraint tolerance for the algebraic lemma hypotheses
/// (`x_i + y_i = 2`, `x_I + y_I = 2b`) and for counting distinct values.
pub const LEMMA_CONSTRAINT: f64 = 1e-9;

/// Pairs `i, j` with `|x_i - x_j|` above this count as distinct in the
/// complementary-product check.
pub const LEMMA_PAIR_DISTINCT: f64 = 1e-6;

/// Complementary products must match `b` this closely.
pub const LEMMA_PRODUCT: f64 = 1e-8;

/// Relative spread below this counts as a constant projection function.
/// Chosen roughly 100x above the quadrature noise floor on benchmark bodies.
pub const SCAN_PROPORTIONAL_SPREAD: f64 = 1e-4;

/// Relative tolerance for the homothety consistency check `beta = alpha^k`.
pub const SCAN_HOMOTHETY_REL: f64 = 1e-3;

/// Support-value invariance required of a claimed body of revolution.
pub const REVOLUTION_SYMMETRY: f64 = 1e-9;

/// Fraction of the ball radius that the minimum sampled radius of curvature
/// must exceed in the constant-width constructor.
pub const CONVEXITY_MARGIN: f64 = 1e-3;

/// The constant-width constructor gives up once the perturbation scale
/// drops below this fraction of the radius.
pub const CONVEXITY_EPS_FLOOR: f64 = 1e-8;
