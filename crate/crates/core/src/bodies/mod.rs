//! Convex bodies represented by support-function evaluators.
//!
//! Every body evaluates the degree-1 homogeneous extension
//! `H(x) = |x| h(x/|x|)` of its support function in closed form, together
//! with the gradient (the reverse Gauss map) and the Hessian where the kind
//! is smooth. Minkowski algebra, reflection in the origin, dilation and
//! translation are structure-aware: they return closed-form kinds whenever
//! one exists and generic wrappers otherwise.

pub mod monomial;
pub mod reuleaux;
mod spec;

pub use monomial::{Monomial, OddPolynomial};
pub use reuleaux::ReuleauxProfile;
pub use spec::BodySpec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::sphere::{self, Direction};
use crate::tol;
use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The closed-form evaluator classes.
#[derive(Debug, Clone)]
pub enum BodyKind {
    /// `h(u) = <center, u> + radius |u|`; radius 0 encodes a point.
    Ball { center: DVector<f64>, radius: f64 },
    /// `h(u) = sqrt(u' A u)` for a positive-definite shape matrix `A`,
    /// centered at the origin.
    Ellipsoid { shape: DMatrix<f64> },
    /// `h(u) = max_v <v, u>` over the vertex list.
    Polytope { vertices: Vec<DVector<f64>> },
    /// `h(u) = radius + q(u)` with `q` an odd polynomial; constant width
    /// `2 radius` is exact by oddness.
    OddPerturbedBall { radius: f64, poly: OddPolynomial },
    /// Solid of revolution of a Reuleaux triangle about `axis` (n = 3).
    ReuleauxRevolution { profile: ReuleauxProfile, axis: Direction },
    /// Weighted Minkowski sum: support values add.
    Sum { parts: Vec<(SupportBody, f64)> },
    /// Reflection in the origin: `h(u) = h_inner(-u)`.
    Reflection { inner: Box<SupportBody> },
    /// Restriction to a subspace: `h(v) = h_inner(B v)` for an orthonormal
    /// `n x k` basis `B`. This is the projected body `K | span(B)` expressed
    /// in subspace coordinates.
    Projected { inner: Box<SupportBody>, basis: DMatrix<f64> },
}

/// A convex body given by its support-function evaluator plus capability flags.
#[derive(Debug, Clone)]
pub struct SupportBody {
    dim: usize,
    kind: BodyKind,
    has_hessian: bool,
    is_symmetric: bool,
    is_smooth: bool,
}

impl SupportBody {
    pub fn ball(center: DVector<f64>, radius: f64) -> Result<Self> {
        if center.len() < 2 {
            return Err(Error::InvalidDimension(center.len()));
        }
        if !(radius >= 0.0 && radius.is_finite()) || center.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("ball parameters must be finite, radius >= 0".into()));
        }
        let dim = center.len();
        Ok(Self::assemble(dim, BodyKind::Ball { center, radius }))
    }

    pub fn unit_ball(n: usize) -> Result<Self> {
        Self::ball(DVector::zeros(n), 1.0)
    }

    /// Origin-centered ellipsoid with positive-definite shape matrix `A`,
    /// `h(u) = sqrt(u' A u)`. For semi-axes `a_i` along the coordinate axes
    /// pass `A = diag(a_i^2)`.
    pub fn ellipsoid(shape: DMatrix<f64>) -> Result<Self> {
        let n = shape.nrows();
        if n < 2 || shape.ncols() != n {
            return Err(Error::InvalidDimension(n));
        }
        if (&shape - shape.transpose()).norm() > 1e-10 * shape.norm().max(1.0) {
            return Err(Error::Domain("ellipsoid shape matrix must be symmetric".into()));
        }
        let shape = linalg::symmetrize(&shape);
        let min_eig = shape
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if !(min_eig > 0.0) {
            return Err(Error::Domain(format!(
                "ellipsoid shape matrix must be positive definite (min eigenvalue {min_eig})"
            )));
        }
        Ok(Self::assemble(n, BodyKind::Ellipsoid { shape }))
    }

    pub fn ellipsoid_diag(diag: &[f64]) -> Result<Self> {
        Self::ellipsoid(DMatrix::from_diagonal(&DVector::from_column_slice(diag)))
    }

    /// Polytope from its vertex list; must be affinely full-dimensional.
    pub fn polytope(vertices: Vec<DVector<f64>>) -> Result<Self> {
        let n = vertices.first().map(|v| v.len()).unwrap_or(0);
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        if vertices.iter().any(|v| v.len() != n) {
            return Err(Error::Domain("polytope vertices have mixed dimensions".into()));
        }
        // affine rank check
        let v0 = &vertices[0];
        let mut diffs = DMatrix::zeros(n, vertices.len().saturating_sub(1));
        for (j, v) in vertices.iter().skip(1).enumerate() {
            diffs.set_column(j, &(v - v0));
        }
        let rank = linalg::orthonormalize(&diffs, 1e-9).ncols();
        if rank < n {
            return Err(Error::Domain(format!(
                "polytope is not full-dimensional (affine rank {rank} < {n})"
            )));
        }
        Ok(Self::assemble(n, BodyKind::Polytope { vertices }))
    }

    /// Internal constructor for projected vertex sets, which may be flat.
    pub(crate) fn polytope_unchecked(vertices: Vec<DVector<f64>>, dim: usize) -> Self {
        Self::assemble(dim, BodyKind::Polytope { vertices })
    }

    /// Axis-aligned cube `[-half, half]^n`.
    pub fn cube(n: usize, half: f64) -> Result<Self> {
        if n < 2 || n > 16 {
            return Err(Error::InvalidDimension(n));
        }
        let mut vertices = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let v = DVector::from_fn(n, |i, _| if mask >> i & 1 == 1 { half } else { -half });
            vertices.push(v);
        }
        Self::polytope(vertices)
    }

    /// Ball of the given radius perturbed by an odd polynomial:
    /// `h(u) = radius + q(u)`. Convexity is the caller's business; see
    /// [`make_constant_width`] for the checked constructor.
    pub fn odd_perturbed_ball(radius: f64, poly: OddPolynomial) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("radius {radius} must be positive")));
        }
        let dim = poly.dim();
        Ok(Self::assemble(dim, BodyKind::OddPerturbedBall { radius, poly }))
    }

    /// Solid of revolution of a width-`width` Reuleaux triangle about `axis`.
    pub fn reuleaux_revolution(width: f64, axis: Direction) -> Result<Self> {
        if axis.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: axis.dim() });
        }
        let profile = ReuleauxProfile::new(width)?;
        Ok(Self::assemble(3, BodyKind::ReuleauxRevolution { profile, axis }))
    }

    pub fn minkowski_sum(a: SupportBody, b: SupportBody) -> Result<Self> {
        if a.dim != b.dim {
            return Err(Error::DimensionMismatch { expected: a.dim, got: b.dim });
        }
        let dim = a.dim;
        Ok(Self::assemble(dim, BodyKind::Sum { parts: vec![(a, 1.0), (b, 1.0)] }))
    }

    pub fn weighted_sum(parts: Vec<(SupportBody, f64)>) -> Result<Self> {
        let dim = match parts.first() {
            Some((b, _)) => b.dim,
            None => return Err(Error::Domain("empty Minkowski sum".into())),
        };
        for (b, w) in &parts {
            if b.dim != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: b.dim });
            }
            if !(*w > 0.0 && w.is_finite()) {
                return Err(Error::Domain(format!("sum weight {w} must be positive")));
            }
        }
        Ok(Self::assemble(dim, BodyKind::Sum { parts }))
    }

    pub(crate) fn projected(inner: SupportBody, basis: DMatrix<f64>) -> Self {
        let k = basis.ncols();
        Self::assemble(k, BodyKind::Projected { inner: Box::new(inner), basis })
    }

    fn assemble(dim: usize, kind: BodyKind) -> Self {
        let (has_hessian, is_symmetric, is_smooth) = flags(&kind);
        Self { dim, kind, has_hessian, is_symmetric, is_smooth }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &BodyKind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match &self.kind {
            BodyKind::Ball { .. } => "ball",
            BodyKind::Ellipsoid { .. } => "ellipsoid",
            BodyKind::Polytope { .. } => "polytope",
            BodyKind::OddPerturbedBall { .. } => "odd-perturbed-ball",
            BodyKind::ReuleauxRevolution { .. } => "reuleaux-revolution",
            BodyKind::Sum { .. } => "sum",
            BodyKind::Reflection { .. } => "reflection",
            BodyKind::Projected { .. } => "projected",
        }
    }

    /// Second derivatives available everywhere relevant.
    pub fn has_hessian(&self) -> bool {
        self.has_hessian
    }

    /// Centrally symmetric by construction (conservative: a sum reports
    /// symmetric only when all parts do).
    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric
    }

    pub fn is_smooth(&self) -> bool {
        self.is_smooth
    }

    /// Support function value `h(u)`.
    pub fn support(&self, u: &Direction) -> Result<f64> {
        self.check_dim(u.dim())?;
        Ok(self.extension_unchecked(u.coords()))
    }

    /// Value of the homogeneous extension `H(x) = |x| h(x/|x|)` at any `x`.
    pub fn extension(&self, x: &DVector<f64>) -> Result<f64> {
        self.check_dim(x.len())?;
        Ok(self.extension_unchecked(x))
    }

    /// Width in direction `u`: `h(u) + h(-u)`.
    pub fn width(&self, u: &Direction) -> Result<f64> {
        self.check_dim(u.dim())?;
        Ok(self.extension_unchecked(u.coords()) + self.extension_unchecked(&-u.coords()))
    }

    /// The boundary point where `u` is the outward normal (gradient of the
    /// homogeneous extension). Errors with the tied point set where the
    /// subdifferential is not a singleton.
    pub fn reverse_gauss(&self, u: &Direction) -> Result<DVector<f64>> {
        self.check_dim(u.dim())?;
        self.gradient_at(u.coords())
    }

    /// Hessian of the homogeneous extension at `u`; positive semidefinite
    /// and annihilating `u`.
    pub fn support_hessian(&self, u: &Direction) -> Result<DMatrix<f64>> {
        self.check_dim(u.dim())?;
        if !self.has_hessian {
            return Err(Error::NoHessian { kind: self.kind_name() });
        }
        self.hessian_at(u.coords())
    }

    /// Reflection in the origin, `h_{K*}(u) = h_K(-u)`, in closed form where
    /// the kind allows it.
    pub fn reflect(&self) -> SupportBody {
        let dim = self.dim;
        match &self.kind {
            BodyKind::Ball { center, radius } => {
                Self::assemble(dim, BodyKind::Ball { center: -center, radius: *radius })
            }
            BodyKind::Ellipsoid { .. } => self.clone(),
            BodyKind::Polytope { vertices } => Self::assemble(
                dim,
                BodyKind::Polytope { vertices: vertices.iter().map(|v| -v).collect() },
            ),
            BodyKind::OddPerturbedBall { radius, poly } => Self::assemble(
                dim,
                BodyKind::OddPerturbedBall { radius: *radius, poly: poly.negated() },
            ),
            BodyKind::Sum { parts } => Self::assemble(
                dim,
                BodyKind::Sum { parts: parts.iter().map(|(b, w)| (b.reflect(), *w)).collect() },
            ),
            BodyKind::Reflection { inner } => (**inner).clone(),
            BodyKind::ReuleauxRevolution { .. } | BodyKind::Projected { .. } => {
                Self::assemble(dim, BodyKind::Reflection { inner: Box::new(self.clone()) })
            }
        }
    }

    /// Dilation by `lambda > 0` about the origin.
    pub fn scale(&self, lambda: f64) -> Result<SupportBody> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Domain(format!("scale factor {lambda} must be positive")));
        }
        let dim = self.dim;
        Ok(match &self.kind {
            BodyKind::Ball { center, radius } => Self::assemble(
                dim,
                BodyKind::Ball { center: lambda * center, radius: lambda * radius },
            ),
            BodyKind::Ellipsoid { shape } => {
                Self::assemble(dim, BodyKind::Ellipsoid { shape: lambda * lambda * shape })
            }
            BodyKind::Polytope { vertices } => Self::assemble(
                dim,
                BodyKind::Polytope { vertices: vertices.iter().map(|v| lambda * v).collect() },
            ),
            BodyKind::OddPerturbedBall { radius, poly } => Self::assemble(
                dim,
                BodyKind::OddPerturbedBall {
                    radius: lambda * radius,
                    poly: poly.scaled(lambda),
                },
            ),
            BodyKind::ReuleauxRevolution { profile, axis } => Self::assemble(
                dim,
                BodyKind::ReuleauxRevolution {
                    profile: ReuleauxProfile::new(lambda * profile.width())?,
                    axis: axis.clone(),
                },
            ),
            BodyKind::Sum { parts } => Self::assemble(
                dim,
                BodyKind::Sum {
                    parts: parts.iter().map(|(b, w)| (b.clone(), lambda * w)).collect(),
                },
            ),
            BodyKind::Reflection { inner } => Self::assemble(
                dim,
                BodyKind::Reflection { inner: Box::new(inner.scale(lambda)?) },
            ),
            BodyKind::Projected { inner, basis } => Self::assemble(
                dim,
                BodyKind::Projected {
                    inner: Box::new(inner.scale(lambda)?),
                    basis: basis.clone(),
                },
            ),
        })
    }

    /// Translation by `t` (Minkowski sum with the point `{t}`).
    pub fn translate(&self, t: &DVector<f64>) -> Result<SupportBody> {
        self.check_dim(t.len())?;
        let dim = self.dim;
        Ok(match &self.kind {
            BodyKind::Ball { center, radius } => {
                Self::assemble(dim, BodyKind::Ball { center: center + t, radius: *radius })
            }
            BodyKind::Polytope { vertices } => Self::assemble(
                dim,
                BodyKind::Polytope { vertices: vertices.iter().map(|v| v + t).collect() },
            ),
            _ => {
                let point = SupportBody::ball(t.clone(), 0.0)?;
                Self::assemble(
                    dim,
                    BodyKind::Sum { parts: vec![(self.clone(), 1.0), (point, 1.0)] },
                )
            }
        })
    }

    /// The homothet `lambda K + t`.
    pub fn homothet(&self, lambda: f64, t: &DVector<f64>) -> Result<SupportBody> {
        self.scale(lambda)?.translate(t)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got });
        }
        Ok(())
    }

    pub(crate) fn extension_unchecked(&self, x: &DVector<f64>) -> f64 {
        match &self.kind {
            BodyKind::Ball { center, radius } => center.dot(x) + radius * x.norm(),
            BodyKind::Ellipsoid { shape } => x.dot(&(shape * x)).max(0.0).sqrt(),
            BodyKind::Polytope { vertices } => vertices
                .iter()
                .map(|v| v.dot(x))
                .fold(f64::NEG_INFINITY, f64::max),
            BodyKind::OddPerturbedBall { radius, poly } => {
                radius * x.norm() + poly.extension(x)
            }
            BodyKind::ReuleauxRevolution { profile, axis } => {
                let r = x.norm();
                if r == 0.0 {
                    return 0.0;
                }
                let (rho, zeta, _) = revolve_coords(x, axis, r);
                r * profile.support([rho, zeta]).value
            }
            BodyKind::Sum { parts } => {
                parts.iter().map(|(b, w)| w * b.extension_unchecked(x)).sum()
            }
            BodyKind::Reflection { inner } => inner.extension_unchecked(&-x),
            BodyKind::Projected { inner, basis } => inner.extension_unchecked(&(basis * x)),
        }
    }

    pub(crate) fn gradient_at(&self, x: &DVector<f64>) -> Result<DVector<f64>> {
        match &self.kind {
            BodyKind::Ball { center, radius } => Ok(center + (*radius / x.norm()) * x),
            BodyKind::Ellipsoid { shape } => {
                let ax = shape * x;
                let s = x.dot(&ax).sqrt();
                Ok(ax / s)
            }
            BodyKind::Polytope { vertices } => {
                let vals: Vec<f64> = vertices.iter().map(|v| v.dot(x)).collect();
                let best = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let scale = best.abs().max(1.0);
                let tied: Vec<DVector<f64>> = vertices
                    .iter()
                    .zip(&vals)
                    .filter(|(_, v)| best - **v <= tol::SUPPORT_TIE * scale)
                    .map(|(p, _)| p.clone())
                    .collect();
                if tied.len() == 1 {
                    Ok(tied.into_iter().next().unwrap())
                } else {
                    Err(Error::Multivalued { tied })
                }
            }
            BodyKind::OddPerturbedBall { radius, poly } => {
                Ok((*radius / x.norm()) * x + poly.extension_gradient(x))
            }
            BodyKind::ReuleauxRevolution { profile, axis } => {
                let r = x.norm();
                let (rho, zeta, rho_vec) = revolve_coords(x, axis, r);
                let s = profile.support([rho, zeta]);
                let lift = |p: [f64; 2]| -> Result<DVector<f64>> {
                    if rho > 1e-13 {
                        Ok((p[0] / rho) * &rho_vec + p[1] * axis.coords())
                    } else if p[0].abs() <= 1e-12 {
                        Ok(p[1] * axis.coords())
                    } else {
                        // an off-axis support point seen from a polar
                        // direction is a full circle of maximizers
                        Err(Error::Multivalued {
                            tied: vec![
                                p[0] * crate::sphere::tangent_frame(axis).basis()[0].clone()
                                    + p[1] * axis.coords(),
                                -p[0] * crate::sphere::tangent_frame(axis).basis()[0].clone()
                                    + p[1] * axis.coords(),
                            ],
                        })
                    }
                };
                if s.ties.is_empty() {
                    lift(s.point)
                } else {
                    let mut tied = vec![lift(s.point)?];
                    for t in &s.ties {
                        tied.push(lift(*t)?);
                    }
                    Err(Error::Multivalued { tied })
                }
            }
            BodyKind::Sum { parts } => {
                let mut g = DVector::zeros(x.len());
                for (b, w) in parts {
                    g += *w * b.gradient_at(x)?;
                }
                Ok(g)
            }
            BodyKind::Reflection { inner } => Ok(-inner.gradient_at(&-x)?),
            BodyKind::Projected { inner, basis } => {
                match inner.gradient_at(&(basis * x)) {
                    Ok(g) => Ok(basis.transpose() * g),
                    Err(Error::Multivalued { tied }) => Err(Error::Multivalued {
                        tied: tied.into_iter().map(|p| basis.transpose() * p).collect(),
                    }),
                    Err(e) => Err(e),
                }
            }
        }
    }

    pub(crate) fn hessian_at(&self, x: &DVector<f64>) -> Result<DMatrix<f64>> {
        let n = x.len();
        match &self.kind {
            BodyKind::Ball { radius, .. } => {
                let r = x.norm();
                let xhat = x / r;
                Ok((*radius / r) * (DMatrix::identity(n, n) - &xhat * xhat.transpose()))
            }
            BodyKind::Ellipsoid { shape } => {
                let ax = shape * x;
                let s = x.dot(&ax).sqrt();
                Ok(shape / s - (&ax * ax.transpose()) / (s * s * s))
            }
            BodyKind::OddPerturbedBall { radius, poly } => {
                let r = x.norm();
                let xhat = x / r;
                Ok((*radius / r) * (DMatrix::identity(n, n) - &xhat * xhat.transpose())
                    + poly.extension_hessian(x))
            }
            BodyKind::Sum { parts } => {
                let mut h = DMatrix::zeros(n, n);
                for (b, w) in parts {
                    h += *w * b.hessian_at(x)?;
                }
                Ok(h)
            }
            BodyKind::Reflection { inner } => inner.hessian_at(&-x),
            BodyKind::Projected { inner, basis } => {
                let h = inner.hessian_at(&(basis * x))?;
                Ok(basis.transpose() * h * basis)
            }
            BodyKind::Polytope { .. } | BodyKind::ReuleauxRevolution { .. } => {
                Err(Error::NoHessian { kind: self.kind_name() })
            }
        }
    }
}

/// Decompose `x` against the revolution axis: returns `(rho, zeta, rho_vec)`
/// for the unit vector `x / r`.
fn revolve_coords(x: &DVector<f64>, axis: &Direction, r: f64) -> (f64, f64, DVector<f64>) {
    let u = x / r;
    let zeta = axis.coords().dot(&u);
    let rho_vec = &u - zeta * axis.coords();
    (rho_vec.norm(), zeta, rho_vec)
}

fn flags(kind: &BodyKind) -> (bool, bool, bool) {
    match kind {
        BodyKind::Ball { center, .. } => (true, center.norm() == 0.0, true),
        BodyKind::Ellipsoid { .. } => (true, true, true),
        BodyKind::Polytope { vertices } => (false, symmetric_vertex_set(vertices), false),
        BodyKind::OddPerturbedBall { poly, .. } => (true, poly.is_zero(), true),
        BodyKind::ReuleauxRevolution { .. } => (false, false, false),
        BodyKind::Sum { parts } => parts.iter().fold((true, true, true), |acc, (b, _)| {
            (
                acc.0 && b.has_hessian,
                acc.1 && b.is_symmetric,
                acc.2 && b.is_smooth,
            )
        }),
        BodyKind::Reflection { inner } => (inner.has_hessian, inner.is_symmetric, inner.is_smooth),
        BodyKind::Projected { inner, .. } => {
            (inner.has_hessian, inner.is_symmetric, inner.is_smooth)
        }
    }
}

fn symmetric_vertex_set(vertices: &[DVector<f64>]) -> bool {
    let scale = vertices.iter().map(|v| v.norm()).fold(1.0, f64::max);
    vertices.iter().all(|v| {
        vertices
            .iter()
            .any(|w| (v + w).norm() <= 1e-12 * scale)
    })
}

/// Largest-scale constant-width body from an odd perturbation.
///
/// Returns the perturbed ball with the largest `eps' <= eps` from the
/// geometric sequence `eps, eps/2, eps/4, ...` whose minimum sampled radius
/// of curvature over 1000 fixed directions exceeds `1e-3 * radius`. The
/// result has width exactly `2 radius`.
pub fn make_constant_width(
    n: usize,
    radius: f64,
    coeffs: &OddPolynomial,
    eps: f64,
) -> Result<SupportBody> {
    if coeffs.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: coeffs.dim() });
    }
    if !(radius > 0.0 && radius.is_finite()) || !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::Domain("radius and eps must be positive and finite".into()));
    }
    if coeffs.is_zero() || eps == 0.0 {
        return SupportBody::ball(DVector::zeros(n), radius);
    }

    // fixed sample so the accepted scale is reproducible
    let mut rng = ChaCha8Rng::seed_from_u64(CONVEXITY_SAMPLE_SEED);
    let sample: Vec<Direction> = (0..1000)
        .map(|_| sphere::random_direction(&mut rng, n))
        .collect::<Result<_>>()?;

    let delta = tol::CONVEXITY_MARGIN * radius;
    let mut scale = eps;
    while scale >= tol::CONVEXITY_EPS_FLOOR * radius {
        let body = SupportBody::odd_perturbed_ball(radius, coeffs.scaled(scale))?;
        let min_radius = sample
            .iter()
            .map(|u| {
                let frame = sphere::tangent_frame(u);
                let b = frame.basis_matrix();
                let h = body.hessian_at(u.coords())?;
                let restricted = b.transpose() * h * b;
                Ok(linalg::symmetric_eigenvalues_sorted(&restricted)[0])
            })
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_radius > delta {
            return Ok(body);
        }
        scale *= 0.5;
    }
    Err(Error::ConstructionFailed { eps: scale })
}

/// Seed of the fixed direction sample used by the convexity check.
const CONVEXITY_SAMPLE_SEED: u64 = 0x5eed_0001;
