//! Directions, tangent frames, spherical caps and quadrature on unit spheres.
//!
//! All integrals in this crate use the unnormalized Hausdorff measure on
//! `S^d` (total mass `2*pi` for the circle, `4*pi` for `S^2`). Dividing by
//! the total mass recovers the Haar probability convention.

use crate::error::{Error, Result};
use crate::linalg;
use crate::tol;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

/// A unit vector in `R^n`, `n >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    coords: DVector<f64>,
}

impl Direction {
    /// Wraps a vector that is already unit length (within `1e-12`).
    pub fn new(coords: DVector<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidDimension(coords.len()));
        }
        let norm = coords.norm();
        if (norm - 1.0).abs() > tol::FRAME_ORTHO {
            return Err(Error::Domain(format!("direction norm {norm} is not 1")));
        }
        Ok(Self { coords })
    }

    /// Normalizes an arbitrary nonzero vector onto the sphere.
    pub fn normalized(v: DVector<f64>) -> Result<Self> {
        if v.len() < 2 {
            return Err(Error::InvalidDimension(v.len()));
        }
        let norm = v.norm();
        if norm < 1e-300 {
            return Err(Error::Domain("cannot normalize the zero vector".into()));
        }
        Ok(Self { coords: v / norm })
    }

    /// Standard basis direction `e_i` in `R^n`.
    pub fn axis(n: usize, i: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        if i >= n {
            return Err(Error::Domain(format!("axis index {i} out of range for R^{n}")));
        }
        let mut v = DVector::zeros(n);
        v[i] = 1.0;
        Ok(Self { coords: v })
    }

    pub fn from_slice(v: &[f64]) -> Result<Self> {
        Self::normalized(DVector::from_column_slice(v))
    }

    /// For internal hot paths where unit norm is guaranteed by construction.
    pub(crate) fn unchecked(coords: DVector<f64>) -> Self {
        debug_assert!((coords.norm() - 1.0).abs() < 1e-9);
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    /// The antipode `-u`.
    pub fn antipode(&self) -> Self {
        Self { coords: -&self.coords }
    }
}

/// An orthonormal basis of the orthogonal complement `u^perp`.
#[derive(Debug, Clone)]
pub struct TangentFrame {
    base: Direction,
    basis: Vec<DVector<f64>>,
}

impl TangentFrame {
    pub fn base(&self) -> &Direction {
        &self.base
    }

    /// The `n-1` orthonormal tangent vectors.
    pub fn basis(&self) -> &[DVector<f64>] {
        &self.basis
    }

    /// Tangent vectors as the columns of an `n x (n-1)` matrix.
    pub fn basis_matrix(&self) -> DMatrix<f64> {
        let n = self.base.dim();
        let mut m = DMatrix::zeros(n, n - 1);
        for (j, b) in self.basis.iter().enumerate() {
            m.set_column(j, b);
        }
        m
    }
}

/// The spherical cap `{ v : <v, center> >= 1 - 1/(2 i^2) }`.
///
/// As the index grows the caps shrink to the center point, which is how the
/// surface-area-measure density is probed.
#[derive(Debug, Clone)]
pub struct Cap {
    pub center: Direction,
    pub index: u32,
}

impl Cap {
    pub fn new(center: Direction, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::Domain("cap index must be positive".into()));
        }
        Ok(Self { center, index })
    }

    /// Inner-product threshold `1 - 1/(2 i^2)`.
    pub fn threshold(&self) -> f64 {
        1.0 - 1.0 / (2.0 * (self.index as f64) * (self.index as f64))
    }

    pub fn contains(&self, v: &Direction) -> bool {
        self.center.coords().dot(v.coords()) >= self.threshold()
    }
}

/// Uniform direction on `S^{n-1}`: a normalized standard normal vector.
pub fn random_direction<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Direction> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    loop {
        let v = DVector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
        let norm = v.norm();
        if norm > 1e-12 {
            return Ok(Direction { coords: v / norm });
        }
    }
}

/// Deterministic orthonormal basis of `u^perp`.
///
/// The standard basis vectors are fed to Gram-Schmidt starting from the
/// coordinate of `u` with smallest absolute value (cycling upward), so the
/// most orthogonal candidate pivots first and the rejected candidate is the
/// one nearly parallel to `u`.
pub fn tangent_frame(u: &Direction) -> TangentFrame {
    let n = u.dim();
    let pivot = u
        .coords()
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.abs().total_cmp(&b.abs()))
        .map(|(i, _)| i)
        .unwrap();

    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(n - 1);
    for step in 0..n {
        if basis.len() == n - 1 {
            break;
        }
        let j = (pivot + step) % n;
        let mut v = DVector::zeros(n);
        v[j] = 1.0;
        for _ in 0..2 {
            let c = u.coords().dot(&v);
            v.axpy(-c, u.coords(), 1.0);
            for b in &basis {
                let c = b.dot(&v);
                v.axpy(-c, b, 1.0);
            }
        }
        let norm = v.norm();
        if norm > 1e-8 {
            basis.push(v / norm);
        }
    }
    debug_assert_eq!(basis.len(), n - 1);
    TangentFrame { base: u.clone(), basis }
}

/// Hausdorff measure of a cap on `S^{n-1}`.
pub fn cap_measure(cap: &Cap, n: usize) -> Result<f64> {
    cap_measure_threshold(cap.threshold(), n)
}

/// Measure of `{ v in S^{n-1} : <v, c> >= t0 }` for an explicit threshold.
///
/// Computed as `|S^{n-2}| * int_0^{acos t0} sin^{n-2}(theta) dtheta`; the
/// angular substitution keeps the integrand smooth for every `n >= 2`.
pub fn cap_measure_threshold(t0: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if t0 >= 1.0 {
        return Ok(0.0);
    }
    let theta_max = t0.max(-1.0).acos();
    let p = (n - 2) as i32;
    let integral = adaptive_simpson(&|theta: f64| theta.sin().powi(p), 0.0, theta_max, 1e-13, 40);
    Ok(sphere_surface(n - 2) * integral)
}

/// Unnormalized surface measure of `S^d`: `2 pi^{(d+1)/2} / Gamma((d+1)/2)`.
pub fn sphere_surface(d: usize) -> f64 {
    // Gamma at integer and half-integer arguments, enough for any d here.
    let a = (d as f64 + 1.0) / 2.0;
    2.0 * std::f64::consts::PI.powf(a) / gamma_half(a)
}

/// Gamma(a) for a a positive multiple of 1/2.
fn gamma_half(a: f64) -> f64 {
    let mut x = a;
    let mut acc = 1.0;
    while x > 1.0 + 1e-9 {
        x -= 1.0;
        acc *= x;
    }
    if (x - 0.5).abs() < 1e-9 {
        acc * std::f64::consts::PI.sqrt()
    } else {
        acc // Gamma(1) = 1
    }
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(f, a, m, fa, flm, fm);
        let right = simpson(f, m, b, fm, frm, fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(f, a, b, fa, fm, fb);
    rec(f, a, b, fa, fm, fb, whole, tol, depth)
}

/// A positive-weight quadrature rule on `S^d`, nodes in `R^{d+1}`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    dim: usize,
    nodes: Vec<Direction>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Direction] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: FnMut(&Direction) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(u, w)| w * f(u))
            .sum()
    }
}

/// Builds a quadrature rule on `S^d` with roughly `order` nodes.
///
/// * `d = 1`: uniform angular grid (trapezoid), spectrally accurate for
///   smooth periodic integrands;
/// * `d = 2`: golden-angle spiral lattice with equal weights `4 pi / N`;
/// * `d = 3, 4`: product of a Gauss-Legendre polar rule (with the
///   `sin^{d-1}` factor folded into the weights) and a lower-dimensional rule.
pub fn sphere_quadrature(d: usize, order: usize) -> Result<QuadratureRule> {
    if !(1..=4).contains(&d) {
        return Err(Error::UnsupportedSphereDim(d));
    }
    if order < 8 {
        return Err(Error::Domain(format!("quadrature order {order} < 8")));
    }
    Ok(match d {
        1 => circle_rule(order),
        2 => spiral_rule(order),
        _ => polar_product_rule(d, order)?,
    })
}

fn circle_rule(n: usize) -> QuadratureRule {
    let w = 2.0 * std::f64::consts::PI / n as f64;
    let (nodes, weights) = (0..n)
        .map(|j| {
            let t = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            (
                Direction { coords: DVector::from_column_slice(&[t.cos(), t.sin()]) },
                w,
            )
        })
        .unzip();
    QuadratureRule { dim: 1, nodes, weights }
}

fn spiral_rule(n: usize) -> QuadratureRule {
    let golden_angle = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
    let w = 4.0 * std::f64::consts::PI / n as f64;
    let (nodes, weights) = (0..n)
        .map(|j| {
            // z offsets of (2j+1)/N keep nodes off the poles and make the
            // z-coordinates sum to zero exactly.
            let z = 1.0 - (2.0 * j as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden_angle * j as f64;
            (
                Direction {
                    coords: DVector::from_column_slice(&[r * phi.cos(), r * phi.sin(), z]),
                },
                w,
            )
        })
        .unzip();
    QuadratureRule { dim: 2, nodes, weights }
}

fn polar_product_rule(d: usize, order: usize) -> Result<QuadratureRule> {
    // u = (v sin(phi), cos(phi)), dsigma_d = sin^{d-1}(phi) dphi dsigma_{d-1}(v)
    let m = ((order as f64).powf(1.0 / d as f64).ceil() as usize).max(8);
    let sub_order = (order.div_ceil(m)).max(8);
    let sub = sphere_quadrature(d - 1, sub_order)?;
    let gl = gauss_legendre(m, 0.0, std::f64::consts::PI);

    let mut nodes = Vec::with_capacity(m * sub.len());
    let mut weights = Vec::with_capacity(m * sub.len());
    for (phi, wphi) in &gl {
        let s = phi.sin();
        let c = phi.cos();
        let polar_w = wphi * s.powi(d as i32 - 1);
        for (v, wv) in sub.nodes().iter().zip(sub.weights()) {
            let mut coords = DVector::zeros(d + 1);
            for i in 0..d {
                coords[i] = v.coords()[i] * s;
            }
            coords[d] = c;
            nodes.push(Direction { coords });
            weights.push(polar_w * wv);
        }
    }
    Ok(QuadratureRule { dim: d, nodes, weights })
}

/// Gauss-Legendre nodes and weights transplanted to `[a, b]`.
fn gauss_legendre(m: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        // Newton iteration from the Chebyshev initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(m, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w));
    }
    out.sort_by(|p, q| p.0.total_cmp(&q.0));
    out
}

/// Legendre polynomial `P_m` and its derivative at `x` by recurrence.
fn legendre(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=m {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Haar-distributed rotation in `O(n)`: QR of a Gaussian matrix with the
/// positive-diagonal sign convention (built into the Gram-Schmidt used here).
pub fn haar_rotation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<DMatrix<f64>> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    loop {
        let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
        let q = linalg::orthonormalize(&g, 1e-10);
        if q.ncols() == n {
            return Ok(q);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_direction_unit_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u = random_direction(&mut rng, 3).unwrap();
        assert_abs_diff_eq!(u.coords().norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn random_direction_rejects_dim_below_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(random_direction(&mut rng, 1), Err(Error::InvalidDimension(1))));
    }

    #[test]
    fn random_direction_mean_shrinks() {
        // CLT: the mean of N uniform directions has norm O(1/sqrt(N)).
        let mut rng = ChaCha8Rng::seed_from_u64(12345);
        let n = 100_000;
        let mut mean = DVector::zeros(3);
        for _ in 0..n {
            mean += random_direction(&mut rng, 3).unwrap().coords();
        }
        mean /= n as f64;
        assert!(mean.norm() < 0.02, "mean norm {}", mean.norm());
    }

    #[test]
    fn tangent_frame_axis_case() {
        let u = Direction::axis(3, 0).unwrap();
        let f = tangent_frame(&u);
        assert_eq!(f.basis().len(), 2);
        assert_abs_diff_eq!(f.basis()[0][1].abs(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(f.basis()[1][2].abs(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn tangent_frame_completeness() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=5 {
            let u = random_direction(&mut rng, n).unwrap();
            let f = tangent_frame(&u);
            let b = f.basis_matrix();
            let sum = &b * b.transpose() + u.coords() * u.coords().transpose();
            let id = DMatrix::identity(n, n);
            assert!((sum - id).norm() < 1e-10);
        }
    }

    #[test]
    fn tangent_frame_orthogonal_to_base() {
        let u = Direction::from_slice(&[1.0, 1.0, 1.0]).unwrap();
        let f = tangent_frame(&u);
        for b in f.basis() {
            assert!(u.coords().dot(b).abs() < 1e-12);
            assert_abs_diff_eq!(b.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn cap_hemisphere_matches_half_sphere() {
        let m = cap_measure_threshold(0.0, 3).unwrap();
        assert_abs_diff_eq!(m, 2.0 * std::f64::consts::PI, epsilon = 1e-10);
    }

    #[test]
    fn cap_index_one_closed_form() {
        // On S^2 a cap of threshold t0 has area 2 pi (1 - t0); i = 1 gives t0 = 1/2.
        let cap = Cap::new(Direction::axis(3, 2).unwrap(), 1).unwrap();
        let m = cap_measure(&cap, 3).unwrap();
        assert_abs_diff_eq!(m, std::f64::consts::PI, epsilon = 1e-10);
    }

    #[test]
    fn cap_measure_decreases_in_index() {
        let u = Direction::axis(3, 0).unwrap();
        let mut prev = f64::INFINITY;
        for i in 1..40 {
            let m = cap_measure(&Cap::new(u.clone(), i).unwrap(), 3).unwrap();
            assert!(m < prev && m > 0.0);
            prev = m;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn cap_measure_circle() {
        // On S^1 the cap is an arc of length 2 acos(t0).
        let m = cap_measure_threshold(0.5, 2).unwrap();
        assert_abs_diff_eq!(m, 2.0 * (0.5f64).acos(), epsilon = 1e-10);
    }

    #[test]
    fn circle_rule_trig_exact() {
        let rule = sphere_quadrature(1, 64).unwrap();
        let v = rule.integrate(|u| u.coords()[0] * u.coords()[0]);
        assert_abs_diff_eq!(v, std::f64::consts::PI, epsilon = 1e-12);
    }

    #[test]
    fn spiral_rule_total_mass_and_moment() {
        let rule = sphere_quadrature(2, 4096).unwrap();
        let total = rule.integrate(|_| 1.0);
        assert_abs_diff_eq!(total, 4.0 * std::f64::consts::PI, epsilon = 1e-9);
        let zz = rule.integrate(|u| u.coords()[2] * u.coords()[2]);
        assert_abs_diff_eq!(zz, 4.0 * std::f64::consts::PI / 3.0, epsilon = 1e-4);
    }

    #[test]
    fn rules_kill_linear_functions() {
        for (d, order, eps) in [(1, 64, 1e-12), (2, 4096, 2e-3), (3, 2000, 1e-9)] {
            let rule = sphere_quadrature(d, order).unwrap();
            for i in 0..=d {
                let v = rule.integrate(|u| u.coords()[i]);
                assert!(v.abs() < eps, "d={d} i={i} v={v}");
            }
        }
    }

    #[test]
    fn product_rule_total_mass() {
        let s3 = sphere_quadrature(3, 2000).unwrap();
        assert_abs_diff_eq!(
            s3.integrate(|_| 1.0),
            2.0 * std::f64::consts::PI * std::f64::consts::PI,
            epsilon = 1e-9
        );
        let s4 = sphere_quadrature(4, 3000).unwrap();
        assert_abs_diff_eq!(s4.integrate(|_| 1.0), sphere_surface(4), epsilon = 1e-9);
        assert!(s3.weights().iter().all(|w| *w > 0.0));
        assert!(s4.weights().iter().all(|w| *w > 0.0));
    }

    #[test]
    fn unsupported_dims_error() {
        assert!(matches!(sphere_quadrature(5, 100), Err(Error::UnsupportedSphereDim(5))));
        assert!(sphere_quadrature(2, 4).is_err());
    }

    #[test]
    fn sphere_surface_values() {
        assert_abs_diff_eq!(sphere_surface(1), 2.0 * std::f64::consts::PI, epsilon = 1e-14);
        assert_abs_diff_eq!(sphere_surface(2), 4.0 * std::f64::consts::PI, epsilon = 1e-14);
        // |S^3| = 2 pi^2, |S^4| = 8 pi^2 / 3
        assert_abs_diff_eq!(sphere_surface(3), 2.0 * std::f64::consts::PI.powi(2), epsilon = 1e-12);
        assert_abs_diff_eq!(
            sphere_surface(4),
            8.0 * std::f64::consts::PI.powi(2) / 3.0,
            epsilon = 1e-12
        );
    }
}
