//! The Reuleaux triangle profile and its solid of revolution.
//!
//! The profile is the intersection of three discs of radius `w` centered at
//! the vertices of an equilateral triangle of side `w`, placed with its
//! symmetry axis along the second coordinate and centroid at the origin.
//! Rotating it about that axis gives a genuinely nonsmooth body of constant
//! width `w` in `R^3`: support values are exact, gradients exist away from
//! the sector boundaries, second derivatives do not exist at the ridge
//! directions.

use crate::error::{Error, Result};
use crate::tol;

/// Support data of the 2-D profile at a unit direction `d = (rho, z)`.
#[derive(Debug, Clone)]
pub struct ProfileSupport {
    pub value: f64,
    pub point: [f64; 2],
    /// Support points of candidates tying within `tol::SUPPORT_TIE`
    /// (sector-boundary directions); empty means unique.
    pub ties: Vec<[f64; 2]>,
}

/// Immutable geometry of a width-`w` Reuleaux triangle.
#[derive(Debug, Clone)]
pub struct ReuleauxProfile {
    width: f64,
    vertices: [[f64; 2]; 3],
}

impl ReuleauxProfile {
    pub fn new(width: f64) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::Domain(format!("reuleaux width {width} must be positive")));
        }
        let s3 = 3.0f64.sqrt();
        // apex on the +z axis, base below; centroid at the origin
        let vertices = [
            [0.0, width / s3],
            [-width / 2.0, -width / (2.0 * s3)],
            [width / 2.0, -width / (2.0 * s3)],
        ];
        Ok(Self { width, vertices })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn vertices(&self) -> &[[f64; 2]; 3] {
        &self.vertices
    }

    /// Support value and point for a unit direction.
    ///
    /// Candidates are the three vertices and, for each vertex `v_i`, the arc
    /// point `v_i + w d` provided it lies in all three discs. The maximizer
    /// over candidates is the exact support point of the disc intersection.
    pub fn support(&self, d: [f64; 2]) -> ProfileSupport {
        let w = self.width;
        let mut candidates: Vec<(f64, [f64; 2])> = Vec::with_capacity(6);
        for v in &self.vertices {
            candidates.push((v[0] * d[0] + v[1] * d[1], *v));
        }
        for v in &self.vertices {
            let p = [v[0] + w * d[0], v[1] + w * d[1]];
            let inside = self.vertices.iter().all(|c| {
                let dx = p[0] - c[0];
                let dy = p[1] - c[1];
                (dx * dx + dy * dy).sqrt() <= w + tol::SUPPORT_TIE
            });
            if inside {
                candidates.push((v[0] * d[0] + v[1] * d[1] + w, p));
            }
        }
        let best = candidates
            .iter()
            .cloned()
            .max_by(|a, b| a.0.total_cmp(&b.0))
            .expect("nonempty candidate set");
        let ties: Vec<[f64; 2]> = candidates
            .iter()
            .filter(|(v, p)| {
                (best.0 - v).abs() <= tol::SUPPORT_TIE
                    && ((p[0] - best.1[0]).abs() > tol::SUPPORT_TIE
                        || (p[1] - best.1[1]).abs() > tol::SUPPORT_TIE)
            })
            .map(|(_, p)| *p)
            .collect();
        ProfileSupport { value: best.0, point: best.1, ties }
    }

    /// Exact area `(pi - sqrt(3)) w^2 / 2`.
    pub fn area(&self) -> f64 {
        (std::f64::consts::PI - 3.0f64.sqrt()) / 2.0 * self.width * self.width
    }
}
