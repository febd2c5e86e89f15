//! Odd polynomials on the sphere and their degree-1 homogeneous extensions.
//!
//! A perturbation `q` is a sum of monomials of odd total degree in the
//! ambient coordinates, restricted to `S^{n-1}`. Oddness `q(-u) = -q(u)` is
//! then exact by construction, which is what makes perturbed balls have
//! machine-exact constant width. The homogeneous extension of one term
//! `c x^a` of degree `d` is `c x^a |x|^{1-d}`, and value, gradient and
//! Hessian below are the analytic derivatives of that product.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// One monomial `coeff * prod_i x_i^{exponents[i]}` with odd total degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub coeff: f64,
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    fn eval(&self, x: &DVector<f64>) -> f64 {
        self.coeff
            * x.iter()
                .zip(&self.exponents)
                .map(|(xi, e)| xi.powi(*e as i32))
                .product::<f64>()
    }

    /// Partial derivative of the bare monomial with respect to `x_i`.
    fn partial(&self, x: &DVector<f64>, i: usize) -> f64 {
        let e = self.exponents[i];
        if e == 0 {
            return 0.0;
        }
        let mut p = self.coeff * e as f64;
        for (j, (xj, ej)) in x.iter().zip(&self.exponents).enumerate() {
            let pow = if j == i { *ej as i32 - 1 } else { *ej as i32 };
            p *= xj.powi(pow);
        }
        p
    }

    fn second_partial(&self, x: &DVector<f64>, i: usize, l: usize) -> f64 {
        let ei = self.exponents[i];
        let el = self.exponents[l];
        if i == l {
            if ei < 2 {
                return 0.0;
            }
            let mut p = self.coeff * (ei as f64) * (ei as f64 - 1.0);
            for (j, (xj, ej)) in x.iter().zip(&self.exponents).enumerate() {
                let pow = if j == i { *ej as i32 - 2 } else { *ej as i32 };
                p *= xj.powi(pow);
            }
            p
        } else {
            if ei == 0 || el == 0 {
                return 0.0;
            }
            let mut p = self.coeff * (ei as f64) * (el as f64);
            for (j, (xj, ej)) in x.iter().zip(&self.exponents).enumerate() {
                let pow = if j == i || j == l { *ej as i32 - 1 } else { *ej as i32 };
                p *= xj.powi(pow);
            }
            p
        }
    }
}

/// A polynomial with only odd-degree monomial terms, used as a support
/// perturbation on the sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OddPolynomial {
    dim: usize,
    terms: Vec<Monomial>,
}

impl OddPolynomial {
    pub fn new(dim: usize, terms: Vec<Monomial>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        for t in &terms {
            if t.exponents.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: t.exponents.len() });
            }
            if t.degree() % 2 == 0 {
                return Err(Error::Domain(format!(
                    "monomial degree {} is even; only odd terms keep q(-u) = -q(u) exact",
                    t.degree()
                )));
            }
            if !t.coeff.is_finite() {
                return Err(Error::Domain("non-finite coefficient".into()));
            }
        }
        Ok(Self { dim, terms })
    }

    /// The zero polynomial.
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: Vec::new() }
    }

    /// Single term `u_i^3`.
    pub fn cube_of_coordinate(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::Domain(format!("coordinate {i} out of range for R^{dim}")));
        }
        let mut exponents = vec![0u32; dim];
        exponents[i] = 3;
        Self::new(dim, vec![Monomial { coeff: 1.0, exponents }])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff == 0.0)
    }

    /// Same polynomial with all coefficients scaled.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|t| Monomial { coeff: s * t.coeff, exponents: t.exponents.clone() })
                .collect(),
        }
    }

    /// Negated polynomial (the reflection `q(-u)`).
    pub fn negated(&self) -> Self {
        self.scaled(-1.0)
    }

    /// Value of the extension `sum_t c_t x^{a_t} |x|^{1 - d_t}` at any x != 0.
    pub fn extension(&self, x: &DVector<f64>) -> f64 {
        let r = x.norm();
        self.terms
            .iter()
            .map(|t| t.eval(x) * r.powi(1 - t.degree() as i32))
            .sum()
    }

    /// Gradient of the extension.
    pub fn extension_gradient(&self, x: &DVector<f64>) -> DVector<f64> {
        let n = x.len();
        let r = x.norm();
        let mut g = DVector::zeros(n);
        for t in &self.terms {
            let d = t.degree() as i32;
            let f = t.eval(x);
            let rp = r.powi(1 - d); // |x|^{1-d}
            let rg = (1 - d) as f64 * r.powi(-1 - d); // d/dx |x|^{1-d} = (1-d)|x|^{-1-d} x
            for i in 0..n {
                g[i] += t.partial(x, i) * rp + f * rg * x[i];
            }
        }
        g
    }

    /// Hessian of the extension (product rule applied twice).
    pub fn extension_hessian(&self, x: &DVector<f64>) -> DMatrix<f64> {
        let n = x.len();
        let r = x.norm();
        let mut h = DMatrix::zeros(n, n);
        for t in &self.terms {
            let d = t.degree() as i32;
            let f = t.eval(x);
            let rp = r.powi(1 - d);
            let c1 = (1 - d) as f64 * r.powi(-1 - d);
            let c2 = (1 - d) as f64 * (-1 - d) as f64 * r.powi(-3 - d);
            let grad_f: Vec<f64> = (0..n).map(|i| t.partial(x, i)).collect();
            for i in 0..n {
                for l in 0..n {
                    let mut v = t.second_partial(x, i, l) * rp;
                    v += grad_f[i] * c1 * x[l] + grad_f[l] * c1 * x[i];
                    v += f * (c2 * x[i] * x[l] + if i == l { c1 } else { 0.0 });
                    h[(i, l)] += v;
                }
            }
        }
        h
    }

    /// Parses a compact term list like `"0.1 u1^3"` or
    /// `"u1^3 + 0.5 u1 u2 u3 - 2 u2^5"`. Indices are 1-based.
    pub fn parse(dim: usize, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let normalized = text.replace('-', "+-");
        for raw in normalized.split('+') {
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            let mut coeff = 1.0;
            let mut seen_coeff = false;
            let mut exponents = vec![0u32; dim];
            let body = raw.strip_prefix('-').map(|s| {
                coeff = -1.0;
                s
            });
            let body = body.unwrap_or(raw);
            for factor in body.split(['*', ' ']).filter(|f| !f.is_empty()) {
                if let Some(rest) = factor.strip_prefix('u') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, p)) => (i, p),
                        None => (rest, "1"),
                    };
                    let i: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coordinate index in '{factor}'")))?;
                    let p: u32 = pow
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
                    if i == 0 || i > dim {
                        return Err(Error::Parse(format!("coordinate u{i} out of range for R^{dim}")));
                    }
                    exponents[i - 1] += p;
                } else {
                    let c: f64 = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{factor}'")))?;
                    if seen_coeff {
                        coeff *= c;
                    } else {
                        coeff *= c;
                        seen_coeff = true;
                    }
                }
            }
            terms.push(Monomial { coeff, exponents });
        }
        Self::new(dim, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rejects_even_terms() {
        let r = OddPolynomial::new(3, vec![Monomial { coeff: 1.0, exponents: vec![2, 0, 0] }]);
        assert!(r.is_err());
    }

    #[test]
    fn oddness_is_exact() {
        let q = OddPolynomial::parse(3, "0.1 u1^3 + 0.05 u1 u2 u3").unwrap();
        let x = DVector::from_column_slice(&[0.3, -0.7, 0.64]);
        assert_eq!(q.extension(&x), -q.extension(&(-&x)));
    }

    #[test]
    fn extension_is_homogeneous() {
        let q = OddPolynomial::parse(3, "u1^3").unwrap();
        let x = DVector::from_column_slice(&[0.3, 0.4, -1.2]);
        let v1 = q.extension(&(2.5 * &x));
        assert_abs_diff_eq!(v1, 2.5 * q.extension(&x), epsilon = 1e-12);
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let q = OddPolynomial::parse(3, "u1^3 + 0.5 u1 u2 u3").unwrap();
        let x = DVector::from_column_slice(&[0.9, -0.2, 0.5]);
        let g = q.extension_gradient(&x);
        let h = 1e-6;
        for i in 0..3 {
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[i] += h;
            xm[i] -= h;
            let fd = (q.extension(&xp) - q.extension(&xm)) / (2.0 * h);
            assert_abs_diff_eq!(g[i], fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn hessian_matches_finite_differences() {
        let q = OddPolynomial::parse(3, "u1^3 + 0.25 u2^3").unwrap();
        let x = DVector::from_column_slice(&[0.6, 0.64, -0.48]);
        let hess = q.extension_hessian(&x);
        let h = 1e-4;
        for i in 0..3 {
            for l in 0..3 {
                let mut xpp = x.clone();
                let mut xpm = x.clone();
                let mut xmp = x.clone();
                let mut xmm = x.clone();
                xpp[i] += h;
                xpp[l] += h;
                xpm[i] += h;
                xpm[l] -= h;
                xmp[i] -= h;
                xmp[l] += h;
                xmm[i] -= h;
                xmm[l] -= h;
                let fd = (q.extension(&xpp) - q.extension(&xpm) - q.extension(&xmp)
                    + q.extension(&xmm))
                    / (4.0 * h * h);
                assert_abs_diff_eq!(hess[(i, l)], fd, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn parse_round_trips_structure() {
        let q = OddPolynomial::parse(4, "u1^3 - 0.5 u2 u3 u4").unwrap();
        assert_eq!(q.terms().len(), 2);
        assert_eq!(q.terms()[0].exponents, vec![3, 0, 0, 0]);
        assert_eq!(q.terms()[1].coeff, -0.5);
        assert_eq!(q.terms()[1].exponents, vec![0, 1, 1, 1]);
    }
}
