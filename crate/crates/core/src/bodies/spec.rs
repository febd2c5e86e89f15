//! Serializable body descriptions.
//!
//! A `BodySpec` is the on-disk form of a body: a self-describing JSON
//! document with a `kind` tag, full-precision decimal parameters and an
//! optional human label. Serialization uses shortest round-trip decimal
//! formatting, so load(save(spec)) reproduces every parameter value exactly.

use super::monomial::{Monomial, OddPolynomial};
use super::{BodyKind, SupportBody};
use crate::error::{Error, Result};
use crate::sphere::Direction;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BodySpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    #[serde(flatten)]
    pub kind: KindSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KindSpec {
    Ball {
        center: Vec<f64>,
        radius: f64,
    },
    Ellipsoid {
        /// Shape matrix rows; `h(u) = sqrt(u' A u)`.
        shape: Vec<Vec<f64>>,
    },
    Polytope {
        vertices: Vec<Vec<f64>>,
    },
    OddPerturbedBall {
        dim: usize,
        radius: f64,
        terms: Vec<TermSpec>,
    },
    ReuleauxRevolution {
        width: f64,
        axis: Vec<f64>,
    },
    Sum {
        parts: Vec<PartSpec>,
    },
    Reflection {
        inner: Box<KindSpec>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: f64,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartSpec {
    pub weight: f64,
    #[serde(flatten)]
    pub body: KindSpec,
}

impl BodySpec {
    pub fn new(kind: KindSpec) -> Self {
        Self { label: None, kind }
    }

    pub fn with_label(kind: KindSpec, label: impl Into<String>) -> Self {
        Self { label: Some(label.into()), kind }
    }

    /// Builds the evaluator described by this spec.
    pub fn to_body(&self) -> Result<SupportBody> {
        self.kind.to_body()
    }

    /// Describes a body built from closed-form kinds. Runtime-only wrappers
    /// (projections) have no file form and return an error.
    pub fn from_body(body: &SupportBody) -> Result<Self> {
        Ok(Self { label: None, kind: KindSpec::from_kind(body.kind())? })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("body specs serialize infallibly")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")
            .map_err(|e| Error::Parse(format!("write {}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("read {}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }
}

impl KindSpec {
    pub fn to_body(&self) -> Result<SupportBody> {
        match self {
            KindSpec::Ball { center, radius } => {
                SupportBody::ball(DVector::from_column_slice(center), *radius)
            }
            KindSpec::Ellipsoid { shape } => {
                let n = shape.len();
                let mut m = DMatrix::zeros(n, n);
                for (i, row) in shape.iter().enumerate() {
                    if row.len() != n {
                        return Err(Error::Parse("ellipsoid shape matrix is not square".into()));
                    }
                    for (j, v) in row.iter().enumerate() {
                        m[(i, j)] = *v;
                    }
                }
                SupportBody::ellipsoid(m)
            }
            KindSpec::Polytope { vertices } => SupportBody::polytope(
                vertices.iter().map(|v| DVector::from_column_slice(v)).collect(),
            ),
            KindSpec::OddPerturbedBall { dim, radius, terms } => {
                let poly = OddPolynomial::new(
                    *dim,
                    terms
                        .iter()
                        .map(|t| Monomial { coeff: t.coeff, exponents: t.exponents.clone() })
                        .collect(),
                )?;
                SupportBody::odd_perturbed_ball(*radius, poly)
            }
            KindSpec::ReuleauxRevolution { width, axis } => {
                SupportBody::reuleaux_revolution(*width, Direction::from_slice(axis)?)
            }
            KindSpec::Sum { parts } => SupportBody::weighted_sum(
                parts
                    .iter()
                    .map(|p| Ok((p.body.to_body()?, p.weight)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            KindSpec::Reflection { inner } => Ok(inner.to_body()?.reflect()),
        }
    }

    fn from_kind(kind: &BodyKind) -> Result<Self> {
        Ok(match kind {
            BodyKind::Ball { center, radius } => KindSpec::Ball {
                center: center.iter().copied().collect(),
                radius: *radius,
            },
            BodyKind::Ellipsoid { shape } => KindSpec::Ellipsoid {
                shape: (0..shape.nrows())
                    .map(|i| shape.row(i).iter().copied().collect())
                    .collect(),
            },
            BodyKind::Polytope { vertices } => KindSpec::Polytope {
                vertices: vertices.iter().map(|v| v.iter().copied().collect()).collect(),
            },
            BodyKind::OddPerturbedBall { radius, poly } => KindSpec::OddPerturbedBall {
                dim: poly.dim(),
                radius: *radius,
                terms: poly
                    .terms()
                    .iter()
                    .map(|t| TermSpec { coeff: t.coeff, exponents: t.exponents.clone() })
                    .collect(),
            },
            BodyKind::ReuleauxRevolution { profile, axis } => KindSpec::ReuleauxRevolution {
                width: profile.width(),
                axis: axis.coords().iter().copied().collect(),
            },
            BodyKind::Sum { parts } => KindSpec::Sum {
                parts: parts
                    .iter()
                    .map(|(b, w)| {
                        Ok(PartSpec { weight: *w, body: KindSpec::from_kind(b.kind())? })
                    })
                    .collect::<Result<Vec<_>>>()?,
            },
            BodyKind::Reflection { inner } => KindSpec::Reflection {
                inner: Box::new(KindSpec::from_kind(inner.kind())?),
            },
            BodyKind::Projected { .. } => {
                return Err(Error::Parse(
                    "projected bodies are runtime-only and have no file form".into(),
                ))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn awkward() -> f64 {
        // a value with no short decimal form
        0.1 + 0.2 + 1e-17
    }

    #[test]
    fn json_round_trip_is_value_exact() {
        let spec = BodySpec::with_label(
            KindSpec::Sum {
                parts: vec![
                    PartSpec {
                        weight: awkward(),
                        body: KindSpec::Ball { center: vec![0.0, awkward(), -1.0], radius: 2.0 },
                    },
                    PartSpec {
                        weight: 1.0,
                        body: KindSpec::OddPerturbedBall {
                            dim: 3,
                            radius: 1.0,
                            terms: vec![TermSpec {
                                coeff: 0.1 * awkward(),
                                exponents: vec![3, 0, 0],
                            }],
                        },
                    },
                ],
            },
            "sum body",
        );
        let text = spec.to_json_string();
        let back = BodySpec::from_json_str(&text).unwrap();
        assert_eq!(spec, back);
        // serializing again reproduces the same bytes
        assert_eq!(text, back.to_json_string());
    }

    #[test]
    fn spec_to_body_round_trip_evaluates_identically() {
        let spec = BodySpec::new(KindSpec::Ellipsoid {
            shape: vec![
                vec![1.0, 0.0, 0.0],
                vec![0.0, 4.0, 0.0],
                vec![0.0, 0.0, 9.0],
            ],
        });
        let body = spec.to_body().unwrap();
        let back = BodySpec::from_body(&body).unwrap();
        let body2 = back.to_body().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let u = sphere::random_direction(&mut rng, 3).unwrap();
            assert_eq!(body.support(&u).unwrap(), body2.support(&u).unwrap());
        }
    }

    #[test]
    fn parse_error_is_reported() {
        let r = BodySpec::from_json_str("{\"kind\": \"ball\", \"radius\": true}");
        assert!(matches!(r, Err(Error::Parse(_))));
    }

    #[test]
    fn reflection_round_trips_through_spec() {
        let spec = BodySpec::new(KindSpec::Reflection {
            inner: Box::new(KindSpec::ReuleauxRevolution {
                width: 1.0,
                axis: vec![0.0, 0.0, 1.0],
            }),
        });
        let body = spec.to_body().unwrap();
        assert_eq!(body.kind_name(), "reflection");
        let u = Direction::from_slice(&[0.3, -0.4, 0.5]).unwrap();
        let direct = SupportBody::reuleaux_revolution(1.0, Direction::axis(3, 2).unwrap())
            .unwrap()
            .support(&u.antipode())
            .unwrap();
        assert_eq!(body.support(&u).unwrap(), direct);
    }
}
