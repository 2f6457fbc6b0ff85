use std::fmt;
use std::sync::Arc;

use super::FuzzyMapping;
use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

/// A parametric path may not jump by more than this multiple of its median
/// sample spacing.
pub const MAX_GAP_RATIO: f64 = 1e3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Quadrature {
    /// Composite trapezoid on chords, second order.
    #[default]
    Trapezoid,
    /// Composite Simpson with the path derivative taken from the quadratic
    /// through each panel pair. Even sample counts are bumped by one.
    Simpson,
}

type ParamFn<T> = dyn Fn(T) -> LcNumber<T> + Send + Sync;

#[derive(Clone)]
pub enum PathKind<T> {
    Segment(LcNumber<T>, LcNumber<T>),
    Polyline(Vec<LcNumber<T>>),
    /// `z(t)` for `t ∈ [0, 1]`.
    Parametric(Arc<ParamFn<T>>),
}

impl<T: fmt::Debug> fmt::Debug for PathKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Segment(a, b) => f.debug_tuple("Segment").field(a).field(b).finish(),
            Self::Polyline(v) => f.debug_tuple("Polyline").field(v).finish(),
            Self::Parametric(_) => f.write_str("Parametric(..)"),
        }
    }
}

/// Integration support: the kind of path and how many sample points to use
/// on each straight piece (or over the whole parameter range for a
/// parametric path).
#[derive(Clone, Debug)]
pub struct Path<T> {
    pub kind: PathKind<T>,
    pub samples: usize,
}

impl<T: Scalar> Path<T> {
    pub fn segment(from: LcNumber<T>, to: LcNumber<T>, samples: usize) -> Self {
        Self {
            kind: PathKind::Segment(from, to),
            samples,
        }
    }

    pub fn polyline(vertices: Vec<LcNumber<T>>, samples: usize) -> Self {
        Self {
            kind: PathKind::Polyline(vertices),
            samples,
        }
    }

    pub fn parametric(
        z: impl Fn(T) -> LcNumber<T> + Send + Sync + 'static,
        samples: usize,
    ) -> Self {
        Self {
            kind: PathKind::Parametric(Arc::new(z)),
            samples,
        }
    }

    pub fn start(&self) -> Option<LcNumber<T>> {
        match &self.kind {
            PathKind::Segment(a, _) => Some(*a),
            PathKind::Polyline(v) => v.first().copied(),
            PathKind::Parametric(f) => Some(f(T::zero())),
        }
    }

    pub fn end(&self) -> Option<LcNumber<T>> {
        match &self.kind {
            PathKind::Segment(_, b) => Some(*b),
            PathKind::Polyline(v) => v.last().copied(),
            PathKind::Parametric(f) => Some(f(T::one())),
        }
    }

    /// Node lists, one per straight piece (a single list for parametric
    /// paths), each with `n` points.
    fn pieces(&self, n: usize) -> Result<Vec<Vec<LcNumber<T>>>> {
        if self.samples < 2 {
            return Err(Error::InvalidArgument(format!(
                "path needs at least 2 samples, got {}",
                self.samples
            )));
        }
        let last = T::from_count(n - 1);
        let along = |a: LcNumber<T>, b: LcNumber<T>| -> Vec<LcNumber<T>> {
            (0..n)
                .map(|k| {
                    if k == n - 1 {
                        b
                    } else {
                        a + (b - a).scale(T::from_count(k) / last)
                    }
                })
                .collect()
        };
        match &self.kind {
            PathKind::Segment(a, b) => Ok(vec![along(*a, *b)]),
            PathKind::Polyline(v) => {
                if v.len() < 2 {
                    return Err(Error::InvalidArgument(
                        "polyline needs at least 2 vertices".into(),
                    ));
                }
                Ok(v.windows(2).map(|w| along(w[0], w[1])).collect())
            }
            PathKind::Parametric(f) => {
                let nodes: Vec<_> = (0..n).map(|k| f(T::from_count(k) / last)).collect();
                if nodes.iter().any(|z| !z.is_finite()) {
                    return Err(Error::Evaluation("parametric path is not finite".into()));
                }
                let mut gaps: Vec<T> = nodes.windows(2).map(|w| w[0].dist(w[1])).collect();
                let max_gap = gaps.iter().copied().fold(T::zero(), T::max);
                gaps.sort_by(|a, b| a.partial_cmp(b).expect("finite gaps"));
                let median = gaps[gaps.len() / 2];
                if max_gap > median * T::lit(MAX_GAP_RATIO) && max_gap > T::epsilon() {
                    return Err(Error::InvalidArgument(
                        "parametric path is discontinuous on its sample grid".into(),
                    ));
                }
                Ok(vec![nodes])
            }
        }
    }
}

/// `∫_path f(z) dz`, the sum over sample panels of `f(z(t)) ⊙ z'(t) dt`.
pub fn contour_integral<T: Scalar>(f: &FuzzyMapping<T>, path: &Path<T>) -> Result<LcNumber<T>> {
    contour_integral_with(f, path, Quadrature::Trapezoid)
}

pub fn contour_integral_with<T: Scalar>(
    f: &FuzzyMapping<T>,
    path: &Path<T>,
    rule: Quadrature,
) -> Result<LcNumber<T>> {
    let n = match rule {
        Quadrature::Trapezoid => path.samples,
        Quadrature::Simpson => path.samples | 1,
    };
    let mut total = LcNumber::new(T::zero(), T::zero());
    for nodes in path.pieces(n)? {
        let values = nodes
            .iter()
            .map(|&z| f.eval(z))
            .collect::<Result<Vec<_>>>()?;
        total += match rule {
            Quadrature::Trapezoid => trapezoid(&nodes, &values),
            Quadrature::Simpson => simpson(&nodes, &values),
        };
    }
    Ok(total)
}

fn trapezoid<T: Scalar>(nodes: &[LcNumber<T>], values: &[LcNumber<T>]) -> LcNumber<T> {
    let half = T::lit(0.5);
    let mut acc = LcNumber::new(T::zero(), T::zero());
    for k in 0..nodes.len() - 1 {
        acc += (values[k] + values[k + 1]).scale(half) * (nodes[k + 1] - nodes[k]);
    }
    acc
}

fn simpson<T: Scalar>(nodes: &[LcNumber<T>], values: &[LcNumber<T>]) -> LcNumber<T> {
    let (half, third, three, four) = (T::lit(0.5), T::lit(1.0 / 3.0), T::lit(3.0), T::lit(4.0));
    let mut acc = LcNumber::new(T::zero(), T::zero());
    for k in (0..nodes.len() - 2).step_by(2) {
        let (z0, z1, z2) = (nodes[k], nodes[k + 1], nodes[k + 2]);
        // h·z'(t) at the three nodes of the interpolating quadratic
        let d0 = (z1.scale(four) - z0.scale(three) - z2).scale(half);
        let d1 = (z2 - z0).scale(half);
        let d2 = (z0 - z1.scale(four) + z2.scale(three)).scale(half);
        acc +=
            (values[k] * d0 + (values[k + 1] * d1).scale(four) + values[k + 2] * d2).scale(third);
    }
    acc
}

/// `F(z₂) ⊖ F(z₁)` for an antiderivative `F`.
pub fn antiderivative_difference<T: Scalar>(
    antiderivative: &FuzzyMapping<T>,
    from: LcNumber<T>,
    to: LcNumber<T>,
) -> Result<LcNumber<T>> {
    Ok(antiderivative.eval(to)? - antiderivative.eval(from)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = LcNumber<f64>;

    fn square() -> FuzzyMapping<f64> {
        FuzzyMapping::power(2)
    }

    #[test]
    fn square_along_diagonal() {
        let p = Path::segment(Z::new(0.0, 0.0), Z::new(1.0, 1.0), 10_000);
        let v = contour_integral(&square(), &p).unwrap();
        assert!(v.dist(Z::new(-2.0 / 3.0, 2.0 / 3.0)) < 1e-6);
    }

    #[test]
    fn constant_along_unit_segment() {
        let k = Z::new(1.5, -0.5);
        let p = Path::segment(Z::new(0.0, 0.0), Z::new(1.0, 0.0), 2);
        let v = contour_integral(&FuzzyMapping::constant(k), &p).unwrap();
        assert!(v.dist(k) < 1e-15);
    }

    #[test]
    fn closed_square_loop_vanishes() {
        let verts = vec![
            Z::new(0.0, 0.0),
            Z::new(1.0, 0.0),
            Z::new(1.0, 1.0),
            Z::new(0.0, 1.0),
            Z::new(0.0, 0.0),
        ];
        let v = contour_integral(&square(), &Path::polyline(verts, 1000)).unwrap();
        assert!(v.norm() < 1e-6);
    }

    #[test]
    fn simpson_is_exact_for_quadratics_on_segments() {
        let p = Path::segment(Z::new(0.0, 0.0), Z::new(1.0, 1.0), 4);
        let v = contour_integral_with(&square(), &p, Quadrature::Simpson).unwrap();
        assert!(v.dist(Z::new(-2.0 / 3.0, 2.0 / 3.0)) < 1e-14);
    }

    #[test]
    fn parametric_circle_encloses_no_singularity_for_entire_maps() {
        use std::f64::consts::TAU;
        let circle = Path::parametric(|t: f64| Z::new((TAU * t).cos(), (TAU * t).sin()), 2001);
        let v = contour_integral_with(&FuzzyMapping::exp(), &circle, Quadrature::Simpson).unwrap();
        assert!(v.norm() < 1e-8);
        // 1/z picks up 2πA
        let inv = FuzzyMapping::power(-1);
        let w = contour_integral_with(&inv, &circle, Quadrature::Simpson).unwrap();
        assert!(w.dist(Z::new(0.0, TAU)) < 1e-5);
    }

    #[test]
    fn discontinuous_parametric_path_rejected() {
        let jump = Path::parametric(
            |t: f64| {
                if t < 0.5 {
                    Z::new(t, 0.0)
                } else {
                    Z::new(1e6, 0.0)
                }
            },
            101,
        );
        assert!(contour_integral(&square(), &jump).is_err());
    }

    #[test]
    fn sample_count_validated() {
        let p = Path::segment(Z::new(0.0, 0.0), Z::new(1.0, 0.0), 1);
        assert!(contour_integral(&square(), &p).is_err());
        assert!(contour_integral(&square(), &Path::polyline(vec![Z::new(0.0, 0.0)], 10)).is_err());
    }

    #[test]
    fn evaluation_failure_on_path_propagates() {
        let p = Path::segment(Z::new(-1.0, 0.0), Z::new(1.0, 0.0), 3);
        assert_eq!(
            contour_integral(&FuzzyMapping::power(-1), &p),
            Err(Error::DivisionByZero)
        );
    }
}
