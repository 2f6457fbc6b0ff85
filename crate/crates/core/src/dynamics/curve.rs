use std::fmt;
use std::sync::Arc;

use crate::analytic::{derivative_cr, FuzzyMapping, Quadrature};
use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

type CurveFn<T> = dyn Fn(T) -> LcNumber<T> + Send + Sync;

/// `w(t) = x(t) + y(t)A` on a closed time interval.
#[derive(Clone)]
pub struct FuzzyCurve<T> {
    w: Arc<CurveFn<T>>,
    domain: (T, T),
}

impl<T: Scalar> FuzzyCurve<T> {
    pub fn new(w: impl Fn(T) -> LcNumber<T> + Send + Sync + 'static, domain: (T, T)) -> Self {
        Self {
            w: Arc::new(w),
            domain,
        }
    }

    pub fn from_components(
        x: impl Fn(T) -> T + Send + Sync + 'static,
        y: impl Fn(T) -> T + Send + Sync + 'static,
        domain: (T, T),
    ) -> Self {
        Self::new(move |t| LcNumber::new(x(t), y(t)), domain)
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    pub fn eval(&self, t: T) -> Result<LcNumber<T>> {
        let (a, b) = self.domain;
        if !(a <= t && t <= b) {
            return Err(Error::Domain(format!("t = {t} outside [{a}, {b}]")));
        }
        let w = (self.w)(t);
        if !w.is_finite() {
            return Err(Error::Evaluation(format!("curve is not finite at t = {t}")));
        }
        Ok(w)
    }
}

impl<T: fmt::Debug> fmt::Debug for FuzzyCurve<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyCurve")
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// `w'(t0) = x'(t0) + y'(t0)A` by central differences.
pub fn curve_derivative<T: Scalar>(w: &FuzzyCurve<T>, t0: T, h: T) -> Result<LcNumber<T>> {
    if h.is_nan() || h <= T::zero() {
        return Err(Error::InvalidArgument(format!(
            "step h = {h} must be positive"
        )));
    }
    let d = w.eval(t0 + h)? - w.eval(t0 - h)?;
    Ok(d.scale((h + h).recip()))
}

/// `∫_a^b w(t) dt = ∫x + (∫y)A` by composite Simpson.
pub fn curve_integral<T: Scalar>(
    w: &FuzzyCurve<T>,
    a: T,
    b: T,
    samples: usize,
) -> Result<LcNumber<T>> {
    curve_integral_with(w, a, b, samples, Quadrature::Simpson)
}

pub fn curve_integral_with<T: Scalar>(
    w: &FuzzyCurve<T>,
    a: T,
    b: T,
    samples: usize,
    rule: Quadrature,
) -> Result<LcNumber<T>> {
    if a.is_nan() || b.is_nan() || a > b {
        return Err(Error::InvalidArgument(format!(
            "integration bounds reversed: [{a}, {b}]"
        )));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let n = match rule {
        Quadrature::Trapezoid => samples,
        Quadrature::Simpson => samples | 1,
    };
    let h = (b - a) / T::from_count(n - 1);
    let mut acc = LcNumber::new(T::zero(), T::zero());
    for k in 0..n {
        let t = if k == n - 1 {
            b
        } else {
            a + h * T::from_count(k)
        };
        let weight = match rule {
            Quadrature::Trapezoid if k == 0 || k == n - 1 => T::lit(0.5),
            Quadrature::Trapezoid => T::one(),
            Quadrature::Simpson if k == 0 || k == n - 1 => T::lit(1.0 / 3.0),
            Quadrature::Simpson if k % 2 == 1 => T::lit(4.0 / 3.0),
            Quadrature::Simpson => T::lit(2.0 / 3.0),
        };
        acc += w.eval(t)?.scale(weight);
    }
    Ok(acc.scale(h))
}

/// `‖(f∘w)'(t0) ⊖ f'(w(t0)) ⊙ w'(t0)‖_Φ` for a mapping composed with a curve.
pub fn check_curve_chain_rule<T: Scalar>(
    f: &FuzzyMapping<T>,
    w: &FuzzyCurve<T>,
    t0: T,
    h: T,
) -> Result<T> {
    let (f2, w2) = (f.clone(), w.clone());
    let composed = FuzzyCurve::new(
        move |t| {
            w2.eval(t)
                .and_then(|z| f2.eval(z))
                .unwrap_or(LcNumber::new(T::nan(), T::nan()))
        },
        w.domain(),
    );
    let lhs = curve_derivative(&composed, t0, h)?;
    let rhs = derivative_cr(f, w.eval(t0)?, h)?.derivative * curve_derivative(w, t0, h)?;
    Ok(lhs.dist(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::exp_rfa;

    type Z = LcNumber<f64>;

    #[test]
    fn derivative_examples() {
        let w = FuzzyCurve::from_components(|t| t, |t| t * t, (0.0, 2.0));
        let d = curve_derivative(&w, 1.0, 1e-5).unwrap();
        assert!(d.dist(Z::new(1.0, 2.0)) < 1e-9);

        let c = FuzzyCurve::new(|_| Z::new(4.0, -1.0), (0.0, 1.0));
        assert_eq!(curve_derivative(&c, 0.5, 1e-5).unwrap(), Z::new(0.0, 0.0));

        let lambda = Z::new(0.0, 1.0);
        let e = FuzzyCurve::new(move |t| exp_rfa(lambda.scale(t)).unwrap(), (-1.0, 1.0));
        assert!(curve_derivative(&e, 0.0, 1e-5).unwrap().dist(lambda) < 1e-9);
    }

    #[test]
    fn derivative_outside_domain_fails() {
        let w = FuzzyCurve::from_components(|t| t, |t| t, (0.0, 1.0));
        assert!(matches!(
            curve_derivative(&w, 0.0, 1e-5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integral_examples() {
        let w = FuzzyCurve::from_components(|t| 1.0 - t * t, |t| 2.0 * t, (0.0, 1.0));
        let v = curve_integral(&w, 0.0, 1.0, 101).unwrap();
        assert!(v.dist(Z::new(2.0 / 3.0, 1.0)) < 1e-12);
        let zero = FuzzyCurve::new(|_| Z::new(0.0, 0.0), (0.0, 1.0));
        assert_eq!(
            curve_integral(&zero, 0.0, 1.0, 10).unwrap(),
            Z::new(0.0, 0.0)
        );
        let k = FuzzyCurve::new(|_| Z::new(1.5, -2.0), (0.0, 2.0));
        assert!(
            curve_integral(&k, 0.0, 2.0, 10)
                .unwrap()
                .dist(Z::new(3.0, -4.0))
                < 1e-14
        );
        assert!(curve_integral(&k, 2.0, 0.0, 10).is_err());
    }

    #[test]
    fn trapezoid_variant_converges() {
        let w = FuzzyCurve::from_components(|t| 1.0 - t * t, |t| 2.0 * t, (0.0, 1.0));
        let v = curve_integral_with(&w, 0.0, 1.0, 20_001, Quadrature::Trapezoid).unwrap();
        assert!(v.dist(Z::new(2.0 / 3.0, 1.0)) < 1e-9);
    }

    #[test]
    fn chain_rule_through_curve() {
        let w = FuzzyCurve::from_components(|t: f64| t.cos(), |t: f64| t * 0.5, (-2.0, 2.0));
        let r = check_curve_chain_rule(&FuzzyMapping::exp(), &w, 0.7, 1e-5).unwrap();
        assert!(r < 1e-8);
    }
}
