//! Fuzzy Lotka-Volterra model
//! `x' = α⊙x ⊖ a⊙x⊙y`, `y' = -β⊙y ⊕ b⊙x⊙y`.

use super::{fuzzify_pair, realify_pair, OscillatorParams};
use crate::analytic::log_rfa;
use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LvParams<T> {
    /// Prey growth rate.
    pub alpha: LcNumber<T>,
    /// Predator death rate.
    pub beta: LcNumber<T>,
    /// Predation rate per predator.
    pub a: LcNumber<T>,
    /// Predator growth per prey.
    pub b: LcNumber<T>,
    /// Initial prey population.
    pub x0: LcNumber<T>,
    /// Initial predator population.
    pub y0: LcNumber<T>,
}

/// Equilibria `P₁ = (0, 0)` and `P₂ = (β ⊘ b, α ⊘ a)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Equilibria<T> {
    pub trivial: (LcNumber<T>, LcNumber<T>),
    pub coexistence: (LcNumber<T>, LcNumber<T>),
}

/// Value of the first integral together with whether it lies in the region
/// where principal logarithms are trusted (`re > 0` and `|fu| < re` for both
/// populations).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LvInvariant<T> {
    pub value: LcNumber<T>,
    pub certified: bool,
}

impl<T: Scalar> LvParams<T> {
    pub fn validate(&self) -> Result<()> {
        if self.a.is_zero() || self.b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(())
    }

    /// Fuzzy right-hand side `(x', y')` computed with ⊙.
    pub fn field(&self, x: LcNumber<T>, y: LcNumber<T>) -> (LcNumber<T>, LcNumber<T>) {
        let xy = x * y;
        (self.alpha * x - self.a * xy, -(self.beta * y) + self.b * xy)
    }

    /// The same field through `realify_pair`/`fuzzify_pair`, for cross-checks
    /// against [`realify_lotka_volterra`].
    pub fn field_via_product(&self, s: &[T; 4]) -> [T; 4] {
        let (x, y) = fuzzify_pair(*s);
        let (dx, dy) = self.field(x, y);
        realify_pair(dx, dy)
    }

    /// Linearization about `P₂` as an oscillator in the deviations
    /// `u = x ⊖ β/b`, `v = y ⊖ α/a`:
    /// `u' = -(a⊙β/b)⊙v`, `v' = (b⊙α/a)⊙u`.
    pub fn linearized(&self) -> Result<OscillatorParams<T>> {
        let eq = lv_equilibria(self)?;
        Ok(OscillatorParams {
            c_x: (self.a * self.beta).checked_div(self.b)?,
            c_y: (self.b * self.alpha).checked_div(self.a)?,
            x0: self.x0 - eq.coexistence.0,
            y0: self.y0 - eq.coexistence.1,
        })
    }
}

/// Component form on `(r, s, p, q)` with `x = r + pA`, `y = s + qA`:
///
/// ```text
/// r' = r(r_α - r_a s + q_a q) + p(-q_α + r_a q + q_a s)
/// s' = s(-r_β + r_b r - q_b p) + q(q_β - r_b p - q_b r)
/// p' = p(r_α - r_a s + q_a q) + r(q_α - r_a q - q_a s)
/// q' = q(-r_β + r_b r - q_b p) + s(-q_β + r_b p + q_b r)
/// ```
pub fn realify_lotka_volterra<T: Scalar>(p: &LvParams<T>) -> impl Fn(&[T; 4]) -> [T; 4] {
    let (ra, qa_) = (p.alpha.re, p.alpha.fu);
    let (rb_, qb_) = (p.beta.re, p.beta.fu);
    let (r_a, q_a) = (p.a.re, p.a.fu);
    let (r_b, q_b) = (p.b.re, p.b.fu);
    move |st| {
        let [r, s, pp, q] = *st;
        let prey = ra - r_a * s + q_a * q;
        let pred = -rb_ + r_b * r - q_b * pp;
        [
            r * prey + pp * (-qa_ + r_a * q + q_a * s),
            s * pred + q * (qb_ - r_b * pp - q_b * r),
            pp * prey + r * (qa_ - r_a * q - q_a * s),
            q * pred + s * (-qb_ + r_b * pp + q_b * r),
        ]
    }
}

pub fn lv_equilibria<T: Scalar>(p: &LvParams<T>) -> Result<Equilibria<T>> {
    let zero = LcNumber::new(T::zero(), T::zero());
    Ok(Equilibria {
        trivial: (zero, zero),
        coexistence: (p.beta.checked_div(p.b)?, p.alpha.checked_div(p.a)?),
    })
}

/// `V(x, y) = α⊙ln y ⊖ a⊙y ⊕ β⊙ln x ⊖ b⊙x` on principal logarithms.
pub fn lv_conserved<T: Scalar>(
    p: &LvParams<T>,
    x: LcNumber<T>,
    y: LcNumber<T>,
) -> Result<LvInvariant<T>> {
    let value = p.alpha * log_rfa(y, 0)? - p.a * y + p.beta * log_rfa(x, 0)? - p.b * x;
    let inside = |z: LcNumber<T>| z.re > T::zero() && z.fu.abs() < z.re;
    Ok(LvInvariant {
        value,
        certified: inside(x) && inside(y),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = LcNumber<f64>;

    pub(crate) fn sample() -> LvParams<f64> {
        LvParams {
            alpha: Z::new(0.25, 0.001),
            beta: Z::new(0.18, 0.003),
            a: Z::new(0.01, 0.0),
            b: Z::new(0.007, 0.0),
            x0: Z::new(100.0, 5.0),
            y0: Z::new(30.0, 2.0),
        }
    }

    #[test]
    fn coexistence_equilibrium_matches_reference_values() {
        let eq = lv_equilibria(&sample()).unwrap();
        let (x, y) = eq.coexistence;
        assert!((x.re - 25.714).abs() < 1e-3 && (x.fu - 0.4286).abs() < 1e-3);
        assert!((y.re - 25.0).abs() < 1e-12 && (y.fu - 0.1).abs() < 1e-12);
        assert_eq!(eq.trivial, (Z::new(0.0, 0.0), Z::new(0.0, 0.0)));
    }

    #[test]
    fn crisp_equilibrium() {
        let mut p = sample();
        p.alpha.fu = 0.0;
        p.beta.fu = 0.0;
        let (x, y) = lv_equilibria(&p).unwrap().coexistence;
        assert!((x.re - 0.18 / 0.007).abs() < 1e-12 && x.fu == 0.0);
        assert!((y.re - 25.0).abs() < 1e-12 && y.fu == 0.0);
    }

    #[test]
    fn zero_rates_rejected() {
        let mut p = sample();
        p.a = Z::new(0.0, 0.0);
        assert_eq!(lv_equilibria(&p), Err(Error::DivisionByZero));
        assert_eq!(p.validate(), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_vanishes_at_equilibria() {
        let p = sample();
        let f = realify_lotka_volterra(&p);
        let eq = lv_equilibria(&p).unwrap();
        let (x, y) = eq.coexistence;
        let d = f(&realify_pair(x, y));
        assert!(d.iter().all(|v| v.abs() < 1e-12), "{d:?}");
        assert_eq!(f(&[0.0; 4]), [0.0; 4]);
    }

    #[test]
    fn crisp_reduction_is_classical_model() {
        let mut p = sample();
        p.alpha.fu = 0.0;
        p.beta.fu = 0.0;
        let f = realify_lotka_volterra(&p);
        let (r, s) = (40.0, 12.0);
        let d = f(&[r, s, 0.0, 0.0]);
        assert_eq!(d[0], r * (0.25 - 0.01 * s));
        assert_eq!(d[1], s * (-0.18 + 0.007 * r));
        assert_eq!((d[2], d[3]), (0.0, 0.0));
    }

    #[test]
    fn component_form_equals_product_form_at_initial_state() {
        let p = sample();
        let f = realify_lotka_volterra(&p);
        let s = [100.0, 30.0, 5.0, 2.0];
        let (d1, d2) = (f(&s), p.field_via_product(&s));
        for i in 0..4 {
            assert!((d1[i] - d2[i]).abs() < 1e-12 * (1.0 + d2[i].abs()));
        }
    }

    #[test]
    fn conserved_value_reduces_to_classical_integral() {
        let mut p = sample();
        p.alpha.fu = 0.0;
        p.beta.fu = 0.0;
        let (x, y) = (Z::real(40.0), Z::real(12.0));
        let v = lv_conserved(&p, x, y).unwrap();
        let classical = 0.25 * 12f64.ln() - 0.01 * 12.0 + 0.18 * 40f64.ln() - 0.007 * 40.0;
        assert!((v.value.re - classical).abs() < 1e-14 && v.value.fu == 0.0);
        assert!(v.certified);
    }

    #[test]
    fn conserved_flags_untrusted_region() {
        let p = sample();
        let v = lv_conserved(&p, Z::new(1.0, 3.0), Z::new(2.0, 0.0)).unwrap();
        assert!(!v.certified);
        assert!(lv_conserved(&p, Z::new(0.0, 0.0), Z::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn linearization_matches_oscillator_when_coefficients_are_one() {
        let p = LvParams {
            alpha: Z::new(1.0, 0.0),
            beta: Z::new(1.0, 0.0),
            a: Z::new(1.0, 0.0),
            b: Z::new(1.0, 0.0),
            x0: Z::new(2.0, 0.5),
            y0: Z::new(1.0, 0.0),
        };
        let lin = p.linearized().unwrap();
        assert!(lin.is_unit());
        assert_eq!(lin.x0, Z::new(1.0, 0.5));
        assert_eq!(lin.y0, Z::new(0.0, 0.0));
    }
}
