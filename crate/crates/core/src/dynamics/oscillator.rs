//! `x' = -c_x ⊙ y`, `y' = c_y ⊙ x`; the unit-coefficient case is the simple
//! fuzzy oscillator.

use super::{fuzzify_pair, realify_pair, Trajectory};
use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscillatorParams<T> {
    pub c_x: LcNumber<T>,
    pub c_y: LcNumber<T>,
    pub x0: LcNumber<T>,
    pub y0: LcNumber<T>,
}

impl<T: Scalar> OscillatorParams<T> {
    /// `x' = -y`, `y' = x`.
    pub fn unit(x0: LcNumber<T>, y0: LcNumber<T>) -> Self {
        let one = LcNumber::real(T::one());
        Self {
            c_x: one,
            c_y: one,
            x0,
            y0,
        }
    }

    pub fn is_unit(&self) -> bool {
        let one = LcNumber::real(T::one());
        self.c_x == one && self.c_y == one
    }

    /// Fuzzy right-hand side `(x', y')`.
    pub fn field(&self, x: LcNumber<T>, y: LcNumber<T>) -> (LcNumber<T>, LcNumber<T>) {
        (-(self.c_x * y), self.c_y * x)
    }

    /// The field on `(r, s, p, q)`.
    pub fn realified(&self) -> impl Fn(&[T; 4]) -> [T; 4] + '_ {
        move |s| {
            let (x, y) = fuzzify_pair(*s);
            let (dx, dy) = self.field(x, y);
            realify_pair(dx, dy)
        }
    }

    /// Closed form for unit coefficients:
    /// `x = x₀cos t - y₀sin t`, `y = x₀sin t + y₀cos t`.
    pub fn analytic(&self, ts: &[T]) -> Result<Trajectory<T>> {
        if !self.is_unit() {
            return Err(Error::InvalidArgument(
                "closed form available only for unit coefficients".into(),
            ));
        }
        let states = ts
            .iter()
            .map(|&t| {
                let (s, c) = t.sin_cos();
                vec![
                    self.x0.scale(c) - self.y0.scale(s),
                    self.x0.scale(s) + self.y0.scale(c),
                ]
            })
            .collect();
        Trajectory::new(vec!["x".into(), "y".into()], ts.to_vec(), states)
    }
}

/// `x ⊙ x ⊕ y ⊙ y`, whose components are `(r² + s²) - (p² + q²)` and
/// `2(rp + sq)`; constant along solutions of the unit oscillator.
pub fn oscillator_invariant<T: Scalar>(x: LcNumber<T>, y: LcNumber<T>) -> LcNumber<T> {
    x * x + y * y
}
