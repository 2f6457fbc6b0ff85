//! The linear equation `w' = λ ⊙ w` and its Ψ-cross counterpart
//! `w' = λ ⊙_Ψ w`, with their real 2×2 forms.

use super::Trajectory;
use crate::analytic::exp_rfa;
use crate::error::Result;
use crate::number::LcNumber;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearParams<T> {
    /// `λ = λ₁ + λ₂A`.
    pub lambda: LcNumber<T>,
    pub w0: LcNumber<T>,
}

/// Row-major real 2×2 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2<T>(pub [[T; 2]; 2]);

impl<T: Scalar> Matrix2<T> {
    pub fn apply(&self, v: &[T; 2]) -> [T; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    pub fn trace(&self) -> T {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> T {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// `μ² - tr·μ + det` at a (possibly non-real) point `μ`.
    pub fn char_poly(&self, mu: LcNumber<T>) -> LcNumber<T> {
        mu * mu - mu.scale(self.trace()) + LcNumber::real(self.det())
    }

    /// `2μ - tr`, which vanishes at a double root.
    pub fn char_poly_derivative(&self, mu: LcNumber<T>) -> LcNumber<T> {
        mu + mu - LcNumber::real(self.trace())
    }
}

/// Real form of `w' = λ ⊙ w`: `[[λ₁, -λ₂], [λ₂, λ₁]]`.
pub fn realify_linear<T: Scalar>(lambda: LcNumber<T>) -> Matrix2<T> {
    Matrix2([[lambda.re, -lambda.fu], [lambda.fu, lambda.re]])
}

/// Real form of `w' = λ ⊙_Ψ w` for `[A]₁ = {a}`:
/// `[[λ₁, -a²λ₂], [λ₂, λ₁ + 2aλ₂]]`.
pub fn realify_linear_psi<T: Scalar>(lambda: LcNumber<T>, a: T) -> Matrix2<T> {
    let (l1, l2) = (lambda.re, lambda.fu);
    Matrix2([[l1, -(a * a * l2)], [l2, l1 + (a + a) * l2]])
}

/// `w(t) = w₀ ⊙ e^{λt}` on each grid time.
pub fn solve_linear_analytic<T: Scalar>(p: &LinearParams<T>, ts: &[T]) -> Result<Trajectory<T>> {
    let states = ts
        .iter()
        .map(|&t| Ok(vec![p.w0 * exp_rfa(p.lambda.scale(t))?]))
        .collect::<Result<Vec<_>>>()?;
    Trajectory::new(vec!["w".into()], ts.to_vec(), states)
}

/// Reference closed form for `w' = λ ⊙_Ψ w`:
///
/// `(x, y) = y₀e^{μt}(-a, 1) + (x₀ + ay₀)e^{μt}[t(-a, 1) + (1, 0)]`,
/// `μ = λ₁ + aλ₂`. For `a = 0` this is `x₀e^{λ₁t} + (y₀ + x₀t)e^{λ₁t}A`, which
/// does not involve `λ₂`.
///
/// The formula drops a factor `λ₂` from the secular term, so it solves the
/// realified system only when `λ₂ = 1`; see [`solve_linear_psi_exact`].
pub fn solve_linear_psi_analytic<T: Scalar>(
    p: &LinearParams<T>,
    a: T,
    ts: &[T],
) -> Result<Trajectory<T>> {
    let (x0, y0) = (p.w0.re, p.w0.fu);
    let states = ts
        .iter()
        .map(|&t| {
            if a == T::zero() {
                let e = (p.lambda.re * t).exp();
                return vec![LcNumber::new(x0 * e, (y0 + x0 * t) * e)];
            }
            let e = ((p.lambda.re + a * p.lambda.fu) * t).exp();
            let c = (x0 + a * y0) * e;
            let x = y0 * e * (-a) + c * (t * (-a) + T::one());
            let y = y0 * e + c * t;
            vec![LcNumber::new(x, y)]
        })
        .collect();
    Trajectory::new(vec!["w".into()], ts.to_vec(), states)
}

/// Exact solution of the realified Ψ system, `e^{μt}[(x₀, y₀) + tλ₂(x₀ + ay₀)(-a, 1)]`.
pub fn solve_linear_psi_exact<T: Scalar>(
    p: &LinearParams<T>,
    a: T,
    ts: &[T],
) -> Result<Trajectory<T>> {
    let (x0, y0) = (p.w0.re, p.w0.fu);
    let (l1, l2) = (p.lambda.re, p.lambda.fu);
    let states = ts
        .iter()
        .map(|&t| {
            let e = ((l1 + a * l2) * t).exp();
            let s = t * l2 * (x0 + a * y0);
            vec![LcNumber::new(e * (x0 - a * s), e * (y0 + s))]
        })
        .collect();
    Trajectory::new(vec!["w".into()], ts.to_vec(), states)
}
