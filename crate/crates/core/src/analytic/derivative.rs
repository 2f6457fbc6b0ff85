use super::FuzzyMapping;
use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

/// Default step for central differences.
pub const DEFAULT_STEP: f64 = 1e-5;

/// Finite-difference partials of `u = Re f` and `v = Fu f` at a point, with the
/// two Cauchy-Riemann residuals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrReport<T> {
    pub d_ux: T,
    pub d_uy: T,
    pub d_vx: T,
    pub d_vy: T,
    /// `|∂u/∂x - ∂v/∂y|`.
    pub residual1: T,
    /// `|∂u/∂y + ∂v/∂x|`.
    pub residual2: T,
    /// `∂u/∂x + ∂v/∂x A`.
    pub derivative: LcNumber<T>,
}

impl<T: Scalar> CrReport<T> {
    pub fn max_residual(&self) -> T {
        self.residual1.max(self.residual2)
    }
}

/// Central differences of `u` and `v` in both coordinates around `z0`.
///
/// The residuals are reported, not enforced: a large residual means `f` is
/// not differentiable at `z0` in the ⊙ sense and `derivative` is only the
/// x-directional derivative.
pub fn derivative_cr<T: Scalar>(f: &FuzzyMapping<T>, z0: LcNumber<T>, h: T) -> Result<CrReport<T>> {
    if h.is_nan() || h <= T::zero() {
        return Err(Error::InvalidArgument(format!(
            "step h = {h} must be positive"
        )));
    }
    let two_h = h + h;
    let px = f.eval(LcNumber::new(z0.re + h, z0.fu))?;
    let mx = f.eval(LcNumber::new(z0.re - h, z0.fu))?;
    let py = f.eval(LcNumber::new(z0.re, z0.fu + h))?;
    let my = f.eval(LcNumber::new(z0.re, z0.fu - h))?;
    let d_ux = (px.re - mx.re) / two_h;
    let d_vx = (px.fu - mx.fu) / two_h;
    let d_uy = (py.re - my.re) / two_h;
    let d_vy = (py.fu - my.fu) / two_h;
    Ok(CrReport {
        d_ux,
        d_uy,
        d_vx,
        d_vy,
        residual1: (d_ux - d_vy).abs(),
        residual2: (d_uy + d_vx).abs(),
        derivative: LcNumber::new(d_ux, d_vx),
    })
}

/// `‖(g∘f)'(z0) ⊖ g'(f(z0)) ⊙ f'(z0)‖_Φ` with every derivative taken by
/// [`derivative_cr`].
pub fn check_chain_rule<T: Scalar>(
    g: &FuzzyMapping<T>,
    f: &FuzzyMapping<T>,
    z0: LcNumber<T>,
    h: T,
) -> Result<T> {
    let lhs = derivative_cr(&g.compose(f), z0, h)?.derivative;
    let inner = f.eval(z0)?;
    let rhs = derivative_cr(g, inner, h)?.derivative * derivative_cr(f, z0, h)?.derivative;
    Ok(lhs.dist(rhs))
}

/// `(f ⊙ g)'(z0)` assembled as `f'⊙g ⊕ f⊙g'`.
pub fn product_rule<T: Scalar>(
    f: &FuzzyMapping<T>,
    g: &FuzzyMapping<T>,
    z0: LcNumber<T>,
    h: T,
) -> Result<LcNumber<T>> {
    let df = derivative_cr(f, z0, h)?.derivative;
    let dg = derivative_cr(g, z0, h)?.derivative;
    Ok(df * g.eval(z0)? + f.eval(z0)? * dg)
}

/// `(f ⊘ g)'(z0)` assembled as `(f'⊙g ⊖ f⊙g') ⊘ g²`.
pub fn quotient_rule<T: Scalar>(
    f: &FuzzyMapping<T>,
    g: &FuzzyMapping<T>,
    z0: LcNumber<T>,
    h: T,
) -> Result<LcNumber<T>> {
    let df = derivative_cr(f, z0, h)?.derivative;
    let dg = derivative_cr(g, z0, h)?.derivative;
    let gv = g.eval(z0)?;
    (df * gv - f.eval(z0)? * dg).checked_div(gv * gv)
}
