use super::{contour_integral, exp_rfa, FuzzyMapping, Path};
use crate::error::Result;
use crate::number::LcNumber;
use crate::scalar::Scalar;

/// Solution at `z` of `w' ⊕ b⊙w = f`, `w(z0) = w0`, where the forcing term
/// `f` is a mapping of the independent variable:
///
/// `w(z) = e^{-b⊙(z⊖z0)} ⊙ (w0 ⊕ ∫_{z0}^{z} e^{b⊙(ζ⊖z0)} ⊙ f(ζ) dζ)`.
///
/// The integral runs along the straight segment `z0 -> z`. A constant-zero
/// forcing term skips the quadrature.
pub fn solve_linear_mapping_ode<T: Scalar>(
    b: LcNumber<T>,
    f: &FuzzyMapping<T>,
    z0: LcNumber<T>,
    w0: LcNumber<T>,
    z: LcNumber<T>,
    samples: usize,
) -> Result<LcNumber<T>> {
    let decay = exp_rfa(-(b * (z - z0)))?;
    if f.as_constant().is_some_and(|k| k.is_zero()) || z == z0 {
        return Ok(w0 * decay);
    }
    let integrand = FuzzyMapping::try_new(move |zeta| exp_rfa(b * (zeta - z0))).mul(f);
    let integral = contour_integral(&integrand, &Path::segment(z0, z, samples))?;
    Ok(decay * (w0 + integral))
}
