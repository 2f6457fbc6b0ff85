use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

/// `e^z = e^r (cos q + sin q A)`.
pub fn exp_rfa<T: Scalar>(z: LcNumber<T>) -> Result<LcNumber<T>> {
    let m = z.re.exp();
    if !m.is_finite() {
        return Err(Error::Range(format!("e^{} overflows", z.re)));
    }
    let (s, c) = z.fu.sin_cos();
    Ok(LcNumber::new(m * c, m * s))
}

/// Branch `n` of the logarithm: `ln ‖z‖_Φ + (θ + 2nπ)A` with `θ` the principal
/// argument.
pub fn log_rfa<T: Scalar>(z: LcNumber<T>, n: i64) -> Result<LcNumber<T>> {
    if z.is_zero() {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    let theta = z.arg()?;
    let shift = T::TAU() * T::from_i64(n).expect("branch index fits scalar");
    Ok(LcNumber::new(z.norm().ln(), theta + shift))
}

/// `z^a = exp(a ln z)` on the principal branch.
pub fn pow_real<T: Scalar>(z: LcNumber<T>, a: T) -> Result<LcNumber<T>> {
    if z.is_zero() {
        return Err(Error::Domain("real power of zero".into()));
    }
    exp_rfa(log_rfa(z, 0)?.scale(a))
}

/// `z^w = exp(w ⊙ ln z)` on branch `n` of the logarithm.
pub fn pow_lc<T: Scalar>(z: LcNumber<T>, w: LcNumber<T>, n: i64) -> Result<LcNumber<T>> {
    if z.is_zero() {
        return Err(Error::Domain("power of zero".into()));
    }
    exp_rfa(w * log_rfa(z, n)?)
}

/// `a₀ ⊕ a₁⊙z ⊕ ... ⊕ aₙ⊙zⁿ` by Horner's rule.
pub fn poly_eval<T: Scalar>(coeffs: &[LcNumber<T>], z: LcNumber<T>) -> Result<LcNumber<T>> {
    let (last, rest) = coeffs.split_last().ok_or_else(|| {
        Error::InvalidArgument("polynomial needs at least one coefficient".into())
    })?;
    Ok(rest.iter().rev().fold(*last, |acc, &a| acc * z + a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    type Z = LcNumber<f64>;

    #[test]
    fn exp_examples() {
        let e = exp_rfa(Z::new(4.0, 3.0)).unwrap();
        assert_eq!(e, Z::new(4f64.exp() * 3f64.cos(), 4f64.exp() * 3f64.sin()));
        assert_eq!(exp_rfa(Z::new(0.0, 0.0)).unwrap(), Z::new(1.0, 0.0));
        let a = exp_rfa(Z::new(0.0, FRAC_PI_2)).unwrap();
        assert!((a - Z::new(0.0, 1.0)).norm() < 1e-15);
        assert!(matches!(exp_rfa(Z::new(1e4, 0.0)), Err(Error::Range(_))));
    }

    #[test]
    fn log_examples() {
        assert_eq!(log_rfa(Z::new(1.0, 0.0), 0).unwrap(), Z::new(0.0, 0.0));
        assert_eq!(
            log_rfa(Z::new(0.0, 1.0), 0).unwrap(),
            Z::new(0.0, FRAC_PI_2)
        );
        assert_eq!(log_rfa(Z::new(1.0, 0.0), 1).unwrap(), Z::new(0.0, TAU));
        assert!(matches!(
            log_rfa(Z::new(0.0, 0.0), 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn real_power_examples() {
        let r = pow_real(Z::new(1.0, 3f64.sqrt()), 0.5).unwrap();
        let s2 = 2f64.sqrt();
        assert!((r - Z::new(s2 * 3f64.sqrt() / 2.0, s2 / 2.0)).norm() < 1e-12);
        let z = Z::new(-0.3, 1.9);
        assert!((pow_real(z, 1.0).unwrap() - z).norm() < 1e-12);
        assert_eq!(pow_real(z, 0.0).unwrap(), Z::new(1.0, 0.0));
        assert!(pow_real(Z::new(0.0, 0.0), 2.0).is_err());
    }

    #[test]
    fn polynomial_examples() {
        let zero = Z::new(0.0, 0.0);
        let one = Z::new(1.0, 0.0);
        let at = Z::new(1.0, 1.0);
        assert_eq!(poly_eval(&[zero, zero, one], at).unwrap(), Z::new(0.0, 2.0));
        let k = Z::new(-2.0, 0.5);
        assert_eq!(poly_eval(&[k], at).unwrap(), k);
        assert_eq!(poly_eval(&[zero, one, one], at).unwrap(), Z::new(1.0, 3.0));
        assert!(poly_eval::<f64>(&[], at).is_err());
    }

    #[test]
    fn complex_power_generalizes_real_power() {
        let z = Z::new(0.8, -0.4);
        let a = pow_lc(z, Z::new(2.5, 0.0), 0).unwrap();
        let b = pow_real(z, 2.5).unwrap();
        assert!((a - b).norm() < 1e-14);
    }
}
