//! Polar representation `z = ‖z‖_Φ (cos θ + sin θ A)` and de Moivre powers.

use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarForm<T> {
    pub modulus: T,
    /// Principal argument in `(-π, π]`.
    pub argument: T,
}

impl<T: Scalar> PolarForm<T> {
    pub fn new(modulus: T, argument: T) -> Self {
        Self { modulus, argument }
    }

    pub fn to_lc(self) -> LcNumber<T> {
        LcNumber::new(
            self.modulus * self.argument.cos(),
            self.modulus * self.argument.sin(),
        )
    }
}

impl<T: Scalar> LcNumber<T> {
    pub fn to_polar(self) -> Result<PolarForm<T>> {
        Ok(PolarForm::new(self.norm(), self.arg()?))
    }

    pub fn from_polar(p: PolarForm<T>) -> Self {
        p.to_lc()
    }

    /// `zⁿ = ‖z‖ⁿ (cos nθ + sin nθ A)`.
    pub fn pow_moivre(self, n: i32) -> Result<Self> {
        if self.is_zero() {
            return match n {
                0 => Ok(Self::new(T::one(), T::zero())),
                n if n > 0 => Ok(Self::new(T::zero(), T::zero())),
                _ => Err(Error::DivisionByZero),
            };
        }
        let p = self.to_polar()?;
        let nf = T::from_i32(n).expect("i32 exponent fits scalar");
        Ok(PolarForm::new(p.modulus.powi(n), p.argument * nf).to_lc())
    }

    /// Branch `k` of the n-th root: modulus `‖z‖^(1/n)`, angle `(θ + 2πk)/n`.
    /// `branch` is reduced modulo `n`.
    pub fn nth_root(self, n: u32, branch: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root order must be positive".into()));
        }
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.to_polar()?;
        let k = branch.rem_euclid(n as i64);
        let nf = T::from_u32(n).expect("root order fits scalar");
        let kf = T::from_i64(k).expect("branch fits scalar");
        let angle = (p.argument + T::TAU() * kf) / nf;
        Ok(PolarForm::new(p.modulus.powf(nf.recip()), angle).to_lc())
    }

    pub fn sqrt(self) -> Result<Self> {
        self.nth_root(2, 0)
    }
}
