use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::number::LcNumber;
use crate::scalar::Scalar;

type EvalFn<T> = dyn Fn(LcNumber<T>) -> Result<LcNumber<T>> + Send + Sync;

/// Rectangle in `(re, fu)` coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Region<T> {
    pub re: (T, T),
    pub fu: (T, T),
}

impl<T: Scalar> Region<T> {
    pub fn contains(&self, z: LcNumber<T>) -> bool {
        self.re.0 <= z.re && z.re <= self.re.1 && self.fu.0 <= z.fu && z.fu <= self.fu.1
    }
}

/// A mapping `f : ℝ_F(A) -> ℝ_F(A)`, equivalently the pair of real functions
/// `u(x, y) = Re f(x + yA)` and `v(x, y) = Fu f(x + yA)`.
///
/// Mappings are cheap to clone and must be pure. The combinators build new
/// mappings pointwise so that expressions can be assembled without writing
/// closures.
#[derive(Clone)]
pub struct FuzzyMapping<T> {
    eval: Arc<EvalFn<T>>,
    domain: Option<Region<T>>,
    constant: Option<LcNumber<T>>,
}

impl<T: Scalar> FuzzyMapping<T> {
    pub fn new(f: impl Fn(LcNumber<T>) -> LcNumber<T> + Send + Sync + 'static) -> Self {
        Self::try_new(move |z| Ok(f(z)))
    }

    pub fn try_new(f: impl Fn(LcNumber<T>) -> Result<LcNumber<T>> + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(f),
            domain: None,
            constant: None,
        }
    }

    pub fn constant(k: LcNumber<T>) -> Self {
        let mut m = Self::new(move |_| k);
        m.constant = Some(k);
        m
    }

    pub fn zero() -> Self {
        Self::constant(LcNumber::new(T::zero(), T::zero()))
    }

    pub fn identity() -> Self {
        Self::new(|z| z)
    }

    pub fn exp() -> Self {
        Self::try_new(super::exp_rfa)
    }

    /// `zⁿ`.
    pub fn power(n: i32) -> Self {
        Self::try_new(move |z| z.powi(n))
    }

    /// Polynomial with coefficients `a₀, a₁, ...`.
    pub fn polynomial(coeffs: Vec<LcNumber<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "polynomial needs at least one coefficient".into(),
            ));
        }
        Ok(Self::try_new(move |z| super::poly_eval(&coeffs, z)))
    }

    /// Restricts evaluation to `region`; points outside fail with a domain error.
    pub fn with_domain(mut self, region: Region<T>) -> Self {
        self.domain = Some(region);
        self
    }

    pub fn domain(&self) -> Option<Region<T>> {
        self.domain
    }

    /// The constant value, when the mapping was built with [`Self::constant`].
    pub fn as_constant(&self) -> Option<LcNumber<T>> {
        self.constant
    }

    pub fn eval(&self, z: LcNumber<T>) -> Result<LcNumber<T>> {
        if let Some(d) = self.domain {
            if !d.contains(z) {
                return Err(Error::Domain(format!(
                    "{z} is outside the mapping's domain"
                )));
            }
        }
        let w = (self.eval)(z)?;
        if !w.is_finite() {
            return Err(Error::Evaluation(format!("non-finite value at {z}")));
        }
        Ok(w)
    }

    /// `(u(x, y), v(x, y))`.
    pub fn components(&self, x: T, y: T) -> Result<(T, T)> {
        let w = self.eval(LcNumber::new(x, y))?;
        Ok((w.re, w.fu))
    }

    fn combine(
        &self,
        other: &Self,
        op: impl Fn(LcNumber<T>, LcNumber<T>) -> Result<LcNumber<T>> + Send + Sync + 'static,
    ) -> Self {
        let (f, g) = (self.clone(), other.clone());
        let constant = match (self.constant, other.constant) {
            (Some(a), Some(b)) => op(a, b).ok(),
            _ => None,
        };
        let mut m = Self::try_new(move |z| op(f.eval(z)?, g.eval(z)?));
        m.constant = constant;
        m
    }

    /// Pointwise `f ⊕ g`.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| Ok(a + b))
    }

    /// Pointwise `f ⊖ g`.
    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| Ok(a - b))
    }

    /// Pointwise `f ⊙ g`.
    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, |a, b| Ok(a * b))
    }

    /// Pointwise `f ⊘ g`.
    pub fn div(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.checked_div(b))
    }

    /// `self ∘ inner`, i.e. `z -> self(inner(z))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let (outer, inner) = (self.clone(), inner.clone());
        Self::try_new(move |z| outer.eval(inner.eval(z)?))
    }
}

impl<T> fmt::Debug for FuzzyMapping<T>
where
    T: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyMapping")
            .field("domain", &self.domain)
            .field("constant", &self.constant)
            .finish_non_exhaustive()
    }
}
