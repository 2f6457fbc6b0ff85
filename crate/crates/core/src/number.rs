//! Elements `r + qA` and their field arithmetic.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{Num, One, Zero};

use crate::basis::BasisNumber;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element `r + qA` of the space, stored as `(re, fu)`.
///
/// Arithmetic never consults the basis `A`: sums, products and quotients are
/// the complex operations on `re + i·fu`. The basis enters only through
/// [`LcNumber::alpha_cut`] and [`LcNumber::d_infty`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LcNumber<T> {
    /// Real part `Re(z) = r`.
    pub re: T,
    /// Fuzzy coefficient `Fu(z) = q`.
    pub fu: T,
}

impl<T> LcNumber<T> {
    pub const fn new(re: T, fu: T) -> Self {
        Self { re, fu }
    }
}

impl<T: Zero> LcNumber<T> {
    /// Crisp embedding `r -> r + 0A`.
    pub fn real(re: T) -> Self {
        Self { re, fu: T::zero() }
    }
}

impl<T: Zero + One> LcNumber<T> {
    /// The basis number itself, `0 + 1A`.
    pub fn basis_unit() -> Self {
        Self {
            re: T::zero(),
            fu: T::one(),
        }
    }
}

impl<T: Copy + Num + Neg<Output = T>> LcNumber<T> {
    /// `r - qA`.
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.fu)
    }

    /// `re² + fu²`.
    pub fn norm_sqr(self) -> T {
        self.re * self.re + self.fu * self.fu
    }

    /// Multiplication by a real scalar, `λ ⊙ (r + qA) = λr + λqA`.
    pub fn scale(self, k: T) -> Self {
        Self::new(self.re * k, self.fu * k)
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.fu.is_zero()
    }

    /// Multiplicative inverse `(r - qA) / (r² + q²)`.
    pub fn recip(self) -> Result<Self> {
        let den = self.norm_sqr();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.re / den, (T::zero() - self.fu) / den))
    }

    /// `self ⊘ rhs`, failing when `rhs` is zero.
    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        let den = rhs.norm_sqr();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(
            (self.re * rhs.re + self.fu * rhs.fu) / den,
            (self.fu * rhs.re - self.re * rhs.fu) / den,
        ))
    }

    /// Integer power by repeated squaring; negative exponents go through the
    /// reciprocal.
    pub fn powi(self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.recip()?.powi_unsigned(n.unsigned_abs());
        }
        self.powi_unsigned(n as u32)
    }

    fn powi_unsigned(self, mut n: u32) -> Result<Self> {
        let mut acc = Self::new(T::one(), T::zero());
        let mut base = self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        Ok(acc)
    }

    /// The Ψ-cross product `B ⊙_Ψ C = c₁B ⊕ b₁C ⊖ b₁c₁`, where `b₁`, `c₁` are
    /// the single points of the operands' 1-levels and `core` is the single
    /// point of `[A]₁`.
    pub fn psi_mul(self, rhs: Self, core: T) -> Self {
        let b1 = self.re + self.fu * core;
        let c1 = rhs.re + rhs.fu * core;
        Self::new(
            self.re * rhs.re - core * core * self.fu * rhs.fu,
            self.fu * c1 + rhs.fu * b1,
        )
    }
}

impl<T: Scalar> LcNumber<T> {
    /// `‖z‖_Φ = sqrt(r² + q²)`.
    pub fn norm(self) -> T {
        self.re.hypot(self.fu)
    }

    /// Principal argument in `(-π, π]`.
    pub fn arg(self) -> Result<T> {
        if self.re.is_zero() && self.fu.is_zero() {
            return Err(Error::UndefinedArgument);
        }
        let theta = self.fu.atan2(self.re);
        // atan2(-0, x<0) gives -π; fold it onto π
        Ok(if theta == -T::PI() { T::PI() } else { theta })
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.fu.is_finite()
    }

    /// `‖self ⊖ other‖_Φ`.
    pub fn dist(self, other: Self) -> T {
        (self - other).norm()
    }

    /// The α-level `[z]_α = { r + qx : x ∈ [A]_α }`.
    pub fn alpha_cut(self, basis: &BasisNumber<T>, alpha: T) -> Result<AlphaBand<T>> {
        let (lo, hi) = basis.level(alpha)?;
        Ok(self.band_from_level(alpha, lo, hi))
    }

    pub(crate) fn band_from_level(self, alpha: T, lo: T, hi: T) -> AlphaBand<T> {
        if self.fu.is_zero() {
            return AlphaBand::new(alpha, self.re, self.re);
        }
        let a = self.re + self.fu * lo;
        let b = self.re + self.fu * hi;
        if self.fu > T::zero() {
            AlphaBand::new(alpha, a, b)
        } else {
            AlphaBand::new(alpha, b, a)
        }
    }

    /// Sup over an evenly spaced α-grid of the endpoint distance between the
    /// α-levels of `self` and `other`.
    pub fn d_infty(self, other: Self, basis: &BasisNumber<T>, grid_size: usize) -> Result<T> {
        if grid_size < 2 {
            return Err(Error::InvalidArgument(format!(
                "d_infty needs at least 2 grid points, got {grid_size}"
            )));
        }
        let last = T::from_count(grid_size - 1);
        let mut sup = T::zero();
        for k in 0..grid_size {
            let alpha = T::from_count(k) / last;
            let (lo, hi) = basis.level(alpha)?;
            let p = self.band_from_level(alpha, lo, hi);
            let q = other.band_from_level(alpha, lo, hi);
            let d = (p.lower - q.lower).abs().max((p.upper - q.upper).abs());
            sup = sup.max(d);
        }
        Ok(sup)
    }
}

impl<T: Add<Output = T>> Add for LcNumber<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.fu + rhs.fu)
    }
}

impl<T: Sub<Output = T>> Sub for LcNumber<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.fu - rhs.fu)
    }
}

impl<T: Neg<Output = T>> Neg for LcNumber<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.fu)
    }
}

/// The product `⊙`: `(rs - qp) + (sq + rp)A`.
impl<T: Copy + Add<Output = T> + Sub<Output = T> + Mul<Output = T>> Mul for LcNumber<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.fu * rhs.fu,
            rhs.re * self.fu + self.re * rhs.fu,
        )
    }
}

impl<T: Copy + Add<Output = T>> AddAssign for LcNumber<T> {
    fn add_assign(&mut self, rhs: Self) {
        self.re = self.re + rhs.re;
        self.fu = self.fu + rhs.fu;
    }
}

impl<T: Copy + Sub<Output = T>> SubAssign for LcNumber<T> {
    fn sub_assign(&mut self, rhs: Self) {
        self.re = self.re - rhs.re;
        self.fu = self.fu - rhs.fu;
    }
}

impl<T: Zero> From<T> for LcNumber<T> {
    fn from(re: T) -> Self {
        Self::real(re)
    }
}

impl<T: Copy + Num + Neg<Output = T>> Zero for LcNumber<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.fu.is_zero()
    }
}

impl<T: Copy + Num + Neg<Output = T>> One for LcNumber<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: fmt::Display + Zero + PartialOrd + Neg<Output = T> + Copy> fmt::Display for LcNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fu < T::zero() {
            write!(f, "{} - {}*A", self.re, -self.fu)
        } else {
            write!(f, "{} + {}*A", self.re, self.fu)
        }
    }
}

/// A closed interval `[lower, upper]` realizing one α-level of an element.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaBand<T> {
    pub alpha: T,
    pub lower: T,
    pub upper: T,
}

impl<T: Scalar> AlphaBand<T> {
    pub fn new(alpha: T, lower: T, upper: T) -> Self {
        Self {
            alpha,
            lower,
            upper,
        }
    }

    pub fn width(&self) -> T {
        self.upper - self.lower
    }

    /// `true` when `self ⊆ other`.
    pub fn is_within(&self, other: &Self) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }

    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }
}
