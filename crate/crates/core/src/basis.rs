//! The basis fuzzy number `A` and the space it generates.

use crate::error::{Error, Result};
use crate::number::{AlphaBand, LcNumber};
use crate::scalar::Scalar;

/// Default α-grid size for the sampled asymmetry test.
pub const ASYMMETRY_GRID: usize = 101;
/// Default tolerance for the sampled asymmetry test.
pub const ASYMMETRY_EPS: f64 = 1e-9;

/// A fuzzy number described by the endpoints of its α-levels.
#[derive(Clone, Debug, PartialEq)]
pub enum BasisNumber<T> {
    /// `(a; b; d)` with levels `[a + α(b - a), d - α(d - b)]`.
    Triangular { a: T, b: T, d: T },
    /// `(a; b; c; d)` with levels `[a + α(b - a), d - α(d - c)]`.
    Trapezoidal { a: T, b: T, c: T, d: T },
    /// Levels sampled at ascending α values from 0 to 1, linearly
    /// interpolated in between.
    Tabulated(Vec<AlphaBand<T>>),
}

impl<T: Scalar> BasisNumber<T> {
    pub fn triangular(a: T, b: T, d: T) -> Result<Self> {
        let n = Self::Triangular { a, b, d };
        n.validate()?;
        Ok(n)
    }

    pub fn trapezoidal(a: T, b: T, c: T, d: T) -> Result<Self> {
        let n = Self::Trapezoidal { a, b, c, d };
        n.validate()?;
        Ok(n)
    }

    pub fn tabulated(levels: Vec<AlphaBand<T>>) -> Result<Self> {
        let n = Self::Tabulated(levels);
        n.validate()?;
        Ok(n)
    }

    /// Checks endpoint ordering, and for tabulated numbers the α-grid and
    /// nesting of consecutive levels.
    pub fn validate(&self) -> Result<()> {
        let finite = |xs: &[T]| xs.iter().all(|x| x.is_finite());
        match *self {
            Self::Triangular { a, b, d } => {
                if !finite(&[a, b, d]) {
                    return Err(Error::InvalidBasis("non-finite endpoint".into()));
                }
                if !(a <= b && b <= d) {
                    return Err(Error::InvalidBasis(format!(
                        "triangular endpoints must satisfy a <= b <= d, got ({a}; {b}; {d})"
                    )));
                }
            }
            Self::Trapezoidal { a, b, c, d } => {
                if !finite(&[a, b, c, d]) {
                    return Err(Error::InvalidBasis("non-finite endpoint".into()));
                }
                if !(a <= b && b <= c && c <= d) {
                    return Err(Error::InvalidBasis(format!(
                        "trapezoidal endpoints must satisfy a <= b <= c <= d, got ({a}; {b}; {c}; {d})"
                    )));
                }
            }
            Self::Tabulated(ref levels) => {
                if levels.len() < 2 {
                    return Err(Error::InvalidBasis(
                        "tabulated basis needs at least two levels".into(),
                    ));
                }
                if levels[0].alpha != T::zero() || levels[levels.len() - 1].alpha != T::one() {
                    return Err(Error::InvalidBasis(
                        "tabulated α-grid must start at 0 and end at 1".into(),
                    ));
                }
                for l in levels {
                    if !finite(&[l.alpha, l.lower, l.upper]) {
                        return Err(Error::InvalidBasis("non-finite level".into()));
                    }
                    if l.lower > l.upper {
                        return Err(Error::InvalidBasis(format!(
                            "level α = {} has lower {} > upper {}",
                            l.alpha, l.lower, l.upper
                        )));
                    }
                }
                for w in levels.windows(2) {
                    if w[1].alpha <= w[0].alpha {
                        return Err(Error::InvalidBasis(
                            "α-grid must be strictly increasing".into(),
                        ));
                    }
                    if !w[1].is_within(&w[0]) {
                        return Err(Error::InvalidBasis(format!(
                            "level α = {} is not nested in level α = {}",
                            w[1].alpha, w[0].alpha
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Endpoints `(lower(α), upper(α))` of `[A]_α`.
    pub fn level(&self, alpha: T) -> Result<(T, T)> {
        if !(alpha >= T::zero() && alpha <= T::one()) {
            return Err(Error::Domain(format!("α = {alpha} is outside [0, 1]")));
        }
        Ok(match *self {
            Self::Triangular { a, b, d } => (a + alpha * (b - a), d - alpha * (d - b)),
            Self::Trapezoidal { a, b, c, d } => (a + alpha * (b - a), d - alpha * (d - c)),
            Self::Tabulated(ref levels) => {
                let i = levels.partition_point(|l| l.alpha <= alpha);
                if i == levels.len() {
                    let l = levels[i - 1];
                    (l.lower, l.upper)
                } else {
                    let (p, q) = (levels[i - 1], levels[i]);
                    let s = (alpha - p.alpha) / (q.alpha - p.alpha);
                    (
                        p.lower + s * (q.lower - p.lower),
                        p.upper + s * (q.upper - p.upper),
                    )
                }
            }
        })
    }

    pub fn band(&self, alpha: T) -> Result<AlphaBand<T>> {
        let (lo, hi) = self.level(alpha)?;
        Ok(AlphaBand::new(alpha, lo, hi))
    }

    /// Sampled asymmetry test: `true` iff `lower(α) + upper(α)` moves by more
    /// than `eps` away from its value at `α = 0` somewhere on an evenly spaced
    /// grid of `grid_size` levels.
    pub fn is_asymmetric(&self, grid_size: usize, eps: T) -> Result<bool> {
        self.validate()?;
        if grid_size < 3 {
            return Err(Error::InvalidArgument(format!(
                "asymmetry test needs at least 3 grid points, got {grid_size}"
            )));
        }
        let (lo0, hi0) = self.level(T::zero())?;
        let base = lo0 + hi0;
        let last = T::from_count(grid_size - 1);
        for k in 1..grid_size {
            let (lo, hi) = self.level(T::from_count(k) / last)?;
            if ((lo + hi) - base).abs() > eps {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Closed-form asymmetry for the parametric kinds (`2b != a + d`,
    /// `b + c != a + d`); `None` for tabulated numbers.
    pub fn is_asymmetric_exact(&self) -> Option<bool> {
        match *self {
            Self::Triangular { a, b, d } => Some(b + b != a + d),
            Self::Trapezoidal { a, b, c, d } => Some(b + c != a + d),
            Self::Tabulated(_) => None,
        }
    }

    /// The single point of `[A]₁`, if the 1-level is a singleton.
    pub fn core_point(&self) -> Option<T> {
        let (lo, hi) = self.level(T::one()).ok()?;
        (lo == hi).then_some(lo)
    }
}

/// A validated asymmetric basis, i.e. the space `{ r + qA }` it generates.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySpace<T> {
    basis: BasisNumber<T>,
}

impl<T: Scalar> FuzzySpace<T> {
    /// Rejects symmetric bases, for which `(r, q) -> r + qA` is not injective.
    pub fn new(basis: BasisNumber<T>) -> Result<Self> {
        let sampled = basis.is_asymmetric(ASYMMETRY_GRID, T::lit(ASYMMETRY_EPS))?;
        let exact = basis.is_asymmetric_exact().unwrap_or(true);
        if !(sampled && exact) {
            return Err(Error::SymmetricBasis);
        }
        Ok(Self { basis })
    }

    pub fn basis(&self) -> &BasisNumber<T> {
        &self.basis
    }

    /// Core point `a` with `[A]₁ = {a}`, required by the Ψ-cross product.
    pub fn psi_core(&self) -> Result<T> {
        self.basis.core_point().ok_or(Error::NonSingletonCore)
    }

    pub fn alpha_cut(&self, z: LcNumber<T>, alpha: T) -> Result<AlphaBand<T>> {
        z.alpha_cut(&self.basis, alpha)
    }

    /// Bands of `z` at each requested α.
    pub fn bands(&self, z: LcNumber<T>, alphas: &[T]) -> Result<Vec<AlphaBand<T>>> {
        alphas
            .iter()
            .map(|&a| z.alpha_cut(&self.basis, a))
            .collect()
    }

    pub fn d_infty(&self, b: LcNumber<T>, c: LcNumber<T>, grid_size: usize) -> Result<T> {
        b.d_infty(c, &self.basis, grid_size)
    }
}

/// Evenly spaced α-grid `0, 1/(n-1), ..., 1`.
pub fn alpha_grid<T: Scalar>(n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![T::one()],
        _ => {
            let last = T::from_count(n - 1);
            (0..n).map(|k| T::from_count(k) / last).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asymmetry_examples() {
        let b = BasisNumber::triangular(-0.5, 0.0, 0.51).unwrap();
        assert!(b.is_asymmetric(11, 1e-12).unwrap());
        let sym = BasisNumber::triangular(-1.0, 0.0, 1.0).unwrap();
        assert!(!sym.is_asymmetric(11, 1e-12).unwrap());
        let c = BasisNumber::triangular(-2.0, 0.0, 4.0).unwrap();
        assert!(c.is_asymmetric(11, 1e-12).unwrap());
        assert!(b.is_asymmetric(2, 1e-12).is_err());
        assert_eq!(b.is_asymmetric_exact(), Some(true));
        assert_eq!(sym.is_asymmetric_exact(), Some(false));
    }

    #[test]
    fn invalid_endpoints_rejected() {
        assert!(matches!(
            BasisNumber::triangular(1.0, 0.0, 2.0),
            Err(Error::InvalidBasis(_))
        ));
        assert!(BasisNumber::trapezoidal(0.0, 1.0, 0.5, 2.0).is_err());
        assert!(BasisNumber::triangular(0.0, f64::NAN, 1.0).is_err());
        let bad = BasisNumber::Triangular {
            a: 2.0,
            b: 0.0,
            d: 1.0,
        };
        assert!(bad.is_asymmetric(11, 1e-9).is_err());
    }

    #[test]
    fn trapezoid_levels() {
        let t = BasisNumber::trapezoidal(-1.0, 0.0, 0.5, 2.0).unwrap();
        assert_eq!(t.level(0.0).unwrap(), (-1.0, 2.0));
        assert_eq!(t.level(1.0).unwrap(), (0.0, 0.5));
        assert_eq!(t.level(0.5).unwrap(), (-0.5, 1.25));
        assert_eq!(t.core_point(), None);
        assert!(t.is_asymmetric(101, 1e-9).unwrap());
    }

    #[test]
    fn tabulated_interpolates_linearly() {
        let levels = vec![
            AlphaBand::new(0.0, -1.0, 2.0),
            AlphaBand::new(0.5, -0.2, 0.5),
            AlphaBand::new(1.0, 0.0, 0.0),
        ];
        let t = BasisNumber::tabulated(levels).unwrap();
        let (lo, hi): (f64, f64) = t.level(0.25).unwrap();
        assert!((lo + 0.6).abs() < 1e-15 && (hi - 1.25).abs() < 1e-15);
        assert_eq!(t.level(1.0).unwrap(), (0.0, 0.0));
        assert_eq!(t.core_point(), Some(0.0));
        assert!(t.is_asymmetric(101, 1e-9).unwrap());
        assert_eq!(t.is_asymmetric_exact(), None);
    }

    #[test]
    fn tabulated_must_nest() {
        let levels = vec![
            AlphaBand::new(0.0, -1.0, 1.0),
            AlphaBand::new(1.0, -2.0, 0.0),
        ];
        assert!(BasisNumber::tabulated(levels).is_err());
        let short = vec![
            AlphaBand::new(0.0, -1.0, 1.0),
            AlphaBand::new(0.5, 0.0, 0.0),
        ];
        assert!(BasisNumber::tabulated(short).is_err());
    }

    #[test]
    fn space_rejects_symmetric_basis() {
        let sym = BasisNumber::triangular(-1.0, 0.0, 1.0).unwrap();
        assert_eq!(FuzzySpace::new(sym), Err(Error::SymmetricBasis));
        let s = FuzzySpace::new(BasisNumber::triangular(-1.0, 0.0, 1.01).unwrap()).unwrap();
        assert_eq!(s.psi_core().unwrap(), 0.0);
        let trap = FuzzySpace::new(BasisNumber::trapezoidal(-1.0, 0.0, 0.5, 2.0).unwrap()).unwrap();
        assert_eq!(trap.psi_core(), Err(Error::NonSingletonCore));
    }

    #[test]
    fn grid_has_requested_endpoints() {
        let g: Vec<f64> = alpha_grid(11);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[10], 1.0);
        assert!((g[3] - 0.3).abs() < 1e-15);
    }
}
