use super::time_grid;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default fixed step.
pub const DEFAULT_DT: f64 = 1e-3;

/// Classical fourth-order Runge-Kutta on a fixed step grid over `t_span`.
///
/// The returned sequence starts with `(t0, s0)` and ends exactly at `t1`,
/// with the last step shortened when `dt` does not divide the span.
pub fn rk4_integrate<T, F, const N: usize>(
    mut field: F,
    s0: [T; N],
    t_span: (T, T),
    dt: T,
) -> Result<Vec<(T, [T; N])>>
where
    T: Scalar,
    F: FnMut(T, &[T; N]) -> [T; N],
{
    let grid = time_grid(t_span, dt)?;
    let half = T::lit(0.5);
    let sixth = T::lit(1.0 / 6.0);
    let two = T::lit(2.0);

    let mut eval = |t: T, s: &[T; N]| -> Result<[T; N]> {
        let d = field(t, s);
        if d.iter().all(|v| v.is_finite()) {
            Ok(d)
        } else {
            Err(Error::IntegrationAbort { time: t.as_f64() })
        }
    };
    let axpy = |s: &[T; N], k: &[T; N], h: T| -> [T; N] {
        let mut out = *s;
        for (o, k) in out.iter_mut().zip(k) {
            *o = *o + h * *k;
        }
        out
    };

    let mut out = Vec::with_capacity(grid.len());
    let mut s = s0;
    out.push((grid[0], s));
    for w in grid.windows(2) {
        let (t, h) = (w[0], w[1] - w[0]);
        let k1 = eval(t, &s)?;
        let k2 = eval(t + half * h, &axpy(&s, &k1, half * h))?;
        let k3 = eval(t + half * h, &axpy(&s, &k2, half * h))?;
        let k4 = eval(t + h, &axpy(&s, &k3, h))?;
        for i in 0..N {
            s[i] = s[i] + sixth * h * (k1[i] + two * k2[i] + two * k3[i] + k4[i]);
        }
        if s.iter().any(|v| !v.is_finite()) {
            return Err(Error::IntegrationAbort {
                time: w[1].as_f64(),
            });
        }
        out.push((w[1], s));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::realify_linear;
    use crate::number::LcNumber;
    use std::f64::consts::TAU;

    #[test]
    fn exponential_growth() {
        let m = realify_linear(LcNumber::new(1.0, 0.0));
        let path = rk4_integrate(|_, s| m.apply(s), [1.0, 0.0], (0.0, 1.0), 1e-3).unwrap();
        let (t, s) = *path.last().unwrap();
        assert_eq!(t, 1.0);
        assert!((s[0] - std::f64::consts::E).abs() < 1e-9);
    }

    #[test]
    fn zero_field_is_constant() {
        let path = rk4_integrate(|_, _| [0.0; 3], [1.0, -2.0, 3.5], (0.0, 2.0), 0.25).unwrap();
        assert_eq!(path.len(), 9);
        assert!(path.iter().all(|(_, s)| *s == [1.0, -2.0, 3.5]));
    }

    #[test]
    fn rotation_returns_after_one_period() {
        let m = realify_linear(LcNumber::new(0.0, 1.0));
        let path = rk4_integrate(|_, s| m.apply(s), [1.0, 0.0], (0.0, TAU), 1e-3).unwrap();
        let (_, s) = *path.last().unwrap();
        assert!((s[0] - 1.0).abs() < 1e-6 && s[1].abs() < 1e-6);
    }

    #[test]
    fn blow_up_aborts_with_time() {
        let err =
            rk4_integrate(|_, s: &[f64; 1]| [s[0] * s[0]], [1.0], (0.0, 2.0), 1e-2).unwrap_err();
        match err {
            Error::IntegrationAbort { time } => assert!(time > 0.9 && time <= 2.0),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn partial_final_step() {
        let path = rk4_integrate(|_, _| [1.0f64], [0.0], (0.0, 1.0), 0.3).unwrap();
        let (t, s) = *path.last().unwrap();
        assert_eq!(t, 1.0);
        assert!((s[0] - 1.0).abs() < 1e-15);
    }
}
