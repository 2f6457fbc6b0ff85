use std::cmp::Ordering;

use crate::basis::BasisNumber;
use crate::error::{Error, Result};
use crate::number::{AlphaBand, LcNumber};
use crate::scalar::Scalar;

/// α-levels of every variable at every time step, indexed `[step][var][α]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandSet<T> {
    pub alphas: Vec<T>,
    pub bands: Vec<Vec<Vec<AlphaBand<T>>>>,
}

/// Time series of fuzzy states, one `LcNumber` per named variable per step.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<T> {
    names: Vec<String>,
    times: Vec<T>,
    states: Vec<Vec<LcNumber<T>>>,
    bands: Option<BandSet<T>>,
}

impl<T: Scalar> Trajectory<T> {
    pub fn new(names: Vec<String>, times: Vec<T>, states: Vec<Vec<LcNumber<T>>>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidArgument(
                "trajectory needs at least one variable".into(),
            ));
        }
        if times.len() != states.len() {
            return Err(Error::InvalidArgument(format!(
                "{} times but {} states",
                times.len(),
                states.len()
            )));
        }
        if times
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(Ordering::Less))
        {
            return Err(Error::InvalidArgument(
                "times must be strictly increasing".into(),
            ));
        }
        if let Some(s) = states.iter().find(|s| s.len() != names.len()) {
            return Err(Error::InvalidArgument(format!(
                "state has {} components, expected {}",
                s.len(),
                names.len()
            )));
        }
        Ok(Self {
            names,
            times,
            states,
            bands: None,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    pub fn states(&self) -> &[Vec<LcNumber<T>>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Values of variable `var` over time.
    pub fn series(&self, var: usize) -> Vec<LcNumber<T>> {
        self.states.iter().map(|s| s[var]).collect()
    }

    pub fn last(&self) -> Option<(T, &[LcNumber<T>])> {
        Some((*self.times.last()?, self.states.last()?.as_slice()))
    }

    /// Keeps every `stride`-th step, always including the final one.
    pub fn decimate(&self, stride: usize) -> Self {
        let stride = stride.max(1);
        let n = self.len();
        let keep: Vec<usize> = (0..n).filter(|&k| k % stride == 0 || k + 1 == n).collect();
        Self {
            names: self.names.clone(),
            times: keep.iter().map(|&k| self.times[k]).collect(),
            states: keep.iter().map(|&k| self.states[k].clone()).collect(),
            bands: self.bands.as_ref().map(|b| BandSet {
                alphas: b.alphas.clone(),
                bands: keep.iter().map(|&k| b.bands[k].clone()).collect(),
            }),
        }
    }

    /// Computes and stores the α-levels of every state.
    pub fn attach_bands(&mut self, basis: &BasisNumber<T>, alphas: &[T]) -> Result<()> {
        let levels = alphas
            .iter()
            .map(|&a| basis.level(a))
            .collect::<Result<Vec<_>>>()?;
        let bands = self
            .states
            .iter()
            .map(|s| {
                s.iter()
                    .map(|z| {
                        alphas
                            .iter()
                            .zip(&levels)
                            .map(|(&a, &(lo, hi))| z.band_from_level(a, lo, hi))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        self.bands = Some(BandSet {
            alphas: alphas.to_vec(),
            bands,
        });
        Ok(())
    }

    pub fn bands(&self) -> Option<&BandSet<T>> {
        self.bands.as_ref()
    }
}

/// `w -> (Re w, Fu w)`.
pub fn realify_single<T: Copy>(w: LcNumber<T>) -> [T; 2] {
    [w.re, w.fu]
}

pub fn fuzzify_single<T: Copy>(s: [T; 2]) -> LcNumber<T> {
    LcNumber::new(s[0], s[1])
}

/// `(x, y) = (r + pA, s + qA) -> (r, s, p, q)`.
pub fn realify_pair<T: Copy>(x: LcNumber<T>, y: LcNumber<T>) -> [T; 4] {
    [x.re, y.re, x.fu, y.fu]
}

pub fn fuzzify_pair<T: Copy>(s: [T; 4]) -> (LcNumber<T>, LcNumber<T>) {
    (LcNumber::new(s[0], s[2]), LcNumber::new(s[1], s[3]))
}

/// Fixed-step grid `t0, t0 + dt, ...` ending exactly at `t1`; a final partial
/// step closes the span when `dt` does not divide it.
pub fn time_grid<T: Scalar>(t_span: (T, T), dt: T) -> Result<Vec<T>> {
    let (t0, t1) = t_span;
    if !(t0.is_finite() && t1.is_finite()) || t1 < t0 {
        return Err(Error::InvalidArgument(format!(
            "invalid time span [{t0}, {t1}]"
        )));
    }
    if !dt.is_finite() || dt <= T::zero() {
        return Err(Error::InvalidArgument(format!(
            "step dt = {dt} must be positive"
        )));
    }
    if t1 == t0 {
        return Ok(vec![t0]);
    }
    let ratio = (t1 - t0) / dt;
    // absorb rounding so that e.g. 50 / 1e-3 does not yield a sliver step
    let steps = (ratio - T::lit(1e-9) * ratio.max(T::one()))
        .ceil()
        .max(T::one())
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument("too many steps".into()))?;
    let mut grid: Vec<T> = (0..steps).map(|k| t0 + dt * T::from_count(k)).collect();
    grid.push(t1);
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = LcNumber<f64>;

    #[test]
    fn grid_lands_on_end() {
        let g = time_grid((0.0, 1.0), 0.3).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(*g.last().unwrap(), 1.0);
        let g: Vec<f64> = time_grid((0.0, 50.0), 1e-3).unwrap();
        assert_eq!(g.len(), 50_001);
        assert!((g[g.len() - 2] - (50.0 - 1e-3)).abs() < 1e-9);
        assert_eq!(time_grid((2.0, 2.0), 0.1).unwrap(), vec![2.0]);
        assert!(time_grid((1.0, 0.0), 0.1).is_err());
        assert!(time_grid((0.0, 1.0), 0.0).is_err());
    }

    #[test]
    fn pair_round_trip_is_exact() {
        let (x, y) = (Z::new(1.5, -0.25), Z::new(-3.0, 7.0));
        assert_eq!(fuzzify_pair(realify_pair(x, y)), (x, y));
        assert_eq!(fuzzify_single(realify_single(x)), x);
    }

    #[test]
    fn rejects_misaligned_states() {
        let names = vec!["w".to_string()];
        assert!(
            Trajectory::new(names.clone(), vec![0.0, 1.0], vec![vec![Z::new(0.0, 0.0)]]).is_err()
        );
        assert!(Trajectory::new(
            names.clone(),
            vec![1.0, 1.0],
            vec![vec![Z::new(0.0, 0.0)], vec![Z::new(0.0, 0.0)]]
        )
        .is_err());
        assert!(Trajectory::new(names, vec![0.0], vec![vec![]]).is_err());
    }

    #[test]
    fn decimation_keeps_final_step() {
        let times: Vec<f64> = (0..10).map(|k| k as f64).collect();
        let states = times.iter().map(|&t| vec![Z::new(t, 0.0)]).collect();
        let tr = Trajectory::new(vec!["w".into()], times, states).unwrap();
        let d = tr.decimate(4);
        assert_eq!(d.times(), &[0.0, 4.0, 8.0, 9.0]);
    }

    #[test]
    fn bands_follow_states() {
        let basis = BasisNumber::triangular(-0.5, 0.0, 1.0).unwrap();
        let mut tr =
            Trajectory::new(vec!["w".into()], vec![0.0], vec![vec![Z::new(2.0, 3.0)]]).unwrap();
        tr.attach_bands(&basis, &[0.0, 1.0]).unwrap();
        let b = &tr.bands().unwrap().bands[0][0];
        assert_eq!((b[0].lower, b[0].upper), (0.5, 5.0));
        assert_eq!((b[1].lower, b[1].upper), (2.0, 2.0));
    }
}
