use super::Trajectory;
use crate::basis::BasisNumber;
use crate::error::{Error, Result};
use crate::number::{AlphaBand, LcNumber};
use crate::scalar::Scalar;

/// Which coordinate is drawn fuzzy in a phase portrait of `(x, y)` with
/// `x = r + pA`, `y = s + qA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Pairs `(x(t), s(t))`: fuzzy prey against the predator's real part.
    XVsS,
    /// Pairs `(r(t), y(t))`: prey real part against fuzzy predator.
    RVsY,
}

/// One time step of a phase portrait.
#[derive(Clone, Debug, PartialEq)]
pub struct PhasePoint<T> {
    pub t: T,
    /// Real part of the crisp coordinate.
    pub crisp: T,
    /// The fuzzy coordinate.
    pub fuzzy: LcNumber<T>,
    /// α-levels of the fuzzy coordinate.
    pub bands: Vec<AlphaBand<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhasePortrait<T> {
    pub projection: Projection,
    pub alphas: Vec<T>,
    pub points: Vec<PhasePoint<T>>,
}

impl<T: Scalar> PhasePortrait<T> {
    /// `true` when every band is a single point, i.e. the portrait is an
    /// ordinary curve.
    pub fn is_crisp(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.bands.iter().all(AlphaBand::is_degenerate))
    }

    /// `(fuzzy real part, crisp)` pairs, ignoring the bands.
    pub fn point_series(&self) -> Vec<(T, T)> {
        self.points.iter().map(|p| (p.fuzzy.re, p.crisp)).collect()
    }
}

pub fn phase_portrait<T: Scalar>(
    traj: &Trajectory<T>,
    projection: Projection,
    basis: &BasisNumber<T>,
    alphas: &[T],
) -> Result<PhasePortrait<T>> {
    if traj.names().len() != 2 {
        return Err(Error::InvalidArgument(
            "phase portraits need a two-variable trajectory".into(),
        ));
    }
    if traj.is_empty() {
        return Err(Error::InvalidArgument("empty trajectory".into()));
    }
    let (fuzzy_var, crisp_var) = match projection {
        Projection::XVsS => (0, 1),
        Projection::RVsY => (1, 0),
    };
    let points = traj
        .times()
        .iter()
        .zip(traj.states())
        .map(|(&t, s)| {
            let fuzzy = s[fuzzy_var];
            let bands = alphas
                .iter()
                .map(|&a| fuzzy.alpha_cut(basis, a))
                .collect::<Result<Vec<_>>>()?;
            Ok(PhasePoint {
                t,
                crisp: s[crisp_var].re,
                fuzzy,
                bands,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PhasePortrait {
        projection,
        alphas: alphas.to_vec(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = LcNumber<f64>;

    fn traj(states: Vec<Vec<Z>>) -> Trajectory<f64> {
        let times = (0..states.len()).map(|k| k as f64).collect();
        Trajectory::new(vec!["x".into(), "y".into()], times, states).unwrap()
    }

    #[test]
    fn crisp_trajectory_is_point_series() {
        let basis = BasisNumber::triangular(-1.0, 0.0, 1.01).unwrap();
        let tr = traj(vec![
            vec![Z::real(1.0), Z::real(2.0)],
            vec![Z::real(3.0), Z::real(4.0)],
        ]);
        let p = phase_portrait(&tr, Projection::XVsS, &basis, &[0.0, 0.5, 1.0]).unwrap();
        assert!(p.is_crisp());
        assert_eq!(p.point_series(), vec![(1.0, 2.0), (3.0, 4.0)]);
    }

    #[test]
    fn projections_pick_fuzzy_coordinate() {
        let basis = BasisNumber::triangular(-1.0, 0.0, 1.01).unwrap();
        let tr = traj(vec![vec![Z::new(100.0, 2.0), Z::new(50.0, -1.0)]]);
        let xs = phase_portrait(&tr, Projection::XVsS, &basis, &[0.0]).unwrap();
        assert_eq!(xs.points[0].crisp, 50.0);
        assert_eq!(
            (xs.points[0].bands[0].lower, xs.points[0].bands[0].upper),
            (98.0, 102.02)
        );
        let ry = phase_portrait(&tr, Projection::RVsY, &basis, &[0.0]).unwrap();
        assert_eq!(ry.points[0].crisp, 100.0);
        assert_eq!(
            (ry.points[0].bands[0].lower, ry.points[0].bands[0].upper),
            (48.99, 51.0)
        );
    }

    #[test]
    fn single_variable_trajectory_rejected() {
        let basis = BasisNumber::triangular(-1.0, 0.0, 1.01).unwrap();
        let tr = Trajectory::new(vec!["w".into()], vec![0.0], vec![vec![Z::real(1.0)]]).unwrap();
        assert!(phase_portrait(&tr, Projection::XVsS, &basis, &[0.0]).is_err());
    }
}
