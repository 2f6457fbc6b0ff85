use super::{
    fuzzify_pair, fuzzify_single, realify_linear, realify_linear_psi, realify_lotka_volterra,
    realify_pair, realify_single, rk4_integrate, solve_linear_analytic, solve_linear_psi_analytic,
    time_grid, LinearParams, LvParams, OscillatorParams, Trajectory,
};
use crate::basis::BasisNumber;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The two-dimensional (or scalar linear) fuzzy systems that can be run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum System<T> {
    Oscillator(OscillatorParams<T>),
    LotkaVolterra(LvParams<T>),
    Linear(LinearParams<T>),
    /// `w' = λ ⊙_Ψ w` with `[A]₁ = {core}`.
    LinearPsi {
        params: LinearParams<T>,
        core: T,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Closed form where one exists, RK4 otherwise.
    #[default]
    Auto,
    Analytic,
    Rk4,
}

impl<T: Scalar> System<T> {
    pub fn has_closed_form(&self) -> bool {
        match self {
            Self::Oscillator(p) => p.is_unit(),
            Self::LotkaVolterra(_) => false,
            Self::Linear(_) | Self::LinearPsi { .. } => true,
        }
    }

    pub fn variable_names(&self) -> Vec<String> {
        match self {
            Self::Oscillator(_) | Self::LotkaVolterra(_) => vec!["x".into(), "y".into()],
            Self::Linear(_) | Self::LinearPsi { .. } => vec!["w".into()],
        }
    }
}

/// Runs `system` over `t_span` on a fixed `dt` grid.
///
/// The closed form of [`System::LinearPsi`] is the reference formula (see
/// [`super::solve_linear_psi_analytic`]); `Method::Rk4` integrates the
/// realified matrix instead, and the two agree only when `λ₂ = 1` or `t = 0`.
pub fn simulate_system<T: Scalar>(
    system: &System<T>,
    t_span: (T, T),
    dt: T,
    method: Method,
) -> Result<Trajectory<T>> {
    let analytic = match method {
        Method::Auto => system.has_closed_form(),
        Method::Analytic if !system.has_closed_form() => {
            return Err(Error::InvalidArgument(
                "system has no closed-form solution".into(),
            ));
        }
        Method::Analytic => true,
        Method::Rk4 => false,
    };
    if analytic {
        let ts = time_grid(t_span, dt)?;
        return match system {
            System::Oscillator(p) => p.analytic(&ts),
            System::Linear(p) => solve_linear_analytic(p, &ts),
            System::LinearPsi { params, core } => solve_linear_psi_analytic(params, *core, &ts),
            System::LotkaVolterra(_) => unreachable!("no closed form"),
        };
    }
    let names = system.variable_names();
    match system {
        System::Linear(p) => {
            let m = realify_linear(p.lambda);
            let path = rk4_integrate(|_, s| m.apply(s), realify_single(p.w0), t_span, dt)?;
            single(names, path)
        }
        System::LinearPsi { params, core } => {
            let m = realify_linear_psi(params.lambda, *core);
            let path = rk4_integrate(|_, s| m.apply(s), realify_single(params.w0), t_span, dt)?;
            single(names, path)
        }
        System::Oscillator(p) => {
            let f = p.realified();
            let path = rk4_integrate(|_, s| f(s), realify_pair(p.x0, p.y0), t_span, dt)?;
            pair(names, path)
        }
        System::LotkaVolterra(p) => {
            p.validate()?;
            let f = realify_lotka_volterra(p);
            let path = rk4_integrate(|_, s| f(s), realify_pair(p.x0, p.y0), t_span, dt)?;
            pair(names, path)
        }
    }
}

/// [`simulate_system`] followed by α-level bands on `alphas`.
pub fn simulate_with_bands<T: Scalar>(
    system: &System<T>,
    t_span: (T, T),
    dt: T,
    method: Method,
    basis: &BasisNumber<T>,
    alphas: &[T],
) -> Result<Trajectory<T>> {
    let mut tr = simulate_system(system, t_span, dt, method)?;
    tr.attach_bands(basis, alphas)?;
    Ok(tr)
}

fn single<T: Scalar>(names: Vec<String>, path: Vec<(T, [T; 2])>) -> Result<Trajectory<T>> {
    let (times, states) = path
        .into_iter()
        .map(|(t, s)| (t, vec![fuzzify_single(s)]))
        .unzip();
    Trajectory::new(names, times, states)
}

fn pair<T: Scalar>(names: Vec<String>, path: Vec<(T, [T; 4])>) -> Result<Trajectory<T>> {
    let (times, states) = path
        .into_iter()
        .map(|(t, s)| {
            let (x, y) = fuzzify_pair(s);
            (t, vec![x, y])
        })
        .unzip();
    Trajectory::new(names, times, states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::oscillator_invariant;
    use crate::number::LcNumber;

    type Z = LcNumber<f64>;

    fn fig2() -> System<f64> {
        System::Linear(LinearParams {
            lambda: Z::new(-0.5, 0.8),
            w0: Z::new(2.0, 2.0),
        })
    }

    #[test]
    fn linear_rk4_matches_closed_form() {
        let a = simulate_system(&fig2(), (0.0, 10.0), 1e-3, Method::Analytic).unwrap();
        let n = simulate_system(&fig2(), (0.0, 10.0), 1e-3, Method::Rk4).unwrap();
        assert_eq!(a.times(), n.times());
        let err = a
            .states()
            .iter()
            .zip(n.states())
            .map(|(u, v)| u[0].dist(v[0]))
            .fold(0.0, f64::max);
        assert!(err < 1e-6, "{err}");
    }

    #[test]
    fn oscillator_rk4_matches_closed_form() {
        let sys = System::Oscillator(OscillatorParams::unit(
            Z::new(100.0, 2.0),
            Z::new(100.0, 2.0),
        ));
        let a = simulate_system(&sys, (0.0, 5.0), 1e-3, Method::Analytic).unwrap();
        let n = simulate_system(&sys, (0.0, 5.0), 1e-3, Method::Rk4).unwrap();
        for (u, v) in a.states().iter().zip(n.states()) {
            assert!(u[0].dist(v[0]) < 1e-8 && u[1].dist(v[1]) < 1e-8);
        }
    }

    #[test]
    fn oscillator_drift_shrinks_with_step() {
        let sys = System::Oscillator(OscillatorParams::unit(
            Z::new(100.0, 2.0),
            Z::new(100.0, 2.0),
        ));
        let drift = |dt: f64| {
            let tr = simulate_system(&sys, (0.0, 50.0), dt, Method::Rk4).unwrap();
            let v0 = oscillator_invariant(tr.states()[0][0], tr.states()[0][1]);
            tr.states()
                .iter()
                .map(|s| oscillator_invariant(s[0], s[1]).dist(v0))
                .fold(0.0, f64::max)
        };
        let (coarse, fine) = (drift(0.1), drift(0.05));
        assert!(coarse / fine >= 8.0, "{coarse} / {fine}");
    }

    #[test]
    fn analytic_request_for_lv_fails() {
        let sys = System::LotkaVolterra(LvParams {
            alpha: Z::new(0.25, 0.001),
            beta: Z::new(0.18, 0.003),
            a: Z::new(0.01, 0.0),
            b: Z::new(0.007, 0.0),
            x0: Z::new(100.0, 5.0),
            y0: Z::new(30.0, 2.0),
        });
        assert!(simulate_system(&sys, (0.0, 1.0), 0.1, Method::Analytic).is_err());
        assert_eq!(
            simulate_system(&sys, (0.0, 1.0), 0.1, Method::Auto)
                .unwrap()
                .len(),
            11
        );
    }

    #[test]
    fn bands_are_attached_on_request() {
        let basis = BasisNumber::triangular(-0.5, 0.0, 0.51).unwrap();
        let tr = simulate_with_bands(&fig2(), (0.0, 1.0), 0.5, Method::Auto, &basis, &[0.0, 1.0])
            .unwrap();
        let b = tr.bands().unwrap();
        assert_eq!(b.bands.len(), 3);
        assert_eq!(b.bands[0][0][1].lower, 2.0);
    }
}
