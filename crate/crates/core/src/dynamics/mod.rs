//! Fuzzy curves, linear fuzzy ODEs, and two-dimensional fuzzy systems.

mod curve;
mod linear;
mod lotka_volterra;
mod oscillator;
mod phase;
mod rk4;
mod simulate;
mod trajectory;

pub use curve::{
    check_curve_chain_rule, curve_derivative, curve_integral, curve_integral_with, FuzzyCurve,
};
pub use linear::{
    realify_linear, realify_linear_psi, solve_linear_analytic, solve_linear_psi_analytic,
    solve_linear_psi_exact, LinearParams, Matrix2,
};
pub use lotka_volterra::{
    lv_conserved, lv_equilibria, realify_lotka_volterra, Equilibria, LvInvariant, LvParams,
};
pub use oscillator::{oscillator_invariant, OscillatorParams};
pub use phase::{phase_portrait, PhasePoint, PhasePortrait, Projection};
pub use rk4::{rk4_integrate, DEFAULT_DT};
pub use simulate::{simulate_system, simulate_with_bands, Method, System};
pub use trajectory::{
    fuzzify_pair, fuzzify_single, realify_pair, realify_single, time_grid, BandSet, Trajectory,
};
