//! Elementary analytic mappings, Cauchy-Riemann derivatives and contour
//! integration.

mod contour;
mod derivative;
mod elementary;
mod mapping;
mod mapping_ode;

pub use contour::{
    antiderivative_difference, contour_integral, contour_integral_with, Path, PathKind, Quadrature,
    MAX_GAP_RATIO,
};
pub use derivative::{
    check_chain_rule, derivative_cr, product_rule, quotient_rule, CrReport, DEFAULT_STEP,
};
pub use elementary::{exp_rfa, log_rfa, poly_eval, pow_lc, pow_real};
pub use mapping::{FuzzyMapping, Region};
pub use mapping_ode::solve_linear_mapping_ode;
