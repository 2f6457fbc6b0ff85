use proptest::prelude::*;
use rfa_core::dynamics::{
    fuzzify_pair, lv_conserved, oscillator_invariant, realify_linear, realify_linear_psi,
    realify_lotka_volterra, realify_pair, simulate_system, solve_linear_analytic,
    solve_linear_psi_analytic, time_grid, LinearParams, LvParams, Method, OscillatorParams, System,
};
use rfa_core::Lc;

fn lc(range: f64) -> impl Strategy<Value = Lc> {
    (-range..range, -range..range).prop_map(|(r, q)| Lc::new(r, q))
}

fn sample_lv() -> LvParams<f64> {
    LvParams {
        alpha: Lc::new(0.25, 0.001),
        beta: Lc::new(0.18, 0.003),
        a: Lc::new(0.01, 0.0),
        b: Lc::new(0.007, 0.0),
        x0: Lc::new(100.0, 5.0),
        y0: Lc::new(30.0, 2.0),
    }
}

#[test]
fn linear_flow_rk4_agrees_with_closed_form() {
    for lambda in [Lc::new(-0.5, 0.8), Lc::new(0.5, 1.0), Lc::new(0.0, 1.0)] {
        let sys = System::Linear(LinearParams {
            lambda,
            w0: Lc::new(2.0, 2.0),
        });
        let a = simulate_system(&sys, (0.0, 10.0), 1e-3, Method::Analytic).unwrap();
        let n = simulate_system(&sys, (0.0, 10.0), 1e-3, Method::Rk4).unwrap();
        let err = a
            .states()
            .iter()
            .zip(n.states())
            .map(|(u, v)| u[0].dist(v[0]))
            .fold(0.0, f64::max);
        assert!(err < 1e-6, "λ = {lambda}: {err}");
    }
}

proptest! {
    #[test]
    fn linear_norm_law(l1 in -1.0f64..1.0, l2 in -2.0f64..2.0, w0 in lc(5.0)) {
        let p = LinearParams { lambda: Lc::new(l1, l2), w0 };
        let ts: Vec<f64> = (0..40).map(|k| k as f64 * 0.25).collect();
        let tr = solve_linear_analytic(&p, &ts).unwrap();
        for (t, s) in tr.times().iter().zip(tr.states()) {
            let expected = w0.norm() * (l1 * t).exp();
            prop_assert!((s[0].norm() - expected).abs() <= 1e-12 * expected.max(1.0));
        }
    }

    #[test]
    fn psi_solution_ignores_lambda2_when_core_is_zero(l1 in -1.0f64..1.0, l2 in -5.0f64..5.0, w0 in lc(5.0)) {
        let ts: Vec<f64> = (0..30).map(|k| k as f64 * 0.3).collect();
        let with = solve_linear_psi_analytic(&LinearParams { lambda: Lc::new(l1, l2), w0 }, 0.0, &ts).unwrap();
        let without = solve_linear_psi_analytic(&LinearParams { lambda: Lc::new(l1, 0.0), w0 }, 0.0, &ts).unwrap();
        prop_assert_eq!(with.states(), without.states());
    }

    #[test]
    fn eigenvalues_by_characteristic_polynomial(l1 in -3.0f64..3.0, l2 in -3.0f64..3.0, a in -2.0f64..2.0) {
        let lambda = Lc::new(l1, l2);
        let m = realify_linear(lambda);
        prop_assert!(m.char_poly(lambda).norm() < 1e-12);
        prop_assert!(m.char_poly(lambda.conj()).norm() < 1e-12);
        let psi = realify_linear_psi(lambda, a);
        let mu = Lc::real(l1 + a * l2);
        prop_assert!(psi.char_poly(mu).norm() < 1e-10);
        prop_assert!(psi.char_poly_derivative(mu).norm() < 1e-12);
    }

    #[test]
    fn lv_component_form_equals_product_form(
        alpha in lc(1.0), beta in lc(1.0), a in lc(0.1), b in lc(0.1),
        x in lc(100.0), y in lc(100.0),
    ) {
        let p = LvParams { alpha, beta, a, b, x0: x, y0: y };
        let s = realify_pair(x, y);
        let d1 = realify_lotka_volterra(&p)(&s);
        let d2 = p.field_via_product(&s);
        for i in 0..4 {
            prop_assert!((d1[i] - d2[i]).abs() <= 1e-12 * d2[i].abs().max(1.0));
        }
    }

    #[test]
    fn realification_round_trip(x in lc(1e6), y in lc(1e6)) {
        prop_assert_eq!(fuzzify_pair(realify_pair(x, y)), (x, y));
    }
}

#[test]
fn oscillator_invariant_is_conserved() {
    let sys = System::Oscillator(OscillatorParams::unit(
        Lc::new(100.0, 2.0),
        Lc::new(100.0, 2.0),
    ));
    let tr = simulate_system(&sys, (0.0, 50.0), 1e-3, Method::Rk4).unwrap();
    let v0 = oscillator_invariant(tr.states()[0][0], tr.states()[0][1]);
    for s in tr.states() {
        let v = oscillator_invariant(s[0], s[1]);
        assert!((v.re - v0.re).abs() / v0.re.abs() < 1e-6);
        assert!((v.fu - v0.fu).abs() / v0.fu.abs() < 1e-6);
    }
}

#[test]
fn lotka_volterra_first_integral_is_conserved() {
    let p = sample_lv();
    let tr = simulate_system(&System::LotkaVolterra(p), (0.0, 50.0), 1e-3, Method::Rk4).unwrap();
    let v0 = lv_conserved(&p, p.x0, p.y0).unwrap();
    assert!(v0.certified);
    let mut worst: f64 = 0.0;
    for s in tr.states() {
        let v = lv_conserved(&p, s[0], s[1]).unwrap();
        assert!(v.certified);
        worst = worst.max(v.value.dist(v0.value) / v0.value.norm());
    }
    assert!(worst < 1e-4, "{worst}");
}

#[test]
fn linearized_lv_runs_as_oscillator() {
    let p = sample_lv();
    let lin = p.linearized().unwrap();
    let tr = simulate_system(&System::Oscillator(lin), (0.0, 20.0), 1e-2, Method::Auto).unwrap();
    // near P₂ the nonlinear and linearized flows share the small-amplitude period
    assert_eq!(tr.names(), &["x".to_string(), "y".to_string()]);
    assert!(tr
        .states()
        .iter()
        .all(|s| s[0].is_finite() && s[1].is_finite()));
    // weighted energy c_y⊙u² ⊕ c_x⊙v² is the first integral of the linearization
    let energy = |u: Lc, v: Lc| lin.c_y * u * u + lin.c_x * v * v;
    let e0 = energy(tr.states()[0][0], tr.states()[0][1]);
    for s in tr.states() {
        assert!(energy(s[0], s[1]).dist(e0) <= 1e-8 * e0.norm());
    }
}

#[test]
fn time_grid_matches_rk4_grid() {
    let sys = System::Linear(LinearParams {
        lambda: Lc::new(0.1, 0.2),
        w0: Lc::new(1.0, 0.0),
    });
    let tr = simulate_system(&sys, (0.0, 1.0), 0.3, Method::Rk4).unwrap();
    assert_eq!(tr.times(), time_grid((0.0, 1.0), 0.3).unwrap().as_slice());
}
