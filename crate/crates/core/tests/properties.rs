//! Property tests for the cycle invariants.

use proptest::prelude::*;

use squeezed_otto::energetics::{
    cop, cycle_energetics, efficiency, generalized_relation_residual, ratio_r,
};
use squeezed_otto::oracle::run_cycle;
use squeezed_otto::params::{squeeze_factor, CycleParams};
use squeezed_otto::regimes::{classify, DEFAULT_EPSILON};
use squeezed_otto::sweep::{parse_csv_row, render_csv, run_sweep, SweepSpec, Unit};
use squeezed_otto::VariedParam;

fn arb_params() -> impl Strategy<Value = CycleParams<f64>> {
    (
        10.0f64..1e6,
        1.01f64..10.0,
        0.001f64..1.0,
        0.05f64..3.0,
        0.0f64..3.0,
        0.0f64..0.5,
    )
        .prop_map(|(omega_c, omega_ratio, beta_c, beta_ratio, r, xi)| {
            CycleParams::new(omega_c, omega_ratio, beta_c, beta_ratio, r, xi).unwrap()
        })
}

fn paper_point() -> impl Strategy<Value = CycleParams<f64>> {
    (0.0f64..1.5, 0.0f64..0.45).prop_map(|(r, xi)| {
        CycleParams::paper_defaults().with_r(r).unwrap().with_xi(xi).unwrap()
    })
}

proptest! {
    #[test]
    fn first_law_closes(params in arb_params()) {
        let out = cycle_energetics(&params);
        let scale = out.q_cold.abs().max(out.q_hot.abs()).max(out.w_net.abs()).max(1e-30);
        prop_assert!((out.q_cold + out.q_hot + out.w_net).abs() / scale < 1e-12);
    }

    #[test]
    fn squeeze_factor_bounded_and_decreasing(r in 0.0f64..5.0, delta in 1e-3f64..1.0) {
        let z = squeeze_factor(r);
        prop_assert!(z > 0.0 && z <= 1.0);
        prop_assert!(squeeze_factor(r + delta) < z);
    }

    #[test]
    fn every_sign_pattern_is_classifiable(params in arb_params()) {
        let out = cycle_energetics(&params);
        prop_assert!(classify(&out, DEFAULT_EPSILON).is_ok());
    }

    #[test]
    fn quasi_static_ratio_is_unity(params in arb_params()) {
        let params = params.with_xi(0.0).unwrap();
        if let Ok(parts) = ratio_r(&params) {
            prop_assert!((parts.ratio - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn generalized_relation_is_an_identity(params in arb_params()) {
        if let (Ok(residual), Ok(parts)) =
            (generalized_relation_residual(&params), ratio_r(&params))
        {
            prop_assert!(residual < 1e-12 * parts.ratio.abs().max(1.0));
        }
    }

    #[test]
    fn efficiency_agrees_with_ratio_form(params in arb_params()) {
        if let (Some(eta), Ok(parts)) = (efficiency(&params), ratio_r(&params)) {
            let via_ratio = 1.0 - parts.ratio / params.omega_ratio();
            prop_assert!((eta - via_ratio).abs() < 1e-12);
        }
    }

    #[test]
    fn cop_agrees_with_ratio_form(params in arb_params()) {
        if let (Some(c), Ok(parts)) = (cop(&params), ratio_r(&params)) {
            let cop_otto = 1.0 / (params.omega_ratio() - 1.0);
            let via_ratio =
                parts.ratio * cop_otto / (1.0 + cop_otto * (1.0 - parts.ratio));
            prop_assert!((c - via_ratio).abs() < 1e-12);
        }
    }

    #[test]
    fn oracle_matches_closed_forms(point in paper_point(), chi in 0.0f64..6.3) {
        let out = cycle_energetics(&point);
        let strokes = run_cycle(&point, chi).unwrap();
        prop_assert!((strokes.q_cold - out.q_cold).abs() < 1e-12);
        prop_assert!((strokes.q_hot - out.q_hot).abs() < 1e-12);
        prop_assert!((strokes.w_net() - out.w_net).abs() < 1e-12);
    }

    #[test]
    fn sweep_rows_round_trip(xi in 0.0f64..0.45, steps in 2usize..20) {
        let rows = run_sweep(&SweepSpec {
            vary: VariedParam::R,
            from: 0.0,
            to: 1.5,
            steps,
            base: CycleParams::paper_defaults().with_xi(xi).unwrap(),
            unit: Unit::HbarOmegaC,
        }).unwrap();
        let text = render_csv(&rows);
        let parsed: Vec<_> = text.lines().skip(1).map(|l| parse_csv_row(l).unwrap()).collect();
        prop_assert_eq!(parsed, rows);
    }
}
