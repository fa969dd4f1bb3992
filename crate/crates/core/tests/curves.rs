// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use bhg_core::curves::{
    bitension_theta_1d, frenet_from_samples, helix_curve, integrate_curve, integrate_trajectory,
    integrated_helix_curve, maurer_cartan_pullback_1d, ode_consistency_residual, write_curve_csv,
    DiscreteCurve, HelixPath, KAPPA_MIN,
};
use bhg_core::lie::su2;
use proptest::prelude::*;

#[test]
fn integrated_curve_json_round_trip() {
    let c = integrated_helix_curve(1.5, 0.01, 300).unwrap();
    let back = DiscreteCurve::from_json(&c.to_json().unwrap()).unwrap();
    assert_eq!(back.len(), c.len());
    for (a, b) in back.f_samples().iter().zip(c.f_samples()) {
        assert_eq!(a.coeffs(), b.coeffs());
    }
    for (a, b) in back.psi_samples().unwrap().iter().zip(c.psi_samples().unwrap()) {
        assert_eq!(a.matrix(), b.matrix());
    }
}

#[test]
fn reconstructed_group_curve_reproduces_its_coefficients() {
    let h = 0.01;
    let c = integrated_helix_curve(1.0, h, 1000).unwrap();
    let pulled = maurer_cartan_pullback_1d(&c).unwrap();
    let mut worst: f64 = 0.0;
    for (k, v) in pulled.values.iter().enumerate() {
        worst = worst.max(v.add_scaled(-1.0, &c.f_samples()[k + 1]).unwrap().norm());
    }
    assert!(worst < 1e-4, "{worst}");
}

#[test]
fn sampled_helix_frenet_converges_to_closed_form() {
    let err = |n: usize| {
        let (path, curve) = helix_curve(2.0, (0.0, 4.0), n).unwrap();
        let f = frenet_from_samples(&path, curve.h(), n / 2, KAPPA_MIN).unwrap();
        (f.kappa - 0.4).abs().max((f.tau - 0.2).abs())
    };
    let (e1, e2) = (err(41), err(81));
    assert!((3.5..4.5).contains(&(e1 / e2)), "{e1} {e2}");
}

#[test]
fn trajectory_csv_has_one_row_per_state() {
    let init = HelixPath::new(1.0).unwrap().initial_state(Arc::new(su2()), 0.0).unwrap();
    let states = integrate_trajectory(&init, 0.01, 50).unwrap();
    let curve = integrate_curve(&init, 0.01, 50).unwrap();
    let mut out = Vec::new();
    write_curve_csv(&mut out, &curve, &[("res_norm", ode_consistency_residual(&states, 0.01))]).unwrap();
    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,y1,y2,y3,res_norm");
    assert_eq!(lines.len(), 52);
    assert!(lines[1].ends_with(','));
    let fields: Vec<&str> = lines[10].split(',').collect();
    assert_eq!(fields.len(), 5);
    assert!(fields[4].parse::<f64>().unwrap() < 1e-4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn helix_family_is_biharmonic_to_second_order(a in 0.3f64..3.0) {
        let r = |n: usize| bitension_theta_1d(&helix_curve(a, (0.0, 5.0), n).unwrap().1).unwrap().sup_norm();
        let ratio = r(51) / r(101);
        prop_assert!((3.6..4.4).contains(&ratio), "{}", ratio);
    }

    #[test]
    fn rk4_tracks_the_closed_form_tangent(a in 0.3f64..3.0) {
        let helix = HelixPath::new(a).unwrap();
        let init = helix.initial_state(Arc::new(su2()), 0.0).unwrap();
        let states = integrate_trajectory(&init, 0.01, 500).unwrap();
        for (k, s) in states.iter().enumerate() {
            let exact = helix.tangent_jet(k as f64 * 0.01)[0];
            for (c, e) in s.y.coeffs().iter().zip(exact) {
                prop_assert!((c - e).abs() < 1e-8);
            }
            // |y| = 1 along the flow.
            prop_assert!((s.y.coeffs().iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-8);
        }
    }
}
