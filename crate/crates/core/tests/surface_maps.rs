// SPDX-License-Identifier: Apache-2.0

mod common;

use bhg_core::complex_loop::three_step_verify;
use bhg_core::convergence::{observed_orders, orders_within};
use bhg_core::registry::ResidualRegistry;
use bhg_core::surface::{
    bitension_theta_2d, biharmonic_residual, harmonic_residual, maurer_cartan_pullback,
    maurer_cartan_pullback_with_diagnostics, theta_form, GridMap, TensionData,
};
use proptest::prelude::*;

use common::{rng, x1_phase_map, RandomMap};

#[test]
fn grid_map_json_round_trip_preserves_every_residual() {
    let map = RandomMap::new(&mut rng(11), "su3", true).sample(17, 15);
    let back = GridMap::from_json(&map.to_json().unwrap()).unwrap();
    for kind in ResidualRegistry::with_builtins().iter() {
        let a = kind.evaluate(&map).unwrap();
        let b = kind.evaluate(&back).unwrap();
        assert_eq!(a.max_difference(&b).unwrap(), 0.0, "{}", kind.name());
    }
}

#[test]
fn cubic_phase_is_biharmonic_and_its_residuals_decay() {
    // exp(x^3 X1): delta alpha = -6x X1, Theta = (-6 X1, 0); the biharmonic
    // and induced harmonic-system residuals are pure truncation error.
    let sizes = [64, 127, 253];
    let lhs: Vec<f64> = sizes.iter().map(|&n| biharmonic_residual(&x1_phase_map(n, |x| x.powi(3))).unwrap().sup_norm()).collect();
    let three: Vec<f64> = sizes
        .iter()
        .map(|&n| three_step_verify(&x1_phase_map(n, |x| x.powi(3))).unwrap().harmonic_system_residual())
        .collect();
    assert!(orders_within(&lhs, 2.0, 2.0, 0.25), "{:?}", observed_orders(&lhs, 2.0));
    assert!(orders_within(&three, 2.0, 2.0, 0.25), "{:?}", observed_orders(&three, 2.0));
    let theta = theta_form(&x1_phase_map(127, |x| x.powi(3))).unwrap();
    let g = *theta.dx.grid();
    for (i, j) in theta.dx.interior_points() {
        assert!((theta.dx.at(i, j)[0] + 6.0).abs() < 1e-2, "x = {}", g.x(i));
    }
}

#[test]
fn quartic_phase_is_detected_at_every_resolution() {
    // exp(x^4 X1 / 2): the left-hand side tends to -12 X1 and Theta to (-12x X1, 0).
    for n in [64, 127] {
        let map = x1_phase_map(n, |x| 0.5 * x.powi(4));
        let lhs = biharmonic_residual(&map).unwrap();
        for (i, j) in lhs.interior_points() {
            assert!((lhs.at(i, j)[0] + 12.0).abs() < 0.5, "n = {n}");
        }
        let r = three_step_verify(&map).unwrap();
        assert!((r.b_divergence - 6.0).abs() < 0.3, "{r:?}");
    }
}

#[test]
fn harmonic_residual_order_on_random_maps() {
    // The pulled-back divergence of a generic map tends to a nonzero limit; its
    // Richardson differences shrink at second order.
    let map = RandomMap::new(&mut rng(3), "su2", false);
    let f: Vec<_> = [17, 33, 65, 129].iter().map(|&n| harmonic_residual(&map.sample(n, n)).unwrap()).collect();
    let at_centre = |k: usize| {
        let g = *f[k].grid();
        f[k].at((g.nx - 1) / 2, (g.ny - 1) / 2).to_vec()
    };
    let diffs: Vec<f64> = (0..3)
        .map(|k| {
            let (a, b) = (at_centre(k), at_centre(k + 1));
            a.iter().zip(&b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
        })
        .collect();
    assert!(orders_within(&diffs, 2.0, 2.0, 0.25), "{:?}", observed_orders(&diffs, 2.0));
}

#[test]
fn pullback_diagnostics_scale_with_h_squared() {
    let map = RandomMap::new(&mut rng(5), "su3", false);
    let d: Vec<f64> = [33, 65, 129]
        .iter()
        .map(|&n| maurer_cartan_pullback_with_diagnostics(&map.sample(n, n)).unwrap().1.projection_defect)
        .collect();
    assert!(orders_within(&d, 2.0, 2.0, 0.25), "{d:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conformal_scaling(seed in 0u64..1000, k in 0.5f64..3.0) {
        let map = RandomMap::new(&mut rng(seed), "su2", false).sample(17, 17);
        let scaled = map.with_mu(map.mu().iter().map(|m| m * k).collect()).unwrap();
        let d1 = TensionData::new(&map).unwrap().delta_alpha;
        let dk = TensionData::new(&scaled).unwrap().delta_alpha;
        prop_assert!(dk.max_difference(&d1.scale(k.powi(-2))).unwrap() <= 1e-12 * (1.0 + d1.sup_norm()));
        // The raw left-hand side inherits one factor; the bitension a second one.
        let l1 = biharmonic_residual(&map).unwrap();
        let lk = biharmonic_residual(&scaled).unwrap();
        prop_assert!(lk.max_difference(&l1.scale(k.powi(-2))).unwrap() <= 1e-10 * (1.0 + l1.sup_norm()));
        let b1 = bitension_theta_2d(&map).unwrap();
        let bk = bitension_theta_2d(&scaled).unwrap();
        prop_assert!(bk.max_difference(&b1.scale(k.powi(-4))).unwrap() <= 1e-10 * (1.0 + b1.sup_norm()));
    }

    #[test]
    fn left_translation_invariance(seed in 0u64..1000) {
        // psi and g psi share the same pullback.
        let rm = RandomMap::new(&mut rng(seed), "su2", false);
        let map = rm.sample(17, 17);
        let g = rm.psi(0.3, 0.9).unwrap();
        let shifted = GridMap::new(
            map.basis().clone(),
            *map.grid(),
            map.mu().to_vec(),
            map.psi().iter().map(|p| g.mul(p)).collect(),
        ).unwrap();
        let a = maurer_cartan_pullback(&map).unwrap();
        let b = maurer_cartan_pullback(&shifted).unwrap();
        prop_assert!(a.max_difference(&b).unwrap() < 1e-12);
    }
}
