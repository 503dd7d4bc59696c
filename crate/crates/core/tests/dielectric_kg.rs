use std::f64::consts::PI;

use negmass::dielectric::{epsilon, find_epsilon_zeros, gauss_condition, DrudeParams, GaussBranch, GaussSample};
use negmass::grid::Grid1D;
use negmass::kleingordon::{build_kg_operator, kg_mass_sign_invariance, KGOperatorSpec};
use negmass::operator::spectrum;
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn epsilon_vanishes_at_plasma_frequency() {
    for wp in [0.3, 1.0, 7.5, 1e3] {
        let p = DrudeParams::undamped(wp).unwrap();
        assert!(epsilon(wp, &p).unwrap().norm() <= 1e-14);
    }
}

#[test]
fn undamped_epsilon_is_increasing() {
    let p = DrudeParams::undamped(1.0).unwrap();
    let values: Vec<f64> = (0..1000)
        .map(|i| 0.01 + (10.0 - 0.01) * i as f64 / 999.0)
        .map(|w| epsilon(w, &p).unwrap().re)
        .collect();
    assert!(values.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn kg_plane_wave_eigenvalues() {
    let g = Grid1D::new(2.0 * PI, 64).unwrap();
    let spec = KGOperatorSpec::new(g, 1.3, 0.8, 1.1).unwrap();
    let h = g.spacing();
    let mut want: Vec<f64> = g
        .wavenumbers()
        .iter()
        .map(|k| 2.0 / (h * h) * (1.0 - (k * h).cos()) + spec.mass_term())
        .collect();
    want.sort_by(f64::total_cmp);
    let got = spectrum(&build_kg_operator(&spec)).unwrap();
    let scale = want.last().copied().unwrap();
    for (a, b) in got.iter().zip(&want) {
        assert!((a - b).abs() <= 1e-10 * scale);
    }
}

proptest! {
    #[test]
    fn zero_finder_recovers_analytic_root_set(wp in 0.05f64..50.0, lo in 0.01f64..40.0, width in 0.01f64..40.0) {
        let hi = lo + width;
        let p = DrudeParams::undamped(wp).unwrap();
        let zeros = find_epsilon_zeros(&p, lo, hi).unwrap();
        if lo < wp && wp < hi {
            prop_assert_eq!(zeros.len(), 1);
            prop_assert!((zeros[0] - wp).abs() <= 1e-10 * wp);
        } else {
            prop_assert!(zeros.is_empty());
        }
    }

    #[test]
    fn gauss_branch_mirrors_under_factor_swap(x in -5.0f64..5.0, y in -5.0f64..5.0, zx in any::<bool>(), zy in any::<bool>()) {
        let (a, b) = (if zx { 0.0 } else { x }, if zy { 0.0 } else { y });
        let tol = 1e-9;
        let v = gauss_condition(&GaussSample { div_e: a, epsilon: Complex64::new(b, 0.0) }, tol);
        let w = gauss_condition(&GaussSample { div_e: b, epsilon: Complex64::new(a, 0.0) }, tol);
        let mirrored = match v.branch {
            GaussBranch::DivEZero => GaussBranch::EpsilonZero,
            GaussBranch::EpsilonZero => GaussBranch::DivEZero,
            other => other,
        };
        prop_assert_eq!(w.branch, mirrored);
        prop_assert_eq!(v.satisfied, w.satisfied);
    }

    #[test]
    fn kg_operator_is_even_in_mass(mass in -1e6f64..1e6, half_n in 4usize..40, length in 0.1f64..20.0) {
        let g = Grid1D::new(length, 2 * half_n).unwrap();
        prop_assert!(kg_mass_sign_invariance(g, mass, 1.0, 1.0).unwrap());
    }
}
