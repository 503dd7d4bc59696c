//! Pauli spectra against closed-form plane-wave eigenvalues of the
//! periodic difference operators.

use std::f64::consts::PI;

use negmass::grid::{FieldConfig, Grid1D, Profile};
use negmass::operator::{eigenpairs, spectrum};
use negmass::pauli::{
    build_operator, equivalence_report, transform, Branch, HamiltonianSpec, ParticleSpec, SignTransform, Variant,
};
use proptest::prelude::*;

/// Eigenvalues of `(−iħD + eA₀)†(−iħD + eA₀)/2m` for constant `A₀`:
/// `(ħ sin(kh)/h + eA₀)²/2m`, each doubled for spin.
fn plane_wave_oracle(grid: &Grid1D, p: &ParticleSpec, a0: f64) -> Vec<f64> {
    let h = grid.spacing();
    let mut ev: Vec<f64> = grid
        .wavenumbers()
        .iter()
        .flat_map(|k| {
            let m = p.hbar() * (k * h).sin() / h + p.charge() * a0;
            let e = m * m / (2.0 * p.mass());
            [e, e]
        })
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn assert_close_rel(got: &[f64], want: &[f64], rel: f64) {
    assert_eq!(got.len(), want.len());
    let scale = want.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= rel * scale, "got {g}, want {w}");
    }
}

fn grid64() -> Grid1D {
    Grid1D::new(2.0 * PI, 64).unwrap()
}

#[test]
fn free_particle_matches_discrete_dispersion() {
    let g = grid64();
    let p = ParticleSpec::default();
    let spec = HamiltonianSpec::base(g, FieldConfig::zero(&g), p).unwrap();
    let ev = spectrum(&build_operator(&spec).unwrap()).unwrap();
    let oracle = plane_wave_oracle(&g, &p, 0.0);
    assert_close_rel(&ev, &oracle, 1e-10);
    assert!(ev[0].abs() < 1e-12);
    // k = ±1 sits close to the continuum value k²/2
    let h = g.spacing();
    let k1 = h.sin().powi(2) / (h * h) / 2.0;
    assert!((k1 - 0.5).abs() < 2e-3);
    assert_eq!(oracle.iter().filter(|&&e| (e - k1).abs() < 1e-12).count(), 8);
}

#[test]
fn zeeman_splits_by_magneton_times_field() {
    let g = grid64();
    let p = ParticleSpec::default();
    let free = HamiltonianSpec::base(g, FieldConfig::zero(&g), p).unwrap();
    let mut fields = FieldConfig::zero(&g);
    fields.magnetic_field = [0.0, 0.0, 2.0];
    let split = HamiltonianSpec::base(g, fields, p).unwrap();

    let mut want: Vec<f64> = plane_wave_oracle(&g, &p, 0.0)
        .chunks(2)
        .flat_map(|pair| [pair[0] - 1.0, pair[0] + 1.0])
        .collect();
    want.sort_by(f64::total_cmp);
    let got = spectrum(&build_operator(&split).unwrap()).unwrap();
    assert_close_rel(&got, &want, 1e-10);
    let base = spectrum(&build_operator(&free).unwrap()).unwrap();
    assert!((base[0] - got[0] - 1.0).abs() < 1e-10);
}

#[test]
fn residual_contract_on_pauli_operator() {
    let g = Grid1D::new(3.0, 32).unwrap();
    let fields = FieldConfig::from_profiles(&g, Profile::Cos(0.4), Profile::Step(0.3), [0.1, 0.2, 0.5]);
    let spec = HamiltonianSpec::base(g, fields, ParticleSpec::default()).unwrap();
    let op = build_operator(&spec).unwrap();
    // eigenpairs() enforces the contract itself; the call succeeding is the check
    let pairs = eigenpairs(&op).unwrap();
    assert_eq!(pairs.values.len(), 64);
}

#[test]
fn mean_zero_cosine_potential_is_isospectral_under_mass_flip() {
    // Translating by L/2 maps φ → −φ and A = cos → −A; complex conjugation
    // then restores A. The two family members are therefore isospectral even
    // though they are different operators.
    let g = grid64();
    let fields = FieldConfig::from_profiles(&g, Profile::Cos(0.3), Profile::Cos(0.5), [0.0, 0.0, 1.0]);
    let base = HamiltonianSpec::base(g, fields, ParticleSpec::default()).unwrap();
    let a = transform(&base, SignTransform::new(Variant::MassFlip, Branch::Particle));
    let b = transform(&base, SignTransform::new(Variant::ChargeFlip, Branch::Antiparticle));
    let r = equivalence_report(&a, &b, 1e-10).unwrap();
    assert!(r.equivalent, "{r:?}");
    assert!(r.trace_gap < 1e-10);
    assert_ne!(build_operator(&a).unwrap(), build_operator(&b).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gauge_offset_follows_momentum_shift(a0 in -1.5f64..1.5, mass in 0.5f64..2.0, charge in 0.5f64..2.0) {
        let g = Grid1D::new(2.0 * PI, 32).unwrap();
        let p = ParticleSpec::new(mass, charge, 1.0).unwrap();
        let fields = FieldConfig::from_profiles(&g, Profile::Const(a0), Profile::Zero, [0.0; 3]);
        let spec = HamiltonianSpec::base(g, fields, p).unwrap();
        let ev = spectrum(&build_operator(&spec).unwrap()).unwrap();
        let want = plane_wave_oracle(&g, &p, a0);
        let scale = want.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        for (x, y) in ev.iter().zip(&want) {
            prop_assert!((x - y).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn hermitian_for_arbitrary_samples(
        a in prop::collection::vec(-2.0f64..2.0, 16),
        phi in prop::collection::vec(-2.0f64..2.0, 16),
        b in prop::array::uniform3(-2.0f64..2.0),
    ) {
        let g = Grid1D::new(1.7, 16).unwrap();
        let fields = FieldConfig { vector_potential: a, scalar_potential: phi, magnetic_field: b };
        let base = HamiltonianSpec::base(g, fields, ParticleSpec::default()).unwrap();
        for v in [Variant::Base, Variant::ChargeFlip, Variant::TimeReversal, Variant::MassFlip] {
            for br in [Branch::Particle, Branch::Antiparticle] {
                let t = SignTransform::new(v, br);
                let op = build_operator(&transform(&base, t)).unwrap();
                prop_assert!(op.matrix().hermiticity_defect() <= 1e-12);
            }
        }
        for br in [Branch::Particle, Branch::Antiparticle] {
            prop_assert_eq!(
                transform(&base, SignTransform::new(Variant::TimeReversal, br)),
                transform(&base, SignTransform::new(Variant::ChargeFlip, br))
            );
        }
    }

    #[test]
    fn nonzero_potential_sum_forces_an_eigenvalue_gap(
        phi in prop::collection::vec(-1.0f64..1.0, 16),
        offset in 0.2f64..1.0,
    ) {
        let g = Grid1D::new(2.0, 16).unwrap();
        let scalar_potential: Vec<f64> = phi.iter().map(|v| v + offset).collect();
        let sum: f64 = scalar_potential.iter().sum();
        let fields = FieldConfig { vector_potential: vec![0.1; 16], scalar_potential, magnetic_field: [0.0, 0.3, 0.4] };
        let base = HamiltonianSpec::base(g, fields, ParticleSpec::default()).unwrap();
        let a = transform(&base, SignTransform::new(Variant::MassFlip, Branch::Particle));
        let b = transform(&base, SignTransform::new(Variant::ChargeFlip, Branch::Antiparticle));
        let r = equivalence_report(&a, &b, 1e-10).unwrap();
        // Σλ differences equal the trace gap, so some eigenvalue moves by at
        // least the mean of |2eΣφ·2| over 2N levels
        let bound = (2.0 * sum * 2.0).abs() / 32.0;
        prop_assert!(r.max_eigenvalue_gap >= bound * (1.0 - 1e-9));
        prop_assert!(!r.equivalent);
    }
}
