//! Drude dielectric function, its zeros, and the Gauss-law product
//! condition `ε(ω)[∇·E] = 0`.
//!
//! The induced polarization is taken as identically zero (linear,
//! homogeneous, isotropic medium), so `∇·D = ε∇·E`.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::grid::FieldConfig;
use crate::roots::bracketed_roots;

/// Polarization field of the medium.
pub const POLARIZATION: f64 = 0.0;

/// Mesh cells used to bracket zeros before bisection.
const ZERO_SEARCH_CELLS: usize = 256;

/// Bisection runs until the bracket is a few ulps wide, well inside the
/// 1e-10 relative accuracy promised for the zeros.
const ZERO_RTOL: f64 = 4.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeParams {
    omega_p: f64,
    gamma: f64,
}

impl DrudeParams {
    pub fn new(omega_p: f64, gamma: f64) -> Result<Self> {
        if !(omega_p.is_finite() && omega_p > 0.0) {
            return domain(format!("plasma frequency must be positive, got {omega_p}"));
        }
        if !(gamma.is_finite() && gamma >= 0.0) {
            return domain(format!("damping must be >= 0, got {gamma}"));
        }
        Ok(Self { omega_p, gamma })
    }

    pub fn undamped(omega_p: f64) -> Result<Self> {
        Self::new(omega_p, 0.0)
    }

    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// `ε(ω) = 1 − ω_p²/(ω² + iγω)`.
pub fn epsilon(omega: f64, p: &DrudeParams) -> Result<Complex64> {
    if !(omega.is_finite() && omega > 0.0) {
        return domain(format!("frequency must be positive, got {omega}"));
    }
    let wp2 = p.omega_p * p.omega_p;
    if p.gamma == 0.0 {
        return Ok(Complex64::new(1.0 - wp2 / (omega * omega), 0.0));
    }
    Ok(Complex64::new(1.0, 0.0) - wp2 / Complex64::new(omega * omega, p.gamma * omega))
}

/// Real zeros of the undamped dielectric function in `(lo, hi)`.
pub fn find_epsilon_zeros(p: &DrudeParams, lo: f64, hi: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
        return domain(format!("invalid frequency interval ({lo}, {hi})"));
    }
    if p.gamma != 0.0 {
        return domain("real-root search requires zero damping");
    }
    let wp2 = p.omega_p * p.omega_p;
    // ω²ε(ω) = ω² − ω_p², same sign as ε on ω > 0 and smooth at small ω
    bracketed_roots(|w| w * w - wp2, lo, hi, ZERO_SEARCH_CELLS, ZERO_RTOL)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussSample {
    pub div_e: f64,
    pub epsilon: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaussBranch {
    DivEZero,
    EpsilonZero,
    Both,
    Neither,
}

impl GaussBranch {
    pub fn name(&self) -> &'static str {
        match self {
            GaussBranch::DivEZero => "div_E_zero",
            GaussBranch::EpsilonZero => "epsilon_zero",
            GaussBranch::Both => "both",
            GaussBranch::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussVerdict {
    pub satisfied: bool,
    pub branch: GaussBranch,
    /// `|ε · ∇·E|`
    pub product: f64,
}

/// Decides which factor of `ε·∇·E` vanishes (each compared against `tol`).
/// The condition is satisfied exactly when at least one factor does.
pub fn gauss_condition(sample: &GaussSample, tol: f64) -> GaussVerdict {
    let div_zero = sample.div_e.abs() <= tol;
    let eps_zero = sample.epsilon.norm() <= tol;
    let branch = match (div_zero, eps_zero) {
        (true, true) => GaussBranch::Both,
        (true, false) => GaussBranch::DivEZero,
        (false, true) => GaussBranch::EpsilonZero,
        (false, false) => GaussBranch::Neither,
    };
    GaussVerdict {
        satisfied: branch != GaussBranch::Neither,
        branch,
        product: (sample.epsilon * sample.div_e).norm(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceRoute {
    /// The scalar potential vanishes on every node.
    pub phi_null: bool,
    /// The dielectric function vanishes at the probe frequency.
    pub epsilon_null: bool,
}

impl EquivalenceRoute {
    /// Either route licenses the mass-flip / charge-flip equivalence.
    pub fn licensed(&self) -> bool {
        self.phi_null || self.epsilon_null
    }
}

pub fn equivalence_route(fields: &FieldConfig, p: &DrudeParams, omega: f64, tol: f64) -> Result<EquivalenceRoute> {
    let eps = epsilon(omega, p)?;
    Ok(EquivalenceRoute {
        phi_null: fields.max_abs_scalar_potential() <= tol,
        epsilon_null: eps.norm() <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Grid1D, Profile};

    fn unit() -> DrudeParams {
        DrudeParams::undamped(1.0).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(DrudeParams::new(0.0, 0.0).is_err());
        assert!(DrudeParams::new(1.0, -0.1).is_err());
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(1.0, &unit()).unwrap(), Complex64::new(0.0, 0.0));
        let e = epsilon(1.0 / 2f64.sqrt(), &unit()).unwrap();
        assert!((e.re + 1.0).abs() < 1e-14 && e.im == 0.0);
        assert!((epsilon(10.0, &unit()).unwrap().re - 0.99).abs() < 1e-15);
        assert!(epsilon(0.0, &unit()).is_err());
        assert!(epsilon(-1.0, &unit()).is_err());
    }

    #[test]
    fn damped_epsilon_has_positive_loss() {
        let p = DrudeParams::new(1.0, 0.1).unwrap();
        let e = epsilon(1.0, &p).unwrap();
        // 1 − 1/(1 + 0.1i)
        let want = Complex64::new(1.0, 0.0) - Complex64::new(1.0, 0.0) / Complex64::new(1.0, 0.1);
        assert!((e - want).norm() < 1e-15);
        assert!(e.im > 0.0);
    }

    #[test]
    fn zeros_examples() {
        let z = find_epsilon_zeros(&unit(), 0.5, 2.0).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] - 1.0).abs() <= 1e-10);
        let far = DrudeParams::undamped(3.0).unwrap();
        assert!(find_epsilon_zeros(&far, 0.5, 2.0).unwrap().is_empty());
        let tight = find_epsilon_zeros(&unit(), 0.9999, 1.0001).unwrap();
        assert_eq!(tight.len(), 1);
        assert!((tight[0] - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn zeros_errors() {
        assert!(find_epsilon_zeros(&unit(), 2.0, 0.5).is_err());
        assert!(find_epsilon_zeros(&unit(), 0.0, 2.0).is_err());
        let damped = DrudeParams::new(1.0, 0.2).unwrap();
        assert!(find_epsilon_zeros(&damped, 0.5, 2.0).is_err());
    }

    #[test]
    fn gauss_truth_table() {
        let s = |div_e: f64, eps: f64| GaussSample { div_e, epsilon: Complex64::new(eps, 0.0) };
        let v = gauss_condition(&s(0.0, 0.7), 1e-12);
        assert!(v.satisfied && v.branch == GaussBranch::DivEZero);
        let v = gauss_condition(&s(2.0, 0.0), 1e-12);
        assert!(v.satisfied && v.branch == GaussBranch::EpsilonZero);
        let v = gauss_condition(&s(0.0, 0.0), 1e-12);
        assert!(v.satisfied && v.branch == GaussBranch::Both);
        let v = gauss_condition(&s(1.0, 1.0), 1e-12);
        assert!(!v.satisfied && v.branch == GaussBranch::Neither);
        assert_eq!(v.branch.name(), "neither");
    }

    #[test]
    fn route_examples() {
        let g = Grid1D::new(1.0, 16).unwrap();
        let zero = FieldConfig::zero(&g);
        let r = equivalence_route(&zero, &unit(), 0.37, 1e-12).unwrap();
        assert!(r.phi_null && r.licensed());

        let charged = FieldConfig::from_profiles(&g, Profile::Zero, Profile::Const(0.5), [0.0; 3]);
        let r = equivalence_route(&charged, &unit(), 1.0, 1e-12).unwrap();
        assert!(!r.phi_null && r.epsilon_null);

        let r = equivalence_route(&charged, &unit(), 2.0, 1e-12).unwrap();
        assert!(!r.phi_null && !r.epsilon_null && !r.licensed());
    }
}
