//! Spatial Klein-Gordon operator `−∇² + m²c²/ħ²` on a periodic grid.

use crate::error::{domain, Result};
use crate::grid::Grid1D;
use crate::matrix::ComplexMatrix;
use crate::operator::HermitianOperator;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KGOperatorSpec {
    pub grid: Grid1D,
    /// Signed mass.
    pub mass: f64,
    pub c: f64,
    pub hbar: f64,
}

impl KGOperatorSpec {
    pub fn new(grid: Grid1D, mass: f64, c: f64, hbar: f64) -> Result<Self> {
        if !mass.is_finite() {
            return domain(format!("mass must be finite, got {mass}"));
        }
        for (name, v) in [("c", c), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!("{name} must be finite and positive, got {v}"));
            }
        }
        Ok(Self { grid, mass, c, hbar })
    }

    /// `m²c²/ħ²`; depends on the mass only through its square.
    pub fn mass_term(&self) -> f64 {
        let mc = self.mass * self.c / self.hbar;
        mc * mc
    }
}

/// Three-point periodic Laplacian, negated, plus the mass term on the
/// diagonal.
pub fn build_kg_operator(spec: &KGOperatorSpec) -> HermitianOperator {
    let n = spec.grid.points();
    let h = spec.grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let mut m = ComplexMatrix::zeros(n);
    for j in 0..n {
        m[(j, j)].re = 2.0 * inv_h2 + spec.mass_term();
        m[(j, (j + 1) % n)].re -= inv_h2;
        m[(j, (j + n - 1) % n)].re -= inv_h2;
    }
    HermitianOperator::new(m).expect("real symmetric by construction")
}

/// True iff the operators for `+mass` and `−mass` agree entry by entry.
pub fn kg_mass_sign_invariance(grid: Grid1D, mass: f64, c: f64, hbar: f64) -> Result<bool> {
    let plus = build_kg_operator(&KGOperatorSpec::new(grid, mass, c, hbar)?);
    let minus = build_kg_operator(&KGOperatorSpec::new(grid, -mass, c, hbar)?);
    Ok(plus == minus)
}
