//! Pauli Hamiltonians on a periodic 1D grid and their sign-transformed
//! variants.
//!
//! Every member of the family is
//!
//! ```text
//! ℰ χ = s_E · [ (p + eA)²/2m + s_φ · eφ + (eħ/2m) σ·B ] χ
//! ```
//!
//! with `p = −iħD`, `D` the central difference on the periodic grid, and
//! `(s_E, s_φ)` picked by [`transform`]. The kinetic term is assembled as
//! `M†M/2m` with `M = −iħD + eA`, so it is Hermitian for any sampled `A`.
//! Basis ordering is grid ⊗ spin: index `2j + s`.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::grid::{FieldConfig, Grid1D};
use crate::matrix::ComplexMatrix;
use crate::operator::{spectrum, HermitianOperator};
use crate::spinor::sigma_dot;

/// Tolerance on `‖state‖ − 1` accepted by [`phi_condition_residual`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Mass, charge and ħ magnitudes. Signs are carried by [`HamiltonianSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleSpec {
    mass: f64,
    charge: f64,
    hbar: f64,
}

impl ParticleSpec {
    pub fn new(mass: f64, charge: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("charge", charge), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!("{name} must be finite and positive, got {v}"));
            }
        }
        Ok(Self { mass, charge, hbar })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Spin coupling `eħ/2m` (the magnitude of the Bohr magneton).
    pub fn magneton(&self) -> f64 {
        self.charge * self.hbar / (2.0 * self.mass)
    }
}

impl Default for ParticleSpec {
    fn default() -> Self {
        Self {
            mass: 1.0,
            charge: 1.0,
            hbar: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Base,
    ChargeFlip,
    TimeReversal,
    MassFlip,
}

/// Particle (`+`, positive energy) or antiparticle (`−`) branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Particle,
    Antiparticle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignTransform {
    pub variant: Variant,
    pub branch: Branch,
}

impl SignTransform {
    pub const fn new(variant: Variant, branch: Branch) -> Self {
        Self { variant, branch }
    }

    /// Overall sign and scalar-potential sign of the resulting equation.
    pub fn signs(self) -> (Sign, Sign) {
        use Branch::*;
        use Variant::*;
        match (self.variant, self.branch) {
            // e → −e and t → −t with the Dirac prescription: ℰ₋ = −ℰ₊
            (Base | ChargeFlip | TimeReversal, Particle) => (Sign::Plus, Sign::Minus),
            (Base | ChargeFlip | TimeReversal, Antiparticle) => (Sign::Minus, Sign::Minus),
            // m → −m: ℰ± = ∓[K + eφ + S]
            (MassFlip, Particle) => (Sign::Minus, Sign::Plus),
            (MassFlip, Antiparticle) => (Sign::Plus, Sign::Plus),
        }
    }
}

impl std::str::FromStr for SignTransform {
    type Err = crate::Error;

    /// Parses `base/+`, `charge/-`, `time/+`, `mass/-` and the long variant
    /// names `chargeflip`, `timereversal`, `massflip`.
    fn from_str(s: &str) -> Result<Self> {
        let (v, b) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| crate::Error::Domain(format!("transform `{s}` must be VARIANT/BRANCH")))?;
        let variant = match v.to_ascii_lowercase().as_str() {
            "base" => Variant::Base,
            "charge" | "chargeflip" => Variant::ChargeFlip,
            "time" | "timereversal" => Variant::TimeReversal,
            "mass" | "massflip" => Variant::MassFlip,
            other => return domain(format!("unknown transform variant `{other}`")),
        };
        let branch = match b {
            "+" => Branch::Particle,
            "-" => Branch::Antiparticle,
            other => return domain(format!("branch must be + or -, got `{other}`")),
        };
        Ok(Self { variant, branch })
    }
}

impl std::fmt::Display for SignTransform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = match self.variant {
            Variant::Base => "base",
            Variant::ChargeFlip => "charge",
            Variant::TimeReversal => "time",
            Variant::MassFlip => "mass",
        };
        let b = match self.branch {
            Branch::Particle => "+",
            Branch::Antiparticle => "-",
        };
        write!(f, "{v}/{b}")
    }
}

/// One member of the sign-transformed Pauli family on a concrete grid.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    pub overall_sign: Sign,
    pub potential_sign: Sign,
    pub grid: Grid1D,
    pub fields: FieldConfig,
    pub particle: ParticleSpec,
}

impl HamiltonianSpec {
    /// The untransformed particle equation: overall `+`, potential `−eφ`.
    pub fn base(grid: Grid1D, fields: FieldConfig, particle: ParticleSpec) -> Result<Self> {
        fields.validate(&grid)?;
        Ok(Self {
            overall_sign: Sign::Plus,
            potential_sign: Sign::Minus,
            grid,
            fields,
            particle,
        })
    }
}

/// Returns the family member selected by `t`. Only the grid, fields and
/// particle of `base` are used; its signs are replaced.
pub fn transform(base: &HamiltonianSpec, t: SignTransform) -> HamiltonianSpec {
    let (overall_sign, potential_sign) = t.signs();
    HamiltonianSpec {
        overall_sign,
        potential_sign,
        ..base.clone()
    }
}

/// `M = −iħD + eA` on the periodic grid.
fn covariant_momentum(grid: &Grid1D, a: &[f64], particle: &ParticleSpec) -> ComplexMatrix {
    let n = grid.points();
    let h = grid.spacing();
    // −iħ/(2h) on the superdiagonal, +iħ/(2h) on the subdiagonal
    let hop = Complex64::new(0.0, -particle.hbar() / (2.0 * h));
    let mut m = ComplexMatrix::zeros(n);
    for j in 0..n {
        m[(j, (j + 1) % n)] += hop;
        m[(j, (j + n - 1) % n)] -= hop;
        m[(j, j)] += Complex64::new(particle.charge() * a[j], 0.0);
    }
    m
}

/// Spin-independent kinetic operator `M†M/2m` on the grid (N×N).
pub fn kinetic_operator(grid: &Grid1D, a: &[f64], particle: &ParticleSpec) -> ComplexMatrix {
    let m = covariant_momentum(grid, a, particle);
    (&m.adjoint() * &m).scale_real(1.0 / (2.0 * particle.mass()))
}

/// Assembles the 2N×2N operator for `spec`.
pub fn build_operator(spec: &HamiltonianSpec) -> Result<HermitianOperator> {
    spec.fields.validate(&spec.grid)?;
    let p = &spec.particle;
    let n = spec.grid.points();

    let kinetic = kinetic_operator(&spec.grid, &spec.fields.vector_potential, p);
    let zeeman = sigma_dot(spec.fields.magnetic_field).scale_real(p.magneton());
    let potential_scale = spec.potential_sign.value() * p.charge();

    let mut bracket = kinetic.kron(&ComplexMatrix::identity(2));
    for j in 0..n {
        let v = Complex64::new(potential_scale * spec.fields.scalar_potential[j], 0.0);
        for s in 0..2 {
            bracket[(2 * j + s, 2 * j + s)] += v;
            for t in 0..2 {
                bracket[(2 * j + s, 2 * j + t)] += zeeman[(s, t)];
            }
        }
    }

    let symmetric = HermitianOperator::symmetrized(bracket).into_matrix();
    let signed = match spec.overall_sign {
        Sign::Plus => symmetric,
        Sign::Minus => -&symmetric,
    };
    HermitianOperator::new(signed)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub max_eigenvalue_gap: f64,
    pub trace_gap: f64,
    /// True when the overall signs differed and spectrum B was relabelled
    /// `λ → −λ` (and re-sorted) before comparison.
    pub relabelled: bool,
}

fn relabel_needed(a: &HamiltonianSpec, b: &HamiltonianSpec) -> bool {
    a.overall_sign != b.overall_sign
}

/// Compares the spectra of two family members.
///
/// When the overall signs differ the spectrum of `b` is mapped through
/// `λ → −λ` and reversed (particle/antiparticle relabelling). The trace gap
/// is `|tr A − s·tr B|` with `s = −1` under relabelling, `+1` otherwise;
/// analytically it equals `|s_φ(A) − s_φ(B)| · e · Σᵢ φᵢ · 2` (two spin
/// states per node).
pub fn equivalence_report(
    a: &HamiltonianSpec,
    b: &HamiltonianSpec,
    tol: f64,
) -> Result<EquivalenceReport> {
    if a.grid != b.grid {
        return domain("equivalence report requires identical grids");
    }
    if a.particle != b.particle {
        return domain("equivalence report requires identical particle parameters");
    }
    let op_a = build_operator(a)?;
    let op_b = build_operator(b)?;
    let spec_a = spectrum(&op_a)?;
    let mut spec_b = spectrum(&op_b)?;
    let relabelled = relabel_needed(a, b);
    let s = if relabelled {
        spec_b = spec_b.iter().rev().map(|l| -l).collect();
        -1.0
    } else {
        1.0
    };
    let max_eigenvalue_gap = spec_a
        .iter()
        .zip(&spec_b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let (ma, mb) = (op_a.matrix(), op_b.matrix());
    let trace_gap = (0..op_a.dim())
        .map(|i| ma[(i, i)].re - s * mb[(i, i)].re)
        .sum::<f64>()
        .abs();
    Ok(EquivalenceReport {
        equivalent: max_eigenvalue_gap <= tol,
        max_eigenvalue_gap,
        trace_gap,
        relabelled,
    })
}

/// Closed-form trace gap between two family members sharing fields:
/// `|s_φ(A) − s_φ(B)| · e · 2Σᵢφᵢ`.
pub fn analytic_trace_gap(a: &HamiltonianSpec, b: &HamiltonianSpec) -> f64 {
    let s = if relabel_needed(a, b) { -1.0 } else { 1.0 };
    let sum_phi: f64 = a.fields.scalar_potential.iter().sum();
    let diff = a.overall_sign.value() * a.potential_sign.value()
        - s * b.overall_sign.value() * b.potential_sign.value();
    (diff * a.particle.charge() * 2.0 * sum_phi).abs()
}

/// `‖eφχ‖₂` for a normalized 2N-component state.
pub fn phi_condition_residual(spec: &HamiltonianSpec, state: &[Complex64]) -> Result<f64> {
    let n = spec.grid.points();
    if state.len() != 2 * n {
        return domain(format!("state has {} components, expected {}", state.len(), 2 * n));
    }
    spec.fields.validate(&spec.grid)?;
    let norm = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > NORMALIZATION_TOL {
        return domain(format!("state norm {norm} is not 1"));
    }
    let e = spec.particle.charge();
    Ok(state
        .iter()
        .enumerate()
        .map(|(i, z)| (z * (e * spec.fields.scalar_potential[i / 2])).norm_sqr())
        .sum::<f64>()
        .sqrt())
}
