//! Relativistic matter-wave dispersion for real and imaginary wavenumbers.
//!
//! For a real wavenumber the positive root `ω = (m₀c²/ħ)√(1 + (ħk/m₀c)²)` is
//! used. For `k = iδ` the radicand becomes `1 − (ħδ/m₀c)²`:
//!
//! - `δ < m₀c/ħ`: `ω = −(m₀c²/ħ)√(1 − x²)`, negative real (evanescent),
//! - `δ > m₀c/ħ`: `ω = −i(m₀c²/ħ)√(x² − 1)`, negative imaginary (absorbing),
//!
//! with `x = ħδ/m₀c`. Group velocity is `dω/dk` with `dk = i dδ`.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Relative half-width of the band around `δ = m₀c/ħ` treated as the branch
/// point.
pub const BOUNDARY_EPS: f64 = 1e-12;

/// Base step of the second-difference stencil, in units of `m₀c/ħ`.
pub const CURVATURE_STEP: f64 = 1e-4;

/// Second derivatives below this (in units of `ħ/m₀`) are reported as zero.
pub const CURVATURE_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    m0: f64,
    c: f64,
    hbar: f64,
}

impl Units {
    pub fn new(m0: f64, c: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("m0", m0), ("c", c), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!("{name} must be finite and positive, got {v}"));
            }
        }
        let u = Self { m0, c, hbar };
        let k = u.compton_wavenumber();
        if !(k.is_finite() && k > 0.0) {
            return domain(format!("Compton wavenumber m0*c/hbar = {k} is not usable"));
        }
        Ok(u)
    }

    pub fn natural() -> Self {
        Self { m0: 1.0, c: 1.0, hbar: 1.0 }
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `m₀c/ħ`, the position of the branch point on the δ axis.
    pub fn compton_wavenumber(&self) -> f64 {
        self.m0 * self.c / self.hbar
    }

    /// `m₀c²/ħ`
    pub fn rest_frequency(&self) -> f64 {
        self.m0 * self.c * self.c / self.hbar
    }
}

impl Default for Units {
    fn default() -> Self {
        Self::natural()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WaveNumber {
    /// Propagating wave, `k` real.
    Real(f64),
    /// Evanescent ansatz `k = iδ` with decay constant `δ ≥ 0`.
    Imaginary(f64),
}

impl WaveNumber {
    pub fn imaginary(delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta >= 0.0) {
            return domain(format!("decay constant must be finite and >= 0, got {delta}"));
        }
        Ok(Self::Imaginary(delta))
    }

    pub fn magnitude(&self) -> f64 {
        match *self {
            WaveNumber::Real(k) => k,
            WaveNumber::Imaginary(d) => d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    PositiveRealPropagating,
    NegativeRealEvanescent,
    NegativeImaginaryAbsorbing,
    BoundaryZero,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::PositiveRealPropagating => "PositiveRealPropagating",
            Regime::NegativeRealEvanescent => "NegativeRealEvanescent",
            Regime::NegativeImaginaryAbsorbing => "NegativeImaginaryAbsorbing",
            Regime::BoundaryZero => "BoundaryZero",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn clean(z: Complex64) -> Complex64 {
    // drop the sign of zero so tabulated output is stable
    Complex64::new(z.re + 0.0, z.im + 0.0)
}

/// Regime of a wavenumber. This is the single place where the branch is
/// chosen; [`omega`] and [`group_velocity`] follow it.
pub fn classify(wn: &WaveNumber, u: &Units) -> Regime {
    match *wn {
        WaveNumber::Real(_) => Regime::PositiveRealPropagating,
        WaveNumber::Imaginary(delta) => {
            let kc = u.compton_wavenumber();
            let d = delta.abs();
            if d < kc * (1.0 - BOUNDARY_EPS) {
                Regime::NegativeRealEvanescent
            } else if d > kc * (1.0 + BOUNDARY_EPS) {
                Regime::NegativeImaginaryAbsorbing
            } else {
                Regime::BoundaryZero
            }
        }
    }
}

/// Angular frequency on the branch chosen by [`classify`].
pub fn omega(wn: &WaveNumber, u: &Units) -> Complex64 {
    let w0 = u.rest_frequency();
    let x = wn.magnitude() / u.compton_wavenumber();
    let value = match (wn, classify(wn, u)) {
        (WaveNumber::Real(_), _) => Complex64::new(w0 * (1.0 + x * x).sqrt(), 0.0),
        (_, Regime::NegativeImaginaryAbsorbing) => Complex64::new(0.0, -w0 * (x * x - 1.0).sqrt()),
        // evanescent, and the boundary band where the radicand changes sign
        _ => {
            let r = 1.0 - x * x;
            if r >= 0.0 {
                Complex64::new(-w0 * r.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, -w0 * (-r).sqrt())
            }
        }
    };
    clean(value)
}

/// `(mc²/ħ)√(1 + (ħk/mc)²)` evaluated literally for a complex wavenumber
/// and a signed mass, with the principal complex square root.
pub fn signed_mass_omega(k: Complex64, mass: f64, c: f64, hbar: f64) -> Complex64 {
    let ratio = k * (hbar / (mass * c));
    (Complex64::new(1.0, 0.0) + ratio * ratio).sqrt() * (mass * c * c / hbar)
}

/// Group velocity `dω/dk`. Along the imaginary axis this is `(dω/dδ)/i`.
pub fn group_velocity(wn: &WaveNumber, u: &Units) -> Result<Complex64> {
    let c = u.c();
    let x = wn.magnitude() / u.compton_wavenumber();
    let v = match (wn, classify(wn, u)) {
        (WaveNumber::Real(_), _) => Complex64::new(c * x / (1.0 + x * x).sqrt(), 0.0),
        (_, Regime::NegativeRealEvanescent) => {
            // dω/dδ = c·x/√(1−x²), divided by i
            Complex64::new(0.0, -c * x / (1.0 - x * x).sqrt())
        }
        (_, Regime::NegativeImaginaryAbsorbing) => {
            // dω/dδ = −i·c·x/√(x²−1), divided by i
            Complex64::new(-c * x / (x * x - 1.0).sqrt(), 0.0)
        }
        _ => {
            return Err(Error::Singularity {
                what: "group velocity diverges at the Compton boundary".into(),
                at: wn.magnitude(),
            })
        }
    };
    Ok(clean(v))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature {
    /// Numerical `d²ω/dδ²`.
    pub value: f64,
    /// −1, 0 or +1.
    pub sign: i8,
}

/// Second δ-derivative of the real evanescent branch ω(iδ).
///
/// Central second differences at steps `h` and `h/2` combined by one
/// Richardson step, `h = CURVATURE_STEP · m₀c/ħ`; the step shrinks when the
/// stencil would reach the branch point.
pub fn curvature(wn: &WaveNumber, u: &Units) -> Result<Curvature> {
    let delta = match *wn {
        WaveNumber::Imaginary(d) => d,
        WaveNumber::Real(_) => return domain("curvature is evaluated along the imaginary axis only"),
    };
    match classify(wn, u) {
        Regime::NegativeRealEvanescent => {}
        Regime::BoundaryZero => {
            return Err(Error::Singularity {
                what: "second derivative diverges at the Compton boundary".into(),
                at: delta,
            })
        }
        _ => return domain("curvature sign is defined on the real evanescent branch only"),
    }
    let kc = u.compton_wavenumber();
    let d = delta.abs();
    let h = (CURVATURE_STEP * kc).min((kc - d) / 4.0);
    let f = |s: f64| omega(&WaveNumber::Imaginary(s), u).re;
    let second = |h: f64| (f(d + h) - 2.0 * f(d) + f(d - h)) / (h * h);
    let value = (4.0 * second(h / 2.0) - second(h)) / 3.0;
    let scale = u.hbar() / u.m0();
    let sign = if value.abs() <= CURVATURE_THRESHOLD * scale {
        0
    } else if value > 0.0 {
        1
    } else {
        -1
    };
    Ok(Curvature { value, sign })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionPoint {
    pub wavenumber: WaveNumber,
    pub omega: Complex64,
    /// `None` inside the boundary band, where the derivative diverges.
    pub group_velocity: Option<Complex64>,
    pub regime: Regime,
    /// `None` off the real evanescent branch.
    pub curvature_sign: Option<i8>,
}

impl DispersionPoint {
    pub fn at(wn: WaveNumber, u: &Units) -> Self {
        let regime = classify(&wn, u);
        let curvature_sign = match (wn, regime) {
            (WaveNumber::Imaginary(_), Regime::NegativeRealEvanescent) => {
                curvature(&wn, u).ok().map(|c| c.sign)
            }
            _ => None,
        };
        Self {
            wavenumber: wn,
            omega: omega(&wn, u),
            group_velocity: group_velocity(&wn, u).ok(),
            regime,
            curvature_sign,
        }
    }

    pub fn delta(&self) -> f64 {
        self.wavenumber.magnitude()
    }
}

/// Tabulates `steps` uniformly spaced decay constants from `delta_min` to
/// `delta_max` inclusive. A single point requires `delta_min == delta_max`.
pub fn scan(delta_min: f64, delta_max: f64, steps: usize, u: &Units) -> Result<Vec<DispersionPoint>> {
    if !(delta_min.is_finite() && delta_max.is_finite()) || delta_min < 0.0 {
        return domain(format!("invalid decay range [{delta_min}, {delta_max}]"));
    }
    let ok = match steps {
        0 => false,
        1 => delta_min == delta_max,
        _ => delta_min < delta_max,
    };
    if !ok {
        return domain(format!(
            "invalid scan: {steps} steps over [{delta_min}, {delta_max}]"
        ));
    }
    let span = delta_max - delta_min;
    Ok((0..steps)
        .map(|i| {
            let delta = if i + 1 == steps {
                delta_max
            } else {
                delta_min + span * i as f64 / (steps - 1) as f64
            };
            DispersionPoint::at(WaveNumber::Imaginary(delta), u)
        })
        .collect())
}
