//! Periodic 1D grids and the static field samples that live on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Uniform periodic grid with `points` nodes at `x_j = j·h`, `h = length/points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    length: f64,
    points: usize,
}

impl Grid1D {
    pub const MIN_POINTS: usize = 8;

    pub fn new(length: f64, points: usize) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return domain(format!("grid length must be finite and positive, got {length}"));
        }
        if points < Self::MIN_POINTS {
            return domain(format!(
                "grid needs at least {} points, got {points}",
                Self::MIN_POINTS
            ));
        }
        if !points.is_multiple_of(2) {
            return domain(format!("grid point count must be even, got {points}"));
        }
        Ok(Self { length, points })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.points as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        j as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(|j| self.node(j))
    }

    /// Discrete wavenumbers `2πn/L` for `n = −N/2 .. N/2 − 1`.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let n = self.points as i64;
        (-n / 2..n / 2)
            .map(|m| 2.0 * std::f64::consts::PI * m as f64 / self.length)
            .collect()
    }
}

/// Static external fields sampled on a grid: the vector-potential component
/// along the grid axis, the scalar potential, and a uniform magnetic field.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldConfig {
    pub vector_potential: Vec<f64>,
    pub scalar_potential: Vec<f64>,
    pub magnetic_field: [f64; 3],
}

impl FieldConfig {
    pub fn zero(grid: &Grid1D) -> Self {
        Self {
            vector_potential: vec![0.0; grid.points()],
            scalar_potential: vec![0.0; grid.points()],
            magnetic_field: [0.0; 3],
        }
    }

    pub fn from_profiles(grid: &Grid1D, a: Profile, phi: Profile, b: [f64; 3]) -> Self {
        Self {
            vector_potential: a.sample(grid),
            scalar_potential: phi.sample(grid),
            magnetic_field: b,
        }
    }

    pub fn validate(&self, grid: &Grid1D) -> Result<()> {
        let n = grid.points();
        if self.vector_potential.len() != n || self.scalar_potential.len() != n {
            return domain(format!(
                "field samples (A: {}, phi: {}) do not match {n} grid points",
                self.vector_potential.len(),
                self.scalar_potential.len()
            ));
        }
        let finite = self
            .vector_potential
            .iter()
            .chain(&self.scalar_potential)
            .chain(&self.magnetic_field)
            .all(|v| v.is_finite());
        if !finite {
            return domain("field samples must be finite");
        }
        Ok(())
    }

    pub fn max_abs_scalar_potential(&self) -> f64 {
        self.scalar_potential.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Analytic field profile on a periodic grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Profile {
    Zero,
    Const(f64),
    /// `v` on the left half `x < L/2`, zero on the right half.
    Step(f64),
    /// `v·cos(2πx/L)`
    Cos(f64),
}

impl Profile {
    pub fn sample(&self, grid: &Grid1D) -> Vec<f64> {
        let l = grid.length();
        let half = grid.points() / 2;
        (0..grid.points())
            .map(|j| match *self {
                Profile::Zero => 0.0,
                Profile::Const(v) => v,
                Profile::Step(v) => {
                    if j < half {
                        v
                    } else {
                        0.0
                    }
                }
                Profile::Cos(v) => v * (2.0 * std::f64::consts::PI * grid.node(j) / l).cos(),
            })
            .collect()
    }

    /// True when the profile vanishes identically.
    pub fn is_zero(&self) -> bool {
        match *self {
            Profile::Zero => true,
            Profile::Const(v) | Profile::Step(v) | Profile::Cos(v) => v == 0.0,
        }
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "zero" {
            return Ok(Profile::Zero);
        }
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| Error::Domain(format!("unrecognised profile `{s}`")))?;
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad profile amplitude `{value}`")))?;
        if !v.is_finite() {
            return domain(format!("profile amplitude must be finite, got `{value}`"));
        }
        match kind.trim() {
            "const" => Ok(Profile::Const(v)),
            "step" => Ok(Profile::Step(v)),
            "cos" => Ok(Profile::Cos(v)),
            other => domain(format!("unknown profile kind `{other}`")),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::Zero => write!(f, "zero"),
            Profile::Const(v) => write!(f, "const:{v}"),
            Profile::Step(v) => write!(f, "step:{v}"),
            Profile::Cos(v) => write!(f, "cos:{v}"),
        }
    }
}
