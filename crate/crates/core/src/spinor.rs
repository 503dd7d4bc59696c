//! Pauli and Dirac matrices in the standard (Dirac) representation.
//!
//! `α₄ = diag(I₂, −I₂)`, `αᵢ = offdiag(σᵢ, σᵢ)`, `γ⁰ = α₄`, `γⁱ = γ⁰αᵢ`.
//! Every entry is one of {0, ±1, ±i}, so all identities below are checked
//! with exact equality.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::matrix::ComplexMatrix;

const O: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Pauli matrix σ₁, σ₂ or σ₃.
pub fn pauli(axis: usize) -> Result<ComplexMatrix> {
    let entries = match axis {
        1 => vec![O, ONE, ONE, O],
        2 => vec![O, -I, I, O],
        3 => vec![ONE, O, O, -ONE],
        _ => return domain(format!("Pauli axis {axis} outside 1..=3")),
    };
    ComplexMatrix::from_rows(entries)
}

/// `σ·v` for a real 3-vector.
pub fn sigma_dot(v: [f64; 3]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(2);
    for (axis, &component) in (1..=3).zip(v.iter()) {
        if component != 0.0 {
            let s = pauli(axis).expect("axis in range").scale_real(component);
            out = &out + &s;
        }
    }
    out
}

/// Dirac alpha matrix; indices 1..=3 are the spatial `αᵢ`, index 4 is `α₄`.
pub fn alpha(index: usize) -> Result<ComplexMatrix> {
    match index {
        1..=3 => {
            let offdiag = ComplexMatrix::from_rows(vec![O, ONE, ONE, O]).expect("2x2");
            Ok(offdiag.kron(&pauli(index)?))
        }
        4 => Ok(pauli(3)?.kron(&ComplexMatrix::identity(2))),
        _ => domain(format!("alpha index {index} outside 1..=4")),
    }
}

/// Dirac gamma matrix γ^μ for μ in 0..=3.
pub fn gamma(mu: usize) -> Result<ComplexMatrix> {
    let g0 = alpha(4)?;
    match mu {
        0 => Ok(g0),
        1..=3 => Ok(&g0 * &alpha(mu)?),
        _ => domain(format!("gamma index {mu} outside 0..=3")),
    }
}

/// `{a, b} = ab + ba`.
pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.try_mul(b)?.try_add(&b.try_mul(a)?)
}

/// `[a, b] = ab − ba`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

/// Minkowski metric η^{μν} with signature (+,−,−,−).
pub fn metric(mu: usize, nu: usize) -> f64 {
    match (mu, nu) {
        (0, 0) => 1.0,
        (m, n) if m == n => -1.0,
        _ => 0.0,
    }
}

/// A set of Dirac matrices to be checked against the Clifford relations.
#[derive(Debug, Clone)]
pub struct DiracRepresentation {
    /// `α₁, α₂, α₃, α₄`
    pub alphas: [ComplexMatrix; 4],
}

impl DiracRepresentation {
    pub fn standard() -> Self {
        Self {
            alphas: [1, 2, 3, 4].map(|i| alpha(i).expect("index in range")),
        }
    }

    pub fn alpha(&self, index: usize) -> &ComplexMatrix {
        &self.alphas[index - 1]
    }

    pub fn gamma(&self, mu: usize) -> ComplexMatrix {
        let g0 = self.alpha(4);
        if mu == 0 {
            g0.clone()
        } else {
            g0 * self.alpha(mu)
        }
    }
}

/// Outcome of one algebraic identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// Largest entrywise deviation from the expected matrix (zero when exact).
    pub deviation: f64,
}

fn check(name: String, got: ComplexMatrix, expected: ComplexMatrix) -> IdentityCheck {
    let deviation = got.max_abs_diff(&expected).unwrap_or(f64::INFINITY);
    IdentityCheck {
        name,
        passed: got == expected,
        deviation,
    }
}

/// Runs every Clifford relation for the given representation:
///
/// - `{αᵢ, αⱼ} = 2δᵢⱼ𝓘` for 1 ≤ i ≤ j ≤ 3 (6 rows),
/// - `α₄² = 𝓘` and `{α₄, αᵢ} = 0` (4 rows),
/// - `{γ^μ, γ^ν} = 2η^{μν}𝓘` for 0 ≤ μ ≤ ν ≤ 3 (10 rows).
pub fn clifford_identities(rep: &DiracRepresentation) -> Vec<IdentityCheck> {
    let id = ComplexMatrix::identity(4);
    let zero = ComplexMatrix::zeros(4);
    let mut rows = Vec::with_capacity(20);

    for i in 1..=3 {
        for j in i..=3 {
            let expected = if i == j { id.scale_real(2.0) } else { zero.clone() };
            let got = anticommutator(rep.alpha(i), rep.alpha(j)).expect("4x4");
            let rhs = if i == j { "2I" } else { "0" };
            rows.push(check(format!("{{alpha{i} alpha{j}}} = {rhs}"), got, expected));
        }
    }

    rows.push(check(
        "alpha4^2 = I".to_string(),
        rep.alpha(4) * rep.alpha(4),
        id.clone(),
    ));
    for i in 1..=3 {
        let got = anticommutator(rep.alpha(4), rep.alpha(i)).expect("4x4");
        rows.push(check(format!("{{alpha4 alpha{i}}} = 0"), got, zero.clone()));
    }

    let gammas: Vec<ComplexMatrix> = (0..4).map(|mu| rep.gamma(mu)).collect();
    for mu in 0..4 {
        for nu in mu..4 {
            let eta = metric(mu, nu);
            let got = anticommutator(&gammas[mu], &gammas[nu]).expect("4x4");
            let rhs = match eta {
                e if e > 0.0 => "2I",
                e if e < 0.0 => "-2I",
                _ => "0",
            };
            rows.push(check(
                format!("{{gamma{mu} gamma{nu}}} = {rhs}"),
                got,
                id.scale_real(2.0 * eta),
            ));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_z_is_diagonal() {
        assert_eq!(
            pauli(3).unwrap(),
            ComplexMatrix::from_diagonal(&[ONE, -ONE])
        );
    }

    #[test]
    fn pauli_squares_to_identity() {
        for axis in 1..=3 {
            let s = pauli(axis).unwrap();
            assert_eq!(&s * &s, ComplexMatrix::identity(2));
        }
    }

    #[test]
    fn su2_commutator() {
        let comm = commutator(&pauli(1).unwrap(), &pauli(2).unwrap()).unwrap();
        assert_eq!(comm, pauli(3).unwrap().scale(Complex64::new(0.0, 2.0)));
    }

    #[test]
    fn pauli_matrices_are_hermitian_unitary_traceless() {
        for axis in 1..=3 {
            let s = pauli(axis).unwrap();
            assert!(s.is_hermitian());
            assert_eq!(&s.adjoint() * &s, ComplexMatrix::identity(2));
            assert_eq!(s.trace(), O);
            assert_eq!(s.determinant(), -ONE);
        }
    }

    #[test]
    fn distinct_pauli_matrices_anticommute() {
        let a = anticommutator(&pauli(1).unwrap(), &pauli(2).unwrap()).unwrap();
        assert!(a.is_zero());
        let id = ComplexMatrix::identity(2);
        assert_eq!(anticommutator(&id, &id).unwrap(), id.scale_real(2.0));
    }

    #[test]
    fn index_out_of_range() {
        assert!(pauli(0).is_err());
        assert!(pauli(4).is_err());
        assert!(alpha(0).is_err());
        assert!(alpha(5).is_err());
        assert!(gamma(4).is_err());
    }

    #[test]
    fn alpha_relations() {
        let a4 = alpha(4).unwrap();
        let a1 = alpha(1).unwrap();
        assert!(anticommutator(&a4, &a1).unwrap().is_zero());
        assert_eq!(
            anticommutator(&a1, &a1).unwrap(),
            ComplexMatrix::identity(4).scale_real(2.0)
        );
        assert_eq!(&a4 * &a4, ComplexMatrix::identity(4));
        assert!(anticommutator(&alpha(2).unwrap(), &alpha(3).unwrap())
            .unwrap()
            .is_zero());
        for i in 1..=4 {
            assert!(alpha(i).unwrap().is_hermitian());
        }
    }

    #[test]
    fn gamma_metric() {
        let id = ComplexMatrix::identity(4);
        let g = |mu| gamma(mu).unwrap();
        assert_eq!(anticommutator(&g(0), &g(0)).unwrap(), id.scale_real(2.0));
        assert_eq!(anticommutator(&g(1), &g(1)).unwrap(), id.scale_real(-2.0));
        assert!(anticommutator(&g(0), &g(2)).unwrap().is_zero());
    }

    #[test]
    fn anticommutator_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(4);
        assert!(anticommutator(&a, &b).is_err());
    }

    #[test]
    fn standard_representation_passes_every_identity() {
        let rows = clifford_identities(&DiracRepresentation::standard());
        assert_eq!(rows.len(), 20);
        assert!(rows.iter().all(|r| r.passed && r.deviation == 0.0));
        assert!(rows.iter().all(|r| !r.name.contains(',')));
        assert_eq!(rows[19].name, "{gamma3 gamma3} = -2I");
    }

    #[test]
    fn corrupted_representation_fails() {
        let mut rep = DiracRepresentation::standard();
        rep.alphas[0][(0, 3)] = Complex64::new(2.0, 0.0);
        let rows = clifford_identities(&rep);
        assert!(rows.iter().any(|r| !r.passed));
    }

    #[test]
    fn sigma_dot_eigen_structure() {
        // (σ·B)² = |B|² I
        let s = sigma_dot([0.3, -1.2, 2.0]);
        let sq = &s * &s;
        let n2 = 0.09 + 1.44 + 4.0;
        assert!(sq.max_abs_diff(&ComplexMatrix::identity(2).scale_real(n2)).unwrap() < 1e-14);
    }
}
