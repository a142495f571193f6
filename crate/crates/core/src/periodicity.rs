//! Deciding periodicity of the Grover walk.
//!
//! Two independent routes:
//!
//! * **unitary** – minimal polynomial of the arc-indexed transfer matrix `U`.
//!   `U` is real orthogonal, hence diagonalizable, so the walk is periodic
//!   iff that minimal polynomial is a squarefree product of cyclotomic
//!   polynomials; the period is the lcm of their indices.
//! * **spectral** – minimal polynomial of the vertex transition matrix `T`,
//!   pushed through the Zhukovskij substitution. Every eigenvalue `λ` of `T`
//!   contributes `e^{±i arccos λ}` to the spectrum of `U`; the remaining
//!   eigenvalues of `U` are `1` (with multiplicity `b₁`) and `-1` (with
//!   multiplicity `b₁ - 1 + [bipartite]`), where `b₁` is the cycle rank.

use num_traits::Zero;
use std::fmt;

use crate::algebra::cyclotomic::cyclotomic_part;
use crate::drg::{alpha_coefficients, first_non_integral, CoefficientReport};
use crate::graphs::{
    diameter, grover_operator, transition_matrix, Graph, GraphError, Limits,
};
use crate::spectra::{characteristic_polynomial, minimal_polynomial, minimal_polynomial_sparse, poly_from_roots, rational_roots, RationalSpectrum};
use crate::{try_to_int_poly, zhukovskij, CyclotomicCertificate, Matrix, RatPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Unitary,
    Spectral,
    Quotient,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Unitary => "unitary",
            Route::Spectral => "spectral",
            Route::Quotient => "quotient",
        })
    }
}

/// Decision with its evidence.
///
/// `periodic`, `period` and `certificate` are either all set or all unset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityVerdict {
    pub periodic: bool,
    pub period: Option<u64>,
    pub certificate: Option<CyclotomicCertificate>,
    pub route: Route,
    pub failure_witness: Option<String>,
    /// The polynomial handed to the cyclotomic recognizer: the minimal
    /// polynomial of `U` on the unitary route, `Ψ` otherwise.
    pub tested_polynomial: RatPoly,
}

/// Whether the cycle space contributes eigenvalue `-1` to `U`:
/// `b₁ - 1 + [bipartite] > 0` with `b₁ = |E| - |V| + 1`.
pub fn minus_one_from_cycles(vertices: u128, edges: u128, bipartite: bool) -> bool {
    edges + 1 + bipartite as u128 > vertices + 1
}

/// Shared tail of every route: integrality, cyclotomic recognition and period.
pub(crate) fn verdict_from_polynomial(
    route: Route,
    poly: RatPoly,
    extra_minus_one: bool,
    require_squarefree: bool,
) -> PeriodicityVerdict {
    let fail = |witness: String, poly: RatPoly| PeriodicityVerdict {
        periodic: false,
        period: None,
        certificate: None,
        route,
        failure_witness: Some(witness),
        tested_polynomial: poly,
    };
    let Some(int_poly) = try_to_int_poly(&poly) else {
        let (i, c) = poly
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_integer())
            .unwrap();
        return fail(format!("coefficient of z^{i} is {c}, not an integer"), poly);
    };
    let (factors, residual) = cyclotomic_part(&int_poly).expect("tested polynomials are monic");
    if residual.degree() != Some(0) {
        return fail(format!("non-cyclotomic residual factor {}", residual.display_with("z")), poly);
    }
    let cert = CyclotomicCertificate::new(factors);
    if require_squarefree && !cert.is_squarefree() {
        return fail(format!("repeated cyclotomic factor in {:?}", cert.factors), poly);
    }
    let mut period = cert.period;
    if extra_minus_one && period % 2 == 1 {
        period *= 2;
    }
    PeriodicityVerdict {
        periodic: true,
        period: Some(period),
        certificate: Some(cert),
        route,
        failure_witness: None,
        tested_polynomial: poly,
    }
}

/// Ground-truth decision from the minimal polynomial of `U`.
pub fn is_periodic_unitary(g: &Graph, limits: &Limits) -> Result<PeriodicityVerdict, GraphError> {
    limits.check(g)?;
    let mp = minimal_polynomial_sparse(&grover_operator(g));
    Ok(verdict_from_polynomial(Route::Unitary, mp.monic, false, true))
}

fn graph_minus_one(g: &Graph) -> bool {
    minus_one_from_cycles(g.vertex_count() as u128, g.edge_count() as u128, g.is_bipartite())
}

/// Decision from the minimal polynomial of `T` via the Zhukovskij substitution.
pub fn is_periodic_spectral(g: &Graph) -> PeriodicityVerdict {
    let mp = minimal_polynomial(&transition_matrix(g));
    verdict_from_polynomial(Route::Spectral, zhukovskij(&mp.monic), graph_minus_one(g), false)
}

/// Spectral route from an explicitly known set of distinct eigenvalues of `T`.
pub fn spectral_verdict_from_eigenvalues(distinct: &[Rational], extra_minus_one: bool) -> PeriodicityVerdict {
    let minpoly = poly_from_roots(distinct);
    verdict_from_polynomial(Route::Spectral, zhukovskij(&minpoly), extra_minus_one, false)
}

/// The eigenvalues a periodic graph with rational transition spectrum may have.
pub fn allowed_rational_eigenvalues() -> [Rational; 5] {
    let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
    [q(-1, 1), q(-1, 2), q(0, 1), q(1, 2), q(1, 1)]
}

/// Rational-spectrum consequences of periodicity for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectrumReport {
    /// Rational roots of `det(xI - T)` with multiplicity.
    pub spectrum: RationalSpectrum,
    pub periodic: bool,
    pub diameter: usize,
    pub distinct_eigenvalue_count: usize,
    /// The checks apply only to periodic graphs whose spectrum is rational.
    pub applicable: bool,
    pub eigenvalues_allowed: Option<bool>,
    pub at_most_five_distinct: Option<bool>,
    pub diameter_below_five: Option<bool>,
}

impl RationalSpectrumReport {
    /// No applicable check failed.
    pub fn holds(&self) -> bool {
        [self.eigenvalues_allowed, self.at_most_five_distinct, self.diameter_below_five]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

pub fn rational_spectrum_check(g: &Graph) -> RationalSpectrumReport {
    let t = transition_matrix(g);
    let spectrum = rational_roots(&characteristic_polynomial(&t));
    let periodic = is_periodic_spectral(g).periodic;
    let diam = diameter(g);
    let distinct = minimal_polynomial(&t).distinct_eigenvalue_count;
    let applicable = spectrum.complete && periodic;
    let allowed = allowed_rational_eigenvalues();
    let check = |b: bool| applicable.then_some(b);
    RationalSpectrumReport {
        eigenvalues_allowed: check(spectrum.roots.iter().all(|(r, _)| allowed.contains(r))),
        at_most_five_distinct: check(distinct <= 5),
        diameter_below_five: check(diam < 5),
        spectrum,
        periodic,
        diameter: diam,
        distinct_eigenvalue_count: distinct,
        applicable,
    }
}

/// Power-of-two integrality of the full characteristic polynomial of `T`:
/// `2^j ρ_{n-j} ∈ Z` for every `0 <= j <= n`. A failure rules out periodicity.
pub fn general_coefficient_filter(g: &Graph) -> CoefficientReport {
    let rho = characteristic_polynomial(&transition_matrix(g)).into_coeffs();
    let n = rho.len() - 1;
    let alpha = alpha_coefficients(&rho);
    let failing_j = first_non_integral(&rho, 0..=n);
    CoefficientReport { rho, alpha, passed: failing_j.is_none(), failing_j }
}

/// Smallest `j` in `1..=max_power` with `U^j = I`, by repeated exact
/// multiplication.
pub fn least_identity_power(g: &Graph, max_power: u64) -> Option<u64> {
    let u = grover_operator(g);
    let mut acc = Matrix::identity(u.rows());
    for j in 1..=max_power {
        acc = u.mul_dense(&acc);
        if acc.is_identity() {
            return Some(j);
        }
    }
    None
}

/// `true` when `T` has eigenvalue zero; kept for report rendering.
pub fn has_zero_eigenvalue(g: &Graph) -> bool {
    characteristic_polynomial(&transition_matrix(g)).coeff(0).is_zero()
}
