#pragma once

#include <hardy/lft.hpp>
#include <hardy/operators.hpp>
#include <hardy/series.hpp>

#include <cstdint>
#include <random>
#include <string_view>

namespace hardy {

/// Symbols of W_{f,phi} complex symmetric with respect to J:
/// f = b / (1 - a0 z), phi = a0 + a1 z / (1 - a0 z).
///
/// Throws DegenerateError for b = 0, HypothesisError for a1 = 1 (the identity
/// direction excluded from commutant analysis) and NotSelfMap when the Jung
/// self-map criterion fails.
WcoSymbols jung_symbols(Complex a0, Complex a1, Complex b);

/// Hermitian-form symbols f = c / (1 - conj(a0) z), phi = a0 + a1 z / (1 - conj(a0) z).
/// No reality is enforced here, so the result can be fed to
/// hermitian_symbol_check as a negative control.
WcoSymbols hermitian_form_symbols(Complex a0, Complex a1, Complex c);

/// Interior fixed point of the Jung map phi(a0, a1), a root of
/// a0 z^2 - (1 + a0^2 - a1) z + a0 = 0.
///
/// The two roots multiply to 1, so at most one lies in the disc. Throws
/// EllipticAutomorphism when phi is an elliptic automorphism and
/// NoInteriorFixedPoint when neither root is interior.
Complex fixed_point_lambda(Complex a0, Complex a1);

/// Free parameters of the commutant family and the derived coefficients
///     d0 = d1 = lambda (alpha - 1) / (lambda^2 alpha - 1)
///     d2 = alpha (lambda^2 - 1)^2 / (lambda^2 alpha - 1)^2
///     d3 = (lambda^2 - 1) / (lambda^2 alpha - 1)
struct CommutantParams {
    Complex lambda;
    Complex alpha;
    Complex g_at_lambda;
    Complex d0, d1, d2, d3;
};

/// Throws DomainError for |lambda| >= 1 and DegenerateError when
/// lambda^2 alpha = 1.
CommutantParams make_commutant_params(Complex lambda, Complex alpha, Complex g_at_lambda = 1.0);

/// A weight/map pair that need not define a bounded operator. The rational
/// identities of the commutant hold regardless; operator-level use goes
/// through wco(), which is gated on the self-map flag.
struct SymbolPair {
    GeometricWeight weight;
    SelfMap map;
    SelfMapVerdict selfmap;

    /// Throws NotSelfMap when the map leaves the disc or |beta| >= 1.
    WcoSymbols wco() const;
};

/// psi(z) = ((lambda^2 - alpha) z + lambda (alpha - 1)) / (lambda (1 - alpha) z + lambda^2 alpha - 1)
/// g(z)   = g(lambda) d3 / (1 - d1 z)
/// with the lambda = 0 branch psi = alpha z, g = g(0).
SymbolPair commutant_symbols(const CommutantParams& p);

/// Commutant symbols of a self-adjoint base with interior fixed point b,
/// where d0 uses b and d1 uses conj(b). Requires |b| < 1 and |b|^2 alpha != 1.
SymbolPair ek_commutant_symbols(Complex b, Complex alpha, Complex g_at_b = 1.0);

struct RelationResiduals {
    double r1;
    double r2;
};

/// (1) d1 + a0 (d2 - d0 d1) = a0 + d1 (a1 - a0^2)
/// (2) conj(d0) (d2 - d0^2 - 1) = -conj(lambda) (lambda^2 + 1) |1 - alpha|^2 / |lambda^2 alpha - 1|^2
///
/// Throws DomainError when phi(lambda) = lambda fails by more than 1e-8.
RelationResiduals coefficient_relations_residuals(Complex a0, Complex a1, Complex lambda, Complex alpha);

struct RealityCheck {
    double equality_residual;
    bool lambda_is_real;
};

/// Residual of conj(d0)(d2 - d0^2 - 1) = d0 (conj(d2 - d0^2) - 1), which
/// vanishes iff lambda is real (for alpha != 1, lambda != 0).
RealityCheck lambda_real_equivalence_check(Complex lambda, Complex alpha);

/// g_j(z) = (1 / (1 - lambda z)) ((lambda - z) / (1 - lambda z))^j.
TruncatedSeries eigenfunction(Complex lambda, unsigned j, std::size_t order);

/// f(lambda) phi'(lambda)^j, the eigenvalue of W_{f,phi} at g_j.
Complex eigenvalue(const WcoSymbols& symbols, Complex lambda, unsigned j);

/// Smallest order in [64, 2048] at which the tail bound C(N + j, j) |lambda|^(N - j)
/// of g_j drops below 1e-16; in particular |lambda|^N <= 1e-16.
std::size_t eigen_order(Complex lambda, unsigned j = 0);

enum class FlagState { not_asserted, asserted_by_theory, verified_numerically, failed };

std::string_view to_string(FlagState state);

struct PropertyFlag {
    FlagState state = FlagState::not_asserted;
    double residual = 0.0;
    double tolerance = 0.0;

    bool asserted() const noexcept { return state != FlagState::not_asserted; }
};

struct ClassificationResult {
    PropertyFlag normal;
    PropertyFlag self_adjoint;
    PropertyFlag j_symmetric;
    /// The two textual forms of the J-symmetry condition: right-hand side
    /// 1 - |d2 - d0^2| and 1 - |d2 - d0^2|^2.
    bool jsym_condition_literal = false;
    bool jsym_condition_squared = false;

    bool variants_disagree() const noexcept { return jsym_condition_literal != jsym_condition_squared; }
};

struct ClassificationOptions {
    std::size_t order = default_order;
    std::size_t max_degree = 8;
    double normal_tolerance = 1e-6;
    double matrix_tolerance = 1e-12;
    bool verify = true;
};

/// The normality, self-adjointness and J-symmetry consequences for the
/// commutant, each paired with its numerical residual. Requires the
/// commutant map to be a self-map.
ClassificationResult classify_commutant(const CommutantParams& p, const ClassificationOptions& options = {});

/// Literal and squared forms of the J-symmetry condition on (d0, d2).
bool jsym_condition_literal(Complex d0, Complex d2);
bool jsym_condition_squared(Complex d0, Complex d2);

/// max |(W h)(lambda)| over random h = B_lambda q, q a random polynomial of
/// degree <= 8 with coefficients in the unit square.
double invariant_subspace_check(const CommutantParams& p, std::size_t trials, std::mt19937_64& rng,
                                std::size_t order = default_order);

struct PolarGrid {
    std::size_t radii = 20;
    std::size_t angles = 25;
    double max_radius = 0.99;
    double exclusion_radius = 1e-3;
};

/// sup over the grid of |B_lambda(psi(z)) / B_lambda(z)|, skipping the
/// removable singularity at lambda.
double schur_quotient_check(const CommutantParams& p, const PolarGrid& grid = {});

/// |psi(lambda) - lambda| for the interior fixed point lambda of phi.
double common_fixed_point_check(const Lft& phi, const SelfMap& psi);

struct IntertwiningResiduals {
    double weight_pointwise;   // max |g (f o psi) - f (g o phi)|
    double map_pointwise;      // max |phi o psi - psi o phi|
    double weight_exact;       // cross-multiplied polynomial coefficients
    double map_exact;          // projective distance of composed coefficients
};

/// Checks g (f o psi) = f (g o phi) and phi o psi = psi o phi on `points`
/// sample points spread over |z| <= radius, plus exactly.
IntertwiningResiduals weight_intertwining_residual(const GeometricWeight& f, const SelfMap& phi,
                                                   const GeometricWeight& g, const SelfMap& psi,
                                                   std::size_t points = 50, double radius = 0.9);

} // namespace hardy
