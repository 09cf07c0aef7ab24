#include <hardy/theory.hpp>

#include <hardy/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hardy {

namespace {

constexpr double degenerate_tolerance = 1e-14;
constexpr double reality_tolerance = 1e-12;
constexpr double condition_tolerance = 1e-12;

using Coeffs = std::array<Complex, 4>;
using Poly = std::array<Complex, 4>; // ascending powers, degree <= 3

bool is_real(Complex z) { return std::abs(z.imag()) <= reality_tolerance; }

Coeffs normalized(Coeffs v) {
    double m = 0.0;
    for (const auto& x : v)
        m = std::max(m, std::abs(x));
    for (auto& x : v)
        x /= m;
    return v;
}

Coeffs compose_coeffs(const Coeffs& o, const Coeffs& i) {
    return {o[0] * i[0] + o[1] * i[2], o[0] * i[1] + o[1] * i[3], o[2] * i[0] + o[3] * i[2],
            o[2] * i[1] + o[3] * i[3]};
}

// (p0 + p1 z)(q0 + q1 z)(r0 + r1 z)
Poly triple(Complex p0, Complex p1, Complex q0, Complex q1, Complex r0, Complex r1) {
    const Complex s0 = p0 * q0, s1 = p0 * q1 + p1 * q0, s2 = p1 * q1;
    return {s0 * r0, s0 * r1 + s1 * r0, s1 * r1 + s2 * r0, s2 * r1};
}

// Numerator and denominator of w (v o m) for weights w, v and map m, up to
// the constant factor c_w c_v:
//   (cz + d) / ((1 - beta_w z)((c - beta_v a) z + (d - beta_v b)))
std::pair<std::array<Complex, 2>, Poly> weighted_composition(const GeometricWeight& w, const GeometricWeight& v,
                                                             const Coeffs& m) {
    const auto& [a, b, c, d] = m;
    std::array<Complex, 2> num{d, c};
    Poly den = triple(1.0, -w.beta, d - v.beta * b, c - v.beta * a, 1.0, 0.0);
    return {num, den};
}

WcoSymbols gated(const SymbolPair& pair) {
    if (!pair.selfmap.holds)
        throw NotSelfMap("commutant map does not send the disc into itself (margin "
                         + std::to_string(pair.selfmap.margin) + ")");
    return WcoSymbols(pair.weight, pair.map);
}

} // namespace

WcoSymbols SymbolPair::wco() const { return gated(*this); }

WcoSymbols jung_symbols(Complex a0, Complex a1, Complex b) {
    if (b == Complex{})
        throw DegenerateError("jung_symbols: b = 0 makes the weight identically zero");
    if (std::abs(a1 - 1.0) <= degenerate_tolerance)
        throw HypothesisError("jung_symbols: a1 = 1 is excluded from commutant analysis");
    const auto verdict = jung_selfmap_check(a0, a1);
    if (!verdict.holds) {
        std::string clause = verdict.a0_margin > 0.0 ? "2|a0 + conj(a0)(a1 - a0^2)| <= 1 - |a1 - a0^2|^2"
                                                     : "|a0| < 1";
        throw NotSelfMap("jung_symbols: self-map criterion violated: " + clause);
    }
    return WcoSymbols(GeometricWeight{b, a0}, jung_phi(a0, a1));
}

WcoSymbols hermitian_form_symbols(Complex a0, Complex a1, Complex c) {
    SelfMap map = ConstantMap{a0};
    if (a1 != Complex{})
        map = Lft(a1 - std::norm(a0), a0, -std::conj(a0), 1.0);
    return WcoSymbols(GeometricWeight{c, std::conj(a0)}, map);
}

Complex fixed_point_lambda(Complex a0, Complex a1) {
    const auto map = jung_phi(a0, a1);
    if (const auto* k = std::get_if<ConstantMap>(&map)) {
        if (!(std::abs(k->value) < 1.0))
            throw NoInteriorFixedPoint("constant map outside the disc");
        return k->value;
    }
    const auto& phi = std::get<Lft>(map);
    if (!jung_selfmap_check(a0, a1).holds)
        throw NotSelfMap("fixed_point_lambda: phi does not send the disc into itself");
    switch (classify(phi)) {
    case MapClass::identity:
        throw HypothesisError("fixed_point_lambda: phi is the identity");
    case MapClass::elliptic_automorphism:
        throw EllipticAutomorphism("fixed_point_lambda: phi is an elliptic automorphism, "
                                   "excluded by the commutant theorem hypothesis");
    default:
        break;
    }
    return interior_fixed_point(phi);
}

CommutantParams make_commutant_params(Complex lambda, Complex alpha, Complex g_at_lambda) {
    if (!(std::abs(lambda) < 1.0))
        throw DomainError("make_commutant_params: |lambda| >= 1");
    const Complex l2 = lambda * lambda;
    const Complex den = l2 * alpha - 1.0;
    if (std::abs(den) <= degenerate_tolerance)
        throw DegenerateError("make_commutant_params: lambda^2 alpha = 1");
    CommutantParams p{lambda, alpha, g_at_lambda, {}, {}, {}, {}};
    p.d0 = lambda * (alpha - 1.0) / den;
    p.d1 = p.d0;
    // den = (l2 - 1)(1 + t); in this form alpha = 1 gives d2 = d3 = 1 exactly.
    const Complex t = l2 * (alpha - 1.0) / (l2 - 1.0);
    p.d3 = 1.0 / (1.0 + t);
    p.d2 = alpha * p.d3 * p.d3;
    return p;
}

SymbolPair commutant_symbols(const CommutantParams& p) {
    const Complex lambda = p.lambda;
    const Complex alpha = p.alpha;
    SelfMap map = ConstantMap{lambda};
    GeometricWeight weight{p.g_at_lambda, 0.0};
    if (lambda == Complex{}) {
        if (alpha != Complex{})
            map = Lft(alpha, 0.0, 0.0, 1.0);
    } else {
        if (std::abs(alpha) > degenerate_tolerance) {
            const Complex l2 = lambda * lambda;
            map = Lft(l2 - alpha, lambda * (alpha - 1.0), lambda * (1.0 - alpha), l2 * alpha - 1.0);
        }
        weight = {p.g_at_lambda * p.d3, p.d1};
    }
    return {weight, map, is_selfmap(map)};
}

SymbolPair ek_commutant_symbols(Complex b, Complex alpha, Complex g_at_b) {
    if (!(std::abs(b) < 1.0))
        throw DomainError("ek_commutant_symbols: |b| >= 1");
    const double b2 = std::norm(b);
    const Complex den = b2 * alpha - 1.0;
    if (std::abs(den) <= degenerate_tolerance)
        throw DegenerateError("ek_commutant_symbols: |b|^2 alpha = 1");
    if (b == Complex{}) {
        SelfMap map = ConstantMap{0.0};
        if (alpha != Complex{})
            map = Lft(alpha, 0.0, 0.0, 1.0);
        return {GeometricWeight{g_at_b, 0.0}, map, is_selfmap(map)};
    }
    const Complex d0 = (alpha - 1.0) * b / den;
    const Complex d1 = (alpha - 1.0) * std::conj(b) / den;
    const Complex d2 = alpha * (b2 - 1.0) * (b2 - 1.0) / (den * den);
    const Complex d3 = (b2 - 1.0) / den;
    SelfMap map = ConstantMap{d0};
    if (std::abs(d2) > degenerate_tolerance)
        map = Lft(d2 - d0 * d1, d0, -d1, 1.0);
    return {GeometricWeight{g_at_b * d3, d1}, map, is_selfmap(map)};
}

RelationResiduals coefficient_relations_residuals(Complex a0, Complex a1, Complex lambda, Complex alpha) {
    const double fp = std::abs(hardy::apply(jung_phi(a0, a1), lambda) - lambda);
    if (fp > 1e-8)
        throw DomainError("coefficient_relations_residuals: lambda is not a fixed point of phi (residual "
                          + std::to_string(fp) + ")");
    const auto p = make_commutant_params(lambda, alpha);
    const Complex lhs1 = p.d1 + a0 * (p.d2 - p.d0 * p.d1);
    const Complex rhs1 = a0 + p.d1 * (a1 - a0 * a0);
    const Complex lhs2 = std::conj(p.d0) * (p.d2 - p.d0 * p.d0 - 1.0);
    const Complex rhs2 = -std::conj(lambda) * (lambda * lambda + 1.0) * std::norm(1.0 - alpha)
                         / std::norm(lambda * lambda * alpha - 1.0);
    return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
}

RealityCheck lambda_real_equivalence_check(Complex lambda, Complex alpha) {
    const auto p = make_commutant_params(lambda, alpha);
    const Complex s = p.d2 - p.d0 * p.d0;
    const Complex lhs = std::conj(p.d0) * (s - 1.0);
    const Complex rhs = p.d0 * (std::conj(s) - 1.0);
    return {std::abs(lhs - rhs), is_real(lambda)};
}

TruncatedSeries eigenfunction(Complex lambda, unsigned j, std::size_t order) {
    if (!(std::abs(lambda) < 1.0))
        throw DomainError("eigenfunction: |lambda| >= 1");
    auto g = geometric_series(1.0, lambda, order);
    if (j == 0)
        return g;
    const auto factor = taylor_series(Lft(-1.0, lambda, -lambda, 1.0), order);
    for (unsigned k = 0; k < j; ++k)
        g = multiply(g, factor);
    return g;
}

Complex eigenvalue(const WcoSymbols& symbols, Complex lambda, unsigned j) {
    return symbols.weight_at(lambda) * std::pow(derivative_at(symbols.map(), lambda), static_cast<int>(j));
}

std::size_t eigen_order(Complex lambda, unsigned j) {
    const double r = std::abs(lambda);
    if (r < 1e-300)
        return 64;
    // Coefficient n of g_j is bounded by C(n + j, j) |lambda|^(n - j).
    const double log_r = std::log(r);
    std::size_t n = 64;
    for (; n < 2048; ++n) {
        const double log_binom = std::lgamma(n + j + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n + 1.0);
        if (log_binom + (static_cast<double>(n) - j) * log_r <= std::log(1e-16))
            break;
    }
    return n;
}

std::string_view to_string(FlagState state) {
    switch (state) {
    case FlagState::not_asserted: return "not-asserted";
    case FlagState::asserted_by_theory: return "asserted-by-theory";
    case FlagState::verified_numerically: return "verified-numerically";
    case FlagState::failed: return "failed";
    }
    return "unknown";
}

bool jsym_condition_literal(Complex d0, Complex d2) {
    const Complex s = d2 - d0 * d0;
    return std::abs(d0) < 1.0
           && 2.0 * std::abs(d0 + std::conj(d0) * s) <= 1.0 - std::abs(s) + condition_tolerance;
}

bool jsym_condition_squared(Complex d0, Complex d2) {
    const Complex s = d2 - d0 * d0;
    return std::abs(d0) < 1.0
           && 2.0 * std::abs(d0 + std::conj(d0) * s) <= 1.0 - std::norm(s) + condition_tolerance;
}

ClassificationResult classify_commutant(const CommutantParams& p, const ClassificationOptions& options) {
    const auto symbols = commutant_symbols(p).wco();

    ClassificationResult result;
    result.jsym_condition_literal = jsym_condition_literal(p.d0, p.d2);
    result.jsym_condition_squared = jsym_condition_squared(p.d0, p.d2);

    const bool normal = is_real(p.lambda);
    const bool self_adjoint = normal && is_real(p.alpha) && is_real(p.g_at_lambda);
    const bool jsym = result.jsym_condition_literal || result.jsym_condition_squared;
    if (self_adjoint && !normal)
        throw std::logic_error("classify_commutant: self-adjoint flag without normal flag");

    auto settle = [&](PropertyFlag& flag, bool asserted, double residual, double tol) {
        flag.residual = residual;
        flag.tolerance = tol;
        if (!asserted)
            flag.state = FlagState::not_asserted;
        else if (!options.verify)
            flag.state = FlagState::asserted_by_theory;
        else
            flag.state = residual <= tol ? FlagState::verified_numerically : FlagState::failed;
    };

    if (!options.verify) {
        settle(result.normal, normal, 0.0, options.normal_tolerance);
        settle(result.self_adjoint, self_adjoint, 0.0, options.matrix_tolerance);
        settle(result.j_symmetric, jsym, 0.0, options.matrix_tolerance);
        return result;
    }

    const auto m = wco_matrix(symbols, options.order);
    settle(result.normal, normal, normality_residual(m, options.max_degree), options.normal_tolerance);
    settle(result.self_adjoint, self_adjoint, hermitian_residual(m), options.matrix_tolerance);
    settle(result.j_symmetric, jsym, transpose_residual(m), options.matrix_tolerance);
    return result;
}

double invariant_subspace_check(const CommutantParams& p, std::size_t trials, std::mt19937_64& rng,
                                std::size_t order) {
    const auto symbols = commutant_symbols(p).wco();
    const auto blaschke = taylor_series(blaschke_factor(p.lambda), order);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Complex> q(order);
        for (std::size_t k = 0; k <= 8 && k < order; ++k) {
            const double re = unit(rng);
            q[k] = {re, unit(rng)};
        }
        const auto h = multiply(blaschke, TruncatedSeries(std::move(q)));
        const auto image = wco_apply(symbols, h);
        worst = std::max(worst, std::abs(evaluate(image, p.lambda)));
    }
    return worst;
}

double schur_quotient_check(const CommutantParams& p, const PolarGrid& grid) {
    const auto pair = commutant_symbols(p);
    if (!pair.selfmap.holds)
        throw NotSelfMap("schur_quotient_check: psi does not send the disc into itself");
    const auto blaschke = blaschke_factor(p.lambda);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.radii; ++i) {
        const double r = grid.max_radius * static_cast<double>(i + 1) / static_cast<double>(grid.radii);
        for (std::size_t k = 0; k < grid.angles; ++k) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid.angles);
            const Complex z = std::polar(r, theta);
            if (std::abs(z - p.lambda) < grid.exclusion_radius)
                continue;
            sup = std::max(sup, std::abs(blaschke(hardy::apply(pair.map, z)) / blaschke(z)));
        }
    }
    return sup;
}

double common_fixed_point_check(const Lft& phi, const SelfMap& psi) {
    const Complex lambda = interior_fixed_point(phi);
    return std::abs(hardy::apply(psi, lambda) - lambda);
}

IntertwiningResiduals weight_intertwining_residual(const GeometricWeight& f, const SelfMap& phi,
                                                   const GeometricWeight& g, const SelfMap& psi,
                                                   std::size_t points, double radius) {
    IntertwiningResiduals out{};
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < points; ++k) {
        const double r = radius * std::sqrt((static_cast<double>(k) + 0.5) / static_cast<double>(points));
        const Complex z = std::polar(r, golden * static_cast<double>(k));
        try {
            const Complex pz = hardy::apply(psi, z);
            const Complex fz = hardy::apply(phi, z);
            const Complex w = g(z) * f(pz) - f(z) * g(fz);
            const Complex m = hardy::apply(phi, pz) - hardy::apply(psi, fz);
            if (std::isfinite(std::abs(w)))
                out.weight_pointwise = std::max(out.weight_pointwise, std::abs(w));
            if (std::isfinite(std::abs(m)))
                out.map_pointwise = std::max(out.map_pointwise, std::abs(m));
        } catch (const PoleError&) {
            // psi or phi has its pole at this sample point
        }
    }

    const auto phi_c = normalized(coefficients(phi));
    const auto psi_c = normalized(coefficients(psi));

    // g (f o psi) against f (g o phi), cross-multiplied.
    const auto [n1, d1] = weighted_composition(g, f, psi_c);
    const auto [n2, d2] = weighted_composition(f, g, phi_c);
    Poly lhs{}, rhs{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; i + j < 4; ++j) {
            lhs[i + j] += n1[i] * d2[j];
            rhs[i + j] += n2[i] * d1[j];
        }
    const double c_scale = std::abs(f.c * g.c);
    for (std::size_t i = 0; i < 4; ++i)
        out.weight_exact = std::max(out.weight_exact, c_scale * std::abs(lhs[i] - rhs[i]));

    out.map_exact = projective_distance(compose_coeffs(phi_c, psi_c), compose_coeffs(psi_c, phi_c));
    return out;
}

} // namespace hardy
