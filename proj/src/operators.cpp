#include <hardy/operators.hpp>

#include <hardy/errors.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace hardy {

namespace {

constexpr double symbol_tolerance = 1e-12;

bool nearly_real(Complex z) { return std::abs(z.imag()) <= symbol_tolerance * std::max(1.0, std::abs(z)); }

bool nearly_equal(Complex x, Complex y) {
    return std::abs(x - y) <= symbol_tolerance * std::max({1.0, std::abs(x), std::abs(y)});
}

// x * c / (1 - beta z): y_k = c x_k + beta y_{k-1}
TruncatedSeries multiply_by_weight(const TruncatedSeries& x, const Weight& weight) {
    if (const auto* g = std::get_if<GeometricWeight>(&weight)) {
        std::vector<Complex> y(x.order());
        Complex prev{};
        for (std::size_t k = 0; k < y.size(); ++k) {
            y[k] = g->c * x[k] + g->beta * prev;
            prev = y[k];
        }
        return TruncatedSeries(std::move(y));
    }
    const auto& w = std::get<TruncatedSeries>(weight);
    if (w.order() >= x.order())
        return multiply(truncate_to(w, x.order()), x);
    return multiply(pad_to(w, x.order()), x);
}

TruncatedSeries times_map(const TruncatedSeries& x, const SelfMap& map) {
    if (const auto* l = std::get_if<Lft>(&map))
        return multiply_by(x, *l);
    return scale(std::get<ConstantMap>(map).value, x);
}

void require_headroom(std::size_t max_degree, std::size_t order) {
    if (4 * max_degree > order)
        throw DomainError("degree bound " + std::to_string(max_degree) + " exceeds order/4 for order "
                          + std::to_string(order));
}

double column_norm(std::span<const Complex> x, std::span<const Complex> y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::norm(x[i] - y[i]);
    return std::sqrt(acc);
}

} // namespace

WcoSymbols::WcoSymbols(Weight weight, SelfMap map) : weight_(std::move(weight)), map_(std::move(map)) {
    if (const auto* g = std::get_if<GeometricWeight>(&weight_)) {
        if (g->c == Complex{})
            throw DegenerateError("WcoSymbols: weight is identically zero");
        if (!(std::abs(g->beta) < 1.0))
            throw DomainError("WcoSymbols: weight pole in the closed disc (|beta| >= 1)");
    } else {
        const auto& s = std::get<TruncatedSeries>(weight_);
        if (std::all_of(s.coeffs().begin(), s.coeffs().end(), [](Complex c) { return c == Complex{}; }))
            throw DegenerateError("WcoSymbols: weight is identically zero");
    }
    const auto verdict = is_selfmap(map_);
    if (!verdict.holds)
        throw NotSelfMap("WcoSymbols: map does not send the disc into itself (margin "
                         + std::to_string(verdict.margin) + ")");
}

Complex WcoSymbols::weight_at(Complex z) const {
    if (const auto* g = std::get_if<GeometricWeight>(&weight_))
        return (*g)(z);
    return evaluate(std::get<TruncatedSeries>(weight_), z);
}

TruncatedSeries WcoSymbols::weight_series(std::size_t order) const {
    return multiply_by_weight(TruncatedSeries::constant(1.0, order), weight_);
}

TruncatedSeries WcoSymbols::map_series(std::size_t order) const {
    if (const auto* l = std::get_if<Lft>(&map_))
        return taylor_series(*l, order);
    return TruncatedSeries::constant(std::get<ConstantMap>(map_).value, order);
}

OperatorMatrix::OperatorMatrix(std::size_t order) : n_(order), entries_(order * order) {}

std::vector<Complex> OperatorMatrix::apply(std::span<const Complex> x) const {
    std::vector<Complex> y(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        if (x[j] == Complex{})
            continue;
        const auto col = column(j);
        for (std::size_t i = 0; i < n_; ++i)
            y[i] += col[i] * x[j];
    }
    return y;
}

std::vector<Complex> OperatorMatrix::apply_adjoint(std::span<const Complex> x) const {
    std::vector<Complex> y(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const auto col = column(j);
        Complex acc{};
        for (std::size_t i = 0; i < n_; ++i)
            acc += std::conj(col[i]) * x[i];
        y[j] = acc;
    }
    return y;
}

TruncatedSeries wco_apply(const WcoSymbols& symbols, const TruncatedSeries& h) {
    const auto n = h.order();
    const auto c = h.coeffs();
    std::size_t top = n;
    while (top > 0 && c[top - 1] == Complex{})
        --top;
    if (top == 0)
        return TruncatedSeries::zero(n);

    // Horner: h o phi = (...((h_m) phi + h_{m-1}) phi + ...) phi + h_0
    std::vector<Complex> acc(n);
    acc[0] = c[top - 1];
    TruncatedSeries composed(std::move(acc));
    for (std::size_t k = top - 1; k-- > 0;) {
        composed = times_map(composed, symbols.map());
        std::vector<Complex> shifted(composed.coeffs().begin(), composed.coeffs().end());
        shifted[0] += c[k];
        composed = TruncatedSeries(std::move(shifted));
    }
    return multiply_by_weight(composed, symbols.weight());
}

OperatorMatrix wco_matrix(const WcoSymbols& symbols, std::size_t order) {
    OperatorMatrix m(order);
    auto col = symbols.weight_series(order);
    for (std::size_t j = 0; j < order; ++j) {
        if (j > 0)
            col = times_map(col, symbols.map());
        for (std::size_t i = 0; i < order; ++i)
            m(i, j) = col[i];
    }
    return m;
}

KernelImage adjoint_on_kernel(const WcoSymbols& symbols, Complex w) {
    if (!(std::abs(w) < 1.0))
        throw DomainError("adjoint_on_kernel: |w| >= 1");
    const Complex point = symbols.map_at(w);
    if (!(std::abs(point) < 1.0))
        throw DomainError("adjoint_on_kernel: phi(w) leaves the disc");
    return {std::conj(symbols.weight_at(w)), point};
}

double transpose_residual(const OperatorMatrix& m) {
    double worst = 0.0;
    for (std::size_t j = 0; j < m.order(); ++j)
        for (std::size_t i = j + 1; i < m.order(); ++i)
            worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
    return worst;
}

double hermitian_residual(const OperatorMatrix& m) {
    double worst = 0.0;
    for (std::size_t j = 0; j < m.order(); ++j)
        for (std::size_t i = j; i < m.order(); ++i)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

SymmetryCheck is_j_symmetric(const OperatorMatrix& m, double tol) {
    const double r = transpose_residual(m);
    return {r <= tol, r};
}

HermitianSymbolVerdict hermitian_symbol_check(const WcoSymbols& symbols) {
    HermitianSymbolVerdict verdict{true, {}};
    auto fail = [&](std::string clause) {
        verdict.holds = false;
        verdict.failed_clauses.push_back(std::move(clause));
    };

    const Complex a0 = symbols.map_at(0.0);
    const Complex a1 = derivative_at(symbols.map(), 0.0);
    if (!nearly_real(a1))
        fail("phi'(0) is not real");
    if (const auto* l = std::get_if<Lft>(&symbols.map())) {
        if (!nearly_equal(l->c() / l->d(), -std::conj(a0)))
            fail("phi is not of the form a0 + a1 z / (1 - conj(a0) z)");
    }

    const auto* g = std::get_if<GeometricWeight>(&symbols.weight());
    if (g == nullptr) {
        fail("weight is not of the form c / (1 - beta z)");
        return verdict;
    }
    if (!nearly_real(g->c))
        fail("f(0) is not real");
    if (!nearly_equal(g->beta, std::conj(a0)))
        fail("weight pole parameter beta differs from conj(phi(0))");
    return verdict;
}

double commutator_residual(const OperatorMatrix& s, const OperatorMatrix& t, std::size_t max_degree) {
    if (s.order() != t.order())
        throw OrderMismatch("commutator_residual: matrix orders differ");
    require_headroom(max_degree, s.order());
    double worst = 0.0;
    for (std::size_t j = 0; j <= max_degree; ++j) {
        const auto st = s.apply(t.column(j));
        const auto ts = t.apply(s.column(j));
        worst = std::max(worst, column_norm(st, ts));
    }
    return worst;
}

double commutator_residual(const WcoSymbols& s, const WcoSymbols& t, std::size_t max_degree, std::size_t order) {
    require_headroom(max_degree, order);
    return commutator_residual(wco_matrix(s, order), wco_matrix(t, order), max_degree);
}

double normality_residual(const OperatorMatrix& m, std::size_t max_degree) {
    require_headroom(max_degree, m.order());
    const auto n = m.order();
    double worst = 0.0;
    for (std::size_t j = 0; j <= max_degree; ++j) {
        const auto hm = m.apply_adjoint(m.column(j));
        std::vector<Complex> row(n);
        for (std::size_t k = 0; k < n; ++k)
            row[k] = std::conj(m(j, k));
        const auto mh = m.apply(row);
        worst = std::max(worst, column_norm(hm, mh));
    }
    return worst;
}

double normality_residual(const WcoSymbols& symbols, std::size_t max_degree, std::size_t order) {
    require_headroom(max_degree, order);
    return normality_residual(wco_matrix(symbols, order), max_degree);
}

} // namespace hardy
