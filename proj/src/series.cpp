#include <hardy/series.hpp>

#include <hardy/errors.hpp>
#include <hardy/lft.hpp>

#include <cmath>
#include <string>

namespace hardy {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_order(const TruncatedSeries& s, const TruncatedSeries& t, const char* op) {
    if (s.order() != t.order())
        throw OrderMismatch(std::string(op) + ": orders " + std::to_string(s.order()) + " and "
                            + std::to_string(t.order()) + " differ; pad explicitly");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw DomainError("TruncatedSeries: order must be at least 1");
    for (const auto& c : coeffs_)
        if (!finite(c))
            throw DomainError("TruncatedSeries: non-finite coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<Complex>(order));
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
    std::vector<Complex> c(order);
    if (order > 0)
        c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, std::size_t order, Complex scale) {
    if (power >= order)
        throw DomainError("monomial: power " + std::to_string(power) + " not below order " + std::to_string(order));
    std::vector<Complex> c(order);
    c[power] = scale;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pad_to(const TruncatedSeries& s, std::size_t order) {
    if (order < s.order())
        throw OrderMismatch("pad_to: target order below current order");
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    c.resize(order);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate_to(const TruncatedSeries& s, std::size_t order) {
    if (order > s.order())
        throw OrderMismatch("truncate_to: target order above current order");
    return TruncatedSeries(std::vector<Complex>(s.coeffs().begin(), s.coeffs().begin() + order));
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "add");
    std::vector<Complex> c(s.order());
    for (std::size_t n = 0; n < c.size(); ++n)
        c[n] = s[n] + t[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries subtract(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "subtract");
    std::vector<Complex> c(s.order());
    for (std::size_t n = 0; n < c.size(); ++n)
        c[n] = s[n] - t[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(Complex factor, const TruncatedSeries& s) {
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : c)
        x *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "multiply");
    const auto n = s.order();
    const auto sc = s.coeffs();
    const auto tc = t.coeffs();
    std::vector<Complex> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sc[i] == Complex{})
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            c[i + j] += sc[i] * tc[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply_by(const TruncatedSeries& s, const Lft& map) {
    if (std::abs(map.d()) <= std::abs(map.c()))
        throw DomainError("multiply_by: pole of the map lies in the closed disc");
    const auto x = s.coeffs();
    std::vector<Complex> y(s.order());
    Complex prev_x{}, prev_y{};
    for (std::size_t k = 0; k < y.size(); ++k) {
        y[k] = (map.a() * prev_x + map.b() * x[k] - map.c() * prev_y) / map.d();
        prev_x = x[k];
        prev_y = y[k];
    }
    return TruncatedSeries(std::move(y));
}

Complex evaluate(const TruncatedSeries& s, Complex z) {
    const auto c = s.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Complex inner_product(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t, "inner_product");
    Complex acc{};
    for (std::size_t n = 0; n < s.order(); ++n)
        acc += s[n] * std::conj(t[n]);
    return acc;
}

double l2_norm(const TruncatedSeries& s) {
    double acc = 0.0;
    for (const auto& c : s.coeffs())
        acc += std::norm(c);
    return std::sqrt(acc);
}

TruncatedSeries conjugation_j(const TruncatedSeries& s) {
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : c)
        x = std::conj(x);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries geometric_series(Complex c, Complex beta, std::size_t order) {
    if (!(std::abs(beta) < 1.0))
        throw DomainError("geometric_series: |beta| >= 1, c/(1 - beta z) is not an H^2 weight of this form");
    std::vector<Complex> out(order);
    Complex power = 1.0;
    for (auto& x : out) {
        x = c * power;
        power *= beta;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries cauchy_kernel(Complex w, std::size_t order) {
    if (!(std::abs(w) < 1.0))
        throw DomainError("cauchy_kernel: |w| >= 1");
    return geometric_series(1.0, std::conj(w), order);
}

TruncatedSeries taylor_series(const Lft& map, std::size_t order) {
    if (std::abs(map.d()) <= std::abs(map.c()))
        throw DomainError("taylor_series: pole of the map lies in the closed disc");
    return multiply_by(TruncatedSeries::constant(1.0, order), map);
}

} // namespace hardy
