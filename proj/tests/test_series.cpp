#include <doctest.h>

#include <hardy/errors.hpp>
#include <hardy/lft.hpp>
#include <hardy/sampling.hpp>
#include <hardy/series.hpp>

#include <cmath>
#include <vector>

using namespace hardy;

namespace {

TruncatedSeries random_series(Rng& rng, std::size_t order) {
    std::vector<Complex> c(order);
    for (auto& x : c)
        x = uniform_disc(rng, 1.0);
    return TruncatedSeries(std::move(c));
}

double max_diff(const TruncatedSeries& s, const TruncatedSeries& t) {
    double m = 0.0;
    for (std::size_t n = 0; n < s.order(); ++n)
        m = std::max(m, std::abs(s[n] - t[n]));
    return m;
}

} // namespace

TEST_CASE("series construction rejects empty and non-finite input") {
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), DomainError);
    CHECK_THROWS_AS(TruncatedSeries({Complex(std::nan(""), 0.0)}), DomainError);
    CHECK(TruncatedSeries::monomial(2, 4, 3.0) == TruncatedSeries({0.0, 0.0, 3.0, 0.0}));
}

TEST_CASE("addition") {
    const TruncatedSeries one_plus_z({1.0, 1.0});
    const TruncatedSeries one_minus_z({1.0, -1.0});
    CHECK(one_plus_z + one_minus_z == TruncatedSeries({2.0, 0.0}));
    CHECK(one_plus_z + TruncatedSeries::zero(2) == one_plus_z);
    CHECK_THROWS_AS(add(one_plus_z, TruncatedSeries::zero(3)), OrderMismatch);
    CHECK(add(pad_to(one_plus_z, 3), TruncatedSeries::zero(3)) == TruncatedSeries({1.0, 1.0, 0.0}));

    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto s = random_series(rng, 32);
        const auto u = random_series(rng, 32);
        CHECK(max_diff((s + u) - u, s) <= 1e-15);
    }
}

TEST_CASE("Cauchy product") {
    CHECK(TruncatedSeries({1.0, 1.0, 0.0}) * TruncatedSeries({1.0, -1.0, 0.0}) == TruncatedSeries({1.0, 0.0, -1.0}));

    Rng rng(12);
    const auto s = random_series(rng, 24);
    CHECK(s * TruncatedSeries::constant(1.0, 24) == s);

    // geometric(1, 0.5) (1 - 0.5 z) telescopes to 1.
    const auto g = geometric_series(1.0, 0.5, 16) * TruncatedSeries(std::vector<Complex>{1.0, -0.5, 0, 0, 0, 0, 0, 0,
                                                                                            0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(g[0] == Complex(1.0));
    for (std::size_t n = 1; n < 16; ++n)
        CHECK(g[n] == Complex(0.0));
}

TEST_CASE("Cauchy product is commutative and associative") {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        // Dyadic coefficients keep every partial sum exact.
        std::vector<Complex> a(12), b(12), c(12);
        for (std::size_t n = 0; n < 12; ++n) {
            a[n] = {std::round(uniform_real(rng, -8, 8)) / 4, std::round(uniform_real(rng, -8, 8)) / 4};
            b[n] = {std::round(uniform_real(rng, -8, 8)) / 4, std::round(uniform_real(rng, -8, 8)) / 4};
            c[n] = {std::round(uniform_real(rng, -8, 8)) / 4, std::round(uniform_real(rng, -8, 8)) / 4};
        }
        const TruncatedSeries s(a), u(b), v(c);
        CHECK(s * u == u * s);
        CHECK((s * u) * v == s * (u * v));
    }
    Rng rng2(14);
    for (int t = 0; t < 50; ++t) {
        const auto s = random_series(rng2, 40);
        const auto u = random_series(rng2, 40);
        const auto v = random_series(rng2, 40);
        CHECK(max_diff((s * u) * v, s * (u * v)) <= 1e-12);
    }
}

TEST_CASE("multiply_by an Lft agrees with the Cauchy product of its expansion") {
    Rng rng(15);
    for (int t = 0; t < 50; ++t) {
        const auto s = random_series(rng, 64);
        Complex c = uniform_disc(rng, 0.8);
        const Lft map(uniform_disc(rng, 1.0) + 1.5, uniform_disc(rng, 1.0), c, 1.0);
        CHECK(max_diff(multiply_by(s, map), s * taylor_series(map, 64)) <= 1e-12);
    }
    CHECK_THROWS_AS(multiply_by(TruncatedSeries::constant(1.0, 4), Lft(1.0, 0.0, 1.0, 1.0)), DomainError);
}

TEST_CASE("evaluation") {
    CHECK(evaluate(geometric_series(1.0, 0.5, 64), 0.0) == Complex(1.0));
    CHECK(evaluate(TruncatedSeries({1.0, 2.0}), 0.5) == Complex(2.0));
    CHECK(std::abs(evaluate(geometric_series(1.0, 0.5, 64), 0.4) - 1.25) <= std::pow(0.2, 64) * 2 + 1e-15);
}

TEST_CASE("geometric weight series") {
    CHECK(geometric_series(1.0, 0.0, 4) == TruncatedSeries::constant(1.0, 4));
    CHECK(geometric_series(2.0, 0.5, 3) == TruncatedSeries({2.0, 1.0, 0.5}));
    CHECK_THROWS_AS(geometric_series(1.0, 1.0, 3), DomainError);
    CHECK_THROWS_AS(geometric_series(1.0, Complex(0.0, -1.2), 3), DomainError);
}

TEST_CASE("Cauchy kernel and the reproducing property") {
    CHECK(cauchy_kernel(0.0, 5) == TruncatedSeries::constant(1.0, 5));
    CHECK(inner_product(TruncatedSeries({1.0, 2.0}), cauchy_kernel(0.5, 2)) == Complex(2.0));
    const auto k = cauchy_kernel(Complex(0.0, 0.3), 4);
    CHECK(max_diff(k, TruncatedSeries({1.0, Complex(0, -0.3), -0.09, Complex(0, 0.027)})) <= 1e-17);
    CHECK_THROWS_AS(cauchy_kernel(1.0, 3), DomainError);

    Rng rng(16);
    for (int t = 0; t < 100; ++t) {
        const auto p = pad_to(random_series(rng, 20), 64);
        const Complex w = uniform_disc(rng, 0.99);
        CHECK(std::abs(inner_product(p, cauchy_kernel(w, 64)) - evaluate(p, w)) <= 1e-13);
    }
}

TEST_CASE("inner product and norm") {
    Rng rng(17);
    const auto s = random_series(rng, 16);
    const Complex ss = inner_product(s, s);
    CHECK(ss.imag() == 0.0);
    CHECK(ss.real() >= 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(inner_product(TruncatedSeries::monomial(i, 4), TruncatedSeries::monomial(j, 4)) ==
                  Complex(i == j ? 1.0 : 0.0));
    CHECK(l2_norm(TruncatedSeries::zero(7)) == 0.0);
    CHECK(l2_norm(TruncatedSeries({3.0, Complex(0, 4)})) == 5.0);
    CHECK(std::abs(l2_norm(geometric_series(1.0, 0.5, 128)) - std::sqrt(1.0 / 0.75)) <= 1e-15);
}

TEST_CASE("conjugation J") {
    const TruncatedSeries real({1.0, -2.0, 0.5});
    CHECK(conjugation_j(real) == real);
    Rng rng(18);
    for (int t = 0; t < 100; ++t) {
        const auto s = random_series(rng, 32);
        const auto u = random_series(rng, 32);
        const Complex a = uniform_disc(rng, 2.0);
        CHECK(conjugation_j(conjugation_j(s)) == s);
        CHECK(inner_product(conjugation_j(s), conjugation_j(u)) == std::conj(inner_product(s, u)));
        CHECK(conjugation_j(scale(a, s)) == scale(std::conj(a), conjugation_j(s)));
    }
}

TEST_CASE("Lft expansion") {
    CHECK(taylor_series(Lft::identity(), 4) == TruncatedSeries({0.0, 1.0, 0.0, 0.0}));
    CHECK_THROWS_AS(taylor_series(Lft(1.0, 0.0, 1.0, 1.0), 4), DomainError);

    const Complex a0(0.3, -0.1), a1(0.2, 0.4);
    const auto phi = std::get<Lft>(jung_phi(a0, a1));
    const auto s = taylor_series(phi, 12);
    CHECK(std::abs(s[0] - a0) <= 1e-16);
    Complex expected = a1;
    for (std::size_t n = 1; n < 12; ++n, expected *= a0)
        CHECK(std::abs(s[n] - expected) <= 1e-15);

    Rng rng(19);
    const Lft map(Complex(0.4, 0.2), Complex(-0.1, 0.3), Complex(0.5, -0.2), 1.0);
    const auto series = taylor_series(map, 64);
    for (int t = 0; t < 20; ++t) {
        const Complex z = uniform_disc(rng, 0.8);
        CHECK(std::abs(evaluate(series, z) - map(z)) <= 1e-9);
    }
}

TEST_CASE("Lft expansion error decays geometrically in the order") {
    const Lft map(1.0, 0.2, 0.6, 1.0);
    const Complex z(0.7, 0.2);
    double previous = std::abs(evaluate(taylor_series(map, 8), z) - map(z));
    for (std::size_t n = 16; n <= 64; n *= 2) {
        const double err = std::abs(evaluate(taylor_series(map, n), z) - map(z));
        CHECK(err < previous * 0.5);
        previous = err;
    }
}
