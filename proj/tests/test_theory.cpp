#include <doctest.h>

#include <hardy/errors.hpp>
#include <hardy/sampling.hpp>
#include <hardy/theory.hpp>

#include <cmath>
#include <numbers>

using namespace hardy;

namespace {

// Closed-form fixed point: 2 a0 / (1 + a0^2 - a1 -+ sqrt((1 + a0^2 - a1)^2 - 4 a0^2)),
// taking whichever sign lands in the disc.
Complex lambda_by_radical(Complex a0, Complex a1) {
    const Complex p = 1.0 + a0 * a0 - a1;
    const Complex r = std::sqrt(p * p - 4.0 * a0 * a0);
    const Complex l1 = 2.0 * a0 / (p - r), l2 = 2.0 * a0 / (p + r);
    return std::abs(l1) < std::abs(l2) ? l1 : l2;
}

// d-coefficients straight from their defining quotients.
struct D {
    Complex d0, d2, d3;
};

D d_by_formula(Complex lambda, Complex alpha) {
    const Complex l2 = lambda * lambda, den = l2 * alpha - 1.0;
    return {lambda * (alpha - 1.0) / den, alpha * (l2 - 1.0) * (l2 - 1.0) / (den * den), (l2 - 1.0) / den};
}

} // namespace

TEST_CASE("Jung symbols") {
    const Complex a1(0.4, 0.3), b(2.0, -1.0);
    const auto s = jung_symbols(0.0, a1, b);
    CHECK(s.weight_at(0.7) == b);
    CHECK(s.map_at(0.5) == 0.5 * a1);
    CHECK(transpose_residual(wco_matrix(jung_symbols(0.3, 0.2, 1.0), 64)) <= 1e-12);
    CHECK_NOTHROW(jung_symbols(0.6, 0.0, 1.0));
    CHECK_THROWS_AS(jung_symbols(0.6, 0.36, 1.0), NotSelfMap);
    CHECK_THROWS_AS(jung_symbols(0.3, 0.2, 0.0), DegenerateError);
    CHECK_THROWS_AS(jung_symbols(0.0, 1.0, 1.0), HypothesisError);
    try {
        jung_symbols(0.6, 0.36, 1.0);
    } catch (const NotSelfMap& e) {
        CHECK(std::string(e.what()).find("2|a0 + conj(a0)(a1 - a0^2)|") != std::string::npos);
    }
}

TEST_CASE("fixed point lambda") {
    CHECK(fixed_point_lambda(0.0, Complex(0.3, 0.4)) == Complex(0.0));

    const Complex real = fixed_point_lambda(0.3, 0.2);
    CHECK(std::abs(real - lambda_by_radical(0.3, 0.2)) <= 1e-14);
    CHECK(std::abs(real - 0.38777) <= 1e-5);
    CHECK(std::abs(apply(jung_phi(0.3, 0.2), real) - real) <= 1e-12);

    const Complex imag = fixed_point_lambda(Complex(0.0, 0.3), 0.2);
    CHECK(std::abs(imag.real()) <= 1e-15);
    CHECK(std::abs(imag - Complex(0.0, 0.36595)) <= 1e-5);
    CHECK(std::abs(imag - lambda_by_radical(Complex(0.0, 0.3), 0.2)) <= 1e-14);
    CHECK(std::abs(apply(jung_phi(Complex(0.0, 0.3), 0.2), imag) - imag) <= 1e-12);

    CHECK_THROWS_AS(fixed_point_lambda(0.0, std::polar(1.0, 1.0)), EllipticAutomorphism);
    CHECK_THROWS_AS(fixed_point_lambda(0.0, 1.0), HypothesisError);
    CHECK_THROWS_AS(fixed_point_lambda(0.9, 0.9), NotSelfMap);
}

TEST_CASE("fixed point lambda matches the radical formula") {
    Rng rng(41);
    for (int t = 0; t < 300; ++t) {
        const auto d = draw_jung_base(rng);
        CHECK(std::abs(d.lambda - lambda_by_radical(d.a0, d.a1)) <= 1e-12);
        CHECK(std::abs(d.lambda - interior_fixed_point(std::get<Lft>(jung_phi(d.a0, d.a1)))) <= 1e-12);
    }
}

TEST_CASE("commutant parameters") {
    Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        const Complex lambda = uniform_disc(rng, 0.95), alpha = uniform_disc(rng, 1.5);
        if (std::abs(lambda * lambda * alpha - 1.0) < 1e-3)
            continue;
        const auto p = make_commutant_params(lambda, alpha);
        const auto f = d_by_formula(lambda, alpha);
        CHECK(p.d0 == p.d1);
        CHECK(std::abs(p.d0 - f.d0) <= 1e-13 * std::max(1.0, std::abs(f.d0)));
        CHECK(std::abs(p.d2 - f.d2) <= 1e-13 * std::max(1.0, std::abs(f.d2)));
        CHECK(std::abs(p.d3 - f.d3) <= 1e-13 * std::max(1.0, std::abs(f.d3)));
    }
    CHECK_THROWS_AS(make_commutant_params(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(make_commutant_params(0.5, 4.0), DegenerateError);
}

TEST_CASE("commutant symbols") {
    const auto zero = commutant_symbols(make_commutant_params(0.0, 0.7, 2.0));
    CHECK(projective_distance(coefficients(zero.map), {0.7, 0.0, 0.0, 1.0}) == 0.0);
    CHECK(zero.weight.c == Complex(2.0));
    CHECK(zero.weight.beta == Complex(0.0));

    for (const Complex lambda : {Complex(0.3), Complex(0.1, -0.6)}) {
        const auto one = commutant_symbols(make_commutant_params(lambda, 1.0, Complex(0.5, 0.5)));
        CHECK(projective_distance(coefficients(one.map), Lft::identity().coefficients()) <= 1e-13);
        CHECK(one.weight.c == Complex(0.5, 0.5));
        CHECK(one.weight.beta == Complex(0.0));
    }

    const auto p = make_commutant_params(0.5, 2.0);
    CHECK(std::abs(p.d0 + 1.0) <= 1e-15);
    const auto outside = commutant_symbols(p);
    CHECK_FALSE(outside.selfmap.holds);
    CHECK_THROWS_AS(outside.wco(), NotSelfMap);

    const auto constant = commutant_symbols(make_commutant_params(0.4, 0.0));
    CHECK(std::holds_alternative<ConstantMap>(constant.map));
}

TEST_CASE("self-adjoint-base commutant formulas") {
    const auto zero = ek_commutant_symbols(0.0, 0.6, 3.0);
    CHECK(projective_distance(coefficients(zero.map), {0.6, 0.0, 0.0, 1.0}) == 0.0);
    CHECK(zero.weight.c == Complex(3.0));

    const auto half = ek_commutant_symbols(0.5, 0.5);
    CHECK(std::abs(apply(half.map, 0.0) - 0.25 / 0.875) <= 1e-15);

    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        const double b = uniform_real(rng, -0.8, 0.8);
        const Complex alpha = uniform_disc(rng, 1.5), g = uniform_disc(rng, 2.0) + 0.1;
        const auto ek = ek_commutant_symbols(b, alpha, g);
        const auto js = commutant_symbols(make_commutant_params(b, alpha, g));
        CHECK(projective_distance(coefficients(ek.map), coefficients(js.map)) <= 1e-12);
        CHECK(std::abs(ek.weight.c - js.weight.c) <= 1e-13 * std::max(1.0, std::abs(js.weight.c)));
        CHECK(std::abs(ek.weight.beta - js.weight.beta) <= 1e-13);
    }
}

TEST_CASE("commutant intertwines pointwise and exactly") {
    const auto base = jung_symbols(0.3, 0.2, 1.0);
    const auto& f = std::get<GeometricWeight>(base.weight());
    const Complex lambda = fixed_point_lambda(0.3, 0.2);
    const auto pair = commutant_symbols(make_commutant_params(lambda, 0.5));
    const auto r = weight_intertwining_residual(f, base.map(), pair.weight, pair.map);
    CHECK(r.map_pointwise <= 1e-12);
    CHECK(r.weight_pointwise <= 1e-12);
    CHECK(r.map_exact <= 1e-13);
    CHECK(r.weight_exact <= 1e-13);

    const auto perturbed = commutant_symbols(make_commutant_params(lambda, 0.5 + 1e-3));
    const auto bad = weight_intertwining_residual(f, base.map(), pair.weight, perturbed.map);
    CHECK(bad.weight_pointwise > 1e-6);
    CHECK(bad.weight_exact > 1e-6);

    const auto diag = jung_symbols(0.0, 0.5, 1.0);
    const auto zero_pair = commutant_symbols(make_commutant_params(0.0, 0.7));
    const auto z = weight_intertwining_residual(std::get<GeometricWeight>(diag.weight()), diag.map(), zero_pair.weight,
                                                zero_pair.map);
    CHECK(z.map_pointwise == 0.0);
    CHECK(z.weight_pointwise == 0.0);
}

TEST_CASE("commutant holds for non-self-map parameters as a rational identity") {
    const auto base = jung_symbols(Complex(0.2, 0.1), 0.5, 1.0);
    const Complex lambda = fixed_point_lambda(Complex(0.2, 0.1), 0.5);
    const auto pair = commutant_symbols(make_commutant_params(lambda, 20.0));
    CHECK_FALSE(pair.selfmap.holds);
    const auto r = weight_intertwining_residual(std::get<GeometricWeight>(base.weight()), base.map(), pair.weight,
                                                pair.map, 50, 0.3);
    CHECK(r.map_exact <= 1e-12);
    CHECK(r.weight_exact <= 1e-12);
}

TEST_CASE("coefficient relations") {
    const Complex l1 = fixed_point_lambda(0.3, 0.2);
    const auto r = coefficient_relations_residuals(0.3, 0.2, l1, 0.5);
    CHECK(r.r1 <= 1e-12);
    CHECK(r.r2 <= 1e-12);

    const Complex a0(0.0, 0.3);
    const Complex l2 = fixed_point_lambda(a0, 0.2);
    const auto c = coefficient_relations_residuals(a0, 0.2, l2, Complex(0.5, 0.2));
    CHECK(c.r1 <= 1e-12);
    CHECK(c.r2 <= 1e-12);

    const auto one = coefficient_relations_residuals(a0, 0.2, l2, 1.0);
    CHECK(one.r1 == 0.0);
    CHECK(one.r2 == 0.0);
    const auto p = make_commutant_params(l2, 1.0);
    CHECK(p.d0 == Complex(0.0));
    CHECK(p.d2 == Complex(1.0));

    CHECK_THROWS_AS(coefficient_relations_residuals(0.3, 0.2, 0.5, 0.5), DomainError);
}

TEST_CASE("reality equivalence") {
    const auto real = lambda_real_equivalence_check(0.4, Complex(0.0, 0.3));
    CHECK(real.lambda_is_real);
    CHECK(real.equality_residual <= 1e-13);

    const Complex imag = fixed_point_lambda(Complex(0.0, 0.3), 0.2);
    const auto complex = lambda_real_equivalence_check(imag, 0.5);
    CHECK_FALSE(complex.lambda_is_real);
    CHECK(complex.equality_residual > 1e-3);

    const auto collapse = lambda_real_equivalence_check(Complex(0.3, 0.4), 1.0);
    CHECK(collapse.equality_residual == 0.0);
}

TEST_CASE("reality equivalence residual matches its closed form") {
    // |residual| = 2 (1 - |lambda|^2) |Im lambda| |1 - alpha|^2 / |lambda^2 alpha - 1|^2
    Rng rng(44);
    for (int t = 0; t < 200; ++t) {
        const Complex lambda = uniform_disc(rng, 0.95), alpha = uniform_disc(rng, 1.5);
        if (std::abs(lambda * lambda * alpha - 1.0) < 1e-2)
            continue;
        const double expected = 2.0 * (1.0 - std::norm(lambda)) * std::abs(lambda.imag()) * std::norm(1.0 - alpha) /
                                std::norm(lambda * lambda * alpha - 1.0);
        const double got = lambda_real_equivalence_check(lambda, alpha).equality_residual;
        CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, expected));
    }
}

TEST_CASE("eigenfunctions") {
    for (unsigned j = 0; j < 5; ++j) {
        const auto g = eigenfunction(0.0, j, 16);
        CHECK(g == TruncatedSeries::monomial(j, 16, j % 2 ? -1.0 : 1.0));
        const Complex b(1.5, 0.5), a1(0.3, -0.4);
        const auto s = jung_symbols(0.0, a1, b);
        CHECK(std::abs(eigenvalue(s, 0.0, j) - b * std::pow(a1, static_cast<int>(j))) <= 1e-15);
    }
    const Complex lambda(0.3, 0.2);
    CHECK(eigenfunction(lambda, 0, 32) == geometric_series(1.0, lambda, 32));

    const auto s = jung_symbols(0.3, 0.2, 1.0);
    const Complex l = fixed_point_lambda(0.3, 0.2);
    CHECK(eigenvalue(s, l, 0) == s.weight_at(l));
    const auto g1 = eigenfunction(l, 1, 256);
    CHECK(l2_norm(wco_apply(s, g1) - eigenvalue(s, l, 1) * g1) <= 1e-8);

    // Pointwise oracle for the closed form of g_j.
    const auto g3 = eigenfunction(lambda, 3, 128);
    const Complex z(0.2, -0.5);
    const Complex expected = std::pow((lambda - z) / (1.0 - lambda * z), 3) / (1.0 - lambda * z);
    CHECK(std::abs(evaluate(g3, z) - expected) <= 1e-12);
}

TEST_CASE("eigen order") {
    CHECK(eigen_order(0.0) == 64);
    for (const double r : {0.1, 0.5, 0.8, 0.9}) {
        for (unsigned j = 0; j <= 5; ++j) {
            const std::size_t n = eigen_order(r, j);
            CHECK(n >= 64);
            CHECK(std::pow(r, static_cast<double>(n)) <= 1e-12);
            CHECK(eigen_order(r, j + 1) >= n);
        }
    }
}

TEST_CASE("classification of commutants") {
    const auto normal = classify_commutant(make_commutant_params(0.4, Complex(0.3, 0.1)));
    CHECK(normal.normal.state == FlagState::verified_numerically);
    CHECK(normal.self_adjoint.state == FlagState::not_asserted);

    const auto sa = classify_commutant(make_commutant_params(0.4, 0.6));
    CHECK(sa.self_adjoint.state == FlagState::verified_numerically);
    CHECK(sa.normal.state == FlagState::verified_numerically);
    CHECK(sa.self_adjoint.residual <= 1e-12);

    const auto diag = classify_commutant(make_commutant_params(0.0, 0.7));
    CHECK(diag.normal.state == FlagState::verified_numerically);
    CHECK(diag.j_symmetric.state == FlagState::verified_numerically);
    CHECK(diag.normal.residual == 0.0);
    CHECK(diag.j_symmetric.residual == 0.0);

    ClassificationOptions no_verify;
    no_verify.verify = false;
    CHECK(classify_commutant(make_commutant_params(0.4, 0.6), no_verify).normal.state ==
          FlagState::asserted_by_theory);

    CHECK_THROWS_AS(classify_commutant(make_commutant_params(0.5, 2.0)), NotSelfMap);
    CHECK(to_string(FlagState::verified_numerically) == "verified-numerically");
}

TEST_CASE("self-adjoint flag implies normal flag") {
    Rng rng(45);
    ClassificationOptions quick;
    quick.verify = false;
    for (int t = 0; t < 200; ++t) {
        const auto d = draw_jung_base(rng);
        const Complex alpha = draw_alpha(rng, d.lambda);
        const auto c = classify_commutant(make_commutant_params(d.lambda, alpha), quick);
        if (c.self_adjoint.asserted())
            CHECK(c.normal.asserted());
    }
}

TEST_CASE("J-symmetry condition variants") {
    // Literal right-hand side 1 - |s| is the stricter one for |s| < 1.
    Rng rng(46);
    for (int t = 0; t < 500; ++t) {
        const Complex d0 = uniform_disc(rng, 0.9), d2 = uniform_disc(rng, 1.0);
        if (jsym_condition_literal(d0, d2))
            CHECK(jsym_condition_squared(d0, d2));
    }
    CHECK(jsym_condition_squared(0.0, 0.5));
    CHECK_FALSE(jsym_condition_literal(0.2, 0.5));
    CHECK(jsym_condition_squared(0.2, 0.5));
}

TEST_CASE("invariant subspace and Schur quotient") {
    const Complex lambda = fixed_point_lambda(0.3, 0.2);
    const auto p = make_commutant_params(lambda, 0.5);
    Rng rng(47);
    CHECK(invariant_subspace_check(p, 50, rng) <= 1e-10);
    CHECK(schur_quotient_check(p) <= 1.0 + 1e-9);

    const auto zero = make_commutant_params(0.0, 0.6);
    CHECK(invariant_subspace_check(zero, 5, rng) <= 1e-15);
    CHECK(std::abs(schur_quotient_check(zero) - 0.6) <= 1e-14);
    CHECK(std::abs(schur_quotient_check(make_commutant_params(lambda, 1.0)) - 1.0) <= 1e-12);

    // h = 1 lies outside M: (W h)(lambda) = g(lambda).
    const auto w = commutant_symbols(make_commutant_params(lambda, 0.5, 2.0)).wco();
    CHECK(std::abs(evaluate(wco_apply(w, TruncatedSeries::constant(1.0, 128)), lambda) - 2.0) <= 1e-12);
}

TEST_CASE("common fixed point") {
    const auto phi = std::get<Lft>(jung_phi(0.3, 0.2));
    const Complex lambda = fixed_point_lambda(0.3, 0.2);
    CHECK(common_fixed_point_check(phi, commutant_symbols(make_commutant_params(lambda, 0.5)).map) <= 1e-12);
    CHECK(common_fixed_point_check(std::get<Lft>(jung_phi(0.0, 0.5)), Lft(0.7, 0.0, 0.0, 1.0)) == 0.0);
    CHECK(common_fixed_point_check(phi, Lft(0.5, 0.1, 0.0, 1.0)) > 1e-2);
}
