#include <hardy/sampling.hpp>

#include <hardy/errors.hpp>
#include <hardy/lft.hpp>
#include <hardy/theory.hpp>

#include <cmath>
#include <numbers>

namespace hardy {

namespace {

constexpr int max_attempts = 100000;

} // namespace

double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex uniform_disc(Rng& rng, double radius) {
    const double r = radius * std::sqrt(uniform_real(rng, 0.0, 1.0));
    const double theta = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
    return std::polar(r, theta);
}

JungDraw draw_jung_base(Rng& rng, const BaseDistribution& dist) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Complex a0, a1;
        if (dist.real_only) {
            a0 = uniform_real(rng, -dist.a0_radius, dist.a0_radius);
            a1 = uniform_real(rng, -dist.a1_radius, dist.a1_radius);
        } else {
            a0 = uniform_disc(rng, dist.a0_radius);
            a1 = uniform_disc(rng, dist.a1_radius);
        }
        if (std::abs(a0) < dist.a0_min)
            continue;
        if (std::abs(a1 - 1.0) < 1e-6 || !jung_selfmap_check(a0, a1).holds)
            continue;
        Complex lambda;
        try {
            lambda = fixed_point_lambda(a0, a1);
        } catch (const Error&) {
            continue;
        }
        if (std::abs(lambda) > dist.lambda_max)
            continue;
        Complex b = uniform_disc(rng, dist.b_max);
        if (dist.real_only)
            b = uniform_real(rng, -dist.b_max, dist.b_max);
        if (std::abs(b) < dist.b_min)
            continue;
        return {a0, a1, b, lambda};
    }
    throw DomainError("draw_jung_base: rejection sampling exhausted");
}

Complex draw_alpha(Rng& rng, Complex lambda, const AlphaDistribution& dist) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const Complex alpha = dist.real_only ? Complex(uniform_real(rng, -dist.radius, dist.radius))
                                             : uniform_disc(rng, dist.radius);
        if (std::abs(lambda * lambda * alpha - 1.0) < 1e-3)
            continue;
        if (!dist.require_selfmap)
            return alpha;
        const auto p = make_commutant_params(lambda, alpha);
        if (std::abs(p.d1) > dist.d_max)
            continue;
        if (commutant_symbols(p).selfmap.holds)
            return alpha;
    }
    throw DomainError("draw_alpha: rejection sampling exhausted");
}

} // namespace hardy
