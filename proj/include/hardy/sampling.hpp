#pragma once

#include <hardy/series.hpp>

#include <cstdint>
#include <random>

namespace hardy {

using Rng = std::mt19937_64;

/// Uniform point in the disc |z| <= radius.
Complex uniform_disc(Rng& rng, double radius);
double uniform_real(Rng& rng, double lo, double hi);

struct JungDraw {
    Complex a0, a1, b, lambda;
};

/// Parameter distribution for random J-symmetric bases.
///
/// a0 is uniform on |a0| <= a0_radius, a1 uniform on |a1| <= a1_radius; pairs
/// are rejected unless the Jung self-map criterion holds, a1 != 1, phi has an
/// interior fixed point, phi is not an elliptic automorphism and
/// |lambda| <= lambda_max and |a0| >= a0_min. With real_only, a0 and a1 are drawn on the real
/// segments instead, which makes lambda real.
struct BaseDistribution {
    double a0_radius = 0.45;
    double a0_min = 0.0;
    double a1_radius = 1.0;
    double lambda_max = 0.8;
    double b_min = 0.1;
    double b_max = 1.5;
    bool real_only = false;
};

JungDraw draw_jung_base(Rng& rng, const BaseDistribution& dist = {});

/// alpha uniform on |alpha| <= radius (or the real segment), rejected unless
/// lambda^2 alpha stays away from 1 and, when require_selfmap is set, psi maps
/// the disc into itself with |d1| <= d_max.
struct AlphaDistribution {
    double radius = 1.5;
    double d_max = 0.8;
    bool require_selfmap = true;
    bool real_only = false;
};

Complex draw_alpha(Rng& rng, Complex lambda, const AlphaDistribution& dist = {});

} // namespace hardy
