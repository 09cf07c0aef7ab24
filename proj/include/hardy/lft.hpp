#pragma once

#include <hardy/series.hpp>

#include <array>
#include <string_view>
#include <variant>
#include <vector>

namespace hardy {

/// Tolerance band for |z| = 1: points within it are tagged boundary.
inline constexpr double boundary_tolerance = 1e-12;

/// The linear fractional map z -> (az + b) / (cz + d), ad - bc != 0.
///
/// The determinant is tested relative to the largest coefficient modulus
/// squared, so the invariant is unaffected by projective rescaling.
class Lft {
public:
    Lft(Complex a, Complex b, Complex c, Complex d);

    static Lft identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }
    std::array<Complex, 4> coefficients() const noexcept { return {a_, b_, c_, d_}; }
    Complex determinant() const noexcept { return a_ * d_ - b_ * c_; }

    Complex operator()(Complex z) const;

private:
    Complex a_, b_, c_, d_;
};

/// A constant self-map; the Jung form with a1 = 0 degenerates to this.
struct ConstantMap {
    Complex value;
};

using SelfMap = std::variant<Lft, ConstantMap>;

/// Coefficient tuple of either variant; a constant k is (0, k, 0, 1).
std::array<Complex, 4> coefficients(const SelfMap& map);

Complex apply(const Lft& map, Complex z);
Complex apply(const SelfMap& map, Complex z);

/// outer o inner, as the 2x2 coefficient product.
Lft compose(const Lft& outer, const Lft& inner);
Lft inverse(const Lft& map);

/// (ad - bc) / (cz + d)^2.
Complex derivative_at(const Lft& map, Complex z);
Complex derivative_at(const SelfMap& map, Complex z);

/// Max 2x2 minor of the two unit-normalized coefficient vectors; zero iff
/// the tuples agree up to a nonzero scalar.
double projective_distance(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v);
double projective_distance(const Lft& l, const Lft& m);

struct SelfMapVerdict {
    bool holds;
    /// ((|d|^2 - |c|^2) - (|b conj(d) - a conj(c)| + |ad - bc|)) / max(|c|^2, |d|^2)
    double margin;
    bool on_boundary;
};

/// Linear fractional self-map criterion
///     |b conj(d) - a conj(c)| + |ad - bc| <= |d|^2 - |c|^2.
SelfMapVerdict is_selfmap(const Lft& map);
SelfMapVerdict is_selfmap(const SelfMap& map);

/// phi(z) = a0 + a1 z / (1 - a0 z), stored as ((a1 - a0^2) z + a0) / (-a0 z + 1).
/// Returns ConstantMap{a0} when a1 vanishes.
SelfMap jung_phi(Complex a0, Complex a1);

struct JungSelfMapVerdict {
    bool holds;
    /// 1 - |a0|; must be positive.
    double a0_margin;
    /// (1 - |a1 - a0^2|^2) - 2 |a0 + conj(a0) (a1 - a0^2)|; must be >= 0.
    double inequality_margin;
};

/// Self-map criterion specialised to the Jung form:
/// |a0| < 1 and 2 |a0 + conj(a0)(a1 - a0^2)| <= 1 - |a1 - a0^2|^2.
JungSelfMapVerdict jung_selfmap_check(Complex a0, Complex a1);

enum class FixedPointLocation { interior, boundary, exterior };

struct FixedPoint {
    Complex value;
    FixedPointLocation location;
    Complex derivative;
};

struct FixedPointReport {
    std::vector<FixedPoint> points;
    /// The fixed-point quadratic has a double root (parabolic case).
    bool double_root = false;
};

/// Finite solutions of c z^2 + (d - a) z - b = 0. Throws HypothesisError for
/// the identity, where every point is fixed.
FixedPointReport fixed_points(const Lft& map);

/// The unique fixed point with |z| < 1 - boundary_tolerance.
Complex interior_fixed_point(const Lft& map);

enum class MapClass {
    identity,
    elliptic_automorphism,
    hyperbolic_automorphism,
    parabolic_automorphism,
    non_automorphism_with_interior_fp,
    non_automorphism_without_interior_fp,
};

std::string_view to_string(MapClass kind);
std::string_view to_string(FixedPointLocation location);

/// Disc automorphisms are exactly u (z - p) / (1 - conj(p) z), |u| = 1, |p| < 1.
bool is_automorphism(const Lft& map);

/// Requires a self-map; throws NotSelfMap otherwise.
MapClass classify(const Lft& map);

/// B(z) = (z - lambda) / (1 - conj(lambda) z). Requires |lambda| < 1.
Lft blaschke_factor(Complex lambda);

} // namespace hardy
