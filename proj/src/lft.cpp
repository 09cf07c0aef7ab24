#include <hardy/lft.hpp>

#include <hardy/errors.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace hardy {

namespace {

constexpr double determinant_tolerance = 1e-14;
constexpr double selfmap_tolerance = 1e-12;
constexpr double automorphism_tolerance = 1e-12;
constexpr double double_root_tolerance = 1e-12;

double max_modulus(const std::array<Complex, 4>& v) {
    double m = 0.0;
    for (const auto& x : v)
        m = std::max(m, std::abs(x));
    return m;
}

FixedPointLocation locate(Complex z) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= boundary_tolerance)
        return FixedPointLocation::boundary;
    return r < 1.0 ? FixedPointLocation::interior : FixedPointLocation::exterior;
}

FixedPoint make_point(const Lft& map, Complex z) {
    return {z, locate(z), derivative_at(map, z)};
}

bool is_identity(const Lft& map, double tol) {
    return projective_distance(map, Lft::identity()) <= tol;
}

} // namespace

Lft::Lft(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    for (const auto& x : {a, b, c, d})
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw DomainError("Lft: non-finite coefficient");
    const double scale = max_modulus({a, b, c, d});
    if (!(std::abs(determinant()) > determinant_tolerance * scale * scale))
        throw DegenerateError("Lft: determinant ad - bc vanishes");
}

Complex Lft::operator()(Complex z) const {
    const Complex den = c_ * z + d_;
    if (std::abs(den) < 1e-300)
        throw PoleError("Lft: evaluation at the pole");
    return (a_ * z + b_) / den;
}

std::array<Complex, 4> coefficients(const SelfMap& map) {
    if (const auto* l = std::get_if<Lft>(&map))
        return l->coefficients();
    return {0.0, std::get<ConstantMap>(map).value, 0.0, 1.0};
}

Complex apply(const Lft& map, Complex z) { return map(z); }

Complex apply(const SelfMap& map, Complex z) {
    if (const auto* l = std::get_if<Lft>(&map))
        return (*l)(z);
    return std::get<ConstantMap>(map).value;
}

Lft compose(const Lft& outer, const Lft& inner) {
    const auto& o = outer;
    const auto& i = inner;
    return {o.a() * i.a() + o.b() * i.c(), o.a() * i.b() + o.b() * i.d(),
            o.c() * i.a() + o.d() * i.c(), o.c() * i.b() + o.d() * i.d()};
}

Lft inverse(const Lft& map) { return {map.d(), -map.b(), -map.c(), map.a()}; }

Complex derivative_at(const Lft& map, Complex z) {
    const Complex den = map.c() * z + map.d();
    if (std::abs(den) < 1e-300)
        throw PoleError("derivative_at: evaluation at the pole");
    return map.determinant() / (den * den);
}

Complex derivative_at(const SelfMap& map, Complex z) {
    if (const auto* l = std::get_if<Lft>(&map))
        return derivative_at(*l, z);
    return 0.0;
}

double projective_distance(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v) {
    auto unit = [](std::array<Complex, 4> w) {
        double n = 0.0;
        for (const auto& x : w)
            n += std::norm(x);
        n = std::sqrt(n);
        for (auto& x : w)
            x /= n;
        return w;
    };
    const auto a = unit(u);
    const auto b = unit(v);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            worst = std::max(worst, std::abs(a[i] * b[j] - a[j] * b[i]));
    return worst;
}

double projective_distance(const Lft& l, const Lft& m) {
    return projective_distance(l.coefficients(), m.coefficients());
}

SelfMapVerdict is_selfmap(const Lft& map) {
    const Complex a = map.a(), b = map.b(), c = map.c(), d = map.d();
    const double rhs = std::norm(d) - std::norm(c);
    const double lhs = std::abs(b * std::conj(d) - a * std::conj(c)) + std::abs(a * d - b * c);
    const double margin = (rhs - lhs) / std::max(std::norm(c), std::norm(d));
    return {margin >= -selfmap_tolerance, margin, std::abs(margin) <= selfmap_tolerance};
}

SelfMapVerdict is_selfmap(const SelfMap& map) {
    if (const auto* l = std::get_if<Lft>(&map))
        return is_selfmap(*l);
    const double margin = 1.0 - std::abs(std::get<ConstantMap>(map).value);
    return {margin > 0.0, margin, std::abs(margin) <= selfmap_tolerance};
}

SelfMap jung_phi(Complex a0, Complex a1) {
    const Complex s = a1 - a0 * a0;
    const double scale = std::max({1.0, std::abs(a0), std::abs(s)});
    if (std::abs(a1) <= determinant_tolerance * scale * scale)
        return ConstantMap{a0};
    return Lft(s, a0, -a0, 1.0);
}

JungSelfMapVerdict jung_selfmap_check(Complex a0, Complex a1) {
    const Complex s = a1 - a0 * a0;
    const double a0_margin = 1.0 - std::abs(a0);
    const double inequality_margin = (1.0 - std::norm(s)) - 2.0 * std::abs(a0 + std::conj(a0) * s);
    return {a0_margin > 0.0 && inequality_margin >= -selfmap_tolerance, a0_margin, inequality_margin};
}

FixedPointReport fixed_points(const Lft& map) {
    if (is_identity(map, determinant_tolerance))
        throw HypothesisError("fixed_points: identity map, every point is fixed");

    const Complex qa = map.c();
    const Complex qb = map.d() - map.a();
    const Complex qc = -map.b();
    const double scale = max_modulus(map.coefficients());

    FixedPointReport report;
    if (std::abs(qa) <= determinant_tolerance * scale) {
        // Affine map: the other fixed point is at infinity.
        if (std::abs(qb) <= determinant_tolerance * scale)
            return report;
        report.points.push_back(make_point(map, -qc / qb));
        return report;
    }

    const Complex disc = qb * qb - 4.0 * qa * qc;
    Complex root = std::sqrt(disc);
    if ((std::conj(qb) * root).real() < 0.0)
        root = -root;
    const Complex q = -0.5 * (qb + root);

    const double disc_scale = std::max(std::norm(qb), std::abs(4.0 * qa * qc));
    if (std::abs(disc) <= double_root_tolerance * disc_scale) {
        report.double_root = true;
        report.points.push_back(make_point(map, -qb / (2.0 * qa)));
        return report;
    }
    if (q == Complex{}) {
        report.points.push_back(make_point(map, 0.0));
        return report;
    }
    report.points.push_back(make_point(map, q / qa));
    report.points.push_back(make_point(map, qc / q));
    return report;
}

Complex interior_fixed_point(const Lft& map) {
    const auto report = fixed_points(map);
    std::vector<Complex> inside;
    for (const auto& p : report.points)
        if (p.location == FixedPointLocation::interior)
            inside.push_back(p.value);
    if (inside.empty())
        throw NoInteriorFixedPoint("no interior fixed point");
    if (inside.size() > 1)
        throw HypothesisError("two interior fixed points; the map is not a self-map of the disc");
    return inside.front();
}

bool is_automorphism(const Lft& map) {
    if (std::abs(map.d()) <= std::abs(map.c()))
        return false;
    const Complex u = map.a() / map.d();
    const Complex p = -std::conj(map.c() / map.d());
    const Complex shifted = map.b() / map.d() + u * p;
    return std::abs(p) < 1.0 && std::abs(std::abs(u) - 1.0) <= automorphism_tolerance
           && std::abs(shifted) <= automorphism_tolerance;
}

MapClass classify(const Lft& map) {
    const auto verdict = is_selfmap(map);
    if (!verdict.holds)
        throw NotSelfMap("classify: map does not send the disc into itself (margin "
                         + std::to_string(verdict.margin) + ")");
    if (is_identity(map, automorphism_tolerance))
        return MapClass::identity;

    const auto report = fixed_points(map);
    const auto count = [&](FixedPointLocation where) {
        return std::count_if(report.points.begin(), report.points.end(),
                             [&](const FixedPoint& p) { return p.location == where; });
    };
    const bool interior = count(FixedPointLocation::interior) > 0;

    if (!is_automorphism(map))
        return interior ? MapClass::non_automorphism_with_interior_fp
                        : MapClass::non_automorphism_without_interior_fp;
    if (interior)
        return MapClass::elliptic_automorphism;
    if (report.double_root || count(FixedPointLocation::boundary) == 1)
        return MapClass::parabolic_automorphism;
    return MapClass::hyperbolic_automorphism;
}

Lft blaschke_factor(Complex lambda) {
    if (!(std::abs(lambda) < 1.0))
        throw DomainError("blaschke_factor: |lambda| >= 1");
    return {1.0, -lambda, -std::conj(lambda), 1.0};
}

std::string_view to_string(MapClass kind) {
    switch (kind) {
    case MapClass::identity: return "identity";
    case MapClass::elliptic_automorphism: return "elliptic-automorphism";
    case MapClass::hyperbolic_automorphism: return "hyperbolic-automorphism";
    case MapClass::parabolic_automorphism: return "parabolic-automorphism";
    case MapClass::non_automorphism_with_interior_fp: return "non-automorphism-with-interior-fp";
    case MapClass::non_automorphism_without_interior_fp: return "non-automorphism-without-interior-fp";
    }
    return "unknown";
}

std::string_view to_string(FixedPointLocation location) {
    switch (location) {
    case FixedPointLocation::interior: return "interior";
    case FixedPointLocation::boundary: return "boundary";
    case FixedPointLocation::exterior: return "exterior";
    }
    return "unknown";
}

} // namespace hardy
