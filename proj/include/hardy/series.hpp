#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

inline constexpr std::size_t default_order = 128;

class Lft;

/// First N Taylor coefficients of an analytic function on the disc.
///
/// The Hardy space H^2 is modelled coefficientwise: the inner product is the
/// l2 pairing of coefficient sequences and the monomials z^n are orthonormal.
/// All coefficients are finite and the order is at least one.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries constant(Complex value, std::size_t order);
    static TruncatedSeries monomial(std::size_t power, std::size_t order, Complex scale = 1.0);

    std::size_t order() const noexcept { return coeffs_.size(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex& operator[](std::size_t n) const { return coeffs_.at(n); }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Complex> coeffs_;
};

// Zero-pads to a larger order. Binary operations never pad implicitly.
TruncatedSeries pad_to(const TruncatedSeries& s, std::size_t order);
TruncatedSeries truncate_to(const TruncatedSeries& s, std::size_t order);

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries subtract(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries scale(Complex factor, const TruncatedSeries& s);

/// Truncated Cauchy product: result_k = sum_{i+j=k} s_i t_j for k < N.
TruncatedSeries multiply(const TruncatedSeries& s, const TruncatedSeries& t);

/// Product with the Taylor series of a linear fractional map, in O(N).
///
/// Solves y (cz + d) = x (az + b) coefficientwise, which is exact for the
/// truncated product because both sides only couple index k to k-1.
TruncatedSeries multiply_by(const TruncatedSeries& s, const Lft& map);

/// Horner evaluation of the truncated sum.
Complex evaluate(const TruncatedSeries& s, Complex z);

/// <s, t> = sum s_n conj(t_n).
Complex inner_product(const TruncatedSeries& s, const TruncatedSeries& t);
double l2_norm(const TruncatedSeries& s);

/// The conjugation (Jf)(z) = conj(f(conj z)), i.e. coefficientwise conjugation.
TruncatedSeries conjugation_j(const TruncatedSeries& s);

/// c / (1 - beta z) expanded as c beta^n. Requires |beta| < 1.
TruncatedSeries geometric_series(Complex c, Complex beta, std::size_t order);

/// Reproducing kernel K_w(z) = 1 / (1 - conj(w) z). Requires |w| < 1.
TruncatedSeries cauchy_kernel(Complex w, std::size_t order);

/// Taylor expansion about 0 of (az+b)/(cz+d). Requires |d| > |c|.
TruncatedSeries taylor_series(const Lft& map, std::size_t order);

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) { return add(s, t); }
inline TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) { return subtract(s, t); }
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) { return multiply(s, t); }
inline TruncatedSeries operator*(Complex factor, const TruncatedSeries& s) { return scale(factor, s); }

} // namespace hardy
