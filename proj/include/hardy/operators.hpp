#pragma once

#include <hardy/lft.hpp>
#include <hardy/series.hpp>

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hardy {

/// The weight c / (1 - beta z).
struct GeometricWeight {
    Complex c;
    Complex beta;

    Complex operator()(Complex z) const { return c / (1.0 - beta * z); }
};

using Weight = std::variant<GeometricWeight, TruncatedSeries>;

/// Symbols (f, phi) of the weighted composition operator h -> f (h o phi).
///
/// The weight is not identically zero, and phi maps the disc into itself
/// (a constant of modulus < 1 or an Lft passing is_selfmap).
class WcoSymbols {
public:
    WcoSymbols(Weight weight, SelfMap map);

    const Weight& weight() const noexcept { return weight_; }
    const SelfMap& map() const noexcept { return map_; }

    Complex weight_at(Complex z) const;
    Complex map_at(Complex z) const { return hardy::apply(map_, z); }
    TruncatedSeries weight_series(std::size_t order) const;
    TruncatedSeries map_series(std::size_t order) const;

private:
    Weight weight_;
    SelfMap map_;
};

/// N x N matrix of an operator in the monomial basis {1, z, ..., z^{N-1}}.
class OperatorMatrix {
public:
    explicit OperatorMatrix(std::size_t order);

    std::size_t order() const noexcept { return n_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[col * n_ + row]; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_[col * n_ + row]; }

    std::span<const Complex> column(std::size_t col) const { return {entries_.data() + col * n_, n_}; }

    std::vector<Complex> apply(std::span<const Complex> x) const;
    std::vector<Complex> apply_adjoint(std::span<const Complex> x) const;

private:
    std::size_t n_;
    std::vector<Complex> entries_; // column-major
};

/// Taylor coefficients of f (h o phi) to the order of h.
TruncatedSeries wco_apply(const WcoSymbols& symbols, const TruncatedSeries& h);

/// Column j holds the coefficients of f phi^j.
OperatorMatrix wco_matrix(const WcoSymbols& symbols, std::size_t order);

/// The adjoint sends K_w to scale * K_point.
struct KernelImage {
    Complex scale;
    Complex point;
};

KernelImage adjoint_on_kernel(const WcoSymbols& symbols, Complex w);

/// max |M_ij - M_ji|
double transpose_residual(const OperatorMatrix& m);
/// max |M_ij - conj(M_ji)|
double hermitian_residual(const OperatorMatrix& m);

struct SymmetryCheck {
    bool holds;
    double residual;
};

/// With respect to J, T = J T* J reads M = M^T in the monomial basis.
SymmetryCheck is_j_symmetric(const OperatorMatrix& m, double tol);

struct HermitianSymbolVerdict {
    bool holds;
    std::vector<std::string> failed_clauses;
};

/// Checks the Hermitian symbol form on H^2:
/// f = c / (1 - conj(a0) z) with c real, phi = a0 + a1 z / (1 - conj(a0) z)
/// with a1 real.
HermitianSymbolVerdict hermitian_symbol_check(const WcoSymbols& symbols);

/// max_{j <= K} || (M_S M_T - M_T M_S) e_j ||_2 at order N. Requires K <= N/4.
double commutator_residual(const WcoSymbols& s, const WcoSymbols& t, std::size_t max_degree,
                           std::size_t order);
double commutator_residual(const OperatorMatrix& s, const OperatorMatrix& t, std::size_t max_degree);

/// max_{j <= K} || (M^H M - M M^H) e_j ||_2 at order N. Requires K <= N/4.
double normality_residual(const WcoSymbols& symbols, std::size_t max_degree, std::size_t order);
double normality_residual(const OperatorMatrix& m, std::size_t max_degree);

} // namespace hardy
