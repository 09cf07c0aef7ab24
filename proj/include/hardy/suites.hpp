#pragma once

#include <hardy/report.hpp>
#include <hardy/series.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

/// Randomised verification suites. Every group draws from its own generator
/// seeded by (seed, group id), so a group's draws do not depend on which
/// other groups run alongside it.
struct SuiteOptions {
    std::size_t trials = 50;
    std::uint64_t seed = 0;
    std::size_t order = default_order;
    double tol_scale = 1.0;
};

// Each group appends its check records to `report`. Check names are prefixed
// by the group name ("jsym.", "hermitian.", ...).

/// J-symmetry of the truncated Jung matrix at N = 64.
void check_j_symmetry(VerificationReport& report, const SuiteOptions& options);
/// Hermitian symbol form at N = 64 plus the complex-c negative control.
void check_hermitian_symbols(VerificationReport& report, const SuiteOptions& options);
/// Commutant theorem: pointwise, exact and matrix checks, negative control,
/// common fixed point and the alpha = 1 collapse.
void check_commutant_theorem(VerificationReport& report, const SuiteOptions& options);
/// lambda = 0 branch: diagonal matrices commute exactly.
void check_lambda_zero_branch(VerificationReport& report, const SuiteOptions& options);
/// Both coefficient relations and the alpha = 1 collapse.
void check_coefficient_relations(VerificationReport& report, const SuiteOptions& options);
/// The reality equivalence for lambda.
void check_reality_equivalence(VerificationReport& report, const SuiteOptions& options);
/// Eigenvectors g_j, j = 0..5.
void check_eigenvectors(VerificationReport& report, const SuiteOptions& options);
/// Normal / self-adjoint / J-symmetric consequences for the commutant.
void check_classification(VerificationReport& report, const SuiteOptions& options);
/// Invariant subspace {h : h(lambda) = 0} and the Schur quotient bound.
void check_invariant_subspace(VerificationReport& report, const SuiteOptions& options);
/// Self-adjoint-base commutant formulas against the general ones at real lambda.
void check_ek_agreement(VerificationReport& report, const SuiteOptions& options);

/// jsym, commutant, eigen, relations, corollary, all.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
VerificationReport run_suite(std::string_view suite, const SuiteOptions& options);

} // namespace hardy
