#pragma once

#include <hardy/series.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

inline constexpr int schema_version = 1;

using Json = nlohmann::ordered_json;

/// Parameter provenance attached to a check.
struct ParamSet {
    std::optional<Complex> a0, a1, b, lambda, alpha;
};

enum class Comparison {
    at_most,     // residual <= tolerance
    above,       // residual > tolerance (negative controls)
    report_only, // recorded, never fails
};

struct CheckRecord {
    std::string name;
    std::string reference;
    double residual = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::at_most;
    std::size_t order = 0;
    bool skipped = false;
    ParamSet params;

    bool passed() const;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

/// Ordered record of checks; the suite passes iff every non-skipped check passes.
class VerificationReport {
public:
    explicit VerificationReport(std::string run_id) : run_id_(std::move(run_id)) {}

    const std::string& run_id() const noexcept { return run_id_; }
    const std::vector<CheckRecord>& checks() const noexcept { return checks_; }

    void add(CheckRecord record) { checks_.push_back(std::move(record)); }
    void append(const VerificationReport& other);

    bool passed() const;
    ReportSummary summary() const;

    /// Restriction to the checks whose name starts with `prefix`.
    VerificationReport filtered(std::string_view prefix) const;
    /// Largest finite residual among checks named exactly `name` (NaN if none).
    double max_residual(std::string_view name) const;

    Json checks_json() const;
    Json summary_json() const;

private:
    std::string run_id_;
    std::vector<CheckRecord> checks_;
};

Json to_json(Complex z);
Json to_json(const ParamSet& params);
std::string_view to_string(Comparison comparison);

/// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

} // namespace hardy
