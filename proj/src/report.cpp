#include <hardy/report.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

namespace hardy {

bool CheckRecord::passed() const {
    if (skipped || comparison == Comparison::report_only)
        return true;
    if (!std::isfinite(residual))
        return false;
    return comparison == Comparison::at_most ? residual <= tolerance : residual > tolerance;
}

void VerificationReport::append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.passed(); });
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    s.total = checks_.size();
    for (const auto& c : checks_) {
        if (c.skipped)
            ++s.skipped;
        else if (c.passed())
            ++s.passed;
        else
            ++s.failed;
    }
    return s;
}

VerificationReport VerificationReport::filtered(std::string_view prefix) const {
    VerificationReport out(run_id_);
    for (const auto& c : checks_)
        if (std::string_view(c.name).starts_with(prefix))
            out.add(c);
    return out;
}

double VerificationReport::max_residual(std::string_view name) const {
    double worst = std::numeric_limits<double>::quiet_NaN();
    for (const auto& c : checks_) {
        if (c.name != name || c.skipped)
            continue;
        if (!std::isfinite(c.residual))
            return c.residual;
        worst = std::isnan(worst) ? c.residual : std::max(worst, c.residual);
    }
    return worst;
}

Json VerificationReport::checks_json() const {
    Json arr = Json::array();
    for (const auto& c : checks_) {
        Json j;
        j["name"] = c.name;
        j["reference"] = c.reference;
        j["residual"] = c.residual;
        j["tolerance"] = c.tolerance;
        j["comparison"] = to_string(c.comparison);
        j["passed"] = c.passed();
        j["skipped"] = c.skipped;
        j["order"] = c.order;
        j["params"] = to_json(c.params);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json VerificationReport::summary_json() const {
    const auto s = summary();
    Json j;
    j["total"] = s.total;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["skipped"] = s.skipped;
    j["all_passed"] = passed();
    return j;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ParamSet& params) {
    Json j = Json::object();
    auto put = [&](const char* key, const std::optional<Complex>& v) {
        if (v)
            j[key] = to_json(*v);
    };
    put("a0", params.a0);
    put("a1", params.a1);
    put("b", params.b);
    put("lambda", params.lambda);
    put("alpha", params.alpha);
    return j;
}

std::string_view to_string(Comparison comparison) {
    switch (comparison) {
    case Comparison::at_most: return "<=";
    case Comparison::above: return ">";
    case Comparison::report_only: return "report";
    }
    return "?";
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

} // namespace hardy
