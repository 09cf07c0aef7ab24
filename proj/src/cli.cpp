#include <hardy/cli.hpp>

#include <hardy/errors.hpp>
#include <hardy/lft.hpp>
#include <hardy/operators.hpp>
#include <hardy/report.hpp>
#include <hardy/suites.hpp>
#include <hardy/theory.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hardy {

namespace {

double parse_real(std::string_view text, std::string_view token) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value))
        throw ParseError("cannot parse complex number '" + std::string(token) + "'");
    return value;
}

} // namespace

Complex parse_complex(std::string_view token) {
    if (token.empty())
        throw ParseError("cannot parse complex number ''");
    if (token.back() != 'i')
        return {parse_real(token, token), 0.0};

    const std::string_view body = token.substr(0, token.size() - 1);
    // Split at the last sign that is neither leading nor part of an exponent.
    std::size_t split = 0;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re = body.substr(0, split);
    const std::string_view im = body.substr(split);
    double imag = 0.0;
    if (im.empty() || im == "+")
        imag = 1.0;
    else if (im == "-")
        imag = -1.0;
    else
        imag = parse_real(im, token);
    return {split == 0 ? 0.0 : parse_real(re, token), imag};
}

namespace {

struct GlobalOptions {
    std::size_t order = default_order;
    double tol_scale = 1.0;
    std::string json_out;
    std::uint64_t seed = 0;
};

constexpr const char* ref_jsym = "Jung-form symbols give a J-symmetric WCO";
constexpr const char* ref_commutant = "commutant symbols: phi o psi = psi o phi and g (f o psi) = f (g o phi)";
constexpr const char* ref_common_fp = "a commuting psi shares the interior fixed point of phi";
constexpr const char* ref_normal = "lambda real => commutant WCO is normal";
constexpr const char* ref_self_adjoint = "lambda and alpha real => commutant WCO is self-adjoint";
constexpr const char* ref_jsym_condition = "J-symmetry condition on (d0, d2) => commutant is J-symmetric";

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Deterministic run id: the command plus a hash of its arguments, --json-out excluded.
std::string make_run_id(std::string_view command, int argc, const char* const* argv) {
    std::string canonical;
    for (int k = 1; k < argc; ++k) {
        const std::string_view arg = argv[k];
        if (arg == "--json-out") {
            ++k;
            continue;
        }
        if (arg.starts_with("--json-out="))
            continue;
        canonical.append(arg);
        canonical.push_back('\x1f');
    }
    return std::string(command) + "-" + fnv1a_hex(canonical);
}

Json header(std::string_view command, const std::string& run_id) {
    Json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["run_id"] = run_id;
    doc["timestamp"] = utc_timestamp();
    return doc;
}

void emit(const Json& doc, const GlobalOptions& globals, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (globals.json_out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(globals.json_out, std::ios::binary);
    if (!file)
        throw DomainError("cannot open '" + globals.json_out + "' for writing");
    file << text;
}

Json map_json(const SelfMap& map) {
    Json j;
    if (const auto* k = std::get_if<ConstantMap>(&map)) {
        j["kind"] = "constant";
        j["value"] = to_json(k->value);
        return j;
    }
    j["kind"] = "lft";
    Json coeffs = Json::array();
    for (const Complex c : coefficients(map))
        coeffs.push_back(to_json(c));
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json weight_json(const GeometricWeight& w) {
    Json j;
    j["c"] = to_json(w.c);
    j["beta"] = to_json(w.beta);
    return j;
}

Json optional_json(const std::optional<Complex>& z) { return z ? to_json(*z) : Json(nullptr); }

Json flag_json(const PropertyFlag& flag) {
    Json j;
    j["state"] = to_string(flag.state);
    j["residual"] = flag.residual;
    j["tolerance"] = flag.tolerance;
    return j;
}

CheckRecord bounded(std::string name, const char* reference, double residual, double tol, std::size_t order,
                    const ParamSet& params, const GlobalOptions& globals) {
    return {std::move(name), reference, residual, tol * globals.tol_scale, Comparison::at_most, order, false, params};
}

void attach_report(Json& doc, const VerificationReport& report) {
    doc["checks"] = report.checks_json();
    doc["summary"] = report.summary_json();
}

int exit_for(const VerificationReport& report) { return report.passed() ? exit_pass : exit_verification_failure; }

int cmd_classify(const std::string& a0_text, const std::string& a1_text, const std::string& b_text,
                 const GlobalOptions& globals, const std::string& run_id, std::ostream& out) {
    const Complex a0 = parse_complex(a0_text);
    const Complex a1 = parse_complex(a1_text);
    const Complex b = parse_complex(b_text);
    if (b == Complex(0.0))
        throw DegenerateError("classify: b = 0 gives the zero operator");

    const ParamSet params{a0, a1, b, std::nullopt, std::nullopt};
    Json doc = header("classify", run_id);
    doc["parameters"] = {{"a0", to_json(a0)}, {"a1", to_json(a1)}, {"b", to_json(b)}, {"order", globals.order}};

    const auto jung = jung_selfmap_check(a0, a1);
    const SelfMap map = jung_phi(a0, a1);
    const auto selfmap = is_selfmap(map);

    Json results;
    results["jung_criterion"] = {{"holds", jung.holds},
                                 {"a0_margin", jung.a0_margin},
                                 {"inequality_margin", jung.inequality_margin}};
    results["selfmap"] = {{"holds", selfmap.holds}, {"margin", selfmap.margin}, {"on_boundary", selfmap.on_boundary}};
    results["map"] = map_json(map);

    Json fixed = Json::array();
    std::optional<Complex> lambda;
    Json kind = nullptr;
    if (const auto* k = std::get_if<ConstantMap>(&map)) {
        if (selfmap.holds) {
            kind = "constant";
            lambda = k->value;
        }
    } else if (selfmap.holds) {
        const auto& phi = std::get<Lft>(map);
        const MapClass cls = classify(phi);
        kind = to_string(cls);
        if (cls != MapClass::identity) {
            for (const auto& p : fixed_points(phi).points)
                fixed.push_back({{"value", to_json(p.value)},
                                 {"location", to_string(p.location)},
                                 {"derivative", to_json(p.derivative)}});
            if (cls == MapClass::elliptic_automorphism || cls == MapClass::non_automorphism_with_interior_fp)
                lambda = interior_fixed_point(phi);
        }
    }
    results["classification"] = kind;
    results["fixed_points"] = std::move(fixed);
    results["lambda"] = optional_json(lambda);

    VerificationReport report(run_id);
    if (selfmap.holds) {
        const WcoSymbols symbols(GeometricWeight{b, a0}, map);
        const auto hermitian = hermitian_symbol_check(symbols);
        results["hermitian"] = {{"holds", hermitian.holds}, {"failed_clauses", hermitian.failed_clauses}};
        const auto m = wco_matrix(symbols, globals.order);
        const double residual = transpose_residual(m);
        results["j_symmetric"] = {{"holds", residual <= 1e-12 * globals.tol_scale}, {"residual", residual}};
        report.add(bounded("classify.j_symmetry", ref_jsym, residual, 1e-12, globals.order, params, globals));
    } else {
        results["hermitian"] = nullptr;
        results["j_symmetric"] = nullptr;
    }
    doc["results"] = std::move(results);
    attach_report(doc, report);
    emit(doc, globals, out);
    return exit_for(report);
}

struct CommutantRun {
    Complex lambda;
    WcoSymbols base;
    CommutantParams params;
    SymbolPair pair;
};

CommutantRun build_commutant(Complex a0, Complex a1, Complex b, Complex alpha, Complex g_lambda) {
    if (b == Complex(0.0))
        throw DegenerateError("b = 0 gives the zero operator");
    const Complex lambda = fixed_point_lambda(a0, a1);
    auto base = jung_symbols(a0, a1, b);
    const auto params = make_commutant_params(lambda, alpha, g_lambda);
    auto pair = commutant_symbols(params);
    return {lambda, std::move(base), params, std::move(pair)};
}

int cmd_commutant(const std::string& a0_text, const std::string& a1_text, const std::string& b_text,
                  const std::string& alpha_text, const std::string& g_text, const GlobalOptions& globals,
                  const std::string& run_id, std::ostream& out) {
    const Complex a0 = parse_complex(a0_text);
    const Complex a1 = parse_complex(a1_text);
    const Complex b = parse_complex(b_text);
    const Complex alpha = parse_complex(alpha_text);
    const Complex g_lambda = parse_complex(g_text);

    const auto run = build_commutant(a0, a1, b, alpha, g_lambda);
    const auto& p = run.params;
    const ParamSet params{a0, a1, b, run.lambda, alpha};

    Json doc = header("commutant", run_id);
    doc["parameters"] = {{"a0", to_json(a0)},       {"a1", to_json(a1)},       {"b", to_json(b)},
                         {"alpha", to_json(alpha)}, {"g_lambda", to_json(g_lambda)}, {"order", globals.order}};

    Json results;
    results["lambda"] = to_json(run.lambda);
    results["d0"] = to_json(p.d0);
    results["d1"] = to_json(p.d1);
    results["d2"] = to_json(p.d2);
    results["d3"] = to_json(p.d3);
    results["psi"] = map_json(run.pair.map);
    results["g"] = weight_json(run.pair.weight);
    results["psi_selfmap"] = {{"holds", run.pair.selfmap.holds},
                              {"margin", run.pair.selfmap.margin},
                              {"on_boundary", run.pair.selfmap.on_boundary}};

    VerificationReport report(run_id);
    const auto& f = std::get<GeometricWeight>(run.base.weight());
    const auto res = weight_intertwining_residual(f, run.base.map(), run.pair.weight, run.pair.map);
    report.add(bounded("commutant.map_pointwise", ref_commutant, res.map_pointwise, 1e-10, 0, params, globals));
    report.add(bounded("commutant.weight_pointwise", ref_commutant, res.weight_pointwise, 1e-10, 0, params, globals));
    report.add(bounded("commutant.map_exact", ref_commutant, res.map_exact, 1e-12, 0, params, globals));
    report.add(bounded("commutant.weight_exact", ref_commutant, res.weight_exact, 1e-12, 0, params, globals));
    report.add(bounded("commutant.common_fixed_point", ref_common_fp,
                       std::abs(hardy::apply(run.pair.map, run.lambda) - run.lambda), 1e-10, 0, params, globals));

    if (run.pair.selfmap.holds) {
        constexpr std::size_t degree = 8;
        report.add(bounded("commutant.matrix", ref_commutant,
                           commutator_residual(run.base, run.pair.wco(), degree, globals.order), 1e-8, globals.order,
                           params, globals));
        ClassificationOptions copts;
        copts.order = globals.order;
        copts.max_degree = degree;
        copts.normal_tolerance *= globals.tol_scale;
        copts.matrix_tolerance *= globals.tol_scale;
        const auto c = classify_commutant(p, copts);
        results["classification"] = {{"normal", flag_json(c.normal)},
                                     {"self_adjoint", flag_json(c.self_adjoint)},
                                     {"j_symmetric", flag_json(c.j_symmetric)},
                                     {"jsym_condition_literal", c.jsym_condition_literal},
                                     {"jsym_condition_squared", c.jsym_condition_squared},
                                     {"variants_disagree", c.variants_disagree()}};
        const auto flag_check = [&](const char* name, const char* reference, const PropertyFlag& flag) {
            CheckRecord r{name, reference, flag.residual, flag.tolerance, Comparison::at_most, globals.order,
                          !flag.asserted(), params};
            report.add(std::move(r));
        };
        flag_check("corollary.normal", ref_normal, c.normal);
        flag_check("corollary.self_adjoint", ref_self_adjoint, c.self_adjoint);
        flag_check("corollary.j_symmetric", ref_jsym_condition, c.j_symmetric);
    } else {
        results["classification"] = nullptr;
    }

    doc["results"] = std::move(results);
    attach_report(doc, report);
    emit(doc, globals, out);
    return exit_for(report);
}

int cmd_verify(const std::string& suite, std::size_t trials, const GlobalOptions& globals, const std::string& run_id,
               std::ostream& out, std::ostream& err) {
    SuiteOptions options;
    options.trials = trials;
    options.seed = globals.seed;
    options.order = globals.order;
    options.tol_scale = globals.tol_scale;
    const auto suite_report = run_suite(suite, options);

    VerificationReport report(run_id);
    report.append(suite_report);

    Json doc = header("verify", run_id);
    doc["parameters"] = {{"suite", suite},
                         {"trials", trials},
                         {"seed", globals.seed},
                         {"order", globals.order},
                         {"tol_scale", globals.tol_scale}};

    // Per check name, in order of first appearance.
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (const auto& r : report.checks())
        if (index.emplace(r.name, names.size()).second)
            names.push_back(r.name);
    Json groups = Json::array();
    for (const auto& name : names) {
        const auto sub = report.filtered(name);
        std::size_t count = 0, failed = 0, skipped = 0;
        double tol = 0.0;
        std::string comparison;
        for (const auto& r : sub.checks()) {
            if (r.name != name)
                continue;
            ++count;
            skipped += r.skipped;
            failed += (!r.skipped && !r.passed());
            tol = r.tolerance;
            comparison = to_string(r.comparison);
        }
        const double worst = report.max_residual(name);
        groups.push_back({{"name", name},
                          {"count", count},
                          {"failed", failed},
                          {"skipped", skipped},
                          {"max_residual", std::isfinite(worst) ? Json(worst) : Json(nullptr)},
                          {"tolerance", tol},
                          {"comparison", comparison}});
    }
    doc["results"] = {{"groups", std::move(groups)}};
    attach_report(doc, report);
    emit(doc, globals, out);

    const auto s = report.summary();
    err << "verify " << suite << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
        << " skipped\n";
    return exit_for(report);
}

struct Axis {
    double lo = 0.0, hi = 0.0;
    std::size_t steps = 1;

    double at(std::size_t k) const {
        return steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
};

Axis parse_axis(std::string_view text, std::string_view grid) {
    const auto bad = [&] { return ParseError("cannot parse alpha grid axis '" + std::string(text) + "' in '" +
                                             std::string(grid) + "'"); };
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
        throw bad();
    Axis axis;
    try {
        axis.lo = parse_real(text.substr(0, c1), text);
        axis.hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1), text);
    } catch (const ParseError&) {
        throw bad();
    }
    const auto steps_text = text.substr(c2 + 1);
    const auto [end, ec] = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), axis.steps);
    if (steps_text.empty() || ec != std::errc() || end != steps_text.data() + steps_text.size() || axis.steps == 0)
        throw bad();
    return axis;
}

std::string csv_number(double x) {
    if (std::isnan(x))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

constexpr const char* sweep_header = "alpha_re,alpha_im,selfmap_flag,d0_re,d0_im,normal_resid,selfadj_resid,"
                                     "jsym_resid,corollary3_literal,corollary3_squared";

int cmd_sweep(const std::string& a0_text, const std::string& a1_text, const std::string& b_text,
              const std::string& g_text, const std::string& grid, const std::string& out_path,
              const GlobalOptions& globals, std::ostream& out, std::ostream& err) {
    const Complex a0 = parse_complex(a0_text);
    const Complex a1 = parse_complex(a1_text);
    const Complex b = parse_complex(b_text);
    const Complex g_lambda = parse_complex(g_text);
    const auto comma = grid.find(',');
    if (comma == std::string::npos)
        throw ParseError("alpha grid '" + grid + "' needs the form re0:re1:steps,im0:im1:steps");
    const Axis re = parse_axis(std::string_view(grid).substr(0, comma), grid);
    const Axis im = parse_axis(std::string_view(grid).substr(comma + 1), grid);

    if (b == Complex(0.0))
        throw DegenerateError("b = 0 gives the zero operator");
    const Complex lambda = fixed_point_lambda(a0, a1);
    (void)jung_symbols(a0, a1, b);

    ClassificationOptions copts;
    copts.order = globals.order;
    copts.normal_tolerance *= globals.tol_scale;
    copts.matrix_tolerance *= globals.tol_scale;

    std::ostringstream csv;
    csv << sweep_header << '\n';
    std::size_t rows = 0;
    for (std::size_t i = 0; i < re.steps; ++i) {
        for (std::size_t k = 0; k < im.steps; ++k) {
            const Complex alpha{re.at(i), im.at(k)};
            const auto p = make_commutant_params(lambda, alpha, g_lambda);
            const auto pair = commutant_symbols(p);
            const double nan = std::nan("");
            double normal = nan, selfadj = nan, jsym = nan;
            if (pair.selfmap.holds) {
                const auto c = classify_commutant(p, copts);
                normal = c.normal.residual;
                selfadj = c.self_adjoint.residual;
                jsym = c.j_symmetric.residual;
            }
            csv << csv_number(alpha.real()) << ',' << csv_number(alpha.imag()) << ',' << (pair.selfmap.holds ? 1 : 0)
                << ',' << csv_number(p.d0.real()) << ',' << csv_number(p.d0.imag()) << ',' << csv_number(normal)
                << ',' << csv_number(selfadj) << ',' << csv_number(jsym) << ','
                << (jsym_condition_literal(p.d0, p.d2) ? 1 : 0) << ','
                << (jsym_condition_squared(p.d0, p.d2) ? 1 : 0) << '\n';
            ++rows;
        }
    }

    if (out_path == "-") {
        out << csv.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw DomainError("cannot open '" + out_path + "' for writing");
        file << csv.str();
    }
    err << "sweep: " << rows << " rows, lambda = " << lambda.real() << (lambda.imag() < 0 ? "" : "+")
        << lambda.imag() << "i\n";
    return exit_pass;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted composition operators on the Hardy space: classification, commutants, verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions globals;
    app.add_option("--order", globals.order, "Truncation order N")->check(CLI::Range(32, 4096));
    app.add_option("--tol-scale", globals.tol_scale, "Multiplier applied to upper-bound tolerances")
        ->check(CLI::PositiveNumber);
    app.add_option("--json-out", globals.json_out, "Write the JSON report to PATH instead of stdout");
    app.add_option("--seed", globals.seed, "Seed for randomized suites");

    std::string a0, a1, b = "1", alpha, g_lambda = "1", suite, grid, csv_out;
    std::size_t trials = 50;

    auto* classify_cmd = app.add_subcommand("classify", "Classify the Jung-form map and its operator");
    classify_cmd->add_option("--a0", a0, "a0 (complex, re+im i)")->required();
    classify_cmd->add_option("--a1", a1, "a1 (complex)")->required();
    classify_cmd->add_option("--b", b, "weight numerator b (complex)")->capture_default_str();

    auto* commutant_cmd = app.add_subcommand("commutant", "Build the commutant symbols for one alpha");
    commutant_cmd->add_option("--a0", a0, "a0 (complex)")->required();
    commutant_cmd->add_option("--a1", a1, "a1 (complex)")->required();
    commutant_cmd->add_option("--b", b, "weight numerator b (complex)")->required();
    commutant_cmd->add_option("--alpha", alpha, "free parameter alpha (complex)")->required();
    commutant_cmd->add_option("--g-lambda", g_lambda, "g(lambda) (complex)")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run a randomized verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--trials", trials, "Random draws per group")->capture_default_str()->check(CLI::Range(1, 1000000));

    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate commutant classification over an alpha grid");
    sweep_cmd->add_option("--a0", a0, "a0 (complex)")->required();
    sweep_cmd->add_option("--a1", a1, "a1 (complex)")->required();
    sweep_cmd->add_option("--b", b, "weight numerator b (complex)")->required();
    sweep_cmd->add_option("--g-lambda", g_lambda, "g(lambda) (complex)")->capture_default_str();
    sweep_cmd->add_option("--alpha-grid", grid, "re0:re1:steps,im0:im1:steps")->required();
    sweep_cmd->add_option("--out", csv_out, "CSV path, '-' for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(a0, a1, b, globals, make_run_id("classify", argc, argv), out);
        if (*commutant_cmd)
            return cmd_commutant(a0, a1, b, alpha, g_lambda, globals, make_run_id("commutant", argc, argv), out);
        if (*verify_cmd)
            return cmd_verify(suite, trials, globals, make_run_id("verify", argc, argv), out, err);
        return cmd_sweep(a0, a1, b, g_lambda, grid, csv_out, globals, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const HypothesisError& e) {
        err << "hypothesis violated: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (const NotSelfMap& e) {
        err << "hypothesis violated: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (const DegenerateError& e) {
        err << "degenerate parameters: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace hardy
