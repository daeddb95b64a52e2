// quatbound: bounds and zero sets for right quaternionic polynomials.
//
// Subcommands:
//   bounds <file> [--json] [--t4-variant theorem|matrix]
//   zeros  <file> [--check] [--json]
//   verify --degrees 3,4,5 --trials N --seed S --max-coeff M [--slack E]
//
// Exit codes: 0 success, 1 mathematical violation or numerical failure,
// 2 usage/input error. QUATBOUND_TOL overrides the oracle residual
// threshold factor.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatbound/bounds.hpp"
#include "quatbound/json_io.hpp"
#include "quatbound/verify.hpp"
#include "quatbound/zeros.hpp"

namespace {

using namespace quatbound;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string format_value(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

std::string format_quaternion(const Quaternion& q) {
    std::ostringstream out;
    out << std::setprecision(12) << "[" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << "]";
    return out.str();
}

OracleOptions oracle_options_from_env() {
    OracleOptions opts;
    if (const char* raw = std::getenv("QUATBOUND_TOL")) {
        char* end = nullptr;
        const double value = std::strtod(raw, &end);
        if (end == raw || *end != '\0' || !(value > 0.0))
            throw SchemaError("QUATBOUND_TOL: expected a positive number, got '" + std::string(raw) + "'");
        opts.residual_factor = value;
    }
    return opts;
}

void print_bounds_table(const BoundReport& report, std::ostream& out) {
    out << "degree        " << report.degree << "\n";
    out << "origin_zeros  " << report.origin_zeros << "\n";
    out << std::left << std::setw(14) << "bound" << std::setw(22) << "value"
        << "note" << "\n";
    for (const auto& [name, value] : report.entries) {
        out << std::left << std::setw(14) << name;
        if (value.applicable)
            out << std::setw(22) << format_value(value.value) << value.note;
        else
            out << std::setw(22) << ("inapplicable(" + value.reason + ")");
        out << "\n";
    }
    out << std::left << std::setw(14) << "best";
    if (!std::isnan(report.best))
        out << std::setw(22) << format_value(report.best) << "from " << report.best_source;
    else
        out << std::setw(22) << "none" << "no applicable bound";
    out << "\n";
}

int run_bounds(const std::string& path, bool as_json, const std::string& t4_variant) {
    const T4Variant variant = t4_variant == "theorem" ? T4Variant::Theorem : T4Variant::Matrix;
    const RightPolynomial poly = parse_polynomial_file(path);
    const BoundReport report = best_bound(poly, variant);
    if (as_json)
        std::cout << to_json(report).dump(2) << "\n";
    else
        print_bounds_table(report, std::cout);
    return kExitOk;
}

int run_zeros(const std::string& path, bool check, bool as_json) {
    const OracleOptions opts = oracle_options_from_env();
    const RightPolynomial poly = parse_polynomial_file(path);
    const ZeroSet zeros = find_zeros(poly, opts);

    std::vector<std::string> check_failures;
    if (check) {
        const BoundReport report = best_bound(poly);
        constexpr double slack = 1e-9;
        for (const auto& [name, value] : report.entries) {
            if (!value.applicable || name == "t4_theorem") continue;
            for (const ZeroClass& zc : zeros.classes) {
                if (zc.kind == ZeroKind::None) continue;
                if (zc.modulus() > value.value * (1.0 + slack))
                    check_failures.push_back("|z|=" + format_value(zc.modulus()) + " exceeds " + name + "=" +
                                             format_value(value.value));
            }
        }
    }

    if (as_json) {
        Json out = to_json(zeros);
        if (check) {
            Json failures = Json::array();
            for (const std::string& f : check_failures) failures.push_back(f);
            out["check"] = Json{{"all_dominate", check_failures.empty()}, {"violations", std::move(failures)}};
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(11) << "kind" << std::setw(22) << "s" << std::setw(22) << "t"
                  << std::setw(34) << "witness" << "residual" << "\n";
        for (const ZeroClass& zc : zeros.classes)
            std::cout << std::left << std::setw(11) << to_string(zc.kind) << std::setw(22) << format_value(zc.s)
                      << std::setw(22) << format_value(zc.t) << std::setw(34) << format_quaternion(zc.witness)
                      << format_value(zc.residual) << "\n";
        std::cout << "max_modulus " << format_value(zeros.max_modulus) << "\n";
        if (check) {
            for (const std::string& f : check_failures) std::cout << "violation: " << f << "\n";
            if (check_failures.empty()) std::cout << "all bounds dominate\n";
        }
    }
    return check_failures.empty() ? kExitOk : kExitViolation;
}

int run_verify(const VerifyConfig& config) {
    validate(config);
    const VerifySummary summary = run_verification(config);
    std::cout << to_json(summary).dump(2) << "\n";
    std::cerr << "verify: " << summary.passed << "/" << summary.trials_total << " trials passed\n";
    return summary.failed == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Upper bounds and zero sets for right quaternionic polynomials"};
    app.require_subcommand(1);

    std::string bounds_path;
    bool bounds_json = false;
    std::string t4_variant = "matrix";
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate every zero bound for a polynomial");
    bounds_cmd->add_option("file", bounds_path, "polynomial JSON file")->required();
    bounds_cmd->add_flag("--json", bounds_json, "emit JSON instead of a table");
    bounds_cmd->add_option("--t4-variant", t4_variant, "t4 form used for the best bound")
        ->check(CLI::IsMember({"theorem", "matrix"}));

    std::string zeros_path;
    bool zeros_check = false;
    bool zeros_json = false;
    CLI::App* zeros_cmd = app.add_subcommand("zeros", "locate all zero classes of a polynomial");
    zeros_cmd->add_option("file", zeros_path, "polynomial JSON file")->required();
    zeros_cmd->add_flag("--check", zeros_check, "verify that every bound dominates every zero");
    zeros_cmd->add_flag("--json", zeros_json, "emit JSON instead of a table");

    quatbound::VerifyConfig config;
    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized soundness sweep");
    verify_cmd->add_option("--degrees", config.degrees, "polynomial degrees, comma separated")
        ->delimiter(',')
        ->required();
    verify_cmd->add_option("--trials", config.trials, "trials per degree")->required();
    verify_cmd->add_option("--seed", config.seed, "sweep seed")->required();
    verify_cmd->add_option("--max-coeff", config.max_coeff, "coefficient ball radius")->required();
    verify_cmd->add_option("--slack", config.slack, "relative soundness slack")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bounds_cmd->parsed()) return run_bounds(bounds_path, bounds_json, t4_variant);
        if (zeros_cmd->parsed()) return run_zeros(zeros_path, zeros_check, zeros_json);
        config.oracle = oracle_options_from_env();
        return run_verify(config);
    } catch (const quatbound::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const quatbound::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const quatbound::ZeroPolynomialError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const quatbound::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const quatbound::Error& e) {
        // Convergence or internal numerical failures on otherwise valid input.
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
}
