#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "quatbound/bounds.hpp"
#include "quatbound/json_io.hpp"
#include "quatbound/zeros.hpp"

namespace quatbound {

/// Configuration of a randomized soundness sweep.
struct VerifyConfig {
    std::vector<std::size_t> degrees;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double max_coeff = 1.0;
    double slack = 1e-9;
    OracleOptions oracle;
};

inline void validate(const VerifyConfig& config) {
    if (config.degrees.empty()) throw PreconditionError("verify: at least one degree is required");
    for (std::size_t d : config.degrees)
        if (d < 2) throw PreconditionError("verify: degrees must all be at least 2");
    if (config.trials < 1) throw PreconditionError("verify: trials must be at least 1");
    if (!(config.max_coeff > 0.0)) throw PreconditionError("verify: max_coeff must be positive");
    if (!(config.slack >= 0.0)) throw PreconditionError("verify: slack must be nonnegative");
}

struct VerifyViolation {
    std::size_t degree = 0;
    std::size_t trial = 0;
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    Json polynomial;
};

struct BoundStats {
    std::size_t best_count = 0;
    std::size_t samples = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = 0.0;
    double sum_ratio = 0.0;
};

struct VerifySummary {
    VerifyConfig config;
    std::size_t trials_total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> per_degree;  // degree -> (passed, failed)
    std::map<std::string, BoundStats> bounds;
    std::vector<VerifyViolation> violations;
    std::size_t violations_total = 0;  // violations beyond the stored cap still count here
};

namespace detail {

constexpr std::size_t kMaxStoredViolations = 25;

inline void record_violation(VerifySummary& summary, VerifyViolation violation) {
    ++summary.violations_total;
    if (summary.violations.size() < kMaxStoredViolations) summary.violations.push_back(std::move(violation));
}

}  // namespace detail

/// Runs the sweep: per (degree, trial) generates a polynomial with a
/// planted zero, locates all zeros with the oracle, evaluates every bound,
/// and asserts that each sound applicable bound dominates every zero
/// modulus within the configured slack, plus the norm-domination
/// inequalities tying the closed-form bounds to the companion spectral
/// norms. Per-trial seeds derive from (seed, degree, trial), so results do
/// not depend on scheduling or degree order.
inline VerifySummary run_verification(const VerifyConfig& config) {
    validate(config);
    VerifySummary summary;
    summary.config = config;

    for (const std::string& name : bound_names()) summary.bounds[name];

    for (std::size_t degree : config.degrees) {
        auto& [degree_passed, degree_failed] = summary.per_degree[degree];
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            const auto [poly, planted] =
                random_polynomial_with_known_zero(degree, trial_seed(config.seed, degree, trial), config.max_coeff);
            const ZeroSet zeros = find_zeros(poly, config.oracle);
            const BoundReport report = best_bound(poly);
            ++summary.trials_total;

            std::size_t failures_before = summary.violations_total;
            auto fail = [&](const std::string& check, double lhs, double rhs) {
                detail::record_violation(summary,
                                         {degree, trial, check, lhs, rhs, to_json(poly)});
            };

            if (!zeros.any_found) fail("oracle:no_zero_found", 0.0, 0.0);

            for (const auto& [name, value] : report.entries) {
                if (!value.applicable || name == "t4_theorem") continue;
                if (zeros.max_modulus > value.value * (1.0 + config.slack))
                    fail("soundness:" + name, zeros.max_modulus, value.value);
                BoundStats& stats = summary.bounds[name];
                if (zeros.max_modulus > 0.0) {
                    const double ratio = value.value / zeros.max_modulus;
                    ++stats.samples;
                    stats.min_ratio = std::min(stats.min_ratio, ratio);
                    stats.max_ratio = std::max(stats.max_ratio, ratio);
                    stats.sum_ratio += ratio;
                }
            }
            if (!report.best_source.empty()) ++summary.bounds[report.best_source].best_count;

            // Norm domination: each closed-form bound must sit above the
            // spectral norm its derivation controls.
            const auto entry = [&report](const char* name) { return report.find(name); };
            const BoundValue* t1 = entry("t1");
            const BoundValue* spec1 = entry("spec1");
            if (t1 && t1->applicable && spec1 && spec1->applicable &&
                t1->value < spec1->value - 1e-8 * std::max(1.0, spec1->value))
                fail("domination:t1_vs_spec1", t1->value, spec1->value);
            const BoundValue* t2 = entry("t2");
            const BoundValue* spec3 = entry("spec3");
            if (t2 && t2->applicable && spec3 && spec3->applicable) {
                const double lhs = std::pow(t2->value, 3.0), rhs = std::pow(spec3->value, 3.0);
                if (lhs < rhs * (1.0 - 1e-8)) fail("domination:t2_vs_spec3", lhs, rhs);
            }
            const BoundValue* t3 = entry("t3");
            const BoundValue* spec2_aux = entry("spec2_aux");
            if (t3 && t3->applicable && spec2_aux && spec2_aux->applicable) {
                const double lhs = t3->value * t3->value, rhs = spec2_aux->value * spec2_aux->value;
                if (lhs < rhs * (1.0 - 1e-8)) fail("domination:t3_vs_spec2_aux", lhs, rhs);
            }
            const BoundValue* t4 = entry("t4_matrix");
            const BoundValue* spec3_aux = entry("spec3_aux");
            if (t4 && t4->applicable && spec3_aux && spec3_aux->applicable) {
                const double lhs = std::pow(t4->value, 3.0), rhs = std::pow(spec3_aux->value, 3.0);
                if (lhs < rhs * (1.0 - 1e-8)) fail("domination:t4_matrix_vs_spec3_aux", lhs, rhs);
            }

            if (summary.violations_total == failures_before) {
                ++summary.passed;
                ++degree_passed;
            } else {
                ++summary.failed;
                ++degree_failed;
            }
        }
    }
    return summary;
}

inline Json to_json(const VerifyViolation& v) {
    return Json{{"degree", v.degree}, {"trial", v.trial},     {"check", v.check},
                {"lhs", v.lhs},       {"rhs", v.rhs},         {"polynomial", v.polynomial}};
}

inline Json to_json(const VerifySummary& summary) {
    Json degrees = Json::array();
    for (std::size_t d : summary.config.degrees) degrees.push_back(d);
    Json per_degree = Json::object();
    for (const auto& [degree, counts] : summary.per_degree)
        per_degree[std::to_string(degree)] = Json{{"passed", counts.first}, {"failed", counts.second}};

    Json bounds = Json::object();
    std::string tightest, loosest;
    std::size_t tightest_count = 0;
    double loosest_mean = -1.0;
    for (const std::string& name : bound_names()) {
        const auto it = summary.bounds.find(name);
        if (it == summary.bounds.end()) continue;
        const BoundStats& stats = it->second;
        Json node{{"best_count", stats.best_count}};
        if (stats.samples > 0) {
            const double mean = stats.sum_ratio / static_cast<double>(stats.samples);
            node["min_ratio"] = stats.min_ratio;
            node["mean_ratio"] = mean;
            node["max_ratio"] = stats.max_ratio;
            if (stats.best_count > tightest_count || tightest.empty()) {
                tightest_count = stats.best_count;
                tightest = name;
            }
            if (mean > loosest_mean) {
                loosest_mean = mean;
                loosest = name;
            }
        }
        bounds[name] = std::move(node);
    }

    Json violations = Json::array();
    for (const VerifyViolation& v : summary.violations) violations.push_back(to_json(v));

    return Json{{"config", Json{{"degrees", std::move(degrees)},
                                {"trials", summary.config.trials},
                                {"seed", summary.config.seed},
                                {"max_coeff", summary.config.max_coeff},
                                {"slack", summary.config.slack}}},
                {"trials", summary.trials_total},
                {"passed", summary.passed},
                {"failed", summary.failed},
                {"per_degree", std::move(per_degree)},
                {"bounds", std::move(bounds)},
                {"tightest", tightest},
                {"loosest", loosest},
                {"violations_total", summary.violations_total},
                {"violations", std::move(violations)}};
}

}  // namespace quatbound
