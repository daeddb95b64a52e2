#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "quatbound/companion.hpp"
#include "quatbound/polynomial.hpp"
#include "quatbound/qmatrix.hpp"

namespace quatbound {

/// Two published forms of the t4 bound differ in the order of a quaternion
/// product inside gamma. Matrix is the form the companion-cube structure
/// supports and the default; Theorem keeps the other order for fidelity.
enum class T4Variant { Theorem, Matrix };

inline const char* to_string(T4Variant v) { return v == T4Variant::Matrix ? "matrix" : "theorem"; }

namespace detail {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// 1-indexed view of the non-leading coefficients of a monic f, padded so
/// that out-of-range indices read as zero: paper_coeff(f, j) is the
/// coefficient of z^(j-1) for j = 1..degree.
inline Quaternion paper_coeff(const RightPolynomial& f, std::ptrdiff_t j) {
    if (j < 1 || j > static_cast<std::ptrdiff_t>(f.degree())) return Quaternion::zero();
    return f.coeff(static_cast<std::size_t>(j - 1));
}

inline void require_bound_input(const RightPolynomial& f, const char* who, std::size_t min_degree) {
    if (!f.is_monic()) throw PreconditionError(std::string(who) + ": polynomial must be monic");
    if (f.degree() < min_degree)
        throw PreconditionError(std::string(who) + ": degree must be at least " + std::to_string(min_degree));
    if (q_is_zero(f.coeff(0))) throw PreconditionError(std::string(who) + ": constant term must be nonzero");
}

}  // namespace detail

/// Classical coefficient bound: |z| <= 1 + max |c_i| over the non-leading
/// coefficients of a monic polynomial.
inline double cauchy_bound(const RightPolynomial& f) {
    if (!f.is_monic()) throw PreconditionError("cauchy_bound: polynomial must be monic");
    double max_mod = 0.0;
    for (std::size_t idx = 0; idx < f.degree(); ++idx) max_mod = std::max(max_mod, q_abs(f.coeff(idx)));
    return 1.0 + max_mod;
}

/// t1: alpha + sqrt(1 + sum_{j=1}^{n-1} |q_j|^2) with
/// alpha = sqrt(sum_{j=1}^{n} |q_j - q_{j-1}|^2), q_0 = 0, where q_j is the
/// z^(j-1) coefficient. Dominates the spectral norm of the companion
/// matrix, split as ladder block plus last column.
inline double t1_bound(const RightPolynomial& f, double* alpha_out = nullptr) {
    detail::require_bound_input(f, "t1_bound", 2);
    const auto n = static_cast<std::ptrdiff_t>(f.degree());
    double alpha_sq = 0.0;
    for (std::ptrdiff_t j = 1; j <= n; ++j)
        alpha_sq += norm_sq(detail::paper_coeff(f, j) - detail::paper_coeff(f, j - 1));
    double tail_sq = 0.0;
    for (std::ptrdiff_t j = 1; j <= n - 1; ++j) tail_sq += norm_sq(detail::paper_coeff(f, j));
    const double alpha = std::sqrt(alpha_sq);
    if (alpha_out) *alpha_out = alpha;
    return alpha + std::sqrt(1.0 + tail_sq);
}

/// t2: (1 + alpha + beta + sum |q_j|^2)^(1/6), where alpha sums
/// |q_j q_{n-1} - q_j q_n^2 + q_{j-1} q_n - q_{j-2}|^2 and beta sums
/// |q_j q_n - q_{j-1}|^2 (products in the written order, q_{-1} = q_0 = 0).
/// The three sums are the squared column norms of the companion cube, so
/// the sixth root bounds every zero through |z|^3 <= ||C^3||_2.
inline double t2_bound(const RightPolynomial& f, double* alpha_out = nullptr, double* beta_out = nullptr) {
    detail::require_bound_input(f, "t2_bound", 3);
    const auto n = static_cast<std::ptrdiff_t>(f.degree());
    const Quaternion qn = detail::paper_coeff(f, n);
    const Quaternion qn1 = detail::paper_coeff(f, n - 1);
    const Quaternion qn_sq = q_mul(qn, qn);
    double alpha = 0.0, beta = 0.0, coeff_sq = 0.0;
    for (std::ptrdiff_t j = 1; j <= n; ++j) {
        const Quaternion qj = detail::paper_coeff(f, j);
        const Quaternion qjm1 = detail::paper_coeff(f, j - 1);
        const Quaternion qjm2 = detail::paper_coeff(f, j - 2);
        alpha += norm_sq(q_mul(qj, qn1) - q_mul(qj, qn_sq) + q_mul(qjm1, qn) - qjm2);
        beta += norm_sq(q_mul(qj, qn) - qjm1);
        coeff_sq += norm_sq(qj);
    }
    if (alpha_out) *alpha_out = alpha;
    if (beta_out) *beta_out = beta;
    return std::pow(1.0 + alpha + beta + coeff_sq, 1.0 / 6.0);
}

/// t3: (1 + 2 sum |v_j|^2)^(1/4) over the auxiliary coefficients
/// v_j = q_j q_n - q_{j-1}. Zeros of f are zeros of the auxiliary
/// polynomial, and the square of its companion matrix has spectral norm at
/// most the inner expression's square root.
inline double t3_bound(const RightPolynomial& f) {
    detail::require_bound_input(f, "t3_bound", 2);
    const std::vector<Quaternion> v = auxiliary_coefficients(f);
    double v_sq = 0.0;
    for (std::size_t j = 1; j <= f.degree(); ++j) v_sq += norm_sq(v[j]);
    return std::pow(1.0 + 2.0 * v_sq, 0.25);
}

/// t4: (1 + gamma + 2 sum |v_j|^2)^(1/6) with
/// gamma = |v_1 v_n|^2 + |v_2 v_n|^2 + sum_{j=1}^{n-1} |v_j + p_j|^2,
/// where p_j = v_{j+2} v_n for the Matrix variant (the product order
/// appearing in the cube of the auxiliary companion matrix) and
/// p_j = v_n v_{j+2} for the Theorem variant; v_{n+1} = 0.
inline double t4_bound(const RightPolynomial& f, T4Variant variant, double* gamma_out = nullptr) {
    detail::require_bound_input(f, "t4_bound", 2);
    const std::size_t n = f.degree();
    const std::vector<Quaternion> v = auxiliary_coefficients(f);
    const Quaternion vn = v[n];
    double v_sq = 0.0;
    for (std::size_t j = 1; j <= n; ++j) v_sq += norm_sq(v[j]);
    double gamma = norm_sq(q_mul(v[1], vn)) + norm_sq(q_mul(v[2], vn));
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        const Quaternion cross =
            variant == T4Variant::Matrix ? q_mul(v[j + 2], vn) : q_mul(vn, v[j + 2]);
        gamma += norm_sq(v[j] + cross);
    }
    if (gamma_out) *gamma_out = gamma;
    return std::pow(1.0 + gamma + 2.0 * v_sq, 1.0 / 6.0);
}

/// One named bound inside a report: either a value or a reason it does not
/// apply, plus an optional remark.
struct BoundValue {
    double value = detail::kNaN;
    bool applicable = false;
    std::string reason;
    std::string note;

    static BoundValue of(double v) { return {v, true, "", ""}; }
    static BoundValue of(double v, std::string note) { return {v, true, "", std::move(note)}; }
    static BoundValue inapplicable(std::string reason) { return {detail::kNaN, false, std::move(reason), ""}; }
};

/// Collected bound values for one polynomial. Entries keep a fixed
/// canonical order; `best` is the minimum over applicable entries, with
/// the non-selected t4 variant excluded from the minimum.
struct BoundReport {
    std::vector<std::pair<std::string, BoundValue>> entries;
    std::size_t degree = 0;        ///< degree after monic normalization and deflation
    std::size_t origin_zeros = 0;  ///< zeros at the origin removed by deflation
    double alpha_t1 = detail::kNaN;
    double alpha_t2 = detail::kNaN;
    double beta = detail::kNaN;
    double gamma_theorem = detail::kNaN;
    double gamma_matrix = detail::kNaN;
    double best = detail::kNaN;
    std::string best_source;
    T4Variant t4_selected = T4Variant::Matrix;

    const BoundValue* find(const std::string& name) const {
        for (const auto& [key, value] : entries)
            if (key == name) return &value;
        return nullptr;
    }
};

/// Order in which bounds are reported and serialized.
inline const std::vector<std::string>& bound_names() {
    static const std::vector<std::string> names = {
        "cauchy", "t1",    "t2",    "t3",    "t4_theorem", "t4_matrix", "norm1",     "norm_inf",
        "norm_fro", "spec1", "spec2", "spec3", "spec1_aux",  "spec2_aux", "spec3_aux",
    };
    return names;
}

/// Numeric norm baselines for a monic f of degree >= 2 with nonzero
/// constant term: the entrywise norms of the companion matrix C, and
/// ||C^k||_2^(1/k) for k = 1..3 for both C and the companion of the
/// auxiliary polynomial. Each bounds every zero modulus, since zero moduli
/// are dominated by the right spectral radius, which no matrix norm
/// undercuts.
inline std::vector<std::pair<std::string, double>> norm_bounds(const RightPolynomial& f) {
    detail::require_bound_input(f, "norm_bounds", 2);
    const QMatrix c = companion_right(f);
    const QMatrix c_aux = companion_right(auxiliary_polynomial(f));
    const EntryNorms en = entry_norms(c);
    std::vector<std::pair<std::string, double>> out;
    out.emplace_back("norm1", en.one);
    out.emplace_back("norm_inf", en.inf);
    out.emplace_back("norm_fro", en.frobenius);
    for (int k = 1; k <= 3; ++k)
        out.emplace_back("spec" + std::to_string(k),
                         std::pow(spectral_norm(companion_power(c, k)), 1.0 / k));
    for (int k = 1; k <= 3; ++k)
        out.emplace_back("spec" + std::to_string(k) + "_aux",
                         std::pow(spectral_norm(companion_power(c_aux, k)), 1.0 / k));
    return out;
}

/// Full report: normalizes to monic, deflates zeros at the origin, then
/// evaluates every bound that applies at the resulting degree. `best` is
/// the minimum of the applicable entries (counting only the selected t4
/// variant).
inline BoundReport best_bound(const RightPolynomial& f, T4Variant t4_for_best = T4Variant::Matrix) {
    const auto [g, origin] = monic_deflated(f);
    BoundReport report;
    report.degree = g.degree();
    report.origin_zeros = origin;
    report.t4_selected = t4_for_best;

    const std::size_t n = g.degree();
    const std::string small_note = n == 2 ? "stated range is degree >= 3" : "";

    auto put = [&report](const std::string& name, BoundValue value) {
        report.entries.emplace_back(name, std::move(value));
    };

    if (n >= 1)
        put("cauchy", BoundValue::of(cauchy_bound(g)));
    else
        put("cauchy", BoundValue::inapplicable("degree<1"));

    if (n >= 2) {
        put("t1", BoundValue::of(t1_bound(g, &report.alpha_t1), small_note));
        if (n >= 3)
            put("t2", BoundValue::of(t2_bound(g, &report.alpha_t2, &report.beta)));
        else
            put("t2", BoundValue::inapplicable("degree<3"));
        put("t3", BoundValue::of(t3_bound(g), small_note));
        put("t4_theorem", BoundValue::of(t4_bound(g, T4Variant::Theorem, &report.gamma_theorem), small_note));
        put("t4_matrix", BoundValue::of(t4_bound(g, T4Variant::Matrix, &report.gamma_matrix), small_note));
        if (std::isnan(report.beta)) {
            double v_sq = 0.0;
            const std::vector<Quaternion> v = auxiliary_coefficients(g);
            for (std::size_t j = 1; j <= n; ++j) v_sq += norm_sq(v[j]);
            report.beta = v_sq;
        }
        for (auto& [name, value] : norm_bounds(g)) put(name, BoundValue::of(value));
    } else {
        const std::string reason = "degree<2";
        for (const std::string& name : bound_names())
            if (!report.find(name)) put(name, BoundValue::inapplicable(reason));
    }

    const std::string skipped_t4 = t4_for_best == T4Variant::Matrix ? "t4_theorem" : "t4_matrix";
    for (const auto& [name, value] : report.entries) {
        if (!value.applicable || name == skipped_t4) continue;
        if (std::isnan(report.best) || value.value < report.best) {
            report.best = value.value;
            report.best_source = name;
        }
    }
    return report;
}

}  // namespace quatbound
