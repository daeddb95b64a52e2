#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quatbound/polynomial.hpp"
#include "quatbound/random.hpp"

namespace quatbound {

/// Tolerances of the zero oracle. Residual and near-singularity thresholds
/// sit two orders of magnitude above the root solver's residuals and two
/// below any verification tolerance built on top of them.
struct OracleOptions {
    double residual_factor = 1e-8;  ///< residual threshold = factor * (1 + sum |a_i| |w|^i)
    double b_factor = 1e-10;        ///< |B| threshold = factor * (1 + sum |a_i|)
    double merge_tolerance = 1e-7;  ///< absolute (s, t) distance for class deduplication
};

enum class ZeroKind { Isolated, Spherical, Real, None };

inline const char* to_string(ZeroKind k) {
    switch (k) {
        case ZeroKind::Isolated: return "ISOLATED";
        case ZeroKind::Spherical: return "SPHERICAL";
        case ZeroKind::Real: return "REAL";
        case ZeroKind::None: return "NONE";
    }
    return "NONE";
}

/// One conjugacy class of zero candidates: the sphere of quaternions with
/// real part s and imaginary modulus t. Isolated and real zeros carry the
/// zero itself as witness; spherical classes carry the representative
/// s + t*i.
struct ZeroClass {
    double s = 0.0;
    double t = 0.0;
    ZeroKind kind = ZeroKind::None;
    Quaternion witness;
    double residual = 0.0;

    double modulus() const { return std::sqrt(s * s + t * t); }
};

struct ZeroSet {
    std::vector<ZeroClass> classes;
    double max_modulus = 0.0;
    bool any_found = false;
};

/// Residual scale 1 + sum |a_i| * |w|^i for a witness of modulus w_mod.
inline double residual_scale(const RightPolynomial& f, double w_mod) {
    double scale = 1.0, power = 1.0;
    for (std::size_t idx = 0; idx <= f.degree(); ++idx) {
        scale += q_abs(f.coeff(idx)) * power;
        power *= w_mod;
    }
    return scale;
}

/// Real-coefficient polynomial of degree 2n whose complex root classes
/// enumerate every conjugacy class that can contain a zero of f:
/// c_k = sum_{i+j=k} conj(a_i) * a_j. The coefficients are real in exact
/// arithmetic; imaginary residue above 1e-12 * scale signals an upstream
/// arithmetic bug and raises NonRealCoefficientError.
inline std::vector<double> companion_polynomial(const RightPolynomial& f) {
    const std::size_t n = f.degree();
    std::vector<Quaternion> conv(2 * n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) conv[i + j] += q_mul(q_conj(f.coeff(i)), f.coeff(j));

    double coeff_sum = 0.0;
    for (std::size_t i = 0; i <= n; ++i) coeff_sum += q_abs(f.coeff(i));
    const double imag_tol = 1e-12 * (1.0 + coeff_sum * coeff_sum);

    std::vector<double> out(conv.size());
    for (std::size_t k = 0; k < conv.size(); ++k) {
        if (imag_abs(conv[k]) > imag_tol)
            throw NonRealCoefficientError("companion_polynomial: coefficient " + std::to_string(k) +
                                          " has imaginary residue above tolerance");
        out[k] = conv[k].w;
    }
    return out;
}

namespace detail {

inline std::complex<double> horner(const std::vector<double>& p, std::complex<double> z) {
    std::complex<double> acc = p.back();
    for (std::size_t idx = p.size() - 1; idx-- > 0;) acc = acc * z + p[idx];
    return acc;
}

inline std::complex<double> horner_derivative(const std::vector<double>& p, std::complex<double> z) {
    std::complex<double> acc = p.back() * static_cast<double>(p.size() - 1);
    for (std::size_t idx = p.size() - 1; idx-- > 1;) acc = acc * z + p[idx] * static_cast<double>(idx);
    return acc;
}

inline void newton_polish(const std::vector<double>& p, std::complex<double>& root) {
    std::complex<double> best = root;
    double best_res = std::abs(horner(p, best));
    std::complex<double> current = best;
    for (int iter = 0; iter < 4; ++iter) {
        const std::complex<double> d = horner_derivative(p, current);
        if (std::abs(d) == 0.0) break;
        current -= horner(p, current) / d;
        const double res = std::abs(horner(p, current));
        if (res < best_res) {
            best = current;
            best_res = res;
        } else {
            break;
        }
    }
    root = best;
}

}  // namespace detail

/// All complex roots of a real-coefficient polynomial, via the balanced
/// real companion matrix, one round of Newton polish, and conjugate-pair
/// canonicalization. Roots are returned sorted by real part then imaginary
/// part, with conjugate pairs exactly mirrored.
inline std::vector<std::complex<double>> complex_roots(std::vector<double> p) {
    while (!p.empty() && p.back() == 0.0) p.pop_back();
    if (p.size() < 2) throw PreconditionError("complex_roots: degree must be at least 1");
    const std::vector<double> input = p;  // un-normalized, for residual checks

    std::vector<std::complex<double>> roots;
    std::size_t zero_roots = 0;
    while (p.front() == 0.0) {
        ++zero_roots;
        p.erase(p.begin());
    }
    const std::size_t n = p.size() - 1;

    if (n >= 1) {
        std::vector<double> monic(p.size());
        for (std::size_t idx = 0; idx < p.size(); ++idx) monic[idx] = p[idx] / p.back();

        // Variable scaling z = sigma * y tames coefficient dynamic range.
        double sigma = std::pow(std::fabs(monic.front()), 1.0 / static_cast<double>(n));
        if (!(sigma > 1e-8) || !(sigma < 1e8)) sigma = 1.0;

        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        double power = 1.0;
        for (std::size_t idx = 0; idx < n; ++idx) {
            comp(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(n - 1)) =
                -monic[idx] * power / std::pow(sigma, static_cast<double>(n));
            power *= sigma;
        }
        for (std::size_t idx = 1; idx < n; ++idx)
            comp(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx - 1)) = 1.0;

        Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) throw ConvergenceError("complex_roots: eigenvalue solver failed");

        roots.reserve(n + zero_roots);
        for (Eigen::Index idx = 0; idx < solver.eigenvalues().size(); ++idx) {
            std::complex<double> r = sigma * solver.eigenvalues()[idx];
            detail::newton_polish(monic, r);
            roots.push_back(r);
        }
    }

    // Canonicalize conjugate pairs: snap near-real roots, then mirror the
    // positive-imaginary representatives onto their partners.
    std::vector<std::complex<double>> pos, out;
    for (const auto& r : roots) {
        if (std::fabs(r.imag()) <= 1e-8 * (1.0 + std::abs(r)))
            out.emplace_back(r.real(), 0.0);
        else
            pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return std::fabs(a.imag()) < std::fabs(b.imag());
    });
    for (std::size_t idx = 0; idx + 1 < pos.size(); idx += 2) {
        const double s = 0.5 * (pos[idx].real() + pos[idx + 1].real());
        const double t = 0.5 * (std::fabs(pos[idx].imag()) + std::fabs(pos[idx + 1].imag()));
        out.emplace_back(s, t);
        out.emplace_back(s, -t);
    }
    if (pos.size() % 2 == 1) out.emplace_back(pos.back().real(), 0.0);  // stray: treat as real

    for (std::size_t idx = 0; idx < zero_roots; ++idx) out.emplace_back(0.0, 0.0);

    // Residual contract: |p(root)| <= 1e-10 * max|coeff| * max(1, |root|)^deg.
    double coeff_inf = 0.0;
    for (double c : input) coeff_inf = std::max(coeff_inf, std::fabs(c));
    const double deg = static_cast<double>(input.size() - 1);
    for (const auto& r : out) {
        const double budget = 1e-10 * coeff_inf * std::pow(std::max(1.0, std::abs(r)), deg);
        if (std::abs(detail::horner(input, r)) > budget)
            throw ConvergenceError("complex_roots: root residual above tolerance");
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

namespace detail {

/// Linear remainder of f modulo the class polynomial z^2 - 2sz + (s^2+t^2):
/// f(z) is congruent to z*B + C, with real reduction coefficients, so every
/// quaternion of the class (s, t) plugs in directly.
struct ClassRemainder {
    Quaternion b, c;
    Quaternion b_ds, c_ds;  // derivatives with respect to s
    Quaternion b_dt, c_dt;  // derivatives with respect to t
};

inline ClassRemainder class_remainder(const RightPolynomial& f, double s, double t) {
    const double radius_sq = s * s + t * t;
    // Reduction coefficients of z^i and their (s, t) derivatives, carried
    // one level at a time: z^i == z * beta_i + gamma_i (mod class poly).
    double beta = 1.0, gamma = 0.0;  // level i = 1
    double beta_ds = 0.0, gamma_ds = 0.0;
    double beta_dt = 0.0, gamma_dt = 0.0;

    ClassRemainder r;
    r.c = f.coeff(0);
    if (f.degree() >= 1) r.b = f.coeff(1);
    for (std::size_t i = 2; i <= f.degree(); ++i) {
        const double beta_new = 2.0 * s * beta + gamma;
        const double gamma_new = -radius_sq * beta;
        const double beta_ds_new = 2.0 * beta + 2.0 * s * beta_ds + gamma_ds;
        const double gamma_ds_new = -2.0 * s * beta - radius_sq * beta_ds;
        const double beta_dt_new = 2.0 * s * beta_dt + gamma_dt;
        const double gamma_dt_new = -2.0 * t * beta - radius_sq * beta_dt;
        beta = beta_new;
        gamma = gamma_new;
        beta_ds = beta_ds_new;
        gamma_ds = gamma_ds_new;
        beta_dt = beta_dt_new;
        gamma_dt = gamma_dt_new;

        r.b += beta * f.coeff(i);
        r.c += gamma * f.coeff(i);
        r.b_ds += beta_ds * f.coeff(i);
        r.c_ds += gamma_ds * f.coeff(i);
        r.b_dt += beta_dt * f.coeff(i);
        r.c_dt += gamma_dt * f.coeff(i);
    }
    return r;
}

/// Gauss-Newton refinement of (s, t) toward a spherical class, minimizing
/// |B|^2 + |C|^2 over the two class parameters. Returns the refined point;
/// falls back to the input when no improvement is found.
inline std::pair<double, double> refine_spherical(const RightPolynomial& f, double s, double t) {
    auto objective = [&f](double ps, double pt) {
        const ClassRemainder r = class_remainder(f, ps, pt);
        return norm_sq(r.b) + norm_sq(r.c);
    };
    double best_s = s, best_t = t, best_obj = objective(s, t);
    double cur_s = s, cur_t = t;
    for (int iter = 0; iter < 12; ++iter) {
        const ClassRemainder r = class_remainder(f, cur_s, cur_t);
        const std::array<double, 8> res = {r.b.w, r.b.x, r.b.y, r.b.z, r.c.w, r.c.x, r.c.y, r.c.z};
        const std::array<double, 8> js = {r.b_ds.w, r.b_ds.x, r.b_ds.y, r.b_ds.z,
                                          r.c_ds.w, r.c_ds.x, r.c_ds.y, r.c_ds.z};
        const std::array<double, 8> jt = {r.b_dt.w, r.b_dt.x, r.b_dt.y, r.b_dt.z,
                                          r.c_dt.w, r.c_dt.x, r.c_dt.y, r.c_dt.z};
        double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
        for (int idx = 0; idx < 8; ++idx) {
            a11 += js[idx] * js[idx];
            a12 += js[idx] * jt[idx];
            a22 += jt[idx] * jt[idx];
            g1 += js[idx] * res[idx];
            g2 += jt[idx] * res[idx];
        }
        const double det = a11 * a22 - a12 * a12;
        if (!(std::fabs(det) > 0.0)) break;
        cur_s -= (a22 * g1 - a12 * g2) / det;
        cur_t -= (a11 * g2 - a12 * g1) / det;
        cur_t = std::fabs(cur_t);  // the objective is even in t
        const double obj = objective(cur_s, cur_t);
        if (obj < best_obj) {
            best_obj = obj;
            best_s = cur_s;
            best_t = cur_t;
        } else {
            break;
        }
    }
    return {best_s, best_t};
}

}  // namespace detail

/// Decides what the conjugacy class (s, t) contributes to the zero set of
/// f. The polynomial is reduced modulo the class polynomial to z*B + C;
/// then a real class is tested by direct evaluation, a dominant B yields
/// the isolated candidate z* = (-C) * B^{-1} (accepted only if it has a
/// small residual and lies in the queried class), and a vanishing
/// remainder pair means the whole sphere consists of zeros.
inline ZeroClass classify_class(const RightPolynomial& f, double s, double t, const OracleOptions& opts = {}) {
    if (t < 0.0) throw PreconditionError("classify_class: t must be nonnegative");
    ZeroClass out;
    out.s = s;
    out.t = t;

    if (t == 0.0) {
        out.witness = Quaternion(s);
        out.residual = q_abs(evaluate_right(f, out.witness));
        out.kind = out.residual <= opts.residual_factor * residual_scale(f, std::fabs(s)) ? ZeroKind::Real
                                                                                          : ZeroKind::None;
        return out;
    }

    double coeff_sum = 0.0;
    for (std::size_t idx = 0; idx <= f.degree(); ++idx) coeff_sum += q_abs(f.coeff(idx));
    const double b_threshold = opts.b_factor * (1.0 + coeff_sum);

    const detail::ClassRemainder r = detail::class_remainder(f, s, t);
    if (q_abs(r.b) > b_threshold) {
        const Quaternion candidate = q_mul(-r.c, q_inv(r.b));
        out.witness = candidate;
        out.residual = q_abs(evaluate_right(f, candidate));
        const double class_distance = std::fabs(candidate.w - s) + std::fabs(imag_abs(candidate) - t);
        const bool in_class = class_distance <= 1e-8 * (1.0 + q_abs(candidate));
        const bool small_residual = out.residual <= opts.residual_factor * residual_scale(f, q_abs(candidate));
        out.kind = (in_class && small_residual) ? ZeroKind::Isolated : ZeroKind::None;
        return out;
    }

    out.witness = Quaternion{s, t, 0.0, 0.0};
    out.residual = q_abs(evaluate_right(f, out.witness));
    const double threshold = opts.residual_factor * residual_scale(f, std::sqrt(s * s + t * t));
    out.kind = (q_abs(r.c) <= threshold && out.residual <= threshold) ? ZeroKind::Spherical : ZeroKind::None;
    return out;
}

/// Full oracle pipeline: monic normalization, origin deflation, companion
/// polynomial, complex root extraction, class deduplication, and
/// classification. Classes come back sorted by (s, t); residuals are
/// measured against the original input polynomial.
inline ZeroSet find_zeros(const RightPolynomial& f, const OracleOptions& opts = {}) {
    const auto [g, origin_zeros] = monic_deflated(f);
    ZeroSet out;

    if (origin_zeros > 0) {
        ZeroClass origin;
        origin.kind = ZeroKind::Real;
        origin.witness = Quaternion::zero();
        origin.residual = q_abs(evaluate_right(f, origin.witness));
        out.classes.push_back(origin);
    }

    if (g.degree() >= 1) {
        const std::vector<std::complex<double>> roots = complex_roots(companion_polynomial(g));

        // Fold conjugates onto t >= 0 and cluster within the merge
        // tolerance; cluster centroids absorb the eigenvalue splitting that
        // multiple root classes suffer.
        std::vector<std::pair<double, double>> points;
        points.reserve(roots.size());
        for (const auto& root : roots) points.emplace_back(root.real(), std::fabs(root.imag()));
        std::sort(points.begin(), points.end());

        std::vector<std::pair<double, double>> classes;
        std::vector<std::size_t> weights;
        for (const auto& [s, t] : points) {
            bool merged = false;
            for (std::size_t idx = 0; idx < classes.size(); ++idx) {
                const double ds = std::fabs(classes[idx].first - s);
                const double dt = std::fabs(classes[idx].second - t);
                if (ds + dt <= opts.merge_tolerance) {
                    const double wgt = static_cast<double>(weights[idx]);
                    classes[idx].first = (classes[idx].first * wgt + s) / (wgt + 1.0);
                    classes[idx].second = (classes[idx].second * wgt + t) / (wgt + 1.0);
                    ++weights[idx];
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                classes.emplace_back(s, t);
                weights.push_back(1);
            }
        }

        double coeff_sum = 0.0;
        for (std::size_t idx = 0; idx <= g.degree(); ++idx) coeff_sum += q_abs(g.coeff(idx));

        for (auto [s, t] : classes) {
            const double t_raw = t;
            if (t <= opts.merge_tolerance) t = 0.0;
            if (t > 0.0) {
                // Snap near-spherical candidates onto the exact class
                // parameters before classifying.
                const detail::ClassRemainder r = detail::class_remainder(g, s, t);
                const double gate = 1e-4 * (1.0 + coeff_sum) * residual_scale(g, std::sqrt(s * s + t * t));
                if (std::sqrt(norm_sq(r.b) + norm_sq(r.c)) <= gate) {
                    const auto [rs, rt] = detail::refine_spherical(g, s, t);
                    s = rs;
                    t = std::max(rt, 0.0);
                }
            }

            ZeroClass zc = classify_class(g, s, t, opts);
            if (zc.kind == ZeroKind::None && t == 0.0 && t_raw > 0.0)
                zc = classify_class(g, s, t_raw, opts);  // undo an over-eager real snap
            // Report the residual against the caller's polynomial and keep
            // the acceptance decision consistent with it.
            if (zc.kind != ZeroKind::None) {
                zc.residual = q_abs(evaluate_right(f, zc.witness));
                if (zc.residual > opts.residual_factor * residual_scale(f, q_abs(zc.witness)))
                    zc.kind = ZeroKind::None;
            }
            out.classes.push_back(zc);
        }
    }

    std::sort(out.classes.begin(), out.classes.end(), [](const ZeroClass& a, const ZeroClass& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.t < b.t;
    });
    for (const ZeroClass& zc : out.classes)
        if (zc.kind != ZeroKind::None) {
            out.any_found = true;
            out.max_modulus = std::max(out.max_modulus, zc.modulus());
        }
    return out;
}

inline double max_zero_modulus(const RightPolynomial& f, const OracleOptions& opts = {}) {
    return find_zeros(f, opts).max_modulus;
}

/// Monic polynomial of the requested degree with one planted zero: draws a
/// quaternion a from the ball of radius max_coeff and a random monic
/// polynomial h of degree - 1 with coefficients from the same ball, and
/// returns ((z - a) * h, a). The left star-factor guarantees a is a zero
/// of the product.
inline std::pair<RightPolynomial, Quaternion> random_polynomial_with_known_zero(std::size_t degree,
                                                                                std::uint64_t seed,
                                                                                double max_coeff) {
    if (degree < 1) throw PreconditionError("random_polynomial_with_known_zero: degree must be at least 1");
    if (!(max_coeff > 0.0)) throw PreconditionError("random_polynomial_with_known_zero: max_coeff must be positive");
    std::mt19937_64 eng = make_engine(seed);
    const Quaternion planted = ball_quaternion(eng, max_coeff);

    std::vector<Quaternion> h_coeffs(degree);
    for (std::size_t idx = 0; idx + 1 < degree; ++idx) h_coeffs[idx] = ball_quaternion(eng, max_coeff);
    h_coeffs[degree - 1] = Quaternion::one();

    const RightPolynomial factor{-planted, Quaternion::one()};
    return {star_product(factor, RightPolynomial(std::move(h_coeffs))), planted};
}

}  // namespace quatbound
