#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "quatbound/quaternion.hpp"

namespace quatbound {

namespace detail {

inline std::vector<Quaternion> trimmed_coefficients(std::vector<Quaternion> coeffs, const char* who) {
    while (!coeffs.empty() && q_is_zero(coeffs.back())) coeffs.pop_back();
    if (coeffs.empty()) throw ZeroPolynomialError(std::string(who) + ": zero polynomial");
    for (const Quaternion& c : coeffs)
        if (!q_is_finite(c)) throw PreconditionError(std::string(who) + ": non-finite coefficient");
    return coeffs;
}

}  // namespace detail

/// Right quaternion polynomial f(z) = sum_i z^i * c_i, powers of the
/// variable on the left of each coefficient. Coefficients are stored
/// ascending, constant term first; the leading coefficient is nonzero
/// (trailing zeros are trimmed at construction, and the zero polynomial is
/// rejected).
class RightPolynomial {
  public:
    explicit RightPolynomial(std::vector<Quaternion> coeffs)
        : coeffs_(detail::trimmed_coefficients(std::move(coeffs), "RightPolynomial")) {}

    RightPolynomial(std::initializer_list<Quaternion> coeffs)
        : RightPolynomial(std::vector<Quaternion>(coeffs)) {}

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    const Quaternion& coeff(std::size_t idx) const { return coeffs_[idx]; }
    const Quaternion& leading() const { return coeffs_.back(); }
    bool is_monic() const { return leading() == Quaternion::one(); }

    bool operator==(const RightPolynomial&) const = default;

  private:
    friend RightPolynomial normalize_monic(const RightPolynomial&);
    std::vector<Quaternion> coeffs_;
};

/// Left quaternion polynomial f(z) = sum_i c_i * z^i; same storage layout.
class LeftPolynomial {
  public:
    explicit LeftPolynomial(std::vector<Quaternion> coeffs)
        : coeffs_(detail::trimmed_coefficients(std::move(coeffs), "LeftPolynomial")) {}

    LeftPolynomial(std::initializer_list<Quaternion> coeffs) : LeftPolynomial(std::vector<Quaternion>(coeffs)) {}

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    const Quaternion& coeff(std::size_t idx) const { return coeffs_[idx]; }
    const Quaternion& leading() const { return coeffs_.back(); }
    bool is_monic() const { return leading() == Quaternion::one(); }

    bool operator==(const LeftPolynomial&) const = default;

  private:
    std::vector<Quaternion> coeffs_;
};

/// Nested evaluation c_0 + z*(c_1 + z*(c_2 + ...)), which reproduces the
/// left-sided powers z^i * c_i exactly.
inline Quaternion evaluate_right(const RightPolynomial& f, const Quaternion& z) {
    Quaternion acc = f.leading();
    for (std::size_t idx = f.degree(); idx-- > 0;) acc = q_mul(z, acc) + f.coeff(idx);
    return acc;
}

/// Mirrored nested evaluation for right-sided powers c_i * z^i.
inline Quaternion evaluate_left(const LeftPolynomial& f, const Quaternion& z) {
    Quaternion acc = f.leading();
    for (std::size_t idx = f.degree(); idx-- > 0;) acc = q_mul(acc, z) + f.coeff(idx);
    return acc;
}

/// Convolution (star) product: coefficient c_k = sum_{i+j=k} f_i * g_j.
/// Associative; matches pointwise multiplication only when the left factor
/// has real coefficients. Degrees add, since a product of nonzero
/// quaternions is nonzero.
inline RightPolynomial star_product(const RightPolynomial& f, const RightPolynomial& g) {
    std::vector<Quaternion> out(f.degree() + g.degree() + 1);
    for (std::size_t fi = 0; fi <= f.degree(); ++fi)
        for (std::size_t gi = 0; gi <= g.degree(); ++gi) out[fi + gi] += q_mul(f.coeff(fi), g.coeff(gi));
    return RightPolynomial(std::move(out));
}

/// Right-multiplies every coefficient by the inverse of the leading one.
/// Right multiplication preserves the zero set of a right polynomial
/// (f(z) * q != 0 whenever f(z) != 0); the leading coefficient is set to
/// exactly 1 so monicity is a clean flag downstream.
inline RightPolynomial normalize_monic(const RightPolynomial& f) {
    if (f.is_monic()) return f;
    if (q_is_zero(f.leading())) throw ZeroLeadingError("normalize_monic: zero leading coefficient");
    const Quaternion lead_inv = q_inv(f.leading());
    std::vector<Quaternion> out = f.coeffs();
    for (Quaternion& c : out) c = q_mul(c, lead_inv);
    out.back() = Quaternion::one();
    return RightPolynomial(std::move(out));
}

/// Strips the k leading zero low-order coefficients, so that the returned
/// polynomial has a nonzero constant term. f = z^k * g with a real left
/// factor, so the zero set of f is {0 when k > 0} plus the zero set of g.
inline std::pair<RightPolynomial, std::size_t> deflate_zero_constant(const RightPolynomial& f) {
    std::size_t k = 0;
    while (k <= f.degree() && q_is_zero(f.coeff(k))) ++k;
    // The constructor invariant guarantees a nonzero coefficient exists.
    std::vector<Quaternion> out(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end());
    return {RightPolynomial(std::move(out)), k};
}

/// normalize_monic followed by deflate_zero_constant, the preparation step
/// shared by the bound and zero pipelines.
inline std::pair<RightPolynomial, std::size_t> monic_deflated(const RightPolynomial& f) {
    return deflate_zero_constant(normalize_monic(f));
}

/// Auxiliary polynomial of a monic f of degree n >= 2 with nonzero constant
/// term: z^(n+1) - z^(n-1)*v_n - ... - z*v_2 - v_1, where
/// v_j = c_{j-1} * c_{n-1} - c_{j-2} over the stored coefficients (so the
/// z^n coefficient is zero). Its zero set is the zero set of f together
/// with the class of the z^(n-1) coefficient of f, so any bound for its
/// zeros also bounds the zeros of f.
inline RightPolynomial auxiliary_polynomial(const RightPolynomial& f) {
    const std::size_t n = f.degree();
    if (!f.is_monic()) throw PreconditionError("auxiliary_polynomial: polynomial must be monic");
    if (n < 2) throw PreconditionError("auxiliary_polynomial: degree must be at least 2");
    if (q_is_zero(f.coeff(0))) throw PreconditionError("auxiliary_polynomial: constant term must be nonzero");

    const Quaternion top = f.coeff(n - 1);
    std::vector<Quaternion> out(n + 2);
    for (std::size_t j = 1; j <= n; ++j) {
        const Quaternion prev = (j >= 2) ? f.coeff(j - 2) : Quaternion::zero();
        out[j - 1] = -(q_mul(f.coeff(j - 1), top) - prev);
    }
    out[n] = Quaternion::zero();
    out[n + 1] = Quaternion::one();
    return RightPolynomial(std::move(out));
}

/// The v_j sequence used by the auxiliary polynomial and several bounds:
/// v[j] = c_{j-1} * c_{n-1} - c_{j-2} for j = 1..n, 1-indexed (v[0] unused,
/// and two extra zero slots so v[n+1] reads as zero).
inline std::vector<Quaternion> auxiliary_coefficients(const RightPolynomial& f) {
    const std::size_t n = f.degree();
    if (!f.is_monic()) throw PreconditionError("auxiliary_coefficients: polynomial must be monic");
    if (n < 2) throw PreconditionError("auxiliary_coefficients: degree must be at least 2");
    std::vector<Quaternion> v(n + 2);
    const Quaternion top = f.coeff(n - 1);
    for (std::size_t j = 1; j <= n; ++j) {
        const Quaternion prev = (j >= 2) ? f.coeff(j - 2) : Quaternion::zero();
        v[j] = q_mul(f.coeff(j - 1), top) - prev;
    }
    return v;
}

}  // namespace quatbound
