#pragma once

#include <cstddef>
#include <vector>

#include "quatbound/polynomial.hpp"
#include "quatbound/qmatrix.hpp"

namespace quatbound {

/// Frobenius companion matrix of a monic right polynomial of degree n >= 2:
/// subdiagonal ones, last column -c_0, ..., -c_{n-1} top to bottom.
inline QMatrix companion_right(const RightPolynomial& f) {
    const std::size_t n = f.degree();
    if (!f.is_monic()) throw PreconditionError("companion_right: polynomial must be monic");
    if (n < 2) throw PreconditionError("companion_right: degree must be at least 2");
    QMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Quaternion::one();
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
    return c;
}

/// Companion matrix of a monic left polynomial: superdiagonal ones, bottom
/// row -c_0, ..., -c_{n-1} left to right. Transpose of the right form when
/// the coefficients are real.
inline QMatrix companion_left(const LeftPolynomial& f) {
    const std::size_t n = f.degree();
    if (!f.is_monic()) throw PreconditionError("companion_left: polynomial must be monic");
    if (n < 2) throw PreconditionError("companion_left: degree must be at least 2");
    QMatrix c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = Quaternion::one();
    for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = -f.coeff(j);
    return c;
}

/// C^k by repeated multiplication, k in {1, 2, 3}.
inline QMatrix companion_power(const QMatrix& c, int k) {
    if (c.rows() != c.cols()) throw DimensionMismatchError("companion_power: matrix must be square");
    if (k < 1 || k > 3) throw PreconditionError("companion_power: exponent must be 1, 2 or 3");
    QMatrix out = c;
    for (int step = 1; step < k; ++step) out = mat_mul(out, c);
    return out;
}

/// The structured summand decompositions behind the spectral-norm bounds.
/// Parts are produced by masking disjoint column ranges of the computed
/// target, so they sum to the target entry-exactly and any two distinct
/// parts X, Y satisfy X * Y^H = 0 with structural zeros.
enum class Decomposition {
    T1,      ///< C split into subdiagonal block and last column
    T2,      ///< C^3 split into last three columns and shifted-identity block
    T3,      ///< square of the auxiliary companion, three parts
    T4,      ///< cube of the auxiliary companion, four parts
    Lemma2,  ///< the zero-top-row ladder matrix F split into column and subdiagonal
};

struct DecompositionParts {
    std::vector<QMatrix> parts;
    QMatrix target;
};

namespace detail {

/// Copies the columns [first, last] of src into an otherwise zero matrix.
/// An empty range (first > last) yields the zero matrix of the same shape.
inline QMatrix column_mask(const QMatrix& src, std::size_t first, std::size_t last) {
    QMatrix out(src.rows(), src.cols());
    if (first > last) return out;
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = first; j <= last && j < src.cols(); ++j) out(i, j) = src(i, j);
    return out;
}

}  // namespace detail

/// The ladder matrix of Lemma-2 shape for a monic f of degree n: an n x n
/// matrix with zero first row, subdiagonal ones, and last column
/// (0, -c_0, ..., -c_{n-2}) built from the n-1 lowest coefficients. Its
/// squared spectral norm equals 1 + sum of those squared moduli.
inline QMatrix ladder_matrix(const RightPolynomial& f) {
    const std::size_t n = f.degree();
    if (!f.is_monic()) throw PreconditionError("ladder_matrix: polynomial must be monic");
    if (n < 2) throw PreconditionError("ladder_matrix: degree must be at least 2");
    QMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        m(i, i - 1) = Quaternion::one();
        m(i, n - 1) = -f.coeff(i - 1);
    }
    return m;
}

inline DecompositionParts decomposition_parts(const RightPolynomial& f, Decomposition which) {
    const std::size_t n = f.degree();
    if (!f.is_monic()) throw PreconditionError("decomposition_parts: polynomial must be monic");

    const auto column_split = [](const QMatrix& target, std::size_t tail_columns) {
        // Single-column parts taken right to left, then one part holding
        // the remaining left block.
        DecompositionParts d{{}, target};
        const std::size_t dim = target.cols();
        for (std::size_t c = 0; c < tail_columns; ++c)
            d.parts.push_back(detail::column_mask(target, dim - 1 - c, dim - 1 - c));
        if (dim >= tail_columns + 1)
            d.parts.push_back(detail::column_mask(target, 0, dim - 1 - tail_columns));
        else
            d.parts.push_back(QMatrix(target.rows(), target.cols()));
        return d;
    };

    switch (which) {
        case Decomposition::T1: {
            if (n < 2) throw PreconditionError("decomposition_parts: T1 needs degree >= 2");
            const QMatrix c = companion_right(f);
            return {{detail::column_mask(c, 0, n - 2), detail::column_mask(c, n - 1, n - 1)}, c};
        }
        case Decomposition::T2: {
            if (n < 3) throw PreconditionError("decomposition_parts: T2 needs degree >= 3");
            const QMatrix c3 = companion_power(companion_right(f), 3);
            return column_split(c3, 3);
        }
        case Decomposition::T3: {
            if (n < 2) throw PreconditionError("decomposition_parts: T3 needs degree >= 2");
            const QMatrix c2 = companion_power(companion_right(auxiliary_polynomial(f)), 2);
            return column_split(c2, 2);
        }
        case Decomposition::T4: {
            if (n < 2) throw PreconditionError("decomposition_parts: T4 needs degree >= 2");
            const QMatrix c3 = companion_power(companion_right(auxiliary_polynomial(f)), 3);
            return column_split(c3, 3);
        }
        case Decomposition::Lemma2: {
            if (n < 2) throw PreconditionError("decomposition_parts: Lemma2 needs degree >= 2");
            const QMatrix ladder = ladder_matrix(f);
            return {{detail::column_mask(ladder, n - 1, n - 1), detail::column_mask(ladder, 0, n - 2)}, ladder};
        }
    }
    throw PreconditionError("decomposition_parts: unknown decomposition");
}

}  // namespace quatbound
