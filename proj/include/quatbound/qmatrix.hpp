#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "quatbound/quaternion.hpp"

namespace quatbound {

/// Complex carrier for the adjoint image of a quaternion matrix; an m x n
/// quaternion matrix maps to a 2m x 2n complex matrix.
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense quaternion matrix, row-major storage, value semantics.
class QMatrix {
  public:
    QMatrix() = default;

    /// Zero-filled m x n matrix.
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionMismatchError("QMatrix: dimensions must be positive");
    }

    QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw DimensionMismatchError("QMatrix: dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw DimensionMismatchError("QMatrix: entry count does not match dimensions");
        for (const Quaternion& q : entries_)
            if (!q_is_finite(q)) throw PreconditionError("QMatrix: non-finite entry");
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Quaternion>& entries() const { return entries_; }

    bool operator==(const QMatrix& o) const = default;

    QMatrix& operator+=(const QMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("QMatrix +: shape mismatch");
        for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] += o.entries_[n];
        return *this;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> entries_;
};

inline QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }

/// Matrix product with factor order preserved entrywise: (AB)[i,k] is the
/// sum over j of A[i,j] * B[j,k].
inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("mat_mul: inner dimensions differ");
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Quaternion& aij = a(i, j);
            if (q_is_zero(aij)) continue;
            for (std::size_t k = 0; k < b.cols(); ++k) out(i, k) += q_mul(aij, b(j, k));
        }
    return out;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }

/// Conjugate transpose: (A^H)[i,j] = conj(A[j,i]).
inline QMatrix conj_transpose(const QMatrix& a) {
    QMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = q_conj(a(i, j));
    return out;
}

struct EntryNorms {
    double one;        ///< max column sum of entry moduli
    double inf;        ///< max row sum of entry moduli
    double frobenius;  ///< sqrt of the sum of squared entry moduli
};

/// The three entrywise norms. ||A||_1 of A equals ||.||_inf of A^H exactly.
inline EntryNorms entry_norms(const QMatrix& a) {
    std::vector<double> col_sums(a.cols(), 0.0);
    double max_row = 0.0;
    double fro_sq = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double m = q_abs(a(i, j));
            row_sum += m;
            col_sums[j] += m;
            fro_sq += norm_sq(a(i, j));
        }
        max_row = std::max(max_row, row_sum);
    }
    const double max_col = *std::max_element(col_sums.begin(), col_sums.end());
    return {max_col, max_row, std::sqrt(fro_sq)};
}

/// Complex adjoint. Writing A = A1 + A2*j with complex blocks (entrywise
/// w + x*i and y + z*i), returns the block matrix
///   [[ A1,        A2       ],
///    [ -conj(A2), conj(A1) ]].
/// The map is an injective *-homomorphism: additive, multiplicative, and
/// adjoint(A^H) = adjoint(A)^H, so spectral quantities of A can be read off
/// its image.
inline ComplexMatrix complex_adjoint(const QMatrix& a) {
    using C = std::complex<double>;
    const Eigen::Index m = static_cast<Eigen::Index>(a.rows());
    const Eigen::Index n = static_cast<Eigen::Index>(a.cols());
    ComplexMatrix out(2 * m, 2 * n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const Quaternion& q = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            const C a1(q.w, q.x);
            const C a2(q.y, q.z);
            out(i, j) = a1;
            out(i, j + n) = a2;
            out(i + m, j) = -std::conj(a2);
            out(i + m, j + n) = std::conj(a1);
        }
    return out;
}

/// Iteration budget for the spectral solvers; 0 selects the default of
/// 10 * dim * sqrt(dim) where dim is the complex adjoint dimension.
struct SolverOptions {
    std::size_t max_iterations = 0;

    std::size_t budget(std::size_t dim) const {
        if (max_iterations > 0) return max_iterations;
        return static_cast<std::size_t>(10.0 * static_cast<double>(dim) * std::sqrt(static_cast<double>(dim))) + 1;
    }
};

/// All singular values of the complex adjoint of A, descending. They occur
/// in equal pairs; the largest is the spectral norm of A.
inline std::vector<double> adjoint_singular_values(const QMatrix& a) {
    const ComplexMatrix chi = complex_adjoint(a);
    Eigen::JacobiSVD<ComplexMatrix> svd(chi);
    if (svd.info() != Eigen::Success)
        throw ConvergenceError("adjoint_singular_values: SVD did not converge");
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

/// Spectral norm: the largest singular value, equal to the operator norm
/// sup |Ax| / |x| over quaternion vectors. Satisfies
/// ||A||_2^2 = ||A^H||_2^2 = ||A^H A||_2.
inline double spectral_norm(const QMatrix& a) { return adjoint_singular_values(a).front(); }

/// Right spectral radius: the maximum modulus over right eigenvalues of a
/// square A. Every similarity class of right eigenvalues contributes a
/// conjugate pair of adjoint eigenvalues, and the modulus is constant on
/// the class, so this is the spectral radius of the complex adjoint.
inline double right_spectral_radius(const QMatrix& a, const SolverOptions& opts = {}) {
    if (a.rows() != a.cols()) throw DimensionMismatchError("right_spectral_radius: matrix must be square");
    const ComplexMatrix chi = complex_adjoint(a);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver;
    solver.setMaxIterations(static_cast<Eigen::Index>(opts.budget(static_cast<std::size_t>(chi.rows()))));
    solver.compute(chi, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("right_spectral_radius: eigenvalue iteration exceeded its budget");
    double radius = 0.0;
    for (Eigen::Index idx = 0; idx < solver.eigenvalues().size(); ++idx)
        radius = std::max(radius, std::abs(solver.eigenvalues()[idx]));
    return radius;
}

}  // namespace quatbound
