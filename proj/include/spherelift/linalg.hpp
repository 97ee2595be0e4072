#pragma once

#include "spherelift/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace slift {

/// Dense row-major matrix over Rational or double. The scalar type is the
/// arithmetic mode; a matrix never mixes modes.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] size_t rows() const { return rows_; }
    [[nodiscard]] size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<T>& entries() const { return e_; }
    std::vector<T>& entries() { return e_; }

    [[nodiscard]] Mat transposed() const {
        Mat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& x : r.e_) x *= s;
        return r;
    }

    [[nodiscard]] T trace() const {
        T t(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

using RatMat = Mat<Rational>;
using FloatMat = Mat<double>;

/// Entrywise trace(A B) for symmetric A, B (= sum A_ij B_ij).
template <class T>
T sym_product_trace(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sym_product_trace: shape mismatch");
    T t(0);
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (size_t i = 0; i < ae.size(); ++i) t += ae[i] * be[i];
    return t;
}

inline FloatMat to_float(const RatMat& m) {
    FloatMat f(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).to_double();
    return f;
}

// ---------------------------------------------------------------------------
// Orthonormalization

/// Modified Gram-Schmidt with one re-orthogonalization pass. Input vectors
/// are the columns of the result. Throws on rank deficiency.
FloatMat gram_schmidt(const std::vector<std::vector<double>>& vectors);

/// Exact orthogonalization (no normalization): output vectors are pairwise
/// orthogonal rational vectors spanning the same space. Throws on rank
/// deficiency. Norms stay rational-squared, which keeps projectors exact.
std::vector<std::vector<Rational>> exact_orthogonalize(
    const std::vector<std::vector<Rational>>& vectors);

/// P = sum u u^T / <u,u> over pairwise-orthogonal rational vectors u.
RatMat projector_from_orthogonal(const std::vector<std::vector<Rational>>& orthogonal, size_t dim);

// ---------------------------------------------------------------------------
// SVD (one-sided Jacobi; built for the small cross-Gram matrices that arise
// from principal angles, k <= 4)

/// Singular values in non-increasing order. Throws if the sweep iteration
/// fails to converge (numerically pathological input).
std::vector<double> svd_singular_values(const FloatMat& m);

/// Clamps squared-cosine candidates into [0,1]; excursions beyond `limit`
/// indicate a broken input and raise instead of being hidden.
double clamp_unit_interval(double x, double limit = 1e-9);

}  // namespace slift
