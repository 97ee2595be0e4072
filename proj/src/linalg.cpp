#include "spherelift/linalg.hpp"

#include <algorithm>

namespace slift {

FloatMat gram_schmidt(const std::vector<std::vector<double>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("gram_schmidt: no vectors");
    size_t d = vectors.front().size();
    size_t k = vectors.size();
    std::vector<std::vector<double>> q;
    q.reserve(k);
    for (const auto& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("gram_schmidt: ragged input");
        double orig = 0.0;
        for (double x : v) orig += x * x;
        std::vector<double> w = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : q) {
                double dot = 0.0;
                for (size_t i = 0; i < d; ++i) dot += w[i] * u[i];
                for (size_t i = 0; i < d; ++i) w[i] -= dot * u[i];
            }
        }
        double n2 = 0.0;
        for (double x : w) n2 += x * x;
        if (n2 <= 1e-20 * std::max(orig, 1.0))
            throw std::domain_error("gram_schmidt: rank-deficient input");
        double inv = 1.0 / std::sqrt(n2);
        for (double& x : w) x *= inv;
        q.push_back(std::move(w));
    }
    FloatMat out(d, k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < d; ++i) out(i, j) = q[j][i];
    return out;
}

std::vector<std::vector<Rational>> exact_orthogonalize(
    const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("exact_orthogonalize: no vectors");
    size_t d = vectors.front().size();
    std::vector<std::vector<Rational>> q;
    std::vector<Rational> norms2;
    for (const auto& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("exact_orthogonalize: ragged input");
        std::vector<Rational> w = v;
        for (size_t j = 0; j < q.size(); ++j) {
            Rational dot(0);
            for (size_t i = 0; i < d; ++i) dot += w[i] * q[j][i];
            if (dot.is_zero()) continue;
            Rational c = dot / norms2[j];
            for (size_t i = 0; i < d; ++i) w[i] -= c * q[j][i];
        }
        Rational n2(0);
        for (const auto& x : w) n2 += x * x;
        if (n2.is_zero()) throw std::domain_error("exact_orthogonalize: rank-deficient input");
        norms2.push_back(n2);
        q.push_back(std::move(w));
    }
    return q;
}

RatMat projector_from_orthogonal(const std::vector<std::vector<Rational>>& orthogonal,
                                 size_t dim) {
    RatMat p(dim, dim);
    for (const auto& u : orthogonal) {
        if (u.size() != dim) throw std::invalid_argument("projector_from_orthogonal: bad dim");
        Rational n2(0);
        for (const auto& x : u) n2 += x * x;
        if (n2.is_zero()) throw std::domain_error("projector_from_orthogonal: zero vector");
        for (size_t i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (u[j].is_zero()) continue;
                p(i, j) += u[i] * u[j] / n2;
            }
        }
    }
    return p;
}

std::vector<double> svd_singular_values(const FloatMat& m) {
    size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return {};
    for (double x : m.entries())
        if (!std::isfinite(x)) throw std::domain_error("svd: non-finite entry");

    // Work on columns of a copy; Jacobi rotations orthogonalize column pairs.
    std::vector<std::vector<double>> a(cols, std::vector<double>(rows));
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i) a[j][i] = m(i, j);

    constexpr double kTol = 1e-13;  // off-diagonal mass target
    constexpr int kMaxSweeps = 60;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (size_t p = 0; p + 1 < cols; ++p) {
            for (size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (size_t i = 0; i < rows; ++i) {
                    alpha += a[p][i] * a[p][i];
                    beta += a[q][i] * a[q][i];
                    gamma += a[p][i] * a[q][i];
                }
                if (std::abs(gamma) <= kTol * std::sqrt(alpha * beta) ||
                    std::abs(gamma) < 1e-300)
                    continue;
                converged = false;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) /
                           (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (size_t i = 0; i < rows; ++i) {
                    double xp = a[p][i], xq = a[q][i];
                    a[p][i] = c * xp - s * xq;
                    a[q][i] = s * xp + c * xq;
                }
            }
        }
    }
    if (!converged) throw std::runtime_error("svd: Jacobi iteration did not converge");

    std::vector<double> sv(cols);
    for (size_t j = 0; j < cols; ++j) {
        double n2 = 0.0;
        for (size_t i = 0; i < rows; ++i) n2 += a[j][i] * a[j][i];
        sv[j] = std::sqrt(n2);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double clamp_unit_interval(double x, double limit) {
    if (x < -limit || x > 1.0 + limit)
        throw std::domain_error("clamp_unit_interval: value outside [0,1] beyond tolerance");
    return std::min(1.0, std::max(0.0, x));
}

}  // namespace slift
