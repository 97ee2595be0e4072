#pragma once

#include "spherelift/radical.hpp"
#include "spherelift/rational.hpp"

#include <stdexcept>
#include <vector>

namespace slift {

/// Scaled Gegenbauer polynomials Q_l for dimension d >= 2, normalized so
/// Q_l(1) = 1, with Q_0 = 1, Q_1(x) = x and the three-term recurrence
///   (l + d - 2) Q_{l+1}(x) = (2l + d - 2) x Q_l(x) - l Q_{l-1}(x).
/// Evaluation by the recurrence is exact over Rational; the monomial
/// coefficient table provides an independent route and powers evaluation
/// at radical-valued arguments.
class Gegenbauer {
public:
    Gegenbauer(int dim, int max_degree) : d_(dim), tmax_(max_degree) {
        if (dim < 2) throw std::domain_error("Gegenbauer: dimension must be >= 2");
        if (max_degree < 0) throw std::domain_error("Gegenbauer: negative degree");
        build_coefficients();
    }

    [[nodiscard]] int dim() const { return d_; }
    [[nodiscard]] int max_degree() const { return tmax_; }

    /// Monomial coefficients of Q_l (index = power of x).
    [[nodiscard]] const std::vector<Rational>& coefficients(int l) const {
        return coeffs_.at(static_cast<size_t>(l));
    }

    template <class T>
    [[nodiscard]] T eval(int l, const T& x) const {
        if (l < 0) throw std::domain_error("Gegenbauer: negative degree");
        if (l == 0) return T(1);
        T prev = T(1);
        T cur = x;
        for (int m = 1; m < l; ++m) {
            // (m + d - 2) Q_{m+1} = (2m + d - 2) x Q_m - m Q_{m-1}
            T next = (x * cur) * T(Rational(2 * m + d_ - 2, m + d_ - 2)) -
                     prev * T(Rational(m, m + d_ - 2));
            prev = cur;
            cur = next;
        }
        return cur;
    }

    [[nodiscard]] double eval_double(int l, double x) const {
        if (l == 0) return 1.0;
        double prev = 1.0, cur = x;
        for (int m = 1; m < l; ++m) {
            double next = ((2.0 * m + d_ - 2.0) * x * cur - m * prev) / (m + d_ - 2.0);
            prev = cur;
            cur = next;
        }
        return cur;
    }

    /// Evaluation via the coefficient table (independent of eval()).
    [[nodiscard]] Rational eval_by_coefficients(int l, const Rational& x) const {
        const auto& c = coefficients(l);
        Rational acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    /// Exact evaluation at a radical-valued argument (Horner).
    [[nodiscard]] RadicalSum eval_radical(int l, const RadicalSum& x) const {
        const auto& c = coefficients(l);
        RadicalSum acc;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + RadicalSum(c[i]);
        return acc;
    }

private:
    void build_coefficients() {
        coeffs_.assign(static_cast<size_t>(tmax_) + 1, {});
        coeffs_[0] = {Rational(1)};
        if (tmax_ >= 1) coeffs_[1] = {Rational(0), Rational(1)};
        for (int m = 1; m < tmax_; ++m) {
            const auto& qm = coeffs_[static_cast<size_t>(m)];
            const auto& qp = coeffs_[static_cast<size_t>(m) - 1];
            std::vector<Rational> next(static_cast<size_t>(m) + 2, Rational(0));
            Rational ca(2 * m + d_ - 2, m + d_ - 2);
            Rational cb(m, m + d_ - 2);
            for (size_t i = 0; i < qm.size(); ++i) next[i + 1] += ca * qm[i];
            for (size_t i = 0; i < qp.size(); ++i) next[i] -= cb * qp[i];
            coeffs_[static_cast<size_t>(m) + 1] = std::move(next);
        }
    }

    int d_;
    int tmax_;
    std::vector<std::vector<Rational>> coeffs_;
};

/// One-off recurrence evaluation; exact on rational arguments.
inline Rational gegenbauer_eval(int d, int l, const Rational& x) {
    if (d < 2) throw std::domain_error("gegenbauer_eval: dimension must be >= 2");
    if (l < 0) throw std::domain_error("gegenbauer_eval: negative degree");
    if (l == 0) return Rational(1);
    Rational prev(1), cur = x;
    for (int m = 1; m < l; ++m) {
        Rational next = (x * cur) * Rational(2 * m + d - 2, m + d - 2) -
                        prev * Rational(m, m + d - 2);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double gegenbauer_eval(int d, int l, double x) {
    if (d < 2) throw std::domain_error("gegenbauer_eval: dimension must be >= 2");
    if (l < 0) throw std::domain_error("gegenbauer_eval: negative degree");
    if (l == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int m = 1; m < l; ++m) {
        double next = ((2.0 * m + d - 2.0) * x * cur - m * prev) / (m + d - 2.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace slift
