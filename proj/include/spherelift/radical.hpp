#pragma once

#include "spherelift/rational.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace slift {

/// Exact element of Q(sqrt(s_1), sqrt(s_2), ...): a finite sum
/// sum_s  q_s * sqrt(s)  over distinct squarefree positive integers s.
/// Since square roots of distinct squarefree integers are linearly
/// independent over Q, the value is zero iff every coefficient is zero;
/// that gives exact zero tests for quantities like <x, y> on points whose
/// coordinates carry 1/sqrt(m) scales.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const Rational& q) {  // NOLINT(google-explicit-constructor)
        if (!q.is_zero()) terms_[BigInt(1)] = q;
    }
    RadicalSum(long long q) : RadicalSum(Rational(q)) {}  // NOLINT(google-explicit-constructor)

    /// q * sqrt(m) for a positive integer m (m need not be squarefree).
    static RadicalSum root_term(const Rational& q, const BigInt& m) {
        if (m <= 0) throw std::domain_error("RadicalSum: radicand must be positive");
        if (q.is_zero()) return {};
        BigInt s = squarefree_part(m);
        BigInt square = m / s;
        BigInt r = sqrt(square);
        RadicalSum out;
        out.terms_[s] = q * Rational(r);
        return out;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// True when the value lies in Q (single sqrt(1) term or zero).
    [[nodiscard]] bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    [[nodiscard]] Rational rational_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw std::domain_error("RadicalSum: not rational");
        return terms_.begin()->second;
    }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [s, q] : o.terms_) add_term(s, q);
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) {
        for (const auto& [s, q] : o.terms_) add_term(s, -q);
        return *this;
    }

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { a += b; return a; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { a -= b; return a; }
    friend RadicalSum operator-(const RadicalSum& a) {
        RadicalSum r;
        for (const auto& [s, q] : a.terms_) r.terms_[s] = -q;
        return r;
    }

    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r;
        for (const auto& [s1, q1] : a.terms_) {
            for (const auto& [s2, q2] : b.terms_) {
                // sqrt(s1) sqrt(s2) = g sqrt((s1/g)(s2/g)) with g = gcd; both
                // factors squarefree and coprime, so the product is squarefree.
                BigInt g = gcd(s1, s2);
                r.add_term((s1 / g) * (s2 / g), q1 * q2 * Rational(g));
            }
        }
        return r;
    }
    RadicalSum& operator*=(const RadicalSum& o) { *this = *this * o; return *this; }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
        return a.terms_ == b.terms_;
    }

    [[nodiscard]] double to_double() const {
        double v = 0.0;
        for (const auto& [s, q] : terms_)
            v += q.to_double() * std::sqrt(s.convert_to<double>());
        return v;
    }

    [[nodiscard]] const std::map<BigInt, Rational>& terms() const { return terms_; }

private:
    void add_term(const BigInt& s, const Rational& q) {
        if (q.is_zero()) return;
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(s, q);
        } else {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<BigInt, Rational> terms_;
};

}  // namespace slift
