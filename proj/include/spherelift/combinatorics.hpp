#pragma once

#include "spherelift/rational.hpp"

#include <mutex>
#include <vector>

namespace slift {

/// Memoized Pascal-triangle rows. Out-of-range (k < 0 or k > n) is 0.
/// Concurrent reads are safe; row growth is serialized.
class BinomialTable {
public:
    BigInt operator()(long long n, long long k) const;

    static BinomialTable& instance();

private:
    mutable std::mutex mu_;
    mutable std::vector<std::vector<BigInt>> rows_;  // rows_[n][k]
};

inline BinomialTable& BinomialTable::instance() {
    static BinomialTable t;
    return t;
}

inline BigInt BinomialTable::operator()(long long n, long long k) const {
    if (k < 0 || k > n || n < 0) return 0;
    std::lock_guard lock(mu_);
    while (static_cast<long long>(rows_.size()) <= n) {
        size_t r = rows_.size();
        std::vector<BigInt> row(r + 1);
        row.front() = 1;
        row.back() = 1;
        for (size_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
        rows_.push_back(std::move(row));
    }
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

/// binom(n, k) with the convention binom = 0 for k < 0 or k > n.
/// Small n hit the shared table; large n use the multiplicative form.
inline BigInt binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n <= 64) return BinomialTable::instance()(n, k);
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is binom(n-k+i, i) at each step
    }
    return r;
}

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned m) {
    Rational r(1);
    Rational term = a;
    for (unsigned i = 0; i < m; ++i) {
        r *= term;
        term += Rational(1);
    }
    return r;
}

/// Sphere moment ratio (1/2)_{m/2} / (d/2)_{m/2} for even m; the value of
/// the integral of <x,y>^m over the unit sphere at ||y|| = 1.
inline Rational even_moment_ratio(int d, unsigned m) {
    if (m % 2 != 0) throw std::domain_error("even_moment_ratio: m must be even");
    unsigned h = m / 2;
    return pochhammer(Rational(1, 2), h) / pochhammer(Rational(d, 2), h);
}

}  // namespace slift
