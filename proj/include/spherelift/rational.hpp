#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slift {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// every operation is exact (no rounding anywhere).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : v_(n) {}                   // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    [[nodiscard]] BigInt num() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt den() const { return boost::multiprecision::denominator(v_); }

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_integer() const { return den() == 1; }
    [[nodiscard]] int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    [[nodiscard]] Rational pow(unsigned e) const {
        Rational r(1), base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    [[nodiscard]] double to_double() const { return v_.convert_to<double>(); }

    /// Canonical form: "p/q", or just "p" when q = 1.
    [[nodiscard]] std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    /// Parses "p", "p/q" (arbitrary precision, optional leading '-').
    static Rational parse(const std::string& s);

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double x) { return x; }

/// Largest integer square factor removed: m = square * squarefree_part.
/// Trial division; inputs here are small products of orbit scales.
inline BigInt squarefree_part(BigInt m) {
    if (m <= 0) throw std::domain_error("squarefree_part: positive input required");
    BigInt out = 1;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int mult = 0;
            while (m % p == 0) { m /= p; ++mult; }
            if (mult % 2 == 1) out *= p;
        }
    }
    return out * m;
}

}  // namespace slift
