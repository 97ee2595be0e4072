#include "spherelift/grassmann.hpp"

#include "spherelift/gegenbauer.hpp"
#include "spherelift/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>

namespace slift {

namespace {

constexpr double kBasisOrthoTol = 1e-12;
constexpr double kProjBasisTol = 1e-10;

FloatMat basis_from_float_projector(const FloatMat& p, int k) {
    // Orthonormalize the projector columns, keeping the k independent ones.
    size_t d = p.rows();
    std::vector<std::vector<double>> cols;
    std::vector<std::vector<double>> q;
    for (size_t j = 0; j < d && q.size() < static_cast<size_t>(k); ++j) {
        std::vector<double> w(d);
        for (size_t i = 0; i < d; ++i) w[i] = p(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : q) {
                double dot = 0.0;
                for (size_t i = 0; i < d; ++i) dot += w[i] * u[i];
                for (size_t i = 0; i < d; ++i) w[i] -= dot * u[i];
            }
        double n2 = 0.0;
        for (double x : w) n2 += x * x;
        if (n2 < 1e-16) continue;
        double inv = 1.0 / std::sqrt(n2);
        for (double& x : w) x *= inv;
        q.push_back(std::move(w));
    }
    if (q.size() != static_cast<size_t>(k))
        throw std::domain_error("Subspace: projector rank does not match trace");
    FloatMat out(d, static_cast<size_t>(k));
    for (size_t j = 0; j < q.size(); ++j)
        for (size_t i = 0; i < d; ++i) out(i, j) = q[j][i];
    return out;
}

void check_projector_exact(const RatMat& p, int k) {
    size_t d = p.rows();
    if (p.cols() != d) throw std::invalid_argument("Subspace: projector must be square");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            if (p(i, j) != p(j, i)) throw std::domain_error("Subspace: projector not symmetric");
    if (p.trace() != Rational(k))
        throw std::domain_error("Subspace: projector trace is not the dimension");
    RatMat sq = p * p;
    if (!(sq == p)) throw std::domain_error("Subspace: projector not idempotent");
}

}  // namespace

Subspace Subspace::from_basis(FloatMat q) {
    Subspace s;
    s.d = static_cast<int>(q.rows());
    s.k = static_cast<int>(q.cols());
    s.basis = std::move(q);
    s.validate();
    return s;
}

Subspace Subspace::from_projector(RatMat p) {
    Subspace s;
    s.d = static_cast<int>(p.rows());
    Rational tr = p.trace();
    if (!tr.is_integer()) throw std::domain_error("Subspace: projector trace not integral");
    s.k = static_cast<int>(tr.num().convert_to<long long>());
    check_projector_exact(p, s.k);
    s.basis = basis_from_float_projector(to_float(p), s.k);
    s.projector = std::move(p);
    s.validate();
    return s;
}

Subspace Subspace::from_basis_and_projector(FloatMat q, RatMat p) {
    Subspace s;
    s.d = static_cast<int>(p.rows());
    s.k = static_cast<int>(q.cols());
    check_projector_exact(p, s.k);
    s.basis = std::move(q);
    s.projector = std::move(p);
    s.validate();
    return s;
}

Subspace Subspace::from_span_exact(const std::vector<std::vector<Rational>>& span, int d) {
    auto ortho = exact_orthogonalize(span);
    Subspace s;
    s.d = d;
    s.k = static_cast<int>(ortho.size());
    s.projector = projector_from_orthogonal(ortho, static_cast<size_t>(d));
    std::vector<std::vector<double>> cols;
    for (const auto& u : ortho) {
        std::vector<double> c(static_cast<size_t>(d));
        double n2 = 0.0;
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] = u[i].to_double();
            n2 += c[i] * c[i];
        }
        double inv = 1.0 / std::sqrt(n2);
        for (double& x : c) x *= inv;
        cols.push_back(std::move(c));
    }
    FloatMat q(static_cast<size_t>(d), cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < static_cast<size_t>(d); ++i) q(i, j) = cols[j][i];
    s.basis = std::move(q);
    // Exact coordinates x = u / sqrt(<u,u>) with <u,u> = p/q rational:
    // x_i = (u_i / p) sqrt(p q).
    for (const auto& u : ortho) {
        Rational n2(0);
        for (const auto& x : u) n2 += x * x;
        BigInt radicand = n2.num() * n2.den();
        std::vector<RadicalSum> col(static_cast<size_t>(d));
        for (size_t i = 0; i < col.size(); ++i)
            col[i] = RadicalSum::root_term(u[i] / Rational(n2.num()), radicand);
        s.exact_basis.push_back(std::move(col));
    }
    s.validate();
    return s;
}

Subspace Subspace::plane_from_orthogonal_pair(const std::vector<Rational>& w1,
                                              const std::vector<Rational>& w2, int d) {
    Rational dot(0), n1(0), n2(0);
    for (size_t i = 0; i < w1.size(); ++i) {
        dot += w1[i] * w2[i];
        n1 += w1[i] * w1[i];
        n2 += w2[i] * w2[i];
    }
    if (!dot.is_zero())
        throw std::invalid_argument("plane_from_orthogonal_pair: vectors not orthogonal");
    if (n1.is_zero() || n2.is_zero())
        throw std::invalid_argument("plane_from_orthogonal_pair: zero vector");

    Subspace s;
    s.d = d;
    s.k = 2;
    s.projector = projector_from_orthogonal({w1, w2}, static_cast<size_t>(d));
    FloatMat q(static_cast<size_t>(d), 2);
    double inv1 = 1.0 / std::sqrt(n1.to_double());
    double inv2 = 1.0 / std::sqrt(n2.to_double());
    for (size_t i = 0; i < static_cast<size_t>(d); ++i) {
        q(i, 0) = w1[i].to_double() * inv1;
        q(i, 1) = w2[i].to_double() * inv2;
    }
    s.basis = std::move(q);
    for (const auto* w : {&w1, &w2}) {
        Rational nn(0);
        for (const auto& x : *w) nn += x * x;
        BigInt radicand = nn.num() * nn.den();
        std::vector<RadicalSum> col(static_cast<size_t>(d));
        for (size_t i = 0; i < col.size(); ++i)
            col[i] = RadicalSum::root_term((*w)[i] / Rational(nn.num()), radicand);
        s.exact_basis.push_back(std::move(col));
    }
    return s;
}

void Subspace::validate() const {
    if (d < 1 || k < 1 || k > d) throw std::domain_error("Subspace: bad (d, k)");
    if (basis.rows() != static_cast<size_t>(d) || basis.cols() != static_cast<size_t>(k))
        throw std::invalid_argument("Subspace: basis shape mismatch");
    for (size_t a = 0; a < basis.cols(); ++a)
        for (size_t b = a; b < basis.cols(); ++b) {
            double dot = 0.0;
            for (size_t i = 0; i < basis.rows(); ++i) dot += basis(i, a) * basis(i, b);
            double target = a == b ? 1.0 : 0.0;
            if (std::abs(dot - target) > 100 * kBasisOrthoTol)
                throw std::domain_error("Subspace: basis not orthonormal");
        }
    if (projector) {
        const RatMat& p = *projector;
        if (p.rows() != static_cast<size_t>(d))
            throw std::invalid_argument("Subspace: projector shape mismatch");
        // P must agree with Q Q^T numerically.
        for (size_t i = 0; i < static_cast<size_t>(d); ++i)
            for (size_t j = 0; j < static_cast<size_t>(d); ++j) {
                double qq = 0.0;
                for (size_t c = 0; c < basis.cols(); ++c) qq += basis(i, c) * basis(j, c);
                if (std::abs(p(i, j).to_double() - qq) > kProjBasisTol)
                    throw std::domain_error("Subspace: projector/basis mismatch");
            }
    }
}

AnglePair principal_angles(const Subspace& v, const Subspace& w) {
    if (v.d != w.d || v.k != w.k)
        throw std::invalid_argument("principal_angles: mismatched (d, k)");
    size_t k = static_cast<size_t>(v.k);
    FloatMat cross(k, k);
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            double dot = 0.0;
            for (size_t i = 0; i < static_cast<size_t>(v.d); ++i)
                dot += v.basis(i, a) * w.basis(i, b);
            cross(a, b) = dot;
        }
    auto sv = svd_singular_values(cross);
    AnglePair out;
    out.y.reserve(k);
    for (double s : sv) {
        double sigma = clamp_unit_interval(s, 1e-9);  // sigma in [0,1] up to roundoff
        out.y.push_back(sigma * sigma);
    }
    std::sort(out.y.begin(), out.y.end(), std::greater<>());
    return out;
}

std::optional<ExactAngles> exact_angles(const Subspace& v, const Subspace& w) {
    if (v.d != w.d || v.k != w.k)
        throw std::invalid_argument("exact_angles: mismatched (d, k)");
    if (!v.has_exact() || !w.has_exact()) return std::nullopt;
    if (v.k > 2) throw std::domain_error("exact_angles: supported for k <= 2 only");
    const RatMat& p = *v.projector;
    const RatMat& q = *w.projector;
    ExactAngles out;
    out.e1 = sym_product_trace(p, q);  // tr(P Q), both symmetric
    if (v.k == 2) {
        RatMat m = p * q;
        Rational t2(0);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) t2 += m(i, j) * m(j, i);
        out.e2 = (out.e1 * out.e1 - t2) / Rational(2);
    } else {
        out.e2 = Rational(0);
    }
    return out;
}

double chordal_distance(const Subspace& v, const Subspace& w) {
    AnglePair ap = principal_angles(v, w);
    double s = 0.0;
    for (double y : ap.y) s += 1.0 - y;
    return std::sqrt(std::max(0.0, s));
}

std::optional<Rational> chordal_distance_sq_exact(const Subspace& v, const Subspace& w) {
    auto ea = exact_angles(v, w);
    if (!ea) return std::nullopt;
    return Rational(v.k) - ea->e1;
}

namespace {

bool all_have_exact(const std::vector<Subspace>& ds) {
    for (const auto& s : ds)
        if (!s.has_exact()) return false;
    return true;
}

}  // namespace

UniformityResult is_equichordal(const std::vector<Subspace>& ds, double tol) {
    if (ds.size() < 2) throw std::domain_error("is_equichordal: need at least two subspaces");
    UniformityResult res;
    if (all_have_exact(ds) && ds.front().k <= 2) {
        res.exact = true;
        std::optional<Rational> common;
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = i + 1; j < ds.size(); ++j) {
                Rational dc2 = *chordal_distance_sq_exact(ds[i], ds[j]);
                if (!common) common = dc2;
                if (dc2 != *common) {
                    res.pass = false;
                    return res;
                }
            }
        res.pass = true;
        res.common_value = std::sqrt(common->to_double());
        return res;
    }
    double lo = 1e300, hi = -1e300;
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = i + 1; j < ds.size(); ++j) {
            double dc = chordal_distance(ds[i], ds[j]);
            lo = std::min(lo, dc);
            hi = std::max(hi, dc);
        }
    res.pass = (hi - lo) <= tol;
    res.common_value = 0.5 * (lo + hi);
    return res;
}

UniformityResult is_equiisoclinic(const std::vector<Subspace>& ds, double tol) {
    if (ds.size() < 2) throw std::domain_error("is_equiisoclinic: need at least two subspaces");
    UniformityResult res;
    if (all_have_exact(ds) && ds.front().k <= 2) {
        res.exact = true;
        std::optional<Rational> common;  // common squared cosine
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = i + 1; j < ds.size(); ++j) {
                ExactAngles ea = *exact_angles(ds[i], ds[j]);
                Rational k(ds.front().k);
                Rational y = ea.e1 / k;  // candidate common squared cosine
                // all angles equal within the pair: e1^2 = 4 e2 for k = 2
                if (ds.front().k == 2 && ea.e1 * ea.e1 != Rational(4) * ea.e2) {
                    res.pass = false;
                    return res;
                }
                if (!common) common = y;
                if (y != *common) {
                    res.pass = false;
                    return res;
                }
            }
        res.pass = true;
        res.common_value = common->to_double();
        return res;
    }
    double lo = 1e300, hi = -1e300;
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = i + 1; j < ds.size(); ++j) {
            AnglePair ap = principal_angles(ds[i], ds[j]);
            for (double y : ap.y) {
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
        }
    res.pass = (hi - lo) <= tol;
    res.common_value = 0.5 * (lo + hi);
    return res;
}

std::optional<RatMat> rationalize_projector(const FloatMat& p, long long max_den, double tol) {
    if (p.rows() != p.cols()) return std::nullopt;
    size_t d = p.rows();
    // best rational approximation by continued fractions, denominator capped
    auto snap = [&](double x) -> std::optional<Rational> {
        long long pp = 1, qq = 0, pprev = 0, qprev = 1;  // convergents
        double rem = x;
        for (int iter = 0; iter < 64; ++iter) {
            double fl = std::floor(rem);
            long long a = static_cast<long long>(fl);
            long long pn = a * pp + pprev;
            long long qn = a * qq + qprev;
            if (qn > max_den || qn < 0) break;
            pprev = pp;
            qprev = qq;
            pp = pn;
            qq = qn;
            double frac = rem - fl;
            if (frac < 1e-15) break;
            rem = 1.0 / frac;
        }
        if (qq == 0) return std::nullopt;
        Rational cand(pp, qq);
        if (std::abs(cand.to_double() - x) > tol) return std::nullopt;
        return cand;
    };
    RatMat out(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            auto q = snap(p(i, j));
            if (!q) return std::nullopt;
            out(i, j) = *q;
            out(j, i) = *q;  // symmetry by construction
        }
    Rational tr = out.trace();
    if (!tr.is_integer()) return std::nullopt;
    if (!(out * out == out)) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// Zonal polynomials

namespace detail {
template <class T>
T frac(long long num, long long den);
template <>
double frac<double>(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
}
template <>
Rational frac<Rational>(long long num, long long den) {
    return {num, den};
}
}  // namespace detail

template <class T>
T zonal_p2_e(const T& e1, int d) {
    if (d <= 2) throw std::domain_error("zonal_p2_e: requires d > 2");
    return (detail::frac<T>(4, 1) - detail::frac<T>(d, 1) * e1) * detail::frac<T>(1, 2 * (2 - d));
}

template <class T>
T zonal_p4_e(const T& e1, const T& e2, int d) {
    if (d <= 2) throw std::domain_error("zonal_p4_e: requires d > 2");
    T body = detail::frac<T>(1, 1) - detail::frac<T>(d + 2, 2) * e1 +
             detail::frac<T>(3 * (d + 2) * (d + 4), 64) * e1 * e1 -
             detail::frac<T>((d + 2) * (d + 4), 16) * e2;
    return detail::frac<T>(8, 1) * detail::frac<T>(1, d * (d - 2)) * body;
}

template <class T>
T zonal_p22_e(const T& e1, const T& e2, int d) {
    if (d <= 3) throw std::domain_error("zonal_p22_e: requires d >= 4");
    T body = detail::frac<T>(1, 1) - detail::frac<T>(d - 1, 2) * e1 +
             detail::frac<T>((d - 2) * (d - 1), 2) * e2;
    return detail::frac<T>(2, 1) * detail::frac<T>(1, (d - 2) * (d - 3)) * body;
}

template double zonal_p2_e<double>(const double&, int);
template Rational zonal_p2_e<Rational>(const Rational&, int);
template double zonal_p4_e<double>(const double&, const double&, int);
template Rational zonal_p4_e<Rational>(const Rational&, const Rational&, int);
template double zonal_p22_e<double>(const double&, const double&, int);
template Rational zonal_p22_e<Rational>(const Rational&, const Rational&, int);

namespace {

void zonal_check_args(const std::vector<Rational>& y, int d, int k, int min_k) {
    if (k < min_k) throw std::domain_error("zonal: k below the minimum for this polynomial");
    if (k >= d) throw std::domain_error("zonal: requires k < d");
    if (static_cast<int>(y.size()) != k)
        throw std::invalid_argument("zonal: squared-cosine count must equal k");
}

Rational sym_c2(const std::vector<Rational>& y, int k) {
    Rational s(0);
    for (const auto& v : y) s += v;
    return s / Rational(k);
}

Rational sym_pairs(const std::vector<Rational>& y) {
    Rational s(0);
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = i + 1; j < y.size(); ++j) s += y[i] * y[j];
    return s;
}

}  // namespace

Rational zonal_p2(const std::vector<Rational>& y, int d, int k) {
    zonal_check_args(y, d, k, 1);
    Rational c2 = sym_c2(y, k);
    return Rational(k, k - d) - Rational(d, k - d) * c2;
}

Rational zonal_p4(const std::vector<Rational>& y, int d, int k) {
    zonal_check_args(y, d, k, 1);
    auto p4_raw = [&](const std::vector<Rational>& ys) {
        Rational sq(0);
        for (const auto& v : ys) sq += v * v;
        Rational c4 = Rational(3, k * (k + 2)) * (sq + Rational(2, 3) * sym_pairs(ys));
        return Rational(1) - Rational(2 * (d + 2), k) * sym_c2(ys, k) +
               Rational((d + 2) * (d + 4), k * (k + 2)) * c4;
    };
    Rational norm = p4_raw(std::vector<Rational>(static_cast<size_t>(k), Rational(1)));
    if (norm.is_zero()) throw std::domain_error("zonal_p4: degenerate normalization");
    return p4_raw(y) / norm;
}

Rational zonal_p22(const std::vector<Rational>& y, int d, int k) {
    zonal_check_args(y, d, k, 2);
    auto p22_raw = [&](const std::vector<Rational>& ys) {
        Rational c22 = Rational(2, static_cast<long long>(k) * (k - 1)) * sym_pairs(ys);
        return Rational(1) - Rational(2 * (d - 1), k) * sym_c2(ys, k) +
               Rational(static_cast<long long>(d - 1) * (d - 2),
                        static_cast<long long>(k) * (k - 1)) *
                   c22;
    };
    Rational norm = p22_raw(std::vector<Rational>(static_cast<size_t>(k), Rational(1)));
    if (norm.is_zero()) throw std::domain_error("zonal_p22: degenerate normalization");
    return p22_raw(y) / norm;
}

Rational zonal_one_row_k1(const Rational& y1, int d, int l) {
    Gegenbauer geg(d, 2 * l);
    const auto& c = geg.coefficients(2 * l);
    Rational acc(0);
    for (size_t i = 0; i < c.size(); i += 2) {
        // degree-2l Gegenbauer polynomials are even; odd coefficients vanish
        acc += c[i] * y1.pow(static_cast<unsigned>(i / 2));
    }
    return acc;
}

double zonal_one_row_k1(double y1, int d, int l) {
    Gegenbauer geg(d, 2 * l);
    const auto& c = geg.coefficients(2 * l);
    double acc = 0.0, pw = 1.0;
    for (size_t i = 0; i < c.size(); i += 2) {
        acc += c[i].to_double() * pw;
        pw *= y1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// FrameConfig and pair-sum machinery

bool FrameConfig::all_exact() const {
    for (const auto& s : subspaces)
        if (!s.has_exact()) return false;
    return true;
}

Rational FrameConfig::total_weight() const {
    Rational s(0);
    for (const auto& w : weights) s += w;
    return s;
}

void FrameConfig::validate() const {
    if (subspaces.empty()) throw std::domain_error("FrameConfig: empty");
    if (subspaces.size() != weights.size())
        throw std::invalid_argument("FrameConfig: weights length mismatch");
    int dd = subspaces.front().d, kk = subspaces.front().k;
    for (const auto& s : subspaces)
        if (s.d != dd || s.k != kk)
            throw std::invalid_argument("FrameConfig: mixed (d, k)");
    for (const auto& w : weights)
        if (w.sign() <= 0) throw std::domain_error("FrameConfig: non-positive weight");
}

FrameConfig FrameConfig::equal_weight(std::vector<Subspace> subspaces) {
    FrameConfig f;
    f.weights.assign(subspaces.size(), Rational(1));
    f.subspaces = std::move(subspaces);
    f.validate();
    return f;
}

namespace {

// Scaled-integer view of an exact projector: P = m / q with integer matrix m.
struct ScaledProjector {
    long long q = 1;
    std::vector<int64_t> m;       // d x d row-major
    std::vector<int> support;     // rows/cols with a nonzero entry
};

std::optional<ScaledProjector> scale_projector(const RatMat& p) {
    size_t d = p.rows();
    BigInt q = 1;
    for (const auto& e : p.entries()) q = lcm(q, e.den());
    if (q > BigInt(1) << 20) return std::nullopt;
    ScaledProjector sp;
    sp.q = q.convert_to<long long>();
    sp.m.assign(d * d, 0);
    std::vector<char> in_support(d, 0);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const Rational& e = p(i, j);
            if (e.is_zero()) continue;
            BigInt num = e.num() * (q / e.den());
            if (num > (BigInt(1) << 40) || num < -(BigInt(1) << 40)) return std::nullopt;
            sp.m[i * d + j] = num.convert_to<int64_t>();
            in_support[i] = 1;
            in_support[j] = 1;
        }
    for (size_t i = 0; i < d; ++i)
        if (in_support[i]) sp.support.push_back(static_cast<int>(i));
    return sp;
}

// Exact weighted power sums over all ordered pairs:
//   s1  = sum w_i w_j e1(i,j)
//   s11 = sum w_i w_j e1(i,j)^2
//   s2  = sum w_i w_j e2(i,j)      (k = 2 only)
struct ExactPairSums {
    Rational s0;  // (sum w)^2
    Rational s1, s11, s2;
};

ExactPairSums exact_pair_sums(const FrameConfig& f) {
    size_t n = f.size();
    size_t d = static_cast<size_t>(f.d());
    bool unit_weights = true;
    for (const auto& w : f.weights)
        if (w != Rational(1)) unit_weights = false;

    std::vector<ScaledProjector> scaled;
    bool fast = f.k() <= 2;
    if (fast) {
        scaled.reserve(n );
        for (const auto& s : f.subspaces) {
            auto sp = scale_projector(*s.projector);
            if (!sp) {
                fast = false;
                break;
            }
            scaled.push_back(std::move(*sp));
        }
    }

    ExactPairSums out;
    Rational wsum = f.total_weight();
    out.s0 = wsum * wsum;

    if (fast && unit_weights) {
        // Group integer trace statistics by the pair scale q_i q_j; combine
        // the few groups exactly at the end.
        struct Group {
            BigInt t1, t1sq, t2;
        };
        std::map<long long, Group> groups;
        int k = f.k();
        std::vector<int> inter;
        std::vector<int64_t> prod;
        for (size_t i = 0; i < n; ++i) {
            const auto& a = scaled[i];
            for (size_t j = 0; j < n; ++j) {
                const auto& b = scaled[j];
                inter.clear();
                std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(),
                                      b.support.end(), std::back_inserter(inter));
                if (inter.empty()) continue;  // orthogonal supports: e1 = e2 = 0
                auto& g = groups[a.q * b.q];
                size_t s = inter.size();
                long long t1 = 0;
                for (size_t ii = 0; ii < s; ++ii)
                    for (size_t jj = 0; jj < s; ++jj)
                        t1 += a.m[static_cast<size_t>(inter[ii]) * d + static_cast<size_t>(inter[jj])] *
                              b.m[static_cast<size_t>(inter[ii]) * d + static_cast<size_t>(inter[jj])];
                g.t1 += t1;
                g.t1sq += BigInt(t1) * t1;
                if (k == 2) {
                    // tr((PQ)^2) only needs the support-intersection block
                    prod.assign(s * s, 0);
                    for (size_t ii = 0; ii < s; ++ii)
                        for (size_t kk = 0; kk < s; ++kk) {
                            int64_t av =
                                a.m[static_cast<size_t>(inter[ii]) * d + static_cast<size_t>(inter[kk])];
                            if (av == 0) continue;
                            for (size_t jj = 0; jj < s; ++jj)
                                prod[ii * s + jj] +=
                                    av * b.m[static_cast<size_t>(inter[kk]) * d +
                                             static_cast<size_t>(inter[jj])];
                        }
                    __int128 t2 = 0;
                    for (size_t ii = 0; ii < s; ++ii)
                        for (size_t jj = 0; jj < s; ++jj)
                            t2 += static_cast<__int128>(prod[ii * s + jj]) * prod[jj * s + ii];
                    // tr((PQ)^2) >= 0, so the 128->big conversion is unsigned
                    g.t2 += BigInt(static_cast<uint64_t>(static_cast<unsigned __int128>(t2) >> 64)) *
                                (BigInt(1) << 64) +
                            BigInt(static_cast<uint64_t>(t2));
                }
            }
        }
        for (const auto& [key, g] : groups) {
            Rational qq(key);
            Rational qq2 = qq * qq;
            out.s1 += Rational(g.t1) / qq;
            out.s11 += Rational(g.t1sq) / qq2;
            if (f.k() == 2) out.s2 += (Rational(g.t1sq) - Rational(g.t2)) / (Rational(2) * qq2);
        }
        return out;
    }

    // Generic exact path: per-pair rational traces with weights.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ExactAngles ea = *exact_angles(f.subspaces[i], f.subspaces[j]);
            Rational w = f.weights[i] * f.weights[j];
            out.s1 += w * ea.e1;
            out.s11 += w * ea.e1 * ea.e1;
            if (f.k() == 2) out.s2 += w * ea.e2;
        }
    return out;
}

// Float counterpart with deterministic tree reductions.
struct FloatPairSums {
    double s0, s1, s11, s2;
};

FloatPairSums float_pair_sums(const FrameConfig& f) {
    size_t n = f.size();
    std::vector<double> w(n);
    for (size_t i = 0; i < n; ++i) w[i] = f.weights[i].to_double();
    auto rows = indexed_map<std::array<double, 3>>(n, [&](size_t i) {
        std::vector<double> r1(n), r11(n), r2(n);
        for (size_t j = 0; j < n; ++j) {
            AnglePair ap = principal_angles(f.subspaces[i], f.subspaces[j]);
            double e1 = ap.e1();
            double e2 = f.k() == 2 ? ap.e2() : 0.0;
            double ww = w[i] * w[j];
            r1[j] = ww * e1;
            r11[j] = ww * e1 * e1;
            r2[j] = ww * e2;
        }
        return std::array<double, 3>{pairwise_sum(r1), pairwise_sum(r11), pairwise_sum(r2)};
    });
    std::vector<double> c1(n), c11(n), c2(n);
    for (size_t i = 0; i < n; ++i) {
        c1[i] = rows[i][0];
        c11[i] = rows[i][1];
        c2[i] = rows[i][2];
    }
    double wsum = 0.0;
    for (double x : w) wsum += x;
    return {wsum * wsum, pairwise_sum(c1), pairwise_sum(c11), pairwise_sum(c2)};
}

}  // namespace

Certificate check_tff(const FrameConfig& frame, int t) {
    frame.validate();
    if (t < 1 || t > 2) throw std::domain_error("check_tff: unsupported t (need 1 or 2)");
    if (frame.k() > 2) throw std::domain_error("check_tff: unsupported k (need k <= 2)");
    if (frame.k() >= frame.d()) throw std::domain_error("check_tff: requires k < d");

    Certificate cert;
    cert.criterion = "tight-fusion-frame";
    for (int l = 1; l <= t; ++l) cert.degrees.push_back(l);
    int d = frame.d(), k = frame.k();

    if (frame.all_exact()) {
        cert.mode = Mode::Exact;
        cert.tolerance = 0.0;
        ExactPairSums ps = exact_pair_sums(frame);
        std::vector<Rational> residuals;
        if (k == 2) {
            // sum P2 = a0 s0 + a1 s1 with P2 = (4 - d e1) / (2(2-d))
            Rational p2 = Rational(4, 2 * (2 - d)) * ps.s0 - Rational(d, 2 * (2 - d)) * ps.s1;
            residuals.push_back(p2);
            if (t == 2) {
                Rational c = Rational(8, static_cast<long long>(d) * (d - 2));
                Rational p4 = c * (ps.s0 - Rational(d + 2, 2) * ps.s1 +
                                   Rational(3LL * (d + 2) * (d + 4), 64) * ps.s11 -
                                   Rational(static_cast<long long>(d + 2) * (d + 4), 16) * ps.s2);
                residuals.push_back(p4);
            }
        } else {
            // k = 1: one-row zonals are even Gegenbauer polynomials in y1 = e1
            Gegenbauer geg(d, 2 * t);
            for (int l = 1; l <= t; ++l) {
                const auto& c = geg.coefficients(2 * l);
                Rational acc = c[0] * ps.s0;
                if (c.size() > 2) acc += c[2] * ps.s1;
                if (c.size() > 4) acc += c[4] * ps.s11;
                residuals.push_back(acc);
            }
        }
        for (size_t i = 0; i < residuals.size(); ++i)
            cert.items.push_back(
                exact_residual("P(" + std::to_string(2 * (i + 1)) + ")-sum", residuals[i]));
    } else {
        cert.mode = Mode::Float;
        double wsum = frame.total_weight().to_double();
        cert.tolerance = 1e-9 * wsum * wsum;
        FloatPairSums ps = float_pair_sums(frame);
        std::vector<double> residuals;
        if (k == 2) {
            residuals.push_back(zonal_p2_e<double>(0.0, d) * ps.s0 +
                                (zonal_p2_e<double>(1.0, d) - zonal_p2_e<double>(0.0, d)) * ps.s1);
            if (t == 2) {
                double c = 8.0 / (static_cast<double>(d) * (d - 2));
                residuals.push_back(c * (ps.s0 - (d + 2) / 2.0 * ps.s1 +
                                         3.0 * (d + 2) * (d + 4) / 64.0 * ps.s11 -
                                         static_cast<double>(d + 2) * (d + 4) / 16.0 * ps.s2));
            }
        } else {
            Gegenbauer geg(d, 2 * t);
            for (int l = 1; l <= t; ++l) {
                const auto& c = geg.coefficients(2 * l);
                double acc = c[0].to_double() * ps.s0;
                if (c.size() > 2) acc += c[2].to_double() * ps.s1;
                if (c.size() > 4) acc += c[4].to_double() * ps.s11;
                residuals.push_back(acc);
            }
        }
        for (size_t i = 0; i < residuals.size(); ++i)
            cert.items.push_back(
                float_residual("P(" + std::to_string(2 * (i + 1)) + ")-sum", residuals[i]));
    }
    cert.finalize();
    return cert;
}

Certificate check_grassmann_4design(const std::vector<Subspace>& ds) {
    if (ds.empty()) throw std::domain_error("check_grassmann_4design: empty input");
    FrameConfig f = FrameConfig::equal_weight(ds);
    if (f.k() != 2) throw std::domain_error("check_grassmann_4design: requires k = 2");
    if (f.d() < 4) throw std::domain_error("check_grassmann_4design: requires d >= 4");
    int d = f.d();

    Certificate cert;
    cert.criterion = "grassmann-4-design";
    cert.degrees = {1, 2};

    if (f.all_exact()) {
        cert.mode = Mode::Exact;
        cert.tolerance = 0.0;
        ExactPairSums ps = exact_pair_sums(f);
        Rational p2 = Rational(4, 2 * (2 - d)) * ps.s0 - Rational(d, 2 * (2 - d)) * ps.s1;
        Rational c4 = Rational(8, static_cast<long long>(d) * (d - 2));
        Rational p4 = c4 * (ps.s0 - Rational(d + 2, 2) * ps.s1 +
                            Rational(3LL * (d + 2) * (d + 4), 64) * ps.s11 -
                            Rational(static_cast<long long>(d + 2) * (d + 4), 16) * ps.s2);
        Rational c22 = Rational(2, static_cast<long long>(d - 2) * (d - 3));
        Rational p22 = c22 * (ps.s0 - Rational(d - 1, 2) * ps.s1 +
                              Rational(static_cast<long long>(d - 2) * (d - 1), 2) * ps.s2);
        cert.items.push_back(exact_residual("P(2)-sum", p2));
        cert.items.push_back(exact_residual("P(4)-sum", p4));
        cert.items.push_back(exact_residual("P(2,2)-sum", p22));
    } else {
        cert.mode = Mode::Float;
        double n = static_cast<double>(f.size());
        cert.tolerance = 1e-9 * n * n;
        FloatPairSums ps = float_pair_sums(f);
        double p2 = zonal_p2_e<double>(0.0, d) * ps.s0 +
                    (zonal_p2_e<double>(1.0, d) - zonal_p2_e<double>(0.0, d)) * ps.s1;
        double c4 = 8.0 / (static_cast<double>(d) * (d - 2));
        double p4 = c4 * (ps.s0 - (d + 2) / 2.0 * ps.s1 + 3.0 * (d + 2) * (d + 4) / 64.0 * ps.s11 -
                          static_cast<double>(d + 2) * (d + 4) / 16.0 * ps.s2);
        double c22 = 2.0 / (static_cast<double>(d - 2) * (d - 3));
        double p22 =
            c22 * (ps.s0 - (d - 1) / 2.0 * ps.s1 + static_cast<double>(d - 2) * (d - 1) / 2.0 * ps.s2);
        cert.items.push_back(float_residual("P(2)-sum", p2));
        cert.items.push_back(float_residual("P(4)-sum", p4));
        cert.items.push_back(float_residual("P(2,2)-sum", p22));
    }
    cert.finalize();
    return cert;
}

// ---------------------------------------------------------------------------
// Sphere embedding

FloatMat sphere_image(const Subspace& v) {
    if (v.k >= v.d) throw std::domain_error("sphere_image: requires k < d");
    size_t d = static_cast<size_t>(v.d);
    FloatMat p(d, d);
    if (v.has_exact()) {
        p = to_float(*v.projector);
    } else {
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                double s = 0.0;
                for (size_t c = 0; c < v.basis.cols(); ++c) s += v.basis(i, c) * v.basis(j, c);
                p(i, j) = s;
            }
    }
    double scale = std::sqrt(static_cast<double>(v.d) /
                             (static_cast<double>(v.k) * (v.d - v.k)));
    double shift = static_cast<double>(v.k) / v.d;
    FloatMat out(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) out(i, j) = scale * (p(i, j) - (i == j ? shift : 0.0));
    return out;
}

std::vector<double> sphere_image_coords(const Subspace& v) {
    FloatMat m = sphere_image(v);
    size_t d = m.rows();
    std::vector<double> coords;
    coords.reserve(static_cast<size_t>(embedding_dim(v.d)));
    const double sqrt2 = std::sqrt(2.0);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) coords.push_back(sqrt2 * m(i, j));
    // Traceless diagonal directions diag(1,...,1,-r,0,...)/sqrt(r(r+1)).
    for (size_t r = 1; r < d; ++r) {
        double acc = 0.0;
        for (size_t i = 0; i < r; ++i) acc += m(i, i);
        acc -= static_cast<double>(r) * m(r, r);
        coords.push_back(acc / std::sqrt(static_cast<double>(r) * (r + 1)));
    }
    return coords;
}

double image_inner(const Subspace& v, const Subspace& w) {
    auto exact = image_inner_exact(v, w);
    if (exact) return exact->to_double();
    FloatMat a = sphere_image(v), b = sphere_image(w);
    return sym_product_trace(a, b);
}

std::optional<Rational> image_inner_exact(const Subspace& v, const Subspace& w) {
    if (!v.has_exact() || !w.has_exact()) return std::nullopt;
    if (v.d != w.d || v.k != w.k) throw std::invalid_argument("image_inner: mismatched (d,k)");
    Rational tr = sym_product_trace(*v.projector, *w.projector);
    long long k = v.k, d = v.d;
    return Rational(d, k * (d - k)) * (tr - Rational(k * k, d));
}

Rational simplex_bound(int d, int k, long long n) {
    if (n < 2) throw std::domain_error("simplex_bound: need N >= 2");
    if (k < 1 || k >= d) throw std::domain_error("simplex_bound: need 1 <= k < d");
    return Rational(static_cast<long long>(k) * (d - k), d) * Rational(n, n - 1);
}

}  // namespace slift
