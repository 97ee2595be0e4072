#include "spherelift/sphere_designs.hpp"

#include "spherelift/parallel.hpp"
#include "spherelift/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace slift {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kTwoPi = 6.283185307179586476925286766559;

RadicalSum inner_exact(const std::vector<RadicalSum>& a, const std::vector<RadicalSum>& b) {
    RadicalSum s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RadicalSum inner_exact_probe(const std::vector<RadicalSum>& a, const std::vector<Rational>& y) {
    RadicalSum s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * RadicalSum(y[i]);
    return s;
}

double inner_f(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

bool WeightedPointSet::equal_weights() const {
    if (mode == Mode::Float) {
        for (double w : weights_f)
            if (std::abs(w - weights_f.front()) > 1e-15 * std::abs(weights_f.front()))
                return false;
        return true;
    }
    for (const auto& w : weights_x)
        if (w != weights_x.front()) return false;
    return true;
}

double WeightedPointSet::total_weight() const {
    if (mode == Mode::Float) {
        double s = 0.0;
        for (double w : weights_f) s += w;
        return s;
    }
    return total_weight_exact().to_double();
}

Rational WeightedPointSet::total_weight_exact() const {
    if (mode != Mode::Exact) throw std::logic_error("total_weight_exact: float-mode set");
    Rational s(0);
    for (const auto& w : weights_x) s += w;
    return s;
}

void WeightedPointSet::validate() const {
    if (d < 1) throw std::domain_error("WeightedPointSet: dimension must be positive");
    if (mode == Mode::Float) {
        if (points_f.size() != weights_f.size())
            throw std::invalid_argument("WeightedPointSet: points/weights length mismatch");
        for (const auto& p : points_f) {
            if (static_cast<int>(p.size()) != d)
                throw std::invalid_argument("WeightedPointSet: point dimension mismatch");
            double n2 = inner_f(p, p);
            if (std::abs(n2 - 1.0) > 3.0 * kUnitTol)
                throw std::domain_error("WeightedPointSet: non-unit point");
        }
        for (double w : weights_f)
            if (!(w > 0.0)) throw std::domain_error("WeightedPointSet: non-positive weight");
    } else {
        if (points_x.size() != weights_x.size())
            throw std::invalid_argument("WeightedPointSet: points/weights length mismatch");
        for (const auto& p : points_x) {
            if (static_cast<int>(p.size()) != d)
                throw std::invalid_argument("WeightedPointSet: point dimension mismatch");
            if (!(inner_exact(p, p) == RadicalSum(1)))
                throw std::domain_error("WeightedPointSet: non-unit point (exact)");
        }
        for (const auto& w : weights_x)
            if (w.sign() <= 0) throw std::domain_error("WeightedPointSet: non-positive weight");
    }
}

WeightedPointSet WeightedPointSet::to_float() const {
    if (mode == Mode::Float) return *this;
    WeightedPointSet out;
    out.d = d;
    out.mode = Mode::Float;
    out.points_f.reserve(points_x.size());
    for (const auto& p : points_x) {
        std::vector<double> q(p.size());
        for (size_t i = 0; i < p.size(); ++i) q[i] = p[i].to_double();
        out.points_f.push_back(std::move(q));
    }
    out.weights_f.reserve(weights_x.size());
    for (const auto& w : weights_x) out.weights_f.push_back(w.to_double());
    return out;
}

WeightedPointSet WeightedPointSet::from_floats(int d, std::vector<std::vector<double>> pts,
                                               std::vector<double> weights) {
    WeightedPointSet x;
    x.d = d;
    x.mode = Mode::Float;
    x.points_f = std::move(pts);
    if (weights.empty()) weights.assign(x.points_f.size(), 1.0);
    x.weights_f = std::move(weights);
    x.validate();
    return x;
}

std::vector<RadicalSum> WeightedPointSet::scaled_point(const std::vector<Rational>& r,
                                                       const BigInt& m) {
    std::vector<RadicalSum> coords;
    coords.reserve(r.size());
    for (const auto& q : r) coords.push_back(RadicalSum::root_term(q / Rational(m), m));
    return coords;
}

ProbeSet default_probes(int d, Mode mode, uint64_t seed) {
    ProbeSet ps;
    ps.mode = mode;
    Rng rng(seed);
    if (mode == Mode::Float) {
        for (int i = 0; i < d; ++i) {
            std::vector<double> e(static_cast<size_t>(d), 0.0);
            e[static_cast<size_t>(i)] = 1.0;
            ps.probes_f.push_back(std::move(e));
        }
        const double inv = 1.0 / std::sqrt(2.0);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::vector<double> e(static_cast<size_t>(d), 0.0);
                e[static_cast<size_t>(i)] = inv;
                e[static_cast<size_t>(j)] = inv;
                ps.probes_f.push_back(std::move(e));
            }
        for (int r = 0; r < 8; ++r) ps.probes_f.push_back(rng.unit_vector(d));
    } else {
        for (int i = 0; i < d; ++i) {
            std::vector<Rational> e(static_cast<size_t>(d), Rational(0));
            e[static_cast<size_t>(i)] = Rational(1);
            ps.probes_x.push_back(std::move(e));
        }
        // e_i + e_j unnormalized; the expected moment carries ||y||^m.
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::vector<Rational> e(static_cast<size_t>(d), Rational(0));
                e[static_cast<size_t>(i)] = Rational(1);
                e[static_cast<size_t>(j)] = Rational(1);
                ps.probes_x.push_back(std::move(e));
            }
        for (int r = 0; r < 8; ++r) {
            std::vector<Rational> e(static_cast<size_t>(d));
            bool nonzero = false;
            do {
                for (auto& q : e) {
                    q = rng.rational_in_unit(64);
                    if (!q.is_zero()) nonzero = true;
                }
            } while (!nonzero);
            ps.probes_x.push_back(std::move(e));
        }
    }
    return ps;
}

Certificate check_design_pairwise(const WeightedPointSet& x, int t,
                                  std::optional<double> tolerance) {
    if (x.empty()) throw std::domain_error("check_design_pairwise: empty point set");
    x.validate();
    if (!x.equal_weights())
        throw std::domain_error("check_design_pairwise: requires equal weights");
    if (x.d < 2) throw std::domain_error("check_design_pairwise: needs d >= 2");
    if (t < 0) throw std::domain_error("check_design_pairwise: negative strength");

    Certificate cert;
    cert.criterion = "spherical-design-pairwise";
    cert.mode = x.mode;
    size_t n = x.size();
    for (int l = 1; l <= t; ++l) cert.degrees.push_back(l);

    if (x.mode == Mode::Float) {
        cert.tolerance = tolerance.value_or(kPairwiseTolPerPair * static_cast<double>(n) *
                                            static_cast<double>(n));
        const auto& pts = x.points_f;
        int d = x.d;
        // Per-degree row sums in a fixed tree order; the reduction shape
        // depends only on n, so results are thread-count independent.
        std::vector<std::vector<double>> rows(static_cast<size_t>(t),
                                              std::vector<double>(n, 0.0));
        auto row_block = indexed_map<std::vector<double>>(n, [&](size_t i) {
            std::vector<double> terms(static_cast<size_t>(t) * n);
            for (size_t j = 0; j < n; ++j) {
                double ip = inner_f(pts[i], pts[j]);
                double prev = 1.0, cur = ip;
                for (int l = 1; l <= t; ++l) {
                    terms[static_cast<size_t>(l - 1) * n + j] = cur;
                    double next = ((2.0 * l + d - 2.0) * ip * cur - l * prev) / (l + d - 2.0);
                    prev = cur;
                    cur = next;
                }
            }
            std::vector<double> out(static_cast<size_t>(t));
            for (int l = 0; l < t; ++l)
                out[static_cast<size_t>(l)] = pairwise_sum(
                    std::span<const double>(terms).subspan(static_cast<size_t>(l) * n, n));
            return out;
        });
        for (size_t i = 0; i < n; ++i)
            for (int l = 0; l < t; ++l) rows[static_cast<size_t>(l)][i] = row_block[i][static_cast<size_t>(l)];
        for (int l = 1; l <= t; ++l) {
            double res = pairwise_sum(rows[static_cast<size_t>(l - 1)]);
            cert.items.push_back(float_residual("l=" + std::to_string(l), res));
        }
    } else {
        cert.tolerance = 0.0;
        Gegenbauer geg(x.d, t);
        std::vector<RadicalSum> acc(static_cast<size_t>(t));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                RadicalSum ip = inner_exact(x.points_x[i], x.points_x[j]);
                for (int l = 1; l <= t; ++l)
                    acc[static_cast<size_t>(l - 1)] += geg.eval_radical(l, ip);
            }
        }
        for (int l = 1; l <= t; ++l) {
            const RadicalSum& r = acc[static_cast<size_t>(l - 1)];
            ResidualItem item;
            item.label = "l=" + std::to_string(l);
            item.value = r.to_double();
            item.exact_zero = r.is_zero();
            if (r.is_rational()) item.exact = r.rational_value();
            cert.items.push_back(std::move(item));
        }
    }
    cert.finalize();
    return cert;
}

Certificate check_design_moments(const WeightedPointSet& x, int t, const ProbeSet* probes,
                                 std::optional<double> tolerance, uint64_t probe_seed) {
    if (x.empty()) throw std::domain_error("check_design_moments: empty point set");
    x.validate();
    if (t < 0) throw std::domain_error("check_design_moments: negative strength");
    ProbeSet defaults;
    if (probes == nullptr) {
        defaults = default_probes(x.d, x.mode, probe_seed);
        probes = &defaults;
    }
    if (probes->mode != x.mode)
        throw std::invalid_argument("check_design_moments: probe/point mode mismatch");
    if (probes->size() == 0) throw std::domain_error("check_design_moments: no probes");

    Certificate cert;
    cert.criterion = "spherical-design-moments";
    cert.mode = x.mode;
    size_t n = x.size();
    for (int m = 0; m <= t; ++m) cert.degrees.push_back(m);

    if (x.mode == Mode::Float) {
        cert.tolerance = tolerance.value_or(kPairwiseTolPerPair * static_cast<double>(n) *
                                            static_cast<double>(n));
        double lambda = x.total_weight();
        for (size_t pi = 0; pi < probes->probes_f.size(); ++pi) {
            const auto& y = probes->probes_f[pi];
            double ny2 = inner_f(y, y);
            if (ny2 < 1e-300) throw std::domain_error("check_design_moments: zero probe");
            std::vector<double> ips(n);
            for (size_t j = 0; j < n; ++j) ips[j] = inner_f(x.points_f[j], y);
            std::vector<double> terms(n);
            std::vector<double> powers(n, 1.0);
            for (int m = 0; m <= t; ++m) {
                for (size_t j = 0; j < n; ++j) terms[j] = x.weights_f[j] * powers[j];
                double lhs = pairwise_sum(terms);
                double expected = 0.0;
                if (m % 2 == 0)
                    expected = lambda * even_moment_ratio(x.d, static_cast<unsigned>(m)).to_double() *
                               std::pow(ny2, m / 2.0);
                cert.items.push_back(float_residual(
                    "m=" + std::to_string(m) + " probe=" + std::to_string(pi), lhs - expected));
                for (size_t j = 0; j < n; ++j) powers[j] *= ips[j];
            }
        }
    } else {
        cert.tolerance = 0.0;
        Rational lambda = x.total_weight_exact();
        for (size_t pi = 0; pi < probes->probes_x.size(); ++pi) {
            const auto& y = probes->probes_x[pi];
            Rational ny2(0);
            for (const auto& q : y) ny2 += q * q;
            if (ny2.is_zero()) throw std::domain_error("check_design_moments: zero probe");
            std::vector<RadicalSum> ips(n);
            for (size_t j = 0; j < n; ++j) ips[j] = inner_exact_probe(x.points_x[j], y);
            std::vector<RadicalSum> powers(n, RadicalSum(Rational(1)));
            for (int m = 0; m <= t; ++m) {
                RadicalSum lhs;
                for (size_t j = 0; j < n; ++j) lhs += RadicalSum(x.weights_x[j]) * powers[j];
                RadicalSum residual = lhs;
                if (m % 2 == 0) {
                    Rational expected = lambda *
                                        even_moment_ratio(x.d, static_cast<unsigned>(m)) *
                                        ny2.pow(static_cast<unsigned>(m / 2));
                    residual -= RadicalSum(expected);
                }
                ResidualItem item;
                item.label = "m=" + std::to_string(m) + " probe=" + std::to_string(pi);
                item.value = residual.to_double();
                item.exact_zero = residual.is_zero();
                if (residual.is_rational()) item.exact = residual.rational_value();
                cert.items.push_back(std::move(item));
                for (size_t j = 0; j < n; ++j) powers[j] *= ips[j];
            }
        }
    }
    cert.finalize();
    return cert;
}

WeightedPointSet regular_polygon(const FloatMat& plane_basis, int n, double phase) {
    if (n < 2) throw std::domain_error("regular_polygon: need n >= 2");
    if (plane_basis.cols() != 2) throw std::invalid_argument("regular_polygon: basis must be d x 2");
    size_t d = plane_basis.rows();
    // Basis columns must be orthonormal.
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (size_t i = 0; i < d; ++i) {
        uu += plane_basis(i, 0) * plane_basis(i, 0);
        vv += plane_basis(i, 1) * plane_basis(i, 1);
        uv += plane_basis(i, 0) * plane_basis(i, 1);
    }
    if (std::abs(uu - 1.0) > 1e-10 || std::abs(vv - 1.0) > 1e-10 || std::abs(uv) > 1e-10)
        throw std::invalid_argument("regular_polygon: basis not orthonormal");

    WeightedPointSet out;
    out.d = static_cast<int>(d);
    out.mode = Mode::Float;
    std::vector<std::vector<double>> circle;
    for (int j = 0; j < n; ++j) {
        double ang = kTwoPi * j / n + phase;
        double c = std::cos(ang), s = std::sin(ang);
        circle.push_back({c, s});
        std::vector<double> p(d);
        for (size_t i = 0; i < d; ++i) p[i] = c * plane_basis(i, 0) + s * plane_basis(i, 1);
        out.points_f.push_back(std::move(p));
    }
    out.weights_f.assign(static_cast<size_t>(n), 1.0);

    // The polygon must certify as an (n-1)-design on its own circle.
    if (n >= 3) {
        auto circ = WeightedPointSet::from_floats(2, circle);
        Certificate c = check_design_pairwise(circ, n - 1);
        if (!c.pass) throw std::logic_error("regular_polygon: internal design check failed");
    }
    out.validate();
    return out;
}

WeightedPointSet regular_polygon_exact(int d, const std::vector<RadicalSum>& u,
                                       const std::vector<RadicalSum>& v, int n,
                                       const Rational& rot_cos, const Rational& rot_sin) {
    if (n != 2 && n != 4)
        throw std::domain_error("regular_polygon_exact: only n in {2,4} supported");
    if (!(rot_cos * rot_cos + rot_sin * rot_sin == Rational(1)))
        throw std::domain_error("regular_polygon_exact: rotation must satisfy c^2+s^2=1");
    WeightedPointSet out;
    out.d = d;
    out.mode = Mode::Exact;
    auto push = [&](const Rational& a, const Rational& b) {
        std::vector<RadicalSum> p(static_cast<size_t>(d));
        for (size_t i = 0; i < static_cast<size_t>(d); ++i)
            p[i] = u[i] * RadicalSum(a) + v[i] * RadicalSum(b);
        out.points_x.push_back(std::move(p));
        out.weights_x.push_back(Rational(1));
    };
    // Vertices of the rotated polygon: rotation applied to (1,0), (0,1), ...
    push(rot_cos, rot_sin);
    if (n == 4) push(-rot_sin, rot_cos);
    push(-rot_cos, -rot_sin);
    if (n == 4) push(rot_sin, -rot_cos);
    out.validate();
    return out;
}

}  // namespace slift
