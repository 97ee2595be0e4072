#pragma once

#include "spherelift/certificate.hpp"
#include "spherelift/combinatorics.hpp"
#include "spherelift/gegenbauer.hpp"
#include "spherelift/linalg.hpp"
#include "spherelift/radical.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace slift {

inline constexpr uint64_t kDefaultProbeSeed = 2024;
inline constexpr double kPairwiseTolPerPair = 1e-9;  // scaled by n^2

/// Multiset of unit vectors on S^{d-1} with positive weights. Float mode
/// holds plain doubles; exact mode holds coordinates in Q(sqrt(m_1),...)
/// so membership of the sphere and all design residuals are decided exactly.
struct WeightedPointSet {
    int d = 0;
    Mode mode = Mode::Float;

    std::vector<std::vector<double>> points_f;
    std::vector<double> weights_f;

    std::vector<std::vector<RadicalSum>> points_x;
    std::vector<Rational> weights_x;

    [[nodiscard]] size_t size() const {
        return mode == Mode::Float ? points_f.size() : points_x.size();
    }
    [[nodiscard]] bool empty() const { return size() == 0; }

    [[nodiscard]] bool equal_weights() const;
    [[nodiscard]] double total_weight() const;
    [[nodiscard]] Rational total_weight_exact() const;  // exact mode only

    /// Unit norms (exact, or within 1e-12 in float mode) and positive weights.
    void validate() const;

    /// Float view of an exact set (identity on float sets).
    [[nodiscard]] WeightedPointSet to_float() const;

    static WeightedPointSet from_floats(int d, std::vector<std::vector<double>> pts,
                                        std::vector<double> weights = {});

    /// Exact point r / sqrt(m): rational vector r, positive integer m.
    static std::vector<RadicalSum> scaled_point(const std::vector<Rational>& r, const BigInt& m);
};

/// Probe directions for the moment criterion. Float probes are unit vectors;
/// exact probes are rational vectors of arbitrary positive norm (the moment
/// identity carries the ||y||^m factor).
struct ProbeSet {
    Mode mode = Mode::Float;
    std::vector<std::vector<double>> probes_f;
    std::vector<std::vector<Rational>> probes_x;

    [[nodiscard]] size_t size() const {
        return mode == Mode::Float ? probes_f.size() : probes_x.size();
    }
};

/// Standard basis, all e_i + e_j directions, and 8 seeded random probes.
ProbeSet default_probes(int d, Mode mode, uint64_t seed = kDefaultProbeSeed);

/// Equal-weight pairwise criterion: for each l = 1..t the full double sum
/// of Q_l at pairwise inner products must vanish.
Certificate check_design_pairwise(const WeightedPointSet& x, int t,
                                  std::optional<double> tolerance = {});

/// Weighted moment criterion on a finite probe set: for every probe y and
/// m = 0..t, sum_j w_j <x_j,y>^m equals the sphere moment (0 for odd m).
Certificate check_design_moments(const WeightedPointSet& x, int t,
                                 const ProbeSet* probes = nullptr,
                                 std::optional<double> tolerance = {},
                                 uint64_t probe_seed = kDefaultProbeSeed);

/// Regular n-gon on the plane spanned by two orthonormal columns, vertices
/// cos(2 pi j / n + phase) u + sin(2 pi j / n + phase) v, equal weights.
/// The (n-1)-design property is verified internally before returning.
WeightedPointSet regular_polygon(const FloatMat& plane_basis, int n, double phase);

/// Exact polygon for n in {2, 4}: vertices a u + b v with rational (a, b)
/// from `rotation` = (cos, sin) of an exact rotation (default identity).
/// u, v are exact orthonormal coordinates (radical sums).
WeightedPointSet regular_polygon_exact(int d, const std::vector<RadicalSum>& u,
                                       const std::vector<RadicalSum>& v, int n,
                                       const Rational& rot_cos = Rational(1),
                                       const Rational& rot_sin = Rational(0));

}  // namespace slift
