#pragma once

#include "spherelift/certificate.hpp"
#include "spherelift/linalg.hpp"
#include "spherelift/radical.hpp"
#include "spherelift/rational.hpp"

#include <optional>
#include <vector>

namespace slift {

inline constexpr double kEcEiTol = 1e-9;

/// k-dimensional subspace of R^d. Always carries a float orthonormal basis;
/// carries an exact rational projector whenever one is available, which is
/// what makes the identity-level frame checks exact.
struct Subspace {
    int d = 0;
    int k = 0;
    FloatMat basis;                       // d x k, orthonormal columns
    std::optional<RatMat> projector;      // d x d, P = P^T, P^2 = P, tr P = k
    std::vector<std::vector<RadicalSum>> exact_basis;  // optional, k columns

    [[nodiscard]] bool has_exact() const { return projector.has_value(); }

    /// Orthonormal-basis constructor; validates Q^T Q = I within 1e-12.
    static Subspace from_basis(FloatMat q);

    /// Exact-projector constructor; validates symmetry, idempotence and
    /// integral trace exactly, then derives a float basis.
    static Subspace from_projector(RatMat p);

    /// Both representations supplied (e.g. reloaded from disk); fully checked.
    static Subspace from_basis_and_projector(FloatMat q, RatMat p);

    /// Span of exact rational vectors (orthogonalized internally).
    static Subspace from_span_exact(const std::vector<std::vector<Rational>>& span, int d);

    /// Plane spanned by two orthogonal rational vectors (kept unnormalized;
    /// the projector stays rational even when the normalized basis is not).
    static Subspace plane_from_orthogonal_pair(const std::vector<Rational>& w1,
                                               const std::vector<Rational>& w2, int d);

    void validate() const;
};

/// Squared cosines of the principal angles, non-increasing.
struct AnglePair {
    std::vector<double> y;

    [[nodiscard]] double e1() const {
        double s = 0.0;
        for (double v : y) s += v;
        return s;
    }
    [[nodiscard]] double e2() const {
        if (y.size() != 2) throw std::logic_error("AnglePair::e2 needs k = 2");
        return y[0] * y[1];
    }
};

/// Exact elementary symmetric functions of the squared cosines (k <= 2),
/// computed from projector traces: e1 = tr(P Q), e2 = (e1^2 - tr((PQ)^2))/2.
struct ExactAngles {
    Rational e1;
    Rational e2;  // 0 when k = 1
};

AnglePair principal_angles(const Subspace& v, const Subspace& w);
std::optional<ExactAngles> exact_angles(const Subspace& v, const Subspace& w);

double chordal_distance(const Subspace& v, const Subspace& w);
/// d_C^2 = k - e1, exact when both projectors are exact.
std::optional<Rational> chordal_distance_sq_exact(const Subspace& v, const Subspace& w);

struct UniformityResult {
    bool pass = false;
    double common_value = 0.0;  // common d_C (EC) or cos^2 theta (EI)
    bool exact = false;
};

UniformityResult is_equichordal(const std::vector<Subspace>& ds, double tol = kEcEiTol);
UniformityResult is_equiisoclinic(const std::vector<Subspace>& ds, double tol = kEcEiTol);

/// Tries to recover an exact projector from a float one: snaps every entry
/// to the best fraction with denominator <= max_den, then verifies symmetry,
/// idempotence and integral trace exactly and closeness to the input within
/// tol. Returns nothing when the matrix is not algebraically rational at
/// this precision (e.g. projectors with quadratic-irrational entries).
std::optional<RatMat> rationalize_projector(const FloatMat& p, long long max_den = 64,
                                            double tol = 1e-12);

// ---------------------------------------------------------------------------
// Zonal polynomials (normalized to 1 at y = (1,...,1)); the three explicit
// ones of degree <= 2. General-k symmetric forms and the k = 2 closed forms
// in the elementary symmetric variables are both provided; they agree and
// are cross-checked in the test suite.

Rational zonal_p2(const std::vector<Rational>& y, int d, int k);
Rational zonal_p4(const std::vector<Rational>& y, int d, int k);
Rational zonal_p22(const std::vector<Rational>& y, int d, int k);

/// k = 2 closed forms in e1 = y1 + y2, e2 = y1 y2.
template <class T>
T zonal_p2_e(const T& e1, int d);
template <class T>
T zonal_p4_e(const T& e1, const T& e2, int d);
template <class T>
T zonal_p22_e(const T& e1, const T& e2, int d);

/// k = 1 one-row zonal of degree 2l: the even part of the degree-2l
/// Gegenbauer polynomial evaluated at the squared cosine.
Rational zonal_one_row_k1(const Rational& y1, int d, int l);
double zonal_one_row_k1(double y1, int d, int l);

// ---------------------------------------------------------------------------

/// Weighted family of subspaces with common (d, k).
struct FrameConfig {
    std::vector<Subspace> subspaces;
    std::vector<Rational> weights;

    [[nodiscard]] int d() const { return subspaces.empty() ? 0 : subspaces.front().d; }
    [[nodiscard]] int k() const { return subspaces.empty() ? 0 : subspaces.front().k; }
    [[nodiscard]] size_t size() const { return subspaces.size(); }
    [[nodiscard]] bool all_exact() const;
    [[nodiscard]] Rational total_weight() const;

    void validate() const;

    static FrameConfig equal_weight(std::vector<Subspace> subspaces);
};

/// Tight t-fusion-frame test via zonal pair sums: for each l <= t,
/// sum_{V,W} w_V w_W P_(2l)(V, W) must vanish. Exact when every subspace
/// carries an exact projector. Supports k <= 2, t <= 2.
Certificate check_tff(const FrameConfig& frame, int t);

/// Grassmann 4-design test for k = 2: the P_(2), P_(4) and P_(2,2) double
/// sums over all ordered pairs must vanish.
Certificate check_grassmann_4design(const std::vector<Subspace>& ds);

// ---------------------------------------------------------------------------
// Isometric embedding into the unit sphere of the traceless symmetric
// matrices: V -> sqrt(d/(k(d-k))) (P_V - (k/d) I), of Frobenius norm 1.

/// Dimension of the traceless symmetric space, binom(d+1,2) - 1.
inline long long embedding_dim(int d) {
    return static_cast<long long>(d) * (d + 1) / 2 - 1;
}

/// The image matrix (float).
FloatMat sphere_image(const Subspace& v);

/// Coordinates of the image in an orthonormal basis of the traceless
/// symmetric matrices (length binom(d+1,2) - 1, unit norm).
std::vector<double> sphere_image_coords(const Subspace& v);

/// Frobenius inner product of two images; equals the P_(2) zonal value.
double image_inner(const Subspace& v, const Subspace& w);
std::optional<Rational> image_inner_exact(const Subspace& v, const Subspace& w);

/// Simplex bound on the squared minimal chordal distance of N subspaces.
Rational simplex_bound(int d, int k, long long n);

}  // namespace slift
