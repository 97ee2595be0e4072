#pragma once

#include "spherelift/certificate.hpp"
#include "spherelift/grassmann.hpp"
#include "spherelift/rational.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace slift {

inline constexpr uint64_t kDefaultOrbitCap = 1000000;

/// Parameters of a signed-permutation orbit of planes in G(2,d): the plane
/// spanned by the two normalized indicator vectors of disjoint index sets of
/// sizes a and b, together with everything reachable from it by signed
/// coordinate permutations.
struct OrbitParams {
    int d = 0;
    int a = 0;
    int b = 0;

    void validate() const {
        if (!(1 <= a && a <= b && a + b <= d))
            throw std::domain_error("OrbitParams: need 1 <= a <= b and a + b <= d");
    }
    friend bool operator==(const OrbitParams&, const OrbitParams&) = default;
    friend auto operator<=>(const OrbitParams&, const OrbitParams&) = default;
};

/// (A, B, eps, delta) as bitmasks over [d] (d <= 64 for enumeration):
/// index sets A, B and the indices carrying a minus sign within each.
/// Canonical form: the sign at min(A) and at min(B) is +, and when a = b
/// additionally min(A) < min(B); each plane has exactly one canonical tag.
struct OrbitTag {
    uint64_t set_a = 0;
    uint64_t set_b = 0;
    uint64_t neg_a = 0;
    uint64_t neg_b = 0;

    friend bool operator==(const OrbitTag&, const OrbitTag&) = default;
    friend auto operator<=>(const OrbitTag&, const OrbitTag&) = default;
};

/// Disjoint union of whole orbits in a common dimension.
struct OrbitUnion {
    int d = 0;
    std::vector<std::pair<int, int>> parts;  // distinct (a, b) pairs

    void validate() const;
};

/// Fourth-moment probe directions of the two-point criterion.
enum class Probe { E1, E1PlusE2 };

/// |orbit| from the closed-form count (binomials and sign classes).
BigInt orbit_size(const OrbitParams& p);

/// All canonical tags of the orbit, in lexicographic order.
std::vector<OrbitTag> enumerate_orbit_tags(const OrbitParams& p, uint64_t cap = kDefaultOrbitCap);

/// Visits canonical tags without materializing them.
void for_each_orbit_tag(const OrbitParams& p, const std::function<void(const OrbitTag&)>& fn);

/// The plane of a tag, with exact rational projector and exact basis.
Subspace subspace_from_tag(const OrbitParams& p, const OrbitTag& tag);

/// Enumerated orbit as subspaces (exact projectors), canonical-tag order.
std::vector<Subspace> enumerate_orbit(const OrbitParams& p, uint64_t cap = kDefaultOrbitCap);

/// Closed-form orbit average of ||P_W x||^4 at the probe (exact).
Rational orbit_fourth_moment(const OrbitParams& p, Probe probe);

/// Independent route: sums the quadratic form over the enumerated orbit,
/// using only the projector matrices. Agrees exactly with the closed form.
Rational orbit_fourth_moment_brute(const OrbitParams& p, Probe probe,
                                   uint64_t cap = kDefaultOrbitCap);

/// Defect of the two-point test for a single orbit; zero iff the orbit is a
/// tight 2-fusion frame. Exact closed form.
Rational orbit_defect(const OrbitParams& p);

/// Enumerated orbit bundled with its parameters (input to the two-point test).
struct EnumeratedOrbit {
    OrbitParams params;
    std::vector<Subspace> subspaces;
};

/// Two-point criterion on a union of full orbits: the fourth-moment averages
/// at the two probes must agree exactly. Rejects partial-orbit input.
Certificate two_point_test(const std::vector<EnumeratedOrbit>& orbits);

/// Convenience: enumerate the union's orbits, then run the two-point test.
Certificate two_point_test(const OrbitUnion& u, uint64_t cap = kDefaultOrbitCap);

/// Weighted defect sum over the union (exact) and its verdict.
struct UnionCondition {
    Rational weighted_defect_sum;
    bool pass = false;
};
UnionCondition union_condition(const OrbitUnion& u);

/// All (a, b) with the single-orbit tightness equation at dimension d.
std::vector<std::pair<int, int>> single_orbit_solutions(int d);

/// Scaled copy of a seed solution; the seed must satisfy the single-orbit
/// equation, and the result does too (checked).
OrbitParams scale_solution(int d0, int a0, int b0, int s);

/// Unordered pair of distinct orbits whose weighted defects cancel.
struct TwoOrbitSolution {
    std::pair<int, int> first;
    std::pair<int, int> second;
    bool pure = false;  // both defects nonzero (not a union of two single solutions)
};

/// Exhaustive exact search over unordered pairs at dimension d.
std::vector<TwoOrbitSolution> two_orbit_solutions(int d);

}  // namespace slift
