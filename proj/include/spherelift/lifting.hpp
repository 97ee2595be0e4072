#pragma once

#include "spherelift/certificate.hpp"
#include "spherelift/grassmann.hpp"
#include "spherelift/sphere_designs.hpp"

#include <cstdint>
#include <vector>

namespace slift {

enum class PhasePolicy { Fixed, SeededPerPlane };

/// Input to the design lift: a frame of planes verified as a tight
/// t-fusion frame, plus one circle design of order s per plane (a regular
/// (s+1)-gon), all with the same per-plane total weight.
struct LiftSpec {
    FrameConfig frame;
    int tff_strength = 2;    // t in {1, 2}
    int design_order = 5;    // s; per-plane polygon has n = s + 1 vertices
    PhasePolicy phase_policy = PhasePolicy::SeededPerPlane;
    double fixed_phase = 0.0;
    uint64_t seed = 0;
    Mode mode = Mode::Float;  // Exact needs n in {2,4} and exact plane bases

    [[nodiscard]] int polygon_n() const { return design_order + 1; }
    void validate() const;
};

struct PointProvenance {
    uint32_t plane = 0;
    uint32_t vertex = 0;
};

/// A synthesized design on S^{d-1} with per-point provenance. The declared
/// strength is min{s, 2t+1} by construction, never inferred from checks.
struct LiftedDesign {
    WeightedPointSet points;
    int declared_strength = 0;
    std::vector<PointProvenance> provenance;
    Rational weight_total;  // Omega * Lambda, exact bookkeeping
    LiftSpec spec;          // retained so the design can be repaired/re-derived
};

/// Builds the union of per-plane polygons with weights w(z) = omega_V.
/// Throws if the frame fails its tight-fusion-frame check or the spec is
/// inconsistent.
LiftedDesign lift(const LiftSpec& spec);

/// Re-rotates polygons inside planes whose points collide with other planes'
/// points until all points are pairwise distinct (multiset -> set), keeping
/// every per-plane design property. Throws after the retry budget.
LiftedDesign repair_disjointness(const LiftedDesign& design, uint64_t seed,
                                 int retry_budget = 64);

/// True when some point appears more than once (exact or 1e-12 float sense).
bool has_coincident_points(const LiftedDesign& design);

/// Runs both spherical-design criteria at strength r, plus diagnostic
/// residuals at r + 1 (informational; they do not gate the verdict).
Certificate certify_lift(const LiftedDesign& design, int r);

/// Polygon on a plane subspace (k = 2), placed on its stored basis columns.
WeightedPointSet regular_polygon(const Subspace& plane, int n, double phase);

}  // namespace slift
