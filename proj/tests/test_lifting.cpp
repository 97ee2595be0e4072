#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherelift/lifting.hpp"
#include "spherelift/orbits.hpp"
#include "spherelift/parallel.hpp"

#include <map>

using namespace slift;

namespace {

FrameConfig orbit_frame(int d, int a, int b) {
    return FrameConfig::equal_weight(enumerate_orbit(OrbitParams{d, a, b}));
}

FrameConfig complementary_pair_r4() {
    auto mk = [](int i, int j) {
        std::vector<Rational> u(4, Rational(0)), v(4, Rational(0));
        u[static_cast<size_t>(i)] = Rational(1);
        v[static_cast<size_t>(j)] = Rational(1);
        return Subspace::plane_from_orthogonal_pair(u, v, 4);
    };
    return FrameConfig::equal_weight({mk(0, 1), mk(2, 3)});
}

LiftSpec spec_for(FrameConfig frame, int t, int s, uint64_t seed = 7,
                  PhasePolicy policy = PhasePolicy::SeededPerPlane) {
    LiftSpec spec;
    spec.frame = std::move(frame);
    spec.tff_strength = t;
    spec.design_order = s;
    spec.phase_policy = policy;
    spec.seed = seed;
    return spec;
}

}  // namespace

TEST_CASE("hexagon lift of the 16-plane orbit is a 96-point 5-design") {
    LiftedDesign design = lift(spec_for(orbit_frame(4, 1, 3), 2, 5));
    CHECK(design.points.size() == 96);
    CHECK(design.points.d == 4);
    CHECK(design.declared_strength == 5);
    CHECK(design.weight_total == Rational(96));

    Certificate cert = certify_lift(design, 5);
    CHECK(cert.pass);
    double tol = 1e-9 * 96.0 * 96.0;
    for (const auto& item : cert.items) CHECK(std::abs(item.value) <= tol);
    // strength is exactly 5: the degree-6 diagnostic must be solidly nonzero
    REQUIRE(!cert.diagnostics.empty());
    CHECK(std::abs(cert.diagnostics[0].value) > tol);
}

TEST_CASE("complementary planes lift to strength min(s, 3)") {
    LiftedDesign design = lift(spec_for(complementary_pair_r4(), 1, 5));
    CHECK(design.declared_strength == 3);
    CHECK(design.points.size() == 12);
    Certificate c3 = certify_lift(design, 3);
    CHECK(c3.pass);
    // generic phases do not reach degree 4
    CHECK(std::abs(c3.diagnostics[0].value) > c3.tolerance);
}

TEST_CASE("square lift of the tight orbit reaches only the polygon strength") {
    LiftedDesign design = lift(spec_for(orbit_frame(4, 1, 3), 2, 3));
    CHECK(design.declared_strength == 3);
    CHECK(design.points.size() == 64);
    CHECK(certify_lift(design, 3).pass);
}

TEST_CASE("lift refuses a frame that fails its fusion-frame check") {
    CHECK_THROWS_AS(lift(spec_for(orbit_frame(5, 1, 1), 2, 5)), std::domain_error);
}

TEST_CASE("strength law on a small grid") {
    for (int t : {1, 2}) {
        FrameConfig frame = t == 1 ? complementary_pair_r4() : orbit_frame(4, 1, 3);
        for (int s : {2, 4, 6}) {
            LiftedDesign design = lift(spec_for(frame, t, s, 11));
            int r = std::min(s, 2 * t + 1);
            CHECK(design.declared_strength == r);
            CHECK(certify_lift(design, r).pass);
        }
    }
}

TEST_CASE("provenance partitions the points by plane") {
    LiftedDesign design = lift(spec_for(orbit_frame(4, 1, 3), 2, 5));
    std::map<uint32_t, int> per_plane;
    for (const auto& p : design.provenance) per_plane[p.plane]++;
    CHECK(per_plane.size() == 16);
    for (const auto& [plane, count] : per_plane) CHECK(count == 6);
}

TEST_CASE("weight scaling does not change the verdict") {
    FrameConfig frame = orbit_frame(4, 1, 3);
    for (auto& w : frame.weights) w = Rational(2);
    LiftedDesign design = lift(spec_for(frame, 2, 5));
    CHECK(design.weight_total == Rational(192));
    CHECK(design.points.equal_weights());  // still equal across points
    CHECK(certify_lift(design, 5).pass);
}

TEST_CASE("fixed zero phases collide and repair separates them") {
    LiftSpec spec = spec_for(orbit_frame(4, 1, 3), 2, 5, 0, PhasePolicy::Fixed);
    LiftedDesign design = lift(spec);
    // planes sharing the same first basis vector all contain +-u
    CHECK(has_coincident_points(design));

    LiftedDesign fixed = repair_disjointness(design, 99);
    CHECK(!has_coincident_points(fixed));
    // repairs preserve the design property and the verdict
    Certificate before = certify_lift(design, 5);
    Certificate after = certify_lift(fixed, 5);
    CHECK(before.pass == after.pass);
    CHECK(after.pass);
}

TEST_CASE("already disjoint designs are returned unchanged") {
    LiftedDesign design = lift(spec_for(orbit_frame(4, 1, 3), 2, 5, 21));
    CHECK(!has_coincident_points(design));
    LiftedDesign same = repair_disjointness(design, 5);
    CHECK(same.points.points_f == design.points.points_f);
}

TEST_CASE("exact lift with squares: 64 exact points at strength 3") {
    LiftSpec spec = spec_for(orbit_frame(4, 1, 3), 2, 3, 0, PhasePolicy::Fixed);
    spec.mode = Mode::Exact;
    LiftedDesign design = lift(spec);
    CHECK(design.points.mode == Mode::Exact);
    CHECK(design.points.size() == 64);
    Certificate cert = certify_lift(design, 3);
    CHECK(cert.mode == Mode::Exact);
    CHECK(cert.pass);

    // exact repair keeps everything exact and distinct
    CHECK(has_coincident_points(design));  // +-u shared between sign classes
    LiftedDesign fixed = repair_disjointness(design, 3);
    CHECK(fixed.points.mode == Mode::Exact);
    CHECK(!has_coincident_points(fixed));
    Certificate cert2 = certify_lift(fixed, 3);
    CHECK(cert2.mode == Mode::Exact);
    CHECK(cert2.pass);
}

TEST_CASE("exact antipodal lift (n = 2) reaches strength 1") {
    LiftSpec spec = spec_for(orbit_frame(4, 1, 3), 2, 1, 0, PhasePolicy::Fixed);
    spec.mode = Mode::Exact;
    LiftedDesign design = lift(spec);
    CHECK(design.points.size() == 32);
    CHECK(design.declared_strength == 1);
    CHECK(certify_lift(design, 1).pass);
}

TEST_CASE("exact mode rejects unsupported polygons") {
    LiftSpec spec = spec_for(orbit_frame(4, 1, 3), 2, 5, 0, PhasePolicy::Fixed);
    spec.mode = Mode::Exact;
    CHECK_THROWS_AS(lift(spec), std::domain_error);
}

TEST_CASE("float residuals do not depend on the worker-thread cap") {
    // 70 planes x 8 vertices = 560 points, enough to engage the row pool
    std::vector<Subspace> planes;
    for (auto [a, b] : {std::pair{1, 1}, {2, 2}})
        for (auto& s : enumerate_orbit(OrbitParams{5, a, b})) planes.push_back(std::move(s));
    LiftedDesign design = lift(spec_for(FrameConfig::equal_weight(planes), 2, 7, 3));
    CHECK(design.points.size() == 560);

    int saved = thread_cap();
    set_thread_cap(1);
    Certificate serial = check_design_pairwise(design.points, 5);
    set_thread_cap(4);
    Certificate pooled = check_design_pairwise(design.points, 5);
    set_thread_cap(saved);
    for (size_t i = 0; i < serial.items.size(); ++i)
        CHECK(serial.items[i].value == pooled.items[i].value);  // bitwise equal
}
