#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherelift/gegenbauer.hpp"
#include "spherelift/rng.hpp"
#include "spherelift/sphere_designs.hpp"

#include <cmath>

using namespace slift;

namespace {

WeightedPointSet ngon(int n, double phase = 0.0) {
    FloatMat basis = FloatMat::identity(2);
    return regular_polygon(basis, n, phase);
}

WeightedPointSet cross_polytope_r2_exact() {
    WeightedPointSet x;
    x.d = 2;
    x.mode = Mode::Exact;
    auto unit = [](int i, int sign) {
        std::vector<Rational> r(2, Rational(0));
        r[static_cast<size_t>(i)] = Rational(sign);
        return WeightedPointSet::scaled_point(r, 1);
    };
    x.points_x = {unit(0, 1), unit(0, -1), unit(1, 1), unit(1, -1)};
    x.weights_x.assign(4, Rational(1));
    x.validate();
    return x;
}

}  // namespace

TEST_CASE("gegenbauer normalization and low-degree forms") {
    for (int d : {2, 3, 4, 7, 11})
        for (int l : {0, 1, 2, 3, 5, 8})
            CHECK(gegenbauer_eval(d, l, Rational(1)) == Rational(1));

    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Rational x = rng.rational_in_unit();
        CHECK(gegenbauer_eval(6, 1, x) == x);
        // Q_2 in dimension D0: (D0 x^2 - 1) / (D0 - 1)
        for (int d0 : {9, 14, 20})
            CHECK(gegenbauer_eval(d0, 2, x) ==
                  (Rational(d0) * x * x - Rational(1)) / Rational(d0 - 1));
    }
}

TEST_CASE("gegenbauer recurrence residual is exactly zero on rationals") {
    Rng rng(11);
    for (int d : {2, 3, 5, 8, 12}) {
        Gegenbauer geg(d, 12);
        for (int i = 0; i < 40; ++i) {
            Rational x = rng.rational_in_unit();
            for (int l = 1; l < 12; ++l) {
                Rational lhs = Rational(l + d - 2) * geg.eval(l + 1, x);
                Rational rhs =
                    Rational(2 * l + d - 2) * x * geg.eval(l, x) - Rational(l) * geg.eval(l - 1, x);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("recurrence evaluation agrees with the coefficient route") {
    Rng rng(13);
    Gegenbauer geg(5, 10);
    for (int i = 0; i < 50; ++i) {
        Rational x = rng.rational_in_unit();
        for (int l = 0; l <= 10; ++l) CHECK(geg.eval(l, x) == geg.eval_by_coefficients(l, x));
    }
}

TEST_CASE("radical-argument evaluation matches rational evaluation") {
    Gegenbauer geg(4, 6);
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        Rational x = rng.rational_in_unit();
        for (int l = 0; l <= 6; ++l) {
            RadicalSum v = geg.eval_radical(l, RadicalSum(x));
            CHECK(v.is_rational());
            CHECK(v.rational_value() == geg.eval(l, x));
        }
    }
}

TEST_CASE("antipodal pair is a 1-design") {
    std::vector<std::vector<double>> pts = {{1, 0, 0}, {-1, 0, 0}};
    auto x = WeightedPointSet::from_floats(3, pts);
    CHECK(check_design_pairwise(x, 1).pass);
}

TEST_CASE("regular n-gon is an (n-1)-design and not an n-design") {
    for (int n = 2; n <= 12; ++n) {
        auto x = ngon(n, 0.37);
        CHECK(check_design_pairwise(x, n - 1).pass);
        Certificate fail = check_design_pairwise(x, n);
        CHECK(!fail.pass);
        // the failing degree is exactly n with residual n^2
        CHECK(fail.items.back().value == doctest::Approx(n * n).epsilon(1e-9));
    }
}

TEST_CASE("pairwise and moment criteria agree on equal-weight sets") {
    for (int n = 3; n <= 8; ++n) {
        auto x = ngon(n, 1.234);
        for (int t : {n - 1, n}) {
            bool pw = check_design_pairwise(x, t).pass;
            bool mm = check_design_moments(x, t).pass;
            CHECK(pw == mm);
        }
    }
}

TEST_CASE("pairwise residuals are invariant under rotation") {
    Rng rng(23);
    auto x = ngon(5, 0.2);
    // random rotation of R^2
    double a = rng.uniform(0, 6.28);
    auto y = x;
    for (auto& p : y.points_f) {
        double c = std::cos(a), s = std::sin(a);
        double p0 = p[0] * c - p[1] * s;
        double p1 = p[0] * s + p[1] * c;
        p = {p0, p1};
    }
    Certificate cx = check_design_pairwise(x, 6);
    Certificate cy = check_design_pairwise(y, 6);
    for (size_t i = 0; i < cx.items.size(); ++i)
        CHECK(cx.items[i].value == doctest::Approx(cy.items[i].value).epsilon(1e-9));
}

TEST_CASE("exact moment criterion on the coordinate square in R^2") {
    auto x = cross_polytope_r2_exact();
    // probe e1 only: m = 2 moment must be Lambda/2
    ProbeSet probes;
    probes.mode = Mode::Exact;
    probes.probes_x = {{Rational(1), Rational(0)}};
    Certificate c = check_design_moments(x, 3, &probes);
    CHECK(c.pass);
    CHECK(c.mode == Mode::Exact);
    // the m=2 item: sum w <x,e1>^2 = 2, Lambda * (1/2)_1 / (1)_1 = 4 * 1/2 = 2
    for (const auto& item : c.items)
        if (item.label.rfind("m=2", 0) == 0) {
            CHECK(item.exact.has_value());
            CHECK(*item.exact == Rational(0));
        }
}

TEST_CASE("single point fails the odd moment") {
    WeightedPointSet x;
    x.d = 2;
    x.mode = Mode::Exact;
    std::vector<Rational> e1 = {Rational(1), Rational(0)};
    x.points_x = {WeightedPointSet::scaled_point(e1, 1)};
    x.weights_x = {Rational(1)};
    ProbeSet probes;
    probes.mode = Mode::Exact;
    probes.probes_x = {{Rational(1), Rational(0)}};
    Certificate c = check_design_moments(x, 1, &probes);
    CHECK(!c.pass);
    bool found = false;
    for (const auto& item : c.items)
        if (item.label.rfind("m=1", 0) == 0) {
            CHECK(*item.exact == Rational(1));  // odd moment equals 1, not 0
            found = true;
        }
    CHECK(found);
}

TEST_CASE("exact pairwise check on the square, including irrational-scale points") {
    auto x = cross_polytope_r2_exact();
    CHECK(check_design_pairwise(x, 3).pass);
    CHECK(!check_design_pairwise(x, 4).pass);

    // diamond rotated by 45 degrees: points (+-1 +-1)/sqrt2, exact
    WeightedPointSet y;
    y.d = 2;
    y.mode = Mode::Exact;
    for (auto [a, b] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
        std::vector<Rational> r = {Rational(a), Rational(b)};
        y.points_x.push_back(WeightedPointSet::scaled_point(r, 2));
        y.weights_x.push_back(Rational(1));
    }
    y.validate();
    CHECK(check_design_pairwise(y, 3).pass);
    CHECK(!check_design_pairwise(y, 4).pass);
}

TEST_CASE("weighted union of two squares is a weighted 3-design") {
    auto u = cross_polytope_r2_exact();
    for (auto [p, q] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
        std::vector<Rational> r = {Rational(p), Rational(q)};
        u.points_x.push_back(WeightedPointSet::scaled_point(r, 2));
        u.weights_x.push_back(Rational(5, 2));  // different weight on the second square
    }
    u.validate();
    CHECK(!u.equal_weights());
    Certificate c = check_design_moments(u, 3);
    CHECK(c.mode == Mode::Exact);
    CHECK(c.pass);
}

TEST_CASE("regular_polygon endpoints and validation") {
    auto two = ngon(2);
    CHECK(two.points_f[0][0] == doctest::Approx(1.0));
    CHECK(two.points_f[1][0] == doctest::Approx(-1.0));

    auto four = ngon(4);
    CHECK(four.points_f[1][1] == doctest::Approx(1.0));
    CHECK(four.points_f[2][0] == doctest::Approx(-1.0));

    CHECK_THROWS_AS(ngon(1), std::domain_error);

    // polygon in a plane inside R^4: points live on the plane's circle
    // (the (n-1)-design property on that circle is certified internally)
    FloatMat basis(4, 2);
    basis(0, 0) = 1.0;
    basis(2, 1) = 1.0;
    auto hex = regular_polygon(basis, 6, 0.77);
    CHECK(hex.d == 4);
    CHECK(hex.points_f.size() == 6);
    for (const auto& p : hex.points_f) {
        CHECK(p[1] == doctest::Approx(0.0));  // confined to the span
        CHECK(p[3] == doctest::Approx(0.0));
        CHECK(p[0] * p[0] + p[2] * p[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("exact polygon with rational rotation stays an exact design") {
    std::vector<RadicalSum> u = {RadicalSum(1), RadicalSum(0)};
    std::vector<RadicalSum> v = {RadicalSum(0), RadicalSum(1)};
    auto sq = regular_polygon_exact(2, u, v, 4, Rational(3, 5), Rational(4, 5));
    CHECK(sq.points_x.size() == 4);
    CHECK(sq.mode == Mode::Exact);
    Certificate c = check_design_pairwise(sq, 3);
    CHECK(c.mode == Mode::Exact);
    CHECK(c.pass);
    CHECK(!check_design_pairwise(sq, 4).pass);
    CHECK_THROWS_AS(regular_polygon_exact(2, u, v, 6), std::domain_error);
    CHECK_THROWS_AS(regular_polygon_exact(2, u, v, 4, Rational(1, 2), Rational(1, 2)),
                    std::domain_error);
}

TEST_CASE("error paths") {
    WeightedPointSet empty;
    empty.d = 3;
    CHECK_THROWS_AS(check_design_pairwise(empty, 2), std::domain_error);

    std::vector<std::vector<double>> bad = {{0.5, 0, 0}};
    CHECK_THROWS_AS(WeightedPointSet::from_floats(3, bad), std::domain_error);

    auto x = ngon(4);
    ProbeSet probes;
    probes.mode = Mode::Float;
    probes.probes_f = {{0.0, 0.0}};
    CHECK_THROWS_AS(check_design_moments(x, 2, &probes), std::domain_error);

    // unequal weights rejected by the pairwise criterion
    auto y = ngon(3);
    y.weights_f[0] = 2.0;
    CHECK_THROWS_AS(check_design_pairwise(y, 2), std::domain_error);
}
