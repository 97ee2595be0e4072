#include "spherelift/lifting.hpp"

#include "spherelift/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace slift {

namespace {

constexpr double kCoincidenceTol = 1e-12;

// Rational rotations used by exact-mode repair: powers of the (3/5, 4/5)
// rotation, all satisfying c^2 + s^2 = 1 exactly.
std::pair<Rational, Rational> exact_rotation(int round) {
    Rational c(1), s(0);
    const Rational bc(3, 5), bs(4, 5);
    for (int i = 0; i < round; ++i) {
        Rational nc = c * bc - s * bs;
        Rational ns = c * bs + s * bc;
        c = nc;
        s = ns;
    }
    return {c, s};
}

FloatMat plane_basis_of(const Subspace& sub) {
    FloatMat b(sub.basis.rows(), 2);
    for (size_t i = 0; i < sub.basis.rows(); ++i) {
        b(i, 0) = sub.basis(i, 0);
        b(i, 1) = sub.basis(i, 1);
    }
    return b;
}

double plane_phase(const LiftSpec& spec, size_t plane_index) {
    if (spec.phase_policy == PhasePolicy::Fixed) return spec.fixed_phase;
    Rng rng = Rng(spec.seed).split(plane_index);
    return rng.uniform(0.0, 6.283185307179586476925286766559);
}

// Lexicographic clustering of float points; pairs closer than the tolerance
// in every coordinate count as coincident.
std::vector<std::pair<size_t, size_t>> float_collisions(
    const std::vector<std::vector<double>>& pts) {
    std::vector<size_t> order(pts.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pts[a] < pts[b]; });
    auto close = [&](size_t a, size_t b) {
        for (size_t c = 0; c < pts[a].size(); ++c)
            if (std::abs(pts[a][c] - pts[b][c]) > kCoincidenceTol) return false;
        return true;
    };
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i + 1 < order.size(); ++i)
        for (size_t j = i + 1; j < order.size() && close(order[i], order[j]); ++j)
            out.emplace_back(order[i], order[j]);
    return out;
}

std::vector<std::pair<size_t, size_t>> exact_collisions(
    const std::vector<std::vector<RadicalSum>>& pts) {
    // Float pre-clustering, exact confirmation.
    std::vector<std::vector<double>> approx(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        approx[i].reserve(pts[i].size());
        for (const auto& c : pts[i]) approx[i].push_back(c.to_double());
    }
    auto candidates = float_collisions(approx);
    std::vector<std::pair<size_t, size_t>> out;
    for (auto [a, b] : candidates)
        if (pts[a] == pts[b]) out.emplace_back(a, b);
    return out;
}

}  // namespace

void LiftSpec::validate() const {
    frame.validate();
    if (tff_strength < 1 || tff_strength > 2)
        throw std::domain_error("LiftSpec: tff strength must be 1 or 2");
    if (design_order < 1) throw std::domain_error("LiftSpec: design order must be >= 1");
    if (frame.k() != 2) throw std::domain_error("LiftSpec: lifting needs planes (k = 2)");
    if (mode == Mode::Exact) {
        int n = polygon_n();
        if (n != 2 && n != 4)
            throw std::domain_error("LiftSpec: exact mode supports polygon n in {2,4} only");
        if (phase_policy != PhasePolicy::Fixed || fixed_phase != 0.0)
            throw std::domain_error("LiftSpec: exact mode requires fixed phase 0");
        for (const auto& s : frame.subspaces)
            if (s.exact_basis.size() != 2)
                throw std::domain_error("LiftSpec: exact mode needs exact plane bases");
    }
}

LiftedDesign lift(const LiftSpec& spec) {
    spec.validate();
    Certificate tff = check_tff(spec.frame, spec.tff_strength);
    if (!tff.pass)
        throw std::domain_error("lift: frame fails the tight-fusion-frame check (t = " +
                                std::to_string(spec.tff_strength) + ")");

    int n = spec.polygon_n();
    LiftedDesign out;
    out.spec = spec;
    out.declared_strength = std::min(spec.design_order, 2 * spec.tff_strength + 1);
    out.weight_total = spec.frame.total_weight() * Rational(n);
    out.points.d = spec.frame.d();
    out.points.mode = spec.mode;

    for (size_t pi = 0; pi < spec.frame.size(); ++pi) {
        const Subspace& sub = spec.frame.subspaces[pi];
        if (spec.mode == Mode::Float) {
            WeightedPointSet poly =
                regular_polygon(plane_basis_of(sub), n, plane_phase(spec, pi));
            double w = spec.frame.weights[pi].to_double();
            for (int v = 0; v < n; ++v) {
                out.points.points_f.push_back(std::move(poly.points_f[static_cast<size_t>(v)]));
                out.points.weights_f.push_back(w);
                out.provenance.push_back({static_cast<uint32_t>(pi), static_cast<uint32_t>(v)});
            }
        } else {
            WeightedPointSet poly =
                regular_polygon_exact(spec.frame.d(), sub.exact_basis[0], sub.exact_basis[1], n);
            for (int v = 0; v < n; ++v) {
                out.points.points_x.push_back(std::move(poly.points_x[static_cast<size_t>(v)]));
                out.points.weights_x.push_back(spec.frame.weights[pi]);
                out.provenance.push_back({static_cast<uint32_t>(pi), static_cast<uint32_t>(v)});
            }
        }
    }
    out.points.validate();
    return out;
}

bool has_coincident_points(const LiftedDesign& design) {
    if (design.points.mode == Mode::Float)
        return !float_collisions(design.points.points_f).empty();
    return !exact_collisions(design.points.points_x).empty();
}

LiftedDesign repair_disjointness(const LiftedDesign& design, uint64_t seed, int retry_budget) {
    if (design.spec.frame.k() != 2)
        throw std::domain_error("repair_disjointness: needs k = 2 planes");
    LiftedDesign cur = design;
    int n = cur.spec.polygon_n();
    Rng base(seed ^ 0x5f3759df9e3779b9ULL);

    for (int round = 0; round < retry_budget; ++round) {
        std::vector<std::pair<size_t, size_t>> collisions =
            cur.points.mode == Mode::Float ? float_collisions(cur.points.points_f)
                                           : exact_collisions(cur.points.points_x);
        if (collisions.empty()) return cur;

        // Re-draw the polygon of every later plane involved in a collision;
        // the first plane of each colliding pair stays put.
        std::vector<char> redraw(cur.spec.frame.size(), 0);
        for (auto [i, j] : collisions) {
            uint32_t pa = cur.provenance[i].plane;
            uint32_t pb = cur.provenance[j].plane;
            if (pa == pb)
                throw std::logic_error("repair_disjointness: repeated vertex inside one plane");
            redraw[std::max(pa, pb)] = 1;
        }
        for (size_t pi = 0; pi < redraw.size(); ++pi) {
            if (!redraw[pi]) continue;
            const Subspace& sub = cur.spec.frame.subspaces[pi];
            if (cur.points.mode == Mode::Float) {
                double phase = base.split((static_cast<uint64_t>(round) << 32) ^ pi)
                                   .uniform(0.0, 6.283185307179586476925286766559);
                WeightedPointSet poly = regular_polygon(plane_basis_of(sub), n, phase);
                for (size_t idx = 0; idx < cur.provenance.size(); ++idx)
                    if (cur.provenance[idx].plane == pi)
                        cur.points.points_f[idx] = poly.points_f[cur.provenance[idx].vertex];
            } else {
                auto [rc, rs] = exact_rotation(round + 1);
                WeightedPointSet poly = regular_polygon_exact(
                    cur.spec.frame.d(), sub.exact_basis[0], sub.exact_basis[1], n, rc, rs);
                for (size_t idx = 0; idx < cur.provenance.size(); ++idx)
                    if (cur.provenance[idx].plane == pi)
                        cur.points.points_x[idx] = poly.points_x[cur.provenance[idx].vertex];
            }
        }
    }
    throw std::runtime_error("repair_disjointness: retry budget exhausted");
}

WeightedPointSet regular_polygon(const Subspace& plane, int n, double phase) {
    if (plane.k != 2) throw std::domain_error("regular_polygon: needs a plane (k = 2)");
    return regular_polygon(plane_basis_of(plane), n, phase);
}

Certificate certify_lift(const LiftedDesign& design, int r) {
    Certificate cert;
    cert.criterion = "lifted-design";
    cert.mode = design.points.mode;
    for (int l = 0; l <= r; ++l) cert.degrees.push_back(l);

    bool equal = design.points.equal_weights();
    Certificate moments = check_design_moments(design.points, r);
    cert.tolerance = moments.tolerance;
    for (auto& item : moments.items) {
        item.label = "moments " + item.label;
        cert.items.push_back(std::move(item));
    }
    if (equal) {
        Certificate pw = check_design_pairwise(design.points, r);
        for (auto& item : pw.items) {
            item.label = "pairwise " + item.label;
            cert.items.push_back(std::move(item));
        }
    } else {
        cert.note = "pairwise criterion skipped (weights not equal)";
    }

    // Diagnostics one degree above the declared strength; informational only.
    if (equal) {
        Certificate above = check_design_pairwise(design.points, r + 1);
        cert.diagnostics.push_back(std::move(above.items.back()));
    } else {
        Certificate above = check_design_moments(design.points, r + 1);
        for (auto& item : above.items)
            if (item.label.rfind("m=" + std::to_string(r + 1), 0) == 0)
                cert.diagnostics.push_back(std::move(item));
    }
    cert.finalize();
    return cert;
}

}  // namespace slift
