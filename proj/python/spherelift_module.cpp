// Python bindings for the main operations: orbit arithmetic, frame checks,
// design lifts and verification. Structured results (certificates, reports)
// cross the boundary as JSON strings; the spherelift package parses them.

#include "spherelift/bounds.hpp"
#include "spherelift/json_io.hpp"
#include "spherelift/lifting.hpp"
#include "spherelift/orbits.hpp"
#include "spherelift/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

namespace py = pybind11;
using namespace slift;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::string cert_json(const Certificate& c) { return certificate_to_json(c).dump(); }

OrbitUnion make_union(int d, const std::vector<std::pair<int, int>>& parts) {
    OrbitUnion u{d, parts};
    u.validate();
    return u;
}

FrameConfig union_frame(int d, const std::vector<std::pair<int, int>>& parts) {
    std::vector<Subspace> all;
    for (auto [a, b] : make_union(d, parts).parts)
        for (auto& s : enumerate_orbit({d, a, b})) all.push_back(std::move(s));
    return FrameConfig::equal_weight(std::move(all));
}

WeightedPointSet points_from_py(int d, const std::vector<std::vector<double>>& pts,
                                const std::vector<double>& weights) {
    return WeightedPointSet::from_floats(d, pts, weights);
}

LiftSpec build_lift_spec(int d, int a, int b, int polygon, uint64_t seed,
                         const std::string& phase_policy, bool exact) {
    LiftSpec spec;
    spec.frame = FrameConfig::equal_weight(enumerate_orbit({d, a, b}));
    spec.tff_strength = 2;
    spec.design_order = polygon - 1;
    spec.seed = seed;
    if (phase_policy == "fixed")
        spec.phase_policy = PhasePolicy::Fixed;
    else if (phase_policy == "seeded")
        spec.phase_policy = PhasePolicy::SeededPerPlane;
    else
        throw std::invalid_argument("phase_policy must be 'seeded' or 'fixed'");
    spec.mode = exact ? Mode::Exact : Mode::Float;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_spherelift, m) {
    m.doc() = "tight fusion frames from signed-permutation orbits, spherical design lifts, "
              "and exact verification";
    m.attr("__version__") = kVersion;

    // orbit arithmetic (exact; rationals as canonical 'p/q' strings)
    m.def("orbit_size", [](int d, int a, int b) { return big_to_py(orbit_size({d, a, b})); },
          py::arg("d"), py::arg("a"), py::arg("b"));
    m.def("orbit_defect", [](int d, int a, int b) { return orbit_defect({d, a, b}).str(); },
          py::arg("d"), py::arg("a"), py::arg("b"));
    m.def("fourth_moment",
          [](int d, int a, int b, const std::string& probe) {
              if (probe != "e1" && probe != "e1+e2")
                  throw std::invalid_argument("probe must be 'e1' or 'e1+e2'");
              Probe p = probe == "e1" ? Probe::E1 : Probe::E1PlusE2;
              return orbit_fourth_moment({d, a, b}, p).str();
          },
          py::arg("d"), py::arg("a"), py::arg("b"), py::arg("probe"));
    m.def("single_orbit_solutions", &single_orbit_solutions, py::arg("d"));
    m.def("two_orbit_solutions",
          [](int d) {
              py::list out;
              for (const auto& s : two_orbit_solutions(d)) {
                  py::dict row;
                  row["first"] = s.first;
                  row["second"] = s.second;
                  row["pure"] = s.pure;
                  out.append(std::move(row));
              }
              return out;
          },
          py::arg("d"));
    m.def("scale_solution",
          [](int d0, int a0, int b0, int s) {
              OrbitParams p = scale_solution(d0, a0, b0, s);
              return std::make_tuple(p.d, p.a, p.b);
          },
          py::arg("d0"), py::arg("a0"), py::arg("b0"), py::arg("s"));
    m.def("union_defect_sum",
          [](int d, const std::vector<std::pair<int, int>>& parts) {
              UnionCondition c = union_condition(make_union(d, parts));
              return std::make_tuple(c.weighted_defect_sum.str(), c.pass);
          },
          py::arg("d"), py::arg("parts"));

    // frame checks (JSON-string certificates)
    m.def("two_point_test",
          [](int d, const std::vector<std::pair<int, int>>& parts) {
              return cert_json(two_point_test(make_union(d, parts)));
          },
          py::arg("d"), py::arg("parts"));
    m.def("check_tff_union",
          [](int d, const std::vector<std::pair<int, int>>& parts, int t) {
              return cert_json(check_tff(union_frame(d, parts), t));
          },
          py::arg("d"), py::arg("parts"), py::arg("t") = 2);

    // spherical design checks on float point sets
    m.def("check_pairwise",
          [](int d, const std::vector<std::vector<double>>& pts,
             const std::vector<double>& weights, int t) {
              return cert_json(check_design_pairwise(points_from_py(d, pts, weights), t));
          },
          py::arg("d"), py::arg("points"), py::arg("weights"), py::arg("t"));
    m.def("check_moments",
          [](int d, const std::vector<std::vector<double>>& pts,
             const std::vector<double>& weights, int t) {
              return cert_json(check_design_moments(points_from_py(d, pts, weights), t));
          },
          py::arg("d"), py::arg("points"), py::arg("weights"), py::arg("t"));

    // design lift
    m.def("lift_orbit",
          [](int d, int a, int b, int polygon, uint64_t seed, const std::string& phase_policy,
             bool exact, bool repair) {
              LiftSpec spec = build_lift_spec(d, a, b, polygon, seed, phase_policy, exact);
              LiftedDesign design = lift(spec);
              if (repair) design = repair_disjointness(design, seed);
              Certificate cert = certify_lift(design, design.declared_strength);
              WeightedPointSet pts = design.points.to_float();
              py::dict out;
              out["points"] = pts.points_f;
              out["weights"] = pts.weights_f;
              out["strength"] = design.declared_strength;
              out["certificate"] = cert_json(cert);
              out["design_json"] = lifted_design_to_json(design).dump();
              return out;
          },
          py::arg("d"), py::arg("a"), py::arg("b"), py::arg("polygon") = 6, py::arg("seed") = 0,
          py::arg("phase_policy") = "seeded", py::arg("exact") = false,
          py::arg("repair") = false);

    // scalar utilities
    m.def("gegenbauer", [](int d, int l, double x) { return gegenbauer_eval(d, l, x); },
          py::arg("d"), py::arg("l"), py::arg("x"));
    m.def("gegenbauer_exact",
          [](int d, int l, const std::string& x) {
              return gegenbauer_eval(d, l, Rational::parse(x)).str();
          },
          py::arg("d"), py::arg("l"), py::arg("x"));
    m.def("simplex_bound",
          [](int d, int k, long long n) { return simplex_bound(d, k, n).str(); }, py::arg("d"),
          py::arg("k"), py::arg("n"));

    // cardinality bounds and the SIC correspondence
    m.def("ectff2_report",
          [](int d, long long n) { return ectff_report_to_json(ectff2_moments(d, n)).dump(); },
          py::arg("d"), py::arg("n"));
    m.def("sic_planes", [] {
        auto planes = planes_from_sic(builtin_sic_n2());
        auto [cert, report] = check_ectff2(planes);
        py::dict out;
        py::list bases;
        for (const auto& s : planes) {
            std::vector<std::vector<double>> rows(static_cast<size_t>(s.d),
                                                  std::vector<double>(2));
            for (size_t i = 0; i < static_cast<size_t>(s.d); ++i) {
                rows[i][0] = s.basis(i, 0);
                rows[i][1] = s.basis(i, 1);
            }
            bases.append(rows);
        }
        out["bases"] = std::move(bases);
        out["certificate"] = cert_json(cert);
        out["report"] = ectff_report_to_json(report).dump();
        return out;
    });
}
