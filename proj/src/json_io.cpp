#include "spherelift/json_io.hpp"

namespace slift {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("rational_from_json: expected string or integer");
}

Json radical_to_json(const RadicalSum& r) {
    if (r.is_rational()) return rational_to_json(r.rational_value());
    Json terms = Json::array();
    for (const auto& [s, q] : r.terms()) terms.push_back({s.str(), q.str()});
    return Json{{"radical", terms}};
}

RadicalSum radical_from_json(const Json& j) {
    if (!j.is_object()) return RadicalSum(rational_from_json(j));
    RadicalSum out;
    for (const auto& term : j.at("radical")) {
        BigInt s(term.at(0).get<std::string>());
        Rational q = Rational::parse(term.at(1).get<std::string>());
        out += RadicalSum::root_term(q, s);
    }
    return out;
}

Json matrix_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat rat_matrix_from_json(const Json& j) {
    size_t rows = j.size();
    size_t cols = rows == 0 ? 0 : j.at(0).size();
    RatMat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
    return m;
}

Json matrix_to_json(const FloatMat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

FloatMat float_matrix_from_json(const Json& j) {
    size_t rows = j.size();
    size_t cols = rows == 0 ? 0 : j.at(0).size();
    FloatMat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m(i, c) = j.at(i).at(c).get<double>();
    return m;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["criterion"] = c.criterion;
    j["mode"] = mode_name(c.mode);
    j["tolerance"] = c.tolerance;
    j["degrees"] = c.degrees;
    auto items_json = [](const std::vector<ResidualItem>& items) {
        Json arr = Json::array();
        for (const auto& it : items) {
            Json e;
            e["label"] = it.label;
            e["residual"] = it.value;
            if (it.exact) e["exact"] = it.exact->str();
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["residuals"] = items_json(c.items);
    if (!c.diagnostics.empty()) j["diagnostics"] = items_json(c.diagnostics);
    if (!c.note.empty()) j["note"] = c.note;
    j["verdict"] = c.pass ? "pass" : "fail";
    return j;
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["d"] = s.d;
    j["k"] = s.k;
    j["basis"] = matrix_to_json(s.basis);
    if (s.projector) j["projector"] = matrix_to_json(*s.projector);
    return j;
}

Subspace subspace_from_json(const Json& j) {
    int d = j.at("d").get<int>();
    int k = j.at("k").get<int>();
    Subspace s =
        j.contains("projector")
            ? Subspace::from_basis_and_projector(float_matrix_from_json(j.at("basis")),
                                                 rat_matrix_from_json(j.at("projector")))
            : Subspace::from_basis(float_matrix_from_json(j.at("basis")));
    if (s.d != d || s.k != k)
        throw std::invalid_argument("subspace_from_json: (d,k) mismatch");
    return s;
}

Json frame_to_json(const FrameConfig& f) {
    Json j;
    j["d"] = f.d();
    j["k"] = f.k();
    Json subs = Json::array();
    for (const auto& s : f.subspaces) subs.push_back(subspace_to_json(s));
    j["subspaces"] = std::move(subs);
    Json w = Json::array();
    for (const auto& x : f.weights) w.push_back(x.str());
    j["weights"] = std::move(w);
    return j;
}

FrameConfig frame_from_json(const Json& j) {
    FrameConfig f;
    for (const auto& s : j.at("subspaces")) f.subspaces.push_back(subspace_from_json(s));
    for (const auto& w : j.at("weights")) f.weights.push_back(rational_from_json(w));
    f.validate();
    return f;
}

Json pointset_to_json(const WeightedPointSet& x) {
    Json j;
    j["d"] = x.d;
    j["mode"] = mode_name(x.mode);
    Json pts = Json::array();
    Json w = Json::array();
    if (x.mode == Mode::Float) {
        for (const auto& p : x.points_f) pts.push_back(p);
        for (double v : x.weights_f) w.push_back(v);
    } else {
        for (const auto& p : x.points_x) {
            Json coords = Json::array();
            for (const auto& c : p) coords.push_back(radical_to_json(c));
            pts.push_back(std::move(coords));
        }
        for (const auto& v : x.weights_x) w.push_back(v.str());
    }
    j["points"] = std::move(pts);
    j["weights"] = std::move(w);
    return j;
}

WeightedPointSet pointset_from_json(const Json& j) {
    WeightedPointSet x;
    x.d = j.at("d").get<int>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "float") {
        x.mode = Mode::Float;
        for (const auto& p : j.at("points")) x.points_f.push_back(p.get<std::vector<double>>());
        for (const auto& w : j.at("weights")) x.weights_f.push_back(w.get<double>());
    } else if (mode == "exact") {
        x.mode = Mode::Exact;
        for (const auto& p : j.at("points")) {
            std::vector<RadicalSum> coords;
            for (const auto& c : p) coords.push_back(radical_from_json(c));
            x.points_x.push_back(std::move(coords));
        }
        for (const auto& w : j.at("weights")) x.weights_x.push_back(rational_from_json(w));
    } else {
        throw std::invalid_argument("pointset_from_json: unknown mode " + mode);
    }
    x.validate();
    return x;
}

Json orbit_union_to_json(const OrbitUnion& u) {
    Json j;
    j["d"] = u.d;
    Json parts = Json::array();
    for (const auto& [a, b] : u.parts) parts.push_back({a, b});
    j["parts"] = std::move(parts);
    return j;
}

OrbitUnion orbit_union_from_json(const Json& j) {
    OrbitUnion u;
    u.d = j.at("d").get<int>();
    for (const auto& p : j.at("parts")) u.parts.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    u.validate();
    return u;
}

Json ectff_report_to_json(const EctffReport& r) {
    Json j;
    j["d"] = r.d;
    j["N"] = r.n;
    j["e10"] = r.e10.str();
    j["e2bar"] = r.e2bar.str();
    j["gap"] = r.gap.str();
    j["p22_sum"] = r.p22_sum.str();
    j["lower_bound_ok"] = r.lower_ok;
    j["upper_bound_ok"] = r.upper_ok;
    j["classification"] = ectff_class_name(r.classification);
    if (r.measured_e10_exact) j["measured_e10"] = r.measured_e10_exact->str();
    else if (r.measured_e10) j["measured_e10"] = *r.measured_e10;
    if (r.measured_e2bar_exact) j["measured_e2bar"] = r.measured_e2bar_exact->str();
    else if (r.measured_e2bar) j["measured_e2bar"] = *r.measured_e2bar;
    return j;
}

Json lifted_design_to_json(const LiftedDesign& d) {
    Json j;
    j["design"] = pointset_to_json(d.points);
    j["declared_strength"] = d.declared_strength;
    j["weight_total"] = d.weight_total.str();
    j["polygon_n"] = d.spec.polygon_n();
    j["tff_strength"] = d.spec.tff_strength;
    Json prov = Json::array();
    for (const auto& p : d.provenance) prov.push_back({p.plane, p.vertex});
    j["provenance"] = std::move(prov);
    return j;
}

}  // namespace slift
