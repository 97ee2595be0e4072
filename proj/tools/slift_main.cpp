// slift: construct tight fusion frames from signed-permutation orbits, lift
// them to spherical designs, and verify everything with exact rational
// arithmetic where possible. One subcommand per workflow; JSON artifacts are
// the source of truth, stdout carries a human summary.

#include "spherelift/bounds.hpp"
#include "spherelift/json_io.hpp"
#include "spherelift/lifting.hpp"
#include "spherelift/orbits.hpp"
#include "spherelift/parallel.hpp"
#include "spherelift/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace slift;

constexpr int kExitOk = 0;
constexpr int kExitCertFailed = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitInternal = 3;

struct RunContext {
    std::string command;
    std::string flags;  // canonical reconstruction for reproducibility
    uint64_t seed = 0;
    bool any_certificate_failed = false;
};

Json meta_json(const RunContext& ctx) {
    Json m;
    m["tool"] = "slift";
    m["version"] = kVersion;
    m["command"] = ctx.command;
    m["flags"] = ctx.flags;
    m["seed"] = ctx.seed;
    return m;
}

void write_artifact(const std::string& path, Json payload, const RunContext& ctx) {
    Json out;
    out["meta"] = meta_json(ctx);
    for (auto& [key, value] : payload.items()) out[key] = std::move(value);
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << out.dump(2) << "\n";
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return Json::parse(f);
}

void print_certificate(const Certificate& cert) {
    std::cout << cert.criterion << " [" << mode_name(cert.mode) << ", tol=" << cert.tolerance
              << "]: " << (cert.pass ? "pass" : "FAIL") << "\n";
    for (const auto& item : cert.items) {
        std::cout << "  " << item.label << ": ";
        if (item.exact)
            std::cout << item.exact->str();
        else
            std::cout << item.value;
        std::cout << "\n";
    }
    if (!cert.note.empty()) std::cout << "  note: " << cert.note << "\n";
}

void track(RunContext& ctx, const Certificate& cert) {
    if (!cert.pass) ctx.any_certificate_failed = true;
}

FrameConfig load_frame(const std::string& path) {
    Json j = read_json(path);
    // accept both a bare frame and any artifact that embeds one
    return frame_from_json(j.contains("frame") ? j.at("frame") : j);
}

std::vector<std::pair<int, int>> parse_parts(const std::vector<std::string>& specs) {
    std::vector<std::pair<int, int>> parts;
    for (const auto& s : specs) {
        int a = 0, b = 0;
        char comma = 0;
        std::istringstream in(s);
        if (!(in >> a >> comma >> b) || comma != ',')
            throw CLI::ValidationError("--part expects 'a,b'");
        parts.emplace_back(a, b);
    }
    return parts;
}

// ---------------------------------------------------------------------------

int cmd_orbit(RunContext& ctx, int d, int a, int b, bool check2, const std::string& out,
              uint64_t cap) {
    OrbitParams p{d, a, b};
    p.validate();
    std::cout << "orbit d=" << d << " (a,b)=(" << a << "," << b << ")\n";
    std::cout << "  N = " << orbit_size(p).str() << "\n";
    std::cout << "  defect = " << orbit_defect(p).str()
              << (orbit_defect(p).is_zero() ? "  (tight 2-fusion frame)" : "") << "\n";
    std::cout << "  F(e1) = " << orbit_fourth_moment(p, Probe::E1).str()
              << ", F((e1+e2)/sqrt2) = " << orbit_fourth_moment(p, Probe::E1PlusE2).str() << "\n";

    Json payload;
    payload["orbit"] = Json{{"d", d}, {"a", a}, {"b", b}};
    payload["N"] = orbit_size(p).str();
    payload["defect"] = orbit_defect(p).str();

    if (check2) {
        Certificate cert = two_point_test(OrbitUnion{d, {{a, b}}}, cap);
        print_certificate(cert);
        track(ctx, cert);
        payload["two_point_test"] = certificate_to_json(cert);
    }
    if (!out.empty()) {
        FrameConfig f = FrameConfig::equal_weight(enumerate_orbit(p, cap));
        payload["frame"] = frame_to_json(f);
        write_artifact(out, payload, ctx);
        std::cout << "  frame written to " << out << "\n";
    } else if (check2) {
        // nothing further to write
    }
    return kExitOk;
}

int cmd_check_tff(RunContext& ctx, const std::string& in, int t, const std::string& out) {
    FrameConfig f = load_frame(in);
    Certificate cert = check_tff(f, t);
    print_certificate(cert);
    track(ctx, cert);
    if (!out.empty()) {
        Json payload;
        payload["certificate"] = certificate_to_json(cert);
        write_artifact(out, payload, ctx);
    }
    return kExitOk;
}

int cmd_union(RunContext& ctx, int d, const std::vector<std::string>& parts_raw,
              bool enumerate_check, uint64_t cap, const std::string& out) {
    OrbitUnion u{d, parse_parts(parts_raw)};
    u.validate();
    UnionCondition cond = union_condition(u);
    std::cout << "union d=" << d << ", parts=" << u.parts.size() << "\n";
    std::cout << "  sum N*defect = " << cond.weighted_defect_sum.str() << " -> "
              << (cond.pass ? "tight 2-fusion frame" : "not tight") << "\n";
    Json payload;
    payload["union"] = orbit_union_to_json(u);
    payload["weighted_defect_sum"] = cond.weighted_defect_sum.str();
    payload["tight"] = cond.pass;
    if (!cond.pass) ctx.any_certificate_failed = true;
    if (enumerate_check) {
        Certificate cert = two_point_test(u, cap);
        print_certificate(cert);
        track(ctx, cert);
        payload["two_point_test"] = certificate_to_json(cert);
        if (cert.pass != cond.pass) throw std::logic_error("two routes disagree on the union");
    }
    if (!out.empty()) write_artifact(out, payload, ctx);
    return kExitOk;
}

int cmd_solve_single(RunContext&, int d) {
    auto sols = single_orbit_solutions(d);
    std::cout << "single-orbit solutions at d=" << d << ":";
    if (sols.empty()) std::cout << " none";
    for (auto [a, b] : sols) std::cout << " (" << a << "," << b << ")";
    std::cout << "\n";
    return kExitOk;
}

int cmd_scale(RunContext&, int d0, int a0, int b0, int smax) {
    std::cout << "scaling family from seed (" << d0 << ";" << a0 << "," << b0 << "):\n";
    for (int s = 1; s <= smax; ++s) {
        OrbitParams p = scale_solution(d0, a0, b0, s);
        std::cout << "  s=" << s << ": d=" << p.d << " (a,b)=(" << p.a << "," << p.b
                  << ") N=" << orbit_size(p).str() << " defect=" << orbit_defect(p).str() << "\n";
    }
    return kExitOk;
}

int cmd_search(RunContext& ctx, int min_d, int max_d, bool odd_only, int orbits, bool pure_only,
               const std::string& csv, const std::string& out) {
    if (orbits != 1 && orbits != 2)
        throw CLI::ValidationError("--orbits must be 1 or 2");
    Json rows = Json::array();
    std::ostringstream csv_text;
    if (orbits == 1) {
        csv_text << "d,a,b\n";
        std::cout << "d : single-orbit solutions\n";
        for (int d = min_d; d <= max_d; ++d) {
            if (odd_only && d % 2 == 0) continue;
            auto sols = single_orbit_solutions(d);
            if (sols.empty()) continue;
            std::cout << d << " :";
            for (auto [a, b] : sols) {
                std::cout << " (" << a << "," << b << ")";
                csv_text << d << "," << a << "," << b << "\n";
                rows.push_back(Json{{"d", d}, {"a", a}, {"b", b}});
            }
            std::cout << "\n";
        }
    } else {
        csv_text << "d,a1,b1,a2,b2,pure\n";
        std::cout << "d : two-orbit solutions {(a1,b1),(a2,b2)} (* = pure)\n";
        for (int d = min_d; d <= max_d; ++d) {
            if (odd_only && d % 2 == 0) continue;
            auto sols = two_orbit_solutions(d);
            bool printed = false;
            for (const auto& s : sols) {
                if (pure_only && !s.pure) continue;
                if (!printed) {
                    std::cout << d << " :";
                    printed = true;
                }
                std::cout << " {(" << s.first.first << "," << s.first.second << "),("
                          << s.second.first << "," << s.second.second << ")}"
                          << (s.pure ? "*" : "");
                csv_text << d << "," << s.first.first << "," << s.first.second << ","
                         << s.second.first << "," << s.second.second << "," << (s.pure ? 1 : 0)
                         << "\n";
                rows.push_back(Json{{"d", d},
                                    {"first", {s.first.first, s.first.second}},
                                    {"second", {s.second.first, s.second.second}},
                                    {"pure", s.pure}});
            }
            if (printed) std::cout << "\n";
        }
    }
    if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::runtime_error("cannot open output file: " + csv);
        f << csv_text.str();
    }
    if (!out.empty()) {
        Json payload;
        payload["solutions"] = std::move(rows);
        write_artifact(out, payload, ctx);
    }
    return kExitOk;
}

int cmd_lift(RunContext& ctx, const std::string& orbit_spec, int polygon, uint64_t seed,
             const std::string& phase_policy, double fixed_phase, const std::string& mode,
             bool repair, int verify, const std::string& out, uint64_t cap) {
    auto parts = parse_parts({orbit_spec});
    int d = parts[0].first;  // first number is d in "d,a,b"
    // --orbit d,a,b carries three numbers
    int a = 0, b = 0;
    {
        std::istringstream in(orbit_spec);
        char c1 = 0, c2 = 0;
        if (!(in >> d >> c1 >> a >> c2 >> b) || c1 != ',' || c2 != ',')
            throw CLI::ValidationError("--orbit expects 'd,a,b'");
    }
    LiftSpec spec;
    spec.frame = FrameConfig::equal_weight(enumerate_orbit(OrbitParams{d, a, b}, cap));
    spec.tff_strength = 2;
    spec.design_order = polygon - 1;
    spec.seed = seed;
    spec.fixed_phase = fixed_phase;
    if (phase_policy == "fixed")
        spec.phase_policy = PhasePolicy::Fixed;
    else if (phase_policy == "seeded")
        spec.phase_policy = PhasePolicy::SeededPerPlane;
    else
        throw CLI::ValidationError("--phase-policy must be seeded or fixed");

    // Exact arithmetic is the default wherever it is supported; lifts with
    // other polygons or free phases need floats, and the artifact says why.
    std::string mode_reason;
    bool exact_possible = (polygon == 2 || polygon == 4) &&
                          spec.phase_policy == PhasePolicy::Fixed && fixed_phase == 0.0;
    if (mode == "auto") {
        spec.mode = exact_possible ? Mode::Exact : Mode::Float;
        mode_reason = exact_possible
                          ? "exact supported (polygon in {2,4}, fixed zero phase)"
                          : "float required (polygon vertices involve cos/sin)";
    } else if (mode == "exact") {
        spec.mode = Mode::Exact;
        mode_reason = "exact requested";
    } else if (mode == "float") {
        spec.mode = Mode::Float;
        mode_reason = "float requested";
    } else {
        throw CLI::ValidationError("--mode must be auto, float or exact");
    }

    LiftedDesign design = lift(spec);
    if (repair) design = repair_disjointness(design, seed);
    std::cout << "lift: " << design.points.size() << " points on S^" << (d - 1)
              << ", declared strength " << design.declared_strength << " ["
              << mode_name(design.points.mode) << "; " << mode_reason << "]\n";

    Json payload = lifted_design_to_json(design);
    payload["arithmetic"] = Json{{"mode", mode_name(design.points.mode)}, {"reason", mode_reason}};
    if (verify >= 0) {
        int r = verify == 0 ? design.declared_strength : verify;
        Certificate cert = certify_lift(design, r);
        print_certificate(cert);
        track(ctx, cert);
        payload["certificate"] = certificate_to_json(cert);
    }
    if (!out.empty()) {
        write_artifact(out, payload, ctx);
        std::cout << "design written to " << out << "\n";
    }
    return kExitOk;
}

int cmd_verify_design(RunContext& ctx, const std::string& in, int t,
                      const std::string& criterion, const std::string& out) {
    Json j = read_json(in);
    WeightedPointSet x =
        j.contains("design") ? pointset_from_json(j.at("design")) : pointset_from_json(j);
    Json payload;
    bool ran = false;
    if (criterion == "pairwise" || criterion == "both") {
        Certificate cert = check_design_pairwise(x, t);
        print_certificate(cert);
        track(ctx, cert);
        payload["pairwise"] = certificate_to_json(cert);
        ran = true;
    }
    if (criterion == "moments" || criterion == "both") {
        Certificate cert = check_design_moments(x, t);
        print_certificate(cert);
        track(ctx, cert);
        payload["moments"] = certificate_to_json(cert);
        ran = true;
    }
    if (!ran) throw CLI::ValidationError("--criterion must be pairwise, moments or both");
    if (!out.empty()) write_artifact(out, payload, ctx);
    return kExitOk;
}

int cmd_bounds(RunContext& ctx, int d, long long n, const std::string& out) {
    EctffReport r = ectff2_moments(d, n);
    std::cout << "ECTFF2 moment report, d=" << d << " N=" << n << "\n";
    std::cout << "  e10 = " << r.e10.str() << "\n";
    std::cout << "  mean e2 = " << r.e2bar.str() << "\n";
    std::cout << "  gap = " << r.gap.str() << "\n";
    std::cout << "  P(2,2) sum = " << r.p22_sum.str() << "\n";
    std::cout << "  bounds: d^2/4 <= N " << (r.lower_ok ? "ok" : "VIOLATED") << ", N <= (d+1 choose 2) "
              << (r.upper_ok ? "ok" : "VIOLATED") << "\n";
    std::cout << "  classification: " << ectff_class_name(r.classification) << "\n";
    if (!out.empty()) {
        Json payload;
        payload["report"] = ectff_report_to_json(r);
        write_artifact(out, payload, ctx);
    }
    return kExitOk;
}

int cmd_check_ectff2(RunContext& ctx, const std::string& in, const std::string& out) {
    FrameConfig f = load_frame(in);
    auto [cert, report] = check_ectff2(f.subspaces);
    print_certificate(cert);
    std::cout << "classification: " << ectff_class_name(report.classification) << "\n";
    track(ctx, cert);
    if (!out.empty()) {
        Json payload;
        payload["certificate"] = certificate_to_json(cert);
        payload["report"] = ectff_report_to_json(report);
        write_artifact(out, payload, ctx);
    }
    return kExitOk;
}

int cmd_sic_lift(RunContext& ctx, int n, const std::string& out) {
    if (n != 2) throw CLI::ValidationError("--n: only the built-in n=2 system is available");
    auto planes = planes_from_sic(builtin_sic_n2());
    auto [cert, report] = check_ectff2(planes);
    print_certificate(cert);
    std::cout << "classification: " << ectff_class_name(report.classification) << "\n";
    track(ctx, cert);
    if (!out.empty()) {
        Json payload;
        payload["frame"] = frame_to_json(FrameConfig::equal_weight(planes));
        payload["certificate"] = certificate_to_json(cert);
        payload["report"] = ectff_report_to_json(report);
        write_artifact(out, payload, ctx);
        std::cout << "frame written to " << out << "\n";
    }
    return kExitOk;
}

int cmd_embed(RunContext& ctx, const std::string& in, const std::string& out) {
    FrameConfig f = load_frame(in);
    Certificate cert = check_design_image(f.subspaces);
    print_certificate(cert);
    track(ctx, cert);
    std::vector<std::vector<double>> coords;
    for (const auto& s : f.subspaces) coords.push_back(sphere_image_coords(s));
    WeightedPointSet image =
        WeightedPointSet::from_floats(static_cast<int>(embedding_dim(f.d())), coords);
    if (!out.empty()) {
        Json payload;
        payload["image"] = pointset_to_json(image);
        payload["certificate"] = certificate_to_json(cert);
        write_artifact(out, payload, ctx);
        std::cout << "embedded points written to " << out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight fusion frames from signed-permutation orbits, design lifts, and exact verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", slift::kVersion);

    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (results are identical regardless)");

    RunContext ctx;

    // orbit
    auto* orbit = app.add_subcommand("orbit", "closed-form orbit data, optional TFF2 check/export");
    int o_d = 0, o_a = 0, o_b = 0;
    bool o_check2 = false;
    std::string o_out;
    uint64_t o_cap = slift::kDefaultOrbitCap;
    orbit->add_option("--d", o_d, "ambient dimension")->required();
    orbit->add_option("--a", o_a, "first block size")->required();
    orbit->add_option("--b", o_b, "second block size")->required();
    orbit->add_flag("--check-tff2", o_check2, "run the exact two-point test");
    orbit->add_option("--out", o_out, "write the enumerated frame JSON here");
    orbit->add_option("--cap", o_cap, "enumeration size cap");

    // check-tff
    auto* ctff = app.add_subcommand("check-tff", "zonal pair-sum TFF check on a frame file");
    std::string ct_in, ct_out;
    int ct_t = 2;
    ctff->add_option("--in", ct_in, "frame JSON")->required();
    ctff->add_option("--t", ct_t, "strength (1 or 2)");
    ctff->add_option("--out", ct_out, "certificate JSON");

    // union
    auto* un = app.add_subcommand("union", "defect sum and optional two-point test for orbit unions");
    int u_d = 0;
    std::vector<std::string> u_parts;
    bool u_enum = false;
    uint64_t u_cap = slift::kDefaultOrbitCap;
    std::string u_out;
    un->add_option("--d", u_d, "ambient dimension")->required();
    un->add_option("--part", u_parts, "orbit part 'a,b' (repeatable)")->required();
    un->add_flag("--enumerate", u_enum, "also run the enumerated two-point test");
    un->add_option("--cap", u_cap, "enumeration size cap");
    un->add_option("--out", u_out, "artifact JSON");

    // solve-single
    auto* ss = app.add_subcommand("solve-single", "single-orbit tightness equation at one dimension");
    int ss_d = 0;
    ss->add_option("--d", ss_d, "dimension")->required();

    // scale
    auto* sc = app.add_subcommand("scale", "scaled family from a seed solution");
    int sc_d0 = 0, sc_a0 = 0, sc_b0 = 0, sc_s = 1;
    sc->add_option("--d0", sc_d0)->required();
    sc->add_option("--a0", sc_a0)->required();
    sc->add_option("--b0", sc_b0)->required();
    sc->add_option("--s", sc_s, "largest scale factor");

    // search
    auto* se = app.add_subcommand("search", "exhaustive exact search for tight orbit unions");
    int se_min = 4, se_max = 33, se_orbits = 2;
    bool se_odd = false, se_pure = false;
    std::string se_csv, se_out;
    se->add_option("--min-d", se_min);
    se->add_option("--max-d", se_max);
    se->add_flag("--odd", se_odd, "odd dimensions only");
    se->add_option("--orbits", se_orbits, "1 = single-orbit equation, 2 = two-orbit pairs");
    se->add_flag("--pure-only", se_pure, "drop pairs built from two zero-defect orbits");
    se->add_option("--csv", se_csv, "CSV table output");
    se->add_option("--json", se_out, "JSON artifact output");

    // lift
    auto* li = app.add_subcommand("lift", "lift an orbit frame to a spherical design");
    std::string li_orbit, li_policy = "seeded", li_mode = "auto", li_out;
    int li_polygon = 6, li_verify = -1;
    uint64_t li_seed = 0, li_cap = slift::kDefaultOrbitCap;
    double li_fixed = 0.0;
    bool li_repair = false;
    li->add_option("--orbit", li_orbit, "orbit 'd,a,b'")->required();
    li->add_option("--polygon", li_polygon, "vertices per plane (n); design order s = n-1");
    li->add_option("--seed", li_seed, "seed for per-plane phases");
    li->add_option("--phase-policy", li_policy, "seeded | fixed");
    li->add_option("--fixed-phase", li_fixed, "phase when --phase-policy fixed");
    li->add_option("--mode", li_mode,
                   "auto | float | exact (exact needs n in {2,4} and fixed zero phase)");
    li->add_flag("--repair", li_repair, "enforce pairwise-distinct points");
    li->add_option("--verify", li_verify, "verify at this strength (0 = declared strength)");
    li->add_option("--cap", li_cap, "enumeration size cap");
    li->add_option("--out", li_out, "design JSON");

    // verify-design
    auto* vd = app.add_subcommand("verify-design", "run spherical-design criteria on a design file");
    std::string vd_in, vd_out, vd_criterion = "both";
    int vd_t = 0;
    vd->add_option("--in", vd_in, "design JSON (raw point set or lift artifact)")->required();
    vd->add_option("--t", vd_t, "strength to check")->required();
    vd->add_option("--criterion", vd_criterion, "pairwise | moments | both");
    vd->add_option("--out", vd_out, "certificate JSON");

    // bounds
    auto* bo = app.add_subcommand("bounds", "exact ECTFF2 moment report for (d, N)");
    int bo_d = 0;
    long long bo_n = 0;
    std::string bo_out;
    bo->add_option("--d", bo_d)->required();
    bo->add_option("--N", bo_n)->required();
    bo->add_option("--out", bo_out, "report JSON");

    // check-ectff2
    auto* ce = app.add_subcommand("check-ectff2", "verify a frame file against the ECTFF2 conditions");
    std::string ce_in, ce_out;
    ce->add_option("--in", ce_in, "frame JSON")->required();
    ce->add_option("--out", ce_out, "report JSON");

    // sic-lift
    auto* si = app.add_subcommand("sic-lift", "real planes of the built-in SIC system");
    int si_n = 2;
    std::string si_out;
    si->add_option("--n", si_n, "complex dimension (2)");
    si->add_option("--out", si_out, "frame JSON");

    // embed
    auto* em = app.add_subcommand("embed", "traceless-projector sphere embedding of a frame");
    std::string em_in, em_out;
    em->add_option("--in", em_in, "frame JSON")->required();
    em->add_option("--out", em_out, "embedded point-set JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    if (threads > 0) slift::set_thread_cap(threads);

    // canonical flag string for artifact metadata
    {
        std::ostringstream flags;
        for (int i = 1; i < argc; ++i) flags << (i > 1 ? " " : "") << argv[i];
        ctx.flags = flags.str();
        ctx.command = app.get_subcommands().front()->get_name();
        ctx.seed = li_seed;
    }

    try {
        if (orbit->parsed()) cmd_orbit(ctx, o_d, o_a, o_b, o_check2, o_out, o_cap);
        if (ctff->parsed()) cmd_check_tff(ctx, ct_in, ct_t, ct_out);
        if (un->parsed()) cmd_union(ctx, u_d, u_parts, u_enum, u_cap, u_out);
        if (ss->parsed()) cmd_solve_single(ctx, ss_d);
        if (sc->parsed()) cmd_scale(ctx, sc_d0, sc_a0, sc_b0, sc_s);
        if (se->parsed()) cmd_search(ctx, se_min, se_max, se_odd, se_orbits, se_pure, se_csv, se_out);
        if (li->parsed())
            cmd_lift(ctx, li_orbit, li_polygon, li_seed, li_policy, li_fixed, li_mode, li_repair,
                     li_verify, li_out, li_cap);
        if (vd->parsed()) cmd_verify_design(ctx, vd_in, vd_t, vd_criterion, vd_out);
        if (bo->parsed()) cmd_bounds(ctx, bo_d, bo_n, bo_out);
        if (ce->parsed()) cmd_check_ectff2(ctx, ce_in, ce_out);
        if (si->parsed()) cmd_sic_lift(ctx, si_n, si_out);
        if (em->parsed()) cmd_embed(ctx, em_in, em_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::domain_error& e) {
        // bad parameter combinations (a > b, k = d, ...) count as flag errors
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }

    return ctx.any_certificate_failed ? kExitCertFailed : kExitOk;
}
