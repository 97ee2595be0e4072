#include "spherelift/bounds.hpp"

#include "spherelift/sphere_designs.hpp"

#include <cmath>

namespace slift {

namespace {

constexpr double kSicTol = 1e-10;

// complex inner product z^* w on vectors stored as interleaved re/im
std::pair<double, double> cplx_inner(const std::vector<double>& z, const std::vector<double>& w) {
    double re = 0.0, im = 0.0;
    for (size_t i = 0; i + 1 < z.size(); i += 2) {
        // conj(z_i) * w_i
        re += z[i] * w[i] + z[i + 1] * w[i + 1];
        im += z[i] * w[i + 1] - z[i + 1] * w[i];
    }
    return {re, im};
}

}  // namespace

const char* ectff_class_name(EctffClass c) {
    switch (c) {
        case EctffClass::InfeasibleLower: return "infeasible (N below d^2/4)";
        case EctffClass::InfeasibleUpper: return "infeasible (N above binom(d+1,2))";
        case EctffClass::Eitff2: return "EITFF2 (lower-bound equality)";
        case EctffClass::Tight4Design: return "tight-4-design (upper-bound equality)";
        case EctffClass::Interior: return "interior";
    }
    return "?";
}

EctffReport ectff2_moments(int d, long long n) {
    if (d < 4) throw std::domain_error("ectff2_moments: requires d >= 4");
    if (n < 2) throw std::domain_error("ectff2_moments: requires N >= 2");
    EctffReport r;
    r.d = d;
    r.n = n;
    long long dd = d;
    Rational nn(n);

    r.e10 = Rational(2 * (2 * n - dd)) / Rational(dd * (n - 1));
    Rational den = Rational(dd * dd) * Rational(dd + 2) * Rational(n - 1).pow(2);
    r.e2bar = (Rational(dd * dd * (dd + 2)) + Rational(2 * dd) * Rational(dd * dd - 4 * dd - 4) * nn -
               Rational(4 * (dd - 6)) * nn * nn) /
              den;
    r.gap = Rational(-2) * nn * Rational(dd - 2) * (Rational(dd * dd) - Rational(4) * nn) / den;
    // consistency of the closed form with its derivation
    if (r.gap != r.e10 * r.e10 / Rational(4) - r.e2bar)
        throw std::logic_error("ectff2_moments: gap identity violated");
    r.p22_sum = Rational(3) * nn * nn * Rational((dd - 2) * (dd - 2)) *
                (Rational(dd * (dd + 1)) - Rational(2) * nn) /
                (Rational(dd * dd) * Rational(n - 1) * Rational(dd - 3) * Rational(dd + 2));

    r.lower_ok = Rational(4 * n) >= Rational(dd * dd);
    r.upper_ok = Rational(2 * n) <= Rational(dd * (dd + 1));
    if (!r.lower_ok)
        r.classification = EctffClass::InfeasibleLower;
    else if (!r.upper_ok)
        r.classification = EctffClass::InfeasibleUpper;
    else if (4 * n == dd * dd)
        r.classification = EctffClass::Eitff2;
    else if (2 * n == dd * (dd + 1))
        r.classification = EctffClass::Tight4Design;
    else
        r.classification = EctffClass::Interior;
    return r;
}

std::pair<Certificate, EctffReport> check_ectff2(const std::vector<Subspace>& ds) {
    if (ds.size() < 2) throw std::domain_error("check_ectff2: need at least two subspaces");
    if (ds.front().k != 2) throw std::domain_error("check_ectff2: requires k = 2");
    int d = ds.front().d;
    long long n = static_cast<long long>(ds.size());
    EctffReport report = ectff2_moments(d, n);

    Certificate cert;
    cert.criterion = "ectff2";
    bool exact = true;
    for (const auto& s : ds)
        if (!s.has_exact()) exact = false;
    cert.mode = exact ? Mode::Exact : Mode::Float;
    cert.tolerance = exact ? 0.0 : 1e-9;

    // (a) equichordality
    UniformityResult ec = is_equichordal(ds);
    {
        ResidualItem item;
        item.label = "equichordal";
        item.value = ec.pass ? 0.0 : 1.0;
        item.exact_zero = ec.pass;
        cert.items.push_back(item);
    }

    if (cert.mode == Mode::Float) {
        // pair sums accumulate n^2 terms
        cert.tolerance = 1e-9 * static_cast<double>(n) * static_cast<double>(n);
    }

    // (b) the tight-2-fusion-frame pair sums
    Certificate tff = check_tff(FrameConfig::equal_weight(ds), 2);
    for (auto& item : tff.items) {
        item.label = "tff2 " + item.label;
        cert.items.push_back(std::move(item));
    }

    // (c) measured moments vs the forced values
    UniformityResult ei = is_equiisoclinic(ds);
    if (exact) {
        Rational se1(0), se2(0);
        Rational max_ei_gap(0);
        std::optional<Rational> common_e1;
        bool common_ok = true;
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = 0; j < ds.size(); ++j) {
                if (i == j) continue;
                ExactAngles ea = *exact_angles(ds[i], ds[j]);
                se1 += ea.e1;
                se2 += ea.e2;
                if (!common_e1)
                    common_e1 = ea.e1;
                else if (*common_e1 != ea.e1)
                    common_ok = false;
                Rational gap = (ea.e1 * ea.e1 / Rational(4) - ea.e2).abs();
                if (gap > max_ei_gap) max_ei_gap = gap;
            }
        Rational pairs(n * (n - 1));
        report.measured_e10_exact = common_ok && common_e1 ? *common_e1 : se1 / pairs;
        report.measured_e2bar_exact = se2 / pairs;
        report.measured_e10 = report.measured_e10_exact->to_double();
        report.measured_e2bar = report.measured_e2bar_exact->to_double();
        cert.items.push_back(
            exact_residual("e10-residual", *report.measured_e10_exact - report.e10));
        cert.items.push_back(
            exact_residual("e2bar-residual", *report.measured_e2bar_exact - report.e2bar));
        if (ei.pass)
            cert.items.push_back(exact_residual("ei-pairwise-e2-gap", max_ei_gap));
    } else {
        double se1 = 0.0, se2 = 0.0, max_gap = 0.0;
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = 0; j < ds.size(); ++j) {
                if (i == j) continue;
                AnglePair ap = principal_angles(ds[i], ds[j]);
                se1 += ap.e1();
                se2 += ap.e2();
                max_gap = std::max(max_gap, std::abs(ap.e1() * ap.e1() / 4.0 - ap.e2()));
            }
        double pairs = static_cast<double>(n) * (n - 1);
        report.measured_e10 = se1 / pairs;
        report.measured_e2bar = se2 / pairs;
        cert.items.push_back(
            float_residual("e10-residual", *report.measured_e10 - report.e10.to_double()));
        cert.items.push_back(
            float_residual("e2bar-residual", *report.measured_e2bar - report.e2bar.to_double()));
        if (ei.pass) cert.items.push_back(float_residual("ei-pairwise-e2-gap", max_gap));
    }

    // Equi-isoclinic families cannot be tight 2-fusion frames in odd d.
    if (ei.pass && d % 2 == 1) {
        ResidualItem item;
        item.label = "eitff-odd-dimension-impossible";
        item.value = 1.0;
        item.exact_zero = false;
        cert.items.push_back(item);
        cert.note = "equi-isoclinic input in odd dimension: no EITFF_t exists";
    }

    // Bound verdicts gate too.
    {
        ResidualItem item;
        item.label = "cardinality-bounds";
        bool ok = report.lower_ok && report.upper_ok;
        item.value = ok ? 0.0 : 1.0;
        item.exact_zero = ok;
        cert.items.push_back(item);
    }

    cert.finalize();
    return {cert, report};
}

void SicSystem::validate(double tol) const {
    if (n < 2) throw std::domain_error("SicSystem: need n >= 2");
    if (vectors.size() != static_cast<size_t>(n) * n)
        throw std::domain_error("SicSystem: need n^2 vectors");
    for (const auto& z : vectors) {
        if (z.size() != static_cast<size_t>(2 * n))
            throw std::invalid_argument("SicSystem: vector size mismatch");
        auto [re, im] = cplx_inner(z, z);
        if (std::abs(re - 1.0) > tol || std::abs(im) > tol)
            throw std::domain_error("SicSystem: non-unit vector");
    }
    double target = 1.0 / (n + 1);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = i + 1; j < vectors.size(); ++j) {
            auto [re, im] = cplx_inner(vectors[i], vectors[j]);
            if (std::abs(re * re + im * im - target) > tol)
                throw std::domain_error("SicSystem: overlap invariant violated");
        }
}

SicSystem builtin_sic_n2() {
    // Qubit states whose Bloch vectors form the regular tetrahedron
    // (1,1,1)/sqrt3, (1,-1,-1)/sqrt3, (-1,1,-1)/sqrt3, (-1,-1,1)/sqrt3.
    SicSystem s;
    s.n = 2;
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const double bloch[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (const auto& b : bloch) {
        double nx = b[0] * inv_sqrt3, ny = b[1] * inv_sqrt3, nz = b[2] * inv_sqrt3;
        double theta = std::acos(nz);
        double phi = std::atan2(ny, nx);
        double c = std::cos(theta / 2.0), q = std::sin(theta / 2.0);
        // (re z1, im z1, re z2, im z2)
        s.vectors.push_back({c, 0.0, q * std::cos(phi), q * std::sin(phi)});
    }
    s.validate();
    return s;
}

std::vector<Subspace> planes_from_sic(const SicSystem& s) {
    s.validate();
    int d = 2 * s.n;
    std::vector<Subspace> out;
    out.reserve(s.vectors.size());
    for (const auto& z : s.vectors) {
        FloatMat basis(static_cast<size_t>(d), 2);
        for (int c = 0; c < s.n; ++c) {
            double re = z[static_cast<size_t>(2 * c)];
            double im = z[static_cast<size_t>(2 * c) + 1];
            basis(static_cast<size_t>(2 * c), 0) = re;
            basis(static_cast<size_t>(2 * c) + 1, 0) = im;
            // i z has entries (-im, re)
            basis(static_cast<size_t>(2 * c), 1) = -im;
            basis(static_cast<size_t>(2 * c) + 1, 1) = re;
        }
        Subspace plane = Subspace::from_basis(std::move(basis));
        // recover an exact projector where one exists (the tetrahedral
        // system has quadratic-irrational entries, so this usually declines)
        FloatMat qq(static_cast<size_t>(d), static_cast<size_t>(d));
        for (size_t i = 0; i < static_cast<size_t>(d); ++i)
            for (size_t j = 0; j < static_cast<size_t>(d); ++j)
                qq(i, j) = plane.basis(i, 0) * plane.basis(j, 0) +
                           plane.basis(i, 1) * plane.basis(j, 1);
        if (auto exact = rationalize_projector(qq)) {
            plane.projector = std::move(*exact);
            plane.validate();
        }
        out.push_back(std::move(plane));
    }
    // The planes must come out equi-isoclinic with squared cosine 1/(n+1).
    UniformityResult ei = is_equiisoclinic(out, kSicTol);
    if (!ei.pass || std::abs(ei.common_value - 1.0 / (s.n + 1)) > kSicTol)
        throw std::logic_error("planes_from_sic: equi-isoclinic invariant violated");
    return out;
}

Certificate check_design_image(const std::vector<Subspace>& ds) {
    if (ds.empty()) throw std::domain_error("check_design_image: empty input");
    int d = ds.front().d;
    if (ds.front().k >= d) throw std::domain_error("check_design_image: requires k < d");

    Certificate g4 = check_grassmann_4design(ds);

    // Image points on the unit sphere of the traceless symmetric space.
    std::vector<std::vector<double>> coords;
    coords.reserve(ds.size());
    double max_norm_err = 0.0;
    for (const auto& s : ds) {
        auto c = sphere_image_coords(s);
        double n2 = 0.0;
        for (double v : c) n2 += v * v;
        max_norm_err = std::max(max_norm_err, std::abs(n2 - 1.0));
        coords.push_back(std::move(c));
    }
    WeightedPointSet image =
        WeightedPointSet::from_floats(static_cast<int>(embedding_dim(d)), coords);
    Certificate s2 = check_design_pairwise(image, 2);

    Certificate cert;
    cert.criterion = "design-to-sphere-map";
    cert.mode = Mode::Float;
    double n = static_cast<double>(ds.size());
    cert.tolerance = 1e-9 * n * n;
    cert.degrees = {1, 2};

    cert.items.push_back(float_residual("image-unit-norm", max_norm_err));

    // P(2) double sum must equal the degree-1 Gegenbauer sum of the image.
    double p2_sum = g4.items[0].value;
    double deg1 = s2.items[0].value;
    cert.items.push_back(float_residual("p2-vs-image-degree1", p2_sum - deg1));

    // If the input is a Grassmann 4-design, the image must be a 2-design.
    {
        ResidualItem item;
        item.label = "4-design-maps-to-2-design";
        bool ok = !g4.pass || s2.pass;
        item.value = ok ? 0.0 : 1.0;
        item.exact_zero = ok;
        cert.items.push_back(item);
    }

    for (auto& item : g4.items) {
        item.label = "grassmann " + item.label;
        cert.diagnostics.push_back(std::move(item));
    }
    for (auto& item : s2.items) {
        item.label = "image " + item.label;
        cert.diagnostics.push_back(std::move(item));
    }
    cert.finalize();
    return cert;
}

}  // namespace slift
