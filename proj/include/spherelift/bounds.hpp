#pragma once

#include "spherelift/certificate.hpp"
#include "spherelift/grassmann.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slift {

enum class EctffClass {
    InfeasibleLower,  // N < d^2/4: no equi-chordal tight 2-fusion frame
    InfeasibleUpper,  // N > binom(d+1,2)
    Eitff2,           // lower-bound equality: forced equi-isoclinic
    Tight4Design,     // upper-bound equality: forced tight Grassmann 4-design
    Interior,         // strict inequalities; no existence claim either way
};

const char* ectff_class_name(EctffClass c);

/// Exact moment predictions and bound verdicts for a hypothetical
/// equi-chordal tight 2-fusion frame of N planes in G(2,d).
struct EctffReport {
    int d = 0;
    long long n = 0;
    Rational e10;       // forced common e1 value
    Rational e2bar;     // forced mean of e2 over distinct pairs
    Rational gap;       // e10^2/4 - e2bar, closed form
    Rational p22_sum;   // forced value of the P(2,2) double sum
    bool lower_ok = false;
    bool upper_ok = false;
    EctffClass classification = EctffClass::Interior;

    // filled by check_ectff2 when measuring an actual configuration
    std::optional<Rational> measured_e10_exact, measured_e2bar_exact;
    std::optional<double> measured_e10, measured_e2bar;
};

/// Closed-form report; requires d >= 4, N >= 2.
EctffReport ectff2_moments(int d, long long n);

/// Verifies a configuration against the equi-chordal tight-2-fusion-frame
/// necessary conditions: equichordality, the TFF_2 pair sums, and the
/// measured moments against the forced values; equi-isoclinic inputs are
/// additionally checked per pair (and rejected outright in odd dimensions).
std::pair<Certificate, EctffReport> check_ectff2(const std::vector<Subspace>& ds);

/// n^2 unit vectors in C^n with pairwise squared overlap 1/(n+1), stored as
/// 2n real coordinates (re, im interleaved per complex entry).
struct SicSystem {
    int n = 0;
    std::vector<std::vector<double>> vectors;

    void validate(double tol = 1e-10) const;
};

/// The tetrahedral system in C^2 (any valid choice works; they are all
/// unitarily equivalent).
SicSystem builtin_sic_n2();

/// Real planes span{z, iz} of the system's complex lines: n^2 planes in
/// G(2, 2n), certified equi-isoclinic with squared cosine 1/(n+1).
std::vector<Subspace> planes_from_sic(const SicSystem& s);

/// Checks the design-to-sphere mapping: if the configuration is a Grassmann
/// 4-design, its traceless-projector image must be a spherical 2-design; the
/// degree-1 image sum must match the P(2) double sum either way.
Certificate check_design_image(const std::vector<Subspace>& ds);

}  // namespace slift
