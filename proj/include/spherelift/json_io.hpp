#pragma once

#include "spherelift/bounds.hpp"
#include "spherelift/certificate.hpp"
#include "spherelift/grassmann.hpp"
#include "spherelift/lifting.hpp"
#include "spherelift/orbits.hpp"
#include "spherelift/sphere_designs.hpp"

#include <json.hpp>

#include <string>

namespace slift {

// Insertion-ordered JSON keeps emitted artifacts byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as canonical "p/q" strings ("p" when q = 1).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json radical_to_json(const RadicalSum& r);
RadicalSum radical_from_json(const Json& j);

Json matrix_to_json(const RatMat& m);   // row-major arrays of rational strings
RatMat rat_matrix_from_json(const Json& j);
Json matrix_to_json(const FloatMat& m);
FloatMat float_matrix_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json frame_to_json(const FrameConfig& f);
FrameConfig frame_from_json(const Json& j);

Json pointset_to_json(const WeightedPointSet& x);
WeightedPointSet pointset_from_json(const Json& j);

Json orbit_union_to_json(const OrbitUnion& u);
OrbitUnion orbit_union_from_json(const Json& j);

Json ectff_report_to_json(const EctffReport& r);

Json lifted_design_to_json(const LiftedDesign& d);

}  // namespace slift
