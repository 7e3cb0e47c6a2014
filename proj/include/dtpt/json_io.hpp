#pragma once

#include "dtpt/adhm.hpp"
#include "dtpt/quiver.hpp"
#include "dtpt/series.hpp"
#include "dtpt/sod.hpp"
#include "dtpt/stability.hpp"
#include "dtpt/zonotope.hpp"

#include <json.hpp>

namespace dtpt {

// Deterministic key order everywhere: serialization uses ordered JSON and
// inserts keys in a fixed sequence. Rationals travel as canonical "p/q"
// strings (plain "p" for integers), matrices as flat row-major string
// arrays with shapes recovered from context. Round-trips are exact.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j, size_t rows, size_t cols);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json potential_to_json(const Potential& p);
Potential potential_from_json(const Json& j);

Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json framed_rep_to_json(const FramedRep& rep);
FramedRep framed_rep_from_json(const Json& j);

Json verdict_to_json(const StabilityVerdict& v);
Json one_ps_to_json(const OnePsCertificate& c);

Json zonotope_to_json(const Zonotope& z);
Zonotope zonotope_from_json(const Json& j);

Json certificate_to_json(const MembershipCertificate& c);

Json summand_to_json(const SummandDescriptor& s);
Json decomposition_to_json(const WeightDecomposition& d);

Json series_to_json(const IntSeries& s);

WeightVec weight_from_string(const std::string& csv);  // "1,-1/2,0"

}  // namespace dtpt
