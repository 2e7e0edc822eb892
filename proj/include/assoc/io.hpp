#pragma once

#include "assoc/diagonal.hpp"
#include "assoc/loday.hpp"
#include "assoc/polytope.hpp"

#include <json.hpp>

#include <string>

namespace assoc {

using Json = nlohmann::json;

/// Rationals are strings "p/q" (or "p"); vectors are arrays of such strings.
Json to_json(const Rational& q);
Json to_json(const QVector& v);
Rational rational_from_json(const Json& j);
QVector qvector_from_json(const Json& j);

/// Nested arrays, a leaf is []. The corolla c_3 is [[],[],[]].
Json to_json(const PlanarTree& t);
PlanarTree tree_from_json(const Json& j);

/// {dim, equalities, inequalities}, each constraint {normal, rhs, label}.
Json to_json(const HPolytope& h);
HPolytope hpolytope_from_json(const Json& j);
/// {dim, vertices} with an optional parallel "labels" array.
Json to_json(const VPolytope& v);
VPolytope vpolytope_from_json(const Json& j);

/// {weight, vertices: [{tree, coords}], facets: [{tree, normal, rhs}], orientation}.
Json to_json(const LodayRealization& k);
/// Rebuilds from the weight and orientation and throws ValidationError when the
/// stored vertices or facets disagree with the rebuilt ones.
LodayRealization realization_from_json(const Json& j);

/// [{F, G, dimF, dimG}] for pairs of faces of a single associahedron.
Json to_json(const std::vector<MatchingPair>& pairs);
std::vector<MatchingPair> pairs_from_json(const Json& j);

/// OFF for a polytope of affine dimension at most 3, written in coordinates of
/// its affine hull and padded to three columns. Coordinates are exact strings
/// unless `decimal` is set. Faces of a 3-polytope are listed counterclockwise
/// seen from outside. Throws std::invalid_argument above dimension 3.
std::string to_off(const std::vector<QPoint>& vertices, bool decimal = false);

}  // namespace assoc
