#pragma once

// JSON encodings. Rationals are strings "p" or "p/q".

#include <string>

#include "json.hpp"

#include "bisfan/biscone.hpp"
#include "bisfan/bisector.hpp"
#include "bisfan/fanlocate.hpp"

namespace bisfan {

using Json = nlohmann::json;

/// Accepts a string "p/q" or a JSON integer. Errors: Parse.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Json to_json(const QVector& v);

/// { "dim": d, "vertices": [[...], ...], "facets": optional [[indices], ...] }.
/// Errors: Parse plus the make_vrep errors.
BallSpec vrep_spec_from_json(const Json& j);
BallSpec load_vrep_file(const std::string& path);
/// Counter-clockwise polygon vertices: { "vertices": [[x, y], ...] }.
BallSpec polygon_spec_from_json(const Json& j);

/// polygon {"i": k}, cube {"i": k, "sign": "+"}, subset families {"I": [...]},
/// vrep {"index": k}. All indices are 1-based except vrep, which uses the
/// 0-based position in the facet list.
Json facet_to_json(const UnitBall& ball, FacetIndex f);
Json cellset_to_json(const UnitBall& ball, const CellSet& cells);
Json genericity_to_json(const GenericityReport& rep);
Json signature_to_json(const UnitBall& ball, const FanSignature& sig);
Json cone_to_json(const UnitBall& ball, FacetIndex f, FacetIndex g, const Cone& cone);

Json subset_to_json(SubsetMask mask);

}  // namespace bisfan
