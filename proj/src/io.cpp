#include "bisfan/io.hpp"

#include <fstream>
#include <sstream>

namespace bisfan {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::Parse, "expected a rational string or an integer, got " + j.dump());
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

namespace {

std::vector<QVector> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "\"vertices\" must be an array");
  std::vector<QVector> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(Errc::Parse, "vertex must be an array");
    std::vector<Rational> coords;
    for (const auto& c : row) coords.push_back(rational_from_json(c));
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

BallSpec vrep_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw Error(Errc::Parse, "missing \"vertices\"");
  BallSpec spec;
  spec.family = Family::GeneralVRep;
  spec.vertices = vertices_from_json(j.at("vertices"));
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_unsigned()) throw Error(Errc::Parse, "\"dim\" must be a positive integer");
    spec.dim = j.at("dim").get<std::size_t>();
  } else if (!spec.vertices.empty()) {
    spec.dim = spec.vertices.front().dim();
  }
  if (j.contains("facets")) {
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& f : j.at("facets")) {
      std::vector<std::size_t> idx;
      for (const auto& v : f) {
        if (!v.is_number_unsigned()) throw Error(Errc::Parse, "facet entries must be vertex indices");
        idx.push_back(v.get<std::size_t>());
      }
      facets.push_back(std::move(idx));
    }
    spec.facets = std::move(facets);
  }
  return spec;
}

BallSpec polygon_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw Error(Errc::Parse, "missing \"vertices\"");
  BallSpec spec;
  spec.family = Family::Polygon;
  spec.dim = 2;
  spec.vertices = vertices_from_json(j.at("vertices"));
  return spec;
}

BallSpec load_vrep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  try {
    return vrep_spec_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

Json subset_to_json(SubsetMask mask) {
  Json out = Json::array();
  for (auto i : subset_members(mask)) out.push_back(i);
  return out;
}

Json facet_to_json(const UnitBall& ball, FacetIndex f) {
  ball.facet(f);
  switch (ball.family()) {
    case Family::Polygon: return {{"i", f + 1}};
    case Family::Cube:
      return {{"i", ball.cube_coord(f) + 1}, {"sign", ball.cube_sign(f) == Sign::Plus ? "+" : "-"}};
    case Family::CrossPolytope:
    case Family::RootPolytopeA: return {{"I", subset_to_json(ball.facet_mask(f))}};
    case Family::GeneralVRep: break;
  }
  return {{"index", f}};
}

Json cellset_to_json(const UnitBall& ball, const CellSet& cells) {
  Json pairs = Json::array();
  for (const auto& p : cells.pairs())
    pairs.push_back({{"F", facet_to_json(ball, p.f)},
                     {"G", facet_to_json(ball, p.g)},
                     {"label", pair_label(ball, p)}});
  return pairs;
}

Json genericity_to_json(const GenericityReport& rep) {
  return {{"weakGeneral", rep.weak_general},
          {"general", std::string(to_string(rep.general))},
          {"violations", rep.violations}};
}

namespace {

Json subsets_json(const std::vector<SubsetMask>& masks) {
  Json out = Json::array();
  for (auto m : masks) out.push_back(subset_to_json(m));
  return out;
}

Json ray_json(const FanRay& r) { return {{"direction", to_json(r.direction)}, {"i", r.i}, {"j", r.j}}; }

}  // namespace

Json signature_to_json(const UnitBall& ball, const FanSignature& sig) {
  Json out;
  out["family"] = std::string(to_string(ball.family()));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PolygonSig>) {
          out["lo"] = ray_json(s.lo);
          out["hi"] = ray_json(s.hi);
        } else if constexpr (std::is_same_v<T, CubeSig>) {
          out["signs"] = s.signs;
          out["dominant"] = s.dominant + 1;
        } else if constexpr (std::is_same_v<T, CrossSig>) {
          out["signs"] = s.signs;
          Json m = Json::array();
          SubsetMask k = 1;
          for (auto v : s.subset_signs) {
            m.push_back({{"I", subset_to_json(k)}, {"sign", v}});
            k += 2;
          }
          out["subsetSigns"] = m;
        } else {
          out["positiveSums"] = subsets_json(s.positive_sums());
          out["heavyPositive"] = subsets_json(s.heavy_positive);
          out["lightNegative"] = subsets_json(s.light_negative);
        }
      },
      sig);
  return out;
}

Json cone_to_json(const UnitBall& ball, FacetIndex f, FacetIndex g, const Cone& cone) {
  Json gens = Json::array();
  for (const auto& v : cone.generators) gens.push_back(to_json(v));
  return {{"family", std::string(to_string(ball.family()))},
          {"facetPair", {{"F", facet_to_json(ball, f)}, {"G", facet_to_json(ball, g)}}},
          {"generators", gens}};
}

}  // namespace bisfan
