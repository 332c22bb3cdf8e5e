#include "bisfan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bisfan/export.hpp"
#include "bisfan/io.hpp"
#include "bisfan/sampling.hpp"

namespace bisfan {

namespace {

struct RunConfig {
  std::string family;
  std::size_t dim = 0;
  std::size_t sides = 0;
  std::string vertices_file;
  std::string site;
  std::string site_b;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  long range = 1000;
  std::string dim_range;
  std::string out_path;
  std::string format;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Family> kFamilies = {{"polygon", Family::Polygon},
                                                 {"cube", Family::Cube},
                                                 {"l1", Family::CrossPolytope},
                                                 {"wasserstein", Family::RootPolytopeA},
                                                 {"vrep", Family::GeneralVRep}};

UnitBall ball_from(const RunConfig& cfg) {
  BallSpec spec;
  spec.family = kFamilies.at(cfg.family);
  switch (spec.family) {
    case Family::Polygon: {
      if (!cfg.vertices_file.empty()) {
        std::ifstream in(cfg.vertices_file);
        if (!in) throw Error(Errc::Parse, "cannot open " + cfg.vertices_file);
        try {
          spec = polygon_spec_from_json(Json::parse(in));
        } catch (const Json::exception& e) {
          throw Error(Errc::Parse, e.what());
        }
      } else {
        if (cfg.sides == 0) throw UsageError("polygon needs --sides or --vertices");
        if (cfg.sides % 2 != 0) throw Error(Errc::NotCentrallySymmetric, "--sides must be even");
        spec.half_sides = cfg.sides / 2;
      }
      break;
    }
    case Family::GeneralVRep:
      if (cfg.vertices_file.empty()) throw UsageError("vrep needs --vertices");
      spec = load_vrep_file(cfg.vertices_file);
      break;
    default:
      if (cfg.dim == 0) throw UsageError("--dim is required for this family");
      spec.dim = cfg.dim;
  }
  return make_ball(spec);
}

QVector parse_site(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return QVector::parse(text);
}

// Writes to --out when given, stdout otherwise.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw Error(Errc::Parse, "cannot write " + cfg.out_path);
  file << text;
}

int cmd_cells(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ball = ball_from(cfg);
  const auto a = parse_site(cfg.site, "--site");
  const auto cells = enumerate_cells(ball, a);
  const auto rep = genericity(ball, a);
  if (!rep.weak_general)
    err << "warning: site is not in weak general position; cells with F = G may be full-dimensional\n";
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "# family=" << to_string(ball.family()) << " site=" << a.to_string() << " count=" << cells.size()
       << " weakGeneral=" << (rep.weak_general ? "true" : "false") << " general=" << to_string(rep.general)
       << "\n";
    os << "F,G\n";
    for (const auto& p : cells.pairs()) os << ball.facet_label(p.f) << ',' << ball.facet_label(p.g) << '\n';
  } else {
    Json j = {{"family", std::string(to_string(ball.family()))},
              {"dim", ball.dim()},
              {"site", to_json(a)},
              {"count", cells.size()},
              {"pairs", cellset_to_json(ball, cells)},
              {"genericity", genericity_to_json(rep)}};
    os << j.dump(2) << '\n';
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

int cmd_equiv(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ball = ball_from(cfg);
  const auto a = parse_site(cfg.site, "--site");
  const auto b = parse_site(cfg.site_b, "--site-b");
  const bool by_cells = equivalent(ball, a, b);
  std::optional<bool> by_fan;
  std::string note;
  try {
    by_fan = same_cone(ball, a, b);
  } catch (const Error& e) {
    if (e.code() != Errc::DegeneratePoint && e.code() != Errc::Unsupported) throw;
    note = e.what();
  }
  Json j = {{"enumeration", by_cells}, {"fan", by_fan ? Json(*by_fan) : Json(nullptr)}};
  if (!note.empty()) j["fanNote"] = note;
  emit(cfg, out, j.dump(2) + "\n");
  if (by_fan && *by_fan != by_cells) {
    err << "error: cell enumeration and fan location disagree\n";
    return kExitInvariant;
  }
  return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("--range expects lo:hi");
  }
}

struct Expectation {
  std::size_t value;
  bool exact;  // equality, otherwise a lower bound
};

Expectation expected_count(Family f, std::size_t p) {
  switch (f) {
    case Family::Polygon: return {2 * p - 1, true};
    case Family::Cube: return {p * p - p + 1, true};
    case Family::CrossPolytope: return {std::size_t{1} << (p - 2), false};
    case Family::RootPolytopeA: return {2 * ((std::size_t{1} << (p - 2)) - 1), false};
    case Family::GeneralVRep: break;
  }
  throw Error(Errc::Unsupported, "count suite needs a closed-form family");
}

int cmd_count_suite(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Family fam = kFamilies.at(cfg.family);
  if (fam == Family::GeneralVRep) throw Error(Errc::Unsupported, "count suite needs a closed-form family");
  if (cfg.dim_range.empty()) throw UsageError("--range is required");
  const auto [lo, hi] = parse_range(cfg.dim_range);
  if (lo < 2 || hi < lo) throw UsageError("bad --range");
  if ((fam == Family::CrossPolytope || fam == Family::RootPolytopeA) && hi > kMaxPairEnumDim)
    throw Error(Errc::CapExceeded, "pair enumeration is capped at d = " + std::to_string(kMaxPairEnumDim));
  if (fam == Family::Cube && hi > kMaxExplicitDim) throw Error(Errc::CapExceeded, "cube dimension above cap");

  Sampler sampler(cfg.seed, cfg.range, cfg.range);
  std::ostringstream os;
  os << "# seed=" << cfg.seed << " range=" << cfg.range << " denominator=" << cfg.range << "\n";
  os << "family,param,ball,samples,min,max,mode,expected,match\n";
  for (std::size_t p = lo; p <= hi; ++p) {
    std::vector<std::pair<std::string, UnitBall>> balls;
    if (fam == Family::Polygon) {
      balls.emplace_back("regular", make_regular_polygon(p));
      for (int k = 1; k <= 3; ++k) balls.emplace_back("perturbed" + std::to_string(k), sampler.perturbed_polygon(p));
    } else {
      BallSpec spec;
      spec.family = fam;
      spec.dim = p;
      balls.emplace_back("standard", make_ball(spec));
    }
    const auto expect = expected_count(fam, p);
    for (const auto& [name, ball] : balls) {
      std::map<std::size_t, std::size_t> hist;
      for (std::size_t s = 0; s < cfg.samples; ++s) ++hist[cell_count(ball, sampler.generic_site(ball))];
      const std::size_t mn = hist.empty() ? 0 : hist.begin()->first;
      const std::size_t mx = hist.empty() ? 0 : hist.rbegin()->first;
      std::size_t mode = 0, best = 0;
      for (const auto& [v, c] : hist)
        if (c > best) best = c, mode = v;
      const bool match = hist.empty() || (expect.exact ? (mn == expect.value && mx == expect.value) : mn >= expect.value);
      os << cfg.family << ',' << (fam == Family::Polygon ? 2 * p : p) << ',' << name << ',' << cfg.samples << ','
         << mn << ',' << mx << ',' << mode << ',' << (expect.exact ? "" : ">=") << expect.value << ','
         << (match ? "true" : "false") << '\n';
    }
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

int cmd_export_cones(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.vertices_file.empty()) throw UsageError("--vertices is required");
  if (cfg.out_path.empty()) throw UsageError("--out is required");
  const auto ball = make_ball(load_vrep_file(cfg.vertices_file));
  if (ball.dim() != 3) throw Error(Errc::DimMismatch, "cone export needs a 3-dimensional polytope");
  const auto pieces = all_cone_pieces(ball);
  const std::string stem = cfg.out_path;
  {
    std::ofstream js(stem + ".json", std::ios::binary);
    if (!js) throw Error(Errc::Parse, "cannot write " + stem + ".json");
    js << pieces_to_json(ball, pieces).dump(1) << '\n';
  }
  if (cfg.format != "json") {
    std::ofstream off(stem + ".off", std::ios::binary);
    if (!off) throw Error(Errc::Parse, "cannot write " + stem + ".off");
    write_off(off, pieces);
  }
  out << "facets=" << ball.num_facets() << " pieces=" << pieces.size() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bisectors and bisection fans of polyhedral norms"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::vector<std::string> family_names;
  for (const auto& [name, _] : kFamilies) family_names.push_back(name);

  auto add_ball_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Unit ball family")
        ->required()
        ->check(CLI::IsMember(family_names));
    sub->add_option("--dim", cfg.dim, "Dimension (cube, l1, wasserstein)");
    sub->add_option("--sides", cfg.sides, "Number of polygon vertices 2n (near-regular polygon)");
    sub->add_option("--vertices", cfg.vertices_file, "JSON vertex file (polygon or vrep)");
  };

  auto* cells = app.add_subcommand("cells", "Enumerate the nonempty cells of bis(0, a)");
  add_ball_opts(cells);
  cells->add_option("--site", cfg.site, "Site a as p/q,p/q,...")->required();
  cells->add_option("--out", cfg.out_path, "Output file");
  cells->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* equiv = app.add_subcommand("equiv", "Compare two bisectors by cells and by fan location");
  add_ball_opts(equiv);
  equiv->add_option("--site", cfg.site, "Site a")->required();
  equiv->add_option("--site-b", cfg.site_b, "Site b")->required();
  equiv->add_option("--out", cfg.out_path, "Output file");
  equiv->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

  auto* suite = app.add_subcommand("count-suite", "Cell counts of sampled general-position sites");
  suite->add_option("--family", cfg.family, "Unit ball family")
      ->required()
      ->check(CLI::IsMember({"polygon", "cube", "l1", "wasserstein"}));
  suite->add_option("--range", cfg.dim_range, "lo:hi over d, or over n for 2n-gons")->required();
  suite->add_option("--samples", cfg.samples, "Sites per row");
  suite->add_option("--seed", cfg.seed, "Random seed");
  suite->add_option("--numerator-range", cfg.range, "N: numerators drawn from [-N, N] over denominator N");
  suite->add_option("--out", cfg.out_path, "Output file");
  suite->add_option("--format", cfg.format, "csv")->check(CLI::IsMember({"csv"}));

  auto* exp = app.add_subcommand("export-cones", "Export B_{F,G} n P for a 3-polytope");
  exp->add_option("--vertices", cfg.vertices_file, "JSON vertex file")->required();
  exp->add_option("--out", cfg.out_path, "Output stem; writes <stem>.off and <stem>.json")->required();
  exp->add_option("--format", cfg.format, "off or json")->check(CLI::IsMember({"off", "json"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*cells) return cmd_cells(cfg, out, err);
    if (*equiv) return cmd_equiv(cfg, out, err);
    if (*suite) return cmd_count_suite(cfg, out, err);
    if (*exp) return cmd_export_cones(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Parse ? kExitUsage : kExitDomain;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace bisfan
