#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "parabolic/autgroup.hpp"
#include "parabolic/chamber.hpp"
#include "parabolic/errors.hpp"
#include "parabolic/local_matrix.hpp"
#include "parabolic/transform.hpp"
#include "parabolic/weights.hpp"

namespace parabolic::cli {

namespace {

using io::json;

struct Outcome {
  json body;
  int code = ok;
};

using Handler = std::function<Outcome(const json&)>;

std::vector<std::string> labels_of(const json& doc) {
  if (doc.contains("labels")) return doc.at("labels").get<std::vector<std::string>>();
  std::vector<std::string> labels;
  for (const auto& p : io::require(doc, "points")) labels.push_back(io::require(p, "label").get<std::string>());
  return labels;
}

int rank_of(const json& doc) {
  long long r = io::get_int(doc, "r");
  if (r < 2 || r > 64) throw DomainError("rank", "rank must lie in [2, 64]");
  return static_cast<int>(r);
}

// A second weight system; inherits r from the main document.
WeightSystem other_weights(const json& doc) {
  json other = io::require(doc, "other");
  if (!other.contains("r")) other["r"] = doc.at("r");
  return io::parse_weights(other);
}

json genericity_json(const GenericityReport& g) {
  json out = {{"generic", g.generic}};
  if (g.witness) out["witness"] = io::to_json(*g.witness);
  return out;
}

Outcome cmd_normalize(const json& doc) { return {{{"weights", io::to_json(normalize(io::parse_weights(doc)))}}}; }

Outcome cmd_owt(const json& doc) {
  WeightSystem w = io::parse_weights(doc);
  ParabolicType t = io::parse_type(io::require(doc, "type"));
  json out = {{"owt", to_string(owt(w, t))}, {"s_min", to_string(s_min(w, t))}};
  if (doc.contains("d")) out["pdeg"] = to_string(pdeg(io::get_int(doc, "d"), w));
  if (doc.contains("type2")) out["t_number"] = to_string(t_number(t, io::parse_type(doc.at("type2"))));
  return {out};
}

Outcome cmd_invariant(const json& doc) {
  WeightSystem w = io::parse_weights(doc);
  long long d = io::get_int(doc, "d");
  json out = {{"invariant", io::to_json(M_vec(w.rank(), w, d))},
              {"M_min", to_string(M_min(w.rank(), w.num_points(), d))},
              {"M_max", to_string(M_max(w.rank(), w.num_points(), d))}};
  if (doc.contains("sub")) {
    const json& s = doc.at("sub");
    SubbundleData sub{static_cast<int>(io::get_int(s, "subrank")), io::get_int(s, "degree"),
                      io::parse_type(io::require(s, "type"))};
    out["stability"] = to_string(stability_check(w.rank(), d, w, sub));
  }
  return {out};
}

Outcome cmd_same_chamber(const json& doc) {
  WeightSystem w1 = io::parse_weights(doc);
  WeightSystem w2 = other_weights(doc);
  long long d = io::get_int(doc, "d");
  const int r = w1.rank();
  json out = {{"same", same_numerical_chamber(r, w1, w2, d)}};
  if (!out["same"].get<bool>()) {
    for (const auto& t : admissible_types(r, w1.num_points())) {
      long long m1 = M(r, w1, d, t), m2 = M(r, w2, d, t);
      if (m1 == m2) continue;
      json witness = {{"type", io::type_key(t)}, {"M", {m1, m2}}};
      json walls = json::array();
      Rational f1 = wall_function(w1, t), f2 = wall_function(w2, t);
      for (Integer m = floor_of(f1 < f2 ? f1 : f2) + 1; m < (f1 < f2 ? f2 : f1); ++m)
        if (is_relevant_level(r, t.subrank(), d, m)) walls.push_back(io::to_json(Wall{t, m, true}));
      witness["walls"] = walls;
      out["witness"] = witness;
      break;
    }
  }
  return {out};
}

Outcome cmd_walls(const json& doc) {
  WeightSystem w1 = io::parse_weights(doc);
  WeightSystem w2 = other_weights(doc);
  long long d = io::get_int(doc, "d");
  json walls = json::array();
  for (const auto& wall : walls_crossed(w1.rank(), w1, w2, d, io::get_bool_or(doc, "relevant_only", false)))
    walls.push_back(io::to_json(wall));
  return {{{"walls", walls}}};
}

Outcome cmd_generic(const json& doc) { return {genericity_json(is_generic(io::parse_weights(doc)))}; }

Outcome cmd_concentrated(const json& doc) {
  WeightSystem w = io::parse_weights(doc);
  json spreads = json::array();
  for (const auto& a : w.weights()) spreads.push_back(to_string(a.back() - a.front()));
  long long r = w.rank();
  return {{{"concentrated", is_concentrated(w)},
           {"threshold", to_string(make_rational(4, static_cast<long long>(w.num_points()) * r * r))},
           {"spreads", spreads}}};
}

Outcome cmd_dims(const json& doc) {
  long long g = io::get_int(doc, "g"), n = io::get_int(doc, "n"), r = io::get_int(doc, "r");
  if (r > 1000 || n > 100000 || g > 1000000) throw DomainError("parameter_range", "parameters too large");
  HitchinDimensions h = dims(g, n, r);
  json strata = json::array();
  for (long long d = 1; 2 * d <= r; ++d) strata.push_back({{"d", d}, {"dim", dim_nonreduced_stratum(g, n, r, d)}});
  return {{{"dim_fixed_det", h.dim_fixed_det},
           {"dim_nonfixed", h.dim_nonfixed},
           {"dim_W", h.dim_W},
           {"dim_W_total", h.dim_W_total},
           {"nonreduced_strata", strata}}};
}

Outcome cmd_bounds(const json& doc) {
  WeightSystem w = io::parse_weights(doc);
  GenusBoundsQuery query;
  if (doc.contains("other")) query.other = other_weights(doc);
  if (doc.contains("type")) query.type = io::parse_type(doc.at("type"));
  query.refined = io::get_bool_or(doc, "refined", query.type.has_value());
  query.l = io::get_int_or(doc, "l", query.l);
  query.m = io::get_int_or(doc, "m", query.m);
  query.k = io::get_int_or(doc, "k", query.k);
  GenusBounds b = genus_bounds(w, query);
  json out = {{"chamber", to_string(b.chamber)},
              {"lm_stability", to_string(b.lm_stability)},
              {"codimension", to_string(b.codimension)}};
  if (b.refined) out["refined"] = to_string(*b.refined);
  return {out};
}

Outcome cmd_transform(const json& doc) {
  WeightSystem w = io::parse_weights(doc);
  NumTransform t = io::parse_transform(io::require(doc, "transform"), w.labels());
  json out = {{"weights", io::to_json(normalize(apply_to_weights(t, w)))},
              {"hecke_weights", io::to_json(hecke_weights(w, t.hecke))},
              {"in_ST_plus", is_in_ST_plus(t)}};
  if (doc.contains("d")) {
    long long d = io::get_int(doc, "d");
    out["degree"] = apply_to_degree(t, d, w.rank());
    if (w.rank() == 2 && t.sign == -1) out["reduced_rank2"] = io::to_json(reduce_dual_rank2(t, d), w.labels());
  }
  return {out};
}

Outcome cmd_compose(const json& doc) {
  auto labels = labels_of(doc);
  int r = rank_of(doc);
  NumTransform t1 = io::parse_transform(io::require(doc, "transform"), labels);
  NumTransform t2 = io::parse_transform(io::require(doc, "transform2"), labels);
  return {{{"result", io::to_json(compose(t1, t2, r), labels)}}};
}

Outcome cmd_inverse(const json& doc) {
  auto labels = labels_of(doc);
  int r = rank_of(doc);
  NumTransform t = io::parse_transform(io::require(doc, "transform"), labels);
  return {{{"result", io::to_json(inverse(t, r), labels)}}};
}

json classes_json(const std::vector<NumTransform>& classes, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& t : classes) out.push_back(io::to_json(t, labels));
  return out;
}

Outcome cmd_aut(const json& doc) {
  WeightSystem w = io::parse_weights(doc);
  long long d = io::get_int(doc, "d");
  CurveData curve = io::parse_curve(doc, w.labels());
  AutOptions options{io::get_bool_or(doc, "require_generic", true)};
  AutResult res = automorphism_group(w.rank(), w.num_points(), d, curve.genus(), w, curve, options);
  return {{{"classes", classes_json(res.classes, w.labels())},
           {"torsion_factor", to_string(res.torsion_factor)},
           {"order", to_string(res.order)},
           {"generic", res.generic},
           {"chamber_genus_threshold", to_string(res.chamber_genus_threshold)},
           {"torsion_lift_min_genus", res.torsion_lift_min_genus},
           {"candidates", candidate_transforms(w.rank(), w.num_points(), d, curve).size()}}};
}

Outcome cmd_iso(const json& doc) {
  WeightSystem w1 = io::parse_weights(doc);
  WeightSystem w2 = other_weights(doc);
  long long d1 = io::get_int(doc, "d");
  long long d2 = io::get_int(io::require(doc, "other"), "d");
  std::vector<Permutation> perms;
  if (doc.contains("curve_iso"))
    for (const auto& p : doc.at("curve_iso")) perms.push_back(io::parse_perm(p, w1.labels()));
  else
    perms.push_back(Permutation::identity(w1.num_points()));
  auto found = iso_transforms(w1.rank(), w1.num_points(), d1, w1, d2, w2, perms);
  return {{{"transforms", classes_json(found, w1.labels())}}};
}

Outcome cmd_orders(const json& doc) {
  long long g = io::get_int(doc, "g");
  long long r = io::get_int(doc, "r");
  long long nD = io::get_int(doc, "nD");
  long long aut = io::get_int_or(doc, "aut_order", 1);
  if (r < 2 || r > 1000 || g > 100000 || nD > 100000)
    throw DomainError("parameter_range", "parameters out of range");
  ConcentratedOrders o = concentrated_orders(g, static_cast<int>(r), nD, to_integer(aut));
  return {{{"aut", to_string(o.aut)}, {"threebir", to_string(o.threebir)}, {"ratio", to_string(o.ratio)}}};
}

Outcome cmd_matrix_xi(const json& doc) {
  long long n = io::get_int(doc, "n");
  if (n < 2 || n > 32) throw DomainError("parameter_range", "n must lie in [2, 32]");
  return {{{"xi", io::to_json(xi_matrix(static_cast<std::size_t>(n)))}}};
}

FactorRing parse_ring(const json& doc) {
  std::string ring = doc.contains("ring") ? doc.at("ring").get<std::string>() : "rational";
  if (ring == "rational") return FactorRing::rational;
  if (ring == "polynomial") return FactorRing::polynomial;
  if (ring == "laurent") return FactorRing::laurent;
  throw DomainError("ring", "unsupported ring '" + ring + "'");
}

Outcome cmd_matrix_rank1(const json& doc) {
  LaurentMatrix m = io::parse_matrix(io::require(doc, "matrix"));
  auto f = rank1_factor(m, parse_ring(doc));
  json out = {{"factorizable", f.has_value()}};
  if (f) {
    json col = json::array(), row = json::array();
    for (const auto& e : f->column) col.push_back(io::to_json(e));
    for (const auto& e : f->row) row.push_back(io::to_json(e));
    out["column"] = col;
    out["row"] = row;
  }
  return {out};
}

json classify_json(const LaurentMatrix& m) {
  json out = {{"pure_tensor", is_pure_tensor(m)}};
  auto a = is_inner(m);
  out["inner"] = a.has_value();
  if (a) out["A"] = io::to_json(*a);
  return out;
}

Outcome cmd_matrix_mp(const json& doc) {
  if (doc.contains("M")) return {classify_json(io::parse_matrix(doc.at("M")))};
  LaurentMatrix a = io::parse_matrix(io::require(doc, "A"));
  if (doc.contains("B")) {
    LaurentMatrix mp = mp_matrix(a, io::parse_matrix(doc.at("B")));
    json out = classify_json(mp);
    out["mp"] = io::to_json(mp);
    return {out};
  }
  HeckeConjugationReport rep = hecke_conjugation_check(a, io::get_int_or(doc, "precision", 16));
  json out = {{"mp", io::to_json(rep.mp)},
              {"integral", rep.integral},
              {"preserves_parabolic", rep.preserves_parabolic},
              {"a_parabolic", rep.a_parabolic},
              {"det_valuation", rep.det_valuation},
              {"hecke_power", rep.hecke_power},
              {"decomposition_verified", rep.decomposition_verified}};
  if (rep.exact_below != std::numeric_limits<long long>::max()) out["exact_below"] = rep.exact_below;
  return {out};
}

Outcome cmd_fixtures(const json&) {
  json claims = json::array();
  std::size_t passed = 0;
  auto results = run_fixtures();
  for (const auto& c : results) {
    json entry = {{"family", c.family}, {"claim", c.claim}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    claims.push_back(entry);
    passed += c.pass;
  }
  bool all = passed == results.size();
  return {{{"claims", claims}, {"passed", passed}, {"total", results.size()}, {"all_pass", all}},
          all ? ok : domain_error};
}

const std::map<std::string, std::pair<Handler, const char*>>& commands() {
  static const std::map<std::string, std::pair<Handler, const char*>> table = {
      {"normalize", {cmd_normalize, "translate every point so its first weight is 0"}},
      {"owt", {cmd_owt, "weighted sums owt, s_min, pdeg and t-numbers for a type"}},
      {"invariant", {cmd_invariant, "chamber invariant M-bar and optional stability check"}},
      {"same-chamber", {cmd_same_chamber, "compare numerical chambers, with a witness wall"}},
      {"walls", {cmd_walls, "integer walls crossed between two weight systems"}},
      {"generic", {cmd_generic, "genericity test with a witness wall"}},
      {"concentrated", {cmd_concentrated, "concentration test"}},
      {"dims", {cmd_dims, "moduli and Hitchin base dimensions"}},
      {"bounds", {cmd_bounds, "genus thresholds"}},
      {"transform", {cmd_transform, "apply a transformation to weights and degree"}},
      {"compose", {cmd_compose, "normal form of a composite transformation"}},
      {"inverse", {cmd_inverse, "inverse transformation"}},
      {"aut", {cmd_aut, "numerical automorphism classes and group order"}},
      {"iso", {cmd_iso, "numerical isomorphisms between two moduli data"}},
      {"orders", {cmd_orders, "automorphism and 3-birational orders, concentrated chamber"}},
      {"matrix-xi", {cmd_matrix_xi, "exponent matrix Xi"}},
      {"matrix-rank1", {cmd_matrix_rank1, "outer-product factorization"}},
      {"matrix-mp", {cmd_matrix_mp, "parabolic conjugation matrix and Hecke conjugation check"}},
      {"fixtures", {cmd_fixtures, "run the worked-example regression claims"}},
  };
  return table;
}

json error_json(const char* kind, const std::string& message, const std::string& invariant = {}) {
  json e = {{"kind", kind}, {"message", message}};
  if (!invariant.empty()) e["invariant"] = invariant;
  return {{"error", e}};
}

json read_document(const std::string& path, bool from_stdin, std::istream& in) {
  if (from_stdin) return json::parse(in);
  if (path.empty()) throw InputError("an input file or --json is required");
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return json::parse(file);
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out) {
  CLI::App app{"Exact stability chambers, basic transformations and local matrix algebra "
               "for full-flag parabolic bundle moduli"};
  app.require_subcommand(1);
  std::string path;
  bool from_stdin = false;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    if (name == "fixtures") continue;
    sub->add_option("input", path, "input JSON document");
    sub->add_flag("--json", from_stdin, "read the input document from standard input");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return malformed_input;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    json doc = name == "fixtures" ? json::object() : read_document(path, from_stdin, in);
    if (!doc.is_object()) throw InputError("input document must be a JSON object");
    Outcome result = commands().at(name).first(doc);
    out << result.body.dump(2) << "\n";
    return result.code;
  } catch (const DomainError& e) {
    out << error_json("domain", e.what(), e.invariant()).dump(2) << "\n";
    return domain_error;
  } catch (const InputError& e) {
    out << error_json("input", e.what()).dump(2) << "\n";
    return malformed_input;
  } catch (const json::exception& e) {
    out << error_json("input", e.what()).dump(2) << "\n";
    return malformed_input;
  }
}

}  // namespace parabolic::cli
