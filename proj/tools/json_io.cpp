#include "json_io.hpp"

#include <algorithm>
#include <map>

#include "parabolic/errors.hpp"

namespace parabolic::io {

namespace {

std::size_t label_index(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("unknown point label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

long long as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<long long>();
}

const json& require_array(const json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  return v;
}

}  // namespace

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

long long get_int(const json& doc, const char* key) { return as_int(require(doc, key), key); }

long long get_int_or(const json& doc, const char* key, long long fallback) {
  return doc.is_object() && doc.contains(key) ? as_int(doc.at(key), key) : fallback;
}

bool get_bool_or(const json& doc, const char* key, bool fallback) {
  if (!doc.is_object() || !doc.contains(key)) return fallback;
  if (!doc.at(key).is_boolean()) throw InputError(std::string(key) + " must be a boolean");
  return doc.at(key).get<bool>();
}

Rational parse_rational_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return to_rational(v.get<long long>());
  throw InputError("rationals must be given as \"p/q\" strings or integers");
}

WeightSystem parse_weights(const json& doc) {
  long long r = get_int(doc, "r");
  if (r < 2 || r > 64) throw DomainError("rank", "rank must lie in [2, 64]");
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> weights;
  for (const auto& p : require_array(require(doc, "points"), "points")) {
    const json& label = require(p, "label");
    if (!label.is_string()) throw InputError("point labels must be strings");
    labels.push_back(label.get<std::string>());
    std::vector<Rational> tuple;
    for (const auto& a : require_array(require(p, "weights"), "weights")) tuple.push_back(parse_rational_json(a));
    weights.push_back(std::move(tuple));
  }
  return WeightSystem(static_cast<int>(r), std::move(labels), std::move(weights));
}

json to_json(const WeightSystem& w) {
  json points = json::array();
  for (std::size_t x = 0; x < w.num_points(); ++x) {
    json tuple = json::array();
    for (const auto& a : w.at(x)) tuple.push_back(to_string(a));
    points.push_back({{"label", w.labels()[x]}, {"weights", tuple}});
  }
  return {{"r", w.rank()}, {"points", points}};
}

CurveData parse_curve(const json& doc, const std::vector<std::string>& labels) {
  long long genus = get_int_or(doc, "genus", 0);
  if (!doc.contains("symmetries")) return CurveData::trivial(genus, labels);
  std::vector<CurveSymmetry> symmetries;
  for (const auto& s : require_array(doc.at("symmetries"), "symmetries")) {
    Permutation p = parse_perm(require(s, "perm"), labels);
    symmetries.push_back({p.images(), get_int_or(s, "multiplicity", 1)});
  }
  return CurveData(genus, labels, std::move(symmetries));
}

ParabolicType parse_type(const json& v) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : require_array(v, "type")) {
    std::vector<int> r;
    for (const auto& e : require_array(row, "type row")) r.push_back(static_cast<int>(as_int(e, "type entry")));
    rows.push_back(std::move(r));
  }
  return ParabolicType(std::move(rows));
}

json to_json(const ParabolicType& t) { return t.rows(); }

std::string type_key(const ParabolicType& t) {
  std::string out;
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    if (x) out += "|";
    for (int i = 0; i < t.rank(); ++i) out += t.entry(x, i) ? '1' : '0';
  }
  return out;
}

Permutation parse_perm(const json& v, const std::vector<std::string>& labels) {
  std::vector<std::size_t> images;
  for (const auto& e : require_array(v, "perm")) {
    if (!e.is_string()) throw InputError("permutations list point labels");
    images.push_back(label_index(labels, e.get<std::string>()));
  }
  if (images.size() != labels.size()) throw InputError("permutation must list one image per point");
  return Permutation(std::move(images));
}

json to_json(const Permutation& p, const std::vector<std::string>& labels) {
  json out = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(labels[p(i)]);
  return out;
}

NumTransform parse_transform(const json& v, const std::vector<std::string>& labels) {
  NumTransform t = NumTransform::identity(labels.size());
  if (v.contains("perm")) t.perm = parse_perm(v.at("perm"), labels);
  t.sign = static_cast<int>(get_int_or(v, "sign", 1));
  if (t.sign != 1 && t.sign != -1) throw DomainError("sign", "sign must be +1 or -1");
  t.tdeg = get_int_or(v, "tdeg", 0);
  if (v.contains("hecke")) {
    t.hecke.clear();
    for (const auto& h : require_array(v.at("hecke"), "hecke")) t.hecke.push_back(as_int(h, "hecke entry"));
    if (t.hecke.size() != labels.size()) throw InputError("hecke must have one entry per point");
  }
  return t;
}

json to_json(const NumTransform& t, const std::vector<std::string>& labels) {
  return {{"perm", to_json(t.perm, labels)}, {"sign", t.sign}, {"tdeg", t.tdeg}, {"hecke", t.hecke}};
}

json to_json(const Wall& w) {
  return {{"subrank", w.pattern.subrank()},
          {"pattern", to_json(w.pattern)},
          {"level", to_string(w.level)},
          {"relevant", w.relevant}};
}

json to_json(const ChamberInvariant& inv) {
  json values = json::object();
  json order = json::array();
  for (const auto& [t, m] : inv.values) {
    values[type_key(t)] = m;
    order.push_back(type_key(t));
  }
  return {{"r", inv.r}, {"n", inv.n}, {"d", inv.d}, {"values", values}, {"order", order}};
}

Laurent parse_laurent(const json& v) {
  if (v.is_string() || v.is_number_integer()) return Laurent(parse_rational_json(v));
  if (!v.is_object()) throw InputError("matrix entries are rationals or {exponent: coefficient} objects");
  Laurent out;
  for (const auto& [k, c] : v.items()) {
    long long e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(k, &used);
      if (used != k.size()) throw InputError("bad exponent '" + k + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad exponent '" + k + "'");
    }
    out += Laurent::monomial(parse_rational_json(c), e);
  }
  return out;
}

json to_json(const Laurent& p) {
  if (p.is_constant()) return to_string(p.coefficient(0));
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

LaurentMatrix parse_matrix(const json& v) {
  const json& rows = require_array(v, "matrix");
  if (rows.empty()) throw InputError("matrix must be nonempty");
  std::size_t cols = require_array(rows.front(), "matrix row").size();
  LaurentMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = require_array(rows[i], "matrix row");
    if (row.size() != cols) throw InputError("matrix rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_laurent(row[j]);
  }
  return m;
}

json to_json(const LaurentMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

}  // namespace parabolic::io
