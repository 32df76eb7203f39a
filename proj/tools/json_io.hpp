#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "parabolic/chamber.hpp"
#include "parabolic/local_matrix.hpp"
#include "parabolic/transform.hpp"
#include "parabolic/weights.hpp"

namespace parabolic::io {

using nlohmann::json;

// Field access that reports malformed input as InputError.
const json& require(const json& doc, const char* key);
long long get_int(const json& doc, const char* key);
long long get_int_or(const json& doc, const char* key, long long fallback);
bool get_bool_or(const json& doc, const char* key, bool fallback);

Rational parse_rational_json(const json& v);

WeightSystem parse_weights(const json& doc);
json to_json(const WeightSystem& w);

// Curve data from "genus" and "symmetries"; defaults to the identity only.
CurveData parse_curve(const json& doc, const std::vector<std::string>& labels);

ParabolicType parse_type(const json& v);
json to_json(const ParabolicType& t);
std::string type_key(const ParabolicType& t);

Permutation parse_perm(const json& v, const std::vector<std::string>& labels);
json to_json(const Permutation& p, const std::vector<std::string>& labels);

NumTransform parse_transform(const json& v, const std::vector<std::string>& labels);
json to_json(const NumTransform& t, const std::vector<std::string>& labels);

json to_json(const Wall& w);
json to_json(const ChamberInvariant& inv);

Laurent parse_laurent(const json& v);
json to_json(const Laurent& p);
LaurentMatrix parse_matrix(const json& v);
json to_json(const LaurentMatrix& m);
json to_json(const IntMatrix& m);

}  // namespace parabolic::io
