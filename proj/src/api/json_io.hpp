#pragma once

#include <json.hpp>

#include "gsp/dist.hpp"
#include "gsp/exactnum.hpp"
#include "gsp/lfactors.hpp"
#include "gsp/poly.hpp"
#include "gsp/qexp.hpp"
#include "gsp/weights.hpp"

namespace gsp::io {

using json = nlohmann::json;

// Scalars. Rationals are written as "num/den"; readers also take JSON integers and "n".
json to_json(const Rational& q);
json to_json(const Cyclotomic& x);  // "num/den" when rational, else {n, coeffs, str}
json to_json(const QuadSurd& x);    // {a, b, p, str}
json to_json(const Valuation& v);   // "inf" or "num/den"
json to_json(const Mat4& m);
json to_json(const Poly& f, const std::vector<std::string>& names);
json to_json(const QExpansion& F);
json to_json(const LocAnFunction& f);

Rational rational_from(const json& j);
Cyclotomic cyclotomic_from(const json& j);
Valuation valuation_from(const json& j);
Mat4 mat_from(const json& j);
Poly poly_from(const json& j, size_t nvars);  // [{"exps": [...], "coeff": "r"}]
QExpansion qexp_from(const json& j);
LocAnFunction locan_from(const json& j, long p);
LocAlgChar localg_from(const json& j, long p);  // 3, "3", "x^3", "x^1*chi[1:1]"

// Payload accessors; values may be JSON numbers or strings (as produced by the CLI).
bool has(const json& j, const char* key);
long get_long(const json& j, const char* key);
long get_long(const json& j, const char* key, long dflt);
Rational get_rational(const json& j, const char* key);
Rational get_rational(const json& j, const char* key, const Rational& dflt);
double get_double(const json& j, const char* key);
std::string get_string(const json& j, const char* key);
std::string get_string(const json& j, const char* key, const std::string& dflt);
bool get_bool(const json& j, const char* key, bool dflt);
// Array or comma/semicolon separated string.
std::vector<json> get_list(const json& j, const char* key);
std::vector<Rational> get_rationals(const json& j, const char* key);
std::vector<Cyclotomic> get_cyclotomics(const json& j, const char* key);

}  // namespace gsp::io
