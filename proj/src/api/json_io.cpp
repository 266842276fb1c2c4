#include "api/json_io.hpp"

#include <sstream>

namespace gsp::io {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Cyclotomic& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  json c = json::array();
  for (const Rational& q : x.coeffs()) c.push_back(to_string(q));
  return json{{"n", x.order()}, {"coeffs", c}, {"str", x.str()}};
}

json to_json(const QuadSurd& x) {
  return json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"p", x.prime()}, {"str", x.str()}};
}

json to_json(const Valuation& v) { return v.str(); }

json to_json(const Mat4& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Rational& q : row) r.push_back(to_string(q));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const Poly& f, const std::vector<std::string>& names) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json{{"exps", e}, {"coeff", to_string(c)}});
  return json{{"terms", terms}, {"str", f.str(names)}};
}

json to_json(const QExpansion& F) {
  json c = json::array();
  for (const Cyclotomic& a : F.a) c.push_back(to_json(a));
  return json{{"p", F.p}, {"N", F.N}, {"weight", json{{"label", F.weight}, {"zero_component", F.zero_component}}}, {"coeffs", c}};
}

json to_json(const LocAnFunction& f) {
  json terms = json::array();
  for (const LocAnTerm& t : f.terms()) {
    json o{{"coeff", to_json(t.coeff)}, {"units_only", t.units_only}, {"power", t.power}, {"base", to_string(t.base)}, {"binom", t.binom}};
    if (t.chi) o["chi"] = t.chi->label();
    terms.push_back(o);
  }
  return json{{"terms", terms}, {"radius", f.radius()}};
}

// ---------------------------------------------------------------- readers

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational (integer or \"num/den\"), got " + j.dump());
}

Cyclotomic cyclotomic_from(const json& j) {
  if (j.is_object()) {
    if (!j.contains("n") || !j.contains("coeffs")) throw InputError("cyclotomic object needs n and coeffs");
    long n = j.at("n").get<long>();
    if (n < 1) throw InputError("cyclotomic order must be >= 1");
    std::vector<Rational> c;
    for (const json& x : j.at("coeffs")) c.push_back(rational_from(x));
    return Cyclotomic::from_coeffs(static_cast<unsigned>(n), std::move(c));
  }
  return Cyclotomic(rational_from(j));
}

Valuation valuation_from(const json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "+inf")) return Valuation::infinity();
  return Valuation(rational_from(j));
}

Mat4 mat_from(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("matrix must be 4 rows");
  Mat4 m;
  for (size_t i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) throw InputError("matrix rows must have 4 entries");
    for (size_t k = 0; k < 4; ++k) m[i][k] = rational_from(j[i][k]);
  }
  return m;
}

Poly poly_from(const json& j, size_t nvars) {
  const json& terms = j.is_object() && j.contains("terms") ? j.at("terms") : j;
  if (!terms.is_array()) throw InputError("polynomial must be a list of terms");
  Poly f(nvars);
  for (const json& t : terms) {
    if (!t.contains("exps") || !t.contains("coeff")) throw InputError("term needs exps and coeff");
    auto e = t.at("exps").get<std::vector<int>>();
    if (e.size() != nvars) throw InputError("term has the wrong number of exponents");
    f += Poly::monomial(e, rational_from(t.at("coeff")));
  }
  return f;
}

QExpansion qexp_from(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("coeffs")) throw InputError("q-expansion needs p and coeffs");
  const json& c = j.at("coeffs");
  if (!c.is_array() || c.empty()) throw InputError("q-expansion coefficients must be a nonempty list");
  QExpansion F(j.at("p").get<long>(), static_cast<long>(c.size()) - 1);
  if (j.contains("N") && j.at("N").get<long>() != F.N) throw InputError("N does not match the coefficient count");
  for (size_t i = 0; i < c.size(); ++i) F.a[i] = cyclotomic_from(c[i]);
  if (j.contains("weight")) {
    const json& w = j.at("weight");
    if (w.is_string()) {
      F.weight = w.get<std::string>();
    } else {
      F.weight = w.value("label", "");
      F.zero_component = w.value("zero_component", false);
    }
  }
  return F;
}

namespace {

LocAnFunction locan_shorthand(const std::string& s, long p) {
  if (s == "one" || s == "1") return LocAnFunction::one();
  if (s == "identity" || s == "x") return LocAnFunction::identity();
  if (s == "indicator" || s == "units") return LocAnFunction::unit_indicator();
  auto colon = s.find(':');
  std::string head = s.substr(0, colon), tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  try {
    if (head == "power") return LocAnFunction::power(std::stol(tail));
    if (head == "unit-power") return LocAnFunction::power(std::stol(tail), true);
    if (head == "binom") return LocAnFunction::binomial(std::stol(tail));
    if (head == "char") return LocAnFunction::character(DirichletChar::parse(p, tail));
    if (head == "exp") return LocAnFunction::exponential(parse_rational(tail), 0);
  } catch (const std::logic_error&) {
    throw InputError("bad locally analytic function: " + s);
  }
  throw InputError("unknown locally analytic function: " + s);
}

}  // namespace

LocAnFunction locan_from(const json& j, long p) {
  if (j.is_string()) return locan_shorthand(j.get<std::string>(), p);
  if (j.is_array()) {
    LocAnFunction f = LocAnFunction::one();
    for (const json& x : j) f = f * locan_from(x, p);
    return f;
  }
  if (!j.is_object() || !j.contains("terms")) throw InputError("locally analytic function needs terms");
  std::vector<LocAnTerm> terms;
  for (const json& t : j.at("terms")) {
    LocAnTerm x;
    if (t.contains("coeff")) x.coeff = cyclotomic_from(t.at("coeff"));
    x.units_only = t.value("units_only", false);
    if (t.contains("chi")) x.chi = DirichletChar::parse(p, t.at("chi").get<std::string>());
    x.power = t.value("power", 0L);
    if (t.contains("base")) x.base = rational_from(t.at("base"));
    x.binom = t.value("binom", 0L);
    if (x.power < 0 && !x.units_only) throw InputError("negative powers need units_only");
    terms.push_back(x);
  }
  return LocAnFunction(std::move(terms), j.value("radius", 0L));
}

LocAlgChar localg_from(const json& j, long p) {
  if (j.is_number_integer()) return LocAlgChar::algebraic(p, j.get<long>());
  if (!j.is_string()) throw InputError("character must be an integer or a string like x^3*chi[1:1]");
  std::string s = j.get<std::string>();
  std::string pw = s, chi = "trivial";
  auto star = s.find('*');
  if (star != std::string::npos) {
    pw = s.substr(0, star);
    std::string rest = s.substr(star + 1);
    if (rest.rfind("chi[", 0) != 0 || rest.back() != ']') throw InputError("bad character: " + s);
    chi = rest.substr(4, rest.size() - 5);
  }
  if (pw.rfind("x^", 0) == 0) pw = pw.substr(2);
  try {
    size_t used = 0;
    long k = std::stol(pw, &used);
    if (used != pw.size()) throw InputError("bad character: " + s);
    return LocAlgChar(k, DirichletChar::parse(p, chi));
  } catch (const std::logic_error&) {
    throw InputError("bad character: " + s);
  }
}

// ---------------------------------------------------------------- payload accessors

bool has(const json& j, const char* key) { return j.is_object() && j.contains(key) && !j.at(key).is_null(); }

namespace {

const json& need(const json& j, const char* key) {
  if (!has(j, key)) throw InputError(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

long get_long(const json& j, const char* key) {
  const json& v = need(j, key);
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    Rational q = parse_rational(v.get<std::string>());
    if (!is_integer(q)) throw InputError(std::string("field ") + key + " must be an integer");
    return to_long_checked(q);
  }
  throw InputError(std::string("field ") + key + " must be an integer");
}

long get_long(const json& j, const char* key, long dflt) { return has(j, key) ? get_long(j, key) : dflt; }

Rational get_rational(const json& j, const char* key) {
  try {
    return rational_from(need(j, key));
  } catch (const InputError& e) {
    throw InputError(std::string("field ") + key + ": " + e.what());
  }
}

Rational get_rational(const json& j, const char* key, const Rational& dflt) {
  return has(j, key) ? get_rational(j, key) : dflt;
}

double get_double(const json& j, const char* key) {
  const json& v = need(j, key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
    try {
      size_t used = 0;
      double d = std::stod(s, &used);
      if (used == s.size()) return d;
    } catch (const std::logic_error&) {
    }
  }
  throw InputError(std::string("field ") + key + " must be a number");
}

std::string get_string(const json& j, const char* key) {
  const json& v = need(j, key);
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string get_string(const json& j, const char* key, const std::string& dflt) { return has(j, key) ? get_string(j, key) : dflt; }

bool get_bool(const json& j, const char* key, bool dflt) {
  if (!has(j, key)) return dflt;
  const json& v = j.at(key);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
  }
  throw InputError(std::string("field ") + key + " must be a boolean");
}

std::vector<json> get_list(const json& j, const char* key) {
  const json& v = need(j, key);
  std::vector<json> out;
  if (v.is_array()) {
    for (const json& x : v) out.push_back(x);
    return out;
  }
  if (v.is_string()) {
    std::stringstream ss(v.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
    return out;
  }
  throw InputError(std::string("field ") + key + " must be a list");
}

std::vector<Rational> get_rationals(const json& j, const char* key) {
  std::vector<Rational> out;
  for (const json& x : get_list(j, key)) out.push_back(rational_from(x));
  return out;
}

std::vector<Cyclotomic> get_cyclotomics(const json& j, const char* key) {
  std::vector<Cyclotomic> out;
  for (const json& x : get_list(j, key)) out.push_back(cyclotomic_from(x));
  return out;
}

}  // namespace gsp::io
