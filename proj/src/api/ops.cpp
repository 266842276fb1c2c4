#include "api/ops.hpp"

#include "gsp/dist.hpp"
#include "gsp/lfactors.hpp"
#include "gsp/qexp.hpp"
#include "gsp/repmodel.hpp"
#include "gsp/weights.hpp"
#include "gsp/zeta.hpp"

namespace gsp::ops {

using namespace gsp::io;

namespace {

// Payload conventions: "p" is the prime, "N" the truncation, "seed" the RNG seed.
// The CLI always fills these three from flags, environment or defaults.
long prime(const json& j) {
  long p = get_long(j, "p", 3);
  require_odd_prime(p);
  return p;
}

DirichletChar chi_from(const json& j, const char* key, long p) {
  return DirichletChar::parse(p, get_string(j, key, "trivial"));
}

Weight weight_from(const json& j, const char* key) {
  const json& v = j.contains(key) ? j.at(key) : json();
  if (v.is_array()) {
    if (v.size() != 3) throw InputError("weight needs three entries");
    return Weight(rational_from(v[0]), rational_from(v[1]), rational_from(v[2]));
  }
  return Weight::parse(get_string(j, key));
}

json cplx(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json cyc_list(const std::vector<Cyclotomic>& v) {
  json out = json::array();
  for (const Cyclotomic& x : v) out.push_back(to_json(x));
  return out;
}

// "satake": "t1,t2,t3,t4;m1,m2" or separate "theta" and "mu" lists.
std::pair<SatakeGSp4, SatakeGL2> satake_from(const json& j, const char* mu_key = "mu") {
  std::vector<Cyclotomic> th, mu;
  if (has(j, "satake") && j.at("satake").is_string()) {
    std::string s = j.at("satake").get<std::string>();
    auto semi = s.find(';');
    if (semi == std::string::npos) throw InputError("satake must look like t1,t2,t3,t4;m1,m2");
    json tmp{{"theta", s.substr(0, semi)}, {"mu", s.substr(semi + 1)}};
    th = get_cyclotomics(tmp, "theta");
    mu = get_cyclotomics(tmp, "mu");
  } else {
    th = get_cyclotomics(j, "theta");
    mu = get_cyclotomics(j, mu_key);
  }
  if (th.size() != 4) throw InputError("theta needs 4 Satake parameters");
  if (mu.size() != 2) throw InputError("mu needs 2 Satake parameters");
  SatakeGSp4 a{{th[0], th[1], th[2], th[3]}};
  SatakeGL2 b{{mu[0], mu[1]}};
  a.validate();
  b.validate();
  return {a, b};
}

template <size_t K>
std::array<Rational, K> rationals_n(const json& j, const char* key) {
  std::vector<Rational> v = get_rationals(j, key);
  if (v.size() != K) throw InputError(std::string("field ") + key + " needs " + std::to_string(K) + " entries");
  std::array<Rational, K> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

EulerData euler_from(const json& j) {
  EulerData d;
  if (!has(j, "euler")) return d;
  for (const auto& [key, val] : j.at("euler").items()) d.primes.emplace(std::stol(key), satake_from(val));
  return d;
}

TripleEulerData triple_euler_from(const json& j) {
  TripleEulerData d;
  if (!has(j, "euler")) return d;
  for (const auto& [key, val] : j.at("euler").items()) {
    auto [th, m1] = satake_from(val, "mu1");
    auto m2 = get_cyclotomics(val, "mu2");
    if (m2.size() != 2) throw InputError("mu2 needs 2 Satake parameters");
    d.primes.emplace(std::stol(key), std::make_tuple(th, m1, SatakeGL2{{m2[0], m2[1]}}));
  }
  return d;
}

json report_json(long checked, long failed, const std::vector<std::string>& failures) {
  return json{{"checked", checked}, {"failed", failed}, {"failures", failures}};
}

BranchParams branch_params(const json& j) {
  long t1 = get_long(j, "t1"), t2 = get_long(j, "t2"), r2 = get_long(j, "r2");
  BranchParams bp{t1, t2, get_long(j, "r1", t1 + t2 + r2), r2};
  validate_branch(bp);
  return bp;
}

const std::vector<std::string>& zab_names() {
  static const std::vector<std::string> n{"z", "a", "b"};
  return n;
}

// ---------------------------------------------------------------- exactnum

json op_gauss(const json& j) {
  long p = prime(j);
  DirichletChar chi = chi_from(j, "chi", p);
  if (!chi.is_primitive()) throw DomainError("character is not primitive");
  Cyclotomic g = gauss_sum(chi);
  Cyclotomic norm = g * gauss_sum(chi.inverse());
  Cyclotomic expect(Rational(chi.parity()) * rpow(Rational(p), chi.c()));
  return json{{"chi", chi.label()}, {"value", to_json(g)}, {"norm", to_json(norm)}, {"norm_ok", norm == expect}};
}

json op_addsum(const json& j) {
  long p = prime(j), h = get_long(j, "h");
  if (h < 1) throw InputError("h must be >= 1");
  return json{{"value", to_json(additive_char_sum(p, h))}};
}

json op_vp(const json& j) {
  long p = get_long(j, "p", 3);
  if (!is_prime(p)) throw DomainError("p must be prime");
  return json{{"valuation", vp(get_rational(j, "x"), p).str()}};
}

// ---------------------------------------------------------------- weights

json op_act(const json& j) {
  return json{{"weight", weyl_act(WeylElt::parse(get_string(j, "elt")), weight_from(j, "weight")).str()}};
}

json op_star(const json& j) {
  return json{{"weight", star_act(WeylElt::parse(get_string(j, "elt")), weight_from(j, "weight")).str()}};
}

json op_situation(const json& j) {
  SituationWeights s = situation_weights(get_long(j, "r1"), get_long(j, "r2"), get_long(j, "t1"), get_long(j, "t2"),
                                         get_long(j, "xi1", 0));
  return json{{"nu_G", s.nu_G.str()},       {"nu_H", s.nu_H.str()},     {"kappa_G", s.kappa_G.str()},
              {"kappa_H", s.kappa_H.str()}, {"kappa_G_star", s.kappa_G_star.str()},
              {"zeta_H1", s.zeta_H1.str()}, {"zeta_H2", s.zeta_H2.str()}, {"xi2", s.xi2}};
}

json op_slope(const json& j) {
  SlopeKind k = parse_slope_kind(get_string(j, "kind"));
  Valuation vkl = has(j, "v_kl") ? valuation_from(j.at("v_kl")) : Valuation::infinity();
  Valuation vsi = has(j, "v_si") ? valuation_from(j.at("v_si")) : Valuation::infinity();
  return json{{"small_slope", slope_check(k, vkl, vsi, get_rational(j, "r1"), get_rational(j, "r2"))}};
}

json op_ss(const json& j) {
  SsKind k = parse_ss_kind(get_string(j, "kind", "ss^M_w1"));
  LambdaTable lam{get_rational(j, "v_siegel"), get_rational(j, "v_klingen"), get_rational(j, "v_center", 0)};
  Weight ks = has(j, "kappa_star") ? weight_from(j, "kappa_star") : kappa_G_star(get_long(j, "r1"), get_long(j, "r2"));
  SsReport r = ss_condition(k, lam, ks, static_cast<int>(get_long(j, "degree_bound", 2)));
  json clauses = json::array();
  for (const SsClause& c : r.clauses) {
    clauses.push_back(json{{"element", c.element}, {"target", c.target.str()}, {"found", c.found}, {"witness", c.witness}});
  }
  return json{{"holds", r.holds}, {"bound_hit_without_witness", r.bound_hit_without_witness},
              {"degree_bound", r.degree_bound}, {"clauses", clauses}};
}

json op_sigma_set(const json& j) {
  NearlyWeightSet s = nearly_weight_set(get_long(j, "r1"), get_long(j, "r2"));
  json entries = json::array(), distinct = json::array();
  for (const auto& e : s.entries) {
    entries.push_back(json{{"weight", e.weight.str()}, {"t1", e.t1}, {"t2", e.t2}, {"i", e.i}, {"j", e.j},
                           {"delta1", e.delta1}, {"delta2", e.delta2}});
  }
  for (const Weight& w : s.distinct) distinct.push_back(w.str());
  return json{{"sigma", s.sigma}, {"entries", entries}, {"count", s.entries.size()}, {"distinct", distinct}};
}

// ---------------------------------------------------------------- rep

json vector_json(const PolyVector& f) {
  return json{{"model", model_name(f.model)}, {"weight", f.weight.str()}, {"poly", to_json(f.f, mat_var_names())}};
}

json op_hw(const json& j) {
  Model m = parse_model(get_string(j, "model", "G"));
  PolyVector f = hw_vector(m, weight_from(j, "weight"));
  LawReport r = check_hw_properties(f, static_cast<uint64_t>(get_long(j, "seed", 7)), static_cast<int>(get_long(j, "samples", 5)));
  json out = vector_json(f);
  out["checks"] = report_json(r.checked, r.failed, r.failures);
  return out;
}

json op_dim(const json& j) {
  Model m = parse_model(get_string(j, "model", "G"));
  return json{{"dim", to_string(dim(m, weight_from(j, "weight")))}};
}

json op_branch(const json& j) {
  BranchParams bp = branch_params(j);
  PolyVector f = branch_closed_form(bp);
  json out = vector_json(f);
  if (has(j, "z") || has(j, "a") || has(j, "b")) {
    Rational z = get_rational(j, "z", 0), a = get_rational(j, "a", 0), b = get_rational(j, "b", 0);
    Rational lhs = branch_eval_at_unipotent(f, z, a, b), rhs = branch_unipotent_formula(bp, z, a, b);
    out["closed_form_value"] = to_string(lhs);
    out["formula_value"] = to_string(rhs);
    out["equal"] = lhs == rhs;
  }
  return out;
}

json op_factor(const json& j) {
  long p = prime(j);
  if (!has(j, "matrix")) throw InputError("missing field: matrix");
  IwahoriResult r = iwahori_factor(mat_from(j.at("matrix")), p, get_long(j, "beta", 1), get_long(j, "n", 0));
  return json{{"z", to_string(r.z)}, {"a", to_string(r.a)},     {"b", to_string(r.b)},  {"x", to_json(r.x)},
              {"z_ok", r.z_ok},      {"a_ok", r.a_ok},          {"b_ok", r.b_ok}};
}

TorusMonoidElt torus_from(const json& j, long p) {
  if (has(j, "t") && j.at("t").is_string()) {
    std::string s = j.at("t").get<std::string>();
    if (s == "siegel" || s == "t_S") return t_siegel(p);
    if (s == "klingen" || s == "t_Kl") return t_klingen(p);
    if (s == "center" || s == "z") return t_center(p);
    throw InputError("unknown torus element: " + s);
  }
  return TorusMonoidElt(get_rational(j, "t1"), get_rational(j, "t2"), get_rational(j, "nu"));
}

json op_monoid(const json& j) {
  long p = prime(j);
  if (!has(j, "f")) throw InputError("missing field: f");
  MonoidActResult r = monoid_act(torus_from(j, p), poly_from(j.at("f"), 3), p);
  return json{{"f", to_json(r.f, zab_names())},
              {"convention", r.convention},
              {"factors", json::array({to_string(r.factors[0]), to_string(r.factors[1]), to_string(r.factors[2])})}};
}

json op_nan_eval(const json& j) {
  long p = prime(j);
  if (!has(j, "g")) throw InputError("missing field: g");
  Poly g = poly_from(j.at("g"), 2);
  LocAlgChar lam = localg_from(j.at("lambda"), p);
  Cyclotomic v = branch_nan_eval(g, lam, get_rational(j, "z"), get_rational(j, "a"), get_rational(j, "b"), p);
  return json{{"value", to_json(v)}};
}

json op_compat(const json& j) {
  long p = prime(j);
  BranchParams bp = branch_params(j);
  Rational z = get_rational(j, "z"), a = get_rational(j, "a"), b = get_rational(j, "b");
  Cyclotomic cw = compat_clockwise(bp, z, a, b, p);
  Rational acw = compat_anticlockwise(bp, z, a, b);
  return json{{"clockwise", to_json(cw)}, {"anticlockwise", to_string(acw)}, {"equal", cw == Cyclotomic(acw)}};
}

json op_rep_verify(const json& j) {
  uint64_t seed = static_cast<uint64_t>(get_long(j, "seed", 7));
  IdentityReport m = verify_matrix_identities(seed, static_cast<int>(get_long(j, "samples", 100)));
  IdentityReport b = verify_branch_identities(seed, static_cast<int>(get_long(j, "degree", 6)), static_cast<int>(get_long(j, "samples", 100)));
  return json{{"matrix", report_json(m.checked, m.failed, m.failures)}, {"branch", report_json(b.checked, b.failed, b.failures)},
              {"checked", m.checked + b.checked}, {"failed", m.failed + b.failed}};
}

// ---------------------------------------------------------------- qexp

QExpansion qexp_arg(const json& j) {
  if (!has(j, "F")) throw InputError("missing field: F");
  return qexp_from(j.at("F"));
}

EisensteinSpec eis_spec(const json& j) {
  long p = prime(j);
  EisensteinSpec s;
  s.p = p;
  s.kappa1 = localg_from(has(j, "kappa1") ? j.at("kappa1") : json(0), p);
  s.kappa2 = localg_from(has(j, "kappa2") ? j.at("kappa2") : json(0), p);
  s.xi = has(j, "xi") ? localg_from(j.at("xi"), p) : LocAlgChar::algebraic(p, 0);
  s.tame = TameChar::parse(get_string(j, "tame", "trivial"));
  s.tame_tag = get_string(j, "tame_tag", "unramified");
  s.unit = get_rational(j, "unit", 1);
  return s;
}

json op_eis(const json& j) {
  EisensteinSpec s = eis_spec(j);
  json out = to_json(eis_xi(s, get_long(j, "N", 10)));
  out["parity_ok"] = s.parity_ok();
  return out;
}

json op_qstar(const json& j) {
  long p = prime(j);
  if (!has(j, "f")) throw InputError("missing field: f");
  return to_json(star_action(locan_from(j.at("f"), p), qexp_arg(j)));
}

json op_deplete(const json& j) { return to_json(deplete(qexp_arg(j))); }
json op_theta(const json& j) { return to_json(theta(qexp_arg(j))); }

json op_nabla(const json& j) {
  QExpansion F = qexp_arg(j);
  if (!has(j, "rho")) throw InputError("missing field: rho");
  return to_json(half_power_nabla(F, locan_from(j.at("rho"), F.p), get_long(j, "exponent")));
}

// ---------------------------------------------------------------- lfac

json op_euler(const json& j) {
  auto [th, ga] = satake_from(j, has(j, "gamma") ? "gamma" : "mu");
  long l = get_long(j, "l");
  if (!is_prime(l)) throw DomainError("l must be prime");
  Cyclotomic chi_l = has(j, "chi_l") ? cyclotomic_from(j.at("chi_l")) : Cyclotomic(Rational(1));
  EulerPoly e = spin_std_euler(th, ga, chi_l, l);
  return json{{"degree", e.degree()}, {"coeffs", cyc_list(e.coeffs)}};
}

json op_linf(const json& j) {
  long r1 = get_long(j, "r1"), r2 = get_long(j, "r2"), t2 = get_long(j, "t2");
  double s = get_double(j, "s");
  return json{{"value", linf(r1, r2, t2, s)}, {"arguments", linf_arguments(r1, r2, t2, s)}};
}

json op_crit(const json& j) {
  CritRange c = crit_range(get_long(j, "r1"), get_long(j, "r2"), get_long(j, "t2"));
  return json{{"lo", c.lo}, {"hi", c.hi}, {"shifted_lo", c.shifted_lo}, {"shifted_hi", c.shifted_hi}, {"empty", c.empty()}};
}

json op_fe_dual(const json& j) {
  long p = prime(j);
  FeDual d = fe_dual(chi_from(j, "chi", p), get_rational(j, "s"), chi_from(j, "chi0", p), chi_from(j, "chi2", p));
  return json{{"chi", d.chi.label()}, {"s", to_string(d.s)}};
}

json op_ep_a(const json& j) {
  long p = prime(j);
  auto [th, mu] = satake_from(j);
  DirichletChar chi = chi_from(j, "chi", p);
  EpResult r = ep_modifier_A(th, mu, chi, get_long(j, "j"), p);
  json out{{"branch", r.branch}, {"conductor_exponent", r.conductor_exponent}, {"value", to_json(r.value)}};
  if (r.branch == "gauss") out["gauss_factor"] = to_json(gauss_sum(chi.inverse()).pow(-4));
  return out;
}

json op_ep_b(const json& j) {
  long p = prime(j);
  QuadSurd v = ep_modifier_B(rationals_n<4>(j, "theta"), rationals_n<2>(j, "mu1"), rationals_n<2>(j, "mu2"), p);
  json out = to_json(v);
  out["valuation"] = v.valuation().str();
  out["approx"] = v.to_double();
  return out;
}

json op_region(const json& j) {
  std::string c = get_string(j, "case", "A");
  if (c != "A" && c != "B") throw InputError("case must be A or B");
  RegionCase rc = c == "A" ? RegionCase::A : RegionCase::B;
  long x = get_long(j, rc == RegionCase::A ? "t2" : "d1"), y = get_long(j, rc == RegionCase::A ? "j" : "d2");
  return json{{"in_region", region_f(rc, get_long(j, "r1"), get_long(j, "r2"), x, y)}};
}

json op_normalize(const json& j) {
  HeckeEigenData d{get_rational(j, "u_si"), get_rational(j, "u_kl"), get_rational(j, "u_b"), get_long(j, "r1"),
                   get_long(j, "r2"), get_bool(j, "normalized", false)};
  HeckeEigenData r = hecke_normalize(d, prime(j));
  return json{{"u_si", to_string(r.u_si)}, {"u_kl", to_string(r.u_kl)}, {"u_b", to_string(r.u_b)}, {"normalized", r.normalized}};
}

json op_ss_eigen(const json& j) {
  SsEigensystem e = ss_eigensystem(get_rational(j, "siegel"), get_rational(j, "klingen"), get_rational(j, "center"), prime(j));
  json chars = json::array();
  for (const auto& [w, v] : e.characters) {
    chars.push_back(json{{"w", w.label()}, {"t_siegel", to_json(v.t_siegel)}, {"t_klingen", to_json(v.t_klingen)}, {"center", to_json(v.center)}});
  }
  return json{{"characters", chars}, {"p_regular", e.p_regular}};
}

json op_beta(const json& j) { return json{{"beta", beta_bound(get_long(j, "c"))}}; }

json record_json(const InterpRecord& r) {
  json out{{"theorem", r.theorem},
           {"ep", to_json(r.ep)},
           {"z_s", to_json(r.z_s)},
           {"lambda_truncation", cplx(r.lambda_truncation)},
           {"omega", r.omega},
           {"exact_product", r.exact_product},
           {"assembled_numeric", cplx(r.assembled_numeric)},
           {"provenance", r.provenance}};
  if (r.ep_surd) out["ep_surd"] = to_json(*r.ep_surd);
  return out;
}

json op_interp_a(const json& j) {
  InterpInputA in;
  in.p = prime(j);
  std::tie(in.theta, in.mu) = satake_from(j);
  in.chi = chi_from(j, "chi", in.p);
  in.r1 = get_long(j, "r1");
  in.r2 = get_long(j, "r2");
  in.t2 = get_long(j, "t2");
  in.j = get_long(j, "j");
  if (has(j, "z_s")) in.z_s = cyclotomic_from(j.at("z_s"));
  in.euler = euler_from(j);
  in.bound = get_long(j, "bound", 50);
  in.omega = get_string(j, "omega", "Omega_x");
  return record_json(interp_rhs_A(in));
}

json op_interp_b(const json& j) {
  InterpInputB in;
  in.p = prime(j);
  in.theta = rationals_n<4>(j, "theta");
  in.mu1 = rationals_n<2>(j, "mu1");
  in.mu2 = rationals_n<2>(j, "mu2");
  in.r1 = get_long(j, "r1");
  in.r2 = get_long(j, "r2");
  in.d1 = get_long(j, "d1");
  in.d2 = get_long(j, "d2");
  in.z_s = get_rational(j, "z_s", 1);
  in.euler = triple_euler_from(j);
  in.bound = get_long(j, "bound", 50);
  in.omega = get_string(j, "omega", "Omega_x");
  return record_json(interp_rhs_B(in));
}

json op_partial_l(const json& j) {
  long p = prime(j);
  EulerData d = euler_from(j);
  std::complex<double> v = partial_L(d, get_long(j, "bound", 50), chi_from(j, "chi", p), get_double(j, "s"), get_long(j, "skip", p));
  return json{{"value", cplx(v)}};
}

// ---------------------------------------------------------------- zeta

json op_iwahori(const json& j) {
  IwahoriZetaInput in;
  in.p = prime(j);
  auto al = get_cyclotomics(j, "alpha");
  auto mu = get_cyclotomics(j, "mu");
  if (al.size() != 2 || mu.size() != 2) throw InputError("alpha and mu need 2 entries each");
  in.alpha = {al[0], al[1]};
  in.mu = {mu[0], mu[1]};
  in.chi = chi_from(j, "chi", in.p);
  in.beta = get_long(j, "beta", 2);
  IwahoriZetaResult r = zeta_iwahori(in);
  json out{{"prefactor_exponent", r.prefactor_exponent}, {"r", r.r}, {"up_to_unit", r.up_to_unit}};
  if (r.r == 0) {
    out["numerator"] = cyc_list(r.numerator);
    out["denominator"] = cyc_list(r.denominator);
  } else {
    out["gauss_inv4"] = to_json(r.gauss_inv4);
    out["product"] = to_json(r.product);
  }
  if (has(j, "s")) out["body"] = to_json(r.body_at(get_long(j, "s"), in.p));
  return out;
}

json op_minbeta(const json& j) { return json{{"beta", min_beta(get_long(j, "r"))}}; }

json op_vanish(const json& j) {
  WhittakerVanishResult r = whittaker_vanish(prime(j), get_long(j, "beta"));
  json out{{"value", to_json(r.value)}, {"terms", cyc_list(r.terms)}, {"warning", r.warning}};
  if (r.warning) out["message"] = r.message;
  return out;
}

json op_cross_check(const json& j) {
  CrossCheckReport r = cross_check_ep(static_cast<uint64_t>(get_long(j, "seed", 7)), static_cast<int>(get_long(j, "samples", 20)), prime(j));
  json out = report_json(r.checked, r.failed, r.failures);
  out["symbolic_ok"] = r.symbolic_ok;
  return out;
}

// ---------------------------------------------------------------- dist

json op_order(const json& j) {
  GrowthProfile g{prime(j), get_rationals(j, "log_norms")};
  GrowthEstimate e = growth_order_estimate(g, get_rational(j, "log_c", 0));
  return json{{"order", to_string(e.order)}, {"log_c", to_string(e.log_c)}, {"attained_at", e.attained_at}};
}

json op_eps(const json& j) {
  EpsilonConstants c = epsilon_constants(prime(j), get_rational(j, "eps"));
  return json{{"upsilon", c.upsilon},     {"floor_upsilon", c.floor_upsilon}, {"c_half", c.c_half},
              {"m1_prime", c.m1_prime},   {"m2_prime", c.m2_prime},           {"m1", c.m1},
              {"m2", c.m2},               {"n_eps", c.n_eps},                 {"m1_lower", c.m1_lower},
              {"m2_lower", c.m2_lower},   {"inequalities_hold", epsilon_inequalities_hold(c)}};
}

json op_bound(const json& j) {
  BinomBoundReport r = binom_norm_bound_check(prime(j), get_rational(j, "eps"), get_long(j, "K", 10000));
  return json{{"holds", r.holds},           {"discrete_max", r.discrete_max}, {"argmax", r.argmax},
              {"analytic_k", r.analytic_k}, {"analytic_sup", r.analytic_sup}, {"c_half", r.c_half}};
}

json op_audit(const json& j) {
  QExpansion F = qexp_arg(j);
  if (!has(j, "f")) throw InputError("missing field: f");
  IntegrityAudit a = star_integrality_audit(F, locan_from(j.at("f"), F.p), get_long(j, "n", 0));
  return json{{"n", a.n}, {"eps", to_string(a.eps)}, {"bound", a.bound}, {"min_valuation", a.min_valuation.str()},
              {"worst_index", a.worst_index}, {"holds", a.holds}};
}

json op_unique(const json& j) {
  UniquenessVerdict v = uniqueness_criterion(get_rational(j, "h"), get_long(j, "r1"), get_long(j, "r2"), get_long(j, "t2"));
  return json{{"proven", v.proven}, {"conjectural", v.conjectural}, {"intro_form", v.intro_form}};
}

json op_mahler(const json& j) {
  long p = get_long(j, "p", 3);
  MahlerOrder m = mahler_order(get_rationals(j, "c"), p, has(j, "log_c") ? get_double(j, "log_c") : 0.0);
  json out{{"order", m.order}, {"attained_at", m.attained_at}};
  if (m.exact) out["exact"] = to_string(*m.exact);
  return out;
}

// ---------------------------------------------------------------- verification suites

json op_identities(const json& j) {
  uint64_t seed = static_cast<uint64_t>(get_long(j, "seed", 7));
  json rep = op_rep_verify(j);
  CrossCheckReport c = cross_check_ep(seed, 20, 3);
  long checked = rep["checked"].get<long>() + c.checked, failed = rep["failed"].get<long>() + c.failed;
  return json{{"checked", checked}, {"failed", failed},
              {"suites", json{{"matrix", rep["matrix"]}, {"branch", rep["branch"]},
                              {"zeta_vs_ep", report_json(c.checked, c.failed, c.failures)}}}};
}

}  // namespace

const std::map<std::string, OpInfo>& registry() {
  static const std::map<std::string, OpInfo> ops{
      {"exactnum.gauss", {op_gauss, "Gauss sum of a primitive character {p, chi}"}},
      {"exactnum.addsum", {op_addsum, "sum of zeta_{p^h}^j over units {p, h}"}},
      {"exactnum.vp", {op_vp, "p-adic valuation {p, x}"}},
      {"weights.act", {op_act, "Weyl action {elt, weight}"}},
      {"weights.star", {op_star, "shifted Weyl action {elt, weight}"}},
      {"weights.situation", {op_situation, "weights attached to {r1, r2, t1, t2, xi1}"}},
      {"weights.slope", {op_slope, "small-slope test {kind, v_kl, v_si, r1, r2}"}},
      {"weights.ss", {op_ss, "ss condition {kind, v_siegel, v_klingen, v_center, r1, r2}"}},
      {"weights.sigma-set", {op_sigma_set, "nearly-weight set {r1, r2}"}},
      {"rep.hw", {op_hw, "highest weight vector {model, weight}"}},
      {"rep.dim", {op_dim, "dimension {model, weight}"}},
      {"rep.branch-eval", {op_branch, "branching polynomial {t1, t2, r2[, z, a, b]}"}},
      {"rep.factor", {op_factor, "Iwahori factorization {matrix, p, beta, n}"}},
      {"rep.monoid", {op_monoid, "monoid action {t, f, p}"}},
      {"rep.nan-eval", {op_nan_eval, "lambda(1+z) G(b-a, a/(1+z)) {g, lambda, z, a, b}"}},
      {"rep.compat", {op_compat, "both sides of the branching compatibility {t1, t2, r2, z, a, b}"}},
      {"rep.verify", {op_rep_verify, "matrix and branching identity suites {seed, degree, samples}"}},
      {"qexp.eis", {op_eis, "Eisenstein family {p, N, kappa1, kappa2, xi, tame, unit}"}},
      {"qexp.star", {op_qstar, "star action {f, F}"}},
      {"qexp.deplete", {op_deplete, "p-depletion {F}"}},
      {"qexp.theta", {op_theta, "theta operator {F}"}},
      {"qexp.nabla", {op_nabla, "half-power operator {F, rho, exponent}"}},
      {"lfac.euler", {op_euler, "spin x standard Euler polynomial {theta, gamma, chi_l, l}"}},
      {"lfac.linf", {op_linf, "archimedean factor {r1, r2, t2, s}"}},
      {"lfac.crit", {op_crit, "critical range {r1, r2, t2}"}},
      {"lfac.fe-dual", {op_fe_dual, "functional-equation dual {chi, s, chi0, chi2}"}},
      {"lfac.ep-a", {op_ep_a, "modified factor at p {satake, chi, j}"}},
      {"lfac.ep-b", {op_ep_b, "triple-product modified factor {theta, mu1, mu2}"}},
      {"lfac.region", {op_region, "region test {case, r1, r2, t2|d1, j|d2}"}},
      {"lfac.normalize", {op_normalize, "normalise U_p eigenvalues {u_si, u_kl, u_b, r1, r2}"}},
      {"lfac.ss-eigen", {op_ss_eigen, "semisimplified eigensystem {siegel, klingen, center}"}},
      {"lfac.beta", {op_beta, "Iwahori depth bound {c}"}},
      {"lfac.interp-a", {op_interp_a, "interpolation record, GSp4 x GL2 {satake, chi, r1, r2, t2, j, euler}"}},
      {"lfac.interp-b", {op_interp_b, "interpolation record, triple case {theta, mu1, mu2, r1, r2, d1, d2, euler}"}},
      {"lfac.partial-l", {op_partial_l, "truncated Euler product {euler, bound, chi, s}"}},
      {"zeta.iwahori", {op_iwahori, "Iwahori zeta integral {alpha, mu, chi, beta[, s]}"}},
      {"zeta.minbeta", {op_minbeta, "least admissible depth {r}"}},
      {"zeta.vanish", {op_vanish, "Whittaker vanishing sum {p, beta}"}},
      {"zeta.cross-check", {op_cross_check, "zeta body against the modified factor {seed, samples}"}},
      {"dist.order", {op_order, "growth order of a profile {p, log_norms, log_c}"}},
      {"dist.eps", {op_eps, "epsilon-analytic constants {p, eps}"}},
      {"dist.bound", {op_bound, "binomial norm bound sweep {p, eps, K}"}},
      {"dist.audit", {op_audit, "star-action integrality audit {F, f, n}"}},
      {"dist.unique", {op_unique, "uniqueness criterion {h, r1, r2, t2}"}},
      {"dist.mahler", {op_mahler, "Mahler-coefficient growth {p, c}"}},
      {"verify.identities", {op_identities, "every identity suite {seed}"}},
  };
  return ops;
}

json dispatch(const std::string& op, const json& payload) {
  const auto& ops = registry();
  auto it = ops.find(op);
  if (it == ops.end()) throw InputError("unknown operation: " + op);
  if (!payload.is_object()) throw InputError("payload must be a JSON object");
  return it->second.run(payload);
}

}  // namespace gsp::ops
