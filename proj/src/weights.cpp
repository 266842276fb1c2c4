#include "gsp/weights.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace gsp {

namespace {

void require_half(const Rational& x) {
  if (!is_half_integer(x)) throw DomainError("weight entries must lie in (1/2)Z, got " + to_string(x));
}

}  // namespace

Weight::Weight(Rational a, Rational b, Rational cc) : r1(std::move(a)), r2(std::move(b)), c(std::move(cc)) {
  require_half(r1);
  require_half(r2);
  require_half(c);
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.r1 != b.r1) return a.r1 < b.r1;
  if (a.r2 != b.r2) return a.r2 < b.r2;
  return a.c < b.c;
}

std::string compact(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return to_string(q);
}

std::string Weight::str() const { return "(" + compact(r1) + "," + compact(r2) + ";" + compact(c) + ")"; }

Weight Weight::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    s.push_back(ch == ';' ? ',' : ch);
  }
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(',', start);
    parts.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3) throw InputError("weight needs three entries: " + std::string(text));
  Rational a = parse_rational(parts[0]), b = parse_rational(parts[1]), c = parse_rational(parts[2]);
  if (!is_half_integer(a) || !is_half_integer(b) || !is_half_integer(c)) {
    throw InputError("weight entries must lie in (1/2)Z: " + std::string(text));
  }
  return Weight(a, b, c);
}

// ---------------------------------------------------------------- Weyl group

namespace {

struct WeylTables {
  std::array<Mat4, 8> mats;
  std::array<std::array<int, 8>, 8> mul;
  std::array<int, 8> inv;
};

std::array<std::array<int, 4>, 4> pattern(const Mat4& m) {
  std::array<std::array<int, 4>, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = sgn(m[i][j]) != 0;
  }
  return out;
}

const WeylTables& tables() {
  static const WeylTables t = [] {
    WeylTables w;
    Mat4 s1 = mat_from_rows({{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}});
    Mat4 s2 = mat_from_rows({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}});
    w.mats[0] = mat_identity();
    w.mats[1] = s1;
    w.mats[2] = s2;
    w.mats[3] = mat_mul(s1, s2);
    w.mats[4] = mat_mul(s2, s1);
    w.mats[5] = mat_mul(w.mats[3], s1);
    w.mats[6] = mat_mul(w.mats[4], s2);
    w.mats[7] = mat_mul(w.mats[5], s2);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        auto pat = pattern(mat_mul(w.mats[i], w.mats[j]));
        int found = -1;
        for (int k = 0; k < 8; ++k) {
          if (pattern(w.mats[k]) == pat) found = k;
        }
        w.mul[i][j] = found;
      }
    }
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (w.mul[i][j] == 0) w.inv[i] = j;
      }
    }
    return w;
  }();
  return t;
}

const std::array<const char*, 8> kLabels = {"id", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "wmax"};
const std::array<int, 8> kLengths = {0, 1, 1, 2, 2, 3, 3, 4};

}  // namespace

WeylElt WeylElt::from_index(int i) {
  if (i < 0 || i > 7) throw DomainError("Weyl index out of range");
  WeylElt w;
  w.idx_ = i;
  return w;
}

WeylElt WeylElt::parse(std::string_view label) {
  std::string s(label);
  if (s == "id" || s == "w0" || s == "e" || s == "1") return from_index(0);
  if (s == "s1" || s == "w1") return from_index(1);
  if (s == "s2") return from_index(2);
  if (s == "s1s2" || s == "w2") return from_index(3);
  if (s == "s2s1") return from_index(4);
  if (s == "s1s2s1" || s == "w3") return from_index(5);
  if (s == "s2s1s2") return from_index(6);
  if (s == "wmax" || s == "w_max" || s == "s1s2s1s2" || s == "s2s1s2s1" || s == "w_G^max") return from_index(7);
  throw InputError("unknown Weyl element: " + s);
}

const std::array<WeylElt, 8>& WeylElt::all() {
  static const std::array<WeylElt, 8> a = [] {
    std::array<WeylElt, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = from_index(i);
    return out;
  }();
  return a;
}

std::string WeylElt::label() const { return kLabels[idx_]; }
int WeylElt::length() const { return kLengths[idx_]; }
const Mat4& WeylElt::matrix() const { return tables().mats[idx_]; }
WeylElt WeylElt::inverse() const { return from_index(tables().inv[idx_]); }
WeylElt operator*(const WeylElt& a, const WeylElt& b) { return WeylElt::from_index(tables().mul[a.idx_][b.idx_]); }

Weight weyl_act(const WeylElt& w, const Weight& k) {
  const Rational &r1 = k.r1, &r2 = k.r2, &c = k.c;
  switch (w.index()) {
    case 0: return k;
    case 1: return Weight(r1, -r2, c + r2);
    case 2: return Weight(r2, r1, c);
    case 3: return Weight(r2, -r1, c + r1);
    case 4: return Weight(-r2, r1, c + r2);
    case 5: return Weight(-r2, -r1, c + r1 + r2);
    case 6: return Weight(-r1, r2, c + r1);
    default: return Weight(-r1, -r2, c + r1 + r2);
  }
}

Weight weyl_act_matrix(const WeylElt& w, const Weight& k) {
  // z1 = 2, z2 = 3, s = 5; exponents of w^-1 t w are read off prime by prime.
  Mat4 t = mat_diag(2, 3, make_rational(5, 3), make_rational(5, 2));
  Mat4 conj = mat_mul(mat_mul(mat_inverse(w.matrix()), t), w.matrix());
  if (!mat_is_diagonal(conj)) throw DomainError("representative does not normalise the torus");
  Rational z1 = conj[0][0], z2 = conj[1][1], s = conj[0][0] * conj[3][3];
  auto e = [](const Rational& x, long p) { return vp(x, p).value(); };
  // kappa(t') = z1'^r1 z2'^r2 s'^c, expanded in the basis 2, 3, 5 of z1, z2, s.
  Rational a = k.r1 * e(z1, 2) + k.r2 * e(z2, 2) + k.c * e(s, 2);
  Rational b = k.r1 * e(z1, 3) + k.r2 * e(z2, 3) + k.c * e(s, 3);
  Rational c = k.r1 * e(z1, 5) + k.r2 * e(z2, 5) + k.c * e(s, 5);
  return Weight(a, b, c);
}

const Weight& rho_G() {
  static const Weight r(2, 1, make_rational(-3, 2));
  return r;
}

Weight star_act(const WeylElt& w, const Weight& k) { return weyl_act(w, k + rho_G()) - rho_G(); }

// ---------------------------------------------------------------- torus monoid

TorusMonoidElt::TorusMonoidElt(Rational a, Rational b, Rational n) : t1(std::move(a)), t2(std::move(b)), nu(std::move(n)) {
  if (sgn(t1) == 0 || sgn(t2) == 0 || sgn(nu) == 0) throw DomainError("torus entries must be nonzero");
}

Mat4 TorusMonoidElt::matrix() const { return mat_diag(t1, t2, nu / t2, nu / t1); }

std::array<Rational, 3> TorusMonoidElt::exps(long p) const {
  return {vp(t1, p).value(), vp(t2, p).value(), vp(nu, p).value()};
}

std::array<Rational, 4> TorusMonoidElt::root_valuations(long p) const {
  auto e = exps(p);
  return {e[0] - e[1], 2 * e[1] - e[2], e[0] + e[1] - e[2], 2 * e[0] - e[2]};
}

bool TorusMonoidElt::in_plus(long p) const {
  auto v = root_valuations(p);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool TorusMonoidElt::in_minus(long p) const {
  auto v = root_valuations(p);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) <= 0; });
}

bool TorusMonoidElt::in_plus_strict(long p) const {
  auto v = root_valuations(p);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; });
}

bool TorusMonoidElt::in_minus_strict(long p) const {
  auto v = root_valuations(p);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) < 0; });
}

std::string TorusMonoidElt::tag(long p) const {
  bool plus = in_plus(p), minus = in_minus(p);
  if (plus && minus) return "T+ T-";
  if (plus) return "T+";
  if (minus) return "T-";
  return "general";
}

TorusMonoidElt t_siegel(long p) { return TorusMonoidElt(1, 1, p); }
TorusMonoidElt t_klingen(long p) { return TorusMonoidElt(1, p, p * p); }
TorusMonoidElt t_center(long p) { return TorusMonoidElt(p, p, p * p); }

// ---------------------------------------------------------------- Situation

Weight kappa_G_star(long r1, long r2) { return Weight(r1, -(r2 + 2), r2 + 1); }

SituationWeights situation_weights(long r1, long r2, long t1, long t2, long xi1) {
  if (!(r1 >= r2 && r2 >= 0)) throw DomainError("not a Situation weight tuple: need r1 >= r2 >= 0");
  if (t1 < 0 || t2 < 0 || t1 + t2 != r1 - r2) throw DomainError("not a Situation weight tuple");
  SituationWeights s;
  s.r1 = r1;
  s.r2 = r2;
  s.t1 = t1;
  s.t2 = t2;
  s.xi1 = xi1;
  s.xi2 = 1 - r2 - xi1;
  s.nu_G = Weight(r1, r2, -(r1 + r2));
  s.nu_H = Weight(t1, t2, -r1);
  s.kappa_G = Weight(r2 + 2, -r1, -r2 - 1);
  s.kappa_H = Weight(1 - t1, 1 - t2, -r2 - 1);
  s.kappa_G_star = kappa_G_star(r1, r2);
  s.zeta_H1 = GL2Weight{Rational(-1 - t1), Rational(s.xi1)};
  s.zeta_H2 = GL2Weight{Rational(-1 - t2), Rational(s.xi2)};
  if (s.kappa_G_star != -weyl_act(w_MG_max(), s.kappa_G)) throw DomainError("internal: kappa_G* mismatch");
  return s;
}

// ---------------------------------------------------------------- slopes

SlopeKind parse_slope_kind(std::string_view s) {
  if (s == "Klingen" || s == "klingen" || s == "Kl") return SlopeKind::Klingen;
  if (s == "Siegel" || s == "siegel" || s == "Si") return SlopeKind::Siegel;
  if (s == "Borel" || s == "borel" || s == "B") return SlopeKind::Borel;
  throw InputError("unknown slope kind: " + std::string(s));
}

bool slope_check(SlopeKind kind, const Valuation& v_kl, const Valuation& v_si, const Rational& r1, const Rational& r2) {
  bool kl = v_kl < Valuation(1 + r1 - r2);
  bool si = v_si < Valuation(1 + r2);
  switch (kind) {
    case SlopeKind::Klingen: return kl;
    case SlopeKind::Siegel: return si;
    default: return kl && si;
  }
}

// ---------------------------------------------------------------- ss conditions

SsKind parse_ss_kind(std::string_view s) {
  if (s == "ss^M_w1" || s == "ssMw1" || s == "M_w1" || s == "upper") return SsKind::SsMw1;
  if (s == "ss_M,w1" || s == "ssM,w1" || s == "M,w1" || s == "lower") return SsKind::SsM_w1;
  throw InputError("unknown ss kind: " + std::string(s));
}

SsReport ss_condition(SsKind kind, const LambdaTable& lambda, const Weight& kappa_star, int degree_bound) {
  if (degree_bound < 1) throw DomainError("degree bound must be positive");
  std::vector<std::pair<std::string, Weight>> targets;
  if (kind == SsKind::SsMw1) {
    for (const WeylElt& w : {WeylElt::id(), WeylElt::w2(), WeylElt::w3()}) {
      targets.emplace_back(w.label(), star_act(w.inverse(), kappa_star));
    }
  } else {
    WeylElt w = WeylElt::w1().inverse() * w_MG_max();
    targets.emplace_back(w.label(), star_act(w, kappa_star));
  }
  SsReport rep;
  rep.degree_bound = degree_bound;
  rep.holds = true;
  for (auto& [label, target] : targets) {
    SsClause cl;
    cl.element = label;
    cl.target = target;
    for (long a = 0; a <= degree_bound && !cl.found; ++a) {
      for (long b = 0; a + b <= degree_bound && !cl.found; ++b) {
        for (long c = -degree_bound; c <= degree_bound && !cl.found; ++c) {
          if (a == 0 && b == 0) continue;  // central y alone only compares central characters
          std::array<Rational, 3> e;
          for (int k = 0; k < 3; ++k) e[k] = exps_siegel()[k] * a + exps_klingen()[k] * b + exps_center()[k] * c;
          if (lambda.at(a, b, c) < target.valuation_at(e)) {
            cl.found = true;
            cl.witness = {a, b, c};
          }
        }
      }
    }
    if (!cl.found) {
      rep.holds = false;
      rep.bound_hit_without_witness = true;
    }
    rep.clauses.push_back(cl);
  }
  return rep;
}

// ---------------------------------------------------------------- nearly weights

std::vector<std::pair<long, long>> sigma_set(long r1, long r2) {
  if (!(r1 >= r2 && r2 >= 0)) throw DomainError("need r1 >= r2 >= 0");
  std::vector<std::pair<long, long>> out;
  for (long t1 = 0; t1 <= r1 + r2; ++t1) {
    for (long t2 = 0; t1 + t2 <= r1 + r2; ++t2) {
      if ((t1 + t2 - r1 - r2) % 2 != 0) continue;
      if (t1 + t2 < r1 - r2) continue;
      if (std::abs(t1 - t2) > r1 - r2) continue;
      out.emplace_back(t1, t2);
    }
  }
  return out;
}

NearlyWeightSet nearly_weight_set(long r1, long r2) {
  NearlyWeightSet out;
  out.r1 = r1;
  out.r2 = r2;
  out.sigma = sigma_set(r1, r2);
  std::set<Weight> seen;
  for (auto [t1, t2] : out.sigma) {
    for (long d1 = 0; d1 <= 2; ++d1) {
      long d2 = 2 - d1;
      for (long i = 0; i <= t1; ++i) {
        for (long j = 0; j <= t2; ++j) {
          // i + j <= (t1+t2)/2 + (r1-r2)/2, doubled to stay integral
          if (2 * (i + j) > t1 + t2 + r1 - r2) continue;
          Rational xi = make_rational(r1 + r2 + t1 + t2 - 2 * (i + j - 1), 2);
          Weight w(2 * i - t1 - d1, 2 * j - t2 - d2, xi);
          out.entries.push_back({w, t1, t2, i, j, d1, d2});
          seen.insert(w);
        }
      }
    }
  }
  out.distinct.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace gsp
