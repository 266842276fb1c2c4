#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gsp/exactnum.hpp"
#include "gsp/poly.hpp"

namespace gsp {

// Character (r1, r2; c) of the diagonal torus diag(z1, z2, s/z2, s/z1), t -> z1^r1 z2^r2 s^c.
// Entries are rationals with 2x an integer.
struct Weight {
  Rational r1, r2, c;

  Weight() : r1(0), r2(0), c(0) {}
  Weight(Rational a, Rational b, Rational cc);  // validates half-integrality
  static Weight parse(std::string_view text);  // "3,1,0", "(3,1;0)", "(2,1;-3/2)"
  std::string str() const;                     // "(3,-1;1)"
  bool g_dominant() const { return r1 >= r2 && r2 >= 0; }
  bool integral() const { return is_integer(r1) && is_integer(r2) && is_integer(c); }
  // Valuation of kappa(t) for t = diag with v(z1) = e1, v(z2) = e2, v(s) = e3.
  Rational valuation_at(const std::array<Rational, 3>& exps) const { return r1 * exps[0] + r2 * exps[1] + c * exps[2]; }

  friend Weight operator+(const Weight& a, const Weight& b) { return Weight(a.r1 + b.r1, a.r2 + b.r2, a.c + b.c); }
  friend Weight operator-(const Weight& a, const Weight& b) { return Weight(a.r1 - b.r1, a.r2 - b.r2, a.c - b.c); }
  friend Weight operator-(const Weight& a) { return Weight(-a.r1, -a.r2, -a.c); }
  friend bool operator==(const Weight& a, const Weight& b) { return a.r1 == b.r1 && a.r2 == b.r2 && a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b);
};

std::string compact(const Rational& q);  // "3", "-3/2"

// GL2 weight (r; c): character diag(x, d/x) -> x^r d^c.
struct GL2Weight {
  Rational r, c;
  std::string str() const { return "(" + compact(r) + ";" + compact(c) + ")"; }
  friend bool operator==(const GL2Weight& a, const GL2Weight& b) { return a.r == b.r && a.c == b.c; }
};

// Element of the Weyl group of GSp4 (order 8). Index order:
// id, s1 (= w1), s2, s1s2 (= w2), s2s1, s1s2s1 (= w3), s2s1s2, s1s2s1s2 (= w_max).
class WeylElt {
 public:
  WeylElt() : idx_(0) {}
  static WeylElt from_index(int i);
  static WeylElt parse(std::string_view label);  // accepts id/w0/e, s1/w1, s2, w2, w3, s2s1, s2s1s2, wmax, ...
  static const std::array<WeylElt, 8>& all();
  static WeylElt id() { return from_index(0); }
  static WeylElt s1() { return from_index(1); }
  static WeylElt s2() { return from_index(2); }
  static WeylElt w1() { return from_index(1); }
  static WeylElt w2() { return from_index(3); }
  static WeylElt w3() { return from_index(5); }
  static WeylElt wmax() { return from_index(7); }

  int index() const { return idx_; }
  std::string label() const;
  int length() const;
  const Mat4& matrix() const;  // signed permutation representative in GSp4
  WeylElt inverse() const;
  friend WeylElt operator*(const WeylElt& a, const WeylElt& b);
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.idx_ == b.idx_; }

 private:
  int idx_;
};

// Closed-form action (w.kappa)(t) = kappa(w^-1 t w).
Weight weyl_act(const WeylElt& w, const Weight& k);
// Same action computed by conjugating a diagonal test matrix with the representative.
Weight weyl_act_matrix(const WeylElt& w, const Weight& k);
const Weight& rho_G();  // (2,1;-3/2)
Weight star_act(const WeylElt& w, const Weight& k);
// Longest element of the Weyl group of the Siegel Levi M_G.
inline WeylElt w_MG_max() { return WeylElt::s2(); }

// Torus element diag(t1, t2, nu/t2, nu/t1).
struct TorusMonoidElt {
  Rational t1, t2, nu;

  TorusMonoidElt(Rational a, Rational b, Rational n);
  Mat4 matrix() const;
  // Valuations of the positive roots z1/z2, z2^2/s, z1 z2/s, z1^2/s.
  std::array<Rational, 4> root_valuations(long p) const;
  bool in_plus(long p) const;         // T^{G,+}: every positive root has v >= 0
  bool in_minus(long p) const;        // T^{G,-}: every positive root has v <= 0
  bool in_plus_strict(long p) const;  // v > 0 on every positive root
  bool in_minus_strict(long p) const;
  std::string tag(long p) const;  // "T+", "T-", "T+ T-" (central) or "general"
  std::array<Rational, 3> exps(long p) const;  // (v(z1), v(z2), v(s))
};

TorusMonoidElt t_siegel(long p);   // diag(1,1,p,p)
TorusMonoidElt t_klingen(long p);  // diag(1,p,p,p^2)
TorusMonoidElt t_center(long p);   // pI
// Valuation exponents (v(z1), v(z2), v(s)) of the generators above.
inline std::array<Rational, 3> exps_siegel() { return {0, 0, 1}; }
inline std::array<Rational, 3> exps_klingen() { return {0, 1, 2}; }
inline std::array<Rational, 3> exps_center() { return {1, 1, 2}; }

struct SituationWeights {
  long r1, r2, t1, t2, xi1, xi2;
  Weight nu_G, nu_H, kappa_G, kappa_H, kappa_G_star;
  GL2Weight zeta_H1, zeta_H2;
};

SituationWeights situation_weights(long r1, long r2, long t1, long t2, long xi1);
Weight kappa_G_star(long r1, long r2);  // (r1, -(r2+2); r2+1)

enum class SlopeKind { Klingen, Siegel, Borel };
SlopeKind parse_slope_kind(std::string_view s);
// Small-slope test on valuations of normalised U_p eigenvalues.
bool slope_check(SlopeKind kind, const Valuation& v_kl, const Valuation& v_si, const Rational& r1, const Rational& r2);

// Valuations of a monoid character lambda on t_S, t_Kl and the center.
struct LambdaTable {
  Rational v_siegel, v_klingen, v_center;
  Rational at(long a, long b, long c) const { return v_siegel * a + v_klingen * b + v_center * c; }
};

enum class SsKind { SsMw1, SsM_w1 };  // ss^M_{w1}, ss_{M,w1}
SsKind parse_ss_kind(std::string_view s);

struct SsClause {
  std::string element;  // label of w whose shifted weight is compared
  Weight target;        // the weight compared against lambda
  bool found = false;
  std::array<long, 3> witness{0, 0, 0};  // exponents (a, b, c) of t_S^a t_Kl^b z^c
};

struct SsReport {
  bool holds = false;
  bool bound_hit_without_witness = false;
  int degree_bound = 2;
  std::vector<SsClause> clauses;
};

SsReport ss_condition(SsKind kind, const LambdaTable& lambda, const Weight& kappa_star, int degree_bound = 2);

struct NearlyWeightEntry {
  Weight weight;
  long t1, t2, i, j, delta1, delta2;
};

struct NearlyWeightSet {
  long r1, r2;
  std::vector<std::pair<long, long>> sigma;
  std::vector<NearlyWeightEntry> entries;  // with multiplicity, one per (t1,t2,i,j,delta1)
  std::vector<Weight> distinct;            // sorted
};

std::vector<std::pair<long, long>> sigma_set(long r1, long r2);
NearlyWeightSet nearly_weight_set(long r1, long r2);

}  // namespace gsp
