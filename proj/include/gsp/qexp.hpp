#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp/exactnum.hpp"
#include "gsp/weights.hpp"

namespace gsp {

// Truncated q-expansion a_0 + a_1 q + ... + a_N q^N.
struct QExpansion {
  long p = 3;
  long N = 0;
  std::vector<Cyclotomic> a;  // size N + 1
  std::string weight;         // "(r;c)" or a character label such as "(x^-3;x^1)"
  bool zero_component = false;

  QExpansion() = default;
  QExpansion(long prime, long trunc);
  static QExpansion from_rationals(long prime, const std::vector<Rational>& coeffs);
  bool is_integral() const;  // every coefficient lies in Z[zeta]
  friend bool operator==(const QExpansion& x, const QExpansion& y) { return x.p == y.p && x.N == y.N && x.a == y.a; }
  friend QExpansion operator+(const QExpansion& x, const QExpansion& y);
};

// One summand c * [p does not divide n] * chi(n) * n^k * u^n * binom(n, b).
struct LocAnTerm {
  Cyclotomic coeff{Rational(1)};
  bool units_only = false;
  std::optional<DirichletChar> chi;
  long power = 0;
  Rational base{1};
  long binom = 0;
};

// Locally analytic function on Z_p, evaluated on the integers 0..N; finite sum of terms.
class LocAnFunction {
 public:
  LocAnFunction() = default;
  explicit LocAnFunction(std::vector<LocAnTerm> terms, long radius = 0) : terms_(std::move(terms)), radius_(radius) {}

  static LocAnFunction one();
  static LocAnFunction identity();
  static LocAnFunction unit_indicator();
  static LocAnFunction power(long k, bool units_only = false);
  static LocAnFunction character(const DirichletChar& chi);
  static LocAnFunction loc_alg(const LocAlgChar& c);  // x^k chi(x) extended by zero
  static LocAnFunction binomial(long k);
  static LocAnFunction exponential(const Rational& u, long radius);  // n -> u^n

  Cyclotomic eval(long n, long p) const;
  const std::vector<LocAnTerm>& terms() const { return terms_; }
  long radius() const { return radius_; }  // analyticity radius exponent m (0: unspecified)

  friend LocAnFunction operator+(const LocAnFunction& f, const LocAnFunction& g);
  friend LocAnFunction operator*(const LocAnFunction& f, const LocAnFunction& g);

 private:
  std::vector<LocAnTerm> terms_;
  long radius_ = 0;
};

QExpansion star_action(const LocAnFunction& f, const QExpansion& F);
QExpansion deplete(const QExpansion& F);
QExpansion theta(const QExpansion& F);
// (rho 1_{Z_p^x}) * F where rho^2 = n^exponent on units (checked on the support).
QExpansion half_power_nabla(const QExpansion& F, const LocAnFunction& rho, long exponent);

// Tame character: trivial or the Kronecker symbol (D/.).
struct TameChar {
  long D = 1;
  static TameChar parse(std::string_view s);  // "trivial", "1", "kron:-4"
  Integer value(const Integer& n) const;
  int parity() const;  // value at -1
  std::string label() const;
};

struct EisensteinSpec {
  long p = 3;
  LocAlgChar kappa1{0, DirichletChar::trivial(3)};
  LocAlgChar kappa2{0, DirichletChar::trivial(3)};
  LocAlgChar xi{0, DirichletChar::trivial(3)};
  TameChar tame;
  std::string tame_tag = "unramified";
  Rational unit{1};

  bool parity_ok() const;  // kappa1(-1) kappa2(-1) = -chi(-1)
  std::string weight_label() const;
};

// Raw depleted divisor sum without the parity constraint or the unit.
Cyclotomic eis_divisor_sum(const EisensteinSpec& spec, long n);
// Family coefficient: unit * divisor sum, zero on the wrong parity component.
Cyclotomic eis_coeff(const EisensteinSpec& spec, long n);
QExpansion eis_xi(const EisensteinSpec& spec, long N);
// Independent p-depleted sum_{d | n} d^a (n/d)^b by trial division.
Integer classical_depleted_eisenstein(long p, long a, long b, long n);

}  // namespace gsp
