#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gsp/exactnum.hpp"

namespace gsp {

// Sparse multivariate Laurent polynomial over Q in a fixed number of variables.
class Poly {
 public:
  using Exps = std::vector<int>;

  explicit Poly(size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(size_t nvars, const Rational& c);
  static Poly var(size_t nvars, size_t i, int e = 1);
  static Poly monomial(const Exps& e, const Rational& c);

  size_t nvars() const { return nvars_; }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  int degree_in(size_t i) const;  // largest exponent of variable i
  int total_degree() const;
  bool is_polynomial() const;  // no negative exponents

  Poly pow(unsigned e) const;
  Poly derivative(size_t i) const;
  Poly scaled(const Rational& c) const;
  // Replace x_i by factor_i * x_i for each variable.
  Poly rescale(const std::vector<Rational>& factors) const;
  Rational eval(const std::vector<Rational>& x) const;
  // Substitute polynomials (all in a common ring) for each variable; exponents must be >= 0
  // unless the substituted value is a monomial.
  Poly compose(const std::vector<Poly>& values) const;
  std::string str(const std::vector<std::string>& names) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  void add_term(const Exps& e, const Rational& c);
  size_t nvars_;
  std::map<Exps, Rational> terms_;  // nonzero coefficients only
};

using Mat4 = std::array<std::array<Rational, 4>, 4>;
using PolyMat4 = std::array<std::array<Poly, 4>, 4>;

Mat4 mat_identity();
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_transpose(const Mat4& a);
Mat4 mat_inverse(const Mat4& a);  // throws DomainError when singular
Mat4 mat_diag(const Rational& d1, const Rational& d2, const Rational& d3, const Rational& d4);
Mat4 mat_from_rows(const std::array<std::array<long, 4>, 4>& rows);
Rational mat_det(const Mat4& a);
bool mat_is_diagonal(const Mat4& a);
std::string mat_str(const Mat4& a);

PolyMat4 polymat_identity(size_t nvars);
PolyMat4 polymat_mul(const PolyMat4& a, const PolyMat4& b);
PolyMat4 polymat_from(const Mat4& a, size_t nvars);
bool polymat_equal(const PolyMat4& a, const PolyMat4& b);

// The symplectic form with antidiagonal (1, 1, -1, -1).
const Mat4& J_matrix();
// Similitude factor s with g^T J g = s J, or DomainError when g is not in GSp4.
Rational similitude(const Mat4& g);
bool in_gsp4(const Mat4& g);

}  // namespace gsp
