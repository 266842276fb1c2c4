#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/errors.hpp"

namespace gsp {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);  // "3", "-7/2", "0.5" rejected
std::string to_string(const Rational& q);         // always "num/den"
std::string to_string(const Integer& z);
Rational rpow(const Rational& base, long e);      // e < 0 requires base != 0
bool is_integer(const Rational& q);
bool is_half_integer(const Rational& q);          // 2q is an integer
long to_long_checked(const Rational& q);          // q must be an integer fitting a long
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

bool is_prime(long n);
void require_odd_prime(long p);
long ipow(long base, unsigned e);
long mod(long a, long m);                          // representative in [0, m)
long euler_phi(long n);

// p-adic valuation of a rational; the value of zero is +infinity.
class Valuation {
 public:
  Valuation() : infinite_(true) {}
  explicit Valuation(Rational v) : infinite_(false), v_(std::move(v)) {}
  static Valuation infinity() { return Valuation(); }
  bool is_infinite() const { return infinite_; }
  const Rational& value() const;  // throws DomainError on +infinity
  std::string str() const;        // "inf" or "num/den"

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend Valuation vmin(const Valuation& a, const Valuation& b);

 private:
  bool infinite_;
  Rational v_;
};

long vp(const Integer& z, long p);  // z != 0
Valuation vp(const Rational& x, long p);

// Cyclotomic polynomial Phi_n with integer coefficients, low degree first.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
// Elements of different fields combine in Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic();  // zero of Q
  Cyclotomic(const Rational& q, unsigned n = 1);  // NOLINT(google-explicit-constructor)
  static Cyclotomic zeta_power(unsigned n, long k);
  static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> coeffs);  // any length, reduced

  unsigned order() const { return n_; }
  unsigned degree() const { return static_cast<unsigned>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Cyclotomic lift(unsigned m) const;  // n must divide m

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws DomainError unless rational

  Cyclotomic conj() const;
  Cyclotomic inverse() const;  // throws DomainError on zero
  Cyclotomic pow(long e) const;
  std::complex<double> to_complex() const;
  std::string str() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

 private:
  unsigned n_;
  std::vector<Rational> c_;  // size phi(n_)
};

// a + b*sqrt(p) with a, b rational.
class QuadSurd {
 public:
  QuadSurd() : p_(0) {}
  QuadSurd(Rational a, long p) : p_(p), a_(std::move(a)), b_(0) {}
  QuadSurd(Rational a, Rational b, long p);
  static QuadSurd sqrt_p(long p) { return QuadSurd(0, 1, p); }

  long prime() const { return p_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  QuadSurd inverse() const;
  QuadSurd pow(long e) const;
  Valuation valuation() const;  // min(v(a), v(b) + 1/2)
  double to_double() const;
  std::string str() const;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.inverse(); }
  friend bool operator==(const QuadSurd& x, const QuadSurd& y);
  friend bool operator!=(const QuadSurd& x, const QuadSurd& y) { return !(x == y); }

 private:
  static long common_prime(const QuadSurd& x, const QuadSurd& y);
  long p_;  // 0 while b == 0 and no field fixed
  Rational a_, b_;
};

// Dirichlet character modulo p^c (p odd) fixed by chi(g) = exp(2 pi i k / phi(p^c))
// for the canonical primitive root g mod p^c.
class DirichletChar {
 public:
  DirichletChar(long p, int c, long k);
  static DirichletChar trivial(long p) { return DirichletChar(p, 0, 0); }
  static DirichletChar quadratic(long p);
  // "trivial", "1", "quad", "quad:1", "c:k" (conductor exponent c, generator index k).
  static DirichletChar parse(long p, std::string_view label);

  long p() const { return p_; }
  int c() const { return c_; }
  long k() const { return k_; }
  long modulus() const { return modulus_; }
  long phi() const { return phi_; }
  long generator() const { return g_; }
  unsigned field_order() const;  // p^c (p - 1), or 1 when c == 0
  bool is_trivial() const { return k_ == 0; }
  bool is_primitive() const;
  long order() const;
  int parity() const;  // chi(-1)
  std::string label() const;

  std::optional<long> exponent(const Integer& a) const;  // chi(a) = zeta_phi^e; none when p | a
  Cyclotomic value(const Integer& a) const;               // zero when p | a
  Cyclotomic value(const Rational& x) const;              // x a p-adic unit
  DirichletChar inverse() const;
  DirichletChar raise(int c) const;  // same character viewed modulo p^c, c >= this->c()
  friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b);
  friend bool operator==(const DirichletChar& a, const DirichletChar& b);

 private:
  long p_;
  int c_;
  long k_;
  long modulus_;
  long phi_;
  long g_;
};

long primitive_root(long p, int c);
long discrete_log(long a, long g, long m, long phi);  // g^e = a mod m

// Locally algebraic character x -> x^power * chi(x) of Z_p^x.
struct LocAlgChar {
  long power = 0;
  DirichletChar chi;

  LocAlgChar(long pw, DirichletChar c) : power(pw), chi(std::move(c)) {}
  static LocAlgChar algebraic(long p, long pw) { return LocAlgChar(pw, DirichletChar::trivial(p)); }
  Cyclotomic value(const Rational& x) const;  // x a p-adic unit
  Cyclotomic value(const Integer& x) const;   // zero when p | x
  int parity() const;                         // value at -1
  std::string str() const;                    // "x^k", "x^k*chi[1:1]"
  friend LocAlgChar operator*(const LocAlgChar& a, const LocAlgChar& b) { return LocAlgChar(a.power + b.power, a.chi * b.chi); }
  LocAlgChar inverse() const { return LocAlgChar(-power, chi.inverse()); }
  friend bool operator==(const LocAlgChar& a, const LocAlgChar& b) { return a.power == b.power && a.chi == b.chi; }
};

Cyclotomic gauss_sum(const DirichletChar& chi);          // chi primitive
Cyclotomic gauss_sum_inverse(const DirichletChar& chi);  // chi(-1) G(chi^-1) / p^c
Cyclotomic additive_char_sum(long p, long h);            // sum over units mod p^h of zeta_{p^h}^j
long mobius(long n);

}  // namespace gsp
